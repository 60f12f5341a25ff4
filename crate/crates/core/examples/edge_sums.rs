//! Edge sums and how decompositions of the summands combine.

use strong_immersion::generators::gen_complete;
use strong_immersion::tree_cut::{
    adhesion, compose_decompositions, edge_sum, is_grounded, torso_at, EdgeSum, TreeCutDecomposition,
};

fn main() -> strong_immersion::Result<()> {
    let a = gen_complete(4).prefixed("a", "a");
    let b = gen_complete(4).prefixed("b", "b");
    let sum = EdgeSum {
        v1: "av0".into(),
        v2: "bv0".into(),
        pairing: vec![
            ("ae0_1".into(), "be0_1".into()),
            ("ae0_2".into(), "be0_2".into()),
            ("ae0_3".into(), "be0_3".into()),
        ],
    };
    println!("grounded: {}", is_grounded(&a, &sum.v1, &b, &sum.v2)?);
    let g = edge_sum(&a, &sum.v1, &b, &sum.v2, &sum.pairing)?;
    println!("sum: {} vertices, {} edges", g.vertex_count(), g.edge_count());

    let d = compose_decompositions(
        &a,
        &TreeCutDecomposition::single(&a, "left"),
        &b,
        &TreeCutDecomposition::single(&b, "right"),
        &sum,
    )?;
    println!("adhesion {}", adhesion(&g, &d)?);
    let torso = torso_at(&g, &d, "left")?;
    println!("torso at left: core {:?}, peripheral {:?}", torso.core, torso.peripheral);
    Ok(())
}
