//! Splitting along small cuts until every torso is alpha-basic.

use strong_immersion::generators::gen_complete;
use strong_immersion::path_decomp::Outcome;
use strong_immersion::tree_cut::{adhesion, structure_decompose, verify_structure};
use strong_immersion::Multigraph;

fn main() -> strong_immersion::Result<()> {
    // Three K5s in a row, joined by single edges.
    let mut g = Multigraph::new();
    for p in ["a", "b", "c"] {
        let k5 = gen_complete(5).prefixed(p, p);
        for v in k5.vertices() {
            g.add_vertex(v.clone());
        }
        for (id, [u, v]) in k5.edges() {
            g.add_edge(id.clone(), u.clone(), v.clone())?;
        }
    }
    g.add_edge("ab", "av0", "bv0")?;
    g.add_edge("bc", "bv1", "cv0")?;

    match structure_decompose(&g, 5)? {
        Outcome::Certified(s) => {
            println!("{} nodes, adhesion {}", s.decomposition.tree.nodes.len(), adhesion(&g, &s.decomposition)?);
            for split in &s.splits {
                println!("split {} | {} across {:?}", split.x, split.y, split.cut.cut_edges);
            }
            println!("violations {:?}", verify_structure(&g, &s.decomposition, &s.certificates, 5)?);
        }
        Outcome::Failed(w) => println!("failed: {}", serde_json::to_string(&w).unwrap()),
    }
    match structure_decompose(&gen_complete(7), 3)? {
        Outcome::Certified(_) => println!("K7 unexpectedly 3-basic"),
        Outcome::Failed(w) => println!("K7 at alpha 3: {}", serde_json::to_string(&w).unwrap()),
    }
    Ok(())
}
