//! Lifting, splitting off and consolidating.

use strong_immersion::generators::{gen_complete, gen_pk};
use strong_immersion::iso::isomorphic;
use strong_immersion::vertex_set;

fn main() -> strong_immersion::Result<()> {
    // Lifting one pair of edges at the middle of P_2 yields a triangle.
    let p2 = gen_pk(2)?;
    let lifted = p2.lift("e0_0", "e1_0", Some("v1"))?;
    println!("after lift: {:?}", lifted.edges());
    println!("triangle: {:?}", isomorphic(&lifted, &gen_complete(3)));

    // Splitting off the middle of P_2 pairs its four edges and deletes it.
    let pairing = [("e0_0".to_string(), "e1_0".to_string()), ("e0_1".to_string(), "e1_1".to_string())];
    let split = p2.split_off_vertex("v1", &pairing)?;
    println!("after split: {:?}", split.edges());

    let k4 = gen_complete(4);
    let merged = k4.consolidate(&vertex_set(["v0", "v1"]))?;
    println!("consolidated K4: {:?}", merged.degrees());
    Ok(())
}
