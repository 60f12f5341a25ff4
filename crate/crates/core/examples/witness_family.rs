//! Thick paths are highly edge-connected yet contain no strong K3; adding
//! chords still keeps strong K4 out.

use strong_immersion::connectivity::is_k_edge_connected_set;
use strong_immersion::generators::{gen_complete, gen_pk, gen_pk_chorded};
use strong_immersion::immersion::{find_immersion, ImmersionSearch};

fn main() -> strong_immersion::Result<()> {
    let k3 = gen_complete(3);
    for k in 2..=5 {
        let g = gen_pk(k)?;
        let connected = is_k_edge_connected_set(&g, g.vertices(), k)?.is_connected();
        let strong = find_immersion(&g, &k3, true, None) != ImmersionSearch::Absent;
        let weak = find_immersion(&g, &k3, false, None) != ImmersionSearch::Absent;
        println!("P_{k}: {k}-edge-connected={connected} strong K3={strong} weak K3={weak}");
    }
    let k4 = gen_complete(4);
    for k in 3..=4 {
        let g = gen_pk_chorded(k)?;
        let found = find_immersion(&g, &k4, true, None) != ImmersionSearch::Absent;
        println!("chorded P_{k}: strong K4={found}");
    }
    Ok(())
}
