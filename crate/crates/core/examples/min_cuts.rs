//! Edge-disjoint paths and the inclusion-minimal minimum cut.

use strong_immersion::connectivity::{edge_disjoint_paths, is_k_edge_connected_set, min_cut_min_source_side};
use strong_immersion::{vertex_set, Multigraph};

fn main() -> strong_immersion::Result<()> {
    // s = a = b = t, with a second minimum cut around {s, a}.
    let mut g = Multigraph::with_vertices(["s", "a", "b", "t"]);
    for (id, u, v) in [("1", "s", "a"), ("2", "s", "a"), ("3", "a", "b"), ("4", "a", "b"), ("5", "b", "t"), ("6", "b", "t")] {
        g.add_edge(id, u, v)?;
    }
    let (s, t) = (vertex_set(["s"]), vertex_set(["t"]));
    for path in edge_disjoint_paths(&g, &s, &t)? {
        println!("path {}", path.join(" "));
    }
    let cut = min_cut_min_source_side(&g, &s, &t)?;
    println!("cut {} via {:?}, source side {:?}", cut.value, cut.cut_edges, cut.source_side);
    println!("2-edge-connected: {:?}", is_k_edge_connected_set(&g, g.vertices(), 2)?);
    println!("3-edge-connected: {:?}", is_k_edge_connected_set(&g, g.vertices(), 3)?);
    Ok(())
}
