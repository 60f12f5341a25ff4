//! A star minor in the auxiliary graph turned into a strong immersion.

use strong_immersion::immersion::{star_minor_to_immersion, verify_immersion};
use strong_immersion::generators::gen_complete;
use strong_immersion::path_decomp::{build_auxiliary_graph, has_k1k_minor};
use strong_immersion::Multigraph;

fn main() -> strong_immersion::Result<()> {
    // A hub joined to five spokes by six parallel edges each.
    let mut g = Multigraph::with_vertices(["hub", "s1", "s2", "s3", "s4", "s5"]);
    for s in ["s1", "s2", "s3", "s4", "s5"] {
        for c in 0..6 {
            g.add_edge(format!("{s}_{c}"), "hub", s)?;
        }
    }
    let f = gen_complete(3);
    let m = 2 * f.edge_count();
    let aux = build_auxiliary_graph(&g, g.vertices(), m)?;
    println!("G({m}, V) has {} edges", aux.edges().len());
    let model = has_k1k_minor(&aux, f.vertex_count())?.expect("the hub is a star centre");
    println!("star centre {} with leaves {:?}", model.center, model.leaves);
    let cert = star_minor_to_immersion(&g, g.vertices(), m, &model, &f)?;
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    println!("violations: {:?}", verify_immersion(&g, &f, &cert, true)?);
    Ok(())
}
