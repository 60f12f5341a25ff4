use std::collections::BTreeMap;

use crate::connectivity::Network;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::indexed::Indexed;
use crate::path_decomp::auxiliary::{build_auxiliary_graph, validate_star_model};

use super::{ImmersionCertificate, StarMinorModel};

/// Turns a star minor of `G(m, W)` into a strong immersion of `f` in `g`.
///
/// The vertices of `f` go to the first leaves of the model in identifier
/// order. A flow then routes `deg_f(u)` units from each image `θ(u)` to the
/// centre, never entering an image from outside; with `m ≥ 2|E(f)|` the
/// model guarantees the flow is large enough. The resulting paths are
/// handed out to half-edges in order and each edge of `f` maps to the union
/// of its two paths.
pub fn star_minor_to_immersion(
    g: &Multigraph,
    w: &VertexSet,
    m: usize,
    model: &StarMinorModel,
    f: &Multigraph,
) -> Result<ImmersionCertificate> {
    if m < 2 * f.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "m = {m} is below twice the {} pattern edges",
            f.edge_count()
        )));
    }
    let aux = build_auxiliary_graph(g, w, m.max(1))?;
    validate_star_model(&aux, model)?;
    if model.leaves.len() < f.vertex_count() {
        return Err(Error::InvalidModel(format!(
            "{} leaves cannot host {} pattern vertices",
            model.leaves.len(),
            f.vertex_count()
        )));
    }

    let vertex_map: BTreeMap<String, String> = f
        .vertices()
        .iter()
        .cloned()
        .zip(model.leaves.iter().cloned())
        .collect();
    if f.edge_count() == 0 {
        return Ok(ImmersionCertificate {
            vertex_map,
            edge_map: BTreeMap::new(),
            strong: true,
        });
    }

    let ix = Indexed::new(g);
    let center = ix.index[&model.center];
    let mut blocked = vec![false; ix.n()];
    for image in vertex_map.values() {
        blocked[ix.index[image]] = true;
    }
    let mut net = Network::new(&ix, Some(&blocked));
    let needed = 2 * f.edge_count();
    for (u, image) in &vertex_map {
        let d = f.degree(u)?;
        if d > 0 {
            net.supply(ix.index[image], d as i64);
        }
    }
    net.drain(center, needed as i64);
    let found = net.max_flow(None) as usize;
    if found < needed {
        return Err(Error::PathShortfall { found, needed });
    }

    let mut pool: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for (verts, edges) in net.paths(&ix, &|v| blocked[v], &|v| v == center) {
        pool.entry(verts[0]).or_default().push(edges);
    }
    for paths in pool.values_mut() {
        paths.reverse();
    }
    let mut take = |u: &str| -> Vec<String> {
        let start = ix.index[&vertex_map[u]];
        let path = pool
            .get_mut(&start)
            .and_then(Vec::pop)
            .expect("one path per half-edge");
        path.into_iter().map(|e| ix.edge_ids[e].clone()).collect()
    };
    let mut edge_map = BTreeMap::new();
    for (e, [a, b]) in f.edges() {
        let mut image = take(a);
        image.extend(take(b));
        edge_map.insert(e.clone(), image);
    }
    Ok(ImmersionCertificate {
        vertex_map,
        edge_map,
        strong: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_complete;
    use crate::graph::vertex_set;
    use crate::immersion::verify_immersion;
    use crate::path_decomp::auxiliary::has_k1k_minor;

    /// Three hubs, each joined to a centre by six parallel edges.
    fn hub_host() -> Multigraph {
        let mut g = Multigraph::with_vertices(["c", "h1", "h2", "h3"]);
        for h in ["h1", "h2", "h3"] {
            for i in 0..6 {
                g.add_edge(format!("{h}_{i}"), h, "c").unwrap();
            }
        }
        g
    }

    #[test]
    fn triangle_from_hub_star() {
        let g = hub_host();
        let w = g.vertices().clone();
        let aux = build_auxiliary_graph(&g, &w, 6).unwrap();
        let model = has_k1k_minor(&aux, 3).unwrap().unwrap();
        assert_eq!(model.center, "c");
        let f = gen_complete(3);
        let cert = star_minor_to_immersion(&g, &w, 6, &model, &f).unwrap();
        assert!(verify_immersion(&g, &f, &cert, true).unwrap().is_empty());
    }

    #[test]
    fn single_edge_through_a_path_host() {
        // l1 = a = c = b = l2 with doubled edges and W = {l1, c, l2}; each
        // leaf sends one path to the centre.
        let mut g = Multigraph::with_vertices(["a", "b", "c", "l1", "l2"]);
        for (i, (x, y)) in [("l1", "a"), ("a", "c"), ("c", "b"), ("b", "l2")].into_iter().enumerate() {
            g.add_edge(format!("{i}x"), x, y).unwrap();
            g.add_edge(format!("{i}y"), x, y).unwrap();
        }
        let w = vertex_set(["c", "l1", "l2"]);
        let model = StarMinorModel {
            center: "c".into(),
            leaves: vertex_set(["l1", "l2"]),
            tree: vec![("c".into(), "l1".into()), ("c".into(), "l2".into())],
        };
        let f = gen_complete(2);
        let cert = star_minor_to_immersion(&g, &w, 2, &model, &f).unwrap();
        assert_eq!(cert.edge_map["e0_1"].len(), 4);
        assert!(verify_immersion(&g, &f, &cert, true).unwrap().is_empty());
    }

    #[test]
    fn edgeless_pattern_and_bad_inputs() {
        let g = hub_host();
        let w = g.vertices().clone();
        let model = has_k1k_minor(&build_auxiliary_graph(&g, &w, 6).unwrap(), 3)
            .unwrap()
            .unwrap();
        let cert = star_minor_to_immersion(&g, &w, 6, &model, &gen_complete(1)).unwrap();
        assert!(cert.edge_map.is_empty());
        assert!(star_minor_to_immersion(&g, &w, 5, &model, &gen_complete(3)).is_err());
        assert!(star_minor_to_immersion(&g, &w, 6, &model, &gen_complete(4)).is_err());
        let mut broken = model.clone();
        broken.tree.pop();
        assert!(matches!(
            star_minor_to_immersion(&g, &w, 6, &broken, &gen_complete(3)),
            Err(Error::InvalidModel(_))
        ));
    }
}
