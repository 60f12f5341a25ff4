mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use strong_immersion::connectivity::{edge_disjoint_paths, is_k_edge_connected_set, max_flow_min_cut};
use strong_immersion::generators::{gen_complete, gen_pk, gen_random_multigraph};
use strong_immersion::immersion::{
    find_immersion, star_minor_to_immersion, verify_immersion, ImmersionCertificate, ImmersionSearch,
};
use strong_immersion::iso::{canonical_form, isomorphic};
use strong_immersion::path_decomp::{build_auxiliary_graph, has_k1k_minor};
use strong_immersion::tree_cut::{adhesion, structure_decompose, verify_structure};
use strong_immersion::{Multigraph, VertexSet};

use common::*;

fn multigraph(max_n: usize, max_e: usize, max_mult: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, 0..=max_e, any::<u64>()).prop_map(move |(n, e, seed)| {
        let e = e.min(max_mult * n * (n + 1) / 2);
        gen_random_multigraph(n, e, max_mult, seed).unwrap()
    })
}

fn subset(g: &Multigraph, mask: u32) -> VertexSet {
    g.vertices().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.clone()).collect()
}

#[test]
fn pk_shape_and_connectivity() {
    for k in 1..=6 {
        let g = gen_pk(k).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (k + 1, k * k));
        for i in 0..=k {
            let expected = if i == 0 || i == k { k } else { 2 * k };
            assert_eq!(g.degree(&format!("v{i}")).unwrap(), expected);
        }
        assert!(is_k_edge_connected_set(&g, g.vertices(), k).unwrap().is_connected());
        assert!(!is_k_edge_connected_set(&g, g.vertices(), k + 1).unwrap().is_connected());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flow_value_matches_paths_and_enumeration(g in multigraph(7, 14, 3), mask in any::<u32>(), shift in 1u32..7) {
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let s = subset(&g, mask % (1 << n));
        let t: VertexSet = subset(&g, mask.rotate_left(shift) % (1 << n)).difference(&s).cloned().collect();
        prop_assume!(!s.is_empty() && !t.is_empty());
        let cut = max_flow_min_cut(&g, &s, &t).unwrap();
        let paths = edge_disjoint_paths(&g, &s, &t).unwrap();
        let (value, _) = enumerate_min_cuts(&g, &s, &t);
        prop_assert_eq!(paths.len(), value);
        prop_assert_eq!(cut.value, value);
        prop_assert_eq!(cut.cut_edges.len(), boundary_size(&g, &cut.source_side));
    }

    #[test]
    fn consolidation_keeps_the_boundary(g in multigraph(7, 14, 3), mask in any::<u32>()) {
        let x = subset(&g, mask % (1 << g.vertex_count()));
        prop_assume!(!x.is_empty());
        let h = g.consolidate(&x).unwrap();
        let name = g.consolidated_name(&x);
        let inside = g.edges().values().filter(|[a, b]| x.contains(a) && x.contains(b)).count();
        prop_assert_eq!(h.edge_count(), g.edge_count() - inside);
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - x.len() + 1);
        prop_assert_eq!(h.degree(&name).unwrap(), boundary_size(&g, &x));
    }

    #[test]
    fn canonical_form_ignores_labels(g in multigraph(6, 10, 2), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut names: Vec<String> = (0..g.vertex_count()).map(|i| format!("u{i}")).collect();
        names.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let rename: BTreeMap<&String, &String> = g.vertices().iter().zip(&names).collect();
        let mut h = Multigraph::with_vertices(names.iter().cloned());
        for (id, [a, b]) in g.edges() {
            h.add_edge(format!("{id}'"), rename[a].clone(), rename[b].clone()).unwrap();
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(isomorphic(&g, &h), Some(true));
        prop_assert_eq!(canon(&from_graph(&g).0), canon(&from_graph(&h).0));
    }

    #[test]
    fn graphs_survive_json(g in multigraph(7, 14, 3)) {
        let text = serde_json::to_string_pretty(&g).unwrap();
        let back: Multigraph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn identity_certificates_verify(g in multigraph(6, 10, 2)) {
        for strong in [false, true] {
            let cert = ImmersionCertificate::identity(&g, strong);
            prop_assert!(verify_immersion(&g, &g, &cert, strong).unwrap().is_empty());
        }
    }

    /// A `K_{1,|V(F)|}` minor in `G(m, W)` with `m ≥ 2|E(F)|` forces a strong
    /// immersion of `F`.
    #[test]
    fn star_minors_give_strong_immersions(g in multigraph(7, 16, 4), pick in 0usize..3) {
        let f = match pick {
            0 => gen_complete(2),
            1 => {
                let mut path = Multigraph::with_vertices(["a", "b", "c"]);
                path.add_edge("ab", "a", "b").unwrap();
                path.add_edge("bc", "b", "c").unwrap();
                path
            }
            _ => gen_complete(3),
        };
        let m = 2 * f.edge_count();
        let aux = build_auxiliary_graph(&g, g.vertices(), m).unwrap();
        let Some(model) = has_k1k_minor(&aux, f.vertex_count()).unwrap() else {
            return Ok(());
        };
        let cert = star_minor_to_immersion(&g, g.vertices(), m, &model, &f).unwrap();
        prop_assert!(verify_immersion(&g, &f, &cert, true).unwrap().is_empty());
        prop_assert!(matches!(find_immersion(&g, &f, true, None), ImmersionSearch::Found(_)));
    }

    #[test]
    fn structure_decompositions_verify(g in multigraph(7, 14, 3), alpha in 2usize..5) {
        if let Some(s) = structure_decompose(&g, alpha).unwrap().certified() {
            prop_assert!(adhesion(&g, &s.decomposition).unwrap() < alpha);
            prop_assert!(verify_structure(&g, &s.decomposition, &s.certificates, alpha).unwrap().is_empty());
        }
    }
}
