//! Witness families and seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Path `v0 … vk` of length `k` with every edge of multiplicity `k`.
///
/// Edge `e{i}_{c}` is copy `c` of the edge between `v{i}` and `v{i+1}`.
pub fn gen_pk(k: usize) -> Result<Multigraph> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("P_k needs k >= 1, got {k}")));
    }
    let mut g = Multigraph::with_vertices((0..=k).map(|i| format!("v{i}")));
    for i in 0..k {
        for c in 0..k {
            g.add_edge(format!("e{i}_{c}"), format!("v{i}"), format!("v{}", i + 1))?;
        }
    }
    Ok(g)
}

/// [`gen_pk`] plus a simple chord `c{i}` between `v{i}` and `v{i+2}`.
pub fn gen_pk_chorded(k: usize) -> Result<Multigraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "chorded P_k needs k >= 2, got {k}"
        )));
    }
    let mut g = gen_pk(k)?;
    for i in 0..=k - 2 {
        g.add_edge(format!("c{i}"), format!("v{i}"), format!("v{}", i + 2))?;
    }
    Ok(g)
}

/// Simple complete graph on `v0 … v{n-1}`.
pub fn gen_complete(n: usize) -> Multigraph {
    let mut g = Multigraph::with_vertices((0..n).map(|i| format!("v{i}")));
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(format!("e{i}_{j}"), format!("v{i}"), format!("v{j}"))
                .expect("fresh ids over existing vertices");
        }
    }
    g
}

/// Uniform random multigraph on `v0 … v{n-1}` with `edge_count` edges.
///
/// Each edge picks an unordered vertex pair (a loop when both ends agree)
/// uniformly among those still below `max_multiplicity` copies. Identical
/// arguments always produce identical graphs.
pub fn gen_random_multigraph(
    n: usize,
    edge_count: usize,
    max_multiplicity: usize,
    seed: u64,
) -> Result<Multigraph> {
    let slots = n * (n + 1) / 2;
    if edge_count > slots * max_multiplicity {
        return Err(Error::InvalidParameter(format!(
            "{edge_count} edges do not fit on {n} vertices with multiplicity at most {max_multiplicity}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::with_vertices((0..n).map(|i| format!("v{i}")));
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut used = vec![0usize; pairs.len()];
    let width = edge_count.to_string().len();
    for e in 0..edge_count {
        let open: Vec<usize> = (0..pairs.len())
            .filter(|&p| used[p] < max_multiplicity)
            .collect();
        let p = open[rng.gen_range(0..open.len())];
        used[p] += 1;
        let (i, j) = pairs[p];
        g.add_edge(format!("r{e:0width$}"), format!("v{i}"), format!("v{j}"))?;
    }
    Ok(g)
}
