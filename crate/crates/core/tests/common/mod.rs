//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; graphs are plain multiplicity matrices.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use rand::Rng;
use strong_immersion::{Multigraph, VertexSet};

/// Symmetric multiplicity matrix; the diagonal counts loops.
pub type Mat = Vec<Vec<u8>>;

/// Canonical form: vertex count followed by the upper triangle, minimised
/// over all vertex permutations.
pub type Canon = Vec<u8>;

pub fn canon(m: &Mat) -> Canon {
    let n = m.len();
    let mut best: Option<Canon> = None;
    for perm in (0..n).permutations(n) {
        let mut code = Vec::with_capacity(1 + n * (n + 1) / 2);
        code.push(n as u8);
        for i in 0..n {
            for j in i..n {
                code.push(m[perm[i]][perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_else(|| vec![0])
}

pub fn decode(code: &Canon) -> Mat {
    let n = code[0] as usize;
    let mut m = vec![vec![0u8; n]; n];
    let mut k = 1;
    for i in 0..n {
        for j in i..n {
            m[i][j] = code[k];
            m[j][i] = code[k];
            k += 1;
        }
    }
    m
}

pub fn edge_total(m: &Mat) -> usize {
    let n = m.len();
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| m[i][j] as usize).sum()
}

/// Vertices `v0..`, edges `e0..` in row-major order of the upper triangle.
pub fn to_graph(m: &Mat) -> Multigraph {
    let n = m.len();
    let mut g = Multigraph::with_vertices((0..n).map(|i| format!("v{i}")));
    let mut next = 0;
    for i in 0..n {
        for j in i..n {
            for _ in 0..m[i][j] {
                g.add_edge(format!("e{next}"), format!("v{i}"), format!("v{j}")).unwrap();
                next += 1;
            }
        }
    }
    g
}

pub fn from_graph(g: &Multigraph) -> (Mat, Vec<String>) {
    let names: Vec<String> = g.vertices().iter().cloned().collect();
    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut m = vec![vec![0u8; names.len()]; names.len()];
    for [a, b] in g.edges().values() {
        let (i, j) = (index[a.as_str()], index[b.as_str()]);
        m[i][j] += 1;
        if i != j {
            m[j][i] += 1;
        }
    }
    (m, names)
}

/// Every multigraph (loops allowed) with `1..=max_n` vertices and at most
/// `max_e` edges, one per isomorphism class.
pub fn all_multigraphs(max_n: usize, max_e: usize) -> Vec<Mat> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        for e in 0..=max_e {
            for choice in slots.iter().combinations_with_replacement(e) {
                let mut m = vec![vec![0u8; n]; n];
                for &&(i, j) in &choice {
                    m[i][j] += 1;
                    if i != j {
                        m[j][i] += 1;
                    }
                }
                let c = canon(&m);
                if seen.insert(c) {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn remove_vertex(m: &Mat, v: usize) -> Mat {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != v)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != v).map(|(_, x)| *x).collect())
        .collect()
}

fn add(m: &mut Mat, i: usize, j: usize, delta: i8) {
    let apply = |x: u8| (x as i16 + delta as i16) as u8;
    m[i][j] = apply(m[i][j]);
    if i != j {
        m[j][i] = apply(m[j][i]);
    }
}

/// All ways to pair up a multiset of neighbours.
fn pairings(ends: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if ends.is_empty() {
        return vec![Vec::new()];
    }
    let first = ends[0];
    let mut out = Vec::new();
    let mut tried = BTreeSet::new();
    for k in 1..ends.len() {
        if !tried.insert(ends[k]) {
            continue;
        }
        let rest: Vec<usize> = ends[1..].iter().enumerate().filter(|(i, _)| *i + 1 != k).map(|(_, x)| *x).collect();
        for mut p in pairings(&rest) {
            p.push((first, ends[k]));
            out.push(p);
        }
    }
    out
}

fn successors(m: &Mat, strong: bool) -> Vec<Mat> {
    let n = m.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if m[i][j] > 0 {
                let mut d = m.clone();
                add(&mut d, i, j, -1);
                out.push(d);
            }
        }
    }
    for v in 0..n {
        if m[v].iter().all(|&x| x == 0) {
            out.push(remove_vertex(m, v));
        }
    }
    if strong {
        // Split off a loopless vertex of even degree and delete it.
        for v in 0..n {
            if m[v][v] > 0 {
                continue;
            }
            let ends: Vec<usize> = (0..n).flat_map(|u| std::iter::repeat_n(u, m[v][u] as usize)).collect();
            if ends.is_empty() || ends.len() % 2 == 1 {
                continue;
            }
            for p in pairings(&ends) {
                let mut d = m.clone();
                for (a, b) in p {
                    add(&mut d, a, b, 1);
                }
                out.push(remove_vertex(&d, v));
            }
        }
    } else {
        // Lift `uv, vw` to `uw` at any vertex `v`.
        for v in 0..n {
            for u in 0..n {
                for w in u..n {
                    if u == v || w == v {
                        continue;
                    }
                    let needed = if u == w { 2 } else { 1 };
                    if m[v][u] < needed || m[v][w] < 1 {
                        continue;
                    }
                    let mut d = m.clone();
                    add(&mut d, v, u, -1);
                    add(&mut d, v, w, -1);
                    add(&mut d, u, w, 1);
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Canonical forms of everything reachable from `m` by edge deletions,
/// deletions of isolated vertices and either lifts (weak) or complete
/// splittings of non-branch vertices (strong).
pub fn lift_closure(m: &Mat, strong: bool) -> HashSet<Canon> {
    let start = canon(m);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(code) = queue.pop_front() {
        for next in successors(&decode(&code), strong) {
            let c = canon(&next);
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen
}

/// `|δ(Z)|` counted directly from the edge list.
pub fn boundary_size(g: &Multigraph, z: &VertexSet) -> usize {
    g.edges()
        .values()
        .filter(|[a, b]| z.contains(a) != z.contains(b))
        .count()
}

/// Minimum `S`–`T` cut value and every source side attaining it.
pub fn enumerate_min_cuts(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> (usize, Vec<VertexSet>) {
    let free: Vec<&String> = g.vertices().iter().filter(|v| !s.contains(*v) && !t.contains(*v)).collect();
    let mut best = usize::MAX;
    let mut sides = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut z = s.clone();
        z.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| (*v).clone()));
        let c = boundary_size(g, &z);
        if c < best {
            best = c;
            sides.clear();
        }
        if c == best {
            sides.push(z);
        }
    }
    (best, sides)
}

/// Adjacency masks of every connected simple graph on `n` labelled
/// vertices.
pub fn connected_simple_graphs(n: usize) -> impl Iterator<Item = Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..(1 << pairs.len())).filter_map(move |mask| {
        let mut adj = vec![0u32; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let mut reach = 1u32;
        loop {
            let next = (0..n).filter(|&v| reach >> v & 1 == 1).fold(reach, |acc, v| acc | adj[v]);
            if next == reach {
                break;
            }
            reach = next;
        }
        (n == 0 || reach == (1u32 << n) - 1).then_some(adj)
    })
}

/// Brute-force isomorphism test between two multigraphs that must agree on
/// `fixed` (a map from vertices of `a` to vertices of `b`); only the
/// remaining vertices are permuted.
pub fn isomorphic_fixing(a: &Multigraph, b: &Multigraph, fixed: &BTreeMap<String, String>) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ma, na) = from_graph(a);
    let (mb, nb) = from_graph(b);
    let ib: BTreeMap<&str, usize> = nb.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut base = vec![usize::MAX; na.len()];
    let mut used = vec![false; nb.len()];
    for (i, v) in na.iter().enumerate() {
        if let Some(target) = fixed.get(v) {
            let Some(&j) = ib.get(target.as_str()) else {
                return false;
            };
            base[i] = j;
            used[j] = true;
        }
    }
    let free_a: Vec<usize> = (0..na.len()).filter(|&i| base[i] == usize::MAX).collect();
    let free_b: Vec<usize> = (0..nb.len()).filter(|&j| !used[j]).collect();
    free_b.iter().copied().permutations(free_b.len()).any(|perm| {
        let mut f = base.clone();
        for (k, &i) in free_a.iter().enumerate() {
            f[i] = perm[k];
        }
        (0..na.len()).all(|i| (0..na.len()).all(|j| ma[i][j] == mb[f[i]][f[j]]))
    })
}

/// Random spanning tree plus `extra` random non-loop edges; tree edges get
/// multiplicity `1..=max_mult`. Vertices `{prefix}{i}`, edges `{prefix}e{k}`.
pub fn random_connected(rng: &mut impl Rng, prefix: &str, n: usize, extra: usize, max_mult: usize) -> Multigraph {
    let mut g = Multigraph::with_vertices((0..n).map(|i| format!("{prefix}{i}")));
    let mut next = 0;
    let mut add = |g: &mut Multigraph, i: usize, j: usize| {
        g.add_edge(format!("{prefix}e{next}"), format!("{prefix}{i}"), format!("{prefix}{j}")).unwrap();
        next += 1;
    };
    for i in 1..n {
        let j = rng.gen_range(0..i);
        for _ in 0..rng.gen_range(1..=max_mult) {
            add(&mut g, i, j);
        }
    }
    if n >= 2 {
        for _ in 0..extra {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            add(&mut g, i, j);
        }
    }
    g
}
