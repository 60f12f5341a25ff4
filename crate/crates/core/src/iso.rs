//! Canonical forms and isomorphism for small multigraphs.
//!
//! Vertices are first grouped by a cheap invariant (degree, loop count,
//! multiset of multiplicities); the canonical form is the lexicographically
//! smallest adjacency encoding over all orderings that respect the groups.
//! Cost is the product of the group sizes' factorials, so this is meant for
//! graphs of at most [`ISOMORPHISM_VERTEX_CAP`] vertices.

use crate::graph::Multigraph;
use crate::indexed::Indexed;

/// Largest vertex count for which [`isomorphic`] gives an answer.
pub const ISOMORPHISM_VERTEX_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u32>);

/// Multiplicity matrix with loops counted once on the diagonal.
pub fn multiplicity_matrix(g: &Multigraph) -> Vec<Vec<u32>> {
    let ix = Indexed::new(g);
    let mut mat = vec![vec![0u32; ix.n()]; ix.n()];
    for &(u, v) in &ix.ends {
        mat[u][v] += 1;
        if u != v {
            mat[v][u] += 1;
        }
    }
    mat
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_form_of_matrix(&multiplicity_matrix(g))
}

/// Canonical form of a symmetric multiplicity matrix.
pub fn canonical_form_of_matrix(mat: &[Vec<u32>]) -> CanonicalForm {
    let n = mat.len();
    let invariant = |v: usize| {
        let loops = mat[v][v];
        let degree: u32 = (0..n).filter(|&u| u != v).map(|u| mat[v][u]).sum::<u32>() + 2 * loops;
        let mut row: Vec<u32> = (0..n).filter(|&u| u != v).map(|u| mat[v][u]).collect();
        row.sort_unstable();
        (degree, loops, row)
    };
    let mut order: Vec<(_, usize)> = (0..n).map(|v| (invariant(v), v)).collect();
    order.sort();

    // Cell boundaries: positions sharing an invariant may be permuted.
    let mut cell_of_pos = vec![0usize; n];
    for p in 1..n {
        cell_of_pos[p] = cell_of_pos[p - 1] + usize::from(order[p].0 != order[p - 1].0);
    }
    let cells: Vec<Vec<usize>> = {
        let count = cell_of_pos.last().map_or(0, |c| c + 1);
        let mut cells = vec![Vec::new(); count];
        for (p, (_, v)) in order.iter().enumerate() {
            cells[cell_of_pos[p]].push(*v);
        }
        cells
    };

    let mut header: Vec<u32> = vec![n as u32];
    for (inv, _) in &order {
        header.push(inv.0);
        header.push(inv.1);
    }

    let mut search = CanonSearch {
        mat,
        cell_of_pos: &cell_of_pos,
        cells: &cells,
        used: vec![false; n],
        perm: Vec::with_capacity(n),
        code: Vec::new(),
        best: None,
    };
    search.run();
    let mut out = header;
    out.extend(search.best.unwrap_or_default());
    CanonicalForm(out)
}

struct CanonSearch<'a> {
    mat: &'a [Vec<u32>],
    cell_of_pos: &'a [usize],
    cells: &'a [Vec<usize>],
    used: Vec<bool>,
    perm: Vec<usize>,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        let p = self.perm.len();
        if p == self.mat.len() {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        let cell = &self.cells[self.cell_of_pos[p]];
        for i in 0..cell.len() {
            let v = cell[i];
            if self.used[v] {
                continue;
            }
            let before = self.code.len();
            for q in 0..p {
                self.code.push(self.mat[self.perm[q]][v]);
            }
            self.code.push(self.mat[v][v]);
            let prefix_worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.code.as_slice() > &b[..self.code.len()]);
            if !prefix_worse {
                self.used[v] = true;
                self.perm.push(v);
                self.run();
                self.perm.pop();
                self.used[v] = false;
            }
            self.code.truncate(before);
        }
    }
}

/// `Some(answer)` for graphs within [`ISOMORPHISM_VERTEX_CAP`], `None`
/// (unverified) beyond it.
pub fn isomorphic(a: &Multigraph, b: &Multigraph) -> Option<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Some(false);
    }
    if a.vertex_count() > ISOMORPHISM_VERTEX_CAP {
        return None;
    }
    Some(canonical_form(a) == canonical_form(b))
}
