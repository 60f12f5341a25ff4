use std::collections::HashMap;

use crate::graph::Multigraph;

/// Dense integer view of a [`Multigraph`]. Vertices and edges are numbered
/// in identifier order, so "lowest index" means "lowest identifier".
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub names: Vec<String>,
    pub index: HashMap<String, usize>,
    pub edge_ids: Vec<String>,
    pub ends: Vec<(usize, usize)>,
    /// Incident edge indices per vertex, ascending; a loop is listed once.
    pub incident: Vec<Vec<usize>>,
}

impl Indexed {
    pub fn new(g: &Multigraph) -> Self {
        let names: Vec<String> = g.vertices().iter().cloned().collect();
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut edge_ids = Vec::with_capacity(g.edge_count());
        let mut ends = Vec::with_capacity(g.edge_count());
        let mut incident = vec![Vec::new(); names.len()];
        for (i, (id, [a, b])) in g.edges().iter().enumerate() {
            let (u, v) = (index[a], index[b]);
            edge_ids.push(id.clone());
            ends.push((u, v));
            incident[u].push(i);
            if u != v {
                incident[v].push(i);
            }
        }
        Indexed {
            names,
            index,
            edge_ids,
            ends,
            incident,
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v]
            .iter()
            .map(|&e| if self.ends[e].0 == self.ends[e].1 { 2 } else { 1 })
            .sum()
    }
}
