use std::collections::{BTreeMap, HashMap};

use crate::graph::Multigraph;
use crate::indexed::Indexed;

use super::ImmersionCertificate;

/// Result of [`find_immersion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImmersionSearch {
    Found(ImmersionCertificate),
    /// The whole search space was explored without success.
    Absent,
    BudgetExhausted { steps: u64 },
}

/// Exhaustive search for a (strong) immersion of `h` in `g`.
///
/// Pattern vertices are placed in order of decreasing degree; as soon as
/// both ends of a pattern edge are placed, the edge is routed along a
/// simple path of free host edges (a simple cycle for loops), shortest
/// routes first, with full backtracking. Each placement or routing attempt
/// costs one step of `budget`.
pub fn find_immersion(g: &Multigraph, h: &Multigraph, strong: bool, budget: Option<u64>) -> ImmersionSearch {
    let mut s = Search::new(g, h, strong, budget);
    match s.place(0) {
        Ok(true) => ImmersionSearch::Found(s.certificate()),
        Ok(false) => ImmersionSearch::Absent,
        Err(OutOfBudget) => ImmersionSearch::BudgetExhausted { steps: s.steps },
    }
}

struct OutOfBudget;

type Step = Result<bool, OutOfBudget>;

/// A routed pattern edge: host vertex sequence and host edges used.
#[derive(Clone, Default)]
struct Route {
    verts: Vec<usize>,
    edges: Vec<usize>,
}

struct Search {
    g: Indexed,
    h: Indexed,
    strong: bool,
    budget: Option<u64>,
    steps: u64,
    /// Pattern vertices in placement order.
    order: Vec<usize>,
    /// Pattern edges routed once `order[d]` is placed, for each depth `d`.
    due: Vec<Vec<usize>>,
    g_degree: Vec<usize>,
    h_degree: Vec<usize>,
    /// Sorted distinct neighbours (loops excluded) of each host vertex.
    nbrs: Vec<Vec<usize>>,
    /// Host edges between an unordered pair, ascending.
    between: HashMap<(usize, usize), Vec<usize>>,
    loops: Vec<Vec<usize>>,

    free: Vec<bool>,
    free_count: usize,
    /// Free edge-ends at each host vertex (a loop counts twice).
    free_ends: Vec<usize>,
    image: Vec<Option<usize>>,
    is_branch: Vec<bool>,
    /// Number of routes passing through each host vertex internally.
    interior: Vec<usize>,
    routes: Vec<Option<Route>>,
    /// Pattern edge-ends still to be routed at each pattern vertex.
    pending_ends: Vec<usize>,
    unrouted: usize,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Search {
    fn new(g: &Multigraph, h: &Multigraph, strong: bool, budget: Option<u64>) -> Self {
        let g = Indexed::new(g);
        let h = Indexed::new(h);
        let g_degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let h_degree: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();

        let mut order: Vec<usize> = (0..h.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h_degree[v]), v));
        let mut depth_of = vec![0; h.n()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let mut due = vec![Vec::new(); h.n()];
        for (e, &(a, b)) in h.ends.iter().enumerate() {
            due[depth_of[a].max(depth_of[b])].push(e);
        }

        let mut nbrs = vec![Vec::new(); g.n()];
        let mut between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut loops = vec![Vec::new(); g.n()];
        for (e, &(a, b)) in g.ends.iter().enumerate() {
            if a == b {
                loops[a].push(e);
            } else {
                between.entry(key(a, b)).or_default().push(e);
                nbrs[a].push(b);
                nbrs[b].push(a);
            }
        }
        for list in &mut nbrs {
            list.sort_unstable();
            list.dedup();
        }

        Search {
            free: vec![true; g.m()],
            free_count: g.m(),
            free_ends: g_degree.clone(),
            image: vec![None; h.n()],
            is_branch: vec![false; g.n()],
            interior: vec![0; g.n()],
            routes: vec![None; h.m()],
            pending_ends: h_degree.clone(),
            unrouted: h.m(),
            order,
            due,
            g_degree,
            h_degree,
            nbrs,
            between,
            loops,
            g,
            h,
            strong,
            budget,
            steps: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        if self.budget.is_some_and(|b| self.steps >= b) {
            return Err(OutOfBudget);
        }
        self.steps += 1;
        Ok(())
    }

    fn place(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for x in 0..self.g.n() {
            if self.is_branch[x]
                || self.g_degree[x] < self.h_degree[v]
                || self.free_ends[x] < self.pending_ends[v]
                || (self.strong && self.interior[x] > 0)
            {
                continue;
            }
            self.tick()?;
            self.image[v] = Some(x);
            self.is_branch[x] = true;
            let found = self.route(depth, 0)?;
            if found {
                return Ok(true);
            }
            self.is_branch[x] = false;
            self.image[v] = None;
        }
        Ok(false)
    }

    fn route(&mut self, depth: usize, idx: usize) -> Step {
        if idx == self.due[depth].len() {
            return self.place(depth + 1);
        }
        if self.free_count < self.unrouted {
            return Ok(false);
        }
        for d in 0..=depth {
            let v = self.order[d];
            let x = self.image[v].expect("placed");
            if self.free_ends[x] < self.pending_ends[v] {
                return Ok(false);
            }
        }
        let e = self.due[depth][idx];
        let (a, b) = self.h.ends[e];
        let (xa, xb) = (self.image[a].expect("placed"), self.image[b].expect("placed"));
        let options = if a == b { self.cycles_through(xa) } else { self.paths(xa, xb) };
        for verts in options {
            self.tick()?;
            let route = self.claim(&verts);
            self.pending_ends[a] -= 1;
            self.pending_ends[b] -= 1;
            self.unrouted -= 1;
            self.routes[e] = Some(route);
            let found = self.route(depth, idx + 1)?;
            if found {
                return Ok(true);
            }
            let route = self.routes[e].take().expect("just set");
            self.release(&route);
            self.pending_ends[a] += 1;
            self.pending_ends[b] += 1;
            self.unrouted += 1;
        }
        Ok(false)
    }

    fn can_cross(&self, y: usize) -> bool {
        !(self.strong && self.is_branch[y])
    }

    fn has_free(&self, a: usize, b: usize, need: usize) -> bool {
        self.between
            .get(&key(a, b))
            .is_some_and(|es| es.iter().filter(|&&e| self.free[e]).count() >= need)
    }

    /// Simple paths from `s` to `t` over free edges, shortest first.
    fn paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut on_path = vec![false; self.g.n()];
        on_path[s] = true;
        let mut stack = vec![s];
        self.extend_paths(t, &mut stack, &mut on_path, &mut out);
        out.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
        out
    }

    fn extend_paths(&self, t: usize, stack: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let x = *stack.last().expect("non-empty");
        for &y in &self.nbrs[x] {
            if !self.has_free(x, y, 1) {
                continue;
            }
            // `t` may already be on the stack when closing a cycle.
            if y == t {
                let mut p = stack.clone();
                p.push(y);
                out.push(p);
                continue;
            }
            if on_path[y] || !self.can_cross(y) {
                continue;
            }
            on_path[y] = true;
            stack.push(y);
            self.extend_paths(t, stack, on_path, out);
            stack.pop();
            on_path[y] = false;
        }
    }

    /// Simple closed routes through `x`, as vertex sequences starting and
    /// ending at `x`: a loop, a pair of parallel edges, then longer cycles
    /// (each listed in one orientation only), shortest first.
    fn cycles_through(&self, x: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.loops[x].iter().any(|&e| self.free[e]) {
            out.push(vec![x, x]);
        }
        for &y in &self.nbrs[x] {
            if self.can_cross(y) && self.has_free(x, y, 2) {
                out.push(vec![x, y, x]);
            }
        }
        let mut longer = Vec::new();
        let mut on_path = vec![false; self.g.n()];
        on_path[x] = true;
        for &y in &self.nbrs[x] {
            if !self.can_cross(y) || !self.has_free(x, y, 1) {
                continue;
            }
            on_path[y] = true;
            let mut stack = vec![x, y];
            let mut found = Vec::new();
            self.extend_paths(x, &mut stack, &mut on_path, &mut found);
            on_path[y] = false;
            // Paths back to x of length >= 3 whose last interior vertex is
            // larger than the first: one orientation per cycle.
            for p in found {
                if p.len() >= 4 && p[1] < p[p.len() - 2] {
                    longer.push(p);
                }
            }
        }
        longer.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
        out.extend(longer);
        out
    }

    /// Marks the lowest free edges along `verts` as used.
    fn claim(&mut self, verts: &[usize]) -> Route {
        let mut edges = Vec::with_capacity(verts.len() - 1);
        for w in verts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let candidates = if a == b { &self.loops[a] } else { &self.between[&key(a, b)] };
            let e = *candidates
                .iter()
                .find(|&&e| self.free[e])
                .expect("route only uses pairs with free edges");
            self.free[e] = false;
            self.free_count -= 1;
            self.free_ends[a] -= 1;
            self.free_ends[b] -= 1;
            edges.push(e);
        }
        for &y in &verts[1..verts.len() - 1] {
            self.interior[y] += 1;
        }
        Route {
            verts: verts.to_vec(),
            edges,
        }
    }

    fn release(&mut self, route: &Route) {
        for &e in &route.edges {
            let (a, b) = self.g.ends[e];
            self.free[e] = true;
            self.free_count += 1;
            self.free_ends[a] += 1;
            self.free_ends[b] += 1;
        }
        for &y in &route.verts[1..route.verts.len() - 1] {
            self.interior[y] -= 1;
        }
    }

    fn certificate(&self) -> ImmersionCertificate {
        let vertex_map: BTreeMap<String, String> = (0..self.h.n())
            .map(|v| {
                let x = self.image[v].expect("complete assignment");
                (self.h.names[v].clone(), self.g.names[x].clone())
            })
            .collect();
        let edge_map = (0..self.h.m())
            .map(|e| {
                let route = self.routes[e].as_ref().expect("complete routing");
                let ids = route.edges.iter().map(|&f| self.g.edge_ids[f].clone()).collect();
                (self.h.edge_ids[e].clone(), ids)
            })
            .collect();
        ImmersionCertificate {
            vertex_map,
            edge_map,
            strong: self.strong,
        }
    }
}
