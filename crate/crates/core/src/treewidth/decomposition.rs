use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Bags joined into a tree by `tree_edges` (pairs of bag indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one, and 0 when every bag has at most one
    /// vertex.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// The single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition {
            bags: vec![g.vertices()],
            tree_edges: Vec::new(),
        }
    }

    /// Adjacency lists of the tree.
    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks the three axioms and that the bag graph is a tree.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |m: alloc::string::String| Err(Error::InvalidDecomposition(m));
        let m = self.bags.len();
        if m == 0 {
            return if g.n() == 0 { Ok(()) } else { bad("no bags".into()) };
        }
        for (i, b) in self.bags.iter().enumerate() {
            if !b.is_subset(g.vertices()) {
                return bad(format!("bag {i} holds a vertex outside the graph"));
            }
        }
        for &(a, b) in &self.tree_edges {
            if a >= m || b >= m || a == b {
                return bad(format!("tree edge ({a}, {b}) is invalid"));
            }
        }
        if self.tree_edges.len() != m - 1 {
            return bad(format!("{} tree edges for {m} bags", self.tree_edges.len()));
        }
        let adj = self.tree_adjacency();
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return bad("bag tree is disconnected".into());
        }
        let mut covered = VertexSet::EMPTY;
        for b in &self.bags {
            covered |= *b;
        }
        if covered != g.vertices() {
            return bad(format!("vertices {:?} lie in no bag", g.vertices() - covered));
        }
        for (u, v) in g.edges() {
            let e = VertexSet::singleton(u).with(v);
            if !self.bags.iter().any(|b| e.is_subset(*b)) {
                return bad(format!("edge {u}-{v} lies in no bag"));
            }
        }
        for v in g.vertices() {
            let holding: Vec<usize> = (0..m).filter(|&i| self.bags[i].contains(v)).collect();
            let inside = |i: usize| self.bags[i].contains(v);
            let mut reach = vec![false; m];
            let mut stack = vec![holding[0]];
            reach[holding[0]] = true;
            let mut count = 1;
            while let Some(t) = stack.pop() {
                for &u in &adj[t] {
                    if !reach[u] && inside(u) {
                        reach[u] = true;
                        count += 1;
                        stack.push(u);
                    }
                }
            }
            if count != holding.len() {
                return bad(format!("bags holding {v} are not connected in the tree"));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

/// The decomposition of an elimination ordering: each vertex with its
/// later neighbours in the filled graph, hung below the earliest of them.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![VertexSet::EMPTY],
            tree_edges: Vec::new(),
        };
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = g.rows().to_vec();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for &v in order {
        let later: VertexSet = adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        for a in later {
            adj[a] |= later.without(a);
        }
        parent[pos[v]] = later.iter().min_by_key(|&u| pos[u]).map(|u| pos[u]);
        bags.push(later.with(v));
    }
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => tree_edges.push((i, *p)),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        tree_edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, tree_edges }
}

/// A decomposition from the minimum-degree elimination heuristic (ties to
/// the smallest index). Valid, not necessarily optimal.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    let mut adj: Vec<VertexSet> = g.rows().to_vec();
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive.iter().min_by_key(|&u| ((adj[u] & alive).len(), u)).unwrap();
        let nb = adj[v] & alive;
        for a in nb {
            adj[a] |= nb.without(a);
        }
        alive.remove(v);
        order.push(v);
    }
    decomposition_from_order(g, &order)
}
