//! Dense simple undirected graphs on at most 64 vertices.

use core::fmt;
use core::hash::{Hash, Hasher};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph with vertices `0..n`, `n <= 64`.
///
/// Every vertex owns one adjacency row. Rows are kept symmetric and
/// irreflexive by every mutating method. Equality and hashing ignore the
/// optional name.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("name", &self.name)
            .field("edges", &edges)
            .finish()
    }
}

/// An induced subgraph together with the host vertex of every local vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the host vertex that became local vertex `i`.
    pub map: Vec<usize>,
}

impl Induced {
    /// Translates a set of local vertices back to host vertices.
    pub fn lift(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.map[v]).collect()
    }

    pub fn lift_vertex(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn host_vertices(&self) -> VertexSet {
        self.map.iter().collect()
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex(v))
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N_B(A)`: vertices of `b` outside `a` with a neighbor in `a`.
    pub fn neighborhood(&self, a: VertexSet, b: VertexSet) -> VertexSet {
        self.open_neighborhood(a) & b
    }

    /// `N(A)`: vertices outside `a` with a neighbor in `a`.
    pub fn open_neighborhood(&self, a: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in a {
            out |= self.adj[v];
        }
        out - a
    }

    /// The vertices reachable from `v` inside `allowed` (`v` must be allowed).
    pub fn component_of(&self, v: usize, allowed: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            next = next & allowed;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Connected components of `G[allowed]`, ordered by minimum vertex.
    pub fn components_within(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let mut rest = allowed & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// `cc(G \ removed)`, ordered by minimum vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices() - removed)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()).len() == self.n
    }

    /// Whether `G[s]` is connected (the empty set counts as connected).
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Number of edges of `G[s]`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// host order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Induced {
        let map: Vec<usize> = (s & self.vertices()).to_vec();
        let mut local = [0usize; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![VertexSet::EMPTY; map.len()];
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v] & s {
                adj[i].insert(local[u]);
            }
        }
        Induced {
            graph: Graph {
                n: map.len(),
                adj,
                name: None,
            },
            map,
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| (full - self.adj[v]).without(v))
            .collect();
        Graph {
            n: self.n,
            adj,
            name: None,
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            for u in self.adj[v] {
                adj[perm[v]].insert(perm[u]);
            }
        }
        Graph {
            n: self.n,
            adj,
            name: self.name.clone(),
        }
    }

    /// Adjacency rows, one per vertex.
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// A perfect elimination ordering if the graph is chordal.
    ///
    /// Maximum cardinality search visits vertices in reverse elimination
    /// order; the ordering is then checked for perfection.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = [0usize; MAX_VERTICES];
        let mut unvisited = self.vertices();
        let mut visit = Vec::with_capacity(n);
        while !unvisited.is_empty() {
            let v = unvisited
                .iter()
                .max_by_key(|&u| (weight[u], core::cmp::Reverse(u)))
                .unwrap();
            unvisited.remove(v);
            visit.push(v);
            for u in self.adj[v] & unvisited {
                weight[u] += 1;
            }
        }
        visit.reverse();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in visit.iter().enumerate() {
            pos[v] = i;
        }
        // Each vertex's later neighbours must form a clique; it suffices to
        // check them against the earliest of them.
        for &v in &visit {
            let later: VertexSet = self.adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
            if let Some(p) = later.iter().min_by_key(|&u| pos[u]) {
                if !(later.without(p)).is_subset(self.adj[p]) {
                    return None;
                }
            }
        }
        Some(visit)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn components_of_path_minus_middle() {
        let g = path3();
        let cc = g.components(VertexSet::singleton(1));
        assert_eq!(cc, [VertexSet::singleton(0), VertexSet::singleton(2)]);
    }

    #[test]
    fn components_of_k4_is_whole_vertex_set() {
        let g = complete(4);
        assert_eq!(g.components(VertexSet::EMPTY), [g.vertices()]);
    }

    #[test]
    fn c6_minus_opposite_vertices() {
        let g = cycle(6);
        let removed: VertexSet = [0, 3].iter().collect();
        let cc = g.components(removed);
        assert_eq!(cc.len(), 2);
        assert_eq!(cc[0], [1, 2].iter().collect());
        assert_eq!(cc[1], [4, 5].iter().collect());
    }

    #[test]
    fn neighborhood_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.neighborhood(VertexSet::singleton(0), star.vertices()),
            [1, 2, 3].iter().collect()
        );
        assert!(star.neighborhood(VertexSet::EMPTY, star.vertices()).is_empty());
        let c5 = cycle(5);
        let b: VertexSet = [1, 2].iter().collect();
        assert_eq!(c5.neighborhood(VertexSet::singleton(0), b), VertexSet::singleton(1));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = complete(4);
        let ind = k4.induced_subgraph([0, 2, 3].iter().collect());
        assert_eq!(ind.graph, complete(3));
        assert_eq!(ind.map, [0, 2, 3]);

        let c6 = cycle(6);
        let p = c6.induced_subgraph([1, 2, 3, 4].iter().collect());
        assert_eq!(p.graph.edge_count(), 3);
        assert!(p.graph.is_connected());
        assert_eq!((0..4).filter(|&v| p.graph.degree(v) == 1).count(), 2);

        assert_eq!(c6.induced_subgraph(c6.vertices()).graph, c6);
    }

    #[test]
    fn rejects_oversized_and_loops() {
        assert!(matches!(Graph::new(65), Err(Error::TooManyVertices { .. })));
        assert!(Graph::new(64).is_ok());
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(1, 3), Err(Error::InvalidVertex(3)));
    }

    #[test]
    fn chordality() {
        assert!(complete(5).is_chordal());
        assert!(path3().is_chordal());
        assert!(!cycle(4).is_chordal());
        assert!(!cycle(7).is_chordal());
        let mut c4 = cycle(4);
        c4.add_edge(0, 2).unwrap();
        assert!(c4.is_chordal());
    }
}
