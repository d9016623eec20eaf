//! Clique search.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A maximum clique; among those, the lexicographically smallest sorted
/// vertex list.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    grow(g, VertexSet::EMPTY, g.vertices(), &mut best, usize::MAX);
    best
}

/// Some clique on exactly `t` vertices, if one exists.
pub fn find_clique(g: &Graph, t: usize) -> Option<VertexSet> {
    if t == 0 {
        return Some(VertexSet::EMPTY);
    }
    let mut best = VertexSet::EMPTY;
    grow(g, VertexSet::EMPTY, g.vertices(), &mut best, t);
    (best.len() >= t).then_some(best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

// Candidates are tried in increasing order, so cliques are met in
// lexicographic order and only strict improvements replace `best`.
fn grow(g: &Graph, cur: VertexSet, mut cands: VertexSet, best: &mut VertexSet, target: usize) {
    if cur.len() > best.len() {
        *best = cur;
    }
    while let Some(v) = cands.first() {
        if best.len() >= target || cur.len() + cands.len() <= best.len() {
            return;
        }
        cands.remove(v);
        grow(g, cur.with(v), cands & g.neighbors(v), best, target);
    }
}
