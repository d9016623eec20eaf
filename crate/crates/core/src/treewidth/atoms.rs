use alloc::vec::Vec;

use crate::graph::{Graph, Induced};
use crate::separators::separator_sets;
use crate::vertex_set::VertexSet;

/// Minimal separators of `g` that are cliques, sorted by vertex list. In a
/// disconnected graph this includes the empty set.
pub fn clique_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    separator_sets(g).into_iter().filter(|&s| g.is_clique(s)).collect()
}

/// Atoms of the decomposition by clique minimal separators.
///
/// The lexicographically smallest clique minimal separator `S` is chosen;
/// each component `C` of `G \ S` yields the piece `G[C ∪ N(C)]`, and pieces
/// are split again until none has a clique separator. Duplicates and
/// pieces contained in another atom are dropped. Atoms are returned as
/// induced subgraphs of `g`, sorted by vertex list.
pub fn clique_separator_atoms(g: &Graph) -> Vec<Induced> {
    let mut atoms: Vec<VertexSet> = Vec::new();
    let mut stack = Vec::new();
    if g.n() > 0 {
        stack.push(g.vertices());
    }
    while let Some(u) = stack.pop() {
        let sub = g.induced_subgraph(u);
        match clique_minimal_separators(&sub.graph).first() {
            None => atoms.push(u),
            Some(&s) => {
                for c in sub.graph.components(s) {
                    let piece = c | sub.graph.open_neighborhood(c);
                    stack.push(sub.lift(piece));
                }
            }
        }
    }
    atoms.sort_by(|a, b| a.cmp_lex(*b));
    atoms.dedup();
    let kept: Vec<VertexSet> = atoms
        .iter()
        .copied()
        .filter(|&a| !atoms.iter().any(|&b| a != b && a.is_subset(b)))
        .collect();
    kept.into_iter().map(|a| g.induced_subgraph(a)).collect()
}
