//! Canonical labelling for isomorphism-free enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A canonical code and the labelling achieving it: `perm[v]` is the new
/// label of `v`, and two graphs are isomorphic iff their codes agree.
///
/// Search tree of equitable refinement plus individualisation of the first
/// smallest non-singleton cell, keeping the lexicographically largest row
/// code over all leaves. Twins inside a cell are tried once.
pub fn canonical_labelling(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.n();
    let cells = refine(g, vec![g.vertices()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (code, perm) = best.unwrap_or_default();
    debug_assert!(perm.len() == n);
    (code, perm)
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labelling(g).1)
}

pub fn canonical_code(g: &Graph) -> Vec<u64> {
    canonical_labelling(g).0
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_code(g) == canonical_code(h)
}

fn search(g: &Graph, cells: Vec<VertexSet>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
    else {
        let mut perm = vec![0; g.n()];
        for (label, c) in cells.iter().enumerate() {
            perm[c.first().unwrap()] = label;
        }
        let code = code_of(g, &perm, &cells);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    let cell = cells[target];
    let mut tried = VertexSet::EMPTY;
    for v in cell {
        if tried.contains(v) {
            continue;
        }
        // Twins of v in the cell lead to the same leaves.
        for u in cell {
            if g.neighbors(u).without(v) == g.neighbors(v).without(u) {
                tried.insert(u);
            }
        }
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(VertexSet::singleton(v));
        next.push(cell.without(v));
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Rows of the relabelled graph, in label order.
fn code_of(g: &Graph, perm: &[usize], cells: &[VertexSet]) -> Vec<u64> {
    cells
        .iter()
        .map(|c| {
            let v = c.first().unwrap();
            let mut row = 0u64;
            for u in g.neighbors(v) {
                row |= 1 << perm[u];
            }
            row
        })
        .collect()
}

/// Splits cells by neighbour counts into every cell until stable; pieces
/// are ordered by increasing count.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut changed = true;
    while changed {
        changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut out = Vec::with_capacity(cells.len() + 2);
            let mut split_any = false;
            for &c in &cells {
                if c.len() == 1 {
                    out.push(c);
                    continue;
                }
                let mut by_count: [VertexSet; 65] = [VertexSet::EMPTY; 65];
                let mut used = 0u128;
                for v in c {
                    let k = (g.neighbors(v) & splitter).len();
                    by_count[k].insert(v);
                    used |= 1 << k;
                }
                if used.count_ones() == 1 {
                    out.push(c);
                    continue;
                }
                split_any = true;
                for k in 0..65 {
                    if used & (1 << k) != 0 {
                        out.push(by_count[k]);
                    }
                }
            }
            cells = out;
            if split_any {
                changed = true;
            }
            w += 1;
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_a_code() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let h = g.permuted(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_ne!(canonical_code(&g), canonical_code(&p5));
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }
}
