//! Enumeration of chordless cycles.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::path::Hole;
use crate::vertex_set::VertexSet;

/// Every hole of length `4..=max_len`, each exactly once, in canonical
/// orientation (minimum vertex first, smaller hole-neighbour second).
pub fn enumerate_holes(g: &Graph, max_len: usize) -> Holes<'_> {
    Holes {
        g,
        max_len,
        next_start: 0,
        path: Vec::new(),
        cands: Vec::new(),
        excl: Vec::new(),
    }
}

/// Depth-first search over chordless paths that start at their minimum
/// vertex.
pub struct Holes<'g> {
    g: &'g Graph,
    max_len: usize,
    next_start: usize,
    path: Vec<usize>,
    /// Untried extensions of the path prefix of the same depth.
    cands: Vec<VertexSet>,
    /// Vertices that may not follow the prefix of the same depth.
    excl: Vec<VertexSet>,
}

impl Holes<'_> {
    fn push(&mut self, w: usize) {
        let g = self.g;
        let s = self.path.first().copied().unwrap_or(w);
        let above = !VertexSet::full(s + 1);
        let k = self.path.len();
        let excl = match k {
            0 => VertexSet::singleton(w),
            1 => self.excl[0].with(w),
            _ => self.excl[k - 1] | g.neighbors(self.path[k - 1]).with(w),
        };
        let mut cands = g.neighbors(w) & above;
        cands -= excl;
        if k == 1 {
            cands -= g.neighbors(s);
        }
        self.path.push(w);
        self.excl.push(excl);
        self.cands.push(cands);
    }

    fn pop(&mut self) {
        self.path.pop();
        self.excl.pop();
        self.cands.pop();
    }
}

impl Iterator for Holes<'_> {
    type Item = Hole;

    fn next(&mut self) -> Option<Hole> {
        let g = self.g;
        if self.max_len < 4 {
            return None;
        }
        loop {
            if self.path.is_empty() {
                if self.next_start >= g.n() {
                    return None;
                }
                let s = self.next_start;
                self.next_start += 1;
                self.push(s);
                continue;
            }
            let depth = self.path.len();
            let top = self.cands.last_mut().unwrap();
            let Some(w) = top.first() else {
                self.pop();
                continue;
            };
            top.remove(w);
            let s = self.path[0];
            if depth >= 3 && g.has_edge(s, w) {
                if w > self.path[1] && depth + 1 <= self.max_len {
                    let mut cyc = self.path.clone();
                    cyc.push(w);
                    return Some(Hole::canonical(cyc));
                }
                continue;
            }
            if depth + 2 <= self.max_len {
                self.push(w);
            }
        }
    }
}
