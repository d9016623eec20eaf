//! Chordless paths and holes.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A chordless (induced) path, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    seq: Vec<usize>,
}

impl Path {
    /// Checks that `seq` is a non-empty chordless path of `g`.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        check_path(g, &seq)?;
        Ok(Path { seq })
    }

    pub(crate) fn new_unchecked(seq: Vec<usize>) -> Self {
        Path { seq }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.seq
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.seq
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.seq.len() <= 1
    }

    pub fn first(&self) -> usize {
        self.seq[0]
    }

    pub fn last(&self) -> usize {
        *self.seq.last().unwrap()
    }

    pub fn set(&self) -> VertexSet {
        self.seq.iter().collect()
    }

    /// Vertices other than the two ends.
    pub fn interior(&self) -> VertexSet {
        if self.seq.len() <= 2 {
            VertexSet::EMPTY
        } else {
            self.seq[1..self.seq.len() - 1].iter().collect()
        }
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.seq.iter().position(|&u| u == v)
    }

    pub fn reversed(&self) -> Path {
        let mut seq = self.seq.clone();
        seq.reverse();
        Path { seq }
    }

    /// Subpath between positions `i` and `j` (either order), inclusive.
    pub fn subpath(&self, i: usize, j: usize) -> Path {
        if i <= j {
            Path {
                seq: self.seq[i..=j].to_vec(),
            }
        } else {
            let mut seq = self.seq[j..=i].to_vec();
            seq.reverse();
            Path { seq }
        }
    }
}

pub(crate) fn check_path(g: &Graph, seq: &[usize]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::NotAPath("empty vertex sequence".into()));
    }
    let mut seen = VertexSet::EMPTY;
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::InvalidVertex(v));
        }
        if seen.contains(v) {
            return Err(Error::NotAPath(format!("vertex {v} repeated")));
        }
        seen.insert(v);
        for (j, &u) in seq[..i].iter().enumerate() {
            let adjacent = g.has_edge(u, v);
            if j + 1 == i && !adjacent {
                return Err(Error::NotAPath(format!("{u} and {v} are consecutive but not adjacent")));
            }
            if j + 1 < i && adjacent {
                return Err(Error::NotAPath(format!("chord {u}-{v}")));
            }
        }
    }
    Ok(())
}

/// A chordless cycle of length at least four.
///
/// The vertex sequence is kept canonical: the minimum vertex first, and the
/// smaller of its two hole neighbours second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hole {
    cyc: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, cyc: Vec<usize>) -> Result<Self> {
        check_hole(g, &cyc)?;
        Ok(Hole::canonical(cyc))
    }

    pub(crate) fn canonical(mut cyc: Vec<usize>) -> Self {
        let m = cyc.len();
        let start = (0..m).min_by_key(|&i| cyc[i]).unwrap();
        cyc.rotate_left(start);
        if cyc[1] > cyc[m - 1] {
            cyc[1..].reverse();
        }
        Hole { cyc }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cyc
    }

    /// Number of edges (equal to the number of vertices).
    pub fn len(&self) -> usize {
        self.cyc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cyc.is_empty()
    }

    pub fn set(&self) -> VertexSet {
        self.cyc.iter().collect()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.cyc.iter().position(|&u| u == v)
    }

    /// Vertex at cyclic position `i`.
    pub fn at(&self, i: isize) -> usize {
        let m = self.cyc.len() as isize;
        self.cyc[(((i % m) + m) % m) as usize]
    }

    /// The walk from position `i` forward (increasing positions, wrapping)
    /// to position `j`, inclusive.
    pub fn arc_forward(&self, i: usize, j: usize) -> Vec<usize> {
        let m = self.cyc.len();
        let steps = (j + m - i) % m;
        (0..=steps).map(|s| self.cyc[(i + s) % m]).collect()
    }

    /// The walk from position `i` backward to position `j`, inclusive.
    pub fn arc_backward(&self, i: usize, j: usize) -> Vec<usize> {
        let m = self.cyc.len();
        let steps = (i + m - j) % m;
        (0..=steps).map(|s| self.cyc[(i + m - s) % m]).collect()
    }
}

pub(crate) fn check_hole(g: &Graph, cyc: &[usize]) -> Result<()> {
    let m = cyc.len();
    if m < 4 {
        return Err(Error::NotAHole(format!("length {m} is below 4")));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in cyc {
        if v >= g.n() {
            return Err(Error::InvalidVertex(v));
        }
        if seen.contains(v) {
            return Err(Error::NotAHole(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    for i in 0..m {
        for j in i + 1..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            let adjacent = g.has_edge(cyc[i], cyc[j]);
            if consecutive && !adjacent {
                return Err(Error::NotAHole(format!("{} and {} are consecutive but not adjacent", cyc[i], cyc[j])));
            }
            if !consecutive && adjacent {
                return Err(Error::NotAHole(format!("chord {}-{}", cyc[i], cyc[j])));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn path_validation() {
        let g = cycle(6);
        assert!(Path::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(matches!(Path::new(&g, vec![0, 2]), Err(Error::NotAPath(_))));
        assert!(matches!(Path::new(&g, vec![0, 1, 2, 3, 4, 5]), Err(Error::NotAPath(_))));
        assert!(Path::new(&g, vec![4]).is_ok());
    }

    #[test]
    fn hole_canonical_form() {
        let g = cycle(6);
        let h = Hole::new(&g, vec![3, 2, 1, 0, 5, 4]).unwrap();
        assert_eq!(h.vertices(), [0, 1, 2, 3, 4, 5]);
        assert_eq!(h.arc_forward(4, 1), [4, 5, 0, 1]);
        assert_eq!(h.arc_backward(1, 4), [1, 0, 5, 4]);
        let mut k4 = cycle(4);
        k4.add_edge(0, 2).unwrap();
        assert!(matches!(Hole::new(&k4, vec![0, 1, 2, 3]), Err(Error::NotAHole(_))));
    }
}
