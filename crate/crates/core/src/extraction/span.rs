use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{rim_cycle, witness_within, ForbiddenWitness, SpanWheel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{Embedding, PatternKind, Witness};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extraction {
    SpanWheel(SpanWheel),
    Forbidden(ForbiddenWitness),
}

/// Builds a `(|C| - 2)`-span-wheel from an independent minimal separator
/// `c` with full components `a` and `b`, or returns the forbidden
/// configuration met on the way when the graph is outside the class.
///
/// The vertices of `c` are added in increasing order. Each new vertex `z`
/// is joined to both sides by a shortest connector `Q`; sides are rerouted
/// through the end of `Q` while that shortens it, the split pair is
/// flipped so that only `x` sees the interior of `Q`, and finally `z`
/// replaces `x` as a split vertex while `x` becomes a center.
pub fn extract_span_wheel(g: &Graph, c: VertexSet, a: VertexSet, b: VertexSet) -> Result<Extraction> {
    check_preconditions(g, c, a, b)?;
    let order = c.to_vec();
    let (x, y) = (order[0], order[1]);
    let side = |s: VertexSet| {
        bfs(g, x, s.with(x).with(y), |w| w == y).ok_or_else(|| Error::Internal("full component without a path".into()))
    };
    let mut st = State {
        g,
        a,
        b,
        x,
        y,
        pa: side(a)?,
        pb: side(b)?,
        centers: Vec::new(),
    };
    for &z in &order[2..] {
        if let Some(w) = st.add(z)? {
            return Ok(Extraction::Forbidden(w));
        }
    }
    st.finish()
}

fn check_preconditions(g: &Graph, c: VertexSet, a: VertexSet, b: VertexSet) -> Result<()> {
    let pre = |m: &str| Err(Error::Precondition(m.into()));
    if !c.is_subset(g.vertices()) || !a.is_subset(g.vertices()) || !b.is_subset(g.vertices()) {
        return pre("sets must be vertex sets of the graph");
    }
    if c.len() < 2 {
        return pre("the separator needs at least two vertices");
    }
    if !g.is_independent(c) {
        return pre("the separator is not independent");
    }
    let comps = g.components(c);
    if a == b || !comps.contains(&a) || !comps.contains(&b) {
        return pre("a and b must be distinct components of the graph minus the separator");
    }
    if g.open_neighborhood(a) != c || g.open_neighborhood(b) != c {
        return pre("a and b must be full to the separator");
    }
    Ok(())
}

/// Shortest path from `from` inside `allowed` to the least vertex of the
/// nearest layer satisfying `target`; parents are the first discoverers.
fn bfs(g: &Graph, from: usize, allowed: VertexSet, target: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut layer = vec![from];
    while !layer.is_empty() {
        if let Some(&t) = layer.iter().filter(|&&v| target(v)).min() {
            let mut path = vec![t];
            while *path.last().unwrap() != from {
                path.push(parent[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        let mut next = Vec::new();
        for &v in &layer {
            for u in (g.neighbors(v) & allowed) - seen {
                seen.insert(u);
                parent[u] = v;
                next.push(u);
            }
        }
        layer = next;
    }
    None
}

fn interior(p: &[usize]) -> VertexSet {
    if p.len() < 2 {
        return VertexSet::EMPTY;
    }
    p[1..p.len() - 1].iter().collect()
}

/// Least and greatest positions on `p` of neighbours of `v`.
fn span(g: &Graph, p: &[usize], v: usize) -> Option<(usize, usize)> {
    let idx: Vec<usize> = (0..p.len()).filter(|&i| g.has_edge(v, p[i])).collect();
    Some((*idx.first()?, *idx.last()?))
}

struct State<'g> {
    g: &'g Graph,
    a: VertexSet,
    b: VertexSet,
    x: usize,
    y: usize,
    pa: Vec<usize>,
    pb: Vec<usize>,
    centers: Vec<usize>,
}

enum Side {
    A,
    B,
}

impl State<'_> {
    fn rim(&self) -> VertexSet {
        self.pa.iter().chain(&self.pb).collect()
    }

    /// The configuration in `extra` plus the rim must contain a forbidden
    /// pattern; look there first and then in everything built so far.
    fn forbidden(&self, extra: VertexSet, step: &str) -> Result<ForbiddenWitness> {
        let local = self.rim() | extra;
        let placed: VertexSet = self.centers.iter().collect();
        let everything = self.a | self.b | placed.with(self.x).with(self.y) | extra;
        match witness_within(self.g, local).or_else(|| witness_within(self.g, everything)) {
            Some(w) => Ok(w),
            None => Err(Error::Internal(format!("{step} failed on a graph of the class"))),
        }
    }

    fn connector(&self, z: usize, comp: VertexSet, p: &[usize]) -> Result<Vec<usize>> {
        let inner = interior(p);
        bfs(self.g, z, comp.with(z), |w| self.g.neighbors(w).intersects(inner))
            .ok_or_else(|| Error::Internal("no connector to a side".into()))
    }

    /// Adds `z` to the separator handled so far.
    fn add(&mut self, z: usize) -> Result<Option<ForbiddenWitness>> {
        let g = self.g;
        loop {
            let qa = self.connector(z, self.a, &self.pa)?;
            let qb = self.connector(z, self.b, &self.pb)?;
            let (za, zb) = (*qa.last().unwrap(), *qb.last().unwrap());
            if za == z && zb == z {
                self.centers.push(z);
                return Ok(None);
            }
            let mut rerouted = false;
            for (side, end) in [(Side::A, za), (Side::B, zb)] {
                if end == z {
                    continue;
                }
                let p = match side {
                    Side::A => &self.pa,
                    Side::B => &self.pb,
                };
                let (lo, hi) = span(g, p, end).ok_or_else(|| Error::Internal("connector end off the side".into()))?;
                if lo == hi || g.has_edge(p[lo], p[hi]) {
                    continue;
                }
                // Reroute the side through the connector end; Q shrinks.
                let mut np = p[..=lo].to_vec();
                np.push(end);
                np.extend_from_slice(&p[hi..]);
                let inner = interior(&np);
                if let Some(&c) = self.centers.iter().find(|&&c| !g.neighbors(c).intersects(inner)) {
                    return self.forbidden(VertexSet::singleton(end).with(c), "rerouting a side").map(Some);
                }
                match side {
                    Side::A => self.pa = np,
                    Side::B => self.pb = np,
                }
                rerouted = true;
                break;
            }
            if rerouted {
                continue;
            }
            let mut q: Vec<usize> = qa.iter().rev().copied().collect();
            q.extend_from_slice(&qb[1..]);
            let qset: VertexSet = q.iter().collect();
            let iq = interior(&q);
            let x_sees = g.neighbors(self.x).intersects(iq);
            let y_sees = g.neighbors(self.y).intersects(iq);
            match (x_sees, y_sees) {
                (true, true) => return self.theta_through(iq, qset),
                (false, false) => return self.forbidden(qset, "attaching the connector").map(Some),
                (false, true) => {
                    core::mem::swap(&mut self.x, &mut self.y);
                    self.pa.reverse();
                    self.pb.reverse();
                    continue;
                }
                (true, false) => {}
            }
            let (_, ha) = span(g, &self.pa, za).unwrap();
            let (_, hb) = span(g, &self.pb, zb).unwrap();
            if !g.has_edge(self.x, self.pa[ha]) || !g.has_edge(self.x, self.pb[hb]) {
                return self.forbidden(qset, "closing the new sides").map(Some);
            }
            let mut na = qa.clone();
            na.extend_from_slice(&self.pa[ha..]);
            let mut nb = qb.clone();
            nb.extend_from_slice(&self.pb[hb..]);
            self.centers.push(self.x);
            self.x = z;
            self.pa = na;
            self.pb = nb;
            return Ok(None);
        }
    }

    /// Both split vertices see the interior of `Q`: a shortest path between
    /// them through it closes a theta with the two sides.
    fn theta_through(&self, iq: VertexSet, qset: VertexSet) -> Result<Option<ForbiddenWitness>> {
        let (x, y) = (self.x, self.y);
        if let Some(r) = bfs(self.g, x, iq.with(x).with(y), |w| w == y) {
            let e = Embedding::new(PatternKind::Theta)
                .with("a", vec![x])
                .with("b", vec![y])
                .with("P1", self.pa.clone())
                .with("P2", self.pb.clone())
                .with("P3", r);
            if e.validate(self.g).is_ok() {
                return Ok(ForbiddenWitness::from_witness(Witness::Pattern(e)));
            }
        }
        self.forbidden(qset, "separating the split vertices").map(Some)
    }

    fn finish(self) -> Result<Extraction> {
        let g = self.g;
        let rim = self.rim();
        for &c in &self.centers {
            if (g.neighbors(c) & rim).len() < 3 {
                return Ok(Extraction::Forbidden(self.forbidden(VertexSet::singleton(c), "counting rim neighbours")?));
            }
        }
        // Repeatedly take the center meeting side A first, then side B.
        let mut left = self.centers.clone();
        let mut order = Vec::with_capacity(left.len());
        while !left.is_empty() {
            let key = |&v: &usize| (span(g, &self.pa, v).map(|s| s.0), span(g, &self.pb, v).map(|s| s.0), v);
            let (pos, _) = left.iter().enumerate().min_by_key(|(_, v)| key(v)).unwrap();
            order.push(left.remove(pos));
        }
        debug_assert!(rim_cycle(&self.pa, &self.pb).is_ok());
        match SpanWheel::new(g, self.pa.clone(), self.pb.clone(), order) {
            Ok(sw) => Ok(Extraction::SpanWheel(sw)),
            Err(_) => {
                let placed: VertexSet = self.centers.iter().collect();
                Ok(Extraction::Forbidden(self.forbidden(placed, "ordering the centers")?))
            }
        }
    }
}
