use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::SpanWheel;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{find_pattern, Embedding, PatternKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SijkOutcome {
    /// An induced `S_{k+1,k+1,k+1}`.
    Spider(Embedding),
    /// The graph is not butterfly-free.
    Butterfly(Embedding),
}

/// Walk of length `len` along `p` from its first vertex.
fn prefix(p: &[usize], len: usize) -> Result<Vec<usize>> {
    if p.len() <= len {
        return Err(Error::Internal(format!("a side is shorter than {len}")));
    }
    Ok(p[..=len].to_vec())
}

/// An induced `S_{k+1,k+1,k+1}` from a span-wheel with at least `4k + 1`
/// centers in a butterfly-free graph.
///
/// With `v` the center in position `2k + 1`, `a, a'` its first and last
/// neighbours on side A and `b, b'` on side B, `P` runs `a .. x .. b` and
/// `Q` runs `a' .. y .. b'`. If `a = a'` the spider is centered at `a`
/// with legs along `P`, through `v b` back along `P`, and along `Q`;
/// otherwise it is centered at `v` with legs through `a`, `b` and `a'`.
/// When `aa'` is an edge the roles of the sides are exchanged;
/// butterfly-freeness rules out `bb'` being an edge as well.
pub fn extract_sijk(g: &Graph, sw: &SpanWheel, k: usize) -> Result<SijkOutcome> {
    sw.check(g).map_err(|e| Error::Precondition(format!("not a span-wheel: {e}")))?;
    if sw.k() < 4 * k + 1 {
        return Err(Error::Precondition(format!("{} centers, at least {} needed", sw.k(), 4 * k + 1)));
    }
    if let Some(e) = find_pattern(g, PatternKind::Butterfly) {
        return Ok(SijkOutcome::Butterfly(e));
    }
    let ends = |p: &[usize], v: usize| {
        let idx = SpanWheel::indices(g, p, v);
        (idx[0], idx[idx.len() - 1])
    };
    let (alpha, beta) = (sw.path_a.len() - 1, sw.path_b.len() - 1);
    for (i, &v) in sw.centers.iter().enumerate() {
        let (lo_a, hi_a) = ends(&sw.path_a, v);
        let (lo_b, hi_b) = ends(&sw.path_b, v);
        let (p_len, q_len) = (lo_a + lo_b, (alpha - hi_a) + (beta - hi_b));
        if p_len < i + 2 || q_len + i < 4 * k + 2 {
            return Err(Error::Internal(format!("sector lengths around center {v} are too short")));
        }
    }
    let v = sw.centers[2 * k];
    let (mut pa, mut pb) = (&sw.path_a, &sw.path_b);
    let (lo, hi) = ends(pa, v);
    if lo != hi && g.has_edge(pa[lo], pa[hi]) {
        core::mem::swap(&mut pa, &mut pb);
    }
    let (lo_a, hi_a) = ends(pa, v);
    let (lo_b, hi_b) = ends(pb, v);
    // P from a back to x then on to b; Q from a' on to y then back to b'.
    let mut p: Vec<usize> = pa[..=lo_a].iter().rev().copied().collect();
    p.extend_from_slice(&pb[1..=lo_b]);
    let mut q: Vec<usize> = pa[hi_a..].to_vec();
    q.extend(pb[hi_b..pb.len() - 1].iter().rev());
    let p_rev: Vec<usize> = p.iter().rev().copied().collect();
    let (center, legs) = if lo_a == hi_a {
        let a = pa[lo_a];
        let mut back = vec![a, v];
        back.extend_from_slice(&p_rev[..k]);
        (a, [prefix(&p, k + 1)?, back, prefix(&q, k + 1)?])
    } else {
        let leg = |s: &[usize]| -> Result<Vec<usize>> {
            let mut l = vec![v];
            l.extend(prefix(s, k)?);
            Ok(l)
        };
        (v, [leg(&p)?, leg(&p_rev)?, leg(&q)?])
    };
    let [l1, l2, l3] = legs;
    let e = Embedding::new(PatternKind::Sijk(k + 1, k + 1, k + 1))
        .with("center", vec![center])
        .with("L1", l1)
        .with("L2", l2)
        .with("L3", l3);
    e.validate(g)
        .map_err(|err| Error::Internal(format!("spider does not validate: {err}")))?;
    Ok(SijkOutcome::Spider(e))
}
