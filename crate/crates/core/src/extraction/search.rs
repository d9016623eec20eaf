use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bound_main, SpanWheel};
use crate::clique::find_clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::holes::enumerate_holes;
use crate::patterns::{find_pattern, in_class_c, PatternKind};
use crate::treewidth::treewidth_exact;
use crate::vertex_set::VertexSet;

/// Some `l`-span-wheel of `g`, searching holes in enumeration order, then
/// split pairs, then center sets.
///
/// For a fixed hole and split pair every valid ordering sorts the centers
/// by their neighbour intervals on side A and then side B, so candidates
/// are sorted once and chains are grown along that order.
pub fn find_span_wheel(g: &Graph, l: usize) -> Option<SpanWheel> {
    for hole in enumerate_holes(g, g.n()) {
        let len = hole.len();
        let rim = hole.set();
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                let pa = hole.arc_forward(i, j);
                let pb = hole.arc_backward(i, j);
                let (x, y) = (pa[0], pa[pa.len() - 1]);
                let mut cands: Vec<(usize, [usize; 4])> = Vec::new();
                for v in g.vertices() - rim - g.neighbors(x) - g.neighbors(y) {
                    if v == x || v == y || (g.neighbors(v) & rim).len() < 3 {
                        continue;
                    }
                    let ia = SpanWheel::indices(g, &pa, v);
                    let ib = SpanWheel::indices(g, &pb, v);
                    if ia.is_empty() || ib.is_empty() {
                        continue;
                    }
                    cands.push((v, [ia[0], ia[ia.len() - 1], ib[0], ib[ib.len() - 1]]));
                }
                if cands.len() < l {
                    continue;
                }
                cands.sort_by_key(|&(v, key)| (key, v));
                let mut chain = Vec::with_capacity(l);
                if grow(g, &cands, 0, l, &mut chain) {
                    let centers = chain.iter().map(|&c| cands[c].0).collect();
                    if let Ok(sw) = SpanWheel::new(g, pa, pb, centers) {
                        return Some(sw);
                    }
                }
            }
        }
    }
    None
}

fn grow(g: &Graph, cands: &[(usize, [usize; 4])], from: usize, l: usize, chain: &mut Vec<usize>) -> bool {
    if chain.len() == l {
        return true;
    }
    for c in from..cands.len() {
        let (v, key) = cands[c];
        let fits = chain.last().is_none_or(|&p| {
            let prev = cands[p].1;
            prev[1] <= key[0] && prev[3] <= key[2]
        }) && chain.iter().all(|&p| !g.has_edge(cands[p].0, v));
        if fits {
            chain.push(c);
            if grow(g, cands, c + 1, l, chain) {
                return true;
            }
            chain.pop();
        }
    }
    false
}

/// Outcome of checking one graph against the span-wheel treewidth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem11Report {
    pub t: usize,
    pub l: usize,
    /// `None` when every hypothesis holds.
    pub inapplicable: Option<String>,
    pub tw: Option<usize>,
    pub bound: BigUint,
    pub holds: bool,
}

/// For `g` in the class with no clique on `t` vertices and no
/// `l`-span-wheel, checks `tw(g) <= (t - 1)(R(t, l + 2) - 1)^3 - 1`.
pub fn theorem11_check(g: &Graph, t: usize, l: usize) -> Result<Theorem11Report> {
    let bound = bound_main(t, l)?;
    let mut report = Theorem11Report {
        t,
        l,
        inapplicable: None,
        tw: None,
        bound,
        holds: true,
    };
    if let Some(w) = in_class_c(g).witness {
        report.inapplicable = Some(format!("outside the class: {w:?}"));
        return Ok(report);
    }
    if let Some(k) = find_clique(g, t) {
        report.inapplicable = Some(format!("contains a clique on {t} vertices: {k:?}"));
        return Ok(report);
    }
    if let Some(sw) = find_span_wheel(g, l) {
        report.inapplicable = Some(format!("contains a {l}-span-wheel with centers {:?}", sw.centers));
        return Ok(report);
    }
    let (tw, _) = treewidth_exact(g)?;
    report.tw = Some(tw);
    report.holds = BigUint::from(tw) <= report.bound;
    Ok(report)
}

/// A butterfly-free host made of a span-wheel with `centers` centers and
/// nothing else: vertices `0` and `1` are `x` and `y`, then the interior of
/// side A, the interior of side B, and the centers.
///
/// Each center gets one or two neighbours on each side, at least three in
/// all, spaced one or two apart; consecutive centers are separated by up to
/// one vertex or share a neighbour. ChaCha8 seeded with `seed` drives every
/// choice, and draws repeat until the host is butterfly-free.
pub fn random_span_wheel_host(centers: usize, seed: u64) -> Result<(Graph, SpanWheel)> {
    if centers == 0 || centers > 5 {
        return Err(Error::InvalidParameter("between 1 and 5 centers are supported".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        if let Some(host) = draw_host(&mut rng, centers)? {
            return Ok(host);
        }
    }
    Err(Error::Internal("no butterfly-free host drawn".into()))
}

/// Interior positions of one side and each center's neighbours there.
fn draw_side(rng: &mut ChaCha8Rng, counts: &[usize]) -> (usize, Vec<Vec<usize>>) {
    let mut len = 1 + (rng.next_u32() % 2) as usize;
    let mut nbrs: Vec<Vec<usize>> = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        let share = i > 0 && rng.next_u32() % 3 == 0;
        let mut pos = if share {
            *nbrs[i - 1].last().unwrap()
        } else {
            let gap = (rng.next_u32() % 2) as usize;
            len + gap
        };
        let mut mine = Vec::new();
        for step in 0..c {
            if step > 0 {
                pos += 1 + (rng.next_u32() % 2) as usize;
            }
            mine.push(pos);
        }
        len = len.max(pos + 1);
        nbrs.push(mine);
    }
    len += (rng.next_u32() % 2) as usize;
    (len, nbrs)
}

fn draw_host(rng: &mut ChaCha8Rng, k: usize) -> Result<Option<(Graph, SpanWheel)>> {
    let mut ca = Vec::with_capacity(k);
    let mut cb = Vec::with_capacity(k);
    for _ in 0..k {
        let (a, b) = match rng.next_u32() % 3 {
            0 => (1, 2),
            1 => (2, 1),
            _ => (2, 2),
        };
        ca.push(a);
        cb.push(b);
    }
    let (la, na) = draw_side(rng, &ca);
    let (lb, nb) = draw_side(rng, &cb);
    // Interior position p of side A is vertex 2 + p - 1; side A has la - 1
    // interior vertices numbered from position 1.
    let n = 2 + (la - 1) + (lb - 1) + k;
    if n > 64 {
        return Ok(None);
    }
    let a_vert = |p: usize| 1 + p;
    let b_vert = |p: usize| 1 + (la - 1) + p;
    let mut g = Graph::new(n)?;
    let mut pa = alloc::vec![0];
    pa.extend((1..la).map(a_vert));
    pa.push(1);
    let mut pb = alloc::vec![0];
    pb.extend((1..lb).map(b_vert));
    pb.push(1);
    for p in [&pa, &pb] {
        for w in p.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
    }
    let first_center = n - k;
    let mut order = Vec::with_capacity(k);
    for i in 0..k {
        let v = first_center + i;
        for &p in &na[i] {
            g.add_edge(v, a_vert(p))?;
        }
        for &p in &nb[i] {
            g.add_edge(v, b_vert(p))?;
        }
        order.push(v);
    }
    if find_pattern(&g, PatternKind::Butterfly).is_some() {
        return Ok(None);
    }
    let rim: VertexSet = pa.iter().chain(&pb).collect();
    if order.iter().any(|&v| (g.neighbors(v) & rim).len() < 3) {
        return Ok(None);
    }
    let g = g.with_name(format!("spanwheel:{k}"));
    match SpanWheel::new(&g, pa, pb, order) {
        Ok(sw) => Ok(Some((g, sw))),
        Err(_) => Ok(None),
    }
}
