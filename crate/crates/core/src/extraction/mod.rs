//! Span wheels, their extraction from independent minimal separators, the
//! spider extraction from long span wheels, and the treewidth bounds built
//! on them.

mod bounds;
mod search;
mod sijk;
mod span;

pub use bounds::{bound_ehf, bound_main, bound_ttf, ramsey_holds, ramsey_upper};
pub use search::{find_span_wheel, random_span_wheel_host, theorem11_check, Theorem11Report};
pub use sijk::{extract_sijk, SijkOutcome};
pub use span::{extract_span_wheel, Extraction};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
#[cfg(test)]
use num_bigint::BigUint;
use crate::graph::{Graph, Induced};
use crate::path::{check_hole, check_path, Hole};
use crate::patterns::{in_class_c, Embedding, PatternKind, WheelCert, Witness};
use crate::vertex_set::VertexSet;

/// A wheel `(H, C)` with split vertices `x, y` and an ordering of `C`
/// whose rim neighbourhoods are met in order when walking from `x` to `y`
/// along either side of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanWheel {
    pub hole: Hole,
    pub x: usize,
    pub y: usize,
    /// `a_1 .. a_alpha` with `a_1 = x` and `a_alpha = y`.
    pub path_a: Vec<usize>,
    /// `b_1 .. b_beta` with `b_1 = x` and `b_beta = y`.
    pub path_b: Vec<usize>,
    pub centers: Vec<usize>,
}

impl SpanWheel {
    /// Assembles the rim from the two sides.
    pub fn new(g: &Graph, path_a: Vec<usize>, path_b: Vec<usize>, centers: Vec<usize>) -> Result<Self> {
        let cyc = rim_cycle(&path_a, &path_b)?;
        check_hole(g, &cyc)?;
        let sw = SpanWheel {
            hole: Hole::canonical(cyc),
            x: path_a[0],
            y: *path_a.last().unwrap(),
            path_a,
            path_b,
            centers,
        };
        sw.check(g)?;
        Ok(sw)
    }

    pub fn k(&self) -> usize {
        self.centers.len()
    }

    /// Positions of the neighbours of `v` on `path`.
    pub fn indices(g: &Graph, path: &[usize], v: usize) -> Vec<usize> {
        (0..path.len()).filter(|&i| g.has_edge(v, path[i])).collect()
    }

    /// Re-derives every defining property from `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidCertificate(m));
        let (pa, pb) = (&self.path_a, &self.path_b);
        for &v in pa.iter().chain(pb).chain(&self.centers) {
            if v >= g.n() {
                return Err(Error::InvalidVertex(v));
            }
        }
        if pa.len() < 2 || pb.len() < 2 {
            return bad("both sides need at least two vertices".into());
        }
        if pa[0] != self.x || pb[0] != self.x || pa[pa.len() - 1] != self.y || pb[pb.len() - 1] != self.y {
            return bad("both sides must run from x to y".into());
        }
        check_path(g, pa)?;
        check_path(g, pb)?;
        let cyc = rim_cycle(pa, pb)?;
        check_hole(g, &cyc)?;
        if Hole::canonical(cyc) != self.hole {
            return bad("hole does not match the two sides".into());
        }
        if g.has_edge(self.x, self.y) {
            return bad("x and y are adjacent".into());
        }
        let rim = self.hole.set();
        let mut ind = VertexSet::singleton(self.x).with(self.y);
        for &c in &self.centers {
            if rim.contains(c) || ind.contains(c) {
                return bad(format!("center {c} is repeated or on the rim"));
            }
            ind.insert(c);
        }
        if !g.is_independent(ind) {
            return bad("centers together with x and y are not independent".into());
        }
        let interior = |p: &[usize]| -> VertexSet { p[1..p.len() - 1].iter().collect() };
        let (ia, ib) = (interior(pa), interior(pb));
        for &c in &self.centers {
            let nb = g.neighbors(c);
            if !nb.intersects(ia) || !nb.intersects(ib) {
                return bad(format!("center {c} misses the interior of a side"));
            }
            if (nb & rim).len() < 3 {
                return bad(format!("center {c} has fewer than 3 rim neighbours"));
            }
        }
        for p in [pa, pb] {
            for w in self.centers.windows(2) {
                let hi = SpanWheel::indices(g, p, w[0]).into_iter().max();
                let lo = SpanWheel::indices(g, p, w[1]).into_iter().min();
                if let (Some(hi), Some(lo)) = (hi, lo) {
                    if hi > lo {
                        return bad(format!("centers {} and {} are out of order", w[0], w[1]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `path_a` followed by the interior of `path_b` walked back from `y`.
fn rim_cycle(pa: &[usize], pb: &[usize]) -> Result<Vec<usize>> {
    if pa.len() < 2 || pb.len() < 2 || pa[0] != pb[0] || pa.last() != pb.last() {
        return Err(Error::InvalidCertificate("sides must share both ends".into()));
    }
    let mut cyc = pa.to_vec();
    cyc.extend(pb[1..pb.len() - 1].iter().rev());
    Ok(cyc)
}

pub fn validate_span_wheel(g: &Graph, sw: &SpanWheel) -> bool {
    sw.check(g).is_ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenKind {
    Theta,
    Prism,
    Pyramid,
    Butterfly,
    Bad2Wheel,
}

impl ForbiddenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ForbiddenKind::Theta => "theta",
            ForbiddenKind::Prism => "prism",
            ForbiddenKind::Pyramid => "pyramid",
            ForbiddenKind::Butterfly => "butterfly",
            ForbiddenKind::Bad2Wheel => "bad-2wheel",
        }
    }
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence that the input lies outside the class: a theta, prism,
/// pyramid, butterfly, or a 2-wheel with non-adjacent centers that is
/// neither nested nor cousin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub witness: Witness,
}

impl ForbiddenWitness {
    fn from_witness(witness: Witness) -> Option<Self> {
        let kind = match &witness {
            Witness::Pattern(e) => match e.kind {
                PatternKind::Theta => ForbiddenKind::Theta,
                PatternKind::Prism => ForbiddenKind::Prism,
                PatternKind::Pyramid => ForbiddenKind::Pyramid,
                PatternKind::Butterfly => ForbiddenKind::Butterfly,
                _ => return None,
            },
            Witness::Wheel(_) => ForbiddenKind::Bad2Wheel,
        };
        Some(ForbiddenWitness { kind, witness })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let expected = ForbiddenWitness::from_witness(self.witness.clone()).map(|w| w.kind);
        if expected != Some(self.kind) {
            return Err(Error::InvalidCertificate(format!("witness does not show a {}", self.kind)));
        }
        self.witness.validate(g)
    }
}

/// A forbidden configuration inside `G[s]`, in host vertex names.
pub(crate) fn witness_within(g: &Graph, s: VertexSet) -> Option<ForbiddenWitness> {
    let sub = g.induced_subgraph(s);
    let report = in_class_c(&sub.graph);
    let w = lift_witness(&sub, report.witness?);
    ForbiddenWitness::from_witness(w)
}

fn lift_witness(sub: &Induced, w: Witness) -> Witness {
    match w {
        Witness::Pattern(e) => Witness::Pattern(Embedding {
            kind: e.kind,
            parts: e
                .parts
                .into_iter()
                .map(|(name, vs)| (name, vs.into_iter().map(|v| sub.lift_vertex(v)).collect()))
                .collect(),
        }),
        Witness::Wheel(wc) => Witness::Wheel(WheelCert {
            hole: Hole::canonical(wc.hole.vertices().iter().map(|&v| sub.lift_vertex(v)).collect()),
            centers: sub.lift(wc.centers),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, theta};
    use alloc::vec;

    fn nested_pair() -> (Graph, SpanWheel) {
        let mut g = Graph::new(10).unwrap();
        for i in 0..8 {
            g.add_edge(i, (i + 1) % 8).unwrap();
        }
        for u in [1, 2, 7] {
            g.add_edge(8, u).unwrap();
        }
        for u in [3, 5, 6] {
            g.add_edge(9, u).unwrap();
        }
        let sw = SpanWheel::new(&g, vec![0, 1, 2, 3, 4], vec![0, 7, 6, 5, 4], vec![8, 9]).unwrap();
        (g, sw)
    }

    #[test]
    fn nested_two_wheel_is_a_two_span_wheel() {
        let (g, sw) = nested_pair();
        assert!(validate_span_wheel(&g, &sw));
        let mut swapped = sw.clone();
        swapped.centers.reverse();
        assert!(!validate_span_wheel(&g, &swapped));
    }

    #[test]
    fn square_gives_a_zero_span_wheel() {
        let g = cycle(4).unwrap();
        let c = VertexSet::singleton(0).with(2);
        let out = extract_span_wheel(&g, c, VertexSet::singleton(1), VertexSet::singleton(3)).unwrap();
        match out {
            Extraction::SpanWheel(sw) => {
                assert_eq!(sw.k(), 0);
                assert_eq!(sw.hole.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn thetas_are_surfaced() {
        let g = theta([2, 2, 2]).unwrap();
        let c: VertexSet = [2, 3, 4].iter().collect();
        let out = extract_span_wheel(&g, c, VertexSet::singleton(0), VertexSet::singleton(1)).unwrap();
        let Extraction::Forbidden(w) = out else { panic!("expected a witness") };
        assert_eq!(w.kind, ForbiddenKind::Theta);
        w.validate(&g).unwrap();

        let g = theta([3, 3, 3]).unwrap();
        let c: VertexSet = [2, 4, 6].iter().collect();
        let b: VertexSet = [1, 3, 5, 7].iter().collect();
        let Extraction::Forbidden(w) = extract_span_wheel(&g, c, VertexSet::singleton(0), b).unwrap() else {
            panic!("expected a witness")
        };
        w.validate(&g).unwrap();
    }

    #[test]
    fn preconditions_are_enforced() {
        let g = cycle(4).unwrap();
        let c = VertexSet::singleton(0).with(1);
        assert!(extract_span_wheel(&g, c, VertexSet::singleton(2), VertexSet::singleton(3)).is_err());
    }

    #[test]
    fn spiders_from_span_wheels() {
        let (g, sw) = nested_pair();
        let SijkOutcome::Spider(e) = extract_sijk(&g, &sw, 0).unwrap() else { panic!("expected a claw") };
        assert_eq!(e.kind, PatternKind::Sijk(1, 1, 1));
        e.validate(&g).unwrap();
        for seed in 0..5 {
            let (g, sw) = random_span_wheel_host(5, seed).unwrap();
            let SijkOutcome::Spider(e) = extract_sijk(&g, &sw, 1).unwrap() else { panic!("expected a spider") };
            e.validate(&g).unwrap();
        }
        assert!(extract_sijk(&g, &sw, 1).is_err());
    }

    #[test]
    fn planted_butterfly_is_reported() {
        // Center 6 sees 1, 2, 4, 5 on the hole 0..6: edges 12 and 45.
        let mut g = Graph::new(7).unwrap();
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6).unwrap();
        }
        for u in [1, 2, 4, 5] {
            g.add_edge(6, u).unwrap();
        }
        let sw = SpanWheel::new(&g, vec![0, 1, 2, 3], vec![0, 5, 4, 3], vec![6]).unwrap();
        assert!(matches!(extract_sijk(&g, &sw, 0).unwrap(), SijkOutcome::Butterfly(_)));
    }

    #[test]
    fn theorem11_examples() {
        let r = theorem11_check(&cycle(7).unwrap(), 3, 1).unwrap();
        assert!(r.inapplicable.is_none() && r.holds);
        assert_eq!((r.tw, r.bound.clone()), (Some(2), BigUint::from(249u32)));
        let r = theorem11_check(&complete(4).unwrap(), 3, 1).unwrap();
        assert!(r.inapplicable.is_some() && r.holds);
    }
}
