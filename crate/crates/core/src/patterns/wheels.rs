use alloc::format;
use alloc::vec::Vec;

use super::detect::find_pattern;
use super::{Embedding, PatternKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::holes::enumerate_holes;
use crate::path::{check_hole, Hole, Path};
use crate::vertex_set::VertexSet;

/// A hole together with centers, each having at least three rim neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WheelCert {
    pub hole: Hole,
    pub centers: VertexSet,
}

impl WheelCert {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_hole(g, self.hole.vertices())?;
        let rim = self.hole.set();
        for c in self.centers {
            if c >= g.n() {
                return Err(Error::InvalidVertex(c));
            }
            if rim.contains(c) {
                return Err(Error::InvalidCertificate(format!("center {c} lies on the rim")));
            }
            if (g.neighbors(c) & rim).len() < 3 {
                return Err(Error::InvalidCertificate(format!("center {c} has fewer than 3 rim neighbours")));
            }
        }
        Ok(())
    }
}

/// `N_H(v)`.
pub fn rim_neighbors(g: &Graph, hole: &Hole, v: usize) -> VertexSet {
    g.neighbors(v) & hole.set()
}

fn candidates(g: &Graph, rim: VertexSet) -> VertexSet {
    (g.vertices() - rim).iter().filter(|&v| (g.neighbors(v) & rim).len() >= 3).collect()
}

/// All `k`-wheels whose rim has length at most `max_hole`, grouped by hole
/// in hole enumeration order, center sets in lexicographic order.
pub fn enumerate_wheels(g: &Graph, k: usize, max_hole: usize) -> impl Iterator<Item = WheelCert> + '_ {
    enumerate_holes(g, max_hole).flat_map(move |hole| {
        let cands = candidates(g, hole.set());
        cands
            .k_subsets(k)
            .map(move |centers| WheelCert {
                hole: hole.clone(),
                centers,
            })
    })
}

/// The `u`-sectors of the rim, starting from the lowest rim position
/// adjacent to `u` and walking forward.
pub fn sectors(g: &Graph, w: &WheelCert, u: usize) -> Result<Vec<Path>> {
    if !w.centers.contains(u) {
        return Err(Error::Precondition(format!("{u} is not a center of the wheel")));
    }
    let h = &w.hole;
    let pos: Vec<usize> = (0..h.len()).filter(|&i| g.has_edge(u, h.vertices()[i])).collect();
    let mut out = Vec::with_capacity(pos.len());
    for (i, &p) in pos.iter().enumerate() {
        let q = pos[(i + 1) % pos.len()];
        out.push(Path::new_unchecked(h.arc_forward(p, q)));
    }
    Ok(out)
}

/// Rim positions (bit `i` for `hole[i]`) of the members of `s`.
fn positions(hole: &Hole, s: VertexSet) -> u64 {
    let mut m = 0u64;
    for (i, &v) in hole.vertices().iter().enumerate() {
        if s.contains(v) {
            m |= 1 << i;
        }
    }
    m
}

/// Positions on the forward arc from position `i` to position `j`.
fn arc_mask(len: usize, i: usize, j: usize) -> u64 {
    let mut m = 0u64;
    let mut p = i;
    loop {
        m |= 1 << p;
        if p == j {
            return m;
        }
        p = (p + 1) % len;
    }
}

/// Some split of the rim at two vertices puts `nu` on one side and `nv` on
/// the other.
pub fn is_nested(hole: &Hole, nu: VertexSet, nv: VertexSet) -> bool {
    let len = hole.len();
    let (mu, mv) = (positions(hole, nu), positions(hole, nv));
    for i in 0..len {
        for j in 0..len {
            if i == j {
                continue;
            }
            let one = arc_mask(len, i, j);
            let other = arc_mask(len, j, i);
            if mu & !one == 0 && mv & !other == 0 {
                return true;
            }
        }
    }
    false
}

/// Rim of length 6, one center on alternate rim vertices, the other on the
/// remaining three.
pub fn is_cube(hole: &Hole, nu: VertexSet, nv: VertexSet) -> bool {
    const EVEN: u64 = 0b010101;
    let (mu, mv) = (positions(hole, nu), positions(hole, nv));
    hole.len() == 6 && ((mu == EVEN && mv == EVEN << 1) || (mu == EVEN << 1 && mv == EVEN))
}

/// Three consecutive rim neighbours each, overlapping in two.
pub fn is_cousin(hole: &Hole, nu: VertexSet, nv: VertexSet) -> bool {
    let len = hole.len();
    let (mu, mv) = (positions(hole, nu), positions(hole, nv));
    let triple = |p: usize| arc_mask(len, p, (p + 2) % len);
    (0..len).any(|p| mu == triple(p) && (mv == triple((p + 1) % len) || mv == triple((p + len - 1) % len)))
}

/// Exactly four rim neighbours `a, b, c, d` with `ab, cd` edges and `bc, da`
/// non-edges.
pub fn is_butterfly_neighborhood(g: &Graph, nb: VertexSet) -> bool {
    if nb.len() != 4 {
        return false;
    }
    let v = nb.to_vec();
    const PERMS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    // Each perm fixes a perfect matching {ab, cd}; the two ways of closing
    // the 4-cycle decide which pairs play bc and da.
    PERMS.iter().any(|p| {
        let (a, b, c, d) = (v[p[0]], v[p[1]], v[p[2]], v[p[3]]);
        g.has_edge(a, b)
            && g.has_edge(c, d)
            && ((!g.has_edge(b, c) && !g.has_edge(d, a)) || (!g.has_edge(b, d) && !g.has_edge(c, a)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoWheelClass {
    Cube,
    Cousin,
    Nested,
    Other,
}

impl TwoWheelClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoWheelClass::Cube => "cube",
            TwoWheelClass::Cousin => "cousin",
            TwoWheelClass::Nested => "nested",
            TwoWheelClass::Other => "other",
        }
    }
}

/// Classifies a 2-wheel with non-adjacent centers; the first match in the
/// order cube, cousin, nested wins.
pub fn classify_2wheel(g: &Graph, w: &WheelCert) -> Result<TwoWheelClass> {
    let c = w.centers.to_vec();
    if c.len() != 2 {
        return Err(Error::Precondition(format!("expected 2 centers, got {}", c.len())));
    }
    if g.has_edge(c[0], c[1]) {
        return Err(Error::Precondition(format!("centers {} and {} are adjacent", c[0], c[1])));
    }
    let nu = rim_neighbors(g, &w.hole, c[0]);
    let nv = rim_neighbors(g, &w.hole, c[1]);
    Ok(if is_cube(&w.hole, nu, nv) {
        TwoWheelClass::Cube
    } else if is_cousin(&w.hole, nu, nv) {
        TwoWheelClass::Cousin
    } else if is_nested(&w.hole, nu, nv) {
        TwoWheelClass::Nested
    } else {
        TwoWheelClass::Other
    })
}

/// A certificate of non-membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Pattern(Embedding),
    Wheel(WheelCert),
}

impl Witness {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Witness::Pattern(e) => e.validate(g),
            Witness::Wheel(w) => {
                w.validate(g)?;
                match classify_2wheel(g, w)? {
                    TwoWheelClass::Nested | TwoWheelClass::Cousin => {
                        Err(Error::InvalidCertificate("2-wheel is nested or cousin".into()))
                    }
                    _ => Ok(()),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Non-adjacent-center 2-wheels, hole by hole.
pub(crate) fn two_wheels(g: &Graph) -> impl Iterator<Item = WheelCert> + '_ {
    enumerate_wheels(g, 2, g.n()).filter(move |w| {
        let c = w.centers.to_vec();
        !g.has_edge(c[0], c[1])
    })
}

/// Membership in the class of (theta, prism, pyramid, butterfly)-free
/// graphs whose non-adjacent-center 2-wheels are all nested or cousin.
pub fn in_class_c(g: &Graph) -> ClassReport {
    for kind in [PatternKind::Theta, PatternKind::Prism, PatternKind::Pyramid, PatternKind::Butterfly] {
        if let Some(e) = find_pattern(g, kind) {
            return ClassReport {
                member: false,
                witness: Some(Witness::Pattern(e)),
            };
        }
    }
    for w in two_wheels(g) {
        match classify_2wheel(g, &w) {
            Ok(TwoWheelClass::Nested | TwoWheelClass::Cousin) => {}
            _ => {
                return ClassReport {
                    member: false,
                    witness: Some(Witness::Wheel(w)),
                }
            }
        }
    }
    ClassReport {
        member: true,
        witness: None,
    }
}
