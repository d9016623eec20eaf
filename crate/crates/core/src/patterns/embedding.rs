use alloc::string::String;
use alloc::vec::Vec;

use super::wheels::{is_butterfly_neighborhood, is_cousin, is_cube, is_nested, rim_neighbors};
use super::{tag_error, PatternKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::path::{check_hole, check_path, Hole};
use crate::vertex_set::VertexSet;

/// A pattern occurrence: the kind plus named vertex lists.
///
/// Part names by kind:
/// * theta: `a`, `b`, `P1`, `P2`, `P3` (each path runs from `a` to `b`);
/// * pyramid: `a`, `b` (the triangle `b1 b2 b3`), `P1`..`P3` from `a` to `bi`;
/// * prism: `a`, `b` (two triangles), `P1`..`P3` from `ai` to `bi`;
/// * square, even-hole: `hole`;
/// * wheel, even-wheel, butterfly: `hole`, `center`;
/// * cube, cousin-wheel, nested-2wheel: `hole`, `centers`;
/// * triangle, clique: `clique`;
/// * sijk: `center`, `L1`, `L2`, `L3` (each leg starts at the center);
/// * pan, cap: `hole`, `vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub kind: PatternKind,
    pub parts: Vec<(String, Vec<usize>)>,
}

impl Embedding {
    pub fn new(kind: PatternKind) -> Self {
        Embedding { kind, parts: Vec::new() }
    }

    pub fn with(mut self, name: &str, verts: Vec<usize>) -> Self {
        self.parts.push((name.into(), verts));
        self
    }

    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    fn need(&self, name: &str) -> Result<&[usize]> {
        self.part(name).ok_or_else(|| tag_error(self.kind, alloc::format!("missing part {name}")))
    }

    fn need_one(&self, name: &str) -> Result<usize> {
        match self.need(name)? {
            [v] => Ok(*v),
            _ => Err(tag_error(self.kind, alloc::format!("part {name} must be a single vertex"))),
        }
    }

    /// Every vertex mentioned by some part.
    pub fn vertices(&self) -> VertexSet {
        self.parts.iter().flat_map(|(_, v)| v.iter()).collect()
    }

    /// Re-checks the occurrence against `g` from the definition alone.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in self.parts.iter().flat_map(|(_, v)| v.iter()) {
            if v >= g.n() {
                return Err(Error::InvalidVertex(v));
            }
        }
        let kind = self.kind;
        let fail = |m: &str| Err(tag_error(kind, m));
        match kind {
            PatternKind::Theta => {
                let (a, b) = (self.need_one("a")?, self.need_one("b")?);
                let paths = self.three_paths()?;
                for p in &paths {
                    if p.first() != Some(&a) || p.last() != Some(&b) {
                        return fail("every path must run from a to b");
                    }
                    if p.len() < 3 {
                        return fail("every path needs length at least 2");
                    }
                }
                self.paths_are_exact(g, &paths, &[], true)
            }
            PatternKind::Pyramid => {
                let a = self.need_one("a")?;
                let tri = self.need("b")?;
                if tri.len() != 3 {
                    return fail("b must be a triangle");
                }
                let paths = self.three_paths()?;
                let mut long = 0;
                for (i, p) in paths.iter().enumerate() {
                    if p.first() != Some(&a) || p.last() != Some(&tri[i]) {
                        return fail("path Pi must run from a to bi");
                    }
                    if p.len() < 2 {
                        return fail("paths need length at least 1");
                    }
                    long += (p.len() >= 3) as usize;
                }
                if long < 2 {
                    return fail("two paths need length at least 2");
                }
                let extra = [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])];
                self.paths_are_exact(g, &paths, &extra, true)
            }
            PatternKind::Prism => {
                let ta = self.need("a")?;
                let tb = self.need("b")?;
                if ta.len() != 3 || tb.len() != 3 {
                    return fail("a and b must be triangles");
                }
                let paths = self.three_paths()?;
                for (i, p) in paths.iter().enumerate() {
                    if p.first() != Some(&ta[i]) || p.last() != Some(&tb[i]) {
                        return fail("path Pi must run from ai to bi");
                    }
                    if p.len() < 2 {
                        return fail("paths need length at least 1");
                    }
                }
                let extra = [
                    (ta[0], ta[1]),
                    (ta[1], ta[2]),
                    (ta[0], ta[2]),
                    (tb[0], tb[1]),
                    (tb[1], tb[2]),
                    (tb[0], tb[2]),
                ];
                self.paths_are_exact(g, &paths, &extra, false)
            }
            PatternKind::Square | PatternKind::EvenHole => {
                let hole = self.hole(g)?;
                if kind == PatternKind::Square && hole.len() != 4 {
                    return fail("a square is a hole of length 4");
                }
                if hole.len() % 2 != 0 {
                    return fail("hole length is odd");
                }
                Ok(())
            }
            PatternKind::Wheel | PatternKind::EvenWheel | PatternKind::Butterfly => {
                let hole = self.hole(g)?;
                let c = self.need_one("center")?;
                if hole.set().contains(c) {
                    return fail("center lies on the rim");
                }
                let nb = rim_neighbors(g, &hole, c);
                if nb.len() < 3 {
                    return fail("center has fewer than 3 rim neighbours");
                }
                match kind {
                    PatternKind::EvenWheel if nb.len() % 2 != 0 => fail("center has an odd number of rim neighbours"),
                    PatternKind::Butterfly if !is_butterfly_neighborhood(g, nb) => {
                        fail("rim neighbourhood is not two edges joined by two non-edges")
                    }
                    _ => Ok(()),
                }
            }
            PatternKind::Cube | PatternKind::CousinWheel | PatternKind::Nested2Wheel => {
                let hole = self.hole(g)?;
                let (u, v) = match self.need("centers")? {
                    [u, v] => (*u, *v),
                    _ => return fail("exactly two centers expected"),
                };
                if u == v || hole.set().contains(u) || hole.set().contains(v) {
                    return fail("centers must be distinct and off the rim");
                }
                if g.has_edge(u, v) {
                    return fail("centers are adjacent");
                }
                let (nu, nv) = (rim_neighbors(g, &hole, u), rim_neighbors(g, &hole, v));
                if nu.len() < 3 || nv.len() < 3 {
                    return fail("a center has fewer than 3 rim neighbours");
                }
                let ok = match kind {
                    PatternKind::Cube => is_cube(&hole, nu, nv),
                    PatternKind::CousinWheel => is_cousin(&hole, nu, nv),
                    _ => is_nested(&hole, nu, nv),
                };
                if ok {
                    Ok(())
                } else {
                    fail("rim neighbourhoods do not match the definition")
                }
            }
            PatternKind::Triangle | PatternKind::Clique(_) => {
                let t = if let PatternKind::Clique(t) = kind { t } else { 3 };
                let c = self.need("clique")?;
                let set: VertexSet = c.iter().collect();
                if c.len() != t || set.len() != t {
                    return fail("wrong number of distinct vertices");
                }
                if !g.is_clique(set) {
                    return fail("not a clique");
                }
                Ok(())
            }
            PatternKind::Sijk(i, j, k) => {
                let c = self.need_one("center")?;
                let legs = [self.need("L1")?, self.need("L2")?, self.need("L3")?];
                let mut verts = VertexSet::singleton(c);
                let mut edges = Vec::new();
                for (leg, &len) in legs.iter().zip(&[i, j, k]) {
                    if leg.first() != Some(&c) || leg.len() != len + 1 {
                        return fail("each leg must start at the center with the prescribed length");
                    }
                    for w in leg.windows(2) {
                        edges.push((w[0], w[1]));
                    }
                    for &v in &leg[1..] {
                        if verts.contains(v) {
                            return fail("legs overlap");
                        }
                        verts.insert(v);
                    }
                }
                exact_edges(g, verts, &edges).map_err(|m| tag_error(kind, m))
            }
            PatternKind::Pan | PatternKind::Cap => {
                let hole = self.hole(g)?;
                let v = self.need_one("vertex")?;
                if hole.set().contains(v) {
                    return fail("vertex lies on the hole");
                }
                let nb = rim_neighbors(g, &hole, v);
                let ok = match kind {
                    PatternKind::Pan => nb.len() == 1,
                    _ => nb.len() == 2 && {
                        let w = nb.to_vec();
                        g.has_edge(w[0], w[1])
                    },
                };
                if ok {
                    Ok(())
                } else {
                    fail("wrong attachment to the hole")
                }
            }
        }
    }

    fn hole(&self, g: &Graph) -> Result<Hole> {
        let cyc = self.need("hole")?;
        check_hole(g, cyc).map_err(|e| tag_error(self.kind, alloc::format!("{e}")))?;
        Ok(Hole::canonical(cyc.to_vec()))
    }

    fn three_paths(&self) -> Result<[&[usize]; 3]> {
        Ok([self.need("P1")?, self.need("P2")?, self.need("P3")?])
    }

    /// The paths are vertex-disjoint apart from a shared first vertex
    /// (when `shared_start`) and a shared last vertex (theta only), and the
    /// union induces exactly the path edges plus `extra`.
    fn paths_are_exact(&self, g: &Graph, paths: &[&[usize]; 3], extra: &[(usize, usize)], shared_start: bool) -> Result<()> {
        let kind = self.kind;
        let shared_end = kind == PatternKind::Theta;
        let mut verts = VertexSet::EMPTY;
        let mut edges = Vec::from(extra);
        for (i, p) in paths.iter().enumerate() {
            check_path(g, p).map_err(|e| tag_error(kind, alloc::format!("{e}")))?;
            for w in p.windows(2) {
                edges.push((w[0], w[1]));
            }
            for (pos, &v) in p.iter().enumerate() {
                let shared = (pos == 0 && shared_start) || (pos + 1 == p.len() && shared_end);
                if shared && i > 0 {
                    continue;
                }
                if verts.contains(v) {
                    return Err(tag_error(kind, "paths are not disjoint"));
                }
                verts.insert(v);
            }
        }
        exact_edges(g, verts, &edges).map_err(|m| tag_error(kind, m))
    }
}

/// `G[verts]` has exactly the listed edges.
fn exact_edges(g: &Graph, verts: VertexSet, edges: &[(usize, usize)]) -> core::result::Result<(), &'static str> {
    let mut want = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err("a prescribed edge is missing");
        }
        want.push((u.min(v), u.max(v)));
    }
    want.sort_unstable();
    want.dedup();
    if g.edges_within(verts) != want.len() {
        return Err("the vertex set induces extra edges");
    }
    Ok(())
}
