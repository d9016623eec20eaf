//! Named graphs and families with documented vertex numbering.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashSet;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_code, canonical_form};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{find_pattern, PatternKind};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Largest order accepted by [`enumerate_small_graphs`].
pub const SMALL_GRAPHS_MAX: usize = 9;

/// Largest order produced by [`extend_connected`].
pub const EXTEND_MAX: usize = 16;

fn param(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn budget(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Incremental builder used by the constructions below.
struct Builder {
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { edges: Vec::new(), n }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// A path from `u` to `v` with `len` edges through fresh vertices.
    fn path(&mut self, u: usize, v: usize, len: usize) -> Vec<usize> {
        let mut seq = vec![u];
        for _ in 1..len {
            let w = self.fresh();
            seq.push(w);
        }
        seq.push(v);
        for w in seq.windows(2) {
            self.edge(w[0], w[1]);
        }
        seq
    }

    fn finish(self, name: String) -> Result<Graph> {
        budget(self.n)?;
        Ok(Graph::from_edges(self.n, &self.edges)?.with_name(name))
    }
}

/// `C_n` on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("a cycle needs at least 3 vertices"));
    }
    let mut b = Builder::new(n);
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    b.finish(format!("cycle:{n}"))
}

/// The path on `n` vertices `0..n`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(param("a path needs at least 1 vertex"));
    }
    let mut b = Builder::new(n);
    for i in 1..n {
        b.edge(i - 1, i);
    }
    b.finish(format!("path:{n}"))
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut b = Builder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.edge(u, v);
        }
    }
    b.finish(format!("complete:{n}"))
}

/// `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn kst(s: usize, t: usize) -> Result<Graph> {
    let mut b = Builder::new(s + t);
    for u in 0..s {
        for v in s..s + t {
            b.edge(u, v);
        }
    }
    b.finish(format!("kst:{s},{t}"))
}

/// Hole `0..6`, `6` adjacent to `0, 2, 4` and `7` adjacent to `1, 3, 5`.
pub fn cube() -> Graph {
    let mut b = Builder::new(8);
    for i in 0..6 {
        b.edge(i, (i + 1) % 6);
    }
    for i in [0, 2, 4] {
        b.edge(6, i);
        b.edge(7, i + 1);
    }
    b.finish("cube".into()).expect("fixed size")
}

/// Ends `a = 0` and `b = 1`; interiors of the three paths follow in order.
pub fn theta(p: [usize; 3]) -> Result<Graph> {
    if p.iter().any(|&l| l < 2) {
        return Err(param("theta paths need length at least 2"));
    }
    let mut b = Builder::new(2);
    for &l in &p {
        b.path(0, 1, l);
    }
    b.finish(format!("theta:{},{},{}", p[0], p[1], p[2]))
}

/// Apex `0`, triangle `1, 2, 3`; path `i` joins `0` to `i + 1`.
pub fn pyramid(p: [usize; 3]) -> Result<Graph> {
    if p.contains(&0) || p.iter().filter(|&&l| l >= 2).count() < 2 {
        return Err(param("pyramid paths need length at least 1, two of them at least 2"));
    }
    let mut b = Builder::new(4);
    b.edge(1, 2);
    b.edge(2, 3);
    b.edge(1, 3);
    for (i, &l) in p.iter().enumerate() {
        b.path(0, i + 1, l);
    }
    b.finish(format!("pyramid:{},{},{}", p[0], p[1], p[2]))
}

/// Triangles `0, 1, 2` and `3, 4, 5`; path `i` joins `i` to `i + 3`.
pub fn prism(p: [usize; 3]) -> Result<Graph> {
    if p.contains(&0) {
        return Err(param("prism paths need length at least 1"));
    }
    let mut b = Builder::new(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        b.edge(u, v);
    }
    for (i, &l) in p.iter().enumerate() {
        b.path(i, i + 3, l);
    }
    b.finish(format!("prism:{},{},{}", p[0], p[1], p[2]))
}

/// Center `0`; the legs follow in order, each walked outward.
pub fn sijk(i: usize, j: usize, k: usize) -> Result<Graph> {
    let mut b = Builder::new(1);
    for len in [i, j, k] {
        let mut prev = 0;
        for _ in 0..len {
            let w = b.fresh();
            b.edge(prev, w);
            prev = w;
        }
    }
    b.finish(format!("sijk:{i},{j},{k}"))
}

/// Hole `0..n` plus center `n` adjacent to `nbrs`.
pub fn wheel(n: usize, nbrs: &[usize]) -> Result<Graph> {
    if n < 4 {
        return Err(param("a wheel rim needs at least 4 vertices"));
    }
    let set: VertexSet = nbrs.iter().collect();
    if nbrs.iter().any(|&v| v >= n) || set.len() < 3 {
        return Err(param("a wheel center needs at least 3 distinct rim neighbours"));
    }
    let mut b = Builder::new(n + 1);
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    for v in set {
        b.edge(n, v);
    }
    let list: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    b.finish(format!("wheel:{n}:{}", list.join(",")))
}

/// The wall of height `r` and width `c`: rows `0..=r` of `2c + 2` vertices,
/// vertical edges from row `i` column `j` down when `j ≡ i (mod 2)`, then
/// vertices of degree at most one pruned. Survivors are numbered row by row.
pub fn wall(r: usize, c: usize) -> Result<Graph> {
    if r == 0 || c == 0 {
        return Err(param("a wall needs height and width at least 1"));
    }
    let w = 2 * c + 2;
    let rows = r + 1;
    let id = |i: usize, j: usize| i * w + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..w {
            if j + 1 < w {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows && j % 2 == i % 2 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let total = rows * w;
    let mut alive = vec![true; total];
    loop {
        let mut deg = vec![0usize; total];
        for &(u, v) in &edges {
            if alive[u] && alive[v] {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let dead: Vec<usize> = (0..total).filter(|&v| alive[v] && deg[v] <= 1).collect();
        if dead.is_empty() {
            break;
        }
        for v in dead {
            alive[v] = false;
        }
    }
    let mut label = vec![usize::MAX; total];
    let mut n = 0;
    for v in 0..total {
        if alive[v] {
            label[v] = n;
            n += 1;
        }
    }
    budget(n)?;
    let kept: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(u, v)| alive[u] && alive[v])
        .map(|(u, v)| (label[u], label[v]))
        .collect();
    Ok(Graph::from_edges(n, &kept)?.with_name(format!("wall:{r},{c}")))
}

/// Every edge replaced by a path with `times` new interior vertices; new
/// vertices are appended edge by edge in edge order, walking from the
/// smaller end.
pub fn subdivide(g: &Graph, times: usize) -> Result<Graph> {
    budget(g.n() + g.edge_count() * times)?;
    let mut b = Builder::new(g.n());
    for (u, v) in g.edges() {
        b.path(u, v, times + 1);
    }
    let name = format!("subdivide:{times}:{}", g.name().unwrap_or("graph"));
    b.finish(name)
}

/// Vertex `i` is the `i`-th edge of `g` in edge order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    budget(edges.len())?;
    let mut b = Builder::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, c) = edges[i];
            let (d, e) = edges[j];
            if a == d || a == e || c == d || c == e {
                b.edge(i, j);
            }
        }
    }
    b.finish(format!("line:{}", g.name().unwrap_or("graph")))
}

/// The k-ladder: a left rail `l_0..l_k` (vertices `0..=k`), a right rail
/// `r_0..r_{k-1}` (vertices `k+1..2k+1`) and rungs `a_i b_i` with `a_i =
/// 2k+1+i`, `b_i = 3k+1+i`. Each `a_i` closes a triangle on `l_i l_{i+1}`
/// and each `b_i` hangs from `r_i`.
///
/// Every hole crosses exactly two rungs `i < j` and has length
/// `2(j - i) + 5`, so the graph is even-hole-free; its only triangles are
/// the `a_i l_i l_{i+1}`, so it is `K_4`-free. Each choice of one endpoint
/// per rung is a minimal separator between the two rails.
pub fn ladder(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(param("a ladder needs at least one rung"));
    }
    let mut b = Builder::new(4 * k + 1);
    let (l, r, a, bb) = (0, k + 1, 2 * k + 1, 3 * k + 1);
    for i in 0..k {
        b.edge(l + i, l + i + 1);
        if i + 1 < k {
            b.edge(r + i, r + i + 1);
        }
        b.edge(a + i, l + i);
        b.edge(a + i, l + i + 1);
        b.edge(bb + i, r + i);
        b.edge(a + i, bb + i);
    }
    let g = b.finish(format!("ladder:{k}"))?;
    reject_if_present(&g, &[PatternKind::EvenHole, PatternKind::Clique(4)])?;
    Ok(g)
}

/// `G(n, p)` from ChaCha8 seeded with `seed_from_u64(seed)`: one `u64` draw
/// per pair `u < v` in lexicographic order, edge iff the draw is below
/// `p · 2^64`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    budget(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(param("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = p * 18_446_744_073_709_551_616.0;
    let mut b = Builder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let draw = rng.next_u64();
            if p >= 1.0 || (draw as f64) < threshold {
                b.edge(u, v);
            }
        }
    }
    b.finish(format!("random:{n},{p},{seed}"))
}

/// All connected graphs on `n` vertices, one per isomorphism class, in
/// canonical form and sorted by canonical code.
///
/// Each class on `n` vertices is reached by adding a vertex to a connected
/// graph on `n - 1` vertices (deleting a non-cut vertex inverts this), and
/// duplicates are removed by canonical code.
pub fn enumerate_small_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > SMALL_GRAPHS_MAX {
        return Err(Error::ScaleLimit {
            op: "enumerate_small_graphs",
            n,
            max: SMALL_GRAPHS_MAX,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Graph::new(1)?];
    for _ in 2..=n {
        layer = extend_connected(&layer, |_| true)?;
    }
    for (i, g) in layer.iter_mut().enumerate() {
        g.set_name(Some(format!("small:{n}:{i}")));
    }
    Ok(layer)
}

/// Every graph obtained from one in `layer` by adding a vertex adjacent to
/// a non-empty set, one per isomorphism class, kept when `keep` accepts it;
/// in canonical form and sorted by canonical code.
///
/// All graphs of `layer` must have the same order. When `layer` holds every
/// connected graph of a class closed under induced subgraphs on `m`
/// vertices, the result holds every connected graph of that class on
/// `m + 1` vertices.
pub fn extend_connected(layer: &[Graph], keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let Some(m) = layer.first().map(|g| g.n() + 1) else {
        return Ok(Vec::new());
    };
    if layer.iter().any(|g| g.n() + 1 != m) {
        return Err(param("graphs of one order expected"));
    }
    if m > EXTEND_MAX {
        return Err(Error::ScaleLimit {
            op: "extend_connected",
            n: m,
            max: EXTEND_MAX,
        });
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut next = Vec::new();
    for g in layer {
        for nbrs in 1u64..(1 << (m - 1)) {
            let mut h = Graph::new(m)?;
            for (u, v) in g.edges() {
                h.add_edge(u, v)?;
            }
            for u in VertexSet::from_bits(nbrs) {
                h.add_edge(u, m - 1)?;
            }
            let code = canonical_code(&h);
            if seen.insert(code.clone()) && keep(&h) {
                next.push((code, h));
            }
        }
    }
    next.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(next.into_iter().map(|(_, h)| canonical_form(&h)).collect())
}

/// A named family with its parameters, as written on the command line:
/// `cube`, `cycle:N`, `path:N`, `complete:N`, `kst:S,T`, `theta:P,Q,R`,
/// `pyramid:P,Q,R`, `prism:P,Q,R`, `sijk:I,J,K`, `wheel:N:V,..`, `wall:R,C`,
/// `turtle:K,S`, `ladder:K`, `subdivide:T:SPEC` and `line:SPEC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cube,
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Kst(usize, usize),
    Theta([usize; 3]),
    Pyramid([usize; 3]),
    Prism([usize; 3]),
    Sijk(usize, usize, usize),
    Wheel(usize, Vec<usize>),
    Wall(usize, usize),
    Turtle(usize, usize),
    Ladder(usize),
    Subdivide(usize, alloc::boxed::Box<FamilySpec>),
    Line(alloc::boxed::Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Cube => Ok(cube()),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Kst(s, t) => kst(*s, *t),
            FamilySpec::Theta(p) => theta(*p),
            FamilySpec::Pyramid(p) => pyramid(*p),
            FamilySpec::Prism(p) => prism(*p),
            FamilySpec::Sijk(i, j, k) => sijk(*i, *j, *k),
            FamilySpec::Wheel(n, nb) => wheel(*n, nb),
            FamilySpec::Wall(r, c) => wall(*r, *c),
            FamilySpec::Turtle(k, s) => turtle(*k, *s),
            FamilySpec::Ladder(k) => ladder(*k),
            FamilySpec::Subdivide(t, inner) => subdivide(&inner.build()?, *t),
            FamilySpec::Line(inner) => line_graph(&inner.build()?),
        }
    }
}

fn numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| param(format!("not a count: {t:?}"))))
        .collect()
}

fn exactly<const N: usize>(head: &str, s: Option<&str>) -> Result<[usize; N]> {
    let v = numbers(s.ok_or_else(|| param(format!("{head} needs {N} parameters")))?)?;
    v.try_into().map_err(|_| param(format!("{head} needs {N} parameters")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        Ok(match head {
            "cube" if rest.is_none() => FamilySpec::Cube,
            "cycle" => FamilySpec::Cycle(exactly::<1>(head, rest)?[0]),
            "path" => FamilySpec::Path(exactly::<1>(head, rest)?[0]),
            "complete" => FamilySpec::Complete(exactly::<1>(head, rest)?[0]),
            "kst" => {
                let [s, t] = exactly(head, rest)?;
                FamilySpec::Kst(s, t)
            }
            "theta" => FamilySpec::Theta(exactly(head, rest)?),
            "pyramid" => FamilySpec::Pyramid(exactly(head, rest)?),
            "prism" => FamilySpec::Prism(exactly(head, rest)?),
            "sijk" => {
                let [i, j, k] = exactly(head, rest)?;
                FamilySpec::Sijk(i, j, k)
            }
            "wheel" => {
                let rest = rest.ok_or_else(|| param("wheel needs N:V,.."))?;
                let (n, nb) = rest.split_once(':').ok_or_else(|| param("wheel needs N:V,.."))?;
                FamilySpec::Wheel(exactly::<1>(head, Some(n))?[0], numbers(nb)?)
            }
            "wall" => {
                let [r, c] = exactly(head, rest)?;
                FamilySpec::Wall(r, c)
            }
            "turtle" => {
                let [k, sub] = exactly(head, rest)?;
                FamilySpec::Turtle(k, sub)
            }
            "ladder" => FamilySpec::Ladder(exactly::<1>(head, rest)?[0]),
            "subdivide" => {
                let rest = rest.ok_or_else(|| param("subdivide needs T:SPEC"))?;
                let (t, inner) = rest.split_once(':').ok_or_else(|| param("subdivide needs T:SPEC"))?;
                FamilySpec::Subdivide(exactly::<1>(head, Some(t))?[0], alloc::boxed::Box::new(inner.parse()?))
            }
            "line" => {
                let inner = rest.ok_or_else(|| param("line needs SPEC"))?;
                FamilySpec::Line(alloc::boxed::Box::new(inner.parse()?))
            }
            _ => return Err(param(format!("unknown family {s:?}"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tri = |f: &mut fmt::Formatter<'_>, h: &str, p: &[usize; 3]| write!(f, "{h}:{},{},{}", p[0], p[1], p[2]);
        match self {
            FamilySpec::Cube => write!(f, "cube"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Kst(s, t) => write!(f, "kst:{s},{t}"),
            FamilySpec::Theta(p) => tri(f, "theta", p),
            FamilySpec::Pyramid(p) => tri(f, "pyramid", p),
            FamilySpec::Prism(p) => tri(f, "prism", p),
            FamilySpec::Sijk(i, j, k) => write!(f, "sijk:{i},{j},{k}"),
            FamilySpec::Wheel(n, nb) => {
                let list: Vec<String> = nb.iter().map(|v| v.to_string()).collect();
                write!(f, "wheel:{n}:{}", list.join(","))
            }
            FamilySpec::Wall(r, c) => write!(f, "wall:{r},{c}"),
            FamilySpec::Turtle(k, s) => write!(f, "turtle:{k},{s}"),
            FamilySpec::Ladder(k) => write!(f, "ladder:{k}"),
            FamilySpec::Subdivide(t, g) => write!(f, "subdivide:{t}:{g}"),
            FamilySpec::Line(g) => write!(f, "line:{g}"),
        }
    }
}

/// The k-turtle: an outer cycle made of a left arc `0..m`, a right arc
/// `m..2m`, a top vertex `2m` joining the arcs' first vertices and a bottom
/// vertex `2m + 1` joining their last ones, with `m = k(2d + 1)` and
/// `d = subdiv + 1`. Rung `i` is `a_i b_i` with `a_i = 2m + 2 + 2i` and
/// `b_i = a_i + 1`; `a_i` sees left arc positions `p, p + d, p + 2d` for
/// `p = i(2d + 1)` and `b_i` the same positions on the right arc.
///
/// One endpoint per rung together with the top and bottom vertices
/// separates the two arcs minimally. The construction is returned only
/// when the detectors find neither a theta nor a triangle.
pub fn turtle(k: usize, subdiv: usize) -> Result<Graph> {
    if k == 0 {
        return Err(param("a turtle needs at least one rung"));
    }
    let d = subdiv + 1;
    let m = k * (2 * d + 1);
    let n = 2 * m + 2 * k + 2;
    budget(n)?;
    let mut b = Builder::new(n);
    let (top, bottom) = (2 * m, 2 * m + 1);
    for i in 0..m - 1 {
        b.edge(i, i + 1);
        b.edge(m + i, m + i + 1);
    }
    b.edge(top, 0);
    b.edge(top, m);
    b.edge(bottom, m - 1);
    b.edge(bottom, 2 * m - 1);
    for i in 0..k {
        let a = 2 * m + 2 + 2 * i;
        let p = i * (2 * d + 1);
        for t in 0..3 {
            b.edge(a, p + t * d);
            b.edge(a + 1, m + p + t * d);
        }
        b.edge(a, a + 1);
    }
    let g = b.finish(format!("turtle:{k},{subdiv}"))?;
    reject_if_present(&g, &[PatternKind::Theta, PatternKind::Triangle])?;
    Ok(g)
}

/// The least subdivision accepted by [`turtle`] for `k` rungs.
pub fn min_turtle_subdiv(k: usize) -> Result<usize> {
    let mut last = param("no subdivision fits the vertex budget");
    for s in 0.. {
        match turtle(k, s) {
            Ok(_) => return Ok(s),
            Err(Error::TooManyVertices { .. }) => return Err(last),
            Err(e) => last = e,
        }
    }
    unreachable!()
}

fn reject_if_present(g: &Graph, kinds: &[PatternKind]) -> Result<()> {
    for &kind in kinds {
        if let Some(e) = find_pattern(g, kind) {
            let verts: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
            return Err(param(format!(
                "{} contains a {kind} on {{{}}}",
                g.name().unwrap_or("graph"),
                verts.join(",")
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::separators::separator_sets;

    fn hypercube() -> Graph {
        let mut g = Graph::new(8).unwrap();
        for v in 0..8usize {
            for bit in 0..3 {
                let u = v ^ (1 << bit);
                if v < u {
                    g.add_edge(v, u).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn cube_is_the_hypercube() {
        let g = cube();
        assert_eq!((g.n(), g.edge_count()), (8, 12));
        assert!(is_isomorphic(&g, &hypercube()));
        assert!(find_pattern(&g, PatternKind::Triangle).is_none());
        assert!(find_pattern(&g, PatternKind::Square).is_some());
    }

    #[test]
    fn small_instances() {
        assert!(is_isomorphic(&theta([2, 2, 2]).unwrap(), &kst(2, 3).unwrap()));
        assert!(is_isomorphic(&sijk(0, 0, 4).unwrap(), &path(5).unwrap()));
        assert!(is_isomorphic(&line_graph(&complete(3).unwrap()).unwrap(), &complete(3).unwrap()));
        assert!(is_isomorphic(&subdivide(&complete(2).unwrap(), 1).unwrap(), &path(3).unwrap()));
        assert!(is_isomorphic(&wall(1, 1).unwrap(), &cycle(6).unwrap()));
        assert!(theta([1, 2, 2]).is_err());
        assert!(pyramid([1, 1, 2]).is_err());
    }

    #[test]
    fn line_graph_of_subdivided_wall() {
        let g = line_graph(&subdivide(&wall(2, 2).unwrap(), 1).unwrap()).unwrap();
        assert!(find_pattern(&g, PatternKind::Sijk(1, 1, 1)).is_none());
        assert!(find_pattern(&g, PatternKind::Clique(4)).is_none());
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(5, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(random_graph(5, 1.0, 3).unwrap().edge_count(), 10);
        assert_eq!(random_graph(10, 0.5, 42).unwrap(), random_graph(10, 0.5, 42).unwrap());
    }

    #[test]
    fn small_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_small_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
        assert!(enumerate_small_graphs(SMALL_GRAPHS_MAX + 1).is_err());
    }

    #[test]
    fn extensions_of_a_hereditary_class_stay_complete() {
        let free = |g: &Graph| find_pattern(g, PatternKind::Triangle).is_none();
        let five: Vec<Graph> = enumerate_small_graphs(5).unwrap().into_iter().filter(free).collect();
        let grown = extend_connected(&five, free).unwrap();
        let direct: Vec<Graph> = enumerate_small_graphs(6).unwrap().into_iter().filter(free).collect();
        assert_eq!(grown.len(), direct.len());
        for (a, b) in grown.iter().zip(&direct) {
            assert_eq!(a.rows(), b.rows());
        }
    }

    #[test]
    fn ladders_and_turtles_have_many_separators() {
        for k in 2..=4 {
            assert!(separator_sets(&ladder(k).unwrap()).len() >= 1 << k);
            assert!(separator_sets(&turtle(k, 1).unwrap()).len() >= 1 << k);
        }
        assert!(turtle(2, 0).is_err());
        assert_eq!(min_turtle_subdiv(3).unwrap(), 1);
    }

    #[test]
    fn family_specs_round_trip() {
        for s in ["cube", "kst:2,4", "wheel:6:0,2,4", "line:subdivide:1:wall:2,2", "turtle:2,1", "sijk:1,2,3"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
        assert!("cube:3".parse::<FamilySpec>().is_err());
        assert!("kst:2".parse::<FamilySpec>().is_err());
    }
}
