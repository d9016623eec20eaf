use alloc::vec;
use alloc::vec::Vec;

use super::wheels::{is_butterfly_neighborhood, is_cousin, is_cube, is_nested, two_wheels};
use super::{Embedding, PatternKind};
use crate::clique::find_clique;
use crate::graph::Graph;
use crate::holes::enumerate_holes;
use crate::path::Hole;
use crate::vertex_set::VertexSet;

/// Calls `f` on every chordless path from `a` to `b` whose interior lies in
/// `allowed`, in lexicographic order of the vertex sequences. Returns `true`
/// as soon as `f` does.
pub fn for_each_induced_path(
    g: &Graph,
    a: usize,
    b: usize,
    allowed: VertexSet,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let mut path = vec![a];
    if a == b {
        return f(&path);
    }
    extend(g, b, allowed - VertexSet::singleton(a) - VertexSet::singleton(b), &mut path, VertexSet::singleton(a), f)
}

fn extend(
    g: &Graph,
    b: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    // Every earlier vertex adjacent to b would have closed the path already.
    if g.has_edge(last, b) {
        path.push(b);
        let stop = f(path);
        path.pop();
        return stop;
    }
    let next_blocked = blocked | g.closed_neighbors(last);
    for w in (g.neighbors(last) & allowed) - blocked {
        path.push(w);
        let stop = extend(g, b, allowed, path, next_blocked, f);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

struct Branch {
    seq: Vec<usize>,
    inner: VertexSet,
    reach: VertexSet,
}

impl Branch {
    fn new(g: &Graph, seq: &[usize]) -> Self {
        let inner: VertexSet = seq[1..seq.len() - 1].iter().collect();
        let mut reach = inner;
        for v in inner {
            reach |= g.neighbors(v);
        }
        Branch {
            seq: seq.to_vec(),
            inner,
            reach,
        }
    }

    /// Interiors disjoint with no edges between them.
    fn fits(&self, other: &Branch) -> bool {
        self.reach.is_disjoint(other.inner)
    }
}

fn branches(g: &Graph, a: usize, b: usize, allowed: VertexSet) -> Vec<Branch> {
    let mut out = Vec::new();
    for_each_induced_path(g, a, b, allowed, &mut |p| {
        out.push(Branch::new(g, p));
        false
    });
    out
}

/// Three mutually fitting branches, one from each list.
fn pick3<'a>(l: [&'a [Branch]; 3]) -> Option<[&'a Branch; 3]> {
    for p in l[0] {
        for q in l[1].iter().filter(|q| p.fits(q)) {
            if let Some(r) = l[2].iter().find(|r| p.fits(r) && q.fits(r)) {
                return Some([p, q, r]);
            }
        }
    }
    None
}

fn find_theta(g: &Graph) -> Option<Embedding> {
    let all = g.vertices();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.has_edge(a, b) {
                continue;
            }
            if g.degree(a) < 3 || g.degree(b) < 3 {
                continue;
            }
            let br = branches(g, a, b, all);
            for i in 0..br.len() {
                for j in i + 1..br.len() {
                    if !br[i].fits(&br[j]) {
                        continue;
                    }
                    if let Some(k) = (j + 1..br.len()).find(|&k| br[i].fits(&br[k]) && br[j].fits(&br[k])) {
                        return Some(
                            Embedding::new(PatternKind::Theta)
                                .with("a", vec![a])
                                .with("b", vec![b])
                                .with("P1", br[i].seq.clone())
                                .with("P2", br[j].seq.clone())
                                .with("P3", br[k].seq.clone()),
                        );
                    }
                }
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let up = g.neighbors(a) - VertexSet::full(a + 1);
        for b in up {
            for c in up & g.neighbors(b) - VertexSet::full(b + 1) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn find_pyramid(g: &Graph) -> Option<Embedding> {
    let all = g.vertices();
    for t in triangles(g) {
        let tri: VertexSet = t.iter().collect();
        for a in all - tri {
            if (g.neighbors(a) & tri).len() > 1 {
                continue;
            }
            let mut lists: [Vec<Branch>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            for i in 0..3 {
                let mut allowed = all - tri;
                for j in 0..3 {
                    if j != i {
                        allowed -= g.neighbors(t[j]);
                    }
                }
                lists[i] = branches(g, a, t[i], allowed);
                if lists[i].is_empty() {
                    break;
                }
            }
            if let Some(ps) = pick3([&lists[0], &lists[1], &lists[2]]) {
                return Some(
                    Embedding::new(PatternKind::Pyramid)
                        .with("a", vec![a])
                        .with("b", t.to_vec())
                        .with("P1", ps[0].seq.clone())
                        .with("P2", ps[1].seq.clone())
                        .with("P3", ps[2].seq.clone()),
                );
            }
        }
    }
    None
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn find_prism(g: &Graph) -> Option<Embedding> {
    let all = g.vertices();
    let tris = triangles(g);
    for (x, ta) in tris.iter().enumerate() {
        let sa: VertexSet = ta.iter().collect();
        for tb0 in &tris[x + 1..] {
            let sb: VertexSet = tb0.iter().collect();
            if !sa.is_disjoint(sb) {
                continue;
            }
            for perm in PERMS3 {
                let tb = [tb0[perm[0]], tb0[perm[1]], tb0[perm[2]]];
                let cross_ok = (0..3).all(|i| (0..3).all(|j| i == j || !g.has_edge(ta[i], tb[j])));
                if !cross_ok {
                    continue;
                }
                let mut lists: [Vec<Branch>; 3] = [Vec::new(), Vec::new(), Vec::new()];
                for i in 0..3 {
                    let mut allowed = all - sa - sb;
                    for j in 0..3 {
                        if j != i {
                            allowed -= g.neighbors(ta[j]) | g.neighbors(tb[j]);
                        }
                    }
                    lists[i] = branches(g, ta[i], tb[i], allowed);
                    if lists[i].is_empty() {
                        break;
                    }
                }
                if let Some(ps) = pick3([&lists[0], &lists[1], &lists[2]]) {
                    return Some(
                        Embedding::new(PatternKind::Prism)
                            .with("a", ta.to_vec())
                            .with("b", tb.to_vec())
                            .with("P1", ps[0].seq.clone())
                            .with("P2", ps[1].seq.clone())
                            .with("P3", ps[2].seq.clone()),
                    );
                }
            }
        }
    }
    None
}

fn hole_embedding(kind: PatternKind, h: &Hole) -> Embedding {
    Embedding::new(kind).with("hole", h.vertices().to_vec())
}

/// First hole (in enumeration order) with an off-rim vertex `v` whose rim
/// neighbourhood satisfies `pred`.
fn find_attached(g: &Graph, kind: PatternKind, part: &str, pred: &dyn Fn(VertexSet) -> bool) -> Option<Embedding> {
    for h in enumerate_holes(g, g.n()) {
        let rim = h.set();
        for v in g.vertices() - rim {
            if pred(g.neighbors(v) & rim) {
                return Some(hole_embedding(kind, &h).with(part, vec![v]));
            }
        }
    }
    None
}

fn find_two_wheel(g: &Graph, kind: PatternKind, max_hole: usize) -> Option<Embedding> {
    let pred = |h: &Hole, nu, nv| match kind {
        PatternKind::Cube => is_cube(h, nu, nv),
        PatternKind::CousinWheel => is_cousin(h, nu, nv),
        _ => is_nested(h, nu, nv),
    };
    for w in two_wheels(g) {
        if w.hole.len() > max_hole {
            continue;
        }
        let c = w.centers.to_vec();
        let nu = g.neighbors(c[0]) & w.hole.set();
        let nv = g.neighbors(c[1]) & w.hole.set();
        if pred(&w.hole, nu, nv) {
            return Some(hole_embedding(kind, &w.hole).with("centers", c));
        }
    }
    None
}

fn find_sijk(g: &Graph, lens: [usize; 3]) -> Option<Embedding> {
    fn grow(g: &Graph, lens: &[usize; 3], legs: &mut [Vec<usize>; 3], used: &mut VertexSet, leg: usize) -> bool {
        if leg == 3 {
            return true;
        }
        if legs[leg].len() == lens[leg] + 1 {
            return grow(g, lens, legs, used, leg + 1);
        }
        let last = *legs[leg].last().unwrap();
        for w in g.neighbors(last) - *used {
            if g.neighbors(w) & *used != VertexSet::singleton(last) {
                continue;
            }
            legs[leg].push(w);
            used.insert(w);
            if grow(g, lens, legs, used, leg) {
                return true;
            }
            used.remove(w);
            legs[leg].pop();
        }
        false
    }
    // Longest leg first prunes soonest.
    let order = [2, 1, 0];
    let sorted = [lens[order[0]], lens[order[1]], lens[order[2]]];
    for c in 0..g.n() {
        let mut legs = [vec![c], vec![c], vec![c]];
        let mut used = VertexSet::singleton(c);
        if grow(g, &sorted, &mut legs, &mut used, 0) {
            let [l3, l2, l1] = legs;
            return Some(
                Embedding::new(PatternKind::Sijk(lens[0], lens[1], lens[2]))
                    .with("center", vec![c])
                    .with("L1", l1)
                    .with("L2", l2)
                    .with("L3", l3),
            );
        }
    }
    None
}

/// Some occurrence of `kind` as an induced subgraph, or `None` if there is
/// none. The searches are exhaustive.
pub fn find_pattern(g: &Graph, kind: PatternKind) -> Option<Embedding> {
    let n = g.n();
    match kind {
        PatternKind::Theta => find_theta(g),
        PatternKind::Pyramid => find_pyramid(g),
        PatternKind::Prism => find_prism(g),
        PatternKind::Square => enumerate_holes(g, 4).next().map(|h| hole_embedding(kind, &h)),
        PatternKind::EvenHole => enumerate_holes(g, n).find(|h| h.len() % 2 == 0).map(|h| hole_embedding(kind, &h)),
        PatternKind::Wheel => find_attached(g, kind, "center", &|nb| nb.len() >= 3),
        PatternKind::EvenWheel => find_attached(g, kind, "center", &|nb| nb.len() >= 4 && nb.len() % 2 == 0),
        PatternKind::Butterfly => find_attached(g, kind, "center", &|nb| is_butterfly_neighborhood(g, nb)),
        PatternKind::Pan => find_attached(g, kind, "vertex", &|nb| nb.len() == 1),
        PatternKind::Cap => find_attached(g, kind, "vertex", &|nb| {
            nb.len() == 2 && {
                let w = nb.to_vec();
                g.has_edge(w[0], w[1])
            }
        }),
        PatternKind::Cube => find_two_wheel(g, kind, 6),
        PatternKind::CousinWheel | PatternKind::Nested2Wheel => find_two_wheel(g, kind, n),
        PatternKind::Triangle => find_clique(g, 3).map(|c| Embedding::new(kind).with("clique", c.to_vec())),
        PatternKind::Clique(t) => find_clique(g, t).map(|c| Embedding::new(kind).with("clique", c.to_vec())),
        PatternKind::Sijk(i, j, k) => find_sijk(g, [i, j, k]),
    }
}
