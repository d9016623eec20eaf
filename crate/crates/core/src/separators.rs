//! Minimal separators, potential maximal cliques and minimal fill-ins.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph accepted by [`enumerate_pmcs`].
pub const PMC_SWEEP_MAX: usize = 20;

/// A minimal separator together with two of its full components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinimalSeparator {
    pub sep: VertexSet,
    pub full_a: VertexSet,
    pub full_b: VertexSet,
}

impl MinimalSeparator {
    /// Builds the witness from the two full components with the smallest
    /// minimum vertices, if `sep` is a minimal separator.
    pub fn check(g: &Graph, sep: VertexSet) -> Option<Self> {
        let full = full_components(g, sep);
        (full.len() >= 2).then(|| MinimalSeparator {
            sep,
            full_a: full[0],
            full_b: full[1],
        })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let comps = g.components(self.sep);
        for d in [self.full_a, self.full_b] {
            if !comps.contains(&d) {
                return Err(Error::InvalidCertificate(format!("{d:?} is not a component outside the separator")));
            }
            if g.open_neighborhood(d) != self.sep {
                return Err(Error::InvalidCertificate(format!("{d:?} is not full to the separator")));
            }
        }
        if self.full_a == self.full_b {
            return Err(Error::InvalidCertificate("the two full components coincide".into()));
        }
        Ok(())
    }
}

/// Components `D` of `G \ x` with `N(D) = x`, ordered by minimum vertex.
pub fn full_components(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    g.components(x).into_iter().filter(|&d| g.open_neighborhood(d) == x).collect()
}

pub fn is_minimal_separator(g: &Graph, x: VertexSet) -> bool {
    let mut full = 0;
    for d in g.components(x) {
        if g.open_neighborhood(d) == x {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// Every minimal separator, sorted by vertex list.
///
/// Close-neighbourhood expansion: seeds are `N(C)` for components `C` of
/// `G \ N[v]`; each separator `S` and `x` in `S` yield `N(C)` for the
/// components `C` of `G \ (S ∪ N(x))`. In a disconnected graph the empty
/// set is a minimal separator and is reported.
pub fn enumerate_minimal_separators(g: &Graph) -> Vec<MinimalSeparator> {
    separator_sets(g)
        .into_iter()
        .map(|s| MinimalSeparator::check(g, s).expect("close-neighbourhood expansion yields minimal separators"))
        .collect()
}

/// The vertex sets of [`enumerate_minimal_separators`], without witnesses.
pub fn separator_sets(g: &Graph) -> Vec<VertexSet> {
    let mut seen = BTreeSet::new();
    let mut queue = Vec::new();
    let push = |s: VertexSet, seen: &mut BTreeSet<VertexSet>, queue: &mut Vec<VertexSet>| {
        if seen.insert(s) {
            queue.push(s);
        }
    };
    for v in 0..g.n() {
        for c in g.components(g.closed_neighbors(v)) {
            push(g.open_neighborhood(c), &mut seen, &mut queue);
        }
    }
    while let Some(s) = queue.pop() {
        for x in s {
            for c in g.components(s | g.neighbors(x)) {
                push(g.open_neighborhood(c), &mut seen, &mut queue);
            }
        }
    }
    let mut out: Vec<VertexSet> = seen.into_iter().collect();
    out.sort_by(|a, b| a.cmp_lex(*b));
    out
}

/// A potential maximal clique with, for each non-adjacent pair inside it,
/// the first component (by minimum vertex) covering that pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pmc {
    pub omega: VertexSet,
    pub covers: Vec<((usize, usize), VertexSet)>,
}

impl Pmc {
    /// The recorded covering component of the non-edge `xy`.
    pub fn cover(&self, x: usize, y: usize) -> Option<VertexSet> {
        let key = (x.min(y), x.max(y));
        self.covers.iter().find(|(p, _)| *p == key).map(|&(_, d)| d)
    }
}

/// Tests the two-condition characterization directly.
pub fn is_pmc(g: &Graph, omega: VertexSet) -> Option<Pmc> {
    if omega.is_empty() {
        return None;
    }
    let comps = g.components(omega);
    let nbhds: Vec<VertexSet> = comps.iter().map(|&d| g.open_neighborhood(d)).collect();
    if nbhds.iter().any(|&nd| nd == omega) {
        return None;
    }
    let mut covers = Vec::new();
    for x in omega {
        for y in omega - VertexSet::full(x + 1) - g.neighbors(x) {
            let pair = VertexSet::singleton(x).with(y);
            let i = nbhds.iter().position(|nd| pair.is_subset(*nd))?;
            covers.push(((x, y), comps[i]));
        }
    }
    Some(Pmc { omega, covers })
}

/// All potential maximal clique vertex sets by a subset sweep, in order of
/// their bit patterns.
pub fn pmc_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > PMC_SWEEP_MAX {
        return Err(Error::ScaleLimit {
            op: "PMC enumeration",
            n: g.n(),
            max: PMC_SWEEP_MAX,
        });
    }
    Ok(g.vertices().subsets().filter(|&o| quick_pmc(g, o)).collect())
}

pub fn enumerate_pmcs(g: &Graph) -> Result<Vec<Pmc>> {
    Ok(pmc_sets(g)?.into_iter().map(|o| is_pmc(g, o).unwrap()).collect())
}

fn quick_pmc(g: &Graph, omega: VertexSet) -> bool {
    if omega.is_empty() {
        return false;
    }
    let mut rest = g.vertices() - omega;
    let mut nbhds = [VertexSet::EMPTY; 64];
    let mut m = 0;
    while let Some(v) = rest.first() {
        let d = g.component_of(v, rest);
        rest -= d;
        let nd = g.open_neighborhood(d);
        if nd == omega {
            return false;
        }
        nbhds[m] = nd;
        m += 1;
    }
    // Non-edges of `omega` must all be covered.
    for x in omega {
        let mut need = omega - g.closed_neighbors(x) - VertexSet::full(x + 1);
        if need.is_empty() {
            continue;
        }
        for &nd in &nbhds[..m] {
            if nd.contains(x) {
                need -= nd;
            }
        }
        if !need.is_empty() {
            return false;
        }
    }
    true
}

/// Fill edges `(u, v)`, `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FillIn {
    pub edges: Vec<(usize, usize)>,
}

impl FillIn {
    pub fn apply(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        for &(u, v) in &self.edges {
            h.add_edge(u, v).expect("fill edge endpoints lie in the graph");
        }
        h
    }

    /// Chordal, and no single fill edge can be dropped.
    pub fn is_minimal(&self, g: &Graph) -> bool {
        let h = self.apply(g);
        if !h.is_chordal() {
            return false;
        }
        self.edges.iter().all(|&(u, v)| {
            let mut t = h.clone();
            t.remove_edge(u, v);
            !t.is_chordal()
        })
    }
}

/// An inclusion-minimal chordal completion.
///
/// Minimum-degree elimination (ties to the largest index) gives a
/// triangulation; then the lexicographically smallest fill edge whose
/// removal keeps the graph chordal is dropped until none is left. A
/// triangulation is minimal exactly when no single fill edge is removable.
pub fn minimal_fill_in(g: &Graph) -> FillIn {
    let mut h = g.clone();
    let mut alive = g.vertices();
    let mut fill = BTreeSet::new();
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&u| ((h.neighbors(u) & alive).len(), core::cmp::Reverse(u)))
            .unwrap();
        let nb = h.neighbors(v) & alive;
        for a in nb {
            for b in nb - VertexSet::full(a + 1) {
                if !h.has_edge(a, b) {
                    h.add_edge(a, b).unwrap();
                    fill.insert((a, b));
                }
            }
        }
        alive.remove(v);
    }
    'repair: loop {
        for &(u, v) in &fill {
            h.remove_edge(u, v);
            if h.is_chordal() {
                fill.remove(&(u, v));
                continue 'repair;
            }
            h.add_edge(u, v).unwrap();
        }
        break;
    }
    FillIn {
        edges: fill.into_iter().collect(),
    }
}

/// Outcome of checking that a minimal fill-in creates no new minimal
/// separators and preserves their component families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillInSeparatorReport {
    pub checked: Vec<VertexSet>,
    pub violation: Option<VertexSet>,
}

pub fn check_fillin_separators(g: &Graph, f: &FillIn) -> FillInSeparatorReport {
    let h = f.apply(g);
    let mut checked = Vec::new();
    for x in separator_sets(&h) {
        checked.push(x);
        let mut cg = g.components(x);
        let mut ch = h.components(x);
        cg.sort();
        ch.sort();
        if !is_minimal_separator(g, x) || cg != ch {
            return FillInSeparatorReport {
                checked,
                violation: Some(x),
            };
        }
    }
    FillInSeparatorReport {
        checked,
        violation: None,
    }
}

/// Result of the clique-or-large-separator procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma5Outcome {
    Clique(VertexSet),
    Separator(MinimalSeparator),
}

impl Lemma5Outcome {
    pub fn validate(&self, g: &Graph, k: usize, s: usize) -> Result<()> {
        match self {
            Lemma5Outcome::Clique(c) => {
                if c.len() != k || !g.is_clique(*c) {
                    return Err(Error::InvalidCertificate(format!("{c:?} is not a clique of size {k}")));
                }
                Ok(())
            }
            Lemma5Outcome::Separator(m) => {
                m.validate(g)?;
                if m.sep.len() <= s {
                    return Err(Error::InvalidCertificate(format!("separator {:?} has size at most {s}", m.sep)));
                }
                Ok(())
            }
        }
    }
}

/// Given a PMC `omega` with `|omega| > (k-1)s^3`, finds a clique on `k`
/// vertices or a minimal separator with more than `s` vertices, following
/// the constructive argument step by step. All choices go to the smallest
/// vertex or the first part.
pub fn lemma5_witness(g: &Graph, omega: &Pmc, k: usize, s: usize) -> Result<Lemma5Outcome> {
    if k < 2 || s < 1 {
        return Err(Error::Precondition(format!("need k >= 2 and s >= 1, got k={k}, s={s}")));
    }
    let om = omega.omega;
    let s3 = s.checked_pow(3).unwrap_or(usize::MAX);
    if om.len() <= (k - 1).saturating_mul(s3) {
        return Err(Error::Precondition(format!(
            "|omega| = {} is not larger than (k-1)s^3 = {}",
            om.len(),
            (k - 1).saturating_mul(s3)
        )));
    }
    let pmc = is_pmc(g, om).ok_or_else(|| Error::Precondition(format!("{om:?} is not a PMC")))?;
    let out = lemma5_run(g, &pmc, k, s, s3)?;
    out.validate(g, k, s).map_err(|e| Error::Internal(format!("clique-or-separator output failed validation: {e}")))?;
    Ok(out)
}

fn lemma5_run(g: &Graph, pmc: &Pmc, k: usize, s: usize, s3: usize) -> Result<Lemma5Outcome> {
    let om = pmc.omega;
    let comps = g.components(om);
    // A component neighbourhood larger than s is itself the answer.
    for &d in &comps {
        let nd = g.open_neighborhood(d);
        if nd.len() > s {
            let m = MinimalSeparator::check(g, nd)
                .ok_or_else(|| Error::Internal(format!("N({d:?}) is not a minimal separator")))?;
            return Ok(Lemma5Outcome::Separator(m));
        }
    }

    let far = |x: usize| om - g.closed_neighbors(x);
    let Some(x) = om.iter().find(|&x| far(x).len() >= s3) else {
        // Greedy clique: A_{i+1} = A_i ∩ N(x_i).
        let mut a = om;
        let mut clique = VertexSet::EMPTY;
        while let Some(xi) = a.first() {
            clique.insert(xi);
            if clique.len() == k {
                return Ok(Lemma5Outcome::Clique(clique));
            }
            a &= g.neighbors(xi);
        }
        return Err(Error::Internal(format!("greedy clique stopped at {} < {k} vertices", clique.len())));
    };

    let y_set = far(x).with(x);
    let s2 = s * s;
    // Parts of Y with the components of G \ Omega absorbed into each part,
    // ordered by minimum vertex.
    let mut parts: Vec<(VertexSet, Vec<VertexSet>)> =
        g.components_within(y_set).into_iter().map(|a| (a, Vec::new())).collect();
    loop {
        if parts.len() < 2 {
            return Err(Error::Internal("partition of Y collapsed to one part".into()));
        }
        if parts.iter().any(|(a, _)| a.len() > s2) {
            break;
        }
        let a = parts[0].0.first().unwrap();
        let b = parts[1].0.first().unwrap();
        let d = pmc
            .cover(a, b)
            .ok_or_else(|| Error::Internal(format!("non-edge {a}{b} has no covering component")))?;
        let nd = g.open_neighborhood(d);
        let mut merged = VertexSet::EMPTY;
        let mut merged_ds = alloc::vec![d];
        let mut kept = Vec::new();
        for (c, ds) in parts {
            if c.intersects(nd) {
                merged |= c;
                merged_ds.extend(ds);
            } else {
                kept.push((c, ds));
            }
        }
        kept.push((merged, merged_ds));
        kept.sort_by_key(|(c, _)| c.first());
        parts = kept;
    }
    let (a, ds) = parts.iter().find(|(a, _)| a.len() > s2).unwrap();
    let mut big_x = *a;
    for &d in ds {
        big_x |= d;
    }
    let y = (y_set - *a).first().unwrap();
    if !g.is_connected_set(big_x) || g.closed_neighbors(y).intersects(big_x) {
        return Err(Error::Internal("X is disconnected or not anticomplete to y".into()));
    }
    let nx = g.open_neighborhood(big_x);
    let cy = g.component_of(y, g.vertices() - big_x - nx);
    let sep = g.open_neighborhood(cy);
    let m = MinimalSeparator::check(g, sep).ok_or_else(|| Error::Internal(format!("N(C_y) = {sep:?} is not minimal")))?;
    Ok(Lemma5Outcome::Separator(m))
}
