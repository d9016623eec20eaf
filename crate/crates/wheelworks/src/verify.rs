//! Property suites run over graph corpora, one per checked statement.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use wheelworks_core::canon::is_isomorphic;
use wheelworks_core::extraction::{
    bound_ehf, bound_ttf, extract_sijk, extract_span_wheel, find_span_wheel, random_span_wheel_host,
    theorem11_check, Extraction, SijkOutcome, SpanWheel,
};
use wheelworks_core::generators::{cube, enumerate_small_graphs, random_graph, FamilySpec, SMALL_GRAPHS_MAX};
use wheelworks_core::patterns::{classify_2wheel, enumerate_wheels, in_class_c, rim_neighbors, TwoWheelClass};
use wheelworks_core::separators::{
    check_fillin_separators, enumerate_pmcs, full_components, is_minimal_separator, lemma5_witness, minimal_fill_in,
    separator_sets, MinimalSeparator,
};
use wheelworks_core::treewidth::{clique_minimal_separators, clique_separator_atoms, theorem1_check, treewidth_exact};
use wheelworks_core::{clique_number, find_pattern, Error, Graph, PatternKind, Result, WheelCert};

use crate::cert::SCHEMA;
use crate::io::write_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Thm1,
    Lemma2,
    Lemma3,
    Lemma5,
    Lemma6,
    Lemma7,
    Lemma8,
    Lemma9,
    Lemma10,
    Lemma11,
    Thm11,
    Thm12,
    Thm13,
}

impl Target {
    pub const ALL: [Target; 13] = [
        Target::Thm1,
        Target::Lemma2,
        Target::Lemma3,
        Target::Lemma5,
        Target::Lemma6,
        Target::Lemma7,
        Target::Lemma8,
        Target::Lemma9,
        Target::Lemma10,
        Target::Lemma11,
        Target::Thm11,
        Target::Thm12,
        Target::Thm13,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::Thm1 => "thm1",
            Target::Lemma2 => "lemma2",
            Target::Lemma3 => "lemma3",
            Target::Lemma5 => "lemma5",
            Target::Lemma6 => "lemma6",
            Target::Lemma7 => "lemma7",
            Target::Lemma8 => "lemma8",
            Target::Lemma9 => "lemma9",
            Target::Lemma10 => "lemma10",
            Target::Lemma11 => "lemma11",
            Target::Thm11 => "thm11",
            Target::Thm12 => "thm12",
            Target::Thm13 => "thm13",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown target {s:?}")))
    }
}

/// Where the checked graphs come from. Sources are concatenated in the
/// order exhaustive, family, random.
#[derive(Clone, Debug, Default)]
pub struct CorpusSpec {
    /// All connected graphs on `1..=order` vertices up to isomorphism.
    pub order: Option<usize>,
    /// A named family, or `spanwheel:k=K` for `samples` random hosts of a
    /// `(4K + 1)`-span-wheel.
    pub family: Option<String>,
    pub samples: usize,
    pub seed: u64,
    /// Vertex range and edge probability of random samples.
    pub min_n: usize,
    pub max_n: usize,
    pub p: f64,
}

impl CorpusSpec {
    pub fn exhaustive(order: usize) -> Self {
        CorpusSpec {
            order: Some(order),
            ..CorpusSpec::default()
        }
    }

    pub fn random(samples: usize, seed: u64, min_n: usize, max_n: usize, p: f64) -> Self {
        CorpusSpec {
            samples,
            seed,
            min_n,
            max_n,
            p,
            ..CorpusSpec::default()
        }
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(n) = self.order {
            parts.push(format!("connected graphs n<={n}"));
        }
        match &self.family {
            Some(f) if f.starts_with("spanwheel:") => {
                parts.push(format!("{} {f} hosts, seed {}", self.samples, self.seed))
            }
            Some(f) => parts.push(format!("family {f}")),
            None if self.samples > 0 => parts.push(format!(
                "{} random graphs n={}..{} p={} seed {}",
                self.samples, self.min_n, self.max_n, self.p, self.seed
            )),
            None => {}
        }
        parts.join(" + ")
    }
}

/// One checked graph, with the span-wheel it was built around if any.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub span_wheel: Option<(SpanWheel, usize)>,
}

fn spanwheel_k(family: &str) -> Result<Option<usize>> {
    let Some(rest) = family.strip_prefix("spanwheel:") else {
        return Ok(None);
    };
    let k = rest
        .strip_prefix("k=")
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| Error::InvalidParameter(format!("expected spanwheel:k=K, got {family:?}")))?;
    Ok(Some(k))
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    let plain = |graph| Instance { graph, span_wheel: None };
    let mut out = Vec::new();
    if let Some(order) = spec.order {
        if order == 0 || order > SMALL_GRAPHS_MAX {
            return Err(Error::InvalidParameter(format!("order must lie in 1..={SMALL_GRAPHS_MAX}")));
        }
        for n in 1..=order {
            out.extend(enumerate_small_graphs(n)?.into_iter().map(plain));
        }
    }
    match &spec.family {
        Some(f) => match spanwheel_k(f)? {
            Some(k) => {
                for i in 0..spec.samples.max(1) {
                    let (graph, sw) = random_span_wheel_host(4 * k + 1, spec.seed.wrapping_add(i as u64))?;
                    out.push(Instance {
                        graph,
                        span_wheel: Some((sw, k)),
                    });
                }
            }
            None => out.push(plain(f.parse::<FamilySpec>()?.build()?)),
        },
        None if spec.samples > 0 => {
            if spec.min_n == 0 || spec.min_n > spec.max_n {
                return Err(Error::InvalidParameter("random samples need 1 <= min_n <= max_n".into()));
            }
            let width = spec.max_n - spec.min_n + 1;
            for i in 0..spec.samples {
                let n = spec.min_n + i % width;
                let g = random_graph(n, spec.p, spec.seed.wrapping_add(i as u64))?;
                let name = format!("random:{n}:{}:{}", spec.p, spec.seed.wrapping_add(i as u64));
                out.push(plain(g.with_name(name)));
            }
        }
        None => {}
    }
    if out.is_empty() {
        return Err(Error::InvalidParameter("empty corpus: give --order, --family or --samples".into()));
    }
    Ok(out)
}

/// What one statement says about one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    /// The graph satisfies the hypotheses.
    pub applicable: bool,
    pub violations: Vec<String>,
}

impl Outcome {
    fn skip() -> Self {
        Outcome::default()
    }

    fn checked(violations: Vec<String>) -> Self {
        Outcome {
            applicable: true,
            violations,
        }
    }
}

fn free_of(g: &Graph, kinds: &[PatternKind]) -> bool {
    kinds.iter().all(|&k| find_pattern(g, k).is_none())
}

fn non_adjacent_two_wheels(g: &Graph) -> impl Iterator<Item = WheelCert> + '_ {
    enumerate_wheels(g, 2, g.n()).filter(move |w| {
        let c = w.centers.to_vec();
        !g.has_edge(c[0], c[1])
    })
}

/// Least `k >= 1` with no induced `S_{k,k,k}`.
fn spider_free_k(g: &Graph) -> usize {
    (1..).find(|&k| find_pattern(g, PatternKind::Sijk(k, k, k)).is_none()).unwrap()
}

fn err(v: &mut Vec<String>, e: Error) {
    v.push(format!("error: {e}"));
}

pub fn check_instance(target: Target, inst: &Instance) -> Outcome {
    match run(target, inst) {
        Ok(o) => o,
        Err(e) => Outcome::checked(vec![format!("error: {e}")]),
    }
}

fn run(target: Target, inst: &Instance) -> Result<Outcome> {
    let g = &inst.graph;
    let mut v = Vec::new();
    match target {
        Target::Thm1 => {
            let r = theorem1_check(g)?;
            if !r.holds {
                v.push(format!("tw {} > (k-1)s^3-1 = {} with k={}, s={}", r.tw, r.bound, r.k, r.s));
            }
        }
        Target::Lemma2 => {
            let f = minimal_fill_in(g);
            if !f.is_minimal(g) {
                v.push("fill-in is not minimal".into());
            }
            if let Some(x) = check_fillin_separators(g, &f).violation {
                v.push(format!("separator {:?} of the triangulation is not preserved", x.to_vec()));
            }
        }
        Target::Lemma3 => {
            for p in enumerate_pmcs(g)? {
                for d in g.components(p.omega) {
                    let nd = g.open_neighborhood(d);
                    if !is_minimal_separator(g, nd) || !full_components(g, nd).contains(&d) {
                        v.push(format!("N({:?}) around pmc {:?} is not a minimal separator", d.to_vec(), p.omega.to_vec()));
                    }
                }
            }
        }
        Target::Lemma5 => {
            for p in enumerate_pmcs(g)? {
                let size = p.omega.len();
                for k in 2..=size {
                    for s in (1..).take_while(|&s: &usize| (k - 1) * s.pow(3) < size) {
                        match lemma5_witness(g, &p, k, s) {
                            Ok(out) => {
                                if let Err(e) = out.validate(g, k, s) {
                                    v.push(format!("pmc {:?}, k={k}, s={s}: {e}", p.omega.to_vec()));
                                }
                            }
                            Err(e) => v.push(format!("pmc {:?}, k={k}, s={s}: {e}", p.omega.to_vec())),
                        }
                    }
                }
            }
        }
        Target::Lemma6 => {
            if !free_of(g, &[PatternKind::Theta, PatternKind::Triangle]) {
                return Ok(Outcome::skip());
            }
            for w in non_adjacent_two_wheels(g) {
                let c = classify_2wheel(g, &w)?;
                if !matches!(c, TwoWheelClass::Nested | TwoWheelClass::Cube) {
                    v.push(format!("2-wheel {:?} + {:?} is {}", w.hole.vertices(), w.centers.to_vec(), c.as_str()));
                }
            }
        }
        Target::Lemma7 => {
            if !free_of(g, &[PatternKind::Theta, PatternKind::Triangle]) || find_pattern(g, PatternKind::Cube).is_none()
            {
                return Ok(Outcome::skip());
            }
            let small_clique_sep = clique_minimal_separators(g).iter().any(|s| s.len() <= 2);
            if !is_isomorphic(g, &cube()) && !small_clique_sep {
                v.push("contains the cube, is not the cube and has no clique separator of size <= 2".into());
            }
        }
        Target::Lemma8 => {
            let hyp = [
                PatternKind::Theta,
                PatternKind::Prism,
                PatternKind::Pyramid,
                PatternKind::EvenWheel,
                PatternKind::Square,
            ];
            if !free_of(g, &hyp) {
                return Ok(Outcome::skip());
            }
            for w in non_adjacent_two_wheels(g) {
                let c = classify_2wheel(g, &w)?;
                let tag = || format!("2-wheel {:?} + {:?}", w.hole.vertices(), w.centers.to_vec());
                match c {
                    TwoWheelClass::Cousin => {}
                    TwoWheelClass::Nested => {
                        let cs = w.centers.to_vec();
                        let common = rim_neighbors(g, &w.hole, cs[0]) & rim_neighbors(g, &w.hole, cs[1]);
                        if common.len() > 1 {
                            v.push(format!("{} is nested with {} common rim neighbours", tag(), common.len()));
                        }
                    }
                    other => v.push(format!("{} is {}", tag(), other.as_str())),
                }
            }
        }
        Target::Lemma9 => {
            if !in_class_c(g).member {
                return Ok(Outcome::skip());
            }
            let mut any = false;
            for sep in separator_sets(g) {
                if sep.len() < 2 || !g.is_independent(sep) {
                    continue;
                }
                any = true;
                let m = MinimalSeparator::check(g, sep).ok_or_else(|| Error::Internal("separator lost".into()))?;
                match extract_span_wheel(g, sep, m.full_a, m.full_b) {
                    Ok(Extraction::SpanWheel(sw)) => {
                        if let Err(e) = sw.check(g) {
                            v.push(format!("separator {:?}: invalid span-wheel: {e}", sep.to_vec()));
                        } else if sw.k() != sep.len() - 2 {
                            v.push(format!("separator {:?}: {} centers instead of {}", sep.to_vec(), sw.k(), sep.len() - 2));
                        }
                    }
                    Ok(Extraction::Forbidden(f)) => {
                        v.push(format!("separator {:?}: forbidden {} in a class member", sep.to_vec(), f.kind))
                    }
                    Err(e) => err(&mut v, e),
                }
            }
            if !any {
                return Ok(Outcome::skip());
            }
        }
        Target::Lemma10 => {
            let check = |sw: &SpanWheel, k: usize, v: &mut Vec<String>| match extract_sijk(g, sw, k) {
                Ok(SijkOutcome::Spider(e)) => {
                    let kind = PatternKind::Sijk(k + 1, k + 1, k + 1);
                    let sub = g.induced_subgraph(e.vertices());
                    if e.kind != kind || e.validate(g).is_err() || find_pattern(&sub.graph, kind).is_none() {
                        v.push(format!("spider for k={k} is not confirmed"));
                    }
                }
                Ok(SijkOutcome::Butterfly(_)) => v.push("butterfly in a butterfly-free host".into()),
                Err(e) => err(v, e),
            };
            if let Some((sw, k)) = &inst.span_wheel {
                check(sw, *k, &mut v);
            } else {
                if find_pattern(g, PatternKind::Butterfly).is_some() {
                    return Ok(Outcome::skip());
                }
                let mut any = false;
                for k in 0.. {
                    let Some(sw) = find_span_wheel(g, 4 * k + 1) else { break };
                    any = true;
                    check(&sw, k, &mut v);
                }
                if !any {
                    return Ok(Outcome::skip());
                }
            }
        }
        Target::Lemma11 => {
            let (tw, _) = treewidth_exact(g)?;
            let mut best = 0;
            for a in clique_separator_atoms(g) {
                best = best.max(treewidth_exact(&a.graph)?.0);
            }
            if best != tw {
                v.push(format!("tw {tw}, largest atom treewidth {best}"));
            }
        }
        Target::Thm11 => {
            if !in_class_c(g).member {
                return Ok(Outcome::skip());
            }
            let t = clique_number(g) + 1;
            let l = (1..).find(|&l| find_span_wheel(g, l).is_none()).unwrap();
            let r = theorem11_check(g, t.max(2), l)?;
            if let Some(why) = r.inapplicable {
                return Err(Error::Internal(format!("hypotheses chosen to hold, yet {why}")));
            }
            if !r.holds {
                v.push(format!("tw {:?} exceeds {}", r.tw, r.bound));
            }
        }
        Target::Thm12 => {
            if !free_of(g, &[PatternKind::Theta, PatternKind::Triangle]) {
                return Ok(Outcome::skip());
            }
            let k = spider_free_k(g);
            let tw = treewidth_exact(g)?.0;
            let bound = bound_ttf(k)?;
            if BigUint::from(tw) > bound {
                v.push(format!("tw {tw} exceeds {bound} for k={k}"));
            }
        }
        Target::Thm13 => {
            if !free_of(g, &[PatternKind::EvenHole, PatternKind::Pyramid]) {
                return Ok(Outcome::skip());
            }
            let t = (clique_number(g) + 1).max(2);
            let k = spider_free_k(g);
            let tw = treewidth_exact(g)?.0;
            let bound = bound_ehf(t, k)?;
            if BigUint::from(tw) > bound {
                v.push(format!("tw {tw} exceeds {bound} for t={t}, k={k}"));
            }
        }
    }
    Ok(Outcome::checked(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub graph6: String,
    pub name: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub target: Target,
    pub corpus: String,
    pub instances: usize,
    pub applicable: usize,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// The JSON report; the elapsed time is included only on request so
    /// that reruns are byte-identical by default.
    pub fn to_json(&self, timing: bool) -> Value {
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|x| json!({"index": x.index, "graph6": x.graph6, "name": x.name, "detail": x.detail}))
            .collect();
        let mut v = json!({
            "schema": SCHEMA,
            "command": "verify",
            "target": self.target.as_str(),
            "corpus": self.corpus,
            "instances": self.instances,
            "applicable": self.applicable,
            "violations": violations,
            "ok": self.ok(),
        });
        if timing {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

/// Checks `target` on every corpus graph; results keep corpus order.
pub fn verify(target: Target, spec: &CorpusSpec, parallel: bool) -> Result<VerifyReport> {
    let start = Instant::now();
    let corpus = build_corpus(spec)?;
    let outcomes: Vec<Outcome> = if parallel {
        corpus.par_iter().map(|i| check_instance(target, i)).collect()
    } else {
        corpus.iter().map(|i| check_instance(target, i)).collect()
    };
    let mut violations = Vec::new();
    for (index, (inst, out)) in corpus.iter().zip(&outcomes).enumerate() {
        for detail in &out.violations {
            violations.push(Violation {
                index,
                graph6: write_graph6(&inst.graph),
                name: inst.graph.name().map(str::to_owned),
                detail: detail.clone(),
            });
        }
    }
    Ok(VerifyReport {
        target,
        corpus: spec.describe(),
        instances: corpus.len(),
        applicable: outcomes.iter().filter(|o| o.applicable).count(),
        violations,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_parse_back() {
        for t in Target::ALL {
            assert_eq!(t.as_str().parse::<Target>().unwrap(), t);
        }
        assert!("lemma4".parse::<Target>().is_err());
    }

    #[test]
    fn every_target_passes_on_small_graphs() {
        for t in Target::ALL {
            let r = verify(t, &CorpusSpec::exhaustive(5), false).unwrap();
            assert!(r.ok(), "{t}: {:?}", r.violations);
        }
    }

    #[test]
    fn spanwheel_hosts_feed_the_spider_extraction() {
        let spec = CorpusSpec {
            family: Some("spanwheel:k=1".into()),
            samples: 5,
            seed: 7,
            ..CorpusSpec::default()
        };
        let r = verify(Target::Lemma10, &spec, false).unwrap();
        assert_eq!((r.instances, r.applicable), (5, 5));
        assert!(r.ok(), "{:?}", r.violations);
    }

    #[test]
    fn bad_corpora_are_configuration_errors() {
        assert!(build_corpus(&CorpusSpec::default()).is_err());
        assert!(build_corpus(&CorpusSpec::exhaustive(12)).is_err());
        let spec = CorpusSpec {
            family: Some("spanwheel:q".into()),
            ..CorpusSpec::default()
        };
        assert!(build_corpus(&spec).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = CorpusSpec::random(10, 3, 5, 7, 0.4);
        let a = verify(Target::Thm1, &spec, true).unwrap().to_json(false);
        let b = verify(Target::Thm1, &spec, false).unwrap().to_json(false);
        assert_eq!(a, b);
    }
}
