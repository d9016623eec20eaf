//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any
//! criterion finds a violation.

use std::process::{Command, ExitCode, Stdio};
use std::io::Write;
use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;

use wheelworks_core::canon::canonical_code;
use wheelworks::verify::{check_instance, verify, CorpusSpec, Instance, Target};
use wheelworks_core::extraction::{bound_ttf, ramsey_holds};
use wheelworks_core::generators::{
    cycle, enumerate_small_graphs, extend_connected, kst, ladder, min_turtle_subdiv, random_graph, turtle,
};
use wheelworks_core::patterns::in_class_c;
use wheelworks_core::separators::separator_sets;
use wheelworks_core::treewidth::{
    heuristic_decomposition, max_independent_set_brute, max_independent_set_td, treewidth_exact, treewidth_via_pmcs,
    EXACT_BB_MAX, MIS_BAG_MAX,
};
use wheelworks_core::{find_clique, find_pattern, Graph, PatternKind, VertexSet};

/// Seed of every random sample below.
const SEED: u64 = 0x5eed_2024;

/// Runtime budgets.
const CUBE_BUDGET: Duration = Duration::from_secs(1);
const KST_BUDGET: Duration = Duration::from_secs(1);
const THM1_BUDGET: Duration = Duration::from_secs(600);
const LEMMA23_BUDGET: Duration = Duration::from_secs(300);
const RAMSEY_BUDGET: Duration = Duration::from_secs(60);

/// Largest order of the exhaustive corpus that is built directly; larger
/// orders are reached by hereditary extension or sampled.
const EXHAUSTIVE: usize = 9;

/// Largest instance handed to the branching independent-set oracle.
const MIS_BRUTE_MAX: usize = 40;

fn connected(n: usize) -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=EXHAUSTIVE).map(|n| enumerate_small_graphs(n).unwrap()).collect())[n]
}

/// Connected graphs on ten vertices, as listed by the OEIS (A001349).
const CONNECTED_TEN: usize = 11_716_571;

/// Calls `f` once per isomorphism class of connected ten-vertex graphs and
/// returns the number of classes. Every connected graph has a non-cut
/// vertex; an extension is kept only if the added vertex has the least
/// degree among the non-cut vertices, and duplicates are dropped by
/// canonical code.
fn each_connected_ten(mut f: impl FnMut(&Graph)) -> usize {
    let mut seen: HashSet<u128> = HashSet::new();
    for parent in connected(9) {
        for nbrs in 1u64..(1 << 9) {
            let d = nbrs.count_ones() as usize;
            let mut h = Graph::new(10).unwrap();
            for (u, v) in parent.edges() {
                h.add_edge(u, v).unwrap();
            }
            for u in VertexSet::from_bits(nbrs) {
                h.add_edge(u, 9).unwrap();
            }
            let smaller = (0..9).any(|u| h.degree(u) < d && h.components(VertexSet::singleton(u)).len() == 1);
            if smaller {
                continue;
            }
            let code = canonical_code(&h)
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &row)| acc | (row as u128) << (10 * i));
            if seen.insert(code) {
                f(&h);
            }
        }
    }
    seen.len()
}

fn up_to(n: usize) -> impl Iterator<Item = &'static Graph> {
    (1..=n).flat_map(connected)
}

fn plain(g: &Graph) -> Instance {
    Instance {
        graph: g.clone(),
        span_wheel: None,
    }
}

type Verdict = Result<String, String>;

fn report(r: &wheelworks::verify::VerifyReport) -> Verdict {
    let line = format!("{}: {} graphs, {} within the hypotheses, {} violations", r.target, r.instances, r.applicable, r.violations.len());
    if r.ok() {
        Ok(line)
    } else {
        Err(format!("{line}; first: {:?}", r.violations[0]))
    }
}

fn both(a: Verdict, b: Verdict) -> Verdict {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(format!("{x}; {y}")),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn within(budget: Duration, start: Instant, v: Verdict) -> Verdict {
    let t = start.elapsed();
    match v {
        Ok(s) if t > budget => Err(format!("{s}; took {t:.2?}, budget {budget:?}")),
        other => other,
    }
}

fn pipe(args: &[&str], input: &[u8]) -> (i32, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wheelworks"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("the wheelworks binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c1_cube_treewidth() -> Verdict {
    let start = Instant::now();
    let (_, g6) = pipe(&["gen", "cube"], b"");
    let (code, out) = pipe(&["tw", "--solver", "both"], &g6);
    let v: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let (w, p) = (v["width"].as_u64(), v["pmc_width"].as_u64());
    let ok = code == 0 && w == Some(3) && p == Some(3);
    let line = format!("gen cube | tw: exact {w:?}, pmc {p:?}");
    within(CUBE_BUDGET, start, if ok { Ok(line) } else { Err(line) })
}

fn c2_kst_separators() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for t in 3..=8 {
        let g = kst(2, t).unwrap();
        let tw = treewidth_exact(&g).unwrap().0;
        let side: VertexSet = (2..2 + t).collect();
        let seps = separator_sets(&g);
        if tw != 2 || !seps.contains(&side) {
            return Err(format!("K_2,{t}: tw {tw}, t-side separator present: {}", seps.contains(&side)));
        }
        notes.push(format!("t={t}: {} seps", seps.len()));
    }
    within(KST_BUDGET, start, Ok(format!("tw 2 and a separator of size t for t=3..8 ({})", notes.join(", "))))
}

fn c3_theorem1() -> Verdict {
    let start = Instant::now();
    let a = report(&verify(Target::Thm1, &CorpusSpec::exhaustive(8), true).unwrap());
    let b = report(&verify(Target::Thm1, &CorpusSpec::random(1000, SEED, 9, 14, 0.5), true).unwrap());
    within(THM1_BUDGET, start, both(a, b))
}

fn c4_lemmas_2_3() -> Verdict {
    let start = Instant::now();
    let a = report(&verify(Target::Lemma2, &CorpusSpec::exhaustive(7), true).unwrap());
    let b = report(&verify(Target::Lemma3, &CorpusSpec::exhaustive(7), true).unwrap());
    within(LEMMA23_BUDGET, start, both(a, b))
}

fn c5_lemma5() -> Verdict {
    report(&verify(Target::Lemma5, &CorpusSpec::exhaustive(8), true).unwrap())
}

fn c6_two_wheels() -> Verdict {
    let a = report(&verify(Target::Lemma6, &CorpusSpec::exhaustive(8), true).unwrap());
    let b = report(&verify(Target::Lemma8, &CorpusSpec::exhaustive(8), true).unwrap());
    both(a, b)
}

fn run_all(target: Target, graphs: &[&Graph]) -> (usize, usize, Vec<String>) {
    let mut applicable = 0;
    let mut violations = Vec::new();
    for g in graphs {
        let out = check_instance(target, &plain(g));
        applicable += out.applicable as usize;
        violations.extend(out.violations.into_iter().map(|v| format!("{:?}: {v}", g.name())));
    }
    (graphs.len(), applicable, violations)
}

fn c7_lemma9() -> Verdict {
    let members = |n: usize| -> Vec<Graph> { connected(n).iter().filter(|g| in_class_c(g).member).cloned().collect() };
    let mut all: Vec<Graph> = (1..=EXHAUSTIVE).flat_map(members).collect();
    let nine = members(EXHAUSTIVE);
    let ten = extend_connected(&nine, |g| in_class_c(g).member).unwrap();
    let n_ten = ten.len();
    all.extend(ten);
    let refs: Vec<&Graph> = all.iter().collect();
    let (n, applicable, v) = run_all(Target::Lemma9, &refs);
    let line = format!(
        "{n} connected class members n<=10 ({n_ten} on 10 vertices), {applicable} with an independent separator of size >= 2, {} failures",
        v.len()
    );
    if v.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; first: {}", v[0]))
    }
}

fn c8_lemma10() -> Verdict {
    let mut parts = Vec::new();
    for k in 0..=1 {
        let spec = CorpusSpec {
            family: Some(format!("spanwheel:k={k}")),
            samples: 50,
            seed: SEED,
            ..CorpusSpec::default()
        };
        parts.push(report(&verify(Target::Lemma10, &spec, true).unwrap()));
    }
    let b = parts.pop().unwrap();
    both(parts.pop().unwrap(), b)
}

fn c9_lemma11() -> Verdict {
    let graphs: Vec<&Graph> = up_to(EXHAUSTIVE).collect();
    let (n, _, v) = run_all(Target::Lemma11, &graphs);
    let line = format!("{n} connected graphs n<=9, {} violations", v.len());
    if v.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; first: {}", v[0]))
    }
}

fn c10_families() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for k in 1..=5 {
        let l = ladder(k).unwrap();
        let ehf = find_pattern(&l, PatternKind::EvenHole).is_none() && find_clique(&l, 4).is_none();
        let s = min_turtle_subdiv(k).unwrap();
        let t = turtle(k, s).unwrap();
        let ttf = find_pattern(&t, PatternKind::Theta).is_none() && find_pattern(&t, PatternKind::Triangle).is_none();
        let (ls, ts) = (separator_sets(&l).len(), separator_sets(&t).len());
        let many = k < 2 || (ls >= 1 << k && ts >= 1 << k);
        ok &= ehf && ttf && many;
        lines.push(format!(
            "k={k}: ladder n={} seps={ls} ehf/K4-free={ehf}, turtle(s={s}) n={} seps={ts} theta/triangle-free={ttf}",
            l.n(),
            t.n()
        ));
    }
    let line = lines.join("; ");
    if ok {
        Ok(line)
    } else {
        Err(line)
    }
}

fn mis_agrees(g: &Graph) -> Result<bool, String> {
    let td = if g.n() <= EXACT_BB_MAX {
        treewidth_exact(g).map_err(|e| e.to_string())?.1
    } else {
        heuristic_decomposition(g)
    };
    if td.width() + 1 > MIS_BAG_MAX {
        return Err(format!("{:?}: width {} exceeds the bag limit", g.name(), td.width()));
    }
    let s = max_independent_set_td(g, &td).map_err(|e| e.to_string())?;
    Ok(g.is_independent(s) && s.len() == max_independent_set_brute(g).len())
}

fn c11_mis() -> Verdict {
    let mut bad = Vec::new();
    let mut count = 0;
    for g in up_to(EXHAUSTIVE) {
        count += 1;
        if !mis_agrees(g)? {
            bad.push(format!("{:?}", g.name()));
        }
    }
    let mut ten_bad = Ok(());
    let ten = each_connected_ten(|g| match mis_agrees(g) {
        Ok(true) => {}
        Ok(false) => bad.push(wheelworks::io::write_graph6(g)),
        Err(e) => ten_bad = Err(e),
    });
    ten_bad?;
    if ten != CONNECTED_TEN {
        return Err(format!("{ten} classes on 10 vertices, expected {CONNECTED_TEN}"));
    }
    let mut families = Vec::new();
    for k in 1..=5 {
        let s = min_turtle_subdiv(k).unwrap();
        for g in [ladder(k).unwrap(), turtle(k, s).unwrap()] {
            if g.n() > MIS_BRUTE_MAX {
                continue;
            }
            families.push(g.name().unwrap_or_default().to_owned());
            if !mis_agrees(&g)? {
                bad.push(format!("{:?}", g.name()));
            }
        }
    }
    let line = format!(
        "{count} connected graphs n<=9, {ten} on 10 vertices, families [{}]: {} mismatches",
        families.join(", "),
        bad.len()
    );
    if bad.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; first: {}", bad[0]))
    }
}

fn c12_ramsey() -> Verdict {
    let start = Instant::now();
    let c5 = cycle(5).unwrap();
    let lower = find_clique(&c5, 3).is_none() && find_clique(&c5.complement(), 3).is_none();
    let r5 = ramsey_holds(3, 3, 5).unwrap();
    let r6 = ramsey_holds(3, 3, 6).unwrap();
    let b = bound_ttf(1).unwrap();
    let expected = BigUint::from(2u32) * BigUint::from(6u32).pow(3) - 1u32;
    let ok = lower && !r5 && r6 && b == expected && b == BigUint::from(431u32);
    let line = format!("C5 lower bound {lower}, all 5-vertex graphs {r5}, all 6-vertex graphs {r6}, bound_ttf(1) = {b}");
    within(RAMSEY_BUDGET, start, if ok { Ok(line) } else { Err(line) })
}

fn c13_solvers() -> Verdict {
    let mut bad = Vec::new();
    let mut check = |g: &Graph| {
        let a = treewidth_exact(g).map(|r| r.0);
        let b = treewidth_via_pmcs(g);
        if a.is_err() || a != b {
            bad.push(format!("{:?}: {a:?} vs {b:?}", g.name()));
        }
    };
    let mut exhaustive = 0;
    for g in up_to(EXHAUSTIVE) {
        exhaustive += 1;
        check(g);
    }
    const PS: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];
    let mut mid = 0;
    for n in 10..=12 {
        for i in 0..300 {
            mid += 1;
            check(&random_graph(n, PS[i % PS.len()], SEED.wrapping_add((n * 1000 + i) as u64)).unwrap());
        }
    }
    for i in 0..500 {
        let n = 13 + i % 4;
        check(&random_graph(n, PS[i % PS.len()], SEED.wrapping_add(100_000 + i as u64)).unwrap());
    }
    let line = format!("{exhaustive} connected graphs n<=9, {mid} random n=10..12, 500 random n=13..16: {} disagreements", bad.len());
    if bad.is_empty() {
        Ok(line)
    } else {
        Err(format!("{line}; first: {}", bad[0]))
    }
}

/// Criteria whose corpus cannot be covered here, with the reason. They are
/// run on the reachable part and reported as FAIL; only a violation found
/// there affects the exit status.
const OUT_OF_REACH: [(usize, &str); 1] = [(
    13,
    "all connected graphs n<=12 is about 1.6e11 classes (11.7e6 at n=10, 1.0e9 at n=11, 1.6e11 at n=12)",
)];

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 13] = [
        ("cube treewidth", c1_cube_treewidth),
        ("K_2,t separators", c2_kst_separators),
        ("clique/separator treewidth bound", c3_theorem1),
        ("fill-in separators and PMC neighbourhoods", c4_lemmas_2_3),
        ("clique or large separator from a PMC", c5_lemma5),
        ("2-wheel classification", c6_two_wheels),
        ("span-wheel extraction", c7_lemma9),
        ("spider extraction", c8_lemma10),
        ("atom treewidth", c9_lemma11),
        ("ladder and turtle families", c10_families),
        ("independent sets by decomposition", c11_mis),
        ("Ramsey sanity", c12_ramsey),
        ("solver cross-validation", c13_solvers),
    ];
    let (mut passed, mut violated) = (0, 0);
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let verdict = f();
        let t = start.elapsed();
        let reach = OUT_OF_REACH.iter().find(|(c, _)| *c == id).map(|(_, r)| *r);
        let (tag, detail) = match (&verdict, reach) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(r)) => ("FAIL", format!("out of reach: {r}; checked instead: {d}")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        passed += (tag == "PASS") as usize;
        violated += verdict.is_err() as usize;
        println!("criterion {id:>2} {tag} {name} [{t:.2?}]: {detail}");
    }
    println!(
        "{passed} of {} criteria passed, {} out of reach, {violated} with violations",
        criteria.len(),
        criteria.len() - passed - violated
    );
    if violated == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
