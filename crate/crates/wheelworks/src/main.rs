use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use wheelworks::cert::{self, envelope};
use wheelworks::io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6, write_td};
use wheelworks::verify::{verify, CorpusSpec, Target};
use wheelworks_core::extraction::{
    bound_ehf, bound_main, bound_ttf, extract_sijk, extract_span_wheel, ramsey_upper, Extraction, SijkOutcome,
};
use wheelworks_core::generators::{enumerate_small_graphs, random_graph, FamilySpec};
use wheelworks_core::patterns::in_class_c;
use wheelworks_core::separators::{enumerate_pmcs, separator_sets, MinimalSeparator};
use wheelworks_core::treewidth::{
    clique_minimal_separators, clique_separator_atoms, max_independent_set_td, treewidth_exact, treewidth_via_pmcs,
};
use wheelworks_core::{find_pattern, Error, Graph, PatternKind, VertexSet};

#[derive(Parser)]
#[command(name = "wheelworks", version, about = "Structural graph checks with re-checkable certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct Input {
    /// Read the graph from this file instead of standard input.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Exact,
    Pmc,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    /// (t-1)(R(t, l+2)-1)^3 - 1, needs -t and -l.
    Main,
    /// 2 R(3, 4k-1)^3 - 1, needs -k.
    Ttf,
    /// (t-1) R(t, 4k-1)^3 - 1, needs -t and -k.
    Ehf,
    /// The Ramsey upper bound R(s, t), needs -s and -t.
    Ramsey,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print graphs in graph6, one per line.
    Gen {
        /// A family such as cube, cycle:6, kst:2,4, theta:2,2,2 or turtle:2,1.
        spec: Option<String>,
        /// Every connected graph on this many vertices, up to isomorphism.
        #[arg(long, conflicts_with_all = ["spec", "random"])]
        connected: Option<usize>,
        /// Random graphs on this many vertices.
        #[arg(long, conflicts_with = "spec")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Look for an induced pattern; exit 0 if found, 1 if not.
    Detect {
        /// theta, pyramid, prism, square, even-hole, even-wheel, wheel,
        /// butterfly, cube, cousin-wheel, nested-2wheel, triangle, pan, cap,
        /// clique:T or sijk:I,J,K.
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: Input,
    },
    /// Membership in the class free of thetas, prisms, pyramids and
    /// butterflies whose 2-wheels are nested or cousin.
    Class {
        #[command(flatten)]
        input: Input,
    },
    /// Check one statement over a corpus; exit 0 iff there are no violations.
    Verify {
        #[arg(long)]
        target: String,
        /// Every connected graph on up to this many vertices.
        #[arg(long)]
        order: Option<usize>,
        /// A family spec, or spanwheel:k=K for random span-wheel hosts.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        min_n: usize,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Check graphs one at a time on the current thread.
        #[arg(long)]
        serial: bool,
        /// Add the elapsed time to the report.
        #[arg(long)]
        timing: bool,
    },
    /// Exact treewidth with a tree decomposition.
    Tw {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Solver::Both)]
        solver: Solver,
        /// Print the decomposition in PACE .td format instead of JSON.
        #[arg(long)]
        td: bool,
    },
    /// All minimal separators with their full components.
    Seps {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        count: bool,
    },
    /// All potential maximal cliques.
    Pmcs {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        count: bool,
    },
    /// Clique minimal separators and the atoms they cut the graph into.
    Atoms {
        #[command(flatten)]
        input: Input,
    },
    /// A maximum independent set by dynamic programming on a decomposition.
    Mis {
        #[command(flatten)]
        input: Input,
    },
    /// A span-wheel from an independent minimal separator, or a forbidden
    /// configuration.
    Extract {
        #[command(flatten)]
        input: Input,
        /// Comma separated separator vertices; defaults to the first
        /// largest independent minimal separator.
        #[arg(long)]
        separator: Option<String>,
        /// Continue to an induced S_{k+1,k+1,k+1}.
        #[arg(long)]
        sijk: Option<usize>,
    },
    /// Evaluate a treewidth bound.
    Bound {
        #[arg(value_enum)]
        kind: BoundKind,
        #[arg(short)]
        t: Option<usize>,
        #[arg(short)]
        l: Option<usize>,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        s: Option<usize>,
    },
    /// Re-check certificates against a graph; exit 0 iff all are valid.
    Check {
        #[command(flatten)]
        input: Input,
        /// Certificate JSON, or - for standard input.
        #[arg(long)]
        cert: PathBuf,
    },
}

/// A failure reported with exit status 2.
struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail(e.to_string())
    }
}

type Run = Result<u8, Fail>;

fn read_source(path: Option<&PathBuf>) -> Result<String, Fail> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Fail(format!("{}: {e}", p.display())))?
        }
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn read_graph(input: &Input) -> Result<Graph, Fail> {
    let text = read_source(input.file.as_ref())?;
    match input.format {
        Format::Edgelist => Ok(parse_edgelist(&text)?),
        Format::Graph6 => {
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            match lines.as_slice() {
                [line] => Ok(parse_graph6(line)?),
                [] => Err(Fail("no graph on input".into())),
                _ => Err(Fail(format!("expected one graph, got {} lines", lines.len()))),
            }
        }
    }
}

fn emit(v: &Value) -> Result<(), Fail> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Fail(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn parse_set(g: &Graph, s: &str) -> Result<VertexSet, Fail> {
    let mut out = VertexSet::EMPTY;
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = t.parse().map_err(|_| Fail(format!("{t:?} is not a vertex")))?;
        if v >= g.n() {
            return Err(Error::InvalidVertex(v).into());
        }
        out.insert(v);
    }
    Ok(out)
}

fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn need(x: Option<usize>, flag: &str) -> Result<usize, Fail> {
    x.ok_or_else(|| Fail(format!("this bound needs -{flag}")))
}

fn run(cli: Cli) -> Run {
    match cli.cmd {
        Cmd::Gen {
            spec,
            connected,
            random,
            p,
            seed,
            samples,
            format,
        } => {
            let graphs = match (spec, connected, random) {
                (Some(s), None, None) => vec![s.parse::<FamilySpec>()?.build()?],
                (None, Some(n), None) => enumerate_small_graphs(n)?,
                (None, None, Some(n)) => (0..samples as u64)
                    .map(|i| random_graph(n, p, seed.wrapping_add(i)))
                    .collect::<Result<_, _>>()?,
                _ => return Err(Fail("give a family spec, --connected N or --random N".into())),
            };
            let mut out = std::io::stdout().lock();
            for g in &graphs {
                match format {
                    Format::Graph6 => writeln!(out, "{}", write_graph6(g))?,
                    Format::Edgelist => write!(out, "{}", write_edgelist(g))?,
                }
            }
            eprintln!("{} graph(s)", graphs.len());
            Ok(0)
        }
        Cmd::Detect { pattern, input } => {
            let kind: PatternKind = pattern.parse()?;
            let g = read_graph(&input)?;
            match find_pattern(&g, kind) {
                Some(e) => {
                    emit(&envelope("detect", Some(&g), json!({"pattern": kind.to_string(), "found": true, "certificate": cert::embedding(&e)})))?;
                    eprintln!("{kind} found on {:?}", e.vertices().to_vec());
                    Ok(0)
                }
                None => {
                    println!("none");
                    eprintln!("no induced {kind}");
                    Ok(1)
                }
            }
        }
        Cmd::Class { input } => {
            let g = read_graph(&input)?;
            let r = in_class_c(&g);
            let witness = r.witness.as_ref().map(cert::witness);
            emit(&envelope("class", Some(&g), json!({"member": r.member, "certificate": witness})))?;
            eprintln!("{}", if r.member { "member" } else { "not a member" });
            Ok(0)
        }
        Cmd::Verify {
            target,
            order,
            family,
            samples,
            seed,
            min_n,
            max_n,
            p,
            serial,
            timing,
        } => {
            let target: Target = target.parse()?;
            let spec = CorpusSpec {
                order,
                family,
                samples,
                seed,
                min_n,
                max_n,
                p,
            };
            let r = verify(target, &spec, !serial)?;
            emit(&r.to_json(timing))?;
            eprintln!(
                "{target}: {} instances, {} within the hypotheses, {} violations, {:.2?}",
                r.instances,
                r.applicable,
                r.violations.len(),
                r.elapsed
            );
            Ok(if r.ok() { 0 } else { 1 })
        }
        Cmd::Tw { input, solver, td } => {
            let g = read_graph(&input)?;
            let exact = match solver {
                Solver::Pmc => None,
                _ => Some(treewidth_exact(&g)?),
            };
            let pmc = match solver {
                Solver::Exact => None,
                _ => Some(treewidth_via_pmcs(&g)?),
            };
            if let (Some((a, _)), Some(b)) = (&exact, pmc) {
                if *a != b {
                    return Err(Fail(format!("solvers disagree: exact {a}, pmc {b}")));
                }
            }
            let width = exact.as_ref().map(|e| e.0).or(pmc).unwrap();
            if td {
                let (_, d) = exact.ok_or_else(|| Fail("--td needs the exact solver".into()))?;
                print!("{}", write_td(&g, &d));
            } else {
                let certificate = exact.as_ref().map(|(_, d)| cert::decomposition(d));
                emit(&envelope("tw", Some(&g), json!({"width": width, "pmc_width": pmc, "certificate": certificate})))?;
            }
            eprintln!("treewidth {width}");
            Ok(0)
        }
        Cmd::Seps { input, count } => {
            let g = read_graph(&input)?;
            let seps = separator_sets(&g);
            let body = if count {
                json!({"count": seps.len()})
            } else {
                let cs: Vec<Value> = seps.iter().map(|&s| cert::separator(&g, s)).collect();
                json!({"count": seps.len(), "certificates": cs})
            };
            emit(&envelope("seps", Some(&g), body))?;
            eprintln!("{} minimal separators", seps.len());
            Ok(0)
        }
        Cmd::Pmcs { input, count } => {
            let g = read_graph(&input)?;
            let pmcs = enumerate_pmcs(&g)?;
            let body = if count {
                json!({"count": pmcs.len()})
            } else {
                let cs: Vec<Value> = pmcs.iter().map(cert::pmc).collect();
                json!({"count": pmcs.len(), "certificates": cs})
            };
            emit(&envelope("pmcs", Some(&g), body))?;
            eprintln!("{} potential maximal cliques", pmcs.len());
            Ok(0)
        }
        Cmd::Atoms { input } => {
            let g = read_graph(&input)?;
            let seps: Vec<Value> = clique_minimal_separators(&g).into_iter().map(|s| cert::separator(&g, s)).collect();
            let atoms: Vec<Value> = clique_separator_atoms(&g).iter().map(|a| cert::set(a.host_vertices())).collect();
            eprintln!("{} atoms, {} clique minimal separators", atoms.len(), seps.len());
            emit(&envelope("atoms", Some(&g), json!({"atoms": atoms, "certificates": seps})))?;
            Ok(0)
        }
        Cmd::Mis { input } => {
            let g = read_graph(&input)?;
            let (width, td) = treewidth_exact(&g)?;
            let s = max_independent_set_td(&g, &td)?;
            emit(&envelope(
                "mis",
                Some(&g),
                json!({"size": s.len(), "width": width, "certificates": [cert::independent_set(s), cert::decomposition(&td)]}),
            ))?;
            eprintln!("independence number {}", s.len());
            Ok(0)
        }
        Cmd::Extract { input, separator, sijk } => {
            let g = read_graph(&input)?;
            let sep = match separator {
                Some(s) => parse_set(&g, &s)?,
                None => separator_sets(&g)
                    .into_iter()
                    .filter(|&s| s.len() >= 2 && g.is_independent(s))
                    .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp_lex(*a)))
                    .ok_or_else(|| Fail("precondition violated: no independent minimal separator of size >= 2".into()))?,
            };
            let m = MinimalSeparator::check(&g, sep)
                .ok_or_else(|| Fail(format!("precondition violated: {:?} is not a minimal separator", sep.to_vec())))?;
            let mut body = json!({"separator": cert::set(sep)});
            let code = match extract_span_wheel(&g, sep, m.full_a, m.full_b)? {
                Extraction::SpanWheel(sw) => {
                    body["outcome"] = json!("span_wheel");
                    let mut certs = vec![cert::span_wheel(&g, &sw)];
                    eprintln!("{}-span-wheel", sw.k());
                    if let Some(k) = sijk {
                        match extract_sijk(&g, &sw, k)? {
                            SijkOutcome::Spider(e) => {
                                eprintln!("{}", e.kind);
                                certs.push(cert::embedding(&e));
                            }
                            SijkOutcome::Butterfly(e) => {
                                body["outcome"] = json!("butterfly");
                                eprintln!("the graph contains a butterfly");
                                certs.push(cert::embedding(&e));
                            }
                        }
                    }
                    body["certificates"] = json!(certs);
                    0
                }
                Extraction::Forbidden(f) => {
                    body["outcome"] = json!("forbidden");
                    body["certificates"] = json!([cert::forbidden(&f)]);
                    eprintln!("forbidden {}", f.kind);
                    0
                }
            };
            emit(&envelope("extract", Some(&g), body))?;
            Ok(code)
        }
        Cmd::Bound { kind, t, l, k, s } => {
            let (name, params, value) = match kind {
                BoundKind::Main => {
                    let (t, l) = (need(t, "t")?, need(l, "l")?);
                    ("main", json!({"t": t, "l": l}), bound_main(t, l)?)
                }
                BoundKind::Ttf => {
                    let k = need(k, "k")?;
                    ("ttf", json!({"k": k}), bound_ttf(k)?)
                }
                BoundKind::Ehf => {
                    let (t, k) = (need(t, "t")?, need(k, "k")?);
                    ("ehf", json!({"t": t, "k": k}), bound_ehf(t, k)?)
                }
                BoundKind::Ramsey => {
                    let (s, t) = (need(s, "s")?, need(t, "t")?);
                    ("ramsey", json!({"s": s, "t": t}), ramsey_upper(s, t))
                }
            };
            emit(&envelope("bound", None, json!({"bound": name, "parameters": params, "value": big(&value)})))?;
            eprintln!("{value}");
            Ok(0)
        }
        Cmd::Check { input, cert: path } => {
            if input.file.is_none() && path.as_os_str() == "-" {
                return Err(Fail("give the graph with --file when the certificate comes from standard input".into()));
            }
            let g = read_graph(&input)?;
            let text = read_source(Some(&path))?;
            let doc: Value = serde_json::from_str(&text).map_err(|e| Fail(format!("certificate JSON: {e}")))?;
            let mut errors = Vec::new();
            if let Some(g6) = doc.pointer("/graph/graph6").and_then(Value::as_str) {
                if g6 != write_graph6(&g) {
                    errors.push(format!("certificate was issued for {g6}, not {}", write_graph6(&g)));
                }
            }
            let certs = cert::collect_certificates(&doc);
            if certs.is_empty() {
                errors.push("no certificate found".into());
            }
            for (i, c) in certs.iter().enumerate() {
                if let Err(e) = cert::check_certificate(&g, c) {
                    errors.push(format!("certificate {i}: {e}"));
                }
            }
            let valid = errors.is_empty();
            emit(&envelope("check", Some(&g), json!({"valid": valid, "checked": certs.len(), "errors": errors})))?;
            eprintln!("{}", if valid { "valid" } else { "invalid" });
            Ok(if valid { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
