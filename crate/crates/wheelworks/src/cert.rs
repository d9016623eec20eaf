//! JSON certificates and their definitional re-checking.
//!
//! Every certificate is an object with a `"type"` field. Command output
//! wraps certificates in an envelope carrying `"schema": "wheelworks/1"`
//! and the input graph in graph6, under `"certificate"` or
//! `"certificates"`.

use serde_json::{json, Map, Value};

use wheelworks_core::extraction::{ForbiddenKind, ForbiddenWitness, SpanWheel};
use wheelworks_core::patterns::{classify_2wheel, TwoWheelClass, Witness};
use wheelworks_core::separators::{full_components, is_pmc, FillIn, MinimalSeparator, Pmc};
use wheelworks_core::treewidth::TreeDecomposition;
use wheelworks_core::{Embedding, Error, Graph, Hole, PatternKind, Result, VertexSet, WheelCert};

use crate::io::write_graph6;

pub const SCHEMA: &str = "wheelworks/1";

pub fn set(s: VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn graph_info(g: &Graph) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(g.n()));
    m.insert("m".into(), json!(g.edge_count()));
    m.insert("graph6".into(), json!(write_graph6(g)));
    if let Some(name) = g.name() {
        m.insert("name".into(), json!(name));
    }
    Value::Object(m)
}

/// The top-level object printed by a command.
pub fn envelope(command: &str, g: Option<&Graph>, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Some(g) = g {
        m.insert("graph".into(), graph_info(g));
    }
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

pub fn embedding(e: &Embedding) -> Value {
    let parts: Map<String, Value> = e.parts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({"type": "embedding", "pattern": e.kind.to_string(), "parts": parts})
}

pub fn wheel(w: &WheelCert) -> Value {
    json!({"type": "wheel", "hole": w.hole.vertices(), "centers": set(w.centers)})
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Pattern(e) => embedding(e),
        Witness::Wheel(w) => wheel(w),
    }
}

pub fn forbidden(f: &ForbiddenWitness) -> Value {
    json!({"type": "forbidden", "kind": f.kind.as_str(), "witness": witness(&f.witness)})
}

/// A minimal separator with all of its full components.
pub fn separator(g: &Graph, sep: VertexSet) -> Value {
    let full: Vec<Value> = full_components(g, sep).into_iter().map(set).collect();
    json!({"type": "separator", "separator": set(sep), "full_components": full})
}

pub fn pmc(p: &Pmc) -> Value {
    let covers: Map<String, Value> = p.covers.iter().map(|&((x, y), d)| (format!("{x},{y}"), set(d))).collect();
    json!({"type": "pmc", "omega": set(p.omega), "covers": covers})
}

pub fn fill_in(f: &FillIn) -> Value {
    json!({"type": "fill_in", "edges": f.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()})
}

pub fn decomposition(td: &TreeDecomposition) -> Value {
    json!({
        "type": "tree_decomposition",
        "width": td.width(),
        "bags": td.bags.iter().map(|&b| set(b)).collect::<Vec<_>>(),
        "edges": td.tree_edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

pub fn clique(s: VertexSet) -> Value {
    json!({"type": "clique", "vertices": set(s)})
}

pub fn independent_set(s: VertexSet) -> Value {
    json!({"type": "independent_set", "size": s.len(), "vertices": set(s)})
}

pub fn span_wheel(g: &Graph, sw: &SpanWheel) -> Value {
    let centers: Vec<Value> = sw
        .centers
        .iter()
        .map(|&v| {
            json!({
                "vertex": v,
                "a": SpanWheel::indices(g, &sw.path_a, v),
                "b": SpanWheel::indices(g, &sw.path_b, v),
            })
        })
        .collect();
    json!({
        "type": "span_wheel",
        "k": sw.k(),
        "hole": sw.hole.vertices(),
        "x": sw.x,
        "y": sw.y,
        "path_a": sw.path_a,
        "path_b": sw.path_b,
        "centers": centers,
    })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn uint(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("{v} is not a vertex")))
}

fn list(v: &Value) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{v} is not an array")))?
        .iter()
        .map(uint)
        .collect()
}

fn vset(g: &Graph, v: &Value) -> Result<VertexSet> {
    let l = list(v)?;
    if let Some(&u) = l.iter().find(|&&u| u >= g.n()) {
        return Err(Error::InvalidVertex(u));
    }
    let s: VertexSet = l.iter().collect();
    if s.len() != l.len() {
        return Err(bad(format!("{v} repeats a vertex")));
    }
    Ok(s)
}

fn pairs(v: &Value) -> Result<Vec<(usize, usize)>> {
    v.as_array()
        .ok_or_else(|| bad("edges must be an array"))?
        .iter()
        .map(|p| match list(p)?.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(bad(format!("{p} is not a pair"))),
        })
        .collect()
}

fn parse_embedding(v: &Value) -> Result<Embedding> {
    let kind: PatternKind = field(v, "pattern")?
        .as_str()
        .ok_or_else(|| bad("pattern must be a string"))?
        .parse()?;
    let parts = field(v, "parts")?.as_object().ok_or_else(|| bad("parts must be an object"))?;
    let mut e = Embedding::new(kind);
    for (k, p) in parts {
        e = e.with(k, list(p)?);
    }
    Ok(e)
}

fn parse_wheel(g: &Graph, v: &Value) -> Result<WheelCert> {
    Ok(WheelCert {
        hole: Hole::new(g, list(field(v, "hole")?)?)?,
        centers: vset(g, field(v, "centers")?)?,
    })
}

fn parse_witness(g: &Graph, v: &Value) -> Result<Witness> {
    match field(v, "type")?.as_str() {
        Some("embedding") => Ok(Witness::Pattern(parse_embedding(v)?)),
        Some("wheel") => Ok(Witness::Wheel(parse_wheel(g, v)?)),
        _ => Err(bad("a witness is an embedding or a wheel")),
    }
}

/// Re-checks one certificate against `g` without any search.
pub fn check_certificate(g: &Graph, v: &Value) -> Result<()> {
    let ty = field(v, "type")?.as_str().ok_or_else(|| bad("type must be a string"))?;
    match ty {
        "embedding" => parse_embedding(v)?.validate(g),
        "wheel" => parse_wheel(g, v)?.validate(g),
        "two_wheel" => {
            let w = parse_wheel(g, v)?;
            w.validate(g)?;
            let claimed = field(v, "class")?.as_str().unwrap_or_default();
            let actual = classify_2wheel(g, &w)?;
            if actual.as_str() != claimed {
                return Err(bad(format!("2-wheel classifies as {}, not {claimed}", actual.as_str())));
            }
            Ok(())
        }
        "forbidden" => {
            let claimed = field(v, "kind")?.as_str().unwrap_or_default();
            let kind = [
                ForbiddenKind::Theta,
                ForbiddenKind::Prism,
                ForbiddenKind::Pyramid,
                ForbiddenKind::Butterfly,
                ForbiddenKind::Bad2Wheel,
            ]
            .into_iter()
            .find(|k| k.as_str() == claimed)
            .ok_or_else(|| bad(format!("unknown forbidden kind {claimed:?}")))?;
            ForbiddenWitness {
                kind,
                witness: parse_witness(g, field(v, "witness")?)?,
            }
            .validate(g)
        }
        "separator" => {
            let sep = vset(g, field(v, "separator")?)?;
            let full: Vec<VertexSet> = field(v, "full_components")?
                .as_array()
                .ok_or_else(|| bad("full_components must be an array"))?
                .iter()
                .map(|d| vset(g, d))
                .collect::<Result<_>>()?;
            if full.len() < 2 {
                return Err(bad("a minimal separator needs two full components"));
            }
            for pair in full.windows(2) {
                MinimalSeparator {
                    sep,
                    full_a: pair[0],
                    full_b: pair[1],
                }
                .validate(g)?;
            }
            Ok(())
        }
        "pmc" => {
            let omega = vset(g, field(v, "omega")?)?;
            if is_pmc(g, omega).is_none() {
                return Err(bad(format!("{omega:?} is not a potential maximal clique")));
            }
            let comps = g.components(omega);
            let covers = field(v, "covers")?.as_object().ok_or_else(|| bad("covers must be an object"))?;
            for (key, d) in covers {
                let mut it = key.split(',').map(str::parse::<usize>);
                let (Some(Ok(x)), Some(Ok(y)), None) = (it.next(), it.next(), it.next()) else {
                    return Err(bad(format!("cover key {key:?} is not a pair")));
                };
                let d = vset(g, d)?;
                let nd = g.open_neighborhood(d);
                if !comps.contains(&d) || !nd.contains(x) || !nd.contains(y) {
                    return Err(bad(format!("{d:?} does not cover {x},{y}")));
                }
            }
            for x in omega {
                for y in omega {
                    if x < y && !g.has_edge(x, y) && !covers.contains_key(&format!("{x},{y}")) {
                        return Err(bad(format!("non-edge {x},{y} has no cover")));
                    }
                }
            }
            Ok(())
        }
        "fill_in" => {
            let f = FillIn {
                edges: pairs(field(v, "edges")?)?,
            };
            for &(u, w) in &f.edges {
                if u >= g.n() || w >= g.n() || u == w || g.has_edge(u, w) {
                    return Err(bad(format!("{u},{w} is not a non-edge of the graph")));
                }
            }
            if !f.is_minimal(g) {
                return Err(bad("not a minimal triangulation"));
            }
            Ok(())
        }
        "tree_decomposition" => {
            let td = TreeDecomposition {
                bags: field(v, "bags")?
                    .as_array()
                    .ok_or_else(|| bad("bags must be an array"))?
                    .iter()
                    .map(|b| vset(g, b))
                    .collect::<Result<_>>()?,
                tree_edges: pairs(field(v, "edges")?)?,
            };
            td.check(g)?;
            if let Some(w) = v.get("width") {
                if uint(w)? != td.width() {
                    return Err(bad(format!("claimed width {w}, bags give {}", td.width())));
                }
            }
            Ok(())
        }
        "clique" => {
            let s = vset(g, field(v, "vertices")?)?;
            if !g.is_clique(s) {
                return Err(bad(format!("{s:?} is not a clique")));
            }
            Ok(())
        }
        "independent_set" => {
            let s = vset(g, field(v, "vertices")?)?;
            if !g.is_independent(s) {
                return Err(bad(format!("{s:?} is not independent")));
            }
            if let Some(n) = v.get("size") {
                if uint(n)? != s.len() {
                    return Err(bad("size does not match the vertex list"));
                }
            }
            Ok(())
        }
        "span_wheel" => {
            let sw = SpanWheel::new(
                g,
                list(field(v, "path_a")?)?,
                list(field(v, "path_b")?)?,
                field(v, "centers")?
                    .as_array()
                    .ok_or_else(|| bad("centers must be an array"))?
                    .iter()
                    .map(|c| uint(field(c, "vertex")?))
                    .collect::<Result<_>>()?,
            )?;
            if sw.x != uint(field(v, "x")?)? || sw.y != uint(field(v, "y")?)? {
                return Err(bad("split vertices do not match the sides"));
            }
            Ok(())
        }
        other => Err(bad(format!("unknown certificate type {other:?}"))),
    }
}

/// Every certificate inside `v`: the object itself when it has a type,
/// else those under `"certificate"` and `"certificates"`.
pub fn collect_certificates(v: &Value) -> Vec<&Value> {
    if v.get("type").is_some() {
        return vec![v];
    }
    let mut out = Vec::new();
    if let Some(c) = v.get("certificate").filter(|c| !c.is_null()) {
        out.push(c);
    }
    if let Some(Value::Array(cs)) = v.get("certificates") {
        out.extend(cs.iter());
    }
    out
}

pub fn two_wheel(w: &WheelCert, class: TwoWheelClass) -> Value {
    json!({"type": "two_wheel", "hole": w.hole.vertices(), "centers": set(w.centers), "class": class.as_str()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use wheelworks_core::find_pattern;
    use wheelworks_core::generators::{cube, kst, theta};
    use wheelworks_core::separators::{enumerate_pmcs, minimal_fill_in, separator_sets};
    use wheelworks_core::treewidth::treewidth_exact;

    #[test]
    fn certificates_round_trip_through_check() {
        let g = cube();
        let (_, td) = treewidth_exact(&g).unwrap();
        check_certificate(&g, &decomposition(&td)).unwrap();
        for s in separator_sets(&g) {
            check_certificate(&g, &separator(&g, s)).unwrap();
        }
        for p in enumerate_pmcs(&g).unwrap() {
            check_certificate(&g, &pmc(&p)).unwrap();
        }
        check_certificate(&g, &fill_in(&minimal_fill_in(&g))).unwrap();
        let t = theta([2, 2, 2]).unwrap();
        let e = find_pattern(&t, PatternKind::Theta).unwrap();
        check_certificate(&t, &embedding(&e)).unwrap();
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = kst(2, 3).unwrap();
        let mut c = separator(&g, [0, 1].into_iter().collect());
        check_certificate(&g, &c).unwrap();
        c["separator"] = json!([0]);
        assert!(check_certificate(&g, &c).is_err());
        let td = json!({"type": "tree_decomposition", "bags": [[0, 1, 2]], "edges": []});
        assert!(check_certificate(&g, &td).is_err());
        let clique = json!({"type": "clique", "vertices": [0, 1]});
        assert!(check_certificate(&g, &clique).is_err());
    }
}
