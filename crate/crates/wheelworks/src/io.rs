//! Text formats: graph6, plain edge lists and PACE `.td` decompositions.

use std::fmt::Write as _;

use wheelworks_core::treewidth::TreeDecomposition;
use wheelworks_core::{Error, Graph, Result, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(format!("graph6: {}", msg.into()))
}

/// Decodes one graph6 line; an optional `>>graph6<<` header and trailing
/// line break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside the printable range 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(malformed("truncated length header"));
            }
            let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            if n < 258_048 {
                return Err(malformed("long length header used for fewer than 258048 vertices"));
            }
            (n, &bytes[8..])
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(malformed("truncated length header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            if n < 63 {
                return Err(malformed("long length header used for fewer than 63 vertices"));
            }
            (n, &bytes[4..])
        }
        [b, ..] => (six(*b), &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let groups = bits.div_ceil(6);
    match body.len().cmp(&groups) {
        std::cmp::Ordering::Less => return Err(malformed("too few edge bytes")),
        std::cmp::Ordering::Greater => return Err(malformed("trailing garbage after the edge bytes")),
        std::cmp::Ordering::Equal => {}
    }
    let bit = |i: usize| six(body[i / 6]) >> (5 - i % 6) & 1 == 1;
    if (bits..groups * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut g = Graph::new(n)?;
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                g.add_edge(u, v)?;
            }
            i += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as one graph6 line without a trailing line break.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut fill = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses an `n m` header followed by `m` lines `u v`; blank lines and
/// lines starting with `#` are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::InvalidParameter(format!("edge list: {msg}"));
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let pair = |l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(format!("expected two integers, got {l:?}"))),
        }
    };
    let (n, m) = pair(lines.next().ok_or_else(|| bad("missing header".into()))?)?;
    let mut g = Graph::new(n)?;
    let mut count = 0;
    for l in lines {
        let (u, v) = pair(l)?;
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(bad(format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// PACE `.td` text: bags and vertices are numbered from 1.
pub fn write_td(g: &Graph, td: &TreeDecomposition) -> String {
    let max_bag = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags.len(), max_bag, g.n());
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag.iter() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.tree_edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use wheelworks_core::generators::{complete, cube};

    #[test]
    fn hand_decoded_lines() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(write_graph6(&parse_graph6("D?{").unwrap()), "D?{");
        assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
    }

    #[test]
    fn malformed_lines_are_rejected() {
        for bad in ["", "A", "A_?", "B~", "~?", "A`", "~~??????"] {
            assert!(parse_graph6(bad).is_err(), "{bad:?}");
        }
        let mut big = String::from("~?@@");
        big.push_str(&"?".repeat((65 * 64 / 2usize).div_ceil(6)));
        assert!(matches!(parse_graph6(&big), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn long_header_for_64_vertices() {
        let g = complete(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap().rows(), g.rows());
    }

    #[test]
    fn edge_lists_round_trip() {
        let g = cube();
        let h = parse_edgelist(&write_edgelist(&g)).unwrap();
        assert_eq!(write_graph6(&h), write_graph6(&g));
        assert!(parse_edgelist("3 2\n0 1\n").is_err());
    }

    #[test]
    fn td_text_layout() {
        let g = complete(2).unwrap();
        let td = TreeDecomposition::trivial(&g);
        assert_eq!(write_td(&g, &td), "s td 1 2 2\nb 1 1 2\n");
    }
}
