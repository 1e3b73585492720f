//! Text formats: graph6, plain edge lists and DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes a simple graph in graph6.
///
/// The upper triangle is read column by column (`a[0][1], a[0][2], a[1][2],
/// a[0][3], ...`), packed six bits at a time, most significant first, and
/// each chunk is offset by 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            chunk = chunk << 1 | row.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let at = |i: usize| Error::MalformedGraph6(skip + i);
    for (i, &c) in body.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(at(i));
        }
    }
    let (n, mut pos) = match body.first() {
        None => return Err(at(0)),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                // eight-byte form, only for n >= 258048
                return Err(at(1));
            }
            if body.len() < 4 {
                return Err(at(body.len()));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
            if n <= 62 {
                return Err(at(1));
            }
            (n, 4)
        }
        Some(&c) => ((c - 63) as usize, 1),
    };
    if n > crate::MAX_VERTICES {
        return Err(Error::UniverseExceeded(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != pos + need {
        return Err(at(body.len().min(pos + need)));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        pos += need - 1;
        let last = body[pos] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(at(pos));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Writes `"n m"` followed by one `"u v"` line per edge, in edge order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses the plain edge-list format written by [`write_edge_list`].
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line, reason: &str| Error::MalformedEdgeList {
        line,
        reason: reason.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| bad(hline, "expected \"n m\""))?;
    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        let p = parse_pair(l).ok_or_else(|| bad(line, "expected \"u v\""))?;
        pairs.push(p);
        if pairs.len() > m {
            return Err(bad(line, "more edges than the header declares"));
        }
    }
    if pairs.len() != m {
        return Err(bad(hline, "fewer edges than the header declares"));
    }
    Graph::from_edge_list(n, &pairs)
}

pub(crate) fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Graphviz rendering for inspection; there is no reader for it.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let id: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    writeln!(out, "graph {} {{", if id.is_empty() { "G" } else { &id }).unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        // header 4+63 = 'C'; six ones = 63, +63 = '~'
        assert_eq!(write_graph6(&Graph::complete(4)).unwrap(), "C~");
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
        assert!(g.is_regular(3));
    }

    #[test]
    fn small_known_strings() {
        // path 0-2-4, 1-3-4 style example: edges ac, ae, bd, de on 5 vertices
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(100);
        let s = write_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back.adjacency(), g.adjacency());
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(Error::MalformedGraph6(0)));
        assert_eq!(parse_graph6("C~~"), Err(Error::MalformedGraph6(2)));
        assert_eq!(parse_graph6("C"), Err(Error::MalformedGraph6(1)));
        assert!(matches!(parse_graph6("C\x10"), Err(Error::MalformedGraph6(1))));
        // K3 uses 3 bits; "Bw" = 111000, "Bx" sets a padding bit
        assert!(parse_graph6("Bw").is_ok());
        assert_eq!(parse_graph6("Bx"), Err(Error::MalformedGraph6(1)));
        assert!(parse_graph6(">>graph6<<C~\n").is_ok());
        let multi = Graph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(write_graph6(&multi), Err(Error::NotSimple));
    }

    #[test]
    fn edge_list_exact() {
        let text = "3 3\n0 1\n0 1\n2 1\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.degrees(), vec![2, 3, 1]);
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::MalformedEdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("2 2\n0 1\n"), Err(Error::MalformedEdgeList { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 1\n1 0\n"), Err(Error::MalformedEdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 x\n"), Err(Error::MalformedEdgeList { line: 2, .. })));
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(Error::LoopRejected(1)));
    }

    #[test]
    fn dot_lists_edges() {
        let dot = write_dot(&Graph::complete(3), "k3");
        assert!(dot.starts_with("graph k3 {"));
        assert_eq!(dot.matches("--").count(), 3);
    }
}
