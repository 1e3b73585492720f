//! Text format for blocks and named graphs.
//!
//! ```text
//! name octahedron
//! 6 12
//! 0 2
//! ...
//! label z 7
//! rot 0: e0 e3 e1 e2
//! ```
//!
//! Lines come in that order: the name, the `n m` header, `m` edge lines,
//! any number of `label` lines, then either no `rot` lines or one per vertex
//! in vertex order. Rotation entries are edge indices (`e3`) or, in block
//! files, the slots `ext+` / `ext-` where an edge to the next or previous
//! block copy enters. Writing a parsed file reproduces it byte for byte.

use std::fmt::Write as _;

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RotEntry {
    Edge(usize),
    /// Edge to the next block copy.
    ExtNext,
    /// Edge from the previous block copy.
    ExtPrev,
}

impl RotEntry {
    fn token(self) -> String {
        match self {
            RotEntry::Edge(e) => format!("e{e}"),
            RotEntry::ExtNext => "ext+".into(),
            RotEntry::ExtPrev => "ext-".into(),
        }
    }

    fn parse(tok: &str) -> Option<RotEntry> {
        match tok {
            "ext+" => Some(RotEntry::ExtNext),
            "ext-" => Some(RotEntry::ExtPrev),
            _ => {
                let digits = tok.strip_prefix('e')?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                if digits.len() > 1 && digits.starts_with('0') {
                    return None;
                }
                digits.parse().ok().map(RotEntry::Edge)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub name: String,
    pub graph: Graph,
    /// `(label, vertex)` in file order.
    pub labels: Vec<(String, usize)>,
    pub rotation: Option<Vec<Vec<RotEntry>>>,
}

impl GraphFile {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        GraphFile {
            name: name.into(),
            graph,
            labels: Vec::new(),
            rotation: None,
        }
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.iter().find(|(l, _)| l == name).map(|&(_, v)| v)
    }

    /// The rotation as a [`RotationSystem`]; `None` when absent or when it
    /// contains external slots.
    pub fn rotation_system(&self) -> Option<RotationSystem> {
        let rows = self.rotation.as_ref()?;
        let order = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| match t {
                        RotEntry::Edge(e) => Some(*e),
                        _ => None,
                    })
                    .collect::<Option<Vec<usize>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(RotationSystem::new(order))
    }

    pub fn set_rotation_system(&mut self, rot: &RotationSystem) {
        self.rotation = Some(
            rot.order
                .iter()
                .map(|row| row.iter().map(|&e| RotEntry::Edge(e)).collect())
                .collect(),
        );
    }

    pub fn write(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "name {}", self.name);
        s.push_str(&crate::formats::write_edge_list(&self.graph));
        for (l, v) in &self.labels {
            let _ = writeln!(s, "label {l} {v}");
        }
        if let Some(rows) = &self.rotation {
            for (v, row) in rows.iter().enumerate() {
                let _ = write!(s, "rot {v}:");
                for t in row {
                    let _ = write!(s, " {}", t.token());
                }
                s.push('\n');
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<GraphFile> {
        let bad = |line: usize, reason: String| Error::MalformedGraphFile { line, reason };
        let lines: Vec<&str> = text.split_inclusive('\n').collect();
        if lines.is_empty() {
            return Err(bad(1, "empty file".into()));
        }
        let mut body = Vec::with_capacity(lines.len());
        for (i, l) in lines.iter().enumerate() {
            let Some(l) = l.strip_suffix('\n') else {
                return Err(bad(i + 1, "missing final newline".into()));
            };
            body.push(l);
        }
        let name = body[0]
            .strip_prefix("name ")
            .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace))
            .ok_or_else(|| bad(1, "expected `name <name>`".into()))?;
        let (n, m) = body
            .get(1)
            .and_then(|l| strict_pair(l))
            .ok_or_else(|| bad(2, "expected `n m`".into()))?;
        if n > crate::MAX_VERTICES {
            return Err(bad(2, format!("{n} vertices exceed {}", crate::MAX_VERTICES)));
        }
        if body.len() < 2 + m {
            return Err(bad(body.len() + 1, format!("expected {m} edge lines")));
        }
        let mut pairs = Vec::with_capacity(m);
        for i in 0..m {
            let p = strict_pair(body[2 + i]).ok_or_else(|| bad(3 + i, "expected `u v`".into()))?;
            pairs.push(p);
        }
        let graph = Graph::from_edge_list(n, &pairs).map_err(|e| bad(3, e.to_string()))?;
        let mut i = 2 + m;
        let mut labels = Vec::new();
        while i < body.len() && body[i].starts_with("label ") {
            let f: Vec<&str> = body[i].split(' ').collect();
            let v = match f.as_slice() {
                ["label", l, v] if !l.is_empty() => canonical_usize(v).filter(|&v| v < n).map(|v| (l.to_string(), v)),
                _ => None,
            };
            let (l, v) = v.ok_or_else(|| bad(i + 1, "expected `label <name> <vertex>`".into()))?;
            if labels.iter().any(|(x, _)| *x == l) {
                return Err(bad(i + 1, format!("label {l} repeated")));
            }
            labels.push((l, v));
            i += 1;
        }
        let mut rows = Vec::new();
        while i < body.len() {
            let line = body[i];
            let prefix = format!("rot {}:", rows.len());
            let rest = line
                .strip_prefix(&prefix)
                .ok_or_else(|| bad(i + 1, format!("expected `{prefix}`")))?;
            let mut row = Vec::new();
            if !rest.is_empty() {
                let toks = rest
                    .strip_prefix(' ')
                    .ok_or_else(|| bad(i + 1, "expected a space after the colon".into()))?;
                for tok in toks.split(' ') {
                    let t = RotEntry::parse(tok).ok_or_else(|| bad(i + 1, format!("bad rotation entry {tok:?}")))?;
                    if let RotEntry::Edge(e) = t {
                        if e >= m {
                            return Err(bad(i + 1, format!("edge e{e} out of range")));
                        }
                    }
                    row.push(t);
                }
            }
            rows.push(row);
            i += 1;
        }
        let rotation = if rows.is_empty() {
            None
        } else if rows.len() != n {
            return Err(bad(body.len(), format!("{} rotation lines for {n} vertices", rows.len())));
        } else {
            Some(rows)
        };
        Ok(GraphFile {
            name: name.to_string(),
            graph,
            labels,
            rotation,
        })
    }
}

/// `a b` with single spaces and no leading zeros, so writing it back is exact.
fn strict_pair(line: &str) -> Option<(usize, usize)> {
    let (a, b) = line.split_once(' ')?;
    Some((canonical_usize(a)?, canonical_usize(b)?))
}

fn canonical_usize(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}
