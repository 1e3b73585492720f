//! Edge, vertex and essential edge connectivity with cut certificates.
//!
//! A graph is essentially λ-edge-connected when every edge cut with fewer
//! than λ edges consists of edges that all meet at one vertex.
//!
//! The flow check rests on this: in a 2-connected graph, an edge cut whose
//! sides both contain an edge never has all its edges at one vertex `z`
//! (otherwise `z` would separate the rest of its side), and such a cut
//! separates some pair of vertex-disjoint edges. Cuts with an edgeless side
//! are dominated by the two-vertex sides `{u, v}` with `u`, `v` non-adjacent,
//! whose cut size is `d(u) + d(v)`. So the minimum violating cut is found by
//! contracting every pair of vertex-disjoint edges into a source and a sink,
//! plus the non-adjacent pairs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutKind {
    EdgeCut,
    VertexCut,
    EssentialEdgeCut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub kind: CutKind,
    /// One side of an edge cut, or the separator of a vertex cut.
    pub side: VertexSet,
    pub size: usize,
    /// Whether all cut edges meet at one vertex (edge cuts only).
    pub shares_common_vertex: Option<bool>,
}

impl CutCertificate {
    fn edge_cut(g: &Graph, kind: CutKind, side: VertexSet) -> Self {
        let side = normalize_side(g, side);
        CutCertificate {
            kind,
            side,
            size: g.cut_size(side),
            shares_common_vertex: Some(cut_shares_vertex(g, side)),
        }
    }

    /// Recomputes the cut from the recorded side or separator.
    pub fn recount(&self, g: &Graph) -> bool {
        match self.kind {
            CutKind::VertexCut => {
                let rest = g.all_vertices().difference(self.side);
                let split = rest.len() <= 1 || g.components_within(rest).len() > 1;
                split && self.side.len() == self.size
            }
            CutKind::EdgeCut | CutKind::EssentialEdgeCut => {
                !self.side.is_empty()
                    && self.side != g.all_vertices()
                    && g.cut_size(self.side) == self.size
                    && self.shares_common_vertex == Some(cut_shares_vertex(g, self.side))
            }
        }
    }
}

/// The side containing vertex 0, so equal cuts compare equal.
fn normalize_side(g: &Graph, side: VertexSet) -> VertexSet {
    if side.contains(0) {
        side
    } else {
        g.all_vertices().difference(side)
    }
}

/// True when some vertex is an end of every edge crossing `side`.
pub fn cut_shares_vertex(g: &Graph, side: VertexSet) -> bool {
    let cut = g.cut_edges(side);
    let Some(&first) = cut.first() else {
        return true;
    };
    let (a, b) = g.edge(first);
    [a, b].into_iter().any(|z| {
        cut.iter().all(|&e| {
            let (u, v) = g.edge(e);
            u == z || v == z
        })
    })
}

/// Min edge cut between two vertex sets, stopping once `limit` is reached.
fn set_cut(g: &Graph, sources: VertexSet, sinks: VertexSet, limit: i64) -> (i64, VertexSet) {
    let n = g.order();
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for &(u, v) in g.edges() {
        net.add_edge(u, v, 1);
    }
    let inf = g.size() as i64 + 1;
    for x in sources {
        net.add_arc(s, x, inf);
    }
    for y in sinks {
        net.add_arc(y, t, inf);
    }
    let value = net.max_flow_limited(s, t, limit);
    let reach = net.residual_reachable(s);
    (value, (0..n).filter(|&v| reach[v]).collect())
}

/// Global minimum edge cut via flows from vertex 0 to every other vertex.
pub fn edge_connectivity(g: &Graph) -> Result<(usize, CutCertificate)> {
    if g.order() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<(i64, VertexSet)> = None;
    for t in 1..g.order() {
        let limit = best.map_or(i64::MAX, |(b, _)| b);
        let (value, side) = set_cut(g, VertexSet::singleton(0), VertexSet::singleton(t), limit);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, side));
        }
    }
    let (value, side) = best.unwrap();
    let cert = CutCertificate::edge_cut(g, CutKind::EdgeCut, side);
    debug_assert_eq!(cert.size, value as usize);
    Ok((value as usize, cert))
}

/// Maximum number of internally disjoint `s`-`t` paths (up to `limit`) and
/// the separator from the final residual cut.
fn vertex_cut(g: &Graph, s: usize, t: usize, limit: i64) -> (i64, VertexSet) {
    let n = g.order();
    let inf = n as i64 + 1;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { inf } else { 1 };
        net.add_arc(v, v + n, cap);
    }
    for u in 0..n {
        for v in g.neighbors(u) {
            net.add_arc(u + n, v, inf);
        }
    }
    let value = net.max_flow_limited(s + n, t, limit);
    let reach = net.residual_reachable(s + n);
    let sep = (0..n).filter(|&v| reach[v] && !reach[v + n]).collect();
    (value, sep)
}

/// Vertex connectivity (simple view). Complete graphs get `n - 1`.
///
/// Some vertex among the first `κ + 1` lies outside a minimum separator, so
/// only those need to act as flow sources.
pub fn vertex_connectivity(g: &Graph) -> Result<(usize, CutCertificate)> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = n - 1;
    let mut separator = VertexSet::full(n).difference(VertexSet::singleton(0));
    let mut s = 0;
    while s < n && s <= best {
        for t in 0..n {
            if t == s || g.has_edge(s, t) {
                continue;
            }
            let (value, sep) = vertex_cut(g, s, t, best as i64);
            if (value as usize) < best {
                best = value as usize;
                separator = sep;
            }
        }
        s += 1;
    }
    let cert = CutCertificate {
        kind: CutKind::VertexCut,
        side: separator,
        size: best,
        shares_common_vertex: None,
    };
    debug_assert!(cert.recount(g));
    Ok((best, cert))
}

fn better(a: &CutCertificate, b: &CutCertificate) -> bool {
    (a.size, a.side.to_vec()) < (b.size, b.side.to_vec())
}

fn pick(a: Option<CutCertificate>, b: Option<CutCertificate>) -> Option<CutCertificate> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Flow-based essential connectivity test. `None` means the graph is
/// essentially `lambda`-edge-connected; otherwise a violating cut of minimum
/// size. Which of several minimum cuts comes back is deterministic but may
/// differ from [`essential_cut_bruteforce`].
pub fn essential_edge_connectivity_check(g: &Graph, lambda: usize) -> Result<Option<CutCertificate>> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let n = g.order();
    let mut found: Option<CutCertificate> = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || g.degree(u) + g.degree(v) >= lambda {
                continue;
            }
            let side = VertexSet::from_slice(&[u, v]);
            let cert = CutCertificate::edge_cut(g, CutKind::EssentialEdgeCut, side);
            if cert.shares_common_vertex == Some(false) {
                found = pick(found, Some(cert));
            }
        }
    }
    let m = g.size();
    let from_pairs = (0..m)
        .into_par_iter()
        .map(|e| {
            let (a, b) = g.edge(e);
            let ends_e = VertexSet::from_slice(&[a, b]);
            let mut local: Option<CutCertificate> = None;
            for f in e + 1..m {
                let (c, d) = g.edge(f);
                let ends_f = VertexSet::from_slice(&[c, d]);
                if !ends_e.intersection(ends_f).is_empty() {
                    continue;
                }
                let (value, side) = set_cut(g, ends_e, ends_f, lambda as i64);
                if (value as usize) < lambda {
                    let cert = CutCertificate::edge_cut(g, CutKind::EssentialEdgeCut, side);
                    assert_eq!(
                        cert.shares_common_vertex,
                        Some(false),
                        "a cut with an edge on each side of a 2-connected graph is non-trivial"
                    );
                    local = pick(local, Some(cert));
                }
            }
            local
        })
        .reduce(|| None, pick);
    Ok(pick(found, from_pairs))
}

/// Largest order [`essential_cut_bruteforce`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// The definition applied literally to every bipartition. Returns the
/// smallest violating cut, ties broken by the lexicographically smallest side
/// containing vertex 0.
pub fn essential_cut_bruteforce(g: &Graph, lambda: usize) -> Result<Option<CutCertificate>> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::UniverseTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if n < 2 {
        return Ok(None);
    }
    let mut found: Option<CutCertificate> = None;
    // sides avoiding vertex n-1
    for mask in 1u128..(1u128 << (n - 1)) {
        let side = VertexSet(mask);
        let size = g.cut_size(side);
        if size >= lambda || cut_shares_vertex(g, side) {
            continue;
        }
        let cert = CutCertificate::edge_cut(g, CutKind::EssentialEdgeCut, side);
        found = pick(found, Some(cert));
    }
    Ok(found)
}
