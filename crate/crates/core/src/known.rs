//! Registry of named graphs and the claims made about them.
//!
//! Graph data lives in plain-text files under `data/` (see
//! [`crate::graphfile`]); a name without data loads as
//! [`Error::TranscriptionMissing`]. Every load re-checks the claims, so bad
//! data shows up as a failed claim rather than a wrong answer.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::embedding::{genus_from_rotation, RotationSystem};
use crate::error::{Error, Result};
use crate::families::PropertyReport;
use crate::graph::Graph;
use crate::graphfile::GraphFile;
use crate::independent::{independent_sets_of_size, max_independent_set};
use crate::orientation::DEFAULT_NODE_LIMIT;
use crate::stardecomp::{decide_claw_4regular, exact_cover_oracle, verify_certificate, Decision};
use crate::vset::VertexSet;

/// Exact cover is only run up to this many edges.
pub const ORACLE_EDGE_LIMIT: usize = 36;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KnownClaim {
    Order(usize),
    Regular(usize),
    Connected,
    TwoConnected,
    VertexConnectivityAtLeast(usize),
    EdgeConnectivityAtLeast(usize),
    /// Genus 0 under the supplied rotation.
    Planar,
    IndependenceNumber(usize),
    /// No claw-decomposition, with a certificate that re-verifies.
    NoClawDecomposition,
    /// The independent sets of size `|V|/3` form one class under
    /// isomorphism, and removing one leaves a component with at least two
    /// independent cycles.
    UniqueSetLeavesTwoCycles,
    /// The exact-cover search agrees with the claw decider.
    OracleAgreement,
}

#[derive(Clone, Debug)]
pub struct KnownGraph {
    pub name: String,
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
    pub claimed: Vec<KnownClaim>,
    pub source: String,
}

struct Entry {
    name: &'static str,
    source: &'static str,
    data: Option<&'static str>,
    claims: &'static [KnownClaim],
}

use KnownClaim::*;

const ORDER12: &[KnownClaim] = &[
    Order(12),
    Regular(4),
    Connected,
    EdgeConnectivityAtLeast(4),
    NoClawDecomposition,
    OracleAgreement,
];

const REGISTRY: &[Entry] = &[
    Entry {
        name: "fig1-12-1",
        source: "Figure 1, order-12 quadruple (member 1 by graph6 order)",
        data: Some(include_str!("../data/fig1-12-1.txt")),
        claims: ORDER12,
    },
    Entry {
        name: "fig1-12-2",
        source: "Figure 1, order-12 quadruple (member 2 by graph6 order)",
        data: Some(include_str!("../data/fig1-12-2.txt")),
        claims: ORDER12,
    },
    Entry {
        name: "fig1-12-3",
        source: "Figure 1, order-12 quadruple (member 3 by graph6 order)",
        data: Some(include_str!("../data/fig1-12-3.txt")),
        claims: ORDER12,
    },
    Entry {
        name: "fig1-12-4",
        source: "Figure 1, order-12 quadruple (member 4 by graph6 order)",
        data: Some(include_str!("../data/fig1-12-4.txt")),
        claims: ORDER12,
    },
    Entry {
        name: "fig1-jaeger-12",
        source: "Figure 1, third graph",
        data: None,
        claims: ORDER12,
    },
    Entry {
        name: "fig2-planar-18",
        source: "Figure 2",
        data: None,
        claims: &[Order(18), Regular(4), TwoConnected, Planar, IndependenceNumber(5), NoClawDecomposition],
    },
    Entry {
        name: "fig3-left-21",
        source: "Figure 3, left",
        data: None,
        claims: &[
            Order(21),
            Regular(4),
            VertexConnectivityAtLeast(3),
            Planar,
            UniqueSetLeavesTwoCycles,
            NoClawDecomposition,
        ],
    },
    Entry {
        name: "fig3-right-21",
        source: "Figure 3, right",
        data: None,
        claims: &[
            Order(21),
            Regular(4),
            VertexConnectivityAtLeast(3),
            Planar,
            IndependenceNumber(6),
            NoClawDecomposition,
        ],
    },
    Entry {
        name: "g48n-block-16",
        source: "Figure 4, block of G_48n",
        data: None,
        claims: &[],
    },
];

pub fn registry_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

/// Text of a registered data file, if transcribed.
pub fn known_data(name: &str) -> Result<&'static str> {
    let e = REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
    e.data.ok_or_else(|| Error::TranscriptionMissing(name.to_string()))
}

pub fn load_known_graph(name: &str) -> Result<KnownGraph> {
    let text = known_data(name)?;
    let e = REGISTRY.iter().find(|e| e.name == name).expect("found above");
    let f = GraphFile::parse(text)?;
    Ok(KnownGraph {
        name: e.name.to_string(),
        rotation: f.rotation_system(),
        graph: f.graph,
        claimed: e.claims.to_vec(),
        source: e.source.to_string(),
    })
}

/// Loads `name` and checks its claims, reporting each.
pub fn known_report(name: &str) -> Result<PropertyReport> {
    let k = load_known_graph(name)?;
    let mut r = check_claims(&k.graph, k.rotation.as_ref(), &k.claimed);
    r.subject = k.name;
    Ok(r)
}

/// Like [`known_report`], but a failed claim is an error.
pub fn verify_known(name: &str) -> Result<PropertyReport> {
    let r = known_report(name)?;
    match r.failures().first() {
        Some(c) => Err(Error::ClaimFailed(format!("{name}: {} ({})", c.name, c.detail))),
        None => Ok(r),
    }
}

pub fn check_claims(g: &Graph, rot: Option<&RotationSystem>, claims: &[KnownClaim]) -> PropertyReport {
    let mut r = PropertyReport::new("graph");
    for &c in claims {
        match c {
            Order(n) => r.push("order", g.order() == n, format!("{} vertices, expected {n}", g.order())),
            Regular(d) => r.push(
                "regular",
                g.is_simple() && g.is_regular(d),
                format!("degrees {}..{}, expected {d}", g.min_degree(), g.max_degree()),
            ),
            Connected => r.push("connected", g.is_connected(), ""),
            TwoConnected => r.push("2-connected", g.is_two_connected(), ""),
            VertexConnectivityAtLeast(k) => match vertex_connectivity(g) {
                Ok((c, _)) => r.push("vertex connectivity", c >= k, format!("{c}, expected at least {k}")),
                Err(e) => r.push("vertex connectivity", false, e.to_string()),
            },
            EdgeConnectivityAtLeast(k) => match edge_connectivity(g) {
                Ok((c, _)) => r.push("edge connectivity", c >= k, format!("{c}, expected at least {k}")),
                Err(e) => r.push("edge connectivity", false, e.to_string()),
            },
            Planar => match rot.map(|rot| genus_from_rotation(g, rot)) {
                Some(Ok(gr)) => r.push("planar", gr.genus == 0, format!("genus {}, {} faces", gr.genus, gr.faces)),
                Some(Err(e)) => r.push("planar", false, e.to_string()),
                None => r.push("planar", false, "no rotation supplied"),
            },
            IndependenceNumber(a) => {
                let got = max_independent_set(g).len();
                r.push(
                    "independence number",
                    got == a,
                    format!("alpha = {got}, expected {a}, required {}", g.order() / 3),
                );
            }
            NoClawDecomposition => match decide_claw_4regular(g) {
                Ok(Decision::NotDecomposable(cert)) => {
                    r.push("no claw-decomposition", verify_certificate(g, 3, &cert), format!("{cert:?}"));
                    r.certificate = Some(cert);
                }
                Ok(Decision::Decomposable(_)) => r.push("no claw-decomposition", false, "decomposition found"),
                Err(e) => r.push("no claw-decomposition", false, e.to_string()),
            },
            UniqueSetLeavesTwoCycles => {
                let (classes, extra) = independent_set_classes(g, g.order() / 3);
                r.push(
                    "unique set leaves two cycles",
                    classes == 1 && extra.is_some_and(|x| x >= 1),
                    format!("{classes} classes, largest component excess {extra:?}"),
                );
            }
            OracleAgreement => {
                if g.size() > ORACLE_EDGE_LIMIT {
                    r.push("oracle agreement", false, format!("{} edges exceed the oracle limit", g.size()));
                    continue;
                }
                let fast = decide_claw_4regular(g).map(|d| d.is_decomposable());
                let slow = exact_cover_oracle(g, 3, DEFAULT_NODE_LIMIT).map(|d| d.is_some());
                match (fast, slow) {
                    (Ok(a), Ok(b)) => r.push("oracle agreement", a == b, format!("decider {a}, exact cover {b}")),
                    (Err(e), _) | (_, Err(e)) => r.push("oracle agreement", false, e.to_string()),
                }
            }
        }
    }
    r
}

/// Isomorphism classes of the pairs `(G, S)` over independent sets `S` of
/// size `t`, and for the first set found, the largest `|E| - |V|` over the
/// components of `G - S`.
pub fn independent_set_classes(g: &Graph, t: usize) -> (usize, Option<i64>) {
    let mut classes = HashSet::new();
    let mut excess = None;
    for s in independent_sets_of_size(g, t) {
        if excess.is_none() {
            let rest = g.all_vertices().difference(s);
            excess = g
                .components_within(rest)
                .iter()
                .map(|&c| g.edges_within(c) as i64 - c.len() as i64)
                .max();
        }
        classes.insert(marked_form(g, s));
    }
    (classes.len(), excess)
}

/// Canonical form of `G` plus an apex joined to `S`.
fn marked_form(g: &Graph, s: VertexSet) -> Vec<u8> {
    let apex = g.order();
    let mut pairs = g.edges().to_vec();
    pairs.extend(s.iter().map(|v| (v, apex)));
    let h = Graph::from_edge_list(apex + 1, &pairs).expect("apex within bounds");
    canonical_form(&h).bytes
}
