//! Deciding k-star-decompositions for graphs with maximum degree at most
//! `2k - 1`.
//!
//! With `Δ(G) <= 2k - 1` every vertex centers at most one star, so a
//! decomposition has exactly `|E|/k` centers and the remaining
//! `t = |V| - |E|/k` vertices form an independent set `S`. Conversely, given
//! an independent `S` of that size, `G` decomposes exactly when `G - S` can
//! be oriented with every in-degree at most `d_G(v) - k`, tested here as a
//! bounded in-degree orientation plus the edge-count identity
//! `|E(G - S)| = Σ_{v ∉ S} (d_G(v) - k)`. Edges between `S` and the rest are
//! then pointed into `S` and each non-`S` vertex centers its `k` out-edges.
//!
//! For 4-regular graphs and `k = 3` the orientation test reduces to every
//! component of `G - S` having exactly one cycle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independent::{
    all_components_unicyclic, independent_sets_of_size, max_independent_set,
};
use crate::orientation::{hakimi_orient, HakimiOutcome, Orientation};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    /// Edge indices of the star.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarDecomposition {
    pub k: usize,
    pub stars: Vec<Star>,
}

impl StarDecomposition {
    pub fn centers(&self) -> VertexSet {
        self.stars.iter().map(|s| s.center).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum NonDecomposabilityCertificate {
    /// Even a maximum independent set is smaller than the required
    /// non-center set.
    IndependenceBound { witness: VertexSet, required: usize },
    /// Every independent set of the required size was tried and failed the
    /// orientation condition.
    CriterionExhausted {
        required: usize,
        examined: u64,
        /// The first few failing candidates, in search order.
        sample: Vec<VertexSet>,
    },
}

/// Candidates kept in a [`NonDecomposabilityCertificate::CriterionExhausted`].
pub const CERTIFICATE_SAMPLE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Decomposable(StarDecomposition),
    NotDecomposable(NonDecomposabilityCertificate),
}

impl Decision {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Decision::Decomposable(_))
    }
}

fn check_hypotheses(g: &Graph, k: usize) -> Result<usize> {
    if k < 3 {
        return Err(Error::StarSizeTooSmall(k));
    }
    if !g.size().is_multiple_of(k) {
        return Err(Error::SizeNotDivisible { edges: g.size(), k });
    }
    let limit = 2 * k - 1;
    if g.max_degree() > limit {
        return Err(Error::MaxDegreeTooLarge {
            max_degree: g.max_degree(),
            limit,
        });
    }
    Ok(g.order().saturating_sub(g.size() / k))
}

/// Decides whether `g` has a `k`-star-decomposition.
///
/// Requires `k >= 3`, `k | |E|` and `Δ(G) <= 2k - 1`.
pub fn decide_star_decomposition(g: &Graph, k: usize) -> Result<Decision> {
    let t = check_hypotheses(g, k)?;
    let mut examined = 0u64;
    let mut sample = Vec::new();
    for s in independent_sets_of_size(g, t) {
        examined += 1;
        if let Some(d) = try_candidate(g, k, s)? {
            return Ok(Decision::Decomposable(d));
        }
        if sample.len() < CERTIFICATE_SAMPLE {
            sample.push(s);
        }
    }
    Ok(Decision::NotDecomposable(exhausted_certificate(g, t, examined, sample)))
}

fn exhausted_certificate(
    g: &Graph,
    required: usize,
    examined: u64,
    sample: Vec<VertexSet>,
) -> NonDecomposabilityCertificate {
    if examined == 0 {
        NonDecomposabilityCertificate::IndependenceBound {
            witness: max_independent_set(g),
            required,
        }
    } else {
        NonDecomposabilityCertificate::CriterionExhausted {
            required,
            examined,
            sample,
        }
    }
}

/// Tests one candidate non-center set and builds the decomposition if it
/// works.
fn try_candidate(g: &Graph, k: usize, s: VertexSet) -> Result<Option<StarDecomposition>> {
    let rest = g.all_vertices().difference(s);
    let mut budget_total = 0usize;
    for v in rest {
        if g.degree(v) < k {
            return Ok(None);
        }
        budget_total += g.degree(v) - k;
    }
    let sub = g.induced(rest);
    if sub.graph.size() != budget_total {
        return Ok(None);
    }
    let budget: Vec<usize> = sub.vertex_map.iter().map(|&v| g.degree(v) - k).collect();
    let inner = match hakimi_orient(&sub.graph, &budget)? {
        HakimiOutcome::Oriented(o) => o,
        HakimiOutcome::Violated(_) => return Ok(None),
    };
    let mut tails = vec![usize::MAX; g.size()];
    for (j, &e) in sub.edge_map.iter().enumerate() {
        tails[e] = sub.vertex_map[inner.tail(j)];
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tails[e] == usize::MAX {
            // exactly one end is in S since S is independent
            tails[e] = if s.contains(u) { v } else { u };
        }
    }
    let o = Orientation::new(g.clone(), tails)?;
    Ok(Some(stars_with_single_centers(&o, k)?))
}

fn stars_with_single_centers(o: &Orientation, k: usize) -> Result<StarDecomposition> {
    let d = crate::orientation::stars_from_zero_orientation(o, k)?;
    debug_assert!(d.stars.iter().all(|s| s.edges.len() == k));
    Ok(d)
}

/// Claw-decomposition of a simple 4-regular graph via the component test:
/// `G` decomposes iff some independent `S` with `|S| = |V|/3` leaves only
/// components with exactly one cycle.
pub fn decide_claw_4regular(g: &Graph) -> Result<Decision> {
    if !g.is_simple() || !g.is_regular(4) {
        return Err(Error::NotFourRegular);
    }
    if !g.size().is_multiple_of(3) {
        return Err(Error::SizeNotDivisible { edges: g.size(), k: 3 });
    }
    let t = g.order() / 3;
    let mut examined = 0u64;
    let mut sample = Vec::new();
    for s in independent_sets_of_size(g, t) {
        examined += 1;
        if all_components_unicyclic(g, s) {
            return Ok(Decision::Decomposable(claws_from_unicyclic(g, s)));
        }
        if sample.len() < CERTIFICATE_SAMPLE {
            sample.push(s);
        }
    }
    Ok(Decision::NotDecomposable(exhausted_certificate(g, t, examined, sample)))
}

/// Only the yes/no answer of [`decide_claw_4regular`], without building
/// stars or certificates.
pub fn has_claw_decomposition_4regular(g: &Graph) -> bool {
    let t = g.order() / 3;
    independent_sets_of_size(g, t).any(|s| all_components_unicyclic(g, s))
}

/// Orients each unicyclic component of `G - S` so every vertex has
/// in-degree one (cycle cyclically, trees away from the cycle), points the
/// remaining edges into `S`, and reads off one claw per non-`S` vertex.
fn claws_from_unicyclic(g: &Graph, s: VertexSet) -> StarDecomposition {
    let rest = g.all_vertices().difference(s);
    let mut tails = vec![usize::MAX; g.size()];
    let mut inner_deg = vec![0usize; g.order()];
    for v in rest {
        inner_deg[v] = g.neighbors(v).intersection(rest).len();
    }
    // peel leaves; what survives in each component is its cycle
    let mut deg = inner_deg.clone();
    let mut on_cycle = rest;
    let mut queue: VecDeque<usize> = rest.iter().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !on_cycle.contains(v) {
            continue;
        }
        on_cycle.remove(v);
        for w in g.neighbors(v).intersection(on_cycle) {
            deg[w] -= 1;
            if deg[w] == 1 {
                queue.push_back(w);
            }
        }
    }
    let edge_between = |u: usize, v: usize| {
        *g.incident(u)
            .iter()
            .find(|&&e| g.other_end(e, u) == v)
            .expect("adjacent vertices share an edge")
    };
    let mut visited = VertexSet::EMPTY;
    for start in on_cycle {
        if visited.contains(start) {
            continue;
        }
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            visited.insert(cur);
            let next = g
                .neighbors(cur)
                .intersection(on_cycle)
                .iter()
                .find(|&w| w != prev)
                .expect("every cycle vertex has two cycle neighbors");
            tails[edge_between(cur, next)] = cur;
            if next == start {
                break;
            }
            prev = cur;
            cur = next;
        }
    }
    // trees hang off the cycle; orient away from it
    let mut queue: VecDeque<usize> = on_cycle.iter().collect();
    let mut reached = on_cycle;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).intersection(rest).difference(reached) {
            tails[edge_between(v, w)] = v;
            reached.insert(w);
            queue.push_back(w);
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tails[e] == usize::MAX {
            tails[e] = if s.contains(u) { v } else { u };
        }
    }
    let o = Orientation::new(g.clone(), tails).expect("tails are endpoints");
    crate::orientation::stars_from_zero_orientation(&o, 3).expect("out-degrees are 3 or 0")
}

/// Exhaustive exact cover of the edge set by `k`-stars.
///
/// Picks the lowest uncovered edge and branches over every star through it:
/// center at either endpoint plus `k - 1` further uncovered edges there.
pub fn exact_cover_oracle(g: &Graph, k: usize, node_limit: u64) -> Result<Option<StarDecomposition>> {
    if k == 0 {
        return Err(Error::StarSizeTooSmall(k));
    }
    if !g.size().is_multiple_of(k) {
        return Err(Error::SizeNotDivisible { edges: g.size(), k });
    }
    let mut search = CoverSearch {
        g,
        k,
        covered: vec![false; g.size()],
        stars: Vec::new(),
        nodes: 0,
        limit: node_limit,
    };
    if search.run()? {
        Ok(Some(StarDecomposition { k, stars: search.stars }))
    } else {
        Ok(None)
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    k: usize,
    covered: Vec<bool>,
    stars: Vec<Star>,
    nodes: u64,
    limit: u64,
}

impl CoverSearch<'_> {
    fn run(&mut self) -> Result<bool> {
        let Some(e) = self.covered.iter().position(|&c| !c) else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        let (u, v) = self.g.edge(e);
        for center in [u, v] {
            let others: Vec<usize> = self
                .g
                .incident(center)
                .iter()
                .copied()
                .filter(|&f| f != e && !self.covered[f])
                .collect();
            if others.len() < self.k - 1 {
                continue;
            }
            let mut pick = Vec::with_capacity(self.k - 1);
            if self.choose(center, e, &others, 0, &mut pick)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn choose(&mut self, center: usize, e: usize, others: &[usize], from: usize, pick: &mut Vec<usize>) -> Result<bool> {
        if pick.len() == self.k - 1 {
            let mut edges = vec![e];
            edges.extend_from_slice(pick);
            edges.sort_unstable();
            for &f in &edges {
                self.covered[f] = true;
            }
            self.stars.push(Star { center, edges });
            if self.run()? {
                return Ok(true);
            }
            let star = self.stars.pop().unwrap();
            for f in star.edges {
                self.covered[f] = false;
            }
            return Ok(false);
        }
        let need = self.k - 1 - pick.len();
        for i in from..=others.len().saturating_sub(need) {
            if i >= others.len() {
                break;
            }
            pick.push(others[i]);
            let found = self.choose(center, e, others, i + 1, pick)?;
            pick.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

/// Checks a claimed decomposition clause by clause: edges partitioned,
/// every star edge at its center, star sizes, centering multiplicity, and
/// (for `Δ <= 2k - 1`) independence of the non-centers.
pub fn verify_decomposition(g: &Graph, d: &StarDecomposition) -> DecompositionReport {
    let mut violations = Vec::new();
    let k = d.k;
    let mut seen = vec![0usize; g.size()];
    let mut centered = vec![0usize; g.order()];
    for (i, star) in d.stars.iter().enumerate() {
        if star.center >= g.order() {
            violations.push(format!("star {i}: center {} out of range", star.center));
            continue;
        }
        centered[star.center] += 1;
        if star.edges.len() != k {
            violations.push(format!("star {i}: has {} edges, expected {k}", star.edges.len()));
        }
        for &e in &star.edges {
            if e >= g.size() {
                violations.push(format!("star {i}: edge {e} out of range"));
                continue;
            }
            seen[e] += 1;
            let (u, v) = g.edge(e);
            if u != star.center && v != star.center {
                violations.push(format!("star {i}: edge {e} not incident to center {}", star.center));
            }
        }
    }
    for (e, &c) in seen.iter().enumerate() {
        if c != 1 {
            violations.push(format!("partition: edge {e} covered {c} times"));
        }
    }
    if let Some(cap) = g.max_degree().checked_div(k) {
        for (v, &c) in centered.iter().enumerate() {
            if c > cap {
                violations.push(format!("vertex {v} centers {c} stars, at most {cap} possible"));
            }
        }
        if g.max_degree() < 2 * k {
            let non_centers = g.all_vertices().difference(d.centers());
            if !g.is_independent(non_centers) {
                let (u, v) = g
                    .edges()
                    .iter()
                    .copied()
                    .find(|&(u, v)| non_centers.contains(u) && non_centers.contains(v))
                    .unwrap();
                violations.push(format!("independence: non-centers {u} and {v} are adjacent"));
            }
        }
    }
    DecompositionReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Re-checks a certificate against the graph: the witness of an
/// independence bound must be a maximum independent set smaller than the
/// requirement; an exhausted search must recount to the same number of
/// candidates, none of which passes.
pub fn verify_certificate(g: &Graph, k: usize, cert: &NonDecomposabilityCertificate) -> bool {
    let required = g.order().saturating_sub(g.size() / k);
    match cert {
        NonDecomposabilityCertificate::IndependenceBound { witness, required: r } => {
            *r == required
                && g.is_independent(*witness)
                && witness.len() < required
                && max_independent_set(g).len() == witness.len()
        }
        NonDecomposabilityCertificate::CriterionExhausted {
            required: r,
            examined,
            sample,
        } => {
            if *r != required {
                return false;
            }
            let mut count = 0u64;
            for s in independent_sets_of_size(g, required) {
                count += 1;
                if matches!(try_candidate(g, k, s), Ok(Some(_)) | Err(_)) {
                    return false;
                }
            }
            count == *examined && sample.iter().all(|&s| g.is_independent(s) && s.len() == required)
        }
    }
}
