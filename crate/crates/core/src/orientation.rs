//! Orientations: bounded in-degree (via max-flow, with a violating-set
//! certificate on failure), exhaustive modulo-k out-degree search, and
//! reading stars off an orientation whose out-degrees are all `0 mod k`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::stardecomp::{Star, StarDecomposition};
use crate::vset::VertexSet;

/// A direction for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    tails: Vec<usize>,
}

impl Orientation {
    /// `tails[e]` must be an endpoint of edge `e`.
    pub fn new(graph: Graph, tails: Vec<usize>) -> Result<Orientation> {
        if tails.len() != graph.size() {
            return Err(Error::BudgetLength {
                got: tails.len(),
                n: graph.size(),
            });
        }
        for (e, &t) in tails.iter().enumerate() {
            let (u, v) = graph.edge(e);
            if t != u && t != v {
                return Err(Error::VertexOutOfRange(t));
            }
        }
        Ok(Orientation { graph, tails })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tail(&self, e: usize) -> usize {
        self.tails[e]
    }

    pub fn head(&self, e: usize) -> usize {
        self.graph.other_end(e, self.tails[e])
    }

    pub fn tails(&self) -> &[usize] {
        &self.tails
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.graph.order()];
        for &t in &self.tails {
            d[t] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.graph.order()];
        for e in 0..self.tails.len() {
            d[self.head(e)] += 1;
        }
        d
    }

    /// Edges leaving `v`, by increasing index.
    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| self.tails[e] == v)
            .collect()
    }

    /// One `"tail head"` line per edge, in edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in 0..self.tails.len() {
            writeln!(out, "{} {}", self.tail(e), self.head(e)).unwrap();
        }
        out
    }
}

/// A set `S` with `e_G(S) > sum_{v in S} p(v)`, which rules out any
/// orientation with in-degrees bounded by `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolatingSet {
    pub set: VertexSet,
    pub excess: usize,
}

impl ViolatingSet {
    /// Recounts the excess from scratch.
    pub fn recount(g: &Graph, budget: &[usize], set: VertexSet) -> i64 {
        let inside = g.edges_within(set) as i64;
        let allowed: i64 = set.iter().map(|v| budget[v] as i64).sum();
        inside - allowed
    }

    pub fn is_valid(&self, g: &Graph, budget: &[usize]) -> bool {
        self.excess > 0 && Self::recount(g, budget, self.set) == self.excess as i64
    }
}

#[derive(Clone, Debug)]
pub enum HakimiOutcome {
    Oriented(Orientation),
    Violated(ViolatingSet),
}

/// Finds an orientation with `d^-(v) <= budget[v]` for every vertex, or a
/// set on which the edges outnumber the budget.
///
/// Network: source -> edge node (cap 1), edge node -> each endpoint (cap 1),
/// vertex -> sink (cap budget). An edge routed to `v` gets `v` as its head.
pub fn hakimi_orient(g: &Graph, budget: &[usize]) -> Result<HakimiOutcome> {
    let (n, m) = (g.order(), g.size());
    if budget.len() != n {
        return Err(Error::BudgetLength { got: budget.len(), n });
    }
    let source = m + n;
    let sink = source + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut to_end = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, e, 1);
        let au = net.add_arc(e, m + u, 1);
        net.add_arc(e, m + v, 1);
        to_end.push(au);
    }
    for (v, &cap) in budget.iter().enumerate() {
        if cap > 0 {
            net.add_arc(m + v, sink, cap as i64);
        }
    }
    let flow = net.max_flow(source, sink);
    if flow as usize == m {
        let tails = (0..m)
            .map(|e| {
                let (u, v) = g.edge(e);
                // flow reached u, so u is the head
                if net.residual(to_end[e]) == 0 {
                    v
                } else {
                    u
                }
            })
            .collect();
        return Ok(HakimiOutcome::Oriented(Orientation::new(g.clone(), tails)?));
    }
    let side = net.residual_reachable(source);
    let set: VertexSet = (0..n).filter(|&v| side[m + v]).collect();
    let excess = ViolatingSet::recount(g, budget, set);
    assert!(
        excess > 0,
        "min cut of an infeasible Hakimi network must give a violating set"
    );
    Ok(HakimiOutcome::Violated(ViolatingSet {
        set,
        excess: excess as usize,
    }))
}

/// Default node limit for the exhaustive searches.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

/// Exhaustive search for an orientation with `d^+(v) = p(v) (mod k)`.
///
/// Returns `Ok(None)` when the search space is exhausted without a witness.
pub fn mod_k_orientation(
    g: &Graph,
    k: usize,
    residues: &[usize],
    node_limit: u64,
) -> Result<Option<Orientation>> {
    let n = g.order();
    if k == 0 {
        return Err(Error::StarSizeTooSmall(k));
    }
    if residues.len() != n {
        return Err(Error::BudgetLength { got: residues.len(), n });
    }
    let sum: usize = residues.iter().sum();
    if !(g.size() % k + k - sum % k).is_multiple_of(k) {
        return Err(Error::ParityMismatch { edges: g.size(), sum, k });
    }
    let target: Vec<usize> = residues.iter().map(|r| r % k).collect();
    let order = constrained_edge_order(g);
    let mut search = ModKSearch {
        g,
        k,
        target,
        order,
        out: vec![0; n],
        open: g.degrees(),
        tails: vec![usize::MAX; g.size()],
        nodes: 0,
        limit: node_limit,
    };
    if !(0..n).all(|v| search.feasible(v)) {
        return Ok(None);
    }
    if search.run(0)? {
        Ok(Some(Orientation::new(g.clone(), search.tails)?))
    } else {
        Ok(None)
    }
}

/// Orders edges so that vertices get fully decided as early as possible:
/// repeatedly take the vertex with the fewest unordered edges left.
fn constrained_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; g.size()];
    let mut left: Vec<usize> = g.degrees();
    let mut order = Vec::with_capacity(g.size());
    while order.len() < g.size() {
        let v = (0..n)
            .filter(|&v| left[v] > 0)
            .min_by_key(|&v| (left[v], v))
            .unwrap();
        for &e in g.incident(v) {
            if !placed[e] {
                placed[e] = true;
                order.push(e);
                let (a, b) = g.edge(e);
                left[a] -= 1;
                left[b] -= 1;
            }
        }
    }
    order
}

struct ModKSearch<'a> {
    g: &'a Graph,
    k: usize,
    target: Vec<usize>,
    order: Vec<usize>,
    out: Vec<usize>,
    open: Vec<usize>,
    tails: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl ModKSearch<'_> {
    /// Some number of the still-open edges can be made outgoing to hit the
    /// target residue.
    #[inline]
    fn feasible(&self, v: usize) -> bool {
        let need = (self.target[v] + self.k - self.out[v] % self.k) % self.k;
        need <= self.open[v]
    }

    fn run(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        let e = self.order[i];
        let (u, v) = self.g.edge(e);
        self.open[u] -= 1;
        self.open[v] -= 1;
        for (tail, head) in [(u, v), (v, u)] {
            self.out[tail] += 1;
            if self.feasible(tail) && self.feasible(head) {
                self.tails[e] = tail;
                if self.run(i + 1)? {
                    return Ok(true);
                }
            }
            self.out[tail] -= 1;
        }
        self.open[u] += 1;
        self.open[v] += 1;
        self.tails[e] = usize::MAX;
        Ok(false)
    }
}

/// Groups each vertex's outgoing edges, by increasing edge index, into
/// stars of `k` edges. Every out-degree must be a multiple of `k`.
pub fn stars_from_zero_orientation(o: &Orientation, k: usize) -> Result<StarDecomposition> {
    if k == 0 {
        return Err(Error::StarSizeTooSmall(k));
    }
    let g = o.graph();
    let mut stars = Vec::new();
    for v in 0..g.order() {
        let out = o.out_edges(v);
        if !out.len().is_multiple_of(k) {
            return Err(Error::PreconditionViolated(v));
        }
        for chunk in out.chunks(k) {
            stars.push(Star {
                center: v,
                edges: chunk.to_vec(),
            });
        }
    }
    Ok(StarDecomposition { k, stars })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationContract<'a> {
    /// `d^-(v) <= p(v)`.
    InBound(&'a [usize]),
    /// `d^+(v) = p(v) (mod k)`.
    Residue { k: usize, p: &'a [usize] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationReport {
    pub ok: bool,
    pub violating_vertices: Vec<usize>,
}

/// Recomputes degrees from the edge directions and checks the contract.
pub fn verify_orientation(o: &Orientation, contract: OrientationContract<'_>) -> OrientationReport {
    let n = o.graph().order();
    let (outd, ind) = (o.out_degrees(), o.in_degrees());
    let violating_vertices: Vec<usize> = (0..n)
        .filter(|&v| {
            debug_assert_eq!(outd[v] + ind[v], o.graph().degree(v));
            match contract {
                OrientationContract::InBound(p) => p.get(v).is_none_or(|&b| ind[v] > b),
                OrientationContract::Residue { k, p } => {
                    k == 0 || p.get(v).is_none_or(|&r| outd[v] % k != r % k)
                }
            }
        })
        .collect();
    OrientationReport {
        ok: violating_vertices.is_empty(),
        violating_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stardecomp::verify_decomposition;

    fn directed_triangle() -> Orientation {
        let g = Graph::cycle(3);
        Orientation::new(g, vec![0, 1, 2]).unwrap()
    }

    #[test]
    fn triangle_unit_budget_orients() {
        let g = Graph::cycle(3);
        match hakimi_orient(&g, &[1, 1, 1]).unwrap() {
            HakimiOutcome::Oriented(o) => {
                assert!(verify_orientation(&o, OrientationContract::InBound(&[1, 1, 1])).ok);
                assert_eq!(o.in_degrees(), vec![1, 1, 1]);
            }
            HakimiOutcome::Violated(v) => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn triangle_lopsided_budget_fails_on_bc() {
        let g = Graph::cycle(3);
        let p = [3, 0, 0];
        match hakimi_orient(&g, &p).unwrap() {
            HakimiOutcome::Violated(v) => {
                assert!(v.is_valid(&g, &p));
                // every violating set over the 8 subsets contains {1,2}
                assert!(VertexSet::from_slice(&[1, 2]).is_subset(v.set));
            }
            HakimiOutcome::Oriented(_) => panic!("budget too small"),
        }
    }

    #[test]
    fn k4_unit_budget_fails() {
        let g = Graph::complete(4);
        let p = [1; 4];
        match hakimi_orient(&g, &p).unwrap() {
            HakimiOutcome::Violated(v) => {
                assert!(v.is_valid(&g, &p));
                assert_eq!(v.set, VertexSet::full(4));
                assert_eq!(v.excess, 2);
            }
            HakimiOutcome::Oriented(_) => panic!("6 edges cannot fit budget 4"),
        }
    }

    #[test]
    fn hakimi_budget_length_checked() {
        assert!(matches!(
            hakimi_orient(&Graph::cycle(3), &[1, 1]),
            Err(Error::BudgetLength { got: 2, n: 3 })
        ));
    }

    #[test]
    fn claw_zero_residue() {
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let o = mod_k_orientation(&claw, 3, &[0; 4], DEFAULT_NODE_LIMIT).unwrap().unwrap();
        assert_eq!(o.out_degrees(), vec![3, 0, 0, 0]);
        // every edge pointing at the center: d+(center) = 0, d+(leaf) = 1
        let o = mod_k_orientation(&claw, 3, &[0, 1, 1, 1], DEFAULT_NODE_LIMIT).unwrap().unwrap();
        assert_eq!(o.out_degrees(), vec![0, 1, 1, 1]);
        assert_eq!(
            mod_k_orientation(&claw, 3, &[0, 2, 1, 0], DEFAULT_NODE_LIMIT).unwrap(),
            None
        );
    }

    #[test]
    fn k4_has_no_zero_mod3_orientation() {
        // oracle: all 2^6 orientations
        let g = Graph::complete(4);
        let brute = (0u32..64).any(|mask| {
            let mut out = [0usize; 4];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                out[if mask >> e & 1 == 1 { u } else { v }] += 1;
            }
            out.iter().all(|d| d % 3 == 0)
        });
        assert!(!brute);
        assert_eq!(mod_k_orientation(&g, 3, &[0; 4], DEFAULT_NODE_LIMIT).unwrap(), None);
    }

    #[test]
    fn octahedron_zero_mod3_gives_claws() {
        let g = Graph::octahedron();
        let o = mod_k_orientation(&g, 3, &[0; 6], DEFAULT_NODE_LIMIT).unwrap().unwrap();
        assert!(verify_orientation(&o, OrientationContract::Residue { k: 3, p: &[0; 6] }).ok);
        let d = stars_from_zero_orientation(&o, 3).unwrap();
        assert_eq!(d.stars.len(), 4);
        assert!(verify_decomposition(&g, &d).ok);
    }

    #[test]
    fn parity_and_budget_errors() {
        let g = Graph::cycle(4);
        assert_eq!(
            mod_k_orientation(&g, 3, &[0; 4], 10).unwrap_err(),
            Error::ParityMismatch { edges: 4, sum: 0, k: 3 }
        );
        let big = Graph::complete(7);
        // 21 edges, every vertex 0 mod 3 with a tiny budget
        assert_eq!(
            mod_k_orientation(&big, 3, &[0; 7], 5).unwrap_err(),
            Error::BudgetExceeded(5)
        );
    }

    #[test]
    fn six_out_edges_make_two_stars() {
        let g = Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        let o = Orientation::new(g, vec![0; 6]).unwrap();
        let d = stars_from_zero_orientation(&o, 3).unwrap();
        assert_eq!(d.stars.len(), 2);
        assert!(d.stars.iter().all(|s| s.center == 0));
        assert_eq!(d.stars[0].edges, vec![0, 1, 2]);
    }

    #[test]
    fn star_extraction_names_bad_vertex() {
        let o = directed_triangle();
        assert_eq!(stars_from_zero_orientation(&o, 3).unwrap_err(), Error::PreconditionViolated(0));
    }

    #[test]
    fn verify_triangle_contracts() {
        let o = directed_triangle();
        assert!(verify_orientation(&o, OrientationContract::InBound(&[1, 1, 1])).ok);
        assert!(verify_orientation(&o, OrientationContract::Residue { k: 3, p: &[1, 1, 1] }).ok);
        let r = verify_orientation(&o, OrientationContract::Residue { k: 3, p: &[0, 0, 0] });
        assert!(!r.ok);
        assert_eq!(r.violating_vertices, vec![0, 1, 2]);
    }

    #[test]
    fn text_form() {
        assert_eq!(directed_triangle().to_text(), "0 1\n1 2\n2 0\n");
    }
}
