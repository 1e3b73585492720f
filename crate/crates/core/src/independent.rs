//! Independent sets: exact maximum, exhaustive enumeration of a fixed
//! size, and the component test applied to their complements.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Partitions `cands` greedily into cliques. The number of cliques bounds
/// the independence number of the induced subgraph from above.
fn clique_cover_bound(adj: &[VertexSet], mut cands: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(v) = cands.first() {
        cands.remove(v);
        let mut ext = cands.intersection(adj[v]);
        let mut clique = VertexSet::singleton(v);
        while let Some(w) = ext.first() {
            clique.insert(w);
            ext = ext.intersection(adj[w]);
        }
        cands = cands.difference(clique);
        cliques += 1;
    }
    cliques
}

struct MisSearch<'a> {
    adj: &'a [VertexSet],
    best: VertexSet,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cands: VertexSet, mut chosen: VertexSet) {
        // vertices of degree <= 1 in the candidate graph are always safe to take
        loop {
            let forced = cands
                .iter()
                .find(|&v| self.adj[v].intersection(cands).len() <= 1);
            match forced {
                Some(v) => {
                    chosen.insert(v);
                    cands = cands.difference(self.adj[v]);
                    cands.remove(v);
                }
                None => break,
            }
        }
        if cands.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + clique_cover_bound(self.adj, cands) <= self.best.len() {
            return;
        }
        let v = cands
            .iter()
            .max_by_key(|&v| (self.adj[v].intersection(cands).len(), std::cmp::Reverse(v)))
            .unwrap();
        let mut with = chosen;
        with.insert(v);
        let rest = cands.difference(self.adj[v]).difference(VertexSet::singleton(v));
        self.run(rest, with);
        let mut without = cands;
        without.remove(v);
        self.run(without, chosen);
    }
}

/// An independent set of maximum cardinality (simple view of `g`).
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let mut search = MisSearch {
        adj: g.adjacency(),
        best: VertexSet::EMPTY,
    };
    search.run(g.all_vertices(), VertexSet::EMPTY);
    debug_assert!(g.is_independent(search.best));
    search.best
}

/// Independence number restricted to the vertices in `within`.
pub fn independence_number_within(g: &Graph, within: VertexSet) -> usize {
    let mut search = MisSearch {
        adj: g.adjacency(),
        best: VertexSet::EMPTY,
    };
    search.run(within, VertexSet::EMPTY);
    search.best.len()
}

/// Every independent set of exactly `t` vertices, each once, in
/// lexicographic order of their sorted member lists.
pub fn independent_sets_of_size(g: &Graph, t: usize) -> IndependentSets<'_> {
    let mut stack = Vec::new();
    if t <= g.order() {
        stack.push(Frame {
            chosen: VertexSet::EMPTY,
            cands: g.all_vertices(),
        });
    }
    IndependentSets {
        adj: g.adjacency(),
        t,
        stack,
    }
}

struct Frame {
    chosen: VertexSet,
    cands: VertexSet,
}

pub struct IndependentSets<'a> {
    adj: &'a [VertexSet],
    t: usize,
    stack: Vec<Frame>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(top) = self.stack.last_mut() {
            let have = top.chosen.len();
            if have == self.t {
                let found = top.chosen;
                self.stack.pop();
                return Some(found);
            }
            let need = self.t - have;
            if top.cands.len() < need
                || (need > 1 && clique_cover_bound(self.adj, top.cands) < need)
            {
                self.stack.pop();
                continue;
            }
            let v = top.cands.first().unwrap();
            top.cands.remove(v);
            let mut chosen = top.chosen;
            chosen.insert(v);
            let cands = top.cands.difference(self.adj[v]);
            self.stack.push(Frame { chosen, cands });
        }
        None
    }
}

/// Vertex and edge counts for one component of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: VertexSet,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl ComponentReport {
    pub fn is_unicyclic(&self) -> bool {
        self.edge_count == self.vertex_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnicyclicReport {
    pub all_unicyclic: bool,
    pub components: Vec<ComponentReport>,
}

/// Checks that every component of the graph induced on `V - S` has as many
/// edges (with multiplicity) as vertices, i.e. contains exactly one cycle.
pub fn unicyclic_components_check(g: &Graph, s: VertexSet) -> UnicyclicReport {
    let rest = g.all_vertices().difference(s);
    let components: Vec<_> = g
        .components_within(rest)
        .into_iter()
        .map(|c| ComponentReport {
            vertices: c,
            vertex_count: c.len(),
            edge_count: g.edges_within(c),
        })
        .collect();
    UnicyclicReport {
        all_unicyclic: components.iter().all(ComponentReport::is_unicyclic),
        components,
    }
}

/// Fast form of [`unicyclic_components_check`] that stops at the first
/// failing component.
pub fn all_components_unicyclic(g: &Graph, s: VertexSet) -> bool {
    let rest = g.all_vertices().difference(s);
    let mut left = rest;
    while let Some(v) = left.first() {
        let c = g.reach(v, rest);
        if g.edges_within(c) != c.len() {
            return false;
        }
        left = left.difference(c);
    }
    true
}
