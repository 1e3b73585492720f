//! Undirected multigraphs on indexed vertices.
//!
//! Vertices are `0..n` with `n <= MAX_VERTICES`. Edges keep the order and
//! orientation they were given in, so edge indices are stable identifiers
//! that orientations, stars and rotation systems refer to. Parallel edges
//! are allowed, loops are not.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vset::VertexSet;
use crate::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
    incident: Vec<Vec<usize>>,
    simple: bool,
}

impl Graph {
    /// Builds a graph from endpoint pairs. Repeated pairs become parallel edges.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::UniverseExceeded(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut incident = vec![Vec::new(); n];
        let mut simple = true;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            if adj[u].contains(v) {
                simple = false;
            }
            adj[u].insert(v);
            adj[v].insert(u);
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(Graph {
            n,
            edges: pairs.to_vec(),
            adj,
            incident,
            simple,
        })
    }

    /// Builds a simple graph from neighbor sets (each edge once, `u < v`, in
    /// row order).
    pub fn from_adjacency(rows: &[VertexSet]) -> Result<Graph> {
        let n = rows.len();
        let mut pairs = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::LoopRejected(u));
            }
            for v in row.iter().filter(|&v| v > u) {
                if v >= n || !rows[v].contains(u) {
                    return Err(Error::VertexOutOfRange(v));
                }
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).expect("empty graph within bound")
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for v in 1..n {
            for u in 0..v {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs).expect("complete graph within bound")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &pairs).expect("cycle within bound")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(a + b, &pairs).expect("complete bipartite graph within bound")
    }

    /// The octahedron K_{2,2,2}; antipodal pairs are {0,1}, {2,3}, {4,5}.
    pub fn octahedron() -> Graph {
        let mut pairs = Vec::new();
        for v in 1..6 {
            for u in 0..v {
                if u / 2 != v / 2 {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edge_list(6, &pairs).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edge_list(10, &pairs).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of edge `e` that is not `v`.
    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Simple-graph neighbor set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Indices of edges at `v`, in edge order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// Degree counted with multiplicity.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        if !self.has_edge(u, v) {
            return 0;
        }
        if self.simple {
            return 1;
        }
        self.incident[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// e_G(A): number of edges (with multiplicity) with both ends in `a`.
    pub fn edges_within(&self, a: VertexSet) -> usize {
        if self.simple {
            let twice: usize = a.iter().map(|v| self.adj[v].intersection(a).len()).sum();
            twice / 2
        } else {
            self.edges
                .iter()
                .filter(|&&(u, v)| a.contains(u) && a.contains(v))
                .count()
        }
    }

    /// Number of edges with exactly one end in `a`.
    pub fn cut_size(&self, a: VertexSet) -> usize {
        if self.simple {
            a.iter()
                .map(|v| self.adj[v].difference(a).len())
                .sum()
        } else {
            self.edges
                .iter()
                .filter(|&&(u, v)| a.contains(u) != a.contains(v))
                .count()
        }
    }

    /// Indices of the edges crossing `a`.
    pub fn cut_edges(&self, a: VertexSet) -> Vec<usize> {
        (0..self.size())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                a.contains(u) != a.contains(v)
            })
            .collect()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection(s).is_empty())
    }

    /// Subgraph induced on `keep`, relabeled to `0..|keep|` in increasing order.
    pub fn induced(&self, keep: VertexSet) -> InducedSubgraph {
        let vertex_map: Vec<usize> = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            index[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep.contains(u) && keep.contains(v) {
                pairs.push((index[u], index[v]));
                edge_map.push(e);
            }
        }
        let graph = Graph::from_edge_list(vertex_map.len(), &pairs).expect("subgraph of a valid graph");
        InducedSubgraph {
            graph,
            vertex_map,
            edge_map,
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`; edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &pairs).expect("relabeling preserves validity")
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices())
    }

    /// Components of the subgraph induced on `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.all_vertices()).len() == self.n
    }

    /// True when the graph has at least 3 vertices, is connected, and no
    /// single vertex deletion disconnects it.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.all_vertices();
        (0..self.n).all(|v| {
            let rest = all.difference(VertexSet::singleton(v));
            let start = rest.first().unwrap();
            self.reach(start, rest) == rest
        })
    }

    /// Cartesian product; vertex (g, h) is `g * |V(H)| + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        if !self.simple || !other.simple {
            return Err(Error::NotSimple);
        }
        let (ng, nh) = (self.n, other.n);
        let n = ng * nh;
        if n > MAX_VERTICES {
            return Err(Error::UniverseExceeded(n));
        }
        let mut pairs = Vec::new();
        for g in 0..ng {
            for &(h1, h2) in &other.edges {
                pairs.push((g * nh + h1, g * nh + h2));
            }
        }
        for &(g1, g2) in &self.edges {
            for h in 0..nh {
                pairs.push((g1 * nh + h, g2 * nh + h));
            }
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Disjoint union; `other`'s vertices are shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edge_list(self.n + other.n, &pairs)
    }

    /// Breadth-first distances from `s` (usize::MAX when unreachable).
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A subgraph together with the maps back to its parent's indices.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertex_map[i]` is the parent vertex of subgraph vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[j]` is the parent edge of subgraph edge `j`.
    pub edge_map: Vec<usize>,
}
