//! Canonical labeling.
//!
//! The canonical form of a graph is the relabeling whose upper-triangle
//! adjacency string, read column by column (`a01, a02, a12, a03, ...`, the
//! graph6 order), is lexicographically largest over all `n!` labelings.
//!
//! Reading by columns makes the first `m(m-1)/2` bits depend only on the
//! first `m` vertices placed. The search therefore places vertices one at a
//! time, only ever continuing with vertices whose column (adjacency to the
//! already placed ones) is maximal, and prunes any branch whose prefix falls
//! below the best string found so far. Automorphisms discovered at equal
//! leaves prune sibling branches that lie in one orbit of the pointwise
//! stabilizer of the current prefix.
//!
//! Because prefixes of the maximal string are themselves maximal for the
//! induced subgraph, the leading principal submatrices of a canonical
//! matrix are canonical. Orderly generation relies on this.

use crate::formats::write_graph6;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonically relabeled graph.
    pub bytes: Vec<u8>,
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }
}

/// Canonical form of the simple view of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let order = best_order(g.adjacency());
    let mut labeling = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    let simple = Graph::from_adjacency(g.adjacency()).expect("simple view is valid");
    let bytes = write_graph6(&simple.relabel(&labeling))
        .expect("simple graph")
        .into_bytes();
    CanonicalForm { bytes, labeling }
}

/// Relabels `g` into its canonical form.
pub fn canonical_graph(g: &Graph) -> Graph {
    let cf = canonical_form(g);
    let simple = Graph::from_adjacency(g.adjacency()).expect("simple view is valid");
    let relabeled = simple.relabel(&cf.labeling);
    Graph::from_adjacency(relabeled.adjacency()).expect("relabeled simple graph")
}

/// Whether the identity labeling of `adj` already is the canonical one.
pub fn is_canonical(adj: &[VertexSet]) -> bool {
    let n = adj.len();
    let identity: Vec<usize> = (0..n).collect();
    let mut search = Search::new(adj, identity, true);
    search.run();
    !search.beaten
}

/// Vertex order (position -> vertex) of the canonical labeling.
fn best_order(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let greedy = greedy_order(adj);
    let mut search = Search::new(adj, greedy, false);
    search.run();
    search.best_order
}

#[inline]
fn bit(pos: usize) -> u128 {
    1u128 << (127 - pos)
}

fn columns_of(adj: &[VertexSet], order: &[usize]) -> Vec<u128> {
    (0..order.len())
        .map(|m| {
            (0..m)
                .filter(|&i| adj[order[i]].contains(order[m]))
                .fold(0, |acc, i| acc | bit(i))
        })
        .collect()
}

/// Leftmost maximal-column path, used to seed the search.
fn greedy_order(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    let mut col = vec![0u128; n];
    let mut left = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    for m in 0..n {
        let v = left.iter().max_by_key(|&v| (col[v], std::cmp::Reverse(v))).unwrap();
        order.push(v);
        left.remove(v);
        for w in adj[v].intersection(left) {
            col[w] |= bit(m);
        }
    }
    order
}

const MAX_AUTOMORPHISMS: usize = 256;

struct Search<'a> {
    adj: &'a [VertexSet],
    n: usize,
    best_cols: Vec<u128>,
    best_order: Vec<usize>,
    path: Vec<usize>,
    autos: Vec<Vec<usize>>,
    /// Stop as soon as the seed labeling is beaten.
    test_only: bool,
    beaten: bool,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [VertexSet], seed: Vec<usize>, test_only: bool) -> Self {
        Search {
            adj,
            n: adj.len(),
            best_cols: columns_of(adj, &seed),
            best_order: seed,
            path: Vec::with_capacity(adj.len()),
            autos: Vec::new(),
            test_only,
            beaten: false,
        }
    }

    fn run(&mut self) {
        let cols = vec![0u128; self.n];
        self.node(&cols, VertexSet::full(self.n), true);
    }

    /// Explores below the current path. `equal` says whether the path's
    /// columns so far coincide with the best string's prefix (otherwise
    /// they are strictly larger). Returns true if the best string changed.
    fn node(&mut self, cols: &[u128], left: VertexSet, mut equal: bool) -> bool {
        let m = self.path.len();
        if m == self.n {
            if equal {
                self.record_automorphism();
                return false;
            }
            self.best_order.clone_from(&self.path);
            self.best_cols = columns_of(self.adj, &self.best_order);
            return true;
        }
        let top = left.iter().map(|v| cols[v]).max().unwrap();
        if equal {
            if top < self.best_cols[m] {
                return false;
            }
            if top > self.best_cols[m] {
                if self.test_only {
                    self.beaten = true;
                    return false;
                }
                equal = false;
            }
        }
        let cands: VertexSet = left.iter().filter(|&v| cols[v] == top).collect();
        let mut changed = false;
        let mut tried = VertexSet::EMPTY;
        let mut next_cols = vec![0u128; self.n];
        for v in cands {
            if !tried.is_empty() && self.equivalent_to_tried(v, tried) {
                continue;
            }
            tried.insert(v);
            let rest = left.difference(VertexSet::singleton(v));
            next_cols.copy_from_slice(cols);
            for w in self.adj[v].intersection(rest) {
                next_cols[w] |= bit(m);
            }
            self.path.push(v);
            let child_changed = self.node(&next_cols, rest, equal);
            self.path.pop();
            if self.beaten {
                return false;
            }
            if child_changed {
                changed = true;
                equal = true;
            }
        }
        changed
    }

    fn record_automorphism(&mut self) {
        if self.autos.len() >= MAX_AUTOMORPHISMS {
            return;
        }
        let mut gamma = vec![0usize; self.n];
        for (i, &v) in self.best_order.iter().enumerate() {
            gamma[v] = self.path[i];
        }
        if gamma.iter().enumerate().all(|(v, &w)| v == w) {
            return;
        }
        debug_assert!((0..self.n).all(|u| self.adj[u].iter().all(|w| self.adj[gamma[u]].contains(gamma[w]))));
        self.autos.push(gamma);
    }

    /// Is `v` in the orbit of an already tried sibling under the known
    /// automorphisms that fix the current path pointwise?
    fn equivalent_to_tried(&self, v: usize, tried: VertexSet) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|g| self.path.iter().all(|&p| g[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        // orbit of v under the group generated by `fixing`
        let mut orbit = VertexSet::singleton(v);
        let mut frontier = orbit;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                for g in &fixing {
                    next.insert(g[u]);
                }
            }
            frontier = next.difference(orbit);
            orbit = orbit.union(frontier);
        }
        !orbit.intersection(tried).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_max_string(g: &Graph) -> Vec<u128> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = columns_of(g.adjacency(), &perm);
        permute(&mut perm, 0, &mut |p| {
            let c = columns_of(g.adjacency(), p);
            if c > best {
                best = c;
            }
        });
        best
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn matches_brute_force_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = 6;
            let pairs: Vec<_> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .filter(|_| rand::Rng::gen_bool(&mut rng, 0.5))
                .collect();
            let g = Graph::from_edge_list(n, &pairs).unwrap();
            let order = best_order(g.adjacency());
            assert_eq!(columns_of(g.adjacency(), &order), brute_max_string(&g));
        }
    }

    #[test]
    fn petersen_relabelings_agree() {
        let g = Graph::petersen();
        let base = canonical_form(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..2 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)).bytes, base.bytes);
        }
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert_ne!(canonical_form(&Graph::cycle(6)).bytes, canonical_form(&two).bytes);
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        use std::collections::HashSet;
        let slots: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let pairs: Vec<_> = slots.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
            forms.insert(canonical_form(&Graph::from_edge_list(4, &pairs).unwrap()).bytes);
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn labeling_reproduces_bytes() {
        let g = Graph::octahedron();
        let cf = canonical_form(&g);
        let relabeled = g.relabel(&cf.labeling);
        assert_eq!(write_graph6(&Graph::from_adjacency(relabeled.adjacency()).unwrap()).unwrap().into_bytes(), cf.bytes);
        assert!(is_canonical(canonical_graph(&g).adjacency()));
    }

    #[test]
    fn canonical_test_rejects_non_maximal() {
        // path 0-1-2 labeled with the middle vertex last
        let g = Graph::from_edge_list(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(!is_canonical(g.adjacency()));
        let h = Graph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(is_canonical(h.adjacency()));
    }

    #[test]
    fn complete_graph_is_fast() {
        let g = Graph::complete(16);
        assert!(is_canonical(g.adjacency()));
        assert_eq!(canonical_form(&g).bytes, write_graph6(&g).unwrap().into_bytes());
    }
}
