//! Brute-force oracles shared by the integration and acceptance tests.
//! Nothing here calls the algorithms under test.

#![allow(dead_code)]

use clawdec::{Graph, VertexSet};
use rand::Rng;

/// Every permutation of `0..n`, in Heap's order.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Order of the automorphism group, by trying all `n!` permutations.
pub fn automorphism_count(g: &Graph) -> u64 {
    let a = adjacency_matrix(g);
    let n = g.order();
    let mut count = 0;
    for_each_permutation(n, &mut |p| {
        if (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == a[p[u]][p[v]])) {
            count += 1;
        }
    });
    count
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (a, b) = (adjacency_matrix(g), adjacency_matrix(h));
    let n = g.order();
    let mut found = false;
    for_each_permutation(n, &mut |p| {
        if !found && (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == b[p[u]][p[v]])) {
            found = true;
        }
    });
    found
}

fn connected_pairs(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in pairs {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

/// Number of labeled `d`-regular simple graphs on `0..n`, by deciding every
/// vertex pair in turn.
pub fn labeled_regular_count(n: usize, d: usize, connected_only: bool) -> u64 {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut deg = vec![0usize; n];
    let mut chosen = Vec::new();
    let mut count = 0;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        slots: &[(usize, usize)],
        n: usize,
        d: usize,
        connected_only: bool,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        count: &mut u64,
    ) {
        if i == slots.len() {
            if deg.iter().all(|&x| x == d) && (!connected_only || connected_pairs(n, chosen)) {
                *count += 1;
            }
            return;
        }
        let (u, v) = slots[i];
        // once all pairs at u are decided, u must be full
        let last_for_u = v == n - 1;
        if deg[u] < d && deg[v] < d {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if !last_for_u || deg[u] == d {
                rec(i + 1, slots, n, d, connected_only, deg, chosen, count);
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !last_for_u || deg[u] == d {
            rec(i + 1, slots, n, d, connected_only, deg, chosen, count);
        }
    }
    rec(0, &slots, n, d, connected_only, &mut deg, &mut chosen, &mut count);
    count
}

/// n!
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Whether some orientation gives every vertex in-degree at most
/// `budget[v]`, by trying all `2^m` orientations.
pub fn hakimi_brute(g: &Graph, budget: &[usize]) -> bool {
    let m = g.size();
    assert!(m <= 24);
    (0u32..1 << m).any(|mask| {
        let mut indeg = vec![0usize; g.order()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let head = if mask >> e & 1 == 1 { u } else { v };
            indeg[head] += 1;
        }
        indeg.iter().zip(budget).all(|(d, b)| d <= b)
    })
}

/// Independence number by trying every subset.
pub fn alpha_brute(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24);
    (0u64..1 << n)
        .filter(|&m| g.is_independent(VertexSet(m as u128)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Random simple graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// `g` with vertex `v` renamed `perm[v]`, edges kept in the same order.
pub fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.order(), &pairs).unwrap()
}

/// Connected 4-regular graphs of order `n` from a labeled search, one per
/// class by brute-force isomorphism. Only for tiny `n`.
pub fn four_regular_classes(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out: Vec<Graph> = Vec::new();
    let mut deg = vec![0usize; n];
    let mut chosen = Vec::new();
    fn rec(i: usize, slots: &[(usize, usize)], n: usize, deg: &mut Vec<usize>, chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        if i == slots.len() {
            if deg.iter().all(|&x| x == 4) && connected_pairs(n, chosen) {
                let g = Graph::from_edge_list(n, chosen).unwrap();
                if !out.iter().any(|h| isomorphic(h, &g)) {
                    out.push(g);
                }
            }
            return;
        }
        let (u, v) = slots[i];
        let last_for_u = v == n - 1;
        if deg[u] < 4 && deg[v] < 4 {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if !last_for_u || deg[u] == 4 {
                rec(i + 1, slots, n, deg, chosen, out);
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !last_for_u || deg[u] == 4 {
            rec(i + 1, slots, n, deg, chosen, out);
        }
    }
    rec(0, &slots, n, &mut deg, &mut chosen, &mut out);
    out
}
