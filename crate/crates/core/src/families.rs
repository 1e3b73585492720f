//! The two counterexample families: the planar 4-regular graphs `G_48n`
//! glued from 16-vertex blocks, and the products `C_kn □ K_(2k-3)`.
//!
//! Builders are plain functions; verifiers return a [`PropertyReport`]
//! listing every claim with its own verdict.

use serde::{Deserialize, Serialize};

use crate::connectivity::{essential_edge_connectivity_check, vertex_connectivity};
use crate::embedding::{genus_from_rotation, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphfile::{GraphFile, RotEntry};
use crate::independent::{independence_number_within, max_independent_set};
use crate::stardecomp::{
    decide_claw_4regular, decide_star_decomposition, verify_certificate, Decision, NonDecomposabilityCertificate,
};
use crate::vset::VertexSet;

pub const BLOCK_ORDER: usize = 16;
/// Copies are glued in a ring of `3n`.
const RING_FACTOR: usize = 3;
/// Largest independent set allowed inside one block.
pub const BLOCK_INDEPENDENCE: usize = 5;
/// Products up to this order also get an exact independence number.
pub const EXACT_ALPHA_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub subject: String,
    pub claims: Vec<Claim>,
    pub certificate: Option<NonDecomposabilityCertificate>,
}

impl PropertyReport {
    pub fn new(subject: impl Into<String>) -> Self {
        PropertyReport {
            subject: subject.into(),
            claims: Vec::new(),
            certificate: None,
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.passed).collect()
    }
}

/// One block of `G_48n` with its boundary vertices and a rotation whose
/// `ext+` / `ext-` slots mark where the links to neighboring copies enter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub graph: Graph,
    pub z: usize,
    pub x: usize,
    pub a: usize,
    pub y: usize,
    pub b: usize,
    pub rotation: Vec<Vec<RotEntry>>,
}

impl BlockSpec {
    pub fn from_file(f: &GraphFile) -> Result<BlockSpec> {
        let label = |l: &str| {
            f.label(l)
                .ok_or_else(|| Error::BlockInvariantViolated(format!("label {l} missing")))
        };
        let spec = BlockSpec {
            graph: f.graph.clone(),
            z: label("z")?,
            x: label("x")?,
            a: label("a")?,
            y: label("y")?,
            b: label("b")?,
            rotation: f
                .rotation
                .clone()
                .ok_or_else(|| Error::BlockInvariantViolated("rotation missing".into()))?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_file(&self, name: &str) -> GraphFile {
        let mut f = GraphFile::new(name, self.graph.clone());
        for (l, v) in self.labeled() {
            f.labels.push((l.to_string(), v));
        }
        f.rotation = Some(self.rotation.clone());
        f
    }

    fn labeled(&self) -> [(&'static str, usize); 5] {
        [("z", self.z), ("x", self.x), ("a", self.a), ("y", self.y), ("b", self.b)]
    }

    /// External slots each vertex must carry: `(ext+, ext-)`.
    fn slots(&self, v: usize) -> (usize, usize) {
        if v == self.z {
            (1, 1)
        } else if v == self.x || v == self.y {
            (1, 0)
        } else if v == self.a || v == self.b {
            (0, 1)
        } else {
            (0, 0)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BlockInvariantViolated(m));
        let g = &self.graph;
        if g.order() != BLOCK_ORDER {
            return bad(format!("block has {} vertices, expected {BLOCK_ORDER}", g.order()));
        }
        if !g.is_simple() {
            return bad("block has parallel edges".into());
        }
        let mut seen = VertexSet::EMPTY;
        for (l, v) in self.labeled() {
            if v >= BLOCK_ORDER {
                return bad(format!("label {l} names vertex {v}"));
            }
            if seen.contains(v) {
                return bad(format!("label {l} reuses vertex {v}"));
            }
            seen.insert(v);
        }
        for v in 0..BLOCK_ORDER {
            let (plus, minus) = self.slots(v);
            let want = 4 - plus - minus;
            if g.degree(v) != want {
                let name = self.labeled().iter().find(|(_, u)| *u == v).map_or("unlabeled", |(l, _)| l);
                return bad(format!("vertex {v} ({name}) has degree {}, expected {want}", g.degree(v)));
            }
        }
        if !g.is_connected() {
            return bad("block is disconnected".into());
        }
        if self.rotation.len() != BLOCK_ORDER {
            return bad(format!("{} rotation rows", self.rotation.len()));
        }
        for (v, row) in self.rotation.iter().enumerate() {
            let (plus, minus) = self.slots(v);
            let mut edges: Vec<usize> = row
                .iter()
                .filter_map(|t| match t {
                    RotEntry::Edge(e) => Some(*e),
                    _ => None,
                })
                .collect();
            edges.sort_unstable();
            let mut want = g.incident(v).to_vec();
            want.sort_unstable();
            let got_plus = row.iter().filter(|t| **t == RotEntry::ExtNext).count();
            let got_minus = row.iter().filter(|t| **t == RotEntry::ExtPrev).count();
            if edges != want || got_plus != plus || got_minus != minus {
                return bad(format!("rotation at {v} does not list its edges and slots exactly once"));
            }
        }
        Ok(())
    }
}

/// Glues `3n` copies of the block in a ring with the edges `z_i z_(i+1)`,
/// `x_i a_(i+1)` and `y_i b_(i+1)`, and splices the block rotations.
///
/// Vertex `v` of copy `i` becomes `16 i + v`; the copies' edges come first,
/// copy by copy, followed by the three links of each copy.
pub fn build_g48n(block: &BlockSpec, n: usize) -> Result<(Graph, RotationSystem)> {
    block.validate()?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let copies = RING_FACTOR * n;
    let order = copies * BLOCK_ORDER;
    if order > crate::MAX_VERTICES {
        return Err(Error::UniverseExceeded(order));
    }
    let m = block.graph.size();
    let at = |i: usize, v: usize| (i % copies) * BLOCK_ORDER + v;
    let mut pairs = Vec::with_capacity(copies * (m + 3));
    for i in 0..copies {
        pairs.extend(block.graph.edges().iter().map(|&(u, v)| (at(i, u), at(i, v))));
    }
    let links = pairs.len();
    for i in 0..copies {
        pairs.push((at(i, block.z), at(i + 1, block.z)));
        pairs.push((at(i, block.x), at(i + 1, block.a)));
        pairs.push((at(i, block.y), at(i + 1, block.b)));
    }
    let g = Graph::from_edge_list(order, &pairs)?;
    let link = |i: usize, which: usize| links + 3 * (i % copies) + which;
    let mut rot = vec![Vec::new(); order];
    for i in 0..copies {
        let prev = i + copies - 1;
        for (v, row) in block.rotation.iter().enumerate() {
            rot[at(i, v)] = row
                .iter()
                .map(|t| match *t {
                    RotEntry::Edge(e) => i * m + e,
                    RotEntry::ExtNext if v == block.z => link(i, 0),
                    RotEntry::ExtPrev if v == block.z => link(prev, 0),
                    RotEntry::ExtNext if v == block.x => link(i, 1),
                    RotEntry::ExtPrev if v == block.a => link(prev, 1),
                    RotEntry::ExtNext if v == block.y => link(i, 2),
                    RotEntry::ExtPrev if v == block.b => link(prev, 2),
                    _ => unreachable!("validated slots"),
                })
                .collect();
        }
    }
    let rot = RotationSystem::new(rot);
    rot.validate(&g)?;
    Ok((g, rot))
}

/// Checks every claim about `G_48n` on a graph produced by [`build_g48n`].
pub fn verify_g48n(g: &Graph, rot: &RotationSystem, n: usize) -> PropertyReport {
    let mut r = PropertyReport::new(format!("G_{}", 48 * n));
    r.push("order", g.order() == 48 * n, format!("{} vertices, expected {}", g.order(), 48 * n));
    r.push("simple", g.is_simple(), "");
    let regular = g.is_regular(4);
    r.push("4-regular", regular, format!("degrees {}..{}", g.min_degree(), g.max_degree()));
    r.push(
        "size divisible by 3",
        g.size() == 96 * n && g.size().is_multiple_of(3),
        format!("{} edges", g.size()),
    );
    match genus_from_rotation(g, rot) {
        Ok(gr) => r.push("planar", gr.genus == 0, format!("genus {}, {} faces", gr.genus, gr.faces)),
        Err(e) => r.push("planar", false, e.to_string()),
    }
    let blocks: Vec<VertexSet> = (0..RING_FACTOR * n)
        .map(|i| (i * BLOCK_ORDER..(i + 1) * BLOCK_ORDER).filter(|&v| v < g.order()).collect())
        .collect();
    let ((kappa, essential), (block_alpha, decision)) = rayon::join(
        || rayon::join(|| vertex_connectivity(g), || essential_edge_connectivity_check(g, 6)),
        || {
            rayon::join(
                || {
                    blocks
                        .iter()
                        .map(|&b| independence_number_within(g, b))
                        .collect::<Vec<_>>()
                },
                || decide_claw_4regular(g),
            )
        },
    );
    match kappa {
        Ok((k, _)) => r.push("4-connected", k == 4, format!("vertex connectivity {k}")),
        Err(e) => r.push("4-connected", false, e.to_string()),
    }
    push_essential(&mut r, "essentially 6-edge-connected", essential);
    let worst = block_alpha.iter().copied().max().unwrap_or(0);
    r.push(
        "block independence at most 5",
        worst <= BLOCK_INDEPENDENCE,
        format!("largest block independence number {worst}"),
    );
    let bound: usize = block_alpha.iter().sum();
    r.push(
        "independence below |V|/3",
        bound <= 15 * n && bound < 16 * n,
        format!("alpha <= {bound}, required {}", 16 * n),
    );
    push_certificate(&mut r, g, 3, decision);
    r
}

fn push_essential(r: &mut PropertyReport, name: &str, outcome: Result<Option<crate::connectivity::CutCertificate>>) {
    match outcome {
        Ok(None) => r.push(name, true, "no non-trivial cut below the threshold"),
        Ok(Some(c)) => r.push(name, false, format!("cut of size {} with side {:?}", c.size, c.side)),
        Err(e) => r.push(name, false, e.to_string()),
    }
}

fn push_certificate(r: &mut PropertyReport, g: &Graph, k: usize, decision: Result<Decision>) {
    match decision {
        Ok(Decision::NotDecomposable(cert)) => {
            let ok = verify_certificate(g, k, &cert) && matches!(cert, NonDecomposabilityCertificate::IndependenceBound { .. });
            r.push("certificate", ok, format!("{cert:?}"));
            r.certificate = Some(cert);
        }
        Ok(Decision::Decomposable(_)) => r.push("certificate", false, format!("graph has a {k}-star-decomposition")),
        Err(e) => r.push("certificate", false, e.to_string()),
    }
}

/// `C_(kn) □ K_(2k-3)`; vertex `(c, j)` is `c (2k-3) + j`.
pub fn build_product_family(k: usize, n: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::KTooSmall(k));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let order = k * n * (2 * k - 3);
    if order > crate::MAX_VERTICES {
        return Err(Error::UniverseExceeded(order));
    }
    Graph::cycle(k * n).cartesian_product(&Graph::complete(2 * k - 3))
}

/// Checks every claim about the product family.
pub fn verify_product_family(g: &Graph, k: usize, n: usize) -> PropertyReport {
    let mut r = PropertyReport::new(format!("C_{} x K_{}", k * n, 2 * k - 3));
    let fiber = 2 * k - 3;
    let order = k * n * fiber;
    r.push("order", g.order() == order, format!("{} vertices, expected {order}", g.order()));
    let d = 2 * k - 2;
    r.push(
        "regular",
        g.is_simple() && g.is_regular(d),
        format!("degrees {}..{}, expected {d}", g.min_degree(), g.max_degree()),
    );
    r.push(
        "size divisible by k",
        g.size() == (k - 1) * g.order() && g.size().is_multiple_of(k),
        format!("{} edges", g.size()),
    );
    let exact = g.order() <= EXACT_ALPHA_LIMIT;
    let ((kappa, essential), (alpha, decision)) = rayon::join(
        || rayon::join(|| vertex_connectivity(g), || essential_edge_connectivity_check(g, 4 * k - 6)),
        || rayon::join(|| exact.then(|| max_independent_set(g).len()), || decide_star_decomposition(g, k)),
    );
    match kappa {
        Ok((c, _)) => r.push("vertex connectivity", c == d, format!("{c}, expected {d}")),
        Err(e) => r.push("vertex connectivity", false, e.to_string()),
    }
    push_essential(&mut r, "essential threshold", essential);
    let fibers_are_cliques = g.order() == order
        && (0..k * n).all(|c| {
            (0..fiber).all(|i| (i + 1..fiber).all(|j| g.has_edge(c * fiber + i, c * fiber + j)))
        });
    r.push(
        "fiber bound",
        fibers_are_cliques,
        format!("{} cliques of order {fiber}, so alpha <= {}", k * n, k * n),
    );
    let required = g.order() / k;
    if let Some(a) = alpha {
        r.push(
            "independence number",
            a * fiber <= g.order() && a < required,
            format!("alpha = {a}, |V|/(2k-3) = {}", g.order() / fiber),
        );
    }
    r.push(
        "required set exceeds bound",
        g.order() / fiber < required,
        format!("required {required} > {}", g.order() / fiber),
    );
    push_certificate(&mut r, g, k, decision);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Havel-Hakimi realization, highest remaining degree first.
    fn realize(degrees: &[usize]) -> Vec<(usize, usize)> {
        let mut left: Vec<(usize, usize)> = degrees.iter().copied().enumerate().map(|(v, d)| (d, v)).collect();
        let mut pairs = Vec::new();
        loop {
            left.sort_by(|a, b| b.cmp(a));
            let (d, v) = left[0];
            if d == 0 {
                return pairs;
            }
            left[0].0 = 0;
            for entry in left.iter_mut().skip(1).take(d) {
                assert!(entry.0 > 0, "sequence not graphic");
                entry.0 -= 1;
                pairs.push((v.min(entry.1), v.max(entry.1)));
            }
        }
    }

    /// A block with the right degrees; its rotation lists edges in index
    /// order with the slots appended, so it need not be planar.
    fn synthetic_block() -> BlockSpec {
        let mut degrees = vec![4; BLOCK_ORDER];
        degrees[0] = 2;
        degrees[1..5].fill(3);
        let g = Graph::from_edge_list(BLOCK_ORDER, &realize(&degrees)).unwrap();
        let mut spec = BlockSpec {
            graph: g,
            z: 0,
            x: 1,
            a: 2,
            y: 3,
            b: 4,
            rotation: Vec::new(),
        };
        spec.rotation = (0..BLOCK_ORDER)
            .map(|v| {
                let mut row: Vec<RotEntry> = spec.graph.incident(v).iter().map(|&e| RotEntry::Edge(e)).collect();
                let (plus, minus) = spec.slots(v);
                row.extend(std::iter::repeat_n(RotEntry::ExtNext, plus));
                row.extend(std::iter::repeat_n(RotEntry::ExtPrev, minus));
                row
            })
            .collect();
        spec
    }

    #[test]
    fn g48n_is_four_regular() {
        let block = synthetic_block();
        block.validate().unwrap();
        for n in 1..=2 {
            let (g, rot) = build_g48n(&block, n).unwrap();
            assert_eq!((g.order(), g.size()), (48 * n, 96 * n));
            assert!(g.is_regular(4) && g.is_connected());
            rot.validate(&g).unwrap();
        }
        assert!(matches!(build_g48n(&block, 3), Err(Error::UniverseExceeded(144))));
    }

    #[test]
    fn block_file_round_trip() {
        let block = synthetic_block();
        let text = block.to_file("synthetic").write();
        let back = BlockSpec::from_file(&GraphFile::parse(&text).unwrap()).unwrap();
        assert_eq!(back, block);
    }

    #[test]
    fn block_invariants() {
        let mut block = synthetic_block();
        block.z = block.x;
        assert!(matches!(build_g48n(&block, 1), Err(Error::BlockInvariantViolated(_))));
        let block = synthetic_block();
        let mut pairs = block.graph.edges().to_vec();
        pairs.pop();
        let mut broken = block.clone();
        broken.graph = Graph::from_edge_list(BLOCK_ORDER, &pairs).unwrap();
        assert!(matches!(broken.validate(), Err(Error::BlockInvariantViolated(m)) if m.contains("degree")));
        let mut slots = synthetic_block();
        slots.rotation[0].pop();
        assert!(matches!(slots.validate(), Err(Error::BlockInvariantViolated(m)) if m.contains("rotation")));
    }

    #[test]
    fn g48n_report_flags_corruption() {
        let block = synthetic_block();
        let (g, rot) = build_g48n(&block, 1).unwrap();
        let r = verify_g48n(&g, &rot, 1);
        assert!(r.claim("4-regular").unwrap().passed);
        assert!(r.claim("size divisible by 3").unwrap().passed);
        let mut pairs = g.edges().to_vec();
        pairs.remove(0);
        let broken = Graph::from_edge_list(g.order(), &pairs).unwrap();
        let r = verify_g48n(&broken, &rot, 1);
        assert!(!r.claim("4-regular").unwrap().passed);
        assert!(!r.all_passed());
    }

    #[test]
    fn product_family_small() {
        let g = build_product_family(4, 1).unwrap();
        assert_eq!((g.order(), g.size()), (20, 60));
        let r = verify_product_family(&g, 4, 1);
        assert!(r.all_passed(), "{:?}", r.failures());
        assert_eq!(r.claim("independence number").unwrap().detail, "alpha = 4, |V|/(2k-3) = 4");
        assert!(matches!(
            r.certificate,
            Some(NonDecomposabilityCertificate::IndependenceBound { required: 5, .. })
        ));
    }

    #[test]
    fn product_family_errors() {
        assert!(matches!(build_product_family(3, 1), Err(Error::KTooSmall(3))));
        assert!(matches!(build_product_family(4, 0), Err(Error::InvalidParameter(_))));
        assert_eq!(build_product_family(6, 2).unwrap().order(), 108);
        assert!(matches!(build_product_family(6, 3), Err(Error::UniverseExceeded(162))));
    }
}
