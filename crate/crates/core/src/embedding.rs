//! Rotation systems and face tracing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// For each vertex, the cyclic (clockwise) order of its incident edges.
/// Loops are excluded, so an edge index at a vertex names one edge-end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub order: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(order: Vec<Vec<usize>>) -> Self {
        RotationSystem { order }
    }

    /// Builds a rotation from cyclic neighbor orders of a simple graph.
    pub fn from_neighbor_orders(g: &Graph, neighbors: &[Vec<usize>]) -> Result<Self> {
        if !g.is_simple() {
            return Err(Error::NotSimple);
        }
        let mut order = Vec::with_capacity(g.order());
        for (v, ns) in neighbors.iter().enumerate() {
            let mut row = Vec::with_capacity(ns.len());
            for &w in ns {
                let e = g
                    .incident(v)
                    .iter()
                    .copied()
                    .find(|&e| g.other_end(e, v) == w)
                    .ok_or_else(|| Error::InvalidRotation(format!("{v} and {w} are not adjacent")))?;
                row.push(e);
            }
            order.push(row);
        }
        let rot = RotationSystem { order };
        rot.validate(g)?;
        Ok(rot)
    }

    /// Each vertex's list must be a permutation of its incident edges.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.order() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.order.len(),
                g.order()
            )));
        }
        for (v, row) in self.order.iter().enumerate() {
            let mut got = row.clone();
            got.sort_unstable();
            let mut want = g.incident(v).to_vec();
            want.sort_unstable();
            if got != want {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its edge-ends"
                )));
            }
        }
        Ok(())
    }

    /// The same embedding after renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> RotationSystem {
        let mut order = vec![Vec::new(); self.order.len()];
        for (v, row) in self.order.iter().enumerate() {
            order[perm[v]] = row.clone();
        }
        RotationSystem { order }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub faces: usize,
    /// Orientable genus from `V - E + F = 2 - 2g`.
    pub genus: usize,
}

/// Traces the faces of the embedding and applies Euler's formula.
///
/// A face walk enters `w` along edge `e` and leaves along the edge after
/// `e` in the rotation at `w`.
pub fn genus_from_rotation(g: &Graph, rot: &RotationSystem) -> Result<GenusReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    rot.validate(g)?;
    let m = g.size();
    // position of each edge within the rotation of each of its ends
    let mut pos = vec![[usize::MAX; 2]; m];
    for (v, row) in rot.order.iter().enumerate() {
        for (i, &e) in row.iter().enumerate() {
            let side = (g.edge(e).0 != v) as usize;
            pos[e][side] = i;
        }
    }
    // dart 2e + s leaves endpoint s of edge e
    let mut visited = vec![false; 2 * m];
    let mut faces = 0;
    for start in 0..2 * m {
        if visited[start] {
            continue;
        }
        faces += 1;
        let mut dart = start;
        loop {
            if visited[dart] {
                return Err(Error::InvalidRotation(format!("edge-end {dart} visited twice")));
            }
            visited[dart] = true;
            let (e, s) = (dart / 2, dart % 2);
            let ends = g.edge(e);
            let w = if s == 0 { ends.1 } else { ends.0 };
            let arrive = 1 - s;
            let row = &rot.order[w];
            let next_e = row[(pos[e][arrive] + 1) % row.len()];
            let next_s = (g.edge(next_e).0 != w) as usize;
            dart = 2 * next_e + next_s;
            if dart == start {
                break;
            }
        }
    }
    let euler = g.order() as i64 - m as i64 + faces as i64;
    let twice_genus = 2 - euler;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InvalidRotation(format!("Euler characteristic {euler}")));
    }
    Ok(GenusReport {
        faces,
        genus: (twice_genus / 2) as usize,
    })
}
