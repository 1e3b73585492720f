//! Fixed inputs shared by the benchmarks.

use clawdec::families::build_product_family;
use clawdec::formats::parse_graph6;
use clawdec::Graph;

/// The order-12 graphs without claw-decompositions, plus `C_4 x C_3`.
pub fn order12() -> Vec<Graph> {
    ["K}o`GkPAGP_r", "K~`H?cKBGF?Z", "K~ooOSC@GF_]", "K~ooWWA?gB_N"]
        .iter()
        .map(|s| parse_graph6(s).expect("fixture parses"))
        .chain(std::iter::once(
            Graph::cycle(4).cartesian_product(&Graph::cycle(3)).expect("fixture builds"),
        ))
        .collect()
}

/// `C_4 x K_5`, 20 vertices and 6-regular.
pub fn product() -> Graph {
    build_product_family(4, 1).expect("fixture builds")
}

/// `C_8 x K_5`, 40 vertices.
pub fn product_large() -> Graph {
    build_product_family(4, 2).expect("fixture builds")
}
