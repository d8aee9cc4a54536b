//! Bundled real-world fixtures.

use crate::error::Result;
use crate::generators::{GeneratorMeta, LabeledGraph};
use crate::graph::load_edge_list;
use crate::partition::Partition;

pub const DOLPHINS_EDGES: &str = include_str!("../data/dolphins.txt");
pub const DOLPHINS_TRUTH: &str = include_str!("../data/dolphins_truth.tsv");

/// Lusseau's bottlenose dolphin network (62 vertices, 159 edges) with its
/// two-group split as ground truth.
pub fn dolphins() -> Result<LabeledGraph> {
    let graph = load_edge_list(DOLPHINS_EDGES.as_bytes())?.graph;
    let truth = Partition::read_tsv(&graph, DOLPHINS_TRUTH.as_bytes())?;
    Ok(LabeledGraph {
        graph,
        truth: vec![truth],
        meta: GeneratorMeta {
            name: "dolphins".into(),
            params: Default::default(),
            seed: None,
        },
    })
}
