//! Timing ladder over generated graphs.
//!
//! Only the definition-driven merge loop is timed; similarities are computed
//! beforehand. Each graph is timed `repeats` times and the fastest run kept.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::detection::{community_detection, CommunityDefinition};
use crate::error::{Error, Result};
use crate::generators::{erdos_renyi, ring_of_cliques};
use crate::graph::Graph;
use crate::similarity::{compute_all, Variant};

#[derive(Debug, Clone, PartialEq)]
pub struct Suite {
    /// Target edge counts for Erdős–Rényi graphs.
    pub er_edges: Vec<usize>,
    pub mean_degree: f64,
    /// Clique counts for rings of cliques.
    pub ring_cliques: Vec<usize>,
    pub clique_size: usize,
    pub definition: CommunityDefinition,
    pub repeats: usize,
    pub seed: u64,
}

impl Default for Suite {
    fn default() -> Self {
        Suite {
            er_edges: vec![100_000, 200_000, 400_000],
            mean_degree: 20.0,
            ring_cliques: Vec::new(),
            clique_size: 3,
            definition: CommunityDefinition::Weak,
            repeats: 3,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub iterations: usize,
    pub seconds: f64,
}

/// Erdős–Rényi graph with about `edges` edges and the given mean degree.
pub fn er_with_edges(edges: usize, mean_degree: f64, seed: u64) -> Result<Graph> {
    if mean_degree <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "mean degree must be positive, got {mean_degree}"
        )));
    }
    let n = ((2.0 * edges as f64 / mean_degree).round() as usize).max(2);
    let p = (mean_degree / (n - 1) as f64).min(1.0);
    Ok(erdos_renyi(n, p, seed)?.graph)
}

pub fn time_detection(
    graph: &Graph,
    definition: CommunityDefinition,
    repeats: usize,
) -> Result<BenchRow> {
    let similarity = compute_all(graph, Variant::Modified);
    let mut best = f64::INFINITY;
    let mut iterations = 0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let (_, stats) = community_detection(graph, &similarity, definition)?;
        best = best.min(start.elapsed().as_secs_f64());
        iterations = stats.iterations;
    }
    Ok(BenchRow {
        n: graph.vertex_count(),
        m: graph.edge_count(),
        iterations,
        seconds: best,
    })
}

pub fn run_suite(suite: &Suite) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for (i, &edges) in suite.er_edges.iter().enumerate() {
        let graph = er_with_edges(edges, suite.mean_degree, suite.seed.wrapping_add(i as u64))?;
        rows.push(time_detection(&graph, suite.definition, suite.repeats)?);
    }
    for &cliques in &suite.ring_cliques {
        let graph = ring_of_cliques(cliques, suite.clique_size)?.graph;
        rows.push(time_detection(&graph, suite.definition, suite.repeats)?);
    }
    Ok(rows)
}

/// CSV with header `n,m,iterations,seconds`, written even for no rows.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if rows.is_empty() {
        writer.write_record(["n", "m", "iterations", "seconds"])?;
    }
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}
