//! Partition quality: modularity, normalized mutual information and the
//! community-size histogram.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::partition::Partition;

fn check_cover(graph: &Graph, partition: &Partition) -> Result<()> {
    if graph.vertex_count() == partition.vertex_count() {
        Ok(())
    } else {
        Err(Error::VertexSetMismatch {
            left: graph.vertex_count(),
            right: partition.vertex_count(),
        })
    }
}

/// Newman–Girvan modularity `Σ_c [e_c / M − (d_c / 2M)²]`.
pub fn modularity(graph: &Graph, partition: &Partition) -> Result<f64> {
    check_cover(graph, partition)?;
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::UndefinedMetric(
            "modularity of a graph without edges",
        ));
    }
    let k = partition.community_count();
    let mut internal = vec![0usize; k];
    let mut degree = vec![0usize; k];
    for &(v, u) in graph.edges() {
        let (cv, cu) = (partition.community_of(v), partition.community_of(u));
        degree[cv] += 1;
        degree[cu] += 1;
        if cv == cu {
            internal[cv] += 1;
        }
    }
    let m = m as f64;
    Ok(internal
        .iter()
        .zip(&degree)
        .map(|(&e, &d)| e as f64 / m - (d as f64 / (2.0 * m)).powi(2))
        .sum())
}

/// Change in modularity when `v` moves into community `target`.
pub fn modularity_gain(
    graph: &Graph,
    partition: &Partition,
    v: VertexId,
    target: usize,
) -> Result<f64> {
    check_cover(graph, partition)?;
    graph.neighbors(v)?;
    partition.members(target)?;
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::UndefinedMetric(
            "modularity of a graph without edges",
        ));
    }
    let source = partition.community_of(v);
    if source == target {
        return Ok(0.0);
    }
    let community_degree = |c: usize| -> f64 {
        partition.communities()[c]
            .iter()
            .map(|&w| graph.adjacency(w).len())
            .sum::<usize>() as f64
    };
    let (mut to_source, mut to_target) = (0.0, 0.0);
    for &u in graph.adjacency(v) {
        let c = partition.community_of(u);
        if c == source {
            to_source += 1.0;
        } else if c == target {
            to_target += 1.0;
        }
    }
    let k_v = graph.adjacency(v).len() as f64;
    let m = m as f64;
    Ok((to_target - to_source) / m
        - k_v * (community_degree(target) - community_degree(source) + k_v) / (2.0 * m * m))
}

fn entropy(counts: impl Iterator<Item = usize>, n: f64) -> f64 {
    counts
        .filter(|&c| c > 0)
        .map(|c| {
            let p = c as f64 / n;
            -p * p.ln()
        })
        .sum()
}

/// Mutual information normalized by the arithmetic mean of both entropies
/// (natural log). Two trivial partitions score 1.
pub fn nmi(a: &Partition, b: &Partition) -> Result<f64> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::VertexSetMismatch {
            left: a.vertex_count(),
            right: b.vertex_count(),
        });
    }
    let n = a.vertex_count() as f64;
    let h_a = entropy(a.sizes().into_iter(), n);
    let h_b = entropy(b.sizes().into_iter(), n);
    if h_a + h_b == 0.0 {
        return Ok(1.0);
    }
    let mut joint: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&x, &y) in a.assignment().iter().zip(b.assignment()) {
        *joint.entry((x, y)).or_insert(0) += 1;
    }
    let (size_a, size_b) = (a.sizes(), b.sizes());
    let mutual: f64 = joint
        .iter()
        .map(|(&(x, y), &c)| {
            let c = c as f64;
            c / n * (c * n / (size_a[x] as f64 * size_b[y] as f64)).ln()
        })
        .sum();
    Ok((2.0 * mutual / (h_a + h_b)).clamp(0.0, 1.0))
}

/// Community size → number of communities with that size.
pub fn size_distribution(partition: &Partition) -> BTreeMap<usize, usize> {
    partition.size_histogram()
}

pub fn write_histogram_tsv<W: Write>(histogram: &BTreeMap<usize, usize>, mut out: W) -> Result<()> {
    for (size, count) in histogram {
        writeln!(out, "{size}\t{count}")?;
    }
    Ok(())
}

/// Metrics for one detection run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub community_count: usize,
    /// `None` for graphs without edges.
    pub modularity: Option<f64>,
    pub nmi: Option<f64>,
    pub nmi_normalization: String,
    pub size_histogram: BTreeMap<usize, usize>,
    /// Total iterations across both merge loops.
    pub iterations: usize,
    pub detection_iterations: usize,
    pub level_iterations: usize,
    pub wall_time_seconds: f64,
}

impl RunReport {
    /// Quality figures for `partition`; iteration and timing fields start at
    /// zero.
    pub fn evaluate(
        graph: &Graph,
        partition: &Partition,
        truth: Option<&Partition>,
    ) -> Result<Self> {
        check_cover(graph, partition)?;
        let modularity = match modularity(graph, partition) {
            Ok(q) => Some(q),
            Err(Error::UndefinedMetric(_)) => None,
            Err(e) => return Err(e),
        };
        let nmi = truth.map(|t| nmi(partition, t)).transpose()?;
        Ok(RunReport {
            community_count: partition.community_count(),
            modularity,
            nmi,
            nmi_normalization: "arithmetic".into(),
            size_histogram: size_distribution(partition),
            iterations: 0,
            detection_iterations: 0,
            level_iterations: 0,
            wall_time_seconds: 0.0,
        })
    }

    pub fn with_iterations(mut self, detection: usize, level: usize) -> Self {
        self.detection_iterations = detection;
        self.level_iterations = level;
        self.iterations = detection + level;
        self
    }
}
