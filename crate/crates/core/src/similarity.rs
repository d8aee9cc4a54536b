//! Structural similarity of adjacent vertices.
//!
//! Two variants are provided. [`Variant::Original`] is the classical cosine
//! overlap of the closed neighborhoods `Γ(v) = N(v) ∪ {v}`; it is strictly
//! positive on every edge because both endpoints belong to both
//! neighborhoods. [`Variant::Modified`] removes the endpoints from both
//! neighborhoods before comparing them:
//!
//! ```text
//! σ(v,u) = |N(v) ∩ N(u)| / sqrt((deg v − 1)(deg u − 1))
//! ```
//!
//! so an edge whose endpoints share no neighbor scores exactly 0, and such
//! edges become the preferred candidates for inter-community links.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Modified,
    Original,
}

/// One similarity value per canonical edge, computed once.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSimilarityTable {
    values: Vec<f64>,
    variant: Variant,
}

impl EdgeSimilarityTable {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, edge_index: usize) -> f64 {
        self.values[edge_index]
    }

    pub(crate) fn check_aligned(&self, graph: &Graph) -> Result<()> {
        if self.values.len() == graph.edge_count() {
            Ok(())
        } else {
            Err(Error::MisalignedSimilarity {
                table: self.values.len(),
                edges: graph.edge_count(),
            })
        }
    }

    /// Tab-separated `v u sigma` dump in canonical edge order, 6 decimals.
    pub fn write_tsv<W: Write>(&self, graph: &Graph, mut out: W) -> Result<()> {
        self.check_aligned(graph)?;
        for (&(v, u), sigma) in graph.edges().iter().zip(&self.values) {
            writeln!(out, "{}\t{}\t{:.6}", graph.label(v), graph.label(u), sigma)?;
        }
        Ok(())
    }
}

/// Number of common neighbors by merging two sorted lists.
#[inline]
fn common_neighbors(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[inline]
fn edge_value(graph: &Graph, v: VertexId, u: VertexId, variant: Variant) -> f64 {
    let (nv, nu) = (graph.adjacency(v), graph.adjacency(u));
    let shared = common_neighbors(nv, nu) as f64;
    match variant {
        Variant::Modified => {
            let denominator = ((nv.len() - 1) * (nu.len() - 1)) as f64;
            if shared == 0.0 || denominator == 0.0 {
                0.0
            } else {
                shared / denominator.sqrt()
            }
        }
        // Γ(v) ∩ Γ(u) = common neighbors plus both endpoints.
        Variant::Original => (shared + 2.0) / (((nv.len() + 1) * (nu.len() + 1)) as f64).sqrt(),
    }
}

fn checked(graph: &Graph, v: VertexId, u: VertexId, variant: Variant) -> Result<f64> {
    graph.neighbors(v)?;
    graph.neighbors(u)?;
    if graph.edge_index(v, u).is_none() {
        return Err(Error::NotAnEdge { v, u });
    }
    Ok(edge_value(graph, v, u, variant))
}

/// Modified similarity of the edge `(v, u)`; 0 when the endpoints share no
/// neighbor or either endpoint has degree 1.
pub fn modified_similarity(graph: &Graph, v: VertexId, u: VertexId) -> Result<f64> {
    checked(graph, v, u, Variant::Modified)
}

/// Classical cosine similarity `|Γ(v) ∩ Γ(u)| / sqrt(|Γ(v)| |Γ(u)|)`.
pub fn original_similarity(graph: &Graph, v: VertexId, u: VertexId) -> Result<f64> {
    checked(graph, v, u, Variant::Original)
}

/// Similarity of every edge, aligned with the canonical edge array.
pub fn compute_all(graph: &Graph, variant: Variant) -> EdgeSimilarityTable {
    let values = graph
        .edges()
        .par_iter()
        .map(|&(v, u)| edge_value(graph, v, u, variant))
        .collect();
    EdgeSimilarityTable { values, variant }
}
