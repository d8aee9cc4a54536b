use std::io;

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("({v}, {u}) is not an edge of the graph")]
    NotAnEdge { v: usize, u: usize },

    #[error("similarity table has {table} entries but the graph has {edges} edges")]
    MisalignedSimilarity { table: usize, edges: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("metric is undefined: {0}")]
    UndefinedMetric(&'static str),

    #[error("partitions cover different vertex sets ({left} vs {right} vertices)")]
    VertexSetMismatch { left: usize, right: usize },

    #[error("community label {label} does not exist (partition has {count} communities)")]
    InvalidLabel { label: usize, count: usize },

    #[error("partition does not cover the graph: {0}")]
    Coverage(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
