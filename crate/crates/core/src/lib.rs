//! Multi-scale hierarchical community detection.
//!
//! Edges are weighted by a structural similarity of their endpoints. Each
//! community that fails a local community definition is merged into the
//! neighbouring community it is most similar to, until every community
//! passes. Further levels of the hierarchy repeat the merge with a
//! minimum-size test in place of the definition.
//!
//! ```
//! use hamuhi::{generators::ring_of_cliques, hamuhi, CommunityDefinition};
//!
//! let ring = ring_of_cliques(10, 4).unwrap();
//! let partition = hamuhi(&ring.graph, 2, CommunityDefinition::Weak).unwrap();
//! assert_eq!(partition.community_count(), 10);
//! ```

pub mod bench;
pub mod cli;
pub mod datasets;
pub mod detection;
pub mod disjoint_set;
pub mod error;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod partition;
pub mod rng;
pub mod similarity;

pub use crate::detection::{
    community_detection, detect, hamuhi, hierarchical_level, run_hierarchy, run_hierarchy_with,
    CommunityDefinition, Detection, HierarchyLevel, MergeStats, Options,
};
pub use crate::disjoint_set::CommunityState;
pub use crate::error::{Error, Result};
pub use crate::generators::LabeledGraph;
pub use crate::graph::{
    load_edge_list, write_edge_list, Graph, LoadSummary, LoadedGraph, VertexId,
};
pub use crate::metrics::{modularity, nmi, RunReport};
pub use crate::partition::Partition;
pub use crate::similarity::{compute_all, EdgeSimilarityTable, Variant};
