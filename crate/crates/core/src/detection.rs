//! The merge heuristics and the top-level driver.
//!
//! Detection starts from singleton communities and repeats a two-phase
//! iteration until nothing merges:
//!
//! 1. one pass over the canonical edge array computes, per community, its
//!    degree balance and the adjacent community reached through its
//!    highest-similarity crossing edge (first such edge wins ties);
//! 2. one pass over community ids merges every community that fails the
//!    stopping test into that best partner.
//!
//! [`community_detection`] stops when every community satisfies a
//! [`CommunityDefinition`]; [`hierarchical_level`] stops when every
//! community reaches a minimum size. Similarities are computed once up front
//! and never refreshed after merges.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::disjoint_set::CommunityState;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::partition::Partition;
use crate::similarity::{compute_all, EdgeSimilarityTable, Variant};

/// Local criterion a community must meet to stop absorbing neighbors.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum CommunityDefinition {
    /// Internal degree sum at least the external degree sum.
    Weak,
    /// Internal degree sum at least the edge count toward any single other
    /// community.
    #[default]
    Weakest,
}

/// What the edge scan accumulates besides the best partners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Weak,
    Weakest,
    /// Size-driven pass: only community sizes are tracked.
    Size,
}

impl From<CommunityDefinition> for ScanMode {
    fn from(definition: CommunityDefinition) -> Self {
        match definition {
            CommunityDefinition::Weak => ScanMode::Weak,
            CommunityDefinition::Weakest => ScanMode::Weakest,
        }
    }
}

/// Per-iteration accumulators, indexed by community representative.
///
/// Entries at non-representative ids stay at their reset values.
#[derive(Debug, Clone, Default)]
pub struct IterationScratch {
    /// Best crossing-edge similarity seen so far (`-1` when none).
    pub best_similarity: Vec<f64>,
    /// Community on the other side of that edge.
    pub best_partner: Vec<Option<VertexId>>,
    /// Weak: internal minus external degree. Weakest: internal degree.
    pub balance: Vec<i64>,
    /// Weakest: largest edge count toward a single adjacent community.
    pub max_external: Vec<i64>,
    /// Weakest: edge count between each adjacent pair `(min, max)`.
    pub pair_counts: HashMap<(VertexId, VertexId), i64>,
    /// Size pass: community size.
    pub size: Vec<usize>,
}

impl IterationScratch {
    pub fn new(n: usize) -> Self {
        IterationScratch {
            best_similarity: vec![-1.0; n],
            best_partner: vec![None; n],
            balance: vec![0; n],
            max_external: vec![0; n],
            pair_counts: HashMap::new(),
            size: vec![0; n],
        }
    }

    fn reset(&mut self, mode: ScanMode, state: &mut CommunityState) {
        self.best_similarity.fill(-1.0);
        self.best_partner.fill(None);
        match mode {
            ScanMode::Weak => self.balance.fill(0),
            ScanMode::Weakest => {
                self.balance.fill(0);
                self.max_external.fill(0);
                self.pair_counts.clear();
            }
            ScanMode::Size => {
                for c in 0..self.size.len() {
                    let root = state.root(c);
                    self.size[c] = state.root_size(root);
                }
            }
        }
    }

    /// Resets the accumulators and runs one pass over the edge array.
    pub fn scan(
        &mut self,
        graph: &Graph,
        similarity: &EdgeSimilarityTable,
        state: &mut CommunityState,
        mode: ScanMode,
    ) {
        self.reset(mode, state);
        for (&(v, u), &sigma) in graph.edges().iter().zip(similarity.values()) {
            let cv = state.root(v);
            let cu = state.root(u);
            if cv == cu {
                if mode != ScanMode::Size {
                    self.balance[cu] += 2;
                }
                continue;
            }
            match mode {
                ScanMode::Weak => {
                    self.balance[cu] -= 1;
                    self.balance[cv] -= 1;
                }
                ScanMode::Weakest => {
                    let count = self
                        .pair_counts
                        .entry((cu.min(cv), cu.max(cv)))
                        .or_insert(0);
                    *count += 1;
                    let count = *count;
                    self.max_external[cu] = self.max_external[cu].max(count);
                    self.max_external[cv] = self.max_external[cv].max(count);
                }
                ScanMode::Size => {}
            }
            if sigma > self.best_similarity[cu] {
                self.best_similarity[cu] = sigma;
                self.best_partner[cu] = Some(cv);
            }
            if sigma > self.best_similarity[cv] {
                self.best_similarity[cv] = sigma;
                self.best_partner[cv] = Some(cu);
            }
        }
    }

    fn fails(&self, c: VertexId, mode: ScanMode, min_size: usize) -> bool {
        match mode {
            ScanMode::Weak => self.balance[c] < 0,
            ScanMode::Weakest => self.balance[c] < self.max_external[c],
            ScanMode::Size => self.size[c] < min_size,
        }
    }
}

/// Iteration bookkeeping for one merge loop.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MergeStats {
    /// Iterations run, including the final one that merged nothing.
    pub iterations: usize,
    pub merges: usize,
    /// Number of communities after each iteration.
    pub set_counts: Vec<usize>,
}

fn merge_loop(
    graph: &Graph,
    similarity: &EdgeSimilarityTable,
    state: &mut CommunityState,
    mode: ScanMode,
    min_size: usize,
) -> MergeStats {
    let n = graph.vertex_count();
    let mut scratch = IterationScratch::new(n);
    let mut stats = MergeStats::default();
    loop {
        scratch.scan(graph, similarity, state, mode);
        let mut merged = 0;
        for c in 0..n {
            if let Some(partner) = scratch.best_partner[c] {
                // The partner may have been absorbed earlier in this pass;
                // merging follows live representatives.
                if scratch.fails(c, mode, min_size) && state.merge(c, partner) {
                    merged += 1;
                }
            }
        }
        stats.iterations += 1;
        stats.merges += merged;
        stats.set_counts.push(state.set_count());
        if merged == 0 {
            return stats;
        }
    }
}

fn check_inputs(
    graph: &Graph,
    similarity: &EdgeSimilarityTable,
    state: &CommunityState,
) -> Result<()> {
    similarity.check_aligned(graph)?;
    if state.len() != graph.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "community state covers {} vertices, graph has {}",
            state.len(),
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// Merges singletons until every community satisfies `definition`.
pub fn community_detection(
    graph: &Graph,
    similarity: &EdgeSimilarityTable,
    definition: CommunityDefinition,
) -> Result<(CommunityState, MergeStats)> {
    let mut state = CommunityState::make_singletons(graph.vertex_count());
    check_inputs(graph, similarity, &state)?;
    let stats = merge_loop(graph, similarity, &mut state, definition.into(), 0);
    Ok((state, stats))
}

/// Merges communities smaller than `min_size` into their most similar
/// neighbor until all reach the size or have no neighbor left.
pub fn hierarchical_level(
    graph: &Graph,
    similarity: &EdgeSimilarityTable,
    state: &mut CommunityState,
    min_size: usize,
) -> Result<MergeStats> {
    if min_size < 1 {
        return Err(Error::InvalidParameter(
            "minimum community size must be at least 1".into(),
        ));
    }
    check_inputs(graph, similarity, state)?;
    Ok(merge_loop(
        graph,
        similarity,
        state,
        ScanMode::Size,
        min_size,
    ))
}

/// Parameters of a detection run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Options {
    pub min_size: usize,
    pub definition: CommunityDefinition,
    pub similarity: Variant,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            min_size: 2,
            definition: CommunityDefinition::Weakest,
            similarity: Variant::Modified,
        }
    }
}

impl Options {
    pub fn new(min_size: usize, definition: CommunityDefinition) -> Self {
        Options {
            min_size,
            definition,
            ..Options::default()
        }
    }

    pub fn with_similarity(mut self, similarity: Variant) -> Self {
        self.similarity = similarity;
        self
    }
}

/// Full output of one run, including intermediate state for further levels.
#[derive(Debug, Clone)]
pub struct Detection {
    pub partition: Partition,
    pub state: CommunityState,
    pub similarity: EdgeSimilarityTable,
    pub detection: MergeStats,
    pub level: MergeStats,
}

/// Similarity, definition-driven merging, then size-driven merging.
pub fn detect(graph: &Graph, options: &Options) -> Result<Detection> {
    if options.min_size < 1 {
        return Err(Error::InvalidParameter(
            "minimum community size must be at least 1".into(),
        ));
    }
    let similarity = compute_all(graph, options.similarity);
    let (mut state, detection) = community_detection(graph, &similarity, options.definition)?;
    let level = hierarchical_level(graph, &similarity, &mut state, options.min_size)?;
    let partition = Partition::from_state(&mut state);
    Ok(Detection {
        partition,
        state,
        similarity,
        detection,
        level,
    })
}

/// Partition with minimum size `min_size` under `definition`, using the
/// modified similarity.
pub fn hamuhi(
    graph: &Graph,
    min_size: usize,
    definition: CommunityDefinition,
) -> Result<Partition> {
    detect(graph, &Options::new(min_size, definition)).map(|d| d.partition)
}

/// One level of a hierarchy.
#[derive(Debug, Clone)]
pub struct HierarchyLevel {
    /// Minimum community size requested for this level.
    pub min_size: usize,
    pub partition: Partition,
    /// Definition-driven iterations; only the first level has them.
    pub detection: Option<MergeStats>,
    pub level: MergeStats,
}

/// Smallest community that can still merge, i.e. that is not a whole
/// connected component.
fn min_mergeable_size(partition: &Partition, components: &[usize]) -> Option<usize> {
    let mut component_sizes = HashMap::new();
    for &c in components {
        *component_sizes.entry(c).or_insert(0usize) += 1;
    }
    partition
        .communities()
        .iter()
        .filter(|members| component_sizes[&components[members[0]]] != members.len())
        .map(Vec::len)
        .min()
}

/// Up to `levels` nested partitions; each level after the first raises the
/// minimum size to one more than the smallest mergeable community of the
/// previous level.
///
/// Stops early when a level merges nothing or every connected component is
/// already a single community.
pub fn run_hierarchy_with(
    graph: &Graph,
    options: &Options,
    levels: usize,
) -> Result<Vec<HierarchyLevel>> {
    if levels < 1 {
        return Err(Error::InvalidParameter(
            "at least one level is required".into(),
        ));
    }
    let components = graph.connected_components();
    let component_count = components.iter().max().map_or(0, |&c| c + 1);

    let first = detect(graph, options)?;
    let Detection {
        partition,
        mut state,
        similarity,
        detection,
        level,
    } = first;
    let mut hierarchy = vec![HierarchyLevel {
        min_size: options.min_size,
        partition,
        detection: Some(detection),
        level,
    }];

    while hierarchy.len() < levels {
        let previous = &hierarchy.last().unwrap().partition;
        if previous.community_count() <= component_count {
            break;
        }
        let Some(smallest) = min_mergeable_size(previous, &components) else {
            break;
        };
        let min_size = smallest + 1;
        let level = hierarchical_level(graph, &similarity, &mut state, min_size)?;
        if level.merges == 0 {
            break;
        }
        hierarchy.push(HierarchyLevel {
            min_size,
            partition: Partition::from_state(&mut state),
            detection: None,
            level,
        });
    }
    Ok(hierarchy)
}

pub fn run_hierarchy(
    graph: &Graph,
    definition: CommunityDefinition,
    levels: usize,
) -> Result<Vec<HierarchyLevel>> {
    run_hierarchy_with(graph, &Options::new(2, definition), levels)
}

/// Degree sums of one community, derived directly from the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityDegrees {
    pub internal: usize,
    pub external: usize,
    /// Largest number of edges toward any single other community.
    pub max_toward_one: usize,
}

pub fn community_degrees(
    graph: &Graph,
    partition: &Partition,
    label: usize,
) -> Result<CommunityDegrees> {
    if partition.vertex_count() != graph.vertex_count() {
        return Err(Error::VertexSetMismatch {
            left: graph.vertex_count(),
            right: partition.vertex_count(),
        });
    }
    let mut internal = 0;
    let mut toward: HashMap<usize, usize> = HashMap::new();
    for &v in partition.members(label)? {
        for &u in graph.adjacency(v) {
            let other = partition.community_of(u);
            if other == label {
                internal += 1;
            } else {
                *toward.entry(other).or_insert(0) += 1;
            }
        }
    }
    Ok(CommunityDegrees {
        internal,
        external: toward.values().sum(),
        max_toward_one: toward.values().copied().max().unwrap_or(0),
    })
}

/// Whether community `label` of `partition` satisfies `definition`.
pub fn check_definition(
    graph: &Graph,
    partition: &Partition,
    label: usize,
    definition: CommunityDefinition,
) -> Result<bool> {
    let degrees = community_degrees(graph, partition, label)?;
    Ok(match definition {
        CommunityDefinition::Weak => degrees.internal >= degrees.external,
        CommunityDefinition::Weakest => degrees.internal >= degrees.max_toward_one,
    })
}

/// Labels of all communities violating `definition`.
pub fn definition_violations(
    graph: &Graph,
    partition: &Partition,
    definition: CommunityDefinition,
) -> Result<Vec<usize>> {
    let mut violations = Vec::new();
    for label in 0..partition.community_count() {
        if !check_definition(graph, partition, label, definition)? {
            violations.push(label);
        }
    }
    Ok(violations)
}
