//! Finalized vertex-to-community assignments and their TSV form.

use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};

use crate::disjoint_set::CommunityState;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A partition of `0..n` into communities labeled densely `0..k`.
///
/// Labels are assigned in order of each community's smallest vertex, so the
/// same grouping always produces the same labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    communities: Vec<Vec<VertexId>>,
}

impl Partition {
    /// Builds a partition from arbitrary per-vertex labels.
    pub fn from_labels<L: Eq + std::hash::Hash + Copy>(labels: &[L]) -> Self {
        let mut dense: HashMap<L, usize> = HashMap::new();
        let mut communities: Vec<Vec<VertexId>> = Vec::new();
        let assignment = labels
            .iter()
            .enumerate()
            .map(|(v, label)| {
                let next = dense.len();
                let c = *dense.entry(*label).or_insert(next);
                if c == communities.len() {
                    communities.push(Vec::new());
                }
                communities[c].push(v);
                c
            })
            .collect();
        Partition {
            assignment,
            communities,
        }
    }

    pub fn from_state(state: &mut CommunityState) -> Self {
        Self::from_labels(&state.representatives())
    }

    /// Every vertex in one community.
    pub fn single(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn vertex_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_count(&self) -> usize {
        self.communities.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn community_of(&self, v: VertexId) -> usize {
        self.assignment[v]
    }

    /// Sorted member lists, indexed by community label.
    pub fn communities(&self) -> &[Vec<VertexId>] {
        &self.communities
    }

    pub fn members(&self, label: usize) -> Result<&[VertexId]> {
        self.communities
            .get(label)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidLabel {
                label,
                count: self.communities.len(),
            })
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.communities.iter().map(Vec::len).collect()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.communities.iter().map(Vec::len).min()
    }

    /// Community size → number of communities of that size.
    pub fn size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut histogram = BTreeMap::new();
        for members in &self.communities {
            *histogram.entry(members.len()).or_insert(0) += 1;
        }
        histogram
    }

    /// `vertex<TAB>community` lines in ascending vertex order (see
    /// [`Graph::label_order`]).
    pub fn write_tsv<W: Write>(&self, graph: &Graph, mut out: W) -> Result<()> {
        if graph.vertex_count() != self.vertex_count() {
            return Err(Error::VertexSetMismatch {
                left: graph.vertex_count(),
                right: self.vertex_count(),
            });
        }
        for v in graph.label_order() {
            writeln!(out, "{}\t{}", graph.label(v), self.assignment[v])?;
        }
        Ok(())
    }

    /// Reads `vertex<TAB>community` lines, resolving vertex names through the
    /// graph's labels. Every vertex must appear exactly once.
    pub fn read_tsv<R: BufRead>(graph: &Graph, source: R) -> Result<Self> {
        let index = graph.label_index();
        let mut labels: Vec<Option<String>> = vec![None; graph.vertex_count()];
        for (line_no, line) in source.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let (Some(vertex), Some(community), None) =
                (tokens.next(), tokens.next(), tokens.next())
            else {
                return Err(Error::Parse {
                    line: line_no + 1,
                    message: format!("expected `vertex<TAB>community`, found {trimmed:?}"),
                });
            };
            let v = *index
                .get(vertex)
                .ok_or_else(|| Error::Coverage(format!("unknown vertex {vertex:?}")))?;
            if labels[v].replace(community.to_owned()).is_some() {
                return Err(Error::Coverage(format!("vertex {vertex:?} listed twice")));
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, label)| {
                label.ok_or_else(|| {
                    Error::Coverage(format!("vertex {:?} has no community", graph.label(v)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Ok(Self::from_labels(&refs))
    }
}
