//! Undirected simple graphs in compressed adjacency form.
//!
//! Vertices are numbered `0..vertex_count`. Every undirected edge is stored
//! once in a canonical array, sorted lexicographically with `v < u`; all
//! per-edge tables elsewhere in the crate (similarities, for instance) are
//! indexed by position in that array.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A position in the canonical edge array together with its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRef {
    pub index: usize,
    pub endpoints: (VertexId, VertexId),
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
}

/// Counters describing what the loader normalized away.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LoadSummary {
    pub vertices: usize,
    pub edges: usize,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
    /// Lines that carried more than two columns (extra columns are ignored).
    #[serde(skip)]
    pub extra_column_lines: usize,
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub summary: LoadSummary,
}

impl Graph {
    /// Builds a graph from `(v, u)` pairs over vertices `0..vertex_count`.
    ///
    /// Self-loops and repeated edges (in either orientation) are dropped.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut canonical = Vec::new();
        for (v, u) in edges {
            for w in [v, u] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if v != u {
                canonical.push((v.min(u), v.max(u)));
            }
        }
        canonical.sort_unstable();
        canonical.dedup();
        Ok(Self::from_canonical(vertex_count, canonical, None))
    }

    /// `edges` must already be sorted, deduplicated and free of self-loops.
    fn from_canonical(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut degree = vec![0usize; vertex_count];
        for &(v, u) in &edges {
            degree[v] += 1;
            degree[u] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..vertex_count].to_vec();
        let mut targets = vec![0; 2 * edges.len()];
        // Walking the sorted edge array fills every adjacency list in
        // increasing order: lower neighbors arrive via (w, v) before any
        // (v, w) with w > v, and each group is itself sorted.
        for &(v, u) in &edges {
            targets[cursor[v]] = u;
            cursor[v] += 1;
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
        debug_assert!(
            (0..vertex_count).all(|v| targets[offsets[v]..offsets[v + 1]]
                .windows(2)
                .all(|w| w[0] < w[1]))
        );
        Graph {
            offsets,
            targets,
            edges,
            labels,
        }
    }

    /// Attaches original identifiers, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge array, `(v, u)` with `v < u`, lexicographically sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<EdgeRef> {
        self.edges
            .get(index)
            .map(|&endpoints| EdgeRef { index, endpoints })
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(index, &endpoints)| EdgeRef { index, endpoints })
    }

    /// Position of the undirected edge `{v, u}` in the canonical array.
    pub fn edge_index(&self, v: VertexId, u: VertexId) -> Option<usize> {
        let key = (v.min(u), v.max(u));
        self.edges.binary_search(&key).ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Sorted neighbors of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check_vertex(v)?;
        Ok(self.adjacency(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    /// Unchecked neighbor slice for hot loops. Panics if `v` is out of range.
    #[inline]
    pub fn adjacency(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`: its original label when present, else the id.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Maps external names back to vertex ids (inverse of [`Graph::label`]).
    pub fn label_index(&self) -> HashMap<String, VertexId> {
        (0..self.vertex_count())
            .map(|v| (self.label(v), v))
            .collect()
    }

    /// Vertex ids sorted by external name: numerically when every name is an
    /// integer, lexicographically otherwise.
    pub fn label_order(&self) -> Vec<VertexId> {
        let mut order: Vec<VertexId> = (0..self.vertex_count()).collect();
        let Some(labels) = &self.labels else {
            return order;
        };
        let numeric: Option<Vec<i128>> = labels.iter().map(|l| l.parse().ok()).collect();
        match numeric {
            Some(keys) => order.sort_by_key(|&v| keys[v]),
            None => order.sort_by(|&a, &b| labels[a].cmp(&labels[b])),
        }
        order
    }

    /// Component id per vertex; ids are dense and ordered by smallest member.
    pub fn connected_components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut component = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &u in self.adjacency(v) {
                    if component[u] == usize::MAX {
                        component[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        component
    }

    pub fn component_count(&self) -> usize {
        self.connected_components()
            .iter()
            .max()
            .map_or(0, |&c| c + 1)
    }
}

/// Reads a whitespace-separated edge list.
///
/// Lines starting with `#` or `%` are comments. Identifiers may be any token;
/// they are compacted to `0..n` in order of first appearance and kept as the
/// graph's labels. Columns past the second are ignored with a warning.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<LoadedGraph> {
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut raw = Vec::new();
    let mut summary = LoadSummary::default();

    let mut intern = |token: &str| -> VertexId {
        if let Some(&id) = ids.get(token) {
            return id;
        }
        let id = labels.len();
        ids.insert(token.to_owned(), id);
        labels.push(token.to_owned());
        id
    };

    for (index, line) in source.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("expected two vertex ids, found {trimmed:?}"),
            });
        };
        if tokens.next().is_some() {
            summary.extra_column_lines += 1;
        }
        let v = intern(a);
        let u = intern(b);
        if v == u {
            summary.self_loops_dropped += 1;
        } else {
            raw.push((v.min(u), v.max(u)));
        }
    }

    if summary.extra_column_lines > 0 {
        log::warn!(
            "{} lines carry extra columns; treating the graph as unweighted",
            summary.extra_column_lines
        );
    }

    raw.sort_unstable();
    let before = raw.len();
    raw.dedup();
    summary.duplicates_dropped = before - raw.len();
    summary.vertices = labels.len();
    summary.edges = raw.len();

    let graph = Graph::from_canonical(labels.len(), raw, Some(labels));
    Ok(LoadedGraph { graph, summary })
}

/// Writes the canonical edge list, one `v u` pair per line, using labels.
///
/// Isolated vertices are written as `v v`; the loader keeps such vertices as
/// degree-0 vertices, so reloading preserves the vertex count.
pub fn write_edge_list<W: Write>(graph: &Graph, mut out: W) -> Result<()> {
    for &(v, u) in graph.edges() {
        writeln!(out, "{} {}", graph.label(v), graph.label(u))?;
    }
    for v in 0..graph.vertex_count() {
        if graph.adjacency(v).is_empty() {
            let name = graph.label(v);
            writeln!(out, "{name} {name}")?;
        }
    }
    Ok(())
}
