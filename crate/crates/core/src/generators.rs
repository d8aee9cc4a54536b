//! Synthetic benchmark graphs with ground truth where it is defined.
//!
//! All random generators draw from [`Rng`], so a `(generator, parameters,
//! seed)` triple always yields the same edge list.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::partition::Partition;
use crate::rng::Rng;

/// Where a generated graph came from.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GeneratorMeta {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
}

impl GeneratorMeta {
    fn new(name: &str, params: &[(&str, String)], seed: Option<u64>) -> Self {
        GeneratorMeta {
            name: name.to_owned(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            seed,
        }
    }
}

/// A generated graph with its ground-truth partitions, finest level first.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub truth: Vec<Partition>,
    pub meta: GeneratorMeta,
}

impl LabeledGraph {
    pub fn truth(&self) -> Option<&Partition> {
        self.truth.first()
    }
}

fn require(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message()))
    }
}

fn clique_edges(first: VertexId, size: usize, edges: &mut Vec<(VertexId, VertexId)>) {
    for a in first..first + size {
        for b in a + 1..first + size {
            edges.push((a, b));
        }
    }
}

/// `n_cliques` cliques of `clique_size` vertices joined in a ring by single
/// edges from the last vertex of each clique to the first of the next.
pub fn ring_of_cliques(n_cliques: usize, clique_size: usize) -> Result<LabeledGraph> {
    require(n_cliques >= 3, || {
        format!("ring needs at least 3 cliques, got {n_cliques}")
    })?;
    require(clique_size >= 3, || {
        format!("cliques need at least 3 vertices, got {clique_size}")
    })?;
    let n = n_cliques * clique_size;
    let mut edges = Vec::with_capacity(n_cliques * (clique_size * (clique_size - 1) / 2 + 1));
    for i in 0..n_cliques {
        clique_edges(i * clique_size, clique_size, &mut edges);
        edges.push((
            (i + 1) * clique_size - 1,
            ((i + 1) % n_cliques) * clique_size,
        ));
    }
    let graph = Graph::from_edges(n, edges)?;
    let truth = Partition::from_labels(&(0..n).map(|v| v / clique_size).collect::<Vec<_>>());
    Ok(LabeledGraph {
        graph,
        truth: vec![truth],
        meta: GeneratorMeta::new(
            "ring-cliques",
            &[
                ("cliques", n_cliques.to_string()),
                ("size", clique_size.to_string()),
            ],
            None,
        ),
    })
}

/// G(n, p): every pair is an edge independently with probability `p`.
///
/// Pairs are visited in the order (0,1), (0,2), (1,2), (0,3), ... and the
/// gap to the next edge is drawn geometrically, so the cost is proportional
/// to the number of edges rather than of pairs.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<LabeledGraph> {
    require((0.0..=1.0).contains(&p), || {
        format!("probability must lie in [0, 1], got {p}")
    })?;
    let mut edges = Vec::new();
    if p == 1.0 {
        for u in 1..n {
            for v in 0..u {
                edges.push((v, u));
            }
        }
    } else if p > 0.0 {
        let mut rng = Rng::new(seed);
        let log_q = (1.0 - p).ln();
        let (mut u, mut v): (usize, i64) = (1, -1);
        while u < n {
            let r = rng.next_f64();
            let skip = ((1.0 - r).ln() / log_q).floor();
            v += 1 + skip.min(i64::MAX as f64 / 2.0) as i64;
            while u < n && v >= u as i64 {
                v -= u as i64;
                u += 1;
            }
            if u < n {
                edges.push((v as usize, u));
            }
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(LabeledGraph {
        graph,
        truth: Vec::new(),
        meta: GeneratorMeta::new(
            "er",
            &[("n", n.to_string()), ("p", p.to_string())],
            Some(seed),
        ),
    })
}

/// Preferential attachment: starting from a complete core on `m` vertices,
/// each new vertex links to `m` distinct existing vertices chosen with
/// probability proportional to their degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<LabeledGraph> {
    require(m >= 1 && m < n, || {
        format!("need 1 <= m < n, got m = {m}, n = {n}")
    })?;
    let mut rng = Rng::new(seed);
    let mut edges = Vec::with_capacity(m * (m - 1) / 2 + (n - m) * m);
    clique_edges(0, m, &mut edges);
    // Each edge contributes both endpoints, so a uniform pick from this list
    // is a degree-proportional pick of a vertex.
    let mut endpoints: Vec<VertexId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut targets = Vec::with_capacity(m);
    for v in m..n {
        targets.clear();
        while targets.len() < m {
            let candidate = if endpoints.is_empty() {
                rng.below(v as u64) as usize
            } else {
                endpoints[rng.below(endpoints.len() as u64) as usize]
            };
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(LabeledGraph {
        graph,
        truth: Vec::new(),
        meta: GeneratorMeta::new(
            "ba",
            &[("n", n.to_string()), ("m", m.to_string())],
            Some(seed),
        ),
    })
}

/// Two-level modular network.
///
/// Each of `groups` groups holds `cliques_per_group` cliques of `clique_size`
/// vertices, linked in a ring inside the group by single edges (last vertex
/// of a clique to the first vertex of the next). The last clique of every
/// group is its gateway: the groups form a ring through single edges from
/// vertex 1 of one gateway to vertex 2 of the next.
///
/// Cliques are numbered contiguously, but all gateway cliques come after
/// every other clique. With that layout each gateway clique reaches its own
/// group through an edge that precedes the inter-group links in the
/// canonical order.
///
/// `truth[0]` holds the cliques, `truth[1]` the groups.
pub fn two_level_hierarchical(
    groups: usize,
    cliques_per_group: usize,
    clique_size: usize,
) -> Result<LabeledGraph> {
    require(groups >= 2, || {
        format!("need at least 2 groups, got {groups}")
    })?;
    require(cliques_per_group >= 2, || {
        format!("need at least 2 cliques per group, got {cliques_per_group}")
    })?;
    require(clique_size >= 3, || {
        format!("cliques need at least 3 vertices, got {clique_size}")
    })?;

    let gateway = cliques_per_group - 1;
    let first_vertex = |group: usize, clique: usize| -> VertexId {
        let slot = if clique == gateway {
            groups * gateway + group
        } else {
            group * gateway + clique
        };
        slot * clique_size
    };

    let n = groups * cliques_per_group * clique_size;
    let mut edges = Vec::new();
    let mut clique_of = vec![0; n];
    let mut group_of = vec![0; n];
    for g in 0..groups {
        for c in 0..cliques_per_group {
            let first = first_vertex(g, c);
            clique_edges(first, clique_size, &mut edges);
            for v in first..first + clique_size {
                clique_of[v] = g * cliques_per_group + c;
                group_of[v] = g;
            }
            edges.push((
                first + clique_size - 1,
                first_vertex(g, (c + 1) % cliques_per_group),
            ));
        }
        edges.push((
            first_vertex(g, gateway) + 1,
            first_vertex((g + 1) % groups, gateway) + 2,
        ));
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(LabeledGraph {
        graph,
        truth: vec![
            Partition::from_labels(&clique_of),
            Partition::from_labels(&group_of),
        ],
        meta: GeneratorMeta::new(
            "hier2",
            &[
                ("groups", groups.to_string()),
                ("cliques", cliques_per_group.to_string()),
                ("size", clique_size.to_string()),
            ],
            None,
        ),
    })
}
