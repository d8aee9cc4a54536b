//! Command-line front end shared by the `hamuhi` binary and tests.
//!
//! Exit codes: 0 success, 1 usage error or invalid parameter, 2 runtime or
//! I/O error.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{self, Suite};
use crate::detection::{run_hierarchy_with, CommunityDefinition, Options};
use crate::error::{Error, Result};
use crate::generators::{self, LabeledGraph};
use crate::graph::{load_edge_list, write_edge_list, Graph, LoadSummary, LoadedGraph};
use crate::metrics::{write_histogram_tsv, RunReport};
use crate::partition::Partition;
use crate::similarity::Variant;

#[derive(Debug, Parser)]
#[command(
    name = "hamuhi",
    version,
    about = "Multi-scale hierarchical community detection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Detect communities in an edge-list file.
    Detect(DetectConfig),
    /// Score a partition file against its graph (and optionally a truth file).
    Eval(EvalArgs),
    /// Generate a benchmark graph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time the merge loop on a ladder of generated graphs; prints CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct DetectConfig {
    /// Edge list: two vertex ids per line, `#`/`%` comments.
    input: PathBuf,
    /// Minimum community size for the first level.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Community definition driving the first merge loop.
    #[arg(long = "def", value_enum, default_value_t = CommunityDefinition::Weakest)]
    definition: CommunityDefinition,
    /// Number of hierarchy levels to compute.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    levels: u64,
    #[arg(long, value_enum, default_value_t = Variant::Modified)]
    similarity: Variant,
    /// Ground-truth file for level 1; repeat for deeper levels.
    #[arg(long)]
    truth: Vec<PathBuf>,
    /// Directory for partition files and the report.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// File name stem for outputs (defaults to the input's stem).
    #[arg(long)]
    name: Option<String>,
    /// Also write `<name>.level<L>.sizes.tsv` histograms.
    #[arg(long)]
    histogram: bool,
    /// Write per-edge similarities as TSV to this path.
    #[arg(long)]
    dump_similarity: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    graph: PathBuf,
    partition: PathBuf,
    #[arg(long)]
    truth: Option<PathBuf>,
    /// Also write the report JSON here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenOutput {
    /// Output prefix; writes `<prefix>.txt` plus truth files.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Ring of identical cliques joined by single edges.
    RingCliques {
        #[arg(long)]
        cliques: usize,
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Erdős–Rényi G(n, p).
    Er {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "p")]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Barabási–Albert preferential attachment.
    Ba {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenOutput,
    },
    /// Two-level network: rings of cliques inside groups, groups in a ring.
    Hier2 {
        #[arg(long)]
        groups: usize,
        #[arg(long)]
        cliques: usize,
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        out: GenOutput,
    },
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated target edge counts for Erdős–Rényi graphs.
    #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 200_000, 400_000])]
    er_edges: Vec<usize>,
    #[arg(long, default_value_t = 20.0)]
    mean_degree: f64,
    /// Comma-separated clique counts for rings of cliques.
    #[arg(long, value_delimiter = ',')]
    ring_cliques: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    clique_size: usize,
    #[arg(long = "def", value_enum, default_value_t = CommunityDefinition::Weak)]
    definition: CommunityDefinition,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Skip the default Erdős–Rényi ladder.
    #[arg(long)]
    no_er: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Detect(config) => cmd_detect(&config, stdout),
        Command::Eval(args) => cmd_eval(&args, stdout),
        Command::Gen(command) => cmd_gen(&command, stdout),
        Command::Bench(args) => cmd_bench(&args, stdout),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::InvalidParameter(_) => 1,
                _ => 2,
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<LoadedGraph> {
    let file = File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    load_edge_list(BufReader::new(file))
}

fn read_partition(graph: &Graph, path: &Path) -> Result<Partition> {
    let file = File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    Partition::read_tsv(graph, BufReader::new(file))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

#[derive(Debug, Serialize)]
struct LevelReport {
    level: usize,
    min_size: usize,
    partition_file: String,
    #[serde(flatten)]
    report: RunReport,
}

#[derive(Debug, Serialize)]
struct DetectReport {
    graph: LoadSummary,
    options: Options,
    levels: Vec<LevelReport>,
}

fn cmd_detect(config: &DetectConfig, stdout: &mut dyn Write) -> Result<()> {
    let loaded = load_graph(&config.input)?;
    let graph = &loaded.graph;
    let truths = config
        .truth
        .iter()
        .map(|path| read_partition(graph, path))
        .collect::<Result<Vec<_>>>()?;
    let options = Options {
        min_size: config.k as usize,
        definition: config.definition,
        similarity: config.similarity,
    };
    let name = match &config.name {
        Some(name) => name.clone(),
        None => config
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "graph".into()),
    };
    fs::create_dir_all(&config.out_dir)?;

    let start = Instant::now();
    let hierarchy = run_hierarchy_with(graph, &options, config.levels as usize)?;
    let elapsed = start.elapsed().as_secs_f64();

    if let Some(path) = &config.dump_similarity {
        let table = crate::similarity::compute_all(graph, config.similarity);
        let mut out = create(path)?;
        table.write_tsv(graph, &mut out)?;
        out.flush()?;
    }

    let mut levels = Vec::new();
    for (i, level) in hierarchy.iter().enumerate() {
        let number = i + 1;
        let partition_file = format!("{name}.level{number}.tsv");
        let mut out = create(&config.out_dir.join(&partition_file))?;
        level.partition.write_tsv(graph, &mut out)?;
        out.flush()?;

        let detection_iterations = level.detection.as_ref().map_or(0, |d| d.iterations);
        let mut report = RunReport::evaluate(graph, &level.partition, truths.get(i))?
            .with_iterations(detection_iterations, level.level.iterations);
        // Levels past the first are incremental; only the first carries the
        // full run time.
        report.wall_time_seconds = if i == 0 { elapsed } else { 0.0 };
        if config.histogram {
            let mut out = create(
                &config
                    .out_dir
                    .join(format!("{name}.level{number}.sizes.tsv")),
            )?;
            write_histogram_tsv(&report.size_histogram, &mut out)?;
            out.flush()?;
        }
        writeln!(
            stdout,
            "level {number}: k = {}, {} communities -> {}",
            level.min_size,
            report.community_count,
            config.out_dir.join(&partition_file).display()
        )?;
        levels.push(LevelReport {
            level: number,
            min_size: level.min_size,
            partition_file,
            report,
        });
    }

    let report = DetectReport {
        graph: loaded.summary.clone(),
        options,
        levels,
    };
    let report_path = config.out_dir.join(format!("{name}.report.json"));
    let mut out = create(&report_path)?;
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    out.flush()?;
    writeln!(stdout, "report -> {}", report_path.display())?;
    Ok(())
}

fn cmd_eval(args: &EvalArgs, stdout: &mut dyn Write) -> Result<()> {
    let graph = load_graph(&args.graph)?.graph;
    let partition = read_partition(&graph, &args.partition)?;
    let truth = args
        .truth
        .as_deref()
        .map(|p| read_partition(&graph, p))
        .transpose()?;
    let report = RunReport::evaluate(&graph, &partition, truth.as_ref())?;
    let json = serde_json::to_string_pretty(&report)?;
    writeln!(stdout, "{json}")?;
    if let Some(path) = &args.output {
        fs::write(path, format!("{json}\n"))?;
    }
    Ok(())
}

fn write_generated(lg: &LabeledGraph, prefix: &Path, stdout: &mut dyn Write) -> Result<()> {
    if let Some(parent) = prefix.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    let with_suffix = |suffix: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    };
    let edges_path = with_suffix(".txt");
    let mut out = create(&edges_path)?;
    write_edge_list(&lg.graph, &mut out)?;
    out.flush()?;
    writeln!(stdout, "edges -> {}", edges_path.display())?;

    let truth_paths: Vec<PathBuf> = match lg.truth.len() {
        0 => Vec::new(),
        1 => vec![with_suffix(".truth.tsv")],
        n => (1..=n)
            .map(|l| with_suffix(&format!(".level{l}.truth.tsv")))
            .collect(),
    };
    for (truth, path) in lg.truth.iter().zip(&truth_paths) {
        let mut out = create(path)?;
        truth.write_tsv(&lg.graph, &mut out)?;
        out.flush()?;
        writeln!(stdout, "truth -> {}", path.display())?;
    }
    let summary = LoadSummary {
        vertices: lg.graph.vertex_count(),
        edges: lg.graph.edge_count(),
        ..LoadSummary::default()
    };
    writeln!(stdout, "{}", serde_json::to_string(&summary)?)?;
    Ok(())
}

fn cmd_gen(command: &GenCommand, stdout: &mut dyn Write) -> Result<()> {
    let (lg, out, default_prefix) = match command {
        GenCommand::RingCliques { cliques, size, out } => (
            generators::ring_of_cliques(*cliques, *size)?,
            out,
            format!("ring-{cliques}x{size}"),
        ),
        GenCommand::Er { n, p, seed, out } => (
            generators::erdos_renyi(*n, *p, *seed)?,
            out,
            format!("er-{n}-s{seed}"),
        ),
        GenCommand::Ba { n, m, seed, out } => (
            generators::barabasi_albert(*n, *m, *seed)?,
            out,
            format!("ba-{n}-{m}-s{seed}"),
        ),
        GenCommand::Hier2 {
            groups,
            cliques,
            size,
            out,
        } => (
            generators::two_level_hierarchical(*groups, *cliques, *size)?,
            out,
            format!("hier2-{groups}x{cliques}x{size}"),
        ),
    };
    let prefix = out
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from(default_prefix));
    write_generated(&lg, &prefix, stdout)
}

fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    let suite = Suite {
        er_edges: if args.no_er {
            Vec::new()
        } else {
            args.er_edges.clone()
        },
        mean_degree: args.mean_degree,
        ring_cliques: args.ring_cliques.clone(),
        clique_size: args.clique_size,
        definition: args.definition,
        repeats: args.repeats,
        seed: args.seed,
    };
    let rows = bench::run_suite(&suite)?;
    match &args.output {
        Some(path) => {
            let mut out = create(path)?;
            bench::write_csv(&rows, &mut out)?;
            out.flush()?;
        }
        None => bench::write_csv(&rows, stdout)?,
    }
    Ok(())
}
