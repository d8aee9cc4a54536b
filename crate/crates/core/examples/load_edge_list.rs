//! Loads an edge list with arbitrary vertex names, detects communities and
//! writes them back under the original names.
//!
//! cargo run --example load_edge_list [path]

use std::fs::File;
use std::io::{self, BufReader};

use hamuhi::{load_edge_list, run_hierarchy, CommunityDefinition};

const SAMPLE: &str = "\
# two squares with diagonals, joined by one edge
alice bob
alice carol
alice dave
bob carol
bob dave
carol dave
dave erin
erin frank
erin grace
erin heidi
frank grace
frank heidi
grace heidi
heidi heidi
alice bob
";

fn main() -> hamuhi::Result<()> {
    let loaded = match std::env::args().nth(1) {
        Some(path) => load_edge_list(BufReader::new(File::open(path)?))?,
        None => load_edge_list(SAMPLE.as_bytes())?,
    };
    eprintln!(
        "{}",
        serde_json::to_string(&loaded.summary).expect("summary serializes")
    );
    let levels = run_hierarchy(&loaded.graph, CommunityDefinition::Weakest, 1)?;
    levels[0]
        .partition
        .write_tsv(&loaded.graph, io::stdout().lock())?;
    Ok(())
}
