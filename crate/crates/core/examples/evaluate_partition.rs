//! Scores partitions with modularity and NMI, and shows the local
//! modularity gain of moving one vertex.
//!
//! cargo run --example evaluate_partition

use hamuhi::datasets::dolphins;
use hamuhi::metrics::{modularity_gain, size_distribution};
use hamuhi::{hamuhi, CommunityDefinition, Partition, RunReport};

fn main() -> hamuhi::Result<()> {
    let data = dolphins()?;
    let graph = &data.graph;
    let truth = &data.truth[0];

    let found = hamuhi(graph, 2, CommunityDefinition::Weak)?;
    let report = RunReport::evaluate(graph, &found, Some(truth))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );

    let truth_report = RunReport::evaluate(graph, truth, None)?;
    println!(
        "truth modularity {:.4}",
        truth_report.modularity.unwrap_or(0.0)
    );
    println!("found sizes {:?}", size_distribution(&found));

    let single = Partition::single(graph.vertex_count());
    let v = 0;
    let other = 1 - truth.community_of(v);
    println!(
        "moving vertex {} to the other truth group changes Q by {:+.4}",
        graph.label(v),
        modularity_gain(graph, truth, v, other)?
    );
    println!(
        "single community: Q = {:.4}",
        RunReport::evaluate(graph, &single, None)?
            .modularity
            .unwrap_or(0.0)
    );
    Ok(())
}
