//! Two-level hierarchy: cliques at the first level, groups of cliques at
//! the second, recovered with the automatic minimum-size schedule.
//!
//! cargo run --example hierarchy

use hamuhi::generators::two_level_hierarchical;
use hamuhi::{nmi, run_hierarchy, CommunityDefinition};

fn main() -> hamuhi::Result<()> {
    let data = two_level_hierarchical(5, 5, 5)?;
    println!(
        "{} vertices, {} edges",
        data.graph.vertex_count(),
        data.graph.edge_count()
    );
    let levels = run_hierarchy(&data.graph, CommunityDefinition::Weakest, 3)?;
    for (i, level) in levels.iter().enumerate() {
        let truth = data.truth.get(i);
        let score = match truth {
            Some(t) => format!("{:.4}", nmi(&level.partition, t)?),
            None => "-".into(),
        };
        println!(
            "level {}: k = {}, {} communities, sizes {:?}, NMI {score}, {} iterations",
            i + 1,
            level.min_size,
            level.partition.community_count(),
            level.partition.size_histogram(),
            level.level.iterations,
        );
    }
    Ok(())
}
