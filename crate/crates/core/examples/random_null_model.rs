//! Random graphs have no community structure; detection should collapse
//! them to a single community.
//!
//! cargo run --release --example random_null_model

use hamuhi::generators::{barabasi_albert, erdos_renyi};
use hamuhi::{hamuhi, CommunityDefinition};

fn main() -> hamuhi::Result<()> {
    let n = 1000;
    for seed in 0..10 {
        let er = erdos_renyi(n, 20.0 / (n - 1) as f64, seed)?;
        let ba = barabasi_albert(n, 10, seed)?;
        let er_count = hamuhi(&er.graph, 2, CommunityDefinition::Weak)?.community_count();
        let ba_count = hamuhi(&ba.graph, 2, CommunityDefinition::Weak)?.community_count();
        println!(
            "seed {seed}: ER {} edges -> {er_count} communities, BA {} edges -> {ba_count} communities",
            er.graph.edge_count(),
            ba.graph.edge_count()
        );
    }
    Ok(())
}
