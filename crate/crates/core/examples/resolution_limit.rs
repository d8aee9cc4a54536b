//! Rings of cliques: each clique is found as its own community at any ring
//! length, where modularity maximisation starts merging neighbouring cliques.
//!
//! cargo run --example resolution_limit

use hamuhi::generators::ring_of_cliques;
use hamuhi::metrics::modularity;
use hamuhi::{hamuhi, nmi, CommunityDefinition, Partition};

fn main() -> hamuhi::Result<()> {
    println!("cliques size definition communities nmi  Q(cliques) Q(pairs)");
    for n in [10, 20, 30, 60] {
        for size in [3, 4] {
            let ring = ring_of_cliques(n, size)?;
            let truth = &ring.truth[0];
            // Merging adjacent cliques pairwise; beats the clique partition
            // on modularity once the ring is long enough.
            let pairs = Partition::from_labels(
                &truth.assignment().iter().map(|c| c / 2).collect::<Vec<_>>(),
            );
            for definition in [CommunityDefinition::Weak, CommunityDefinition::Weakest] {
                let found = hamuhi(&ring.graph, 2, definition)?;
                println!(
                    "{n:7} {size:4} {:10} {:11} {:.2} {:10.4} {:8.4}",
                    format!("{definition:?}"),
                    found.community_count(),
                    nmi(&found, truth)?,
                    modularity(&ring.graph, truth)?,
                    modularity(&ring.graph, &pairs)?,
                );
            }
        }
    }
    Ok(())
}
