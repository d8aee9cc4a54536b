//! Compares the original and modified similarity on the bundled dolphin
//! network, both per edge and through the communities they produce.
//!
//! cargo run --example similarity_variants

use hamuhi::datasets::dolphins;
use hamuhi::{compute_all, detect, nmi, CommunityDefinition, Options, Variant};

fn main() -> hamuhi::Result<()> {
    let data = dolphins()?;
    let graph = &data.graph;
    let original = compute_all(graph, Variant::Original);
    let modified = compute_all(graph, Variant::Modified);

    println!("edges whose similarity drops to zero once endpoints are excluded:");
    for (i, &(v, u)) in graph.edges().iter().enumerate() {
        if modified.values()[i] == 0.0 && original.values()[i] > 0.4 {
            println!(
                "  {} - {}  original {:.3}  modified {:.3}",
                graph.label(v),
                graph.label(u),
                original.values()[i],
                modified.values()[i]
            );
        }
    }

    for definition in [CommunityDefinition::Weak, CommunityDefinition::Weakest] {
        for variant in [Variant::Original, Variant::Modified] {
            let options = Options::new(2, definition).with_similarity(variant);
            let run = detect(graph, &options)?;
            println!(
                "{definition:?}/{variant:?}: {} communities, NMI {:.4}",
                run.partition.community_count(),
                nmi(&run.partition, &data.truth[0])?
            );
        }
    }
    Ok(())
}
