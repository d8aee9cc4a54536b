//! Times the merge loop on Erdős–Rényi graphs of doubling size and on rings
//! of cliques, printing the bench CSV.
//!
//! cargo run --release --example scaling

use hamuhi::bench::{run_suite, write_csv, Suite};

fn main() -> hamuhi::Result<()> {
    let suite = Suite {
        ring_cliques: vec![100, 1_000, 10_000],
        ..Suite::default()
    };
    let rows = run_suite(&suite)?;
    write_csv(&rows, std::io::stdout().lock())?;
    for pair in rows[..suite.er_edges.len()].windows(2) {
        eprintln!(
            "{} -> {} edges: time x{:.2}",
            pair[0].m,
            pair[1].m,
            pair[1].seconds / pair[0].seconds
        );
    }
    Ok(())
}
