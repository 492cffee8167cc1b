//! A small deterministic fuzz campaign, then the same campaign with a
//! deliberate bug injected so the harness can be seen failing.
//!
//!     ISOPERIX_THREADS=4 cargo run --release --example fuzz_campaign

use isoperix::fuzz::{self, FuzzConfig, Mutation};

fn main() -> isoperix::Result<()> {
    let cfg = FuzzConfig {
        count: 2000,
        seed: 42,
        ..FuzzConfig::default()
    };
    let clean = fuzz::run(&cfg)?;
    println!(
        "clean:   {} cases, {} checks, {} failures",
        clean.cases, clean.checks, clean.failures
    );
    for (check, margin) in &clean.worst_margin {
        println!("  worst margin {check:<16} {margin:.3e}");
    }

    let broken = fuzz::run(&FuzzConfig {
        mutation: Mutation::NegateEvoluteArea,
        ..cfg
    })?;
    println!("mutated: {} failures", broken.failures);
    for (check, n) in &broken.failures_by_check {
        println!("  {check:<16} {n}");
    }
    Ok(())
}
