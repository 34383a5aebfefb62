//! Sweeps one theorem, named on the command line, and prints any mismatch.
//! `cargo run --example verify_theorem -- s2-one-paired 18`

use serre::theorems::{verify_theorem, SweepConfig, TheoremId};

fn main() -> serre::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = TheoremId::parse(&args.next().unwrap_or_else(|| "s2-power-of-cycle".into()))?;
    let max_n = args.next().and_then(|s| s.parse().ok());
    let r = verify_theorem(t, &SweepConfig { max_n, ..SweepConfig::default() })?;
    println!("{t}: {} instances, passed {}", r.instances_checked, r.passed());
    for m in &r.mismatches {
        println!("  {} predicted {:?} computed {:?}", m.params, m.predicted, m.computed);
    }
    Ok(())
}
