//! Runs every theorem sweep at its default range and prints a summary table.

use serre::theorems::{verify_theorem, SweepConfig, SweepResult, TheoremId};

fn main() -> serre::Result<()> {
    let cfg = SweepConfig::default();
    println!("{}  ms", SweepResult::TABLE_HEADER);
    for &t in TheoremId::ALL {
        let r = verify_theorem(t, &cfg)?;
        println!("{}  {}", r.table_row(), r.runtime_ms);
        for m in r.mismatches.iter().take(3) {
            println!("    mismatch {} predicted {:?} computed {:?}", m.params, m.predicted, m.computed);
        }
        for p in r.timeouts.iter().take(3) {
            println!("    timeout {p}");
        }
        if !r.extra.is_empty() {
            println!("    {}", serde_json::to_string(&r.extra).unwrap_or_default());
        }
    }
    Ok(())
}
