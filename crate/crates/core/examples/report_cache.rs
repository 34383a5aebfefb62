//! Stores reports in a JSON-lines cache and serves a sweep from it.

use serre::classify::ClassifyOptions;
use serre::cli::{BoundCache, ReportCache};
use serre::theorems::{verify_theorem_with, SweepConfig, TheoremId};

fn main() -> serre::Result<()> {
    let path = std::env::temp_dir().join("serre-example-cache.jsonl");
    let _ = std::fs::remove_file(&path);
    let opts = ClassifyOptions::default();
    let cfg = SweepConfig { classify: opts.clone(), ..SweepConfig::default() };
    for pass in 1..=2 {
        let mut cache = ReportCache::open(&path, &opts)?;
        cache.spot_check(&opts)?;
        let (result, fresh) = {
            let source = BoundCache { cache: &cache, opts: &opts };
            verify_theorem_with(TheoremId::S2OmitOne, &cfg, Some(&source))?
        };
        cache.store(&fresh, &opts)?;
        println!("pass {pass}: passed {}  {:?}", result.passed(), cache.stats());
    }
    Ok(())
}
