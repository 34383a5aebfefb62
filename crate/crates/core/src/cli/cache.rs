//! Append-only JSON-lines store of classification reports.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::circulant::CirculantGraph;
use crate::classify::{classify_circulant, ClassificationReport, ClassifyOptions, Subject};
use crate::error::Result;
use crate::theorems::ReportSource;

/// Stamp written on every line; bump whenever a decider changes its output.
pub const CACHE_VERSION: &str = "serre-report-1";

/// Cache hits recomputed per run.
const SPOT_CHECKS: usize = 2;

#[derive(Serialize, Deserialize)]
struct Line {
    version: String,
    key: String,
    report: ClassificationReport,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub loaded: usize,
    pub hits: usize,
    pub misses: usize,
    pub stored: usize,
    pub corrupt_lines: usize,
    pub stale_lines: usize,
    pub spot_checked: usize,
    pub spot_check_failures: usize,
}

pub struct ReportCache {
    path: PathBuf,
    options_key: String,
    entries: HashMap<String, ClassificationReport>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    stats: CacheStats,
}

/// Canonical key of a graph under a set of options.
pub fn cache_key(g: &CirculantGraph, opts: &ClassifyOptions) -> String {
    format!("{}|{}", g.canonical_json(), options_key(opts))
}

fn options_key(opts: &ClassifyOptions) -> String {
    serde_json::to_string(opts).expect("options serialise")
}

impl ReportCache {
    /// Loads `path` if it exists, keeping entries made under `opts`.
    pub fn open(path: impl AsRef<Path>, opts: &ClassifyOptions) -> Result<ReportCache> {
        let path = path.as_ref().to_path_buf();
        let mut stats = CacheStats::default();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (no, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Line>(&line) {
                    Ok(l) if l.version == CACHE_VERSION => {
                        entries.insert(l.key, l.report);
                    }
                    Ok(_) => stats.stale_lines += 1,
                    Err(e) => {
                        log::warn!("{}:{}: skipping corrupt cache line: {e}", path.display(), no + 1);
                        stats.corrupt_lines += 1;
                    }
                }
            }
        }
        stats.loaded = entries.len();
        Ok(ReportCache {
            path,
            options_key: options_key(opts),
            entries,
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            stats,
        })
    }

    /// Recomputes a few entries made under `opts`; on any difference the
    /// whole cache is ignored for this run.
    pub fn spot_check(&mut self, opts: &ClassifyOptions) -> Result<()> {
        let suffix = format!("|{}", self.options_key);
        let mut keys: Vec<&String> = self.entries.keys().filter(|k| k.ends_with(&suffix)).collect();
        keys.sort();
        let mut failed = false;
        for key in keys.into_iter().take(SPOT_CHECKS) {
            let cached = &self.entries[key];
            let Subject::Circulant(g) = &cached.subject else { continue };
            self.stats.spot_checked += 1;
            if classify_circulant(g, opts)? != *cached {
                log::warn!("cached report for {g} differs from recomputation; ignoring the cache");
                self.stats.spot_check_failures += 1;
                failed = true;
                break;
            }
        }
        if failed {
            self.entries.clear();
        }
        Ok(())
    }

    pub fn get(&self, g: &CirculantGraph, opts: &ClassifyOptions) -> Option<ClassificationReport> {
        let hit = self.entries.get(&cache_key(g, opts)).cloned();
        let counter = if hit.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        hit
    }

    /// Appends reports whose keys are not yet present.
    pub fn store(&mut self, reports: &[ClassificationReport], opts: &ClassifyOptions) -> Result<()> {
        let mut lines = String::new();
        for r in reports {
            let Subject::Circulant(g) = &r.subject else { continue };
            let key = cache_key(g, opts);
            if self.entries.contains_key(&key) {
                continue;
            }
            let line = Line { version: CACHE_VERSION.to_string(), key: key.clone(), report: r.clone() };
            lines.push_str(&serde_json::to_string(&line)?);
            lines.push('\n');
            self.entries.insert(key, r.clone());
            self.stats.stored += 1;
        }
        if !lines.is_empty() {
            if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            OpenOptions::new().create(true).append(true).open(&self.path)?.write_all(lines.as_bytes())?;
        }
        Ok(())
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            ..self.stats
        }
    }
}

/// A cache bound to one set of options, usable as a sweep's report source.
pub struct BoundCache<'a> {
    pub cache: &'a ReportCache,
    pub opts: &'a ClassifyOptions,
}

impl ReportSource for BoundCache<'_> {
    fn lookup(&self, g: &CirculantGraph) -> Option<ClassificationReport> {
        self.cache.get(g, self.opts)
    }
}
