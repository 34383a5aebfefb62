//! The `serre` command line.
//!
//! Subcommands are `classify`, `verify`, `witness`, `recheck` and
//! `homology`. Options may also come from a TOML file given by `--config`;
//! flags take precedence over it.

mod cache;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circulant::{CirculantGraph, Family, FamilyParams};
use crate::classify::{classify, ClassificationReport, ClassifyOptions, Decision, Subject, Witness};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec};
use crate::theorems::{
    component_certificate, davis_domke, instances, verify_theorem_with, ComponentCertificate, ReportSource,
    SweepConfig, SweepResult, TheoremId,
};

pub use cache::{cache_key, BoundCache, CacheStats, ReportCache, CACHE_VERSION};

#[derive(Parser, Debug)]
#[command(name = "serre", version, about = "Serre's condition S2 and friends on circulant independence complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Default)]
pub struct CommonArgs {
    /// Field characteristics, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub chars: Option<Vec<u32>>,
    /// Node budget for the shelling and decomposition searches.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// JSON-lines report cache.
    #[arg(long, global = true, env = "SERRE_CACHE")]
    pub cache: Option<PathBuf>,
    /// Print cache statistics to stderr.
    #[arg(long, global = true)]
    pub stats: bool,
    /// TOML file of defaults for the options above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify one graph or complex.
    Classify(GraphArgs),
    /// Sweep a theorem's domain and compare against its prediction.
    Verify(VerifyArgs),
    /// Write every witness of a classification as a standalone JSON file.
    Witness {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "witnesses")]
        out_dir: PathBuf,
    },
    /// Re-validate witness or certificate files.
    Recheck {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Reduced homology of Ind(G) or of a complex file.
    Homology(GraphArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Generators of a circulant, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<usize>>,
    /// power-of-cycle, upper-interval, omit-one, one-paired, cubic or cycle.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long = "two-n")]
    pub two_n: Option<usize>,
    /// Complex in text form: vertex count, then one facet per line.
    #[arg(long)]
    pub complex: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Theorem id, or `all`.
    #[arg(long)]
    pub theorem: String,
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
    /// Random pairs drawn by the pair sweeps.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write component certificates for the cubic decomposition.
    #[arg(long)]
    pub certify: bool,
    #[arg(long, default_value = "certificates")]
    pub out_dir: PathBuf,
}

/// Settings read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    chars: Option<Vec<u32>>,
    budget: Option<u64>,
    jobs: Option<usize>,
    format: Option<Format>,
    cache: Option<PathBuf>,
    max_n: Option<usize>,
    samples: Option<usize>,
    seed: Option<u64>,
}

/// Options after merging flags, environment and the config file.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub classify: ClassifyOptions,
    pub jobs: usize,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub stats: bool,
    pub max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn resolve(common: &CommonArgs, verify: Option<&VerifyArgs>) -> Result<RunConfig> {
        let file: FileConfig = match &common.config {
            Some(path) => {
                toml::from_str(&std::fs::read_to_string(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let mut classify = ClassifyOptions::default();
        if let Some(chars) = common.chars.clone().or(file.chars) {
            if chars.is_empty() {
                return Err(Error::InvalidParams("at least one characteristic is required".into()));
            }
            classify.chars = chars.into_iter().map(FieldSpec::new).collect::<Result<_>>()?;
        }
        if let Some(budget) = common.budget.or(file.budget) {
            if budget == 0 {
                return Err(Error::InvalidParams("budget must be positive".into()));
            }
            classify.budget = budget;
        }
        Ok(RunConfig {
            classify,
            jobs: common.jobs.or(file.jobs).unwrap_or(0),
            format: common.format.or(file.format).unwrap_or(Format::Json),
            cache: common.cache.clone().or(file.cache),
            stats: common.stats,
            max_n: verify.and_then(|v| v.max_n).or(file.max_n),
            samples: verify.and_then(|v| v.samples).or(file.samples),
            seed: verify.and_then(|v| v.seed).or(file.seed),
        })
    }
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParams(format!("--{flag} is required for the {} family", family.name())))
}

impl GraphArgs {
    pub fn subject(&self) -> Result<Subject> {
        if let Some(path) = &self.complex {
            return Ok(Subject::Complex(SimplicialComplex::from_text(&std::fs::read_to_string(path)?)?));
        }
        if let Some(name) = &self.family {
            let f = Family::parse(name)?;
            let n = self.n;
            let p = match f {
                Family::PowerOfCycle => FamilyParams::PowerOfCycle { n: need(n, "n", f)?, d: need(self.d, "d", f)? },
                Family::UpperInterval => FamilyParams::UpperInterval { n: need(n, "n", f)?, d: need(self.d, "d", f)? },
                Family::OmitOne => FamilyParams::OmitOne { n: need(n, "n", f)?, i: need(self.i, "i", f)? },
                Family::OnePaired => {
                    FamilyParams::OnePaired { n: need(n, "n", f)?, a: need(self.a, "a", f)?, b: need(self.b, "b", f)? }
                }
                Family::Cubic => FamilyParams::Cubic { two_n: need(self.two_n, "two-n", f)?, a: need(self.a, "a", f)? },
                Family::PlainCycle => FamilyParams::PlainCycle { n: need(n, "n", f)? },
            };
            return Ok(Subject::Circulant(p.build()?.graph));
        }
        match (self.n, &self.gens) {
            (Some(n), Some(gens)) => Ok(Subject::Circulant(CirculantGraph::new(n, gens.iter().copied())?)),
            (Some(n), None) => Ok(Subject::Circulant(CirculantGraph::new(n, [])?)),
            _ => Err(Error::InvalidParams("give --n and --gens, --family with its parameters, or --complex".into())),
        }
    }
}

/// A witness or certificate file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "artifact", rename_all = "kebab-case")]
pub enum Artifact {
    Witness { subject: Subject, witness: Witness },
    ComponentCertificate { two_n: usize, a: usize, certificate: ComponentCertificate },
}

impl Artifact {
    /// Validates the artifact from its own contents.
    pub fn recheck(&self) -> Result<bool> {
        match self {
            Artifact::Witness { subject, witness } => witness.recheck(&subject.complex(), subject.graph()),
            Artifact::ComponentCertificate { two_n, a, certificate } => {
                let g = crate::circulant::cubic(*two_n, *a)?.graph;
                let (_, m, gens) = davis_domke(*two_n, *a);
                let expected = CirculantGraph::new(m, gens)?;
                Ok(certificate.target == expected && certificate.recheck(g.graph()))
            }
        }
    }
}

fn label(subject: &Subject) -> String {
    match subject {
        Subject::Circulant(g) => g.to_string(),
        Subject::Graph(g) => format!("graph on {} vertices", g.n()),
        Subject::Complex(d) => format!("complex on {} vertices", d.n_vertices()),
    }
}

fn decision(d: Decision) -> String {
    d.as_bool().map_or("timeout".to_string(), |b| b.to_string())
}

/// The scalar fields of a report as `(column, value)` pairs.
pub fn report_rows(r: &ClassificationReport) -> Vec<(String, String)> {
    let mut rows = vec![
        ("subject".to_string(), label(&r.subject)),
        ("vertices".into(), r.vertices.to_string()),
        ("facets".into(), r.facets.to_string()),
        ("dim".into(), r.dim.to_string()),
        ("well_covered".into(), r.well_covered.to_string()),
        ("pure".into(), r.pure.to_string()),
        ("s2".into(), r.s2.to_string()),
    ];
    for (level, by_k) in &r.sr {
        rows.extend(by_k.iter().map(|(k, v)| (format!("s{level}_char{k}"), v.to_string())));
    }
    rows.extend(r.cohen_macaulay.by_char.iter().map(|(k, v)| (format!("cm_char{k}"), v.to_string())));
    rows.push(("cm_all_fields".into(), r.cohen_macaulay.all_fields.to_string()));
    rows.extend(r.buchsbaum.iter().map(|(k, v)| (format!("buchsbaum_char{k}"), v.to_string())));
    rows.push(("shellable".into(), decision(r.shellable)));
    rows.push(("vertex_decomposable".into(), decision(r.vertex_decomposable)));
    rows.push(("strongly_connected".into(), r.strongly_connected.to_string()));
    rows.push(("witnesses".into(), r.witnesses.len().to_string()));
    rows
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_rows(rows: &[(String, String)], format: Format) -> String {
    match format {
        Format::Csv => {
            let head: Vec<String> = rows.iter().map(|(k, _)| csv_field(k)).collect();
            let vals: Vec<String> = rows.iter().map(|(_, v)| csv_field(v)).collect();
            format!("{}\n{}\n", head.join(","), vals.join(","))
        }
        _ => {
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn open_cache(cfg: &RunConfig, opts: &ClassifyOptions) -> Result<Option<ReportCache>> {
    match &cfg.cache {
        Some(path) => {
            let mut c = ReportCache::open(path, opts)?;
            c.spot_check(opts)?;
            Ok(Some(c))
        }
        None => Ok(None),
    }
}

fn print_stats(cfg: &RunConfig, cache: Option<&ReportCache>) -> Result<()> {
    if cfg.stats {
        let stats = cache.map(|c| c.stats());
        eprintln!("cache stats: {}", serde_json::to_string(&stats)?);
    }
    Ok(())
}

fn classify_cached(subject: Subject, cfg: &RunConfig) -> Result<ClassificationReport> {
    let opts = &cfg.classify;
    let mut cache = open_cache(cfg, opts)?;
    let report = match (&subject, cache.as_ref()) {
        (Subject::Circulant(g), Some(c)) => c.get(g, opts),
        _ => None,
    };
    let report = match report {
        Some(r) => r,
        None => {
            let r = classify(subject, opts)?;
            if let Some(c) = cache.as_mut() {
                c.store(std::slice::from_ref(&r), opts)?;
            }
            r
        }
    };
    print_stats(cfg, cache.as_ref())?;
    Ok(report)
}

fn cmd_classify(args: &GraphArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let report = classify_cached(args.subject()?, cfg)?;
    let text = match cfg.format {
        Format::Json => to_json(&report)?,
        f => render_rows(&report_rows(&report), f),
    };
    out.write_all(text.as_bytes())?;
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let all = args.theorem.trim().eq_ignore_ascii_case("all");
    let theorems: Vec<TheoremId> = if all { TheoremId::ALL.to_vec() } else { vec![TheoremId::parse(&args.theorem)?] };
    let defaults = SweepConfig::default();
    let sweep = SweepConfig {
        max_n: cfg.max_n,
        samples: cfg.samples.unwrap_or(defaults.samples),
        seed: cfg.seed.unwrap_or(defaults.seed),
        jobs: cfg.jobs,
        classify: cfg.classify.clone(),
    };
    let mut cache = open_cache(cfg, &sweep.classify)?;
    let mut results = Vec::new();
    for &t in &theorems {
        let (result, fresh) = {
            let bound = cache.as_ref().map(|c| BoundCache { cache: c, opts: &sweep.classify });
            verify_theorem_with(t, &sweep, bound.as_ref().map(|b| b as &dyn ReportSource))?
        };
        if let Some(c) = cache.as_mut() {
            c.store(&fresh, &sweep.classify)?;
        }
        results.push(result);
    }
    if args.certify && theorems.contains(&TheoremId::DavisDomke) {
        let written = write_certificates(sweep.max_n.unwrap_or(TheoremId::DavisDomke.default_max_n()), &args.out_dir)?;
        log::info!("wrote {written} component certificates to {}", args.out_dir.display());
    }
    print_stats(cfg, cache.as_ref())?;
    let text = match cfg.format {
        Format::Json if all => to_json(&results)?,
        Format::Json => to_json(&results[0])?,
        Format::Table => {
            let rows: Vec<String> = results.iter().map(SweepResult::table_row).collect();
            format!("{}\n{}\n", SweepResult::TABLE_HEADER, rows.join("\n"))
        }
        Format::Csv => {
            let rows: Vec<String> = results.iter().map(SweepResult::csv_row).collect();
            format!("{}\n{}\n", SweepResult::CSV_HEADER, rows.join("\n"))
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(results.iter().all(SweepResult::passed))
}

fn write_certificates(max_n: usize, dir: &Path) -> Result<usize> {
    std::fs::create_dir_all(dir)?;
    let mut written = 0;
    for p in instances(TheoremId::DavisDomke, max_n) {
        let FamilyParams::Cubic { two_n, a } = p else { continue };
        let (_, m, gens) = davis_domke(two_n, a);
        let target = CirculantGraph::new(m, gens)?;
        if let Some(certificate) = component_certificate(two_n, a, &target)? {
            let art = Artifact::ComponentCertificate { two_n, a, certificate };
            std::fs::write(dir.join(format!("cubic-{two_n}-{a}.json")), to_json(&art)?)?;
            written += 1;
        }
    }
    Ok(written)
}

fn witness_kind(w: &Witness) -> &'static str {
    match w {
        Witness::DisconnectedLinkFace { .. } => "disconnected-link-face",
        Witness::ImpureFacetPair { .. } => "impure-facet-pair",
        Witness::NonvanishingLinkHomology { .. } => "nonvanishing-link-homology",
        Witness::ShellingOrder { .. } => "shelling-order",
        Witness::NoShellingExists { .. } => "no-shelling-exists",
    }
}

fn file_stem(subject: &Subject) -> String {
    match subject {
        Subject::Circulant(g) => format!("C{}-{}", g.n(), g.gens().iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-")),
        Subject::Graph(g) => format!("graph{}", g.n()),
        Subject::Complex(d) => format!("complex{}", d.n_vertices()),
    }
}

fn cmd_witness(args: &GraphArgs, out_dir: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let report = classify_cached(args.subject()?, cfg)?;
    std::fs::create_dir_all(out_dir)?;
    let stem = file_stem(&report.subject);
    let mut written = Vec::new();
    for (idx, w) in report.witnesses.iter().enumerate() {
        let path = out_dir.join(format!("{stem}-{idx:02}-{}.json", witness_kind(w)));
        let art = Artifact::Witness { subject: report.subject.clone(), witness: w.clone() };
        std::fs::write(&path, to_json(&art)?)?;
        written.push((path.display().to_string(), witness_kind(w)));
    }
    let text = match cfg.format {
        Format::Json => {
            let v: Vec<Value> = written.iter().map(|(p, k)| json!({ "file": p, "kind": k })).collect();
            to_json(&v)?
        }
        Format::Table => written.iter().map(|(p, k)| format!("{k:<28}{p}\n")).collect(),
        Format::Csv => std::iter::once("kind,file\n".to_string())
            .chain(written.iter().map(|(p, k)| format!("{k},{}\n", csv_field(p))))
            .collect(),
    };
    out.write_all(text.as_bytes())?;
    Ok(true)
}

fn cmd_recheck(files: &[PathBuf], out: &mut dyn Write) -> Result<bool> {
    let mut ok = true;
    for f in files {
        let art: Artifact = serde_json::from_str(&std::fs::read_to_string(f)?)?;
        let valid = art.recheck()?;
        ok &= valid;
        writeln!(out, "{} {}", if valid { "ok" } else { "FAILED" }, f.display())?;
    }
    Ok(ok)
}

fn cmd_homology(args: &GraphArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let subject = args.subject()?;
    let delta = subject.complex();
    let profile = reduced_homology(&delta)?;
    let dims: Vec<isize> = profile.dims().iter().map(|g| g.i).collect();
    let betti: BTreeMap<u32, Vec<u64>> = cfg
        .classify
        .chars
        .iter()
        .map(|&k| (k.characteristic(), dims.iter().map(|&i| profile.betti(i, k)).collect()))
        .collect();
    let text = match cfg.format {
        Format::Json => to_json(&json!({ "subject": label(&subject), "homology": profile.dims(), "betti": betti }))?,
        f => {
            let sep = if f == Format::Csv { "," } else { "\t" };
            let mut head = vec!["i".to_string(), "rank".into(), "torsion".into()];
            head.extend(betti.keys().map(|k| format!("betti_char{k}")));
            let mut s = head.join(sep) + "\n";
            for (j, g) in profile.dims().iter().enumerate() {
                let tors: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
                let mut row = vec![g.i.to_string(), g.rank.to_string(), tors.join(" ")];
                row.extend(betti.values().map(|b| b[j].to_string()));
                s += &(row.join(sep) + "\n");
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(true)
}

/// Runs a parsed command line; `Ok(false)` means a check failed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let verify = match &cli.command {
        Command::Verify(v) => Some(v),
        _ => None,
    };
    let cfg = RunConfig::resolve(&cli.common, verify)?;
    match &cli.command {
        Command::Classify(g) => cmd_classify(g, &cfg, out),
        Command::Verify(v) => cmd_verify(v, &cfg, out),
        Command::Witness { graph, out_dir } => cmd_witness(graph, out_dir, &cfg, out),
        Command::Recheck { files } => cmd_recheck(files, out),
        Command::Homology(g) => cmd_homology(g, &cfg, out),
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit code:
/// 0 on success, 1 when a check fails, 2 on invalid input.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli, out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

pub fn run() -> ExitCode {
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).try_init();
    run_from(std::env::args_os(), &mut std::io::stdout().lock())
}
