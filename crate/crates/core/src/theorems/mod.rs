//! Theorem predictions and the sweeps that test them.
//!
//! [`predict`] evaluates closed forms only; the sweeps compute the same
//! properties with [`crate::classify`] and collect every disagreement.

mod corpus;
mod predict;
mod structure;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circulant::{CirculantGraph, FamilyParams};
use crate::classify::{
    classify_circulant, is_s2, reisner_scan, ClassificationReport, ClassifyOptions, Decision, SerreLevel,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

pub use corpus::{circulant_corpus, corpus, family_instances, interval_complex, projective_plane, CorpusEntry};
pub use predict::{davis_domke, in_s2_not_buchs_family, predict, predict_pair, PairFacts, Prediction};
pub use structure::{
    component_certificate, equivalence_items, verify_interval_links, verify_structure_one_paired,
    ComponentCertificate, EquivalenceItems, IntervalLinkReport,
};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum TheoremId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }
    };
}

theorem_ids! {
    WcPowerOfCycle => "wc-power-of-cycle",
    S2PowerOfCycle => "s2-power-of-cycle",
    S2Cycles => "s2-cycles",
    BuchsNotS2PowerOfCycle => "buchs-not-s2-power-of-cycle",
    WcUpperInterval => "wc-upper-interval",
    CmUpperInterval => "cm-upper-interval",
    S2UpperInterval => "s2-upper-interval",
    EquivUpperInterval => "equiv-upper-interval",
    S2OmitOne => "s2-omit-one",
    StructureOnePaired => "structure-one-paired",
    S2OnePaired => "s2-one-paired",
    BuchsNotCmOnePaired => "buchs-not-cm-one-paired",
    S2CubicConnected => "s2-cubic-connected",
    DavisDomke => "davis-domke",
    S2Cubic => "s2-cubic",
    S2NotBuchsFamilies => "s2-not-buchs-families",
    JoinS2 => "join-s2",
    DisjointUnionS2 => "disjoint-union-s2",
    UnionNotBuchsbaum => "union-not-buchsbaum",
}

impl TheoremId {
    pub fn parse(s: &str) -> Result<TheoremId> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == norm || t.name().replace('-', "") == norm.replace('-', ""))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }

    /// Largest vertex count swept when no override is given.
    pub fn default_max_n(self) -> usize {
        use TheoremId::*;
        match self {
            S2Cycles => 12,
            S2OmitOne => 20,
            StructureOnePaired | S2OnePaired | BuchsNotCmOnePaired => 24,
            S2CubicConnected | DavisDomke | S2Cubic | S2NotBuchsFamilies => 24,
            JoinS2 | DisjointUnionS2 | UnionNotBuchsbaum => 12,
            _ => 26,
        }
    }

    fn is_pair(self) -> bool {
        matches!(self, TheoremId::JoinS2 | TheoremId::DisjointUnionS2 | TheoremId::UnionNotBuchsbaum)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family parameters inside the theorem's domain, in sweep order.
pub fn instances(t: TheoremId, max_n: usize) -> Vec<FamilyParams> {
    use FamilyParams as F;
    use TheoremId::*;
    let mut out = Vec::new();
    for n in 1..=max_n {
        match t {
            WcPowerOfCycle | S2PowerOfCycle | BuchsNotS2PowerOfCycle => {
                out.extend((1..=n / 2).map(|d| F::PowerOfCycle { n, d }));
            }
            S2Cycles if n >= 3 => out.push(F::PlainCycle { n }),
            WcUpperInterval | CmUpperInterval | S2UpperInterval | EquivUpperInterval => {
                out.extend((1..).take_while(|d| 2 * d + 2 <= n).map(|d| F::UpperInterval { n, d }));
            }
            S2OmitOne if n >= 3 => out.extend((1..=n / 2).map(|i| F::OmitOne { n, i })),
            StructureOnePaired | S2OnePaired | BuchsNotCmOnePaired => {
                for a in 1..=n {
                    for b in 2..=n {
                        if n % (a * b) == 0 {
                            out.push(F::OnePaired { n, a, b });
                        }
                    }
                }
            }
            S2CubicConnected | DavisDomke | S2Cubic | S2NotBuchsFamilies if n % 2 == 0 => {
                for a in 1..n / 2 {
                    let keep = match t {
                        S2CubicConnected => num_integer::gcd(a, n / 2) == 1,
                        S2NotBuchsFamilies => in_s2_not_buchs_family(n, a),
                        _ => true,
                    };
                    if keep {
                        out.push(F::Cubic { two_n: n, a });
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Previously computed reports, consulted before classifying.
pub trait ReportSource: Sync {
    fn lookup(&self, g: &CirculantGraph) -> Option<ClassificationReport>;
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: Option<usize>,
    /// Random pairs drawn by the join and disjoint-union sweeps.
    pub samples: usize,
    pub seed: u64,
    /// Worker threads; zero picks the machine default.
    pub jobs: usize,
    pub classify: ClassifyOptions,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: None, samples: 120, seed: 0x5eed, jobs: 0, classify: ClassifyOptions::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub params: Value,
    pub predicted: Prediction,
    pub computed: Prediction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Box<ClassificationReport>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub theorem: TheoremId,
    pub instances_checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Instances whose budgeted searches ran out, listed by parameters.
    pub timeouts: Vec<Value>,
    /// Instances where the connectivity and homological `S_2` tests differ.
    pub criterion_disagreements: Vec<Value>,
    pub hierarchy_violations: Vec<Value>,
    pub certificates_verified: usize,
    /// Secondary counts reported alongside the verdict.
    pub extra: BTreeMap<String, Value>,
    #[serde(skip)]
    pub runtime_ms: u64,
}

impl SweepResult {
    fn new(theorem: TheoremId) -> Self {
        SweepResult {
            theorem,
            instances_checked: 0,
            mismatches: Vec::new(),
            timeouts: Vec::new(),
            criterion_disagreements: Vec::new(),
            hierarchy_violations: Vec::new(),
            certificates_verified: 0,
            extra: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.timeouts.is_empty()
            && self.criterion_disagreements.is_empty()
            && self.hierarchy_violations.is_empty()
    }

    pub const TABLE_HEADER: &'static str =
        "theorem                        instances  mismatches  timeouts  disagreements  violations  verdict";

    pub fn table_row(&self) -> String {
        format!(
            "{:<30} {:>9}  {:>10}  {:>8}  {:>13}  {:>10}  {}",
            self.theorem.name(),
            self.instances_checked,
            self.mismatches.len(),
            self.timeouts.len(),
            self.criterion_disagreements.len(),
            self.hierarchy_violations.len(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }

    pub const CSV_HEADER: &'static str = "theorem,instances,mismatches,timeouts,disagreements,violations,passed";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.theorem.name(),
            self.instances_checked,
            self.mismatches.len(),
            self.timeouts.len(),
            self.criterion_disagreements.len(),
            self.hierarchy_violations.len(),
            self.passed()
        )
    }
}

/// One checked instance before merging.
#[derive(Default)]
struct Outcome {
    params: Value,
    predicted: Prediction,
    computed: Prediction,
    report: Option<ClassificationReport>,
    fresh: bool,
    timed_out: bool,
    disagreement: bool,
    violations: Vec<String>,
    certificates: usize,
    extra: Vec<(&'static str, i64)>,
}

pub fn verify_theorem(t: TheoremId, cfg: &SweepConfig) -> Result<SweepResult> {
    Ok(verify_theorem_with(t, cfg, None)?.0)
}

/// Runs the sweep for `t`, returning the result and every report that was
/// computed rather than found in `source`.
pub fn verify_theorem_with(
    t: TheoremId,
    cfg: &SweepConfig,
    source: Option<&dyn ReportSource>,
) -> Result<(SweepResult, Vec<ClassificationReport>)> {
    let start = Instant::now();
    let mut opts = cfg.classify.clone();
    let two = SerreLevel::new(2)?;
    if !opts.serre_levels.contains(&two) {
        opts.serre_levels.insert(0, two);
    }
    let max_n = cfg.max_n.unwrap_or(t.default_max_n());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<Outcome>> = if t.is_pair() {
        let pairs = pair_instances(t, max_n, cfg)?;
        pool.install(|| pairs.par_iter().map(|p| evaluate_pair(t, p, &opts)).collect())
    } else {
        let params = instances(t, max_n);
        pool.install(|| params.par_iter().map(|p| evaluate_family(t, p, &opts, source)).collect())
    };
    let mut result = SweepResult::new(t);
    let mut fresh = Vec::new();
    for o in outcomes {
        let o = o?;
        result.instances_checked += 1;
        result.certificates_verified += o.certificates;
        for (k, v) in o.extra {
            let slot = result.extra.entry(k.to_string()).or_insert(json!(0));
            *slot = json!(slot.as_i64().unwrap_or(0) + v);
        }
        if o.timed_out {
            result.timeouts.push(o.params.clone());
        } else if o.predicted != o.computed {
            result.mismatches.push(Mismatch {
                params: o.params.clone(),
                predicted: o.predicted,
                computed: o.computed,
                report: o.report.clone().map(Box::new),
            });
        }
        if o.disagreement {
            result.criterion_disagreements.push(o.params.clone());
        }
        for v in o.violations {
            result.hierarchy_violations.push(json!({ "params": o.params, "violation": v }));
        }
        if o.fresh {
            fresh.extend(o.report);
        }
    }
    result.runtime_ms = start.elapsed().as_millis() as u64;
    log::info!("{}: {} instances in {} ms", t, result.instances_checked, result.runtime_ms);
    Ok((result, fresh))
}

/// Every theorem in declaration order.
pub fn verify_all(cfg: &SweepConfig) -> Result<Vec<SweepResult>> {
    TheoremId::ALL.iter().map(|&t| verify_theorem(t, cfg)).collect()
}

fn uniform(values: impl IntoIterator<Item = bool>) -> Value {
    let v: Vec<bool> = values.into_iter().collect();
    match v.first() {
        Some(&first) if v.iter().all(|&x| x == first) => json!(first),
        Some(_) => json!("char-dependent"),
        None => Value::Null,
    }
}

fn decision(d: Decision) -> Value {
    match d.as_bool() {
        Some(b) => json!(b),
        None => json!("timeout"),
    }
}

/// The computed value of `key`, read from a report.
fn from_report(key: &str, r: &ClassificationReport) -> Option<Value> {
    let cm = &r.cohen_macaulay.by_char;
    let b = &r.buchsbaum;
    Some(match key {
        "well_covered" => json!(r.well_covered),
        "pure" => json!(r.pure),
        "s2" => json!(r.s2),
        "dim" => json!(r.dim),
        "cohen_macaulay" => uniform(cm.values().copied()),
        "buchsbaum" => uniform(b.values().copied()),
        "shellable" => decision(r.shellable),
        "vertex_decomposable" => decision(r.vertex_decomposable),
        "buchsbaum_not_s2" => uniform(b.values().map(|&x| x && !r.s2)),
        "buchsbaum_not_cm" => uniform(b.iter().map(|(k, &x)| x && !cm[k])),
        "pure_not_buchsbaum" => uniform(b.values().map(|&x| r.pure && !x)),
        _ => return None,
    })
}

fn report_for(
    g: &CirculantGraph,
    opts: &ClassifyOptions,
    source: Option<&dyn ReportSource>,
) -> Result<(ClassificationReport, bool)> {
    if let Some(r) = source.and_then(|s| s.lookup(g)) {
        return Ok((r, false));
    }
    Ok((classify_circulant(g, opts)?, true))
}

fn evaluate_family(
    t: TheoremId,
    p: &FamilyParams,
    opts: &ClassifyOptions,
    source: Option<&dyn ReportSource>,
) -> Result<Outcome> {
    let predicted = predict(t, p)?;
    let inst = p.build()?;
    let mut o = Outcome { params: serde_json::to_value(p)?, ..Outcome::default() };
    match t {
        TheoremId::DavisDomke => {
            let (copies, m, gens) = davis_domke_target(p)?;
            let target = CirculantGraph::new(m, gens)?;
            let comps = inst.graph.graph().connected_components().len();
            o.computed.insert("components".into(), json!(comps));
            let cert = component_certificate(inst.graph.n(), p_cubic_a(p), &target)?;
            let label = match cert {
                Some(c) if c.recheck(inst.graph.graph()) => {
                    o.certificates = c.maps.len();
                    json!(format!("C_{m}({},{})", gens[0], gens[1]))
                }
                _ => json!("not isomorphic to the predicted component"),
            };
            debug_assert_eq!(predicted["components"], json!(copies));
            o.computed.insert("component".into(), label);
        }
        TheoremId::StructureOnePaired => {
            let FamilyParams::OnePaired { n, a, b } = *p else { unreachable!() };
            let delta = SimplicialComplex::independence_complex(inst.graph.graph());
            o.computed.insert("structure".into(), json!(verify_structure_one_paired(n, a, b)?));
            o.computed.insert("pure".into(), json!(delta.is_pure()));
            o.computed.insert("components".into(), json!(inst.graph.graph().connected_components().len()));
        }
        _ => {
            let (report, fresh) = report_for(&inst.graph, opts, source)?;
            for key in predicted.keys() {
                let value = match (t, key.as_str()) {
                    (TheoremId::EquivUpperInterval, k) => equiv_value(k, p, &report, &mut o)?,
                    (_, k) => from_report(k, &report).ok_or_else(|| Error::InvalidParams(format!("no value for {k}")))?,
                };
                if value == json!("timeout") {
                    o.timed_out = true;
                }
                o.computed.insert(key.clone(), value);
            }
            o.disagreement = report.sr.get(&2).is_some_and(|by_k| by_k.values().any(|&v| v != report.s2));
            o.violations = report.hierarchy_violations();
            o.report = Some(report);
            o.fresh = fresh;
        }
    }
    o.predicted = predicted;
    Ok(o)
}

fn p_cubic_a(p: &FamilyParams) -> usize {
    match *p {
        FamilyParams::Cubic { a, .. } => a,
        _ => 0,
    }
}

fn davis_domke_target(p: &FamilyParams) -> Result<(usize, usize, [usize; 2])> {
    match *p {
        FamilyParams::Cubic { two_n, a } => Ok(davis_domke(two_n, a)),
        _ => Err(Error::InvalidParams(format!("{p} is not cubic"))),
    }
}

fn equiv_value(key: &str, p: &FamilyParams, report: &ClassificationReport, o: &mut Outcome) -> Result<Value> {
    let FamilyParams::UpperInterval { n, d } = *p else { unreachable!() };
    Ok(match key {
        "i_s2" => json!(report.s2),
        "ii_buchsbaum" => uniform(report.buchsbaum.values().copied()),
        "iii_well_covered" => json!(report.well_covered),
        "iv_closed_form" => json!(n > 3 * d || n == 2 * d + 2),
        "v_strongly_connected_shellable_links" => {
            let items = equivalence_items(n, d)?;
            o.extra.push(("vi_violating_faces", items.vi_violations as i64));
            o.extra.push(("vi_strict_violating_faces", items.vi_strict_violations as i64));
            let strict_ok = items.vi_strict_violations == 0;
            o.extra.push(("vi_strict_verdict_differs", i64::from(strict_ok != items.vi)));
            o.extra.push(("vi_strict_verdict_differs_from_iv", i64::from(strict_ok != (n > 3 * d || n == 2 * d + 2))));
            o.computed.insert("vi_strongly_connected_links".into(), json!(items.vi));
            json!(items.v)
        }
        "vi_strongly_connected_links" => return Ok(o.computed["vi_strongly_connected_links"].clone()),
        _ => return Err(Error::InvalidParams(format!("no value for {key}"))),
    })
}

/// Pair instances: complexes or graphs, given by name and by value.
enum Pair {
    Complexes(CorpusEntry, CorpusEntry),
    Graphs(CirculantGraph, CirculantGraph),
}

fn pair_instances(t: TheoremId, max_n: usize, cfg: &SweepConfig) -> Result<Vec<Pair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(match t {
        TheoremId::JoinS2 => {
            let pool: Vec<CorpusEntry> = corpus()
                .into_iter()
                .filter(|e| e.complex.n_vertices() <= max_n && e.complex.facets().len() <= 40)
                .collect();
            (0..cfg.samples)
                .map(|_| {
                    let a = pool.choose(&mut rng).expect("nonempty corpus").clone();
                    let b = pool.choose(&mut rng).expect("nonempty corpus").clone();
                    Pair::Complexes(a, b)
                })
                .collect()
        }
        TheoremId::DisjointUnionS2 => {
            let pool = circulant_corpus(max_n);
            (0..cfg.samples)
                .map(|_| {
                    let a = pool.choose(&mut rng).expect("nonempty corpus").clone();
                    let b = pool.choose(&mut rng).expect("nonempty corpus").clone();
                    Pair::Graphs(a, b)
                })
                .collect()
        }
        TheoremId::UnionNotBuchsbaum => {
            let chars = &cfg.classify.chars;
            let mut pool = Vec::new();
            for g in circulant_corpus(max_n) {
                let delta = SimplicialComplex::independence_complex(g.graph());
                let scan = reisner_scan(&delta, chars, None, false)?;
                let hyp = scan.buchsbaum.iter().zip(&scan.cohen_macaulay).any(|(b, c)| b.holds && !c.holds);
                if hyp && g.graph().is_connected() {
                    pool.push(g);
                }
            }
            let mut out = Vec::new();
            for (i, a) in pool.iter().enumerate() {
                for b in &pool[i..] {
                    if a.n() + b.n() <= 2 * max_n {
                        out.push(Pair::Graphs(a.clone(), b.clone()));
                    }
                }
            }
            out
        }
        _ => Vec::new(),
    })
}

fn facts(delta: &SimplicialComplex, chars: &[FieldSpec]) -> Result<PairFacts> {
    let scan = reisner_scan(delta, chars, None, false)?;
    let by_char = chars
        .iter()
        .enumerate()
        .map(|(j, k)| (k.characteristic(), (scan.buchsbaum[j].holds, scan.cohen_macaulay[j].holds)))
        .collect();
    Ok(PairFacts { s2: is_s2(delta)?.holds, by_char })
}

fn evaluate_pair(t: TheoremId, pair: &Pair, opts: &ClassifyOptions) -> Result<Outcome> {
    let (left, right, joined, params) = match pair {
        Pair::Complexes(a, b) => {
            let j = a.complex.disjoint_join(&b.complex)?;
            (a.complex.clone(), b.complex.clone(), j, json!({ "left": a.name, "right": b.name }))
        }
        Pair::Graphs(a, b) => {
            let union = a.graph().disjoint_union(b.graph())?;
            (
                SimplicialComplex::independence_complex(a.graph()),
                SimplicialComplex::independence_complex(b.graph()),
                SimplicialComplex::independence_complex(&union),
                json!({ "left": a.to_string(), "right": b.to_string() }),
            )
        }
    };
    let mut o = Outcome { params, ..Outcome::default() };
    let s2_only = t != TheoremId::UnionNotBuchsbaum;
    let chars: &[FieldSpec] = if s2_only { &[] } else { &opts.chars };
    let (lf, rf) = (facts(&left, chars)?, facts(&right, chars)?);
    o.predicted = predict_pair(t, &lf, &rf)?;
    if s2_only {
        o.computed.insert("s2".into(), json!(is_s2(&joined)?.holds));
    } else {
        let scan = reisner_scan(&joined, chars, None, false)?;
        for (j, k) in chars.iter().enumerate() {
            let key = format!("buchsbaum_char_{}", k.characteristic());
            if o.predicted.contains_key(&key) {
                o.computed.insert(key, json!(scan.buchsbaum[j].holds));
            }
        }
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        assert_eq!(TheoremId::ALL.len(), 19);
        for &t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()).unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), json!(t.name()));
        }
        assert_eq!(TheoremId::parse("S2_PowerOfCycle").unwrap(), TheoremId::S2PowerOfCycle);
        assert!(matches!(TheoremId::parse("nope"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn instance_counts() {
        assert_eq!(instances(TheoremId::S2PowerOfCycle, 26).len(), 169);
        assert_eq!(instances(TheoremId::S2Cycles, 12).len(), 10);
        assert_eq!(instances(TheoremId::S2NotBuchsFamilies, 24).len(), 4);
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SweepConfig { max_n: Some(12), samples: 20, ..SweepConfig::default() };
        for t in [TheoremId::S2Cycles, TheoremId::S2PowerOfCycle, TheoremId::DavisDomke, TheoremId::S2OnePaired] {
            let r = verify_theorem(t, &cfg).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn result_json_omits_runtime() {
        let cfg = SweepConfig { max_n: Some(7), ..SweepConfig::default() };
        let r = verify_theorem(TheoremId::S2Cycles, &cfg).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("runtime_ms").is_none());
        assert_eq!(v["theorem"], json!("s2-cycles"));
    }
}
