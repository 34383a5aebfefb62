//! Deciders for the properties between well-covered and vertex decomposable.
//!
//! Every negative answer carries a [`Witness`] that can be re-validated
//! against the complex with [`Witness::recheck`].

mod cm;
mod serre;
mod shelling;
mod vd;
mod witness;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::circulant::{CirculantGraph, Graph};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

pub use cm::{is_buchsbaum, is_cohen_macaulay, is_cohen_macaulay_all_fields, reisner_scan, ReisnerScan};
pub use serre::{is_s2, is_sr_terai, s2_orbit_scan, terai_scan, SerreLevel};
pub use shelling::{check_shelling, is_shellable, is_shellable_with, ShellOptions, ShellOutcome, DEFAULT_BUDGET};
pub use vd::{is_shedding_vertex, is_vertex_decomposable, is_vertex_decomposable_with};
pub use witness::{NoShellingReason, Witness};

/// A yes/no answer with its certificate when the answer is no.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub const HOLDS: Verdict = Verdict { holds: true, witness: None };

    pub fn fail(witness: Witness) -> Verdict {
        Verdict { holds: false, witness: Some(witness) }
    }
}

/// Outcome of a budgeted search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    True,
    False,
    Timeout,
}

impl Decision {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::True => Some(true),
            Decision::False => Some(false),
            Decision::Timeout => None,
        }
    }
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }
}

impl Serialize for Decision {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_bool() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("timeout"),
        }
    }
}

impl<'de> Deserialize<'de> for Decision {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(b) => Ok(b.into()),
            Raw::Str(s) if s == "timeout" => Ok(Decision::Timeout),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("unknown decision `{s}`"))),
        }
    }
}

/// Well-covered exactly when the independence complex is pure.
pub fn is_well_covered(g: &Graph) -> Verdict {
    match SimplicialComplex::independence_complex(g).impure_pair() {
        Some((smaller, larger)) => Verdict::fail(Witness::ImpureFacetPair { smaller, larger }),
        None => Verdict::HOLDS,
    }
}

/// What a report describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Subject {
    Circulant(CirculantGraph),
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Subject {
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            Subject::Circulant(c) => SimplicialComplex::independence_complex(c.graph()),
            Subject::Graph(g) => SimplicialComplex::independence_complex(g),
            Subject::Complex(d) => d.clone(),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Subject::Circulant(c) => Some(c.graph()),
            Subject::Graph(g) => Some(g),
            Subject::Complex(_) => None,
        }
    }

    /// The rotation order under which the complex is invariant, if known.
    fn rotation(&self, delta: &SimplicialComplex) -> Option<usize> {
        match self {
            Subject::Circulant(c) => Some(c.n()),
            Subject::Graph(_) => None,
            Subject::Complex(d) => Some(d.n_vertices()).filter(|&n| n > 1 && delta.rotation_invariant(n)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ClassifyOptions {
    pub chars: Vec<FieldSpec>,
    pub serre_levels: Vec<SerreLevel>,
    pub budget: u64,
    /// Scan one face per rotation orbit when the complex allows it.
    pub symmetry: bool,
    /// Decide joins factor by factor.
    pub factorize: bool,
    /// Answer shellability and vertex decomposability negatively as soon as
    /// Cohen–Macaulayness fails.
    pub cm_obstruction: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            chars: [0, 2, 3, 5].map(|k| FieldSpec::new(k).expect("valid")).to_vec(),
            serre_levels: [2, 3].map(|r| SerreLevel::new(r).expect("valid")).to_vec(),
            budget: DEFAULT_BUDGET,
            symmetry: true,
            factorize: true,
            cm_obstruction: true,
        }
    }
}

impl ClassifyOptions {
    /// Every decider runs its full search: no symmetry, no factorization,
    /// no shortcuts between properties.
    pub fn raw() -> Self {
        ClassifyOptions { symmetry: false, factorize: false, cm_obstruction: false, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub by_char: BTreeMap<u32, bool>,
    pub all_fields: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub subject: Subject,
    pub vertices: usize,
    pub facets: usize,
    pub dim: isize,
    pub well_covered: bool,
    pub pure: bool,
    pub s2: bool,
    /// Level, then characteristic.
    pub sr: BTreeMap<u32, BTreeMap<u32, bool>>,
    pub cohen_macaulay: CmReport,
    pub buchsbaum: BTreeMap<u32, bool>,
    pub shellable: Decision,
    pub vertex_decomposable: Decision,
    pub strongly_connected: bool,
    pub witnesses: Vec<Witness>,
}

impl ClassificationReport {
    /// Hierarchy implications violated by this report, as readable strings.
    pub fn hierarchy_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let vd = self.vertex_decomposable.as_bool();
        let sh = self.shellable.as_bool();
        if vd == Some(true) && sh == Some(false) {
            out.push("vertex decomposable but not shellable".to_string());
        }
        for (&k, &cm) in &self.cohen_macaulay.by_char {
            if sh == Some(true) && !cm {
                out.push(format!("shellable but not Cohen-Macaulay over char {k}"));
            }
            if cm && !self.buchsbaum.get(&k).copied().unwrap_or(true) {
                out.push(format!("Cohen-Macaulay but not Buchsbaum over char {k}"));
            }
            for (r, by_k) in &self.sr {
                if cm && !by_k.get(&k).copied().unwrap_or(true) {
                    out.push(format!("Cohen-Macaulay but not S_{r} over char {k}"));
                }
            }
        }
        if self.cohen_macaulay.all_fields && self.cohen_macaulay.by_char.values().any(|c| !c) {
            out.push("Cohen-Macaulay over all fields but not over a sampled one".to_string());
        }
        if self.s2 && !self.well_covered {
            out.push("S2 but not well-covered".to_string());
        }
        out
    }
}

/// Classifies `subject` under `opts`.
pub fn classify(subject: Subject, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let delta = subject.complex();
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let rotation = subject.rotation(&delta).filter(|_| opts.symmetry);
    let pure = delta.is_pure();
    let mut witnesses = Vec::new();
    let mut note = |v: &Verdict| {
        if let Some(w) = &v.witness {
            if !witnesses.contains(w) {
                witnesses.push(w.clone());
            }
        }
    };

    let s2 = match rotation {
        Some(n) => s2_orbit_scan(&delta, n)?,
        None => is_s2(&delta)?,
    };
    note(&s2);

    let mut sr = BTreeMap::new();
    for &r in &opts.serre_levels {
        let verdicts = terai_scan(&delta, r, &opts.chars, rotation)?;
        for v in &verdicts {
            note(v);
        }
        let by_k = opts.chars.iter().zip(&verdicts).map(|(k, v)| (k.characteristic(), v.holds)).collect();
        sr.insert(r.r(), by_k);
    }

    let reisner = reisner_scan(&delta, &opts.chars, rotation, opts.factorize)?;
    for v in reisner.cohen_macaulay.iter().chain(&reisner.buchsbaum) {
        note(v);
    }
    note(&reisner.cohen_macaulay_all_fields);
    let by_char = |vs: &[Verdict]| -> BTreeMap<u32, bool> {
        opts.chars.iter().zip(vs).map(|(k, v)| (k.characteristic(), v.holds)).collect()
    };

    let obstruction = reisner
        .cohen_macaulay
        .iter()
        .chain(std::iter::once(&reisner.cohen_macaulay_all_fields))
        .find_map(|v| match &v.witness {
            Some(Witness::NonvanishingLinkHomology { face, dimension, characteristic, .. }) if opts.cm_obstruction => {
                Some(NoShellingReason::CmObstruction {
                    face: *face,
                    dimension: *dimension,
                    characteristic: *characteristic,
                })
            }
            _ => None,
        });

    let shell_opts = ShellOptions { budget: opts.budget, factorize: opts.factorize, rotation };
    let shell = match (&obstruction, pure) {
        (_, false) => ShellOutcome::NotShellable(NoShellingReason::NonPure),
        (Some(reason), true) => ShellOutcome::NotShellable(reason.clone()),
        (None, true) => is_shellable_with(&delta, &shell_opts)?,
    };
    let shellable = match shell {
        ShellOutcome::Shellable(order) => {
            witnesses.push(Witness::ShellingOrder { order });
            Decision::True
        }
        ShellOutcome::NotShellable(reason) => {
            witnesses.push(Witness::NoShellingExists { reason });
            Decision::False
        }
        ShellOutcome::Timeout { .. } => Decision::Timeout,
    };

    let vertex_decomposable = if !pure || obstruction.is_some() {
        Decision::False
    } else if opts.factorize {
        is_vertex_decomposable_with(&delta, opts.budget, rotation)?
    } else {
        is_vertex_decomposable(&delta, opts.budget)?
    };

    Ok(ClassificationReport {
        vertices: delta.n_vertices(),
        facets: delta.facets().len(),
        dim: delta.dim()?,
        well_covered: pure,
        pure,
        s2: s2.holds,
        sr,
        cohen_macaulay: CmReport {
            by_char: by_char(&reisner.cohen_macaulay),
            all_fields: reisner.cohen_macaulay_all_fields.holds,
        },
        buchsbaum: by_char(&reisner.buchsbaum),
        shellable,
        vertex_decomposable,
        strongly_connected: pure && delta.is_strongly_connected()?,
        witnesses,
        subject,
    })
}

pub fn classify_circulant(g: &CirculantGraph, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    classify(Subject::Circulant(g.clone()), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantGraph;

    fn c(n: usize, gens: &[usize]) -> CirculantGraph {
        CirculantGraph::new(n, gens.iter().copied()).unwrap()
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(c(11, &[1, 2]).graph()).holds);
        assert!(is_well_covered(c(8, &[4]).graph()).holds);
        let g = c(9, &[1, 2]);
        let v = is_well_covered(g.graph());
        assert!(!v.holds);
        let d = SimplicialComplex::independence_complex(g.graph());
        assert!(v.witness.unwrap().recheck(&d, Some(g.graph())).unwrap());
    }

    #[test]
    fn decision_json() {
        assert_eq!(serde_json::to_string(&Decision::True).unwrap(), "true");
        assert_eq!(serde_json::to_string(&Decision::Timeout).unwrap(), "\"timeout\"");
        assert_eq!(serde_json::from_str::<Decision>("false").unwrap(), Decision::False);
        assert_eq!(serde_json::from_str::<Decision>("\"timeout\"").unwrap(), Decision::Timeout);
        assert!(serde_json::from_str::<Decision>("\"maybe\"").is_err());
    }

    #[test]
    fn report_for_c8_1_4() {
        let r = classify_circulant(&c(8, &[1, 4]), &ClassifyOptions::default()).unwrap();
        assert!(r.well_covered && r.s2);
        assert!(r.buchsbaum.values().all(|&b| b));
        assert!(r.hierarchy_violations().is_empty());
        let d = r.subject.complex();
        for w in &r.witnesses {
            assert!(w.recheck(&d, r.subject.graph()).unwrap(), "{w:?}");
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = classify_circulant(&c(6, &[2, 3]), &ClassifyOptions::default()).unwrap();
        assert_eq!(r.shellable, Decision::True);
        assert_eq!(r.vertex_decomposable, Decision::True);
        let json = serde_json::to_string(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["subject"]["gens"], serde_json::json!([2, 3]));
        assert_eq!(v["cohen_macaulay"]["by_char"]["2"], serde_json::json!(true));
    }

    #[test]
    fn raw_and_default_reports_agree() {
        for (n, gens) in [(7, vec![1]), (10, vec![2, 5]), (8, vec![1, 2, 3]), (9, vec![1, 2, 3, 4]), (12, vec![4, 6])] {
            let g = c(n, &gens);
            let mut a = classify_circulant(&g, &ClassifyOptions::default()).unwrap();
            let mut b = classify_circulant(&g, &ClassifyOptions::raw()).unwrap();
            a.witnesses.clear();
            b.witnesses.clear();
            assert_eq!(a, b, "C{n}{gens:?}");
            assert!(b.hierarchy_violations().is_empty());
        }
    }

    #[test]
    fn complex_subject_round_trip() {
        let d = SimplicialComplex::from_vertex_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let r = classify(Subject::Complex(d.clone()), &ClassifyOptions::default()).unwrap();
        assert!(!r.s2 && r.well_covered);
        assert_eq!(r.shellable, Decision::False);
        let back: ClassificationReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back.subject, Subject::Complex(d));
    }
}
