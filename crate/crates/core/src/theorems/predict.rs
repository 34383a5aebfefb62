//! Closed-form predictions. Nothing here touches complexes or homology.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::circulant::FamilyParams;
use crate::error::{Error, Result};

use super::TheoremId;

/// Property name to predicted value.
pub type Prediction = BTreeMap<String, Value>;

/// Facts about one side of a pair, consumed by the pair theorems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFacts {
    pub s2: bool,
    /// Characteristic to `(buchsbaum, cohen_macaulay)`.
    pub by_char: BTreeMap<u32, (bool, bool)>,
}

fn out_of_domain(t: TheoremId, p: &FamilyParams) -> Error {
    Error::InvalidParams(format!("{p} is outside the domain of {}", t.name()))
}

fn pred<const N: usize>(entries: [(&str, Value); N]) -> Prediction {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `t = gcd(a, 2n)` and the components `copies × C_m(g1, g2)`.
pub fn davis_domke(two_n: usize, a: usize) -> (usize, usize, [usize; 2]) {
    let n = two_n / 2;
    let t = a.gcd(&two_n);
    let m = two_n / t;
    if m.is_multiple_of(2) {
        (t, m, [1, n / t])
    } else {
        (t / 2, 2 * m, [2, m])
    }
}

fn cubic_connected_well_covered(two_n: usize, a: usize) -> bool {
    let t = a.gcd(&two_n);
    (t == 1 && [4, 6, 8].contains(&two_n)) || (t == 2 && [6, 10].contains(&two_n))
}

pub fn predict(t: TheoremId, p: &FamilyParams) -> Result<Prediction> {
    use FamilyParams as F;
    use TheoremId as T;
    let bad = || out_of_domain(t, p);
    Ok(match (t, *p) {
        (T::WcPowerOfCycle, F::PowerOfCycle { n, d }) if d >= 1 && n >= 2 * d => {
            pred([("well_covered", json!(n <= 3 * d + 2 || n == 4 * d + 3))])
        }
        (T::S2PowerOfCycle, F::PowerOfCycle { n, d }) if d >= 1 && n >= 2 * d => {
            pred([("s2", json!((n <= 3 * d + 2 && n != 2 * d + 2) || n == 4 * d + 3))])
        }
        (T::S2Cycles, F::PlainCycle { n }) if n >= 3 => {
            pred([("s2", json!([3, 5, 7].contains(&n))), ("cohen_macaulay", json!([3, 5].contains(&n)))])
        }
        (T::BuchsNotS2PowerOfCycle, F::PowerOfCycle { n, d }) if d >= 1 && n >= 2 * d => {
            let cm = n <= 3 * d + 2 && n != 2 * d + 2;
            pred([
                ("buchsbaum_not_s2", json!(n == 2 * d + 2)),
                ("buchsbaum_not_cm", json!(n == 2 * d + 2 || n == 4 * d + 3)),
                ("cohen_macaulay", json!(cm)),
                ("shellable", json!(cm)),
                ("vertex_decomposable", json!(cm)),
            ])
        }
        (T::WcUpperInterval, F::UpperInterval { n, d }) if d >= 1 && n >= 2 * d + 2 => {
            let b = n > 3 * d || n == 2 * d + 2;
            pred([("well_covered", json!(b)), ("buchsbaum", json!(b))])
        }
        (T::CmUpperInterval, F::UpperInterval { n, d }) if d >= 1 && n >= 2 * d + 2 => {
            let b = n == 2 * d + 2 || (d == 1 && n >= 3);
            pred([("cohen_macaulay", json!(b)), ("shellable", json!(b)), ("vertex_decomposable", json!(b))])
        }
        (T::S2UpperInterval, F::UpperInterval { n, d }) if d >= 1 && n >= 2 * d + 2 => {
            pred([("s2", json!(n > 3 * d || n == 2 * d + 2))])
        }
        (T::EquivUpperInterval, F::UpperInterval { n, d }) if d >= 1 && n >= 2 * d + 2 => {
            let b = json!(n > 3 * d || n == 2 * d + 2);
            pred([
                ("i_s2", b.clone()),
                ("ii_buchsbaum", b.clone()),
                ("iii_well_covered", b.clone()),
                ("iv_closed_form", b.clone()),
                ("v_strongly_connected_shellable_links", b.clone()),
                ("vi_strongly_connected_links", b),
            ])
        }
        (T::S2OmitOne, F::OmitOne { n, i }) if n >= 3 && i >= 1 && i <= n / 2 => {
            let coprime = i.gcd(&n) == 1;
            pred([
                ("s2", json!(coprime)),
                ("cohen_macaulay", json!(coprime)),
                ("dim", json!(if 3 * i == n { 2 } else { 1 })),
            ])
        }
        (T::StructureOnePaired, F::OnePaired { n, a, b }) if valid_one_paired(n, a, b) => {
            pred([("structure", json!(true)), ("pure", json!(true)), ("components", json!(a))])
        }
        (T::S2OnePaired, F::OnePaired { n, a, b }) if valid_one_paired(n, a, b) => {
            let v = json!(n == a * b);
            pred([
                ("s2", v.clone()),
                ("cohen_macaulay", v.clone()),
                ("shellable", v.clone()),
                ("vertex_decomposable", v),
            ])
        }
        (T::BuchsNotCmOnePaired, F::OnePaired { n, a, b }) if valid_one_paired(n, a, b) => pred([
            ("buchsbaum_not_cm", json!(a == 1 && a * b < n)),
            ("pure_not_buchsbaum", json!(a > 1 && a * b < n)),
        ]),
        (T::S2CubicConnected, F::Cubic { two_n, a }) if valid_cubic(two_n, a) && a.gcd(&(two_n / 2)) == 1 => {
            let wc = cubic_connected_well_covered(two_n, a);
            pred([
                ("well_covered", json!(wc)),
                ("s2", json!(wc && !(two_n == 6 && a == 1))),
                ("buchsbaum", json!(wc)),
                ("cohen_macaulay", json!(two_n == 4 || (two_n == 6 && a == 2))),
            ])
        }
        (T::DavisDomke, F::Cubic { two_n, a }) if valid_cubic(two_n, a) => {
            let (copies, m, [g1, g2]) = davis_domke(two_n, a);
            pred([("components", json!(copies)), ("component", json!(format!("C_{m}({g1},{g2})")))])
        }
        (T::S2Cubic, F::Cubic { two_n, a }) if valid_cubic(two_n, a) => {
            let ratio = two_n / a.gcd(&two_n);
            pred([("s2", json!([3, 4, 5, 8].contains(&ratio)))])
        }
        (T::S2NotBuchsFamilies, F::Cubic { two_n, a }) if in_s2_not_buchs_family(two_n, a) => {
            pred([("s2", json!(true)), ("buchsbaum", json!(false))])
        }
        _ => return Err(bad()),
    })
}

/// Predictions for the theorems about two graphs or complexes.
pub fn predict_pair(t: TheoremId, left: &PairFacts, right: &PairFacts) -> Result<Prediction> {
    match t {
        TheoremId::JoinS2 | TheoremId::DisjointUnionS2 => Ok(pred([("s2", json!(left.s2 && right.s2))])),
        TheoremId::UnionNotBuchsbaum => {
            let mut out = Prediction::new();
            for (k, &(lb, lcm)) in &left.by_char {
                if let Some(&(rb, rcm)) = right.by_char.get(k) {
                    if lb && !lcm && rb && !rcm {
                        out.insert(format!("buchsbaum_char_{k}"), json!(false));
                    }
                }
            }
            if out.is_empty() {
                return Err(Error::InvalidParams(
                    "both graphs must be Buchsbaum but not Cohen-Macaulay over a common field".into(),
                ));
            }
            Ok(out)
        }
        _ => Err(Error::InvalidParams(format!("{} is not a pair theorem", t.name()))),
    }
}

fn valid_one_paired(n: usize, a: usize, b: usize) -> bool {
    a >= 1 && b >= 2 && n.is_multiple_of(a * b) && n > 0
}

fn valid_cubic(two_n: usize, a: usize) -> bool {
    two_n.is_multiple_of(2) && a >= 1 && a < two_n / 2
}

pub fn in_s2_not_buchs_family(two_n: usize, a: usize) -> bool {
    (2..=two_n).any(|t| (two_n == 8 * t && a == t) || (two_n == 10 * t && (a == 2 * t || a == 4 * t)))
}
