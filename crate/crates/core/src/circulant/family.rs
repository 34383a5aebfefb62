use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CirculantGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PowerOfCycle,
    UpperInterval,
    OmitOne,
    OnePaired,
    Cubic,
    PlainCycle,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::PowerOfCycle => "power-of-cycle",
            Family::UpperInterval => "upper-interval",
            Family::OmitOne => "omit-one",
            Family::OnePaired => "one-paired",
            Family::Cubic => "cubic",
            Family::PlainCycle => "cycle",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s {
            "power-of-cycle" => Family::PowerOfCycle,
            "upper-interval" => Family::UpperInterval,
            "omit-one" => Family::OmitOne,
            "one-paired" => Family::OnePaired,
            "cubic" => Family::Cubic,
            "cycle" | "plain-cycle" => Family::PlainCycle,
            other => return Err(Error::InvalidParams(format!("unknown family `{other}`"))),
        })
    }
}

/// Parameters of one member of a named family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    /// `C_n(1, ..., d)`.
    PowerOfCycle { n: usize, d: usize },
    /// `C_n(d+1, ..., ⌊n/2⌋)`.
    UpperInterval { n: usize, d: usize },
    /// `C_n(1, ..., ⌊n/2⌋)` with `i` removed.
    OmitOne { n: usize, i: usize },
    /// One-paired `C(n; a, b)`: multiples of `a` that are not multiples of `ab`.
    OnePaired { n: usize, a: usize, b: usize },
    /// Cubic `C_{2n}(a, n)`.
    Cubic { two_n: usize, a: usize },
    /// The cycle `C_n = C_n(1)`.
    PlainCycle { n: usize },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::PowerOfCycle { .. } => Family::PowerOfCycle,
            FamilyParams::UpperInterval { .. } => Family::UpperInterval,
            FamilyParams::OmitOne { .. } => Family::OmitOne,
            FamilyParams::OnePaired { .. } => Family::OnePaired,
            FamilyParams::Cubic { .. } => Family::Cubic,
            FamilyParams::PlainCycle { .. } => Family::PlainCycle,
        }
    }

    /// Vertex count of the graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilyParams::PowerOfCycle { n, .. }
            | FamilyParams::UpperInterval { n, .. }
            | FamilyParams::OmitOne { n, .. }
            | FamilyParams::OnePaired { n, .. }
            | FamilyParams::PlainCycle { n } => n,
            FamilyParams::Cubic { two_n, .. } => two_n,
        }
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        match *self {
            FamilyParams::PowerOfCycle { n, d } => power_of_cycle(n, d),
            FamilyParams::UpperInterval { n, d } => upper_interval(n, d),
            FamilyParams::OmitOne { n, i } => omit_one(n, i),
            FamilyParams::OnePaired { n, a, b } => one_paired(n, a, b),
            FamilyParams::Cubic { two_n, a } => cubic(two_n, a),
            FamilyParams::PlainCycle { n } => plain_cycle(n),
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::PowerOfCycle { n, d } => write!(f, "power-of-cycle(n={n},d={d})"),
            FamilyParams::UpperInterval { n, d } => write!(f, "upper-interval(n={n},d={d})"),
            FamilyParams::OmitOne { n, i } => write!(f, "omit-one(n={n},i={i})"),
            FamilyParams::OnePaired { n, a, b } => write!(f, "one-paired(n={n},a={a},b={b})"),
            FamilyParams::Cubic { two_n, a } => write!(f, "cubic(2n={two_n},a={a})"),
            FamilyParams::PlainCycle { n } => write!(f, "cycle(n={n})"),
        }
    }
}

/// A family member together with its graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub params: FamilyParams,
    pub graph: CirculantGraph,
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

pub fn power_of_cycle(n: usize, d: usize) -> Result<FamilyInstance> {
    if d < 1 || n < 2 * d {
        return Err(invalid(format!("power of cycle needs n >= 2d >= 2, got n={n}, d={d}")));
    }
    Ok(FamilyInstance {
        params: FamilyParams::PowerOfCycle { n, d },
        graph: CirculantGraph::new(n, 1..=d)?,
    })
}

pub fn upper_interval(n: usize, d: usize) -> Result<FamilyInstance> {
    if d < 1 || n < 2 * d + 2 {
        return Err(invalid(format!("upper interval needs n >= 2d+2, d >= 1, got n={n}, d={d}")));
    }
    Ok(FamilyInstance {
        params: FamilyParams::UpperInterval { n, d },
        graph: CirculantGraph::new(n, d + 1..=n / 2)?,
    })
}

pub fn omit_one(n: usize, i: usize) -> Result<FamilyInstance> {
    if n < 3 || i < 1 || i > n / 2 {
        return Err(invalid(format!("omit-one needs n >= 3, 1 <= i <= n/2, got n={n}, i={i}")));
    }
    Ok(FamilyInstance {
        params: FamilyParams::OmitOne { n, i },
        graph: CirculantGraph::new(n, (1..=n / 2).filter(|&s| s != i))?,
    })
}

pub fn one_paired(n: usize, a: usize, b: usize) -> Result<FamilyInstance> {
    if a < 1 || b < 2 || n == 0 || !n.is_multiple_of(a * b) {
        return Err(invalid(format!(
            "one-paired needs a >= 1, b >= 2, ab | n, got n={n}, a={a}, b={b}"
        )));
    }
    let gens = (1..=n / 2).filter(|&s| s % a == 0 && s % (a * b) != 0);
    Ok(FamilyInstance {
        params: FamilyParams::OnePaired { n, a, b },
        graph: CirculantGraph::new(n, gens)?,
    })
}

pub fn cubic(two_n: usize, a: usize) -> Result<FamilyInstance> {
    if two_n.is_odd() || a < 1 || a >= two_n / 2 {
        return Err(invalid(format!("cubic needs even 2n and 1 <= a < n, got 2n={two_n}, a={a}")));
    }
    Ok(FamilyInstance {
        params: FamilyParams::Cubic { two_n, a },
        graph: CirculantGraph::new(two_n, [a, two_n / 2])?,
    })
}

pub fn plain_cycle(n: usize) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(FamilyInstance {
        params: FamilyParams::PlainCycle { n },
        graph: CirculantGraph::new(n, [1])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(inst: FamilyInstance) -> Vec<usize> {
        inst.graph.gens().to_vec()
    }

    #[test]
    fn power_of_cycle_examples() {
        assert_eq!(gens(power_of_cycle(7, 1).unwrap()), vec![1]);
        assert_eq!(gens(power_of_cycle(11, 2).unwrap()), vec![1, 2]);
        assert_eq!(gens(power_of_cycle(8, 3).unwrap()), vec![1, 2, 3]);
        assert!(power_of_cycle(5, 3).is_err());
        assert!(power_of_cycle(5, 0).is_err());
    }

    #[test]
    fn upper_interval_examples() {
        let m = upper_interval(8, 3).unwrap();
        assert_eq!(m.graph.gens(), &[4]);
        assert_eq!(m.graph.graph().edge_count(), 4);
        assert_eq!(gens(upper_interval(10, 3).unwrap()), vec![4, 5]);
        assert_eq!(gens(upper_interval(7, 2).unwrap()), vec![3]);
        assert!(upper_interval(7, 3).is_err());
    }

    #[test]
    fn omit_one_examples() {
        assert_eq!(gens(omit_one(9, 3).unwrap()), vec![1, 2, 4]);
        assert_eq!(gens(omit_one(8, 3).unwrap()), vec![1, 2, 4]);
        assert_eq!(gens(omit_one(10, 2).unwrap()), vec![1, 3, 4, 5]);
        assert!(omit_one(10, 6).is_err());
        assert!(omit_one(10, 0).is_err());
    }

    #[test]
    fn one_paired_examples() {
        assert_eq!(gens(one_paired(12, 2, 3).unwrap()), vec![2, 4]);
        assert_eq!(gens(one_paired(6, 1, 3).unwrap()), vec![1, 2]);
        assert_eq!(gens(one_paired(4, 2, 2).unwrap()), vec![2]);
        assert!(one_paired(10, 2, 3).is_err());
        assert!(one_paired(10, 5, 1).is_err());
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(gens(cubic(8, 1).unwrap()), vec![1, 4]);
        assert_eq!(gens(cubic(16, 2).unwrap()), vec![2, 8]);
        assert_eq!(gens(cubic(6, 1).unwrap()), vec![1, 3]);
        assert!(cubic(7, 1).is_err());
        assert!(cubic(8, 4).is_err());
        let g = cubic(10, 2).unwrap().graph;
        assert!((0..10).all(|v| g.graph().degree(v) == 3));
    }

    #[test]
    fn params_serialise_with_family_tag() {
        let p = FamilyParams::OnePaired { n: 12, a: 2, b: 3 };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"family":"one-paired","n":12,"a":2,"b":3}"#);
        assert_eq!(serde_json::from_str::<FamilyParams>(&s).unwrap(), p);
    }
}
