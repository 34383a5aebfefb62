//! Circulant graphs `C_n(S)` and the parameterised families studied here.
//!
//! Vertices are `0..n` and all arithmetic is modulo `n`. `i ~ j` exactly
//! when the cyclic distance between them is a generator.

mod family;
mod graph;
mod isomorphism;

pub use family::{
    cubic, omit_one, one_paired, plain_cycle, power_of_cycle, upper_interval, Family,
    FamilyInstance, FamilyParams,
};
pub use graph::{Component, Graph};
pub use isomorphism::{
    graphs_isomorphic, graphs_isomorphic_within, is_isomorphism, ISOMORPHISM_VERTEX_LIMIT,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::MAX_VERTICES;
use crate::error::{Error, Result};

/// The circulant graph `C_n(S)` with `S ⊆ {1, ..., ⌊n/2⌋}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    gens: Vec<usize>,
    graph: Graph,
}

impl CirculantGraph {
    pub fn new(n: usize, gens: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut gens: Vec<usize> = gens.into_iter().collect();
        gens.sort_unstable();
        gens.dedup();
        let max = n / 2;
        if let Some(&s) = gens.iter().find(|&&s| s == 0 || s > max) {
            return Err(Error::GeneratorOutOfRange { s, max });
        }
        let mut graph = Graph::empty(n)?;
        for i in 0..n {
            for &s in &gens {
                let j = (i + s) % n;
                if i != j {
                    graph.add_edge(i, j)?;
                }
            }
        }
        Ok(CirculantGraph { n, gens, graph })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Canonical `{"n":..,"gens":[..]}` serialisation.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("circulant serialisation is infallible")
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}(", self.n)?;
        for (k, s) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct CirculantRepr {
    n: usize,
    gens: Vec<usize>,
}

impl Serialize for CirculantGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CirculantRepr { n: self.n, gens: self.gens.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CirculantGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CirculantRepr::deserialize(deserializer)?;
        CirculantGraph::new(repr.n, repr.gens).map_err(serde::de::Error::custom)
    }
}
