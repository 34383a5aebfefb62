//! Reduced simplicial homology with integer coefficients.
//!
//! The augmented chain complex is used throughout: the empty face spans
//! `C_{-1}` and `∂_0` sends every vertex to it. Betti numbers over a field
//! follow from the integral groups by universal coefficients.

mod snf;

pub use snf::{smith_normal_form, IntMatrix, SmithForm};

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Characteristic of a coefficient field: 0 or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec(u32);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(0);

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec(characteristic))
        } else {
            Err(Error::BadCharacteristic(characteristic))
        }
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;
    fn try_from(c: u32) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u32 {
    fn from(k: FieldSpec) -> u32 {
        k.0
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `H̃_i` as free rank plus invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub i: isize,
    pub rank: u64,
    pub torsion: Vec<u64>,
}

/// Reduced homology in dimensions `-1..=top`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    dims: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn dims(&self) -> &[HomologyGroup] {
        &self.dims
    }

    /// Highest dimension recorded.
    pub fn top(&self) -> isize {
        self.dims.last().map_or(-2, |g| g.i)
    }

    pub fn group(&self, i: isize) -> Option<&HomologyGroup> {
        usize::try_from(i + 1).ok().and_then(|k| self.dims.get(k))
    }

    pub fn free_rank(&self, i: isize) -> u64 {
        self.group(i).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, i: isize) -> &[u64] {
        self.group(i).map_or(&[], |g| &g.torsion)
    }

    /// `dim H̃_i(Δ; k)` by universal coefficients.
    pub fn betti(&self, i: isize, k: FieldSpec) -> u64 {
        let p = k.characteristic() as u64;
        let mut b = self.free_rank(i);
        if p != 0 {
            b += self.torsion(i).iter().filter(|&&t| t % p == 0).count() as u64;
            b += self.torsion(i - 1).iter().filter(|&&t| t % p == 0).count() as u64;
        }
        b
    }

    /// Whether every recorded group is zero.
    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|g| g.rank == 0 && g.torsion.is_empty())
    }
}

/// Faces of each size, with lookup from face to row index.
struct Chains {
    faces: Vec<Vec<VertexSet>>,
}

impl Chains {
    /// Faces with at most `max_size` vertices.
    fn new(delta: &SimplicialComplex, max_size: usize) -> Self {
        let mut faces: Vec<Vec<VertexSet>> = vec![Vec::new(); max_size + 1];
        delta.for_each_face_upto(max_size, |f, _| {
            faces[f.len()].push(f);
            std::ops::ControlFlow::<()>::Continue(())
        });
        Chains { faces }
    }

    fn count(&self, size: usize) -> usize {
        self.faces.get(size).map_or(0, |f| f.len())
    }

    /// Columns of `∂` from faces of `size` vertices to faces of `size - 1`.
    fn boundary_columns(&self, size: usize) -> (usize, Vec<Vec<(usize, i64)>>) {
        if size == 0 || size >= self.faces.len() {
            return (if size == 0 { 0 } else { self.count(size - 1) }, Vec::new());
        }
        let lower = &self.faces[size - 1];
        let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let cols = self.faces[size]
            .iter()
            .map(|&f| {
                let mut col: Vec<(usize, i64)> = f
                    .iter()
                    .enumerate()
                    .map(|(j, v)| (index[&f.without(v)], if j % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        (lower.len(), cols)
    }
}

/// `∂_i : C_i -> C_{i-1}`, rows and columns in lexicographic face order.
pub fn boundary_matrix(delta: &SimplicialComplex, i: isize) -> Result<IntMatrix> {
    let d = delta.dim()?;
    if i < -1 || i > d {
        return Err(Error::DimensionOutOfRange { i, max: d });
    }
    let size = (i + 1) as usize;
    let chains = Chains::new(delta, size);
    let rows = if size == 0 { 0 } else { chains.count(size - 1) };
    let mut m = IntMatrix::zeros(rows, chains.count(size));
    let (_, cols) = chains.boundary_columns(size);
    for (c, col) in cols.iter().enumerate() {
        for &(r, v) in col {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Full reduced homology, dimensions `-1..=dim Δ`.
pub fn reduced_homology(delta: &SimplicialComplex) -> Result<HomologyProfile> {
    let d = delta.dim()?;
    reduced_homology_upto(delta, d)
}

/// Reduced homology in dimensions `-1..=min(max_dim, dim Δ)`.
pub fn reduced_homology_upto(delta: &SimplicialComplex, max_dim: isize) -> Result<HomologyProfile> {
    let d = delta.dim()?;
    let top = max_dim.min(d);
    if top < -1 {
        return Ok(HomologyProfile { dims: Vec::new() });
    }
    // H̃_top needs ∂_{top+1}, i.e. faces with top + 2 vertices.
    let max_size = (top + 2) as usize;
    let chains = Chains::new(delta, max_size);
    let mut ranks = Vec::with_capacity(max_size + 1);
    let mut factors = Vec::with_capacity(max_size + 1);
    for size in 0..=max_size {
        let (rows, cols) = chains.boundary_columns(size);
        let s = snf::smith_sparse(rows, cols);
        ranks.push(s.rank);
        let mut tors = Vec::new();
        for f in s.invariant_factors.iter().filter(|f| **f > 1.into()) {
            tors.push(f.to_u64().ok_or(Error::TorsionOverflow)?);
        }
        factors.push(tors);
    }
    let dims = (-1..=top)
        .map(|i| {
            let size = (i + 1) as usize;
            let rank = chains.count(size) - ranks[size] - ranks[size + 1];
            HomologyGroup { i, rank: rank as u64, torsion: factors[size + 1].clone() }
        })
        .collect();
    Ok(HomologyProfile { dims })
}

/// `dim H̃_i(Δ; k)`.
pub fn betti(delta: &SimplicialComplex, i: isize, k: FieldSpec) -> Result<u64> {
    let d = delta.dim()?;
    if i < -1 || i > d {
        return Err(Error::DimensionOutOfRange { i, max: d });
    }
    Ok(reduced_homology_upto(delta, i)?.betti(i, k))
}
