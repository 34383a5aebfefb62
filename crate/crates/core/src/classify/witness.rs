use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::circulant::Graph;
use crate::complex::{is_connected_facets, SimplicialComplex};
use crate::error::Result;
use crate::homology::{reduced_homology_upto, FieldSpec};

use super::shelling::{check_shelling, ShellSearch};

/// A certificate for one decided property, checkable against the complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// A face whose link has dimension at least one and a disconnected 1-skeleton.
    DisconnectedLinkFace { face: VertexSet },
    /// Two facets of different sizes.
    ImpureFacetPair { smaller: VertexSet, larger: VertexSet },
    /// `H̃_dimension(link(face); k) ≠ 0` below the level the property requires.
    NonvanishingLinkHomology {
        face: VertexSet,
        dimension: isize,
        characteristic: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        serre_level: Option<u32>,
    },
    /// Facet indices, into the canonical facet list, in shelling order.
    ShellingOrder { order: Vec<usize> },
    NoShellingExists { reason: NoShellingReason },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum NoShellingReason {
    /// The complex is not pure.
    NonPure,
    /// `h_index < 0`.
    HVectorNegative { index: usize, value: i64 },
    /// A link with homology below its dimension, so not Cohen–Macaulay.
    CmObstruction { face: VertexSet, dimension: isize, characteristic: u32 },
    /// The full search tree was explored.
    Exhaustive { nodes: u64 },
    /// The complex is a join and the factor on `block` has no shelling.
    InJoinFactor { block: VertexSet, reason: Box<NoShellingReason> },
}

impl Witness {
    /// Re-validates the certificate against `delta`, and against `graph`
    /// when the complex is its independence complex.
    pub fn recheck(&self, delta: &SimplicialComplex, graph: Option<&Graph>) -> Result<bool> {
        Ok(match self {
            Witness::DisconnectedLinkFace { face } => {
                if !delta.contains_face(*face) {
                    return Ok(false);
                }
                let link = delta.link_unchecked(*face);
                link.dim()? >= 1 && !is_connected_facets(link.facets())
            }
            Witness::ImpureFacetPair { smaller, larger } => {
                let sizes_differ = smaller.len() != larger.len();
                let facets_ok = delta.is_facet(*smaller) && delta.is_facet(*larger);
                let graph_ok = graph.is_none_or(|g| is_maximal_independent(g, *smaller) && is_maximal_independent(g, *larger));
                sizes_differ && facets_ok && graph_ok
            }
            Witness::NonvanishingLinkHomology { face, dimension, characteristic, serre_level } => {
                let Ok(k) = FieldSpec::new(*characteristic) else { return Ok(false) };
                nonvanishing(delta, *face, *dimension, k, *serre_level)?
            }
            Witness::ShellingOrder { order } => check_shelling(delta, order).unwrap_or_default(),
            Witness::NoShellingExists { reason } => reason.recheck(delta)?,
        })
    }
}

impl NoShellingReason {
    pub fn recheck(&self, delta: &SimplicialComplex) -> Result<bool> {
        Ok(match self {
            NoShellingReason::NonPure => !delta.is_pure(),
            NoShellingReason::HVectorNegative { index, value } => {
                *value < 0 && delta.is_pure() && delta.h_vector()?.get(*index) == Some(value)
            }
            NoShellingReason::CmObstruction { face, dimension, characteristic } => {
                let Ok(k) = FieldSpec::new(*characteristic) else { return Ok(false) };
                delta.is_pure() && nonvanishing(delta, *face, *dimension, k, None)?
            }
            NoShellingReason::Exhaustive { .. } => {
                if !delta.is_pure() || delta.is_void() {
                    return Ok(false);
                }
                let mut search = ShellSearch::new(delta, u64::MAX, None)?;
                matches!(search.run(), Some(None))
            }
            NoShellingReason::InJoinFactor { block, reason } => match join_projection(delta, *block) {
                Some(factor) => reason.recheck(&factor)?,
                None => false,
            },
        })
    }
}

fn nonvanishing(delta: &SimplicialComplex, face: VertexSet, i: isize, k: FieldSpec, r: Option<u32>) -> Result<bool> {
    if !delta.contains_face(face) {
        return Ok(false);
    }
    let link = delta.link_unchecked(face);
    let dl = link.dim()?;
    let bound = match r {
        Some(r) => (r as isize - 1).min(dl),
        None => dl,
    };
    if i < -1 || i >= bound {
        return Ok(false);
    }
    Ok(reduced_homology_upto(&link, i)?.betti(i, k) > 0)
}

fn is_maximal_independent(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset(g.vertex_set()) {
        return false;
    }
    let independent = s.iter().all(|v| g.neighbors(v).is_disjoint(s));
    independent && (0..g.n()).all(|v| s.contains(v) || !g.neighbors(v).is_disjoint(s))
}

/// The factor of `delta` on `block`, if `delta` splits as that factor joined
/// with the complex on the remaining vertices.
pub(crate) fn join_projection(delta: &SimplicialComplex, block: VertexSet) -> Option<SimplicialComplex> {
    let rest = delta.vertices().difference(block);
    let mut inside: Vec<VertexSet> = delta.facets().iter().map(|f| f.intersection(block)).collect();
    let mut outside: Vec<VertexSet> = delta.facets().iter().map(|f| f.intersection(rest)).collect();
    for v in [&mut inside, &mut outside] {
        v.sort_unstable_by_key(|f| f.bits());
        v.dedup();
    }
    (inside.len() * outside.len() == delta.facets().len())
        .then(|| SimplicialComplex::from_antichain(delta.n_vertices(), inside))
}
