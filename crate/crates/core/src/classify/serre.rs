use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::complex::{is_connected_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_upto, FieldSpec, HomologyProfile};

use super::{Verdict, Witness};

/// The level `r ≥ 1` of Serre's condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct SerreLevel(u32);

impl SerreLevel {
    pub fn new(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::BadSerreLevel);
        }
        Ok(SerreLevel(r))
    }

    pub fn r(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for SerreLevel {
    type Error = Error;
    fn try_from(r: u32) -> Result<Self> {
        SerreLevel::new(r)
    }
}

impl From<SerreLevel> for u32 {
    fn from(r: SerreLevel) -> u32 {
        r.0
    }
}

/// Whether `face` has the smallest bit pattern in its rotation orbit.
pub(crate) fn is_orbit_rep(face: VertexSet, n: usize) -> bool {
    (1..n).all(|r| face.rotate(r, n).bits() >= face.bits())
}

/// Link key independent of vertex labels: the compressed facet bits.
pub(crate) fn link_key(containing: &[VertexSet], face: VertexSet) -> (SimplicialComplex, Vec<u64>) {
    let facets: Vec<VertexSet> = containing.iter().map(|g| g.difference(face)).collect();
    let link = SimplicialComplex::from_antichain(MAX_LINK_UNIVERSE, facets).compressed();
    let key = link.facets().iter().map(|f| f.bits()).collect();
    (link, key)
}

const MAX_LINK_UNIVERSE: usize = crate::bits::MAX_VERTICES;

/// Memoised truncated homology of links.
#[derive(Default)]
pub(crate) struct LinkHomologyCache {
    map: HashMap<(Vec<u64>, isize), HomologyProfile>,
}

impl LinkHomologyCache {
    pub(crate) fn get(&mut self, containing: &[VertexSet], face: VertexSet, upto: isize) -> Result<&HomologyProfile> {
        let (link, key) = link_key(containing, face);
        let entry = self.map.entry((key, upto));
        Ok(match entry {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => e.insert(reduced_homology_upto(&link, upto)?),
        })
    }
}

/// `S_2` through link connectivity: pure, and every face whose link has
/// dimension at least one has a connected link.
pub fn is_s2(delta: &SimplicialComplex) -> Result<Verdict> {
    s2_scan(delta, None)
}

/// [`is_s2`] visiting one face per orbit of `v -> v+1 mod n`.
pub fn s2_orbit_scan(delta: &SimplicialComplex, n: usize) -> Result<Verdict> {
    if !delta.rotation_invariant(n) {
        return Err(Error::NotRotationInvariant(n));
    }
    s2_scan(delta, Some(n))
}

fn s2_scan(delta: &SimplicialComplex, rotation: Option<usize>) -> Result<Verdict> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some((smaller, larger)) = delta.impure_pair() {
        return Ok(Verdict::fail(Witness::ImpureFacetPair { smaller, larger }));
    }
    let size = delta.facets()[0].len();
    if size < 2 {
        return Ok(Verdict::HOLDS);
    }
    let mut link = Vec::new();
    let hit = delta.for_each_face_upto(size - 2, |face, containing| {
        if rotation.is_some_and(|n| !is_orbit_rep(face, n)) {
            return ControlFlow::Continue(());
        }
        link.clear();
        link.extend(containing.iter().map(|g| g.difference(face)));
        if is_connected_facets(&link) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(face)
        }
    });
    Ok(match hit {
        Some(face) => Verdict::fail(Witness::DisconnectedLinkFace { face }),
        None => Verdict::HOLDS,
    })
}

/// Terai's criterion: `H̃_i(link F; k) = 0` for every face `F` and every
/// `i < min(r − 1, dim link F)`.
pub fn is_sr_terai(delta: &SimplicialComplex, r: SerreLevel, k: FieldSpec) -> Result<Verdict> {
    Ok(terai_scan(delta, r, &[k], None)?.remove(0))
}

/// Terai's criterion for several characteristics in one pass, optionally
/// visiting one face per rotation orbit.
pub fn terai_scan(
    delta: &SimplicialComplex,
    r: SerreLevel,
    chars: &[FieldSpec],
    rotation: Option<usize>,
) -> Result<Vec<Verdict>> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(n) = rotation {
        if !delta.rotation_invariant(n) {
            return Err(Error::NotRotationInvariant(n));
        }
    }
    let mut out = vec![Verdict::HOLDS; chars.len()];
    let top = delta.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    if r.r() < 2 || top < 2 {
        return Ok(out);
    }
    let mut cache = LinkHomologyCache::default();
    let mut open = chars.len();
    let res = delta.for_each_face_upto(top - 2, |face, containing| {
        if rotation.is_some_and(|n| !is_orbit_rep(face, n)) {
            return ControlFlow::Continue(());
        }
        let dl = containing.iter().map(|g| g.len()).max().unwrap_or(0) as isize - face.len() as isize - 1;
        let bound = (r.r() as isize - 1).min(dl);
        if bound < 1 {
            return ControlFlow::Continue(());
        }
        let profile = match cache.get(containing, face, bound - 1) {
            Ok(p) => p,
            Err(e) => return ControlFlow::Break(Err(e)),
        };
        for (j, &k) in chars.iter().enumerate() {
            if !out[j].holds {
                continue;
            }
            if let Some(i) = (-1..bound).find(|&i| profile.betti(i, k) > 0) {
                out[j] = Verdict::fail(Witness::NonvanishingLinkHomology {
                    face,
                    dimension: i,
                    characteristic: k.characteristic(),
                    serre_level: Some(r.r()),
                });
                open -= 1;
            }
        }
        if open == 0 {
            ControlFlow::Break(Ok(()))
        } else {
            ControlFlow::Continue(())
        }
    });
    if let Some(Err(e)) = res {
        return Err(e);
    }
    Ok(out)
}
