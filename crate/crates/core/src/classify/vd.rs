use std::collections::HashMap;

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::serre::is_orbit_rep;
use super::Decision;

/// Vertex decomposability of a pure complex.
///
/// A simplex is decomposable; otherwise some shedding vertex `v` must have
/// decomposable link and deletion, where shedding means no face of the
/// link is a facet of the deletion. Non-pure input is reported as `False`.
pub fn is_vertex_decomposable(delta: &SimplicialComplex, budget: u64) -> Result<Decision> {
    is_vertex_decomposable_with(delta, budget, None)
}

/// [`is_vertex_decomposable`], trying one top-level vertex per rotation orbit.
pub fn is_vertex_decomposable_with(delta: &SimplicialComplex, budget: u64, rotation: Option<usize>) -> Result<Decision> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(n) = rotation {
        if !delta.rotation_invariant(n) {
            return Err(Error::NotRotationInvariant(n));
        }
    }
    if !delta.is_pure() {
        return Ok(Decision::False);
    }
    let mut search = VdSearch { memo: HashMap::new(), nodes: 0, budget };
    Ok(match search.decide(delta, rotation) {
        Some(true) => Decision::True,
        Some(false) => Decision::False,
        None => Decision::Timeout,
    })
}

/// Every facet through `v` loses `v` into a facet avoiding `v`.
pub fn is_shedding_vertex(delta: &SimplicialComplex, v: usize) -> bool {
    let (with, without): (Vec<VertexSet>, Vec<VertexSet>) = delta.facets().iter().partition(|f| f.contains(v));
    !with.is_empty() && with.iter().all(|f| {
        let rest = f.without(v);
        without.iter().any(|g| rest.is_subset(*g))
    })
}

struct VdSearch {
    memo: HashMap<Vec<u64>, bool>,
    nodes: u64,
    budget: u64,
}

impl VdSearch {
    fn decide(&mut self, delta: &SimplicialComplex, rotation: Option<usize>) -> Option<bool> {
        if delta.facets().len() == 1 {
            return Some(true);
        }
        let delta = delta.compressed();
        let key: Vec<u64> = delta.facets().iter().map(|f| f.bits()).collect();
        if let Some(&hit) = self.memo.get(&key) {
            return Some(hit);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let result = self.decide_fresh(&delta, rotation)?;
        self.memo.insert(key, result);
        Some(result)
    }

    fn decide_fresh(&mut self, delta: &SimplicialComplex, rotation: Option<usize>) -> Option<bool> {
        let core = delta.facets().iter().fold(delta.vertices(), |acc, f| acc.intersection(*f));
        if !core.is_empty() {
            return self.decide(&delta.link_unchecked(core), None);
        }
        let factors = delta.join_factors();
        if factors.len() > 1 {
            for f in &factors {
                if !self.decide(f, None)? {
                    return Some(false);
                }
            }
            return Some(true);
        }
        let rotation = rotation.filter(|&n| n == delta.n_vertices());
        for v in delta.vertices().iter() {
            if rotation.is_some_and(|n| !is_orbit_rep(VertexSet::singleton(v), n)) {
                continue;
            }
            if !is_shedding_vertex(delta, v) {
                continue;
            }
            let link = delta.link_unchecked(VertexSet::singleton(v));
            if !self.decide(&link, None)? {
                continue;
            }
            let del: Vec<VertexSet> = delta.facets().iter().copied().filter(|f| !f.contains(v)).collect();
            let del = SimplicialComplex::from_antichain(delta.n_vertices(), del);
            if self.decide(&del, None)? {
                return Some(true);
            }
        }
        Some(false)
    }
}
