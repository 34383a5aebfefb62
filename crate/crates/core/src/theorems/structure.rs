use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{VertexSet, MAX_VERTICES};
use crate::circulant::{
    cubic, graphs_isomorphic_within, is_isomorphism, one_paired, upper_interval, CirculantGraph, Graph,
};
use crate::classify::{is_shellable_with, ShellOptions, ShellOutcome};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Whether `C(n; a, b)` has `a` components, each a complete multipartite
/// graph with `b` parts of size `n/(ab)` whose independence complex is `b`
/// disjoint simplices.
pub fn verify_structure_one_paired(n: usize, a: usize, b: usize) -> Result<bool> {
    let inst = one_paired(n, a, b)?;
    let k = n / (a * b);
    let comps = inst.graph.graph().connected_components();
    if comps.len() != a {
        return Ok(false);
    }
    let target = complete_multipartite(b, k)?;
    for c in &comps {
        if graphs_isomorphic_within(&c.graph, &target, MAX_VERTICES)?.is_none() {
            return Ok(false);
        }
        let ind = SimplicialComplex::independence_complex(&c.graph);
        let facets = ind.facets();
        let disjoint = facets.len() == b
            && facets.iter().all(|f| f.len() == k)
            && facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f)).len() == b * k;
        if !disjoint {
            return Ok(false);
        }
    }
    Ok(true)
}

fn complete_multipartite(parts: usize, size: usize) -> Result<Graph> {
    let n = parts * size;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| u / size != v / size);
    Graph::from_edges(n, edges)
}

/// Explicit isomorphisms from each component of a cubic circulant to one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub target: CirculantGraph,
    /// Per component: its vertices in increasing order and the image of each.
    pub maps: Vec<(Vec<usize>, Vec<usize>)>,
}

impl ComponentCertificate {
    /// Rechecks every map against `g`, independently of the search.
    pub fn recheck(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::EMPTY;
        for (verts, map) in &self.maps {
            let sub = g.induced(verts);
            if !is_isomorphism(&sub, self.target.graph(), map) {
                return false;
            }
            let vs: VertexSet = verts.iter().copied().collect();
            if !vs.is_disjoint(covered) {
                return false;
            }
            covered = covered.union(vs);
            let closed = verts.iter().all(|&v| g.neighbors(v).is_subset(vs));
            if !closed {
                return false;
            }
        }
        covered == g.vertex_set()
    }
}

/// Maps every component of `C_{2n}(a, n)` onto `target`, or `None` when some
/// component is not isomorphic to it.
pub fn component_certificate(two_n: usize, a: usize, target: &CirculantGraph) -> Result<Option<ComponentCertificate>> {
    let g = cubic(two_n, a)?.graph;
    let mut maps = Vec::new();
    for c in g.graph().connected_components() {
        match graphs_isomorphic_within(&c.graph, target.graph(), MAX_VERTICES)? {
            Some(map) => maps.push((c.vertices, map)),
            None => return Ok(None),
        }
    }
    Ok(Some(ComponentCertificate { target: target.clone(), maps }))
}

/// Results of the link checks on `Ind(C_n(d+1, ..., ⌊n/2⌋))` for `n > 3d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalLinkReport {
    pub n: usize,
    pub d: usize,
    pub facets_are_intervals: bool,
    pub complex_not_shellable: bool,
    pub nonempty_links_shellable: bool,
    /// Orbit representatives examined.
    pub faces_checked: usize,
}

impl IntervalLinkReport {
    pub fn holds(&self) -> bool {
        self.facets_are_intervals && self.complex_not_shellable && self.nonempty_links_shellable
    }
}

pub fn verify_interval_links(n: usize, d: usize) -> Result<IntervalLinkReport> {
    if d <= 1 || n <= 3 * d {
        return Err(Error::InvalidParams(format!("interval links need n > 3d and d > 1, got n={n}, d={d}")));
    }
    let g = upper_interval(n, d)?.graph;
    let delta = SimplicialComplex::independence_complex(g.graph());
    let intervals: HashSet<VertexSet> = (0..n).map(|i| (i..=i + d).map(|v| v % n).collect()).collect();
    let facets: HashSet<VertexSet> = delta.facets().iter().copied().collect();
    let opts = ShellOptions::default();
    let whole = is_shellable_with(&delta, &ShellOptions { rotation: Some(n), ..opts.clone() })?;
    let mut memo = HashMap::new();
    let mut faces_checked = 0;
    let mut links_ok = true;
    let mut failure = None;
    delta.for_each_face(|face, containing| {
        if face.is_empty() || !is_rotation_rep(face, n) {
            return ControlFlow::Continue(());
        }
        faces_checked += 1;
        match link_shellable(containing, face, &opts, &mut memo) {
            Ok(true) => ControlFlow::Continue(()),
            Ok(false) => {
                links_ok = false;
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(IntervalLinkReport {
        n,
        d,
        facets_are_intervals: facets == intervals,
        complex_not_shellable: matches!(whole, ShellOutcome::NotShellable(_)),
        nonempty_links_shellable: links_ok,
        faces_checked,
    })
}

fn is_rotation_rep(face: VertexSet, n: usize) -> bool {
    (1..n).all(|r| face.rotate(r, n).bits() >= face.bits())
}

fn compressed_link(containing: &[VertexSet], face: VertexSet) -> (Vec<u64>, SimplicialComplex) {
    let facets: Vec<VertexSet> = containing.iter().map(|g| g.difference(face)).collect();
    let link = SimplicialComplex::from_facets(MAX_VERTICES, facets)
        .expect("link of a valid complex")
        .compressed();
    (link.facets().iter().map(|f| f.bits()).collect(), link)
}

fn link_shellable(
    containing: &[VertexSet],
    face: VertexSet,
    opts: &ShellOptions,
    memo: &mut HashMap<Vec<u64>, bool>,
) -> Result<bool> {
    let (key, link) = compressed_link(containing, face);
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let v = matches!(is_shellable_with(&link, opts)?, ShellOutcome::Shellable(_));
    memo.insert(key, v);
    Ok(v)
}

/// Items (v) and (vi) of the upper-interval equivalence, computed on faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceItems {
    /// Strongly connected, with every link of dimension below `d` shellable.
    pub v: bool,
    /// Every link with `0 < dim ≤ d` strongly connected.
    pub vi: bool,
    /// Orbit representatives violating (vi) as stated.
    pub vi_violations: usize,
    /// Orbit representatives violating (vi) with the bound `dim < d`.
    pub vi_strict_violations: usize,
}

pub fn equivalence_items(n: usize, d: usize) -> Result<EquivalenceItems> {
    let g = upper_interval(n, d)?.graph;
    let delta = SimplicialComplex::independence_complex(g.graph());
    let opts = ShellOptions::default();
    let strongly = delta.is_pure() && delta.is_strongly_connected()?;
    let mut shell_memo = HashMap::new();
    let mut strong_memo: HashMap<Vec<u64>, bool> = HashMap::new();
    let mut links_shellable = true;
    let (mut vi_violations, mut vi_strict_violations) = (0, 0);
    let mut failure = None;
    let d = d as isize;
    delta.for_each_face(|face, containing| {
        if !is_rotation_rep(face, n) {
            return ControlFlow::Continue(());
        }
        let dl = containing.iter().map(|f| f.len()).max().unwrap_or(0) as isize - face.len() as isize - 1;
        if dl < d && links_shellable {
            match link_shellable(containing, face, &opts, &mut shell_memo) {
                Ok(ok) => links_shellable = ok,
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        if dl > 0 && dl <= d {
            let (key, link) = compressed_link(containing, face);
            let ok = *strong_memo
                .entry(key)
                .or_insert_with(|| link.is_pure() && link.is_strongly_connected().unwrap_or(false));
            if !ok {
                vi_violations += 1;
                if dl < d {
                    vi_strict_violations += 1;
                }
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(EquivalenceItems { v: strongly && links_shellable, vi: vi_violations == 0, vi_violations, vi_strict_violations })
}
