//! Simplicial complexes stored by their facets.
//!
//! A complex lives on the vertex universe `0..n_vertices`. The facet list is
//! kept in canonical form: an antichain of vertex sets sorted lexicographically
//! by their sorted vertex lists. The void complex has no facets at all and is
//! distinct from the irrelevant complex `{∅}`, whose only facet is empty.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{VertexSet, MAX_VERTICES};
use crate::circulant::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`, discarding non-maximal sets.
    pub fn from_facets(n_vertices: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: n_vertices, max: MAX_VERTICES });
        }
        let universe = VertexSet::full(n_vertices);
        let mut raw: Vec<VertexSet> = facets.into_iter().collect();
        if let Some(bad) = raw.iter().find(|f| !f.is_subset(universe)) {
            let v = bad.difference(universe).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { v, n: n_vertices });
        }
        raw.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        raw.dedup();
        Ok(Self::from_sorted_candidates(n_vertices, raw))
    }

    /// `candidates` must be ordered by non-increasing size.
    fn from_sorted_candidates(n_vertices: usize, candidates: Vec<VertexSet>) -> Self {
        let mut kept: Vec<VertexSet> = Vec::with_capacity(candidates.len());
        for f in candidates {
            if !kept.iter().any(|&g| f.is_subset(g)) {
                kept.push(f);
            }
        }
        kept.sort_unstable_by(|a, b| a.lex_cmp(*b));
        SimplicialComplex { n_vertices, facets: kept }
    }

    /// Facets given as vertex lists.
    pub fn from_vertex_lists(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        for &v in facets.iter().flatten() {
            if v >= n_vertices || v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange { v, n: n_vertices });
            }
        }
        Self::from_facets(n_vertices, facets.iter().map(|f| f.iter().copied().collect()))
    }

    /// Wraps a list that is already an antichain; only the order is fixed.
    pub(crate) fn from_antichain(n_vertices: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort_unstable_by(|a, b| a.lex_cmp(*b));
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]));
        SimplicialComplex { n_vertices, facets }
    }

    /// The complex with no faces.
    pub fn void(n_vertices: usize) -> Self {
        SimplicialComplex { n_vertices, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n_vertices: usize) -> Self {
        SimplicialComplex { n_vertices, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `face`.
    pub fn simplex(n_vertices: usize, face: VertexSet) -> Result<Self> {
        Self::from_facets(n_vertices, [face])
    }

    /// The complex of independent sets of `g`; its facets are the maximal
    /// independent sets, found by pivoting Bron–Kerbosch on the complement.
    pub fn independence_complex(g: &Graph) -> Self {
        let co = g.complement();
        let mut out = Vec::new();
        bron_kerbosch(&co, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut out);
        Self::from_antichain(g.n(), out)
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    #[inline]
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// Vertices that occur in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    pub fn is_facet(&self, face: VertexSet) -> bool {
        self.facets.binary_search_by(|f| f.lex_cmp(face)).is_ok()
    }

    pub fn link(&self, face: VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::FaceNotInComplex(face.to_string()));
        }
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: VertexSet) -> Self {
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        Self::from_antichain(self.n_vertices, facets)
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> Self {
        let mut cands: Vec<VertexSet> = self.facets.iter().map(|f| f.without(v)).collect();
        cands.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        cands.dedup();
        Self::from_sorted_candidates(self.n_vertices, cands)
    }

    /// Join of two complexes whose vertex sets are disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if !self.vertices().is_disjoint(other.vertices()) {
            return Err(Error::OverlappingUniverses);
        }
        let n = self.n_vertices.max(other.n_vertices);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(b));
            }
        }
        Ok(Self::from_antichain(n, facets))
    }

    /// Relabels `v -> v + offset`, enlarging the universe accordingly.
    pub fn shifted(&self, offset: usize) -> Result<Self> {
        let n = self.n_vertices + offset;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let facets = self.facets.iter().map(|f| VertexSet::from_bits(f.bits() << offset)).collect();
        Ok(Self::from_antichain(n, facets))
    }

    /// Join with `other` placed on the vertices after `self`'s universe.
    pub fn disjoint_join(&self, other: &Self) -> Result<Self> {
        self.join(&other.shifted(self.n_vertices)?)
    }

    /// Maximum facet size minus one; `{∅}` has dimension −1.
    pub fn dim(&self) -> Result<isize> {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .ok_or(Error::VoidComplex)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// A smallest and a largest facet when the sizes differ.
    pub fn impure_pair(&self) -> Option<(VertexSet, VertexSet)> {
        let small = *self.facets.iter().min_by_key(|f| f.len())?;
        let large = *self.facets.iter().max_by_key(|f| f.len())?;
        (small.len() != large.len()).then_some((small, large))
    }

    /// `f[k]` counts faces with `k` vertices, so `f[0] = 1` is the empty face.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let d = self.dim()?;
        let mut f = vec![0u64; (d + 2) as usize];
        self.for_each_face(|face, _| {
            f[face.len()] += 1;
            ControlFlow::<()>::Continue(())
        });
        Ok(f)
    }

    /// `h[k] = Σ_i (-1)^(k-i) C(d-i, k-i) f_(i-1)` with `d = dim + 1`.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        let f = self.f_vector()?;
        let d = f.len() - 1;
        let mut h = vec![0i128; d + 1];
        for (k, hk) in h.iter_mut().enumerate() {
            for (i, &fi) in f.iter().enumerate().take(k + 1) {
                let term = binomial(d - i, k - i) * fi as i128;
                *hk += if (k - i) % 2 == 0 { term } else { -term };
            }
        }
        Ok(h.into_iter().map(|x| x as i64).collect())
    }

    /// Vertex sets of the connected pieces of the 1-skeleton.
    pub fn components(&self) -> Vec<VertexSet> {
        components_of(&self.facets)
    }

    /// Connectivity of the 1-skeleton.
    pub fn is_connected(&self) -> Result<bool> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.vertices().is_empty() {
            return Err(Error::NoVertices);
        }
        Ok(is_connected_facets(&self.facets))
    }

    /// Connectivity of the graph on facets joined along shared ridges.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let s = self.facets.len();
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut owner: HashMap<VertexSet, usize> = HashMap::new();
        for (k, f) in self.facets.iter().enumerate() {
            for v in f.iter() {
                let ridge = f.without(v);
                match owner.get(&ridge) {
                    Some(&j) => {
                        let (a, b) = (find(&mut parent, j), find(&mut parent, k));
                        parent[a] = b;
                    }
                    None => {
                        owner.insert(ridge, k);
                    }
                }
            }
        }
        let root = find(&mut parent, 0);
        Ok((0..s).all(|k| find(&mut parent, k) == root))
    }

    /// All faces in lexicographic order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_face(|f, _| {
            out.push(f);
            ControlFlow::<()>::Continue(())
        });
        out
    }

    /// Faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_face_upto(size, |f, _| {
            if f.len() == size {
                out.push(f);
            }
            ControlFlow::<()>::Continue(())
        });
        out
    }

    /// Visits every face once, in lexicographic order, together with the
    /// facets that contain it.
    pub fn for_each_face<B>(&self, visit: impl FnMut(VertexSet, &[VertexSet]) -> ControlFlow<B>) -> Option<B> {
        self.for_each_face_upto(usize::MAX, visit)
    }

    /// [`Self::for_each_face`] restricted to faces with at most `max_size` vertices.
    pub fn for_each_face_upto<B>(
        &self,
        max_size: usize,
        mut visit: impl FnMut(VertexSet, &[VertexSet]) -> ControlFlow<B>,
    ) -> Option<B> {
        if self.is_void() {
            return None;
        }
        let depth = self.facets.iter().map(|f| f.len()).max().unwrap_or(0) + 1;
        let mut bufs: Vec<Vec<VertexSet>> = vec![Vec::new(); depth];
        bufs[0] = self.facets.clone();
        match face_dfs(VertexSet::EMPTY, 0, max_size, &mut bufs, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    /// Relabels the used vertices to `0..k`, keeping their order.
    pub fn compressed(&self) -> Self {
        let support = self.vertices();
        let facets = self.facets.iter().map(|f| f.compress(support)).collect();
        SimplicialComplex { n_vertices: support.len(), facets }
    }

    /// Whether `v -> v+1 mod n` maps the complex to itself.
    pub fn rotation_invariant(&self, n: usize) -> bool {
        if n == 0 || n > MAX_VERTICES || !self.vertices().is_subset(VertexSet::full(n)) {
            return false;
        }
        let set: HashSet<VertexSet> = self.facets.iter().copied().collect();
        self.facets.iter().all(|f| set.contains(&f.rotate(1, n)))
    }

    /// Splits the complex as a join of complexes on disjoint vertex blocks.
    ///
    /// Blocks are the components of the graph of vertex pairs that are not
    /// faces. Returns a single factor when no finer split reproduces the
    /// facet list.
    pub fn join_factors(&self) -> Vec<SimplicialComplex> {
        let verts = self.vertices();
        if self.facets.len() <= 1 || verts.len() <= 1 {
            return vec![self.clone()];
        }
        let mut partners = [VertexSet::EMPTY; 64];
        for f in &self.facets {
            for v in f.iter() {
                partners[v] = partners[v].union(*f);
            }
        }
        let mut blocks = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for start in verts.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut block = VertexSet::singleton(start);
            let mut frontier = block;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(verts.difference(partners[v]));
                }
                frontier = next.difference(block);
                block = block.union(frontier);
            }
            seen = seen.union(block);
            blocks.push(block);
        }
        if blocks.len() == 1 {
            return vec![self.clone()];
        }
        let mut product: usize = 1;
        let mut factors = Vec::with_capacity(blocks.len());
        for &b in &blocks {
            let mut proj: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(b)).collect();
            proj.sort_unstable_by_key(|f| f.bits());
            proj.dedup();
            product = product.saturating_mul(proj.len());
            factors.push(proj);
        }
        if product != self.facets.len() {
            return vec![self.clone()];
        }
        factors
            .into_iter()
            .map(|f| SimplicialComplex::from_antichain(self.n_vertices, f))
            .collect()
    }

    /// Plain-text form: `n` on the first line, then one facet per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n_vertices);
        for f in &self.facets {
            if f.is_empty() {
                s.push_str("{}\n");
            } else {
                let words: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                s.push_str(&words.join(" "));
                s.push('\n');
            }
        }
        s
    }

    /// Parses [`Self::to_text`] output; `#` starts a comment and `{}` is the
    /// empty facet.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{header}`")))?;
        let mut facets = Vec::new();
        for line in lines {
            if line == "{}" || line == "[]" {
                facets.push(Vec::new());
                continue;
            }
            let facet = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{w}`"))))
                .collect::<Result<Vec<_>>>()?;
            facets.push(facet);
        }
        Self::from_vertex_lists(n, &facets)
    }
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut r: i128 = 1;
    for j in 0..k {
        r = r * (n - j) as i128 / (j + 1) as i128;
    }
    r
}

fn bron_kerbosch(co: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(co.neighbors(u)).len())
        .expect("p is nonempty");
    for v in p.difference(co.neighbors(pivot)).iter() {
        let nv = co.neighbors(v);
        bron_kerbosch(co, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

fn face_dfs<B>(
    face: VertexSet,
    depth: usize,
    max_size: usize,
    bufs: &mut [Vec<VertexSet>],
    visit: &mut impl FnMut(VertexSet, &[VertexSet]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    visit(face, &bufs[depth])?;
    if face.len() >= max_size {
        return ControlFlow::Continue(());
    }
    let above = match face.max() {
        Some(m) if m >= 63 => return ControlFlow::Continue(()),
        Some(m) => !((1u64 << (m + 1)) - 1),
        None => u64::MAX,
    };
    let avail = bufs[depth].iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
    let avail = VertexSet::from_bits(avail.bits() & above);
    for v in avail.iter() {
        let (head, tail) = bufs.split_at_mut(depth + 1);
        let child = &mut tail[0];
        child.clear();
        child.extend(head[depth].iter().copied().filter(|f| f.contains(v)));
        face_dfs(face.with(v), depth + 1, max_size, bufs, visit)?;
    }
    ControlFlow::Continue(())
}

/// Vertex sets of the 1-skeleton components spanned by `facets`.
pub(crate) fn components_of(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut remaining: Vec<VertexSet> = facets.iter().copied().filter(|f| !f.is_empty()).collect();
    let mut out = Vec::new();
    while let Some(seed) = remaining.pop() {
        let mut comp = seed;
        loop {
            let before = remaining.len();
            remaining.retain(|f| {
                if f.is_disjoint(comp) {
                    true
                } else {
                    comp = comp.union(*f);
                    false
                }
            });
            if remaining.len() == before {
                break;
            }
        }
        out.push(comp);
    }
    out.sort_unstable_by_key(|c| c.min());
    out
}

/// Whether the nonempty members of `facets` span a connected 1-skeleton.
pub(crate) fn is_connected_facets(facets: &[VertexSet]) -> bool {
    let all = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
    let Some(seed) = facets.iter().find(|f| !f.is_empty()) else {
        return true;
    };
    let mut comp = *seed;
    loop {
        let grown = facets
            .iter()
            .filter(|f| !f.is_disjoint(comp))
            .fold(comp, |acc, &f| acc.union(f));
        if grown == comp {
            return comp == all;
        }
        comp = grown;
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, ">")
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    n: usize,
    facets: Vec<VertexSet>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexRepr { n: self.n_vertices, facets: self.facets.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(deserializer)?;
        SimplicialComplex::from_facets(repr.n, repr.facets).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantGraph;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn digits(s: &str) -> VertexSet {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn ind(n: usize, gens: &[usize]) -> SimplicialComplex {
        SimplicialComplex::independence_complex(CirculantGraph::new(n, gens.iter().copied()).unwrap().graph())
    }

    #[test]
    fn independence_complex_of_c8_1_4() {
        let d = ind(8, &[1, 4]);
        let listed: Vec<VertexSet> =
            ["025", "035", "036", "136", "147", "247", "257"].iter().map(|s| digits(s)).collect();
        assert!(listed.iter().all(|&f| d.is_facet(f)));
        // The rotation orbit of 025 has eight members; 146 completes it.
        assert_eq!(d.facets().len(), 8);
        assert!(d.is_facet(digits("146")));
        let orbit: HashSet<VertexSet> = (0..8).map(|r| digits("025").rotate(r, 8)).collect();
        assert_eq!(orbit.len(), 8);
        assert!(orbit.iter().all(|&f| d.is_facet(f)));
    }

    #[test]
    fn independence_complex_of_c10_2_5() {
        let d = ind(10, &[2, 5]);
        let expected: Vec<VertexSet> = [
            "0147", "0347", "0367", "0369", "1258", "1458", "1478", "2369", "2569", "2589",
        ]
        .iter()
        .map(|s| digits(s))
        .collect();
        assert_eq!(d.facets(), expected.as_slice());
    }

    #[test]
    fn independence_complex_of_c6_1_3() {
        let d = ind(6, &[1, 3]);
        assert_eq!(d.facets(), &[set(&[0, 2, 4]), set(&[1, 3, 5])]);
        assert!(!d.is_connected().unwrap());
        assert!(!d.is_strongly_connected().unwrap());
    }

    #[test]
    fn link_examples() {
        let d = ind(8, &[1, 4]);
        assert_eq!(d.link(VertexSet::EMPTY).unwrap(), d);
        assert!(d.link(digits("025")).unwrap().is_irrelevant());
        let l0 = d.link(set(&[0])).unwrap();
        assert_eq!(l0.facets(), &[digits("25"), digits("35"), digits("36")]);
        assert!(matches!(d.link(set(&[0, 1])), Err(Error::FaceNotInComplex(_))));
    }

    #[test]
    fn join_examples() {
        let d = ind(8, &[1, 4]);
        assert_eq!(d.join(&SimplicialComplex::irrelevant(8)).unwrap(), d);
        let a = SimplicialComplex::from_vertex_lists(4, &[vec![0], vec![1]]).unwrap();
        let b = SimplicialComplex::from_vertex_lists(4, &[vec![2], vec![3]]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.facets(), &[set(&[0, 2]), set(&[0, 3]), set(&[1, 2]), set(&[1, 3])]);
        assert!(matches!(a.join(&a), Err(Error::OverlappingUniverses)));
    }

    #[test]
    fn join_of_independence_complexes_is_independence_complex_of_union() {
        let k4 = CirculantGraph::new(4, [1, 2]).unwrap();
        let union = k4.graph().disjoint_union(k4.graph()).unwrap();
        let lhs = SimplicialComplex::independence_complex(k4.graph())
            .disjoint_join(&SimplicialComplex::independence_complex(k4.graph()))
            .unwrap();
        assert_eq!(lhs, SimplicialComplex::independence_complex(&union));
        assert_eq!(lhs.facets().len(), 16);
    }

    #[test]
    fn dimension_and_purity() {
        assert_eq!(ind(11, &[1, 2]).dim().unwrap(), 2);
        let c8 = ind(8, &[1, 4]);
        assert!(c8.is_pure());
        assert_eq!(c8.dim().unwrap(), 2);
        assert!(!ind(9, &[1, 2]).is_pure());
        assert_eq!(SimplicialComplex::irrelevant(3).dim().unwrap(), -1);
        assert!(SimplicialComplex::void(3).dim().is_err());
        assert_eq!(SimplicialComplex::irrelevant(3).f_vector().unwrap(), vec![1]);
    }

    #[test]
    fn connectivity_rules() {
        assert!(ind(8, &[1, 4]).is_connected().unwrap());
        let simplex = SimplicialComplex::simplex(5, set(&[0, 1, 2])).unwrap();
        assert!(simplex.is_connected().unwrap());
        assert!(simplex.is_strongly_connected().unwrap());
        let points = SimplicialComplex::from_vertex_lists(3, &[vec![0], vec![2]]).unwrap();
        assert!(!points.is_connected().unwrap());
        let point = SimplicialComplex::from_vertex_lists(3, &[vec![1]]).unwrap();
        assert!(point.is_connected().unwrap());
        assert!(matches!(SimplicialComplex::void(2).is_connected(), Err(Error::VoidComplex)));
        assert!(matches!(SimplicialComplex::irrelevant(2).is_connected(), Err(Error::NoVertices)));
        assert!(matches!(ind(9, &[1, 2]).is_strongly_connected(), Err(Error::NotPure)));
    }

    #[test]
    fn strong_connectivity_of_c8_1_4_by_breadth_first_search() {
        // Breadth-first search on the facet list with the ridge rule checked pairwise.
        let d = ind(8, &[1, 4]);
        let f = d.facets();
        let mut reached = vec![false; f.len()];
        reached[0] = true;
        let mut queue = vec![0];
        while let Some(i) = queue.pop() {
            for j in 0..f.len() {
                if !reached[j] && f[i].intersection(f[j]).len() + 1 == f[i].len() {
                    reached[j] = true;
                    queue.push(j);
                }
            }
        }
        assert!(reached.iter().all(|&r| r));
        assert!(d.is_strongly_connected().unwrap());
    }

    #[test]
    fn text_and_json_round_trip() {
        let d = ind(8, &[1, 4]);
        assert_eq!(SimplicialComplex::from_text(&d.to_text()).unwrap(), d);
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.starts_with(r#"{"n":8,"facets":[[0,2,5],"#));
        assert_eq!(serde_json::from_str::<SimplicialComplex>(&json).unwrap(), d);
        let e = SimplicialComplex::irrelevant(2);
        assert_eq!(SimplicialComplex::from_text(&e.to_text()).unwrap(), e);
        assert!(SimplicialComplex::from_text("3\n0 5\n").is_err());
    }

    #[test]
    fn join_factors_recover_components() {
        let g = CirculantGraph::new(16, [2, 8]).unwrap();
        let d = SimplicialComplex::independence_complex(g.graph());
        let factors = d.join_factors();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|f| f.facets().len() == 8));
        let cone = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(cone.join_factors().len(), 2);
        let c8 = ind(8, &[1, 4]);
        assert_eq!(c8.join_factors(), vec![c8]);
    }

    #[test]
    fn h_vector_of_boundary_of_triangle() {
        let d = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        assert_eq!(d.f_vector().unwrap(), vec![1, 3, 3]);
        assert_eq!(d.h_vector().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn facet_count_matches_subset_enumeration_at_twenty_vertices() {
        for gens in [vec![1], vec![1, 2], vec![2, 5], vec![3, 7, 10], vec![1, 4, 9]] {
            let g = CirculantGraph::new(20, gens.iter().copied()).unwrap();
            let gr = g.graph();
            let nbr: Vec<u64> = (0..20).map(|v| gr.neighbors(v).bits()).collect();
            let mut count = 0usize;
            for mask in 0u64..(1 << 20) {
                let mut closed = mask;
                let mut independent = true;
                for v in VertexSet::from_bits(mask).iter() {
                    if nbr[v] & mask != 0 {
                        independent = false;
                        break;
                    }
                    closed |= nbr[v];
                }
                if independent && closed == (1 << 20) - 1 {
                    count += 1;
                }
            }
            assert_eq!(SimplicialComplex::independence_complex(gr).facets().len(), count, "{g}");
        }
    }

    fn arb_complex(max_v: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(0u64..(1u64 << max_v), 1..=max_facets).prop_map(move |fs| {
            SimplicialComplex::from_facets(max_v, fs.into_iter().map(VertexSet::from_bits)).unwrap()
        })
    }

    fn brute_faces(d: &SimplicialComplex) -> Vec<VertexSet> {
        let n = d.n_vertices();
        (0u64..(1 << n))
            .map(VertexSet::from_bits)
            .filter(|&s| d.contains_face(s))
            .collect()
    }

    proptest! {
        #[test]
        fn canonical_form_ignores_input_order(
            fs in proptest::collection::vec(0u64..(1 << 9), 1..10),
            seed in any::<u64>(),
        ) {
            let mut shuffled = fs.clone();
            let k = shuffled.len();
            shuffled.rotate_left((seed as usize) % k);
            shuffled.reverse();
            let a = SimplicialComplex::from_facets(9, fs.into_iter().map(VertexSet::from_bits)).unwrap();
            let b = SimplicialComplex::from_facets(9, shuffled.into_iter().map(VertexSet::from_bits)).unwrap();
            prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
            for w in a.facets().windows(2) {
                prop_assert!(w[0].to_vec() < w[1].to_vec());
            }
            for (i, f) in a.facets().iter().enumerate() {
                for (j, g) in a.facets().iter().enumerate() {
                    prop_assert!(i == j || !f.is_subset(*g));
                }
            }
        }

        #[test]
        fn link_of_union_is_iterated_link(d in arb_complex(9, 12), pick in any::<u64>()) {
            let faces = d.faces();
            let f = faces[(pick as usize) % faces.len()];
            let verts = f.to_vec();
            let split = verts.len() / 2;
            let f1: VertexSet = verts[..split].iter().copied().collect();
            let f2: VertexSet = verts[split..].iter().copied().collect();
            let direct = d.link(f).unwrap();
            let iterated = d.link(f1).unwrap().link(f2).unwrap();
            prop_assert_eq!(direct, iterated);
        }

        #[test]
        fn link_of_join_is_join_of_links(a in arb_complex(5, 5), b in arb_complex(5, 5), p in any::<u64>(), q in any::<u64>()) {
            let j = a.disjoint_join(&b).unwrap();
            let fa = a.faces();
            let fb = b.faces();
            let f1 = fa[(p as usize) % fa.len()];
            let f2 = fb[(q as usize) % fb.len()];
            let f2s = VertexSet::from_bits(f2.bits() << 5);
            let lhs = j.link(f1.union(f2s)).unwrap();
            let rhs = a.link(f1).unwrap().disjoint_join(&b.link(f2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn f_vector_matches_subset_count(d in arb_complex(12, 8)) {
            let brute = brute_faces(&d);
            let f = d.f_vector().unwrap();
            for (k, &fk) in f.iter().enumerate() {
                prop_assert_eq!(fk as usize, brute.iter().filter(|s| s.len() == k).count());
            }
            prop_assert_eq!(d.faces(), {
                let mut b = brute.clone();
                b.sort_by(|x, y| x.lex_cmp(*y));
                b
            });
        }

        #[test]
        fn facets_are_maximal_independent_sets(n in 1usize..=14, raw in proptest::collection::btree_set(1usize..=7, 0..4)) {
            let gens: Vec<usize> = raw.into_iter().filter(|&s| s <= n / 2).collect();
            let g = CirculantGraph::new(n, gens).unwrap();
            let gr = g.graph();
            let d = SimplicialComplex::independence_complex(gr);
            let mut count = 0;
            for mask in 0u64..(1 << n) {
                let s = VertexSet::from_bits(mask);
                let indep = s.iter().all(|v| gr.neighbors(v).is_disjoint(s));
                let maximal = indep && (0..n).all(|v| s.contains(v) || !gr.neighbors(v).is_disjoint(s));
                if maximal {
                    count += 1;
                    prop_assert!(d.is_facet(s));
                }
            }
            prop_assert_eq!(count, d.facets().len());
        }
    }
}
