//! Pure shellability by depth-first search over facet orders.
//!
//! A facet `F` may follow a placed set `P` when its restriction
//! `R(F) = {v ∈ F : F \ v lies in some facet of P}` is contained in no member
//! of `P`. Restriction sizes of a shelling count the h-vector, which bounds
//! every partial order. Placed sets that cannot be completed are memoised.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::serre::is_orbit_rep;
use super::witness::NoShellingReason;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShellOutcome {
    /// Facet indices into the canonical facet list.
    Shellable(Vec<usize>),
    NotShellable(NoShellingReason),
    Timeout { nodes: u64 },
}

#[derive(Clone, Debug)]
pub struct ShellOptions {
    pub budget: u64,
    pub factorize: bool,
    /// Try one first facet per orbit of `v -> v+1 mod n`.
    pub rotation: Option<usize>,
}

impl Default for ShellOptions {
    fn default() -> Self {
        ShellOptions { budget: DEFAULT_BUDGET, factorize: true, rotation: None }
    }
}

pub fn is_shellable(delta: &SimplicialComplex, budget: u64) -> Result<ShellOutcome> {
    is_shellable_with(delta, &ShellOptions { budget, ..ShellOptions::default() })
}

pub fn is_shellable_with(delta: &SimplicialComplex, opts: &ShellOptions) -> Result<ShellOutcome> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(n) = opts.rotation {
        if !delta.rotation_invariant(n) {
            return Err(Error::NotRotationInvariant(n));
        }
    }
    if !delta.is_pure() {
        return Ok(ShellOutcome::NotShellable(NoShellingReason::NonPure));
    }
    if opts.factorize {
        let factors = delta.join_factors();
        if factors.len() > 1 {
            return join_shelling(delta, &factors, opts);
        }
    }
    let h = delta.h_vector()?;
    if let Some((index, &value)) = h.iter().enumerate().find(|(_, &x)| x < 0) {
        return Ok(ShellOutcome::NotShellable(NoShellingReason::HVectorNegative { index, value }));
    }
    let mut search = ShellSearch::new(delta, opts.budget, opts.rotation)?;
    Ok(match search.run() {
        Some(Some(order)) => ShellOutcome::Shellable(order),
        Some(None) => ShellOutcome::NotShellable(NoShellingReason::Exhaustive { nodes: search.nodes }),
        None => ShellOutcome::Timeout { nodes: search.nodes },
    })
}

fn join_shelling(delta: &SimplicialComplex, factors: &[SimplicialComplex], opts: &ShellOptions) -> Result<ShellOutcome> {
    let sub = ShellOptions { rotation: None, ..opts.clone() };
    let mut orders = Vec::with_capacity(factors.len());
    let mut nodes = 0;
    let mut timed_out = false;
    for f in factors {
        match is_shellable_with(f, &sub)? {
            ShellOutcome::Shellable(o) => orders.push(o),
            ShellOutcome::NotShellable(reason) => {
                return Ok(ShellOutcome::NotShellable(NoShellingReason::InJoinFactor {
                    block: f.vertices(),
                    reason: Box::new(reason),
                }))
            }
            ShellOutcome::Timeout { nodes: k } => {
                nodes += k;
                timed_out = true;
            }
        }
    }
    if timed_out {
        return Ok(ShellOutcome::Timeout { nodes });
    }
    let mut order = Vec::with_capacity(delta.facets().len());
    let mut idx = vec![0usize; factors.len()];
    loop {
        let facet = idx
            .iter()
            .enumerate()
            .fold(VertexSet::EMPTY, |acc, (j, &i)| acc.union(factors[j].facets()[orders[j][i]]));
        let pos = delta
            .facets()
            .binary_search_by(|f| f.lex_cmp(facet))
            .expect("join facets are facets of the join");
        order.push(pos);
        let mut j = factors.len();
        loop {
            if j == 0 {
                return Ok(ShellOutcome::Shellable(order));
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < orders[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Checks the shelling condition of `order` directly: for all `i < j` some
/// `v ∈ F_j \ F_i` has `F_j \ F_l = {v}` for an `l < j`.
pub fn check_shelling(delta: &SimplicialComplex, order: &[usize]) -> Result<bool> {
    let facets = delta.facets();
    let mut seen = vec![false; facets.len()];
    if order.len() != facets.len() {
        return Err(Error::NotAPermutation);
    }
    for &i in order {
        if i >= facets.len() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPermutation);
        }
    }
    for (j, &fj) in order.iter().enumerate() {
        let fj = facets[fj];
        let mut good = VertexSet::EMPTY;
        for &l in &order[..j] {
            let diff = fj.difference(facets[l]);
            if diff.len() == 1 {
                good = good.union(diff);
            }
        }
        if order[..j].iter().any(|&i| fj.difference(facets[i]).is_disjoint(good)) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) struct ShellSearch<'a> {
    facets: &'a [VertexSet],
    /// For each facet, the facets sharing a ridge with it.
    adjacent: Vec<Vec<usize>>,
    h: Vec<i64>,
    placed: Vec<u64>,
    order: Vec<usize>,
    counts: Vec<i64>,
    failed: HashSet<Vec<u64>>,
    first: Vec<usize>,
    pub(crate) nodes: u64,
    budget: u64,
}

impl<'a> ShellSearch<'a> {
    pub(crate) fn new(delta: &'a SimplicialComplex, budget: u64, rotation: Option<usize>) -> Result<Self> {
        let facets = delta.facets();
        let mut ridges: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for v in f.iter() {
                ridges.entry(f.without(v)).or_default().push(i);
            }
        }
        let mut adjacent = vec![Vec::new(); facets.len()];
        for list in ridges.values() {
            for &a in list {
                adjacent[a].extend(list.iter().copied().filter(|&b| b != a));
            }
        }
        let first = (0..facets.len())
            .filter(|&i| rotation.is_none_or(|n| is_orbit_rep(facets[i], n)))
            .collect();
        let h = delta.h_vector()?;
        Ok(ShellSearch {
            facets,
            adjacent,
            counts: vec![0; h.len()],
            h,
            placed: vec![0; facets.len().div_ceil(64)],
            order: Vec::with_capacity(facets.len()),
            failed: HashSet::new(),
            first,
            nodes: 0,
            budget,
        })
    }

    fn is_placed(&self, i: usize) -> bool {
        self.placed[i / 64] >> (i % 64) & 1 == 1
    }

    fn toggle(&mut self, i: usize) {
        self.placed[i / 64] ^= 1 << (i % 64);
    }

    fn restriction(&self, i: usize) -> VertexSet {
        let f = self.facets[i];
        self.adjacent[i]
            .iter()
            .filter(|&&g| self.is_placed(g))
            .fold(VertexSet::EMPTY, |acc, &g| acc.union(f.difference(self.facets[g])))
    }

    /// `None` on budget exhaustion, `Some(None)` when no shelling exists.
    pub(crate) fn run(&mut self) -> Option<Option<Vec<usize>>> {
        let first = std::mem::take(&mut self.first);
        for &f in &first {
            self.place(f, 0);
            match self.extend() {
                Some(true) => return Some(Some(self.order.clone())),
                Some(false) => self.unplace(f, 0),
                None => return None,
            }
        }
        Some(None)
    }

    fn place(&mut self, i: usize, k: usize) {
        self.toggle(i);
        self.order.push(i);
        self.counts[k] += 1;
    }

    fn unplace(&mut self, i: usize, k: usize) {
        self.toggle(i);
        self.order.pop();
        self.counts[k] -= 1;
    }

    fn extend(&mut self) -> Option<bool> {
        if self.order.len() == self.facets.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.failed.contains(&self.placed) {
            return Some(false);
        }
        let mut cands: Vec<(usize, VertexSet)> = (0..self.facets.len())
            .filter(|&i| !self.is_placed(i))
            .map(|i| (i, self.restriction(i)))
            .filter(|&(_, r)| !r.is_empty())
            .filter(|&(_, r)| self.counts[r.len()] < self.h[r.len()])
            .filter(|&(_, r)| self.order.iter().all(|&g| !r.is_subset(self.facets[g])))
            .collect();
        cands.sort_by_key(|&(i, r)| (std::cmp::Reverse(r.len()), i));
        for (i, r) in cands {
            self.place(i, r.len());
            let res = self.extend();
            if res != Some(false) {
                return res;
            }
            self.unplace(i, r.len());
        }
        self.failed.insert(self.placed.clone());
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantGraph;
    use proptest::prelude::*;

    fn ind(n: usize, gens: &[usize]) -> SimplicialComplex {
        SimplicialComplex::independence_complex(CirculantGraph::new(n, gens.iter().copied()).unwrap().graph())
    }

    fn interval_complex(n: usize, d: usize) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = (0..n - d).map(|i| (i..=i + d).collect()).collect();
        SimplicialComplex::from_vertex_lists(n, &facets).unwrap()
    }

    fn natural_order(delta: &SimplicialComplex, n: usize, d: usize) -> Vec<usize> {
        (0..n - d)
            .map(|i| {
                let f: VertexSet = (i..=i + d).collect();
                delta.facets().iter().position(|&g| g == f).unwrap()
            })
            .collect()
    }

    #[test]
    fn interval_complex_natural_and_reversed_orders() {
        let d = interval_complex(8, 3);
        let mut order = natural_order(&d, 8, 3);
        assert!(check_shelling(&d, &order).unwrap());
        order.reverse();
        assert!(check_shelling(&d, &order).unwrap());
        assert!(matches!(is_shellable(&d, DEFAULT_BUDGET).unwrap(), ShellOutcome::Shellable(_)));
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let d = SimplicialComplex::from_vertex_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let out = is_shellable(&d, DEFAULT_BUDGET).unwrap();
        let ShellOutcome::NotShellable(reason) = out else { panic!("{out:?}") };
        assert!(reason.recheck(&d).unwrap());
    }

    #[test]
    fn two_disjoint_triangles_reject_every_order() {
        let d = SimplicialComplex::from_vertex_lists(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!check_shelling(&d, &[0, 1]).unwrap());
        assert!(!check_shelling(&d, &[1, 0]).unwrap());
    }

    #[test]
    fn check_rejects_non_permutations() {
        let d = interval_complex(5, 1);
        assert!(matches!(check_shelling(&d, &[0, 0, 1, 2]), Err(Error::NotAPermutation)));
        assert!(matches!(check_shelling(&d, &[0, 1]), Err(Error::NotAPermutation)));
        assert!(matches!(check_shelling(&d, &[0, 1, 2, 9]), Err(Error::NotAPermutation)));
    }

    #[test]
    fn c10_2_5_exhaustively_unshellable() {
        let d = ind(10, &[2, 5]);
        let out = is_shellable(&d, DEFAULT_BUDGET).unwrap();
        let ShellOutcome::NotShellable(reason) = out else { panic!("{out:?}") };
        assert!(reason.recheck(&d).unwrap());
    }

    #[test]
    fn cm_examples_shell() {
        for (n, gens) in [(4, vec![1, 2]), (6, vec![2, 3]), (9, vec![1, 2, 3, 4]), (8, vec![4]), (7, vec![2, 3])] {
            let d = ind(n, &gens);
            match is_shellable(&d, DEFAULT_BUDGET).unwrap() {
                ShellOutcome::Shellable(o) => assert!(check_shelling(&d, &o).unwrap()),
                other => panic!("C{n}{gens:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn join_orders_are_shellings() {
        let d = ind(8, &[4]);
        let path = interval_complex(4, 1);
        let j = d.disjoint_join(&path).unwrap();
        match is_shellable(&j, DEFAULT_BUDGET).unwrap() {
            ShellOutcome::Shellable(o) => assert!(check_shelling(&j, &o).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_a_timeout() {
        let d = interval_complex(10, 1);
        let opts = ShellOptions { budget: 3, factorize: false, rotation: None };
        assert!(matches!(is_shellable_with(&d, &opts).unwrap(), ShellOutcome::Timeout { .. }));
    }

    #[test]
    fn non_pure_is_not_shellable() {
        let d = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(is_shellable(&d, 10).unwrap(), ShellOutcome::NotShellable(NoShellingReason::NonPure));
    }

    fn all_orders_oracle(delta: &SimplicialComplex) -> bool {
        fn rec(delta: &SimplicialComplex, used: &mut Vec<usize>, s: usize) -> bool {
            if used.len() == s {
                return check_shelling(delta, used).unwrap();
            }
            for i in 0..s {
                if !used.contains(&i) {
                    used.push(i);
                    if rec(delta, used, s) {
                        return true;
                    }
                    used.pop();
                }
            }
            false
        }
        rec(delta, &mut Vec::new(), delta.facets().len())
    }

    proptest! {
        #[test]
        fn search_agrees_with_permutation_oracle(
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..6, 3), 1..6)
        ) {
            let facets: Vec<Vec<usize>> = raw.into_iter().map(|s| s.into_iter().collect()).collect();
            let d = SimplicialComplex::from_vertex_lists(6, &facets).unwrap();
            let want = all_orders_oracle(&d);
            for factorize in [false, true] {
                let opts = ShellOptions { budget: u64::MAX, factorize, rotation: None };
                let got = is_shellable_with(&d, &opts).unwrap();
                match got {
                    ShellOutcome::Shellable(o) => {
                        prop_assert!(want);
                        prop_assert!(check_shelling(&d, &o).unwrap());
                    }
                    ShellOutcome::NotShellable(r) => {
                        prop_assert!(!want);
                        prop_assert!(r.recheck(&d).unwrap());
                    }
                    ShellOutcome::Timeout { .. } => prop_assert!(false),
                }
            }
        }
    }
}
