//! Smith normal form over the integers.
//!
//! Boundary matrices are sparse with unit entries. Most of the rank comes
//! from eliminating ±1 pivots with word arithmetic; whatever survives is
//! finished densely with arbitrary-precision entries.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, entries: rows.concat() }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Matrix product; `None` on dimension mismatch or overflow.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.checked_mul(other.get(k, j))?;
                    let v = out.get(i, j).checked_add(prod)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub(crate) fn to_columns(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.cols)
            .map(|c| (0..self.rows).filter_map(|r| Some((r, self.get(r, c))).filter(|e| e.1 != 0)).collect())
            .collect()
    }
}

/// Rank and invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith_sparse(m.rows(), m.to_columns())
}

/// Smith form of a column-major sparse matrix with `rows` rows.
pub(crate) fn smith_sparse(rows: usize, cols: Vec<Vec<(usize, i64)>>) -> SmithForm {
    let mut state = Sparse::new(rows, cols);
    let units = state.eliminate_units();
    let mut factors: Vec<BigInt> = vec![BigInt::one(); units];
    factors.extend(dense_invariant_factors(state.residual()));
    SmithForm { rank: factors.len(), invariant_factors: factors }
}

struct Sparse {
    cols: Vec<Vec<(usize, i64)>>,
    alive: Vec<bool>,
    row_cols: Vec<HashSet<usize>>,
    overflowed: bool,
}

impl Sparse {
    fn new(rows: usize, mut cols: Vec<Vec<(usize, i64)>>) -> Self {
        let mut row_cols = vec![HashSet::new(); rows];
        for (c, col) in cols.iter_mut().enumerate() {
            col.sort_unstable_by_key(|e| e.0);
            col.retain(|e| e.1 != 0);
            for &(r, _) in col.iter() {
                row_cols[r].insert(c);
            }
        }
        let alive = cols.iter().map(|c| !c.is_empty()).collect();
        Sparse { cols, alive, row_cols, overflowed: false }
    }

    /// Pivots on ±1 entries until none is left or arithmetic overflows;
    /// returns the number of pivots.
    fn eliminate_units(&mut self) -> usize {
        let mut pivots = 0;
        loop {
            let mut progress = false;
            for c in 0..self.cols.len() {
                if !self.alive[c] {
                    continue;
                }
                let pivot = self.cols[c]
                    .iter()
                    .filter(|e| e.1.abs() == 1)
                    .min_by_key(|e| self.row_cols[e.0].len())
                    .copied();
                let Some((r, u)) = pivot else { continue };
                if !self.pivot(c, r, u) {
                    self.overflowed = true;
                    return pivots;
                }
                pivots += 1;
                progress = true;
            }
            if !progress {
                return pivots;
            }
        }
    }

    /// Clears row `r` outside column `c`, then drops row `r` and column `c`.
    fn pivot(&mut self, c: usize, r: usize, u: i64) -> bool {
        let others: Vec<usize> = self.row_cols[r].iter().copied().filter(|&k| k != c).collect();
        let pivot_col = std::mem::take(&mut self.cols[c]);
        for k in others {
            let a = match self.cols[k].binary_search_by_key(&r, |e| e.0) {
                Ok(pos) => self.cols[k][pos].1,
                Err(_) => continue,
            };
            // col_k -= (a * u) * col_c, using u = u^{-1}.
            let Some(merged) = a.checked_mul(u).and_then(|scale| axpy(&self.cols[k], &pivot_col, scale)) else {
                self.cols[c] = pivot_col;
                return false;
            };
            for &(row, _) in &self.cols[k] {
                self.row_cols[row].remove(&k);
            }
            for &(row, _) in &merged {
                self.row_cols[row].insert(k);
            }
            self.alive[k] = !merged.is_empty();
            self.cols[k] = merged;
        }
        for &(row, _) in &pivot_col {
            self.row_cols[row].remove(&c);
        }
        self.alive[c] = false;
        true
    }

    /// Remaining nonzero block as dense big-integer rows.
    fn residual(&self) -> Vec<Vec<BigInt>> {
        let live: Vec<usize> = (0..self.cols.len()).filter(|&c| self.alive[c]).collect();
        if live.is_empty() {
            return Vec::new();
        }
        let mut rows: Vec<usize> = live.iter().flat_map(|&c| self.cols[c].iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut dense = vec![vec![BigInt::zero(); live.len()]; rows.len()];
        for (j, &c) in live.iter().enumerate() {
            for &(r, v) in &self.cols[c] {
                let i = rows.binary_search(&r).unwrap();
                dense[i][j] = BigInt::from(v);
            }
        }
        if self.overflowed {
            log::debug!("word arithmetic overflowed; finishing {}x{} block densely", rows.len(), live.len());
        }
        dense
    }
}

/// `x - scale * y` on sorted sparse vectors; `None` on overflow.
fn axpy(x: &[(usize, i64)], y: &[(usize, i64)], scale: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, y[j].1.checked_mul(scale)?.checked_neg()?));
            j += 1;
        } else {
            let v = x[i].1.checked_sub(y[j].1.checked_mul(scale)?)?;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Invariant factors of a dense matrix by smallest-magnitude pivoting.
pub(crate) fn dense_invariant_factors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_nonzero(&a, t, |i, j| i >= t && j >= t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                let (pi, pj) = min_nonzero(&a, t, |i, j| (i == t && j >= t) || (j == t && i >= t)).unwrap();
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    factors
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize, within: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() || !within(i, j) {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factors(m: &IntMatrix) -> Vec<i64> {
        let s = smith_normal_form(m);
        assert_eq!(s.rank, s.invariant_factors.len());
        s.invariant_factors.iter().map(|f| i64::try_from(f).unwrap()).collect()
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(factors(&IntMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(factors(&IntMatrix::zeros(3, 4)), Vec::<i64>::new());
        assert_eq!(factors(&IntMatrix::zeros(0, 2)), Vec::<i64>::new());
    }

    /// Applies a fixed sequence of unimodular row and column operations.
    fn scramble(m: &IntMatrix, ops: &[(bool, usize, usize, i64)]) -> IntMatrix {
        let mut rows: Vec<Vec<i64>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        for &(on_rows, a, b, k) in ops {
            if on_rows {
                let (a, b) = (a % rows.len(), b % rows.len());
                if a != b {
                    for j in 0..m.cols() {
                        rows[a][j] += k * rows[b][j];
                    }
                }
            } else {
                let (a, b) = (a % m.cols(), b % m.cols());
                if a != b {
                    for row in rows.iter_mut() {
                        row[a] += k * row[b];
                    }
                }
            }
        }
        IntMatrix::from_rows(&rows)
    }

    #[test]
    fn scrambled_diagonal_two_four() {
        let d = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        let ops = [(true, 0, 1, 3), (false, 1, 0, -2), (true, 1, 0, 5), (false, 0, 1, 1), (true, 0, 1, -1)];
        let s = scramble(&d, &ops);
        assert_ne!(s, d);
        assert_eq!(factors(&s), vec![2, 4]);
    }

    #[test]
    fn non_divisible_diagonal_is_normalised() {
        let d = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(factors(&d), vec![1, 6]);
        let d = IntMatrix::from_rows(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        assert_eq!(factors(&d), vec![2, 2, 60]);
    }

    #[test]
    fn overflowing_entries_fall_back_to_big_integers() {
        let big = i64::MAX / 2;
        let m = IntMatrix::from_rows(&[vec![1, big, big], vec![big, 1, big], vec![big, big, 1]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, 3);
        let det: BigInt = s.invariant_factors.iter().product();
        let b = BigInt::from(big);
        let one = BigInt::one();
        let expected = (&one - &b * &b) - &b * (&b - &b * &b) + &b * (&b * &b - &b);
        assert_eq!(det, expected.abs());
    }

    /// Determinantal-divisor oracle for 2x2 matrices.
    fn oracle_2x2(m: &[[i64; 2]; 2]) -> Vec<i64> {
        let g = m.iter().flatten().fold(0i64, |acc, &x| acc.gcd(&x));
        let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
        match (g, det) {
            (0, _) => vec![],
            (g, 0) => vec![g],
            (g, det) => vec![g, det / g],
        }
    }

    /// Invariant factors of a diagonal matrix from prime-power exponents.
    fn diagonal_oracle(diag: &[i64]) -> Vec<BigInt> {
        let nonzero: Vec<i64> = diag.iter().copied().filter(|&x| x != 0).collect();
        let r = nonzero.len();
        let mut out = vec![1i64; r];
        for p in [2i64, 3, 5] {
            let mut exps: Vec<u32> = nonzero
                .iter()
                .map(|&x| {
                    let (mut x, mut e) = (x, 0);
                    while x % p == 0 {
                        x /= p;
                        e += 1;
                    }
                    e
                })
                .collect();
            exps.sort_unstable();
            for (k, e) in exps.into_iter().enumerate() {
                out[k] *= p.pow(e);
            }
        }
        out.into_iter().map(BigInt::from).collect()
    }

    proptest! {
        #[test]
        fn two_by_two_matches_determinantal_divisors(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
            let m = IntMatrix::from_rows(&[vec![a, b], vec![c, d]]);
            prop_assert_eq!(factors(&m), oracle_2x2(&[[a, b], [c, d]]));
        }

        #[test]
        fn scrambling_preserves_invariants(
            diag in proptest::collection::vec(0i64..6, 1..5),
            ops in proptest::collection::vec((any::<bool>(), 0usize..5, 0usize..5, -2i64..=2), 0..12),
        ) {
            let n = diag.len();
            let mut base = IntMatrix::zeros(n, n);
            for (i, &x) in diag.iter().enumerate() {
                base.set(i, i, x);
            }
            let expected = diagonal_oracle(&diag);
            let s = smith_normal_form(&scramble(&base, &ops));
            prop_assert_eq!(s.invariant_factors.clone(), expected);
            for w in s.invariant_factors.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }
}
