//! Exact integer linear algebra: matrices, Hermite and Smith normal forms,
//! integer kernels, linear solving, and lattices presented by row bases.
//!
//! The Hermite normal form used throughout is row-style and lower-left:
//! nonzero rows come first, the pivot of a row is its last nonzero entry,
//! pivot columns strictly increase from row to row, pivots are positive,
//! and every entry below a pivot is reduced into `[0, pivot)`. The form is
//! canonical, so two row lattices are equal iff their forms are identical.
//!
//! Everything is generic over [`Scalar`] (any signed integer type from the
//! `num` family, in practice `i64` or `BigInt`). Kernels and normal forms
//! are computed in `BigInt` by callers that cannot rule out intermediate
//! growth, then narrowed back to `i64` with an explicit overflow check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{NumAssign, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Signed exact integer scalar usable in matrices and normal forms.
pub trait Scalar:
    Integer + Signed + NumAssign + Clone + fmt::Debug + fmt::Display + From<i64> + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + NumAssign + Clone + fmt::Debug + fmt::Display + From<i64> + 'static
{
}

/// Dense row-major matrix with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMatrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| T::zero()).collect(),
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from row vectors, which must all have equal length.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        })
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry reference at `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// Overwrites the entry at `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn to_row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Applies `f` entrywise into a new matrix.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> IntMatrix<U> {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// `row[dst] += f * row[src]`.
    fn add_scaled_row(&mut self, dst: usize, src: usize, f: &T) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j).clone() + f.clone() * self.get(src, j).clone();
            self.set(dst, j, v);
        }
    }

    /// Replaces rows `a`, `b` by the unimodular combination
    /// `(s*a + t*b, -v*a + u*b)`.
    fn combine_rows(&mut self, a: usize, b: usize, s: &T, t: &T, v: &T, u: &T) {
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            self.set(a, j, s.clone() * ra.clone() + t.clone() * rb.clone());
            self.set(b, j, u.clone() * rb - v.clone() * ra);
        }
    }

    /// Reorders rows by the given permutation: new row `i` is old row
    /// `perm[i]`.
    fn permute_rows(&mut self, perm: &[usize]) {
        let mut data = Vec::with_capacity(self.data.len());
        for &p in perm {
            data.extend_from_slice(self.row(p));
        }
        self.data = data;
    }
}

impl IntMatrix<i64> {
    /// Widens every entry to `BigInt`.
    pub fn to_bigint(&self) -> IntMatrix<BigInt> {
        self.map(|v| BigInt::from(*v))
    }
}

impl IntMatrix<BigInt> {
    /// Narrows to `i64` entries, failing if any entry does not fit.
    pub fn narrow_to_i64(&self) -> Result<IntMatrix<i64>> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            data.push(v.to_i64().ok_or(Error::CoordinateOverflow)?);
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Hermite normal form together with a unimodular transform `u` such that
/// `u * m = h`, and the rank (number of nonzero rows of `h`).
pub fn hnf_with_transform<T: Scalar>(m: &IntMatrix<T>) -> (IntMatrix<T>, IntMatrix<T>, usize) {
    let mut h = m.clone();
    let mut u = IntMatrix::<T>::identity(m.rows());
    let mut avail = m.rows();

    // Sweep columns right to left; each column that is nonzero on the
    // still-available rows yields one pivot row, parked at the bottom of
    // the available region. This builds the lower-left echelon shape with
    // pivot columns increasing down the final pivot block.
    for c in (0..m.cols()).rev() {
        let mut live: Vec<usize> = (0..avail).filter(|&i| !h.get(i, c).is_zero()).collect();
        if live.is_empty() {
            continue;
        }
        let a = live[0];
        for &b in &live[1..] {
            let x = h.get(a, c).clone();
            let y = h.get(b, c).clone();
            let e = x.extended_gcd(&y);
            let v = y / e.gcd.clone();
            let w = x / e.gcd.clone();
            h.combine_rows(a, b, &e.x, &e.y, &v, &w);
            u.combine_rows(a, b, &e.x, &e.y, &v, &w);
        }
        live.truncate(1);
        if h.get(a, c).is_negative() {
            h.negate_row(a);
            u.negate_row(a);
        }
        h.swap_rows(a, avail - 1);
        u.swap_rows(a, avail - 1);
        avail -= 1;
    }

    // Move the pivot block to the top, zero rows to the bottom.
    let rank = m.rows() - avail;
    let perm: Vec<usize> = (avail..m.rows()).chain(0..avail).collect();
    h.permute_rows(&perm);
    u.permute_rows(&perm);

    // Reduce entries below each pivot into [0, pivot). Working from the
    // largest pivot column downward keeps already-reduced columns intact,
    // since row i only touches columns up to its own pivot.
    let pivots: Vec<usize> = (0..rank).map(|i| pivot_col(&h, i)).collect();
    for j in 1..rank {
        for i in (0..j).rev() {
            let p = h.get(i, pivots[i]).clone();
            let f = -h.get(j, pivots[i]).div_floor(&p);
            h.add_scaled_row(j, i, &f);
            u.add_scaled_row(j, i, &f);
        }
    }

    (h, u, rank)
}

/// Hermite normal form and rank, without the transform.
pub fn hnf<T: Scalar>(m: &IntMatrix<T>) -> (IntMatrix<T>, usize) {
    let (h, _, rank) = hnf_with_transform(m);
    (h, rank)
}

fn pivot_col<T: Scalar>(h: &IntMatrix<T>, i: usize) -> usize {
    (0..h.cols())
        .rev()
        .find(|&c| !h.get(i, c).is_zero())
        .expect("pivot row must be nonzero")
}

/// Basis of the left kernel `{x : x * m = 0}` as matrix rows.
///
/// The returned lattice is saturated: every rational solution with integer
/// entries is an integer combination of the basis rows.
pub fn left_kernel<T: Scalar>(m: &IntMatrix<T>) -> IntMatrix<T> {
    let (h, u, rank) = hnf_with_transform(m);
    let rows: Vec<Vec<T>> = (rank..h.rows()).map(|i| u.row(i).to_vec()).collect();
    let (k, _) = hnf(&IntMatrix::from_rows(&rows).expect("kernel rows are rectangular"));
    k
}

/// Basis of the right kernel `{x : m * x = 0}` as matrix rows.
pub fn right_kernel<T: Scalar>(m: &IntMatrix<T>) -> IntMatrix<T> {
    left_kernel(&m.transpose())
}

/// Solves `x * m = b` over the integers, if a solution exists.
pub fn solve_left<T: Scalar>(m: &IntMatrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), m.cols(), "right-hand side length mismatch");
    let (h, u, rank) = hnf_with_transform(m);
    let mut residual: Vec<T> = b.to_vec();
    let mut y: Vec<T> = vec![T::zero(); rank];
    // In the lower-left form the largest pivot column is touched only by
    // the last pivot row, so back-substitution runs bottom-up.
    for i in (0..rank).rev() {
        let c = pivot_col(&h, i);
        let p = h.get(i, c);
        let (q, rem) = residual[c].div_rem(p);
        if !rem.is_zero() {
            return None;
        }
        for (j, r) in residual.iter_mut().enumerate() {
            let v = r.clone() - q.clone() * h.get(i, j).clone();
            *r = v;
        }
        y[i] = q;
    }
    if residual.iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); m.rows()];
    for (i, yi) in y.iter().enumerate() {
        for (j, xj) in x.iter_mut().enumerate() {
            let v = xj.clone() + yi.clone() * u.get(i, j).clone();
            *xj = v;
        }
    }
    Some(x)
}

/// Nonzero diagonal of the Smith normal form: invariant factors, each
/// dividing the next.
pub fn smith_diagonal<T: Scalar>(m: &IntMatrix<T>) -> Vec<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows.min(cols);
    let mut out = Vec::new();

    for k in 0..n {
        'pivot: loop {
            // Smallest nonzero entry of the trailing block becomes the
            // pivot candidate.
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !a.get(i, j).is_zero()
                        && best.is_none_or(|(bi, bj)| a.get(i, j).abs() < a.get(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return out;
            };
            a.swap_rows(k, bi);
            swap_cols(&mut a, k, bj);
            if a.get(k, k).is_negative() {
                a.negate_row(k);
            }

            let p = a.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..rows {
                let f = -a.get(i, k).div_floor(&p);
                a.add_scaled_row(i, k, &f);
                if !a.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                let f = -a.get(k, j).div_floor(&p);
                add_scaled_col(&mut a, j, k, &f);
                if !a.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }
            // Enforce divisibility of the remaining block by the pivot.
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !a.get(i, j).mod_floor(&p).is_zero() {
                        a.add_scaled_row(k, i, &T::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        out.push(a.get(k, k).clone());
    }
    out
}

fn swap_cols<T: Scalar>(a: &mut IntMatrix<T>, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..a.rows() {
        let vx = a.get(i, x).clone();
        let vy = a.get(i, y).clone();
        a.set(i, x, vy);
        a.set(i, y, vx);
    }
}

fn add_scaled_col<T: Scalar>(a: &mut IntMatrix<T>, dst: usize, src: usize, f: &T) {
    if f.is_zero() {
        return;
    }
    for i in 0..a.rows() {
        let v = a.get(i, dst).clone() + f.clone() * a.get(i, src).clone();
        a.set(i, dst, v);
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<T: Scalar>(m: &IntMatrix<T>) -> T {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return T::zero();
            };
            a.swap_rows(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(k, k).clone() * a.get(i, j).clone()
                    - a.get(i, k).clone() * a.get(k, j).clone())
                    / prev.clone();
                a.set(i, j, v);
            }
            a.set(i, k, T::zero());
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1).clone()
}

/// Determinant and adjugate: `m * adj = det * identity`.
pub fn adjugate<T: Scalar>(m: &IntMatrix<T>) -> (T, IntMatrix<T>) {
    assert_eq!(m.rows(), m.cols(), "adjugate needs a square matrix");
    let n = m.rows();
    let det = determinant(m);
    let mut adj = IntMatrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = minor_matrix(m, j, i);
            let mut c = determinant(&minor);
            if (i + j) % 2 == 1 {
                c = -c;
            }
            adj.set(i, j, c);
        }
    }
    (det, adj)
}

fn minor_matrix<T: Scalar>(m: &IntMatrix<T>, skip_row: usize, skip_col: usize) -> IntMatrix<T> {
    let rows: Vec<Vec<T>> = (0..m.rows())
        .filter(|&i| i != skip_row)
        .map(|i| {
            (0..m.cols())
                .filter(|&j| j != skip_col)
                .map(|j| m.get(i, j).clone())
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows).expect("minor rows are rectangular")
}

/// Rank of the row space.
pub fn rank_of<T: Scalar>(m: &IntMatrix<T>) -> usize {
    hnf(m).1
}

/// A sublattice of `Z^d` presented by a canonical (Hermite-form) row basis
/// with `i64` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient_dim: usize,
    basis: IntMatrix<i64>,
    pivot_cols: Vec<usize>,
}

impl Lattice {
    /// Lattice generated by the given row vectors.
    pub fn from_rows(ambient_dim: usize, rows: &[Vec<i64>]) -> Result<Lattice> {
        for r in rows {
            if r.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: r.len(),
                });
            }
        }
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let (h, rank) = hnf(&IntMatrix::from_rows(&big)?);
        let trimmed: Vec<Vec<BigInt>> = (0..rank).map(|i| h.row(i).to_vec()).collect();
        let basis = IntMatrix::from_rows(&trimmed)?.narrow_to_i64()?;
        let pivot_cols = (0..rank).map(|i| pivot_col(&basis, i)).collect();
        Ok(Lattice {
            ambient_dim,
            basis,
            pivot_cols,
        })
    }

    /// The full lattice `Z^d`.
    pub fn full(dim: usize) -> Lattice {
        Lattice {
            ambient_dim: dim,
            basis: IntMatrix::identity(dim),
            pivot_cols: (0..dim).collect(),
        }
    }

    /// Ambient dimension `d`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Rank of the lattice.
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &IntMatrix<i64> {
        &self.basis
    }

    /// Pivot column of each basis row (strictly increasing).
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Whether `x` is an integer combination of the basis rows.
    pub fn member(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.ambient_dim, "member: dimension mismatch");
        let mut residual: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        for i in (0..self.basis.rows()).rev() {
            let c = self.pivot_cols[i];
            let p = *self.basis.get(i, c) as i128;
            if residual[c] % p != 0 {
                return false;
            }
            let q = residual[c] / p;
            if q != 0 {
                for (j, r) in residual.iter_mut().enumerate() {
                    *r -= q * *self.basis.get(i, j) as i128;
                }
            }
        }
        residual.iter().all(|&v| v == 0)
    }

    /// Intersection with another lattice over the same ambient space.
    ///
    /// Computed via the kernel of the stacked bases: a point is in both
    /// lattices iff it is a combination of this basis that the other basis
    /// also reaches.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Rows: [B_self; B_other], kernel vectors (a | b) satisfy
        // a*B_self = -b*B_other, so a*B_self runs over the intersection.
        let mut stacked: Vec<Vec<BigInt>> = self
            .basis
            .to_bigint()
            .to_row_vecs();
        stacked.extend(other.basis.to_bigint().to_row_vecs());
        let kernel = left_kernel(&IntMatrix::from_rows(&stacked)?);
        let r = self.basis.rows();
        let mut rows = Vec::new();
        for i in 0..kernel.rows() {
            let mut v = vec![BigInt::from(0); self.ambient_dim];
            for (k, item) in v.iter_mut().enumerate() {
                for j in 0..r {
                    *item += kernel.get(i, j).clone() * self.basis.get(j, k);
                }
            }
            rows.push(v);
        }
        let narrowed = IntMatrix::from_rows(&rows)?.narrow_to_i64()?;
        Lattice::from_rows(self.ambient_dim, &narrowed.to_row_vecs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn m64(rows: &[&[i64]]) -> IntMatrix<i64> {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = IntMatrix::<i64>::identity(3);
        let (h, rank) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::<i64>::zeros(2, 2);
        let (h, rank) = hnf(&z);
        assert_eq!(h, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn hnf_unimodular_pair_reduces_to_identity() {
        let (h, rank) = hnf(&m64(&[&[2, 1], &[1, 1]]));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn hnf_is_idempotent_and_transform_consistent() {
        let cases = [
            m64(&[&[0, 5], &[2, 3], &[3, 2], &[5, 0]]),
            m64(&[&[4, 6, 2], &[2, 0, 8], &[0, 6, -6]]),
            m64(&[&[7]]),
            m64(&[&[0, 0], &[0, 0], &[3, 6]]),
        ];
        for m in cases {
            let (h, u, rank) = hnf_with_transform(&m);
            // u * m = h
            for i in 0..h.rows() {
                for j in 0..h.cols() {
                    let mut acc = 0i64;
                    for k in 0..m.rows() {
                        acc += u.get(i, k) * m.get(k, j);
                    }
                    assert_eq!(acc, *h.get(i, j));
                }
            }
            let (h2, rank2) = hnf(&h);
            assert_eq!(h2, h, "idempotence failed for {m:?}");
            assert_eq!(rank2, rank);
            for i in rank..h.rows() {
                assert!(h.row(i).iter().all(|v| v.is_zero()));
            }
        }
    }

    #[test]
    fn hnf_shape_lower_left() {
        let (h, rank) = hnf(&m64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        let mut last_pivot = None;
        for i in 0..rank {
            let c = (0..h.cols()).rev().find(|&c| *h.get(i, c) != 0).unwrap();
            assert!(last_pivot.is_none_or(|p| p < c), "pivot columns must increase");
            assert!(*h.get(i, c) > 0, "pivots must be positive");
            for j in i + 1..rank {
                let below = *h.get(j, c);
                assert!(
                    below >= 0 && below < *h.get(i, c),
                    "entries below pivots must be reduced"
                );
            }
            last_pivot = Some(c);
        }
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = m64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let k = left_kernel(&m);
        assert_eq!(k.rows(), 1);
        for j in 0..m.cols() {
            let mut acc = 0;
            for i in 0..m.rows() {
                acc += k.get(0, i) * m.get(i, j);
            }
            assert_eq!(acc, 0);
        }
    }

    #[test]
    fn right_kernel_of_sum_functional() {
        let m = m64(&[&[1, 1, 1]]);
        let k = right_kernel(&m);
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            let s: i64 = k.row(i).iter().sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn solve_left_finds_integer_combinations() {
        let m = m64(&[&[0, 5], &[2, 3], &[3, 2], &[5, 0]]);
        let x = solve_left(&m, &[6, 4]).expect("(6,4) = (2,3)+(3,2)... is reachable");
        let mut acc = [0i64; 2];
        for (i, xi) in x.iter().enumerate() {
            acc[0] += xi * m.get(i, 0);
            acc[1] += xi * m.get(i, 1);
        }
        assert_eq!(acc, [6, 4]);
        assert!(solve_left(&m, &[1, 1]).is_none(), "(1,1) is outside the row lattice");
    }

    #[test]
    fn smith_diagonal_reference_values() {
        // Reference values from tools/oracles/normal_forms.py.
        let cases: Vec<(IntMatrix<i64>, Vec<i64>)> = vec![
            (IntMatrix::identity(2), vec![1, 1]),
            (m64(&[&[2, 0], &[0, 2]]), vec![2, 2]),
            (m64(&[&[1, 2, 3], &[2, 4, 6]]), vec![1]),
            (m64(&[&[2, 4, 4, 2], &[-6, 6, 12, 0], &[10, -4, -16, 6]]), vec![2, 2, 12]),
            (
                m64(&[&[0, 0, 0, 1], &[1, 1, 0, 1], &[0, 1, 1, 1], &[1, 0, 1, 1]]),
                vec![1, 1, 1, 2],
            ),
            (m64(&[&[2, 1], &[1, 1], &[3, 0], &[0, 3]]), vec![1, 1]),
        ];
        for (m, want) in cases {
            let got = smith_diagonal(&m.to_bigint());
            let got: Vec<i64> = got.iter().map(|v| v.to_i64().unwrap()).collect();
            assert_eq!(got, want, "smith_diagonal mismatch for {m:?}");
        }
    }

    #[test]
    fn determinant_and_adjugate() {
        let m = m64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]);
        let det = determinant(&m);
        assert_eq!(det, 8);
        let (d, adj) = adjugate(&m);
        assert_eq!(d, 8);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0;
                for k in 0..3 {
                    acc += m.get(i, k) * adj.get(k, j);
                }
                assert_eq!(acc, if i == j { 8 } else { 0 });
            }
        }
    }

    #[test]
    fn lattice_membership_sum_multiple_of_five() {
        let l = Lattice::from_rows(2, &[vec![0, 5], vec![2, 3], vec![3, 2], vec![5, 0]]).unwrap();
        assert!(l.member(&[1, 4]));
        assert!(!l.member(&[1, 1]));
        assert!(Lattice::full(2).member(&[7, -3]));
    }

    #[test]
    fn lattice_equality_is_basis_equality() {
        let a = Lattice::from_rows(2, &[vec![0, 5], vec![1, -1]]).unwrap();
        let b = Lattice::from_rows(2, &[vec![1, 4], vec![2, 3], vec![4, 1]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lattice_intersection() {
        // Even-sum lattice meets multiples-of-three-first-coordinate.
        let a = Lattice::from_rows(2, &[vec![1, 1], vec![0, 2]]).unwrap();
        let b = Lattice::from_rows(2, &[vec![3, 0], vec![0, 1]]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert!(c.member(&[3, 1]));
        assert!(!c.member(&[1, 1]));
        assert!(!c.member(&[3, 2]));
        assert!(c.member(&[0, 2]));
    }
}
