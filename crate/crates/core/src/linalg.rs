//! Exact dense linear algebra over a field.
//!
//! Every kernel, image, intersection and quotient dimension in the engine
//! comes through here. Elimination is plain Gauss-Jordan with deterministic
//! pivoting (first nonzero entry in column order, rows scanned top-down),
//! so identical inputs always produce identical bases. Ambient dimensions
//! stay at or below 2^{2n} with n <= 4, where dense exact elimination is
//! fast and simple.

use crate::scalar::Scalar;
use num_traits::Zero;
use std::fmt;

/// Error from a dimension-checked operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("containment violation: {0}")]
    ContainmentViolation(String),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  {:?}",
                &self.entries[r * self.cols..(r + 1) * self.cols]
            )?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<S>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)].conj())
    }

    /// Conjugate transpose; the adjoint for an orthonormal basis.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() * s.clone()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + other[(r, c)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        Self::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc = acc + self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "shape mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "shape mismatch in hstack");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn submatrix(
        &self,
        row_range: std::ops::Range<usize>,
        col_range: std::ops::Range<usize>,
    ) -> Self {
        Self::from_fn(row_range.len(), col_range.len(), |r, c| {
            self[(row_range.start + r, col_range.start + c)].clone()
        })
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    /// Pivoting is deterministic: columns left to right, first nonzero row
    /// top-down.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(src, pivot_row);
            let inv = S::one() / self[(pivot_row, col)].clone();
            for c in col..self.cols {
                self[(pivot_row, c)] = self[(pivot_row, c)].clone() * inv.clone();
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    let delta = factor.clone() * self[(pivot_row, c)].clone();
                    self[(r, c)] = self[(r, c)].clone() - delta;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over the field; exact elimination, never floating point.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the null space {v : self * v = 0}, as a subspace of the
    /// column-coordinate space. dim = cols - rank.
    pub fn kernel(&self) -> Subspace<S> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            pivot_of_col[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -m[(row, free)].clone();
            }
            basis.push(v);
        }
        Subspace::from_canonical_rows(self.cols, basis)
    }

    /// Column space, as a subspace of the row-coordinate space.
    pub fn image(&self) -> Subspace<S> {
        Subspace::from_spanning_rows(self.rows, (0..self.cols).map(|c| self.col(c)).collect())
    }

    /// Row space.
    pub fn row_space(&self) -> Subspace<S> {
        Subspace::from_spanning_rows(
            self.cols,
            (0..self.rows).map(|r| self.row(r).to_vec()).collect(),
        )
    }

    /// Exact inverse; `Err(Singular)` if the matrix is not invertible.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut aug = self.hstack(&Self::identity(self.rows));
        let pivots = aug.rref_in_place();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        Ok(aug.submatrix(0..self.rows, self.cols..2 * self.cols))
    }

    /// One exact solution of self * x = b, or None if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let rhs = Matrix {
            rows: b.len(),
            cols: 1,
            entries: b.to_vec(),
        };
        let mut aug = self.hstack(&rhs);
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.entries[r * self.cols + c]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.entries[r * self.cols + c]
    }
}

/// Subspace of a coordinate space, stored as the rows of a reduced row
/// echelon matrix. The RREF basis is canonical, so equal subspaces built
/// from different spanning sets still get identical bases; equality is
/// nevertheless decided by mutual containment, never by basis comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient_dim: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![S::zero(); ambient_dim];
                v[i] = S::one();
                v
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Reduces a spanning set to the canonical RREF basis.
    pub fn from_spanning_rows(ambient_dim: usize, rows: Vec<Vec<S>>) -> Self {
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
        }
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let mut m = Matrix::from_rows(rows);
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    /// Accepts rows already known to be independent (e.g. a kernel basis);
    /// still canonicalizes to RREF for reproducibility.
    fn from_canonical_rows(ambient_dim: usize, rows: Vec<Vec<S>>) -> Self {
        Self::from_spanning_rows(ambient_dim, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<S> {
        if self.basis.is_empty() {
            Matrix::zero(0, self.ambient_dim)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    pub fn contains_vector(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector of wrong length");
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let stacked = self
            .basis_matrix()
            .vstack(&Matrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    /// sub `self` is contained in `other`: stacking self's basis onto
    /// other's does not increase the rank.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient mismatch in containment"
        );
        if self.dim() == 0 {
            return true;
        }
        other.basis_matrix().vstack(&self.basis_matrix()).rank() == other.dim()
    }

    /// Subspace equality by mutual containment.
    pub fn equals(&self, other: &Self) -> bool {
        self.is_contained_in(other) && other.is_contained_in(self)
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "sum of subspaces of ambient dims {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Self::from_spanning_rows(self.ambient_dim, rows))
    }

    /// Intersection: solve x*A = y*B by taking the kernel of [A^T | -B^T].
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "intersection of subspaces of ambient dims {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        let at = self.basis_matrix().transpose();
        let bt = other.basis_matrix().transpose().scale(&-S::one());
        let combined = at.hstack(&bt);
        let ker = combined.kernel();
        let p = self.dim();
        let rows = ker
            .basis()
            .iter()
            .map(|xy| {
                let mut v = vec![S::zero(); self.ambient_dim];
                for (i, coeff) in xy[..p].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (vc, bc) in v.iter_mut().zip(&self.basis[i]) {
                        *vc = vc.clone() + coeff.clone() * bc.clone();
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_spanning_rows(self.ambient_dim, rows))
    }

    /// Codimension of `sub` in `total`, verifying sub is contained in total
    /// first; a violation signals an upstream algebra bug.
    pub fn quotient_dim(sub: &Self, total: &Self) -> Result<usize, LinalgError> {
        if sub.ambient_dim != total.ambient_dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "quotient of subspaces of ambient dims {} and {}",
                sub.ambient_dim, total.ambient_dim
            )));
        }
        if !sub.is_contained_in(total) {
            return Err(LinalgError::ContainmentViolation(format!(
                "quotient denominator (dim {}) not contained in numerator (dim {})",
                sub.dim(),
                total.dim()
            )));
        }
        Ok(total.dim() - sub.dim())
    }

    /// Pushes the subspace through a linear map given by `m` acting on
    /// column vectors: span of m*b for basis vectors b.
    pub fn map_by(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.cols(), self.ambient_dim, "map_by shape mismatch");
        Self::from_spanning_rows(m.rows(), self.basis.iter().map(|b| m.mul_vec(b)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gi, gint, Gaussian};
    use proptest::prelude::*;

    fn gmat(rows: usize, cols: usize, data: Vec<Gaussian>) -> Matrix<Gaussian> {
        assert_eq!(data.len(), rows * cols);
        let mut i = 0;
        Matrix::from_fn(rows, cols, |_, _| {
            let v = data[i].clone();
            i += 1;
            v
        })
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Matrix::<Gaussian>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Gaussian>::zero(2, 2).rank(), 0);
    }

    #[test]
    fn rank_detects_complex_dependence() {
        // [[1, i], [i, -1]]: row2 = i*row1. Oracle: the 2x2 determinant
        // 1*(-1) - i*i vanishes, so rank < 2; the matrix is nonzero.
        let m = gmat(2, 2, vec![gint(1), gi(), gi(), gint(-1)]);
        let det = m[(0, 0)].clone() * m[(1, 1)].clone() - m[(0, 1)].clone() * m[(1, 0)].clone();
        assert!(det.is_zero());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_zero_and_of_zero_map_is_full() {
        assert_eq!(Matrix::<Gaussian>::identity(3).kernel().dim(), 0);
        assert_eq!(Matrix::<Gaussian>::zero(3, 3).kernel().dim(), 3);
    }

    #[test]
    fn kernel_vectors_actually_annihilate() {
        // [[1, i]] has kernel spanned by (-i, 1); verify by substitution.
        let m = gmat(1, 2, vec![gint(1), gi()]);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        for v in ker.basis() {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert!(ker.contains_vector(&[-gi(), gint(1)]));
    }

    #[test]
    fn intersect_examples() {
        let a =
            Subspace::from_spanning_rows(2, vec![vec![gint(1), gint(0)], vec![gint(0), gint(1)]]);
        let b = Subspace::from_spanning_rows(2, vec![vec![gint(1), gint(1)]]);
        let i = a.intersect(&b).unwrap();
        assert!(i.equals(&b));
        assert!(b.is_contained_in(&i) && i.is_contained_in(&b));

        assert!(a.intersect(&a).unwrap().equals(&a));

        let p = Subspace::from_spanning_rows(
            4,
            vec![
                vec![gint(1), gint(0), gint(0), gint(0)],
                vec![gint(0), gint(1), gint(0), gint(0)],
            ],
        );
        let q = Subspace::from_spanning_rows(
            4,
            vec![
                vec![gint(0), gint(0), gint(1), gint(0)],
                vec![gint(0), gint(0), gint(0), gint(1)],
            ],
        );
        assert_eq!(p.intersect(&q).unwrap().dim(), 0);
    }

    #[test]
    fn quotient_dim_examples_and_containment_error() {
        let total = Subspace::<Gaussian>::full(5);
        let zero = Subspace::zero(5);
        assert_eq!(Subspace::quotient_dim(&total, &total).unwrap(), 0);
        assert_eq!(Subspace::quotient_dim(&zero, &total).unwrap(), 5);
        let line = Subspace::from_spanning_rows(2, vec![vec![gint(1), gint(1)]]);
        let axis = Subspace::from_spanning_rows(2, vec![vec![gint(1), gint(0)]]);
        assert!(matches!(
            Subspace::quotient_dim(&line, &axis),
            Err(LinalgError::ContainmentViolation(_))
        ));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Gaussian>::full(2);
        let b = Subspace::<Gaussian>::full(3);
        assert!(a.intersect(&b).is_err());
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = gmat(2, 2, vec![gint(1), gi(), gint(0), gint(2)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let singular = gmat(2, 2, vec![gint(1), gi(), gi(), gint(-1)]);
        assert!(matches!(singular.inverse(), Err(LinalgError::Singular)));
    }

    #[test]
    fn generic_kernel_works_for_floats_on_exact_data() {
        let m: Matrix<f64> = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().dim(), 1);
    }

    fn small_gaussian() -> impl Strategy<Value = Gaussian> {
        ((-3i64..=3), (1i64..=2), (-3i64..=3), (1i64..=2))
            .prop_map(|(a, b, c, d)| crate::scalar::gauss(a, b, c, d))
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Gaussian>> {
        proptest::collection::vec(small_gaussian(), rows * cols)
            .prop_map(move |data| gmat(rows, cols, data))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(m in small_matrix(3, 4)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn rank_equals_rank_of_adjoint(m in small_matrix(3, 4)) {
            prop_assert_eq!(m.rank(), m.adjoint().rank());
        }

        #[test]
        fn intersection_dimension_formula(
            rows_a in proptest::collection::vec(proptest::collection::vec(small_gaussian(), 4), 1..3),
            rows_b in proptest::collection::vec(proptest::collection::vec(small_gaussian(), 4), 1..3),
        ) {
            let a = Subspace::from_spanning_rows(4, rows_a);
            let b = Subspace::from_spanning_rows(4, rows_b);
            let inter = a.intersect(&b).unwrap();
            let sum = a.sum(&b).unwrap();
            prop_assert_eq!(inter.dim() + sum.dim(), a.dim() + b.dim());
            prop_assert!(inter.is_contained_in(&a));
            prop_assert!(inter.is_contained_in(&b));
        }

        #[test]
        fn elimination_is_reproducible(m in small_matrix(3, 4)) {
            let k1 = m.kernel();
            let k2 = m.kernel();
            prop_assert_eq!(k1.basis(), k2.basis());
        }
    }
}
