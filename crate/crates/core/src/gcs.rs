//! Construction of a generalized complex structure on a model: the
//! endomorphism J of T + T*, its +i-eigenspace L, the canonical pure spinor
//! line, the Z-grading U^{-n} .. U^n of all complex forms, integrability,
//! and the matrices of the two components del, delbar of the exterior
//! derivative with respect to that grading.

use crate::exterior::{Form, GenVector};
use crate::linalg::{Matrix, Subspace};
use crate::model::{LieModel, StructureSpec};
use crate::scalar::{gi, gint, Gaussian};
use crate::{Error, FormC, GenVectorC, Mat, Result, Space};
use itertools::Itertools;
use num_traits::{One, Zero};

/// C(n, k) as usize; zero outside the valid range.
pub fn binomial(n: usize, k: i64) -> usize {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// A generalized complex structure made fully explicit on a model: every
/// field is exact and reproducible for a fixed input.
#[derive(Clone, Debug)]
pub struct GcsData {
    n2: usize,
    j_matrix: Mat,
    l_basis: Vec<GenVectorC>,
    un_generator: FormC,
    /// Subspaces of the 2^{2n}-dimensional form space, indexed by k + n.
    uk_bases: Vec<Space>,
    /// Change of basis: columns are the U^k basis vectors, k ascending.
    basis_matrix: Mat,
    basis_inverse: Mat,
    /// del[k + n]: U^k -> U^{k+1} in the chosen bases.
    del: Vec<Mat>,
    /// delbar[k + n]: U^k -> U^{k-1}.
    delbar: Vec<Mat>,
}

/// One grading violation found by the integrability check: the basis form
/// `basis_index` of U^k has a nonzero component in U^m with m != k +- 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub k: i64,
    pub m: i64,
    pub basis_index: usize,
}

/// Builds the 4n x 4n matrix of J on (T + T*) tensor C from a structure
/// specification, then verifies J^2 = -1 and orthogonality for the natural
/// pairing.
pub fn build_j(spec: &StructureSpec, n2: usize) -> Result<Mat> {
    let j = match spec {
        StructureSpec::ComplexEndomorphism(jt) => {
            let j2 = jt.mul(jt);
            if !j2.add(&Matrix::identity(n2)).is_zero() {
                return Err(Error::Structural(
                    "complex structure J does not satisfy J^2 = -1".into(),
                ));
            }
            Matrix::from_fn(2 * n2, 2 * n2, |r, c| {
                if r < n2 && c < n2 {
                    -jt[(r, c)].clone()
                } else if r >= n2 && c >= n2 {
                    // dual map on covectors has the transposed matrix
                    jt[(c - n2, r - n2)].clone()
                } else {
                    Gaussian::zero()
                }
            })
        }
        StructureSpec::SymplecticForm(omega) => {
            let flat = omega_flat(omega, n2);
            let flat_inv = flat
                .inverse()
                .map_err(|_| Error::Structural("symplectic form is degenerate".into()))?;
            Matrix::from_fn(2 * n2, 2 * n2, |r, c| {
                if r < n2 && c >= n2 {
                    -flat_inv[(r, c - n2)].clone()
                } else if r >= n2 && c < n2 {
                    flat[(r - n2, c)].clone()
                } else {
                    Gaussian::zero()
                }
            })
        }
        StructureSpec::RawMatrix(m) => m.clone(),
        StructureSpec::PureSpinor(rho) => j_from_spinor(rho, n2)?,
    };
    let minus_one = Matrix::identity(2 * n2).scale(&-Gaussian::one());
    if j.mul(&j) != minus_one {
        return Err(Error::Structural(
            "J^2 = -1 fails for the given structure".into(),
        ));
    }
    let gram = pairing_gram(n2);
    if j.transpose().mul(&gram).mul(&j) != gram {
        return Err(Error::Structural(
            "J is not orthogonal for the natural pairing".into(),
        ));
    }
    Ok(j)
}

/// Matrix of X -> iota_X omega from T to T*.
fn omega_flat(omega: &FormC, n2: usize) -> Mat {
    let cols: Vec<Vec<Gaussian>> = (1..=n2)
        .map(|j| {
            let contracted = omega.contract(&GenVector::<Gaussian>::basis_vec(n2, j).vec);
            (0..n2).map(|k| contracted.coeff(1 << k)).collect()
        })
        .collect();
    Matrix::from_cols(cols)
}

/// Gram matrix of the natural pairing in the standard (T, T*) basis.
fn pairing_gram(n2: usize) -> Mat {
    let half = crate::scalar::gq(1, 2);
    Matrix::from_fn(2 * n2, 2 * n2, |r, c| {
        if (r < n2 && c == r + n2) || (r >= n2 && c == r - n2) {
            half.clone()
        } else {
            Gaussian::zero()
        }
    })
}

/// Reconstructs J from a pure spinor: L is the Clifford annihilator of rho,
/// which must be maximal isotropic of dimension 2n with L meeting its
/// conjugate trivially; J is then +i on L and -i on the conjugate.
fn j_from_spinor(rho: &FormC, n2: usize) -> Result<Mat> {
    if rho.is_zero() {
        return Err(Error::Structural("spinor is zero".into()));
    }
    let annihilator = spinor_annihilator(rho, n2);
    if annihilator.dim() != n2 {
        return Err(Error::Structural(format!(
            "spinor is not pure: annihilator has dimension {} instead of {}",
            annihilator.dim(),
            n2
        )));
    }
    let l_rows = annihilator.basis_matrix();
    let conj_rows = l_rows.conj();
    if l_rows.vstack(&conj_rows).rank() != 2 * n2 {
        return Err(Error::Structural(
            "spinor annihilator meets its conjugate: not a generalized complex structure".into(),
        ));
    }
    let p = l_rows.transpose().hstack(&conj_rows.transpose());
    let mut d = Matrix::zero(2 * n2, 2 * n2);
    for idx in 0..2 * n2 {
        d[(idx, idx)] = if idx < n2 { gi() } else { -gi() };
    }
    let p_inv = p
        .inverse()
        .map_err(|_| Error::Structural("annihilator plus conjugate does not span T + T*".into()))?;
    Ok(p.mul(&d).mul(&p_inv))
}

/// Kernel of w -> w . rho as a subspace of the 4n-dimensional space T + T*.
fn spinor_annihilator(rho: &FormC, n2: usize) -> Space {
    let mut cols = Vec::with_capacity(2 * n2);
    for i in 1..=n2 {
        cols.push(
            GenVector::<Gaussian>::basis_vec(n2, i)
                .clifford_act(rho)
                .to_coords(),
        );
    }
    for i in 1..=n2 {
        cols.push(
            GenVector::<Gaussian>::basis_covec(n2, i)
                .clifford_act(rho)
                .to_coords(),
        );
    }
    Matrix::from_cols(cols).kernel()
}

/// Basis of the +i-eigenspace of J; its dimension must be exactly 2n and it
/// must be isotropic and transverse to its conjugate.
pub fn eigenbundle_l(j_matrix: &Mat, n2: usize) -> Result<Vec<GenVectorC>> {
    let shifted = j_matrix.sub(&Matrix::identity(2 * n2).scale(&gi()));
    let kernel = shifted.kernel();
    if kernel.dim() != n2 {
        return Err(Error::Structural(format!(
            "+i-eigenspace of J has dimension {} instead of {}",
            kernel.dim(),
            n2
        )));
    }
    let basis_matrix = kernel.basis_matrix();
    if basis_matrix.vstack(&basis_matrix.conj()).rank() != 2 * n2 {
        return Err(Error::Structural(
            "eigenspace L meets its conjugate: J is not a generalized complex structure".into(),
        ));
    }
    let basis: Vec<GenVectorC> = kernel
        .basis()
        .iter()
        .map(|v| GenVector::from_coords(v))
        .collect();
    for (a, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(a) {
            if !x.pairing(y).is_zero() {
                return Err(Error::Structural(
                    "eigenspace L is not isotropic for the natural pairing".into(),
                ));
            }
        }
    }
    Ok(basis)
}

/// Generator of the canonical line: the joint kernel of the Clifford
/// operators of a basis of L, which must be one-dimensional. The generator
/// is normalized so that its lowest term in canonical monomial order
/// (degree, then mask) has coefficient 1.
pub fn canonical_line(l_basis: &[GenVectorC], n2: usize) -> Result<FormC> {
    let mut stacked: Option<Mat> = None;
    for l in l_basis {
        let m = l.clifford_matrix();
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    let kernel = stacked.expect("empty L basis").kernel();
    if kernel.dim() != 1 {
        return Err(Error::Structural(format!(
            "canonical line has dimension {} instead of 1: L is not the \
             eigenspace of a generalized complex structure",
            kernel.dim()
        )));
    }
    let form = Form::from_coords(n2, &kernel.basis()[0]);
    let (_, lead) = form.leading_term().expect("nonzero generator");
    Ok(form.scale(&(Gaussian::one() / lead)))
}

/// The full grading: U^{n-j} is spanned by the Clifford products of j
/// distinct conjugated L-basis elements acting on the canonical generator.
/// Dimensions must match the binomial pattern and the pieces must fill the
/// whole form space.
pub fn uk_decomposition(
    l_basis: &[GenVectorC],
    un_generator: &FormC,
    n2: usize,
) -> Result<Vec<Space>> {
    let n = (n2 / 2) as i64;
    let ambient = 1usize << n2;
    let conj_basis: Vec<GenVectorC> = l_basis.iter().map(GenVector::conj).collect();
    let mut by_k_descending: Vec<Space> = Vec::with_capacity(n2 + 1);
    for j in 0..=n2 {
        let spanning: Vec<Vec<Gaussian>> = (0..n2)
            .combinations(j)
            .map(|subset| {
                let mut acc = un_generator.clone();
                for &i in subset.iter().rev() {
                    acc = conj_basis[i].clifford_act(&acc);
                }
                acc.to_coords()
            })
            .collect();
        let space = Subspace::from_spanning_rows(ambient, spanning);
        let k = n - j as i64;
        let expected = binomial(n2, n - k);
        if space.dim() != expected {
            return Err(Error::Structural(format!(
                "U^{k} has dimension {} instead of {expected}",
                space.dim()
            )));
        }
        by_k_descending.push(space);
    }
    let mut stacked: Option<Mat> = None;
    for s in &by_k_descending {
        let m = s.basis_matrix();
        stacked = Some(match stacked {
            None => m,
            Some(acc) => acc.vstack(&m),
        });
    }
    if stacked.unwrap().rank() != ambient {
        return Err(Error::Structural(
            "the U^k pieces do not decompose the full form space".into(),
        ));
    }
    by_k_descending.reverse();
    Ok(by_k_descending)
}

impl GcsData {
    /// Runs the full construction: J, L, canonical line, grading, and
    /// integrability, then extracts the del/delbar matrices and checks their
    /// algebraic identities.
    pub fn build(model: &LieModel, spec: &StructureSpec) -> Result<GcsData> {
        let n2 = model.n2();
        let j_matrix = build_j(spec, n2)?;
        let l_basis = eigenbundle_l(&j_matrix, n2)?;
        let un_generator = canonical_line(&l_basis, n2)?;
        let uk_bases = uk_decomposition(&l_basis, &un_generator, n2)?;

        let mut basis_matrix: Option<Mat> = None;
        for space in &uk_bases {
            if space.dim() == 0 {
                continue;
            }
            let cols = space.basis_matrix().transpose();
            basis_matrix = Some(match basis_matrix {
                None => cols,
                Some(acc) => acc.hstack(&cols),
            });
        }
        let basis_matrix = basis_matrix.expect("nonempty decomposition");
        let basis_inverse = basis_matrix
            .inverse()
            .map_err(|_| Error::Internal("U^k basis matrix is singular".into()))?;

        let mut data = GcsData {
            n2,
            j_matrix,
            l_basis,
            un_generator,
            uk_bases,
            basis_matrix,
            basis_inverse,
            del: Vec::new(),
            delbar: Vec::new(),
        };

        let violations = data.grading_components(model);
        if !violations.is_empty() {
            let GradingViolation { k, m, basis_index } = violations[0].clone();
            return Err(Error::Structural(format!(
                "structure is not integrable: d of basis form {basis_index} of U^{k} \
                 has a component in U^{m} ({} violations in total)",
                violations.len()
            )));
        }
        data.check_conjugation_symmetry()?;
        data.verify_operator_identities()?;
        Ok(data)
    }

    /// Decomposes d of every U^k basis form in the graded basis, filling in
    /// del/delbar and returning any components outside U^{k+1} + U^{k-1}.
    fn grading_components(&mut self, model: &LieModel) -> Vec<GradingViolation> {
        let n = self.n() as i64;
        let t = self
            .basis_inverse
            .mul(model.d_matrix())
            .mul(&self.basis_matrix);
        let offset = |k: i64| -> usize { (-n..k).map(|m| self.dim_k(m)).sum() };
        let mut violations = Vec::new();
        let mut del = Vec::new();
        let mut delbar = Vec::new();
        for k in -n..=n {
            let col0 = offset(k);
            let cols = self.dim_k(k);
            let mut del_k = Matrix::zero(self.dim_k(k + 1), cols);
            let mut delbar_k = Matrix::zero(self.dim_k(k - 1), cols);
            for m in -n..=n {
                let row0 = offset(m);
                let rows = self.dim_k(m);
                let block = t.submatrix(row0..row0 + rows, col0..col0 + cols);
                if m == k + 1 {
                    del_k = block;
                } else if m == k - 1 {
                    delbar_k = block;
                } else if !block.is_zero() {
                    for c in 0..cols {
                        if block.col(c).iter().any(|x| !x.is_zero()) {
                            violations.push(GradingViolation {
                                k,
                                m,
                                basis_index: c,
                            });
                        }
                    }
                }
            }
            del.push(del_k);
            delbar.push(delbar_k);
        }
        self.del = del;
        self.delbar = delbar;
        violations
    }

    /// Conjugation must map U^k into U^{-k}.
    fn check_conjugation_symmetry(&self) -> Result<()> {
        let n = self.n() as i64;
        for k in -n..=n {
            let target = self.uk_space(-k);
            for b in self.uk_space(k).basis() {
                let conj: Vec<Gaussian> = b.iter().map(crate::scalar::Scalar::conj).collect();
                if !target.contains_vector(&conj) {
                    return Err(Error::Internal(format!(
                        "conjugation does not map U^{k} into U^{}",
                        -k
                    )));
                }
            }
        }
        Ok(())
    }

    /// del^2 = 0, delbar^2 = 0, del delbar + delbar del = 0, and the exact
    /// relations tying d and the derived operator -i(del - delbar).
    fn verify_operator_identities(&self) -> Result<()> {
        let n = self.n() as i64;
        let two_i = gint(2) * gi();
        for k in -n..=n {
            if !self.del_mat(k + 1).mul(&self.del_mat(k)).is_zero() {
                return Err(Error::Internal(format!("del^2 != 0 out of U^{k}")));
            }
            if !self.delbar_mat(k - 1).mul(&self.delbar_mat(k)).is_zero() {
                return Err(Error::Internal(format!("delbar^2 != 0 out of U^{k}")));
            }
            let anti = self
                .del_mat(k - 1)
                .mul(&self.delbar_mat(k))
                .add(&self.delbar_mat(k + 1).mul(&self.del_mat(k)));
            if !anti.is_zero() {
                return Err(Error::Internal(format!(
                    "del delbar + delbar del != 0 on U^{k}"
                )));
            }
            // d dJ on U^k with dJ = -i(del - delbar): the U^k component
            // equals 2i del delbar (delbar applied first), equivalently
            // -2i delbar del.
            let d_dj = self
                .delbar_mat(k + 1)
                .mul(&self.del_mat(k).scale(&-gi()))
                .add(&self.del_mat(k - 1).mul(&self.delbar_mat(k).scale(&gi())));
            if d_dj != self.del_delbar(k).scale(&two_i) {
                return Err(Error::Internal(format!("d dJ != 2i del delbar on U^{k}")));
            }
            let dj_d = self
                .delbar_mat(k + 1)
                .scale(&gi())
                .mul(&self.del_mat(k))
                .add(&self.del_mat(k - 1).scale(&-gi()).mul(&self.delbar_mat(k)));
            if !d_dj.add(&dj_d).is_zero() {
                return Err(Error::Internal(format!("d dJ + dJ d != 0 on U^{k}")));
            }
        }
        Ok(())
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn n(&self) -> usize {
        self.n2 / 2
    }

    pub fn j_matrix(&self) -> &Mat {
        &self.j_matrix
    }

    pub fn l_basis(&self) -> &[GenVectorC] {
        &self.l_basis
    }

    pub fn un_generator(&self) -> &FormC {
        &self.un_generator
    }

    /// Dimension of U^k; zero outside [-n, n].
    pub fn dim_k(&self, k: i64) -> usize {
        let n = self.n() as i64;
        if k < -n || k > n {
            0
        } else {
            self.uk_bases[(k + n) as usize].dim()
        }
    }

    /// U^k as a subspace of the full form space; zero outside [-n, n].
    pub fn uk_space(&self, k: i64) -> Space {
        let n = self.n() as i64;
        if k < -n || k > n {
            Subspace::zero(1 << self.n2)
        } else {
            self.uk_bases[(k + n) as usize].clone()
        }
    }

    /// Matrix of del: U^k -> U^{k+1} in the chosen bases.
    pub fn del_mat(&self, k: i64) -> Mat {
        let n = self.n() as i64;
        if k < -n || k > n {
            Matrix::zero(self.dim_k(k + 1), 0)
        } else {
            self.del[(k + n) as usize].clone()
        }
    }

    /// Matrix of delbar: U^k -> U^{k-1}.
    pub fn delbar_mat(&self, k: i64) -> Mat {
        let n = self.n() as i64;
        if k < -n || k > n {
            Matrix::zero(self.dim_k(k - 1), 0)
        } else {
            self.delbar[(k + n) as usize].clone()
        }
    }

    /// The composite U^k -> U^k applying delbar first, then del.
    pub fn del_delbar(&self, k: i64) -> Mat {
        self.del_mat(k - 1).mul(&self.delbar_mat(k))
    }

    /// Embedding U^k coordinates -> form-space coordinates (basis columns).
    pub fn uk_embedding(&self, k: i64) -> Mat {
        let space = self.uk_space(k);
        if space.dim() == 0 {
            Matrix::zero(1 << self.n2, 0)
        } else {
            space.basis_matrix().transpose()
        }
    }

    /// Full-space matrix of del (all k summed), in form coordinates.
    pub fn del_full(&self) -> Mat {
        self.component_full(true)
    }

    /// Full-space matrix of delbar, in form coordinates.
    pub fn delbar_full(&self) -> Mat {
        self.component_full(false)
    }

    fn component_full(&self, del: bool) -> Mat {
        let n = self.n() as i64;
        let dim = 1usize << self.n2;
        let mut graded = Matrix::zero(dim, dim);
        let offset = |k: i64| -> usize { (-n..k).map(|m| self.dim_k(m)).sum() };
        for k in -n..=n {
            let block = if del {
                self.del_mat(k)
            } else {
                self.delbar_mat(k)
            };
            let target = if del { k + 1 } else { k - 1 };
            if block.rows() == 0 || block.cols() == 0 {
                continue;
            }
            let (r0, c0) = (offset(target), offset(k));
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    graded[(r0 + r, c0 + c)] = block[(r, c)].clone();
                }
            }
        }
        self.basis_matrix.mul(&graded).mul(&self.basis_inverse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_model;

    fn build(text: &str) -> (LieModel, GcsData) {
        let (model, spec) = parse_model(text).unwrap();
        model.validate().unwrap();
        let gcs = GcsData::build(&model, &spec).unwrap();
        (model, gcs)
    }

    #[test]
    fn complex_torus_dim2_canonical_generator() {
        let (_, gcs) = build("dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]");
        // holomorphic line: e^1 + i e^2, normalized to leading coefficient 1
        let gen = gcs.un_generator();
        assert_eq!(gen.coeff(0b01), gint(1));
        assert_eq!(gen.coeff(0b10), gi());
        assert_eq!(gcs.dim_k(1), 1);
        assert_eq!(gcs.dim_k(0), 2);
        assert_eq!(gcs.dim_k(-1), 1);
        assert_eq!(gcs.l_basis().len(), 2);
    }

    #[test]
    fn symplectic_torus_generator_is_exp_i_omega() {
        let (_, gcs) = build("dim 2; algebra (0,0); structure symplectic omega = e12");
        let gen = gcs.un_generator();
        assert_eq!(gen.coeff(0), gint(1));
        assert_eq!(gen.coeff(0b11), gi());
        // every element of L annihilates the generator
        for l in gcs.l_basis() {
            assert!(l.clifford_act(gen).is_zero());
        }
    }

    #[test]
    fn kodaira_thurston_dims_and_integrability() {
        let (_, gcs) = build("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23");
        for (k, expected) in [(-2, 1), (-1, 4), (0, 6), (1, 4), (2, 1)] {
            assert_eq!(gcs.dim_k(k), expected, "dim U^{k}");
        }
        assert_eq!((-2i64..=2).map(|k| gcs.dim_k(k)).sum::<usize>(), 16);
        // exp(i omega) for omega = e14 + e23
        let gen = gcs.un_generator();
        assert_eq!(gen.coeff(0), gint(1));
        assert_eq!(gen.coeff(0b1001), gi());
        assert_eq!(gen.coeff(0b0110), gi());
        assert_eq!(gen.coeff(0b1111), gint(-1));
    }

    #[test]
    fn symplectic_j_has_the_antidiagonal_block_shape() {
        // blocks (0, -flat^{-1}; flat, 0) where flat is X -> iota_X omega
        let (_, spec) =
            parse_model("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23")
                .unwrap();
        let j = build_j(&spec, 4).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert!(j[(r, c)].is_zero(), "T-T block");
                assert!(j[(r + 4, c + 4)].is_zero(), "T*-T* block");
            }
        }
        // omega = e14 + e23 contracts e_1 to e^4, e_2 to e^3, and so on
        let StructureSpec::SymplecticForm(omega) = &spec else {
            unreachable!()
        };
        for (col, expect_row) in [(0, 3), (1, 2), (2, 1), (3, 0)] {
            let contracted = omega.contract(&GenVector::<Gaussian>::basis_vec(4, col + 1).vec);
            let sign = contracted.coeff(1 << expect_row);
            assert!(!sign.is_zero());
            assert_eq!(
                j[(4 + expect_row, col)],
                sign,
                "lower-left block is the flat map"
            );
        }
        // upper-right block is minus the inverse flat map
        let lower_left = j.submatrix(4..8, 0..4);
        let upper_right = j.submatrix(0..4, 4..8);
        assert_eq!(
            upper_right,
            lower_left.inverse().unwrap().scale(&-Gaussian::one())
        );
    }

    #[test]
    fn spinor_route_reconstructs_the_symplectic_structure() {
        let sym = "dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23";
        let spin = "dim 4; algebra (0,0,0,12); structure spinor rho = 1 + i*e14 + i*e23 - e1234";
        let (_, gcs_sym) = build(sym);
        let (_, gcs_spin) = build(spin);
        assert_eq!(gcs_sym.j_matrix(), gcs_spin.j_matrix());
        assert_eq!(gcs_sym.un_generator(), gcs_spin.un_generator());
    }

    #[test]
    fn non_closed_two_form_is_rejected_as_non_integrable() {
        let (model, spec) =
            parse_model("dim 4; algebra (0,0,0,12); structure symplectic omega = e12 + e34")
                .unwrap();
        let err = GcsData::build(&model, &spec).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        assert!(err.to_string().contains("not integrable"), "{err}");
    }

    #[test]
    fn impure_spinor_is_rejected() {
        let (model, spec) =
            parse_model("dim 4; algebra (0,0,0,0); structure spinor rho = 1 + e12 + e13").unwrap();
        let err = GcsData::build(&model, &spec).unwrap_err();
        assert!(
            err.to_string().contains("pure") || err.to_string().contains("annihilator"),
            "{err}"
        );
    }

    #[test]
    fn raw_matrix_route_agrees_with_the_complex_route() {
        let (model, spec) =
            parse_model("dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]").unwrap();
        let j = build_j(&spec, 2).unwrap();
        let gcs_a = GcsData::build(&model, &spec).unwrap();
        let gcs_b = GcsData::build(&model, &StructureSpec::RawMatrix(j)).unwrap();
        assert_eq!(gcs_a.un_generator(), gcs_b.un_generator());
    }

    #[test]
    fn j_squared_violation_is_reported() {
        let m = Matrix::identity(4);
        let err = build_j(&StructureSpec::RawMatrix(m), 2).unwrap_err();
        assert!(err.to_string().contains("J^2"));
    }

    #[test]
    fn i_times_identity_dies_at_the_eigenspace_gate() {
        let m = Matrix::identity(4).scale(&gi());
        match build_j(&StructureSpec::RawMatrix(m), 2) {
            Ok(j) => {
                let err = eigenbundle_l(&j, 2).unwrap_err();
                assert!(err.to_string().contains("dimension"), "{err}");
            }
            Err(err) => {
                assert!(err.to_string().contains("pairing"), "{err}");
            }
        }
    }

    #[test]
    fn degenerate_symplectic_form_is_rejected() {
        let (_, spec) =
            parse_model("dim 4; algebra (0,0,0,0); structure symplectic omega = e12").unwrap();
        let err = build_j(&spec, 4).unwrap_err();
        assert!(err.to_string().contains("degenerate"));
    }

    #[test]
    fn complex_case_dims_match_the_bigraded_count() {
        let (_, gcs) = build(
            "dim 4; algebra (0,0,0,0); structure complex J = [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]",
        );
        let n = 2i64;
        for k in -n..=n {
            let bigraded: usize = (0..=2i64)
                .flat_map(|p| (0..=2i64).map(move |q| (p, q)))
                .filter(|(p, q)| p - q == k)
                .map(|(p, q)| binomial(2, p) * binomial(2, q))
                .sum();
            assert_eq!(gcs.dim_k(k), bigraded, "k = {k}");
        }
    }

    #[test]
    fn abelian_structures_have_zero_operators() {
        let (_, gcs) = build("dim 2; algebra (0,0); structure symplectic omega = e12");
        for k in -1i64..=1 {
            assert!(gcs.del_mat(k).is_zero());
            assert!(gcs.delbar_mat(k).is_zero());
        }
    }

    #[test]
    fn full_space_operators_sum_to_d() {
        let (model, gcs) =
            build("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23");
        let d = gcs.del_full().add(&gcs.delbar_full());
        assert_eq!(&d, model.d_matrix());
    }
}
