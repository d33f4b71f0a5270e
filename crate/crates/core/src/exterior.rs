//! Complexified exterior algebra of a 2n-dimensional space with wedge,
//! contraction, and the Clifford (spin) action of T + T* on forms.
//!
//! Monomials are indexed by bitmasks over {1..2n}: bit i-1 set means the
//! covector e^i occurs. The canonical representative of e_{i1}^..^e_{ik}
//! has i1 < .. < ik; every sign is obtained by counting transpositions of
//! the bitmask merge, so results are bit-exact and reproducible. Forms of
//! mixed degree are first-class: pure spinors such as exp(i*omega) are
//! inhomogeneous.

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Mixed-degree form with only nonzero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Form<S> {
    n2: usize,
    coeffs: BTreeMap<u32, S>,
}

impl<S: fmt::Display> fmt::Debug for Form<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(mask, c)| {
                if *mask == 0 {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mask_name(*mask))
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `e134`-style name of a basis monomial.
pub fn mask_name(mask: u32) -> String {
    let mut s = String::from("e");
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            s.push_str(&(i + 1).to_string());
        }
    }
    s
}

/// Sign of e^A ^ e^B as (-1)^t where t counts the transpositions needed to
/// merge the two ascending index lists; zero overlap is the caller's job.
fn merge_sign(a: u32, b: u32) -> i32 {
    let mut transpositions = 0u32;
    let mut bits = b;
    while bits != 0 {
        let j = bits.trailing_zeros();
        bits &= bits - 1;
        // indices of `a` strictly greater than j must jump over e^{j+1}
        transpositions += (a >> (j + 1)).count_ones();
    }
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<S: Scalar> Form<S> {
    pub fn zero(n2: usize) -> Self {
        Form {
            n2,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n2: usize) -> Self {
        Form::monomial(n2, 0, S::one())
    }

    pub fn monomial(n2: usize, mask: u32, coeff: S) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(mask, coeff);
        }
        Form { n2, coeffs }
    }

    /// The basis covector e^i (1-based index).
    pub fn covector(n2: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n2, "covector index out of range");
        Form::monomial(n2, 1 << (i - 1), S::one())
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> S {
        self.coeffs.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &S)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    fn add_term(&mut self, mask: u32, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n2, other.n2, "dimension mismatch in add");
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.add_term(mask, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.n2);
        }
        let mut out = Self::zero(self.n2);
        for (mask, c) in self.terms() {
            out.add_term(mask, c.clone() * s.clone());
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.n2);
        for (mask, c) in self.terms() {
            out.add_term(mask, c.conj());
        }
        out
    }

    /// Exterior product; monomials with overlapping indices die.
    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n2, other.n2, "dimension mismatch in wedge");
        let mut out = Self::zero(self.n2);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if ma & mb != 0 {
                    continue;
                }
                let sign = merge_sign(ma, mb);
                let mut c = ca.clone() * cb.clone();
                if sign < 0 {
                    c = -c;
                }
                out.add_term(ma | mb, c);
            }
        }
        out
    }

    /// Interior product with the vector X = sum x_i e_i: the graded
    /// derivation of degree -1 with iota_{e_i} e^j = delta_ij.
    pub fn contract(&self, x: &[S]) -> Self {
        assert_eq!(self.n2, x.len(), "dimension mismatch in contract");
        let mut out = Self::zero(self.n2);
        for (mask, c) in self.terms() {
            let mut position = 0u32; // how many earlier indices the slot jumps over
            for (i, coordinate) in x.iter().enumerate() {
                let bit = 1 << i;
                if mask & bit == 0 {
                    continue;
                }
                if !coordinate.is_zero() {
                    let mut term = c.clone() * coordinate.clone();
                    if position % 2 == 1 {
                        term = -term;
                    }
                    out.add_term(mask & !bit, term);
                }
                position += 1;
            }
        }
        out
    }

    /// Total-degree components present in the form.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.coeffs.keys().map(|m| m.count_ones()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Coordinate vector of length 2^{2n}, indexed by mask value.
    pub fn to_coords(&self) -> Vec<S> {
        let mut v = vec![S::zero(); 1 << self.n2];
        for (mask, c) in self.terms() {
            v[mask as usize] = c.clone();
        }
        v
    }

    pub fn from_coords(n2: usize, coords: &[S]) -> Self {
        assert_eq!(coords.len(), 1 << n2, "coordinate vector of wrong length");
        let mut out = Self::zero(n2);
        for (mask, c) in coords.iter().enumerate() {
            out.add_term(mask as u32, c.clone());
        }
        out
    }

    /// First nonzero coefficient in canonical monomial order (degree, then
    /// mask value), with its mask.
    pub fn leading_term(&self) -> Option<(u32, S)> {
        self.coeffs
            .iter()
            .min_by_key(|(mask, _)| (mask.count_ones(), **mask))
            .map(|(m, c)| (*m, c.clone()))
    }
}

/// Element X + xi of (T + T*) tensor C: `vec` holds the T coordinates,
/// `covec` the T* coordinates, both in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenVector<S> {
    pub vec: Vec<S>,
    pub covec: Vec<S>,
}

impl<S: Scalar> GenVector<S> {
    pub fn new(vec: Vec<S>, covec: Vec<S>) -> Self {
        assert_eq!(
            vec.len(),
            covec.len(),
            "T and T* parts of different lengths"
        );
        GenVector { vec, covec }
    }

    pub fn n2(&self) -> usize {
        self.vec.len()
    }

    /// Standard basis vector e_i of T (1-based).
    pub fn basis_vec(n2: usize, i: usize) -> Self {
        let mut vec = vec![S::zero(); n2];
        vec[i - 1] = S::one();
        GenVector {
            vec,
            covec: vec![S::zero(); n2],
        }
    }

    /// Standard basis covector e^i of T* (1-based).
    pub fn basis_covec(n2: usize, i: usize) -> Self {
        let mut covec = vec![S::zero(); n2];
        covec[i - 1] = S::one();
        GenVector {
            vec: vec![S::zero(); n2],
            covec,
        }
    }

    /// Coordinates in the 4n-dimensional space T + T*, T part first.
    pub fn from_coords(coords: &[S]) -> Self {
        assert!(
            coords.len().is_multiple_of(2),
            "odd coordinate vector for T + T*"
        );
        let n2 = coords.len() / 2;
        GenVector {
            vec: coords[..n2].to_vec(),
            covec: coords[n2..].to_vec(),
        }
    }

    pub fn to_coords(&self) -> Vec<S> {
        let mut v = self.vec.clone();
        v.extend_from_slice(&self.covec);
        v
    }

    pub fn conj(&self) -> Self {
        GenVector {
            vec: self.vec.iter().map(Scalar::conj).collect(),
            covec: self.covec.iter().map(Scalar::conj).collect(),
        }
    }

    /// Clifford (spin) action (X + xi) . phi = iota_X phi + xi ^ phi.
    pub fn clifford_act(&self, phi: &Form<S>) -> Form<S> {
        assert_eq!(self.n2(), phi.n2(), "dimension mismatch in clifford_act");
        let contracted = phi.contract(&self.vec);
        let mut xi = Form::zero(self.n2());
        for (i, c) in self.covec.iter().enumerate() {
            if !c.is_zero() {
                xi = xi.add(&Form::monomial(self.n2(), 1 << i, c.clone()));
            }
        }
        contracted.add(&xi.wedge(phi))
    }

    /// Natural split pairing <X + xi, Y + eta> = (xi(Y) + eta(X)) / 2.
    pub fn pairing(&self, other: &Self) -> S {
        assert_eq!(self.n2(), other.n2(), "dimension mismatch in pairing");
        let mut acc = S::zero();
        for i in 0..self.n2() {
            acc = acc + self.covec[i].clone() * other.vec[i].clone();
            acc = acc + other.covec[i].clone() * self.vec[i].clone();
        }
        acc / (S::one() + S::one())
    }

    /// Matrix of the Clifford action on the 2^{2n}-dimensional form space,
    /// columns indexed by basis monomials.
    pub fn clifford_matrix(&self) -> Matrix<S> {
        let n2 = self.n2();
        let dim = 1usize << n2;
        let cols: Vec<Vec<S>> = (0..dim)
            .map(|mask| {
                self.clifford_act(&Form::monomial(n2, mask as u32, S::one()))
                    .to_coords()
            })
            .collect();
        Matrix::from_cols(cols)
    }
}
