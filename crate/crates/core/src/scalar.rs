//! Scalar abstraction for the exact kernels.
//!
//! The elimination and exterior-algebra code is generic over any field with
//! exact equality and a conjugation involution. The engine instantiates it
//! at [`Gaussian`] = Q(i); plain rationals and the machine floats also
//! implement the trait (with trivial conjugation) so the kernels stay
//! reusable, but nothing in the engine ever makes a rank decision over
//! floats.

use num_complex::Complex;
use num_traits::{Num, One, Zero};
use std::fmt;
use std::ops::Neg;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Gaussian rational a + b*i with exact rational parts: the coefficient
/// field for every computation in the engine. `num_rational` keeps each
/// part reduced with a positive denominator, so representations are
/// canonical and equality is literal.
pub type Gaussian = Complex<Rational>;

/// Field scalar usable by the generic kernels: exact ring operations,
/// exact equality and a conjugation involution.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> {
    /// Conjugation involution; the identity on real scalar types.
    fn conj(&self) -> Self;
}

impl Scalar for f32 {
    fn conj(&self) -> Self {
        *self
    }
}

impl Scalar for f64 {
    fn conj(&self) -> Self {
        *self
    }
}

impl Scalar for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Scalar for Gaussian {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

/// Exact rational n/d. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as a Gaussian rational.
pub fn gint(n: i64) -> Gaussian {
    Complex::new(rat(n, 1), Rational::zero())
}

/// Rational n/d as a Gaussian rational.
pub fn gq(n: i64, d: i64) -> Gaussian {
    Complex::new(rat(n, d), Rational::zero())
}

/// The imaginary unit i.
pub fn gi() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

/// a/b + (c/d)i.
pub fn gauss(a: i64, b: i64, c: i64, d: i64) -> Gaussian {
    Complex::new(rat(a, b), rat(c, d))
}

/// Renders a Gaussian rational the way the model-file grammar accepts it,
/// e.g. `3/2`, `-i`, `1/2+3/4i`.
pub fn display_gaussian(z: &Gaussian) -> String {
    let re_zero = z.re.is_zero();
    let im_zero = z.im.is_zero();
    if re_zero && im_zero {
        return "0".to_string();
    }
    let mut out = String::new();
    if !re_zero {
        out.push_str(&z.re.to_string());
    }
    if !im_zero {
        if !re_zero && z.im >= Rational::zero() {
            out.push('+');
        }
        if z.im == Rational::one() {
            out.push('i');
        } else if z.im == -Rational::one() {
            out.push_str("-i");
        } else {
            out.push_str(&z.im.to_string());
            out.push('i');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_exactly() {
        let a = gauss(1, 3, -2, 5);
        let b = gauss(7, 2, 1, 1);
        let c = gauss(-4, 9, 3, 7);
        assert_eq!(
            (a.clone() * b.clone()) * c.clone(),
            a.clone() * (b.clone() * c.clone())
        );
        assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        let inv = Gaussian::one() / a.clone();
        assert_eq!(a * inv, Gaussian::one());
    }

    #[test]
    fn conjugation_is_an_involution_and_multiplicative() {
        let a = gauss(2, 7, -5, 3);
        let b = gauss(0, 1, 4, 11);
        assert_eq!(Scalar::conj(&Scalar::conj(&a)), a);
        assert_eq!(
            Scalar::conj(&(a.clone() * b.clone())),
            Scalar::conj(&a) * Scalar::conj(&b)
        );
    }

    #[test]
    fn display_round_trips_simple_values() {
        assert_eq!(display_gaussian(&gint(0)), "0");
        assert_eq!(display_gaussian(&gq(3, 2)), "3/2");
        assert_eq!(display_gaussian(&gi()), "i");
        assert_eq!(display_gaussian(&gauss(1, 2, 3, 4)), "1/2+3/4i");
        assert_eq!(display_gaussian(&gauss(0, 1, -1, 1)), "-i");
    }
}
