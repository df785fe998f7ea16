//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The representation is canonical — the zero
//! polynomial is the empty vector and a nonzero polynomial never carries a
//! trailing zero — so structural equality is mathematical equality.

use crate::rat::{rint, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `x` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rint(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::monomial(rint(1), 1)
    }

    /// The monomial `c·x^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// d/dx.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rint(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

// ---- arithmetic ----

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rint(c)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(Poly::new(vec![rint(1), rint(0), rint(0)]), p(&[1]));
        assert!(Poly::new(vec![rint(0); 3]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[7]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn arithmetic_smoke() {
        // (1 + x)(1 − x) = 1 − x²
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2, 3]), p(&[1, 0, 3]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), Poly::zero());
        assert_eq!(-&p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn derivative_rules() {
        // (x³ + 2x)' = 3x² + 2
        assert_eq!(p(&[0, 2, 0, 1]).derivative(), p(&[2, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Poly::zero());
        // product rule on a sample
        let (f, g) = (p(&[1, 3, 1]), p(&[0, 0, 2]));
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scale_and_display() {
        assert_eq!(p(&[2, 4]).scale(&rat(1, 2)), p(&[1, 2]));
        assert_eq!(p(&[0, 1, 0, -2]).to_string(), "1*x + -2*x^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
