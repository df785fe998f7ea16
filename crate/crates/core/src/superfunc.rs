//! Functions on the supercircle.
//!
//! An element is `f(x, ξ) = f₀(x) + ξ·f₁(x)` with polynomial components and
//! `ξ² = 0`. The even part is `f₀`, the odd part is `ξ·f₁`; multiplication
//! is supercommutative (odd·odd products vanish because they carry `ξ²`).
//!
//! The two odd derivations of the contact calculus live here:
//! `D = ∂ξ + ξ∂x` and `D̄ = ∂ξ − ξ∂x`, with `D² = ∂x`, `D̄² = −∂x` and
//! `DD̄ + D̄D = 0`.

use crate::poly::Poly;
use crate::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Homogeneity of a superfunction under the ℤ₂-grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// ℤ₂-degree: 0 for even, 1 for odd, `None` for inhomogeneous elements
    /// (split those first).
    pub fn degree(self) -> Option<u8> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }
}

/// `(−1)^e` as a rational, for Koszul signs.
pub fn koszul_sign(e: u32) -> Rat {
    if e % 2 == 0 {
        crate::rat::rint(1)
    } else {
        crate::rat::rint(-1)
    }
}

/// `f₀(x) + ξ·f₁(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct SuperFunction {
    /// `f₀`
    even: Poly,
    /// `f₁` (the polynomial multiplying ξ)
    odd: Poly,
}

impl SuperFunction {
    pub fn new(even: Poly, odd: Poly) -> Self {
        SuperFunction { even, odd }
    }

    /// Purely even element `f₀(x)`.
    pub fn from_even(even: Poly) -> Self {
        SuperFunction { even, odd: Poly::zero() }
    }

    /// Purely odd element `ξ·f₁(x)`.
    pub fn from_odd(odd: Poly) -> Self {
        SuperFunction { even: Poly::zero(), odd }
    }

    pub fn zero() -> Self {
        SuperFunction::default()
    }

    pub fn one() -> Self {
        SuperFunction::from_even(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        SuperFunction::from_even(Poly::constant(c))
    }

    pub fn x() -> Self {
        SuperFunction::from_even(Poly::x())
    }

    pub fn xi() -> Self {
        SuperFunction::from_odd(Poly::one())
    }

    /// `c·x^p` or `c·ξx^p` depending on `odd`.
    pub fn monomial(c: Rat, p: usize, odd: bool) -> Self {
        let poly = Poly::monomial(c, p);
        if odd {
            SuperFunction::from_odd(poly)
        } else {
            SuperFunction::from_even(poly)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// `f₀`.
    pub fn even_coeff(&self) -> &Poly {
        &self.even
    }

    /// `f₁`.
    pub fn odd_coeff(&self) -> &Poly {
        &self.odd
    }

    /// Parity of the element; zero counts as even.
    pub fn parity(&self) -> Parity {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => Parity::Even,
            (true, false) => Parity::Odd,
            (false, false) => Parity::Mixed,
        }
    }

    /// `(f₀, ξf₁)` — the homogeneous components, both as superfunctions.
    pub fn homogeneous_split(&self) -> (SuperFunction, SuperFunction) {
        (
            SuperFunction::from_even(self.even.clone()),
            SuperFunction::from_odd(self.odd.clone()),
        )
    }

    /// Grading involution `σ(f) = f₀ − ξf₁` (even part fixed, odd negated).
    pub fn sigma(&self) -> SuperFunction {
        SuperFunction::new(self.even.clone(), -&self.odd)
    }

    /// `∂x f = f₀′ + ξf₁′`.
    pub fn partial_x(&self) -> SuperFunction {
        SuperFunction::new(self.even.derivative(), self.odd.derivative())
    }

    /// Left derivative `∂ξ f = f₁`.
    pub fn partial_xi(&self) -> SuperFunction {
        SuperFunction::from_even(self.odd.clone())
    }

    /// `D(f) = f₁ + ξf₀′` where `D = ∂ξ + ξ∂x`.
    pub fn d(&self) -> SuperFunction {
        SuperFunction::new(self.odd.clone(), self.even.derivative())
    }

    /// `D̄(f) = f₁ − ξf₀′` where `D̄ = ∂ξ − ξ∂x`.
    pub fn dbar(&self) -> SuperFunction {
        SuperFunction::new(self.odd.clone(), -&self.even.derivative())
    }

    /// `D^n(f)`.
    pub fn d_pow(&self, n: usize) -> SuperFunction {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.d();
        }
        out
    }

    /// `D̄^n(f)`.
    pub fn dbar_pow(&self, n: usize) -> SuperFunction {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.dbar();
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> SuperFunction {
        SuperFunction::new(self.even.scale(s), self.odd.scale(s))
    }
}

impl fmt::Display for SuperFunction {
    /// Canonical, re-parseable form: even terms ascending in `x`, then odd
    /// terms ascending in `x`, joined with explicit signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = display_terms(self);
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (negative, body)) in terms.iter().enumerate() {
            if i == 0 {
                if *negative {
                    out.push('-');
                }
            } else {
                out.push_str(if *negative { " - " } else { " + " });
            }
            out.push_str(body);
        }
        write!(f, "{out}")
    }
}

/// Term list for display: `(is_negative, rendered_magnitude)` per monomial.
fn display_terms(sf: &SuperFunction) -> Vec<(bool, String)> {
    use num_traits::Signed;
    let mut terms = Vec::new();
    let mut push = |c: &Rat, p: usize, odd: bool| {
        if num_traits::Zero::is_zero(c) {
            return;
        }
        let mag = c.abs();
        let mut parts = Vec::new();
        let coeff_is_one = num_traits::One::is_one(&mag);
        if !coeff_is_one || (p == 0 && !odd) {
            parts.push(mag.to_string());
        }
        match p {
            0 => {}
            1 => parts.push("x".into()),
            _ => parts.push(format!("x^{p}")),
        }
        if odd {
            parts.push("xi".into());
        }
        terms.push((c.is_negative(), parts.join("*")));
    };
    for (p, c) in sf.even.coeffs().iter().enumerate() {
        push(c, p, false);
    }
    for (p, c) in sf.odd.coeffs().iter().enumerate() {
        push(c, p, true);
    }
    terms
}

// ---- arithmetic ----

impl Add for &SuperFunction {
    type Output = SuperFunction;
    fn add(self, rhs: &SuperFunction) -> SuperFunction {
        SuperFunction::new(&self.even + &rhs.even, &self.odd + &rhs.odd)
    }
}

impl Sub for &SuperFunction {
    type Output = SuperFunction;
    fn sub(self, rhs: &SuperFunction) -> SuperFunction {
        SuperFunction::new(&self.even - &rhs.even, &self.odd - &rhs.odd)
    }
}

/// Supercommutative product:
/// `(f₀ + ξf₁)(g₀ + ξg₁) = f₀g₀ + ξ(f₀g₁ + f₁g₀)` — the `ξf₁·ξg₁` term
/// carries `ξ² = 0`.
impl Mul for &SuperFunction {
    type Output = SuperFunction;
    fn mul(self, rhs: &SuperFunction) -> SuperFunction {
        SuperFunction::new(
            &self.even * &rhs.even,
            &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even),
        )
    }
}

impl Neg for &SuperFunction {
    type Output = SuperFunction;
    fn neg(self) -> SuperFunction {
        SuperFunction::new(-&self.even, -&self.odd)
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SuperFunction {
            type Output = SuperFunction;
            fn $method(self, rhs: SuperFunction) -> SuperFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SuperFunction> for SuperFunction {
            type Output = SuperFunction;
            fn $method(self, rhs: &SuperFunction) -> SuperFunction {
                (&self).$method(rhs)
            }
        }
    };
}
forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for SuperFunction {
    type Output = SuperFunction;
    fn neg(self) -> SuperFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn ev(cs: &[i64]) -> SuperFunction {
        SuperFunction::from_even(Poly::new(cs.iter().map(|&c| rint(c)).collect()))
    }

    fn od(cs: &[i64]) -> SuperFunction {
        SuperFunction::from_odd(Poly::new(cs.iter().map(|&c| rint(c)).collect()))
    }

    #[test]
    fn product_kills_xi_squared() {
        // (1 + ξx)(1 + ξ) = 1 + ξ(1 + x)
        let lhs = (ev(&[1]) + od(&[0, 1])) * (ev(&[1]) + od(&[1]));
        assert_eq!(lhs, ev(&[1]) + od(&[1, 1]));
        // ξ·ξ = 0
        assert!((SuperFunction::xi() * SuperFunction::xi()).is_zero());
    }

    #[test]
    fn derivations_on_monomials() {
        // D(x²) = 2xξ
        assert_eq!(ev(&[0, 0, 1]).d(), od(&[0, 2]));
        // D̄(ξx²) = x²
        assert_eq!(od(&[0, 0, 1]).dbar(), ev(&[0, 0, 1]));
        // D(ξ) = 1, D̄(x) = −ξ
        assert_eq!(SuperFunction::xi().d(), SuperFunction::one());
        assert_eq!(SuperFunction::x().dbar(), -SuperFunction::xi());
    }

    #[test]
    fn derivation_squares_and_anticommutator() {
        for f in samples() {
            assert_eq!(f.d().d(), f.partial_x(), "D² = ∂x on {f}");
            assert_eq!(f.dbar().dbar(), -f.partial_x(), "D̄² = −∂x on {f}");
            assert!((f.d().dbar() + f.dbar().d()).is_zero(), "DD̄+D̄D = 0 on {f}");
            let twisted = f.d() - (SuperFunction::xi() * f.partial_x()).scale(&rint(2));
            assert_eq!(f.dbar(), twisted, "D̄ = D − 2ξ∂x on {f}");
        }
    }

    #[test]
    fn graded_leibniz_for_d_and_dbar() {
        // D(fg) = D(f)g + (−1)^{p(f)} f D(g) on homogeneous f.
        for f in samples() {
            for g in samples() {
                if f.parity() == Parity::Mixed {
                    continue;
                }
                let sign = if f.parity() == Parity::Odd { rint(-1) } else { rint(1) };
                let product = &f * &g;
                assert_eq!(product.d(), &f.d() * &g + (&f * &g.d()).scale(&sign));
                assert_eq!(product.dbar(), &f.dbar() * &g + (&f * &g.dbar()).scale(&sign));
            }
        }
    }

    #[test]
    fn sigma_is_the_grading_involution() {
        let f = ev(&[1, 2]) + od(&[3]);
        assert_eq!(f.sigma(), ev(&[1, 2]) - od(&[3]));
        assert_eq!(f.sigma().sigma(), f);
        // σ is an algebra automorphism
        let g = ev(&[0, 1]) + od(&[0, 5]);
        assert_eq!((&f * &g).sigma(), &f.sigma() * &g.sigma());
    }

    #[test]
    fn parity_and_split() {
        let f = ev(&[1]) + od(&[0, 2]);
        assert_eq!(f.parity(), Parity::Mixed);
        let (e, o) = f.homogeneous_split();
        assert_eq!(e.parity(), Parity::Even);
        assert_eq!(o.parity(), Parity::Odd);
        assert_eq!(e + o, f);
        assert_eq!(SuperFunction::zero().parity(), Parity::Even);
    }

    #[test]
    fn display_is_canonical() {
        let f = ev(&[1, 0, -2]) + od(&[0, 1]).scale(&rat(3, 2));
        assert_eq!(f.to_string(), "1 - 2*x^2 + 3/2*x*xi");
        assert_eq!(SuperFunction::zero().to_string(), "0");
        assert_eq!((-SuperFunction::xi()).to_string(), "-xi");
    }

    fn samples() -> Vec<SuperFunction> {
        vec![
            SuperFunction::one(),
            SuperFunction::x(),
            SuperFunction::xi(),
            ev(&[0, 0, 1]),
            od(&[0, 1]),
            ev(&[1, -1]) + od(&[2, 0, 1]),
            ev(&[0, 0, 0, 1]).scale(&rat(1, 3)) + od(&[0, 0, 5]),
        ]
    }
}
