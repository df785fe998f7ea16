//! Contact vector fields and weighted densities on the supercircle.
//!
//! Every vector field preserving the contact structure has the form
//! `X_h = h∂x + ½D(h)·(∂ξ − ξ∂x)` for a superfunction Hamiltonian `h`;
//! equivalently `X_h = −h·D̄² + ½D(h)·D̄` as an operator. The map `h ↦ X_h`
//! is a Lie-superalgebra isomorphism onto the contact fields, with bracket
//! the weight `−1` case of the Poisson bracket on densities implemented
//! below.
//!
//! A density of weight `λ` is written `f·α^λ`; contact fields act on them by
//! `L_{X_h} f = X_h(f) + λ h′ f`.

use crate::error::CalcError;
use crate::rat::{format_rat, rat, rint, Rat};
use crate::superfunc::{koszul_sign, Parity, SuperFunction};
use std::fmt;
use std::ops::{Add, Neg, Sub};

// ---------------------------------------------------------------------------
// Vector fields
// ---------------------------------------------------------------------------

/// General vector field `a·∂x + b·∂ξ` with superfunction coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VectorField {
    a: SuperFunction,
    b: SuperFunction,
}

impl VectorField {
    pub fn new(a: SuperFunction, b: SuperFunction) -> Self {
        VectorField { a, b }
    }

    pub fn zero() -> Self {
        VectorField::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Coefficient of `∂x`.
    pub fn dx_coeff(&self) -> &SuperFunction {
        &self.a
    }

    /// Coefficient of `∂ξ`.
    pub fn dxi_coeff(&self) -> &SuperFunction {
        &self.b
    }

    /// Apply to a superfunction: `X(f) = a·∂x(f) + b·∂ξ(f)`.
    pub fn apply(&self, f: &SuperFunction) -> SuperFunction {
        &self.a * &f.partial_x() + &self.b * &f.partial_xi()
    }

    /// Parity as an operator: even fields keep the grading of their argument
    /// (`∂x` is even, `∂ξ` is odd, so an even field has even `a`, odd `b`).
    pub fn parity(&self) -> Parity {
        let even_part_zero = self.a.even_coeff().is_zero() && self.b.odd_coeff().is_zero();
        let odd_part_zero = self.a.odd_coeff().is_zero() && self.b.even_coeff().is_zero();
        match (even_part_zero, odd_part_zero) {
            (_, true) => Parity::Even,
            (true, false) => Parity::Odd,
            (false, false) => Parity::Mixed,
        }
    }

    /// `(even field, odd field)` with `self = even + odd`.
    pub fn homogeneous_parts(&self) -> (VectorField, VectorField) {
        let (a_even, a_odd) = self.a.homogeneous_split();
        let (b_even, b_odd) = self.b.homogeneous_split();
        (VectorField::new(a_even, b_odd), VectorField::new(a_odd, b_even))
    }

    /// Super Lie bracket `[X, Y] = X∘Y − (−1)^{p(X)p(Y)} Y∘X`, extended
    /// bilinearly from homogeneous parts. In components, for homogeneous
    /// `X = a∂x + b∂ξ`, `Y = c∂x + d∂ξ`:
    /// `[X,Y] = (X(c) − (−1)^{pq}Y(a))∂x + (X(d) − (−1)^{pq}Y(b))∂ξ`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        let mut out = VectorField::zero();
        let (se, so) = self.homogeneous_parts();
        let (oe, oo) = other.homogeneous_parts();
        for (x, p) in [(&se, 0u32), (&so, 1)] {
            for (y, q) in [(&oe, 0u32), (&oo, 1)] {
                let sign = koszul_sign(p * q);
                let a = x.apply(&y.a) - y.apply(&x.a).scale(&sign);
                let b = x.apply(&y.b) - y.apply(&x.b).scale(&sign);
                out = &out + &VectorField::new(a, b);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> VectorField {
        VectorField::new(self.a.scale(s), self.b.scale(s))
    }

    /// The field `g·D̄ = −(gξ)·∂x + g·∂ξ`.
    pub fn dbar_multiple(g: &SuperFunction) -> VectorField {
        VectorField::new(-(g * &SuperFunction::xi()), g.clone())
    }

    /// Split off the contact part: returns `(h, g)` with
    /// `self = X_h + g·D̄`, where `h = a + ξ·b`. The decomposition is unique.
    pub fn contact_split(&self) -> (SuperFunction, SuperFunction) {
        let h = &self.a + &(&SuperFunction::xi() * &self.b);
        let g = &self.b - &ContactField::new(h.clone()).vector_field().b;
        (h, g)
    }

    /// True when the field preserves the contact structure, i.e. equals
    /// `X_h` for some Hamiltonian `h`.
    pub fn is_contact(&self) -> bool {
        self.contact_split().1.is_zero()
    }

    /// The Hamiltonian, when the field is contact.
    pub fn hamiltonian(&self) -> Option<SuperFunction> {
        let (h, g) = self.contact_split();
        g.is_zero().then_some(h)
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(-&self.a, -&self.b)
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) d/dx + ({}) d/dxi", self.a, self.b)
    }
}

// ---------------------------------------------------------------------------
// Contact fields
// ---------------------------------------------------------------------------

/// The contact field `X_h`, stored by its Hamiltonian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactField {
    h: SuperFunction,
}

impl ContactField {
    pub fn new(h: SuperFunction) -> Self {
        ContactField { h }
    }

    pub fn hamiltonian(&self) -> &SuperFunction {
        &self.h
    }

    /// Parity of `X_h` as an operator equals the parity of `h`.
    pub fn parity(&self) -> Parity {
        self.h.parity()
    }

    /// `X_h = (h − ½ξ·h₁)·∂x + ½D(h)·∂ξ` in components.
    pub fn vector_field(&self) -> VectorField {
        let dh = self.h.d();
        let half = rat(1, 2);
        let a = &self.h - &(&dh * &SuperFunction::xi()).scale(&half);
        VectorField::new(a, dh.scale(&half))
    }

    /// `X_h(f) = h·∂x(f) + ½D(h)·D̄(f)`.
    pub fn apply(&self, f: &SuperFunction) -> SuperFunction {
        &self.h * &f.partial_x() + (&self.h.d() * &f.dbar()).scale(&rat(1, 2))
    }

    /// Lie derivative on a weighted density:
    /// `L_{X_h}(f·α^λ) = (X_h(f) + λ·h′·f)·α^λ`.
    pub fn lie_derivative(&self, density: &Density) -> Density {
        let transport = self.apply(&density.value);
        let weight_term = (&self.h.partial_x() * &density.value).scale(&density.weight);
        Density::new(transport + weight_term, density.weight.clone())
    }

    /// Contact bracket of Hamiltonians, `[X_f, X_g] = X_{bracket}`; this is
    /// the Poisson bracket of two weight `−1` densities.
    pub fn bracket(&self, other: &ContactField) -> ContactField {
        let value = Density::new(self.h.clone(), rint(-1))
            .poisson_bracket(&Density::new(other.h.clone(), rint(-1)));
        ContactField::new(value.value)
    }

    pub fn scale(&self, s: &Rat) -> ContactField {
        ContactField::new(self.h.scale(s))
    }
}

/// Hamiltonians `1, x, x², ξ, xξ` of the fields spanning the conformal
/// subalgebra osp(1|2): translations, scaling, inversions and the two odd
/// generators `½D`, `½xD`.
pub fn osp_basis() -> Vec<ContactField> {
    vec![
        ContactField::new(SuperFunction::one()),
        ContactField::new(SuperFunction::x()),
        ContactField::new(SuperFunction::monomial(rint(1), 2, false)),
        ContactField::new(SuperFunction::xi()),
        ContactField::new(SuperFunction::monomial(rint(1), 1, true)),
    ]
}

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

/// A weighted density `f·α^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density {
    value: SuperFunction,
    weight: Rat,
}

impl Density {
    pub fn new(value: SuperFunction, weight: Rat) -> Self {
        Density { value, weight }
    }

    pub fn value(&self) -> &SuperFunction {
        &self.value
    }

    pub fn weight(&self) -> &Rat {
        &self.weight
    }

    pub fn try_add(&self, other: &Density) -> Result<Density, CalcError> {
        if self.weight != other.weight {
            return Err(CalcError::WeightMismatch {
                expected: self.weight.clone(),
                found: other.weight.clone(),
            });
        }
        Ok(Density::new(&self.value + &other.value, self.weight.clone()))
    }

    pub fn scale(&self, s: &Rat) -> Density {
        Density::new(self.value.scale(s), self.weight.clone())
    }

    /// Poisson bracket of weighted densities,
    /// `{f·α^λ, g·α^μ} = (−λfg′ + μf′g + ½(−1)^{p(f)(p(g)+1)}D(f)D(g))·α^{λ+μ+1}`,
    /// extended bilinearly from homogeneous arguments. At `λ = μ = −1` this
    /// is the contact bracket; at `λ = −1` it reproduces the Lie derivative
    /// on `F_μ`.
    pub fn poisson_bracket(&self, other: &Density) -> Density {
        self.poisson_bracket_signed(other, [-1, 1, 1])
    }

    /// Poisson bracket with the three structural signs left free:
    /// term `i` of `(s₀·λfg′, s₁·μf′g, s₂·½(−1)^{p(f)(p(g)+1)}D(f)D(g))`.
    /// Only one choice of signs makes the bracket contact-invariant; the
    /// others exist so that invariance failures can be demonstrated.
    pub fn poisson_bracket_signed(&self, other: &Density, signs: [i64; 3]) -> Density {
        let lambda = &self.weight;
        let mu = &other.weight;
        let weight = lambda + mu + rint(1);
        let mut value = SuperFunction::zero();
        let (fe, fo) = self.value.homogeneous_split();
        let (ge, go) = other.value.homogeneous_split();
        for (f, pf) in [(&fe, 0u32), (&fo, 1)] {
            for (g, pg) in [(&ge, 0u32), (&go, 1)] {
                let t1 = (f * &g.partial_x()).scale(&(rint(signs[0]) * lambda));
                let t2 = (&f.partial_x() * g).scale(&(rint(signs[1]) * mu));
                let t3 = (&f.d() * &g.d())
                    .scale(&(rat(signs[2], 2) * koszul_sign(pf * (pg + 1))));
                value = value + t1 + t2 + t3;
            }
        }
        Density::new(value, weight)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.value, format_rat(&self.weight))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::rat;

    fn sf(even: &[i64], odd: &[i64]) -> SuperFunction {
        SuperFunction::new(
            Poly::new(even.iter().map(|&c| rint(c)).collect()),
            Poly::new(odd.iter().map(|&c| rint(c)).collect()),
        )
    }

    fn samples() -> Vec<SuperFunction> {
        vec![
            sf(&[1], &[]),
            sf(&[0, 1], &[]),
            sf(&[], &[1]),
            sf(&[0, 0, 1], &[0, 3]),
            sf(&[2, -1], &[1]),
            sf(&[0, 0, 0, 1], &[0, 0, 2]),
        ]
    }

    #[test]
    fn conformal_basis_fields() {
        let xi = SuperFunction::xi;
        let basis = osp_basis();
        let fields: Vec<VectorField> = basis.iter().map(|c| c.vector_field()).collect();
        // X_1 = ∂x
        assert_eq!(fields[0], VectorField::new(sf(&[1], &[]), SuperFunction::zero()));
        // X_x = x∂x + ½ξ∂ξ
        assert_eq!(fields[1], VectorField::new(sf(&[0, 1], &[]), xi().scale(&rat(1, 2))));
        // X_{x²} = x²∂x + xξ∂ξ
        assert_eq!(fields[2], VectorField::new(sf(&[0, 0, 1], &[]), sf(&[], &[0, 1])));
        // X_ξ = ½(ξ∂x + ∂ξ) = ½D
        assert_eq!(
            fields[3],
            VectorField::new(xi().scale(&rat(1, 2)), sf(&[1], &[]).scale(&rat(1, 2)))
        );
        // X_{xξ} = ½(xξ∂x + x∂ξ) = ½xD
        assert_eq!(
            fields[4],
            VectorField::new(sf(&[], &[0, 1]).scale(&rat(1, 2)), sf(&[0, 1], &[]).scale(&rat(1, 2)))
        );
        assert!(fields.iter().all(|x| x.is_contact()));
    }

    #[test]
    fn contact_apply_matches_vector_field_apply() {
        for h in samples() {
            let c = ContactField::new(h);
            let vf = c.vector_field();
            for f in samples() {
                assert_eq!(c.apply(&f), vf.apply(&f));
            }
        }
    }

    #[test]
    fn vf_bracket_is_the_operator_commutator() {
        for x in samples().iter().map(|h| ContactField::new(h.clone()).vector_field()) {
            for y in samples().iter().map(|h| ContactField::new(h.clone()).vector_field()) {
                let lhs = x.bracket(&y);
                // compare against X(Y(f)) − Σ±Y(X(f)) on probe functions,
                // part by part so Koszul signs apply to homogeneous fields
                for f in samples() {
                    let mut rhs = SuperFunction::zero();
                    let (xe, xo) = x.homogeneous_parts();
                    let (ye, yo) = y.homogeneous_parts();
                    for (xp, p) in [(&xe, 0u32), (&xo, 1)] {
                        for (yp, q) in [(&ye, 0u32), (&yo, 1)] {
                            let sign = koszul_sign(p * q);
                            rhs = rhs + xp.apply(&yp.apply(&f))
                                - yp.apply(&xp.apply(&f)).scale(&sign);
                        }
                    }
                    assert_eq!(lhs.apply(&f), rhs);
                }
            }
        }
    }

    #[test]
    fn frozen_bracket_values() {
        let x = ContactField::new(SuperFunction::x());
        let xi = ContactField::new(SuperFunction::xi());
        let x2 = ContactField::new(sf(&[0, 0, 1], &[]));
        let one = ContactField::new(SuperFunction::one());
        // {1, g} = g′
        assert_eq!(one.bracket(&x2).hamiltonian(), &sf(&[0, 2], &[]));
        // {x, ξ} = −ξ/2
        assert_eq!(x.bracket(&xi).hamiltonian(), &SuperFunction::xi().scale(&rat(-1, 2)));
        // {ξ, ξ} = ½
        assert_eq!(xi.bracket(&xi).hamiltonian(), &SuperFunction::constant(rat(1, 2)));
        // {x², x} = −x²
        assert_eq!(x2.bracket(&x).hamiltonian(), &sf(&[0, 0, -1], &[]));
    }

    #[test]
    fn hamiltonian_map_is_a_homomorphism() {
        for f in samples() {
            for g in samples() {
                let cf = ContactField::new(f.clone());
                let cg = ContactField::new(g.clone());
                let lhs = cf.vector_field().bracket(&cg.vector_field());
                let rhs = cf.bracket(&cg).vector_field();
                assert_eq!(lhs, rhs, "[X_f, X_g] != X_{{f,g}} for f={f}, g={g}");
            }
        }
    }

    #[test]
    fn contact_split_oracles() {
        // D = ∂ξ + ξ∂x is X_{2ξ}; D̄ is the pure remainder; ∂x is X_1.
        let d = VectorField::new(SuperFunction::xi(), SuperFunction::one());
        assert_eq!(d.contact_split(), (SuperFunction::xi().scale(&rint(2)), SuperFunction::zero()));
        let dbar = VectorField::new(-SuperFunction::xi(), SuperFunction::one());
        assert_eq!(dbar.contact_split(), (SuperFunction::zero(), SuperFunction::one()));
        let dx = VectorField::new(SuperFunction::one(), SuperFunction::zero());
        assert_eq!(dx.contact_split(), (SuperFunction::one(), SuperFunction::zero()));
        assert!(!dbar.is_contact());
    }

    #[test]
    fn contact_split_reassembles() {
        for a in samples() {
            for b in samples() {
                let x = VectorField::new(a.clone(), b.clone());
                let (h, g) = x.contact_split();
                let rebuilt =
                    &ContactField::new(h).vector_field() + &VectorField::dbar_multiple(&g);
                assert_eq!(rebuilt, x);
            }
        }
    }

    #[test]
    fn lie_derivative_reduces_to_transport_at_weight_zero() {
        let h = ContactField::new(sf(&[0, 0, 1], &[5]));
        for f in samples() {
            let d = Density::new(f.clone(), rint(0));
            assert_eq!(h.lie_derivative(&d).value, h.apply(&f));
        }
    }

    #[test]
    fn poisson_at_weight_minus_one_is_the_lie_derivative() {
        for h in samples() {
            for f in samples() {
                for w in [rint(0), rat(1, 2), rat(-3, 4), rint(2)] {
                    let lhs = Density::new(h.clone(), rint(-1))
                        .poisson_bracket(&Density::new(f.clone(), w.clone()));
                    let rhs = ContactField::new(h.clone())
                        .lie_derivative(&Density::new(f.clone(), w.clone()));
                    assert_eq!(lhs.value, rhs.value);
                    assert_eq!(lhs.weight, rhs.weight + rint(0));
                }
            }
        }
    }

    #[test]
    fn poisson_bracket_is_graded_antisymmetric() {
        let weights = [rat(1, 3), rat(-1, 2)];
        for f in samples() {
            for g in samples() {
                let (fe, fo) = f.homogeneous_split();
                let (ge, go) = g.homogeneous_split();
                for (fp, p) in [(&fe, 0u32), (&fo, 1)] {
                    for (gp, q) in [(&ge, 0u32), (&go, 1)] {
                        let a = Density::new(fp.clone(), weights[0].clone());
                        let b = Density::new(gp.clone(), weights[1].clone());
                        let lhs = a.poisson_bracket(&b);
                        let rhs = b.poisson_bracket(&a).scale(&-koszul_sign(p * q));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn poisson_bracket_is_contact_invariant() {
        // L({F,G}) = {LF, G} + (−1)^{p(h)p(F)} {F, LG} for homogeneous F and
        // Hamiltonians in the conformal basis.
        let weights = [rat(1, 3), rat(-2, 5)];
        for h in osp_basis() {
            let ph = h.parity().degree().unwrap() as u32;
            for f in samples() {
                for g in samples() {
                    let (fe, fo) = f.homogeneous_split();
                    for (fp, pf) in [(&fe, 0u32), (&fo, 1)] {
                        let a = Density::new(fp.clone(), weights[0].clone());
                        let b = Density::new(g.clone(), weights[1].clone());
                        let lhs = h.lie_derivative(&a.poisson_bracket(&b));
                        let rhs = h
                            .lie_derivative(&a)
                            .poisson_bracket(&b)
                            .try_add(&a.poisson_bracket(&h.lie_derivative(&b)).scale(&koszul_sign(ph * pf)))
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        let a = Density::new(SuperFunction::one(), rint(0));
        let b = Density::new(SuperFunction::one(), rat(1, 2));
        assert!(matches!(a.try_add(&b), Err(CalcError::WeightMismatch { .. })));
    }
}
