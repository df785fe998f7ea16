//! Differential operators between density spaces.
//!
//! An operator from weight `λ` densities to weight `μ` densities is stored
//! in the form `A = Σᵢ aᵢ·D̄^i` with superfunction coefficients (ascending
//! powers). Since `D̄² = −∂x`, every polynomial differential operator in
//! `∂x, ∂ξ` with superfunction coefficients has a unique such expansion.
//! The supersymmetric order of `aD̄^k` is `k/2`.
//!
//! Composition uses the graded push-through rule
//! `D̄ ∘ (b·) = D̄(b)· + σ(b)·D̄` where `σ` is the grading involution.

use crate::contact::{ContactField, Density};
use crate::error::CalcError;
use crate::rat::{rint, Rat};
use crate::superfunc::{koszul_sign, Parity, SuperFunction};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// `Σᵢ aᵢ·D̄^i : F_λ → F_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    coeffs: Vec<SuperFunction>,
    lambda: Rat,
    mu: Rat,
}

impl DiffOperator {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<SuperFunction>, lambda: Rat, mu: Rat) -> Self {
        while coeffs.last().is_some_and(SuperFunction::is_zero) {
            coeffs.pop();
        }
        DiffOperator { coeffs, lambda, mu }
    }

    pub fn zero(lambda: Rat, mu: Rat) -> Self {
        DiffOperator::new(Vec::new(), lambda, mu)
    }

    pub fn identity(weight: Rat) -> Self {
        DiffOperator::new(vec![SuperFunction::one()], weight.clone(), weight)
    }

    /// `a·D̄^k`.
    pub fn monomial_op(a: SuperFunction, k: usize, lambda: Rat, mu: Rat) -> Self {
        let mut coeffs = vec![SuperFunction::zero(); k + 1];
        coeffs[k] = a;
        DiffOperator::new(coeffs, lambda, mu)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn source_weight(&self) -> &Rat {
        &self.lambda
    }

    pub fn target_weight(&self) -> &Rat {
        &self.mu
    }

    /// Ascending coefficients `a₀, a₁, …` (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[SuperFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SuperFunction {
        self.coeffs.get(i).cloned().unwrap_or_else(SuperFunction::zero)
    }

    /// Index of the top nonzero coefficient.
    pub fn order_index(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Supersymmetric order `m/2` where `m` is the top `D̄`-power.
    pub fn order(&self) -> Option<Rat> {
        self.order_index().map(|m| Rat::new(m.into(), 2.into()))
    }

    /// Top coefficient as a density of weight `μ − λ − m/2`.
    pub fn principal_symbol(&self) -> Result<Density, CalcError> {
        let m = self.order_index().ok_or(CalcError::ZeroOperator)?;
        let weight = &self.mu - &self.lambda - Rat::new(m.into(), 2.into());
        Ok(Density::new(self.coeffs[m].clone(), weight))
    }

    /// Apply to a density of the source weight.
    pub fn apply(&self, f: &Density) -> Result<Density, CalcError> {
        if f.weight() != &self.lambda {
            return Err(CalcError::WeightMismatch {
                expected: self.lambda.clone(),
                found: f.weight().clone(),
            });
        }
        Ok(Density::new(self.apply_value(f.value()), self.mu.clone()))
    }

    /// Apply to a bare superfunction (weights ignored).
    pub fn apply_value(&self, f: &SuperFunction) -> SuperFunction {
        let mut acc = SuperFunction::zero();
        let mut df = f.clone();
        for a in &self.coeffs {
            acc = acc + a * &df;
            df = df.dbar();
        }
        acc
    }

    /// `self ∘ other` (apply `other` first); requires matching middle weight.
    pub fn compose(&self, other: &DiffOperator) -> Result<DiffOperator, CalcError> {
        if other.mu != self.lambda {
            return Err(CalcError::WeightMismatch {
                expected: self.lambda.clone(),
                found: other.mu.clone(),
            });
        }
        Ok(DiffOperator::new(
            compose_coeffs(&self.coeffs, &other.coeffs),
            other.lambda.clone(),
            self.mu.clone(),
        ))
    }

    pub fn try_add(&self, other: &DiffOperator) -> Result<DiffOperator, CalcError> {
        if self.lambda != other.lambda {
            return Err(CalcError::WeightMismatch {
                expected: self.lambda.clone(),
                found: other.lambda.clone(),
            });
        }
        if self.mu != other.mu {
            return Err(CalcError::WeightMismatch {
                expected: self.mu.clone(),
                found: other.mu.clone(),
            });
        }
        Ok(self + other)
    }

    pub fn scale(&self, s: &Rat) -> DiffOperator {
        DiffOperator::new(
            self.coeffs.iter().map(|c| c.scale(s)).collect(),
            self.lambda.clone(),
            self.mu.clone(),
        )
    }

    /// Operator parity: `p(aᵢD̄^i) = p(aᵢ) + i`.
    pub fn parity(&self) -> Parity {
        let (e, o) = self.parity_parts();
        match (e.is_zero(), o.is_zero()) {
            (_, true) => Parity::Even,
            (true, false) => Parity::Odd,
            (false, false) => Parity::Mixed,
        }
    }

    /// `(even part, odd part)`: the even part keeps, in `aᵢ`, the component
    /// whose parity matches `i mod 2`.
    pub fn parity_parts(&self) -> (DiffOperator, DiffOperator) {
        let mut even = Vec::with_capacity(self.coeffs.len());
        let mut odd = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            let (ae, ao) = a.homogeneous_split();
            if i % 2 == 0 {
                even.push(ae);
                odd.push(ao);
            } else {
                even.push(ao);
                odd.push(ae);
            }
        }
        (
            DiffOperator::new(even, self.lambda.clone(), self.mu.clone()),
            DiffOperator::new(odd, self.lambda.clone(), self.mu.clone()),
        )
    }

    /// Module action of a contact field:
    /// `𝓛_{X_h}(A) = L^μ_{X_h} ∘ A − (−1)^{p(h)p(A)} A ∘ L^λ_{X_h}`,
    /// extended bilinearly from homogeneous `h` and `A`.
    pub fn lie_action(&self, h: &ContactField) -> DiffOperator {
        let mut out = DiffOperator::zero(self.lambda.clone(), self.mu.clone());
        let (he, ho) = h.hamiltonian().homogeneous_split();
        let (ae, ao) = self.parity_parts();
        for (hp, p) in [(&he, 0u32), (&ho, 1)] {
            if hp.is_zero() {
                continue;
            }
            let field = ContactField::new(hp.clone());
            let l_mu = lie_operator(&field, &self.mu);
            let l_lambda = lie_operator(&field, &self.lambda);
            for (ap, q) in [(&ae, 0u32), (&ao, 1)] {
                if ap.is_zero() {
                    continue;
                }
                let sign = koszul_sign(p * q);
                let term = &l_mu.compose(ap).expect("weights match by construction")
                    - &ap.compose(&l_lambda).expect("weights match by construction").scale(&sign);
                out = &out + &term;
            }
        }
        out
    }

    /// Adjoint with respect to the pairing of `F_λ` with `F_{½−λ}`:
    /// `(a·D̄^k)* = (−1)^{p(a)k + ⌊(k+1)/2⌋} D̄^k ∘ (a·)`, sending an
    /// operator `F_λ → F_μ` to one `F_{½−μ} → F_{½−λ}`.
    pub fn conjugate(&self) -> DiffOperator {
        let half = Rat::new(1.into(), 2.into());
        let lambda = &half - &self.mu;
        let mu = &half - &self.lambda;
        let mut acc = vec![SuperFunction::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            let (ae, ao) = a.homogeneous_split();
            for (part, pi) in [(&ae, 0u32), (&ao, 1)] {
                if part.is_zero() {
                    continue;
                }
                let sign = koszul_sign(pi * (k as u32) + ((k as u32 + 1) / 2));
                let mut mid = vec![part.scale(&sign)];
                for _ in 0..k {
                    mid = dbar_compose(&mid);
                }
                for (n, c) in mid.iter().enumerate() {
                    acc[n] = &acc[n] + c;
                }
            }
        }
        DiffOperator::new(acc, lambda, mu)
    }

    /// Rewrite in the `D`-basis, `Σ bᵢ·D^i`.
    pub fn to_d_basis(&self) -> DBasisOperator {
        DBasisOperator {
            coeffs: convert_basis(&self.coeffs),
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
        }
    }
}

impl Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        assert_eq!(self.lambda, rhs.lambda, "operator sum: source weights differ");
        assert_eq!(self.mu, rhs.mu, "operator sum: target weights differ");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        DiffOperator::new(coeffs, self.lambda.clone(), self.mu.clone())
    }
}

impl Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        self + &-rhs
    }
}

impl Neg for &DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        self.scale(&rint(-1))
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_operator(&self.coeffs, "Dbar"))
    }
}

/// The same operator expanded in powers of `D` instead of `D̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBasisOperator {
    coeffs: Vec<SuperFunction>,
    lambda: Rat,
    mu: Rat,
}

impl DBasisOperator {
    pub fn new(mut coeffs: Vec<SuperFunction>, lambda: Rat, mu: Rat) -> Self {
        while coeffs.last().is_some_and(SuperFunction::is_zero) {
            coeffs.pop();
        }
        DBasisOperator { coeffs, lambda, mu }
    }

    pub fn coeffs(&self) -> &[SuperFunction] {
        &self.coeffs
    }

    pub fn source_weight(&self) -> &Rat {
        &self.lambda
    }

    pub fn target_weight(&self) -> &Rat {
        &self.mu
    }

    pub fn apply_value(&self, f: &SuperFunction) -> SuperFunction {
        let mut acc = SuperFunction::zero();
        let mut df = f.clone();
        for a in &self.coeffs {
            acc = acc + a * &df;
            df = df.d();
        }
        acc
    }

    /// Rewrite back in the `D̄`-basis.
    pub fn to_dbar_basis(&self) -> DiffOperator {
        DiffOperator::new(convert_basis(&self.coeffs), self.lambda.clone(), self.mu.clone())
    }
}

impl fmt::Display for DBasisOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_operator(&self.coeffs, "D"))
    }
}

/// Lie derivative of weight `ν` densities along `X_h`, as the operator
/// `ν·h′ + ½D(h)·D̄ − h·D̄²` on `F_ν`.
pub fn lie_operator(h: &ContactField, weight: &Rat) -> DiffOperator {
    let ham = h.hamiltonian();
    let half = Rat::new(1.into(), 2.into());
    DiffOperator::new(
        vec![ham.partial_x().scale(weight), ham.d().scale(&half), -ham],
        weight.clone(),
        weight.clone(),
    )
}

/// `D̄ ∘ (Σ cᵢD̄^i)` as coefficient lists: `cᵢ ↦ D̄(cᵢ)D̄^i + σ(cᵢ)D̄^{i+1}`.
fn dbar_compose(coeffs: &[SuperFunction]) -> Vec<SuperFunction> {
    let mut out = vec![SuperFunction::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i] = &out[i] + &c.dbar();
        out[i + 1] = &out[i + 1] + &c.sigma();
    }
    out
}

/// Composition of two `D̄`-basis coefficient lists, weights left to the
/// caller: `(Σ aᵢD̄^i) ∘ (Σ bⱼD̄^j)` pushed back into normal form.
pub(crate) fn compose_coeffs(
    lhs: &[SuperFunction],
    rhs: &[SuperFunction],
) -> Vec<SuperFunction> {
    let mut acc = vec![SuperFunction::zero(); lhs.len() + rhs.len() + 1];
    for (i, a) in lhs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in rhs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            // D̄^i ∘ (b·) expanded to Σ cₙ·D̄^n, then shifted by j and
            // multiplied by a on the left.
            let mut mid = vec![b.clone()];
            for _ in 0..i {
                mid = dbar_compose(&mid);
            }
            for (n, c) in mid.iter().enumerate() {
                acc[n + j] = &acc[n + j] + &(a * c);
            }
        }
    }
    acc
}

/// Change of basis between `D̄`-expansions and `D`-expansions. The rule is
/// its own inverse: even powers pick up `(−1)^{i/2}`, odd powers map to
/// `(−1)^{(i−1)/2}(c·D^i − 2(cξ)·D^{i+1})`.
fn convert_basis(coeffs: &[SuperFunction]) -> Vec<SuperFunction> {
    let mut out = vec![SuperFunction::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i % 2 == 0 {
            let s = koszul_sign((i / 2) as u32);
            out[i] = &out[i] + &c.scale(&s);
        } else {
            let s = koszul_sign(((i - 1) / 2) as u32);
            out[i] = &out[i] + &c.scale(&s);
            let cross = (c * &SuperFunction::xi()).scale(&(rint(-2) * &s));
            out[i + 1] = &out[i + 1] + &cross;
        }
    }
    while out.last().is_some_and(SuperFunction::is_zero) {
        out.pop();
    }
    out
}

/// Render `Σ cᵢ·name^i` with powers descending; multi-term coefficients are
/// parenthesized, single monomials carry their sign out front.
fn format_operator(coeffs: &[SuperFunction], name: &str) -> String {
    let mut rendered: Vec<(bool, String)> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match i {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{i}"),
        };
        let s = c.to_string();
        let multi_term = s.contains(' ');
        let (negative, body) = if multi_term {
            (false, format!("({s})"))
        } else if let Some(stripped) = s.strip_prefix('-') {
            (true, stripped.to_string())
        } else {
            (false, s)
        };
        let term = if power.is_empty() {
            body
        } else if body == "1" {
            power
        } else {
            format!("{body}*{power}")
        };
        rendered.push((negative, term));
    }
    if rendered.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (negative, body)) in rendered.iter().enumerate() {
        if i == 0 {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(if *negative { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Reconstruct the operator of order index at most `max_index` realizing a
/// linear action on superfunctions, then cross-check it on extra monomials.
/// The probes `1, ξ, x, xξ, x², …` make the system triangular because
/// `D̄^j(eⱼ)` is the constant `(−1)^{⌊j/2⌋}⌊j/2⌋!` and `D̄^i(eⱼ) = 0` for
/// `i > j`.
pub fn operator_from_action<F>(
    action: F,
    max_index: usize,
    lambda: Rat,
    mu: Rat,
) -> Result<DiffOperator, CalcError>
where
    F: Fn(&SuperFunction) -> SuperFunction,
{
    let probe = |j: usize| SuperFunction::monomial(rint(1), j / 2, j % 2 == 1);
    let mut coeffs: Vec<SuperFunction> = Vec::with_capacity(max_index + 1);
    for j in 0..=max_index {
        let e = probe(j);
        let mut r = action(&e);
        for (i, a) in coeffs.iter().enumerate() {
            r = r - a * &e.dbar_pow(i);
        }
        let denom = e.dbar_pow(j);
        let constant = denom.even_coeff().coeff(0);
        r = r.scale(&constant.recip());
        coeffs.push(r);
    }
    let op = DiffOperator::new(coeffs, lambda, mu);
    for j in 0..=(2 * max_index + 6) {
        let e = probe(j);
        if op.apply_value(&e) != action(&e) {
            return Err(CalcError::NotAnOperator { max_order: max_index });
        }
    }
    Ok(op)
}
