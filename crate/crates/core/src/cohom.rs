//! Invariant operators and the cohomology of order-lowering defects.
//!
//! For odd `k` the power `D̄^k : F_{(1−k)/4} → F_{(1+k)/4}` is invariant
//! under the conformal subalgebra spanned by the contact fields of
//! `1, x, x², ξ, xξ` (at no weights is it invariant under the full contact
//! algebra). Moving `λ` off the invariant value measures the defect: on the
//! conformal subalgebra
//!
//! `𝓛_{X_h}(D̄^k) = (λ + (k−1)/4)·γ_k(X_h)` on `F_λ → F_{λ+k/2}`,
//!
//! where `γ_k(X_h) = D³(h)·D̄^{k−1} + ((k−1)/2)·D⁴(h)·D̄^{k−2}` is a
//! 1-cocycle of the subalgebra, nonzero only on `x²` and `xξ`. The same
//! cocycle `γ₁` controls the obstruction to splitting operators from
//! symbols at resonant weights. A bounded coboundary search certifies that
//! the classes are not exact.

use crate::contact::{ContactField, Density};
use crate::diffop::{operator_from_action, DiffOperator};
use crate::error::CalcError;
use crate::linalg::LinearSystem;
use crate::rat::{as_positive_integer, rat, rint, Rat};
use crate::superfunc::{koszul_sign, SuperFunction};
use num_traits::Zero;

/// The unique weights `((1−k)/4, (1+k)/4)` making `D̄^k` invariant.
pub fn bol_weights(k: usize) -> (Rat, Rat) {
    (rat(1 - k as i64, 4), rat(1 + k as i64, 4))
}

/// The invariant power `D̄^k` at its weights; only odd orders exist.
pub fn bol_operator(k: usize) -> Result<DiffOperator, CalcError> {
    if k % 2 == 0 {
        return Err(CalcError::EvenOrder { order: k });
    }
    let (lambda, mu) = bol_weights(k);
    Ok(DiffOperator::monomial_op(SuperFunction::one(), k, lambda, mu))
}

/// `γ_k(X_h)` as an operator `F_λ → F_{λ+k/2}` (the cocycle identity holds
/// at the weights of [`bol_weights`]; the formula makes sense at any `λ`).
pub fn gamma_cocycle(k: usize, h: &ContactField, lambda: &Rat) -> DiffOperator {
    assert!(k >= 1, "γ_k needs k ≥ 1");
    let mu = lambda + rat(k as i64, 2);
    let mut coeffs = vec![SuperFunction::zero(); k];
    coeffs[k - 1] = h.hamiltonian().d_pow(3);
    if k >= 2 {
        coeffs[k - 2] = h.hamiltonian().d_pow(4).scale(&rat(k as i64 - 1, 2));
    }
    DiffOperator::new(coeffs, lambda.clone(), mu)
}

/// Homogeneous Hamiltonian probes `x^p` and `x^p·ξ`, `p ≤ max_degree`.
pub fn hamiltonian_monomials(max_degree: usize) -> Vec<ContactField> {
    let mut out = Vec::with_capacity(2 * (max_degree + 1));
    for p in 0..=max_degree {
        out.push(ContactField::new(SuperFunction::monomial(rint(1), p, false)));
        out.push(ContactField::new(SuperFunction::monomial(rint(1), p, true)));
    }
    out
}

/// Verify the graded cocycle identity
/// `𝓛_{X_f}(c(g)) − (−1)^{p(f)p(g)}·𝓛_{X_g}(c(f)) − c({f,g}) = 0`
/// on all pairs drawn from the homogeneous probe fields.
pub fn check_cocycle<F>(cochain: &F, probes: &[ContactField]) -> bool
where
    F: Fn(&ContactField) -> DiffOperator,
{
    for f in probes {
        let pf = f.parity().degree().expect("probes are homogeneous") as u32;
        for g in probes {
            let pg = g.parity().degree().expect("probes are homogeneous") as u32;
            let defect = &(&cochain(g).lie_action(f)
                - &cochain(f).lie_action(g).scale(&koszul_sign(pf * pg)))
                - &cochain(&f.bracket(g));
            if !defect.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Measured comparison between the defect of top-order quantization at a
/// resonant weight pair and the first cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    /// `m = 2(μ−λ)`.
    pub shift: usize,
    /// The measured constant with `defect = scalar·γ₁∘σ^{p(f)}` on the
    /// conformal generators: `λ + (m−1)/4` for odd `m` and `m/4` for even.
    pub scalar: Rat,
    /// True when the defect vanished identically.
    pub vanishes: bool,
    /// True when every generator `X_f` matched `scalar·γ₁(X_f)∘σ^{p(f)}`
    /// exactly, where `σ = 1 − 2ξD̄` is the parity involution.
    pub proportional: bool,
}

/// At resonant weights `μ = λ + m/2`, quantize principal symbols by
/// `τ(a) = a·D̄^m` and measure its equivariance defect
/// `c(X_f)(a) = 𝓛_{X_f}(τ(a)) − τ(X_f·a)` over the conformal generators.
/// The top order cancels; the coefficient at index `m−1`, read as a map
/// from weight-0 densities to weight-½ densities, is reconstructed as an
/// operator and compared with `γ₁(X_f)`. A nonzero class obstructs any
/// equivariant splitting of operators into symbols at these weights.
pub fn obstruction_class(lambda: &Rat, mu: &Rat) -> Result<ObstructionReport, CalcError> {
    let shift = (mu - lambda) * rint(2);
    let Some(m) = as_positive_integer(&shift) else {
        return Err(CalcError::NotResonant { shift });
    };

    let defect_map = |f: &ContactField| -> Result<DiffOperator, CalcError> {
        let act = |a: &SuperFunction| -> SuperFunction {
            let tau_a = DiffOperator::monomial_op(a.clone(), m, lambda.clone(), mu.clone());
            let moved = f.lie_derivative(&Density::new(a.clone(), Rat::zero()));
            let tau_moved =
                DiffOperator::monomial_op(moved.value().clone(), m, lambda.clone(), mu.clone());
            let diff = &tau_a.lie_action(f) - &tau_moved;
            debug_assert!(
                diff.order_index().is_none_or(|i| i < m),
                "top order must cancel in the quantization defect"
            );
            diff.coeff(m - 1)
        };
        operator_from_action(act, 2, Rat::zero(), rat(1, 2))
    };

    // measure the constant on f = x², where γ₁(X_f) = 2ξ
    let x2 = ContactField::new(SuperFunction::monomial(rint(1), 2, false));
    let scalar = defect_map(&x2)?.coeff(0).odd_coeff().coeff(0) / rint(2);

    // on odd generators the defect carries the parity involution σ = 1 − 2ξD̄
    let sigma_twist = DiffOperator::new(
        vec![SuperFunction::one(), SuperFunction::xi().scale(&rat(-2, 1))],
        Rat::zero(),
        Rat::zero(),
    );
    let mut proportional = true;
    let mut vanishes = true;
    for f in crate::contact::osp_basis() {
        let measured = defect_map(&f)?;
        if !measured.is_zero() {
            vanishes = false;
        }
        let mut expected = gamma_cocycle(1, &f, &Rat::zero()).scale(&scalar);
        if f.parity() == crate::superfunc::Parity::Odd {
            expected = expected.compose(&sigma_twist)?;
        }
        if measured != expected {
            proportional = false;
        }
    }
    Ok(ObstructionReport { shift: m, scalar, vanishes, proportional })
}

/// Search for a single operator `A` (coefficients `x^d·ξ^ε`, `d ≤
/// max_degree`, powers `D̄^i`, `i ≤ max_index`, at the weights `(λ, μ)`)
/// whose coboundary `X_f ↦ 𝓛_{X_f}(A)` equals the target cochain on every
/// probe field. `None` means the linear system is contradictory — the
/// target is not a coboundary of this shape.
pub fn coboundary_search<F>(
    target: &F,
    lambda: &Rat,
    mu: &Rat,
    max_degree: usize,
    max_index: usize,
    probes: &[ContactField],
) -> Option<DiffOperator>
where
    F: Fn(&ContactField) -> DiffOperator,
{
    let basis: Vec<SuperFunction> = (0..=max_degree)
        .flat_map(|d| {
            [
                SuperFunction::monomial(rint(1), d, false),
                SuperFunction::monomial(rint(1), d, true),
            ]
        })
        .collect();
    let ncols = basis.len() * (max_index + 1);
    let col = |b: usize, i: usize| b * (max_index + 1) + i;
    let mut sys = LinearSystem::new(ncols);

    for f in probes {
        let goal = target(f);
        let images: Vec<Vec<DiffOperator>> = basis
            .iter()
            .map(|b| {
                (0..=max_index)
                    .map(|i| {
                        DiffOperator::monomial_op(b.clone(), i, lambda.clone(), mu.clone())
                            .lie_action(f)
                    })
                    .collect()
            })
            .collect();
        let top = images
            .iter()
            .flatten()
            .filter_map(|a| a.order_index())
            .chain(goal.order_index())
            .max()
            .unwrap_or(0);
        let deg = |s: &SuperFunction| {
            s.even_coeff().degree().unwrap_or(0).max(s.odd_coeff().degree().unwrap_or(0))
        };
        let maxdeg = images
            .iter()
            .flatten()
            .flat_map(|a| a.coeffs().iter().map(deg))
            .chain(goal.coeffs().iter().map(deg))
            .max()
            .unwrap_or(0);
        for idx in 0..=top {
            for d in 0..=maxdeg {
                for comp in 0..2 {
                    let pick = |s: &SuperFunction| {
                        let poly = if comp == 0 { s.even_coeff() } else { s.odd_coeff() };
                        poly.coeff(d)
                    };
                    let mut entries: Vec<(usize, Rat)> = Vec::new();
                    for (b, row) in images.iter().enumerate() {
                        for (i, image) in row.iter().enumerate() {
                            let c = pick(&image.coeff(idx));
                            if !c.is_zero() {
                                entries.push((col(b, i), c));
                            }
                        }
                    }
                    let rhs = pick(&goal.coeff(idx));
                    if entries.is_empty() && rhs.is_zero() {
                        continue;
                    }
                    sys.add_row(&entries, rhs);
                }
            }
        }
        if !sys.is_consistent() {
            return None;
        }
    }

    let sol = sys.particular_solution()?;
    let mut result = DiffOperator::zero(lambda.clone(), mu.clone());
    for (b, base) in basis.iter().enumerate() {
        for i in 0..=max_index {
            let c = &sol[col(b, i)];
            if !c.is_zero() {
                result = &result
                    + &DiffOperator::monomial_op(
                        base.scale(c),
                        i,
                        lambda.clone(),
                        mu.clone(),
                    );
            }
        }
    }
    Some(result)
}
