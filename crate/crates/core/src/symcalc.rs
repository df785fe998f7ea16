//! The principal-symbol and quantization maps.
//!
//! A symbol for the pair `(λ, μ)` is a finite vector of densities: part `j`
//! has weight `δ − j/2` with `δ = μ − λ`. Contact fields act on symbols
//! componentwise, and for non-resonant weights there is a unique equivariant
//! isomorphism `σ` from operators to symbols fixing top coefficients
//! (`β₀ = 1`); its inverse is the quantization map. Both have closed-form
//! coefficients built from binomials with rational arguments.
//!
//! Resonant weights (`2(μ−λ)` a positive integer `m`) split in two: for
//! generic resonant weights no equivariant symbol map exists at order `m/2`
//! and above, while on the special line `λ = (1−m)/4` (odd `m`) a family
//! survives; there the canonical member (free parameters zero) is computed
//! by the independent equation solver.

use crate::contact::{ContactField, Density};
use crate::diffop::{DBasisOperator, DiffOperator};
use crate::error::CalcError;
use crate::rat::{as_nonneg_integer, as_positive_integer, rat, rational_binomial, rint, Rat};
use crate::superfunc::{koszul_sign, SuperFunction};
use num_traits::Zero;
use std::fmt;

// ---------------------------------------------------------------------------
// Resonance
// ---------------------------------------------------------------------------

/// Trichotomy of weight pairs for the existence of the symbol map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResonanceClass {
    /// `2(μ−λ)` is not a positive integer: unique symbol map at all orders.
    NonResonant,
    /// Resonant with shift `m`, off the special line: no symbol map at
    /// order `m/2` and beyond.
    ResonantGeneric(usize),
    /// Resonant with odd shift `m` and `λ = (1−m)/4`: a family of symbol
    /// maps survives.
    ResonantSpecial(usize),
}

pub fn classify_resonance(lambda: &Rat, mu: &Rat) -> ResonanceClass {
    let shift = (mu - lambda) * rint(2);
    match as_positive_integer(&shift) {
        None => ResonanceClass::NonResonant,
        Some(m) => {
            let special_lambda = (rint(1) - rint(m as i64)) / rint(4);
            if m % 2 == 1 && *lambda == special_lambda {
                ResonanceClass::ResonantSpecial(m)
            } else {
                ResonanceClass::ResonantGeneric(m)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Closed-form coefficients
// ---------------------------------------------------------------------------

/// Numerator common to both coefficient families:
/// `C(⌊k/2⌋, ⌊(2n+1−ε)/4⌋)·C(⌊(k−1)/2⌋+2λ, ⌊(2n+1+ε)/4⌋)` with
/// `ε = (−1)^{n+k}`.
fn coefficient_numerator(lambda: &Rat, k: usize, n: usize) -> Rat {
    let eps: i64 = if (n + k) % 2 == 0 { 1 } else { -1 };
    let first_lower = ((2 * n as i64 + 1 - eps) / 4) as usize;
    let second_lower = ((2 * n as i64 + 1 + eps) / 4) as usize;
    let first_upper = rint((k / 2) as i64);
    let second_upper = rint(((k - 1) / 2) as i64) + lambda * rint(2);
    rational_binomial(&first_upper, first_lower) * rational_binomial(&second_upper, second_lower)
}

/// Symbol-map coefficient `β_n^k` (`β₀ = 1`): the closed form carries the
/// sign `(−1)^{⌊(n+1)/2⌋}` and denominator `C(2δ+n−k−1, ⌊(n+1)/2⌋)`.
pub fn beta_coefficient(lambda: &Rat, mu: &Rat, k: usize, n: usize) -> Result<Rat, CalcError> {
    if n == 0 {
        return Ok(rint(1));
    }
    let two_delta = (mu - lambda) * rint(2);
    let denom_upper = &two_delta + rint(n as i64 - k as i64 - 1);
    let denom = rational_binomial(&denom_upper, (n + 1) / 2);
    if denom.is_zero() {
        return Err(CalcError::ResonantDenominator { order: k, index: n });
    }
    let sign = koszul_sign(((n + 1) / 2) as u32);
    Ok(sign * coefficient_numerator(lambda, k, n) / denom)
}

/// Quantization coefficient `q_n^k` (`q₀ = 1`): same numerator, no sign,
/// denominator `C(2δ−k+⌊(n−1)/2⌋, ⌊(n+1)/2⌋)`.
pub fn q_coefficient(lambda: &Rat, mu: &Rat, k: usize, n: usize) -> Result<Rat, CalcError> {
    if n == 0 {
        return Ok(rint(1));
    }
    let two_delta = (mu - lambda) * rint(2);
    let half_floor = (n as i64 - 1).div_euclid(2);
    let denom_upper = &two_delta + rint(half_floor - k as i64);
    let denom = rational_binomial(&denom_upper, (n + 1) / 2);
    if denom.is_zero() {
        return Err(CalcError::ResonantDenominator { order: k, index: n });
    }
    Ok(coefficient_numerator(lambda, k, n) / denom)
}

/// Full table `β[k][n]` for `k ≤ kmax`, honoring the resonance trichotomy:
/// closed form when every denominator is alive, the canonical solved family
/// on the special line, and an error past the resonant order otherwise.
pub fn beta_table(lambda: &Rat, mu: &Rat, kmax: usize) -> Result<Vec<Vec<Rat>>, CalcError> {
    let closed = |kmax: usize| -> Result<Vec<Vec<Rat>>, CalcError> {
        (0..=kmax)
            .map(|k| (0..=k).map(|n| beta_coefficient(lambda, mu, k, n)).collect())
            .collect()
    };
    match classify_resonance(lambda, mu) {
        ResonanceClass::NonResonant => closed(kmax),
        ResonanceClass::ResonantGeneric(m) => {
            if kmax < m {
                closed(kmax)
            } else {
                Err(CalcError::NoSymbolMap { order: m })
            }
        }
        ResonanceClass::ResonantSpecial(m) => {
            if kmax < m {
                closed(kmax)
            } else {
                crate::betasolve::canonical_beta_table(lambda, mu, kmax)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Symbol vectors
// ---------------------------------------------------------------------------

/// A finite vector of densities attached to the weights `(λ, μ)`; part `j`
/// has weight `μ − λ − j/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolVector {
    parts: Vec<SuperFunction>,
    lambda: Rat,
    mu: Rat,
}

impl SymbolVector {
    pub fn new(mut parts: Vec<SuperFunction>, lambda: Rat, mu: Rat) -> Self {
        while parts.last().is_some_and(SuperFunction::is_zero) {
            parts.pop();
        }
        SymbolVector { parts, lambda, mu }
    }

    pub fn zero(lambda: Rat, mu: Rat) -> Self {
        SymbolVector::new(Vec::new(), lambda, mu)
    }

    /// Assemble from weighted densities: each weight must be `δ − j/2` for
    /// some `j ≥ 0`, which determines the slot.
    pub fn from_densities(
        densities: &[Density],
        lambda: Rat,
        mu: Rat,
    ) -> Result<Self, CalcError> {
        let delta = &mu - &lambda;
        let mut parts: Vec<SuperFunction> = Vec::new();
        for d in densities {
            let j = (&delta - d.weight()) * rint(2);
            let Some(j) = as_nonneg_integer(&j) else {
                return Err(CalcError::WeightMismatch {
                    expected: delta.clone(),
                    found: d.weight().clone(),
                });
            };
            if parts.len() <= j {
                parts.resize(j + 1, SuperFunction::zero());
            }
            parts[j] = &parts[j] + d.value();
        }
        Ok(SymbolVector::new(parts, lambda, mu))
    }

    pub fn source_weight(&self) -> &Rat {
        &self.lambda
    }

    pub fn target_weight(&self) -> &Rat {
        &self.mu
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Bare parts, ascending (trailing zeros trimmed).
    pub fn parts(&self) -> &[SuperFunction] {
        &self.parts
    }

    pub fn part_weight(&self, j: usize) -> Rat {
        &self.mu - &self.lambda - rat(j as i64, 2)
    }

    /// Part `j` as a density.
    pub fn part(&self, j: usize) -> Density {
        let value = self.parts.get(j).cloned().unwrap_or_else(SuperFunction::zero);
        Density::new(value, self.part_weight(j))
    }

    pub fn top_index(&self) -> Option<usize> {
        self.parts.len().checked_sub(1)
    }

    /// Componentwise action of a contact field (direct sum of density
    /// modules).
    pub fn lie_derivative(&self, h: &ContactField) -> SymbolVector {
        let parts = (0..self.parts.len())
            .map(|j| h.lie_derivative(&self.part(j)).value().clone())
            .collect();
        SymbolVector::new(parts, self.lambda.clone(), self.mu.clone())
    }

    pub fn try_add(&self, other: &SymbolVector) -> Result<SymbolVector, CalcError> {
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
        let n = self.parts.len().max(other.parts.len());
        let get = |v: &[SuperFunction], i: usize| {
            v.get(i).cloned().unwrap_or_else(SuperFunction::zero)
        };
        let parts = (0..n).map(|i| get(&self.parts, i) + get(&other.parts, i)).collect();
        Ok(SymbolVector::new(parts, self.lambda.clone(), self.mu.clone()))
    }

    pub fn scale(&self, s: &Rat) -> SymbolVector {
        SymbolVector::new(
            self.parts.iter().map(|p| p.scale(s)).collect(),
            self.lambda.clone(),
            self.mu.clone(),
        )
    }
}

impl fmt::Display for SymbolVector {
    /// Parts descending (principal first) as `value@weight`, comma-joined;
    /// multi-term values are parenthesized so the output re-parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0@{}", crate::rat::format_rat(&(&self.mu - &self.lambda)));
        }
        let rendered: Vec<String> = (0..self.parts.len())
            .rev()
            .map(|j| {
                let value = self.parts[j].to_string();
                let value = if value.contains(' ') { format!("({value})") } else { value };
                format!("{value}@{}", crate::rat::format_rat(&self.part_weight(j)))
            })
            .collect();
        write!(f, "{}", rendered.join(", "))
    }
}

// ---------------------------------------------------------------------------
// The maps
// ---------------------------------------------------------------------------

/// Equivariant symbol of an operator: part `j` collects
/// `Σ_{k≥j} β_{k−j}^k·D^{k−j}(a_k)`.
pub fn symbol_map(a: &DiffOperator) -> Result<SymbolVector, CalcError> {
    let lambda = a.source_weight().clone();
    let mu = a.target_weight().clone();
    let Some(top) = a.order_index() else {
        return Ok(SymbolVector::zero(lambda, mu));
    };
    let table = beta_table(&lambda, &mu, top)?;
    let mut parts = vec![SuperFunction::zero(); top + 1];
    for (k, ak) in a.coeffs().iter().enumerate() {
        if ak.is_zero() {
            continue;
        }
        let mut derived = ak.clone();
        for n in 0..=k {
            parts[k - n] = &parts[k - n] + &derived.scale(&table[k][n]);
            derived = derived.d();
        }
    }
    Ok(SymbolVector::new(parts, lambda, mu))
}

/// Inverse map on closed-form coefficients: part `j` contributes
/// `Σ_n q_n^j·D^n(f_j)·D̄^{j−n}`.
pub fn quantization_map(s: &SymbolVector) -> Result<DiffOperator, CalcError> {
    let lambda = s.source_weight().clone();
    let mu = s.target_weight().clone();
    let Some(top) = s.top_index() else {
        return Ok(DiffOperator::zero(lambda, mu));
    };
    match classify_resonance(&lambda, &mu) {
        ResonanceClass::NonResonant => {}
        ResonanceClass::ResonantGeneric(m) | ResonanceClass::ResonantSpecial(m) => {
            if top >= m {
                // canonical inverse through the solved symbol table
                let table = beta_table(&lambda, &mu, top)?;
                return Ok(quantization_from_betas(s, &table));
            }
        }
    }
    let mut coeffs = vec![SuperFunction::zero(); top + 1];
    for (j, f) in s.parts().iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut derived = f.clone();
        for n in 0..=j {
            let q = q_coefficient(&lambda, &mu, j, n)?;
            coeffs[j - n] = &coeffs[j - n] + &derived.scale(&q);
            derived = derived.d();
        }
    }
    Ok(DiffOperator::new(coeffs, lambda, mu))
}

/// Invert a symbol table by back-substitution: the maps are triangular with
/// unit diagonal, so `a_j = f_j − Σ_{k>j} β_{k−j}^k·D^{k−j}(a_k)`.
pub fn quantization_from_betas(s: &SymbolVector, table: &[Vec<Rat>]) -> DiffOperator {
    let top = match s.top_index() {
        Some(t) => t,
        None => return DiffOperator::zero(s.lambda.clone(), s.mu.clone()),
    };
    let mut coeffs = vec![SuperFunction::zero(); top + 1];
    for j in (0..=top).rev() {
        let mut c = s.parts()[j].clone();
        for k in (j + 1)..=top {
            c = c - coeffs[k].d_pow(k - j).scale(&table[k][k - j]);
        }
        coeffs[j] = c;
    }
    DiffOperator::new(coeffs, s.lambda.clone(), s.mu.clone())
}

/// Quantization written directly in the `D`-basis: part `f` at index `j`
/// contributes, for each `n` with `i = j−n`,
/// `(−1)^{⌊i/2⌋}·q_n^j·(D^n(f)·D^i − 2·[i odd]·ξD^n(f)·D^{i+1})`.
pub fn quantization_map_dbasis(s: &SymbolVector) -> Result<DBasisOperator, CalcError> {
    let lambda = s.source_weight().clone();
    let mu = s.target_weight().clone();
    let Some(top) = s.top_index() else {
        return Ok(DBasisOperator::new(Vec::new(), lambda, mu));
    };
    match classify_resonance(&lambda, &mu) {
        ResonanceClass::NonResonant => {}
        ResonanceClass::ResonantGeneric(m) | ResonanceClass::ResonantSpecial(m) => {
            if top >= m {
                let table = beta_table(&lambda, &mu, top)?;
                return Ok(quantization_from_betas(s, &table).to_d_basis());
            }
        }
    }
    let mut coeffs = vec![SuperFunction::zero(); top + 2];
    for (j, f) in s.parts().iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut derived = f.clone();
        for n in 0..=j {
            let i = j - n;
            let scaled = derived.scale(&(koszul_sign((i / 2) as u32) * q_coefficient(&lambda, &mu, j, n)?));
            coeffs[i] = &coeffs[i] + &scaled;
            if i % 2 == 1 {
                coeffs[i + 1] =
                    &coeffs[i + 1] - &(&scaled * &SuperFunction::xi()).scale(&rint(2));
            }
            derived = derived.d();
        }
    }
    Ok(DBasisOperator::new(coeffs, lambda, mu))
}

// ---------------------------------------------------------------------------
// Structure relations of the coefficient table
// ---------------------------------------------------------------------------

/// Check the two-step recursions tying neighbouring columns of a symbol
/// table together. With `β` out of range treated as zero, for every
/// `s ≥ 1` and `0 ≤ m ≤ s` (indices within the table):
///
/// 1. `s·β_{2m−1}^{2s−1} = m·β_{2m}^{2s}`
/// 2. `s·β_{2m}^{2s−1} = (2(λ−μ)−m+2s)·β_{2m+1}^{2s}`
/// 3. `(2λ+s)·β_{2m−1}^{2s} = m·β_{2m}^{2s+1}`
/// 4. `(2λ+s)·β_{2m}^{2s} = (2(λ−μ)−m+2s+1)·β_{2m+1}^{2s+1}`
pub fn beta_recursion_holds(table: &[Vec<Rat>], lambda: &Rat, mu: &Rat) -> bool {
    let kmax = table.len().saturating_sub(1);
    let get = |k: i64, n: i64| -> Rat {
        if k < 0 || n < 0 || n > k || k as usize > kmax {
            Rat::zero()
        } else {
            table[k as usize][n as usize].clone()
        }
    };
    let two_lm = (lambda - mu) * rint(2);
    for s in 1..=(kmax as i64) {
        for m in 0..=s {
            if 2 * s <= kmax as i64 {
                let r1 = rint(s) * get(2 * s - 1, 2 * m - 1) - rint(m) * get(2 * s, 2 * m);
                let r2 = rint(s) * get(2 * s - 1, 2 * m)
                    - (&two_lm + rint(2 * s - m)) * get(2 * s, 2 * m + 1);
                if !r1.is_zero() || !r2.is_zero() {
                    return false;
                }
            }
            if 2 * s + 1 <= kmax as i64 {
                let factor = lambda * rint(2) + rint(s);
                let r3 = &factor * get(2 * s, 2 * m - 1) - rint(m) * get(2 * s + 1, 2 * m);
                let r4 = &factor * get(2 * s, 2 * m)
                    - (&two_lm + rint(2 * s - m + 1)) * get(2 * s + 1, 2 * m + 1);
                if !r3.is_zero() || !r4.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::osp_basis;
    use crate::poly::Poly;

    fn sf(even: &[i64], odd: &[i64]) -> SuperFunction {
        SuperFunction::new(
            Poly::new(even.iter().map(|&c| rint(c)).collect()),
            Poly::new(odd.iter().map(|&c| rint(c)).collect()),
        )
    }

    #[test]
    fn resonance_classification() {
        assert_eq!(classify_resonance(&rat(1, 3), &rat(4, 5)), ResonanceClass::NonResonant);
        assert_eq!(classify_resonance(&rint(0), &rint(0)), ResonanceClass::NonResonant);
        assert_eq!(classify_resonance(&rat(1, 2), &rint(0)), ResonanceClass::NonResonant);
        // m = 1 special line: λ = 0
        assert_eq!(classify_resonance(&rint(0), &rat(1, 2)), ResonanceClass::ResonantSpecial(1));
        assert_eq!(
            classify_resonance(&rat(1, 4), &rat(3, 4)),
            ResonanceClass::ResonantGeneric(1)
        );
        // m = 3 special line: λ = −1/2
        assert_eq!(classify_resonance(&rat(-1, 2), &rint(1)), ResonanceClass::ResonantSpecial(3));
        assert_eq!(classify_resonance(&rint(0), &rat(3, 2)), ResonanceClass::ResonantGeneric(3));
        // even shifts are never special
        assert_eq!(classify_resonance(&rat(-1, 4), &rat(3, 4)), ResonanceClass::ResonantGeneric(2));
    }

    #[test]
    fn first_order_symbol_is_frozen() {
        // σ(aD̄) = (a, −(2λ/(2δ−1))·D(a))
        let lambda = rat(1, 3);
        let mu = rat(5, 4);
        let two_delta = (&mu - &lambda) * rint(2);
        let a = sf(&[0, 0, 1], &[2]);
        let op = DiffOperator::monomial_op(a.clone(), 1, lambda.clone(), mu.clone());
        let sym = symbol_map(&op).unwrap();
        let expected_low = a.d().scale(&(rint(-2) * &lambda / (&two_delta - rint(1))));
        assert_eq!(sym.parts(), &[expected_low, a]);
    }

    #[test]
    fn first_and_second_order_quantization_are_frozen() {
        let lambda = rat(1, 3);
        let mu = rat(5, 4);
        let two_delta = (&mu - &lambda) * rint(2);
        let f = sf(&[0, 1], &[0, 0, 3]);
        // Q at part 1: f·D̄ + (2λ/(2δ−1))·D(f)
        let s = SymbolVector::new(vec![SuperFunction::zero(), f.clone()], lambda.clone(), mu.clone());
        let q = quantization_map(&s).unwrap();
        assert_eq!(
            q.coeffs(),
            &[f.d().scale(&(rint(2) * &lambda / (&two_delta - rint(1)))), f.clone()]
        );
        // Q at part 2: f·D̄² + (1/(2δ−2))·D(f)·D̄ + (2λ/(2δ−2))·D²(f)
        let s = SymbolVector::new(
            vec![SuperFunction::zero(), SuperFunction::zero(), f.clone()],
            lambda.clone(),
            mu.clone(),
        );
        let q = quantization_map(&s).unwrap();
        let d2 = &two_delta - rint(2);
        assert_eq!(
            q.coeffs(),
            &[
                f.d_pow(2).scale(&(rint(2) * &lambda / &d2)),
                f.d().scale(&d2.recip()),
                f.clone(),
            ]
        );
    }

    fn sample_symbols(lambda: &Rat, mu: &Rat) -> Vec<SymbolVector> {
        vec![
            SymbolVector::new(vec![sf(&[1, 2], &[3])], lambda.clone(), mu.clone()),
            SymbolVector::new(
                vec![sf(&[0, 1], &[]), sf(&[], &[1]), sf(&[0, 0, 1], &[0, 1])],
                lambda.clone(),
                mu.clone(),
            ),
            SymbolVector::new(
                vec![
                    SuperFunction::zero(),
                    sf(&[], &[0, 2]),
                    SuperFunction::zero(),
                    sf(&[1, 1, 1], &[]),
                ],
                lambda.clone(),
                mu.clone(),
            ),
        ]
    }

    #[test]
    fn quantization_and_symbol_are_mutually_inverse() {
        let lambda = rat(-1, 4);
        let mu = rat(1, 3);
        for s in sample_symbols(&lambda, &mu) {
            let q = quantization_map(&s).unwrap();
            assert_eq!(symbol_map(&q).unwrap(), s);
        }
        for a in [
            DiffOperator::monomial_op(sf(&[0, 1], &[1]), 3, lambda.clone(), mu.clone()),
            DiffOperator::new(
                vec![sf(&[1], &[]), sf(&[], &[1]), sf(&[0, 0, 1], &[]), sf(&[], &[0, 1])],
                lambda.clone(),
                mu.clone(),
            ),
        ] {
            let s = symbol_map(&a).unwrap();
            assert_eq!(quantization_map(&s).unwrap(), a);
        }
    }

    #[test]
    fn closed_form_quantization_matches_table_inversion() {
        let lambda = rat(2, 7);
        let mu = rat(-1, 5);
        for s in sample_symbols(&lambda, &mu) {
            let top = s.top_index().unwrap();
            let table = beta_table(&lambda, &mu, top).unwrap();
            assert_eq!(quantization_map(&s).unwrap(), quantization_from_betas(&s, &table));
        }
    }

    #[test]
    fn symbol_map_is_equivariant() {
        let lambda = rat(1, 3);
        let mu = rat(4, 5);
        let ops = [
            DiffOperator::monomial_op(sf(&[0, 0, 1], &[]), 2, lambda.clone(), mu.clone()),
            DiffOperator::monomial_op(sf(&[], &[0, 1]), 3, lambda.clone(), mu.clone()),
            DiffOperator::new(
                vec![sf(&[1], &[1]), sf(&[0, 1], &[]), sf(&[], &[2])],
                lambda.clone(),
                mu.clone(),
            ),
        ];
        for h in osp_basis() {
            for a in &ops {
                let lhs = symbol_map(&a.lie_action(&h)).unwrap();
                let rhs = symbol_map(a).unwrap().lie_derivative(&h);
                assert_eq!(lhs, rhs, "equivariance fails for h={}", h.hamiltonian());
            }
        }
    }

    #[test]
    fn d_basis_quantization_agrees_with_conversion() {
        let lambda = rat(1, 6);
        let mu = rat(3, 7);
        for s in sample_symbols(&lambda, &mu) {
            let direct = quantization_map_dbasis(&s).unwrap();
            let converted = quantization_map(&s).unwrap().to_d_basis();
            assert_eq!(direct, converted);
            assert_eq!(direct.to_dbar_basis(), quantization_map(&s).unwrap());
        }
        // λ = μ = 0 stays well-defined (δ = 0 is not resonant)
        for s in sample_symbols(&rint(0), &rint(0)) {
            let direct = quantization_map_dbasis(&s).unwrap();
            assert_eq!(direct, quantization_map(&s).unwrap().to_d_basis());
        }
    }

    #[test]
    fn beta_recursions_hold_with_frozen_spot_values() {
        let lambda = rat(1, 5);
        let mu = rat(-2, 3);
        let two_delta = (&mu - &lambda) * rint(2);
        let table = beta_table(&lambda, &mu, 6).unwrap();
        assert!(beta_recursion_holds(&table, &lambda, &mu));
        // β₁³ = −(1+2λ)/(2δ−3), β₂⁴ = −2(1+2λ)/(2δ−3)
        let expected = -(rint(1) + rint(2) * &lambda) / (&two_delta - rint(3));
        assert_eq!(table[3][1], expected);
        assert_eq!(table[4][2], rint(2) * &expected);
        // a corrupted table must fail
        let mut bad = table.clone();
        bad[4][2] = &bad[4][2] + rint(1);
        assert!(!beta_recursion_holds(&bad, &lambda, &mu));
    }

    #[test]
    fn resonant_weights_refuse_high_order_symbols() {
        // generic resonance m = 2 at (−1/4, 3/4)
        let lambda = rat(-1, 4);
        let mu = rat(3, 4);
        let low = DiffOperator::monomial_op(sf(&[1], &[]), 1, lambda.clone(), mu.clone());
        assert!(symbol_map(&low).is_ok(), "below the resonant order the map exists");
        let high = DiffOperator::monomial_op(sf(&[1], &[]), 2, lambda.clone(), mu.clone());
        assert_eq!(symbol_map(&high).unwrap_err(), CalcError::NoSymbolMap { order: 2 });
    }

    #[test]
    fn density_assembly_validates_weights() {
        let lambda = rat(0, 1);
        let mu = rat(1, 3);
        let delta = &mu - &lambda;
        let ok = SymbolVector::from_densities(
            &[
                Density::new(sf(&[1], &[]), delta.clone()),
                Density::new(sf(&[0, 1], &[]), &delta - rat(1, 2)),
            ],
            lambda.clone(),
            mu.clone(),
        )
        .unwrap();
        assert_eq!(ok.parts().len(), 2);
        assert_eq!(ok.part(1).weight(), &(&delta - rat(1, 2)));
        let bad = SymbolVector::from_densities(
            &[Density::new(sf(&[1], &[]), &delta + rat(1, 3))],
            lambda,
            mu,
        );
        assert!(matches!(bad, Err(CalcError::WeightMismatch { .. })));
    }

    #[test]
    fn display_round_trip_shape() {
        let s = SymbolVector::new(
            vec![sf(&[1, 1], &[]), sf(&[0, 2], &[])],
            rint(0),
            rat(1, 2),
        );
        assert_eq!(s.to_string(), "2*x@0, (1 + x)@1/2");
    }
}
