//! Recompute the symbol map from equivariance alone.
//!
//! Instead of trusting closed-form coefficients, this module writes down the
//! linear equations that an order-preserving, top-normalized equivariant map
//! from operators to symbol vectors must satisfy, and solves them exactly.
//! The unknowns are coefficients `β_n^{k,π}` — one table per operator parity
//! `π`, so that agreement between the tables is a *result*, not an input.
//! A variant promotes every `β` to a polynomial in `x` of bounded degree and
//! observes that the equations force the solutions to be constants.
//!
//! For each conformal generator `X_h`, each test monomial `a = x^p ξ^ε` and
//! each order `k`, the requirement `σ(𝓛_{X_h}(aD̄^k)) = 𝓛_{X_h}(σ(aD̄^k))`
//! says, part by part (`B = 𝓛_{X_h}(aD̄^k)` with coefficients `cᵢ`):
//!
//! `Σ_{i≥j} β_{i−j}^{i,π_B}·D^{i−j}(cᵢ) = β_{k−j}^{k,π_A}·L^{δ−j/2}_{X_h}(D^{k−j}(a))`
//!
//! which splits into scalar rows per power of `x` and ξ-component. Rows are
//! deduplicated and fed level-by-level into exact Gaussian elimination, so
//! the first order at which the equations become contradictory is reported
//! precisely.

use crate::contact::{osp_basis, Density};
use crate::diffop::DiffOperator;
use crate::error::CalcError;
use crate::linalg::LinearSystem;
use crate::poly::Poly;
use crate::rat::{rat, rint, Rat};
use crate::superfunc::SuperFunction;
use std::collections::HashSet;

/// Column layout for unknowns `β_n^{k,π}(x) = Σ_d β·x^d`.
struct Index {
    kmax: usize,
    degs: usize,
}

impl Index {
    fn tri(k: usize) -> usize {
        k * (k + 1) / 2
    }

    fn table_size(&self) -> usize {
        Self::tri(self.kmax + 1)
    }

    fn ncols(&self) -> usize {
        2 * self.table_size() * self.degs
    }

    fn col(&self, pi: usize, k: usize, n: usize, d: usize) -> usize {
        ((pi * self.table_size()) + Self::tri(k) + n) * self.degs + d
    }
}

/// Outcome of the constant-coefficient solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaSolution {
    /// Every coefficient is pinned; the two parity tables agreed and were
    /// merged into `table[k][n]`.
    Unique { table: Vec<Vec<Rat>> },
    /// The solution space has free parameters (resonant special weights);
    /// `canonical` is the member with all free parameters set to zero.
    Family { dimension: usize, canonical: Vec<Vec<Rat>> },
}

impl BetaSolution {
    pub fn table(&self) -> &Vec<Vec<Rat>> {
        match self {
            BetaSolution::Unique { table } => table,
            BetaSolution::Family { canonical, .. } => canonical,
        }
    }
}

/// Result of the function-valued solve: `tables[k][n]` is a polynomial in
/// `x`; for non-resonant weights the equations pin every one of them to a
/// constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalBetas {
    pub tables: Vec<Vec<Poly>>,
    pub dimension: usize,
}

/// Solve for constant coefficients up to order `kmax`.
pub fn solve_betas(lambda: &Rat, mu: &Rat, kmax: usize) -> Result<BetaSolution, CalcError> {
    let (sys, idx) = build_system(lambda, mu, kmax, 0)?;
    let solution = sys.particular_solution().expect("consistency checked level by level");
    let extract = |pi: usize| -> Vec<Vec<Rat>> {
        (0..=kmax)
            .map(|k| (0..=k).map(|n| solution[idx.col(pi, k, n, 0)].clone()).collect())
            .collect()
    };
    let even = extract(0);
    let odd = extract(1);
    assert_eq!(
        even, odd,
        "equivariance produced different coefficient tables for the two operator parities"
    );
    if sys.nullity() == 0 {
        Ok(BetaSolution::Unique { table: even })
    } else {
        Ok(BetaSolution::Family { dimension: sys.nullity(), canonical: even })
    }
}

/// The table used downstream: the unique solution, or the canonical member
/// of the family.
pub fn canonical_beta_table(
    lambda: &Rat,
    mu: &Rat,
    kmax: usize,
) -> Result<Vec<Vec<Rat>>, CalcError> {
    Ok(match solve_betas(lambda, mu, kmax)? {
        BetaSolution::Unique { table } => table,
        BetaSolution::Family { canonical, .. } => canonical,
    })
}

/// Solve with `β_n^k` allowed to be polynomials in `x` of degree at most
/// `degree_bound`.
pub fn solve_betas_functional(
    lambda: &Rat,
    mu: &Rat,
    kmax: usize,
    degree_bound: usize,
) -> Result<FunctionalBetas, CalcError> {
    let (sys, idx) = build_system(lambda, mu, kmax, degree_bound)?;
    let solution = sys.particular_solution().expect("consistency checked level by level");
    let extract = |pi: usize| -> Vec<Vec<Poly>> {
        (0..=kmax)
            .map(|k| {
                (0..=k)
                    .map(|n| {
                        Poly::new(
                            (0..idx.degs)
                                .map(|d| solution[idx.col(pi, k, n, d)].clone())
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect()
    };
    let even = extract(0);
    let odd = extract(1);
    assert_eq!(even, odd, "parity tables diverge in the functional solve");
    Ok(FunctionalBetas { tables: even, dimension: sys.nullity() })
}

fn build_system(
    lambda: &Rat,
    mu: &Rat,
    kmax: usize,
    degree_bound: usize,
) -> Result<(LinearSystem, Index), CalcError> {
    let idx = Index { kmax, degs: degree_bound + 1 };
    let mut sys = LinearSystem::new(idx.ncols());
    let mut seen: HashSet<Vec<(usize, Rat)>> = HashSet::new();
    let delta = mu - lambda;

    // top normalization: β₀^{k,π} ≡ 1
    for pi in 0..2 {
        for k in 0..=kmax {
            for d in 0..idx.degs {
                let rhs = if d == 0 { rint(1) } else { rint(0) };
                sys.add_row(&[(idx.col(pi, k, 0, d), rint(1))], rhs);
            }
        }
    }

    // the sweep saturates: coefficients of the scalar rows depend
    // polynomially on the test degree p, so a bounded range pins everything
    // the full equation set would
    let pmax = kmax / 2 + 5;
    let xpow = |d: usize| SuperFunction::monomial(rint(1), d, false);

    for k in 0..=kmax {
        for h in &osp_basis() {
            let ph = h.parity().degree().expect("generators are homogeneous") as usize;
            for eps in 0..2usize {
                let pi_a = (eps + k) % 2;
                let pi_b = (pi_a + ph) % 2;
                for p in 0..=pmax {
                    let a = SuperFunction::monomial(rint(1), p, eps == 1);
                    let op =
                        DiffOperator::monomial_op(a.clone(), k, lambda.clone(), mu.clone());
                    let b = op.lie_action(h);
                    let btop = b.order_index().unwrap_or(0);
                    for j in 0..=k.max(btop) {
                        let mut contribs: Vec<(usize, SuperFunction)> = Vec::new();
                        for i in j..=btop {
                            let c = b.coeff(i);
                            if c.is_zero() {
                                continue;
                            }
                            let dc = c.d_pow(i - j);
                            for d in 0..idx.degs {
                                contribs.push((idx.col(pi_b, i, i - j, d), &xpow(d) * &dc));
                            }
                        }
                        if j <= k {
                            let u = a.d_pow(k - j);
                            if !u.is_zero() {
                                let w = &delta - rat(j as i64, 2);
                                for d in 0..idx.degs {
                                    let v = h
                                        .lie_derivative(&Density::new(&xpow(d) * &u, w.clone()));
                                    contribs.push((idx.col(pi_a, k, k - j, d), -v.value()));
                                }
                            }
                        }
                        emit_rows(&mut sys, &mut seen, &contribs);
                    }
                }
            }
        }
        if !sys.is_consistent() {
            return Err(CalcError::NoSymbolMap { order: k });
        }
    }
    Ok((sys, idx))
}

/// Split a superfunction-valued linear identity into scalar rows (one per
/// power of `x` and ξ-component), deduplicate, and feed the solver.
fn emit_rows(
    sys: &mut LinearSystem,
    seen: &mut HashSet<Vec<(usize, Rat)>>,
    contribs: &[(usize, SuperFunction)],
) {
    use num_traits::Zero;
    let max_deg = contribs
        .iter()
        .flat_map(|(_, g)| {
            [g.even_coeff().degree().unwrap_or(0), g.odd_coeff().degree().unwrap_or(0)]
        })
        .max()
        .unwrap_or(0);
    for deg in 0..=max_deg {
        for comp in 0..2 {
            let mut entries: Vec<(usize, Rat)> = Vec::new();
            for (col, g) in contribs {
                let poly = if comp == 0 { g.even_coeff() } else { g.odd_coeff() };
                let c = poly.coeff(deg);
                if !c.is_zero() {
                    entries.push((*col, c));
                }
            }
            if entries.is_empty() {
                continue;
            }
            // canonical form for dedup: sorted, merged, leading coeff 1
            entries.sort_by_key(|(col, _)| *col);
            let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(entries.len());
            for (col, c) in entries {
                match merged.last_mut() {
                    Some((last, acc)) if *last == col => *acc += c,
                    _ => merged.push((col, c)),
                }
            }
            merged.retain(|(_, c)| !c.is_zero());
            let Some(lead) = merged.first().map(|(_, c)| c.clone()) else { continue };
            for (_, c) in merged.iter_mut() {
                *c /= &lead;
            }
            if seen.insert(merged.clone()) {
                sys.add_row(&merged, Rat::zero());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcalc::{beta_coefficient, beta_recursion_holds};

    #[test]
    fn non_resonant_solve_is_unique_and_matches_closed_form() {
        let lambda = rat(1, 3);
        let mu = rat(4, 5);
        let solution = solve_betas(&lambda, &mu, 3).unwrap();
        let BetaSolution::Unique { table } = solution else {
            panic!("expected a unique solution away from resonance")
        };
        for k in 0..=3usize {
            for n in 0..=k {
                assert_eq!(
                    table[k][n],
                    beta_coefficient(&lambda, &mu, k, n).unwrap(),
                    "β_{n}^{k}"
                );
            }
        }
        assert!(beta_recursion_holds(&table, &lambda, &mu));
    }

    #[test]
    fn generic_resonance_is_reported_at_its_order() {
        // 2(μ−λ) = 2 with λ off every special line
        let err = solve_betas(&rat(-1, 4), &rat(3, 4), 2).unwrap_err();
        assert_eq!(err, CalcError::NoSymbolMap { order: 2 });
        // below the resonant order everything still works
        assert!(solve_betas(&rat(-1, 4), &rat(3, 4), 1).is_ok());
    }

    #[test]
    fn special_resonance_yields_a_family() {
        // m = 1: λ = 0, μ = 1/2
        let solution = solve_betas(&rint(0), &rat(1, 2), 1).unwrap();
        let BetaSolution::Family { dimension, canonical } = solution else {
            panic!("expected a family on the special line")
        };
        assert!(dimension >= 1);
        // canonical member: free parameters zero; the lone order-1 entry is
        // the free one
        assert_eq!(canonical[1][1], rint(0));
        assert_eq!(canonical[1][0], rint(1));
    }

    #[test]
    fn functional_solve_forces_constants() {
        let lambda = rat(-1, 5);
        let mu = rat(1, 4);
        let result = solve_betas_functional(&lambda, &mu, 2, 2).unwrap();
        assert_eq!(result.dimension, 0);
        for k in 0..=2usize {
            for n in 0..=k {
                let poly = &result.tables[k][n];
                assert!(
                    poly.degree().unwrap_or(0) == 0,
                    "β_{n}^{k} should be constant, got {poly}"
                );
                assert_eq!(
                    poly.coeff(0),
                    beta_coefficient(&lambda, &mu, k, n).unwrap()
                );
            }
        }
    }
}
