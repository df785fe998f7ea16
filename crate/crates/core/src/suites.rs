//! Named, self-contained verification suites.
//!
//! Each suite re-checks the invariants of one layer of the library on
//! deterministic probe data and reports one pass/fail line per property.
//! All checks are exact rational identities; there are no tolerances. The
//! suites are pure functions, so callers may run several concurrently.

use crate::betasolve::{solve_betas, BetaSolution};
use crate::cohom::{
    bol_operator, bol_weights, check_cocycle, coboundary_search, gamma_cocycle,
    hamiltonian_monomials, obstruction_class,
};
use crate::contact::{osp_basis, ContactField, Density, VectorField};
use crate::diffop::DiffOperator;
use crate::rat::{rat, rint, Rat};
use crate::superfunc::{koszul_sign, SuperFunction};
use crate::symcalc::{
    beta_coefficient, beta_recursion_holds, beta_table, classify_resonance, quantization_map,
    symbol_map, ResonanceClass,
};
use num_traits::Zero;

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

/// One verified property.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: &'static str,
    pub passed: bool,
}

/// Outcome of one named suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The suite names accepted by [`run_suite`].
pub const SUITE_NAMES: &[&str] =
    &["derivations", "contact", "operators", "symbols", "cocycles", "nontriviality"];

/// Run one named suite; `None` for an unknown name.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    match name {
        "derivations" => Some(derivations_suite()),
        "contact" => Some(contact_suite()),
        "operators" => Some(operators_suite()),
        "symbols" => Some(symbols_suite()),
        "cocycles" => Some(cocycles_suite()),
        "nontriviality" => Some(nontriviality_suite()),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// shared probe data
// ---------------------------------------------------------------------------

/// Homogeneous monomials `x^p` and `x^p·ξ` for `p ≤ max_degree`.
fn super_monomials(max_degree: usize) -> Vec<SuperFunction> {
    let mut out = Vec::with_capacity(2 * (max_degree + 1));
    for p in 0..=max_degree {
        out.push(SuperFunction::monomial(rint(1), p, false));
        out.push(SuperFunction::monomial(rint(1), p, true));
    }
    out
}

fn parity_exponent(f: &SuperFunction) -> u32 {
    f.parity().degree().expect("probe data is homogeneous") as u32
}

/// Monomial operators `x^p ξ^ε D̄^k` between the given weights.
fn monomial_operators(
    max_degree: usize,
    max_order: usize,
    lambda: &Rat,
    mu: &Rat,
) -> Vec<DiffOperator> {
    let mut out = Vec::new();
    for k in 0..=max_order {
        for a in super_monomials(max_degree) {
            out.push(DiffOperator::monomial_op(a, k, lambda.clone(), mu.clone()));
        }
    }
    out
}

fn check(checks: &mut Vec<Check>, label: &'static str, passed: bool) {
    checks.push(Check { label, passed });
}

// ---------------------------------------------------------------------------
// derivations: the odd derivations D, D̄ on superfunctions
// ---------------------------------------------------------------------------

fn derivations_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let probes = super_monomials(8);

    check(
        &mut checks,
        "D^2 = d/dx on all monomials of degree <= 8",
        probes.iter().all(|f| f.d().d() == f.partial_x()),
    );
    check(
        &mut checks,
        "Dbar^2 = -d/dx on all monomials of degree <= 8",
        probes.iter().all(|f| f.dbar().dbar() == -&f.partial_x()),
    );
    check(
        &mut checks,
        "D and Dbar anticommute",
        probes.iter().all(|f| (f.dbar().d() + f.d().dbar()).is_zero()),
    );

    let small = super_monomials(4);
    let mut leibniz = true;
    let mut commutes = true;
    let mut associates = true;
    for f in &small {
        let pf = parity_exponent(f);
        for g in &small {
            let pg = parity_exponent(g);
            let fg = f * g;
            leibniz &= fg.d() == &f.d() * g + (f * &g.d()).scale(&koszul_sign(pf));
            leibniz &= fg.dbar() == &f.dbar() * g + (f * &g.dbar()).scale(&koszul_sign(pf));
            commutes &= fg == (g * f).scale(&koszul_sign(pf * pg));
            for h in small.iter().take(6) {
                associates &= &fg * h == f * &(g * h);
            }
        }
    }
    check(&mut checks, "graded Leibniz rule for D and Dbar", leibniz);
    check(&mut checks, "multiplication is supercommutative with Koszul sign", commutes);
    check(&mut checks, "multiplication is associative", associates);
    check(
        &mut checks,
        "Dbar = D - 2 xi d/dx pointwise",
        probes.iter().all(|f| {
            f.dbar() == f.d() - (SuperFunction::xi() * f.partial_x()).scale(&rint(2))
        }),
    );

    SuiteReport { name: "derivations", checks }
}

// ---------------------------------------------------------------------------
// contact: contact fields, brackets, density modules
// ---------------------------------------------------------------------------

fn contact_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let hams = super_monomials(6);
    let fields: Vec<ContactField> = hams.iter().cloned().map(ContactField::new).collect();

    check(
        &mut checks,
        "X_{f,g} = [X_f, X_g] on monomial pairs of degree <= 6",
        fields.iter().all(|f| {
            fields.iter().all(|g| {
                f.bracket(g).vector_field()
                    == f.vector_field().bracket(&g.vector_field())
            })
        }),
    );
    check(
        &mut checks,
        "the bracket is the action on weight -1 densities",
        fields.iter().all(|f| {
            hams.iter().all(|g| {
                f.bracket(&ContactField::new(g.clone())).hamiltonian()
                    == f.lie_derivative(&Density::new(g.clone(), rint(-1))).value()
            })
        }),
    );

    let triple_set = super_monomials(3);
    let mut jacobi = true;
    for f in &triple_set {
        let pf = parity_exponent(f);
        for g in &triple_set {
            let pg = parity_exponent(g);
            for h in &triple_set {
                let br = |a: &SuperFunction, b: &SuperFunction| {
                    ContactField::new(a.clone())
                        .bracket(&ContactField::new(b.clone()))
                        .hamiltonian()
                        .clone()
                };
                let lhs = br(f, &br(g, h));
                let rhs = &br(&br(f, g), h) + &br(g, &br(f, h)).scale(&koszul_sign(pf * pg));
                jacobi &= lhs == rhs;
            }
        }
    }
    check(&mut checks, "graded Jacobi identity for the contact bracket", jacobi);

    let weights = [rint(0), rint(1), rint(-1), rat(1, 2), rat(-3, 4)];
    let probe_values = super_monomials(3);
    let mut representation = true;
    for lambda in &weights {
        for f in &fields {
            let pf = parity_exponent(f.hamiltonian());
            for g in &fields {
                let pg = parity_exponent(g.hamiltonian());
                let bracket = f.bracket(g);
                for v in &probe_values {
                    let phi = Density::new(v.clone(), lambda.clone());
                    let lhs = f.lie_derivative(&g.lie_derivative(&phi)).value().clone()
                        - g.lie_derivative(&f.lie_derivative(&phi))
                            .value()
                            .scale(&koszul_sign(pf * pg));
                    representation &= lhs == *bracket.lie_derivative(&phi).value();
                }
            }
        }
    }
    check(&mut checks, "the density action is a Lie superalgebra representation", representation);

    check(
        &mut checks,
        "[X_h, Dbar] = -1/2 h' Dbar",
        hams.iter().all(|h| {
            let lhs = ContactField::new(h.clone())
                .vector_field()
                .bracket(&VectorField::dbar_multiple(&SuperFunction::one()));
            lhs == VectorField::dbar_multiple(&h.partial_x().scale(&rat(-1, 2)))
        }),
    );

    let mut poisson_invariant = true;
    let pair_weights = [(rint(0), rint(0)), (rat(1, 2), rint(-1)), (rat(-3, 4), rat(1, 3))];
    for (lw, mw) in &pair_weights {
        for h in fields.iter().take(8) {
            let ph = parity_exponent(h.hamiltonian());
            for phi in probe_values.iter() {
                let pphi = parity_exponent(phi);
                for psi in probe_values.iter() {
                    let dphi = Density::new(phi.clone(), lw.clone());
                    let dpsi = Density::new(psi.clone(), mw.clone());
                    let lhs = h.lie_derivative(&dphi.poisson_bracket(&dpsi));
                    let rhs = h
                        .lie_derivative(&dphi)
                        .poisson_bracket(&dpsi)
                        .try_add(
                            &dphi
                                .poisson_bracket(&h.lie_derivative(&dpsi))
                                .scale(&koszul_sign(ph * pphi)),
                        )
                        .expect("weights match");
                    poisson_invariant &= lhs.value() == rhs.value();
                }
            }
        }
    }
    check(&mut checks, "the Poisson bracket is invariant under contact fields", poisson_invariant);

    let mut roundtrip = true;
    for a in super_monomials(6).iter().take(10) {
        for b in probe_values.iter() {
            let x = VectorField::new(a.clone(), b.clone());
            let (h, g) = x.contact_split();
            let reassembled =
                &ContactField::new(h).vector_field() + &VectorField::dbar_multiple(&g);
            roundtrip &= reassembled == x;
        }
    }
    check(&mut checks, "every field splits uniquely as X_h + g Dbar", roundtrip);

    SuiteReport { name: "contact", checks }
}

// ---------------------------------------------------------------------------
// operators: composition, the module action, conjugation
// ---------------------------------------------------------------------------

fn operators_suite() -> SuiteReport {
    let mut checks = Vec::new();

    let chain_c = monomial_operators(3, 2, &rat(-1, 3), &rint(0));
    let chain_b = monomial_operators(3, 2, &rint(0), &rat(1, 2));
    let chain_a = monomial_operators(3, 2, &rat(1, 2), &rat(3, 2));
    let probes = super_monomials(3);
    let mut associative = true;
    let mut apply_consistent = true;
    for a in chain_a.iter().step_by(3) {
        for b in chain_b.iter().step_by(3) {
            let ab = a.compose(b).expect("weights chain");
            for phi in &probes {
                apply_consistent &= ab.apply_value(phi) == a.apply_value(&b.apply_value(phi));
            }
            for c in chain_c.iter().step_by(3) {
                let left = ab.compose(c).expect("weights chain");
                let right = a.compose(&b.compose(c).expect("weights chain")).expect("chain");
                associative &= left == right;
            }
        }
    }
    check(&mut checks, "composition is associative", associative);
    check(&mut checks, "composition agrees with applying in sequence", apply_consistent);

    let (lambda, mu) = (rat(1, 3), rat(4, 5));
    let test_ops = monomial_operators(2, 3, &lambda, &mu);
    let gen_fields: Vec<ContactField> =
        super_monomials(3).into_iter().map(ContactField::new).collect();
    let mut representation = true;
    for f in &gen_fields {
        let pf = parity_exponent(f.hamiltonian());
        for g in &gen_fields {
            let pg = parity_exponent(g.hamiltonian());
            let bracket = f.bracket(g);
            for a in test_ops.iter().step_by(2) {
                let lhs = a
                    .lie_action(g)
                    .lie_action(f)
                    .try_add(&a.lie_action(f).lie_action(g).scale(&-koszul_sign(pf * pg)))
                    .expect("same weights");
                representation &= lhs == a.lie_action(&bracket);
            }
        }
    }
    check(&mut checks, "the operator action is a Lie superalgebra representation", representation);

    let mut filtration = true;
    let mut quotient = true;
    for h in osp_basis() {
        for a in &test_ops {
            let acted = a.lie_action(&h);
            filtration &= match (acted.order_index(), a.order_index()) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(i), Some(j)) => i <= j,
            };
            if acted.order_index() == a.order_index() && a.order_index().is_some() {
                let top = a.principal_symbol().expect("nonzero");
                quotient &= acted.principal_symbol().expect("nonzero")
                    == h.lie_derivative(&top);
            }
        }
    }
    check(&mut checks, "the action never raises the operator order", filtration);
    check(
        &mut checks,
        "the principal symbol intertwines the action with the density action",
        quotient,
    );

    let mut involution = true;
    for (l, m) in [(rint(0), rat(1, 2)), (rat(1, 3), rat(4, 5)), (rat(-1, 4), rint(2))] {
        for a in monomial_operators(2, 4, &l, &m).iter().step_by(2) {
            involution &= a.conjugate().conjugate() == *a;
        }
    }
    check(&mut checks, "conjugation is an involution", involution);

    let mut splits = true;
    for (l, m) in [(rint(0), rat(1, 2)), (rat(-1, 4), rat(3, 4)), (rat(1, 8), rat(3, 8))] {
        for a in monomial_operators(2, 4, &l, &m).iter().step_by(2) {
            let star = a.conjugate();
            let half = rat(1, 2);
            let sym = a.try_add(&star).expect("self-dual weights").scale(&half);
            let skew = a.try_add(&star.scale(&rint(-1))).expect("self-dual weights").scale(&half);
            splits &= sym.conjugate() == sym
                && skew.conjugate() == skew.scale(&rint(-1))
                && sym.try_add(&skew).expect("same weights") == *a;
        }
    }
    check(
        &mut checks,
        "when the weights sum to 1/2 operators split into (anti)symmetric parts",
        splits,
    );

    let mut star_equivariant = true;
    for h in osp_basis() {
        for a in &test_ops {
            star_equivariant &= a.lie_action(&h).conjugate() == a.conjugate().lie_action(&h);
        }
    }
    check(
        &mut checks,
        "conjugation intertwines the actions on dual weights (global sign +1)",
        star_equivariant,
    );

    SuiteReport { name: "operators", checks }
}

// ---------------------------------------------------------------------------
// symbols: the symbol and quantization maps and their coefficient systems
// ---------------------------------------------------------------------------

/// Deterministic non-resonant weight pairs used by the solver comparisons.
fn nonresonant_pairs() -> Vec<(Rat, Rat)> {
    vec![
        (rat(1, 3), rat(4, 5)),
        (rat(-1, 4), rat(1, 3)),
        (rint(2), rat(31, 12)),
        (rint(0), rat(1, 5)),
        (rint(-1), rat(-1, 3)),
        (rat(2, 7), rat(3, 7)),
        (rat(-5, 3), rat(1, 6)),
        (rat(7, 8), rat(9, 8)),
        (rint(3), rat(10, 3)),
        (rat(-1, 2), rat(-1, 5)),
        (rat(1, 9), rat(5, 9)),
        (rat(11, 7), rat(12, 7)),
        (rat(-3, 8), rat(1, 4)),
        (rint(5), rat(26, 5)),
        (rat(4, 3), rat(3, 4)),
        (rat(-7, 5), rat(-6, 5)),
        (rat(2, 11), rat(13, 12)),
        (rat(5, 6), rat(4, 5)),
        (rint(-4), rat(-15, 4)),
        (rat(3, 5), rat(1, 10)),
    ]
}

/// Deterministic resonant pairs off the special line.
fn resonant_generic_pairs() -> Vec<(Rat, Rat)> {
    vec![
        (rint(1), rat(3, 2)),
        (rint(0), rint(1)),
        (rat(1, 2), rint(1)),
        (rint(0), rat(3, 2)),
        (rint(-1), rint(0)),
        (rat(1, 4), rat(3, 4)),
        (rint(2), rat(5, 2)),
        (rat(-1, 2), rat(1, 2)),
        (rat(1, 3), rat(4, 3)),
        (rint(3), rat(9, 2)),
    ]
}

fn symbols_suite() -> SuiteReport {
    let mut checks = Vec::new();

    let sweep_pairs = &nonresonant_pairs()[..5];
    let generators = osp_basis();
    let mut equivariant = true;
    let mut inverts = true;
    let mut diagonal = true;
    for (lambda, mu) in sweep_pairs {
        for a in monomial_operators(4, 6, lambda, mu) {
            let sigma = symbol_map(&a).expect("non-resonant weights");
            inverts &= quantization_map(&sigma).expect("non-resonant weights") == a;
            if let Some(top) = sigma.top_index() {
                diagonal &= sigma.part(top) == a.principal_symbol().expect("nonzero");
            } else {
                diagonal &= a.is_zero();
            }
            for h in &generators {
                equivariant &=
                    symbol_map(&a.lie_action(h)).expect("non-resonant weights")
                        == sigma.lie_derivative(h);
            }
        }
    }
    check(
        &mut checks,
        "the symbol map intertwines the conformal action on 5 weight pairs",
        equivariant,
    );
    check(&mut checks, "quantization inverts the symbol map on the same sweep", inverts);
    check(&mut checks, "the top symbol part is the principal symbol", diagonal);

    let mut tables_agree = true;
    let mut recursion_holds = true;
    for (lambda, mu) in nonresonant_pairs() {
        let solved = solve_betas(&lambda, &mu, 8).expect("non-resonant weights");
        let BetaSolution::Unique { table } = solved else {
            tables_agree = false;
            continue;
        };
        tables_agree &= table == beta_table(&lambda, &mu, 8).expect("non-resonant weights");
        recursion_holds &= beta_recursion_holds(&table, &lambda, &mu);
    }
    check(
        &mut checks,
        "the constraint solver reproduces the closed-form coefficients to order 8",
        tables_agree,
    );
    check(&mut checks, "solved tables satisfy the printed recursion relations", recursion_holds);

    let mut trichotomy = true;
    for (lambda, mu) in resonant_generic_pairs() {
        let ResonanceClass::ResonantGeneric(m) = classify_resonance(&lambda, &mu) else {
            trichotomy = false;
            continue;
        };
        // the closed form must hit a vanishing denominator at the resonant
        // order, and the direct solver must refuse a full table there
        trichotomy &= (m..=8).any(|k| (0..=k).any(|n| {
            beta_coefficient(&lambda, &mu, k, n).is_err()
        }));
        trichotomy &= solve_betas(&lambda, &mu, 8).is_err();
    }
    for (lambda, mu) in nonresonant_pairs() {
        trichotomy &= classify_resonance(&lambda, &mu) == ResonanceClass::NonResonant;
        trichotomy &= (0..=8).all(|k| (0..=k).all(|n| {
            beta_coefficient(&lambda, &mu, k, n).is_ok()
        }));
    }
    for m in [1usize, 3, 5] {
        let (lambda, mu) = (rat(1 - m as i64, 4), rat(1 + m as i64, 4));
        trichotomy &= classify_resonance(&lambda, &mu) == ResonanceClass::ResonantSpecial(m);
        trichotomy &= matches!(
            solve_betas(&lambda, &mu, m + 1),
            Ok(BetaSolution::Family { dimension, .. }) if dimension >= 1
        );
    }
    check(
        &mut checks,
        "coefficient denominators vanish exactly on the resonant chain",
        trichotomy,
    );

    SuiteReport { name: "symbols", checks }
}

// ---------------------------------------------------------------------------
// cocycles: invariant operators and first-order deformation data
// ---------------------------------------------------------------------------

fn cocycles_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let generators = osp_basis();

    check(
        &mut checks,
        "odd powers of Dbar are invariant at their critical weights",
        [1usize, 3, 5, 7].iter().all(|&k| {
            let op = bol_operator(k).expect("odd order");
            generators.iter().all(|h| op.lie_action(h).is_zero())
        }),
    );

    let lambdas = [
        rint(0),
        rint(1),
        rint(-1),
        rat(1, 2),
        rat(1, 3),
        rat(-5, 4),
        rat(2, 7),
        rint(-3),
        rat(5, 2),
        rat(-1, 6),
    ];
    let mut scaling = true;
    for lambda in &lambdas {
        for k in [1usize, 3, 5] {
            let mu = lambda + rat(k as i64, 2);
            let dbar_k = DiffOperator::monomial_op(
                SuperFunction::one(),
                k,
                lambda.clone(),
                mu.clone(),
            );
            let factor = lambda + rat(k as i64 - 1, 4);
            for h in &generators {
                scaling &= dbar_k.lie_action(h)
                    == gamma_cocycle(k, h, lambda).scale(&factor);
            }
        }
    }
    check(
        &mut checks,
        "the action on Dbar^k is the scaling multiple of the gamma cochain",
        scaling,
    );

    let mut frozen_values = true;
    for k in [1usize, 3, 5, 7] {
        let lambda = bol_weights(k).0;
        for (h, expect_top, expect_next) in [
            (SuperFunction::one(), SuperFunction::zero(), SuperFunction::zero()),
            (SuperFunction::x(), SuperFunction::zero(), SuperFunction::zero()),
            (
                SuperFunction::monomial(rint(1), 2, false),
                SuperFunction::xi().scale(&rint(2)),
                SuperFunction::constant(rint(k as i64 - 1)),
            ),
            (SuperFunction::xi(), SuperFunction::zero(), SuperFunction::zero()),
            (SuperFunction::monomial(rint(1), 1, true), SuperFunction::one(), SuperFunction::zero()),
        ] {
            let gamma = gamma_cocycle(k, &ContactField::new(h), &lambda);
            frozen_values &= gamma.coeff(k - 1) == expect_top;
            if k >= 2 {
                frozen_values &= gamma.coeff(k - 2) == expect_next;
            }
            frozen_values &=
                (0..gamma.coeffs().len()).all(|i| i + 2 >= k || gamma.coeff(i).is_zero());
        }
    }
    check(&mut checks, "gamma takes its tabulated values on the conformal basis", frozen_values);

    // γ_k closes on the conformal subalgebra for every odd k; over the full
    // algebra of contact fields it happens to close only for k ≤ 3, so the
    // probe set here is the conformal basis (the scope of the statement).
    let probes = hamiltonian_monomials(3);
    let mut cocycle_identity = true;
    for k in [1usize, 3, 5, 7] {
        let lambda = bol_weights(k).0;
        cocycle_identity &=
            check_cocycle(&|h: &ContactField| gamma_cocycle(k, h, &lambda), &osp_basis());
    }
    for k in [1usize, 3] {
        let lambda = bol_weights(k).0;
        cocycle_identity &=
            check_cocycle(&|h: &ContactField| gamma_cocycle(k, h, &lambda), &probes);
    }
    check(&mut checks, "gamma satisfies the graded cocycle identity", cocycle_identity);

    let mut coboundaries_close = true;
    let seeds = [
        (rint(1), 0usize, false),
        (rint(1), 1, false),
        (rint(1), 2, true),
        (rat(1, 2), 3, false),
        (rint(-2), 1, true),
        (rat(2, 3), 2, false),
        (rint(1), 4, true),
        (rat(-1, 3), 0, true),
        (rint(3), 3, true),
        (rat(5, 4), 4, false),
    ];
    for (i, (c, p, odd)) in seeds.iter().enumerate() {
        let b = DiffOperator::monomial_op(
            SuperFunction::monomial(c.clone(), *p, *odd),
            i % 3,
            rat(1, 3),
            rat(1, 3) + rat((i % 3) as i64, 2),
        );
        coboundaries_close &=
            check_cocycle(&|h: &ContactField| b.lie_action(h), &probes);
    }
    check(&mut checks, "coboundaries satisfy the same cocycle identity", coboundaries_close);

    let mut symmetry = true;
    for k in [1usize, 3, 5, 7] {
        let lambda = bol_weights(k).0;
        let sign = if ((k - 1) / 2) % 2 == 0 { rint(1) } else { rint(-1) };
        for h in &generators {
            let gamma = gamma_cocycle(k, h, &lambda);
            symmetry &= gamma.conjugate() == gamma.scale(&sign);
        }
    }
    check(
        &mut checks,
        "gamma is (anti)self-adjoint with period-four sign at critical weights",
        symmetry,
    );

    let mut obstruction = true;
    for m in [1usize, 2, 3, 4] {
        for lambda in [rint(0), rat(-1, 2), rat(1, 3), rint(-2), rat(7, 4)] {
            let mu = &lambda + rat(m as i64, 2);
            let report = obstruction_class(&lambda, &mu).expect("resonant by construction");
            let expected = if m % 2 == 1 {
                &lambda + rat(m as i64 - 1, 4)
            } else {
                rat(m as i64, 4)
            };
            obstruction &= report.shift == m
                && report.proportional
                && report.scalar == expected
                && report.vanishes == expected.is_zero();
        }
    }
    check(
        &mut checks,
        "the deformation obstruction is the expected multiple of gamma",
        obstruction,
    );

    SuiteReport { name: "cocycles", checks }
}

// ---------------------------------------------------------------------------
// nontriviality: bounded search for primitives of gamma
// ---------------------------------------------------------------------------

fn nontriviality_suite() -> SuiteReport {
    let mut checks = Vec::new();
    let probes = osp_basis();

    let mut unsolvable = true;
    for k in [1usize, 3] {
        let (lambda, mu) = bol_weights(k);
        let found = coboundary_search(
            &|h: &ContactField| gamma_cocycle(k, h, &lambda),
            &lambda,
            &mu,
            6,
            k,
            &probes,
        );
        unsolvable &= found.is_none();
    }
    check(
        &mut checks,
        "no operator of bounded degree has gamma as its coboundary",
        unsolvable,
    );

    let seed = DiffOperator::monomial_op(
        SuperFunction::monomial(rint(1), 2, false),
        1,
        rint(0),
        rat(1, 2),
    );
    let recovered = coboundary_search(
        &|h: &ContactField| seed.lie_action(h),
        &rint(0),
        &rat(1, 2),
        3,
        2,
        &probes,
    );
    let control = recovered.is_some_and(|b| {
        probes.iter().all(|h| b.lie_action(h) == seed.lie_action(h))
    });
    check(&mut checks, "the search does recover genuine coboundaries", control);

    SuiteReport { name: "nontriviality", checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for name in SUITE_NAMES {
            let report = run_suite(name).expect("known suite");
            assert_eq!(report.name, *name);
            for c in &report.checks {
                assert!(c.passed, "suite {name}: {}", c.label);
            }
        }
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(run_suite("everything").is_none());
        assert!(run_suite("").is_none());
    }
}
