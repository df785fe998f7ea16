//! Exact symbolic calculus for differential operators and densities on the
//! supercircle.
//!
//! Everything is computed over exact rationals. The building blocks:
//!
//! - [`superfunc::SuperFunction`] — elements `f₀(x) + ξf₁(x)` with `ξ² = 0`,
//!   together with the odd derivations `D`, `D̄`.
//! - [`contact::ContactField`] — contact vector fields `X_h`, their brackets,
//!   and their action on weighted densities.

pub mod betasolve;
pub mod cohom;
pub mod contact;
pub mod diffop;
pub mod error;
pub mod expr;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod suites;
pub mod superfunc;
pub mod symcalc;

pub use betasolve::{BetaSolution, FunctionalBetas};
pub use cohom::{
    bol_operator, bol_weights, check_cocycle, coboundary_search, gamma_cocycle,
    hamiltonian_monomials, obstruction_class, ObstructionReport,
};
pub use contact::{ContactField, Density, VectorField};
pub use diffop::{DBasisOperator, DiffOperator};
pub use error::{CalcError, ParseError};
pub use expr::{parse_density_list, parse_operator, parse_superfunction, Expr};
pub use json::{CoeffDoc, DensityDoc, OperatorDoc, SymbolDoc, SymbolPartDoc};
pub use poly::Poly;
pub use rat::Rat;
pub use suites::{run_suite, Check, SuiteReport, SUITE_NAMES};
pub use superfunc::{Parity, SuperFunction};
pub use symcalc::{ResonanceClass, SymbolVector};
