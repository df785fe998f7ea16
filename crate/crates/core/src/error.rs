//! Error types for the operator calculus.

use crate::rat::{format_rat, Rat};
use thiserror::Error;

/// Domain errors: well-formed inputs for which the requested construction
/// does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    /// A symbol part (or operator coefficient) was supplied with a weight
    /// that contradicts the ambient `(λ, μ)` pair.
    #[error("weight mismatch: expected {}, found {}", format_rat(expected), format_rat(found))]
    WeightMismatch { expected: Rat, found: Rat },

    /// The principal-symbol map is undefined on resonant weights where no
    /// equivariant symbol exists at the requested order.
    #[error("no equivariant symbol map at order {order} for the given weights")]
    NoSymbolMap { order: usize },

    /// A quantization/symbol coefficient hit a vanishing denominator.
    #[error("resonant weights: coefficient denominator vanishes at order {order}, derivative index {index}")]
    ResonantDenominator { order: usize, index: usize },

    /// Operation defined only for odd-order operators.
    #[error("operation requires odd order, got {order}")]
    EvenOrder { order: usize },

    /// Operation defined only on resonant weight pairs `2(μ−λ) ∈ ℤ₊`.
    #[error("weights are not resonant: 2(mu - lambda) = {}", format_rat(shift))]
    NotResonant { shift: Rat },

    /// An operator-valued computation needed a nonzero operator.
    #[error("operator is identically zero")]
    ZeroOperator,

    /// Reconstruction from an action failed to close on the probe basis.
    #[error("action is not realized by a differential operator of order <= {max_order}")]
    NotAnOperator { max_order: usize },
}

/// Errors from the expression / document front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("invalid rational literal {text:?}: {msg}")]
    Rational { text: String, msg: String },

    #[error("invalid document: {0}")]
    Document(String),
}

impl ParseError {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { line, col, msg: msg.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn messages_render_rationals() {
        let e = CalcError::WeightMismatch { expected: rat(1, 2), found: rat(-3, 4) };
        assert_eq!(e.to_string(), "weight mismatch: expected 1/2, found -3/4");
        let e = CalcError::NotResonant { shift: rat(5, 3) };
        assert!(e.to_string().contains("5/3"));
    }
}
