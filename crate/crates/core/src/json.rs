//! Exact JSON documents for operators, symbols, and densities.
//!
//! Every rational is serialized as a string `"p/q"` (or `"p"` for integers)
//! so no precision is lost. Operator coefficient lists are ascending in the
//! `D̄`-power index; each coefficient carries its even and odd polynomial
//! parts as ascending `x`-coefficient lists:
//!
//! ```json
//! {"lambda": "0", "mu": "3/2",
//!  "coeffs": [{"even": ["1", "-2"], "odd": ["1/2"]}, ...]}
//! ```
//!
//! Symbols carry the same data plus a `"weight"` per part; densities are a
//! single weighted part.

use crate::contact::Density;
use crate::diffop::DiffOperator;
use crate::error::ParseError;
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::superfunc::SuperFunction;
use crate::symcalc::SymbolVector;
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// document shapes
// ---------------------------------------------------------------------------

/// One operator coefficient `a(x) + ξb(x)`: `even` holds the ascending
/// `x`-coefficients of `a`, `odd` those of `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffDoc {
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

/// A differential operator between the density modules of weights
/// `lambda` and `mu`; `coeffs[i]` multiplies `D̄^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDoc {
    pub lambda: String,
    pub mu: String,
    pub coeffs: Vec<CoeffDoc>,
}

/// One symbol part: a density of the given weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolPartDoc {
    pub weight: String,
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

/// A symbol attached to the weights `(lambda, mu)`; part `j` must have
/// weight `mu − lambda − j/2`, descending in half-integer steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub lambda: String,
    pub mu: String,
    pub parts: Vec<SymbolPartDoc>,
}

/// A single weighted density.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityDoc {
    pub weight: String,
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

fn poly_from_strings(texts: &[String]) -> Result<Poly, ParseError> {
    let coeffs = texts
        .iter()
        .map(|t| {
            parse_rat(t).map_err(|msg| ParseError::Rational { text: t.clone(), msg })
        })
        .collect::<Result<Vec<Rat>, ParseError>>()?;
    Ok(Poly::new(coeffs))
}

fn rat_from_string(text: &str) -> Result<Rat, ParseError> {
    parse_rat(text).map_err(|msg| ParseError::Rational { text: text.to_string(), msg })
}

impl CoeffDoc {
    fn encode(f: &SuperFunction) -> Self {
        CoeffDoc { even: poly_strings(f.even_coeff()), odd: poly_strings(f.odd_coeff()) }
    }

    fn decode(&self) -> Result<SuperFunction, ParseError> {
        Ok(SuperFunction::new(poly_from_strings(&self.even)?, poly_from_strings(&self.odd)?))
    }
}

impl From<&DiffOperator> for OperatorDoc {
    fn from(op: &DiffOperator) -> Self {
        OperatorDoc {
            lambda: format_rat(op.source_weight()),
            mu: format_rat(op.target_weight()),
            coeffs: op.coeffs().iter().map(CoeffDoc::encode).collect(),
        }
    }
}

impl OperatorDoc {
    pub fn decode(&self) -> Result<DiffOperator, ParseError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(CoeffDoc::decode)
            .collect::<Result<Vec<SuperFunction>, ParseError>>()?;
        Ok(DiffOperator::new(coeffs, rat_from_string(&self.lambda)?, rat_from_string(&self.mu)?))
    }
}

impl From<&SymbolVector> for SymbolDoc {
    fn from(symbol: &SymbolVector) -> Self {
        SymbolDoc {
            lambda: format_rat(symbol.source_weight()),
            mu: format_rat(symbol.target_weight()),
            parts: (0..symbol.parts().len())
                .map(|j| {
                    let part = symbol.part(j);
                    SymbolPartDoc {
                        weight: format_rat(part.weight()),
                        even: poly_strings(part.value().even_coeff()),
                        odd: poly_strings(part.value().odd_coeff()),
                    }
                })
                .collect(),
        }
    }
}

impl SymbolDoc {
    pub fn decode(&self) -> Result<SymbolVector, ParseError> {
        let lambda = rat_from_string(&self.lambda)?;
        let mu = rat_from_string(&self.mu)?;
        let densities = self
            .parts
            .iter()
            .map(|p| {
                Ok(Density::new(
                    SuperFunction::new(poly_from_strings(&p.even)?, poly_from_strings(&p.odd)?),
                    rat_from_string(&p.weight)?,
                ))
            })
            .collect::<Result<Vec<Density>, ParseError>>()?;
        SymbolVector::from_densities(&densities, lambda, mu)
            .map_err(|e| ParseError::Document(e.to_string()))
    }
}

impl From<&Density> for DensityDoc {
    fn from(d: &Density) -> Self {
        DensityDoc {
            weight: format_rat(d.weight()),
            even: poly_strings(d.value().even_coeff()),
            odd: poly_strings(d.value().odd_coeff()),
        }
    }
}

impl DensityDoc {
    pub fn decode(&self) -> Result<Density, ParseError> {
        Ok(Density::new(
            SuperFunction::new(poly_from_strings(&self.even)?, poly_from_strings(&self.odd)?),
            rat_from_string(&self.weight)?,
        ))
    }
}

// ---------------------------------------------------------------------------
// report documents
// ---------------------------------------------------------------------------

/// Classification result of the coefficient solver. `table` rows are
/// ascending in the order `k`, entries ascending in the derivative index
/// `n`; absent when no symbol map exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaTableDoc {
    pub lambda: String,
    pub mu: String,
    pub classification: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocked_at_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<String>>>,
}

/// One labeled verification outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub label: String,
    pub passed: bool,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReportDoc {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

impl From<&crate::suites::SuiteReport> for SuiteReportDoc {
    fn from(report: &crate::suites::SuiteReport) -> Self {
        SuiteReportDoc {
            name: report.name.to_string(),
            passed: report.passed(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckDoc { label: c.label.to_string(), passed: c.passed })
                .collect(),
        }
    }
}

/// Outcome of a `check` run over one or more suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRunDoc {
    pub passed: bool,
    pub suites: Vec<SuiteReportDoc>,
}

/// The cochain values on the conformal basis at order `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaValueDoc {
    pub hamiltonian: String,
    pub operator: OperatorDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDoc {
    pub k: usize,
    pub values: Vec<GammaValueDoc>,
}

/// An invariant odd power of `D̄` together with its per-generator
/// invariance report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BolDoc {
    pub k: usize,
    pub operator: OperatorDoc,
    pub invariance: Vec<CheckDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_operator;
    use crate::rat::{rat, rint};
    use crate::symcalc::symbol_map;

    #[test]
    fn operator_documents_round_trip() {
        let op = parse_operator("(1 - 2*x)*Dbar^2 + 1/2*xi*Dbar - 7", &rint(0), &rat(3, 2))
            .unwrap();
        let doc = OperatorDoc::from(&op);
        let text = serde_json::to_string(&doc).unwrap();
        let back: OperatorDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.decode().unwrap(), op);
    }

    #[test]
    fn operator_documents_use_exact_strings() {
        let op = parse_operator("1/3*Dbar", &rint(0), &rat(1, 2)).unwrap();
        let value: serde_json::Value =
            serde_json::to_value(OperatorDoc::from(&op)).unwrap();
        assert_eq!(value["lambda"], "0");
        assert_eq!(value["mu"], "1/2");
        assert_eq!(value["coeffs"][1]["even"][0], "1/3");
    }

    #[test]
    fn symbol_documents_round_trip_and_validate_weights() {
        let op = parse_operator("x*xi*Dbar^3 + Dbar", &rat(1, 3), &rat(4, 5)).unwrap();
        let symbol = symbol_map(&op).unwrap();
        let doc = SymbolDoc::from(&symbol);
        assert_eq!(doc.parts.len(), symbol.parts().len());
        assert_eq!(doc.decode().unwrap(), symbol);

        let mut skewed = doc.clone();
        skewed.parts[1].weight = "17".into();
        assert!(matches!(skewed.decode(), Err(ParseError::Document(_))));
    }

    #[test]
    fn density_documents_round_trip() {
        let d = Density::new(
            SuperFunction::monomial(rat(-5, 3), 2, true),
            rat(-1, 2),
        );
        let doc = DensityDoc::from(&d);
        let back: DensityDoc =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.decode().unwrap(), d);
    }

    #[test]
    fn bad_rationals_are_parse_errors() {
        let doc = OperatorDoc {
            lambda: "one".into(),
            mu: "0".into(),
            coeffs: Vec::new(),
        };
        assert!(matches!(doc.decode(), Err(ParseError::Rational { .. })));
    }
}
