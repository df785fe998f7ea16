//! Round-trip guarantees between the printers and the parsers.
//!
//! Printed operators, symbols, and JSON documents must re-parse to exactly
//! the values they came from. The fixed expression list pins the accepted
//! surface syntax; the proptest blocks drive the same property over
//! generated data.

use proptest::prelude::*;

use supercircle::expr::{parse_density_list, parse_operator};
use supercircle::json::{OperatorDoc, SymbolDoc};
use supercircle::poly::Poly;
use supercircle::rat::{rat, rint, Rat};
use supercircle::superfunc::SuperFunction;
use supercircle::symcalc::{symbol_map, SymbolVector};
use supercircle::DiffOperator;

/// Fifty accepted expressions exercising every atom, operator, precedence
/// level, and the normalizing rewrites.
const GOLDEN_EXPRESSIONS: [&str; 50] = [
    "0",
    "1",
    "-1",
    "3/2",
    "-7/5",
    "x",
    "xi",
    "D",
    "Dbar",
    "x^2",
    "x^0",
    "xi*x",
    "x*xi",
    "2*x",
    "-2*x + 1",
    "x + xi",
    "x - xi",
    "x*Dbar",
    "Dbar*x",
    "Dbar*xi",
    "xi*Dbar",
    "D*x",
    "x*D",
    "D^2",
    "Dbar^2",
    "D*Dbar",
    "Dbar*D",
    "D*Dbar + Dbar*D",
    "Dbar^3",
    "Dbar^7",
    "x^4*Dbar^6",
    "1/2*xi*Dbar^3",
    "(x + 1)*Dbar",
    "(x + xi)^2",
    "(1 - x)^3",
    "x*(x*(x*Dbar))",
    "((Dbar))",
    "-(x*Dbar)",
    "-Dbar^2 - D^2",
    "2/3*x^2*xi*Dbar^4 + 5*x",
    "Dbar*Dbar*Dbar",
    "(x*Dbar + xi)^3",
    "(Dbar*x - x*Dbar)^2",
    "1/3 + 1/5 + 1/7",
    "x^2 - 2*x + 1",
    "xi*(1 + x)*(1 - x)",
    "D*(x*Dbar) - (x*Dbar)*D",
    "(2*Dbar)^3",
    "-1/2*(D + Dbar)",
    "x^3*xi*Dbar^5 - 4/9*Dbar^2 + xi",
];

#[test]
fn golden_expressions_round_trip_through_the_printer() {
    let (lambda, mu) = (rint(0), rat(1, 2));
    for text in GOLDEN_EXPRESSIONS {
        let operator = parse_operator(text, &lambda, &mu)
            .unwrap_or_else(|e| panic!("{text:?} must parse: {e}"));
        let printed = operator.to_string();
        let reparsed = parse_operator(&printed, &lambda, &mu)
            .unwrap_or_else(|e| panic!("printed form {printed:?} of {text:?} must parse: {e}"));
        assert_eq!(reparsed, operator, "{text:?} printed as {printed:?}");
    }
}

#[test]
fn printed_symbols_round_trip_through_the_density_list_parser() {
    let (lambda, mu) = (rat(1, 3), rat(4, 5));
    for text in GOLDEN_EXPRESSIONS {
        let operator = parse_operator(text, &lambda, &mu).expect("golden expression");
        let symbol = symbol_map(&operator).expect("non-resonant weights");
        let printed = symbol.to_string();
        let densities = parse_density_list(&printed)
            .unwrap_or_else(|e| panic!("printed symbol {printed:?} must parse: {e}"));
        let rebuilt = SymbolVector::from_densities(&densities, lambda.clone(), mu.clone())
            .expect("weights fit the ladder");
        assert_eq!(rebuilt, symbol, "{text:?} printed as {printed:?}");
    }
}

// ---------------------------------------------------------------------------
// generated data
// ---------------------------------------------------------------------------

fn rational() -> impl Strategy<Value = Rat> {
    (-24i64..=24, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn superfunction() -> impl Strategy<Value = SuperFunction> {
    (poly(4), poly(4)).prop_map(|(even, odd)| SuperFunction::new(even, odd))
}

fn operator() -> impl Strategy<Value = DiffOperator> {
    prop::collection::vec(superfunction(), 0..=6)
        .prop_map(|coeffs| DiffOperator::new(coeffs, rint(0), rat(1, 2)))
}

proptest! {
    #[test]
    fn any_printed_operator_reparses_to_itself(op in operator()) {
        let printed = op.to_string();
        let reparsed = parse_operator(&printed, op.source_weight(), op.target_weight());
        prop_assert_eq!(reparsed.expect("printer output parses"), op);
    }

    #[test]
    fn any_operator_survives_the_json_documents(op in operator()) {
        let doc = OperatorDoc::from(&op);
        let text = serde_json::to_string(&doc).expect("encodes");
        let back: OperatorDoc = serde_json::from_str(&text).expect("decodes");
        prop_assert_eq!(back.decode().expect("well-formed"), op);
    }

    #[test]
    fn any_symbol_survives_printing_and_the_json_documents(
        parts in prop::collection::vec(superfunction(), 0..=5)
    ) {
        let symbol = SymbolVector::new(parts, rat(1, 3), rat(4, 5));

        let printed = symbol.to_string();
        let densities = parse_density_list(&printed).expect("printer output parses");
        let rebuilt = SymbolVector::from_densities(&densities, rat(1, 3), rat(4, 5))
            .expect("weights fit the ladder");
        prop_assert_eq!(&rebuilt, &symbol);

        let doc = SymbolDoc::from(&symbol);
        let text = serde_json::to_string(&doc).expect("encodes");
        let back: SymbolDoc = serde_json::from_str(&text).expect("decodes");
        prop_assert_eq!(back.decode().expect("well-formed"), symbol);
    }
}
