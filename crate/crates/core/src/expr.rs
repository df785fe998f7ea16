//! Expression language for operators and superfunctions.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | 'x' | 'xi' | 'D' | 'Dbar' | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Juxtaposition is rejected (`2x` is a syntax error, write `2*x`).
//! Evaluation normalizes everything to coefficients left of `D̄`-powers via
//! the rewrites `D = D̄ − 2ξD̄²`, `D̄∘(x·) = −ξ + x·D̄`, `D̄∘(ξ·) = 1 − ξ·D̄`
//! and `ξ² = 0`, so the printer ([`DiffOperator`]'s `Display`) and this
//! parser round-trip on normal forms.

use crate::contact::Density;
use crate::diffop::{compose_coeffs, DiffOperator};
use crate::error::ParseError;
use crate::rat::{parse_rat, rint, Rat};
use crate::superfunc::SuperFunction;
use num_bigint::BigInt;
use num_traits::Zero;

// ---------------------------------------------------------------------------
// tokens
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Int(n) => format!("number {n}"),
            TokenKind::Ident(s) => format!("symbol {s:?}"),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Slash => "'/'".into(),
            TokenKind::Caret => "'^'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                digits.push(bump(&mut chars));
            }
            let n: BigInt = digits.parse().map_err(|e| ParseError::Rational {
                text: digits.clone(),
                msg: format!("{e}"),
            })?;
            tokens.push(Token { kind: TokenKind::Int(n), line: tline, col: tcol });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                name.push(bump(&mut chars));
            }
            match name.as_str() {
                "x" | "xi" | "D" | "Dbar" => {
                    tokens.push(Token { kind: TokenKind::Ident(name), line: tline, col: tcol })
                }
                other => {
                    return Err(ParseError::syntax(
                        tline,
                        tcol,
                        format!("unknown symbol {other:?} (expected x, xi, D or Dbar)"),
                    ))
                }
            }
            continue;
        }
        let kind = match c {
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            other => {
                return Err(ParseError::syntax(
                    tline,
                    tcol,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        bump(&mut chars);
        tokens.push(Token { kind, line: tline, col: tcol });
    }
    Ok(tokens)
}

// ---------------------------------------------------------------------------
// syntax tree and parser
// ---------------------------------------------------------------------------

/// Abstract syntax for the expression language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Rat),
    X,
    Xi,
    D,
    Dbar,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| t.kind == *kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            let (line, col) = self.here();
            let found = self.peek().map_or("end of input".into(), |t| t.kind.describe());
            Err(ParseError::syntax(
                line,
                col,
                format!("expected {}, found {found}", kind.describe()),
            ))
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat(&TokenKind::Minus) {
            Expr::Neg(Box::new(self.parse_term()?))
        } else {
            self.parse_term()?
        };
        loop {
            if self.eat(&TokenKind::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.parse_term()?));
            } else if self.eat(&TokenKind::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.parse_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat(&TokenKind::Star) {
            acc = Expr::Mul(Box::new(acc), Box::new(self.parse_factor()?));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.parse_atom()?;
        if self.eat(&TokenKind::Caret) {
            let (line, col) = self.here();
            match self.peek().map(|t| t.kind.clone()) {
                Some(TokenKind::Int(n)) => {
                    self.pos += 1;
                    let exp = u32::try_from(&n).map_err(|_| {
                        ParseError::syntax(line, col, format!("exponent {n} is too large"))
                    })?;
                    Ok(Expr::Pow(Box::new(atom), exp))
                }
                other => Err(ParseError::syntax(
                    line,
                    col,
                    format!(
                        "expected a natural exponent after '^', found {}",
                        other.map_or("end of input".into(), |k| k.describe())
                    ),
                )),
            }
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let (line, col) = self.here();
        let Some(token) = self.peek().cloned() else {
            return Err(ParseError::syntax(line, col, "expected an expression".to_string()));
        };
        self.pos += 1;
        match token.kind {
            TokenKind::Int(numer) => {
                if self.eat(&TokenKind::Slash) {
                    let (dline, dcol) = self.here();
                    match self.peek().map(|t| t.kind.clone()) {
                        Some(TokenKind::Int(denom)) => {
                            self.pos += 1;
                            if denom.is_zero() {
                                return Err(ParseError::Rational {
                                    text: format!("{numer}/{denom}"),
                                    msg: "denominator is zero".into(),
                                });
                            }
                            Ok(Expr::Rational(Rat::new(numer, denom)))
                        }
                        other => Err(ParseError::syntax(
                            dline,
                            dcol,
                            format!(
                                "expected a denominator after '/', found {}",
                                other.map_or("end of input".into(), |k| k.describe())
                            ),
                        )),
                    }
                } else {
                    Ok(Expr::Rational(Rat::from(numer)))
                }
            }
            TokenKind::Ident(name) => Ok(match name.as_str() {
                "x" => Expr::X,
                "xi" => Expr::Xi,
                "D" => Expr::D,
                "Dbar" => Expr::Dbar,
                _ => unreachable!("lexer admits only known symbols"),
            }),
            TokenKind::LParen => {
                let inner = self.parse_expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            kind => Err(ParseError::syntax(
                line,
                col,
                format!("expected an expression, found {}", kind.describe()),
            )),
        }
    }
}

/// Parse a source string into an [`Expr`].
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let lines = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, str::len);
    let mut parser = Parser { tokens, pos: 0, end: (lines, last_len + 1) };
    let expr = parser.parse_expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::syntax(
            tok.line,
            tok.col,
            format!(
                "unexpected {} (an explicit '*' is required for multiplication)",
                tok.kind.describe()
            ),
        ));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// evaluation to normal form
// ---------------------------------------------------------------------------

fn coeffs_add(lhs: Vec<SuperFunction>, rhs: &[SuperFunction]) -> Vec<SuperFunction> {
    let mut out = lhs;
    if out.len() < rhs.len() {
        out.resize(rhs.len(), SuperFunction::zero());
    }
    for (slot, c) in out.iter_mut().zip(rhs.iter()) {
        *slot = &*slot + c;
    }
    out
}

fn eval_coeffs(expr: &Expr) -> Vec<SuperFunction> {
    match expr {
        Expr::Rational(r) => vec![SuperFunction::constant(r.clone())],
        Expr::X => vec![SuperFunction::x()],
        Expr::Xi => vec![SuperFunction::xi()],
        Expr::Dbar => vec![SuperFunction::zero(), SuperFunction::one()],
        // D = D̄ − 2ξD̄²
        Expr::D => vec![
            SuperFunction::zero(),
            SuperFunction::one(),
            SuperFunction::xi().scale(&rint(-2)),
        ],
        Expr::Neg(inner) => {
            eval_coeffs(inner).into_iter().map(|c| c.scale(&rint(-1))).collect()
        }
        Expr::Add(lhs, rhs) => coeffs_add(eval_coeffs(lhs), &eval_coeffs(rhs)),
        Expr::Sub(lhs, rhs) => {
            let negated: Vec<SuperFunction> =
                eval_coeffs(rhs).into_iter().map(|c| c.scale(&rint(-1))).collect();
            coeffs_add(eval_coeffs(lhs), &negated)
        }
        Expr::Mul(lhs, rhs) => compose_coeffs(&eval_coeffs(lhs), &eval_coeffs(rhs)),
        Expr::Pow(base, exp) => {
            let base = eval_coeffs(base);
            let mut acc = vec![SuperFunction::one()];
            for _ in 0..*exp {
                acc = compose_coeffs(&acc, &base);
            }
            acc
        }
    }
}

/// Parse and normalize a string to a differential operator `F_λ → F_μ`.
pub fn parse_operator(text: &str, lambda: &Rat, mu: &Rat) -> Result<DiffOperator, ParseError> {
    let expr = parse(text)?;
    Ok(DiffOperator::new(eval_coeffs(&expr), lambda.clone(), mu.clone()))
}

/// Parse a string that must normalize to a plain superfunction (no
/// surviving `D`/`Dbar` action).
pub fn parse_superfunction(text: &str) -> Result<SuperFunction, ParseError> {
    let expr = parse(text)?;
    let mut coeffs = eval_coeffs(&expr);
    while coeffs.last().is_some_and(SuperFunction::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() > 1 {
        return Err(ParseError::Document(format!(
            "expected a function of x and xi, but {text:?} acts by derivatives"
        )));
    }
    Ok(coeffs.pop().unwrap_or_else(SuperFunction::zero))
}

/// Parse a comma-separated list of weighted densities `VALUE@WEIGHT, ...`;
/// each `VALUE` is an expression in `x`, `xi` and each `WEIGHT` a rational.
pub fn parse_density_list(text: &str) -> Result<Vec<Density>, ParseError> {
    text.split(',')
        .map(|piece| {
            let Some((value_text, weight_text)) = piece.rsplit_once('@') else {
                return Err(ParseError::Document(format!(
                    "expected VALUE@WEIGHT, got {:?}",
                    piece.trim()
                )));
            };
            let value = parse_superfunction(value_text)?;
            let weight_text = weight_text.trim();
            let weight = parse_rat(weight_text).map_err(|msg| ParseError::Rational {
                text: weight_text.to_string(),
                msg,
            })?;
            Ok(Density::new(value, weight))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn op(text: &str) -> DiffOperator {
        parse_operator(text, &rint(0), &rint(0)).expect(text)
    }

    #[test]
    fn parses_rationals_and_monomials() {
        assert_eq!(
            parse_superfunction("3/2*x^2*xi").unwrap(),
            SuperFunction::monomial(rat(3, 2), 2, true)
        );
        assert_eq!(parse_superfunction("-xi").unwrap(), SuperFunction::xi().scale(&rint(-1)));
        assert_eq!(
            parse_superfunction("(1 + x)^2 - x^2").unwrap(),
            SuperFunction::constant(rint(1)) + SuperFunction::x().scale(&rint(2))
        );
    }

    #[test]
    fn normalizes_d_to_the_dbar_basis() {
        // D = D̄ − 2ξD̄², and D² = ∂x = −D̄²
        let d = op("D");
        assert_eq!(d.coeff(1), SuperFunction::one());
        assert_eq!(d.coeff(2), SuperFunction::xi().scale(&rint(-2)));
        assert_eq!(op("D^2"), op("-Dbar^2"));
        assert_eq!(op("D*Dbar + Dbar*D"), DiffOperator::zero(rint(0), rint(0)));
    }

    #[test]
    fn normalization_respects_application() {
        // push-through rewrites agree with applying the factors in sequence
        for text in ["Dbar*x", "Dbar*xi", "D*x*Dbar", "(x*Dbar + xi)^3"] {
            let operator = op(text);
            let by_hand = |f: &SuperFunction| match text {
                "Dbar*x" => (SuperFunction::x() * f).dbar(),
                "Dbar*xi" => (SuperFunction::xi() * f).dbar(),
                "D*x*Dbar" => (SuperFunction::x() * f.dbar()).d(),
                _ => {
                    let step =
                        |g: &SuperFunction| SuperFunction::x() * g.dbar() + SuperFunction::xi() * g;
                    step(&step(&step(f)))
                }
            };
            for probe in [
                SuperFunction::monomial(rint(1), 3, false),
                SuperFunction::monomial(rint(1), 2, true),
            ] {
                assert_eq!(operator.apply_value(&probe), by_hand(&probe), "{text}");
            }
        }
    }

    #[test]
    fn printer_and_parser_round_trip() {
        for text in [
            "Dbar^3",
            "x*Dbar + 1/2*xi",
            "(1 + x)*Dbar^2 + xi*Dbar - 3/2",
            "-x^2*xi*Dbar^4 + 2/7",
            "xi",
            "0",
        ] {
            let operator = op(text);
            let printed = operator.to_string();
            assert_eq!(
                parse_operator(&printed, &rint(0), &rint(0)).expect(&printed),
                operator,
                "{text} printed as {printed}"
            );
        }
    }

    #[test]
    fn rejects_juxtaposition_and_bad_tokens() {
        let err = parse("2x").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, col: 2, .. }), "{err:?}");
        assert!(err.to_string().contains("'*'"));

        let err = parse("y + 1").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, col: 1, .. }), "{err:?}");

        let err = parse("x *").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { col: 4, .. }), "{err:?}");

        let err = parse("Dbar^x").unwrap_err();
        assert!(err.to_string().contains("exponent"), "{err}");

        let err = parse("1/0").unwrap_err();
        assert!(matches!(err, ParseError::Rational { .. }), "{err:?}");

        let err = parse("(x + 1").unwrap_err();
        assert!(err.to_string().contains("')'"), "{err}");

        assert!(parse("").is_err());
    }

    #[test]
    fn reports_positions_across_lines() {
        let err = parse("x +\n  $").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, col: 3, .. }), "{err:?}");
    }

    #[test]
    fn density_lists_parse_and_round_trip() {
        let list = parse_density_list("x^2@3/2, (2*xi)@1, 1/3@1/2").unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(list[0].value(), &SuperFunction::monomial(rint(1), 2, false));
        assert_eq!(list[0].weight(), &rat(3, 2));
        assert_eq!(list[1].value(), &SuperFunction::xi().scale(&rint(2)));
        assert_eq!(list[2].weight(), &rat(1, 2));

        assert!(matches!(
            parse_density_list("x^2"),
            Err(ParseError::Document(_))
        ));
        assert!(matches!(
            parse_density_list("x@pi"),
            Err(ParseError::Rational { .. })
        ));
        // the printed form of a symbol is itself a valid density list
        let symbol = crate::symcalc::symbol_map(
            &parse_operator("x*Dbar^2 + xi", &rat(1, 3), &rat(4, 5)).unwrap(),
        )
        .unwrap();
        let reparsed = parse_density_list(&symbol.to_string()).unwrap();
        let rebuilt = crate::symcalc::SymbolVector::from_densities(
            &reparsed,
            rat(1, 3),
            rat(4, 5),
        )
        .unwrap();
        assert_eq!(rebuilt, symbol);
    }

    #[test]
    fn superfunction_refuses_operators() {
        let err = parse_superfunction("x*Dbar").unwrap_err();
        assert!(matches!(err, ParseError::Document(_)), "{err:?}");
        // an operator expression that cancels down to a function is fine
        assert_eq!(
            parse_superfunction("Dbar*xi + xi*Dbar").unwrap(),
            SuperFunction::one()
        );
    }
}
