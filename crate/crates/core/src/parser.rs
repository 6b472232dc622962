//! Text form of polynomials.
//!
//! Grammar (whitespace is skipped between tokens):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary | power)*        juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' INTEGER)?
//! atom    := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
//! ```
//!
//! A fraction literal is a single atom, so `1/2x` reads as `(1/2)*x`.
//! Identifiers are split greedily into declared variable names, which lets
//! `x^2y^2z` and `2xy^3` parse without explicit `*`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Largest total degree a parsed polynomial may reach.
pub const MAX_DEGREE: u32 = 512;
/// Largest number of terms any intermediate result may hold.
pub const MAX_TERMS: usize = 200_000;
const MAX_NESTING: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownIdentifier(String),
    NegativeExponent,
    NonIntegerExponent,
    ChainedExponent,
    UnbalancedParen,
    ZeroDenominator,
    TooLarge,
    TooDeep,
    InvalidVariables(String),
}

/// Parse failure with the 1-based character column where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub column: usize,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyInput => write!(f, "empty input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier {s:?}"),
            ParseErrorKind::NegativeExponent => write!(f, "exponent must be non-negative"),
            ParseErrorKind::NonIntegerExponent => write!(f, "exponent must be an integer literal"),
            ParseErrorKind::ChainedExponent => write!(f, "chained exponent needs parentheses"),
            ParseErrorKind::UnbalancedParen => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
            ParseErrorKind::TooLarge => write!(
                f,
                "expression exceeds limits (degree {MAX_DEGREE}, {MAX_TERMS} terms)"
            ),
            ParseErrorKind::TooDeep => write!(f, "nesting deeper than {MAX_NESTING}"),
            ParseErrorKind::InvalidVariables(s) => write!(f, "invalid variable list: {s}"),
        }
    }
}

/// Polynomial text together with its ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialSource {
    pub text: String,
    pub variables: Vec<String>,
}

impl PolynomialSource {
    pub fn new(text: impl Into<String>, variables: &[&str]) -> Self {
        PolynomialSource {
            text: text.into(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// `x, y, z` for arity up to three, `x1, x2, ...` beyond.
pub fn default_names(arity: usize) -> Vec<String> {
    const SHORT: [&str; 3] = ["x", "y", "z"];
    if arity <= 3 {
        SHORT[..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

pub fn parse_polynomial(src: &PolynomialSource) -> Result<Polynomial, ParseError> {
    let names: Vec<&str> = src.variables.iter().map(String::as_str).collect();
    parse_with(&src.text, &names)
}

pub fn parse_with(text: &str, variables: &[&str]) -> Result<Polynomial, ParseError> {
    validate_names(variables)?;
    let tokens = lex(text, variables)?;
    if tokens.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::EmptyInput,
            column: 1,
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        arity: variables.len(),
        depth: 0,
        end_column: text.chars().count() + 1,
    };
    let p = parser.expr()?;
    if let Some(tok) = parser.peek() {
        let kind = match tok.kind {
            Tok::RParen => ParseErrorKind::UnbalancedParen,
            ref k => ParseErrorKind::UnexpectedToken(k.describe()),
        };
        return Err(ParseError {
            kind,
            column: tok.column,
        });
    }
    Ok(p)
}

fn validate_names(variables: &[&str]) -> Result<(), ParseError> {
    let bad = |msg: String| ParseError {
        kind: ParseErrorKind::InvalidVariables(msg),
        column: 1,
    };
    for (i, v) in variables.iter().enumerate() {
        let mut chars = v.chars();
        let ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(bad(format!("{v:?} is not an identifier")));
        }
        if variables[..i].contains(v) {
            return Err(bad(format!("{v:?} repeated")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(_) => "variable".to_string(),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Slash => "'/'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Int(_) | Tok::Var(_) | Tok::LParen)
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    column: usize,
}

fn lex(text: &str, variables: &[&str]) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            tokens.push(Token {
                kind: Tok::Int(n),
                column,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            split_identifier(&word, start + 1, variables, &mut tokens)?;
            continue;
        }
        let kind = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    column,
                })
            }
        };
        tokens.push(Token { kind, column });
        i += 1;
    }
    Ok(tokens)
}

/// Splits a run like `xy2z` into declared names, longest match first.
/// Digits inside the run become integer factors only after a full name.
fn split_identifier(
    word: &str,
    column: usize,
    variables: &[&str],
    out: &mut Vec<Token>,
) -> Result<(), ParseError> {
    let mut rest = word;
    let mut col = column;
    while !rest.is_empty() {
        if rest.as_bytes()[0].is_ascii_digit() {
            let len = rest.bytes().take_while(u8::is_ascii_digit).count();
            out.push(Token {
                kind: Tok::Int(rest[..len].parse().expect("ascii digits")),
                column: col,
            });
            rest = &rest[len..];
            col += len;
            continue;
        }
        let best = variables
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(**v))
            .max_by_key(|(_, v)| v.len());
        match best {
            Some((idx, v)) => {
                out.push(Token {
                    kind: Tok::Var(idx),
                    column: col,
                });
                rest = &rest[v.len()..];
                col += v.len();
            }
            None => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnknownIdentifier(rest.to_string()),
                    column: col,
                })
            }
        }
    }
    Ok(())
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    arity: usize,
    depth: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            column: self.peek().map_or(self.end_column, |t| t.column),
        }
    }

    fn guard(&self, p: Polynomial, column: usize) -> Result<Polynomial, ParseError> {
        if p.num_terms() > MAX_TERMS || p.total_degree().unwrap_or(0) > MAX_DEGREE {
            return Err(ParseError {
                kind: ParseErrorKind::TooLarge,
                column,
            });
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.err_here(ParseErrorKind::TooDeep));
        }
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            let column = tok.column;
            match tok.kind {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.guard(&acc + &rhs, column)?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.guard(&acc - &rhs, column)?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.peek() {
            let column = tok.column;
            let rhs = if tok.kind == Tok::Star {
                self.pos += 1;
                self.unary()?
            } else if tok.kind.starts_atom() {
                self.power()?
            } else {
                break;
            };
            acc = self.checked_mul(&acc, &rhs, column)?;
        }
        Ok(acc)
    }

    fn checked_mul(&self, a: &Polynomial, b: &Polynomial, column: usize) -> Result<Polynomial, ParseError> {
        let degree = a.total_degree().unwrap_or(0) + b.total_degree().unwrap_or(0);
        if a.num_terms().saturating_mul(b.num_terms()) > 50 * MAX_TERMS || degree > MAX_DEGREE {
            return Err(ParseError {
                kind: ParseErrorKind::TooLarge,
                column,
            });
        }
        self.guard(a * b, column)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().map(|t| &t.kind) {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(self.err_here(ParseErrorKind::TooDeep));
                }
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(-&inner)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(self.err_here(ParseErrorKind::TooDeep));
                }
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(inner)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        let Some(tok) = self.peek() else {
            return Ok(base);
        };
        if tok.kind != Tok::Caret {
            return Ok(base);
        }
        let caret_column = tok.column;
        self.pos += 1;
        let exp = match self.next() {
            Some(Token {
                kind: Tok::Int(n), ..
            }) => n,
            Some(Token {
                kind: Tok::Minus,
                column,
            }) => {
                return Err(ParseError {
                    kind: ParseErrorKind::NegativeExponent,
                    column,
                })
            }
            Some(Token { kind, column }) => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedToken(kind.describe()),
                    column,
                })
            }
            None => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedEnd,
                    column: self.end_column,
                })
            }
        };
        match self.peek() {
            Some(Token {
                kind: Tok::Slash,
                column,
            }) => {
                return Err(ParseError {
                    kind: ParseErrorKind::NonIntegerExponent,
                    column: *column,
                })
            }
            Some(Token {
                kind: Tok::Caret,
                column,
            }) => {
                return Err(ParseError {
                    kind: ParseErrorKind::ChainedExponent,
                    column: *column,
                })
            }
            _ => {}
        }
        let too_large = ParseError {
            kind: ParseErrorKind::TooLarge,
            column: caret_column,
        };
        let e = exp.to_u32().ok_or_else(|| too_large.clone())?;
        let base_degree = base.total_degree().unwrap_or(0);
        if e > 1 && (base_degree.saturating_mul(e) > MAX_DEGREE || (base_degree == 0 && e > MAX_DEGREE)) {
            return Err(too_large);
        }
        if e > 1 && base.num_terms() > 1 {
            // bound the expansion size before doing the work
            let monomials = monomial_count(base_degree * e, self.arity);
            let powers = (base.num_terms() as f64).powf(e as f64);
            if monomials.min(powers) > 20_000.0 {
                return Err(too_large);
            }
        }
        self.guard(base.pow(e), caret_column)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let Some(tok) = self.next() else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                column: self.end_column,
            });
        };
        match tok.kind {
            Tok::Int(n) => {
                if let Some(Token {
                    kind: Tok::Slash, ..
                }) = self.peek()
                {
                    self.pos += 1;
                    match self.next() {
                        Some(Token {
                            kind: Tok::Int(d),
                            column,
                        }) => {
                            if d.is_zero() {
                                return Err(ParseError {
                                    kind: ParseErrorKind::ZeroDenominator,
                                    column,
                                });
                            }
                            let r = Rational::new(n, d).expect("nonzero denominator");
                            Ok(Polynomial::constant(self.arity, r))
                        }
                        Some(Token { kind, column }) => Err(ParseError {
                            kind: ParseErrorKind::UnexpectedToken(kind.describe()),
                            column,
                        }),
                        None => Err(ParseError {
                            kind: ParseErrorKind::UnexpectedEnd,
                            column: self.end_column,
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(self.arity, Rational::from_integer(n)))
                }
            }
            Tok::Var(i) => Ok(Polynomial::var(self.arity, i)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token {
                        kind: Tok::RParen, ..
                    }) => Ok(inner),
                    Some(Token { kind, column }) => Err(ParseError {
                        kind: ParseErrorKind::UnexpectedToken(kind.describe()),
                        column,
                    }),
                    None => Err(ParseError {
                        kind: ParseErrorKind::UnbalancedParen,
                        column: tok.column,
                    }),
                }
            }
            Tok::RParen => Err(ParseError {
                kind: ParseErrorKind::UnbalancedParen,
                column: tok.column,
            }),
            other => Err(ParseError {
                kind: ParseErrorKind::UnexpectedToken(other.describe()),
                column: tok.column,
            }),
        }
    }
}

/// Number of monomials of total degree at most `degree` in `arity` variables.
fn monomial_count(degree: u32, arity: usize) -> f64 {
    (1..=arity).fold(1.0, |acc, k| acc * (degree as f64 + k as f64) / k as f64)
}

/// Canonical text: terms from the leading monomial down, coefficient `1`
/// omitted, `^1` omitted. Single-letter names are juxtaposed (`2x^3y`);
/// longer names are joined with `*`. Panics when the name count differs
/// from the arity.
pub fn format_polynomial<S: AsRef<str>>(p: &Polynomial, variables: &[S]) -> String {
    assert_eq!(variables.len(), p.arity(), "one name per variable");
    if p.is_zero() {
        return "0".to_string();
    }
    let juxtapose = variables.iter().all(|v| v.as_ref().len() == 1);
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        for (v, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(variables[v].as_ref().to_string()),
                _ => factors.push(format!("{}^{}", variables[v].as_ref(), e)),
            }
        }
        if factors.is_empty() {
            write!(out, "{abs}").expect("string write");
            continue;
        }
        let sep = if juxtapose { "" } else { "*" };
        if !abs.is_one() {
            write!(out, "{abs}{sep}").expect("string write");
        }
        out.push_str(&factors.join(sep));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1";

    fn err(text: &str, vars: &[&str]) -> ParseError {
        parse_with(text, vars).unwrap_err()
    }

    #[test]
    fn parses_paper_polynomials() {
        let chang = parse_with("x^2+y^2", &["x", "y"]).unwrap();
        assert_eq!(chang.num_terms(), 2);
        let e1 = parse_with(EXAMPLE1, &["x", "y", "z"]).unwrap();
        assert_eq!(e1.num_terms(), 8);
        assert_eq!(e1.coeff(&[2, 2, 1]), Rational::one());
        assert_eq!(e1.coeff(&[0, 0, 0]), Rational::from(-1));
        let sq = parse_with("(x+1)^2", &["x"]).unwrap();
        assert_eq!(format_polynomial(&sq, &["x"]), "x^2+2x+1");
    }

    #[test]
    fn formats_canonically() {
        let p = parse_with("(x+y)(x-y)", &["x", "y"]).unwrap();
        assert_eq!(format_polynomial(&p, &["x", "y"]), "x^2-y^2");
        assert_eq!(format_polynomial(&Polynomial::zero(2), &["x", "y"]), "0");
        let e1 = parse_with("(x^2-1)(y^2+1)(z+1)", &["x", "y", "z"]).unwrap();
        assert_eq!(format_polynomial(&e1, &["x", "y", "z"]), EXAMPLE1);
        let e2 = parse_with("(x^3+x+y^3+2)^2", &["x", "y"]).unwrap();
        assert_eq!(
            format_polynomial(&e2, &["x", "y"]),
            "x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4"
        );
    }

    #[test]
    fn fraction_binds_tighter_than_juxtaposition() {
        let p = parse_with("1/2x", &["x"]).unwrap();
        assert_eq!(p.coeff(&[1]), Rational::new(1, 2).unwrap());
        assert_eq!(format_polynomial(&p, &["x"]), "1/2x");
        let q = parse_with("-3/4x^2y+2/3", &["x", "y"]).unwrap();
        assert_eq!(format_polynomial(&q, &["x", "y"]), "-3/4x^2y+2/3");
    }

    #[test]
    fn multi_letter_names() {
        let p = parse_with("2ab^2 + b", &["a", "b"]).unwrap();
        assert_eq!(format_polynomial(&p, &["a", "b"]), "2ab^2+b");
        let q = parse_with("u1*u2^2 - 3", &["u1", "u2"]).unwrap();
        let text = format_polynomial(&q, &["u1", "u2"]);
        assert_eq!(text, "u1*u2^2-3");
        assert_eq!(parse_with(&text, &["u1", "u2"]).unwrap(), q);
    }

    #[test]
    fn precedence() {
        let vars = ["x", "y"];
        assert_eq!(parse_with("-x^2", &vars).unwrap(), parse_with("-(x^2)", &vars).unwrap());
        assert_eq!(parse_with("2x^3y", &vars).unwrap(), parse_with("2*(x^3)*y", &vars).unwrap());
        assert_eq!(parse_with("x+y*x", &vars).unwrap(), parse_with("x+(y*x)", &vars).unwrap());
        assert_eq!(parse_with("x*-y", &vars).unwrap(), parse_with("-xy", &vars).unwrap());
        assert_eq!(parse_with("(x+1)(x-1)", &vars).unwrap(), parse_with("x^2-1", &vars).unwrap());
    }

    #[test]
    fn diagnostics_carry_columns() {
        let e = err("x^^2", &["x"]);
        assert_eq!(e.column, 3);
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedToken(_)));
        assert_eq!(err("x+w", &["x"]).kind, ParseErrorKind::UnknownIdentifier("w".into()));
        assert_eq!(err("x+w", &["x"]).column, 3);
        assert_eq!(err("x^-1", &["x"]).kind, ParseErrorKind::NegativeExponent);
        assert_eq!(err("x^1/2", &["x"]).kind, ParseErrorKind::NonIntegerExponent);
        assert_eq!(err("(x+1", &["x"]), ParseError { kind: ParseErrorKind::UnbalancedParen, column: 1 });
        assert_eq!(err("x+1)", &["x"]), ParseError { kind: ParseErrorKind::UnbalancedParen, column: 4 });
        assert_eq!(err("", &["x"]).kind, ParseErrorKind::EmptyInput);
        assert_eq!(err("   ", &["x"]).kind, ParseErrorKind::EmptyInput);
        assert_eq!(err("x+", &["x"]).kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err("1/0x", &["x"]).kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(err("x^2^3", &["x"]).kind, ParseErrorKind::ChainedExponent);
        assert_eq!(err("x.5", &["x"]).kind, ParseErrorKind::UnexpectedChar('.'));
        assert_eq!(err("x^99999999999", &["x"]).kind, ParseErrorKind::TooLarge);
        assert_eq!(err("(x+y+1)^400", &["x", "y"]).kind, ParseErrorKind::TooLarge);
        assert!(matches!(err("x", &["x", "x"]).kind, ParseErrorKind::InvalidVariables(_)));
        let deep = "(".repeat(500) + "x" + &")".repeat(500);
        assert_eq!(err(&deep, &["x"]).kind, ParseErrorKind::TooDeep);
    }
}
