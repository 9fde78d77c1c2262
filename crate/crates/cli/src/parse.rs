//! Polynomial expressions in `x` with coefficients that may involve `alpha`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'alpha' | '(' expr ')'
//! ```
//!
//! Division is only by nonzero rational constants, so `1/2*x` and `x/3` are fine.

use num_bigint::BigInt;
use num_traits::Zero;
use ratfactor::{ExtPoly, NumberField, Poly, PolyRing, RatPoly, Rational, Rationals, Ring};
use thiserror::Error;

const MAX_EXPONENT: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// A parsed polynomial in `x` whose coefficients are polynomials in `alpha`.
pub type Bivariate = Poly<RatPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Int(usize, usize),
    X,
    Alpha,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(start, i)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let tok = match &text[start..i] {
                    "x" => Token::X,
                    "alpha" => Token::Alpha,
                    other => {
                        return Err(ParseError {
                            position: start,
                            message: format!("unknown identifier `{other}`"),
                        })
                    }
                };
                out.push((start, tok));
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::Open,
            b')' => Token::Close,
            _ => {
                return Err(ParseError {
                    position: start,
                    message: format!(
                        "unexpected character `{}`",
                        text[start..].chars().next().unwrap()
                    ),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    ring: PolyRing<PolyRing<Rationals>>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.text.len(), |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Bivariate, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (Token::Plus | Token::Minus)) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == Token::Plus {
                self.ring.add(&acc, &rhs)
            } else {
                self.ring.sub(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Bivariate, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.ring.mul(&acc, &rhs);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let rhs = self.unary()?;
                    let divisor = constant_value(&rhs).ok_or_else(|| ParseError {
                        position: at,
                        message: "can only divide by a rational constant".into(),
                    })?;
                    if divisor.is_zero() {
                        return Err(ParseError {
                            position: at,
                            message: "division by zero".into(),
                        });
                    }
                    let inv = RatPoly::constant(divisor.recip());
                    acc = self.ring.scale(&acc, &inv);
                }
                Some(Token::Int(..) | Token::X | Token::Alpha | Token::Open) => {
                    let rhs = self.power()?;
                    acc = self.ring.mul(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Bivariate, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                let inner = self.unary()?;
                Ok(self.ring.neg(&inner))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Bivariate, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Token::Int(a, b)) = self.peek() else {
            return self.error("expected a nonnegative integer exponent");
        };
        let exponent: u64 = match self.text[a..b].parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.error(format!("exponent larger than {MAX_EXPONENT}")),
        };
        self.pos += 1;
        Ok(self.ring.pow(&base, exponent as usize))
    }

    fn atom(&mut self) -> Result<Bivariate, ParseError> {
        let Some(tok) = self.peek() else {
            return self.error("unexpected end of input");
        };
        let qx = self.ring.base().clone();
        let value = match tok {
            Token::Int(a, b) => {
                let n: BigInt = self.text[a..b].parse().expect("digits");
                Poly::constant(RatPoly::constant(Rational::from_integer(n)))
            }
            Token::X => self.ring.x(),
            Token::Alpha => Poly::constant(qx.x()),
            Token::Open => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                return Ok(inner);
            }
            _ => return self.error("expected a number, `x`, `alpha`, or `(`"),
        };
        self.pos += 1;
        Ok(value)
    }
}

fn constant_value(f: &Bivariate) -> Option<Rational> {
    match f.coeffs() {
        [] => Some(Rational::zero()),
        [c] if c.degree().unwrap_or(0) == 0 => {
            Some(c.coeff(0).cloned().unwrap_or_else(Rational::zero))
        }
        _ => None,
    }
}

/// Parses `text` into a polynomial in `x` with coefficients in `Q[alpha]`.
pub fn parse_bivariate(text: &str) -> Result<Bivariate, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        text,
        tokens: tokenize(text)?,
        pos: 0,
        ring: PolyRing::new(PolyRing::new(Rationals)),
    };
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(value)
}

fn mentions_alpha(f: &Bivariate) -> bool {
    f.coeffs().iter().any(|c| c.degree().unwrap_or(0) > 0)
}

/// A polynomial in `x` over the rationals; `alpha` is rejected.
pub fn parse_rat_poly(text: &str) -> Result<RatPoly, ParseError> {
    let f = parse_bivariate(text)?;
    if mentions_alpha(&f) {
        let position = text.find("alpha").unwrap_or(0);
        return Err(ParseError {
            position,
            message: "`alpha` needs an extension (--extension)".into(),
        });
    }
    Ok(f.map(|c| c.coeff(0).cloned().unwrap_or_else(Rational::zero)))
}

/// A defining polynomial, written in `alpha` (or, equivalently, in `x`).
pub fn parse_defining_poly(text: &str) -> Result<RatPoly, ParseError> {
    let f = parse_bivariate(text)?;
    let in_x = f.degree().unwrap_or(0) > 0;
    match (in_x, mentions_alpha(&f)) {
        (true, true) => Err(ParseError {
            position: 0,
            message: "a defining polynomial uses a single variable".into(),
        }),
        (true, false) => Ok(f.map(|c| c.coeff(0).cloned().unwrap_or_else(Rational::zero))),
        (false, _) => Ok(f.coeffs().first().cloned().unwrap_or_else(RatPoly::zero)),
    }
}

/// A polynomial over the number field, with `alpha` reduced modulo its defining polynomial.
pub fn parse_ext_poly(text: &str, field: &NumberField) -> Result<ExtPoly, ParseError> {
    let f = parse_bivariate(text)?;
    Ok(field.poly(f.coeffs()))
}
