//! Canonical text form of polynomials: descending powers, `*` between coefficient and
//! variable, `^` for exponents, and ` + ` / ` - ` between terms. The CLI parser reads this
//! form back.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::Poly;
use crate::numeric::Rational;
use crate::ring::Coefficient;

/// How a coefficient renders in front of a power of the variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermCoefficient {
    /// A signed scalar-like value; `magnitude` is `None` for a unit.
    Signed {
        negative: bool,
        magnitude: Option<String>,
    },
    /// A sum that needs parentheses, already including them.
    Compound(String),
}

impl TermCoefficient {
    pub fn rational(q: &Rational) -> Self {
        let abs = q.abs();
        TermCoefficient::Signed {
            negative: q.is_negative(),
            magnitude: (!abs.is_one()).then(|| abs.to_string()),
        }
    }
}

fn power(var: &str, i: usize) -> String {
    match i {
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

pub fn format_poly<C: Coefficient>(
    f: &Poly<C>,
    var: &str,
    term: impl Fn(&C) -> TermCoefficient,
) -> String {
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero_coeff() {
            continue;
        }
        let (negative, body) = match term(c) {
            TermCoefficient::Signed {
                negative,
                magnitude,
            } => {
                let body = match (magnitude, i) {
                    (None, 0) => "1".to_string(),
                    (None, _) => power(var, i),
                    (Some(m), 0) => m,
                    (Some(m), _) => format!("{m}*{}", power(var, i)),
                };
                (negative, body)
            }
            TermCoefficient::Compound(s) => match i {
                0 => (false, s),
                _ => (false, format!("{s}*{}", power(var, i))),
            },
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "x", TermCoefficient::rational))
    }
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "x", |c| {
            TermCoefficient::rational(&Rational::from_integer(c.clone()))
        }))
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{IntPoly, RatPoly};

    #[test]
    fn canonical_strings() {
        assert_eq!(
            RatPoly::from_fracs(&[(3, 1), (-1, 2), (1, 1)]).to_string(),
            "x^2 - 1/2*x + 3"
        );
        assert_eq!(
            RatPoly::from_fracs(&[(-1, 3), (1, 1)]).to_string(),
            "x - 1/3"
        );
        assert_eq!(RatPoly::from_i64s(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(RatPoly::from_i64s(&[-1]).to_string(), "-1");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(
            IntPoly::from_i64s(&[0, 0, 0, -6, 2]).to_string(),
            "2*x^4 - 6*x^3"
        );
    }
}
