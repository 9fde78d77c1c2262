//! Integer-coefficient helpers: content, denominator clearing, and the primitive
//! Euclidean gcd used for rational polynomials.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{pseudo_rem, IntPoly, Poly, PolyRing, RatPoly};
use crate::error::{Error, Result};
use crate::numeric::{lcm_denominators, Rational};
use crate::ring::{Integers, Rationals, Ring};

/// `content * primitive_part` equals the input; the content is positive and the primitive
/// part keeps the input's leading sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentSplit {
    pub content: BigInt,
    pub primitive_part: IntPoly,
}

/// `integer_poly = c * input` with `c` the least positive integer making it integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorSplit {
    pub c: BigInt,
    pub integer_poly: IntPoly,
}

pub fn content_primitive(f: &IntPoly) -> Result<ContentSplit> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let primitive_part = Poly::new(f.coeffs().iter().map(|c| c / &content).collect());
    Ok(ContentSplit {
        content,
        primitive_part,
    })
}

pub fn clear_denominators(f: &RatPoly) -> Result<DenominatorSplit> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = lcm_denominators(f.coeffs());
    let integer_poly = Poly::new(
        f.coeffs()
            .iter()
            .map(|q| (q * Rational::from_integer(c.clone())).to_integer())
            .collect(),
    );
    Ok(DenominatorSplit { c, integer_poly })
}

pub fn int_to_rat(f: &IntPoly) -> RatPoly {
    f.map(|c| Rational::from_integer(c.clone()))
}

/// `f / g` over the integers when `g` divides `f` exactly.
///
/// Cheap rejections on the leading and trailing coefficients run first, since most
/// recombination candidates fail one of them.
pub fn exact_div_int(f: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let dg = g.degree()?;
    let df = f.degree()?;
    if df < dg {
        return None;
    }
    let lg = g.leading().expect("nonzero");
    if !(f.leading().expect("nonzero") % lg).is_zero() {
        return None;
    }
    let (f0, g0) = (&f.coeffs()[0], &g.coeffs()[0]);
    if !g0.is_zero() && !(f0 % g0).is_zero() {
        return None;
    }
    let mut rem = f.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); df - dg + 1];
    for i in (0..quot.len()).rev() {
        let (c, r) = rem[i + dg].div_rem(lg);
        if !r.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.coeffs().iter().enumerate() {
            rem[i + j] -= &c * gj;
        }
        quot[i] = c;
    }
    rem[..dg].iter().all(Zero::is_zero).then(|| Poly::new(quot))
}

fn primitive_or_zero(f: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return f.clone();
    }
    let split = content_primitive(f).expect("nonzero");
    let p = split.primitive_part;
    if p.leading().is_some_and(Signed::is_negative) {
        PolyRing::new(Integers).neg(&p)
    } else {
        p
    }
}

/// Monic gcd over the rationals via the primitive polynomial remainder sequence on integer
/// polynomials, dividing out the content at every step to keep coefficients small.
pub fn gcd_q(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let qx = PolyRing::new(Rationals);
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return RatPoly::zero(),
        (false, true) => return qx.monic(f).expect("nonzero"),
        (true, false) => return qx.monic(g).expect("nonzero"),
        _ => {}
    }
    let to_prim =
        |h: &RatPoly| primitive_or_zero(&clear_denominators(h).expect("nonzero").integer_poly);
    let (mut a, mut b) = (to_prim(f), to_prim(g));
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return qx.one();
        }
        let r = pseudo_rem(&Integers, &a, &b).expect("divisor is nonzero");
        a = b;
        b = primitive_or_zero(&r);
    }
    let lc = Rational::from_integer(a.leading().expect("nonzero").clone());
    qx.scale(&int_to_rat(&a), &lc.recip())
}

impl ContentSplit {
    pub fn is_primitive(&self) -> bool {
        self.content.is_one()
    }
}
