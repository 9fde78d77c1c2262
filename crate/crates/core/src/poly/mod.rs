//! Dense univariate polynomials over any [`Ring`].
//!
//! [`Poly`] is only a trimmed coefficient vector (index `i` holds the coefficient of `x^i`);
//! arithmetic lives on [`PolyRing`], which carries the coefficient domain. `PolyRing<R>` is
//! itself a ring, so `PolyRing<Rationals>` serves as the coefficient domain `Q[x]` when a
//! resultant is taken with respect to a second variable.

#![allow(clippy::type_complexity)]

mod display;
mod integer;
mod resultant;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::ring::{Coefficient, Field, IntegralDomain, Ring};

pub use display::{format_poly, TermCoefficient};
pub use integer::{
    clear_denominators, content_primitive, exact_div_int, gcd_q, int_to_rat, ContentSplit,
    DenominatorSplit,
};
pub use resultant::{pseudo_rem, resultant, sylvester_determinant};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type RatPoly = Poly<Rational>;
pub type IntPoly = Poly<BigInt>;
pub type ModPoly = Poly<BigUint>;

impl<C: Coefficient> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero_coeff) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: Coefficient>(&self, f: impl FnMut(&C) -> Result<D>) -> Result<Poly<D>> {
        Ok(Poly::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }
}

impl<C: Coefficient> Coefficient for Poly<C> {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

/// Canonical order: ascending degree, then lexicographic on the coefficient sequence
/// starting from the constant term.
impl<C: Coefficient + Ord> PartialOrd for Poly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coefficient + Ord> Ord for Poly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Poly<Rational> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Coefficients given as `(numerator, denominator)` pairs.
    pub fn from_fracs(coeffs: &[(i64, i64)]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    }

    /// Coefficients with denominator 1, if all of them are integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }
}

impl Poly<BigInt> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl Poly<BigUint> {
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }
}

/// Polynomials in one variable over the coefficient domain `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(&self, c: R::Elem, n: usize) -> Poly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); n];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Product over all entries; the empty product is one.
    pub fn product<'a, I>(&self, factors: I) -> Poly<R::Elem>
    where
        I: IntoIterator<Item = &'a Poly<R::Elem>>,
        R::Elem: 'a,
    {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, f: &Poly<R::Elem>, n: usize) -> Poly<R::Elem> {
        Ring::pow(self, f, n as u64)
    }

    pub fn derivative(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_int(&BigInt::from(i)), c))
                .collect(),
        )
    }

    pub fn eval(&self, f: &Poly<R::Elem>, at: &R::Elem) -> R::Elem {
        f.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, at), c)
        })
    }

    /// `f(g(x))` by Horner's scheme.
    pub fn compose(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        f.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, g), &self.constant(c.clone()))
        })
    }
}

impl<R: Field> PolyRing<R> {
    /// Euclidean division `f = q g + r` with `deg r < deg g`.
    pub fn divrem(
        &self,
        f: &Poly<R::Elem>,
        g: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        if f.coeffs.len() <= dg {
            return Ok((self.zero(), f.clone()));
        }
        let lead_inv = self.base.inv(g.leading().expect("nonzero"))?;
        let mut rem = f.coeffs.clone();
        let mut quot = vec![self.base.zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = self.base.mul(&rem[i + dg], &lead_inv);
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                rem[i + j] = self.base.sub(&rem[i + j], &self.base.mul(&c, gj));
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        Ok(self.divrem(f, g)?.1)
    }

    /// Quotient `f / g` when the division leaves no remainder.
    pub fn checked_div(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Option<Poly<R::Elem>> {
        match self.divrem(f, g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self, f: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        match f.leading() {
            None => Ok(f.clone()),
            Some(lc) => Ok(self.scale(f, &self.base.inv(lc)?)),
        }
    }

    pub fn is_monic(&self, f: &Poly<R::Elem>) -> bool {
        f.leading().is_some_and(|lc| self.base.is_one(lc))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut a = f.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        self.monic(&a)
            .expect("leading coefficient of a nonzero polynomial is a unit")
    }

    /// Returns `(g, s, t)` with `s f + t h = g` and `g` the monic gcd.
    pub fn extended_gcd(
        &self,
        f: &Poly<R::Elem>,
        h: &Poly<R::Elem>,
    ) -> (Poly<R::Elem>, Poly<R::Elem>, Poly<R::Elem>) {
        let (mut r0, mut r1) = (f.clone(), h.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).expect("divisor is nonzero");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero leading coefficient");
                (
                    self.scale(&r0, &inv),
                    self.scale(&s0, &inv),
                    self.scale(&t0, &inv),
                )
            }
        }
    }

    /// `f^e mod modulus` by square-and-multiply; intermediate results never exceed the
    /// modulus degree.
    pub fn pow_mod(
        &self,
        f: &Poly<R::Elem>,
        e: &BigUint,
        modulus: &Poly<R::Elem>,
    ) -> Result<Poly<R::Elem>> {
        let base = self.rem(f, modulus)?;
        let mut acc = self.rem(&self.one(), modulus)?;
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus)?;
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), modulus)?;
            }
        }
        Ok(acc)
    }

    /// Characteristic-zero multiplicity layers of a monic `f`.
    ///
    /// With `P_1 = f / gcd(f, f')`, `g_1 = gcd(f, f')`, `P_2 = g_1 / gcd(g_1, g_1')`, ..., the
    /// polynomial `P_i` is the product of the distinct irreducible factors of multiplicity at
    /// least `i`, so `P_i / P_{i+1}` collects those of multiplicity exactly `i`. Returns
    /// `P_1` and the nonconstant layers.
    pub fn multiplicity_layers(
        &self,
        f: &Poly<R::Elem>,
        gcd: impl Fn(&Poly<R::Elem>, &Poly<R::Elem>) -> Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Vec<(Poly<R::Elem>, usize)>)> {
        if f.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let mut radicals = Vec::new();
        let mut g = self.monic(f)?;
        loop {
            let d = gcd(&g, &self.derivative(&g));
            let radical = self
                .checked_div(&g, &d)
                .ok_or_else(|| Error::Inconsistent("gcd does not divide its argument".into()))?;
            radicals.push(self.monic(&radical)?);
            if d.is_constant() {
                break;
            }
            g = d;
        }
        let mut layers = Vec::new();
        for i in 0..radicals.len() {
            let next = radicals.get(i + 1).cloned().unwrap_or_else(|| self.one());
            let layer = self
                .checked_div(&radicals[i], &next)
                .ok_or_else(|| Error::Inconsistent("multiplicity layers are not nested".into()))?;
            if !layer.is_constant() {
                layers.push((self.monic(&layer)?, i + 1));
            }
        }
        Ok((radicals.swap_remove(0), layers))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = self.base.add(o, s);
        }
        self.from_coeffs(out)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    /// Schoolbook product.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

impl<R: Field> IntegralDomain for PolyRing<R> {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.checked_div(a, b)
    }
}

/// Integral-domain division of `f` by a nonzero scalar, coefficientwise.
pub fn div_scalar<R: IntegralDomain>(
    ring: &R,
    f: &Poly<R::Elem>,
    c: &R::Elem,
) -> Option<Poly<R::Elem>> {
    f.coeffs
        .iter()
        .map(|a| ring.exact_div(a, c))
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}
