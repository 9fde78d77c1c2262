//! Coefficient domains.
//!
//! Polynomial algorithms are written once against these traits and instantiated over the
//! integers, the rationals, prime fields, finite extensions of prime fields, and number
//! fields. A domain is a value (a prime field carries its modulus), so every operation takes
//! `&self`.

use std::fmt::Debug;

use num_bigint::RandBigInt;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::numeric::{inverse_mod, reduce_mod, Rational};

/// Values that can sit in a dense coefficient vector and know whether they vanish.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn is_zero_coeff(&self) -> bool;
}

impl Coefficient for BigInt {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

impl Coefficient for BigUint {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

impl Coefficient for Rational {
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

pub trait Ring {
    type Elem: Coefficient;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero_coeff()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }
}

/// A commutative ring without zero divisors that can test and perform exact division.
pub trait IntegralDomain: Ring {
    /// `a / b` when `b` divides `a`, `None` otherwise (including `b = 0`).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

pub trait Field: IntegralDomain {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Characteristic as an integer, zero for characteristic zero.
    fn characteristic(&self) -> BigUint;
}

pub trait FiniteField: Field {
    fn order(&self) -> BigUint;

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// The unique `b` with `b^p = a`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem;
}

impl<R: Ring + ?Sized> Ring for &R {
    type Elem = R::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        (**self).from_int(n)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        (**self).is_one(a)
    }
}

impl<R: IntegralDomain + ?Sized> IntegralDomain for &R {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        (**self).exact_div(a, b)
    }
}

impl<R: Field + ?Sized> Field for &R {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        (**self).inv(a)
    }
    fn characteristic(&self) -> BigUint {
        (**self).characteristic()
    }
}

impl<R: FiniteField + ?Sized> FiniteField for &R {
    fn order(&self) -> BigUint {
        (**self).order()
    }
    fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        (**self).random_elem(rng)
    }
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        (**self).pth_root(a)
    }
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
}

impl IntegralDomain for Integers {
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }
}

impl IntegralDomain for Rationals {
    fn exact_div(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        (!b.is_zero()).then(|| a / b)
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }
}

/// Integers modulo a prime `p`; elements are representatives in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: BigUint,
}

impl PrimeField {
    /// The caller vouches for primality of `p`; only `p < 2` is rejected here.
    pub fn new(p: BigUint) -> Result<Self> {
        if p < BigUint::from(2u32) {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a prime modulus"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }

    pub fn reduce(&self, n: &BigInt) -> BigUint {
        reduce_mod(n, &self.p)
    }
}

impl Ring for PrimeField {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.p {
            s - &self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.p - b + a
        }
    }
    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.p - a
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.p
    }
    fn from_int(&self, n: &BigInt) -> BigUint {
        self.reduce(n)
    }
}

impl IntegralDomain for PrimeField {
    fn exact_div(&self, a: &BigUint, b: &BigUint) -> Option<BigUint> {
        self.div(a, b).ok()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &BigUint) -> Result<BigUint> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        inverse_mod(a, &self.p)
    }
    fn characteristic(&self) -> BigUint {
        self.p.clone()
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> BigUint {
        self.p.clone()
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigUint {
        rng.gen_biguint_below(&self.p)
    }
    fn pth_root(&self, a: &BigUint) -> BigUint {
        a.clone()
    }
}
