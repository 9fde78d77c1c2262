//! Factorization and irreducibility over finite fields.
//!
//! The pipeline is the classical one: squarefree decomposition, distinct-degree splitting by
//! gcds with `x^(q^d) - x`, and randomized equal-degree splitting. All of it is generic over
//! [`FiniteField`], so the same code serves `F_p` and `F_p[γ]/ψ(γ)`.
//!
//! Irreducibility uses the tower criterion directly: a monic `h` of degree `s` is irreducible
//! iff `gcd(h, x^(q^i) - x) = 1` for `1 <= i < s` and `h | x^(q^s) - x`. On polynomials
//! coprime to `x` this is the same as working with `x^(q^i - 1) - 1`.

mod extension;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{ModPoly, Poly, PolyRing};
use crate::ring::{FiniteField, PrimeField, Ring};

pub use extension::FiniteExtension;

/// Consecutive failed splitting attempts tolerated before the input is declared malformed.
const SPLIT_ATTEMPT_CAP: usize = 256;

const DEFAULT_SPLIT_SEED: u64 = 0x0edf_5eed;

/// `unit * Π factor^multiplicity` equals the input; factors are monic, irreducible, and
/// pairwise distinct, listed in canonical polynomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFactorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

pub type ModFactorization = FiniteFactorization<BigUint>;

impl<E: crate::ring::Coefficient> FiniteFactorization<E> {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// True when the input is irreducible: one factor with multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m))
            .collect()
    }
}

fn nonconstant<E: crate::ring::Coefficient>(f: &Poly<E>) -> Result<()> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

/// Squarefree parts with multiplicities; the product of `part^m` is the monic input.
///
/// When the derivative vanishes the input is a `p`-th power and the decomposition recurses on
/// its `p`-th root.
pub fn squarefree_decomposition<F: FiniteField>(
    field: &F,
    f: &Poly<F::Elem>,
) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    nonconstant(f)?;
    let ring = PolyRing::new(field);
    let f = ring.monic(f)?;
    let p: usize = field.characteristic().try_into().unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut c = ring.gcd(&f, &ring.derivative(&f));
    let mut w = ring.checked_div(&f, &c).expect("gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = ring.gcd(&w, &c);
        let fac = ring.checked_div(&w, &y).expect("gcd divides");
        if !fac.is_constant() {
            out.push((fac, i));
        }
        c = ring.checked_div(&c, &y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        // every exponent of c is a multiple of p
        let root = ring.from_coeffs(
            c.coeffs()
                .iter()
                .step_by(p)
                .map(|a| field.pth_root(a))
                .collect(),
        );
        for (g, m) in squarefree_decomposition(field, &root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Groups the irreducible factors of a squarefree `f` by degree: each returned part is the
/// product of all monic irreducible factors of exactly that degree.
pub fn distinct_degree_split<F: FiniteField>(
    field: &F,
    f: &Poly<F::Elem>,
) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    nonconstant(f)?;
    let ring = PolyRing::new(field);
    let mut g = ring.monic(f)?;
    if !ring.gcd(&g, &ring.derivative(&g)).is_constant() {
        return Err(Error::NotSquarefree);
    }
    let x = ring.x();
    let q = field.order();
    let mut parts = Vec::new();

    let mut has_x = false;
    if let Some(rest) = ring.checked_div(&g, &x) {
        has_x = true;
        g = rest;
    }

    let mut frobenius = ring.rem(&x, &g).unwrap_or_else(|_| ring.zero());
    let mut d = 0;
    while g.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        frobenius = ring.pow_mod(&frobenius, &q, &g)?;
        let t = ring.gcd(&g, &ring.sub(&frobenius, &x));
        if !t.is_constant() {
            g = ring.checked_div(&g, &t).expect("gcd divides");
            frobenius = ring.rem(&frobenius, &g)?;
            parts.push((t, d));
        }
    }
    if let Some(deg) = g.degree().filter(|&deg| deg > 0) {
        parts.push((g, deg));
    }
    if has_x {
        match parts.iter_mut().find(|(_, d)| *d == 1) {
            Some((linear, _)) => *linear = ring.mul(linear, &x),
            None => parts.push((x, 1)),
        }
    }
    parts.sort_by_key(|(_, d)| *d);
    Ok(parts)
}

/// Splits a product of distinct monic irreducibles of common degree `d` into its factors
/// (Cantor-Zassenhaus). Odd characteristic only.
pub fn equal_degree_split<F, R>(
    field: &F,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut R,
) -> Result<Vec<Poly<F::Elem>>>
where
    F: FiniteField,
    F::Elem: Ord,
    R: Rng + ?Sized,
{
    nonconstant(f)?;
    if d == 0 || f.degree().unwrap() % d != 0 {
        return Err(Error::InvalidArgument(format!(
            "degree {} is not a multiple of {d}",
            f.degree().unwrap()
        )));
    }
    let q = field.order();
    if !q.bit(0) {
        return Err(Error::CharacteristicTwo);
    }
    let ring = PolyRing::new(field);
    let exponent = (num_traits::pow(q, d) - BigUint::one()) >> 1u32;
    let one = ring.one();

    let mut pending = vec![ring.monic(f)?];
    let mut done = Vec::new();
    while let Some(g) = pending.pop() {
        let n = g.degree().unwrap();
        if n == d {
            done.push(g);
            continue;
        }
        let mut attempts = 0;
        let split = loop {
            attempts += 1;
            if attempts > SPLIT_ATTEMPT_CAP {
                return Err(Error::Inconsistent(format!(
                    "no equal-degree split of a degree-{n} polynomial into degree-{d} factors"
                )));
            }
            let a = ring.from_coeffs((0..n).map(|_| field.random_elem(rng)).collect());
            if a.is_constant() {
                continue;
            }
            let mut t = ring.gcd(&a, &g);
            if t.is_constant() {
                let b = ring.pow_mod(&a, &exponent, &g)?;
                t = ring.gcd(&ring.sub(&b, &one), &g);
            }
            let deg_t = t.degree().unwrap_or(0);
            if deg_t > 0 && deg_t < n {
                break t;
            }
        };
        let rest = ring.checked_div(&g, &split).expect("gcd divides");
        pending.push(split);
        pending.push(ring.monic(&rest)?);
    }
    done.sort();
    Ok(done)
}

/// Complete factorization, with equal-degree splitting driven by `rng`.
pub fn factor_finite_with<F, R>(
    field: &F,
    f: &Poly<F::Elem>,
    rng: &mut R,
) -> Result<FiniteFactorization<F::Elem>>
where
    F: FiniteField,
    F::Elem: Ord,
    R: Rng + ?Sized,
{
    nonconstant(f)?;
    let ring = PolyRing::new(field);
    let unit = f.leading().unwrap().clone();
    let mut factors = Vec::new();
    for (part, multiplicity) in squarefree_decomposition(field, f)? {
        for (group, d) in distinct_degree_split(field, &part)? {
            if group.degree() == Some(d) {
                factors.push((group, multiplicity));
            } else {
                for g in equal_degree_split(field, &group, d, rng)? {
                    factors.push((g, multiplicity));
                }
            }
        }
    }
    factors.sort();
    debug_assert_eq!(
        ring.scale(
            &ring.product(
                factors
                    .iter()
                    .map(|(g, m)| ring.pow(g, *m))
                    .collect::<Vec<_>>()
                    .iter()
            ),
            &unit
        ),
        *f
    );
    Ok(FiniteFactorization { unit, factors })
}

/// Complete factorization over `field`. The result is unique, so the internal splitting seed
/// only affects the path taken.
pub fn factor_finite<F>(field: &F, f: &Poly<F::Elem>) -> Result<FiniteFactorization<F::Elem>>
where
    F: FiniteField,
    F::Elem: Ord,
{
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SPLIT_SEED);
    factor_finite_with(field, f, &mut rng)
}

pub fn factor_fp(field: &PrimeField, f: &ModPoly) -> Result<ModFactorization> {
    factor_finite(field, f)
}

/// Irreducibility by the Frobenius tower criterion, without factoring.
pub fn is_irreducible<F: FiniteField>(field: &F, f: &Poly<F::Elem>) -> Result<bool> {
    nonconstant(f)?;
    let s = f.degree().unwrap();
    if s == 1 {
        return Ok(true);
    }
    let ring = PolyRing::new(field);
    let h = ring.monic(f)?;
    let q = field.order();
    let x = ring.x();
    let mut frobenius = ring.rem(&x, &h)?;
    for _ in 1..s {
        frobenius = ring.pow_mod(&frobenius, &q, &h)?;
        if !ring.gcd(&h, &ring.sub(&frobenius, &x)).is_constant() {
            return Ok(false);
        }
    }
    frobenius = ring.pow_mod(&frobenius, &q, &h)?;
    Ok(frobenius == ring.rem(&x, &h)?)
}

pub fn is_irreducible_fp(field: &PrimeField, f: &ModPoly) -> Result<bool> {
    is_irreducible(field, f)
}

/// Irreducibility over `F_p[γ]/ψ(γ)`; `f` has coefficients given as polynomials in γ.
pub fn is_irreducible_fq(p: &BigUint, psi: &ModPoly, f: &Poly<ModPoly>) -> Result<bool> {
    let field = FiniteExtension::new(PrimeField::new(p.clone())?, psi)?;
    let f = f.map(|c| field.reduce(c));
    is_irreducible(&field, &f)
}

/// Reduces an integer polynomial modulo the field's prime.
pub fn reduce_int_poly(field: &PrimeField, f: &crate::poly::IntPoly) -> ModPoly {
    f.map(|c| field.reduce(c))
}
