//! Brute-force reference implementations and the randomized property suites built on them.
//!
//! Arithmetic here works on plain `Vec<u64>` coefficient lists modulo small primes so it
//! shares no code with the library under test.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ratfactor::modp::factor_fp;
use ratfactor::numfield::norm_polynomial;
use ratfactor::poly::{content_primitive, gcd_q, resultant, sylvester_determinant};
use ratfactor::{
    is_irreducible_fp, ExtPoly, IntPoly, Integers, ModPoly, NumberField, Poly, PolyRing,
    PrimeField, RatPoly, Rational, Rationals, Ring,
};

pub const SMALL_PRIMES: [u64; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(*a, *b, p)) % p;
        }
    }
    trim(out)
}

/// Quotient of `f` by the monic `g`, or `None` when the remainder is nonzero.
fn div_exact(f: &[u64], g: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r = f.to_vec();
    if r.len() < g.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quo = vec![0; r.len() - g.len() + 1];
    for i in (0..quo.len()).rev() {
        let c = r[i + g.len() - 1];
        quo[i] = c;
        for (j, b) in g.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mul_mod(c, *b, p)) % p;
        }
    }
    trim(r).is_empty().then(|| trim(quo))
}

/// All monic polynomials of degree `d` over `F_p`, constant term first.
pub fn monic_polys(d: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut n| {
        let mut f = Vec::with_capacity(d + 1);
        for _ in 0..d {
            f.push(n % p);
            n /= p;
        }
        f.push(1);
        f
    })
}

fn make_monic(f: &[u64], p: u64) -> (u64, Vec<u64>) {
    let lc = *f.last().expect("nonzero");
    let li = inv(lc, p);
    (lc, f.iter().map(|&c| mul_mod(c, li, p)).collect())
}

/// Irreducibility by trial division with every monic polynomial of degree up to half.
pub fn is_irreducible_brute(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let d = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    let (_, f) = make_monic(&f, p);
    (1..=d / 2).all(|e| monic_polys(e, p).all(|g| div_exact(&f, &g, p).is_none()))
}

/// Complete factorization by repeatedly peeling off the smallest monic divisor.
pub fn factor_brute(f: &[u64], p: u64) -> (u64, Vec<(Vec<u64>, usize)>) {
    let (unit, mut rest) = make_monic(&trim(f.to_vec()), p);
    let mut out: Vec<(Vec<u64>, usize)> = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.push((rest.clone(), 1));
            break;
        }
        for g in monic_polys(d, p) {
            let mut m = 0;
            while let Some(quo) = div_exact(&rest, &g, p) {
                rest = quo;
                m += 1;
            }
            if m > 0 {
                out.push((g, m));
            }
        }
        d += 1;
    }
    out.sort();
    (unit, out)
}

/// Reduction modulo `p`; `None` when `p` divides a denominator.
pub fn rat_mod_p(f: &RatPoly, p: u64) -> Option<Vec<u64>> {
    let pb = BigInt::from(p);
    let mut out = Vec::new();
    for c in f.coeffs() {
        let den = c.denom().mod_floor(&pb).to_u64().unwrap();
        if den == 0 {
            return None;
        }
        let num = c.numer().mod_floor(&pb).to_u64().unwrap();
        out.push(mul_mod(num, inv(den, p), p));
    }
    Some(trim(out))
}

/// A small prime modulo which `f` keeps its degree and is irreducible, proving `f`
/// irreducible over the rationals.
pub fn witness_prime(f: &RatPoly) -> Option<u64> {
    let deg = f.degree()?;
    if deg == 1 {
        return Some(0);
    }
    SMALL_PRIMES.iter().copied().find(|&p| {
        rat_mod_p(f, p).is_some_and(|g| g.len() == deg + 1 && is_irreducible_brute(&g, p))
    })
}

pub fn mod_poly_to_vec(f: &ModPoly) -> Vec<u64> {
    f.coeffs().iter().map(|c| c.to_u64().unwrap()).collect()
}

pub fn small_rational<R: Rng>(rng: &mut R, span: i64) -> Rational {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    q(rng.gen_range(-span..=span), den)
}

/// Random monic polynomial of degree `deg` over Q, proved irreducible by [`witness_prime`].
pub fn random_irreducible<R: Rng>(rng: &mut R, deg: usize) -> RatPoly {
    loop {
        let mut coeffs: Vec<Rational> = (0..deg).map(|_| small_rational(rng, 6)).collect();
        coeffs.push(Rational::one());
        let f = Poly::new(coeffs);
        if witness_prime(&f).is_some() {
            return f;
        }
    }
}

/// Random monic integer polynomial of degree `deg`, proved irreducible by a witness prime.
pub fn random_integer_irreducible<R: Rng>(rng: &mut R, deg: usize) -> RatPoly {
    loop {
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-4..=4)).collect();
        coeffs.push(1);
        let f = RatPoly::from_i64s(&coeffs);
        if witness_prime(&f).is_some() {
            return f;
        }
    }
}

fn random_int_poly<R: Rng>(rng: &mut R, max_deg: usize, span: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-span..=span)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-span..=span);
    }
    coeffs.push(lead);
    IntPoly::from_i64s(&coeffs)
}

fn to_rat(f: &IntPoly) -> RatPoly {
    f.map(|c| Rational::from_integer(c.clone()))
}

fn random_ext_poly<R: Rng>(rng: &mut R, field: &NumberField, max_deg: usize) -> ExtPoly {
    let deg = rng.gen_range(1..=max_deg);
    let k = field.degree();
    let mut coeffs: Vec<RatPoly> = (0..=deg)
        .map(|_| Poly::new((0..k).map(|_| small_rational(rng, 3)).collect()))
        .collect();
    while coeffs[deg].is_zero() {
        coeffs[deg] = Poly::new((0..k).map(|_| small_rational(rng, 3)).collect());
    }
    field.poly(&coeffs)
}

/// `f(t, α)` as a polynomial in `α`.
fn specialize(f: &ExtPoly, t: &Rational) -> RatPoly {
    let qx = PolyRing::new(Rationals);
    f.coeffs().iter().rev().fold(RatPoly::zero(), |acc, c| {
        qx.add(&qx.scale(&acc, t), c.as_poly())
    })
}

/// Norm multiplicativity, the degree law, and pointwise agreement with a Sylvester
/// determinant, on `cases` random polynomials over random quadratic and cubic fields.
pub fn norm_suite(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    let qx = PolyRing::new(Rationals);
    for case in 0..cases {
        let k = if case % 2 == 0 { 2 } else { 3 };
        let phi = random_integer_irreducible(rng, k);
        let field = NumberField::new(&phi).map_err(|e| format!("{phi}: {e}"))?;
        let kx = field.poly_ring();
        let f = random_ext_poly(rng, &field, 3);
        let g = random_ext_poly(rng, &field, 3);
        let nf = norm_polynomial(&f, &field).map_err(|e| e.to_string())?;
        let ng = norm_polynomial(&g, &field).map_err(|e| e.to_string())?;
        let nfg = norm_polynomial(&kx.mul(&f, &g), &field).map_err(|e| e.to_string())?;
        let ctx = || format!("phi = {phi}, f = {f}, g = {g}");
        if nf.degree() != Some(k * f.degree().unwrap()) {
            return Err(format!("degree law fails: N(f) = {nf}; {}", ctx()));
        }
        if nfg != qx.mul(&nf, &ng) {
            return Err(format!("N(fg) != N(f) N(g); {}", ctx()));
        }
        for t in -2..=2 {
            let t = Rational::from_integer(t.into());
            let ft = specialize(&f, &t);
            let expected = if ft.is_zero() {
                Rational::zero()
            } else {
                sylvester_determinant(&Rationals, field.phi(), &ft).map_err(|e| e.to_string())?
            };
            if qx.eval(&nf, &t) != expected {
                return Err(format!(
                    "N(f)({t}) disagrees with the determinant; {}",
                    ctx()
                ));
            }
        }
    }
    Ok(())
}

fn own_content(f: &IntPoly) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Content, gcd, and resultant identities on `cases` random small polynomials.
pub fn gcd_content_resultant_suite(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    let zx = PolyRing::new(Integers);
    let qx = PolyRing::new(Rationals);
    for _ in 0..cases {
        let f = random_int_poly(rng, 4, 6);
        let g = random_int_poly(rng, 4, 6);
        let h = random_int_poly(rng, 2, 3);
        let ctx = || format!("f = {f}, g = {g}, h = {h}");

        let split = content_primitive(&zx.mul(&f, &h)).map_err(|e| e.to_string())?;
        if !split.content.is_positive()
            || zx.scale(&split.primitive_part, &split.content) != zx.mul(&f, &h)
            || !own_content(&split.primitive_part).is_one()
        {
            return Err(format!("content split of f h is wrong; {}", ctx()));
        }

        let (fr, gr, hr) = (to_rat(&f), to_rat(&g), to_rat(&h));
        let d = gcd_q(&fr, &gr);
        if qx.checked_div(&fr, &d).is_none() || qx.checked_div(&gr, &d).is_none() {
            return Err(format!("gcd does not divide both; {}", ctx()));
        }
        if !qx.is_monic(&d) {
            return Err(format!("gcd {d} is not monic; {}", ctx()));
        }
        let (e, s, t) = qx.extended_gcd(&fr, &gr);
        if qx.add(&qx.mul(&s, &fr), &qx.mul(&t, &gr)) != e || qx.monic(&e).ok() != Some(d.clone()) {
            return Err(format!("Bezout identity fails; {}", ctx()));
        }
        let dh = gcd_q(&qx.mul(&fr, &hr), &qx.mul(&gr, &hr));
        if Some(dh) != qx.monic(&qx.mul(&d, &hr)).ok() {
            return Err(format!("gcd(fh, gh) != gcd(f, g) h; {}", ctx()));
        }

        let res = |a: &IntPoly, b: &IntPoly| resultant(&Integers, a, b).map_err(|e| e.to_string());
        let r_fg = res(&f, &g)?;
        let det = sylvester_determinant(&Rationals, &fr, &gr).map_err(|e| e.to_string())?;
        if Rational::from_integer(r_fg.clone()) != det {
            return Err(format!(
                "resultant {r_fg} != Sylvester determinant {det}; {}",
                ctx()
            ));
        }
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if m * n % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        if res(&g, &f)? != &sign * &r_fg {
            return Err(format!("resultant antisymmetry fails; {}", ctx()));
        }
        if res(&f, &zx.mul(&g, &h))? != &r_fg * res(&f, &h)? {
            return Err(format!("resultant is not multiplicative; {}", ctx()));
        }
        if r_fg.is_zero() != !d.is_constant() {
            return Err(format!("resultant zero test disagrees with gcd; {}", ctx()));
        }
    }
    Ok(())
}

/// Modular factorization against [`factor_brute`] for `p` in 3, 5, 7, and the
/// irreducibility test against [`is_irreducible_brute`] for `p` in 2, 3, 5, 7.
pub fn modp_suite(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for case in 0..cases {
        let p = [2u64, 3, 5, 7][case % 4];
        let field = PrimeField::new(BigUint::from(p)).unwrap();
        let deg = rng.gen_range(1..=6);
        let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        coeffs.push(rng.gen_range(1..p));
        let f = ModPoly::from_u64s(&coeffs);
        let irreducible = is_irreducible_fp(&field, &f).map_err(|e| e.to_string())?;
        if irreducible != is_irreducible_brute(&coeffs, p) {
            return Err(format!(
                "irreducibility of {coeffs:?} mod {p} disagrees with trial division"
            ));
        }
        if p == 2 {
            continue;
        }
        let fac = factor_fp(&field, &f).map_err(|e| e.to_string())?;
        let got: Vec<(Vec<u64>, usize)> = {
            let mut v: Vec<_> = fac
                .factors
                .iter()
                .map(|(g, m)| (mod_poly_to_vec(g), *m))
                .collect();
            v.sort();
            v
        };
        let (unit, expected) = factor_brute(&coeffs, p);
        if fac.unit.to_u64() != Some(unit) || got != expected {
            return Err(format!(
                "factorization of {coeffs:?} mod {p}: got {got:?}, expected {expected:?}"
            ));
        }
    }
    Ok(())
}
