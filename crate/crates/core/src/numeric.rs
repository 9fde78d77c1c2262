//! Exact scalar arithmetic: arbitrary-precision integers and rationals, residues modulo a
//! prime, and probable-prime generation.

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Number of Miller-Rabin rounds; each round has error at most 1/4, so 40 rounds give 2^-80.
pub const MILLER_RABIN_ROUNDS: usize = 40;

const SMALL_PRIMES: [u32; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// A residue class modulo a prime `p`, stored as its representative in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModScalar {
    residue: BigUint,
    modulus: BigUint,
}

impl ModScalar {
    pub fn new(value: &BigInt, modulus: &BigUint) -> Self {
        ModScalar {
            residue: reduce_mod(value, modulus),
            modulus: modulus.clone(),
        }
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn mul(&self, other: &ModScalar) -> ModScalar {
        debug_assert_eq!(self.modulus, other.modulus);
        ModScalar {
            residue: (&self.residue * &other.residue) % &self.modulus,
            modulus: self.modulus.clone(),
        }
    }
}

impl fmt::Debug for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Display for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Multiplicative inverse of a nonzero residue.
pub fn mod_inverse(a: &ModScalar) -> Result<ModScalar> {
    let residue = inverse_mod(&a.residue, &a.modulus)?;
    Ok(ModScalar {
        residue,
        modulus: a.modulus.clone(),
    })
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inverse_mod(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a % m);
    let m_int = BigInt::from(m.clone());
    let egcd = a.extended_gcd(&m_int);
    if !egcd.gcd.is_one() {
        return Err(Error::NotInvertible(format!("{a} mod {m}")));
    }
    Ok(reduce_mod(&egcd.x, m))
}

/// Canonical representative of `value` in `[0, m)`.
pub fn reduce_mod(value: &BigInt, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    value
        .mod_floor(&m_int)
        .to_biguint()
        .expect("mod_floor with positive modulus is nonnegative")
}

/// Representative of `r mod p` in the symmetric range `(-p/2, p/2]`.
pub fn symmetric_lift(r: &BigUint, p: &BigUint) -> BigInt {
    let r = r % p;
    // floor(p/2) is the largest representative for both parities
    let half = p >> 1u32;
    if r > half {
        BigInt::from(r) - BigInt::from(p.clone())
    } else {
        BigInt::from(r)
    }
}

/// Smallest integer `s` with `s * s >= n`.
pub fn ceil_sqrt(n: &BigUint) -> BigUint {
    let s = n.sqrt();
    if &s * &s == *n {
        s
    } else {
        s + 1u32
    }
}

/// Miller-Rabin with [`MILLER_RABIN_ROUNDS`] random bases drawn from `rng`.
pub fn is_probable_prime_with<R: Rng + ?Sized>(n: &BigUint, rng: &mut R) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &small in SMALL_PRIMES.iter() {
        let small = BigUint::from(small);
        if *n == small {
            return true;
        }
        if (n % &small).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let twos = n_minus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_1 >> twos;
    let two = BigUint::from(2u32);
    'bases: for _ in 0..MILLER_RABIN_ROUNDS {
        let base = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = base.modpow(&odd, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..twos {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with bases from a fixed-seed generator, so the verdict is reproducible.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed0f_9a1e);
    is_probable_prime_with(n, &mut rng)
}

/// A probable prime with exactly `bit_length` bits.
pub fn random_prime<R: Rng + ?Sized>(bit_length: u64, rng: &mut R) -> Result<BigUint> {
    if bit_length < 8 {
        return Err(Error::InvalidArgument(format!(
            "prime bit length must be at least 8, got {bit_length}"
        )));
    }
    loop {
        let mut candidate = rng.gen_biguint(bit_length);
        candidate.set_bit(bit_length - 1, true);
        candidate.set_bit(0, true);
        if is_probable_prime_with(&candidate, rng) {
            return Ok(candidate);
        }
    }
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_after(n: &BigUint) -> BigUint {
    let mut candidate = n + 1u32;
    if candidate <= BigUint::from(2u32) {
        return BigUint::from(2u32);
    }
    if candidate.is_even() {
        candidate += 1u32;
    }
    while !is_probable_prime(&candidate) {
        candidate += 2u32;
    }
    candidate
}

/// Stream of candidate primes for the modular algorithms.
///
/// `Random` draws independent primes of a fixed bit length; `Ascending` walks the odd primes
/// upward from a starting point, which makes examples reproducible by hand.
#[derive(Clone, Debug)]
pub enum PrimeSource {
    Random { bits: u64, rng: Box<ChaCha8Rng> },
    Ascending { last: BigUint },
}

impl PrimeSource {
    pub fn random(bits: u64, seed: u64) -> Self {
        PrimeSource::Random {
            bits: bits.max(8),
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
        }
    }

    /// Primes strictly greater than `floor`, never 2.
    pub fn ascending_above(floor: &BigUint) -> Self {
        PrimeSource::Ascending {
            last: floor.max(&BigUint::from(2u32)).clone(),
        }
    }

    pub fn next_prime(&mut self) -> BigUint {
        match self {
            PrimeSource::Random { bits, rng } => {
                random_prime(*bits, rng.as_mut()).expect("bit length is clamped to at least 8")
            }
            PrimeSource::Ascending { last } => {
                let p = next_prime_after(last);
                *last = p.clone();
                p
            }
        }
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn lcm_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Decimal expansion of `q` truncated toward zero after `digits` fractional digits.
pub fn to_decimal_string(q: &Rational, digits: usize) -> String {
    let negative = q.is_negative();
    let abs = q.abs();
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let mut out = String::new();
    if negative && !scaled.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        out.push_str(&"0".repeat(digits - frac.len()));
        out.push_str(&frac);
    }
    out
}

/// Nonnegative integer square root approximation of a rational, floored to `2^-precision_bits`.
pub fn rational_sqrt_floor(q: &Rational, precision_bits: u32) -> Rational {
    if !q.is_positive() {
        return Rational::zero();
    }
    let shift = 2 * precision_bits as usize;
    let scaled = (q.numer() << shift) / q.denom();
    let root = scaled
        .to_biguint()
        .expect("positive rational scales to a nonnegative integer")
        .sqrt();
    Rational::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::one() << precision_bits as usize,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: i64, p: u64) -> ModScalar {
        ModScalar::new(&BigInt::from(v), &BigUint::from(p))
    }

    fn trial_division_is_prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(&m(1, 7)).unwrap(), m(1, 7));
        // brute force: the unique b in [1, 7) with 3b = 1 mod 7
        let brute = (1..7).find(|b| (3 * b) % 7 == 1).unwrap();
        assert_eq!(brute, 5);
        assert_eq!(mod_inverse(&m(3, 7)).unwrap(), m(brute, 7));
        assert!(matches!(
            mod_inverse(&m(0, 7)),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(
            mod_inverse(&m(14, 7)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn random_prime_range_and_determinism() {
        let mut a = ChaCha8Rng::seed_from_u64(11);
        let mut b = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let p = random_prime(8, &mut a).unwrap();
            assert_eq!(p, random_prime(8, &mut b).unwrap());
            let v: u64 = p.try_into().unwrap();
            assert!((128..=255).contains(&v));
            assert!(trial_division_is_prime(v));
        }
        assert!(random_prime(7, &mut a).is_err());
    }

    #[test]
    fn random_prime_survives_trial_division_below_2_16() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let small: Vec<u32> = (2u32..1 << 16)
            .filter(|&n| trial_division_is_prime(n as u64))
            .collect();
        for bits in [24u64, 40, 64, 128] {
            let p = random_prime(bits, &mut rng).unwrap();
            assert_eq!(p.bits(), bits);
            for &q in &small {
                assert!(!(&p % q).is_zero(), "{p} divisible by {q}");
            }
        }
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        for n in 0u64..5000 {
            assert_eq!(
                is_probable_prime(&BigUint::from(n)),
                trial_division_is_prime(n),
                "n = {n}"
            );
        }
        // Carmichael numbers
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265] {
            assert!(!is_probable_prime(&BigUint::from(n)));
        }
    }

    #[test]
    fn next_prime_and_ascending_source() {
        assert_eq!(
            next_prime_after(&BigUint::from(16u32)),
            BigUint::from(17u32)
        );
        assert_eq!(next_prime_after(&BigUint::from(0u32)), BigUint::from(2u32));
        let mut src = PrimeSource::ascending_above(&BigUint::from(2u32));
        let got: Vec<BigUint> = (0..4).map(|_| src.next_prime()).collect();
        assert_eq!(got, [3u32, 5, 7, 11].map(BigUint::from));
    }

    #[test]
    fn symmetric_lift_range() {
        let p = BigUint::from(101u32);
        assert_eq!(symmetric_lift(&BigUint::from(99u32), &p), BigInt::from(-2));
        assert_eq!(symmetric_lift(&BigUint::from(50u32), &p), BigInt::from(50));
        assert_eq!(symmetric_lift(&BigUint::from(51u32), &p), BigInt::from(-50));
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(&BigUint::from(3u32)), BigUint::from(2u32));
        assert_eq!(ceil_sqrt(&BigUint::from(38u32)), BigUint::from(7u32));
        assert_eq!(ceil_sqrt(&BigUint::from(49u32)), BigUint::from(7u32));
        assert_eq!(ceil_sqrt(&BigUint::from(1u32)), BigUint::from(1u32));
    }

    #[test]
    fn decimal_strings() {
        let q = Rational::new(BigInt::from(-1), BigInt::from(3));
        assert_eq!(to_decimal_string(&q, 4), "-0.3333");
        assert_eq!(
            to_decimal_string(&Rational::from_integer(5.into()), 2),
            "5.00"
        );
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in rat(), b in rat(), c in rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let s = &a * &b + &c;
            prop_assert!(s.denom().is_positive());
            prop_assert!(s.numer().gcd(s.denom()).is_one());
        }

        #[test]
        fn inverse_is_an_involution(a in 1i64..10006) {
            let x = m(a, 10007);
            let inv = mod_inverse(&x).unwrap();
            prop_assert!(x.mul(&inv).residue().is_one());
            prop_assert_eq!(mod_inverse(&inv).unwrap(), x);
        }

        #[test]
        fn random_prime_is_odd_with_top_bit(seed in any::<u64>(), bits in 8u64..96) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_prime(bits, &mut rng).unwrap();
            prop_assert!(p.bit(0));
            prop_assert!(p.bit(bits - 1));
            prop_assert_eq!(p.bits(), bits);
        }
    }
}
