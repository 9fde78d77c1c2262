//! How often a degree-`s` polynomial stays irreducible modulo `p`.
//!
//! Every formula is evaluated in exact rational arithmetic. The exact number of monic
//! irreducibles comes from the necklace formula; an exhaustive sieve over all monic
//! polynomials serves as an independent check for small `p^s`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::modp::is_irreducible_fp;
use crate::numeric::{is_probable_prime, rational_sqrt_floor, Rational};
use crate::poly::ModPoly;
use crate::ring::PrimeField;

/// Largest `p^s` the exhaustive sieve will enumerate.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Precision, in bits, of the reported standard error.
const STDERR_PRECISION_BITS: u32 = 64;

/// A probability attached to the degree and prime it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbEstimate {
    pub s: u32,
    pub p: u64,
    pub value: Rational,
}

fn check_args(s: u32, p: u64) -> Result<()> {
    if s < 1 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if !is_probable_prime(&BigUint::from(p)) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `p^s - 1`.
fn pow_minus_one(p: u64, s: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), s as usize) - 1
}

/// `(p^s - 1)/(p - 1) - s`: the degree of `Π_{i<s} (x^(p^i - 1) - 1)`, which bounds the number
/// of monic irreducibles of degree below `s` other than `x`.
fn low_degree_bound(s: u32, p: u64) -> Rational {
    Rational::new(pow_minus_one(p, s), BigInt::from(p - 1)) - int(s)
}

/// The lower bound on the probability that a degree-`s` image stays irreducible when every
/// monic irreducible of degree at most `s` (other than `x`) is an equally likely factor:
/// `(1 - δ) / (1 + s δ)` with `δ = 1/(p-1) - s/(p^s-1)`, and exactly 1 for `s = 1`.
pub fn irreducible_image_lower_bound(s: u32, p: u64) -> Result<Rational> {
    check_args(s, p)?;
    if s == 1 {
        return Ok(Rational::one());
    }
    let delta = Rational::new(BigInt::one(), BigInt::from(p - 1))
        - Rational::new(BigInt::from(s), pow_minus_one(p, s));
    Ok((Rational::one() - &delta) / (Rational::one() + int(s) * delta))
}

/// `(p^s - 1 - ((p^s - 1)/(p - 1) - s)) / (s p^s)`, the estimate under the model where the
/// image is a uniformly random monic polynomial of degree `s`.
pub fn realistic_estimate(s: u32, p: u64) -> Result<Rational> {
    check_args(s, p)?;
    let numerator = int(pow_minus_one(p, s)) - low_degree_bound(s, p);
    Ok(numerator / int(BigInt::from(s) * num_traits::pow(BigInt::from(p), s as usize)))
}

pub fn estimate(s: u32, p: u64) -> Result<ProbEstimate> {
    Ok(ProbEstimate {
        s,
        p,
        value: realistic_estimate(s, p)?,
    })
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducible polynomials of degree `s` over `F_p`, by the necklace formula
/// `(1/s) Σ_{d | s} μ(d) p^(s/d)`.
pub fn count_monic_irreducibles(s: u32, p: u64) -> Result<BigInt> {
    check_args(s, p)?;
    let sum: BigInt = (1..=s)
        .filter(|d| s.is_multiple_of(*d))
        .map(|d| BigInt::from(mobius(d)) * num_traits::pow(BigInt::from(p), (s / d) as usize))
        .sum();
    Ok(sum / BigInt::from(s))
}

/// Coefficients (constant term first, leading 1 omitted) of the monic polynomial with index
/// `idx`, reading the index in base `p`.
fn monic_digits(idx: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(deg as usize);
    let mut rest = idx;
    for _ in 0..deg {
        out.push(rest % p);
        rest /= p;
    }
    out
}

fn monic_index(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Counts monic irreducibles of degree `s` by marking every product of two monic
/// polynomials of positive degree; the unmarked ones are irreducible.
pub fn count_monic_irreducibles_exhaustive(s: u32, p: u64) -> Result<u64> {
    check_args(s, p)?;
    let total = p
        .checked_pow(s)
        .filter(|&t| t <= ENUMERATION_CAP)
        .ok_or_else(|| Error::EnumerationCap {
            count: format!("{p}^{s}"),
            cap: ENUMERATION_CAP,
        })?;
    let mut reducible = vec![false; total as usize];
    for d in 1..=s / 2 {
        for a in 0..p.pow(d) {
            let mut fa = monic_digits(a, d, p);
            fa.push(1);
            for b in 0..p.pow(s - d) {
                let mut fb = monic_digits(b, s - d, p);
                fb.push(1);
                let mut prod = vec![0u64; (s + 1) as usize];
                for (i, x) in fa.iter().enumerate() {
                    for (j, y) in fb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                reducible[monic_index(&prod[..s as usize], p) as usize] = true;
            }
        }
    }
    Ok(reducible.iter().filter(|r| !**r).count() as u64)
}

/// Exact fraction of monic degree-`s` polynomials over `F_p` that are irreducible, by
/// enumerating all of them.
pub fn exhaustive_irreducible_fraction(s: u32, p: u64) -> Result<Rational> {
    let count = count_monic_irreducibles_exhaustive(s, p)?;
    Ok(Rational::new(BigInt::from(count), BigInt::from(p).pow(s)))
}

/// The counting steps of the lower-bound argument, next to the exact counts they bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofBounds {
    /// Upper bound on the monic irreducibles of degree below `s`, excluding `x`.
    pub low_degree_upper: Rational,
    pub low_degree_exact: BigInt,
    /// Lower bound on the monic irreducibles of degree exactly `s`.
    pub degree_s_lower: Rational,
    pub degree_s_exact: BigInt,
    /// Upper bound on the monic irreducibles of degree at most `s`, excluding `x`.
    pub total_upper: Rational,
    pub total_exact: BigInt,
    /// `degree_s_lower / total_upper`, equal to [`irreducible_image_lower_bound`] for `s >= 2`.
    pub probability_lower: Rational,
    /// `degree_s_exact / total_exact`, the probability the bound is meant to underestimate.
    pub probability_exact: Rational,
}

impl ProofBounds {
    /// Whether every bound is on the correct side of its exact count.
    pub fn holds(&self) -> bool {
        self.low_degree_upper >= int(self.low_degree_exact.clone())
            && self.degree_s_lower <= int(self.degree_s_exact.clone())
            && self.total_upper >= int(self.total_exact.clone())
            && self.probability_lower <= self.probability_exact
    }
}

pub fn proof_bounds(s: u32, p: u64) -> Result<ProofBounds> {
    check_args(s, p)?;
    let low = low_degree_bound(s, p);
    let pm1 = int(pow_minus_one(p, s));
    let degree_s_lower = (&pm1 - &low) / int(s);
    let total_upper = &pm1 / int(s) + &low;
    let mut low_degree_exact = BigInt::zero();
    for i in 1..s {
        low_degree_exact += count_monic_irreducibles(i, p)?;
    }
    // x is the one monic irreducible excluded from the model
    low_degree_exact -= 1;
    let degree_s_exact = count_monic_irreducibles(s, p)?;
    let total_exact = if s == 1 {
        &degree_s_exact - 1
    } else {
        &low_degree_exact + &degree_s_exact
    };
    let low_degree_exact = low_degree_exact.max(BigInt::zero());
    let degree_s_model = if s == 1 {
        &degree_s_exact - 1
    } else {
        degree_s_exact.clone()
    };
    Ok(ProofBounds {
        probability_lower: &degree_s_lower / &total_upper,
        probability_exact: Rational::new(degree_s_model, total_exact.clone()),
        low_degree_upper: low,
        low_degree_exact,
        degree_s_lower,
        degree_s_exact,
        total_upper,
        total_exact,
    })
}

/// Result of sampling uniformly random monic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub irreducible: u64,
    pub fraction: Rational,
    /// Binomial variance of the fraction, `f (1 - f) / N`, kept exact.
    pub variance: Rational,
    /// Square root of the variance, floored to a multiple of `2^-64`.
    pub stderr: Rational,
}

impl MonteCarloEstimate {
    /// Whether `target` lies within `k` standard errors of the sampled fraction, decided
    /// exactly by comparing squares.
    pub fn within_stderrs(&self, target: &Rational, k: u32) -> bool {
        let diff = &self.fraction - target;
        &diff * &diff <= int(k * k) * &self.variance
    }
}

/// Samples `trials` uniformly random monic degree-`s` polynomials over `F_p` and reports the
/// fraction that is irreducible.
pub fn monte_carlo_irreducible_fraction<R: Rng + ?Sized>(
    s: u32,
    p: u64,
    trials: u64,
    rng: &mut R,
) -> Result<MonteCarloEstimate> {
    check_args(s, p)?;
    if trials < 100 {
        return Err(Error::InvalidArgument(format!(
            "at least 100 trials are needed, got {trials}"
        )));
    }
    let field = PrimeField::new(BigUint::from(p))?;
    let mut irreducible = 0u64;
    for _ in 0..trials {
        let coeffs: Vec<u64> = (0..s)
            .map(|_| rng.gen_range(0..p))
            .chain(std::iter::once(1))
            .collect();
        if is_irreducible_fp(&field, &ModPoly::from_u64s(&coeffs))? {
            irreducible += 1;
        }
    }
    let fraction = Rational::new(BigInt::from(irreducible), BigInt::from(trials));
    let variance = &fraction * (Rational::one() - &fraction) / int(trials);
    Ok(MonteCarloEstimate {
        trials,
        irreducible,
        stderr: rational_sqrt_floor(&variance, STDERR_PRECISION_BITS),
        fraction,
        variance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(
            irreducible_image_lower_bound(1, 5).unwrap(),
            Rational::one()
        );
        assert_eq!(
            irreducible_image_lower_bound(1, 10007).unwrap(),
            Rational::one()
        );
        // δ = 1/4 - 2/24 = 1/6, so (5/6)/(4/3)
        assert_eq!(irreducible_image_lower_bound(2, 5).unwrap(), q(5, 8));
        let b = irreducible_image_lower_bound(3, 10007).unwrap();
        let first_order = Rational::one() - q(4, 10006);
        assert!((b - first_order).abs() < q(1, 1000));
        assert!(irreducible_image_lower_bound(0, 5).is_err());
        assert!(irreducible_image_lower_bound(2, 6).is_err());
    }

    #[test]
    fn realistic_examples() {
        assert_eq!(realistic_estimate(2, 5).unwrap(), q(2, 5));
        assert_eq!(realistic_estimate(1, 5).unwrap(), q(4, 5));
        let r = realistic_estimate(3, 1_000_003).unwrap();
        assert!((r - q(1, 3)).abs() < q(1, 1_000_000));
        assert!(realistic_estimate(2, 1).is_err());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_monic_irreducibles(2, 5).unwrap(), BigInt::from(10));
        assert_eq!(count_monic_irreducibles(3, 5).unwrap(), BigInt::from(40));
        assert_eq!(count_monic_irreducibles(3, 2).unwrap(), BigInt::from(2));
        assert_eq!(count_monic_irreducibles_exhaustive(2, 5).unwrap(), 10);
        assert_eq!(count_monic_irreducibles_exhaustive(3, 5).unwrap(), 40);
        assert_eq!(count_monic_irreducibles_exhaustive(3, 2).unwrap(), 2);
        assert!(matches!(
            count_monic_irreducibles_exhaustive(7, 11),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, mu) in (1..=12).zip(expected) {
            assert_eq!(mobius(n), mu, "mu({n})");
        }
    }

    #[test]
    fn formula_matches_sieve() {
        for p in [2u64, 3, 5, 7] {
            for s in 1..=4 {
                let formula = count_monic_irreducibles(s, p).unwrap();
                let sieve = count_monic_irreducibles_exhaustive(s, p).unwrap();
                assert_eq!(formula, BigInt::from(sieve), "s={s} p={p}");
            }
        }
    }

    #[test]
    fn proof_bounds_hold_on_grid() {
        for p in [2u64, 3, 5, 7, 11, 101] {
            for s in 1..=6 {
                let b = proof_bounds(s, p).unwrap();
                assert!(b.holds(), "s={s} p={p}: {b:?}");
                if s >= 2 {
                    assert_eq!(
                        b.probability_lower,
                        irreducible_image_lower_bound(s, p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bound_expansion() {
        // 1 - (s+1)/(p-1) - C s^2/(p-1)^2 <= bound <= 1 with C = 1
        for p in [101u64, 1009, 10007] {
            for s in 2..=6 {
                let b = irreducible_image_lower_bound(s, p).unwrap();
                let pm1 = int(p - 1);
                let floor = Rational::one() - int(s + 1) / &pm1 - int(s * s) / (&pm1 * &pm1);
                assert!(b <= Rational::one() && b >= floor, "s={s} p={p}");
            }
        }
    }

    #[test]
    fn realistic_times_degree_tends_to_one() {
        for s in 2..=5 {
            let mut prev = Rational::zero();
            for p in [3u64, 11, 101, 1009, 10007] {
                let v = realistic_estimate(s, p).unwrap() * int(s);
                assert!(v > prev && v < Rational::one());
                prev = v;
            }
            assert!(Rational::one() - prev < q(1, 1000));
        }
    }

    #[test]
    fn monte_carlo_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let est = monte_carlo_irreducible_fraction(1, 13, 200, &mut rng).unwrap();
        assert_eq!(est.fraction, Rational::one());
        assert!(est.stderr.is_zero());
        assert_eq!(exhaustive_irreducible_fraction(2, 5).unwrap(), q(2, 5));
        assert!(monte_carlo_irreducible_fraction(2, 5, 99, &mut rng).is_err());

        let run = |seed| {
            monte_carlo_irreducible_fraction(2, 5, 400, &mut ChaCha8Rng::seed_from_u64(seed))
                .unwrap()
        };
        assert_eq!(run(7), run(7));
        assert!(run(7).within_stderrs(&q(2, 5), 3));
    }

    #[test]
    fn doubling_trials_halves_variance() {
        let est = |n| {
            monte_carlo_irreducible_fraction(2, 5, n, &mut ChaCha8Rng::seed_from_u64(5)).unwrap()
        };
        let (small, large) = (est(1000), est(2000));
        let ratio = &small.variance / &large.variance;
        // same fraction would give exactly 2; sampling noise moves it a little
        assert!(ratio > q(3, 2) && ratio < q(5, 2), "{ratio}");
        let stderr_ratio = &small.stderr / &large.stderr;
        assert!(&stderr_ratio * &stderr_ratio > q(3, 2));
    }
}
