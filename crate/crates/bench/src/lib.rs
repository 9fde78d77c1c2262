//! Fixed inputs shared by the benchmarks.

use num_bigint::BigUint;
use ratfactor::{ModPoly, NumberField, PolyRing, PrimeField, RatPoly, Rationals, Ring};

/// Product of `x^k - k - 1` for `k` in `1..=n`, multiplied out.
pub fn product_of_binomials(n: i64) -> RatPoly {
    let qx = PolyRing::new(Rationals);
    (1..=n).fold(qx.one(), |acc, k| {
        let mut coeffs = vec![0; k as usize + 1];
        coeffs[0] = -k - 1;
        coeffs[k as usize] = 1;
        qx.mul(&acc, &RatPoly::from_i64s(&coeffs))
    })
}

/// `prod (x ± √2 ± √3)`: irreducible over Q, yet it splits into linear or quadratic factors
/// modulo every prime.
pub fn swinnerton_dyer_4() -> RatPoly {
    RatPoly::from_i64s(&[1, 0, -10, 0, 1])
}

/// `x^n - 1` over `F_p`.
pub fn cyclotomic_mod(n: usize, p: u64) -> (PrimeField, ModPoly) {
    let field = PrimeField::new(BigUint::from(p)).expect("prime modulus");
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = p - 1;
    coeffs[n] = 1;
    (field, ModPoly::from_u64s(&coeffs))
}

/// `Q(α)` with `α^3 = 2`.
pub fn cube_root_two() -> NumberField {
    NumberField::new(&RatPoly::from_i64s(&[-2, 0, 0, 1])).expect("irreducible")
}
