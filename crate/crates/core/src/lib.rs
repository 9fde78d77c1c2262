//! Exact factorization of univariate polynomials over the rationals and over simple
//! algebraic number fields, by reduction modulo large primes without Hensel lifting.
//!
//! ```
//! use ratfactor::{factor_q, FactorConfig, RatPoly};
//!
//! // x^2 + 1/6 x - 1/6 = (x - 1/3)(x + 1/2)
//! let f = RatPoly::from_fracs(&[(-1, 6), (1, 6), (1, 1)]);
//! let fac = factor_q(&f, &FactorConfig::default()).unwrap();
//! assert_eq!(fac.to_string(), "(x - 1/3) * (x + 1/2)");
//! ```

pub mod error;
pub mod modp;
pub mod numeric;
pub mod numfield;
pub mod poly;
pub mod prob;
pub mod rational;
pub mod ring;

pub use error::{Error, Result};
pub use modp::{
    factor_fp, is_irreducible_fp, is_irreducible_fq, FiniteExtension, ModFactorization,
};
pub use numeric::{Integer, PrimeSource, Rational};
pub use numfield::{
    certify_irreducible_numfield, factor_numfield, factor_numfield_report, norm_polynomial,
    ExtElem, ExtFactorReport, ExtFactorization, ExtPoly, NumberField,
};
pub use poly::{IntPoly, ModPoly, Poly, PolyRing, RatPoly};
pub use rational::{
    certify_irreducible, factor_q, factor_q_report, FactorConfig, FactorReport, Factorization,
    IrreducibilityCertificate, SearchTranscript,
};
pub use ring::{Field, FiniteField, Integers, PrimeField, Rationals, Ring};
