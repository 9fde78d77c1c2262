use num_bigint::{BigInt, BigUint};
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{ModPoly, PolyRing};
use crate::ring::{Field, FiniteField, IntegralDomain, PrimeField, Ring};

/// The field `F_p[γ]/ψ(γ)` of order `p^deg ψ`, elements stored as reduced polynomials in γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteExtension {
    ring: PolyRing<PrimeField>,
    modulus: ModPoly,
}

impl FiniteExtension {
    /// Fails with [`Error::ReducibleModulus`] unless `psi` is irreducible over `F_p`.
    pub fn new(base: PrimeField, psi: &ModPoly) -> Result<Self> {
        let ring = PolyRing::new(base);
        if psi.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidArgument(
                "extension modulus must be nonconstant".into(),
            ));
        }
        let modulus = ring.monic(psi)?;
        if !super::is_irreducible(ring.base(), &modulus)? {
            return Err(Error::ReducibleModulus);
        }
        Ok(FiniteExtension { ring, modulus })
    }

    pub fn base(&self) -> &PrimeField {
        self.ring.base()
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonconstant modulus")
    }

    pub fn generator(&self) -> ModPoly {
        self.reduce(&self.ring.x())
    }

    pub fn reduce(&self, a: &ModPoly) -> ModPoly {
        self.ring.rem(a, &self.modulus).expect("modulus is nonzero")
    }
}

impl Ring for FiniteExtension {
    type Elem = ModPoly;

    fn zero(&self) -> ModPoly {
        ModPoly::zero()
    }
    fn one(&self) -> ModPoly {
        self.ring.one()
    }
    fn add(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.ring.add(a, b)
    }
    fn sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.ring.sub(a, b)
    }
    fn neg(&self, a: &ModPoly) -> ModPoly {
        self.ring.neg(a)
    }
    fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.reduce(&self.ring.mul(a, b))
    }
    fn from_int(&self, n: &BigInt) -> ModPoly {
        self.ring.from_int(n)
    }
}

impl IntegralDomain for FiniteExtension {
    fn exact_div(&self, a: &ModPoly, b: &ModPoly) -> Option<ModPoly> {
        self.div(a, b).ok()
    }
}

impl Field for FiniteExtension {
    fn inv(&self, a: &ModPoly) -> Result<ModPoly> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.ring.extended_gcd(a, &self.modulus);
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible(format!(
                "{a:?} modulo {:?}",
                self.modulus
            )));
        }
        Ok(self.reduce(&s))
    }

    fn characteristic(&self) -> BigUint {
        self.base().modulus().clone()
    }
}

impl FiniteField for FiniteExtension {
    fn order(&self) -> BigUint {
        num_traits::pow(self.base().modulus().clone(), self.degree())
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> ModPoly {
        let coeffs = (0..self.degree())
            .map(|_| self.base().random_elem(rng))
            .collect();
        self.ring.from_coeffs(coeffs)
    }

    /// `a^(p^(k-1))`, the inverse of the Frobenius on a field of order `p^k`.
    fn pth_root(&self, a: &ModPoly) -> ModPoly {
        let p = self.base().modulus();
        (1..self.degree()).fold(a.clone(), |acc, _| self.pow_big(&acc, p))
    }
}
