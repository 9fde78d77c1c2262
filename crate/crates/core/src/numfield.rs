//! Factorization over a simple algebraic extension `Q(α)`, `φ(α) = 0`.
//!
//! A modular probe first looks for a prime modulo which `f` stays irreducible over
//! `F_p[γ]/ψ(γ)`. Otherwise each squarefree part is shifted to `f(x - λα)` until its norm
//! `res_α(φ, f)` is squarefree over the rationals; the rational factors of that norm then
//! give the factors of `f` by gcd, shifted back by `x ↦ x + λα`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp::{is_irreducible, FiniteExtension};
use crate::numeric::{lcm_denominators, PrimeSource, Rational};
use crate::poly::{
    clear_denominators, content_primitive, format_poly, gcd_q, resultant, IntPoly, ModPoly, Poly,
    PolyRing, RatPoly, TermCoefficient,
};
use crate::rational::{factor_q, factor_q_report, FactorConfig, IrreducibilityCertificate};
use crate::ring::{Coefficient, Field, IntegralDomain, PrimeField, Rationals, Ring};

/// Element of `Q[α]/φ(α)`, stored as its reduced polynomial in `α` of degree below `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElem(RatPoly);

pub type ExtPoly = Poly<ExtElem>;

impl ExtElem {
    pub fn as_poly(&self) -> &RatPoly {
        &self.0
    }

    pub fn is_rational(&self) -> bool {
        self.0.degree().unwrap_or(0) == 0
    }

    pub fn rational_part(&self) -> Rational {
        self.0.coeff(0).cloned().unwrap_or_else(Rational::zero)
    }
}

impl Coefficient for ExtElem {
    fn is_zero_coeff(&self) -> bool {
        self.0.is_zero()
    }
}

impl PartialOrd for ExtElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

fn ext_term(c: &ExtElem) -> TermCoefficient {
    let terms: Vec<_> =
        c.0.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect();
    match terms.as_slice() {
        [] => TermCoefficient::rational(&Rational::zero()),
        [(0, q)] => TermCoefficient::rational(q),
        [(i, q)] => {
            let power = if *i == 1 {
                "alpha".to_string()
            } else {
                format!("alpha^{i}")
            };
            let abs = q.abs();
            TermCoefficient::Signed {
                negative: q.is_negative(),
                magnitude: Some(if abs.is_one() {
                    power
                } else {
                    format!("{abs}*{power}")
                }),
            }
        }
        _ => TermCoefficient::Compound(format!("({c})")),
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.0, "alpha", TermCoefficient::rational))
    }
}

impl fmt::Display for Poly<ExtElem> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "x", ext_term))
    }
}

/// The field `Q[α]/φ(α)` for a monic `φ` irreducible over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    phi: RatPoly,
    psi: IntPoly,
    qx: PolyRing<Rationals>,
}

impl NumberField {
    /// Monicizes `phi` and verifies it is irreducible of degree at least 2.
    pub fn new(phi: &RatPoly) -> Result<Self> {
        Self::with_config(phi, &FactorConfig::default())
    }

    pub fn with_config(phi: &RatPoly, config: &FactorConfig) -> Result<Self> {
        let qx = PolyRing::new(Rationals);
        if phi.degree().unwrap_or(0) < 2 {
            return Err(Error::InvalidArgument(
                "defining polynomial must have degree at least 2".into(),
            ));
        }
        let phi = qx.monic(phi)?;
        let fac = factor_q(&phi, config)?;
        if !fac.is_irreducible() {
            return Err(Error::ReducibleDefiningPolynomial {
                factor: fac.factors[0].0.clone(),
            });
        }
        let psi = content_primitive(&clear_denominators(&phi)?.integer_poly)?.primitive_part;
        Ok(NumberField { phi, psi, qx })
    }

    pub fn phi(&self) -> &RatPoly {
        &self.phi
    }

    pub fn psi(&self) -> &IntPoly {
        &self.psi
    }

    pub fn degree(&self) -> usize {
        self.phi.degree().expect("nonconstant")
    }

    pub fn elem(&self, a: &RatPoly) -> ExtElem {
        ExtElem(self.qx.rem(a, &self.phi).expect("phi is nonzero"))
    }

    pub fn rational(&self, q: Rational) -> ExtElem {
        ExtElem(RatPoly::constant(q))
    }

    pub fn alpha(&self) -> ExtElem {
        self.elem(&self.qx.x())
    }

    /// The polynomial with the given coefficients (constant term first), each a polynomial in α.
    pub fn poly(&self, coeffs: &[RatPoly]) -> ExtPoly {
        Poly::new(coeffs.iter().map(|c| self.elem(c)).collect())
    }

    pub fn embed(&self, f: &RatPoly) -> ExtPoly {
        f.map(|c| self.rational(c.clone()))
    }

    /// The rational polynomial equal to `f`, if every coefficient of `f` is rational.
    pub fn restrict(&self, f: &ExtPoly) -> Option<RatPoly> {
        f.coeffs()
            .iter()
            .all(ExtElem::is_rational)
            .then(|| f.map(ExtElem::rational_part))
    }

    pub fn poly_ring(&self) -> PolyRing<&NumberField> {
        PolyRing::new(self)
    }
}

impl Ring for NumberField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem(RatPoly::zero())
    }
    fn one(&self) -> ExtElem {
        ExtElem(self.qx.one())
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(self.qx.add(&a.0, &b.0))
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(self.qx.sub(&a.0, &b.0))
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem(self.qx.neg(&a.0))
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.elem(&self.qx.mul(&a.0, &b.0))
    }
    fn from_int(&self, n: &BigInt) -> ExtElem {
        ExtElem(self.qx.from_int(n))
    }
}

impl IntegralDomain for NumberField {
    fn exact_div(&self, a: &ExtElem, b: &ExtElem) -> Option<ExtElem> {
        self.div(a, b).ok()
    }
}

impl Field for NumberField {
    fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if a.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.qx.extended_gcd(&a.0, &self.phi);
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible(a.to_string()));
        }
        Ok(self.elem(&s))
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }
}

/// `unit * Π factor^multiplicity` equals the input in `K[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFactorization {
    pub unit: ExtElem,
    pub factors: Vec<(ExtPoly, usize)>,
}

impl ExtFactorization {
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn expand(&self, field: &NumberField) -> ExtPoly {
        let kx = field.poly_ring();
        let product = kx.product(
            self.factors
                .iter()
                .map(|(f, m)| kx.pow(f, *m))
                .collect::<Vec<_>>()
                .iter(),
        );
        kx.scale(&product, &self.unit)
    }
}

impl fmt::Display for ExtFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit.0 != RatPoly::from_i64s(&[1]) || self.factors.is_empty() {
            parts.push(if self.unit.is_rational() {
                self.unit.to_string()
            } else {
                format!("({})", self.unit)
            });
        }
        for (g, m) in &self.factors {
            let base = format!("({g})");
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        f.write_str(&parts.join(" * "))
    }
}

fn require_nonconstant(f: &ExtPoly) -> Result<()> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

/// `f` scaled by the least positive integer clearing every denominator; the result has
/// integer coefficients in `α` and is returned as rows of integer polynomials.
fn clear_ext_denominators(f: &ExtPoly) -> (BigInt, Vec<IntPoly>) {
    let d = f
        .coeffs()
        .iter()
        .map(|c| lcm_denominators(c.0.coeffs()))
        .fold(BigInt::one(), |acc, x| acc.lcm(&x));
    let rows = f
        .coeffs()
        .iter()
        .map(|c| Poly::new(c.0.coeffs().iter().map(|q| (q * &d).to_integer()).collect()))
        .collect();
    (d, rows)
}

/// Outcome of testing one prime in the modular probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeTrial {
    /// The prime divides a denominator or leading coefficient, or `ψ` is reducible modulo it.
    Unusable,
    Reducible,
    Irreducible,
}

/// Tests the image of the monic `f` over `F_p[γ]/ψ(γ)`.
pub fn probe_with_prime(f: &ExtPoly, field: &NumberField, p: &BigUint) -> Result<ProbeTrial> {
    require_nonconstant(f)?;
    let f = field.poly_ring().monic(f)?;
    let base = PrimeField::new(p.clone())?;
    let psi = field.psi().map(|c| base.reduce(c));
    if psi.degree() != field.psi().degree() {
        return Ok(ProbeTrial::Unusable);
    }
    let (d, rows) = clear_ext_denominators(&f);
    if base.reduce(&d).is_zero() {
        return Ok(ProbeTrial::Unusable);
    }
    let ext = match FiniteExtension::new(base.clone(), &psi) {
        Ok(ext) => ext,
        Err(Error::ReducibleModulus) => return Ok(ProbeTrial::Unusable),
        Err(e) => return Err(e),
    };
    let image: Poly<ModPoly> = Poly::new(
        rows.iter()
            .map(|row| ext.reduce(&row.map(|c| base.reduce(c))))
            .collect(),
    );
    Ok(if is_irreducible(&ext, &image)? {
        ProbeTrial::Irreducible
    } else {
        ProbeTrial::Reducible
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    pub certificate: Option<IrreducibilityCertificate>,
    /// Usable primes tested, in order.
    pub primes_tried: Vec<BigUint>,
}

/// Looks for a prime modulo which `f` remains irreducible over the residue field. Tests up
/// to `trials` usable primes; an empty certificate says nothing about reducibility.
pub fn modular_irreducibility_probe(
    f: &ExtPoly,
    field: &NumberField,
    trials: usize,
    primes: &mut PrimeSource,
) -> Result<ProbeOutcome> {
    require_nonconstant(f)?;
    let mut outcome = ProbeOutcome {
        certificate: None,
        primes_tried: Vec::new(),
    };
    if f.degree() == Some(1) {
        outcome.certificate = Some(IrreducibilityCertificate::WitnessPrime {
            prime: None,
            primes_tried: Vec::new(),
        });
        return Ok(outcome);
    }
    // ψ can be reducible modulo every prime, so the number of draws is bounded too
    let draw_cap = 8 * trials + 64;
    for _ in 0..draw_cap {
        if outcome.primes_tried.len() >= trials {
            break;
        }
        let p = primes.next_prime();
        match probe_with_prime(f, field, &p)? {
            ProbeTrial::Unusable => continue,
            ProbeTrial::Reducible => outcome.primes_tried.push(p),
            ProbeTrial::Irreducible => {
                outcome.certificate = Some(IrreducibilityCertificate::WitnessPrime {
                    prime: Some(p),
                    primes_tried: std::mem::take(&mut outcome.primes_tried),
                });
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

/// `res_α(φ(α), f(x, α))`, the product of the conjugates of `f`. Of degree `k · deg f`.
pub fn norm_polynomial(f: &ExtPoly, field: &NumberField) -> Result<RatPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let qx = PolyRing::new(Rationals);
    // regroup f as a polynomial in α whose coefficients are polynomials in x
    let k = field.degree();
    let by_alpha: Vec<RatPoly> = (0..k)
        .map(|j| {
            Poly::new(
                f.coeffs()
                    .iter()
                    .map(|c| c.0.coeff(j).cloned().unwrap_or_else(Rational::zero))
                    .collect(),
            )
        })
        .collect();
    let in_alpha: Poly<RatPoly> = Poly::new(by_alpha);
    let phi: Poly<RatPoly> = field.phi().map(|c| RatPoly::constant(c.clone()));
    resultant(&qx, &phi, &in_alpha)
}

/// The monic gcd of `f` and the rational polynomial `g` in `K[x]`; fails when it is trivial.
pub fn gcd_extract(f: &ExtPoly, g: &RatPoly, field: &NumberField) -> Result<ExtPoly> {
    let kx = field.poly_ring();
    let h = kx.gcd(f, &field.embed(g));
    if h.degree().unwrap_or(0) == 0 {
        return Err(Error::Inconsistent(format!(
            "{g} shares no factor with {f} over the extension"
        )));
    }
    Ok(h)
}

/// `0, 1, -1, 2, -2, ...`
fn shift_value(i: usize) -> i64 {
    let half = i.div_ceil(2) as i64;
    if i % 2 == 1 {
        half
    } else {
        -half
    }
}

/// `f(x + t·α)`.
fn shift(f: &ExtPoly, t: i64, field: &NumberField) -> ExtPoly {
    let kx = field.poly_ring();
    let offset = field.mul(&field.from_int(&BigInt::from(t)), &field.alpha());
    let arg = Poly::new(vec![offset, field.one()]);
    kx.compose(f, &arg)
}

/// Factors of one squarefree part, each with the evidence that it is irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftResult {
    pub shift: i64,
    pub norm: RatPoly,
    pub factors: Vec<(ExtPoly, IrreducibilityCertificate)>,
}

/// Factors a monic squarefree `f` through the first shift `λ` making the norm of
/// `f(x - λα)` squarefree.
pub fn trager_shift_factor(
    f: &ExtPoly,
    field: &NumberField,
    config: &FactorConfig,
) -> Result<ShiftResult> {
    require_nonconstant(f)?;
    let kx = field.poly_ring();
    let f = kx.monic(f)?;
    let qx = PolyRing::new(Rationals);
    for i in 0..config.shift_cap {
        let lambda = shift_value(i);
        let shifted = shift(&f, -lambda, field);
        let norm = norm_polynomial(&shifted, field)?;
        if !gcd_q(&norm, &qx.derivative(&norm)).is_constant() {
            continue;
        }
        let report = factor_q_report(&norm, config)?;
        let mut factors = Vec::new();
        for ((g, _), cert) in report.factorization.factors.iter().zip(report.certificates) {
            let h = gcd_extract(&shifted, g, field)?;
            let back = kx.monic(&shift(&h, lambda, field))?;
            factors.push((
                back,
                IrreducibilityCertificate::ShiftedNorm {
                    shift: lambda,
                    norm: g.clone(),
                    norm_certificate: Box::new(cert),
                },
            ));
        }
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(ShiftResult {
            shift: lambda,
            norm,
            factors,
        });
    }
    Err(Error::ShiftCapExceeded {
        cap: config.shift_cap,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFactorReport {
    pub factorization: ExtFactorization,
    /// One certificate per entry of `factorization.factors`.
    pub certificates: Vec<IrreducibilityCertificate>,
    /// Primes tested by the modular probe.
    pub primes_used: Vec<BigUint>,
    /// Accepted shift and norm for each squarefree part, when the probe did not decide.
    pub shifts: Vec<(i64, RatPoly)>,
}

fn probe_source(config: &FactorConfig) -> PrimeSource {
    if config.small_primes {
        PrimeSource::ascending_above(&BigUint::from(2u32))
    } else {
        PrimeSource::random(config.probe_prime_bits, config.seed)
    }
}

pub fn factor_numfield_report(
    f: &ExtPoly,
    field: &NumberField,
    config: &FactorConfig,
) -> Result<ExtFactorReport> {
    require_nonconstant(f)?;
    let kx = field.poly_ring();
    let unit = f.leading().expect("nonzero").clone();
    let monic = kx.monic(f)?;
    let probe = modular_irreducibility_probe(
        &monic,
        field,
        config.probe_trials,
        &mut probe_source(config),
    )?;
    let mut report = ExtFactorReport {
        factorization: ExtFactorization {
            unit,
            factors: Vec::new(),
        },
        certificates: Vec::new(),
        primes_used: probe.primes_tried.clone(),
        shifts: Vec::new(),
    };
    if let Some(cert) = probe.certificate {
        if let IrreducibilityCertificate::WitnessPrime { prime: Some(p), .. } = &cert {
            report.primes_used.push(p.clone());
        }
        report.factorization.factors.push((monic, 1));
        report.certificates.push(cert);
        return Ok(report);
    }

    let (_, layers) = kx.multiplicity_layers(&monic, |a, b| kx.gcd(a, b))?;
    let mut entries = Vec::new();
    for (layer, multiplicity) in layers {
        let result = trager_shift_factor(&layer, field, config)?;
        report.shifts.push((result.shift, result.norm));
        entries.extend(
            result
                .factors
                .into_iter()
                .map(|(g, c)| (g, multiplicity, c)),
        );
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    for (g, m, c) in entries {
        report.factorization.factors.push((g, m));
        report.certificates.push(c);
    }
    if report.factorization.expand(field) != *f {
        return Err(Error::Inconsistent(format!(
            "factors of {f} do not multiply back to the input"
        )));
    }
    Ok(report)
}

pub fn factor_numfield(
    f: &ExtPoly,
    field: &NumberField,
    config: &FactorConfig,
) -> Result<ExtFactorization> {
    factor_numfield_report(f, field, config).map(|r| r.factorization)
}

/// Proves `f` irreducible over the extension, or fails with [`Error::Reducible`].
pub fn certify_irreducible_numfield(
    f: &ExtPoly,
    field: &NumberField,
    config: &FactorConfig,
) -> Result<IrreducibilityCertificate> {
    let report = factor_numfield_report(f, field, config)?;
    if !report.factorization.is_irreducible() {
        return Err(Error::Reducible {
            factor: report.factorization.factors[0].0.to_string(),
        });
    }
    Ok(report.certificates.into_iter().next().expect("one factor"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    fn field(phi: &[i64]) -> NumberField {
        NumberField::new(&rp(phi)).unwrap()
    }

    /// `Σ coeffs[i] x^i` with `coeffs[i] = (a, b)` meaning `a + b·α`.
    fn lin(k: &NumberField, coeffs: &[(i64, i64)]) -> ExtPoly {
        k.poly(&coeffs.iter().map(|&(a, b)| rp(&[a, b])).collect::<Vec<_>>())
    }

    #[test]
    fn field_construction() {
        let k = field(&[-2, 0, 1]);
        assert_eq!(k.degree(), 2);
        let a = k.alpha();
        assert_eq!(k.mul(&a, &a), k.rational(Rational::from_integer(2.into())));
        let inv = k.inv(&k.elem(&rp(&[1, 1]))).unwrap();
        // (1 + α)(-1 + α) = 1
        assert_eq!(inv, k.elem(&rp(&[-1, 1])));
        assert!(matches!(
            NumberField::new(&rp(&[-1, 0, 1])),
            Err(Error::ReducibleDefiningPolynomial { .. })
        ));
        assert!(NumberField::new(&rp(&[1, 1])).is_err());
        let k = NumberField::new(&RatPoly::from_fracs(&[(-3, 1), (0, 1), (2, 1)])).unwrap();
        assert_eq!(k.phi(), &RatPoly::from_fracs(&[(-3, 2), (0, 1), (1, 1)]));
        assert_eq!(k.psi(), &IntPoly::from_i64s(&[-3, 0, 2]));
    }

    #[test]
    fn display_forms() {
        let k = field(&[-2, 0, 1]);
        assert_eq!(lin(&k, &[(0, -1), (1, 0)]).to_string(), "x - alpha");
        assert_eq!(
            lin(&k, &[(4, 0), (0, -3), (1, 0)]).to_string(),
            "x^2 - 3*alpha*x + 4"
        );
        assert_eq!(
            lin(&k, &[(1, 1), (0, 0), (1, 0)]).to_string(),
            "x^2 + (alpha + 1)"
        );
        assert_eq!(
            k.elem(&RatPoly::from_fracs(&[(0, 1), (-1, 2)])).to_string(),
            "-1/2*alpha"
        );
    }

    #[test]
    fn norm_examples() {
        let k = field(&[-2, 0, 1]);
        assert_eq!(
            norm_polynomial(&lin(&k, &[(0, -1), (1, 0)]), &k).unwrap(),
            rp(&[-2, 0, 1])
        );
        assert_eq!(norm_polynomial(&lin(&k, &[(0, 1)]), &k).unwrap(), rp(&[-2]));
        assert_eq!(
            norm_polynomial(&lin(&k, &[(0, -1), (0, 0), (1, 0)]), &k).unwrap(),
            rp(&[-2, 0, 0, 0, 1])
        );
        // rational input: the norm is the k-th power
        assert_eq!(
            norm_polynomial(&lin(&k, &[(1, 0), (0, 0), (1, 0)]), &k).unwrap(),
            rp(&[1, 0, 2, 0, 1])
        );
        assert_eq!(
            norm_polynomial(&ExtPoly::zero(), &k),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn gcd_extract_examples() {
        let k = field(&[-2, 0, 1]);
        // (x - α)(x - 2α) = x^2 - 3αx + 4
        let f = lin(&k, &[(4, 0), (0, -3), (1, 0)]);
        let kx = k.poly_ring();
        assert_eq!(
            kx.mul(&lin(&k, &[(0, -1), (1, 0)]), &lin(&k, &[(0, -2), (1, 0)])),
            f
        );
        assert_eq!(
            norm_polynomial(&f, &k).unwrap(),
            PolyRing::new(Rationals).mul(&rp(&[-2, 0, 1]), &rp(&[-8, 0, 1]))
        );
        assert_eq!(
            gcd_extract(&f, &rp(&[-2, 0, 1]), &k).unwrap(),
            lin(&k, &[(0, -1), (1, 0)])
        );
        assert_eq!(
            gcd_extract(&f, &rp(&[-8, 0, 1]), &k).unwrap(),
            lin(&k, &[(0, -2), (1, 0)])
        );
        let g = lin(&k, &[(0, -1), (1, 0)]);
        assert_eq!(gcd_extract(&g, &rp(&[-2, 0, 1]), &k).unwrap(), g);
        assert!(matches!(
            gcd_extract(&g, &rp(&[-3, 0, 1]), &k),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn shift_sequence() {
        let v: Vec<i64> = (0..5).map(shift_value).collect();
        assert_eq!(v, vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn trager_examples() {
        let k = field(&[-2, 0, 1]);
        let config = FactorConfig::default();
        // x^2 - 2: λ = 0, 1, -1 give norms with repeated factors
        let f = lin(&k, &[(-2, 0), (0, 0), (1, 0)]);
        for (lambda, norm) in [
            (0, rp(&[4, 0, -4, 0, 1])),
            (1, rp(&[0, 0, -8, 0, 1])),
            (-1, rp(&[0, 0, -8, 0, 1])),
        ] {
            assert_eq!(norm_polynomial(&shift(&f, -lambda, &k), &k).unwrap(), norm);
        }
        let r = trager_shift_factor(&f, &k, &config).unwrap();
        assert_eq!(r.shift, 2);
        assert_eq!(
            r.norm,
            PolyRing::new(Rationals).mul(&rp(&[-2, 0, 1]), &rp(&[-18, 0, 1]))
        );
        let got: Vec<_> = r.factors.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(
            got,
            vec![lin(&k, &[(0, -1), (1, 0)]), lin(&k, &[(0, 1), (1, 0)])]
        );

        let r = trager_shift_factor(&lin(&k, &[(0, -1), (1, 0)]), &k, &config).unwrap();
        assert_eq!((r.shift, r.factors.len()), (0, 1));

        let r = trager_shift_factor(&lin(&k, &[(1, 0), (0, 0), (1, 0)]), &k, &config).unwrap();
        assert_eq!(r.shift, 1);
        assert_eq!(r.norm, rp(&[9, 0, -2, 0, 1]));
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.factors[0].1.kind(), "shifted-norm");
    }

    #[test]
    fn probe_examples() {
        let k = field(&[-2, 0, 1]);
        let mut primes = PrimeSource::ascending_above(&BigUint::from(2u32));
        let linear = lin(&k, &[(0, -1), (1, 0)]);
        let out = modular_irreducibility_probe(&linear, &k, 3, &mut primes).unwrap();
        assert_eq!(
            out.certificate,
            Some(IrreducibilityCertificate::WitnessPrime {
                prime: None,
                primes_tried: vec![]
            })
        );
        // x^3 - 2 over F_13[γ]/(γ^2 - 2)
        let cubic = lin(&k, &[(-2, 0), (0, 0), (0, 0), (1, 0)]);
        assert_eq!(
            probe_with_prime(&cubic, &k, &BigUint::from(13u32)).unwrap(),
            ProbeTrial::Irreducible
        );
        // 2 is a square mod 7, so γ^2 - 2 splits there
        assert_eq!(
            probe_with_prime(&cubic, &k, &BigUint::from(7u32)).unwrap(),
            ProbeTrial::Unusable
        );
        let out = modular_irreducibility_probe(
            &cubic,
            &k,
            8,
            &mut PrimeSource::ascending_above(&BigUint::from(2u32)),
        )
        .unwrap();
        assert_eq!(
            out.certificate,
            Some(IrreducibilityCertificate::WitnessPrime {
                prime: Some(BigUint::from(13u32)),
                primes_tried: [3u32, 5, 11].into_iter().map(BigUint::from).collect()
            })
        );
        // x^2 + 1 splits over every F_{p^2}
        let quad = lin(&k, &[(1, 0), (0, 0), (1, 0)]);
        for p in [11u32, 13, 19] {
            assert_eq!(
                probe_with_prime(&quad, &k, &BigUint::from(p)).unwrap(),
                ProbeTrial::Reducible
            );
        }
        let out =
            modular_irreducibility_probe(&quad, &k, 5, &mut PrimeSource::random(32, 1)).unwrap();
        assert_eq!(out.certificate, None);
        assert_eq!(out.primes_tried.len(), 5);
    }

    #[test]
    fn factor_examples() {
        let config = FactorConfig::default();
        let k = field(&[-2, 0, 1]);
        let fac = factor_numfield(&lin(&k, &[(-2, 0), (0, 0), (1, 0)]), &k, &config).unwrap();
        assert_eq!(fac.to_string(), "(x - alpha) * (x + alpha)");
        let fac = factor_numfield(&lin(&k, &[(1, 0), (0, 0), (1, 0)]), &k, &config).unwrap();
        assert!(fac.is_irreducible());

        let i = field(&[1, 0, 1]);
        let f = lin(&i, &[(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
        let fac = factor_numfield(&f, &i, &config).unwrap();
        assert_eq!(fac.to_string(), "(x^2 - alpha) * (x^2 + alpha)");
        assert_eq!(fac.expand(&i), f);

        // 3 (x - α)^2 (x + 1)
        let kx = k.poly_ring();
        let g = kx.scale(
            &kx.mul(
                &kx.pow(&lin(&k, &[(0, -1), (1, 0)]), 2),
                &lin(&k, &[(1, 0), (1, 0)]),
            ),
            &k.rational(Rational::from_integer(3.into())),
        );
        let fac = factor_numfield(&g, &k, &config).unwrap();
        assert_eq!(fac.to_string(), "3 * (x + 1) * (x - alpha)^2");
        assert_eq!(
            factor_numfield(&lin(&k, &[(0, 1)]), &k, &config),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn certify_examples() {
        let config = FactorConfig::test_mode();
        let k = field(&[-2, 0, 1]);
        let cert =
            certify_irreducible_numfield(&lin(&k, &[(1, 0), (0, 0), (1, 0)]), &k, &config).unwrap();
        let IrreducibilityCertificate::ShiftedNorm { shift, norm, .. } = cert else {
            panic!("expected a shifted norm certificate");
        };
        assert_eq!((shift, norm), (1, rp(&[9, 0, -2, 0, 1])));
        assert!(matches!(
            certify_irreducible_numfield(&lin(&k, &[(-2, 0), (0, 0), (1, 0)]), &k, &config),
            Err(Error::Reducible { .. })
        ));
    }
}
