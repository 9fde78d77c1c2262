//! Factorization over the rationals by reduction modulo large primes.
//!
//! A squarefree layer is cleared of denominators and content, reduced modulo a prime
//! `p > 2B` (with `B` the factor coefficient bound), and factored there. Products of modular
//! factors, scaled by the leading coefficient and lifted to the symmetric range, reproduce
//! every true integer factor exactly, so trying subsets in ascending size finds all of them
//! without any lifting step.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp::{factor_fp, is_irreducible_fp, ModFactorization};
use crate::numeric::{ceil_sqrt, symmetric_lift, PrimeSource, Rational};
use crate::poly::{
    clear_denominators, content_primitive, exact_div_int, gcd_q, int_to_rat, DenominatorSplit,
    IntPoly, ModPoly, PolyRing, RatPoly,
};
use crate::ring::{Integers, PrimeField, Rationals, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Usable primes tried per squarefree layer; the one with fewest modular factors wins.
    pub num_primes: usize,
    /// Extra bits of the random primes beyond the bit length of `2B`.
    pub prime_bits_extra: u64,
    pub subset_cap: u64,
    pub seed: u64,
    /// Use the smallest usable primes instead of random ones, for reproducible examples.
    pub small_primes: bool,
    /// Candidate primes drawn before giving up on finding a usable one.
    pub prime_retry_cap: usize,
    /// Primes tried when looking for a modular irreducibility witness over a number field.
    pub probe_trials: usize,
    pub probe_prime_bits: u64,
    /// Number of shift values `0, 1, -1, 2, -2, ...` tried before giving up.
    pub shift_cap: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            num_primes: 3,
            prime_bits_extra: 16,
            subset_cap: 1 << 20,
            seed: 0,
            small_primes: false,
            prime_retry_cap: 64,
            probe_trials: 3,
            probe_prime_bits: 32,
            shift_cap: 64,
        }
    }
}

impl FactorConfig {
    pub fn with_seed(seed: u64) -> Self {
        FactorConfig {
            seed,
            ..FactorConfig::default()
        }
    }

    pub fn test_mode() -> Self {
        FactorConfig {
            small_primes: true,
            ..FactorConfig::default()
        }
    }
}

/// `unit * Π factor^multiplicity` equals the input; factors are monic, irreducible, pairwise
/// distinct, and sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(RatPoly, usize)>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn expand(&self) -> RatPoly {
        let qx = PolyRing::new(Rationals);
        let product = qx.product(
            self.factors
                .iter()
                .map(|(f, m)| qx.pow(f, *m))
                .collect::<Vec<_>>()
                .iter(),
        );
        qx.scale(&product, &self.unit)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (g, m) in &self.factors {
            let base = format!("({g})");
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        f.write_str(&parts.join(" * "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    DividesLeading,
    NotSquarefree,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::DividesLeading => "divides the leading coefficient",
            Rejection::NotSquarefree => "modular image is not squarefree",
        })
    }
}

/// One candidate prime. Usable trials carry the modular factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTrial {
    pub p: BigUint,
    pub outcome: std::result::Result<ModFactorization, Rejection>,
}

impl PrimeTrial {
    pub fn is_usable(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn modular_factors(&self) -> Option<&ModFactorization> {
        self.outcome.as_ref().ok()
    }
}

/// Record of a completed recombination search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchTranscript {
    /// Primes checked for a witness before falling back to the search.
    pub primes_tried: Vec<BigUint>,
    pub factoring_prime: Option<BigUint>,
    pub modular_factor_count: usize,
    /// Largest subset size the search had to examine.
    pub max_subset_size: usize,
    pub subsets_tested: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// The cleared polynomial is irreducible of full degree modulo `prime`; `None` for linear
    /// polynomials, which need no witness.
    WitnessPrime {
        prime: Option<BigUint>,
        primes_tried: Vec<BigUint>,
    },
    ExhaustedSearch(SearchTranscript),
    /// Over a number field: the norm of `f(x - shift·α)` is irreducible over the rationals.
    ShiftedNorm {
        shift: i64,
        norm: RatPoly,
        norm_certificate: Box<IrreducibilityCertificate>,
    },
}

impl IrreducibilityCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            IrreducibilityCertificate::WitnessPrime { .. } => "witness-prime",
            IrreducibilityCertificate::ExhaustedSearch(_) => "exhausted-search",
            IrreducibilityCertificate::ShiftedNorm { .. } => "shifted-norm",
        }
    }
}

/// A factor found by recombination, with the modular factors that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFactor {
    pub subset: Vec<usize>,
    pub candidate: IntPoly,
}

/// Intermediate data for one squarefree layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerTrace {
    pub layer: RatPoly,
    pub multiplicity: usize,
    pub cleared: DenominatorSplit,
    pub primitive: IntPoly,
    pub bound: BigInt,
    pub trials: Vec<PrimeTrial>,
    /// Index into `trials` of the trial used for recombination.
    pub chosen: Option<usize>,
    pub lifted: Vec<LiftedFactor>,
    pub residual: Option<IntPoly>,
    pub transcript: SearchTranscript,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub factorization: Factorization,
    /// One certificate per entry of `factorization.factors`.
    pub certificates: Vec<IrreducibilityCertificate>,
    pub primes_used: Vec<BigUint>,
    pub layers: Vec<LayerTrace>,
}

fn require_nonconstant(f: &RatPoly) -> Result<()> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

/// `f / gcd(f, f')` together with the multiplicity layers: the `i`-th layer is the product
/// of the distinct irreducible factors of multiplicity exactly `i`.
pub fn squarefree_part_q(f: &RatPoly) -> Result<(RatPoly, Vec<(RatPoly, usize)>)> {
    require_nonconstant(f)?;
    PolyRing::new(Rationals).multiplicity_layers(f, gcd_q)
}

/// `2^deg f * ceil(||f||_2) * |lc f|`; bounds the coefficients of `(lc f / lc h) * h` for
/// every integer factor `h` of `f`.
pub fn factor_coefficient_bound(f: &IntPoly) -> Result<BigInt> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let norm_sq: BigUint = f
        .coeffs()
        .iter()
        .map(|c| c.magnitude() * c.magnitude())
        .sum();
    let lc = f.leading().expect("nonzero").magnitude().clone();
    Ok(BigInt::from(
        (BigUint::one() << deg) * ceil_sqrt(&norm_sq) * lc,
    ))
}

fn classify_prime(f: &IntPoly, p: &BigUint) -> Result<PrimeTrial> {
    let field = PrimeField::new(p.clone())?;
    let image = f.map(|c| field.reduce(c));
    if image.degree() != f.degree() {
        return Ok(PrimeTrial {
            p: p.clone(),
            outcome: Err(Rejection::DividesLeading),
        });
    }
    let ring = PolyRing::new(&field);
    if !ring.gcd(&image, &ring.derivative(&image)).is_constant() {
        return Ok(PrimeTrial {
            p: p.clone(),
            outcome: Err(Rejection::NotSquarefree),
        });
    }
    Ok(PrimeTrial {
        p: p.clone(),
        outcome: Ok(factor_fp(&field, &image)?),
    })
}

/// The prime stream for a polynomial with coefficient bound `bound`: random primes of
/// `bitlen(2B) + extra` bits, or in test mode the primes above `2B` in ascending order.
pub fn prime_source_for(bound: &BigInt, config: &FactorConfig, stream: u64) -> PrimeSource {
    let twice = bound.magnitude() << 1u32;
    if config.small_primes {
        PrimeSource::ascending_above(&twice)
    } else {
        let bits = twice.bits() + config.prime_bits_extra.max(1);
        PrimeSource::random(bits, config.seed.wrapping_add(stream))
    }
}

/// Draws primes until one is usable for `f`: it must not divide the leading coefficient and
/// must leave the image squarefree. Rejected candidates are appended to `rejected`.
pub fn select_prime(
    f: &IntPoly,
    primes: &mut PrimeSource,
    retry_cap: usize,
    rejected: &mut Vec<PrimeTrial>,
) -> Result<PrimeTrial> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let start = rejected.len();
    for _ in 0..retry_cap.max(1) {
        let trial = classify_prime(f, &primes.next_prime())?;
        if trial.is_usable() {
            return Ok(trial);
        }
        rejected.push(trial);
    }
    let reasons = rejected[start..]
        .iter()
        .map(|t| format!("{}: {}", t.p, t.outcome.as_ref().unwrap_err()))
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::PrimeSearchExhausted {
        attempts: retry_cap.max(1),
        reasons,
    })
}

fn normalized_primitive(f: &IntPoly) -> Result<IntPoly> {
    let p = content_primitive(f)?.primitive_part;
    Ok(if p.leading().is_some_and(Signed::is_negative) {
        PolyRing::new(Integers).neg(&p)
    } else {
        p
    })
}

/// `c * g mod p`, lifted coefficientwise to `(-p/2, p/2]`, then made primitive with a
/// positive leading coefficient.
pub fn candidate_lift(g: &ModPoly, c: &BigInt, p: &BigUint) -> Result<IntPoly> {
    let field = PrimeField::new(p.clone())?;
    let c = field.reduce(c);
    if c.is_zero() {
        return Err(Error::NotInvertible(format!("scale factor modulo {p}")));
    }
    let scaled = PolyRing::new(&field).scale(g, &c);
    normalized_primitive(&scaled.map(|a| symmetric_lift(a, p)))
}

/// If the monic associate of `h` divides `f` over the rationals, returns the quotient and
/// that monic factor.
pub fn trial_divide(f: &RatPoly, h: &IntPoly) -> Option<(RatPoly, RatPoly)> {
    let qx = PolyRing::new(Rationals);
    let factor = qx.monic(&int_to_rat(h)).ok()?;
    let quotient = qx.checked_div(f, &factor)?;
    Some((quotient, factor))
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Recombination {
    factors: Vec<IntPoly>,
    lifted: Vec<LiftedFactor>,
    residual: Option<IntPoly>,
    max_subset_size: usize,
    subsets_tested: u64,
}

/// Recovers the integer factors of the primitive squarefree `f` from its factorization
/// modulo `p > 2B`, trying subsets of the modular factors in ascending size.
fn recombine(
    f: &IntPoly,
    modular: &ModFactorization,
    p: &BigUint,
    cap: u64,
) -> Result<Recombination> {
    let field = PrimeField::new(p.clone())?;
    let ring = PolyRing::new(&field);
    let mut rest = f.clone();
    let mut remaining: Vec<usize> = (0..modular.factors.len()).collect();
    let mut out = Recombination {
        factors: Vec::new(),
        lifted: Vec::new(),
        residual: None,
        max_subset_size: 1.min(remaining.len()),
        subsets_tested: 0,
    };
    let mut k = 1;
    while 2 * k <= remaining.len() {
        out.max_subset_size = out.max_subset_size.max(k);
        let lc = rest.leading().expect("nonzero").clone();
        let mut idx: Vec<usize> = (0..k).collect();
        let mut found = None;
        loop {
            out.subsets_tested += 1;
            if out.subsets_tested > cap {
                return Err(Error::SubsetCapExceeded { cap });
            }
            let product = ring.product(idx.iter().map(|&i| &modular.factors[remaining[i]].0));
            let candidate = candidate_lift(&product, &lc, p)?;
            if let Some(quotient) = exact_div_int(&rest, &candidate) {
                found = Some((idx.clone(), candidate, quotient));
                break;
            }
            if !next_combination(&mut idx, remaining.len()) {
                break;
            }
        }
        match found {
            Some((idx, candidate, quotient)) => {
                let subset: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !subset.contains(i));
                out.lifted.push(LiftedFactor {
                    subset,
                    candidate: candidate.clone(),
                });
                out.factors.push(candidate);
                rest = normalized_primitive(&quotient)?;
            }
            None => k += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.factors.push(rest.clone());
        out.residual = Some(rest);
    }
    Ok(out)
}

/// Factors one squarefree layer, returning the monic factors with their certificates.
fn factor_layer(
    layer: &RatPoly,
    multiplicity: usize,
    config: &FactorConfig,
    stream: u64,
) -> Result<(Vec<(RatPoly, IrreducibilityCertificate)>, LayerTrace)> {
    let cleared = clear_denominators(layer)?;
    let primitive = normalized_primitive(&cleared.integer_poly)?;
    let bound = factor_coefficient_bound(&primitive)?;
    let mut trace = LayerTrace {
        layer: layer.clone(),
        multiplicity,
        cleared,
        primitive: primitive.clone(),
        bound: bound.clone(),
        trials: Vec::new(),
        chosen: None,
        lifted: Vec::new(),
        residual: None,
        transcript: SearchTranscript::default(),
    };
    if layer.degree() == Some(1) {
        let monic = PolyRing::new(Rationals).monic(layer)?;
        let cert = IrreducibilityCertificate::WitnessPrime {
            prime: None,
            primes_tried: Vec::new(),
        };
        trace.residual = Some(primitive);
        return Ok((vec![(monic, cert)], trace));
    }

    let mut primes = prime_source_for(&bound, config, stream);
    let mut best: Option<usize> = None;
    for _ in 0..config.num_primes.max(1) {
        let trial = select_prime(
            &primitive,
            &mut primes,
            config.prime_retry_cap,
            &mut trace.trials,
        )?;
        let count = trial.modular_factors().expect("usable").factors.len();
        trace.trials.push(trial);
        let i = trace.trials.len() - 1;
        let better = match best {
            None => true,
            Some(b) => {
                let current = trace.trials[b].modular_factors().unwrap().factors.len();
                count < current || (count == current && trace.trials[i].p < trace.trials[b].p)
            }
        };
        if better {
            best = Some(i);
        }
        if count == 1 {
            break;
        }
    }
    let chosen = best.expect("at least one usable trial");
    trace.chosen = Some(chosen);
    let trial = &trace.trials[chosen];
    let modular = trial.modular_factors().unwrap();
    let p = trial.p.clone();

    let rec = recombine(&primitive, modular, &p, config.subset_cap)?;
    trace.transcript = SearchTranscript {
        primes_tried: Vec::new(),
        factoring_prime: Some(p.clone()),
        modular_factor_count: modular.factors.len(),
        max_subset_size: rec.max_subset_size,
        subsets_tested: rec.subsets_tested,
    };
    let qx = PolyRing::new(Rationals);
    let mut out = Vec::new();
    let single = |subset_len: usize| subset_len == 1;
    for lifted in &rec.lifted {
        let cert = if single(lifted.subset.len()) {
            IrreducibilityCertificate::WitnessPrime {
                prime: Some(p.clone()),
                primes_tried: Vec::new(),
            }
        } else {
            IrreducibilityCertificate::ExhaustedSearch(trace.transcript.clone())
        };
        out.push((qx.monic(&int_to_rat(&lifted.candidate))?, cert));
    }
    if let Some(residual) = &rec.residual {
        let used: usize = rec.lifted.iter().map(|l| l.subset.len()).sum();
        let cert = if single(modular.factors.len() - used) {
            IrreducibilityCertificate::WitnessPrime {
                prime: Some(p.clone()),
                primes_tried: Vec::new(),
            }
        } else {
            IrreducibilityCertificate::ExhaustedSearch(trace.transcript.clone())
        };
        out.push((qx.monic(&int_to_rat(residual))?, cert));
    }
    trace.lifted = rec.lifted;
    trace.residual = rec.residual;
    Ok((out, trace))
}

/// Full factorization over the rationals together with the intermediate data of every layer.
pub fn factor_q_report(f: &RatPoly, config: &FactorConfig) -> Result<FactorReport> {
    require_nonconstant(f)?;
    let unit = f.leading().expect("nonzero").clone();
    let (_, layers) = squarefree_part_q(f)?;
    let mut entries = Vec::new();
    let mut traces = Vec::new();
    for (stream, (layer, multiplicity)) in layers.iter().enumerate() {
        let (found, trace) = factor_layer(layer, *multiplicity, config, stream as u64)?;
        entries.extend(found.into_iter().map(|(g, cert)| (g, *multiplicity, cert)));
        traces.push(trace);
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let factorization = Factorization {
        unit,
        factors: entries.iter().map(|(g, m, _)| (g.clone(), *m)).collect(),
    };
    if factorization.expand() != *f {
        return Err(Error::Inconsistent(format!(
            "factors of {f} do not multiply back to the input"
        )));
    }
    let primes_used = traces
        .iter()
        .flat_map(|t| {
            t.trials
                .iter()
                .filter(|t| t.is_usable())
                .map(|t| t.p.clone())
        })
        .collect();
    Ok(FactorReport {
        factorization,
        certificates: entries.into_iter().map(|(_, _, c)| c).collect(),
        primes_used,
        layers: traces,
    })
}

pub fn factor_q(f: &RatPoly, config: &FactorConfig) -> Result<Factorization> {
    factor_q_report(f, config).map(|r| r.factorization)
}

/// Primes searched for an irreducibility witness: in test mode the smallest usable odd
/// primes, otherwise the same random large primes the factoring path would use.
fn witness_source(bound: &BigInt, config: &FactorConfig) -> PrimeSource {
    if config.small_primes {
        PrimeSource::ascending_above(&BigUint::from(2u32))
    } else {
        prime_source_for(bound, config, u64::MAX)
    }
}

/// Proves `f` irreducible over the rationals, or fails with [`Error::Reducible`] carrying a
/// proper factor.
pub fn certify_irreducible(
    f: &RatPoly,
    config: &FactorConfig,
) -> Result<IrreducibilityCertificate> {
    require_nonconstant(f)?;
    let qx = PolyRing::new(Rationals);
    if f.degree() == Some(1) {
        return Ok(IrreducibilityCertificate::WitnessPrime {
            prime: None,
            primes_tried: Vec::new(),
        });
    }
    let g = gcd_q(f, &qx.derivative(f));
    if !g.is_constant() {
        return Err(Error::Reducible {
            factor: g.to_string(),
        });
    }
    let primitive = normalized_primitive(&clear_denominators(f)?.integer_poly)?;
    let bound = factor_coefficient_bound(&primitive)?;
    let mut primes = witness_source(&bound, config);
    let mut primes_tried = Vec::new();
    let mut rejected = Vec::new();
    for _ in 0..config.num_primes.max(1) {
        let trial = select_prime(
            &primitive,
            &mut primes,
            config.prime_retry_cap,
            &mut rejected,
        )?;
        let field = PrimeField::new(trial.p.clone())?;
        let image = primitive.map(|c| field.reduce(c));
        let witnessed = trial
            .modular_factors()
            .map(|m| m.is_irreducible())
            .unwrap_or(false);
        debug_assert_eq!(witnessed, is_irreducible_fp(&field, &image)?);
        if witnessed {
            return Ok(IrreducibilityCertificate::WitnessPrime {
                prime: Some(trial.p),
                primes_tried,
            });
        }
        primes_tried.push(trial.p);
    }

    let report = factor_q_report(f, config)?;
    let factorization = &report.factorization;
    if !factorization.is_irreducible() {
        let (g, _) = &factorization.factors[0];
        return Err(Error::Reducible {
            factor: g.to_string(),
        });
    }
    let mut transcript = report.layers[0].transcript.clone();
    transcript.primes_tried = primes_tried;
    Ok(IrreducibilityCertificate::ExhaustedSearch(transcript))
}
