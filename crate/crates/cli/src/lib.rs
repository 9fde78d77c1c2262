//! The `ratfactor` command line: argument handling, command dispatch, and output.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratfactor::numeric::to_decimal_string;
use ratfactor::prob;
use ratfactor::{
    certify_irreducible, certify_irreducible_numfield, factor_numfield_report, factor_q_report,
    norm_polynomial, Error, FactorConfig, IrreducibilityCertificate, NumberField, Rational,
};
use serde_json::{json, Value};

use crate::parse::{parse_defining_poly, parse_ext_poly, parse_rat_poly, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "ratfactor",
    version,
    about = "Factor polynomials over the rationals and over simple number fields"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Defining polynomial of the extension, written in `alpha`
    #[arg(long, global = true, value_name = "POLY")]
    pub extension: Vec<String>,
    /// Seed for every random choice
    #[arg(long, global = true, env = "RATFACTOR_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Number of usable primes tried per squarefree part
    #[arg(long, global = true, default_value_t = 3)]
    pub primes: usize,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Use the smallest usable primes instead of random large ones
    #[arg(long, global = true)]
    pub test_mode_small_primes: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor a polynomial into irreducibles
    Factor { poly: String },
    /// Prove a polynomial irreducible, or exhibit a factor
    Irreducible { poly: String },
    /// Norm of a polynomial over the extension down to the rationals
    Norm { poly: String },
    /// Count monic irreducible polynomials of degree s over F_p
    Count {
        #[arg(short)]
        s: u32,
        #[arg(short)]
        p: u64,
    },
    /// Probability that a degree-s factor stays irreducible modulo p
    Estimate {
        #[arg(short)]
        s: u32,
        #[arg(short)]
        p: u64,
        /// Also sample this many random polynomials
        #[arg(long, value_name = "N")]
        monte_carlo: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Parse(ParseError),
    Math(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Parse(_) => EXIT_USAGE,
            Failure::Math(Error::UnsupportedTower) => EXIT_USAGE,
            Failure::Math(_) => EXIT_MATH,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Parse(_) => "parse",
            Failure::Math(e) => e.kind(),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Parse(e) => e.to_string(),
            Failure::Math(e) => e.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        let mut error = json!({"kind": self.kind(), "message": self.message()});
        if let Failure::Parse(e) = self {
            error["position"] = json!(e.position);
        }
        json!({ "error": error })
    }
}

/// The text and JSON renderings of a successful command, plus its exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn config_from(global: &GlobalArgs) -> FactorConfig {
    FactorConfig {
        num_primes: global.primes.max(1),
        seed: global.seed,
        small_primes: global.test_mode_small_primes,
        ..FactorConfig::default()
    }
}

fn number_field(
    global: &GlobalArgs,
    config: &FactorConfig,
) -> Result<Option<NumberField>, Failure> {
    match global.extension.as_slice() {
        [] => Ok(None),
        [phi] => Ok(Some(NumberField::with_config(
            &parse_defining_poly(phi)?,
            config,
        )?)),
        _ => Err(Failure::Math(Error::UnsupportedTower)),
    }
}

fn certificate_json(cert: &IrreducibilityCertificate) -> Value {
    let strings = |v: &[num_bigint::BigUint]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    match cert {
        IrreducibilityCertificate::WitnessPrime {
            prime,
            primes_tried,
        } => json!({
            "kind": cert.kind(),
            "prime": prime.as_ref().map(|p| p.to_string()),
            "primes_tried": strings(primes_tried),
        }),
        IrreducibilityCertificate::ExhaustedSearch(t) => json!({
            "kind": cert.kind(),
            "primes_tried": strings(&t.primes_tried),
            "factoring_prime": t.factoring_prime.as_ref().map(|p| p.to_string()),
            "modular_factor_count": t.modular_factor_count,
            "max_subset_size": t.max_subset_size,
            "subsets_tested": t.subsets_tested,
        }),
        IrreducibilityCertificate::ShiftedNorm {
            shift,
            norm,
            norm_certificate,
        } => json!({
            "kind": cert.kind(),
            "shift": shift,
            "norm": norm.to_string(),
            "norm_certificate": certificate_json(norm_certificate),
        }),
    }
}

fn certificate_text(cert: &IrreducibilityCertificate) -> String {
    match cert {
        IrreducibilityCertificate::WitnessPrime { prime: None, .. } => "linear".to_string(),
        IrreducibilityCertificate::WitnessPrime { prime: Some(p), .. } => {
            format!("irreducible modulo {p}")
        }
        IrreducibilityCertificate::ExhaustedSearch(t) => {
            let p = t
                .factoring_prime
                .as_ref()
                .map_or_else(String::new, |p| format!(" modulo {p}"));
            format!(
                "no factor among {} subsets of {} modular factors{p}",
                t.subsets_tested, t.modular_factor_count
            )
        }
        IrreducibilityCertificate::ShiftedNorm { shift, norm, .. } => {
            format!("norm of the shift by {shift}*alpha is {norm}, irreducible over Q")
        }
    }
}

fn factor_command(poly: &str, global: &GlobalArgs) -> Result<Output, Failure> {
    let config = config_from(global);
    let (input, text, unit, factors, certs, primes) = match number_field(global, &config)? {
        None => {
            let f = parse_rat_poly(poly)?;
            let r = factor_q_report(&f, &config)?;
            let factors: Vec<_> = r
                .factorization
                .factors
                .iter()
                .map(|(g, m)| (g.to_string(), *m))
                .collect();
            (
                f.to_string(),
                r.factorization.to_string(),
                r.factorization.unit.to_string(),
                factors,
                r.certificates,
                r.primes_used,
            )
        }
        Some(field) => {
            let f = parse_ext_poly(poly, &field)?;
            let r = factor_numfield_report(&f, &field, &config)?;
            let factors: Vec<_> = r
                .factorization
                .factors
                .iter()
                .map(|(g, m)| (g.to_string(), *m))
                .collect();
            (
                f.to_string(),
                r.factorization.to_string(),
                r.factorization.unit.to_string(),
                factors,
                r.certificates,
                r.primes_used,
            )
        }
    };
    let json = json!({
        "input": input,
        "unit": unit,
        "factors": factors
            .iter()
            .map(|(g, m)| json!({"poly": g, "multiplicity": m}))
            .collect::<Vec<_>>(),
        "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
        "primes_used": primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn irreducible_command(poly: &str, global: &GlobalArgs) -> Result<Output, Failure> {
    let config = config_from(global);
    let (input, verdict) = match number_field(global, &config)? {
        None => {
            let f = parse_rat_poly(poly)?;
            (f.to_string(), certify_irreducible(&f, &config))
        }
        Some(field) => {
            let f = parse_ext_poly(poly, &field)?;
            (
                f.to_string(),
                certify_irreducible_numfield(&f, &field, &config),
            )
        }
    };
    match verdict {
        Ok(cert) => Ok(Output::ok(
            format!("irreducible: {}", certificate_text(&cert)),
            json!({"input": input, "irreducible": true, "certificate": certificate_json(&cert)}),
        )),
        Err(e @ Error::Reducible { .. }) => {
            let Error::Reducible { factor } = &e else {
                unreachable!()
            };
            Ok(Output {
                text: format!("reducible: factor {factor}"),
                json: json!({
                    "input": input,
                    "irreducible": false,
                    "factor": factor,
                    "error": {"kind": e.kind(), "message": e.to_string()},
                }),
                code: EXIT_MATH,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn norm_command(poly: &str, global: &GlobalArgs) -> Result<Output, Failure> {
    let config = config_from(global);
    let Some(field) = number_field(global, &config)? else {
        return Err(Failure::Usage("`norm` needs --extension".into()));
    };
    let f = parse_ext_poly(poly, &field)?;
    let norm = norm_polynomial(&f, &field)?;
    Ok(Output::ok(
        norm.to_string(),
        json!({"input": f.to_string(), "extension": field.phi().to_string(), "norm": norm.to_string()}),
    ))
}

fn count_command(s: u32, p: u64) -> Result<Output, Failure> {
    let count = prob::count_monic_irreducibles(s, p)?;
    Ok(Output::ok(
        count.to_string(),
        json!({"s": s, "p": p.to_string(), "count": count.to_string()}),
    ))
}

fn rational_json(q: &Rational) -> Value {
    json!({"exact": q.to_string(), "decimal": to_decimal_string(q, DECIMAL_DIGITS)})
}

fn estimate_command(s: u32, p: u64, trials: Option<u64>, seed: u64) -> Result<Output, Failure> {
    let bound = prob::irreducible_image_lower_bound(s, p)?;
    let realistic = prob::realistic_estimate(s, p)?;
    let mut lines = vec![
        format!(
            "lower bound: {bound} ({})",
            to_decimal_string(&bound, DECIMAL_DIGITS)
        ),
        format!(
            "uniform estimate: {realistic} ({})",
            to_decimal_string(&realistic, DECIMAL_DIGITS)
        ),
    ];
    let mut json = json!({
        "s": s,
        "p": p.to_string(),
        "lower_bound": rational_json(&bound),
        "uniform_estimate": rational_json(&realistic),
    });
    if let Some(n) = trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mc = prob::monte_carlo_irreducible_fraction(s, p, n, &mut rng)?;
        lines.push(format!(
            "monte carlo: {}/{} = {} (stderr {})",
            mc.irreducible,
            mc.trials,
            to_decimal_string(&mc.fraction, DECIMAL_DIGITS),
            to_decimal_string(&mc.stderr, DECIMAL_DIGITS)
        ));
        json["monte_carlo"] = json!({
            "trials": mc.trials,
            "irreducible": mc.irreducible,
            "fraction": rational_json(&mc.fraction),
            "stderr": to_decimal_string(&mc.stderr, DECIMAL_DIGITS),
            "within_3_stderr": mc.within_stderrs(&realistic, 3),
        });
    }
    Ok(Output::ok(lines.join("\n"), json))
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let global = &cli.global;
    match &cli.command {
        Command::Factor { poly } => factor_command(poly, global),
        Command::Irreducible { poly } => irreducible_command(poly, global),
        Command::Norm { poly } => norm_command(poly, global),
        Command::Count { s, p } => count_command(*s, *p),
        Command::Estimate { s, p, monte_carlo } => {
            estimate_command(*s, *p, *monte_carlo, global.seed)
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`; returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = dispatch(&cli);
    let written = match &result {
        Ok(output) if cli.global.json => writeln!(out, "{}", output.json),
        Ok(output) => writeln!(out, "{}", output.text),
        Err(failure) if cli.global.json => writeln!(out, "{}", failure.to_json()),
        Err(failure) => writeln!(err, "error: {}", failure.message()),
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    match result {
        Ok(output) => output.code,
        Err(failure) => failure.code(),
    }
}
