//! `smallgen`: small-height generators of number fields from the command
//! line.
//!
//! Reports go to stdout (text or JSON), diagnostics to stderr. Exit codes:
//! 0 ok, 1 failed check, 2 bad input, 3 unverified irreducibility,
//! 4 not found, 5 resource or precision cap.

mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use smallgen::adelic::{find_generator_padic, find_generator_real, verify_certificate, GeneratorCertificate};
use smallgen::arith::primes::is_prime;
use smallgen::field::Field;
use smallgen::heights::ln_bigint;
use smallgen::quadratic::{enumerate_quad_generators, minimal_quad_generator_height, sharpness_check};
use smallgen::report::*;
use smallgen::spec::FieldSpec;
use smallgen::splitting::*;
use smallgen::Error;

use config::{Config, ConfigFile, OutputFormat};

#[derive(Parser, Debug)]
#[command(name = "smallgen", version, about = "Small-height generators of number fields")]
struct Cli {
    /// TOML file with any of the config keys.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    precision_bits: Option<u32>,
    #[arg(long, global = true)]
    prime_bound: Option<u64>,
    #[arg(long, global = true)]
    enumeration_cap: Option<usize>,
    #[arg(long, global = true)]
    eps: Option<f64>,
    #[arg(long, global = true)]
    c1: Option<f64>,
    #[arg(long, global = true, value_enum)]
    output_format: Option<OutputFormat>,
    /// Accept a defining polynomial whose irreducibility is not proved.
    #[arg(long, global = true)]
    allow_unverified: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, signature, discriminants and the field constant.
    FieldInfo { spec: String },
    /// Certified small-height generator.
    FindGenerator {
        spec: String,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Real place for the archimedean search.
        #[arg(long, default_value_t = 0)]
        place: usize,
    },
    /// Least-product set of primes with degree-one places above `c^d`.
    PrimeSet { spec: String },
    /// Splitting types of the given primes.
    Split {
        spec: String,
        #[arg(required = true)]
        primes: Vec<u64>,
    },
    /// Least height of a generator of `Q(√d)`, `d < 0` squarefree.
    QuadMinimal {
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Split-prime counts, Frobenius census and the window diagnostics.
    Cheb {
        spec: String,
        #[arg(long, default_value_t = 100)]
        x: u64,
    },
    /// Re-check a certificate emitted by `find-generator --output-format json`.
    VerifyCertificate { file: PathBuf },
    /// Reproduce the worked example for `Q(√-163)`.
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Real,
    Padic,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::FieldMismatch | Error::DivisionByZero => 2,
            Error::Unverified(_) => 3,
            Error::NotFound(_) => 4,
            Error::Cap(_) | Error::Precision { .. } => 5,
            Error::Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// A report plus the exit code to finish with.
struct Outcome {
    report: Value,
    code: u8,
}

impl From<Value> for Outcome {
    fn from(report: Value) -> Self {
        Outcome { report, code: 0 }
    }
}

/// Inline JSON when the argument starts with `{`, else a file path.
fn read_spec(arg: &str) -> Result<FieldSpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| bad_input(format!("cannot read field spec {arg}: {e}")))?
    };
    Ok(FieldSpec::parse(&text)?)
}

fn load_field(arg: &str, allow_unverified: bool) -> Result<Field, Failure> {
    Ok(read_spec(arg)?.build(allow_unverified)?)
}

fn find_generator(k: &Field, mode: Mode, place: usize, cfg: &Config) -> Result<GeneratorCertificate, Failure> {
    let (r, _) = k.signature();
    let real = match mode {
        Mode::Auto => r >= 1,
        Mode::Real => true,
        Mode::Padic => false,
    };
    if real {
        eprintln!("archimedean search at place {place}, eps = {}", cfg.eps);
        Ok(find_generator_real(k, place, cfg.eps, cfg.enumeration_cap)?)
    } else {
        let set = find_prime_set(k, cfg.prime_bound)?;
        eprintln!("p-adic search with P = {:?}", set.primes());
        Ok(find_generator_padic(&set, cfg.enumeration_cap)?)
    }
}

fn cheb(k: &Field, x: u64, cfg: &Config) -> Result<Value, Failure> {
    if x < 2 {
        return Err(bad_input("x must be at least 2"));
    }
    let count = count_split_primes(k, x)?;
    let li = logarithmic_integral(x as f64)?;
    let census = frobenius_census(k, x)?;
    let mut v = json!({
        "x": x,
        "split_count": count,
        "li": li,
        "ratio_to_li": count as f64 / li.max(f64::MIN_POSITIVE),
        "census": census_json(&census),
    });
    if k.degree() == 2 {
        // a quadratic field is its own Galois closure: density 1/2
        let lo = lo_bound(ln_bigint(&smallgen::Integer::from(k.field_disc().magnitude().clone())), 2, x as f64, cfg.c1)?;
        v["density"] = json!(0.5);
        v["expected"] = json!(li / 2.0);
        v["deviation"] = json!(count as f64 - li / 2.0);
        v["lo_bound"] = json!(lo);
        v["within_lo_bound"] = json!((count as f64 - li / 2.0).abs() <= lo);
    }
    if k.degree() >= 2 {
        v["window"] = cheb_report_json(&lemma51_report(k, cfg.c1)?);
    }
    Ok(v)
}

/// The worked example for `Q(√-163)`, one row per check.
fn verify_paper(cfg: &Config) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| {
        rows.push(json!({"check": name, "pass": pass, "detail": detail}));
    };
    let k = FieldSpec::parse(r#"{"poly": [41, 1, 1]}"#)?.build(false)?;
    check(
        "field discriminant",
        k.field_disc() == &(-163).into(),
        format!("disc = {}", k.field_disc()),
    );
    let c = k.field_constant(cfg.precision_bits).value();
    check("field constant", (c - 2.850).abs() <= 1e-3, format!("c = {c:.7}"));
    let t3 = splitting_type(&k, 3)?;
    let t41 = splitting_type(&k, 41)?;
    let t163 = splitting_type(&k, 163)?;
    check(
        "degree-one places",
        !has_degree_one_place(&k, 3) && has_degree_one_place(&k, 41) && has_degree_one_place(&k, 163),
        format!("{t3}; {t41}; {t163}"),
    );
    let set = find_prime_set(&k, cfg.prime_bound)?;
    check(
        "prime set",
        set.primes() == vec![41],
        format!("P = {:?}, c² = {:.7}", set.primes(), set.threshold.value()),
    );
    let bound = set.bound().value();
    check(
        "height bound",
        (bound - 41f64.sqrt()).abs() <= 1e-12 && c < bound,
        format!("bound = {bound:.7} > c"),
    );
    let cert = find_generator_padic(&set, cfg.enumeration_cap)?;
    let ok = verify_certificate(&cert);
    check(
        "generator certificate",
        ok && cert.min_poly.deg() == 2 && cert.height.value_f64() <= bound + 1e-9,
        format!("α = {}, f = {}, H = {:.7}", cert.alpha, cert.min_poly, cert.height.value_f64()),
    );
    let (m, w) = minimal_quad_generator_height(-163)?;
    check("least generator height", m == 41, format!("H² = {m} via {w}"));
    let below = enumerate_quad_generators(-163, 40)?;
    check(
        "no generator below the bound",
        below.is_empty(),
        format!("{} generators with max(a, c) ≤ 40", below.len()),
    );
    let sharp = sharpness_check(-163, cfg.prime_bound)?;
    check(
        "sharpness",
        sharp.sharp,
        format!("bound² = {}, least H² = {}", sharp.bound_square, sharp.minimal_square),
    );
    let failed = rows.iter().filter(|r| r["pass"] == json!(false)).count();
    Ok(Outcome {
        code: if failed == 0 { 0 } else { 1 },
        report: json!({"checks": rows, "passed": rows.len() - failed, "failed": failed}),
    })
}

fn paper_table(v: &Value) -> String {
    let mut out = String::new();
    for r in v["checks"].as_array().into_iter().flatten() {
        let tag = if r["pass"] == json!(true) { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{tag}  {:<30} {}\n",
            r["check"].as_str().unwrap_or(""),
            r["detail"].as_str().unwrap_or("")
        ));
    }
    out.push_str(&format!("{} passed, {} failed\n", v["passed"], v["failed"]));
    out
}

fn run(cli: &Cli, cfg: &Config) -> Result<Outcome, Failure> {
    let unverified = cli.allow_unverified;
    match &cli.command {
        Command::FieldInfo { spec } => {
            let k = load_field(spec, unverified)?;
            Ok(field_info_json(&k, cfg.precision_bits).into())
        }
        Command::FindGenerator { spec, mode, place } => {
            let k = load_field(spec, unverified)?;
            let cert = find_generator(&k, *mode, *place, cfg)?;
            let ok = verify_certificate(&cert);
            Ok(Outcome {
                report: certificate_json(&cert, ok),
                code: if ok { 0 } else { 1 },
            })
        }
        Command::PrimeSet { spec } => {
            let k = load_field(spec, unverified)?;
            Ok(prime_set_json(&find_prime_set(&k, cfg.prime_bound)?).into())
        }
        Command::Split { spec, primes } => {
            let k = load_field(spec, unverified)?;
            let mut out = Vec::new();
            for &p in primes {
                if !is_prime(p) {
                    return Err(bad_input(format!("{p} is not prime")));
                }
                let mut v = splitting_type_json(&splitting_type(&k, p)?);
                v["degree_one_place"] = json!(has_degree_one_place(&k, p));
                out.push(v);
            }
            Ok(json!({ "splitting": out }).into())
        }
        Command::QuadMinimal { d } => {
            let (m, w) = minimal_quad_generator_height(*d)?;
            Ok(json!({
                "d": d,
                "minimal_square": m,
                "height": (m as f64).sqrt(),
                "witness": quad_poly_json(&w),
            })
            .into())
        }
        Command::Cheb { spec, x } => {
            let k = load_field(spec, unverified)?;
            Ok(cheb(&k, *x, cfg)?.into())
        }
        Command::VerifyCertificate { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| bad_input(format!("cannot read {}: {e}", file.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| bad_input(format!("invalid JSON: {e}")))?;
            let cert = certificate_from_json(&v, unverified)?;
            let ok = verify_certificate(&cert);
            Ok(Outcome {
                report: json!({ "verified": ok }),
                code: if ok { 0 } else { 1 },
            })
        }
        Command::VerifyPaper => verify_paper(cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(path) => match ConfigFile::load(path) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => ConfigFile::default(),
    };
    let flags = ConfigFile {
        precision_bits: cli.precision_bits,
        prime_bound: cli.prime_bound,
        enumeration_cap: cli.enumeration_cap,
        eps: cli.eps,
        c1: cli.c1,
        output_format: cli.output_format,
    };
    let cfg = match Config::resolve(file, flags) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, &cfg) {
        Ok(Outcome { report, code }) => {
            let text = match cfg.output_format {
                OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
                OutputFormat::Text if matches!(cli.command, Command::VerifyPaper) => paper_table(&report),
                OutputFormat::Text => render::text(&report),
            };
            print!("{text}");
            if code != 0 {
                eprintln!("error: verification failed");
            }
            ExitCode::from(code)
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
