//! Command-line surface: search for witness sets, build avoiding sets,
//! verify them exhaustively, evaluate exponents, and reproduce the headline
//! table. Every command emits a JSON certificate.
//!
//! Exit codes: 0 verified/ok, 1 refuted (or FAIL rows), 2 budget exhausted
//! or sampled-only, 64 usage error, 65 parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use avoidset::cert::{read_set_file, write_set_file, CertificateFile};
use avoidset::construct::{
    build_greedy, build_inhom_poly, build_multivariate, build_nonlinear_roth, ConstructedSet,
};
use avoidset::exponent::{
    compare_report, gamma_chain, gamma_inhom, gamma_multivariate, gamma_ruzsa, ExponentRow,
    ExponentValue,
};
use avoidset::parse::{parse_form, parse_residue_list, parse_univariate};
use avoidset::residue::{power_residues, HomogeneousForm, ResidueSet};
use avoidset::search::{
    build_difference_graph, chain_pair_for_r1, r_k, search_chain_pair, Budget, ChainSpec,
};
use avoidset::verify::{
    enumerate_poly_values, set_digest, sums_of_k_powers_sieve, sums_of_two_squares_sieve,
    verify_against_bitmap, verify_difference_avoidance, verify_nonlinear_roth,
    AvoidanceCertificate, RefutationWitness, Verdict,
};
use avoidset::{Error, Result};

const EXIT_REFUTED: u8 = 1;
const EXIT_INCOMPLETE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

#[derive(Parser)]
#[command(
    name = "avoidset",
    version,
    about = "Construct and certify integer sets whose differences avoid polynomial value sets"
)]
struct Cli {
    /// Worker threads for verification and search (0 = all cores).
    #[arg(long, global = true, env = "AVOID_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for maximum witness sets modulo m.
    Search(SearchArgs),
    /// Build an avoiding subset of [1, N] and write it to a set file.
    Build(BuildArgs),
    /// Exhaustively verify a set file against a target value set.
    Verify(VerifyArgs),
    /// Evaluate a density exponent formula.
    Exponent(ExponentArgs),
    /// Re-derive every headline quantity and print PASS/FAIL per row.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchMode {
    RSet,
    ChainPair,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "r-set")]
    mode: SearchMode,
    /// Budget per search stage, in seconds.
    #[arg(long, env = "AVOID_BUDGET_SECS", default_value_t = 60)]
    budget_secs: u64,
    /// Pin the first chain set to these residues (chain-pair mode only).
    #[arg(long, value_name = "LIST")]
    pin_r1: Option<String>,
    /// Export the constraint graph in DIMACS format.
    #[arg(long, value_name = "PATH")]
    dimacs: Option<PathBuf>,
    /// Write the certificate here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildVariant {
    NonlinearRoth,
    Inhom,
    Multivariate,
    Greedy,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    variant: BuildVariant,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    k: Option<u32>,
    /// Univariate polynomial, e.g. "x^2+5x^3" (inhom variant).
    #[arg(long)]
    f: Option<String>,
    /// Residue set modulo m, e.g. "0,2".
    #[arg(long, value_name = "LIST")]
    r: Option<String>,
    /// Residue set modulo m^k, e.g. "0,3,6" (multivariate variant).
    #[arg(long, value_name = "LIST")]
    rp: Option<String>,
    /// Homogeneous form over x1..xn; defaults to x1^k + ... + xk^k.
    #[arg(long)]
    form: Option<String>,
    /// Number of digits in the construction.
    #[arg(long)]
    y: Option<u32>,
    /// Range bound (greedy variant).
    #[arg(long)]
    n: Option<u64>,
    /// Forbidden positive difference values (greedy variant).
    #[arg(long, value_name = "LIST")]
    forbidden: Option<String>,
    /// Chain period sets for nonlinear-roth, semicolon-separated residue
    /// lists, e.g. "0,2" or "8,19,...;0,4,...".
    #[arg(long, value_name = "LISTS")]
    period: Option<String>,
    /// Set file output path.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Certificate output path (defaults to stdout).
    #[arg(long, value_name = "PATH")]
    cert: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Poly,
    NonlinearRoth,
    TwoSquares,
    KPowers,
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Set file to verify.
    #[arg(long, value_name = "PATH")]
    set: PathBuf,
    #[arg(long, value_enum)]
    target: VerifyTarget,
    /// Univariate polynomial whose values are forbidden (poly target).
    #[arg(long)]
    f: Option<String>,
    /// Power k (nonlinear-roth and k-powers targets).
    #[arg(long)]
    k: Option<u32>,
    /// Number of summands (k-powers target).
    #[arg(long)]
    s: Option<u32>,
    /// Explicit forbidden values (list target).
    #[arg(long, value_name = "LIST")]
    values: Option<String>,
    /// Range bound; defaults to the largest element.
    #[arg(long)]
    n: Option<u64>,
    /// Random sampling instead of exhaustion (exit 2 when it passes).
    #[arg(long)]
    sample: bool,
    /// Write the certificate here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExponentArgs {
    #[command(subcommand)]
    formula: FormulaCmd,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// (k-1+log_m r)/k
    Ruzsa {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u64,
    },
    /// Series over a periodic chain of set sizes.
    Chain {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "LIST")]
        pre: String,
        #[arg(long, value_name = "LIST")]
        period: String,
    },
    /// (d-1+log_m r)/d
    Inhom {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u64,
    },
    /// log_{m^k} rp / k ... the base-m^k digit exponent.
    Multivariate {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        rp: u64,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    /// Budget for the from-scratch chain-pair search stage, in seconds.
    #[arg(long, env = "AVOID_BUDGET_SECS", default_value_t = 300)]
    budget_secs: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not usage errors.
            let code = if e.exit_code() == 0 { 0 } else { EXIT_USAGE };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match cli.command {
        Command::Search(args) => cmd_search(args),
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Exponent(args) => cmd_exponent(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => EXIT_PARSE,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn emit(cert: &CertificateFile, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => cert.write(path),
        None => {
            println!("{}", cert.to_json());
            Ok(())
        }
    }
}

fn residues(m: u64, list: &str) -> Result<ResidueSet> {
    ResidueSet::new(m, parse_residue_list(list)?)
}

fn cmd_search(args: SearchArgs) -> Result<u8> {
    let budget = Budget::with_time(Duration::from_secs(args.budget_secs));
    let mut cert = CertificateFile::new(command_echo(), String::new());
    let code;
    match args.mode {
        SearchMode::RSet => {
            if let Some(path) = &args.dimacs {
                let g = build_difference_graph(args.m, &power_residues(args.m, args.k)?)?;
                std::fs::write(path, g.graph().to_dimacs())
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            let res = r_k(args.m, args.k, budget)?;
            eprintln!(
                "r_{}({}) {} {}: witness {}",
                args.k,
                args.m,
                if res.optimal { "=" } else { ">=" },
                res.size,
                res.witness.render()
            );
            cert.spec = format!(
                "search mode=r-set m={} k={} size={} optimal={}",
                args.m, args.k, res.size, res.optimal
            );
            cert.elements = Some(res.witness.elements().to_vec());
            cert.exponents.push(ExponentRow {
                label: "ruzsa".into(),
                value: ExponentValue::Polynomial(gamma_ruzsa(args.m, args.k, res.size as u64)?),
            });
            cert.timings_ms.insert("search".into(), res.elapsed.as_millis() as u64);
            code = if res.optimal { 0 } else { EXIT_INCOMPLETE };
        }
        SearchMode::ChainPair => {
            let res = match &args.pin_r1 {
                Some(list) => chain_pair_for_r1(args.m, args.k, &residues(args.m, list)?, budget)?,
                None => search_chain_pair(args.m, args.k, budget)?,
            };
            if let Some(path) = &args.dimacs {
                let g = avoidset::search::chain_second_graph(
                    args.m,
                    &avoidset::residue::UnivariatePolynomial::power(args.k),
                    &res.r1,
                );
                std::fs::write(path, g.to_dimacs())
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            }
            eprintln!(
                "chain pair mod {}: R1 {} (size {}), R2 {} (size {}), gamma {:.6}{}",
                args.m,
                res.r1.render(),
                res.r1.len(),
                res.r2.render(),
                res.r2.len(),
                res.gamma,
                if res.optimal { "" } else { " (budget exhausted)" }
            );
            cert.spec = format!(
                "search mode=chain-pair m={} k={} R1={} R2={} optimal={}",
                args.m,
                args.k,
                res.r1.render(),
                res.r2.render(),
                res.optimal
            );
            cert.exponents.push(ExponentRow {
                label: "chain".into(),
                value: ExponentValue::Polynomial(res.gamma),
            });
            code = if res.optimal { 0 } else { EXIT_INCOMPLETE };
        }
    }
    emit(&cert, args.out.as_ref())?;
    Ok(code)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Precondition(format!("--{flag} is required for this variant")))
}

fn build_set(args: &BuildArgs) -> Result<ConstructedSet> {
    match args.variant {
        BuildVariant::NonlinearRoth => {
            let m = need(args.m, "m")?;
            let k = need(args.k, "k")?;
            let period_src = need(args.period.clone(), "period")?;
            let period: Vec<ResidueSet> = period_src
                .split(';')
                .map(|part| residues(m, part))
                .collect::<Result<_>>()?;
            let mut chain = ChainSpec::power_chain(m, k, vec![ResidueSet::full(m)?], period)?;
            let v = chain.validate();
            if !v.ok {
                return Err(Error::Hypothesis(format!(
                    "chain condition fails at pair {:?}",
                    v.first_failing
                )));
            }
            build_nonlinear_roth(&chain, need(args.y, "Y")?)
        }
        BuildVariant::Inhom => {
            let m = need(args.m, "m")?;
            let f = parse_univariate(&need(args.f.clone(), "f")?)?;
            let r = residues(m, &need(args.r.clone(), "R")?)?;
            build_inhom_poly(m, &f, &r, need(args.y, "Y")?)
        }
        BuildVariant::Multivariate => {
            let m = need(args.m, "m")?;
            let k = need(args.k, "k")?;
            let form = match &args.form {
                Some(src) => parse_form(src)?,
                None => HomogeneousForm::diagonal(&vec![1; k as usize], k)?,
            };
            let rp = residues(
                m.checked_pow(k).ok_or(Error::Overflow)?,
                &need(args.rp.clone(), "Rp")?,
            )?;
            build_multivariate(m, k, &form, &rp, need(args.y, "Y")?)
        }
        BuildVariant::Greedy => {
            let n = need(args.n, "N")?;
            let forbidden = parse_residue_list(&need(args.forbidden.clone(), "forbidden")?)?;
            build_greedy(n, &forbidden)
        }
    }
}

fn cmd_build(args: BuildArgs) -> Result<u8> {
    let set = build_set(&args)?;
    let spec = set.spec().render();
    let mut cert = CertificateFile::new(command_echo(), spec.clone());
    match set.elements() {
        Some(elements) => {
            write_set_file(&args.out, &spec, elements)?;
            cert = cert.with_elements(elements, Some(&args.out));
            cert.set_digest = Some(set_digest(elements));
        }
        None => {
            return Err(Error::TooLarge { limit: avoidset::construct::MATERIALIZE_CAP });
        }
    }
    cert.exponents = compare_report(&set)?.rows;
    eprintln!(
        "built |A| = {} within [1, {}], size bound {}, written to {}",
        set.exact_size(),
        set.n(),
        set.size_bound(),
        args.out.display()
    );
    emit(&cert, args.cert.as_ref())?;
    Ok(0)
}

/// Random (element, value) pair probing; the verdict is at best
/// verified-sampled and the command exits 2.
fn sample_check(elements: &[u64], values: &[u64]) -> AvoidanceCertificate {
    use rand::Rng;
    const SAMPLES: u64 = 1_000_000;
    let start = std::time::Instant::now();
    let mut rng = rand::thread_rng();
    let mut verdict = Verdict::VerifiedSampled;
    let mut checked = 0;
    if !values.is_empty() {
        for _ in 0..SAMPLES {
            let a = elements[rng.gen_range(0..elements.len())];
            let v = values[rng.gen_range(0..values.len())];
            checked += 1;
            if elements.binary_search(&(a + v)).is_ok() {
                verdict = Verdict::Refuted {
                    witness: RefutationWitness::Difference { a, value: v },
                };
                break;
            }
        }
    }
    AvoidanceCertificate {
        set_digest: set_digest(elements),
        n: elements.last().copied().unwrap_or(0),
        variant: "difference-avoidance".into(),
        parameters: format!("sampled values={}", values.len()),
        verdict,
        checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let (header, elements) = read_set_file(&args.set)?;
    if elements.is_empty() {
        return Err(Error::Parse("set file has no elements".into()));
    }
    let n = args.n.unwrap_or_else(|| *elements.last().unwrap());
    if *elements.last().unwrap() > n {
        return Err(Error::Precondition(format!("set has elements above N = {n}")));
    }
    let report = match args.target {
        VerifyTarget::Poly => {
            let f = parse_univariate(&need(args.f.clone(), "f")?)?;
            let values = enumerate_poly_values(&f, n)?;
            if args.sample {
                sample_check(&elements, &values)
            } else {
                verify_difference_avoidance(&elements, &values)
            }
        }
        VerifyTarget::NonlinearRoth => verify_nonlinear_roth(&elements, need(args.k, "k")?, n)?,
        VerifyTarget::TwoSquares => {
            verify_against_bitmap(&elements, &sums_of_two_squares_sieve(n)?, "two-squares")
        }
        VerifyTarget::KPowers => {
            let k = need(args.k, "k")?;
            let s = need(args.s, "s")?;
            verify_against_bitmap(
                &elements,
                &sums_of_k_powers_sieve(n, k, s)?,
                &format!("k-powers k={k} s={s}"),
            )
        }
        VerifyTarget::List => {
            let values = parse_residue_list(&need(args.values.clone(), "values")?)?;
            if args.sample {
                sample_check(&elements, &values)
            } else {
                verify_difference_avoidance(&elements, &values)
            }
        }
    };
    let mut cert = CertificateFile::new(command_echo(), header);
    cert.set_digest = Some(report.set_digest.clone());
    cert.verdict = Some(report.verdict.clone());
    cert.timings_ms.insert("verify".into(), report.elapsed_ms);
    eprintln!(
        "{} after checking {} cases in {} ms",
        match &report.verdict {
            Verdict::VerifiedExhaustive => "verified-exhaustive".to_string(),
            Verdict::VerifiedSampled => "verified-sampled".to_string(),
            Verdict::Refuted { witness } => format!("refuted: {witness:?}"),
        },
        report.checked,
        report.elapsed_ms
    );
    emit(&cert, args.out.as_ref())?;
    Ok(match report.verdict {
        Verdict::VerifiedExhaustive => 0,
        Verdict::VerifiedSampled => EXIT_INCOMPLETE,
        Verdict::Refuted { .. } => EXIT_REFUTED,
    })
}

fn cmd_exponent(args: ExponentArgs) -> Result<u8> {
    let (label, value) = match args.formula {
        FormulaCmd::Ruzsa { m, k, r } => ("ruzsa", gamma_ruzsa(m, k, r)?),
        FormulaCmd::Chain { m, k, pre, period } => (
            "chain",
            gamma_chain(m, k, &parse_residue_list(&pre)?, &parse_residue_list(&period)?)?,
        ),
        FormulaCmd::Inhom { m, d, r } => ("inhom", gamma_inhom(m, d, r)?),
        FormulaCmd::Multivariate { m, k, rp } => {
            ("multivariate", gamma_multivariate(m, k, rp)?)
        }
    };
    println!("{label} gamma = {value:.6}");
    Ok(0)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<u8> {
    let report = avoidset::reproduce::run(Duration::from_secs(args.budget_secs));
    print!("{}", report.render());
    Ok(if report.all_pass() { 0 } else { EXIT_REFUTED })
}
