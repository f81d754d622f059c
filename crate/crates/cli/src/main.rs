//! `fibcalc`: generate, verify and export objects of the Fibonacci umbral
//! calculus from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 input-data error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use fibonomial::cobweb::CobwebPoset;
use fibonomial::umbral::{
    basic_sequence, bernoulli, bernoulli_s, hermite, hermite_s, laguerre_alpha, laguerre_s,
    verify_binomial_type, verify_first_expansion, verify_gf, verify_second_expansion,
    verify_sheffer_binomial, verify_transfer, PolySequence, Verdict,
};
use fibonomial::{parse_rational, DeltaOperator, OperatorSeries, Polynomial, Rational, SequenceSpec};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fibcalc", version, about = "Fibonacci umbral calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// File of sequence terms a_0, a_1, ... (one per line, `#` comments);
    /// defaults to the Fibonacci numbers
    #[arg(long, value_name = "FILE", global = true)]
    sequence: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    PartialF,
    DeltaF,
    NablaF,
    Abel,
    Laguerre,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hermite,
    LaguerreAlpha,
    Bernoulli,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifySuite {
    BinomialType,
    Expansion,
    Gf,
    ShefferBinomial,
    SecondExpansion,
    Transfer,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized binomial coefficient C(n,k)_F
    Fibonomial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Basic polynomial sequence of a delta operator
    Basic {
        #[arg(long, value_enum)]
        op: Op,
        /// Abel parameter
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Sheffer polynomial family
    Sheffer {
        #[arg(long, value_enum)]
        family: Family,
        /// Hermite parameter
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        /// Laguerre order, an integer >= -1
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check an identity on generated polynomials
    Verify {
        #[arg(long, value_enum)]
        suite: VerifySuite,
        /// Delta operator for basic-sequence suites
        #[arg(long, value_enum, default_value_t = Op::DeltaF)]
        op: Op,
        /// Sheffer family for Sheffer suites
        #[arg(long, value_enum, default_value_t = Family::Bernoulli)]
        family: Family,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        /// Shift value
        #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
        y: Rational,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Negative control: corrupt member N (adds x to a basic sequence,
        /// 1 to a Sheffer sequence) before checking
        #[arg(long, value_name = "N")]
        perturb: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Cobweb poset: build, export and check
    Cobweb {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_level: u32,
        /// Check that chains X and Y realize the order
        #[arg(long)]
        verify_realizer: bool,
        /// Check that chains X and Y are admissible
        #[arg(long)]
        check_admissible: bool,
        /// Same as `--format dot`
        #[arg(long)]
        export_dot: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<fibonomial::Error> for Failure {
    fn from(e: fibonomial::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Exits with status 2 like any other clap usage error.
fn usage(msg: &str) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn required<T: Clone>(v: &Option<T>, flag: &str, why: &str) -> T {
    match v {
        Some(v) => v.clone(),
        None => Cli::command()
            .error(ErrorKind::MissingRequiredArgument, format!("{flag} is required {why}"))
            .exit(),
    }
}

fn load_spec(common: &Common) -> Result<SequenceSpec, Failure> {
    match &common.sequence {
        None => Ok(SequenceSpec::Fibonacci),
        Some(path) => Ok(SequenceSpec::from_file(path)?),
    }
}

fn no_dot(common: &Common) {
    if common.format == Format::Dot {
        usage("--format dot is only available for cobweb");
    }
}

fn op_name(op: Op) -> &'static str {
    match op {
        Op::PartialF => "partial-f",
        Op::DeltaF => "delta-f",
        Op::NablaF => "nabla-f",
        Op::Abel => "abel",
        Op::Laguerre => "laguerre",
    }
}

fn build_op(spec: &SequenceSpec, op: Op, a: &Option<Rational>, order: usize) -> Result<DeltaOperator, Failure> {
    let spec = spec.clone();
    Ok(match op {
        Op::PartialF => DeltaOperator::f_derivative(spec, order)?,
        Op::DeltaF => DeltaOperator::forward_difference(spec, order)?,
        Op::NablaF => DeltaOperator::backward_difference(spec, order)?,
        Op::Abel => DeltaOperator::abel(spec, &required(a, "--a", "for the Abel operator"), order)?,
        Op::Laguerre => DeltaOperator::laguerre(spec, order)?,
    })
}

/// A Sheffer family with its delta operator and `S`.
struct FamilyData {
    q: DeltaOperator,
    s: OperatorSeries,
    seq: PolySequence,
}

fn build_family(
    spec: &SequenceSpec,
    family: Family,
    a: &Option<Rational>,
    alpha: &Option<Rational>,
    n_max: usize,
) -> Result<FamilyData, Failure> {
    let order = n_max + 2;
    let d = || DeltaOperator::f_derivative(spec.clone(), order);
    Ok(match family {
        Family::Hermite => {
            let a = required(a, "--a", "for the Hermite family");
            FamilyData { q: d()?, s: hermite_s(spec, &a, order)?, seq: hermite(spec, &a, n_max)? }
        }
        Family::Bernoulli => FamilyData { q: d()?, s: bernoulli_s(spec, order)?, seq: bernoulli(spec, n_max)? },
        Family::LaguerreAlpha => {
            let alpha = required(alpha, "--alpha", "for the Laguerre family");
            let alpha = alpha
                .is_integer()
                .then(|| i64::try_from(alpha.to_integer()).ok())
                .flatten()
                .filter(|&v| v >= -1)
                .unwrap_or_else(|| usage(&format!("--alpha must be an integer >= -1, got {alpha}")));
            FamilyData {
                q: DeltaOperator::laguerre(spec.clone(), order)?,
                s: laguerre_s(spec, alpha, order)?,
                seq: laguerre_alpha(spec, alpha, n_max)?,
            }
        }
    })
}

fn emit_sequence(seq: &PolySequence, format: Format) -> String {
    match format {
        Format::Structured => {
            let doc = json!({ "label": seq.label(), "polynomials": seq.to_json() });
            format!("{doc}\n")
        }
        _ => seq.render_text(),
    }
}

fn run_fibonomial(n: usize, k: usize, common: &Common) -> Outcome {
    no_dot(common);
    let spec = load_spec(common)?;
    let value = spec.fibonomial(n, k)?;
    Ok(match common.format {
        Format::Structured => format!("{}\n", json!({ "n": n, "k": k, "value": value.to_string() })),
        _ => format!("{value}\n"),
    })
}

fn run_basic(op: Op, a: &Option<Rational>, max_degree: usize, common: &Common) -> Outcome {
    no_dot(common);
    let spec = load_spec(common)?;
    let q = build_op(&spec, op, a, max_degree + 2)?;
    Ok(emit_sequence(&basic_sequence(&q, max_degree)?, common.format))
}

fn run_sheffer(
    family: Family,
    a: &Option<Rational>,
    alpha: &Option<Rational>,
    max_degree: usize,
    common: &Common,
) -> Outcome {
    no_dot(common);
    let spec = load_spec(common)?;
    let data = build_family(&spec, family, a, alpha, max_degree)?;
    Ok(emit_sequence(&data.seq, common.format))
}

struct VerifyArgs<'a> {
    suite: VerifySuite,
    op: Op,
    family: Family,
    a: &'a Option<Rational>,
    alpha: &'a Option<Rational>,
    y: &'a Rational,
    max_degree: usize,
    perturb: Option<usize>,
}

fn perturbed(seq: PolySequence, at: Option<usize>, by: Polynomial) -> PolySequence {
    let Some(n) = at else { return seq };
    let Some(p) = seq.get(n) else {
        usage(&format!("--perturb {n} is beyond --max-degree {}", seq.max_index()))
    };
    let p = p + &by;
    seq.with_replaced(n, p)
        .unwrap_or_else(|e| usage(&format!("--perturb {n} cannot be applied: {e}")))
}

fn suite_name(s: VerifySuite) -> &'static str {
    match s {
        VerifySuite::BinomialType => "binomial-type",
        VerifySuite::Expansion => "expansion",
        VerifySuite::Gf => "gf",
        VerifySuite::ShefferBinomial => "sheffer-binomial",
        VerifySuite::SecondExpansion => "second-expansion",
        VerifySuite::Transfer => "transfer",
    }
}

fn run_verify(v: &VerifyArgs, common: &Common) -> Outcome {
    no_dot(common);
    let spec = load_spec(common)?;
    let n = v.max_degree;
    let order = n + 2;
    let (subject, verdict) = match v.suite {
        VerifySuite::BinomialType | VerifySuite::Expansion | VerifySuite::Gf | VerifySuite::Transfer => {
            let q = build_op(&spec, v.op, v.a, order)?;
            if v.suite == VerifySuite::Transfer && v.perturb.is_some() {
                usage("--perturb does not apply to the transfer suite");
            }
            let basic = perturbed(basic_sequence(&q, n)?, v.perturb, Polynomial::x());
            let verdict = match v.suite {
                VerifySuite::BinomialType => verify_binomial_type(&basic, v.y)?,
                VerifySuite::Expansion => {
                    let t = OperatorSeries::translation(spec.clone(), v.y, order)?;
                    verify_first_expansion(&t, &q, &basic)?
                }
                VerifySuite::Gf => verify_gf(&basic, &q)?,
                _ => verify_transfer(&q, &DeltaOperator::f_derivative(spec.clone(), order)?, n)?,
            };
            (op_name(v.op).to_string(), verdict)
        }
        VerifySuite::ShefferBinomial | VerifySuite::SecondExpansion => {
            let mut data = build_family(&spec, v.family, v.a, v.alpha, n)?;
            data.seq = perturbed(data.seq, v.perturb, Polynomial::one());
            let verdict = if v.suite == VerifySuite::ShefferBinomial {
                verify_sheffer_binomial(&data.seq, &basic_sequence(&data.q, n)?, v.y)?
            } else {
                let p = Polynomial::from_coeffs(vec![Rational::from_integer(1.into()); n + 1]);
                verify_second_expansion(&data.q, &data.s, &data.seq, &p, v.y)?
            };
            (data.seq.label().to_string(), verdict)
        }
    };
    let suite = suite_name(v.suite);
    let report = match common.format {
        Format::Structured => {
            let violation = verdict.violation().map(|x| {
                json!({ "identity": x.identity, "index": x.index, "detail": x.detail })
            });
            format!(
                "{}\n",
                json!({
                    "suite": suite,
                    "subject": subject,
                    "max_degree": n,
                    "y": v.y.to_string(),
                    "holds": verdict.holds(),
                    "violation": violation,
                })
            )
        }
        _ => format!("{suite} holds for {subject}, n <= {n}, y = {}\n", v.y),
    };
    match verdict {
        Verdict::Holds => Ok(report),
        Verdict::Violated(x) => {
            if common.format == Format::Structured {
                print!("{report}");
            }
            Err(Failure::Verification(format!("{suite} failed for {subject}: {x}")))
        }
    }
}

fn run_cobweb(max_level: usize, realizer: bool, admissible: bool, export_dot: bool, common: &Common) -> Outcome {
    let spec = load_spec(common)?;
    let poset = CobwebPoset::build(spec, max_level)?;
    let format = if export_dot { Format::Dot } else { common.format };

    let mut checks = Vec::new();
    let mut failures = Vec::new();
    if realizer {
        if poset.verify_realizer() {
            checks.push(format!("realizer OK ({} vertices)", poset.vertex_count()));
        } else {
            failures.push("realizer check failed: X ∩ Y differs from the cobweb order".to_string());
        }
    }
    if admissible {
        for (name, chain) in [("X", poset.chain_x()), ("Y", poset.chain_y())] {
            if poset.is_admissible(&chain)? {
                checks.push(format!("chain {name} admissible"));
            } else {
                failures.push(format!("admissibility violated by chain {name}"));
            }
        }
    }

    let out = match format {
        Format::Dot => poset.export_dot(),
        Format::Structured => {
            let mut doc = poset.to_json();
            doc["vertices"] = json!(poset.vertex_count());
            doc["edges"] = json!(poset.edge_count());
            doc["regular"] = json!(poset.is_regular());
            if realizer {
                doc["realizer"] = json!(poset.verify_realizer());
            }
            if admissible {
                doc["admissible"] = json!(failures.iter().all(|f| !f.starts_with("admissibility")));
            }
            format!("{doc}\n")
        }
        Format::Text if realizer || admissible => checks.iter().map(|c| format!("{c}\n")).collect(),
        Format::Text => {
            let sizes: Vec<String> = poset.level_sizes().iter().map(ToString::to_string).collect();
            format!(
                "levels: {}\nvertices: {}\nedges: {}\nregular: {}\nchain X: {}\nchain Y: {}\n",
                sizes.join(" "),
                poset.vertex_count(),
                poset.edge_count(),
                poset.is_regular(),
                poset.chain_x().render(),
                poset.chain_y().render(),
            )
        }
    };
    if failures.is_empty() {
        Ok(out)
    } else {
        if format != Format::Text {
            print!("{out}");
        }
        Err(Failure::Verification(failures.join("; ")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Fibonomial { n, k, common } => run_fibonomial(*n, *k, common),
        Command::Basic { op, a, max_degree, common } => run_basic(*op, a, *max_degree as usize, common),
        Command::Sheffer { family, a, alpha, max_degree, common } => {
            run_sheffer(*family, a, alpha, *max_degree as usize, common)
        }
        Command::Verify { suite, op, family, a, alpha, y, max_degree, perturb, common } => run_verify(
            &VerifyArgs {
                suite: *suite,
                op: *op,
                family: *family,
                a,
                alpha,
                y,
                max_degree: *max_degree as usize,
                perturb: *perturb,
            },
            common,
        ),
        Command::Cobweb { max_level, verify_realizer, check_admissible, export_dot, common } => {
            run_cobweb(*max_level as usize, *verify_realizer, *check_admissible, *export_dot, common)
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("fibcalc: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("fibcalc: input error: {msg}");
            ExitCode::from(3)
        }
    }
}
