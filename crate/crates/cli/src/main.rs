//! `modfact` — command-line front end for the verification suites.
//!
//! The binary only parses arguments and formats output; every check runs
//! inside `modfact::suites`, so integration tests exercising the library
//! cover exactly what the CLI runs. Reports render as plain text or JSON
//! with stable field names, and the output is byte-identical across runs
//! of the same build and command (`--timings` opts into wall-clock times,
//! which are otherwise recorded as 0).
//!
//! Exit codes: 0 the property was verified, 1 falsified (with witnesses in
//! the report), 2 undecided within the configured bounds, 3 an internal
//! cross-check failed (a bug in the tool, never a statement about the
//! input), 64 unusable request (bad flags, malformed specs, out-of-range
//! selectors, cap overruns). The `MF_SIZE_CAP` environment variable
//! overrides all enumeration caps at once.

use clap::{Args, Parser, Subcommand};
use modfact::report::Report;
use modfact::ring::Caps;
use modfact::suites::{self, SuiteError};

#[derive(Parser)]
#[command(name = "modfact", version, about = "Exact-arithmetic module workbench")]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_parser = ["text", "json"], default_value = "text")]
    format: String,
    /// Record wall-clock time in the report (off by default so that equal
    /// commands produce byte-identical output).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-ring facts and cover criteria.
    Ring {
        #[command(subcommand)]
        verb: RingVerb,
    },
    /// Skew polynomial factorizations, ideal chains, posets, closures.
    Skew {
        #[command(subcommand)]
        verb: SkewVerb,
    },
    /// The rational quaternion order.
    Quat {
        #[command(subcommand)]
        verb: QuatVerb,
    },
    /// Endomorphism-ring transfer suites.
    Endo {
        #[command(subcommand)]
        verb: EndoVerb,
    },
    /// Re-run the worked examples end to end.
    Examples {
        #[command(subcommand)]
        verb: ExamplesVerb,
    },
}

#[derive(Subcommand)]
enum RingVerb {
    /// Order, units, idempotents, radical, quotient and cover facts.
    Show { spec: String },
    /// Cross-check the cover-existence criterion, both sides computed
    /// independently.
    Theorem41 { spec: String },
    /// Find a projective cover for every cyclic module R/xR.
    Covers { spec: String },
}

/// A skew polynomial given by its coefficient field, twist and
/// coefficient vector; the flags concatenate to the canonical text form
/// `field=..;sigma=..;coeffs=[..]`.
#[derive(Args)]
struct PolyArgs {
    /// Coefficient field, e.g. `2^2` for the 4-element field.
    #[arg(long)]
    field: String,
    /// Twist automorphism as a Frobenius power, e.g. `frob^1`.
    #[arg(long)]
    sigma: String,
    /// Coefficients lowest degree first, e.g. `[1,0,1]` for x^2 + 1.
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct ClosureArgs {
    /// Work in Z[x] instead of a skew polynomial ring (sums of principal
    /// ideals can fail to be principal there).
    #[arg(long)]
    zx: bool,
    /// Coefficient field (finite form only).
    #[arg(long, required_unless_present = "zx", conflicts_with = "zx")]
    field: Option<String>,
    /// Twist automorphism (finite form only).
    #[arg(long, required_unless_present = "zx", conflicts_with = "zx")]
    sigma: Option<String>,
    /// First generator, coefficients lowest degree first.
    #[arg(long)]
    a: String,
    /// Second generator.
    #[arg(long)]
    b: String,
    /// Modulus defining M = R/cR; must lie in aR and bR (finite form only).
    #[arg(long, required_unless_present = "zx", conflicts_with = "zx")]
    c: Option<String>,
}

#[derive(Subcommand)]
enum SkewVerb {
    /// Every splitting into monic factors, and the complete ones.
    Factor(PolyArgs),
    /// The factorization <-> ideal-chain bijection, round-tripped.
    Chains(PolyArgs),
    /// The submodule <-> divisor poset of R/fR with chain counts.
    Poset(PolyArgs),
    /// Sum-of-submodules closure inside a cyclic quotient.
    Closure(ClosureArgs),
}

#[derive(Subcommand)]
enum QuatVerb {
    /// Verify the quaternion-order demonstration end to end.
    Example36,
}

#[derive(Args)]
struct EndoArgs {
    /// Base ring spec, e.g. `tri:2:zmod:2`.
    spec: String,
    /// Use M = eR for the k-th idempotent (ascending element order);
    /// default is the regular module M = R.
    #[arg(long)]
    idempotent: Option<usize>,
}

#[derive(Args)]
struct EndoMinimalArgs {
    /// Base ring spec, e.g. `tri:2:zmod:2`.
    spec: String,
    /// Use M = eR for the k-th idempotent (ascending element order);
    /// default is the regular module M = R.
    #[arg(long)]
    idempotent: Option<usize>,
    /// Restrict to the shift endomorphism with this index in End(M);
    /// default sweeps all of them.
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Subcommand)]
enum EndoVerb {
    /// Sweep every module/ring transfer equivalence for End(M).
    Suite(EndoArgs),
    /// Minimal surjecting direct summands onto M/s(M).
    Minimal(EndoMinimalArgs),
}

#[derive(Subcommand)]
enum ExamplesVerb {
    /// 36: quaternion order; 45: matrix-ring corner cover; 46: the
    /// triangular-ring quotient with no cyclic presentation.
    Reproduce {
        #[arg(value_parser = ["36", "45", "46"])]
        which: String,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let caps = Caps::from_env();
    let start = std::time::Instant::now();
    let (echo, result) = dispatch(&cli.command, &caps);
    match result {
        Ok(mut report) => {
            // Every report records the tool version and the exact request.
            report.command = format!("{echo} (modfact {})", env!("CARGO_PKG_VERSION"));
            if cli.timings {
                report.elapsed_ms = start.elapsed().as_millis() as u64;
            }
            let rendered = match cli.format.as_str() {
                "json" => report.to_json(),
                _ => report.to_text(),
            };
            emit(&rendered);
            report.status.exit_code()
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

/// Prints to stdout, staying quiet when the consumer has closed the pipe
/// (e.g. `modfact ... | head`); any other write failure still aborts.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            panic!("failed writing report to stdout: {e}");
        }
    }
}

/// Runs the selected suite and returns the canonical command echo with it.
fn dispatch(cmd: &Command, caps: &Caps) -> (String, Result<Report, SuiteError>) {
    match cmd {
        Command::Ring { verb } => match verb {
            RingVerb::Show { spec } => (
                format!("ring show {spec}"),
                suites::ring_show(spec, caps),
            ),
            RingVerb::Theorem41 { spec } => (
                format!("ring theorem41 {spec}"),
                suites::ring_theorem41(spec, caps),
            ),
            RingVerb::Covers { spec } => (
                format!("ring covers {spec}"),
                suites::ring_covers(spec, caps),
            ),
        },
        Command::Skew { verb } => match verb {
            SkewVerb::Factor(p) => (
                poly_echo("factor", p),
                suites::skew_factor(&p.field, &p.sigma, &p.poly, caps),
            ),
            SkewVerb::Chains(p) => (
                poly_echo("chains", p),
                suites::skew_chains(&p.field, &p.sigma, &p.poly, caps),
            ),
            SkewVerb::Poset(p) => (
                poly_echo("poset", p),
                suites::skew_poset(&p.field, &p.sigma, &p.poly, caps),
            ),
            SkewVerb::Closure(c) => {
                if c.zx {
                    (
                        format!("skew closure --zx --a {} --b {}", c.a, c.b),
                        suites::skew_closure_zx(&c.a, &c.b),
                    )
                } else {
                    // Present by `required_unless_present = "zx"`.
                    let field = c.field.as_deref().unwrap();
                    let sigma = c.sigma.as_deref().unwrap();
                    let modulus = c.c.as_deref().unwrap();
                    (
                        format!(
                            "skew closure --field {field} --sigma {sigma} --a {} --b {} --c {modulus}",
                            c.a, c.b
                        ),
                        suites::skew_closure(field, sigma, &c.a, &c.b, modulus, caps),
                    )
                }
            }
        },
        Command::Quat { verb } => match verb {
            QuatVerb::Example36 => ("quat example36".to_string(), suites::quat_example36(caps)),
        },
        Command::Endo { verb } => match verb {
            EndoVerb::Suite(a) => {
                let mut echo = format!("endo suite {}", a.spec);
                if let Some(k) = a.idempotent {
                    echo.push_str(&format!(" --idempotent {k}"));
                }
                (echo, suites::endo_suite(&a.spec, a.idempotent, caps))
            }
            EndoVerb::Minimal(a) => {
                let mut echo = format!("endo minimal {}", a.spec);
                if let Some(k) = a.idempotent {
                    echo.push_str(&format!(" --idempotent {k}"));
                }
                if let Some(s) = a.s {
                    echo.push_str(&format!(" --s {s}"));
                }
                (echo, suites::endo_minimal(&a.spec, a.idempotent, a.s, caps))
            }
        },
        Command::Examples { verb } => match verb {
            ExamplesVerb::Reproduce { which } => {
                let echo = format!("examples reproduce {which}");
                let result = match which.as_str() {
                    "36" => suites::reproduce_36(caps),
                    "45" => suites::reproduce_45(caps),
                    _ => suites::reproduce_46(caps),
                };
                (echo, result)
            }
        },
    }
}

fn poly_echo(verb: &str, p: &PolyArgs) -> String {
    format!(
        "skew {verb} --field {} --sigma {} --poly {}",
        p.field, p.sigma, p.poly
    )
}
