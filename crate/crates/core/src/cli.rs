//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code and both output streams, so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 on success, 2 on input errors (including usage errors),
//! 3 when a computed quantity violates a guaranteed property.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_traits::Zero;

use crate::localsig::{self, FibrationLedger, LocalSigError};
use crate::meyer::{self, MeyerError, MeyerFunction};
use crate::random;
use crate::symplectic::{sl2_word, SymplecticElement, SymplecticError};
use crate::varieties::{self, CiSpec, LassoReport, Preset, SurfaceInvariants, VarietyError};
use crate::{format_rational, parse_rational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "meyer",
    version,
    about = "Meyer's signature cocycle, lasso values and local signatures, in exact arithmetic")]
struct Cli {
    /// Print a JSON object instead of key=value text
    #[arg(long, global = true)]
    json: bool,
    /// Run every line of FILE as a separate command line; output keeps
    /// the line order
    #[arg(long, value_name = "FILE")]
    many: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Meyer cocycle τ_g(A1, A2) of two symplectic matrices
    Tau {
        #[arg(long, value_name = "FILE")]
        a1: PathBuf,
        #[arg(long, value_name = "FILE")]
        a2: PathBuf,
    },
    /// Meyer function φ_1 of a matrix in SL(2; Z)
    Phi1 {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Invariants and lasso value of a complete intersection surface in P_{m+2}
    Ci {
        #[arg(long)]
        m: usize,
        /// Comma-separated defining degrees
        #[arg(long)]
        degrees: String,
    },
    /// Lasso value of the v_d-image of an n-dimensional complete intersection
    Veronese {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "")]
        degrees: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// φ(σ^n) from φ(σ) for a lasso σ
    LassoPower {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        n: i64,
    },
    /// Built-in fiber germ entry
    Germ {
        #[arg(long)]
        name: String,
    },
    /// Check or solve the global signature formula for a JSON ledger
    Fibration {
        #[arg(long, value_name = "FILE")]
        ledger: PathBuf,
        /// Solve for the one germ with unknown local signature
        #[arg(long)]
        solve: bool,
    },
    /// List named varieties, or evaluate one
    Presets {
        #[arg(long, value_name = "NAME")]
        eval: Option<String>,
    },
    /// Sampled checks of the cocycle and φ_1 identities (seed from MEYER_SEED)
    Verify {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        max_genus: usize,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, msg: msg.into() }
    }

    fn contract(msg: impl Into<String>) -> Self {
        Self { code: EXIT_CONTRACT, msg: msg.into() }
    }
}

impl From<VarietyError> for Failure {
    fn from(e: VarietyError) -> Self {
        if e.is_contract_violation() { Self::contract(e.to_string()) } else { Self::input(e.to_string()) }
    }
}

impl From<LocalSigError> for Failure {
    fn from(e: LocalSigError) -> Self {
        if e.is_contract_violation() { Self::contract(e.to_string()) } else { Self::input(e.to_string()) }
    }
}

impl From<MeyerError> for Failure {
    fn from(e: MeyerError) -> Self {
        match e {
            MeyerError::InconsistentRelations(_) => Self::contract(e.to_string()),
            _ => Self::input(e.to_string()),
        }
    }
}

impl From<SymplecticError> for Failure {
    fn from(e: SymplecticError) -> Self {
        Self::input(e.to_string())
    }
}

enum Report {
    /// A single value printed bare.
    Value(&'static str, String),
    /// Pairs on one line.
    Line(Vec<(String, String)>),
    /// One pair per line.
    Lines(Vec<(String, String)>),
}

fn pairs<K: ToString>(kv: Vec<(K, String)>) -> Vec<(String, String)> {
    kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

impl Report {
    fn render(&self, json: bool) -> String {
        if json {
            let obj: serde_json::Map<String, serde_json::Value> = match self {
                Report::Value(k, v) => [(k.to_string(), v.clone().into())].into_iter().collect(),
                Report::Line(kv) | Report::Lines(kv) => {
                    kv.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect()
                }
            };
            return serde_json::to_string(&obj).expect("string map serializes") + "\n";
        }
        match self {
            Report::Value(_, v) => format!("{v}\n"),
            Report::Line(kv) => {
                let parts: Vec<String> = kv.iter().map(|(k, v)| format!("{k}={v}")).collect();
                parts.join(" ") + "\n"
            }
            Report::Lines(kv) => kv.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn read_element(path: &Path) -> Result<SymplecticElement, Failure> {
    SymplecticElement::parse(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn variety_lines(inv: Option<&SurfaceInvariants>, prefix: &str, rep: &LassoReport) -> Vec<(String, String)> {
    let mut out = Vec::new();
    if let Some(inv) = inv {
        out.extend(inv.key_values().into_iter().map(|(k, v)| (format!("{prefix}{k}"), v)));
    }
    out.extend(pairs(rep.key_values()));
    out
}

fn veronese_lines(spec: &CiSpec) -> Result<Vec<(String, String)>, Failure> {
    let rep = varieties::veronese_ci_lasso(spec)?;
    let inv = spec.section_surface()?;
    // for n > 2 the printed invariants are those of the surface section
    let prefix = if spec.n() == 2 { "" } else { "section_" };
    Ok(variety_lines(Some(&inv), prefix, &rep))
}

fn dispatch(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Tau { a1, a2 } => {
            let (a1, a2) = (read_element(&a1)?, read_element(&a2)?);
            Ok(Report::Value("tau", meyer::tau(&a1, &a2)?.to_string()))
        }
        Command::Phi1 { matrix } => {
            let a = read_element(&matrix)?;
            if a.genus() != 1 {
                return Err(Failure::input(format!("phi1 needs a 2x2 matrix, got genus {}", a.genus())));
            }
            Ok(Report::Value("phi", format_rational(&meyer::phi1(&a)?)))
        }
        Command::Ci { m, degrees } => {
            let degrees = varieties::parse_degrees(&degrees)?;
            let (inv, rep) = varieties::ci_surface_invariants(m, &degrees)?;
            Ok(Report::Lines(variety_lines(Some(&inv), "", &rep)))
        }
        Command::Veronese { m, degrees, n, d } => {
            let spec = CiSpec::new(m, varieties::parse_degrees(&degrees)?, n, d)?;
            Ok(Report::Lines(veronese_lines(&spec)?))
        }
        Command::LassoPower { phi, n } => {
            let phi = parse_rational(&phi).map_err(|e| Failure::input(format!("--phi: {e}")))?;
            Ok(Report::Value("phi", format_rational(&meyer::lasso_power(&phi, n)?)))
        }
        Command::Germ { name } => {
            let g = localsig::lookup_germ(&name).ok_or(LocalSigError::UnknownGerm(name))?;
            Ok(Report::Line(vec![
                ("phi".into(), format_rational(&g.phi)),
                ("nbhd_sign".into(), g.nbhd_sign.to_string()),
                ("sigma".into(), format_rational(&g.sigma)),
            ]))
        }
        Command::Fibration { ledger, solve } => {
            let ledger = FibrationLedger::from_json(&read(&ledger)?)?;
            if solve {
                let s = localsig::solve_unknown_germ(&ledger)?;
                Ok(Report::Lines(vec![
                    ("name".into(), s.name),
                    ("sigma".into(), format_rational(&s.sigma)),
                    ("phi".into(), format_rational(&s.phi)),
                    ("nbhd_sign".into(), s.nbhd_sign.to_string()),
                ]))
            } else {
                let r = localsig::check_fibration(&ledger)?;
                Ok(Report::Lines(vec![
                    ("total_sign".into(), r.total_sign.to_string()),
                    ("germ_sum".into(), format_rational(&r.germ_sum)),
                    ("residual".into(), format_rational(&r.residual)),
                ]))
            }
        }
        Command::Presets { eval: None } => Ok(Report::Lines(
            varieties::builtin_presets()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )),
        Command::Presets { eval: Some(name) } => match varieties::parse_preset(&name)? {
            Preset::VeroneseCi(spec) => Ok(Report::Lines(veronese_lines(&spec)?)),
            p => {
                let (inv, rep) = p.evaluate()?;
                Ok(Report::Lines(variety_lines(inv.as_ref(), "", &rep)))
            }
        },
        Command::Verify { samples, max_genus } => verify(samples, max_genus),
    }
}

/// Sampled identity checks. Any failure is a contract violation.
fn verify(samples: usize, max_genus: usize) -> Result<Report, Failure> {
    if !(1..=3).contains(&max_genus) {
        return Err(Failure::input(format!("--max-genus must be in 1..=3, got {max_genus}")));
    }
    let seed = random::seed_from_env().map_err(Failure::input)?;
    let mut rng = random::rng(seed);
    let mut out = vec![("seed".to_string(), seed.to_string())];

    for g in 1..=max_genus {
        for _ in 0..samples {
            let [a, b, c] = [(); 3].map(|_| random::small_element(&mut rng, g, 8));
            let defect = meyer::tau_cocycle_defect(&a, &b, &c)?;
            if defect != 0 {
                return Err(Failure::contract(format!("cocycle defect {defect} at genus {g}: {a:?} {b:?} {c:?}")));
            }
            let t = meyer::tau(&a, &b)?;
            if t.unsigned_abs() as usize > meyer::cocycle_bound(g) {
                return Err(Failure::contract(format!("|tau| = {} > 4g at genus {g}", t.abs())));
            }
        }
        out.push((format!("cocycle_identity_g{g}"), format!("ok samples={samples}")));
    }

    let f = MeyerFunction::new()?;
    for _ in 0..samples {
        let (w, a) = random::sl2_element(&mut rng, 20);
        let (_, b) = random::sl2_element(&mut rng, 20);
        let by_word = f.eval_letters(&w)?;
        let by_reduction = f.eval_word(&sl2_word(&a)?)?;
        if by_word != by_reduction {
            return Err(Failure::contract(format!(
                "phi1 depends on the word: {} vs {} for {a}",
                format_rational(&by_word),
                format_rational(&by_reduction)
            )));
        }
        let delta = f.eval(&a)? - f.eval(&(&a * &b))? + f.eval(&b)?;
        let t = Rational::from_integer(meyer::tau(&a, &b)?.into());
        if !(delta - t).is_zero() {
            return Err(Failure::contract(format!("coboundary of phi1 differs from tau at {a}, {b}")));
        }
    }
    out.push(("phi1_well_defined".into(), format!("ok samples={samples}")));
    out.push(("phi1_coboundary".into(), format!("ok samples={samples}")));
    Ok(Report::Lines(out))
}

fn run_many(path: &Path, json: bool) -> CliOutput {
    let text = match read(path) {
        Ok(t) => t,
        Err(f) => return CliOutput { code: f.code, stdout: String::new(), stderr: f.msg + "\n" },
    };
    let jobs: Vec<(usize, Vec<String>)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let mut argv = vec!["meyer".to_string()];
            argv.extend(l.split_whitespace().map(str::to_string));
            if json {
                argv.push("--json".into());
            }
            (i + 1, argv)
        })
        .collect();

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let chunk = jobs.len().div_ceil(workers).max(1);
    let results: Vec<(usize, CliOutput)> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|(line, argv)| {
                            let out = if argv.iter().any(|a| a == "--many" || a.starts_with("--many=")) {
                                CliOutput {
                                    code: EXIT_INPUT,
                                    stdout: String::new(),
                                    stderr: "--many cannot be nested\n".into(),
                                }
                            } else {
                                run(argv.iter())
                            };
                            (*line, out)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut all = CliOutput { code: EXIT_OK, stdout: String::new(), stderr: String::new() };
    for (line, out) in results {
        all.code = all.code.max(out.code);
        all.stdout.push_str(&out.stdout);
        for l in out.stderr.lines() {
            all.stderr.push_str(&format!("line {line}: {l}\n"));
        }
    }
    all
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match (cli.many, cli.command) {
        (Some(_), Some(_)) => CliOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: "error: --many cannot be combined with a subcommand\n".into(),
        },
        (Some(path), None) => run_many(&path, cli.json),
        (None, None) => CliOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: no subcommand given\n\n{}", <Cli as clap::CommandFactory>::command().render_usage()),
        },
        (None, Some(cmd)) => match dispatch(cmd) {
            Ok(r) => CliOutput { code: EXIT_OK, stdout: r.render(cli.json), stderr: String::new() },
            Err(f) => CliOutput { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.msg) },
        },
    }
}
