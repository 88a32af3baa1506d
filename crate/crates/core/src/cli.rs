//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text destined for stdout and stderr, so the binary stays a
//! two-line wrapper and tests can drive the CLI in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::arith;
use crate::bigpicture::{hyperdistance, orbit, snake, LatticeClass};
use crate::checks::{self, CheckOutcome};
use crate::congruence::{atkin_lehner, coset_action, gamma0_generators, GroupSpec};
use crate::error::Error;
use crate::exact::big_json;
use crate::normalizer::{
    classify, quotient_group, sigma, xstar_square_aut, NormalizerCase, NormalizerContext,
    XSTAR_ADVISORY,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "modnorm",
    version,
    about = "Normalizers of <Gamma_0(N), W> and modular automorphism groups of X_0(N)/W"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Level N.
    #[arg(short = 'N', value_name = "N")]
    pub level: u64,
    /// Atkin-Lehner generators, as exact divisors of N separated by commas.
    #[arg(short = 'W', value_name = "d1,d2,...", value_delimiter = ',')]
    pub w: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct LevelArg {
    /// Level N.
    #[arg(short = 'N', value_name = "N")]
    pub level: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normalizer case, generators, sigma and quotient group.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Check by conjugation that every normalizer generator normalizes the group.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Cayley table of the normalizer modulo the group.
    Quotient {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Classes fixed pointwise by Gamma_0(N).
    Snake {
        #[command(flatten)]
        level: LevelArg,
    },
    /// Orbit of a snake class under the Atkin-Lehner involutions in W.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        /// Class on the snake, written `s` or `s:g/t`.
        #[arg(long = "class", default_value = "1")]
        class: String,
    },
    /// Hyperdistance between two lattice classes.
    Hyperdist {
        /// First class, written `s` or `s:g/t`.
        #[arg(long)]
        from: String,
        /// Second class.
        #[arg(long)]
        to: String,
    },
    /// Schreier generators of Gamma_0(N).
    Gens {
        #[command(flatten)]
        level: LevelArg,
    },
    /// The order-3 element for 25 || N.
    Sigma {
        #[command(flatten)]
        level: LevelArg,
    },
    /// Run the self-verification suite.
    PaperChecks,
    /// Expected automorphism group of X_0^*(N^2) for squarefree N prime to 6.
    Xstar {
        #[command(flatten)]
        level: LevelArg,
    },
}

/// Exit status plus captured output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: if e.is_domain() { EXIT_DOMAIN } else { EXIT_CHECK_FAILED },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Adds the schema field and renders with sorted keys.
fn render_json(command: &str, body: Value) -> String {
    let mut map = match body {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    map.insert("schema".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
    s.push('\n');
    s
}

fn emit(format: Format, command: &str, body: Value, text: String) -> String {
    match format {
        Format::Json => render_json(command, body),
        Format::Text => text,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match dispatch(cli.command, cli.format, cli.seed.unwrap_or(checks::DEFAULT_SEED)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn group_spec(g: &GroupArgs) -> Result<GroupSpec, Error> {
    GroupSpec::new(g.level, &g.w)
}

fn list(xs: impl IntoIterator<Item = impl ToString>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn dispatch(command: Command, format: Format, seed: u64) -> Result<Outcome, Error> {
    match command {
        Command::Classify { group } => {
            let spec = group_spec(&group)?;
            let result = classify(&spec)?;
            let quotient = quotient_group(&spec)?;
            let mut body = result.to_json();
            body["quotient"] = quotient.to_json();
            let mut text = String::new();
            writeln!(text, "N = {}, W closure = {}", spec.level(), list(spec.closure().elements())).unwrap();
            writeln!(text, "case: {}", result.case).unwrap();
            writeln!(text, "Atkin-Lehner generators: {}", list(&result.atkin_lehner_generators)).unwrap();
            match &result.sigma {
                Some(s) => writeln!(text, "sigma: {} (j = {}, i = {})", s.matrix, s.j, s.i).unwrap(),
                None => writeln!(text, "sigma: none").unwrap(),
            }
            writeln!(text, "conjugation level M: {}", result.conjugation_level).unwrap();
            writeln!(
                text,
                "quotient: order {}, {}, element orders {}",
                quotient.order(),
                if quotient.abelian { "abelian" } else { "non-abelian" },
                list(&quotient.element_orders)
            )
            .unwrap();
            Ok(Outcome::ok(emit(format, "classify", body, text)))
        }
        Command::Verify { group } => {
            let spec = group_spec(&group)?;
            let result = classify(&spec)?;
            let ctx = NormalizerContext::new(&spec)?;
            let mut outcomes = Vec::new();
            for &e in &result.atkin_lehner_generators {
                let w = atkin_lehner(spec.level(), e)?;
                outcomes.push((format!("w{e}"), true, ctx.normalizes(&w)));
            }
            match (&result.sigma, result.case) {
                (Some(s), _) => outcomes.push(("sigma".into(), true, ctx.normalizes(&s.matrix))),
                (None, NormalizerCase::Bad25) => {
                    let s = sigma(spec.level())?;
                    outcomes.push(("sigma".into(), false, ctx.normalizes(&s.matrix)));
                }
                _ => {}
            }
            let passed = outcomes.iter().all(|(_, want, got)| want == got);
            let body = json!({
                "N": spec.level(),
                "W": spec.generator_divisors(),
                "case": result.case.as_str(),
                "passed": passed,
                "checks": outcomes.iter().map(|(name, want, got)| json!({
                    "element": name, "expected": want, "normalizes": got,
                })).collect::<Vec<_>>(),
            });
            let mut text = String::new();
            for (name, want, got) in &outcomes {
                let status = if want == got { "ok" } else { "FAIL" };
                writeln!(text, "{status:4} {name}: normalizes = {got} (expected {want})").unwrap();
            }
            writeln!(text, "{}", if passed { "all checks passed" } else { "verification failed" }).unwrap();
            let mut out = Outcome::ok(emit(format, "verify", body, text));
            if !passed {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(out)
        }
        Command::Quotient { group } => {
            let spec = group_spec(&group)?;
            let q = quotient_group(&spec)?;
            let mut body = q.to_json();
            body["N"] = json!(spec.level());
            body["W"] = json!(spec.generator_divisors());
            body["element_reps"] = json!(q.element_reps.iter().map(|m| m.to_json_entries()).collect::<Vec<_>>());
            let mut text = String::new();
            writeln!(text, "order {} ({})", q.order(), if q.abelian { "abelian" } else { "non-abelian" }).unwrap();
            writeln!(text, "element orders {}", list(&q.element_orders)).unwrap();
            for (k, rep) in q.element_reps.iter().enumerate() {
                writeln!(text, "  e{k} = {rep}").unwrap();
            }
            for row in &q.table {
                writeln!(text, "  {}", row.iter().map(|k| format!("e{k}")).collect::<Vec<_>>().join(" ")).unwrap();
            }
            Ok(Outcome::ok(emit(format, "quotient", body, text)))
        }
        Command::Snake { level } => {
            let classes = snake(level.level)?;
            let ints: Vec<u64> = classes.iter().filter_map(LatticeClass::as_integral).collect();
            let body = json!({
                "N": level.level,
                "snake": ints,
                "classes": classes.iter().map(LatticeClass::to_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(emit(format, "snake", body, format!("{}\n", list(&ints)))))
        }
        Command::Orbit { group, class } => {
            let spec = group_spec(&group)?;
            let x: LatticeClass = class.parse()?;
            let o = orbit(&spec, &x)?;
            let body = json!({
                "N": spec.level(),
                "W": spec.generator_divisors(),
                "class": x.to_json(),
                "orbit": o.iter().map(LatticeClass::to_json).collect::<Vec<_>>(),
                "size": o.len(),
            });
            let text = format!("{} (size {})\n", list(&o), o.len());
            Ok(Outcome::ok(emit(format, "orbit", body, text)))
        }
        Command::Hyperdist { from, to } => {
            let x: LatticeClass = from.parse()?;
            let y: LatticeClass = to.parse()?;
            let k = hyperdistance(&x, &y);
            let body = json!({ "from": x.to_json(), "to": y.to_json(), "hyperdistance": big_json(&k) });
            Ok(Outcome::ok(emit(format, "hyperdist", body, format!("{k}\n"))))
        }
        Command::Gens { level } => {
            if level.level == 0 {
                return Err(Error::InvalidLevel);
            }
            let action = coset_action(level.level)?;
            let gens = gamma0_generators(level.level)?;
            let mut body = gens.to_json();
            body["N"] = json!(level.level);
            body["index"] = json!(action.len());
            let mut text = String::new();
            writeln!(
                text,
                "{}: index {} (psi = {}), {} generators",
                gens.label,
                action.len(),
                arith::psi(level.level),
                gens.members.len()
            )
            .unwrap();
            for g in &gens.members {
                writeln!(text, "  {g}").unwrap();
            }
            Ok(Outcome::ok(emit(format, "gens", body, text)))
        }
        Command::Sigma { level } => {
            let s = sigma(level.level)?;
            let mut body = s.to_json();
            body["N"] = json!(level.level);
            body["det"] = big_json(&s.matrix.determinant());
            let text = format!("sigma = {} (j = {}, i = {})\n", s.matrix, s.j, s.i);
            Ok(Outcome::ok(emit(format, "sigma", body, text)))
        }
        Command::PaperChecks => {
            let outcomes = checks::run_all(seed);
            let passed = checks::all_passed(&outcomes);
            let body = json!({
                "seed": seed,
                "passed": passed,
                "checks": outcomes.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
            });
            let mut text = String::new();
            for o in &outcomes {
                writeln!(text, "{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail).unwrap();
            }
            let mut out = Outcome::ok(emit(format, "paper-checks", body, text));
            if !passed {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(out)
        }
        Command::Xstar { level } => {
            let aut = xstar_square_aut(level.level)?;
            let body = json!({ "N": level.level, "group": aut.as_str(), "advisory": XSTAR_ADVISORY });
            let text = format!("{} ({XSTAR_ADVISORY})\n", aut.as_str());
            Ok(Outcome::ok(emit(format, "xstar", body, text)))
        }
    }
}
