use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use g2crystal::export::Graph;
use g2crystal::insertion::Insertion;
use g2crystal::letter::{parse_letters, Letter};
use g2crystal::rmatrix::r_apply;
use g2crystal::sca::{scatter, ScatteringReport, Trace, Verdict, DEFAULT_STEP_CAP};
use g2crystal::tableau::{element_tableau, tableau_element};
use g2crystal::verify::{self, ScaBounds, SuiteReport};
use g2crystal::{CrystalElement, Error, State};

#[derive(Parser)]
#[command(name = "g2sca", version, about = "G2(1) perfect crystals, combinatorial R and the soliton cellular automaton")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the crystal graph of B_l.
    Enum {
        #[arg(long)]
        level: u32,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Apply R to `b . b'` in B_l ⊗ B_1 and print the image and H.
    R {
        #[arg(long)]
        level: u32,
        /// A tableau row or `(a,b,c,d,e,f)`, then `.`, then one letter.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, value_enum, default_value_t = Algo::Path)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Evolve a state and print one row per time step.
    Sca {
        /// Letter tokens; may also be given as one quoted argument.
        state: Vec<String>,
        /// Read the state from a file instead.
        #[arg(long, conflicts_with = "state")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        carrier: u32,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Pad the state with 1s up to this many cells.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
        /// Also scatter to separation and compare with the factorized prediction.
        #[arg(long)]
        predict: bool,
        #[arg(long, default_value_t = DEFAULT_STEP_CAP)]
        max_steps: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        level: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Path,
    Insertion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Axioms,
    Iso,
    Energy,
    Ybe,
    Sca,
    All,
}

/// Exit 1 is a verdict failure, exit 2 bad input.
enum Failure {
    Verdict(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn cmd_enum(level: u32, format: GraphFormat) -> Run {
    let g = Graph::new(level)?;
    Ok(match format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => json(&g),
    })
}

fn parse_factor(text: &str, level: u32) -> Result<CrystalElement, Failure> {
    let text = text.trim();
    if text.starts_with('(') {
        return Ok(CrystalElement::parse(text, level)?);
    }
    Ok(tableau_element(&parse_letters(text)?, level)?)
}

fn render_row(b: &CrystalElement) -> String {
    let row = element_tableau(b);
    if row.is_empty() {
        b.to_string()
    } else {
        g2crystal::letter::format_letters(&row)
    }
}

#[derive(Serialize)]
struct RDoc {
    level: u32,
    input: (String, Letter),
    image: (Letter, String),
    energy: i64,
}

fn cmd_r(level: u32, lhs: &str, algo: Algo, format: TextFormat) -> Run {
    let (left, right) = lhs
        .split_once('.')
        .ok_or_else(|| Failure::Usage(format!("expected `b . b'`, got {lhs:?}")))?;
    let b = parse_factor(left, level)?;
    let c: Letter = right.trim().parse()?;
    let (x, y, h) = r_apply(&b, c)?;
    let (x, y) = match algo {
        Algo::Path => (x, y),
        Algo::Insertion => Insertion::new().apply(&b, c)?,
    };
    Ok(match format {
        TextFormat::Text => format!("{x} . {}\nH = {h}\n", render_row(&y)),
        TextFormat::Json => json(&RDoc {
            level,
            input: (render_row(&b), c),
            image: (x, render_row(&y)),
            energy: h,
        }),
    })
}

#[derive(Serialize)]
struct ScaDoc {
    #[serde(flatten)]
    trace: Trace,
    #[serde(skip_serializing_if = "Option::is_none")]
    scattering: Option<ScatteringReport>,
}

fn affine_list(v: &[g2crystal::AffineElement<g2crystal::A1Element>]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ⊗ ")
}

fn report_text(r: &ScatteringReport) -> String {
    let mut out = format!("incoming: {}\n", affine_list(&r.incoming));
    if let Some(why) = &r.hypothesis_violation {
        out += &format!("prediction: not applicable ({why})\n");
    }
    if let Some(p) = &r.predicted {
        out += &format!("predicted: {}\n", affine_list(p));
    }
    match (&r.simulated, r.separated_at) {
        (Some(s), Some(t)) => out += &format!("simulated: {} (separated at t={t})\n", affine_list(s)),
        _ => out += "simulated: did not separate\n",
    }
    if let Some(shifts) = &r.phase_shifts {
        let s: Vec<String> = shifts.iter().map(|k| format!("{k:+}")).collect();
        out += &format!("phase shifts: {}\n", s.join(" "));
    }
    out += &format!("verdict: {:?}\n", r.verdict);
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_sca(
    tokens: &[String],
    input: Option<&PathBuf>,
    carrier: u32,
    steps: usize,
    len: Option<usize>,
    format: TextFormat,
    predict: bool,
    max_steps: usize,
) -> Run {
    let text = match input {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => tokens.join(" "),
    };
    let cells = parse_letters(&text)?;
    if cells.is_empty() {
        return Err(Failure::Usage("empty state".into()));
    }
    let p = State::padded(cells, len.unwrap_or(0));
    let trace = Trace::run(&p, carrier, steps)?;
    let scattering = if predict { Some(scatter(&p, carrier, max_steps)?) } else { None };
    let out = match format {
        TextFormat::Text => trace.text() + &scattering.as_ref().map(report_text).unwrap_or_default(),
        TextFormat::Json => json(&ScaDoc {
            trace,
            scattering: scattering.clone(),
        }),
    };
    match scattering {
        Some(r) if r.verdict != Verdict::Agree => Err(Failure::Verdict(out)),
        _ => Ok(out),
    }
}

fn cmd_verify(suite: Suite, level: u32, format: TextFormat) -> Run {
    let bounds = ScaBounds::default();
    let reports: Vec<SuiteReport> = match suite {
        Suite::Axioms => vec![verify::axioms(level)?],
        Suite::Iso => vec![verify::iso(level)?],
        Suite::Energy => vec![verify::energy(level)?],
        Suite::Ybe => vec![verify::ybe(level)?],
        Suite::Sca => vec![verify::sca(&bounds)?],
        Suite::All => verify::all(level)?,
    };
    let out = match format {
        TextFormat::Json => json(&reports),
        TextFormat::Text => reports
            .iter()
            .map(|r| {
                let tag = if r.pass { "pass" } else { "FAIL" };
                format!("{} {tag} {} checks, {} failures\n", r.name, r.count, r.failures.len())
            })
            .collect(),
    };
    if reports.iter().all(|r| r.pass) {
        Ok(out)
    } else {
        Err(Failure::Verdict(out))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enum { level, format } => cmd_enum(*level, *format),
        Command::R { level, lhs, algo, format } => cmd_r(*level, lhs, *algo, *format),
        Command::Sca {
            state,
            input,
            carrier,
            steps,
            len,
            format,
            predict,
            max_steps,
        } => cmd_sca(state, input.as_ref(), *carrier, *steps, *len, *format, *predict, *max_steps),
        Command::Verify { suite, level, format } => cmd_verify(*suite, *level, *format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verdict(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
