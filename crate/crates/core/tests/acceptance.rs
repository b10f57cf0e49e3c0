//! Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use g2crystal::a1::A1Element;
use g2crystal::letter::Letter;
use g2crystal::rmatrix::{r_apply, AffineElement, Factor};
use g2crystal::sca::{predict_multi, predict_two_body, scatter, State, Trace, Verdict, DEFAULT_STEP_CAP};
use g2crystal::tensor::is_classical_hw;
use g2crystal::verify::{self, SuiteReport};
use g2crystal::{Crystal, CrystalElement, UNIT};

/// Exact combinatorics: no numeric tolerance anywhere. Only wall-clock
/// budgets are tolerances.
const BUDGET_GRAPH: Duration = Duration::from_secs(1);
const BUDGET_AXIOMS: Duration = Duration::from_secs(30);
const BUDGET_DEFAULT: Duration = Duration::from_secs(60);
const BUDGET_SWEEP: Duration = Duration::from_secs(300);

const CARRIER: u32 = 10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

fn suites(reports: Vec<SuiteReport>) -> Outcome {
    let mut total = 0;
    for rep in reports {
        total += rep.count;
        if let Some(f) = rep.failures.first() {
            return Err(format!(
                "{} failed {} of {} checks, first: {} on {} (expected {}, got {})",
                rep.name,
                rep.failures.len(),
                rep.count,
                f.check,
                f.input,
                f.expected,
                f.got
            ));
        }
    }
    Ok(format!("{total} checks"))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn aff(k: i64, x1: u32, x2: u32) -> AffineElement<A1Element> {
    AffineElement::new(k, A1Element::new(x1, x2))
}

fn level_one_graph() -> Outcome {
    let want: BTreeSet<(u8, Letter, Letter)> = fixture("level1_arrows.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            (t[0].parse().unwrap(), t[1].parse().unwrap(), t[2].parse().unwrap())
        })
        .collect();
    let elements = CrystalElement::enumerate(1).map_err(|e| e.to_string())?;
    ensure(elements.len() == 15, format!("{} elements", elements.len()))?;
    let mut got = BTreeSet::new();
    for b in &elements {
        let a = Letter::from_element(b).map_err(|e| e.to_string())?;
        for i in 0..3 {
            if let Some(c) = b.lower(i) {
                got.insert((i, a, Letter::from_element(&c).map_err(|e| e.to_string())?));
            }
        }
    }
    ensure(got == want, format!("arrows differ: {:?}", got.symmetric_difference(&want).collect::<Vec<_>>()))?;
    Ok(format!("15 elements, {} arrows", got.len()))
}

fn axioms() -> Outcome {
    suites((1..=3).map(|l| verify::axioms(l).unwrap()).collect())
}

fn r_correct() -> Outcome {
    suites((1..=3).map(|l| verify::iso(l).unwrap()).collect())
}

/// Classical highest weight values against the closed form.
fn energy() -> Outcome {
    let closed_form = |j: i64, l: i64, b: Letter| match b {
        Letter::One if j == l => 0,
        Letter::One if j + 1 == l => -1,
        Letter::Two | Letter::Empty if j == l => -1,
        _ => -2,
    };
    let mut n = 0;
    for l in 1..=3u32 {
        for b in CrystalElement::enumerate(l).map_err(|e| e.to_string())? {
            for c in Letter::ALL {
                if !is_classical_hw(&[Factor::Element(b), Factor::Element(c.element())]) {
                    continue;
                }
                let j = b.coords()[0] / UNIT;
                ensure(b.coords()[1..].iter().all(|&x| x == 0), format!("hw {b} not of the form (j,0,...)"))?;
                let (_, _, h) = r_apply(&b, c).map_err(|e| e.to_string())?;
                let want = closed_form(j, l as i64, c);
                ensure(h == want, format!("H({b} ⊗ {c}) = {h}, closed form {want}"))?;
                n += 1;
            }
        }
    }
    let detail = suites((1..=3).map(|l| verify::energy(l).unwrap()).collect())?;
    Ok(format!("{detail}, {n} highest weight values"))
}

fn ybe() -> Outcome {
    suites((1..=2).map(|l| verify::ybe(l).unwrap()).collect())
}

fn oracle() -> Outcome {
    suites(vec![verify::energy_one_oracle(8).unwrap()])
}

fn one_soliton() -> Outcome {
    suites(vec![verify::one_soliton_speed(4, 5).unwrap()])
}

fn replay(name: &str) -> Result<State, String> {
    let want = fixture(name);
    let first = want.lines().next().unwrap().split_once(": ").unwrap().1;
    let p = State::parse(first).map_err(|e| e.to_string())?;
    let trace = Trace::run(&p, CARRIER, want.lines().count() - 1).map_err(|e| e.to_string())?;
    let got = trace.text();
    for (t, (a, b)) in want.lines().zip(got.lines()).enumerate() {
        ensure(a == b, format!("{name} row t={t} differs"))?;
    }
    ensure(want == got, format!("{name} row count differs"))?;
    Ok(p)
}

fn two_solitons() -> Outcome {
    let p = replay("two_solitons.txt")?;
    let ((a, b), shifts) = predict_two_body(aff(0, 7, 5), aff(-8, 5, 1)).map_err(|e| e.to_string())?;
    ensure((a, b) == (aff(-5, 1, 5), aff(-3, 11, 1)), format!("prediction {a} ⊗ {b}"))?;
    ensure(shifts == (-3, 3), format!("phase shifts {shifts:?}"))?;
    let rep = scatter(&p, CARRIER, DEFAULT_STEP_CAP).map_err(|e| e.to_string())?;
    ensure(rep.verdict == Verdict::Agree, format!("simulation verdict {:?}", rep.verdict))?;
    Ok("5 rows, z^-5(1,5) ⊗ z^-3(11,1), shifts ±3".into())
}

fn three_solitons() -> Outcome {
    let p = replay("three_solitons.txt")?;
    let want = vec![aff(-8, 1, 2), aff(-3, 2, 4), aff(-3, 5, 4)];
    let pred = predict_multi(&[aff(0, 2, 7), aff(-5, 5, 1), aff(-9, 1, 2)]).map_err(|e| e.to_string())?;
    ensure(pred == want, format!("composition gives {pred:?}"))?;
    let rep = scatter(&p, CARRIER, DEFAULT_STEP_CAP).map_err(|e| e.to_string())?;
    ensure(rep.simulated.as_ref() == Some(&want), format!("simulated {:?}", rep.simulated))?;
    Ok("9 rows, three-body composition matches the separated state".into())
}

fn no_separation() -> Outcome {
    let p = replay("no_separation.txt")?;
    let rep = scatter(&p, CARRIER, DEFAULT_STEP_CAP).map_err(|e| e.to_string())?;
    ensure(rep.verdict == Verdict::NotSeparated, format!("verdict {:?}", rep.verdict))?;
    let why = rep.hypothesis_violation.ok_or("length hypothesis violation not reported")?;
    Ok(format!("8 rows, not separated after {DEFAULT_STEP_CAP} steps, reported: {why}"))
}

fn sweep() -> Outcome {
    suites(vec![verify::two_soliton_sweep(&[(2, 1), (3, 1), (3, 2)], 5).unwrap()])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("level-1 crystal graph", level_one_graph, BUDGET_GRAPH),
        ("crystal axioms, l <= 3", axioms, BUDGET_AXIOMS),
        ("R bijective, intertwining, insertion agrees, l <= 3", r_correct, BUDGET_DEFAULT),
        ("energy recurrence and highest weight values, l <= 3", energy, BUDGET_DEFAULT),
        ("Yang-Baxter on B_l ⊗ B_1 ⊗ B_1, l <= 2", ybe, BUDGET_DEFAULT),
        ("E_1 = 1 states are one-solitons, L <= 8", oracle, BUDGET_DEFAULT),
        ("one-soliton speed and energy, l <= 4, k <= 5", one_soliton, BUDGET_DEFAULT),
        ("two-soliton trace and prediction", two_solitons, BUDGET_DEFAULT),
        ("three-soliton trace and factorized prediction", three_solitons, BUDGET_DEFAULT),
        ("non-separating trace", no_separation, BUDGET_DEFAULT),
        ("two-soliton scattering sweep", sweep, BUDGET_SWEEP),
    ];
    let mut failed = 0;
    for (n, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *budget => Err(format!("{detail}, but over budget {budget:?}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        println!("criterion {:>2} {tag} {name}: {detail} [{:.2}s]", n + 1, took.as_secs_f64());
        failed += outcome.is_err() as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
