//! The soliton cellular automaton on words of letters.

use std::fmt;

use serde::Serialize;

use crate::a1::{aff_r_hat, A1Element};
use crate::element::CrystalElement;
use crate::error::{Error, Result};
use crate::letter::{format_letters, parse_letters, Letter};
use crate::natural::NaturalNode;
use crate::rmatrix::{rbar_apply, AffineElement, RMatrix};

/// A finite window `b_1 ⊗ ... ⊗ b_L` of a state; cells beyond it are 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct State {
    cells: Vec<Letter>,
}

impl State {
    pub fn new(cells: Vec<Letter>) -> Self {
        State { cells }
    }

    /// `cells` followed by 1s up to `len` cells.
    pub fn padded(mut cells: Vec<Letter>, len: usize) -> Self {
        if cells.len() < len {
            cells.resize(len, Letter::One);
        }
        State { cells }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(State::new(parse_letters(text)?))
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn trailing_vacuum(&self) -> usize {
        self.cells.iter().rev().take_while(|&&c| c == Letter::One).count()
    }

    pub fn longest_run(&self) -> usize {
        self.cells
            .split(|&c| c == Letter::One)
            .map(<[Letter]>::len)
            .max()
            .unwrap_or(0)
    }

    /// Appends 1s so that at least `n` trailing cells are vacuum.
    pub fn extend_vacuum(&mut self, n: usize) {
        let have = self.trailing_vacuum();
        if have < n {
            let len = self.cells.len() + n - have;
            self.cells.resize(len, Letter::One);
        }
    }

    /// Trailing vacuum `evolve` demands for carrier level `level`.
    pub fn required_vacuum(&self, level: u32) -> usize {
        (level as usize).max(self.longest_run()) + 1
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.cells))
    }
}

/// Result of one carrier sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub state: State,
    /// `u^(0), ..., u^(L)`.
    pub carriers: Vec<CrystalElement>,
    /// `-Σ H(u^(i) ⊗ b_{i+1})`.
    pub energy: i64,
}

/// Time evolution `T_l` with a fixed carrier level.
#[derive(Debug)]
pub struct Automaton {
    rmatrix: RMatrix,
    vacuum: CrystalElement,
}

impl Automaton {
    pub fn new(level: u32) -> Result<Self> {
        Ok(Automaton {
            rmatrix: RMatrix::new(level)?,
            vacuum: CrystalElement::vacuum(level.max(1)),
        })
    }

    pub fn level(&self) -> u32 {
        self.rmatrix.level()
    }

    /// Carries `u_l` across `cells` without checking that it returns.
    pub fn sweep(&mut self, cells: &[Letter]) -> Result<Sweep> {
        let mut u = self.vacuum;
        let mut carriers = Vec::with_capacity(cells.len() + 1);
        let mut out = Vec::with_capacity(cells.len());
        let mut energy = 0;
        carriers.push(u);
        for &b in cells {
            let (x, next, h) = self.rmatrix.apply(&u, b)?;
            out.push(x);
            energy -= h;
            u = next;
            carriers.push(u);
        }
        Ok(Sweep {
            state: State::new(out),
            carriers,
            energy,
        })
    }

    /// One step of `T_l`. Refuses states without enough trailing vacuum and
    /// reports a carrier that fails to return to `u_l`.
    pub fn step(&mut self, p: &State) -> Result<Sweep> {
        let needed = p.required_vacuum(self.level());
        let found = p.trailing_vacuum();
        if found < needed && found < p.len() {
            return Err(Error::InsufficientPadding { needed, found });
        }
        let sweep = self.sweep(p.cells())?;
        if *sweep.carriers.last().unwrap() != self.vacuum {
            let cell = sweep
                .carriers
                .iter()
                .rposition(|u| *u == self.vacuum)
                .unwrap_or(0);
            return Err(Error::CarrierNotReturned { cell });
        }
        Ok(sweep)
    }

    pub fn evolve(&mut self, p: &State) -> Result<State> {
        Ok(self.step(p)?.state)
    }

    pub fn energy(&mut self, p: &State) -> Result<i64> {
        Ok(self.step(p)?.energy)
    }
}

/// Rows `p, T_l p, ..., T_l^steps p` on a fixed window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub carrier: u32,
    pub steps: usize,
    pub rows: Vec<State>,
    /// `E_l` of each row before it is evolved.
    pub energies: Vec<i64>,
    /// Soliton records of each row with phases at that time; `None` for
    /// rows that are not soliton states.
    pub solitons: Vec<Option<Vec<SolitonRecord>>>,
}

impl Trace {
    pub fn run(p: &State, level: u32, steps: usize) -> Result<Trace> {
        let mut auto = Automaton::new(level)?;
        let mut rows = vec![p.clone()];
        let mut energies = Vec::with_capacity(steps);
        for _ in 0..steps {
            let sweep = auto.step(rows.last().unwrap())?;
            energies.push(sweep.energy);
            rows.push(sweep.state);
        }
        let solitons = rows
            .iter()
            .enumerate()
            .map(|(t, row)| match detect_solitons(row) {
                Detection::Solitons(recs) => Some(recs.into_iter().map(|s| s.at_time(t, level)).collect()),
                Detection::NotSolitonState { .. } => None,
            })
            .collect();
        Ok(Trace {
            carrier: level,
            steps,
            rows,
            energies,
            solitons,
        })
    }

    /// One `t=k: tokens` line per row.
    pub fn text(&self) -> String {
        self.rows
            .iter()
            .enumerate()
            .map(|(t, row)| format!("t={t}: {row}\n"))
            .collect()
    }
}

/// `T♮(p)` and the final carrier `b(p)`, starting from `1'`.
pub fn t_natural(p: &State) -> Result<(State, NaturalNode)> {
    let mut u = NaturalNode::One;
    let mut out = Vec::with_capacity(p.len());
    for &b in p.cells() {
        let (x, next) = rbar_apply(u, b)?;
        out.push(x);
        u = next;
    }
    Ok((State::new(out), u))
}

/// True if `run` is `3^m 2^n`, `3^m 2_1 2^n` or `3^m 2_2 2^n` with `m+n > 0`
/// or a single middle letter.
pub fn is_soliton_run(run: &[Letter]) -> bool {
    use Letter::*;
    let threes = run.iter().take_while(|&&c| c == Three).count();
    let mut rest = &run[threes..];
    if let Some(&first) = rest.first() {
        if first == Two1 || first == Two2 {
            rest = &rest[1..];
        }
    }
    !run.is_empty() && rest.iter().all(|&c| c == Two)
}

/// The A1 label of a soliton run of length `l`, an element of level `3l`.
pub fn soliton_label(run: &[Letter]) -> Result<A1Element> {
    if !is_soliton_run(run) {
        return Err(Error::NotSoliton(format_letters(run)));
    }
    // Read right to left, each letter is a triple of 1s then 2s.
    let ones: u32 = run.iter().rev().map(|c| c.triple_ones().unwrap()).sum();
    Ok(A1Element::new(ones, 3 * run.len() as u32 - ones))
}

/// The run of letters labelled by `a`; `a.level()` must be a multiple of 3.
pub fn soliton_run(a: A1Element) -> Vec<Letter> {
    assert_eq!(a.level() % 3, 0, "soliton labels have level divisible by 3");
    let l = a.level() / 3;
    let row: Vec<u8> = std::iter::repeat_n(1u8, a.x1 as usize)
        .chain(std::iter::repeat_n(2u8, a.x2 as usize))
        .collect();
    let mut out: Vec<Letter> = (0..l as usize)
        .map(|k| {
            let ones = row[3 * k..3 * k + 3].iter().filter(|&&x| x == 1).count() as u32;
            Letter::from_triple_ones(ones)
        })
        .collect();
    out.reverse();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SolitonRecord {
    pub length: u32,
    /// 0-based index of the first cell of the run.
    pub start: usize,
    pub label: A1Element,
    /// `k` in `z^{-k}`, equal to `start` until set by [`SolitonRecord::at_time`].
    pub phase: i64,
}

impl SolitonRecord {
    /// Fixes the phase for a run observed at time `t` under carrier level `r`.
    pub fn at_time(mut self, t: usize, r: u32) -> Self {
        self.phase = track_phase(&self, t, r);
        self
    }

    /// `z^{-k} label`.
    pub fn affine(&self) -> AffineElement<A1Element> {
        AffineElement::new(-self.phase, self.label)
    }
}

/// `k = start - min(r, length) t`.
pub fn track_phase(record: &SolitonRecord, t: usize, r: u32) -> i64 {
    record.start as i64 - (r.min(record.length) as i64) * t as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Detection {
    Solitons(Vec<SolitonRecord>),
    /// A maximal non-vacuum run that matches no soliton pattern.
    NotSolitonState { start: usize, run: Vec<Letter> },
}

pub fn detect_solitons(p: &State) -> Detection {
    let cells = p.cells();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cells.len() {
        if cells[i] == Letter::One {
            i += 1;
            continue;
        }
        let j = cells[i..]
            .iter()
            .position(|&c| c == Letter::One)
            .map_or(cells.len(), |k| i + k);
        let run = &cells[i..j];
        match soliton_label(run) {
            Ok(label) => out.push(SolitonRecord {
                length: run.len() as u32,
                start: i,
                label,
                phase: i as i64,
            }),
            Err(_) => {
                return Detection::NotSolitonState {
                    start: i,
                    run: run.to_vec(),
                }
            }
        }
        i = j;
    }
    Detection::Solitons(out)
}

/// Lengths strictly increase and each gap lets the carrier release the
/// soliton to its left: `gap ≥ min(r, left length)`.
pub fn is_separated(records: &[SolitonRecord], r: u32) -> bool {
    records.windows(2).all(|w| {
        let gap = w[1].start - (w[0].start + w[0].length as usize);
        w[0].length < w[1].length && gap >= r.min(w[0].length) as usize
    })
}

pub type AffinePair = (AffineElement<A1Element>, AffineElement<A1Element>);

/// Predicted outgoing pair for `l1 > l2`, and the exponent changes of the
/// two solitons in incoming order.
pub fn predict_two_body(
    x: AffineElement<A1Element>,
    y: AffineElement<A1Element>,
) -> Result<(AffinePair, (i64, i64))> {
    let (l1, l2) = (x.payload.level() / 3, y.payload.level() / 3);
    if l1 <= l2 {
        return Err(Error::LengthOrder(vec![l1, l2]));
    }
    let (ny, nx) = aff_r_hat(x, y, 2 * l2 as i64);
    Ok(((ny, nx), (nx.exponent - x.exponent, ny.exponent - y.exponent)))
}

/// Factorized prediction for strictly decreasing lengths: bubble the
/// solitons into increasing order by pairwise two-body scattering.
pub fn predict_multi(incoming: &[AffineElement<A1Element>]) -> Result<Vec<AffineElement<A1Element>>> {
    let lengths: Vec<u32> = incoming.iter().map(|a| a.payload.level() / 3).collect();
    if lengths.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::LengthOrder(lengths));
    }
    let mut cur = incoming.to_vec();
    let m = cur.len();
    for pass in 0..m.saturating_sub(1) {
        for i in 0..m - 1 - pass {
            let ((a, b), _) = predict_two_body(cur[i], cur[i + 1])?;
            cur[i] = a;
            cur[i + 1] = b;
        }
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Simulation separated and matched the prediction.
    Agree,
    /// Simulation separated but differs from the prediction.
    Disagree,
    /// Simulation separated but no prediction applies.
    Unpredicted,
    /// No separated soliton state within the step cap.
    NotSeparated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScatteringReport {
    pub carrier: u32,
    pub incoming: Vec<AffineElement<A1Element>>,
    /// Why the factorized prediction does not apply, if it does not.
    pub hypothesis_violation: Option<String>,
    pub predicted: Option<Vec<AffineElement<A1Element>>>,
    pub simulated: Option<Vec<AffineElement<A1Element>>>,
    /// Time step at which the simulated records were read.
    pub separated_at: Option<usize>,
    /// Exponent change of each incoming soliton, matched by length.
    pub phase_shifts: Option<Vec<i64>>,
    pub verdict: Verdict,
}

pub const DEFAULT_STEP_CAP: usize = 64;

/// Evolves `p` under `T_r` until the solitons separate (stable for one more
/// step) or `max_steps` is reached, and compares with the prediction.
pub fn scatter(p: &State, r: u32, max_steps: usize) -> Result<ScatteringReport> {
    let incoming: Vec<SolitonRecord> = match detect_solitons(p) {
        Detection::Solitons(recs) => recs,
        Detection::NotSolitonState { run, .. } => return Err(Error::NotSoliton(format_letters(&run))),
    };
    let incoming_aff: Vec<_> = incoming.iter().map(SolitonRecord::affine).collect();
    let (predicted, hypothesis_violation) = match predict_multi(&incoming_aff) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut auto = Automaton::new(r)?;
    let mut cur = p.clone();
    let mut found = None;
    for t in 1..=max_steps {
        cur.extend_vacuum(cur.required_vacuum(r) + 1);
        cur = auto.evolve(&cur)?;
        let Detection::Solitons(recs) = detect_solitons(&cur) else { continue };
        if !is_separated(&recs, r) {
            continue;
        }
        let mut next = cur.clone();
        next.extend_vacuum(next.required_vacuum(r) + 1);
        let next = auto.evolve(&next)?;
        let Detection::Solitons(after) = detect_solitons(&next) else { continue };
        let now: Vec<_> = recs.iter().map(|s| s.at_time(t, r)).collect();
        let later: Vec<_> = after.iter().map(|s| s.at_time(t + 1, r)).collect();
        let same = now.len() == later.len()
            && now.iter().zip(&later).all(|(a, b)| a.label == b.label && a.phase == b.phase);
        if same && is_separated(&after, r) {
            found = Some((t, now));
            break;
        }
    }
    let Some((t, outgoing)) = found else {
        return Ok(ScatteringReport {
            carrier: r,
            incoming: incoming_aff,
            hypothesis_violation,
            predicted,
            simulated: None,
            separated_at: None,
            phase_shifts: None,
            verdict: Verdict::NotSeparated,
        });
    };
    let simulated: Vec<_> = outgoing.iter().map(SolitonRecord::affine).collect();
    let phase_shifts = incoming
        .iter()
        .map(|s| {
            outgoing
                .iter()
                .find(|o| o.length == s.length)
                .map(|o| s.phase - o.phase)
        })
        .collect::<Option<Vec<i64>>>();
    let verdict = match &predicted {
        None => Verdict::Unpredicted,
        Some(pred) if *pred == simulated => Verdict::Agree,
        Some(_) => Verdict::Disagree,
    };
    Ok(ScatteringReport {
        carrier: r,
        incoming: incoming_aff,
        hypothesis_violation,
        predicted,
        simulated: Some(simulated),
        separated_at: Some(t),
        phase_shifts,
        verdict,
    })
}
