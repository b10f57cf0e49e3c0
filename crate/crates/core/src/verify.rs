//! Exhaustive checks of the crystal structure, the R-matrices, the energy
//! and the automaton, each producing a [`SuiteReport`].

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;

use serde::Serialize;

use crate::a1::A1Element;
use crate::crystal::{lower_count, raise_count, Crystal, Direction};
use crate::element::CrystalElement;
use crate::error::Result;
use crate::insertion::Insertion;
use crate::letter::{format_letters, Letter};
use crate::natural::NaturalNode;
use crate::rmatrix::{h_hw, r_apply, rbar_apply, AffineElement, Factor, RMatrix};
use crate::sca::{
    detect_solitons, predict_two_body, scatter, soliton_run, t_natural, Automaton, Detection, State,
    Verdict,
};
use crate::tensor::{raise_to_classical_hw, tensor_apply};

/// `⟨h_i, α_j⟩` for G2(1), row `i`, column `j`.
pub const CARTAN: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -3, 2]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub count: usize,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            count: 0,
            failures: Vec::new(),
            pass: true,
        }
    }

    /// Counts one instance; records a failure when `expected != got`.
    pub fn check<T: PartialEq + Debug>(&mut self, check: &str, input: impl Debug, expected: T, got: T) {
        self.count += 1;
        if expected != got {
            self.fail(check, input, expected, got);
        }
    }

    pub fn fail(&mut self, check: &str, input: impl Debug, expected: impl Debug, got: impl Debug) {
        self.failures.push(Failure {
            check: check.to_string(),
            input: format!("{input:?}"),
            expected: format!("{expected:?}"),
            got: format!("{got:?}"),
        });
        self.pass = false;
    }

    /// Folds `other` into `self`. Counts add and failures concatenate.
    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.count += other.count;
        self.failures.extend(other.failures);
        self.pass = self.failures.is_empty();
        self
    }
}

/// Weight changes, ε/φ shifts, `ẽ`/`f̃` inverse to each other, string lengths
/// and level zero, for each element and index.
pub fn check_axioms<C: Crystal>(name: &str, elements: &[C]) -> SuiteReport {
    let mut rep = SuiteReport::new(name);
    let set: HashSet<&C> = elements.iter().collect();
    for b in elements {
        let w = b.weight();
        rep.check("level zero", b, 0, w.h0 + 2 * w.h1 + w.h2);
        for i in 0..C::RANK {
            let (e, p) = (b.epsilon(i), b.phi(i));
            rep.check("finite ε, φ", (b, i), true, e >= 0 && p >= 0);
            rep.check("ε string length", (b, i), e, raise_count(b, i));
            rep.check("φ string length", (b, i), p, lower_count(b, i));
            for (dir, sign) in [(Direction::Raise, 1), (Direction::Lower, -1)] {
                let Some(c) = b.apply(i, dir) else { continue };
                rep.check("closed under operators", (b, i, dir), true, set.contains(&c));
                let back = match dir {
                    Direction::Raise => c.lower(i),
                    Direction::Lower => c.raise(i),
                };
                rep.check("inverse operators", (b, i, dir), Some(b.clone()), back);
                rep.check("ε shift", (b, i, dir), e - sign, c.epsilon(i));
                rep.check("φ shift", (b, i, dir), p + sign, c.phi(i));
                let wc = c.weight();
                let got = [wc.h0 - w.h0, wc.h1 - w.h1, wc.h2 - w.h2];
                let want: Vec<i64> = (0..3).map(|k| sign * CARTAN[k][i as usize]).collect();
                if C::RANK == 3 {
                    rep.check("weight shift", (b, i, dir), want, got.to_vec());
                }
            }
        }
    }
    rep
}

pub fn axioms(level: u32) -> Result<SuiteReport> {
    let elements = CrystalElement::enumerate(level)?;
    let mut rep = check_axioms(&format!("axioms(l={level})"), &elements);
    rep.name = "axioms".into();
    Ok(rep)
}

fn word(b: &CrystalElement, c: Letter) -> [Factor; 2] {
    [Factor::Element(*b), Factor::Element(c.element())]
}

fn image_word(x: Letter, y: &CrystalElement) -> [Factor; 2] {
    [Factor::Element(x.element()), Factor::Element(*y)]
}

/// Bijectivity, operator intertwining and weight preservation of a map
/// `B_l ⊗ B_1 → B_1 ⊗ B_l`.
pub fn check_iso_with<F>(level: u32, mut r: F) -> Result<SuiteReport>
where
    F: FnMut(&CrystalElement, Letter) -> Result<(Letter, CrystalElement, i64)>,
{
    let mut rep = SuiteReport::new("iso");
    let elements = CrystalElement::enumerate(level)?;
    let mut image: HashMap<[Factor; 2], [Factor; 2]> = HashMap::new();
    for b in &elements {
        for c in Letter::ALL {
            match r(b, c) {
                Ok((x, y, _)) => {
                    image.insert(word(b, c), image_word(x, &y));
                }
                Err(e) => rep.fail("R defined", (b, c), "an image", e),
            }
        }
    }
    let distinct: HashSet<_> = image.values().collect();
    rep.check("bijective", level, image.len(), distinct.len());
    for (w, img) in &image {
        let wt = |v: &[Factor; 2]| v[0].weight() + v[1].weight();
        rep.check("weight preserved", w, wt(w), wt(img));
        for i in 0..3 {
            for dir in [Direction::Raise, Direction::Lower] {
                let moved = tensor_apply(w, i, dir).map(|v| image[&[v[0], v[1]]]);
                let then = tensor_apply(img, i, dir).map(|v| [v[0], v[1]]);
                rep.check("intertwines", (w, i, dir), moved, then);
            }
        }
    }
    Ok(rep)
}

/// Same as [`check_iso_with`] for `R̄` on `B♮ ⊗ B_1`.
pub fn check_rbar() -> SuiteReport {
    let mut rep = SuiteReport::new("iso");
    let mut image: HashMap<[Factor; 2], [Factor; 2]> = HashMap::new();
    for n in NaturalNode::ALL {
        for c in Letter::ALL {
            match rbar_apply(n, c) {
                Ok((x, m)) => {
                    image.insert(
                        [Factor::Natural(n), Factor::Element(c.element())],
                        [Factor::Element(x.element()), Factor::Natural(m)],
                    );
                }
                Err(e) => rep.fail("R̄ defined", (n, c), "an image", e),
            }
        }
    }
    let distinct: HashSet<_> = image.values().collect();
    rep.check("R̄ bijective", "B♮ ⊗ B_1", image.len(), distinct.len());
    for (w, img) in &image {
        for i in 0..3 {
            for dir in [Direction::Raise, Direction::Lower] {
                let moved = tensor_apply(w, i, dir).map(|v| image[&[v[0], v[1]]]);
                let then = tensor_apply(img, i, dir).map(|v| [v[0], v[1]]);
                rep.check("R̄ intertwines", (w, i, dir), moved, then);
            }
        }
    }
    rep
}

pub fn iso(level: u32) -> Result<SuiteReport> {
    let mut rep = check_iso_with(level, r_apply)?;
    let mut ins = Insertion::new();
    for b in CrystalElement::enumerate(level)? {
        for c in Letter::ALL {
            let path = r_apply(&b, c).map(|(x, y, _)| (x, y));
            let tab = ins.apply(&b, c);
            rep.check("insertion agrees", (b, c), path, tab);
        }
    }
    Ok(rep.merge(check_rbar()))
}

/// Energy recurrence along raising edges and constancy on classical
/// components, for an energy function `h` paired with `r`.
pub fn check_energy_with<F>(level: u32, mut r: F) -> Result<SuiteReport>
where
    F: FnMut(&CrystalElement, Letter) -> Result<(Letter, CrystalElement, i64)>,
{
    let mut rep = SuiteReport::new("energy");
    for b in CrystalElement::enumerate(level)? {
        for c in Letter::ALL {
            let (x, y, h) = r(&b, c)?;
            let w = word(&b, c);
            let (hw, _) = raise_to_classical_hw(&w);
            let (Factor::Element(hb), Factor::Element(hc)) = (hw[0], hw[1]) else { unreachable!() };
            let hc = Letter::from_element(&hc)?;
            rep.check("constant on components", (b, c), h_hw(&hb, hc)?, h);
            rep.check("hw values", (hb, hc), true, (-2..=0).contains(&h_hw(&hb, hc)?));
            for i in 0..3 {
                let Some(v) = tensor_apply(&w, i, Direction::Raise) else { continue };
                let (Factor::Element(nb), Factor::Element(nc)) = (v[0], v[1]) else { unreachable!() };
                let (_, _, nh) = r(&nb, Letter::from_element(&nc)?)?;
                let expected = if i == 0 {
                    let left = b.phi(0) >= c.epsilon(0);
                    let left_after = x.phi(0) >= y.epsilon(0);
                    match (left, left_after) {
                        (true, true) => h + 1,
                        (false, false) => h - 1,
                        _ => h,
                    }
                } else {
                    h
                };
                rep.check("recurrence", (b, c, i), expected, nh);
            }
        }
    }
    Ok(rep)
}

pub fn energy(level: u32) -> Result<SuiteReport> {
    check_energy_with(level, r_apply)
}

type Aff<T> = AffineElement<T>;

/// Affine Yang-Baxter equation on `B_l ⊗ B_1 ⊗ B_1`.
pub fn ybe(level: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("ybe");
    let mut rl = RMatrix::new(level)?;
    let mut r1 = RMatrix::new(1)?;
    let mut r11 = |a: Aff<Letter>, c: Aff<Letter>| -> Result<(Aff<Letter>, Aff<Letter>)> {
        let (p, q) = r1.affine(Aff::new(a.exponent, a.payload.element()), c)?;
        Ok((p, Aff::new(q.exponent, Letter::from_element(&q.payload)?)))
    };
    for b in CrystalElement::enumerate(level)? {
        for a in Letter::ALL {
            for c in Letter::ALL {
                let (x, a0, c0) = (Aff::new(0, b), Aff::new(0, a), Aff::new(0, c));
                // R12 R23 R12, rightmost first.
                let (a1, x1) = rl.affine(x, a0)?;
                let (c1, x2) = rl.affine(x1, c0)?;
                let (c2, a2) = r11(a1, c1)?;
                let left = (c2, a2, x2);
                // R23 R12 R23.
                let (c3, a3) = r11(a0, c0)?;
                let (c4, x3) = rl.affine(x, c3)?;
                let (a4, x4) = rl.affine(x3, a3)?;
                let right = (c4, a4, x4);
                rep.check("braid relation", (b, a, c), left, right);
            }
        }
    }
    Ok(rep)
}

/// Sizes used by [`sca`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaBounds {
    /// Window length for the `E_1 = 1` enumeration.
    pub oracle_len: usize,
    /// Carrier levels for the commutation checks.
    pub max_level: u32,
    /// Non-vacuum window length for exhaustive commutation checks.
    pub commute_len: usize,
    /// Longest one-soliton run.
    pub max_soliton: u32,
    pub max_carrier: u32,
    /// `(l1, l2)` pairs for two-soliton scattering.
    pub scattering: Vec<(u32, u32)>,
}

impl Default for ScaBounds {
    fn default() -> Self {
        ScaBounds {
            oracle_len: 8,
            max_level: 3,
            commute_len: 3,
            max_soliton: 4,
            max_carrier: 5,
            scattering: vec![(2, 1), (3, 1), (3, 2)],
        }
    }
}

/// All states of length `len` with `E_1 = 1`, by depth-first search over the
/// carrier sweep with one vacuum cell appended.
pub fn energy_one_states(len: usize) -> Result<Vec<Vec<Letter>>> {
    let mut rm = RMatrix::new(1)?;
    let mut min_step = 0;
    for a in Letter::ALL {
        for c in Letter::ALL {
            min_step = min_step.min(-rm.apply(&a.element(), c)?.2);
        }
    }
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(len);
    dfs(&mut rm, len, min_step, CrystalElement::vacuum(1), 0, &mut cells, &mut out)?;
    Ok(out)
}

fn dfs(
    rm: &mut RMatrix,
    len: usize,
    min_step: i64,
    u: CrystalElement,
    energy: i64,
    cells: &mut Vec<Letter>,
    out: &mut Vec<Vec<Letter>>,
) -> Result<()> {
    // The remaining sweep has len - depth + 1 steps including the appended 1.
    let remaining = (len - cells.len() + 1) as i64;
    if energy + remaining * min_step > 1 {
        return Ok(());
    }
    if cells.len() == len {
        let (_, _, h) = rm.apply(&u, Letter::One)?;
        if energy - h == 1 {
            out.push(cells.clone());
        }
        return Ok(());
    }
    for c in Letter::ALL {
        let (_, next, h) = rm.apply(&u, c)?;
        cells.push(c);
        dfs(rm, len, min_step, next, energy - h, cells, out)?;
        cells.pop();
    }
    Ok(())
}

fn all_words(len: usize) -> Vec<Vec<Letter>> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                Letter::ALL.into_iter().map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    words
}

fn one_soliton(a: A1Element, lead: usize, len: usize) -> State {
    let mut cells = vec![Letter::One; lead];
    cells.extend(soliton_run(a));
    State::padded(cells, len)
}

/// Runs `3^m 2^n`, `3^m 2_1 2^n` and `3^m 2_2 2^n` of length `l`.
pub fn pattern_runs(l: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for m in 0..=l {
        for mid in [None, Some(Letter::Two1), Some(Letter::Two2)] {
            let used = m + mid.is_some() as usize;
            if used > l {
                continue;
            }
            let mut run = vec![Letter::Three; m];
            run.extend(mid);
            run.extend(vec![Letter::Two; l - used]);
            out.push(run);
        }
    }
    out
}

/// `{p : E_1(p) = 1}` against the one-soliton pattern families, for every
/// window length up to `max_len`.
pub fn energy_one_oracle(max_len: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sca");
    for len in 1..=max_len {
        let found: HashSet<Vec<Letter>> = energy_one_states(len)?.into_iter().collect();
        let mut patterns = HashSet::new();
        for l in 1..=len {
            for run in pattern_runs(l) {
                for lead in 0..=len - l {
                    let mut cells = vec![Letter::One; lead];
                    cells.extend(&run);
                    cells.resize(len, Letter::One);
                    patterns.insert(cells);
                }
            }
        }
        let mut patterns: Vec<_> = patterns.into_iter().collect();
        patterns.sort();
        for p in &patterns {
            rep.check("one-solitons have E_1 = 1", format_letters(p), true, found.contains(p));
        }
        let mut extra: Vec<_> = found.iter().filter(|p| !patterns.contains(p)).collect();
        extra.sort();
        for p in extra {
            rep.fail("E_1 = 1 states are one-solitons", format_letters(p), "a one-soliton", "other");
        }
    }
    Ok(rep)
}

/// The run map sends index-1 operators on labels to index-2 operators.
pub fn label_map(max_len: u32) -> SuiteReport {
    let mut rep = SuiteReport::new("sca");
    for l in 1..=max_len {
        for a in A1Element::enumerate(3 * l) {
            let run = soliton_run(a);
            for dir in [Direction::Raise, Direction::Lower] {
                let via_label = a.apply(1, dir).map(soliton_run);
                rep.check("label map intertwines", (a, dir), via_label, tensor_apply(&run, 2, dir));
            }
        }
    }
    rep
}

/// A lone soliton of length `l` moves `min(k, l)` cells under `T_k` and has
/// that energy.
pub fn one_soliton_speed(max_len: u32, max_carrier: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sca");
    for l in 1..=max_len {
        for k in 1..=max_carrier {
            let mut auto = Automaton::new(k)?;
            let len = 2 + 2 * (l + k) as usize;
            let shift = k.min(l);
            for a in A1Element::enumerate(3 * l) {
                let p = one_soliton(a, 1, len);
                let sweep = auto.step(&p)?;
                rep.check("one soliton energy", (a, k), shift as i64, sweep.energy);
                rep.check("one soliton speed", (a, k), one_soliton(a, 1 + shift as usize, len), sweep.state);
            }
        }
    }
    Ok(rep)
}

/// `T♮` fixes a soliton labelled `(3l, 0)` with final carrier `1'` and
/// otherwise moves one unit of label weight and one cell, ending at `2'`.
pub fn natural_one_soliton(max_len: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sca");
    for l in 1..=max_len {
        let len = 2 * l as usize + 4;
        for a in A1Element::enumerate(3 * l) {
            let p = one_soliton(a, 1, len);
            let (q, b) = t_natural(&p)?;
            let want = if a.x2 == 0 {
                (p.clone(), NaturalNode::One)
            } else {
                let next = A1Element::new(a.x1 + 1, a.x2 - 1);
                (one_soliton(next, 2, len), NaturalNode::Two)
            };
            rep.check("natural step on one soliton", a, want, (q, b));
        }
    }
    Ok(rep)
}

/// On every window of `len` letters: `T_l` commutes with index-2 operators
/// and preserves `E_l`, and `T_l` commutes with `T♮` keeping `b(p)`.
pub fn commutation(max_level: u32, len: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sca");
    for l in 1..=max_level {
        let mut auto = Automaton::new(l)?;
        let pad = l as usize + 2 * len + 2;
        for core in all_words(len) {
            let p = State::padded(core.clone(), len + pad);
            let Ok(sweep) = auto.step(&p) else {
                rep.fail("evolution defined", (l, format_letters(&core)), "carrier returns", "error");
                continue;
            };
            for dir in [Direction::Raise, Direction::Lower] {
                let Some(moved) = tensor_apply(p.cells(), 2, dir) else { continue };
                let after = auto.step(&State::new(moved))?;
                let other = tensor_apply(sweep.state.cells(), 2, dir).map(State::new);
                rep.check("T commutes with index 2", (l, &p, dir), other, Some(after.state));
                rep.check("energy invariant under index 2", (l, &p, dir), sweep.energy, after.energy);
            }
            let (tn, bp) = t_natural(&p)?;
            let (tn_after, b_after) = t_natural(&sweep.state)?;
            rep.check("natural step commutes with T", (l, &p), auto.evolve(&tn)?, tn_after);
            rep.check("final natural carrier preserved", (l, &p), bp, b_after);
        }
    }
    Ok(rep)
}

/// Two solitons `l1 > l2` started `3r + 3` cells apart, every label pair and
/// every carrier `l2 < r ≤ max_carrier`, against the two-body prediction.
pub fn two_soliton_sweep(pairs: &[(u32, u32)], max_carrier: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sca");
    for &(l1, l2) in pairs {
        for r in l2 + 1..=max_carrier {
            for x in A1Element::enumerate(3 * l1) {
                for y in A1Element::enumerate(3 * l2) {
                    let gap = 3 * r as usize + 3;
                    let mut cells = soliton_run(x);
                    cells.extend(std::iter::repeat_n(Letter::One, gap));
                    cells.extend(soliton_run(y));
                    let p = State::padded(cells, (l1 + l2) as usize + gap + r as usize + 1);
                    let input = (l1, l2, r, x, y);
                    if let Detection::NotSolitonState { .. } = detect_solitons(&p) {
                        rep.fail("initial state", input, "two solitons", "not a soliton state");
                        continue;
                    }
                    let k2 = (l1 as usize + gap) as i64;
                    let ((ny, nx), _) = predict_two_body(AffineElement::new(0, x), AffineElement::new(-k2, y))?;
                    let report = scatter(&p, r, crate::sca::DEFAULT_STEP_CAP)?;
                    rep.check("two soliton scattering", input, Some(vec![ny, nx]), report.simulated);
                    rep.check("two soliton verdict", input, Verdict::Agree, report.verdict);
                }
            }
        }
    }
    Ok(rep)
}

/// The automaton's invariants at the given bounds.
pub fn sca(bounds: &ScaBounds) -> Result<SuiteReport> {
    Ok(energy_one_oracle(bounds.oracle_len)?
        .merge(label_map(bounds.max_soliton))
        .merge(one_soliton_speed(bounds.max_soliton, bounds.max_carrier)?)
        .merge(natural_one_soliton(bounds.max_soliton)?)
        .merge(commutation(bounds.max_level, bounds.commute_len)?)
        .merge(two_soliton_sweep(&bounds.scattering, bounds.max_carrier)?))
}

/// Every suite at the given level and default automaton bounds.
pub fn all(level: u32) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        axioms(level)?,
        iso(level)?,
        energy(level)?,
        ybe(level)?,
        sca(&ScaBounds::default())?,
    ])
}
