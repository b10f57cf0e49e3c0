//! One-row tableaux over the letters, identified with elements of B_l.
//!
//! The row `[a_1, ..., a_j]` is the tensor word `a_j ⊗ ... ⊗ a_1`.

use crate::element::CrystalElement;
use crate::error::{Error, Result};
use crate::letter::{letter_counts_coords, Letter, Letter::*};
use crate::tensor::{raise_to_classical_hw, replay};

pub fn validate_tableau(row: &[Letter]) -> bool {
    if row.contains(&Empty) || !row.windows(2).all(|w| w[0].le(w[1])) {
        return false;
    }
    let t = |l: Letter| row.iter().filter(|&&x| x == l).count();
    let sgn = |l: Letter| usize::from(t(l) > 0);
    t(Two3) + t(Zero) + t(ZeroHat) + t(BarTwo3) <= 1
        && t(Two1) + t(Two2) + t(Two3) + t(ZeroHat) <= 1
        && t(BarTwo3) + t(BarTwo2) + t(BarTwo1) + t(ZeroHat) <= 1
        && t(Two3) + sgn(Three) + t(ZeroHat) <= 1
        && t(ZeroHat) + sgn(BarThree) + t(BarTwo3) <= 1
}

pub fn row_to_word(row: &[Letter]) -> Vec<Letter> {
    row.iter().rev().copied().collect()
}

pub fn word_to_row(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().copied().collect()
}

/// The element of B_l with the given row.
pub fn tableau_element(row: &[Letter], level: u32) -> Result<CrystalElement> {
    if !validate_tableau(row) {
        return Err(Error::InvalidTableau(crate::letter::format_letters(row)));
    }
    if row.len() > level as usize {
        return Err(Error::InvalidTableau(format!(
            "{} boxes exceed level {level}",
            row.len()
        )));
    }
    CrystalElement::new(letter_counts_coords(row), level)
}

/// The row of `b`, found by carrying the raising path of `b` onto `1^j`.
pub fn element_tableau(b: &CrystalElement) -> Vec<Letter> {
    let (hw, path) = raise_to_classical_hw(std::slice::from_ref(b));
    let j = (hw[0].coords()[0] / crate::element::UNIT) as usize;
    let word = replay(&vec![One; j], &path).expect("classical components correspond");
    word_to_row(&word)
}

/// All valid rows of length `j`, in the order of their letters.
pub fn tableaux(j: usize) -> Vec<Vec<Letter>> {
    let letters: Vec<Letter> = Letter::ALL[..14].to_vec();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(j);
    fn go(letters: &[Letter], start: usize, j: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == j {
            if validate_tableau(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for k in start..letters.len() {
            cur.push(letters[k]);
            if validate_tableau(cur) {
                go(letters, k, j, cur, out);
            }
            cur.pop();
        }
    }
    go(&letters, 0, j, &mut cur, &mut out);
    out
}
