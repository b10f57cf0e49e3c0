//! R on `B_l ⊗ B_1` by an insertion procedure on tableau rows.
//!
//! This is a second, independent route to the same map as
//! [`crate::rmatrix::r_apply`]. It shares only the crystal operators.

use std::collections::HashMap;

use crate::element::CrystalElement;
use crate::error::{Error, Result};
use crate::letter::{format_letters, Letter, Letter::*};
use crate::tableau::{element_tableau, row_to_word, tableau_element, validate_tableau, word_to_row};
use crate::tensor::{raise_to_classical_hw, replay};

/// A crystal isomorphism between two components of letter words, fixed by
/// where it sends one highest weight element.
#[derive(Debug)]
struct ComponentMap {
    source: Vec<Letter>,
    target: Vec<Letter>,
    memo: HashMap<Vec<Letter>, Vec<Letter>>,
}

impl ComponentMap {
    fn new(source: &[Letter], target: &[Letter]) -> Self {
        ComponentMap {
            source: source.to_vec(),
            target: target.to_vec(),
            memo: HashMap::new(),
        }
    }

    fn apply(&mut self, word: &[Letter]) -> Vec<Letter> {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let (hw, path) = raise_to_classical_hw(word);
        assert_eq!(hw, self.source, "{} outside the domain component", format_letters(word));
        let out = replay(&self.target, &path).expect("component maps are isomorphisms");
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    /// Applies the map at positions `i..i+n` for `i = count` down to 1.
    fn chain(&mut self, word: &[Letter], count: usize) -> Vec<Letter> {
        let n = self.source.len();
        let mut w = word.to_vec();
        for i in (1..=count).rev() {
            let img = self.apply(&w[i - 1..i - 1 + n]);
            w.splice(i - 1..i - 1 + n, img);
        }
        w
    }
}

/// Holds the memoized component maps. Not shared across threads.
#[derive(Debug)]
pub struct Insertion {
    /// Component of `1 ⊗ 0` onto the component of `1`.
    collapse: ComponentMap,
    /// Component of `1` onto the component of `1 ⊗ 0`.
    expand: ComponentMap,
    /// `1 ⊗ 1 ⊗ 2 ↦ 1 ⊗ 2 ⊗ 1`.
    swap_two: ComponentMap,
    /// `1 ⊗ 1 ⊗ 2_3 ↦ 1 ⊗ 2_3 ⊗ 1`.
    swap_two3: ComponentMap,
}

impl Default for Insertion {
    fn default() -> Self {
        Self::new()
    }
}

fn hw_pair(a: Letter, b: Letter) -> (Letter, Letter) {
    let (hw, _) = raise_to_classical_hw(&[a, b]);
    (hw[0], hw[1])
}

impl Insertion {
    pub fn new() -> Self {
        Insertion {
            collapse: ComponentMap::new(&[One, Zero], &[One]),
            expand: ComponentMap::new(&[One], &[One, Zero]),
            swap_two: ComponentMap::new(&[One, One, Two], &[One, Two, One]),
            swap_two3: ComponentMap::new(&[One, One, Two3], &[One, Two3, One]),
        }
    }

    /// `R(row ⊗ beta) = letter ⊗ row'` on `B_l ⊗ B_1`.
    pub fn apply_row(&mut self, row: &[Letter], beta: Letter, level: u32) -> Result<(Letter, Vec<Letter>)> {
        if !validate_tableau(row) || row.len() > level as usize {
            return Err(Error::InvalidTableau(format_letters(row)));
        }
        let l = level as usize;
        let j = row.len();
        let cat = |parts: &[&[Letter]]| parts.concat();
        if beta == Empty {
            return Ok(if j == l {
                (row[l - 1], row[..l - 1].to_vec())
            } else {
                (Empty, row.to_vec())
            });
        }
        if j == 0 {
            return Ok(if l == 1 {
                (Empty, vec![beta])
            } else {
                (One, vec![beta, BarOne])
            });
        }
        // The tensor word of row ⊗ beta.
        let word = cat(&[&row_to_word(row), &[beta]]);
        let split = |q: Vec<Letter>| (q[0], word_to_row(&q[1..]));
        Ok(match hw_pair(row[0], beta) {
            (One, One) if j == l => (row[l - 1], cat(&[&[beta], &row[..l - 1]])),
            (One, One) if j + 1 == l => (Empty, cat(&[&[beta], row])),
            (One, One) => (One, cat(&[&[beta], row, &[BarOne]])),
            (One, Two) if j == l => split(self.swap_two.chain(&word, l - 1)),
            (One, Two) => {
                let q = self.swap_two.chain(&word, j - 1);
                let pr = self.expand.apply(&q[..1]);
                (pr[0], cat(&[&word_to_row(&q[1..]), &[pr[1]]]))
            }
            (One, Two3) => split(self.swap_two3.chain(&word, j - 1)),
            (One, Zero) if j > 1 => {
                let r = self.collapse.apply(&[row[0], beta])[0];
                match hw_pair(row[1], r) {
                    (One, One) => {
                        let pq = self.expand.apply(&[row[j - 1]]);
                        (pq[0], cat(&[&[r], &row[1..j - 1], &[pq[1]]]))
                    }
                    (One, Two) => {
                        let w = cat(&[&row_to_word(&row[1..]), &[r]]);
                        split(self.swap_two.chain(&w, j - 2))
                    }
                    other => unreachable!("unexpected component {other:?}"),
                }
            }
            (One, BarOne) if j > 1 => (row[j - 1], row[1..j - 1].to_vec()),
            _ if j == 1 => (row[0], vec![beta]),
            other => unreachable!("unexpected component {other:?} for row of length {j}"),
        })
    }

    /// Same as [`Insertion::apply_row`] on coordinate elements.
    pub fn apply(&mut self, b: &CrystalElement, beta: Letter) -> Result<(Letter, CrystalElement)> {
        let (x, row) = self.apply_row(&element_tableau(b), beta, b.level())?;
        Ok((x, tableau_element(&row, b.level())?))
    }
}
