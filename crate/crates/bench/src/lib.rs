//! Inputs shared by the benchmarks.

use g2crystal::letter::parse_letters;
use g2crystal::{Letter, State};

/// A two-soliton row, lengths 4 and 2, padded to 55 cells.
pub fn two_soliton_state() -> State {
    State::padded(parse_letters("3 2_2 2 2 1 1 1 1 2_1 2").unwrap(), 55)
}

/// Every pair in `B_1 ⊗ B_1`.
pub fn letter_pairs() -> Vec<(Letter, Letter)> {
    let mut out = Vec::new();
    for a in Letter::ALL {
        for b in Letter::ALL {
            out.push((a, b));
        }
    }
    out
}
