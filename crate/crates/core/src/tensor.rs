//! Tensor products via the signature rule.
//!
//! Words are read left to right as `b_1 ⊗ b_2 ⊗ ...`. `ẽ_i` acts on
//! `b_1 ⊗ b_2` at `b_1` iff `φ_i(b_1) ≥ ε_i(b_2)`; `f̃_i` acts at `b_1` iff
//! `φ_i(b_1) > ε_i(b_2)`.

use crate::crystal::{Crystal, Direction};

/// Raising indices applied in order, first to last.
pub type RaisePath = Vec<u8>;

struct Signature {
    /// Factor holding the rightmost unmatched `-`.
    raise_at: Option<usize>,
    /// Factor holding the leftmost unmatched `+`.
    lower_at: Option<usize>,
    minus: i64,
    plus: i64,
}

fn signature<C: Crystal>(word: &[C], i: u8) -> Signature {
    // Each factor contributes ε minuses then φ pluses; a minus cancels the
    // nearest unmatched plus on its left.
    let mut pluses: Vec<(usize, i64)> = Vec::new();
    let mut raise_at = None;
    let mut minus = 0;
    for (k, b) in word.iter().enumerate() {
        let mut m = b.epsilon(i);
        while m > 0 {
            let Some(top) = pluses.last_mut() else { break };
            let take = m.min(top.1);
            m -= take;
            top.1 -= take;
            if top.1 == 0 {
                pluses.pop();
            }
        }
        if m > 0 {
            raise_at = Some(k);
            minus += m;
        }
        let p = b.phi(i);
        if p > 0 {
            pluses.push((k, p));
        }
    }
    Signature {
        raise_at,
        lower_at: pluses.first().map(|&(k, _)| k),
        minus,
        plus: pluses.iter().map(|&(_, p)| p).sum(),
    }
}

pub fn tensor_apply<C: Crystal>(word: &[C], i: u8, dir: Direction) -> Option<Vec<C>> {
    let sig = signature(word, i);
    let k = match dir {
        Direction::Raise => sig.raise_at?,
        Direction::Lower => sig.lower_at?,
    };
    let b = word[k].apply(i, dir)?;
    let mut out = word.to_vec();
    out[k] = b;
    Some(out)
}

pub fn tensor_raise<C: Crystal>(word: &[C], i: u8) -> Option<Vec<C>> {
    tensor_apply(word, i, Direction::Raise)
}

pub fn tensor_lower<C: Crystal>(word: &[C], i: u8) -> Option<Vec<C>> {
    tensor_apply(word, i, Direction::Lower)
}

/// `(ε_i, φ_i)` of the word.
pub fn tensor_string<C: Crystal>(word: &[C], i: u8) -> (i64, i64) {
    let sig = signature(word, i);
    (sig.minus, sig.plus)
}

/// Raises with `ẽ_1`/`ẽ_2`, smallest index first, until neither applies.
pub fn raise_to_classical_hw<C: Crystal>(word: &[C]) -> (Vec<C>, RaisePath) {
    let mut cur = word.to_vec();
    let mut path = Vec::new();
    'outer: loop {
        for i in 1..C::RANK {
            if let Some(next) = tensor_raise(&cur, i) {
                cur = next;
                path.push(i);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// Lowers `word` along `path` reversed. `None` if some step is undefined.
pub fn replay<C: Crystal>(word: &[C], path: &[u8]) -> Option<Vec<C>> {
    let mut cur = word.to_vec();
    for &i in path.iter().rev() {
        cur = tensor_lower(&cur, i)?;
    }
    Some(cur)
}

pub fn is_classical_hw<C: Crystal>(word: &[C]) -> bool {
    (1..C::RANK).all(|i| tensor_raise(word, i).is_none())
}

/// Two-factor criterion: `ẽ_i b_1 = 0` and `ẽ_i^{λ(h_i)+1} b_2 = 0` for the
/// classical indices, where `λ = wt(b_1)`.
pub fn is_level_hw<C: Crystal>(b1: &C, b2: &C) -> bool {
    let w = b1.weight();
    (1..C::RANK).all(|i| {
        let lam = if i == 1 { w.h1 } else { w.h2 };
        b1.raise(i).is_none() && crate::crystal::raise_count(b2, i) <= lam
    })
}
