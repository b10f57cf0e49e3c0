//! Combinatorial R-matrices `B_l ⊗ B_1 → B_1 ⊗ B_l` and `B♮ ⊗ B_1 → B_1 ⊗ B♮`,
//! with energy functions and affinization.
//!
//! Both maps are computed by raising to the classical highest weight element,
//! mapping it through a table, and lowering back along the same path.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::crystal::Crystal;
use crate::element::{CrystalElement, UNIT};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::natural::NaturalNode;
use crate::tensor::{raise_to_classical_hw, replay};

/// `z^n b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineElement<T> {
    pub exponent: i64,
    pub payload: T,
}

impl<T: Crystal + Copy> AffineElement<T> {
    pub fn new(exponent: i64, payload: T) -> Self {
        AffineElement { exponent, payload }
    }

    pub fn raise(&self, i: u8) -> Option<Self> {
        let b = self.payload.raise(i)?;
        Some(AffineElement::new(self.exponent + i64::from(i == 0), b))
    }

    pub fn lower(&self, i: u8) -> Option<Self> {
        let b = self.payload.lower(i)?;
        Some(AffineElement::new(self.exponent - i64::from(i == 0), b))
    }
}

impl<T: fmt::Display> fmt::Display for AffineElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{}{}", self.exponent, self.payload)
    }
}

/// Factor of a word mixing coordinate elements and B♮ nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Element(CrystalElement),
    Natural(NaturalNode),
}

impl Crystal for Factor {
    fn raise(&self, i: u8) -> Option<Self> {
        match self {
            Factor::Element(b) => b.raise(i).map(Factor::Element),
            Factor::Natural(n) => n.raise(i).map(Factor::Natural),
        }
    }

    fn lower(&self, i: u8) -> Option<Self> {
        match self {
            Factor::Element(b) => b.lower(i).map(Factor::Element),
            Factor::Natural(n) => n.lower(i).map(Factor::Natural),
        }
    }

    fn epsilon(&self, i: u8) -> i64 {
        match self {
            Factor::Element(b) => b.epsilon(i),
            Factor::Natural(n) => n.epsilon(i),
        }
    }

    fn phi(&self, i: u8) -> i64 {
        match self {
            Factor::Element(b) => b.phi(i),
            Factor::Natural(n) => n.phi(i),
        }
    }
}

fn first_coordinate(b: &CrystalElement) -> Option<u32> {
    let c = b.coords();
    (c[1..].iter().all(|&x| x == 0)).then_some((c[0] / UNIT) as u32)
}

fn at_level(x: [i64; 6], level: u32) -> CrystalElement {
    CrystalElement::new(x, level).expect("table entries lie in B_l")
}

/// Image and energy of a classical highest weight element `(j,0,...) ⊗ b2`.
pub fn r_hw(b1: &CrystalElement, b2: Letter) -> Result<(Letter, CrystalElement, i64)> {
    let l = b1.level();
    let reject = || Error::NotHighestWeight(format!("{b1} ⊗ {b2}"));
    let j = first_coordinate(b1).ok_or_else(reject)?;
    if !crate::tensor::is_classical_hw(&[*b1, b2.element()]) {
        return Err(reject());
    }
    let (j, li) = (j as i64 * UNIT, l as i64 * UNIT);
    let top = |x: i64| [x, 0, 0, 0, 0, 0];
    use Letter::*;
    Ok(match b2 {
        One if j == li => (One, at_level(top(li), l), 0),
        One if j + UNIT == li => (Empty, at_level(top(li), l), -1),
        One => (One, at_level([j + UNIT, 0, 0, 0, 0, UNIT], l), -2),
        Empty if j == li => (One, at_level(top(li - UNIT), l), -1),
        Empty => (Empty, at_level(top(j), l), -2),
        Two if j == li => (One, at_level([li - UNIT, UNIT, 0, 0, 0, 0], l), -1),
        Two => (One, at_level([j - UNIT, UNIT, UNIT, UNIT, 0, 0], l), -2),
        Two3 => (One, at_level([j - UNIT, 2, 2, UNIT, 0, 0], l), -2),
        Zero => (One, at_level([j - UNIT, 0, UNIT, UNIT, 0, 0], l), -2),
        BarThree => (One, at_level([j - 2 * UNIT, UNIT, 0, 0, 0, 0], l), -2),
        BarOne if j == UNIT => (One, at_level([0, 0, 0, 0, 0, UNIT], l), -2),
        BarOne => (One, at_level(top(j - 2 * UNIT), l), -2),
        _ => return Err(reject()),
    })
}

/// Energy on a classical highest weight element.
pub fn h_hw(b1: &CrystalElement, b2: Letter) -> Result<i64> {
    r_hw(b1, b2).map(|(_, _, h)| h)
}

/// `R(b ⊗ b2) = b̃2 ⊗ b̃` with energy `H(b ⊗ b2)`.
pub fn r_apply(b: &CrystalElement, b2: Letter) -> Result<(Letter, CrystalElement, i64)> {
    let (hw, path) = raise_to_classical_hw(&[*b, b2.element()]);
    let (img2, img1, h) = r_hw(&hw[0], Letter::from_element(&hw[1])?)?;
    let word = replay(&[img2.element(), img1], &path).ok_or_else(|| replay_failure(
        &[img2.element(), img1],
        &path,
    ))?;
    Ok((Letter::from_element(&word[0])?, word[1], h))
}

fn replay_failure<C: Crystal>(start: &[C], path: &[u8]) -> Error {
    let mut cur = start.to_vec();
    for (step, &i) in path.iter().rev().enumerate() {
        match crate::tensor::tensor_lower(&cur, i) {
            Some(next) => cur = next,
            None => {
                return Error::ReplayFailed {
                    step,
                    path: path.to_vec(),
                }
            }
        }
    }
    Error::ReplayFailed {
        step: path.len(),
        path: path.to_vec(),
    }
}

/// R on `B_1 ⊗ B_1`, which is the identity.
pub fn r_b1b1(a: Letter, b: Letter) -> (Letter, Letter) {
    (a, b)
}

/// Energy on `B_1 ⊗ B_1`.
pub fn h_b1b1(a: Letter, b: Letter) -> i64 {
    r_apply(&a.element(), b).expect("R is total on B_1 ⊗ B_1").2
}

/// Memoized R on `B_l ⊗ B_1` for a fixed level. Not shared across threads.
#[derive(Debug)]
pub struct RMatrix {
    level: u32,
    memo: HashMap<(CrystalElement, Letter), (Letter, CrystalElement, i64)>,
}

impl RMatrix {
    pub fn new(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        Ok(RMatrix {
            level,
            memo: HashMap::new(),
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn apply(&mut self, b: &CrystalElement, b2: Letter) -> Result<(Letter, CrystalElement, i64)> {
        if let Some(hit) = self.memo.get(&(*b, b2)) {
            return Ok(*hit);
        }
        let out = r_apply(b, b2)?;
        self.memo.insert((*b, b2), out);
        Ok(out)
    }

    /// `R^Aff(z^m b ⊗ z^n b2) = z^{n+H} b̃2 ⊗ z^{m-H} b̃`.
    pub fn affine(
        &mut self,
        b: AffineElement<CrystalElement>,
        b2: AffineElement<Letter>,
    ) -> Result<(AffineElement<Letter>, AffineElement<CrystalElement>)> {
        let (x, y, h) = self.apply(&b.payload, b2.payload)?;
        Ok((
            AffineElement::new(b2.exponent + h, x),
            AffineElement::new(b.exponent - h, y),
        ))
    }
}

/// Image of a classical highest weight element of `B♮ ⊗ B_1`.
pub fn rbar_hw(n: NaturalNode, b: Letter) -> Result<(Letter, NaturalNode)> {
    use Letter::*;
    match (n, b) {
        (NaturalNode::One, One) => Ok((One, NaturalNode::One)),
        (NaturalNode::One, Two1) => Ok((One, NaturalNode::Three)),
        (NaturalNode::One, Empty) => Ok((One, NaturalNode::BarTwo)),
        (NaturalNode::One, ZeroHat) => Ok((Empty, NaturalNode::One)),
        _ => Err(Error::NotHighestWeight(format!("{n} ⊗ {b}"))),
    }
}

/// `R̄(n ⊗ b)`.
pub fn rbar_apply(n: NaturalNode, b: Letter) -> Result<(Letter, NaturalNode)> {
    let word = [Factor::Natural(n), Factor::Element(b.element())];
    let (hw, path) = raise_to_classical_hw(&word);
    let (Factor::Natural(hn), Factor::Element(hb)) = (hw[0], hw[1]) else {
        unreachable!("raising preserves factor kinds")
    };
    let (x, y) = rbar_hw(hn, Letter::from_element(&hb)?)?;
    let start = [Factor::Element(x.element()), Factor::Natural(y)];
    let out = replay(&start, &path).ok_or_else(|| replay_failure(&start, &path))?;
    match (out[0], out[1]) {
        (Factor::Element(e), Factor::Natural(m)) => Ok((Letter::from_element(&e)?, m)),
        _ => unreachable!("lowering preserves factor kinds"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn el(t: &str, l: u32) -> CrystalElement {
        CrystalElement::parse(t, l).unwrap()
    }

    #[test]
    fn hw_table_examples() {
        for l in 2..5 {
            for j in 2..=l {
                let (x, y, _) = r_hw(&CrystalElement::highest(j, l), BarThree).unwrap();
                assert_eq!(x, One);
                assert_eq!(y, CrystalElement::new([(j as i64 - 2) * 6, 6, 0, 0, 0, 0], l).unwrap());
            }
            let (x, y, h) = r_hw(&CrystalElement::vacuum(l), Empty).unwrap();
            assert_eq!((x, y, h), (One, CrystalElement::highest(l - 1, l), -1));
            for j in 1..=l {
                let (x, y, h) = r_hw(&CrystalElement::highest(j, l), Two3).unwrap();
                assert_eq!((x, h), (One, -2));
                assert_eq!(y.coords(), [(j as i64 - 1) * 6, 2, 2, 6, 0, 0]);
            }
        }
    }

    #[test]
    fn energy_table_examples() {
        let l = 3;
        assert_eq!(h_hw(&CrystalElement::vacuum(l), One), Ok(0));
        assert_eq!(h_hw(&CrystalElement::highest(l - 1, l), One), Ok(-1));
        assert_eq!(h_hw(&CrystalElement::vacuum(l), Two), Ok(-1));
        assert!(h_hw(&el("(0,1,0,0,0,0)", 3), One).is_err());
    }

    #[test]
    fn apply_examples() {
        for l in 1..4 {
            let u = CrystalElement::vacuum(l);
            assert_eq!(r_apply(&u, One).unwrap(), (One, u, 0));
        }
        let (x, y, h) = r_apply(&Two.element(), One).unwrap();
        assert_eq!((x, Letter::from_element(&y).unwrap(), h), (Two, One, 0));
    }

    #[test]
    fn b1b1_energies() {
        assert_eq!(h_b1b1(One, One), 0);
        for b in [Two, Two1, Two2, Three, Empty] {
            assert_eq!(h_b1b1(One, b), -1);
        }
        for b in [Two3, Zero, ZeroHat, BarThree, BarTwo3, BarTwo2, BarTwo1, BarTwo, BarOne] {
            assert_eq!(h_b1b1(One, b), -2);
        }
        for b in [One, Two, Two1, Two2, Three] {
            assert_eq!(h_b1b1(Three, b), 0);
        }
        for a in Letter::ALL {
            for b in Letter::ALL {
                assert_eq!(r_apply(&a.element(), b).unwrap().0, a);
            }
        }
    }

    #[test]
    fn rbar_examples() {
        assert_eq!(rbar_apply(NaturalNode::One, ZeroHat), Ok((Empty, NaturalNode::One)));
        assert_eq!(rbar_apply(NaturalNode::One, Empty), Ok((One, NaturalNode::BarTwo)));
        use NaturalNode as N;
        // Carrier steps of one-soliton sweeps.
        let steps = [
            ((N::One, Three), (One, N::BarThree)),
            ((N::BarThree, Three), (Three, N::BarThree)),
            ((N::BarThree, Two), (Two2, N::Three)),
            ((N::BarThree, Two2), (Three, N::Zero)),
            ((N::BarThree, Two1), (Three, N::Three)),
            ((N::Zero, Two), (Two1, N::Three)),
            ((N::Three, Two), (Two, N::Three)),
            ((N::Three, One), (Two, N::Two)),
            ((N::Two, One), (One, N::Two)),
            ((N::One, Two), (Two, N::One)),
            ((N::One, One), (One, N::One)),
        ];
        for ((n, b), want) in steps {
            assert_eq!(rbar_apply(n, b), Ok(want), "{n} ⊗ {b}");
        }
    }

    #[test]
    fn affine_examples() {
        let mut r = RMatrix::new(3).unwrap();
        let u = CrystalElement::vacuum(3);
        let (a, b) = r
            .affine(AffineElement::new(0, u), AffineElement::new(0, One))
            .unwrap();
        assert_eq!((a.exponent, a.payload, b.exponent, b.payload), (0, One, 0, u));
        let (a, b) = r
            .affine(AffineElement::new(2, u), AffineElement::new(5, Empty))
            .unwrap();
        assert_eq!((a.exponent, a.payload), (4, One));
        assert_eq!((b.exponent, b.payload), (3, CrystalElement::highest(2, 3)));
    }
}
