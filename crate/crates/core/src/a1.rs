//! The A1(1) crystal of pairs `(x1, x2)` with `x1 + x2 = l`, its R-matrix and
//! energy. Soliton labels live here.

use std::fmt;

use serde::Serialize;

use crate::crystal::Crystal;
use crate::rmatrix::AffineElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct A1Element {
    pub x1: u32,
    pub x2: u32,
}

impl A1Element {
    pub fn new(x1: u32, x2: u32) -> Self {
        A1Element { x1, x2 }
    }

    pub fn level(&self) -> u32 {
        self.x1 + self.x2
    }

    pub fn enumerate(level: u32) -> Vec<A1Element> {
        (0..=level).rev().map(|x1| A1Element::new(x1, level - x1)).collect()
    }
}

impl fmt::Display for A1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x1, self.x2)
    }
}

impl Crystal for A1Element {
    const RANK: u8 = 2;

    fn raise(&self, i: u8) -> Option<Self> {
        match i {
            0 if self.x1 > 0 => Some(A1Element::new(self.x1 - 1, self.x2 + 1)),
            1 if self.x2 > 0 => Some(A1Element::new(self.x1 + 1, self.x2 - 1)),
            _ => None,
        }
    }

    fn lower(&self, i: u8) -> Option<Self> {
        match i {
            0 if self.x2 > 0 => Some(A1Element::new(self.x1 + 1, self.x2 - 1)),
            1 if self.x1 > 0 => Some(A1Element::new(self.x1 - 1, self.x2 + 1)),
            _ => None,
        }
    }

    fn epsilon(&self, i: u8) -> i64 {
        match i {
            0 => self.x1 as i64,
            1 => self.x2 as i64,
            _ => 0,
        }
    }

    fn phi(&self, i: u8) -> i64 {
        match i {
            0 => self.x2 as i64,
            1 => self.x1 as i64,
            _ => 0,
        }
    }
}

/// `R̂(x ⊗ y) = ỹ ⊗ x̃`.
pub fn r_hat(x: A1Element, y: A1Element) -> (A1Element, A1Element) {
    let (x1, x2, y1, y2) = (x.x1 as i64, x.x2 as i64, y.x1 as i64, y.x2 as i64);
    let a = y1.min(x2);
    let b = y2.min(x1);
    let nx = A1Element::new((x1 + a - b) as u32, (x2 + b - a) as u32);
    let ny = A1Element::new((y1 + b - a) as u32, (y2 + a - b) as u32);
    (ny, nx)
}

/// `Ĥ(x ⊗ y) = -min(y2, x1)`.
pub fn h_hat(x: A1Element, y: A1Element) -> i64 {
    -(y.x2.min(x.x1) as i64)
}

/// Affine R̂ with energy `shift + Ĥ`:
/// `z^m x ⊗ z^n y ↦ z^{n+H} ỹ ⊗ z^{m-H} x̃`.
pub fn aff_r_hat(
    x: AffineElement<A1Element>,
    y: AffineElement<A1Element>,
    shift: i64,
) -> (AffineElement<A1Element>, AffineElement<A1Element>) {
    let h = shift + h_hat(x.payload, y.payload);
    let (ny, nx) = r_hat(x.payload, y.payload);
    (
        AffineElement::new(y.exponent + h, ny),
        AffineElement::new(x.exponent - h, nx),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::tensor_apply;
    use crate::Direction;

    fn a(x1: u32, x2: u32) -> A1Element {
        A1Element::new(x1, x2)
    }

    #[test]
    fn operator_examples() {
        assert_eq!(a(3, 0).lower(1), Some(a(2, 1)));
        assert_eq!(a(5, 0).raise(1), None);
        assert_eq!(a(4, 7).epsilon(1), 7);
    }

    #[test]
    fn r_hat_examples() {
        assert_eq!(r_hat(a(7, 5), a(5, 1)), (a(1, 5), a(11, 1)));
        assert_eq!(h_hat(a(7, 5), a(5, 1)), -1);
        assert_eq!(r_hat(a(3, 0), a(0, 3)), (a(3, 0), a(0, 3)));
        assert_eq!(h_hat(a(3, 0), a(0, 3)), -3);
    }

    #[test]
    fn affine_examples() {
        let (p, q) = aff_r_hat(AffineElement::new(0, a(7, 5)), AffineElement::new(-8, a(5, 1)), 4);
        assert_eq!((p.exponent, p.payload, q.exponent, q.payload), (-5, a(1, 5), -3, a(11, 1)));
        let (p, q) = aff_r_hat(AffineElement::new(-2, a(9, 0)), AffineElement::new(-9, a(6, 0)), 4);
        assert_eq!((p.exponent, p.payload, q.exponent, q.payload), (-5, a(6, 0), -6, a(9, 0)));
    }

    #[test]
    fn r_hat_is_an_isomorphism() {
        for l in 1..=4 {
            for m in 1..=4 {
                let mut seen = std::collections::HashSet::new();
                for x in A1Element::enumerate(l) {
                    for y in A1Element::enumerate(m) {
                        let (ny, nx) = r_hat(x, y);
                        assert!(seen.insert((ny, nx)));
                        assert_eq!(r_hat(ny, nx), (x, y));
                        for i in 0..2 {
                            for dir in [Direction::Raise, Direction::Lower] {
                                let src = tensor_apply(&[x, y], i, dir);
                                let dst = tensor_apply(&[ny, nx], i, dir);
                                assert_eq!(src.map(|w| r_hat(w[0], w[1])), dst.map(|w| (w[0], w[1])));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn energy_recurrence() {
        for l in 1..=4 {
            for m in 1..=4 {
                for x in A1Element::enumerate(l) {
                    for y in A1Element::enumerate(m) {
                        let h = h_hat(x, y);
                        let (ny, nx) = r_hat(x, y);
                        for i in 0..2 {
                            let Some(w) = tensor_apply(&[x, y], i, Direction::Raise) else { continue };
                            let expected = if i == 0 {
                                let left = x.phi(0) >= y.epsilon(0);
                                let right = ny.phi(0) >= nx.epsilon(0);
                                match (left, right) {
                                    (true, true) => h + 1,
                                    (false, false) => h - 1,
                                    _ => h,
                                }
                            } else {
                                h
                            };
                            assert_eq!(h_hat(w[0], w[1]), expected, "{x}⊗{y} i={i}");
                        }
                    }
                }
            }
        }
    }
}
