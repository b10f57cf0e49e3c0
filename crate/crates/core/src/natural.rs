//! The seven-element crystal B♮.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::crystal::{lower_count, raise_count, Crystal};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NaturalNode {
    One,
    Two,
    Three,
    Zero,
    BarThree,
    BarTwo,
    BarOne,
}

use NaturalNode::*;

/// `(color, source, target)`.
pub const ARROWS: [(u8, NaturalNode, NaturalNode); 8] = [
    (2, One, Two),
    (1, Two, Three),
    (2, Three, Zero),
    (2, Zero, BarThree),
    (1, BarThree, BarTwo),
    (2, BarTwo, BarOne),
    (0, BarTwo, One),
    (0, BarOne, Two),
];

impl NaturalNode {
    pub const ALL: [NaturalNode; 7] = [One, Two, Three, Zero, BarThree, BarTwo, BarOne];

    pub fn token(self) -> &'static str {
        match self {
            One => "1'",
            Two => "2'",
            Three => "3'",
            Zero => "0'",
            BarThree => "b3'",
            BarTwo => "b2'",
            BarOne => "b1'",
        }
    }
}

impl Crystal for NaturalNode {
    fn raise(&self, i: u8) -> Option<Self> {
        ARROWS
            .iter()
            .find(|&&(c, _, t)| c == i && t == *self)
            .map(|&(_, s, _)| s)
    }

    fn lower(&self, i: u8) -> Option<Self> {
        ARROWS
            .iter()
            .find(|&&(c, s, _)| c == i && s == *self)
            .map(|&(_, _, t)| t)
    }

    fn epsilon(&self, i: u8) -> i64 {
        raise_count(self, i)
    }

    fn phi(&self, i: u8) -> i64 {
        lower_count(self, i)
    }
}

impl fmt::Display for NaturalNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for NaturalNode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NaturalNode::ALL
            .iter()
            .copied()
            .find(|n| n.token() == s)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

impl Serialize for NaturalNode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_examples() {
        assert_eq!(One.lower(2), Some(Two));
        assert_eq!(One.raise(0), Some(BarTwo));
        assert_eq!(One.lower(1), None);
        assert_eq!((Zero.epsilon(2), Zero.phi(2)), (1, 1));
        assert_eq!((Three.epsilon(2), Three.phi(2)), (0, 2));
    }

    #[test]
    fn classical_weights_are_distinct() {
        let mut w: Vec<_> = NaturalNode::ALL.iter().map(|n| (n.weight().h1, n.weight().h2)).collect();
        w.sort();
        w.dedup();
        assert_eq!(w.len(), 7);
    }
}
