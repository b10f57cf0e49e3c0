//! The 15 letters of B_1 and their coordinates.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::crystal::Crystal;
use crate::element::{CrystalElement, UNIT};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Two,
    Two1,
    Two2,
    Two3,
    Three,
    Zero,
    ZeroHat,
    BarThree,
    BarTwo3,
    BarTwo2,
    BarTwo1,
    BarTwo,
    BarOne,
    Empty,
}

use Letter::*;

impl Letter {
    pub const ALL: [Letter; 15] = [
        One, Two, Two1, Two2, Two3, Three, Zero, ZeroHat, BarThree, BarTwo3, BarTwo2, BarTwo1,
        BarTwo, BarOne, Empty,
    ];

    pub fn token(self) -> &'static str {
        match self {
            One => "1",
            Two => "2",
            Two1 => "2_1",
            Two2 => "2_2",
            Two3 => "2_3",
            Three => "3",
            Zero => "0",
            ZeroHat => "0h",
            BarThree => "b3",
            BarTwo3 => "b2_3",
            BarTwo2 => "b2_2",
            BarTwo1 => "b2_1",
            BarTwo => "b2",
            BarOne => "b1",
            Empty => "e",
        }
    }

    /// Position in the order used for tableau rows. Letters sharing a rank
    /// are incomparable.
    pub fn rank(self) -> Option<u8> {
        Some(match self {
            One => 0,
            Two => 1,
            Two1 => 2,
            Two2 => 3,
            Two3 | Three => 4,
            ZeroHat | Zero => 5,
            BarTwo3 | BarThree => 6,
            BarTwo2 => 7,
            BarTwo1 => 8,
            BarTwo => 9,
            BarOne => 10,
            Empty => return None,
        })
    }

    pub fn le(self, other: Letter) -> bool {
        match (self.rank(), other.rank()) {
            (Some(a), Some(b)) => self == other || a < b,
            _ => false,
        }
    }

    /// Coordinates of the single-box tableau.
    pub fn coords(self) -> [i64; 6] {
        if self == Empty {
            return [0; 6];
        }
        letter_counts_coords(&[self])
    }

    pub fn element(self) -> CrystalElement {
        CrystalElement::new(self.coords(), 1).expect("letters are level-1 elements")
    }

    pub fn from_element(b: &CrystalElement) -> Result<Letter> {
        if b.level() != 1 {
            return Err(Error::NotLevelOne);
        }
        let c = b.coords();
        Ok(*TABLE
            .iter()
            .find(|(_, k)| *k == c)
            .map(|(l, _)| l)
            .expect("every level-1 element is a letter"))
    }

    /// The inverse of the A1 triple map: 2, 2_1, 2_2, 3 hold this many 1s.
    pub fn triple_ones(self) -> Option<u32> {
        match self {
            Two => Some(3),
            Two1 => Some(2),
            Two2 => Some(1),
            Three => Some(0),
            _ => None,
        }
    }

    pub fn from_triple_ones(ones: u32) -> Letter {
        match ones {
            3 => Two,
            2 => Two1,
            1 => Two2,
            0 => Three,
            _ => panic!("a triple holds at most three 1s"),
        }
    }
}

const fn count_coords(t: &[i64; 14]) -> [i64; 6] {
    // t is indexed in the order of Letter::ALL without Empty.
    let [t1, t2, t21, t22, t23, t3, t0, t0h, tb3, tb23, tb22, tb21, tb2, tb1] = *t;
    // Each entry is 6 * (numerator / 3) = 2 * numerator.
    [
        UNIT * t1,
        2 * (3 * t2 + 2 * t21 + t22 + t23 + t0h),
        2 * (2 * t21 + 4 * t22 + t23 + 6 * t3 + t0h + 3 * t0 + 3 * tb23),
        2 * (3 * t23 + t0h + 3 * t0 + 6 * tb3 + tb23 + 4 * tb22 + 2 * tb21),
        2 * (t0h + tb23 + tb22 + 2 * tb21 + 3 * tb2),
        UNIT * tb1,
    ]
}

/// Coordinates of a tableau from its letter multiplicities. `Empty` entries
/// are ignored.
pub fn letter_counts_coords(letters: &[Letter]) -> [i64; 6] {
    let mut t = [0i64; 14];
    for &l in letters {
        if l != Empty {
            t[l as usize] += 1;
        }
    }
    count_coords(&t)
}

static TABLE: std::sync::LazyLock<Vec<(Letter, [i64; 6])>> =
    std::sync::LazyLock::new(|| Letter::ALL.iter().map(|&l| (l, l.coords())).collect());

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Letter> {
        Letter::ALL
            .iter()
            .copied()
            .find(|l| l.token() == s)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

/// Parses whitespace-separated letter tokens.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace().map(str::parse).collect()
}

pub fn format_letters(word: &[Letter]) -> String {
    word.iter().map(|l| l.token()).collect::<Vec<_>>().join(" ")
}

impl Crystal for Letter {
    fn raise(&self, i: u8) -> Option<Self> {
        self.element().raise(i).map(|b| Letter::from_element(&b).unwrap())
    }

    fn lower(&self, i: u8) -> Option<Self> {
        self.element().lower(i).map(|b| Letter::from_element(&b).unwrap())
    }

    fn epsilon(&self, i: u8) -> i64 {
        self.element().epsilon(i)
    }

    fn phi(&self, i: u8) -> i64 {
        self.element().phi(i)
    }
}
