//! The coordinate crystal B_l.

use std::fmt;

use serde::Serialize;

use crate::crystal::Crystal;
use crate::error::{Error, Result};

/// Stored value of the coordinate 1.
pub const UNIT: i64 = 6;

const X1: usize = 0;
const X2: usize = 1;
const X3: usize = 2;
const XB3: usize = 3;
const XB2: usize = 4;
const XB1: usize = 5;

/// An element `(x1, x2, x3, x̄3, x̄2, x̄1)` of B_l, coordinates in sixth-units.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrystalElement {
    coords: [i64; 6],
    level: u32,
}

/// `z1..z4` in sixth-units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZVector {
    pub z1: i64,
    pub z2: i64,
    pub z3: i64,
    pub z4: i64,
}

impl ZVector {
    /// The six partial sums whose maximum selects the 0-action.
    pub fn partial_sums(&self) -> [i64; 6] {
        let ZVector { z1, z2, z3, z4 } = *self;
        [
            0,
            z1,
            z1 + z2,
            z1 + z2 + 3 * z4,
            z1 + z2 + z3 + 3 * z4,
            2 * z1 + z2 + z3 + 3 * z4,
        ]
    }
}

/// Reports why `coords` is not in B_l, or `None` if it is.
pub fn membership_violation(coords: &[i64; 6], level: u32) -> Option<&'static str> {
    let c = coords;
    if c.iter().any(|&x| x < 0) {
        return Some("negative coordinate");
    }
    if c.iter().any(|&x| x % 2 != 0) {
        return Some("coordinate not in (1/3)Z");
    }
    if c[X1] % UNIT != 0 || c[XB1] % UNIT != 0 {
        return Some("x1 and xb1 must be integers");
    }
    if (c[X2] - c[X3]) % UNIT != 0 || (c[XB3] - c[XB2]) % UNIT != 0 {
        return Some("x2-x3 and xb3-xb2 must be integers");
    }
    // 3*x3 = c[X3]/2, so the parity condition is c[X3] = c[XB3] mod 4.
    if (c[X3] - c[XB3]) % 4 != 0 {
        return Some("3*x3 and 3*xb3 must have equal parity");
    }
    if s_units(c) > UNIT * level as i64 {
        return Some("s(b) exceeds the level");
    }
    None
}

pub fn membership(coords: &[i64; 6], level: u32) -> bool {
    level > 0 && membership_violation(coords, level).is_none()
}

fn s_units(c: &[i64; 6]) -> i64 {
    c[X1] + c[X2] + (c[X3] + c[XB3]) / 2 + c[XB2] + c[XB1]
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

fn exact(x: i64) -> i64 {
    debug_assert_eq!(x % UNIT, 0, "string length not integral");
    x / UNIT
}

impl CrystalElement {
    pub fn new(coords: [i64; 6], level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        match membership_violation(&coords, level) {
            None => Ok(CrystalElement { coords, level }),
            Some(reason) => Err(Error::NotMember {
                level,
                reason: reason.to_string(),
            }),
        }
    }

    /// Builds from whole-number coordinates.
    pub fn from_integers(x: [i64; 6], level: u32) -> Result<Self> {
        Self::new(x.map(|v| v * UNIT), level)
    }

    /// `(l, 0, 0, 0, 0, 0)`.
    pub fn vacuum(level: u32) -> Self {
        Self::highest(level, level)
    }

    /// `(j, 0, 0, 0, 0, 0)`, the classical highest weight element of B(jΛ1).
    pub fn highest(j: u32, level: u32) -> Self {
        assert!(j <= level && level > 0);
        CrystalElement {
            coords: [j as i64 * UNIT, 0, 0, 0, 0, 0],
            level,
        }
    }

    pub fn coords(&self) -> [i64; 6] {
        self.coords
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn with_level(&self, level: u32) -> Result<Self> {
        Self::new(self.coords, level)
    }

    /// s(b) in sixth-units.
    pub fn s_units(&self) -> i64 {
        s_units(&self.coords)
    }

    /// t(b) = x2 + (x3 + x̄3)/2 in sixth-units.
    pub fn t_units(&self) -> i64 {
        let c = &self.coords;
        c[X2] + (c[X3] + c[XB3]) / 2
    }

    pub fn z_values(&self) -> ZVector {
        let c = &self.coords;
        ZVector {
            z1: c[XB1] - c[X1],
            z2: c[XB2] - c[XB3],
            z3: c[X3] - c[X2],
            z4: (c[XB3] - c[X3]) / 2,
        }
    }

    /// Index k in 1..=6 of the case (F_k) governing f̃_0.
    pub fn lower_case(&self) -> usize {
        let a = self.z_values().partial_sums();
        let m = *a.iter().max().unwrap();
        a.iter().position(|&v| v == m).unwrap() + 1
    }

    /// Index k in 1..=6 of the case (E_k) governing ẽ_0.
    pub fn raise_case(&self) -> usize {
        let a = self.z_values().partial_sums();
        let m = *a.iter().max().unwrap();
        a.iter().rposition(|&v| v == m).unwrap() + 1
    }

    fn shifted(&self, d: [i64; 6]) -> Option<Self> {
        let mut c = self.coords;
        for k in 0..6 {
            c[k] += d[k];
        }
        membership(&c, self.level).then_some(CrystalElement {
            coords: c,
            level: self.level,
        })
    }

    fn raise_delta(&self, i: u8) -> [i64; 6] {
        let z = self.z_values();
        match i {
            1 => {
                if z.z2 >= pos(-z.z3) {
                    [0, 0, 0, 0, 6, -6]
                } else if z.z2 < 0 && 0 <= z.z3 {
                    [0, 0, 6, -6, 0, 0]
                } else {
                    [6, -6, 0, 0, 0, 0]
                }
            }
            2 => {
                if z.z4 >= 0 {
                    [0, 0, 0, 4, -2, 0]
                } else {
                    [0, 2, -4, 0, 0, 0]
                }
            }
            0 => match self.raise_case() {
                1 => [-6, 0, 0, 0, 0, 0],
                2 => [0, 0, -6, -6, 0, 6],
                3 => match z.z4 {
                    -2 => [0, -4, -4, 8, 2, 0],
                    -4 => [0, -2, -8, 4, 4, 0],
                    _ => [0, 0, -12, 0, 6, 0],
                },
                4 => [0, -6, 0, 12, 0, 0],
                5 => [-6, 0, 6, 6, 0, 0],
                _ => [0, 0, 0, 0, 0, 6],
            },
            _ => panic!("index {i} out of range"),
        }
    }

    fn lower_delta(&self, i: u8) -> [i64; 6] {
        let z = self.z_values();
        match i {
            1 => {
                if pos(z.z2) <= -z.z3 {
                    [-6, 6, 0, 0, 0, 0]
                } else if z.z2 <= 0 && 0 < z.z3 {
                    [0, 0, -6, 6, 0, 0]
                } else {
                    [0, 0, 0, 0, -6, 6]
                }
            }
            2 => {
                if z.z4 <= 0 {
                    [0, -2, 4, 0, 0, 0]
                } else {
                    [0, 0, 0, -4, 2, 0]
                }
            }
            0 => match self.lower_case() {
                1 => [6, 0, 0, 0, 0, 0],
                2 => [0, 0, 6, 6, 0, -6],
                3 => [0, 0, 12, 0, -6, 0],
                4 => match z.z4 {
                    2 => [0, 2, 8, -4, -4, 0],
                    4 => [0, 4, 4, -8, -2, 0],
                    _ => [0, 6, 0, -12, 0, 0],
                },
                5 => [6, 0, -6, -6, 0, 0],
                _ => [0, 0, 0, 0, 0, -6],
            },
            _ => panic!("index {i} out of range"),
        }
    }

    /// Every element of B_l, in lexicographic order of the stored tuple.
    pub fn enumerate(level: u32) -> Result<Vec<Self>> {
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        let cap = UNIT * level as i64;
        let mut out = Vec::new();
        // Coordinates are even in sixth-units, so step by 2.
        for x1 in (0..=cap).step_by(6) {
            for x2 in (0..=cap - x1).step_by(2) {
                for x3 in (0..=2 * (cap - x1 - x2)).step_by(2) {
                    for xb3 in (0..=2 * (cap - x1 - x2) - x3).step_by(2) {
                        let used = x1 + x2 + (x3 + xb3) / 2;
                        for xb2 in (0..=cap - used).step_by(2) {
                            for xb1 in (0..=cap - used - xb2).step_by(6) {
                                let c = [x1, x2, x3, xb3, xb2, xb1];
                                if membership_violation(&c, level).is_none() {
                                    out.push(CrystalElement { coords: c, level });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Parses `(a,b,c,d,e,f)` where entries are integers or fractions `n/d`.
    pub fn parse(text: &str, level: u32) -> Result<Self> {
        let bad = || Error::BadCoordinate(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(bad());
        }
        let mut coords = [0i64; 6];
        for (k, p) in parts.iter().enumerate() {
            let (num, den) = match p.split_once('/') {
                Some((n, d)) => (n.trim().parse::<i64>(), d.trim().parse::<i64>()),
                None => (p.parse::<i64>(), Ok(1)),
            };
            let (num, den) = (num.map_err(|_| bad())?, den.map_err(|_| bad())?);
            if den <= 0 || (num * UNIT) % den != 0 {
                return Err(bad());
            }
            coords[k] = num * UNIT / den;
        }
        Self::new(coords, level)
    }
}

/// Formats a sixth-unit value as an integer or reduced fraction.
pub fn format_units(v: i64) -> String {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = gcd(v, UNIT).max(1);
    let (n, d) = (v / g, UNIT / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|&v| format_units(v)).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.level)
    }
}

impl Crystal for CrystalElement {
    fn raise(&self, i: u8) -> Option<Self> {
        self.shifted(self.raise_delta(i))
    }

    fn lower(&self, i: u8) -> Option<Self> {
        self.shifted(self.lower_delta(i))
    }

    fn epsilon(&self, i: u8) -> i64 {
        let c = &self.coords;
        match i {
            1 => exact(c[XB1] + pos(c[XB3] - c[XB2] + pos(c[X2] - c[X3]))),
            2 => exact(3 * c[XB2] + 3 * pos(c[X3] - c[XB3]) / 2),
            0 => {
                let z = self.z_values();
                let top = *z.partial_sums().iter().max().unwrap();
                exact(UNIT * self.level as i64 - self.s_units() + top - z.partial_sums()[5])
            }
            _ => panic!("index {i} out of range"),
        }
    }

    fn phi(&self, i: u8) -> i64 {
        let c = &self.coords;
        match i {
            1 => exact(c[X1] + pos(c[X3] - c[X2] + pos(c[XB2] - c[XB3]))),
            2 => exact(3 * c[X2] + 3 * pos(c[XB3] - c[X3]) / 2),
            0 => {
                let top = *self.z_values().partial_sums().iter().max().unwrap();
                exact(UNIT * self.level as i64 - self.s_units() + top)
            }
            _ => panic!("index {i} out of range"),
        }
    }
}
