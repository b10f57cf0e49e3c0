use serde::Serialize;

/// Raising (`ẽ_i`) or lowering (`f̃_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Raise,
    Lower,
}

/// Pairings ⟨h_i, wt(b)⟩ for i = 0, 1, 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl std::ops::Add for WeightVector {
    type Output = WeightVector;
    fn add(self, o: WeightVector) -> WeightVector {
        WeightVector {
            h0: self.h0 + o.h0,
            h1: self.h1 + o.h1,
            h2: self.h2 + o.h2,
        }
    }
}

/// A finite crystal element. Indices run over `0..Self::RANK`.
pub trait Crystal: Clone + Eq + std::hash::Hash + std::fmt::Debug {
    const RANK: u8 = 3;

    fn raise(&self, i: u8) -> Option<Self>;
    fn lower(&self, i: u8) -> Option<Self>;
    fn epsilon(&self, i: u8) -> i64;
    fn phi(&self, i: u8) -> i64;

    fn apply(&self, i: u8, dir: Direction) -> Option<Self> {
        match dir {
            Direction::Raise => self.raise(i),
            Direction::Lower => self.lower(i),
        }
    }

    fn weight(&self) -> WeightVector {
        let h = |i| if i < Self::RANK { self.phi(i) - self.epsilon(i) } else { 0 };
        WeightVector { h0: h(0), h1: h(1), h2: h(2) }
    }
}

/// Length of the `i`-string above `b`, counted by actually raising.
pub fn raise_count<C: Crystal>(b: &C, i: u8) -> i64 {
    let mut n = 0;
    let mut cur = b.clone();
    while let Some(next) = cur.raise(i) {
        cur = next;
        n += 1;
    }
    n
}

pub fn lower_count<C: Crystal>(b: &C, i: u8) -> i64 {
    let mut n = 0;
    let mut cur = b.clone();
    while let Some(next) = cur.lower(i) {
        cur = next;
        n += 1;
    }
    n
}
