//! Perfect crystals of type G2(1), their combinatorial R-matrices and energy
//! functions, and the soliton cellular automaton driven by them.
//!
//! Coordinates of crystal elements live in (1/3)Z and are stored as exact
//! integers in sixth-units. Nothing in this crate uses floating point.

pub mod a1;
pub mod crystal;
pub mod element;
pub mod error;
pub mod export;
pub mod insertion;
pub mod letter;
pub mod natural;
pub mod rmatrix;
pub mod sca;
pub mod tableau;
pub mod tensor;
pub mod verify;

pub use a1::A1Element;
pub use crystal::{Crystal, Direction, WeightVector};
pub use element::{CrystalElement, ZVector, UNIT};
pub use error::{Error, Result};
pub use letter::Letter;
pub use natural::NaturalNode;
pub use rmatrix::{AffineElement, Factor, RMatrix};
pub use sca::{Automaton, SolitonRecord, State};
pub use verify::SuiteReport;
pub use tensor::RaisePath;


