//! Exact computations on Gorenstein weighted projective 3-spaces: graded
//! rings, classification, Veronese models, toric birational maps,
//! intersection numbers and restriction multiplicities.

pub mod cases;
pub mod classify;
pub mod cli;
pub mod curves;
pub mod error;
pub mod grading;
pub mod intersect;
pub mod lattice;
pub mod poly;
pub mod profile;
pub mod reference;
pub mod table;
pub mod toric;
pub mod univariate;
pub mod veronese;
pub mod verify;

pub use error::{Error, Result};
pub use grading::{DivisorClass, ExponentVector, WeightedSpace};
