//! Toric combinatorics of weighted projective 3-spaces and monomial maps
//! between weighted projective spaces.

pub mod fan;
pub mod map;

pub use fan::{wps_fan, Blowup, Fan, Ray};
pub use map::{MonomialMap, SourceCoords};
