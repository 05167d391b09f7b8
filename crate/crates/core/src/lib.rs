// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod chartab;
pub mod coideal;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod rational;
pub mod repr;
pub mod verify;
