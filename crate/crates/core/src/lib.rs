//! Exact and certified tools for bihomogeneous polynomials under Möbius
//! actions: apolarity, symbols of linear operators, polarization, circular
//! regions, and stability testing.

pub mod apolarity;
pub mod degree;
pub mod error;
pub mod harness;
pub mod json;
pub mod moebius;
pub mod poly;
pub mod regions;
pub mod polarization;
pub mod roots;
pub mod scalar;
pub mod stability;
pub mod upoly;

pub use degree::{DegreeVec, Mono};
pub use error::{Error, Result};
pub use poly::{BiHomPoly, ProjPoint, P1};
pub use scalar::{GaussRat, Rat};
