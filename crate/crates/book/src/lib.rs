//! The guide's chapters, compiled so that every Rust snippet runs as a
//! doc-test. The chapters themselves live in `book/src` and build with mdbook.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/moebius.md")]
pub mod moebius {}

#[doc = include_str!("../../../book/src/apolarity.md")]
pub mod apolarity {}

#[doc = include_str!("../../../book/src/polarization.md")]
pub mod polarization {}

#[doc = include_str!("../../../book/src/regions.md")]
pub mod regions {}

#[doc = include_str!("../../../book/src/stability.md")]
pub mod stability {}

#[doc = include_str!("../../../book/src/suites.md")]
pub mod suites {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
