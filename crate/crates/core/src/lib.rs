//! Isotopy of rational 3-tangles presented as braid words.
//!
//! A tangle `F(ε)` is the image of the trivial tangle under a word `F` in the
//! half twists `s0`..`s5` of the six-punctured sphere. Two tangles `F(ε)` and
//! `G(ε)` are isotopic exactly when the three curves `G⁻¹F(∂E_i)` bound disks
//! in the complement of the trivial tangle. Each curve is carried as hexagon
//! weights ([`weights`]), converted to Dehn parameters ([`dehn`]) and standard
//! weights ([`standard`]), and reduced until a verdict falls out
//! ([`reducer`]). The [`tracer`] decides the same question through the
//! fundamental group and serves as a cross-check.

pub mod batch;
pub mod braid;
pub mod classify;
pub mod dehn;
pub mod error;
pub mod free_group;
pub mod golden;
pub mod reducer;
pub mod standard;
pub mod tracer;
pub mod weights;

pub use braid::{BraidWord, Letter};
pub use error::{Error, Result};
pub use weights::{CurveLabel, WeightVector};
