//! Exact-arithmetic geometry of 3-dimensional Lie frames.
//!
//! Starting from constant structure constants and a constant metric, the
//! crate derives the Levi-Civita connection, curvature and Ricci data,
//! detects trans-Sasakian structures of type `(α, β)`, solves η-Einstein
//! soliton equations for `(λ, μ)`, evaluates curvature-derivation conditions
//! and audits a catalogue of soliton theorems instance by instance.
//!
//! All arithmetic is over arbitrary-precision rationals; every check is an
//! exact zero test.

pub mod audit;
pub mod cli;
pub mod conditions;
pub mod contact;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod manifest;
pub mod reference;
pub mod report;
pub mod scalar;
pub mod soliton;

pub use error::{Error, Result};
pub use scalar::Rational;
