//! A desk-scale laboratory for creativity-driven generative adversarial
//! training on a procedurally generated shape×texture wardrobe.
//!
//! The crate is organized around a small differentiable tensor engine
//! ([`autodiff`]) on top of which the adversarial losses and the creativity
//! loss family ([`divergence`]) are built. Three generator architectures
//! ([`nets`]) are trained by [`trainer`] on the synthetic dataset produced by
//! [`synth`]. Generations are scored by the automatic metric suite
//! ([`metrics`]), ranked into evaluation sets ([`evalsets`]) and analyzed
//! statistically ([`analysis`]). [`pipeline`] wires the stages together for
//! the command-line front end.

pub mod analysis;
pub mod autodiff;
pub mod divergence;
pub mod error;
pub mod evalsets;
pub mod metrics;
pub mod nets;
pub mod pipeline;
pub mod synth;
pub mod trainer;

pub use autodiff::{Graph, NdArray, Real, Var};
pub use error::{Error, Result};
