//! Numerical laboratory for manifold estimation under noise.
//!
//! The crate provides:
//!
//! - [`geometry`]: chart-based embedded manifolds with certified reach
//!   validation, slabs, grids, and an indexed Hausdorff metric engine;
//! - [`sampling`]: reproducible samplers for the noiseless, clutter, and
//!   additive-Gaussian observation models;
//! - [`deconv`]: the band-limited deconvolution kernel, the thresholded
//!   level-set estimator for additive noise, and its calibration tools;
//! - [`slabfit`]: the minimum-slab-mass score and argmax fit over finite
//!   candidate families, with empirical-process deviation diagnostics;
//! - [`lecam`]: least-favorable pair constructions and a numerical total
//!   variation / two-point risk bound engine;
//! - [`harness`]: experiment configuration, a deterministic Monte Carlo
//!   driver, rate fitting, and report emission.
//!
//! All estimators and samplers are pure functions of their configuration and
//! seed; parallel execution never changes results.

pub mod deconv;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod lecam;
pub mod linalg;
pub mod quad;
pub mod rng;
pub mod sampling;
pub mod slabfit;
pub mod special;

pub use error::{Error, Result};
