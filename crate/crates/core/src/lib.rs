//! Energy decay function (EDF) analysis: Schroeder integration, a
//! multi-exponential-plus-noise decay model, and three interchangeable
//! fitting engines (convolutional network, slice-sampling maximum
//! likelihood with BIC order selection, single-slope nonlinear
//! regression), together with a synthetic dataset generator, a training
//! loop, and an evaluation/benchmark harness.
//!
//! The decay model for an EDF `d(t)` with `K` exponential slopes is
//!
//! ```text
//! d_K(t) = N0 (L - t) + sum_i A_i [exp(-13.8 t / (fs T_i)) - exp(-13.8 L / (fs T_i))]
//! ```
//!
//! where `T_i` are decay times in seconds, `A_i` linear amplitudes, and
//! `N0` a per-sample noise energy. All engines estimate `(K, T, A, N0)`
//! from a measured or synthesized EDF and report dB-domain fit quality.

pub mod bayes;
pub mod edf;
pub mod error;
pub mod eval;
pub mod filter;
pub mod net;
pub mod regression;
pub mod report;
pub mod synth;

pub use edf::{DecayParameters, EnergyDecayFunction, PreprocessedInput, RESAMPLE_LEN};
pub use error::{Error, Result};
pub use report::FitReport;

/// Default seed used by the CLI and tests when none is given.
pub const DEFAULT_SEED: u64 = 42;
