//! Energy-optimal model width, CPU frequencies and transmit power for
//! semantic communication links.
//!
//! A flexible semantic model can run at any width `pi` in `[pi_min, 1]`;
//! narrower sub-models cost fewer cycles and send less data, at lower
//! fidelity. Given a fidelity target and a latency budget, this crate picks
//! the width, the encoder and decoder CPU frequencies, and the transmit power
//! that minimize total energy.
//!
//! - [`fidelity`]: the width-to-fidelity curve, its inverse and its fit.
//! - [`sysmodel`]: computation and link cost models.
//! - [`solver`]: hierarchical bisection on the latency split, plus a grid oracle.
//! - [`harness`]: scenario runs, baselines, sweeps and export.
//! - [`config`]: scenario files.
//! - [`cli`]: the `fast` binary.

// `!(x > 0.0)` is used deliberately so NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod fidelity;
pub mod harness;
pub mod solver;
pub mod sysmodel;

pub use error::{Error, Result};
pub use fidelity::{FidelityCurve, ScalingFactor};
pub use harness::{Scenario, ScenarioResult};
pub use solver::{SolveReport, SolverConfig};
