//! Norming constants for the maximum of n i.i.d. standard normal variables.
//!
//! The distribution of the normalized maximum (M_n − b_n)/a_n converges to
//! the Gumbel law; how fast depends heavily on the choice of (a_n, b_n).
//! This crate computes every standard choice, measures the resulting
//! sup-norm distances, and numerically certifies the convergence-rate
//! bounds those choices satisfy — all stable out to n = 10^100.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example tail_functions      # tail-stable special functions
//! cargo run --release --example norming_constants   # every location/scale family
//! cargo run --release --example sup_distance        # distance to the Gumbel law
//! cargo run --release --example certify_bounds      # bound certificates
//! cargo run --release --example density_curves      # normalized-maximum densities
//! cargo run --release --example calibrate_p         # tuning the B_n(p, q) family
//! cargo run --release --example simulate_maxima     # exact sampling of M_n
//! cargo run --release --example compare_tables      # the three canonical tables
//! ```
//!
//! ## Library layout
//!
//! * [`specfn`] — normal tail (survival, quantile, Mills ratio), Gumbel,
//!   Lambert W with asymptotic expansions;
//! * [`norming`] — the location families b_n, b*_n, β-variants and the
//!   three auxiliary scale functions;
//! * [`distance`] — log-stable Φⁿ(ax+b), its difference to Λ, global
//!   extremes and the comparison table;
//! * [`verify`] — certificates for every stated bound and rate;
//! * [`calibrate`] — per-size solves of b_k = B_k(p, q) and their mean;
//! * [`mc`] — reproducible exact simulation of M_n and KS cross-checks;
//! * [`tables`] + [`report`] — canonical comparison tables and CSV output.
//!
//! A thin `normax` binary exposes the same functionality as subcommands
//! (`constants`, `distance`, `table`, `verify`, `density`, `calibrate`,
//! `simulate`); see the README.

// domain checks use `!(x > 0.0)` so NaN is rejected along with the
// out-of-range values; the partial_cmp spelling would hide that
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// tail constants are written to full decimal length so the parser, not a
// human, decides the nearest double
#![allow(clippy::excessive_precision)]

pub mod calibrate;
pub mod distance;
mod error;
pub mod mc;
pub mod norming;
pub mod optimize;
pub mod parallel;
pub mod quadrature;
pub mod report;
mod size;
pub mod specfn;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use size::LogSize;

pub use norming::{ApproxMethod, AuxiliaryKind, NormingPair};
pub use specfn::TailProbability;
