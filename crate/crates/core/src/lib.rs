//! Numerical toolkit for the Wyner-Ahlswede-Korner (WAK) network: a source
//! `Y^n` and side information `X^n` are compressed separately and a decoder
//! reconstructs `Y^n`. Everything here works at finite alphabet / desk scale
//! and is built around the weighted-rate functional
//! `phi_c(Q_XY) = inf_{P(U|X)} { c*H(Y|U) + I(U;X) }`.
//!
//! Module map:
//! - [`info`]: distributions, channels, and the information measures (nats).
//! - [`phi`]: the `phi_c` solver, its gradient, and the binary symmetric
//!   closed form used as an oracle.
//! - [`dispersion`]: both c-dispersion formulas plus the finite-n converse
//!   and achievability error bounds.
//! - [`types`]: method-of-types engine; the type-class optimization
//!   `psi_{c,n}` and the functional-entropic duality checks.
//! - [`rhc`]: transposition-model generators, matrix semigroups, modified
//!   log-Sobolev / reverse hypercontractivity verification, and the
//!   dominating operator bounds.
//! - [`sim`]: Monte Carlo simulator of the random-binning coding scheme and
//!   an exact checker of the converse inequality chain on tiny codes.

pub mod dispersion;
mod error;
pub mod info;
mod optim;
pub mod phi;
pub mod rhc;
mod rng;
pub mod sim;
pub mod types;

pub use error::{Error, Result};
pub use info::{Channel, Dist, InfoDensityTable, Joint};
pub use phi::PhiSolution;
