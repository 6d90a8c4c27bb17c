//! Optimal-control toolkit for the viscous Camassa-Holm equations
//! (Navier-Stokes-alpha) on the 2D periodic torus.
//!
//! The crate discretizes the momentum form of the equations,
//!
//! ```text
//! d/dt (u + a^2 A u) + nu A (u + a^2 A u) + Btilde(u, u + a^2 A u) = P h,
//! ```
//!
//! pseudo-spectrally on `[0, 2pi)^2` and builds the full reduced-gradient
//! machinery on top of it: forward solves, tangent (first/second derivative)
//! solves, a discretely-transposed adjoint, projected-gradient optimization
//! under box constraints, curvature (second-order condition) probing, and an
//! empirical study of how optimal controls move when the initial state is
//! perturbed.
//!
//! Entry points:
//! * [`spectral`] -- grid, fields and the spatial operator algebra,
//! * [`solver`] -- time integration of the state system and energy ledger,
//! * [`sensitivity`] -- tangent and second-order sensitivity solves,
//! * [`objective`] -- cost functionals, adjoint solve, reduced derivatives,
//! * [`optim`] -- box-constrained projected gradient and curvature probe,
//! * [`stability`] -- perturbed problems and the stability sweep,
//! * [`config`] / [`io`] -- run configuration and on-disk formats.

pub mod config;
pub mod error;
pub mod io;
pub mod objective;
pub mod optim;
pub mod sensitivity;
pub mod solver;
pub mod spectral;
pub mod stability;
pub mod verify;

pub use error::{Error, Result};
pub use solver::System;
