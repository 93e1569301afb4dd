//! Exact computations with weak bialgebras, weak Hopf algebras and
//! bialgebroids over a base with an idempotent Frobenius system.

pub mod algcore;
pub mod bialgebroid;
pub mod cli;
pub mod duality;
pub mod error;
pub mod exactla;
pub mod format;
pub mod frobenius;
pub mod hopf;
pub mod repcat;
pub mod weakcore;
pub mod zoo;

pub use error::{Error, Result};
