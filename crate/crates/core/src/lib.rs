//! Populations of Bethe ansatz solutions for the XXX `gl(m|n)` spin chain.

pub mod algebra;
pub mod cli;
pub mod diffop;
pub mod error;
pub mod flags;
pub mod gl11;
pub mod model;
pub mod population;

pub use error::{Error, Result};
