//! Exact construction of power-sum approximants for algebraic functions of
//! linear recurrences, with certified verification of rational-approximation
//! lower bounds.

pub mod ball;
pub mod error;
pub mod factor;
pub mod numfield;
pub mod poly;
pub mod roots;
pub mod rat;

pub use error::{Error, Result};
