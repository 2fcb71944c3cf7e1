//! Exact-arithmetic models of U(gl(3)) quotients acting on symmetric
//! powers, the invariant trace form on them, and the discrete orthogonal
//! polynomial families (one variable in E33, two variables in the Cartan
//! coordinates) that diagonalize it. Everything is computed over the
//! rationals with no floating point, so every identity the crate checks
//! is checked exactly.

pub mod envelope;
pub mod error;
pub mod orthopoly;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod tgw;
pub mod weylb3;
pub mod rep;

pub use error::{Error, Result};
pub use rational::Rational;
