//! Multiplets of elementary representations of so(p,q) and the singular
//! vectors that build their intertwining differential operators.

pub mod classify;
pub mod cli;
pub mod emit;
pub mod error;
pub mod kostant;
pub mod lie;
pub mod linalg;
pub mod multiplets;
pub mod rational;
pub mod rootsys;
pub mod signatures;
pub mod singvec;
pub mod sweep;
pub mod verma;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{build_algebra, AlgebraSpec, Parity, Root, Weight};
