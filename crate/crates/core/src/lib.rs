//! Exact Chow ring and small quantum cohomology of the Fano 6-fold `Y`,
//! the moduli space of stable representations of the 3-Kronecker quiver
//! with dimension vector (2,3).

pub mod cells;
pub mod chow;
pub mod error;
pub mod expr;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod quantum;
pub mod rational;
pub mod roots;
pub mod spectra;
pub mod unipoly;

pub use error::{Error, Result};
pub use rational::Rational;
