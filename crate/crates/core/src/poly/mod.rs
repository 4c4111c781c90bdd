//! Sparse weighted-graded polynomials in (c1, c2, d2, q).

mod monomial;
mod multipoly;

pub use monomial::{Monomial, MonomialOrder, TieBreak, Var, NVARS, WEIGHTS};
pub use multipoly::MultiPoly;

/// Convenience constructors for the generators.
pub fn c1() -> MultiPoly {
    MultiPoly::var(Var::C1)
}

pub fn c2() -> MultiPoly {
    MultiPoly::var(Var::C2)
}

pub fn d2() -> MultiPoly {
    MultiPoly::var(Var::D2)
}

pub fn q() -> MultiPoly {
    MultiPoly::var(Var::Q)
}
