//! Small quantum cohomology `QH*(Y)`.
//!
//! The ring is given by five relations in `c1, c2, d2, q` with `deg q = 3`.
//! Their Gröbner basis has `q`-free leading terms, so the quotient is free of
//! rank 13 over `Q[q]`. Each classical basis class is quantized by the
//! inductive rule `g ∪ V = g * V - sum_n q^n X_n`, with the corrections `X_n`
//! built from a small table of degree-one invariants; the degree-two value it
//! needs is solved for from the relations. Products of classes are then read
//! off from normal forms.

mod gw;
mod presentation;
mod qclass;
mod ring;

pub use gw::{dimension_axiom, GwTable};
pub use presentation::{quantum_relations, QuantumPresentation, Relation};
pub use qclass::QClass;
pub use ring::{QuantumRing, CHEVALLEY_CELLS};
