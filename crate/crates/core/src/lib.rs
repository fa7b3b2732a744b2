//! Exact symbolic calculator for total Stiefel-Whitney classes of real
//! representations of `GL_n(F_q)` (odd `q`), `GL_n(R)` and `GL_n(C)`.
//!
//! The pipeline: character values on the diagonal involutions `h_k` are
//! inverted through the supercharacter table of `C_2^n` ([`superchar`]),
//! the resulting multiplicities feed the total-class product formulas in a
//! graded GF(2) polynomial algebra ([`gf2ring`], [`swc`]), and the named
//! families of `GL_n(F_q)` synthesize their character vectors from exact
//! q-combinatorics ([`reps`]).  Everything is exact arbitrary-precision
//! arithmetic; no floats anywhere.

pub mod corpus;
pub mod error;
pub mod gf2ring;
pub mod reps;
pub mod superchar;
pub mod swc;

pub use error::MathError;
pub use gf2ring::{GeneratorSpec, GradedElement, Monomial, Ring, RingError, RingHom};
pub use reps::RepFamily;
pub use superchar::{BinaryString, CharacterVector, MultiplicityVector, SupercharMatrix};
pub use swc::{FieldCase, RepInput, SWCReport};
