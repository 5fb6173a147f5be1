//! Exact computation in the two-parameter Hecke algebra of type B, its
//! one-boundary quotients, and the fused Hecke algebra, together with the
//! combinatorics (Bratteli diagrams, pattern-avoiding signed permutations)
//! that governs their dimensions, and a verification registry that checks
//! the algebraic identities relating all of these at small rank.

pub mod combinat;
pub mod coxeter;
pub mod fused;
pub mod hecke;
pub mod par;
pub mod quotient;
pub mod verify;
pub mod ring;
