//! Exact character theory for the groups `(C_p x C_p) ⋊ Q8`, p an odd prime.
//!
//! For every nontrivial linear character λ of `V = C_p x C_p`, the induced
//! character `χ = λ^G` is irreducible with Frobenius-Schur indicator 1, while
//! `χ^2` contains the inflation of the degree-2 character ψ of Q8, whose
//! indicator is -1. This crate builds the groups, their full character
//! tables, and checks all of that with exact arithmetic.

pub mod algebra;
pub mod character;
pub mod error;
pub mod export;
pub mod group;
pub mod prime;
pub mod selftest;

pub use error::{Error, Result};
