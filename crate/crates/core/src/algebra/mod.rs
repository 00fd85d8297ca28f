//! Exact arithmetic: rationals, F_p scalars, 2x2 matrices, cyclotomic numbers.

mod cyclotomic;
mod fp;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use fp::{fp_inv, FpScalar, Mat2};
pub use rational::Rational;
