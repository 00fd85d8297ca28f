//! Scalars of the prime field F_p and 2x2 matrices over it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Residue in `[0, p)` for an odd prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u32,
    modulus: u32,
}

impl FpScalar {
    /// Reduces `value` modulo `p`. The caller is responsible for `p` being
    /// an odd prime; see [`crate::prime::validate_prime`].
    pub fn new(value: i64, p: u32) -> Self {
        FpScalar {
            value: value.rem_euclid(p as i64) as u32,
            modulus: p,
        }
    }

    pub fn zero(p: u32) -> Self {
        FpScalar::new(0, p)
    }

    pub fn one(p: u32) -> Self {
        FpScalar::new(1, p)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FpScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in F_p arithmetic"
        );
    }
}

/// Multiplicative inverse by the extended Euclidean algorithm.
pub fn fp_inv(x: FpScalar) -> Result<FpScalar> {
    if x.is_zero() {
        return Err(Error::DivisionByZero(x.modulus));
    }
    let (mut r0, mut r1) = (x.modulus as i64, x.value as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(FpScalar::new(t0, x.modulus))
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        self.check(&rhs);
        FpScalar::new(self.value as i64 + rhs.value as i64, self.modulus)
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self.check(&rhs);
        FpScalar::new(self.value as i64 - rhs.value as i64, self.modulus)
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar::new(-(self.value as i64), self.modulus)
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        self.check(&rhs);
        FpScalar::new(self.value as i64 * rhs.value as i64, self.modulus)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// A 2x2 matrix `[[a, b], [c, d]]` over F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    p: u32,
    // row-major a, b, c, d
    entries: [u32; 4],
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64, p: u32) -> Self {
        let r = |x: i64| x.rem_euclid(p as i64) as u32;
        Mat2 {
            p,
            entries: [r(a), r(b), r(c), r(d)],
        }
    }

    pub fn from_scalars(a: FpScalar, b: FpScalar, c: FpScalar, d: FpScalar) -> Self {
        let p = a.modulus();
        for s in [b, c, d] {
            assert_eq!(s.modulus(), p, "mixed moduli in Mat2");
        }
        Mat2 {
            p,
            entries: [a.value(), b.value(), c.value(), d.value()],
        }
    }

    pub fn identity(p: u32) -> Self {
        Mat2::new(1, 0, 0, 1, p)
    }

    /// The scalar matrix -I.
    pub fn minus_identity(p: u32) -> Self {
        Mat2::new(-1, 0, 0, -1, p)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Raw residues `[a, b, c, d]`.
    pub fn entries(&self) -> [u32; 4] {
        self.entries
    }

    pub fn a(&self) -> FpScalar {
        FpScalar::new(self.entries[0] as i64, self.p)
    }
    pub fn b(&self) -> FpScalar {
        FpScalar::new(self.entries[1] as i64, self.p)
    }
    pub fn c(&self) -> FpScalar {
        FpScalar::new(self.entries[2] as i64, self.p)
    }
    pub fn d(&self) -> FpScalar {
        FpScalar::new(self.entries[3] as i64, self.p)
    }

    pub fn det(&self) -> FpScalar {
        self.a() * self.d() - self.b() * self.c()
    }

    pub fn transpose(&self) -> Self {
        let [a, b, c, d] = self.entries;
        Mat2 {
            p: self.p,
            entries: [a, c, b, d],
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det_inv = fp_inv(self.det())?;
        Ok(Mat2::from_scalars(
            self.d() * det_inv,
            -self.b() * det_inv,
            -self.c() * det_inv,
            self.a() * det_inv,
        ))
    }

    /// Matrix-vector product on column vectors of F_p^2.
    pub fn apply(&self, v: [u32; 2]) -> [u32; 2] {
        let p = self.p as u64;
        let [a, b, c, d] = self.entries.map(u64::from);
        let (x, y) = (v[0] as u64, v[1] as u64);
        [((a * x + b * y) % p) as u32, ((c * x + d * y) % p) as u32]
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = *self;
        let mut acc = Mat2::identity(self.p);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        assert_eq!(self.p, rhs.p, "mixed moduli in Mat2 product");
        let p = self.p as u64;
        let [a, b, c, d] = self.entries.map(u64::from);
        let [e, f, g, h] = rhs.entries.map(u64::from);
        Mat2 {
            p: self.p,
            entries: [
                ((a * e + b * g) % p) as u32,
                ((a * f + b * h) % p) as u32,
                ((c * e + d * g) % p) as u32,
                ((c * f + d * h) % p) as u32,
            ],
        }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        let p = self.p as i64;
        let [a, b, c, d] = self.entries.map(|x| -(x as i64));
        Mat2::new(a, b, c, d, p as u32)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]] mod {}", self.p)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_small_primes() {
        assert_eq!(fp_inv(FpScalar::new(2, 5)).unwrap().value(), 3);
        assert_eq!(fp_inv(FpScalar::new(1, 3)).unwrap().value(), 1);
        assert_eq!(fp_inv(FpScalar::new(4, 7)).unwrap().value(), 2);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(fp_inv(FpScalar::zero(7)), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn every_nonzero_residue_inverts() {
        for p in [3u32, 5, 7, 11, 13, 97] {
            for x in 1..p {
                let s = FpScalar::new(x as i64, p);
                assert_eq!((s * fp_inv(s).unwrap()).value(), 1);
            }
        }
    }

    #[test]
    fn negative_inputs_reduce() {
        assert_eq!(FpScalar::new(-1, 5).value(), 4);
        assert_eq!(Mat2::minus_identity(3).entries(), [2, 0, 0, 2]);
    }

    #[test]
    fn matrix_inverse_and_det() {
        let m = Mat2::new(2, 3, 1, 4, 7);
        assert_eq!(m.det().value(), 5);
        let inv = m.inverse().unwrap();
        assert_eq!(m * inv, Mat2::identity(7));
        assert_eq!(inv * m, Mat2::identity(7));
        assert!(Mat2::new(1, 2, 2, 4, 7).inverse().is_err());
    }

    #[test]
    fn apply_matches_product() {
        let m = Mat2::new(0, -1, 1, 0, 5);
        assert_eq!(m.apply([1, 0]), [0, 1]);
        assert_eq!(m.apply([0, 1]), [4, 0]);
        assert_eq!(m.pow(4), Mat2::identity(5));
        assert_eq!(m.pow(2), Mat2::minus_identity(5));
    }
}
