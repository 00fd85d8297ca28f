//! Exact arithmetic in the cyclotomic fields Q(ζ_n).
//!
//! An element of Q(ζ_n) is kept in the power basis `1, ζ, …, ζ^{φ(n)-1}` of
//! `Q[x]/(Φ_n(x))`. Internally the coefficients share one positive
//! denominator and the whole tuple is kept in lowest terms, so two elements
//! of the same order are equal exactly when their stored data is equal.
//!
//! Binary operations between elements of different orders first lift both
//! operands into Q(ζ_lcm).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::{checked_add, checked_mul, gcd, Rational};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1, "euler_phi of 0");
    let mut m = n;
    let mut result = n;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            while m.is_multiple_of(q) {
                m /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a as i128, b as i128) as u32 * b
}

/// The n-th cyclotomic polynomial, ascending coefficients.
///
/// Computed as `x^n - 1` divided exactly by `Φ_d` for every proper divisor
/// `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut poly = vec![0i128; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div_monic(&poly, &phi_poly(d));
    }
    poly
}

// Long division by a monic divisor; the remainder must vanish.
fn exact_div_monic(dividend: &[i128], divisor: &[i128]) -> Vec<i128> {
    let dd = divisor.len() - 1;
    debug_assert_eq!(divisor[dd], 1);
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - dd;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in divisor.iter().enumerate() {
                rem[k + j] -= checked_mul(c, dj);
            }
        }
    }
    assert!(
        rem.iter().all(|&r| r == 0),
        "inexact division while building cyclotomic polynomial"
    );
    quot
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<[i128]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i128]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized Φ_n.
fn phi_poly(n: u32) -> Arc<[i128]> {
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&n) {
        return p.clone();
    }
    let poly: Arc<[i128]> = cyclotomic_polynomial(n).into();
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .entry(n)
        .or_insert(poly)
        .clone()
}

/// Reduces an integer polynomial modulo Φ_n, returning exactly φ(n) coefficients.
fn reduce_mod_phi(mut poly: Vec<i128>, n: u32) -> Vec<i128> {
    let phi = phi_poly(n);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            let c = poly[k];
            if c == 0 {
                continue;
            }
            let base = k - deg;
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                poly[base + j] = checked_add(poly[base + j], -checked_mul(c, pj));
            }
            poly[k] = 0;
        }
    }
    poly.resize(deg, 0);
    poly
}

/// An element of Q(ζ_n) in the power basis.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    num: Vec<i128>,
    den: i128,
}

impl Cyclotomic {
    fn from_parts(order: u32, num: Vec<i128>, den: i128) -> Self {
        debug_assert_eq!(num.len(), euler_phi(order) as usize);
        assert!(den != 0, "cyclotomic with zero denominator");
        let mut g = den;
        for &c in &num {
            g = gcd(g, c);
            if g == 1 {
                break;
            }
        }
        let g = if den < 0 { -g } else { g };
        let num = if g == 1 {
            num
        } else {
            num.into_iter().map(|c| c / g).collect()
        };
        Cyclotomic {
            order,
            num,
            den: den / g,
        }
    }

    /// Builds from an integer polynomial in ζ_n of any degree.
    fn from_integer_poly(order: u32, poly: Vec<i128>, den: i128) -> Self {
        Cyclotomic::from_parts(order, reduce_mod_phi(poly, order), den)
    }

    pub fn zero(order: u32) -> Self {
        Cyclotomic::from_parts(order, vec![0; euler_phi(order) as usize], 1)
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic::from_parts(1, vec![r.numerator()], r.denominator())
    }

    pub fn from_integer(n: i128) -> Self {
        Cyclotomic::from_rational(Rational::from(n))
    }

    /// ζ_n^k, with k taken mod n and reduced into the power basis.
    pub fn root(order: u32, k: i64) -> Self {
        assert!(order >= 1, "root of unity of order 0");
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![0i128; e + 1];
        poly[e] = 1;
        Cyclotomic::from_integer_poly(order, poly, 1)
    }

    /// Builds `Σ_k counts[k] · ζ_n^k` for exponents `k` in `0..n`.
    pub fn from_exponent_counts(order: u32, counts: &[i128]) -> Self {
        assert!(counts.len() <= order as usize);
        Cyclotomic::from_integer_poly(order, counts.to_vec(), 1)
    }

    /// The n of Q(ζ_n) this element is expressed in.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|&c| Rational::new(c, self.den))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    /// The value as a rational, or `None` when some ζ^k coefficient with
    /// `k ≥ 1` is nonzero.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.iter().skip(1).any(|&c| c != 0) {
            return None;
        }
        Some(Rational::new(
            self.num.first().copied().unwrap_or(0),
            self.den,
        ))
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational().and_then(|r| r.to_integer())
    }

    /// Re-expresses this element in Q(ζ_m) for a multiple `m` of its order.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "cannot lift Q(ζ_{}) into Q(ζ_{m})",
            self.order
        );
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let top = (self.num.len().saturating_sub(1)) * step;
        let mut poly = vec![0i128; top + 1];
        for (k, &c) in self.num.iter().enumerate() {
            poly[k * step] = c;
        }
        Cyclotomic::from_integer_poly(m, poly, self.den)
    }

    /// Rewrites a rational element as order 1; other elements are unchanged.
    pub fn normalized(self) -> Self {
        match self.as_rational() {
            Some(r) if self.order != 1 => Cyclotomic::from_rational(r),
            _ => self,
        }
    }

    /// Complex conjugation, ζ_n ↦ ζ_n^{n-1}.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut poly = vec![0i128; n];
        for (k, &c) in self.num.iter().enumerate() {
            poly[(n - k) % n] = c;
        }
        Cyclotomic::from_integer_poly(self.order, poly, self.den)
    }

    pub fn scale(&self, r: Rational) -> Self {
        let num = self
            .num
            .iter()
            .map(|&c| checked_mul(c, r.numerator()))
            .collect();
        Cyclotomic::from_parts(self.order, num, checked_mul(self.den, r.denominator()))
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = lcm(a.order, b.order);
        (a.lift(m), b.lift(m))
    }

    fn add_same(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let g = gcd(a.den, b.den);
        let (fa, fb) = (b.den / g, a.den / g);
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(&x, &y)| checked_add(checked_mul(x, fa), checked_mul(y, fb)))
            .collect();
        Cyclotomic::from_parts(a.order, num, checked_mul(a.den / g, b.den))
    }

    // Adding zero from a subfield leaves the other operand as it is.
    fn add_shortcut(a: &Cyclotomic, b: &Cyclotomic) -> Option<Cyclotomic> {
        if b.is_zero() && a.order.is_multiple_of(b.order) {
            Some(a.clone())
        } else if a.is_zero() && b.order.is_multiple_of(a.order) {
            Some(b.clone())
        } else {
            None
        }
    }

    // A rational factor only rescales; the result keeps the other order.
    fn mul_shortcut(a: &Cyclotomic, b: &Cyclotomic) -> Option<Cyclotomic> {
        if b.order == 1 {
            Some(a.scale(Rational::new(b.num[0], b.den)))
        } else if a.order == 1 {
            Some(b.scale(Rational::new(a.num[0], a.den)))
        } else {
            None
        }
    }

    fn mul_same(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let len = a.num.len() + b.num.len() - 1;
        let mut poly = vec![0i128; len];
        for (i, &x) in a.num.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.num.iter().enumerate() {
                poly[i + j] = checked_add(poly[i + j], checked_mul(x, y));
            }
        }
        Cyclotomic::from_integer_poly(a.order, poly, checked_mul(a.den, b.den))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $shortcut:expr, $body:expr) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                let shortcut: fn(&Cyclotomic, &Cyclotomic) -> Option<Cyclotomic> = $shortcut;
                if let Some(r) = shortcut(self, rhs) {
                    r
                } else if self.order == rhs.order {
                    f(self, rhs)
                } else {
                    let (a, b) = Cyclotomic::common(self, rhs);
                    f(&a, &b)
                }
            }
        }
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, Cyclotomic::add_shortcut, Cyclotomic::add_same);
forward_binop!(Mul, mul, Cyclotomic::mul_shortcut, Cyclotomic::mul_same);
forward_binop!(Sub, sub, |a, b| Cyclotomic::add_shortcut(a, &-b), |a, b| {
    Cyclotomic::add_same(a, &-b)
});

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|&c| -c).collect(),
            den: self.den,
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(1), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclotomic {
    /// Power-basis form, writing `z` for ζ_n.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < Rational::ZERO;
            let mag = if neg { -c } else { c };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag == Rational::ONE;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc{}({})", self.order, self)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<[String; 2]> = self
            .coeffs()
            .iter()
            .map(|r| [r.numerator().to_string(), r.denominator().to_string()])
            .collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("n", &self.order)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: u32,
            coeffs: Vec<[String; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.n == 0 {
            return Err(de::Error::custom("cyclotomic order must be positive"));
        }
        if raw.coeffs.len() != euler_phi(raw.n) as usize {
            return Err(de::Error::custom(format!(
                "expected {} coefficients for n = {}, found {}",
                euler_phi(raw.n),
                raw.n,
                raw.coeffs.len()
            )));
        }
        let mut acc = Cyclotomic::zero(raw.n);
        for (k, [n, d]) in raw.coeffs.iter().enumerate() {
            let n: i128 = n.parse().map_err(de::Error::custom)?;
            let d: i128 = d.parse().map_err(de::Error::custom)?;
            if d <= 0 {
                return Err(de::Error::custom("denominator must be positive"));
            }
            let mut basis = vec![0i128; acc.num.len()];
            basis[k] = 1;
            let term = Cyclotomic::from_parts(raw.n, basis, 1).scale(Rational::new(n, d));
            acc = acc + term;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i128) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    // Plain long division, independent of the memoized path.
    fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_12_times_lower_factors_is_x12_minus_1() {
        let mut prod = vec![1i128];
        for d in [1, 2, 3, 4, 6, 12] {
            prod = poly_mul(&prod, &cyclotomic_polynomial(d));
        }
        let mut expected = vec![0i128; 13];
        expected[0] = -1;
        expected[12] = 1;
        assert_eq!(prod, expected);
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=40 {
            let p = cyclotomic_polynomial(n);
            assert_eq!(p.len() - 1, euler_phi(n) as usize, "n = {n}");
            assert_eq!(*p.last().unwrap(), 1);
        }
    }

    #[test]
    fn roots_reduce_into_power_basis() {
        assert_eq!(Cyclotomic::root(3, 0), int(1));
        assert_eq!(Cyclotomic::root(3, 2), int(-1) - Cyclotomic::root(3, 1));
        assert_eq!(Cyclotomic::root(5, 7), Cyclotomic::root(5, 2));
        assert_eq!(Cyclotomic::root(5, -1), Cyclotomic::root(5, 4));
    }

    #[test]
    fn products_of_roots() {
        let z3 = Cyclotomic::root(3, 1);
        assert_eq!(&z3 * &Cyclotomic::root(3, 2), int(1));
        assert_eq!((&z3 + &Cyclotomic::root(3, 2)) * int(1), int(-1));
        assert_eq!(
            Cyclotomic::root(5, 2) * Cyclotomic::root(5, 4),
            Cyclotomic::root(5, 1)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(int(1).conj(), int(1));
        assert_eq!(Cyclotomic::root(5, 2).conj(), Cyclotomic::root(5, 3));
        assert_eq!(
            Cyclotomic::root(3, 1).conj(),
            int(-1) - Cyclotomic::root(3, 1)
        );
    }

    #[test]
    fn rational_recognition() {
        let one_in_q3 = Cyclotomic::root(3, 0);
        assert_eq!(one_in_q3.as_rational(), Some(Rational::ONE));
        assert_eq!(Cyclotomic::root(3, 1).as_rational(), None);
        let z = Cyclotomic::root(3, 1);
        assert_eq!((&z + &z.conj()).as_rational(), Some(Rational::from(-1i64)));
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        let s = Cyclotomic::root(3, 1) * Cyclotomic::root(4, 1);
        assert_eq!(s.order(), 12);
        assert_eq!(s, Cyclotomic::root(12, 7));
        assert_eq!(Cyclotomic::root(6, 2), Cyclotomic::root(3, 1));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..=30u32 {
            let s: Cyclotomic = (0..n as i64).map(|k| Cyclotomic::root(n, k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn display_is_power_basis() {
        let v = int(-1) - Cyclotomic::root(3, 1);
        assert_eq!(v.to_string(), "-1 - z");
        assert_eq!(Cyclotomic::zero(5).to_string(), "0");
        let half = Cyclotomic::root(5, 2).scale(Rational::new(1, 2));
        assert_eq!(half.to_string(), "1/2*z^2");
    }

    #[test]
    fn serialization_shape() {
        let v = Cyclotomic::root(3, 2).scale(Rational::new(3, 2));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"n":3,"coeffs":[["-3","2"],["-3","2"]]}"#);
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"n":5,"coeffs":[["1","1"]]}"#).is_err());
    }
}
