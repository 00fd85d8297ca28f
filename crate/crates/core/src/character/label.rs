use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{FpScalar, Mat2};
use crate::error::{ensure_invariant, Error, Result};
use crate::group::QuaternionSubgroup;

/// The linear character `λ_(a,b)` of `V = F_p^2`, `λ(v) = ζ_p^(a v0 + b v1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharLabel {
    a: FpScalar,
    b: FpScalar,
}

impl CharLabel {
    pub fn new(a: u32, b: u32, p: u32) -> Self {
        CharLabel {
            a: FpScalar::new(a as i64, p),
            b: FpScalar::new(b as i64, p),
        }
    }

    pub fn trivial(p: u32) -> Self {
        CharLabel::new(0, 0, p)
    }

    /// Parses `"a,b"`, rejecting entries outside `[0, p)`.
    pub fn parse(s: &str, p: u32) -> Result<Self> {
        let raw: RawLabel = s.parse()?;
        if raw.0 >= p || raw.1 >= p {
            return Err(Error::Usage(format!(
                "label entries must lie in [0, {p}), got {},{}",
                raw.0, raw.1
            )));
        }
        Ok(CharLabel::new(raw.0, raw.1, p))
    }

    pub fn prime(&self) -> u32 {
        self.a.modulus()
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn pair(&self) -> [u32; 2] {
        [self.a.value(), self.b.value()]
    }

    /// The exponent `a v0 + b v1 mod p`, so that `λ(v) = ζ_p^exponent`.
    pub fn pairing(&self, v: [u32; 2]) -> u32 {
        let p = self.prime() as u64;
        ((self.a.value() as u64 * v[0] as u64 + self.b.value() as u64 * v[1] as u64) % p) as u32
    }

    /// Label of the complex conjugate character.
    pub fn conj(&self) -> Self {
        CharLabel {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a.value(), self.b.value())
    }
}

impl fmt::Debug for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ({},{}) mod {}",
            self.a.value(),
            self.b.value(),
            self.prime()
        )
    }
}

impl Serialize for CharLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.pair().serialize(s)
    }
}

/// A label not yet tied to a prime, as written on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawLabel(pub u32, pub u32);

impl FromStr for RawLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("label must look like a,b (got {s:?})"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Ok(RawLabel(a, b))
    }
}

/// Label of `λ^M`, where `λ^M(v) := λ(M^-1 v)`; labels move by `(M^-1)^T`.
pub fn label_action(m: &Mat2, label: &CharLabel) -> CharLabel {
    let inv_t = m
        .inverse()
        .expect("label action by a singular matrix")
        .transpose();
    let [a, b] = inv_t.apply(label.pair());
    CharLabel::new(a, b, label.prime())
}

/// `{M ∈ Q : λ^M = λ}`.
pub fn stabilizer_in_q(q: &QuaternionSubgroup, label: &CharLabel) -> Vec<Mat2> {
    q.elements()
        .iter()
        .filter(|m| label_action(m, label) == *label)
        .copied()
        .collect()
}

/// The Q-orbit of a label, sorted and deduplicated.
pub fn label_orbit(q: &QuaternionSubgroup, label: &CharLabel) -> Vec<CharLabel> {
    let mut orbit: Vec<_> = q
        .elements()
        .iter()
        .map(|m| label_action(m, label))
        .collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// Lexicographically minimal representatives of the Q-orbits on the
/// nontrivial labels, in increasing order. Every orbit must have size 8.
pub fn label_orbits(q: &QuaternionSubgroup) -> Result<Vec<CharLabel>> {
    let p = q.prime();
    let mut seen = vec![false; (p * p) as usize];
    let mut reps = Vec::new();
    for a in 0..p {
        for b in 0..p {
            if (a, b) == (0, 0) || seen[(a * p + b) as usize] {
                continue;
            }
            let label = CharLabel::new(a, b, p);
            let orbit = label_orbit(q, &label);
            ensure_invariant!(
                orbit.len() == 8,
                "orbit of {label:?} has size {}, expected 8",
                orbit.len()
            );
            for l in &orbit {
                let [x, y] = l.pair();
                seen[(x * p + y) as usize] = true;
            }
            reps.push(label);
        }
    }
    Ok(reps)
}
