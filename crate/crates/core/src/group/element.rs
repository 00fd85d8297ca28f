use std::fmt;

use crate::algebra::Mat2;
use crate::error::{Error, Result};

use super::quaternion::QuaternionSubgroup;

/// An element `(v, M)` of `V ⋊ Q` with `v ∈ F_p^2` and `M ∈ Q ≤ SL_2(p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    v: [u32; 2],
    m: Mat2,
}

impl GroupElement {
    pub fn new(v: [u32; 2], m: Mat2) -> Self {
        let p = m.modulus();
        GroupElement {
            v: [v[0] % p, v[1] % p],
            m,
        }
    }

    pub fn identity(p: u32) -> Self {
        GroupElement::new([0, 0], Mat2::identity(p))
    }

    /// The translation `(v, I)`.
    pub fn translation(v: [u32; 2], p: u32) -> Self {
        GroupElement::new(v, Mat2::identity(p))
    }

    /// The element `(0, M)`.
    pub fn linear(m: Mat2) -> Self {
        GroupElement::new([0, 0], m)
    }

    pub fn prime(&self) -> u32 {
        self.m.modulus()
    }

    pub fn v(&self) -> [u32; 2] {
        self.v
    }

    pub fn m(&self) -> Mat2 {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.v == [0, 0] && self.m == Mat2::identity(self.prime())
    }

    /// True when the element lies in the normal subgroup `V`.
    pub fn in_v(&self) -> bool {
        self.m == Mat2::identity(self.prime())
    }

    /// Canonical 6-tuple `(v0, v1, a, b, c, d)`.
    pub fn encoding(&self) -> [u32; 6] {
        let [a, b, c, d] = self.m.entries();
        [self.v[0], self.v[1], a, b, c, d]
    }

    /// `(v1, M1)(v2, M2) = (v1 + M1 v2, M1 M2)`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let p = self.prime();
        assert_eq!(p, other.prime(), "mixed primes in group product");
        let w = self.m.apply(other.v);
        GroupElement {
            v: [(self.v[0] + w[0]) % p, (self.v[1] + w[1]) % p],
            m: self.m * other.m,
        }
    }

    /// `(v, M)^-1 = (-M^-1 v, M^-1)`.
    pub fn inv(&self) -> GroupElement {
        let p = self.prime();
        let m_inv = self
            .m
            .inverse()
            .expect("group elements carry invertible matrices");
        let w = m_inv.apply(self.v);
        GroupElement {
            v: [(p - w[0]) % p, (p - w[1]) % p],
            m: m_inv,
        }
    }

    /// `g h g^-1`, the conjugate of `h` by `self`.
    pub fn conjugate(&self, h: &GroupElement) -> GroupElement {
        self.mul(h).mul(&self.inv())
    }

    pub fn square(&self) -> GroupElement {
        self.mul(self)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.v, self.m)
    }
}

/// The full element list of `G = V ⋊ Q`, identity first and then
/// lexicographic on the canonical encoding.
#[derive(Clone, Debug)]
pub struct Group {
    q: QuaternionSubgroup,
    elements: Vec<GroupElement>,
    // Q sorted lexicographically by entries
    q_sorted: [Mat2; 8],
    // lexicographic position of the identity before moving it to the front
    identity_lex: usize,
}

impl Group {
    pub fn new(q: QuaternionSubgroup) -> Self {
        let p = q.prime();
        let mut q_sorted = *q.elements();
        q_sorted.sort_by_key(|m| m.entries());
        let mut lex = Vec::with_capacity(8 * (p * p) as usize);
        for v0 in 0..p {
            for v1 in 0..p {
                for m in &q_sorted {
                    lex.push(GroupElement::new([v0, v1], *m));
                }
            }
        }
        let identity_lex = lex
            .iter()
            .position(GroupElement::is_identity)
            .expect("identity is enumerated");
        let id = lex.remove(identity_lex);
        lex.insert(0, id);
        Group {
            q,
            elements: lex,
            q_sorted,
            identity_lex,
        }
    }

    pub fn prime(&self) -> u32 {
        self.q.prime()
    }

    pub fn quaternion(&self) -> &QuaternionSubgroup {
        &self.q
    }

    /// `|G| = 8 p^2`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> GroupElement {
        self.elements[index]
    }

    /// Position of `g` in [`elements`](Self::elements), computed directly
    /// from its encoding.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let p = self.prime() as usize;
        let rank = self
            .q_sorted
            .iter()
            .position(|m| *m == g.m)
            .unwrap_or_else(|| panic!("{g:?} is not in this group"));
        let lex = (g.v[0] as usize * p + g.v[1] as usize) * 8 + rank;
        match lex.cmp(&self.identity_lex) {
            std::cmp::Ordering::Less => lex + 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => lex,
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.prime() == self.prime() && self.q.contains(&g.m)
    }

    /// Generators `(e1, I), (e2, I), (0, X), (0, Y)`.
    pub fn generators(&self) -> [GroupElement; 4] {
        let p = self.prime();
        [
            GroupElement::translation([1, 0], p),
            GroupElement::translation([0, 1], p),
            GroupElement::linear(self.q.x()),
            GroupElement::linear(self.q.y()),
        ]
    }

    /// Parses a canonical 6-tuple back into an element of this group.
    pub fn element_from_encoding(&self, enc: [u32; 6]) -> Result<GroupElement> {
        let p = self.prime();
        if enc.iter().any(|&x| x >= p) {
            return Err(Error::Usage(format!(
                "encoding {enc:?} has entries outside [0, {p})"
            )));
        }
        let m = Mat2::new(
            enc[2] as i64,
            enc[3] as i64,
            enc[4] as i64,
            enc[5] as i64,
            p,
        );
        if !self.q.contains(&m) {
            return Err(Error::Usage(format!(
                "{m} is not in the quaternion subgroup"
            )));
        }
        Ok(GroupElement::new([enc[0], enc[1]], m))
    }
}

/// Every element of `(C_p x C_p) ⋊ Q` for the canonical quaternion subgroup.
pub fn enumerate_group(p: u32) -> Result<Group> {
    crate::prime::validate_prime(p, u32::MAX)?;
    Ok(Group::new(QuaternionSubgroup::canonical(p)?))
}
