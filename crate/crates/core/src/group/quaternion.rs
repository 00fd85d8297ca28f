use crate::algebra::Mat2;
use crate::error::{ensure_invariant, Result};

/// Number of conjugacy classes of Q8.
pub const Q8_CLASS_COUNT: usize = 5;

/// Q8 class labels in table column order.
pub const Q8_CLASS_NAMES: [&str; Q8_CLASS_COUNT] = ["1", "z", "±X", "±Y", "±XY"];

/// A quaternion subgroup of order 8 inside SL_2(p).
///
/// `elements` is stored in the fixed order `[I, z, X, -X, Y, -Y, XY, -XY]`
/// where `z = -I = X^2 = Y^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionSubgroup {
    p: u32,
    x: Mat2,
    y: Mat2,
    elements: [Mat2; 8],
}

impl QuaternionSubgroup {
    /// The subgroup fixed for every computation in this crate:
    /// `X = [[0, -1], [1, 0]]` and `Y = [[a, b], [b, -a]]` where `(a, b)` is
    /// the lexicographically smallest solution of `a^2 + b^2 = -1 (mod p)`.
    pub fn canonical(p: u32) -> Result<Self> {
        let x = Mat2::new(0, -1, 1, 0, p);
        let (a, b) = smallest_sum_of_squares_minus_one(p);
        let y = Mat2::new(a as i64, b as i64, b as i64, -(a as i64), p);
        QuaternionSubgroup::from_generators(x, y)
    }

    /// A quaternion subgroup different from [`canonical`](Self::canonical),
    /// obtained by conjugating it with an elementary matrix of SL_2(p).
    /// `None` when every such conjugate coincides with the canonical one
    /// (for p = 3 the Q8 in SL_2(3) is normal).
    pub fn alternative(p: u32) -> Result<Option<Self>> {
        let base = QuaternionSubgroup::canonical(p)?;
        for t in 1..p as i64 {
            for conj in [Mat2::new(1, t, 0, 1, p), Mat2::new(1, 0, t, 1, p)] {
                let inv = conj.inverse()?;
                let alt =
                    QuaternionSubgroup::from_generators(conj * base.x * inv, conj * base.y * inv)?;
                if !alt.same_subgroup(&base) {
                    return Ok(Some(alt));
                }
            }
        }
        Ok(None)
    }

    /// Builds `<X, Y>` and checks the Q8 presentation
    /// `X^4 = 1, X^2 = Y^2, Y X Y^-1 = X^-1`, determinant one, eight
    /// distinct elements, and that `-I` is the only involution.
    pub fn from_generators(x: Mat2, y: Mat2) -> Result<Self> {
        let p = x.modulus();
        let id = Mat2::identity(p);
        let z = Mat2::minus_identity(p);
        ensure_invariant!(x.pow(4) == id, "X^4 != I for {x:?}");
        ensure_invariant!(x.pow(2) == z, "X^2 != -I for {x:?}");
        ensure_invariant!(y.pow(2) == z, "Y^2 != -I for {y:?}");
        let x_inv = x.inverse()?;
        ensure_invariant!(y * x * y.inverse()? == x_inv, "Y X Y^-1 != X^-1");
        let xy = x * y;
        let elements = [id, z, x, -x, y, -y, xy, -xy];
        for (i, m) in elements.iter().enumerate() {
            ensure_invariant!(m.det().value() == 1, "det {m:?} != 1");
            ensure_invariant!(
                !elements[..i].contains(m),
                "quaternion elements not distinct at {m:?}"
            );
        }
        let involutions: Vec<_> = elements
            .iter()
            .filter(|m| **m != id && m.pow(2) == id)
            .collect();
        ensure_invariant!(
            involutions == [&z],
            "expected -I as the unique involution, found {involutions:?}"
        );
        Ok(QuaternionSubgroup { p, x, y, elements })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn x(&self) -> Mat2 {
        self.x
    }

    pub fn y(&self) -> Mat2 {
        self.y
    }

    /// The central involution `-I`.
    pub fn z(&self) -> Mat2 {
        self.elements[1]
    }

    pub fn elements(&self) -> &[Mat2; 8] {
        &self.elements
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.elements.contains(m)
    }

    /// Position of `m` in [`elements`](Self::elements).
    pub fn position(&self, m: &Mat2) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// Q8 class of `m` in the order `{1}, {z}, {±X}, {±Y}, {±XY}`.
    pub fn class_of(&self, m: &Mat2) -> Option<usize> {
        self.position(m).map(|i| match i {
            0 => 0,
            1 => 1,
            i => 1 + i / 2,
        })
    }

    fn same_subgroup(&self, other: &QuaternionSubgroup) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }
}

fn smallest_sum_of_squares_minus_one(p: u32) -> (u32, u32) {
    let target = p as u64 - 1;
    for a in 0..p as u64 {
        for b in 0..p as u64 {
            if (a * a + b * b) % p as u64 == target {
                return (a as u32, b as u32);
            }
        }
    }
    unreachable!("a^2 + b^2 = -1 is solvable modulo every odd prime")
}
