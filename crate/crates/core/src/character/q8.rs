use crate::group::Q8_CLASS_COUNT;

/// Sizes of the Q8 classes `{1}, {z}, {±X}, {±Y}, {±XY}`.
pub const Q8_CLASS_SIZES: [i128; Q8_CLASS_COUNT] = [1, 1, 2, 2, 2];

// class of q^2 for q in each class: 1 and z square to 1, the rest to z
const Q8_SQUARE_CLASS: [usize; Q8_CLASS_COUNT] = [0, 0, 1, 1, 1];

/// One row of the character table of Q8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q8Character {
    pub name: &'static str,
    pub values: [i128; Q8_CLASS_COUNT],
}

impl Q8Character {
    pub fn degree(&self) -> i128 {
        self.values[0]
    }

    /// `(1/8) Σ_q θ(q^2)`, summed by class.
    pub fn indicator(&self) -> i128 {
        let total: i128 = (0..Q8_CLASS_COUNT)
            .map(|k| Q8_CLASS_SIZES[k] * self.values[Q8_SQUARE_CLASS[k]])
            .sum();
        assert_eq!(total % 8, 0, "Q8 indicator is not an integer");
        total / 8
    }
}

/// Index of ψ in [`q8_character_table`].
pub const PSI: usize = 4;

/// The five irreducible characters of Q8: the trivial character, the three
/// linear characters with kernels `<X>`, `<Y>`, `<XY>`, and ψ of degree 2.
pub fn q8_character_table() -> [Q8Character; Q8_CLASS_COUNT] {
    [
        Q8Character {
            name: "trivial",
            values: [1, 1, 1, 1, 1],
        },
        Q8Character {
            name: "kerX",
            values: [1, 1, 1, -1, -1],
        },
        Q8Character {
            name: "kerY",
            values: [1, 1, -1, 1, -1],
        },
        Q8Character {
            name: "kerXY",
            values: [1, 1, -1, -1, 1],
        },
        Q8Character {
            name: "psi",
            values: [2, -2, 0, 0, 0],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_values_and_indicator() {
        let t = q8_character_table();
        assert_eq!(t[PSI].values[1], -2);
        assert_eq!(t[PSI].indicator(), -1);
        assert_eq!(t[0].values, [1; 5]);
    }

    #[test]
    fn linear_characters_are_real_type() {
        for row in &q8_character_table()[..4] {
            assert_eq!(row.indicator(), 1, "{}", row.name);
        }
    }

    #[test]
    fn orthonormal() {
        let t = q8_character_table();
        for (i, a) in t.iter().enumerate() {
            for (j, b) in t.iter().enumerate() {
                let ip: i128 = (0..5)
                    .map(|k| Q8_CLASS_SIZES[k] * a.values[k] * b.values[k])
                    .sum();
                assert_eq!(ip, if i == j { 8 } else { 0 });
            }
        }
    }

    #[test]
    fn psi_is_the_trace_of_a_complex_model() {
        use crate::algebra::Cyclotomic;
        type M = [[Cyclotomic; 2]; 2];
        let c = Cyclotomic::from_integer;
        let i = Cyclotomic::root(4, 1);
        let mul = |a: &M, b: &M| -> M {
            let e = |r: usize, s: usize| &a[r][0] * &b[0][s] + &a[r][1] * &b[1][s];
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        };
        let x: M = [[i.clone(), c(0)], [c(0), -&i]];
        let y: M = [[c(0), c(1)], [c(-1), c(0)]];
        let one: M = [[c(1), c(0)], [c(0), c(1)]];
        let z = mul(&x, &x);
        let xy = mul(&x, &y);
        let traces: Vec<_> = [one, z, x, y, xy]
            .iter()
            .map(|m| (&m[0][0] + &m[1][1]).as_integer().unwrap())
            .collect();
        assert_eq!(traces, q8_character_table()[PSI].values.to_vec());
    }
}
