use serde::{Deserialize, Serialize};

use crate::error::{ensure_invariant, Result};

use super::class_function::inner_product;
use super::table::CharacterTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub name: String,
    pub multiplicity: u64,
}

/// Multiplicities of every irreducible in `χ^2`, in table row order.
///
/// Each multiplicity must be a non-negative integer, and they must account
/// for the full degree: `Σ m_θ deg θ = deg(χ)^2`.
pub fn tensor_square_decompose(table: &CharacterTable, row: usize) -> Result<Vec<Multiplicity>> {
    let chi = &table.row(row).function;
    let square = chi.product(chi);
    let mut out = Vec::with_capacity(table.rows().len());
    let mut weighted = 0i128;
    for theta in table.rows() {
        let m = inner_product(table.classes(), &square, &theta.function)?;
        let m = m.to_integer().filter(|m| *m >= 0);
        ensure_invariant!(
            m.is_some(),
            "multiplicity of {} in the square of {} is not a non-negative integer",
            theta.name,
            table.row(row).name
        );
        let m = m.unwrap_or_default();
        weighted += m * theta.degree;
        out.push(Multiplicity {
            name: theta.name.clone(),
            multiplicity: m as u64,
        });
    }
    let deg = table.row(row).degree;
    ensure_invariant!(
        weighted == deg * deg,
        "degree check failed: Σ m·deg = {weighted}, deg² = {}",
        deg * deg
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::table::character_table;

    #[test]
    fn square_of_chi_p3() {
        let t = character_table(3).unwrap();
        let m: Vec<u64> = tensor_square_decompose(&t, 5)
            .unwrap()
            .iter()
            .map(|m| m.multiplicity)
            .collect();
        assert_eq!(m, vec![1, 1, 1, 1, 2, 7]);
    }

    #[test]
    fn psi_appears_and_trivial_once() {
        for p in [5, 7, 11] {
            let t = character_table(p).unwrap();
            for row in 5..t.rows().len() {
                let m = tensor_square_decompose(&t, row).unwrap();
                assert!(m[t.psi_index()].multiplicity >= 1);
                assert_eq!(m[0].multiplicity, 1);
            }
        }
    }

    #[test]
    fn squares_of_linear_characters() {
        let t = character_table(3).unwrap();
        for row in 0..4 {
            let m = tensor_square_decompose(&t, row).unwrap();
            // every linear character of Q8 squares to the trivial one
            assert_eq!(m[0].multiplicity, 1);
            assert_eq!(m.iter().map(|m| m.multiplicity).sum::<u64>(), 1);
        }
    }
}
