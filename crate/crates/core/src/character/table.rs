use std::sync::OnceLock;

use crate::algebra::{Cyclotomic, Rational};
use crate::error::{ensure_invariant, Result};
use crate::group::{conjugacy_classes, ClassTable, Group, QuaternionSubgroup};

use super::class_function::{induce_from_v, inflate_from_q, inner_product, ClassFunction};
use super::indicator::fs_indicator;
use super::label::{label_orbits, CharLabel};
use super::q8::{q8_character_table, PSI};

/// Where an irreducible character came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOrigin {
    /// Inflated from the given row of the Q8 table.
    Inflated(usize),
    /// Induced from the given orbit-representative label of `V`.
    Induced(CharLabel),
}

#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub name: String,
    pub origin: RowOrigin,
    pub function: ClassFunction,
    pub degree: i128,
    pub indicator: i128,
}

/// `Irr(G)`: five characters inflated from `Q` followed by one induced
/// character per Q-orbit of nontrivial labels.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: ClassTable,
    rows: Vec<CharacterRow>,
    second_orthogonality: OnceLock<bool>,
}

/// Row name of an induced character.
pub fn induced_row_name(label: &CharLabel) -> String {
    let [a, b] = label.pair();
    format!("chi[{a},{b}]")
}

impl CharacterTable {
    /// Builds and certifies the table: row count equals class count,
    /// `Σ deg² = |G|`, and the rows are orthonormal. Indicators come from
    /// the square-map formula.
    pub fn build(classes: ClassTable) -> Result<Self> {
        let mut rows = Vec::with_capacity(classes.len());
        for (i, theta) in q8_character_table().iter().enumerate() {
            let function = inflate_from_q(theta, &classes);
            rows.push(CharacterRow {
                name: theta.name.to_string(),
                origin: RowOrigin::Inflated(i),
                degree: theta.degree(),
                indicator: 0,
                function,
            });
        }
        for label in label_orbits(classes.group().quaternion())? {
            let function = induce_from_v(&label, &classes)?;
            rows.push(CharacterRow {
                name: induced_row_name(&label),
                origin: RowOrigin::Induced(label),
                degree: function.degree().unwrap_or(0),
                indicator: 0,
                function,
            });
        }

        ensure_invariant!(
            rows.len() == classes.len(),
            "{} characters for {} classes",
            rows.len(),
            classes.len()
        );
        let degree_sum: i128 = rows.iter().map(|r| r.degree * r.degree).sum();
        ensure_invariant!(
            degree_sum == classes.group_order() as i128,
            "sum of squared degrees {degree_sum} != |G| = {}",
            classes.group_order()
        );
        for row in &mut rows {
            ensure_invariant!(
                row.function.degree() == Some(row.degree),
                "row {} degree does not match its value at 1",
                row.name
            );
            row.indicator = fs_indicator(&classes, &row.function)?;
            ensure_invariant!(
                (-1..=1).contains(&row.indicator),
                "row {} has indicator {}",
                row.name,
                row.indicator
            );
        }
        let table = CharacterTable {
            classes,
            rows,
            second_orthogonality: OnceLock::new(),
        };
        table.check_first_orthogonality()?;
        Ok(table)
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn group(&self) -> &Group {
        self.classes.group()
    }

    pub fn prime(&self) -> u32 {
        self.classes.prime()
    }

    pub fn rows(&self) -> &[CharacterRow] {
        &self.rows
    }

    pub fn row(&self, index: usize) -> &CharacterRow {
        &self.rows[index]
    }

    pub fn row_by_name(&self, name: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.name == name)
    }

    /// Index of the inflated ψ, the unique degree-2 row.
    pub fn psi_index(&self) -> usize {
        PSI
    }

    /// Row induced from the orbit containing `label`, if the label is nontrivial.
    pub fn induced_row_for(&self, label: &CharLabel) -> Option<usize> {
        let orbit = super::label::label_orbit(self.group().quaternion(), label);
        self.rows.iter().position(|r| match r.origin {
            RowOrigin::Induced(rep) => orbit.contains(&rep),
            RowOrigin::Inflated(_) => false,
        })
    }

    /// `<row_i, row_j> = δ_ij` for every pair.
    pub fn check_first_orthogonality(&self) -> Result<()> {
        for i in 0..self.rows.len() {
            for j in i..self.rows.len() {
                let ip = inner_product(
                    &self.classes,
                    &self.rows[i].function,
                    &self.rows[j].function,
                )?;
                let expected = if i == j {
                    Rational::ONE
                } else {
                    Rational::ZERO
                };
                ensure_invariant!(
                    ip == expected,
                    "<{}, {}> = {ip}",
                    self.rows[i].name,
                    self.rows[j].name
                );
            }
        }
        Ok(())
    }

    /// Memoized outcome of [`Self::check_second_orthogonality`].
    pub fn second_orthogonality_holds(&self) -> bool {
        *self
            .second_orthogonality
            .get_or_init(|| self.check_second_orthogonality().is_ok())
    }

    /// `Σ_χ χ(K) conj(χ(K')) = δ_KK' |C_G(K)|` for every pair of classes.
    pub fn check_second_orthogonality(&self) -> Result<()> {
        let n = self.classes.len();
        let conj: Vec<Vec<Cyclotomic>> = self
            .rows
            .iter()
            .map(|r| r.function.values().iter().map(Cyclotomic::conj).collect())
            .collect();
        for k in 0..n {
            for l in k..n {
                let s: Cyclotomic = self
                    .rows
                    .iter()
                    .zip(&conj)
                    .map(|(r, c)| r.function.value(k) * &c[l])
                    .sum();
                let expected = if k == l {
                    self.classes.centralizer_order(k) as i128
                } else {
                    0
                };
                ensure_invariant!(
                    s.as_integer() == Some(expected),
                    "column sum for classes {k}, {l} is {s}, expected {expected}"
                );
            }
        }
        Ok(())
    }
}

/// Character table of `(C_p x C_p) ⋊ Q` for the canonical `Q`.
pub fn character_table(p: u32) -> Result<CharacterTable> {
    CharacterTable::build(conjugacy_classes(p)?)
}

/// Character table for a specific quaternion subgroup.
pub fn character_table_for(q: QuaternionSubgroup) -> Result<CharacterTable> {
    CharacterTable::build(ClassTable::new(Group::new(q))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_table() {
        let t = character_table(3).unwrap();
        let degrees: Vec<_> = t.rows().iter().map(|r| r.degree).collect();
        let indicators: Vec<_> = t.rows().iter().map(|r| r.indicator).collect();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2, 8]);
        assert_eq!(indicators, vec![1, 1, 1, 1, -1, 1]);
        assert_eq!(t.row(t.psi_index()).name, "psi");
        assert_eq!(t.row(5).name, "chi[0,1]");
    }

    #[test]
    fn p5_table() {
        let t = character_table(5).unwrap();
        assert_eq!(t.rows().len(), 8);
        let sq: i128 = t.rows().iter().map(|r| r.degree * r.degree).sum();
        assert_eq!(sq, 200);
        t.check_second_orthogonality().unwrap();
    }

    #[test]
    fn row_counts() {
        for p in [3u32, 5, 7, 11, 13] {
            let t = character_table(p).unwrap();
            assert_eq!(t.rows().len(), 5 + ((p * p - 1) / 8) as usize);
        }
    }

    #[test]
    fn induced_row_lookup() {
        let t = character_table(5).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let l = CharLabel::new(a, b, 5);
                let row = t.induced_row_for(&l);
                assert_eq!(row.is_some(), !l.is_trivial());
            }
        }
    }
}
