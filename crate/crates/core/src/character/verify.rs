//! End-to-end certification for one prime and one label: the induced
//! character is irreducible, real with indicator 1, and its square contains
//! the inflated ψ, whose indicator is -1.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{count_square_roots_of_identity, ClassTable};
use crate::prime::{validate_prime, DEFAULT_PRIME_BOUND};

use super::class_function::{induce_from_v, inner_product};
use super::indicator::{fs_indicator, fs_indicator_direct};
use super::label::{label_action, stabilizer_in_q, CharLabel};
use super::table::{character_table, CharacterTable};
use super::tensor::{tensor_square_decompose, Multiplicity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionGenerators {
    pub x: [u32; 4],
    pub y: [u32; 4],
}

/// The indicator of χ evaluated on `H = V<z>`, the only place `g^2` can land
/// in `V`: `(|V| χ(1) + |V| [χ_V, 1_V]) / |G|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorBreakdown {
    pub v_order: u64,
    pub group_order: u64,
    /// `|V| χ(1)`, from the elements `vz` with `(vz)^2 = 1`.
    pub v_times_degree: i128,
    /// `[χ_V, 1_V]`, exact.
    pub restriction_trivial_multiplicity: String,
    /// `|V| [χ_V, 1_V]`, from `v ↦ v^2` permuting `V`.
    pub v_times_restriction: String,
    /// The quotient, which must equal the indicator.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumRule {
    /// `Σ ν₂(θ) θ(1)` over the table.
    pub indicator_degree_sum: i128,
    /// `#{g : g^2 = 1}`, counted element by element.
    pub involution_count: u64,
    /// `1 + p^2`.
    pub predicted: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareLocus {
    /// `#{g : g^2 ∈ V}`.
    pub size: u64,
    /// `|H| = 2p^2`.
    pub expected: u64,
    /// The set itself equals `H = V<z>`, element for element.
    pub equals_h: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub first_orthogonality: bool,
    pub second_orthogonality: bool,
    pub degree_sum: bool,
    pub sum_rule: SumRule,
    pub square_locus: SquareLocus,
    /// Every `(v, z)` squares to the identity.
    pub vz_involutions: bool,
}

impl Checks {
    pub fn all_pass(&self) -> bool {
        self.first_orthogonality
            && self.second_orthogonality
            && self.degree_sum
            && self.sum_rule.holds
            && self.square_locus.holds
            && self.vz_involutions
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    /// `<χ, χ> = 1`.
    pub irreducible: bool,
    /// `ν₂(χ) = 1` by both the class formula and the element-wise sum.
    pub indicator_one: bool,
    /// `[χ^2, ψ] ≥ 1`.
    pub contains_psi: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub table_ms: f64,
    pub verify_ms: f64,
}

/// Machine-readable verdict for one `(p, λ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub prime: u32,
    pub label: [u32; 2],
    pub quaternion: QuaternionGenerators,
    pub group_order: u64,
    pub class_count: usize,
    pub degrees: Vec<i128>,
    pub indicators: Vec<i128>,
    /// Name of the table row equal to `λ^G`.
    pub chi_row: String,
    pub chi_degree: i128,
    pub stabilizer_order: usize,
    /// `λ^z = conj(λ) ≠ λ`.
    pub z_conjugates_label: bool,
    pub chi_norm: String,
    pub chi_vanishes_off_v: bool,
    pub nu2: i128,
    pub nu2_direct: i128,
    pub indicator_breakdown: IndicatorBreakdown,
    pub psi_indicator: i128,
    pub psi_multiplicity: u64,
    pub tensor_square: Vec<Multiplicity>,
    pub checks: Checks,
    pub claims: Claims,
    pub pass: bool,
    pub timings: Timings,
}

/// Smallest nontrivial label in lexicographic order, `(0, 1)`.
pub fn default_label(p: u32) -> CharLabel {
    CharLabel::new(0, 1, p)
}

/// Runs the whole pipeline for `p` (bounded by [`DEFAULT_PRIME_BOUND`]).
/// `label` defaults to [`default_label`].
pub fn verify_prime(p: u32, label: Option<CharLabel>) -> Result<Report> {
    validate_prime(p, DEFAULT_PRIME_BOUND)?;
    let start = Instant::now();
    let table = character_table(p)?;
    let table_ms = start.elapsed().as_secs_f64() * 1e3;
    let label = label.unwrap_or_else(|| default_label(p));
    let mut report = verify_with_table(&table, &label)?;
    report.timings.table_ms = table_ms;
    Ok(report)
}

fn square_locus(ct: &ClassTable) -> SquareLocus {
    let group = ct.group();
    let z = group.quaternion().z();
    let p = ct.prime() as u64;
    let mut size = 0u64;
    let mut equals_h = true;
    for g in group.elements() {
        let lands_in_v = g.square().in_v();
        let in_h = g.in_v() || g.m() == z;
        size += lands_in_v as u64;
        equals_h &= lands_in_v == in_h;
    }
    let expected = 2 * p * p;
    SquareLocus {
        size,
        expected,
        equals_h,
        holds: equals_h && size == expected,
    }
}

/// Certifies one label against an already-built table.
pub fn verify_with_table(table: &CharacterTable, label: &CharLabel) -> Result<Report> {
    let start = Instant::now();
    let ct = table.classes();
    let p = ct.prime();
    if label.prime() != p {
        return Err(Error::Usage(format!(
            "label is over F_{} but the group is over F_{p}",
            label.prime()
        )));
    }
    if label.is_trivial() {
        return Err(Error::Usage("label must be nontrivial".into()));
    }
    let q = ct.group().quaternion();
    let group_order = ct.group_order() as u64;
    let v_order = (p as u64) * (p as u64);

    let stabilizer = stabilizer_in_q(q, label);
    let zl = label_action(&q.z(), label);
    let z_conjugates_label = zl == label.conj() && zl != *label;

    let chi = induce_from_v(label, ct)?;
    let chi_row = table
        .induced_row_for(label)
        .ok_or_else(|| Error::Invariant(format!("no table row for {label:?}")))?;
    if table.row(chi_row).function != chi {
        return Err(Error::Invariant(format!(
            "λ^G for {label:?} differs from its orbit row {}",
            table.row(chi_row).name
        )));
    }
    let norm = inner_product(ct, &chi, &chi)?;
    let chi_vanishes_off_v = (0..ct.len()).all(|k| ct.in_v(k) || chi.value(k).is_zero());

    let nu2 = fs_indicator(ct, &chi)?;
    let nu2_direct = fs_indicator_direct(ct, &chi)?;

    let chi_degree = chi.degree().unwrap_or(0);
    let restriction_sum: Cyclotomic = (0..ct.len())
        .filter(|&k| ct.in_v(k))
        .map(|k| chi.value(k).scale(Rational::from(ct.size(k) as i128)))
        .sum();
    let v_times_restriction = restriction_sum
        .as_rational()
        .ok_or_else(|| Error::Invariant("Σ_{v ∈ V} χ(v) is not rational".into()))?;
    let restriction_mult = v_times_restriction / Rational::from(v_order as i128);
    let v_times_degree = v_order as i128 * chi_degree;
    let h_value = (Rational::from(v_times_degree) + v_times_restriction)
        / Rational::from(group_order as i128);

    let tensor_square = tensor_square_decompose(table, chi_row)?;
    let psi = table.psi_index();
    let psi_multiplicity = tensor_square[psi].multiplicity;

    let indicator_degree_sum: i128 = table.rows().iter().map(|r| r.indicator * r.degree).sum();
    let involution_count = count_square_roots_of_identity(ct) as u64;
    let sum_rule = SumRule {
        indicator_degree_sum,
        involution_count,
        predicted: 1 + v_order,
        holds: indicator_degree_sum == involution_count as i128 && involution_count == 1 + v_order,
    };
    let degree_sum = table
        .rows()
        .iter()
        .map(|r| r.degree * r.degree)
        .sum::<i128>()
        == group_order as i128;
    let vz_involutions = (0..p).all(|a| {
        (0..p).all(|b| {
            crate::group::GroupElement::new([a, b], q.z())
                .square()
                .is_identity()
        })
    });

    let checks = Checks {
        // CharacterTable::build refuses to return a non-orthonormal table
        first_orthogonality: true,
        second_orthogonality: table.second_orthogonality_holds(),
        degree_sum,
        sum_rule,
        square_locus: square_locus(ct),
        vz_involutions,
    };
    let claims = Claims {
        irreducible: norm == Rational::ONE,
        indicator_one: nu2 == 1 && nu2_direct == 1 && h_value == Rational::ONE,
        contains_psi: psi_multiplicity >= 1,
    };
    let pass = claims.irreducible
        && claims.indicator_one
        && claims.contains_psi
        && stabilizer.len() == 1
        && z_conjugates_label
        && chi_vanishes_off_v
        && checks.all_pass();

    Ok(Report {
        prime: p,
        label: label.pair(),
        quaternion: QuaternionGenerators {
            x: q.x().entries(),
            y: q.y().entries(),
        },
        group_order,
        class_count: ct.len(),
        degrees: table.rows().iter().map(|r| r.degree).collect(),
        indicators: table.rows().iter().map(|r| r.indicator).collect(),
        chi_row: table.row(chi_row).name.clone(),
        chi_degree,
        stabilizer_order: stabilizer.len(),
        z_conjugates_label,
        chi_norm: norm.to_string(),
        chi_vanishes_off_v,
        nu2,
        nu2_direct,
        indicator_breakdown: IndicatorBreakdown {
            v_order,
            group_order,
            v_times_degree,
            restriction_trivial_multiplicity: restriction_mult.to_string(),
            v_times_restriction: v_times_restriction.to_string(),
            value: h_value.to_string(),
        },
        psi_indicator: table.row(psi).indicator,
        psi_multiplicity,
        tensor_square,
        checks,
        claims,
        pass,
        timings: Timings {
            table_ms: 0.0,
            verify_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_default_passes() {
        let r = verify_prime(3, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.group_order, 72);
        assert_eq!(r.psi_multiplicity, 2);
        assert_eq!(r.checks.square_locus.size, 18);
        assert_eq!(r.indicator_breakdown.v_times_degree, 72);
        assert_eq!(r.indicator_breakdown.v_times_restriction, "0");
        assert_eq!(r.chi_norm, "1");
    }

    #[test]
    fn every_orbit_rep_p5() {
        let t = character_table(5).unwrap();
        for row in &t.rows()[5..] {
            let super::super::table::RowOrigin::Induced(l) = row.origin else {
                unreachable!()
            };
            assert!(verify_with_table(&t, &l).unwrap().pass);
        }
    }

    #[test]
    fn non_representative_labels_find_their_row() {
        let t = character_table(5).unwrap();
        let r = verify_with_table(&t, &CharLabel::new(3, 4, 5)).unwrap();
        assert!(r.pass);
        assert!(r.chi_row.starts_with("chi["));
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(verify_prime(2, None), Err(Error::Usage(_))));
        assert!(matches!(verify_prime(9, None), Err(Error::Usage(_))));
        assert!(matches!(
            verify_prime(3, Some(CharLabel::trivial(3))),
            Err(Error::Usage(m)) if m == "label must be nontrivial"
        ));
        assert!(matches!(
            verify_prime(3, Some(CharLabel::new(1, 0, 5))),
            Err(Error::Usage(_))
        ));
    }
}
