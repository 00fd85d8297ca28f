//! The invariant suites of every module, runnable for one prime.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{cyclotomic_polynomial, Cyclotomic, Mat2};
use crate::character::{
    character_table, default_label, fs_indicator_direct, induce_by_averaging, label_orbit,
    label_orbits, stabilizer_in_q, tensor_square_decompose, verify_with_table, CharLabel,
    CharacterTable, RowOrigin,
};
use crate::error::{Error, Result};
use crate::group::{count_square_roots_of_identity, square_map, GroupElement};
use crate::prime::validate_prime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SelftestOutcome {
    pub prime: u32,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
}

impl SelftestOutcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Recorder(Vec<CheckResult>);

impl Recorder {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn result(&mut self, name: &str, r: Result<String>) {
        match r {
            Ok(detail) => self.check(name, true, detail),
            Err(e) => self.check(name, false, e.to_string()),
        }
    }
}

fn superscript_two(p: u32) -> String {
    format!("{p}²")
}

/// Runs every invariant check for `p`. Only a bad prime is an `Err`;
/// failing checks are reported in the outcome.
pub fn run_selftest(p: u32, prime_bound: u32) -> Result<SelftestOutcome> {
    validate_prime(p, prime_bound)?;
    let start = Instant::now();
    let mut rec = Recorder(Vec::new());

    algebra_checks(p, &mut rec);

    match character_table(p) {
        Ok(table) => table_checks(&table, &mut rec),
        Err(e) => rec.check("character table construction", false, e.to_string()),
    }

    Ok(SelftestOutcome {
        prime: p,
        checks: rec.0,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn algebra_checks(p: u32, rec: &mut Recorder) {
    let phi = cyclotomic_polynomial(p);
    rec.check(
        "cyclotomic polynomial",
        phi.len() == p as usize && phi.iter().all(|&c| c == 1),
        format!("Φ_{p} = 1 + x + … + x^{}", p - 1),
    );
    let roots: Vec<Cyclotomic> = (0..p as i64).map(|k| Cyclotomic::root(p, k)).collect();
    let sum: Cyclotomic = roots.iter().cloned().sum();
    rec.check(
        "roots of unity sum to zero",
        sum.is_zero(),
        format!("n = {p}"),
    );
    let conj_ok = roots
        .iter()
        .all(|r| r.conj().conj() == *r && (r * &r.conj()).as_integer() == Some(1))
        && roots
            .iter()
            .zip(roots.iter().rev())
            .all(|(a, b)| (a * b).conj() == a.conj() * b.conj());
    rec.check(
        "conjugation",
        conj_ok,
        "involutive, multiplicative, |ζ|² = 1",
    );
}

fn table_checks(table: &CharacterTable, rec: &mut Recorder) {
    let ct = table.classes();
    let group = ct.group();
    let q = group.quaternion();
    let p = ct.prime();
    let n = group.order();
    let elements = group.elements();

    let id = Mat2::identity(p);
    let involutions: Vec<_> = q
        .elements()
        .iter()
        .filter(|m| **m != id && m.pow(2) == id)
        .collect();
    rec.check(
        "quaternion subgroup",
        q.elements().len() == 8 && involutions == [&q.z()],
        format!("X = {}, Y = {}, unique involution -I", q.x(), q.y()),
    );

    // deterministic spread of triples; inverses and identity on everything
    let mut axioms = true;
    for i in 0..n {
        let (a, b, c) = (
            elements[i],
            elements[(7 * i + 3) % n],
            elements[(13 * i + 5) % n],
        );
        axioms &= a.mul(&b).mul(&c) == a.mul(&b.mul(&c));
        axioms &= a.mul(&a.inv()).is_identity() && a.inv().mul(&a).is_identity();
        axioms &= GroupElement::identity(p).mul(&a) == a;
    }
    rec.check("group axioms", axioms, format!("{n} triples, all inverses"));

    let z = GroupElement::linear(q.z());
    let inverts = (0..p).all(|a| {
        (0..p).all(|b| {
            z.conjugate(&GroupElement::translation([a, b], p))
                == GroupElement::translation([(p - a) % p, (p - b) % p], p)
        })
    });
    rec.check("z inverts V", inverts, format!("all {} vectors", p * p));

    let sizes_ok = ct.sizes().iter().sum::<usize>() == n
        && (0..ct.len())
            .all(|k| n.is_multiple_of(ct.size(k)) && ct.size(k) * ct.centralizer_order(k) == n);
    rec.check(
        "class sizes",
        sizes_ok,
        format!("{} classes, sizes sum to {n}", ct.len()),
    );

    let expected_classes = 5 + ((p * p - 1) / 8) as usize;
    rec.check(
        "class count",
        ct.len() == expected_classes,
        format!("{} = 5 + ({}−1)/8", ct.len(), superscript_two(p)),
    );

    let sq = square_map(ct);
    let agree = elements
        .iter()
        .enumerate()
        .filter(|(i, g)| sq[ct.class_of_index(*i)] == ct.class_of(&g.square()))
        .count();
    rec.check(
        "square map",
        agree == n,
        format!("{agree}/{n} elements agree with their class"),
    );

    let involution_count = count_square_roots_of_identity(ct);
    rec.check(
        "involutions",
        involution_count == 1 + (p * p) as usize,
        format!("{involution_count} = 1 + {}", superscript_two(p)),
    );

    let stab_ok = (0..p).all(|a| {
        (0..p).all(|b| (a, b) == (0, 0) || stabilizer_in_q(q, &CharLabel::new(a, b, p)).len() == 1)
    });
    rec.check(
        "stabilizers",
        stab_ok,
        format!("Q_λ = 1 for all {} nontrivial λ", p * p - 1),
    );

    rec.result(
        "orbit count",
        label_orbits(q).and_then(|reps| {
            let want = ((p * p - 1) / 8) as usize;
            let sized = reps.iter().all(|r| label_orbit(q, r).len() == 8);
            if reps.len() == want && sized {
                Ok(format!(
                    "{} = ({}−1)/8, each of size 8",
                    reps.len(),
                    superscript_two(p)
                ))
            } else {
                Err(Error::Invariant(format!(
                    "{} orbits, expected {want}",
                    reps.len()
                )))
            }
        }),
    );

    rec.result(
        "first orthogonality",
        table
            .check_first_orthogonality()
            .map(|_| format!("{} rows", table.rows().len())),
    );
    rec.result(
        "second orthogonality",
        table
            .check_second_orthogonality()
            .map(|_| format!("{} class pairs", ct.len() * (ct.len() + 1) / 2)),
    );

    let nu_deg: i128 = table.rows().iter().map(|r| r.indicator * r.degree).sum();
    rec.check(
        "sum rule",
        nu_deg == involution_count as i128 && involution_count == 1 + (p * p) as usize,
        format!("{nu_deg} = 1 + {}", superscript_two(p)),
    );

    let mut fs_detail = Vec::new();
    let fs_ok = table
        .rows()
        .iter()
        .all(|r| match fs_indicator_direct(ct, &r.function) {
            Ok(d) if d == r.indicator => true,
            Ok(d) => {
                fs_detail.push(format!("{}: {} vs {d}", r.name, r.indicator));
                false
            }
            Err(e) => {
                fs_detail.push(e.to_string());
                false
            }
        });
    rec.check(
        "indicator oracle",
        fs_ok,
        if fs_ok {
            "class formula = element-wise sum on every row".to_string()
        } else {
            fs_detail.join("; ")
        },
    );

    let induced: Vec<_> = table
        .rows()
        .iter()
        .filter_map(|r| match r.origin {
            RowOrigin::Induced(l) => Some((r, l)),
            RowOrigin::Inflated(_) => None,
        })
        .collect();
    let avg_ok = induced
        .iter()
        .all(|(r, l)| induce_by_averaging(l, ct) == r.function);
    rec.check(
        "induction oracle",
        avg_ok,
        format!("orbit sums = averaging formula on {} rows", induced.len()),
    );

    let vanish = induced
        .iter()
        .all(|(r, _)| (0..ct.len()).all(|k| ct.in_v(k) || r.function.value(k).is_zero()));
    rec.check("vanishing off V", vanish, "χ(g) = 0 for g ∉ V");

    let minus: Vec<_> = table.rows().iter().filter(|r| r.indicator == -1).collect();
    let others_one = table
        .rows()
        .iter()
        .all(|r| r.indicator == 1 || r.name == "psi");
    rec.check(
        "quaternionic rows",
        minus.len() == 1 && minus[0].name == "psi" && others_one,
        format!("{} row(s) with ν₂ = −1", minus.len()),
    );

    let fields_ok = table.rows().iter().all(|r| {
        r.function.values_in_prime_field()
            && match r.origin {
                RowOrigin::Inflated(_) => {
                    r.function.values().iter().all(|v| v.as_integer().is_some())
                }
                RowOrigin::Induced(_) => true,
            }
    });
    rec.check("value fields", fields_ok, format!("all values in Q(ζ_{p})"));

    if let Some((row, _)) = induced.first() {
        let idx = table
            .rows()
            .iter()
            .position(|r| r.name == row.name)
            .unwrap_or_default();
        rec.result(
            "tensor square",
            tensor_square_decompose(table, idx).map(|m| {
                let weighted: i128 = m
                    .iter()
                    .zip(table.rows())
                    .map(|(m, r)| m.multiplicity as i128 * r.degree)
                    .sum();
                format!(
                    "Σ m·deg = {weighted}, [χ², ψ] = {}",
                    m[table.psi_index()].multiplicity
                )
            }),
        );
    }

    rec.result(
        "verification",
        verify_with_table(table, &default_label(p)).and_then(|r| {
            if r.pass {
                Ok(format!(
                    "|{{g : g² ∈ V}}| = {} = 2·{}, ν₂(χ) = {}",
                    r.checks.square_locus.size,
                    superscript_two(p),
                    r.nu2
                ))
            } else {
                Err(Error::Invariant(format!("report for {} failed", r.chi_row)))
            }
        }),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_all_pass() {
        let out = run_selftest(3, 97).unwrap();
        assert!(out.all_passed(), "{:#?}", out.checks);
        let sum_rule = out.checks.iter().find(|c| c.name == "sum rule").unwrap();
        assert_eq!(sum_rule.detail, "10 = 1 + 3²");
    }

    #[test]
    fn p7_orbit_count() {
        let out = run_selftest(7, 97).unwrap();
        assert!(out.all_passed());
        let orbits = out.checks.iter().find(|c| c.name == "orbit count").unwrap();
        assert!(orbits.detail.starts_with("6 = "));
    }

    #[test]
    fn bad_prime() {
        assert!(matches!(run_selftest(9, 97), Err(Error::Usage(_))));
    }
}
