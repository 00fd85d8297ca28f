use crate::algebra::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::ClassTable;

use super::class_function::ClassFunction;

fn to_integer(total: Cyclotomic, order: usize, what: &str) -> Result<i128> {
    let r = total
        .as_rational()
        .ok_or_else(|| Error::Invariant(format!("{what}: Σ χ(g²) = {total} is not rational")))?
        / Rational::from(order as i128);
    r.to_integer()
        .ok_or_else(|| Error::Invariant(format!("{what}: indicator {r} is not an integer")))
}

/// Frobenius-Schur indicator `(1/|G|) Σ_K |K| χ(K²)` via the square map.
pub fn fs_indicator(ct: &ClassTable, chi: &ClassFunction) -> Result<i128> {
    let total = (0..ct.len())
        .map(|k| {
            chi.value(ct.square_class(k))
                .scale(Rational::from(ct.size(k) as i128))
        })
        .sum();
    to_integer(total, ct.group_order(), "fs_indicator")
}

/// The same indicator as a literal sum over all `8p^2` elements: each `g` is
/// squared in the group and `χ` is read off at the class of `g^2`.
pub fn fs_indicator_direct(ct: &ClassTable, chi: &ClassFunction) -> Result<i128> {
    let group = ct.group();
    let p = ct.prime() as usize;
    // tally by class first, then one cyclotomic sum
    let mut hits = vec![0i128; ct.len()];
    for g in group.elements() {
        hits[ct.class_of(&g.square())] += 1;
    }
    debug_assert_eq!(hits.iter().sum::<i128>() as usize, 8 * p * p);
    let total = hits
        .iter()
        .enumerate()
        .filter(|(_, &n)| n != 0)
        .map(|(k, &n)| chi.value(k).scale(Rational::from(n)))
        .sum();
    to_integer(total, ct.group_order(), "fs_indicator_direct")
}
