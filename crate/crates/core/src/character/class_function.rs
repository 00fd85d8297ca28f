use crate::algebra::{Cyclotomic, Rational};
use crate::error::{ensure_invariant, Error, Result};
use crate::group::{ClassTable, GroupElement};

use super::label::{label_action, CharLabel};
use super::q8::Q8Character;

/// A function on the conjugacy classes of `G`, values in Q(ζ_p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    prime: u32,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    /// Rational values are stored as elements of Q(ζ_1).
    pub fn new(prime: u32, values: Vec<Cyclotomic>) -> Self {
        ClassFunction {
            prime,
            values: values.into_iter().map(Cyclotomic::normalized).collect(),
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the identity class.
    pub fn degree(&self) -> Option<i128> {
        self.values.first().and_then(Cyclotomic::as_integer)
    }

    /// Pointwise product.
    pub fn product(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(
            self.values.len(),
            other.values.len(),
            "class count mismatch"
        );
        ClassFunction::new(
            self.prime,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction::new(
            self.prime,
            self.values.iter().map(Cyclotomic::conj).collect(),
        )
    }

    /// True when every value lies in Q(ζ_p).
    pub fn values_in_prime_field(&self) -> bool {
        self.values
            .iter()
            .all(|v| v.order() == 1 || v.order() == self.prime)
    }
}

/// `<f, g> = (1/|G|) Σ_K |K| f(K) conj(g(K))`, which must be rational.
pub fn inner_product(ct: &ClassTable, f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    ensure_invariant!(
        f.len() == ct.len() && g.len() == ct.len(),
        "class functions do not match the class table"
    );
    let mut acc = Cyclotomic::zero(1);
    for k in 0..ct.len() {
        let term = (f.value(k) * &g.value(k).conj()).scale(Rational::from(ct.size(k) as i128));
        acc = acc + term;
    }
    let total = acc
        .as_rational()
        .ok_or_else(|| Error::Invariant(format!("inner product is not rational: {acc}")))?;
    Ok(total / Rational::from(ct.group_order() as i128))
}

/// `λ^G` for a nontrivial λ, from orbit sums: zero off `V`, and
/// `Σ_{M ∈ Q} λ^M(v)` at `v ∈ V`.
pub fn induce_from_v(label: &CharLabel, ct: &ClassTable) -> Result<ClassFunction> {
    if label.is_trivial() {
        return Err(Error::Usage(
            "cannot induce the trivial character of V; inflate from Q instead".into(),
        ));
    }
    let p = ct.prime();
    let q = ct.group().quaternion();
    let conjugates: Vec<CharLabel> = q
        .elements()
        .iter()
        .map(|m| label_action(m, label))
        .collect();
    let values = (0..ct.len())
        .map(|k| {
            let g = ct.rep(k);
            if !g.in_v() {
                return Cyclotomic::zero(1);
            }
            let mut counts = vec![0i128; p as usize];
            for l in &conjugates {
                counts[l.pairing(g.v()) as usize] += 1;
            }
            Cyclotomic::from_exponent_counts(p, &counts)
        })
        .collect();
    Ok(ClassFunction::new(p, values))
}

/// `λ^G(g) = (1/|V|) Σ_{x ∈ G} λ°(x g x^-1)` with `λ°` zero off `V`, evaluated
/// literally on each class representative.
pub fn induce_by_averaging(label: &CharLabel, ct: &ClassTable) -> ClassFunction {
    let p = ct.prime();
    let group = ct.group();
    let values = (0..ct.len())
        .map(|k| {
            let g = ct.rep(k);
            let mut counts = vec![0i128; p as usize];
            for x in group.elements() {
                let h: GroupElement = x.conjugate(&g);
                if h.in_v() {
                    counts[label.pairing(h.v()) as usize] += 1;
                }
            }
            Cyclotomic::from_exponent_counts(p, &counts).scale(Rational::new(1, (p * p) as i128))
        })
        .collect();
    ClassFunction::new(p, values)
}

/// Pulls a character of `Q ≅ G/V` back to `G`.
pub fn inflate_from_q(theta: &Q8Character, ct: &ClassTable) -> ClassFunction {
    let values = (0..ct.len())
        .map(|k| Cyclotomic::from_integer(theta.values[ct.q8_class(k)]))
        .collect();
    ClassFunction::new(ct.prime(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::q8::{q8_character_table, PSI};
    use crate::group::conjugacy_classes;

    fn int(n: i128) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn class_of(ct: &ClassTable, v: [u32; 2], qi: usize) -> usize {
        let m = ct.group().quaternion().elements()[qi];
        ct.class_of(&GroupElement::new(v, m))
    }

    #[test]
    fn induced_values_p3() {
        let ct = conjugacy_classes(3).unwrap();
        let chi = induce_from_v(&CharLabel::new(1, 0, 3), &ct).unwrap();
        // identity, V\1, z-fiber, X-fiber, Y-fiber, XY-fiber
        let expected = [(0, 8), (1, -1), (2, 0), (3, 0), (4, 0), (5, 0)];
        let probes = [
            class_of(&ct, [0, 0], 0),
            class_of(&ct, [1, 0], 0),
            class_of(&ct, [0, 0], 1),
            class_of(&ct, [0, 0], 2),
            class_of(&ct, [0, 0], 4),
            class_of(&ct, [0, 0], 6),
        ];
        for (slot, value) in expected {
            assert_eq!(chi.value(probes[slot]), &int(value));
        }
        assert_eq!(chi.degree(), Some(8));
    }

    #[test]
    fn orbit_sum_matches_averaging() {
        for p in [3, 5, 7] {
            let ct = conjugacy_classes(p).unwrap();
            for a in 0..p {
                for b in 0..p {
                    if (a, b) == (0, 0) {
                        continue;
                    }
                    let l = CharLabel::new(a, b, p);
                    assert_eq!(
                        induce_from_v(&l, &ct).unwrap(),
                        induce_by_averaging(&l, &ct)
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_label_is_rejected() {
        let ct = conjugacy_classes(3).unwrap();
        assert!(matches!(
            induce_from_v(&CharLabel::trivial(3), &ct),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn inflated_psi_p3() {
        let ct = conjugacy_classes(3).unwrap();
        let psi = inflate_from_q(&q8_character_table()[PSI], &ct);
        let probes = [
            (class_of(&ct, [0, 0], 0), 2),
            (class_of(&ct, [1, 0], 0), 2),
            (class_of(&ct, [0, 0], 1), -2),
            (class_of(&ct, [0, 0], 2), 0),
            (class_of(&ct, [0, 0], 4), 0),
            (class_of(&ct, [0, 0], 6), 0),
        ];
        for (k, v) in probes {
            assert_eq!(psi.value(k), &int(v));
        }
        let triv = inflate_from_q(&q8_character_table()[0], &ct);
        assert!(triv.values().iter().all(|v| *v == int(1)));
    }

    #[test]
    fn inner_products_p3() {
        let ct = conjugacy_classes(3).unwrap();
        let chi = induce_from_v(&CharLabel::new(0, 1, 3), &ct).unwrap();
        let psi = inflate_from_q(&q8_character_table()[PSI], &ct);
        assert_eq!(inner_product(&ct, &chi, &chi).unwrap(), Rational::ONE);
        assert_eq!(inner_product(&ct, &chi, &psi).unwrap(), Rational::ZERO);
        let sq = chi.product(&chi);
        assert_eq!(inner_product(&ct, &sq, &psi).unwrap(), Rational::from(2i64));
    }

    #[test]
    fn non_rational_inner_product_is_an_invariant_error() {
        let ct = conjugacy_classes(3).unwrap();
        let mut values = vec![Cyclotomic::zero(1); ct.len()];
        values[0] = Cyclotomic::root(3, 1);
        let f = ClassFunction::new(3, values);
        let one = inflate_from_q(&q8_character_table()[0], &ct);
        assert!(matches!(
            inner_product(&ct, &f, &one),
            Err(Error::Invariant(_))
        ));
    }
}
