use proptest::prelude::*;
use vq_chartab::algebra::{Cyclotomic, Mat2, Rational};
use vq_chartab::group::enumerate_group;

const ORDERS: [u32; 6] = [1, 3, 4, 5, 7, 12];

fn rational() -> impl Strategy<Value = Rational> {
    (-50i128..50, 1i128..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    (prop::collection::vec(-6i128..6, order as usize), rational())
        .prop_map(move |(counts, r)| Cyclotomic::from_exponent_counts(order, &counts).scale(r))
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(ORDERS.to_vec())
        .prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, Rational::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(a * a.recip(), Rational::ONE);
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn conjugation_is_a_multiplicative_involution((a, b, _c) in triple()) {
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        // a · conj(a) is a sum of squared absolute values, so it is real
        let norm = &a * &a.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn lifting_preserves_value((a, b, _c) in triple(), k in 1u32..4) {
        let m = a.order() * k;
        prop_assert_eq!(a.lift(m), a.clone());
        prop_assert_eq!(&a.lift(m) * &b.lift(m), &a * &b);
    }

    #[test]
    fn mixed_orders_agree_with_explicit_lifting(a in cyclotomic(3), b in cyclotomic(4)) {
        let sum = &a + &b;
        prop_assert_eq!(sum.order(), 12);
        prop_assert_eq!(sum, a.lift(12) + b.lift(12));
    }

    #[test]
    fn determinant_is_multiplicative(e in prop::array::uniform8(0i64..7)) {
        let m = Mat2::new(e[0], e[1], e[2], e[3], 7);
        let n = Mat2::new(e[4], e[5], e[6], e[7], 7);
        prop_assert_eq!((m * n).det(), m.det() * n.det());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(p in prop::sample::select(vec![3u32, 5, 7]), i: prop::sample::Index, j: prop::sample::Index, k: prop::sample::Index) {
        let g = enumerate_group(p).unwrap();
        let n = g.order();
        let (a, b, c) = (g.element(i.index(n)), g.element(j.index(n)), g.element(k.index(n)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert!(a.inv().mul(&a).is_identity());
        prop_assert_eq!(g.index_of(&a), i.index(n));
        prop_assert!(g.contains(&a.mul(&b)));
    }
}
