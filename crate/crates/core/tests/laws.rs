//! Property tests for the scalar and semimodule layers.

use proptest::prelude::*;
use semihopf::semiring::semiring_axiom_check;
use semihopf::structures::check_structure;
use semihopf::{example, BasisId, Example, Scalar, Semiring, Vector};

fn finite_semirings() -> Vec<Semiring> {
    vec![
        Semiring::boolean(),
        Semiring::xn(3).unwrap(),
        Semiring::subset_lattice(3).unwrap(),
        Semiring::integers_mod(6).unwrap(),
    ]
}

fn pick(s: &Semiring, i: usize) -> Scalar {
    let els = s.elements().unwrap();
    els[i % els.len()].clone()
}

#[test]
fn builtin_semirings_pass_the_axiom_check() {
    for s in finite_semirings().into_iter().chain([Semiring::naturals(), Semiring::subset_lattice(12).unwrap()]) {
        let r = semiring_axiom_check(&s, 4096);
        assert!(r.passed(), "{}: {r}", s.name());
    }
}

proptest! {
    #[test]
    fn finite_semiring_laws(k in 0usize..4, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let s = &finite_semirings()[k];
        let (a, b, c) = (pick(s, a), pick(s, b), pick(s, c));
        prop_assert_eq!(s.add(&s.add(&a, &b), &c), s.add(&a, &s.add(&b, &c)));
        prop_assert_eq!(s.mul(&s.mul(&a, &b), &c), s.mul(&a, &s.mul(&b, &c)));
        prop_assert_eq!(s.add(&a, &b), s.add(&b, &a));
        prop_assert_eq!(s.mul(&a, &b), s.mul(&b, &a));
        prop_assert_eq!(s.mul(&a, &s.add(&b, &c)), s.add(&s.mul(&a, &b), &s.mul(&a, &c)));
        prop_assert_eq!(s.add(&a, &s.zero()), a.clone());
        prop_assert_eq!(s.mul(&a, &s.one()), a.clone());
        prop_assert_eq!(s.mul(&a, &s.zero()), s.zero());
    }

    #[test]
    fn naturals_agree_with_machine_integers(a in 0u64..1 << 31, b in 0u64..1 << 31) {
        let s = Semiring::naturals();
        prop_assert_eq!(s.add(&s.from_u64(a), &s.from_u64(b)), s.from_u64(a + b));
        prop_assert_eq!(s.mul(&s.from_u64(a), &s.from_u64(b)), s.from_u64(a * b));
    }

    #[test]
    fn xn_is_capped_max_plus(n in 1u32..6, a in proptest::option::of(0u32..6), b in proptest::option::of(0u32..6)) {
        let s = Semiring::xn(n).unwrap();
        let (a, b) = (a.map(|x| x.min(n)), b.map(|x| x.min(n)));
        // -inf is the bottom of Option's order
        prop_assert_eq!(s.add(&Scalar::Capped(a), &Scalar::Capped(b)), Scalar::Capped(a.max(b)));
        let prod = match (a, b) { (Some(x), Some(y)) => Some((x + y).min(n)), _ => None };
        prop_assert_eq!(s.mul(&Scalar::Capped(a), &Scalar::Capped(b)), Scalar::Capped(prod));
    }

    #[test]
    fn scalars_round_trip_through_text(k in 0usize..4, a in 0usize..64) {
        let s = &finite_semirings()[k];
        let a = pick(s, a);
        prop_assert_eq!(s.parse(&s.format(&a)).unwrap(), a);
    }

    #[test]
    fn multiplication_is_bilinear(u in proptest::collection::vec((0u64..4, 0i64..4), 0..4),
                                  v in proptest::collection::vec((0u64..4, 0i64..4), 0..4),
                                  w in proptest::collection::vec((0u64..4, 0i64..4), 0..4), c in 0u64..5) {
        let s = Semiring::naturals();
        let b = example(&Example::PolyBinomial, &s).unwrap().into_bisemialgebra().unwrap();
        let vec = |t: &[(u64, i64)]| Vector::from_terms(&s, t.iter().map(|(c, e)| (s.from_u64(*c), BasisId::power("x", *e))));
        let (u, v, w, c) = (vec(&u), vec(&v), vec(&w), s.from_u64(c));
        let mul = |x: &Vector, y: &Vector| b.mu().apply(&x.tensor(y).unwrap()).unwrap();
        prop_assert_eq!(mul(&u.add(&v).unwrap(), &w), mul(&u, &w).add(&mul(&v, &w)).unwrap());
        prop_assert_eq!(mul(&u.scale(&c), &w), mul(&u, &w).scale(&c));
        prop_assert_eq!(b.delta().apply(&u.add(&v).unwrap()).unwrap(),
                        b.delta().apply(&u).unwrap().add(&b.delta().apply(&v).unwrap()).unwrap());
        prop_assert_eq!(u.tensor(&v.add(&w).unwrap()).unwrap(), u.tensor(&v).unwrap().add(&u.tensor(&w).unwrap()).unwrap());
    }

    #[test]
    fn twist_is_an_involution(t in proptest::collection::vec((1u64..4, 0i64..3, 0i64..3), 0..5)) {
        let s = Semiring::naturals();
        let v = Vector::from_terms(&s, t.iter().map(|(c, i, j)| {
            (s.from_u64(*c), BasisId::pair(BasisId::power("x", *i), BasisId::power("y", *j)))
        }));
        prop_assert_eq!(v.twist().unwrap().twist().unwrap(), v);
    }
}

#[test]
fn positive_gallery_passes_at_degree_two() {
    for (ex, s) in Example::gallery() {
        if ex.is_negative() {
            continue;
        }
        let r = check_structure(&example(&ex, &s).unwrap(), 2).unwrap();
        assert!(r.passed(), "{} over {}: {r}", ex.name(), s.name());
    }
}
