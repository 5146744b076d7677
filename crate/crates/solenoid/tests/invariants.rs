//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use solenoid::adele::{AdeleClass, FiniteAdele};
use solenoid::character::{chi, chi_raw, separating_probe};
use solenoid::extension::{
    baer_pullback, baer_quotient, congruent_z0, ExtPresentation, RigidExt,
};
use solenoid::padic::{decompose, frac_p, global_frac_parts, valuation, PAdicFrac};
use solenoid::parse::{class_from_json, class_to_json, parse_adele_class, parse_ext_spec,
    rigid_from_json, rigid_to_json};
use solenoid::primes::Prime;
use solenoid::rat::Rat;

fn rat() -> impl Strategy<Value = Rat> {
    (-200i64..=200, 1i64..=120).prop_map(|(n, d)| Rat::new(n, d))
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(|p| Prime::new(p).unwrap())
}

/// A rational with an explicit power of `p` in the denominator.
fn rat_at(p: Prime) -> impl Strategy<Value = Rat> {
    (-80i64..=80, 1i64..=40, 0u32..=3).prop_map(move |(n, d, k)| {
        Rat::from_big(n.into(), num_bigint::BigInt::from(d) * p.pow(k))
    })
}

fn finite_adele() -> impl Strategy<Value = FiniteAdele> {
    (
        rat(),
        prop::collection::btree_map(0usize..6, rat(), 0..=3),
    )
        .prop_map(|(tail, m)| {
            let primes = [2u64, 3, 5, 7, 11, 13];
            FiniteAdele::new(tail, m.into_iter().map(|(i, v)| (primes[i], v))).unwrap()
        })
}

fn adele_class() -> impl Strategy<Value = AdeleClass> {
    (rat(), finite_adele()).prop_map(|(r, a)| AdeleClass::canonicalize(r, a))
}

fn rigid() -> impl Strategy<Value = RigidExt> {
    (finite_adele(), rat()).prop_map(|(a, s)| RigidExt::new(ExtPresentation::new(a), s))
}

proptest! {
    #[test]
    fn frac_p_is_the_unique_principal_part(q in prime().prop_flat_map(|p| (Just(p), rat_at(p)))) {
        let (p, q) = q;
        let r = frac_p(&q, p).into_value();
        prop_assert!(!r.is_negative() && r < Rat::one());
        prop_assert!(PAdicFrac::new(p, r.clone()).is_ok());
        let diff = &q - &r;
        prop_assert!(diff.is_zero() || valuation(&diff, p).unwrap() >= 0);
    }

    #[test]
    fn frac_p_additive_mod_one(
        pq in prime().prop_flat_map(|p| (Just(p), rat_at(p), rat_at(p)))
    ) {
        let (p, a, b) = pq;
        let joint = frac_p(&(&a + &b), p).into_value();
        let split = frac_p(&a, p).value() + frac_p(&b, p).value();
        prop_assert!((&split - &joint).is_integer());
    }

    #[test]
    fn global_residue_identity(q in rat()) {
        let parts = global_frac_parts(&q).unwrap();
        let sum = parts.values().fold(Rat::zero(), |acc, p| acc + p.value());
        prop_assert!((&sum - &q).is_integer());
    }

    #[test]
    fn decompose_splits_exactly(pq in prime().prop_flat_map(|p| (Just(p), rat_at(p)))) {
        let (p, q) = pq;
        let (u, v) = decompose(&q, p);
        prop_assert_eq!(&u - &v, q);
        prop_assert!(u.is_zero() || valuation(&u, p).unwrap() >= 0);
        prop_assert!(!v.is_negative() && v < Rat::one());
        prop_assert!(PAdicFrac::new(p, v).is_ok());
    }

    #[test]
    fn class_addition_is_a_group(x in adele_class(), y in adele_class(), z in adele_class()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &AdeleClass::zero(), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn canonical_forms_are_diagonal_invariant(r in rat(), a in finite_adele(), d in rat()) {
        let base = AdeleClass::canonicalize(r.clone(), a.clone());
        let shifted = AdeleClass::canonicalize(&r + &d, &a + &FiniteAdele::diagonal(d));
        prop_assert_eq!(base, shifted);
    }

    #[test]
    fn chi_is_well_defined_and_additive(
        r in rat(), a in finite_adele(), d in rat(), q1 in rat(), q2 in rat()
    ) {
        let base = chi_raw(&r, &a, &q1).unwrap();
        let shifted = chi_raw(&(&r + &d), &(&a + &FiniteAdele::diagonal(d)), &q1).unwrap();
        prop_assert_eq!(&base, &shifted);

        let x = AdeleClass::canonicalize(r, a);
        prop_assert_eq!(chi(&x, &(&q1 + &q2)), &chi(&x, &q1) + &chi(&x, &q2));
    }

    #[test]
    fn probes_separate_nonzero_classes(x in adele_class()) {
        match separating_probe(&x) {
            None => prop_assert!(x.is_zero()),
            Some(q) => prop_assert!(!chi(&x, &q).is_zero()),
        }
    }

    #[test]
    fn delta_bar_factors_through_the_solenoid(e in rigid(), q in rat()) {
        let d = e.delta_bar(&q).unwrap();
        prop_assert_eq!(chi(&e.to_solenoid(), &q), d);
    }

    #[test]
    fn solenoid_image_decides_z0_congruence(e0 in rigid(), e1 in rigid(), d in rat()) {
        // arbitrary pair: image equality iff witness
        let same = e0.to_solenoid() == e1.to_solenoid();
        prop_assert_eq!(congruent_z0(&e0, &e1).is_some(), same);
        // constructed congruent pair always has both
        let moved = RigidExt::new(e0.presentation().shift_diag(&d), e0.sigma() + &d);
        prop_assert!(congruent_z0(&e0, &moved).is_some());
        prop_assert_eq!(e0.to_solenoid(), moved.to_solenoid());
    }

    #[test]
    fn baer_quotient_lands_in_the_sum(
        e0 in rigid(), e1 in rigid(), q in rat(), k0 in -4i64..=4, k1 in -4i64..=4
    ) {
        let y0 = e0.presentation().lift_phi(&q).unwrap() + Rat::from_int(k0);
        let y1 = e1.presentation().lift_phi(&q).unwrap() + Rat::from_int(k1);
        let be = baer_pullback(&e0, &e1, q.clone(), y0, y1).unwrap();
        let img = baer_quotient(&be).unwrap();
        let sum = e0.baer_sum(&e1);
        prop_assert!(sum
            .presentation()
            .element(img.j_project().clone(), img.y().clone())
            .is_ok());
        // delta_bar additivity across the sum
        let lhs = sum.delta_bar(&q).unwrap();
        let rhs = &e0.delta_bar(&q).unwrap() + &e1.delta_bar(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parser_never_panics(s in "[ -~]{0,40}") {
        // outcome does not matter, only that arbitrary input is handled
        let _ = parse_ext_spec(&s);
        let _ = parse_adele_class(&s);
        let _ = s.parse::<Rat>();
    }

    #[test]
    fn printed_classes_reparse(x in adele_class()) {
        let text = x.to_string();
        prop_assert_eq!(parse_adele_class(&text).unwrap(), x.clone());
        let json = class_to_json(&x);
        prop_assert_eq!(class_from_json(&json).unwrap(), x);
    }

    #[test]
    fn printed_extensions_reparse(e in rigid()) {
        let text = e.to_string();
        prop_assert_eq!(parse_ext_spec(&text).unwrap().into_rigid(), e.clone());
        let json = rigid_to_json(&e);
        prop_assert_eq!(rigid_from_json(&json).unwrap(), e);
    }
}
