//! Property tests over randomly drawn pair lists and rationals.

use curvespec::puiseux::{
    characteristic_data, continued_fraction, pairs_from_exponents, PuiseuxPairs,
};
use curvespec::rational::{int, rat, Rat};
use curvespec::resolution::{decorate, Limits};
use curvespec::spectrum::{
    check_symmetry, lemma42_characterization, lemma42_predicate, phi_recursive,
    spectrum_enumeration, spectrum_steenbrink,
};
use curvespec::variance::hertling_check;
use num::Integer;
use proptest::prelude::*;

fn coprime_pair(k_max: u64, first: bool) -> impl Strategy<Value = (u64, u64)> {
    (2u64..=5, 1u64..=k_max)
        .prop_filter_map("coprime with k > n where required", move |(n, k)| {
            let k = if first { n + k } else { k };
            (k.gcd(&n) == 1).then_some((k, n))
        })
}

fn pair_list() -> impl Strategy<Value = PuiseuxPairs> {
    (
        coprime_pair(12, true),
        proptest::collection::vec(coprime_pair(9, false), 0..2),
    )
        .prop_map(|(head, tail)| {
            let mut pairs = vec![head];
            pairs.extend(tail);
            PuiseuxPairs::new(pairs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree(pairs in pair_list()) {
        let cd = characteristic_data(&pairs);
        let a = spectrum_enumeration(&cd);
        prop_assert_eq!(&a, &phi_recursive(&cd));
        let dec = decorate(&pairs, &Limits::default()).unwrap();
        prop_assert_eq!(&a, &spectrum_steenbrink(&dec, &cd).unwrap());
    }

    #[test]
    fn spectrum_symmetric_and_sized(pairs in pair_list()) {
        let cd = characteristic_data(&pairs);
        let s = spectrum_enumeration(&cd);
        prop_assert!(check_symmetry(&s));
        prop_assert_eq!(int(s.mu() as i64), cd.mu);
        prop_assert_eq!(s.min().unwrap(), &cd.alpha1);
    }

    #[test]
    fn hertling_gap_sign(pairs in pair_list()) {
        let cd = characteristic_data(&pairs);
        let s = spectrum_enumeration(&cd);
        let (_, _, gap) = hertling_check(&s).unwrap();
        if pairs.g() == 1 {
            prop_assert_eq!(gap, rat(0, 1));
        } else {
            prop_assert!(gap > rat(0, 1));
        }
    }

    #[test]
    fn exponents_round_trip(pairs in pair_list()) {
        let back = pairs_from_exponents(&pairs.characteristic_exponents()).unwrap();
        prop_assert_eq!(back, pairs);
    }

    #[test]
    fn inversion_is_an_involution(pairs in pair_list()) {
        let m = pairs.to_modified();
        prop_assert_eq!(m.invert().invert(), m);
    }

    #[test]
    fn continued_fraction_reconstructs(k in 1u64..400, n in 2u64..40) {
        prop_assume!(k.gcd(&n) == 1);
        let cf = continued_fraction(k, n).unwrap();
        // value of the continued fraction equals k/n
        let mut v: Option<Rat> = None;
        for &a in cf.a.iter().rev() {
            let a = rat(a as i64, 1);
            v = Some(match v {
                None => a,
                Some(prev) => a + prev.recip(),
            });
        }
        prop_assert_eq!(v.unwrap(), rat(k as i64, n as i64));
        prop_assert_eq!(cf.convergent(cf.h() as isize), (&int(k as i64), &int(n as i64)));
    }

    #[test]
    fn lemma42_routes_agree(p2 in -60i64..60, q2 in 1i64..30, p3 in -60i64..60, q3 in 1i64..30, c in -3i64..3) {
        let a2 = rat(p2, q2);
        let a3 = rat(p3, q3);
        let a1 = rat(c, 1) - &a2 - &a3;
        prop_assert_eq!(
            lemma42_predicate(&a1, &a2, &a3).unwrap(),
            lemma42_characterization(&a1, &a2, &a3).unwrap()
        );
    }
}
