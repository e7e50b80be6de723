//! Randomized invariants: every property here is a consequence of the
//! definitions and must hold for all parameters, so proptest shrinks any
//! violation to a minimal counterexample.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use pretzel_cg::cg::{sigma_all_k, sigma_best};
use pretzel_cg::double_cover::{
    characters, homology, linking_form, metabolizers, presentation, PresentationKind,
};
use pretzel_cg::exact_math::SignConfig;
use pretzel_cg::pretzel::{alexander_from_seifert, ParityClass, PretzelKnot};
use pretzel_cg::verdict::{analyze, AnalyzeOptions};

fn odd_param() -> impl Strategy<Value = i64> {
    (-6i64..6).prop_map(|n| 2 * n + 1)
}

fn even_param() -> impl Strategy<Value = i64> {
    (-6i64..=6).prop_filter("nonzero", |n| *n != 0).prop_map(|n| 2 * n)
}

fn odd_knot() -> impl Strategy<Value = PretzelKnot> {
    (odd_param(), odd_param(), odd_param())
        .prop_map(|(p, q, r)| PretzelKnot::new(p, q, r).expect("all odd"))
}

// normalized even-class shape P(-p, p+2, q), the one the two-component
// surgery model accepts; symmetric_variants covers the rest
fn even_knot() -> impl Strategy<Value = PretzelKnot> {
    (0i64..6, even_param())
        .prop_map(|(n, q)| PretzelKnot::new(-(2 * n + 1), 2 * n + 3, q).expect("one even"))
}

fn any_knot() -> impl Strategy<Value = PretzelKnot> {
    prop_oneof![odd_knot(), even_knot()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// |H_1| of the double cover equals |pq + qr + rp| for every knot and
    /// every surgery model of it.
    #[test]
    fn determinant_matches_cover_order(k in any_knot()) {
        let det = k.determinant();
        prop_assert_eq!(det, k.parameter_form().abs());
        let kinds: &[PresentationKind] = if k.class() == ParityClass::Odd {
            &[PresentationKind::Odd4, PresentationKind::OddReduced2]
        } else {
            &[PresentationKind::Even2]
        };
        for &kind in kinds {
            if det == 0 {
                continue; // degenerate: infinite homology, rejected elsewhere
            }
            let pres = presentation(&k, kind).unwrap();
            let group = homology(&pres).unwrap();
            prop_assert_eq!(group.order(), det);
        }
    }

    /// The determinant and the verdict are invariant under the dihedral
    /// parameter symmetries and under reflection.
    #[test]
    fn symmetry_invariance(k in any_knot()) {
        prop_assume!(k.determinant() != 0 && k.determinant() <= 400);
        let opts = AnalyzeOptions::default();
        let base = analyze(&k, &opts).unwrap();
        for [x, y, z] in k.symmetric_variants() {
            let other = PretzelKnot::new(x, y, z).unwrap();
            prop_assert_eq!(other.determinant(), k.determinant());
            let v = analyze(&other, &opts).unwrap();
            prop_assert_eq!(
                std::mem::discriminant(&v.status),
                std::mem::discriminant(&base.status)
            );
        }
    }

    /// The odd-class Seifert matrix reproduces the determinant and an
    /// Alexander polynomial with the right value at -1.
    #[test]
    fn seifert_matrix_consistency(k in odd_knot()) {
        let v = k.seifert_matrix().unwrap();
        let alex = alexander_from_seifert(&v);
        // det(K) = |Delta(-1)|
        let mut at_minus_one = BigInt::zero();
        let mut sign = BigInt::from(1);
        for c in &alex {
            at_minus_one += c * &sign;
            sign = -sign;
        }
        prop_assert_eq!(at_minus_one.abs(), BigInt::from(k.determinant()));
    }

    /// Characters mod d are exactly the kernel condition: each one is valid,
    /// closed under multiples, and their count is the order of the
    /// d-torsion subgroup.
    #[test]
    fn character_group_structure(k in any_knot(), d in prop_oneof![Just(3i64), Just(5), Just(7)]) {
        prop_assume!(k.determinant() != 0);
        let kind = if k.class() == ParityClass::Odd {
            PresentationKind::Odd4
        } else {
            PresentationKind::Even2
        };
        let pres = presentation(&k, kind).unwrap();
        let group = homology(&pres).unwrap();
        let chars = characters(&pres, d).unwrap();
        let torsion: i64 = group
            .invariant_factors()
            .iter()
            .map(|f| num_integer::gcd(*f, d))
            .product();
        prop_assert_eq!(chars.len() as i64, torsion);
        for chi in &chars {
            prop_assert!(chi.is_valid_for(&pres));
            prop_assert!(chi.multiple(2).is_valid_for(&pres));
        }
    }

    /// Every signature route returns a rational whose denominator divides
    /// d^2, and the k <-> multiple-of-chi symmetry holds across all k.
    #[test]
    fn sigma_denominator_and_multiples(k in odd_knot(), d in prop_oneof![Just(3i64), Just(5)]) {
        let det = k.determinant();
        prop_assume!(det != 0 && det % d == 0 && det <= 400);
        let pres = presentation(&k, PresentationKind::Odd4).unwrap();
        let cfg = SignConfig::default();
        let chars = characters(&pres, d).unwrap();
        let dsq = BigInt::from(d * d);
        for chi in chars.iter().filter(|c| !c.is_trivial()).take(4) {
            // sigma_all_k cross-checks sigma_k(chi) against sigma_1(k*chi)
            let values = sigma_all_k(&k, &pres, chi, cfg).unwrap();
            for v in &values {
                prop_assert!((&dsq % v.value.denom()).is_zero());
            }
            let direct = sigma_best(&k, &pres, chi, 1, cfg).unwrap();
            prop_assert_eq!(&values[0].value, &direct.value);
        }
    }

    /// Metabolizers are self-annihilating and of square-root order.
    #[test]
    fn metabolizer_structure(k in any_knot()) {
        let det = k.determinant();
        prop_assume!(det != 0 && det <= 400);
        let kind = if k.class() == ParityClass::Odd {
            PresentationKind::Odd4
        } else {
            PresentationKind::Even2
        };
        let pres = presentation(&k, kind).unwrap();
        let group = homology(&pres).unwrap();
        let form = linking_form(&pres, &group).unwrap();
        let mets = metabolizers(&group, &form).unwrap();
        let square = {
            let r = (det as f64).sqrt().round() as i64;
            r * r == det
        };
        if !square {
            prop_assert!(mets.is_empty());
        }
        for m in &mets {
            prop_assert_eq!(m.order * m.order, det);
            for x in &m.generators {
                for y in &m.generators {
                    let v = form.value_invariant(x, y);
                    prop_assert!(v.denom() == &BigInt::from(1) || v.is_integer());
                }
            }
        }
    }
}
