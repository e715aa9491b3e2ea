use super::*;
use crate::algebra::Word;
use crate::augment::enumerate_augmentations;
use crate::diagram::resolve;
use crate::dga::build_dga;
use crate::library::builtin;

fn dga(name: &str, q: u32) -> Dga {
    build_dga(&resolve(&builtin(name).unwrap()).unwrap(), q).unwrap()
}

#[test]
fn y_is_closed_and_x_differential() {
    let d = dga("trefoil", 3);
    let tc = TwoCopyDga::new(&d).unwrap();
    assert!(tc.d_y12().is_zero());
    let k = d.field();
    let y = tc.y_letter();
    let expected = NcPoly::term(k, Word::new([Letter::UnitInv(1), y, Letter::Unit(2)]), k.one())
        .sub(&NcPoly::letter(k, y))
        .unwrap();
    assert_eq!(tc.d_x12(), &expected);
}

#[test]
fn x_differential_vanishes_after_quotient_when_t_agrees() {
    let d = dga("trefoil", 2);
    let augs = enumerate_augmentations(&d).unwrap();
    let diff = two_copy_diff(&d, &augs[0], &augs[1]).unwrap();
    assert!(diff.x12.is_zero());
}

#[test]
fn unknot_a12_has_linear_x_term() {
    for q in [2, 3] {
        let d = dga("unknot", q);
        let e = &enumerate_augmentations(&d).unwrap()[0];
        let tc = TwoCopyDga::new(&d).unwrap();
        let diff = two_copy_diff(&d, e, e).unwrap();
        let x = tc.x_letter();
        assert_eq!(diff.a12[0].coeff(&Word::letter(x)), e.t(), "q={q}");
    }
}

#[test]
fn unknot_hom_plus() {
    let d = dga("unknot", 2);
    let e = &enumerate_augmentations(&d).unwrap()[0];
    let h = hom_complex(&d, e, e, Variant::Plus).unwrap();
    assert_eq!(h.labels, vec!["b1^v", "x^v", "y^v"]);
    assert_eq!(h.degrees, vec![2, 1, 0]);
    // m1(x^v) = b1^v, everything else zero
    let one = d.field().one();
    for r in 0..3 {
        for c in 0..3 {
            let want = if (r, c) == (0, 1) { one } else { d.field().zero() };
            assert_eq!(h.m1.get(r, c), want, "({r},{c})");
        }
    }
    assert_eq!(hom_cohomology(&h), BTreeMap::from([(0, 1)]));
    assert!(unit_is_nonzero(&h));
}

#[test]
fn m1_squares_to_zero_on_trefoil_pairs() {
    for q in [2, 3] {
        let d = dga("trefoil", q);
        let augs = enumerate_augmentations(&d).unwrap();
        let cat = AugCategory::new(&d).unwrap();
        for a in &augs {
            for b in &augs {
                for v in [Variant::Plus, Variant::Minus] {
                    let h = cat.hom(a, b, v).unwrap();
                    assert!(h.squares_to_zero());
                    assert!(h.has_degree_one());
                }
            }
        }
    }
}

#[test]
fn minus_is_the_chord_subcomplex_of_plus() {
    for name in ["trefoil", "fig8_tb-3", "m9_46_tb-1"] {
        let d = dga(name, 3);
        let augs = enumerate_augmentations(&d).unwrap();
        let cat = AugCategory::new(&d).unwrap();
        let n = d.generators().len();
        for a in augs.iter().take(4) {
            for b in augs.iter().take(4) {
                let plus = cat.hom(a, b, Variant::Plus).unwrap();
                let minus = cat.hom(a, b, Variant::Minus).unwrap();
                for r in 0..n {
                    for c in 0..n {
                        assert_eq!(plus.m1.get(r, c), minus.m1.get(r, c), "{name}");
                    }
                    // chord span is closed: no a^v maps onto x^v or y^v
                    assert!(plus.m1.get(n, r).is_zero() && plus.m1.get(n + 1, r).is_zero());
                }
            }
        }
    }
}

#[test]
fn conjugated_and_direct_linear_parts_agree() {
    let d = dga("fig8_tb-3", 3);
    let augs = enumerate_augmentations(&d).unwrap();
    let (a, b) = (&augs[0], &augs[augs.len() - 1]);
    let diff = two_copy_diff(&d, a, b).unwrap();
    let h = hom_complex(&d, a, b, Variant::Plus).unwrap();
    let tc = TwoCopyDga::new(&d).unwrap();
    let n = d.generators().len();
    let letters: Vec<Letter> = (0..n).map(|g| chord_letter(g, 1, 2)).chain([tc.x_letter(), tc.y_letter()]).collect();
    let polys: Vec<&NcPoly> = diff.a12.iter().chain([&diff.x12, &diff.y12]).collect();
    for (r, p) in polys.iter().enumerate() {
        for (c, &l) in letters.iter().enumerate() {
            assert_eq!(p.coeff(&Word::letter(l)), h.m1.get(r, c));
        }
    }
}

#[test]
fn structural_checks_on_small_knots() {
    for name in ["unknot", "trefoil", "fig8_tb-3"] {
        for q in [2, 3] {
            let d = dga(name, q);
            let augs = enumerate_augmentations(&d).unwrap();
            for r in check_pairs(&d, &augs).unwrap() {
                assert!(r.passed(), "{name} q={q}: {r:?}");
            }
        }
    }
}

#[test]
fn unknot_minus_lives_in_degree_two() {
    let d = dga("unknot", 2);
    let e = &enumerate_augmentations(&d).unwrap()[0];
    let plus = hom_cohomology(&hom_complex(&d, e, e, Variant::Plus).unwrap());
    let minus = hom_cohomology(&hom_complex(&d, e, e, Variant::Minus).unwrap());
    assert_eq!(minus, BTreeMap::from([(2, 1)]));
    assert!(les_holds(&plus, &minus));
    assert!(!gaps_only_in_low_degrees(&plus, &minus));
}
