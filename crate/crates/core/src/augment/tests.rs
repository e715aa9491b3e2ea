use super::*;
use crate::algebra::NcPoly;
use crate::diagram::resolve;
use crate::dga::build_dga;
use crate::library::{builtin, builtins};

fn dga(name: &str, q: u32) -> Dga {
    build_dga(&resolve(&builtin(name).unwrap()).unwrap(), q).unwrap()
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

#[test]
fn unknot_has_one_augmentation() {
    let d = dga("unknot", 2);
    let augs = enumerate_augmentations(&d).unwrap();
    assert_eq!(augs.len(), 1);
    assert_eq!(augs[0].t(), d.field().one());
    let c = linearize(&d, &augs[0]).unwrap();
    assert!(c.matrix(1).is_none());
    assert_eq!(lch_poincare(&d, &augs[0]).unwrap(), poly(&[(1, 1)]));
    assert_eq!(lch_spectrum(&d).unwrap(), vec![poly(&[(1, 1)])]);
}

#[test]
fn trefoil_has_five_augmentations() {
    let d = dga("trefoil", 2);
    let augs = enumerate_augmentations(&d).unwrap();
    assert_eq!(augs.len(), 5);
    for e in &augs {
        let c = linearize(&d, e).unwrap();
        assert!(c.squares_to_zero());
        let sizes: Vec<(i64, usize)> = c.basis().iter().map(|(&k, v)| (k, v.len())).collect();
        assert_eq!(sizes, vec![(0, 3), (1, 2)]);
    }
}

#[test]
fn figure_eight_and_stevedore_polynomials() {
    for q in [2, 3] {
        let fig8 = dga("fig8_tb-3", q);
        let six = dga("k6_1_tb-5", q);
        assert_eq!(lch_spectrum(&fig8).unwrap(), vec![poly(&[(-1, 1), (1, 2)])], "q={q}");
        assert_eq!(lch_spectrum(&six).unwrap(), vec![poly(&[(-1, 2), (1, 3)])], "q={q}");
    }
}

#[test]
fn augmentations_vanish_off_degree_zero() {
    for (_, front) in builtins() {
        let d = build_dga(&resolve(front).unwrap(), 3).unwrap();
        for e in enumerate_augmentations(&d).unwrap() {
            validate(&d, &e).unwrap();
            for (g, gen) in d.generators().iter().enumerate() {
                if gen.degree != 0 {
                    assert!(e.value(g).is_zero());
                }
            }
        }
    }
}

#[test]
fn pruning_matches_brute_force() {
    for q in [2, 3] {
        for (e, front) in builtins() {
            let d = build_dga(&resolve(front).unwrap(), q).unwrap();
            let pruned = enumerate_augmentations(&d).unwrap();
            let brute = enumerate_augmentations_brute_force(&d).unwrap();
            assert_eq!(pruned, brute, "{} q={q}", e.name);
        }
    }
}

#[test]
fn count_survives_reversed_variable_order() {
    for (e, front) in builtins() {
        let d = build_dga(&resolve(front).unwrap(), 2).unwrap();
        let augs = enumerate_augmentations(&d).unwrap();
        let mut order: Vec<usize> = (0..d.generators().len()).filter(|&g| d.degree(g) == 0).collect();
        order.reverse();
        let again = enumerate_augmentations_in_order(&d, &order).unwrap();
        assert_eq!(augs.len() % 2, again.len() % 2);
        assert_eq!(augs, again, "{}", e.name);
    }
}

#[test]
fn augmentations_agree_on_t() {
    for q in [2, 3, 5] {
        for (e, front) in builtins() {
            let d = build_dga(&resolve(front).unwrap(), q).unwrap();
            let s = summarize(&d).unwrap();
            assert!(s.t_values.len() <= 1, "{} q={q}: {:?}", e.name, s.t_values);
        }
    }
}

#[test]
fn euler_characteristic_of_lch_is_tb() {
    for q in [2, 3] {
        for (e, front) in builtins() {
            let d = build_dga(&resolve(front).unwrap(), q).unwrap();
            for a in enumerate_augmentations(&d).unwrap() {
                let c = linearize(&d, &a).unwrap();
                assert_eq!(c.homology(), c.homology_by_columns());
                let p = lch_poincare(&d, &a).unwrap();
                assert_eq!(p.alternating_sum(), d.tb(), "{}", e.name);
            }
        }
    }
}

#[test]
fn wrong_value_is_rejected() {
    let d = dga("trefoil", 2);
    let mut e = enumerate_augmentations(&d).unwrap()[0].clone();
    let g = (0..5).find(|&g| d.degree(g) == 0).unwrap();
    let mut values = e.values().to_vec();
    values[g] = values[g] + d.field().one();
    e = Augmentation::new(e.t(), values);
    assert!(matches!(linearize(&d, &e), Err(Error::InvalidAugmentation(_))));
    let zero_t = Augmentation::new(d.field().zero(), vec![d.field().zero(); 5]);
    assert!(matches!(validate(&d, &zero_t), Err(Error::InvalidAugmentation(_))));
}

#[test]
fn stabilized_front_has_empty_spectrum() {
    // degree-1 chord b with ∂b = t: no augmentation can kill it
    let k = Field::new(2).unwrap();
    let d = Dga::from_parts(
        "stab",
        k,
        vec![crate::dga::Generator { id: "b1".into(), degree: 1 }],
        vec![NcPoly::letter(k, Letter::Unit(0))],
        -2,
    );
    assert!(enumerate_augmentations(&d).unwrap().is_empty());
    assert!(lch_spectrum(&d).unwrap().is_empty());
}

#[test]
fn search_guard() {
    let k = Field::new(2).unwrap();
    let n = 31;
    let gens = (0..n).map(|i| crate::dga::Generator { id: format!("a{i}"), degree: 0 }).collect();
    let d = Dga::from_parts("big", k, gens, vec![NcPoly::zero(k); n], n as i64);
    assert_eq!(enumerate_augmentations(&d).unwrap_err(), Error::SearchSpace(1u128 << 31));
}


#[test]
fn counts_over_small_fields() {
    let expected = [
        ("unknot", 1, 1),
        ("trefoil", 5, 10),
        ("fig8_tb-3", 2, 3),
        ("k6_1_tb-5", 2, 3),
        ("m9_46_tb-1", 8, 18),
    ];
    for (name, over2, over3) in expected {
        assert_eq!(enumerate_augmentations(&dga(name, 2)).unwrap().len(), over2, "{name}");
        assert_eq!(enumerate_augmentations(&dga(name, 3)).unwrap().len(), over3, "{name}");
    }
}
