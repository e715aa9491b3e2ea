use super::*;
use crate::library::{builtin, builtins};

fn hyp(minus: &str, plus: &str, chi: i64, qs: &[u32]) -> CobordismHypothesis {
    CobordismHypothesis::new(builtin(minus).unwrap(), builtin(plus).unwrap(), chi, qs.to_vec()).unwrap()
}

#[test]
fn tb_relation() {
    assert!(check_tb(&hyp("k6_1_tb-5", "fig8_tb-3", -2, &[2])).passed);
    assert!(check_tb(&hyp("unknot", "unknot", 0, &[2])).passed);
    assert!(!check_tb(&hyp("unknot", "trefoil", 0, &[2])).passed);
}

#[test]
fn six_one_to_figure_eight() {
    let h = hyp("k6_1_tb-5", "fig8_tb-3", -2, &[2]);
    let lch = check_lch(&h, 2).unwrap();
    assert!(!lch.passed);
    assert!(lch.details.contains("2t^-1 + 2 + 3t"), "{}", lch.details);
    let r = obstruct(&h).unwrap();
    assert!(r.test("tb", None).unwrap().passed);
    assert!(r.obstructed());
}

#[test]
fn concordance_is_not_symmetric() {
    let back = obstruct(&hyp("m9_46_tb-1", "unknot", 0, &[2])).unwrap();
    assert!(back.obstructed());
    assert!(!back.test("ruling", Some(2)).unwrap().passed);
    assert!(back.test("tb", None).unwrap().passed);
    assert!(back.test("lch", Some(2)).unwrap().passed);

    let forth = obstruct(&hyp("unknot", "m9_46_tb-1", 0, &[2])).unwrap();
    assert_eq!(forth.verdict, Verdict::NoObstructionFound);
    assert!(check_lch(&hyp("unknot", "m9_46_tb-1", 0, &[2]), 2).unwrap().passed);
}

#[test]
fn reflexive_on_builtins() {
    for (entry, _) in builtins() {
        let r = obstruct(&hyp(entry.name, entry.name, 0, &[2, 3])).unwrap();
        assert_eq!(r.verdict, Verdict::NoObstructionFound, "{}: {:?}", entry.name, r.tests);
        assert_eq!(r.tests.len(), 5);
    }
}

#[test]
fn ruling_equality_on_identity() {
    let h = hyp("trefoil", "trefoil", 0, &[3]);
    let t = check_ruling(&h, 3).unwrap();
    assert!(t.passed && t.details.contains("<="));
}

#[test]
fn odd_chi_is_a_domain_error() {
    let h = hyp("unknot", "unknot", -1, &[2]);
    assert!(matches!(check_ruling(&h, 2), Err(Error::Domain(_))));
    assert!(obstruct(&h).is_err());
    assert!(CobordismHypothesis::new(builtin("unknot").unwrap(), builtin("unknot").unwrap(), 2, vec![2]).is_err());
}

#[test]
fn genus_sets_chi() {
    let h = CobordismHypothesis::with_genus(builtin("unknot").unwrap(), builtin("trefoil").unwrap(), 1, vec![2]).unwrap();
    assert_eq!(h.chi, -2);
    assert!(check_tb(&h).passed);
}

#[test]
fn tb_failure_shows_up_in_lch() {
    // consistency smoke test over ordered pairs of built-ins
    for (a, _) in builtins() {
        for (b, _) in builtins() {
            let h = hyp(a.name, b.name, 0, &[2]);
            if !check_tb(&h).passed {
                let l = check_lch(&h, 2).unwrap();
                assert!(!l.passed || l.details.starts_with("vacuous"), "{} -> {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn report_json_shape() {
    let r = obstruct(&hyp("unknot", "unknot", 0, &[2])).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["verdict"], "NO_OBSTRUCTION_FOUND");
    assert!(v["tests"][0].get("q").is_none());
    assert_eq!(v["tests"][1]["q"], 2);
}
