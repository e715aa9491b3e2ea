use lch_core::diagram::{parse_front, rotation, tb};
use lch_core::library::builtins;
use proptest::prelude::*;

fn plat(word: &[usize], cusps: usize) -> String {
    let mut s = String::new();
    for i in 0..cusps {
        s.push_str(&format!("L {}\n", 2 * i + 1));
    }
    for k in word {
        s.push_str(&format!("X {k}\n"));
    }
    for _ in 0..cusps {
        s.push_str("R 1\n");
    }
    s
}

#[test]
fn builtins_round_trip() {
    for (entry, front) in builtins() {
        let again = parse_front(&front.to_text()).unwrap();
        assert_eq!(&again, front, "{}", entry.name);
        assert_eq!(tb(&again), entry.tb);
        assert_eq!(rotation(&again), entry.rotation);
    }
}

#[test]
fn slash_separates_lines() {
    let a = parse_front("L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1").unwrap();
    let b = parse_front("L 1\nL 3\nX 2\nX 2\nX 2\nR 1\nR 1\n").unwrap();
    assert_eq!(a, b);
}

proptest! {
    #[test]
    fn random_plats_round_trip(word in prop::collection::vec(1usize..=5, 0..14), cusps in 1usize..=3) {
        let word: Vec<usize> = word.into_iter().filter(|&k| k < 2 * cusps).collect();
        if let Ok(front) = parse_front(&plat(&word, cusps)) {
            let again = parse_front(&front.to_text()).unwrap();
            prop_assert_eq!(&again, &front);
            prop_assert_eq!(tb(&again), tb(&front));
            prop_assert_eq!(again.events(), front.events());
        }
    }
}
