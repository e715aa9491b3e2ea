//! Words in chord generators and invertible base-point letters.

use std::cmp::Ordering;

/// A single letter of a word.
///
/// `Unit(j)` and `UnitInv(j)` are the base-point generator `t_j` and its
/// inverse; they have degree 0 and cancel when adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Gen(u32),
    Unit(u8),
    UnitInv(u8),
}

impl Letter {
    pub fn inverse(self) -> Option<Letter> {
        match self {
            Letter::Gen(_) => None,
            Letter::Unit(j) => Some(Letter::UnitInv(j)),
            Letter::UnitInv(j) => Some(Letter::Unit(j)),
        }
    }

    pub fn is_unit(self) -> bool {
        !matches!(self, Letter::Gen(_))
    }
}

/// A reduced word: no `t_j t_j^{-1}` or `t_j^{-1} t_j` factor.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Reduces `letters` with a single left-to-right stack pass.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if let (Some(&top), Some(inv)) = (stack.last(), l.inverse()) {
                if top == inv {
                    stack.pop();
                    continue;
                }
            }
            stack.push(l);
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Sum of letter degrees; unit letters have degree 0.
    pub fn degree(&self, gen_degree: impl Fn(u32) -> i64) -> i64 {
        self.0
            .iter()
            .map(|l| match *l {
                Letter::Gen(g) => gen_degree(g),
                _ => 0,
            })
            .sum()
    }

    /// Number of chord (non-unit) letters.
    pub fn chord_length(&self) -> usize {
        self.0.iter().filter(|l| !l.is_unit()).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const T: Letter = Letter::Unit(0);
    const TI: Letter = Letter::UnitInv(0);

    #[test]
    fn unit_pairs_cancel() {
        assert!(Word::new([T, TI]).is_empty());
        assert!(Word::new([TI, T]).is_empty());
        assert_eq!(Word::new([Letter::Gen(1), T, T, TI, Letter::Gen(2)]).letters(), &[Letter::Gen(1), T, Letter::Gen(2)]);
        assert_eq!(Word::new([T, Letter::Gen(0), TI]).len(), 3);
    }

    #[test]
    fn length_lex_order() {
        let a = Word::new([Letter::Gen(5)]);
        let b = Word::new([Letter::Gen(0), Letter::Gen(0)]);
        assert!(a < b);
        assert!(Word::empty() < a);
    }

    fn letter() -> impl Strategy<Value = Letter> {
        prop_oneof![
            (0u32..3).prop_map(Letter::Gen),
            (0u8..2).prop_map(Letter::Unit),
            (0u8..2).prop_map(Letter::UnitInv),
        ]
    }

    /// Brute-force rewriting: repeatedly delete the first cancelling pair.
    fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
        loop {
            let pos = v.windows(2).position(|w| w[0].inverse() == Some(w[1]));
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    /// Same rewriting but deleting the last cancelling pair first.
    fn naive_reduce_rev(mut v: Vec<Letter>) -> Vec<Letter> {
        loop {
            let pos = v.windows(2).rposition(|w| w[0].inverse() == Some(w[1]));
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    proptest! {
        #[test]
        fn normal_form_is_confluent(v in proptest::collection::vec(letter(), 0..14), split in 0usize..14) {
            let reduced = Word::new(v.clone());
            let fwd = naive_reduce(v.clone());
            let bwd = naive_reduce_rev(v.clone());
            prop_assert_eq!(reduced.letters(), fwd.as_slice());
            prop_assert_eq!(reduced.letters(), bwd.as_slice());
            let k = split.min(v.len());
            let (l, r) = v.split_at(k);
            prop_assert_eq!(Word::new(l.to_vec()).concat(&Word::new(r.to_vec())), reduced);
        }
    }
}
