//! Words in the free group on `a`, `b`, `c`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three free generators, dual to the strands of the trivial tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeLetter {
    pub gen: Generator,
    pub sign: i8,
}

impl FreeLetter {
    pub fn new(gen: Generator, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        FreeLetter { gen, sign }
    }

    pub fn inverse(self) -> Self {
        FreeLetter { gen: self.gen, sign: -self.sign }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn from_letters<I: IntoIterator<Item = FreeLetter>>(letters: I) -> Self {
        let mut out: Vec<FreeLetter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Strips inverse pairs from the two ends; the result is conjugate to `self`.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let mut k = 0;
        while k < l.len() / 2 && l[k] == l[l.len() - 1 - k].inverse() {
            k += 1;
        }
        FreeWord { letters: l[k..l.len() - k].to_vec() }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            if l.sign > 0 {
                write!(f, "{}", l.gen.symbol())?;
            } else {
                write!(f, "{}", l.gen.symbol().to_ascii_uppercase())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn letter() -> impl Strategy<Value = FreeLetter> {
        (0..3u8, prop::bool::ANY).prop_map(|(g, s)| {
            let gen = [Generator::A, Generator::B, Generator::C][g as usize];
            FreeLetter::new(gen, if s { 1 } else { -1 })
        })
    }

    fn naive_reduce(mut v: Vec<FreeLetter>) -> Vec<FreeLetter> {
        loop {
            let pos = v.windows(2).position(|p| p[0] == p[1].inverse());
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    #[test]
    fn display() {
        let a = FreeLetter::new(Generator::A, 1);
        let b = FreeLetter::new(Generator::B, -1);
        assert_eq!(FreeWord::from_letters([a, b]).to_string(), "aB");
        assert_eq!(FreeWord::identity().to_string(), "1");
    }

    #[test]
    fn cyclic_reduction() {
        let a = FreeLetter::new(Generator::A, 1);
        let b = FreeLetter::new(Generator::B, 1);
        let w = FreeWord::from_letters([a, b, a.inverse()]);
        assert_eq!(w.cyclically_reduced(), FreeWord::from_letters([b]));
        let w = FreeWord::from_letters([a, b, b.inverse()]);
        assert_eq!(w, FreeWord::from_letters([a]));
    }

    proptest! {
        #[test]
        fn reduction_matches_naive(v in prop::collection::vec(letter(), 0..40)) {
            let fast = FreeWord::from_letters(v.clone());
            prop_assert_eq!(fast.letters(), &naive_reduce(v)[..]);
        }

        #[test]
        fn reduction_is_confluent(
            u in prop::collection::vec(letter(), 0..20),
            v in prop::collection::vec(letter(), 0..20),
        ) {
            let whole = FreeWord::from_letters(u.iter().chain(v.iter()).copied());
            let parts = FreeWord::from_letters(u).concat(&FreeWord::from_letters(v));
            prop_assert_eq!(whole, parts);
        }

        #[test]
        fn inverse_cancels(v in prop::collection::vec(letter(), 0..30)) {
            let w = FreeWord::from_letters(v);
            prop_assert!(w.concat(&w.inverse()).is_identity());
        }

        #[test]
        fn conjugate_of_identity_reduces_to_identity(v in prop::collection::vec(letter(), 0..20)) {
            let w = FreeWord::from_letters(v);
            let c = w.concat(&w.inverse()).cyclically_reduced();
            prop_assert!(c.is_identity());
        }
    }
}
