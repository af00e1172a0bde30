//! Braid words over the half-twist generators `s0` .. `s5`.
//!
//! A word is read as a composition of maps: the rightmost letter acts first,
//! so `s5 s3 s1` means "apply `s1`, then `s3`, then `s5`".
//!
//! Only free reduction on the generator alphabet is ever performed. Braid
//! relations are deliberately not applied; equivalence of tangles is decided
//! semantically by [`crate::classify`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of half-twist generators (one per hexagon edge).
pub const GENERATORS: u8 = 6;

/// A single generator raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: u8,
    pub exp: i64,
}

impl Letter {
    pub fn new(index: u8, exp: i64) -> Result<Self, Error> {
        if index >= GENERATORS {
            return Err(Error::IndexOutOfRange(index as i64));
        }
        if exp == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Letter { index, exp })
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, exp: -self.exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^{}", self.index, self.exp)
        }
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    /// Builds a word from arbitrary letters, merging equal neighbours.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        BraidWord { letters: out }
    }

    /// Convenience constructor from `(index, exponent)` pairs.
    pub fn from_pairs(pairs: &[(u8, i64)]) -> Result<Self, Error> {
        let letters = pairs.iter().map(|&(i, e)| Letter::new(i, e)).collect::<Result<Vec<_>, _>>()?;
        Ok(BraidWord::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Sum of absolute exponents, i.e. the number of half twists applied.
    pub fn twist_count(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    /// Reversed letters with negated exponents.
    pub fn invert(&self) -> Self {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The map `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &BraidWord) -> Self {
        BraidWord::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Every exponent negated, letters kept in place (mirror image tangle).
    pub fn mirror(&self) -> Self {
        BraidWord::from_letters(self.letters.iter().map(|l| l.inverse()))
    }

    /// Rewrites the word so that only `s1` .. `s4` occur.
    ///
    /// Letters are scanned from the outermost (leftmost) inward. An `s0^e`
    /// becomes `(s2 s3 s2 s4 s3 s2)^e` and an `s5^e` becomes
    /// `(s1 s2 s1 s3 s2 s1)^e`; every letter further inside is relabelled by
    /// `j -> -j` or `j -> 4 - j` (mod 6), once per unit of `|e|`. The
    /// relabelling is carried as an affine map so the scan stays linear.
    pub fn normalize_to_b5(&self) -> Self {
        const FLIP0: [u8; 6] = [2, 3, 2, 4, 3, 2];
        const FLIP5: [u8; 6] = [1, 2, 1, 3, 2, 1];
        let mut map = Affine::IDENTITY;
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let index = map.apply(l.index);
            let block = match index {
                0 => Some((&FLIP0, Affine { sign: -1, shift: 0 })),
                5 => Some((&FLIP5, Affine { sign: -1, shift: 4 })),
                _ => None,
            };
            match block {
                None => out.push(Letter { index, exp: l.exp }),
                Some((gens, flip)) => {
                    for _ in 0..l.exp.unsigned_abs() {
                        if l.exp > 0 {
                            out.extend(gens.iter().map(|&g| Letter { index: g, exp: 1 }));
                        } else {
                            out.extend(gens.iter().rev().map(|&g| Letter { index: g, exp: -1 }));
                        }
                    }
                    if l.exp.unsigned_abs() % 2 == 1 {
                        map = flip.after(map);
                    }
                }
            }
        }
        BraidWord::from_letters(out)
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if let Some(last) = out.last_mut() {
        if last.index == l.index {
            last.exp += l.exp;
            if last.exp == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push(l);
}

/// `j -> sign * j + shift (mod 6)`.
#[derive(Clone, Copy, Debug)]
struct Affine {
    sign: i8,
    shift: u8,
}

impl Affine {
    const IDENTITY: Affine = Affine { sign: 1, shift: 0 };

    fn apply(self, j: u8) -> u8 {
        let v = self.sign as i32 * j as i32 + self.shift as i32;
        v.rem_euclid(GENERATORS as i32) as u8
    }

    /// `self ∘ inner`.
    fn after(self, inner: Affine) -> Affine {
        let shift = self.sign as i32 * inner.shift as i32 + self.shift as i32;
        Affine { sign: self.sign * inner.sign, shift: shift.rem_euclid(GENERATORS as i32) as u8 }
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(parse_token(tok)?);
        }
        Ok(BraidWord::from_letters(letters))
    }
}

fn parse_token(tok: &str) -> Result<Letter, Error> {
    let bad = || Error::MalformedToken(tok.to_string());
    let rest = tok.strip_prefix('s').ok_or_else(bad)?;
    let (digits, exp) = match rest.split_once('^') {
        Some((d, e)) => {
            let e: i64 = e.parse().map_err(|_| bad())?;
            (d, e)
        }
        None => (rest, 1),
    };
    if digits.len() != 1 || !digits.as_bytes()[0].is_ascii_digit() {
        return Err(bad());
    }
    let index = digits.as_bytes()[0] - b'0';
    if index >= GENERATORS {
        return Err(Error::IndexOutOfRange(index as i64));
    }
    if exp == 0 {
        return Err(Error::ZeroExponent);
    }
    Ok(Letter { index, exp })
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parses_example_word() {
        let word = w("s5 s3 s1 s2^-1 s3 s1");
        let idx: Vec<u8> = word.letters().iter().map(|l| l.index).collect();
        let exp: Vec<i64> = word.letters().iter().map(|l| l.exp).collect();
        assert_eq!(idx, vec![5, 3, 1, 2, 3, 1]);
        assert_eq!(exp, vec![1, 1, 1, -1, 1, 1]);
    }

    #[test]
    fn empty_and_cancelling_words() {
        assert!(w("").is_empty());
        assert!(w("s1 s1^-1").is_empty());
        assert_eq!(w("s2 s2 s2^-3 s4"), w("s2^-1 s4"));
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(matches!("s6".parse::<BraidWord>(), Err(Error::IndexOutOfRange(6))));
        assert!(matches!("s1^0".parse::<BraidWord>(), Err(Error::ZeroExponent)));
        for bad in ["t1", "s", "s12", "s1^", "s1^x", "s-1", "s1^+"] {
            assert!(bad.parse::<BraidWord>().is_err(), "{bad}");
        }
        assert_eq!(w("s1^+2"), w("s1 s1"));
    }

    #[test]
    fn display_round_trip() {
        let word = w("s0^-3 s1 s5^2 s4^-1");
        assert_eq!(word.to_string(), "s0^-3 s1 s5^2 s4^-1");
        assert_eq!(w(&word.to_string()), word);
    }

    #[test]
    fn invert_reverses_and_negates() {
        assert_eq!(w("s1 s2^-1").invert(), w("s2 s1^-1"));
        assert!(BraidWord::empty().invert().is_empty());
        let word = w("s3 s1^2 s4^-1");
        assert!(word.compose(&word.invert()).is_empty());
    }

    #[test]
    fn normalize_flip_example() {
        let got = w("s5^-1 s0^-1 s4 s5^-1 s1").normalize_to_b5();
        let expected = w("s1^-1 s2^-1 s3^-1 s1^-1 s2^-1 s1^-1 s4^-1 s2 s3 s2 s4 s3 s2 s1^-1 s3");
        assert_eq!(got, expected);
    }

    #[test]
    fn normalize_single_flips() {
        assert_eq!(w("s0").normalize_to_b5(), w("s2 s3 s2 s4 s3 s2"));
        assert_eq!(w("s5^-1").normalize_to_b5(), w("s1^-1 s2^-1 s3^-1 s1^-1 s2^-1 s1^-1"));
        let plain = w("s1 s2^-2 s4 s3");
        assert_eq!(plain.normalize_to_b5(), plain);
    }

    #[test]
    fn normalize_even_power_keeps_labels() {
        // two flips compose to the identity relabelling
        let got = w("s0^2 s1").normalize_to_b5();
        assert_eq!(got.letters().last().copied(), Some(Letter { index: 1, exp: 1 }));
    }
}
