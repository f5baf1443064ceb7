//! Braid words on an even number of strands.
//!
//! A word is read from the top of the diagram (t = 0) downward. The letter
//! `σ_i^{+1}` crosses the strand in column `i` over the strand in column
//! `i + 1`; `σ_i^{-1}` is the opposite crossing. Words are elements of the
//! free monoid on these letters: nothing here reduces or normalizes them.

use std::fmt;
use std::ops::Neg;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Restriction of the braid homeomorphism to the endpoint set: column
/// `k` at the top goes to column `images[k]` at the bottom.
pub type EndpointPermutation = Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

/// A signed Artin generator `σ_index^{±1}`; `index` is one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Self { index, sign }
    }

    pub fn positive(index: usize) -> Self {
        Self::new(index, Sign::Positive)
    }

    pub fn negative(index: usize) -> Self {
        Self::new(index, Sign::Negative)
    }

    /// The letter as a signed integer, e.g. `σ_2^{-1}` is `-2`.
    pub fn to_signed(self) -> i64 {
        self.sign.value() * self.index as i64
    }

    pub fn inverse(self) -> Self {
        Self::new(self.index, -self.sign)
    }
}

impl Serialize for BraidLetter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_signed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

fn check_strands(strands: usize) -> Result<()> {
    if strands == 0 || !strands.is_multiple_of(2) {
        return Err(Error::OddStrandCount(strands));
    }
    Ok(())
}

impl BraidWord {
    /// The identity braid on `strands` strands.
    pub fn empty(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(Self {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        check_strands(strands)?;
        for (position, letter) in letters.iter().enumerate() {
            if letter.index == 0 || letter.index >= strands {
                return Err(Error::IndexOutOfRange {
                    position: position + 1,
                    index: letter.index,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word from signed integers (`-2` is `σ_2^{-1}`).
    pub fn from_signed(strands: usize, values: &[i64]) -> Result<Self> {
        check_strands(strands)?;
        let letters = values
            .iter()
            .enumerate()
            .map(|(i, &v)| letter_from_signed(i + 1, v, strands))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { strands, letters })
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    /// `self` on top, `other` below.
    pub fn concatenate(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Inserts `letters` at the top of the word (next to the top arcs).
    pub fn prepend(&self, letters: &[BraidLetter]) -> Result<BraidWord> {
        BraidWord::new(self.strands, letters.to_vec())?.concatenate(self)
    }

    /// Inserts `letters` at the bottom of the word (next to the bottom arcs).
    pub fn append(&self, letters: &[BraidLetter]) -> Result<BraidWord> {
        self.concatenate(&BraidWord::new(self.strands, letters.to_vec())?)
    }

    /// Where each top column ends up at the bottom. Signs are ignored.
    pub fn permutation(&self) -> EndpointPermutation {
        permutation_of(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", letter.to_signed())?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

fn letter_from_signed(position: usize, value: i64, strands: usize) -> Result<BraidLetter> {
    if value == 0 {
        return Err(Error::ZeroToken { position });
    }
    let index = value.unsigned_abs() as usize;
    if index >= strands {
        return Err(Error::IndexOutOfRange {
            position,
            index,
            strands,
        });
    }
    let sign = if value > 0 { Sign::Positive } else { Sign::Negative };
    Ok(BraidLetter::new(index, sign))
}

/// Parses the whitespace-separated signed-integer braid format.
///
/// Token positions in errors are one-based.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let letters = text
        .split_whitespace()
        .enumerate()
        .map(|(i, token)| {
            let value: i64 = token.parse().map_err(|_| Error::NotAnInteger {
                position: i + 1,
                token: token.to_string(),
            })?;
            letter_from_signed(i + 1, value, strands)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BraidWord { strands, letters })
}

pub fn permutation_of(word: &BraidWord) -> EndpointPermutation {
    let mut perm = Permutation::identity(word.strands);
    for letter in &word.letters {
        perm.swap_targets(letter.index - 1, letter.index);
    }
    perm
}

/// True when odd columns go to odd columns and even to even.
pub fn preserves_parity_classes(perm: &EndpointPermutation) -> bool {
    perm.images().iter().enumerate().all(|(k, &x)| k % 2 == x % 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, strands: usize) -> BraidWord {
        parse_braid(text, strands).unwrap()
    }

    #[test]
    fn parses_letters_in_order() {
        let w = word("2 2 2", 4);
        assert_eq!(w.letters(), &[BraidLetter::positive(2); 3]);
        assert!(word("", 4).is_empty());
        assert_eq!(
            word("-1 3", 4).letters(),
            &[BraidLetter::negative(1), BraidLetter::positive(3)]
        );
        assert_eq!(word(" 2\t-1\n 2 ", 4).to_string(), "2 -1 2");
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(parse_braid("1 0", 4), Err(Error::ZeroToken { position: 2 }));
        assert_eq!(
            parse_braid("4", 4),
            Err(Error::IndexOutOfRange {
                position: 1,
                index: 4,
                strands: 4
            })
        );
        assert_eq!(parse_braid("1", 3), Err(Error::OddStrandCount(3)));
        assert_eq!(parse_braid("1", 0), Err(Error::OddStrandCount(0)));
        assert!(matches!(
            parse_braid("1 x", 4),
            Err(Error::NotAnInteger { position: 2, .. })
        ));
        assert!(matches!(
            parse_braid("1.5", 4),
            Err(Error::NotAnInteger { position: 1, .. })
        ));
    }

    #[test]
    fn permutation_examples() {
        assert!(permutation_of(&word("", 4)).is_identity());
        // σ₂³: (2 3) applied three times is (2 3)
        assert_eq!(permutation_of(&word("2 2 2", 4)).to_string(), "(2 3)");
        assert_eq!(permutation_of(&word("1", 4)).to_string(), "(1 2)");
        assert_eq!(permutation_of(&word("-2 -2 2", 4)).to_string(), "(2 3)");
    }

    #[test]
    fn parity_classes() {
        assert!(preserves_parity_classes(&Permutation::identity(6)));
        assert!(!preserves_parity_classes(&permutation_of(&word("1", 4))));
        let p = Permutation::from_one_based(&[3, 4, 1, 2]).unwrap();
        assert!(preserves_parity_classes(&p));
    }

    #[test]
    fn joining_words() {
        let w = word("1", 4).prepend(&[BraidLetter::negative(1)]).unwrap();
        assert_eq!(w.to_string(), "-1 1");
        assert!(w.permutation().is_identity());

        let w = word("2 -1 3", 4);
        assert_eq!(BraidWord::empty(4).unwrap().concatenate(&w).unwrap(), w);
        assert_eq!(
            word("2", 4).append(&[BraidLetter::positive(3)]).unwrap().to_signed(),
            vec![2, 3]
        );
        assert_eq!(
            word("1", 4).concatenate(&word("1", 6)),
            Err(Error::StrandMismatch { left: 4, right: 6 })
        );
        assert!(word("1", 4).append(&[BraidLetter::positive(4)]).is_err());
    }
}
