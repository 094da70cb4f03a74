//! Letters, alphabets and finite words.
//!
//! Public positions are 1-based and ranges are inclusive, so `w[i..j]` is
//! written `w.factor(i, j)` and `w.factor(i, i - 1)` is the empty word.

mod rational;
mod repetition;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub use rational::Rational;
pub use repetition::{
    find_power_geq, find_square, is_k_power_free, max_exponent, FractionalPowerOccurrence,
};

/// A letter is a single character.
pub type Letter = char;

/// Printable and not whitespace.
pub fn is_valid_letter(c: char) -> bool {
    !c.is_whitespace() && !c.is_control()
}

fn check_letter(c: char) -> Result<char> {
    if is_valid_letter(c) {
        Ok(c)
    } else {
        Err(Error::InvalidLetter(c))
    }
}

/// An ordered set of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut out: Vec<Letter> = Vec::new();
        for c in letters {
            check_letter(c)?;
            if out.contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet { letters: out })
    }

    /// The distinct letters of `w` in order of first occurrence.
    pub fn inferred_from(w: &Word) -> Result<Self> {
        let mut seen = Vec::new();
        for &c in w.letters() {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        Alphabet::new(seen)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, c: Letter) -> bool {
        self.letters.contains(&c)
    }

    pub fn index_of(&self, c: Letter) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Alphabet::new(s.chars())
    }
}

/// A finite word. The empty word is `Word::empty()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        for &c in &letters {
            check_letter(c)?;
        }
        Ok(Word { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The `i`-th letter, 1-based.
    pub fn letter(&self, i: usize) -> Option<Letter> {
        i.checked_sub(1).and_then(|i| self.letters.get(i).copied())
    }

    /// `w[i..j]` with 1-based inclusive bounds, `0 <= i - 1 <= j <= |w|`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i - 1 > j || j > self.len() {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                len: self.len(),
            });
        }
        Ok(Word {
            letters: self.letters[i - 1..j].to_vec(),
        })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `w^e`, with `w^0 = ε`.
    pub fn pow(&self, e: usize) -> Word {
        Word {
            letters: self.letters.repeat(e),
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.letters.ends_with(&self.letters)
    }

    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.letters.iter().all(|&c| alphabet.contains(c))
    }

    /// True iff `w` occurs in `ww` at a position other than the two trivial
    /// ones, i.e. `ww = x w y` with `x` and `y` non-empty.
    pub fn is_internal_factor_of_square(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let doubled = self.letters.repeat(2);
        (1..n).any(|shift| doubled[shift..shift + n] == self.letters[..])
    }

    /// Primitive iff not an internal factor of its own square.
    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && !self.is_internal_factor_of_square()
    }

    /// Returns `(root, e)` with `w = root^e` and `root` primitive.
    pub fn primitive_root(&self) -> Result<(Word, usize)> {
        let n = self.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let period = smallest_period(&self.letters);
        if n.is_multiple_of(period) {
            Ok((
                Word {
                    letters: self.letters[..period].to_vec(),
                },
                n / period,
            ))
        } else {
            Ok((self.clone(), 1))
        }
    }
}

/// Smallest period from the border (failure) function.
fn smallest_period(s: &[Letter]) -> usize {
    let n = s.len();
    let mut border = vec![0usize; n + 1];
    let mut k = 0usize;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = border[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i + 1] = k;
    }
    n - border[n]
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(s.chars().collect())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
