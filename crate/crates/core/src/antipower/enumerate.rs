use super::last_windows_ok;
use crate::word::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// All `k`-anti-power words over `alphabet` of length at most `max_len`, by
/// length and then lexicographically in the alphabet's declared order.
/// The empty word comes first.
pub fn enumerate_k_anti_power(
    alphabet: &Alphabet,
    k: usize,
    max_len: usize,
) -> Result<AntiPowerWords> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    Ok(AntiPowerWords {
        letters: alphabet.letters().to_vec(),
        k,
        max_len,
        level: vec![Vec::new()],
        next: 0,
    })
}

/// Iterator returned by [`enumerate_k_anti_power`]. Anti-power words are
/// closed under taking prefixes, so each length is produced by extending
/// the previous one.
#[derive(Debug, Clone)]
pub struct AntiPowerWords {
    letters: Vec<Letter>,
    k: usize,
    max_len: usize,
    level: Vec<Vec<Letter>>,
    next: usize,
}

impl AntiPowerWords {
    /// Consumes the rest of the current length and returns every word of
    /// the next one at once.
    pub fn next_length(&mut self) -> Option<Vec<Word>> {
        if self.next < self.level.len() {
            self.next = self.level.len();
        }
        if !self.advance() {
            return None;
        }
        self.next = self.level.len();
        Some(
            self.level
                .iter()
                .cloned()
                .map(Word::from_letters_unchecked)
                .collect(),
        )
    }

    fn advance(&mut self) -> bool {
        let len = self.level.first().map_or(0, Vec::len);
        if self.level.is_empty() || len >= self.max_len {
            self.level.clear();
            return false;
        }
        let mut extended = Vec::new();
        for word in &self.level {
            for &c in &self.letters {
                let mut candidate = Vec::with_capacity(len + 1);
                candidate.extend_from_slice(word);
                candidate.push(c);
                if last_windows_ok(&candidate, self.k) {
                    extended.push(candidate);
                }
            }
        }
        self.level = extended;
        self.next = 0;
        !self.level.is_empty()
    }
}

impl Iterator for AntiPowerWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next >= self.level.len() && !self.advance() {
            return None;
        }
        let word = self.level[self.next].clone();
        self.next += 1;
        Some(Word::from_letters_unchecked(word))
    }
}
