//! Anti-power sequences and anti-power words.
//!
//! [`check_k_anti_power`] compares blocks through rolling fingerprints and
//! confirms every fingerprint match letter by letter before reporting it.
//! [`check_k_anti_power_naive`] is an independent oracle for the same
//! definition.

mod count;
mod enumerate;
mod naive;

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};
use crate::{Error, Result};

pub use count::count_anti_power_sequences;
pub use enumerate::{enumerate_k_anti_power, AntiPowerWords};
pub use naive::check_k_anti_power_naive;

/// Certificate that a word is not `k`-anti-power: the window
/// `w[window_start .. window_start + level * block_len - 1]`, cut into
/// `level` blocks of length `block_len`, has blocks `first_block` and
/// `second_block` equal (1-based, `first_block < second_block`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AntiPowerViolation {
    pub level: usize,
    pub block_len: usize,
    pub window_start: usize,
    pub first_block: usize,
    pub second_block: usize,
}

impl AntiPowerViolation {
    /// Re-checks the two blocks against `w` by direct comparison.
    pub fn validate(&self, w: &Word) -> bool {
        let s = w.letters();
        if self.level < 2
            || self.block_len == 0
            || self.window_start == 0
            || self.first_block == 0
            || self.first_block >= self.second_block
            || self.second_block > self.level
            || self.window_start - 1 + self.level * self.block_len > s.len()
        {
            return false;
        }
        let a = self.window_start - 1 + (self.first_block - 1) * self.block_len;
        let b = self.window_start - 1 + (self.second_block - 1) * self.block_len;
        s[a..a + self.block_len] == s[b..b + self.block_len]
    }

    /// The window as a word.
    pub fn window(&self, w: &Word) -> Result<Word> {
        w.factor(
            self.window_start,
            self.window_start + self.level * self.block_len - 1,
        )
    }
}

/// True iff the `k` consecutive blocks of length `|w| / k` are pairwise
/// distinct.
pub fn is_anti_power_sequence(w: &Word, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    if w.is_empty() || !w.len().is_multiple_of(k) {
        return Err(Error::NotMultiple { len: w.len(), k });
    }
    let blocks: Vec<&[Letter]> = w.letters().chunks(w.len() / k).collect();
    Ok((0..k).all(|i| (i + 1..k).all(|j| blocks[i] != blocks[j])))
}

const MODULUS: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3d_5b79_a2c4_e687 % MODULUS;

fn mul_mod(a: u64, b: u64) -> u64 {
    let t = a as u128 * b as u128;
    let t = (t >> 61) as u64 + (t as u64 & MODULUS);
    if t >= MODULUS {
        t - MODULUS
    } else {
        t
    }
}

/// Polynomial prefix fingerprints modulo `2^61 - 1`.
struct Fingerprints {
    prefix: Vec<u64>,
    power: Vec<u64>,
}

impl Fingerprints {
    fn new(s: &[Letter]) -> Self {
        let mut prefix = Vec::with_capacity(s.len() + 1);
        let mut power = Vec::with_capacity(s.len() + 1);
        prefix.push(0);
        power.push(1);
        for (i, &c) in s.iter().enumerate() {
            let h = mul_mod(prefix[i], BASE) + c as u64 + 1;
            prefix.push(if h >= MODULUS { h - MODULUS } else { h });
            power.push(mul_mod(power[i], BASE));
        }
        Fingerprints { prefix, power }
    }

    /// Fingerprint of `s[start .. start + len]`.
    fn get(&self, start: usize, len: usize) -> u64 {
        let shifted = mul_mod(self.prefix[start], self.power[len]);
        let end = self.prefix[start + len];
        if end >= shifted {
            end - shifted
        } else {
            end + MODULUS - shifted
        }
    }
}

/// Returns the least violation by `(level, block_len, window_start,
/// first_block, second_block)`, or `None` if `w` is a `k`-anti-power word.
///
/// Level 2 is square-freeness; each level `m >= 3` requires every factor of
/// length `m * l` to split into `m` pairwise distinct blocks. Words shorter
/// than `k` are therefore judged at their own length, and words of length
/// at most 1 always pass.
pub fn check_k_anti_power(w: &Word, k: usize) -> Result<Option<AntiPowerViolation>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let s = w.letters();
    let n = s.len();
    if n < 2 {
        return Ok(None);
    }
    let fp = Fingerprints::new(s);
    let mut blocks: Vec<u64> = Vec::with_capacity(n);
    for level in 2..=k.min(n) {
        for block_len in 1..=n / level {
            blocks.clear();
            blocks.extend((0..=n - block_len).map(|q| fp.get(q, block_len)));
            for start in 0..=n - level * block_len {
                for i in 0..level {
                    let a = start + i * block_len;
                    for j in i + 1..level {
                        let b = start + j * block_len;
                        if blocks[a] == blocks[b] && s[a..a + block_len] == s[b..b + block_len] {
                            return Ok(Some(AntiPowerViolation {
                                level,
                                block_len,
                                window_start: start + 1,
                                first_block: i + 1,
                                second_block: j + 1,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Assuming `s[..s.len() - 1]` is `k`-anti-power, tells whether `s` is too,
/// by inspecting only the windows that end at the last letter.
pub(crate) fn last_windows_ok(s: &[Letter], k: usize) -> bool {
    let n = s.len();
    for level in 2..=k.min(n) {
        for block_len in 1..=n / level {
            let start = n - level * block_len;
            for i in 0..level {
                let a = start + i * block_len;
                for j in i + 1..level {
                    let b = start + j * block_len;
                    if s[a..a + block_len] == s[b..b + block_len] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn violation(
        level: usize,
        block_len: usize,
        window_start: usize,
        i: usize,
        j: usize,
    ) -> AntiPowerViolation {
        AntiPowerViolation {
            level,
            block_len,
            window_start,
            first_block: i,
            second_block: j,
        }
    }

    #[test]
    fn sequences() {
        assert!(is_anti_power_sequence(&w("aababbab"), 4).unwrap());
        assert!(!is_anti_power_sequence(&w("abababab"), 4).unwrap());
        assert!(is_anti_power_sequence(&w("ababababbaaa"), 4).unwrap());
        assert_eq!(
            is_anti_power_sequence(&w("abc"), 2),
            Err(Error::NotMultiple { len: 3, k: 2 })
        );
        assert!(is_anti_power_sequence(&Word::empty(), 2).is_err());
        assert!(is_anti_power_sequence(&w("ab"), 1).is_err());
    }

    #[test]
    fn worked_examples() {
        assert_eq!(check_k_anti_power(&w("abcab"), 3).unwrap(), None);
        assert_eq!(check_k_anti_power(&w("ab"), 3).unwrap(), None);
        assert_eq!(check_k_anti_power(&Word::empty(), 5).unwrap(), None);
        assert_eq!(
            check_k_anti_power(&w("abcac"), 3).unwrap(),
            Some(violation(3, 1, 3, 1, 3))
        );
        // "bcb" at position 2 precedes the block-length-2 window "abcbab"
        assert_eq!(
            check_k_anti_power(&w("abcbab"), 3).unwrap(),
            Some(violation(3, 1, 2, 1, 3))
        );
        let v = check_k_anti_power(&w("abababab"), 4).unwrap().unwrap();
        assert_eq!(v, violation(2, 2, 1, 1, 2));
        assert_eq!(
            check_k_anti_power(&w("a"), 1),
            Err(Error::InvalidK { k: 1, min: 2 })
        );
    }

    #[test]
    fn short_words_use_their_own_length() {
        // "aba" is square-free, hence 3-anti-power only if it passes level 3
        assert_eq!(check_k_anti_power(&w("aba"), 2).unwrap(), None);
        assert_eq!(
            check_k_anti_power(&w("aba"), 3).unwrap(),
            Some(violation(3, 1, 1, 1, 3))
        );
        assert_eq!(check_k_anti_power(&w("abc"), 7).unwrap(), None);
    }

    #[test]
    fn fingerprints_agree_with_slices() {
        let s: Vec<char> = "abracadabra".chars().collect();
        let fp = Fingerprints::new(&s);
        assert_eq!(fp.get(0, 4), fp.get(7, 4));
        assert_ne!(fp.get(0, 4), fp.get(6, 4));
    }

    #[test]
    fn violations_validate() {
        let word = w("abcbab");
        let v = check_k_anti_power(&word, 3).unwrap().unwrap();
        assert!(v.validate(&word));
        assert_eq!(v.window(&word).unwrap(), w("bcb"));
        assert!(violation(3, 2, 1, 1, 3).validate(&word));
        assert!(!violation(3, 2, 1, 1, 2).validate(&word));
    }
}
