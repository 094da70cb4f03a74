use super::AntiPowerViolation;
use crate::word::{Letter, Word};
use crate::{Error, Result};

/// Reference checker: follows the recursive definition literally, cutting
/// every window into blocks and comparing them letter by letter.
pub fn check_k_anti_power_naive(w: &Word, k: usize) -> Result<Option<AntiPowerViolation>> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    Ok(violation_at_or_below(w.letters(), k))
}

fn violation_at_or_below(s: &[Letter], level: usize) -> Option<AntiPowerViolation> {
    if level > 2 {
        if let Some(v) = violation_at_or_below(s, level - 1) {
            return Some(v);
        }
    }
    for block_len in 1..=s.len() / level {
        let span = level * block_len;
        for start in 0..=s.len() - span {
            let blocks: Vec<&[Letter]> = s[start..start + span].chunks(block_len).collect();
            for i in 0..level {
                for j in i + 1..level {
                    if same_letters(blocks[i], blocks[j]) {
                        return Some(AntiPowerViolation {
                            level,
                            block_len,
                            window_start: start + 1,
                            first_block: i + 1,
                            second_block: j + 1,
                        });
                    }
                }
            }
        }
    }
    None
}

fn same_letters(x: &[Letter], y: &[Letter]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    for t in 0..x.len() {
        if x[t] != y[t] {
            return false;
        }
    }
    true
}
