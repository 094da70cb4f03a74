//! Repetitions: squares, integer powers and fractional powers.
//!
//! Every scan works period by period. For a fixed period `p` the array
//! `run[i]` counts how many consecutive positions from `i` satisfy
//! `w[t] == w[t + p]`; a factor starting at `i` with period `p` can then be
//! extended to length `p + run[i]` and no further.

use serde::{Deserialize, Serialize};

use super::{Letter, Rational, Word};
use crate::{Error, Result};

/// A factor `w[start .. start + span - 1]` with period `period` and
/// exponent `span / period > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FractionalPowerOccurrence {
    pub start: usize,
    pub period: usize,
    pub span: usize,
    pub exponent: Rational,
}

impl FractionalPowerOccurrence {
    fn new(start: usize, period: usize, span: usize) -> Self {
        FractionalPowerOccurrence {
            start,
            period,
            span,
            exponent: Rational::new(span as u64, period as u64),
        }
    }

    /// Checks the occurrence against `w` by direct letter comparison.
    pub fn validate(&self, w: &Word) -> bool {
        let letters = w.letters();
        self.start >= 1
            && self.period >= 1
            && self.span > self.period
            && self.start - 1 + self.span <= letters.len()
            && self.exponent == Rational::new(self.span as u64, self.period as u64)
            && (self.start - 1..self.start - 1 + self.span - self.period)
                .all(|i| letters[i] == letters[i + self.period])
    }

    pub fn factor(&self, w: &Word) -> Result<Word> {
        w.factor(self.start, self.start + self.span - 1)
    }
}

/// Fills `run` for period `p` over `s`; `run.len() == s.len() - p`.
fn runs_for_period(s: &[Letter], p: usize, run: &mut Vec<usize>) {
    let m = s.len() - p;
    run.clear();
    run.resize(m, 0);
    let mut next = 0;
    for i in (0..m).rev() {
        next = if s[i] == s[i + p] { next + 1 } else { 0 };
        run[i] = next;
    }
}

/// The square `uu` with the smallest start, ties broken by the smallest
/// period. The reported span is exactly `2 * period`.
pub fn find_square(w: &Word) -> Option<FractionalPowerOccurrence> {
    let s = w.letters();
    let n = s.len();
    let mut best: Option<(usize, usize)> = None;
    let mut run = Vec::new();
    for p in 1..=n / 2 {
        runs_for_period(s, p, &mut run);
        let limit = best.map_or(n, |(start, _)| start);
        if let Some(i) = (0..limit.min(n + 1 - 2 * p)).find(|&i| run[i] >= p) {
            // strict improvement only: equal starts keep the smaller period
            if best.is_none_or(|(start, _)| i < start) {
                best = Some((i, p));
            }
        }
    }
    best.map(|(i, p)| FractionalPowerOccurrence::new(i + 1, p, 2 * p))
}

/// True iff no factor of `w` is `u^k` with `u` non-empty.
pub fn is_k_power_free(w: &Word, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let s = w.letters();
    let n = s.len();
    let mut run = Vec::new();
    for p in 1..=n / k {
        runs_for_period(s, p, &mut run);
        if run.iter().any(|&r| r >= (k - 1) * p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest `span / period` over all factors of `w`; `1/1` when `w` has no
/// repetition of exponent above 1.
pub fn max_exponent(w: &Word) -> Result<Rational> {
    let s = w.letters();
    let n = s.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut best = Rational::integer(1);
    let mut run = Vec::new();
    for p in 1..n {
        // a period-p factor has exponent at most n/p
        if Rational::new(n as u64, p as u64) <= best {
            break;
        }
        runs_for_period(s, p, &mut run);
        if let Some(&longest) = run.iter().max() {
            if longest > 0 {
                best = best.max(Rational::new((p + longest) as u64, p as u64));
            }
        }
    }
    Ok(best)
}

/// An occurrence with exponent `>= threshold`, smallest start then smallest
/// period. The span is the longest extension with that period from that
/// start. `None` means `w` is threshold-power-free.
pub fn find_power_geq(w: &Word, threshold: Rational) -> Result<Option<FractionalPowerOccurrence>> {
    if threshold <= Rational::integer(1) {
        return Err(Error::InvalidThreshold(threshold));
    }
    let s = w.letters();
    let n = s.len();
    let mut best: Option<(usize, usize, usize)> = None;
    let mut run = Vec::new();
    for p in 1..n {
        if !threshold.le_ratio(n, p) {
            break;
        }
        runs_for_period(s, p, &mut run);
        let limit = best.map_or(run.len(), |(start, _, _)| start.min(run.len()));
        if let Some(i) = (0..limit).find(|&i| run[i] > 0 && threshold.le_ratio(p + run[i], p)) {
            best = Some((i, p, p + run[i]));
        }
    }
    Ok(best.map(|(i, p, span)| FractionalPowerOccurrence::new(i + 1, p, span)))
}
