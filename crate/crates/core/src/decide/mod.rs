//! Decision procedures on morphisms.
//!
//! For a uniform morphism `f` on at least three letters, `f` preserves
//! 3-anti-power words if and only if it is square-free, has odd length and
//! maps every 3-anti-power word of length at most 5 to a 3-anti-power word.
//! [`decide_3_anti_power`] runs that pipeline and only answers Yes when all
//! of those facts have been established.

mod pro2;
mod square_free;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::antipower::{check_k_anti_power, enumerate_k_anti_power, AntiPowerViolation};
use crate::morphism::Morphism;
use crate::word::{find_square, FractionalPowerOccurrence, Word};
use crate::{Error, Result};

pub use pro2::{pro2_scan, Pro2Configuration};
pub use square_free::{
    square_free_test_bound, test_square_free_morphism, test_square_free_morphism_up_to,
};

pub const DEFAULT_EVIDENCE_LEN: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Decision {
    Yes {
        certificate: Certificate,
    },
    No {
        witness: Witness,
    },
    Inconclusive {
        reason: InconclusiveReason,
        evidence: Evidence,
    },
}

impl Decision {
    pub fn verdict(&self) -> Verdict {
        match self {
            Decision::Yes { .. } => Verdict::Yes,
            Decision::No { .. } => Verdict::No,
            Decision::Inconclusive { .. } => Verdict::Inconclusive,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Decision::No { witness } => Some(witness),
            _ => None,
        }
    }
}

/// The checks that a Yes verdict rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    UniformLength {
        length: usize,
    },
    OddLength {
        length: usize,
    },
    /// Every square-free word of length at most `max_len` has a square-free
    /// image, and `max_len` reaches the characterization bound.
    SquareFreeCriterion {
        max_len: usize,
        bound: usize,
        words_checked: usize,
    },
    /// Every `k`-anti-power word of length at most `max_len` has a
    /// `k`-anti-power image.
    AntiPowerUpTo {
        k: usize,
        max_len: usize,
        words_checked: usize,
    },
    /// The domain has finitely many 3-anti-power words (at most three
    /// letters) and all of them were checked.
    FiniteDomain {
        domain_size: usize,
        words_checked: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `word` is `k`-anti-power but its image is not.
    AntiPower {
        word: Word,
        k: usize,
        image: Word,
        violation: AntiPowerViolation,
    },
    /// `word` is square-free but its image contains a square.
    Square {
        word: Word,
        image: Word,
        occurrence: FractionalPowerOccurrence,
    },
}

impl Witness {
    pub fn word(&self) -> &Word {
        match self {
            Witness::AntiPower { word, .. } | Witness::Square { word, .. } => word,
        }
    }

    /// Recomputes the image under `f` and the least violation in it.
    pub fn reverify(&self, f: &Morphism) -> bool {
        match self {
            Witness::AntiPower {
                word,
                k,
                image,
                violation,
            } => {
                let Ok(computed) = f.apply(word) else {
                    return false;
                };
                computed == *image
                    && matches!(check_k_anti_power(word, *k), Ok(None))
                    && matches!(check_k_anti_power(&computed, *k), Ok(Some(v)) if v == *violation)
            }
            Witness::Square {
                word,
                image,
                occurrence,
            } => {
                let Ok(computed) = f.apply(word) else {
                    return false;
                };
                computed == *image
                    && find_square(word).is_none()
                    && find_square(&computed) == Some(*occurrence)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InconclusiveReason {
    NonUniform,
    SquareFreenessUndetermined,
    /// No finite criterion is known for this `k`.
    NoFiniteCriterion,
}

/// No `k`-anti-power word of length up to `checked_up_to` was found whose
/// image fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub k: usize,
    pub checked_up_to: usize,
    pub words_checked: usize,
}

/// Outcome of a bounded search over `k`-anti-power words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSearch {
    pub counterexample: Option<Witness>,
    pub words_checked: usize,
    /// Every `k`-anti-power word over the domain was checked: the
    /// enumeration died out before reaching the length bound.
    pub exhausted: bool,
}

/// Checks the images of all `k`-anti-power words over the domain of length
/// at most `max_len`. The counterexample is the first in enumeration order
/// (by length, then lexicographically); lengths are processed one at a time
/// and the words of a length are checked in parallel.
pub fn bounded_anti_power_search(f: &Morphism, k: usize, max_len: usize) -> Result<BoundedSearch> {
    let mut words = enumerate_k_anti_power(f.domain(), k, max_len)?;
    let mut words_checked = 0;
    let mut batch = vec![words.next().expect("the empty word is always enumerated")];
    loop {
        let found = batch.par_iter().find_map_first(|word| {
            let image = f.apply(word).expect("enumerated words are over the domain");
            check_k_anti_power(&image, k)
                .expect("k already validated")
                .map(|violation| Witness::AntiPower {
                    word: word.clone(),
                    k,
                    image,
                    violation,
                })
        });
        if found.is_some() {
            return Ok(BoundedSearch {
                counterexample: found,
                words_checked,
                exhausted: false,
            });
        }
        words_checked += batch.len();
        let len = batch[0].len();
        match words.next_length() {
            Some(next) => batch = next,
            None => {
                return Ok(BoundedSearch {
                    counterexample: None,
                    words_checked,
                    exhausted: len < max_len,
                })
            }
        }
    }
}

/// The first `k`-anti-power word `w` with `|w| <= ell` (in enumeration
/// order) whose image is not `k`-anti-power, with the least violation in
/// the image. `None` means `f` is `k`-anti-power up to `ell`.
pub fn anti_power_up_to(
    f: &Morphism,
    k: usize,
    ell: usize,
) -> Result<Option<(Word, AntiPowerViolation)>> {
    Ok(bounded_anti_power_search(f, k, ell)?
        .counterexample
        .map(|w| match w {
            Witness::AntiPower {
                word, violation, ..
            } => (word, violation),
            Witness::Square { .. } => {
                unreachable!("bounded search only reports anti-power witnesses")
            }
        }))
}

/// Decides whether `f` is a 3-anti-power morphism.
///
/// * Domains of one or two letters have finitely many 3-anti-power words;
///   all of them are checked directly.
/// * Non-uniform morphisms only get bounded evidence up to `evidence_len`,
///   which is conclusive when it covers every 3-anti-power word over the
///   domain (three letters).
/// * An even uniform length is refuted through the image of `abcab`.
/// * Square-freeness is tested next; a failure on a 3-anti-power word
///   refutes `f`, any other failure leaves only bounded evidence.
/// * Finally every 3-anti-power word of length at most 5 is checked.
pub fn decide_3_anti_power(f: &Morphism, evidence_len: usize) -> Result<Decision> {
    if evidence_len < 5 {
        return Err(Error::InvalidParameter(format!(
            "evidence length must be at least 5, got {evidence_len}"
        )));
    }
    let letters = f.domain().letters();

    if letters.len() <= 2 {
        let search = bounded_anti_power_search(f, 3, 3)?;
        if let Some(decision) = finite_domain_decision(f, search) {
            return Ok(decision);
        }
    }

    let Some(length) = f.uniform_length() else {
        return bounded_or_no(f, evidence_len, InconclusiveReason::NonUniform);
    };

    if length % 2 == 0 && letters.len() >= 3 {
        let (a, b, c) = (letters[0], letters[1], letters[2]);
        let word = Word::from_letters_unchecked(vec![a, b, c, a, b]);
        let image = f.apply(&word)?;
        if let Some(violation) = check_k_anti_power(&image, 3)? {
            return Ok(Decision::No {
                witness: Witness::AntiPower {
                    word,
                    k: 3,
                    image,
                    violation,
                },
            });
        }
    }

    let square_free = test_square_free_morphism(f);
    let square_free_check = match square_free {
        Decision::Yes { mut certificate } => certificate.checks.remove(0),
        Decision::No { witness } => {
            if check_k_anti_power(witness.word(), 3)?.is_none() {
                return Ok(Decision::No { witness });
            }
            return bounded_or_no(
                f,
                evidence_len,
                InconclusiveReason::SquareFreenessUndetermined,
            );
        }
        Decision::Inconclusive { .. } => {
            return bounded_or_no(
                f,
                evidence_len,
                InconclusiveReason::SquareFreenessUndetermined,
            );
        }
    };

    let search = bounded_anti_power_search(f, 3, 5)?;
    Ok(match search.counterexample {
        Some(witness) => Decision::No { witness },
        None => Decision::Yes {
            certificate: Certificate {
                checks: vec![
                    Check::UniformLength { length },
                    Check::OddLength { length },
                    square_free_check,
                    Check::AntiPowerUpTo {
                        k: 3,
                        max_len: 5,
                        words_checked: search.words_checked,
                    },
                ],
            },
        },
    })
}

/// Decides whether `f` is a `k`-anti-power morphism as far as possible:
/// `k = 2` is the square-free test, `k = 3` the full pipeline, and larger
/// `k` only gets bounded evidence.
pub fn decide_k_anti_power(f: &Morphism, k: usize, evidence_len: usize) -> Result<Decision> {
    match k {
        0 | 1 => Err(Error::InvalidK { k, min: 2 }),
        2 => Ok(test_square_free_morphism(f)),
        3 => decide_3_anti_power(f, evidence_len),
        _ => {
            let search = bounded_anti_power_search(f, k, evidence_len)?;
            Ok(match search.counterexample {
                Some(witness) => Decision::No { witness },
                None => Decision::Inconclusive {
                    reason: InconclusiveReason::NoFiniteCriterion,
                    evidence: Evidence {
                        k,
                        checked_up_to: evidence_len,
                        words_checked: search.words_checked,
                    },
                },
            })
        }
    }
}

/// A verdict from a bounded search that is conclusive on its own: a
/// counterexample, or an exhausted enumeration.
fn finite_domain_decision(f: &Morphism, search: BoundedSearch) -> Option<Decision> {
    match search.counterexample {
        Some(witness) => Some(Decision::No { witness }),
        None if search.exhausted => Some(Decision::Yes {
            certificate: Certificate {
                checks: vec![Check::FiniteDomain {
                    domain_size: f.domain().len(),
                    words_checked: search.words_checked,
                }],
            },
        }),
        None => None,
    }
}

fn bounded_or_no(
    f: &Morphism,
    evidence_len: usize,
    reason: InconclusiveReason,
) -> Result<Decision> {
    let search = bounded_anti_power_search(f, 3, evidence_len)?;
    let words_checked = search.words_checked;
    Ok(
        finite_domain_decision(f, search).unwrap_or(Decision::Inconclusive {
            reason,
            evidence: Evidence {
                k: 3,
                checked_up_to: evidence_len,
                words_checked,
            },
        }),
    )
}
