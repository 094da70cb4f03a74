use super::{Certificate, Check, Decision, Evidence, InconclusiveReason, Witness};
use crate::antipower::enumerate_k_anti_power;
use crate::morphism::Morphism;
use crate::word::find_square;

/// Length up to which square-free words must be checked to decide whether
/// `f` is square-free: `max(3, 1 + ceil((M - 3) / m))` for the longest and
/// shortest image lengths `M` and `m`. This is 3 for every uniform
/// morphism. `None` for erasing morphisms, where no such bound applies.
pub fn square_free_test_bound(f: &Morphism) -> Option<usize> {
    let longest = f.images().iter().map(|w| w.len()).max()?;
    let shortest = f.images().iter().map(|w| w.len()).min()?;
    if shortest == 0 {
        return None;
    }
    let extra = longest.saturating_sub(3).div_ceil(shortest);
    Some(3.max(1 + extra))
}

/// Square-free morphism test with the default word length bound of 3.
pub fn test_square_free_morphism(f: &Morphism) -> Decision {
    test_square_free_morphism_up_to(f, 3)
}

/// Applies `f` to every square-free word over the domain of length at most
/// `max_len` (by length, then lexicographically) and reports the first
/// image containing a square. Without one, the verdict is Yes only when
/// `max_len` reaches [`square_free_test_bound`].
pub fn test_square_free_morphism_up_to(f: &Morphism, max_len: usize) -> Decision {
    let mut words_checked = 0;
    let words = enumerate_k_anti_power(f.domain(), 2, max_len).expect("k = 2 is valid");
    for word in words {
        let image = f
            .apply(&word)
            .expect("enumerated words are over the domain");
        if let Some(occurrence) = find_square(&image) {
            return Decision::No {
                witness: Witness::Square {
                    word,
                    image,
                    occurrence,
                },
            };
        }
        words_checked += 1;
    }
    match square_free_test_bound(f) {
        Some(bound) if max_len >= bound => Decision::Yes {
            certificate: Certificate {
                checks: vec![Check::SquareFreeCriterion {
                    max_len,
                    bound,
                    words_checked,
                }],
            },
        },
        _ => Decision::Inconclusive {
            reason: if f.uniform_length().is_some() {
                InconclusiveReason::SquareFreenessUndetermined
            } else {
                InconclusiveReason::NonUniform
            },
            evidence: Evidence {
                k: 2,
                checked_up_to: max_len,
                words_checked,
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::Verdict;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn h() -> Morphism {
        Morphism::from_pairs(&[
            ('a', "abceacd"),
            ('b', "abecaed"),
            ('c', "acbaecd"),
            ('d', "acbeabd"),
            ('e', "acebced"),
        ])
        .unwrap()
    }

    #[test]
    fn h_is_square_free() {
        let d = test_square_free_morphism(&h());
        assert_eq!(d.verdict(), Verdict::Yes);
    }

    #[test]
    fn aba_bab_fails_on_ab() {
        let f = Morphism::from_pairs(&[('a', "aba"), ('b', "bab")]).unwrap();
        match test_square_free_morphism(&f) {
            Decision::No {
                witness:
                    Witness::Square {
                        word,
                        image,
                        occurrence,
                    },
            } => {
                assert_eq!(word, w("ab"));
                assert_eq!(image, w("ababab"));
                assert_eq!((occurrence.start, occurrence.period), (1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identity_is_square_free() {
        let id = Morphism::identity(&"abc".parse().unwrap());
        assert_eq!(test_square_free_morphism(&id).verdict(), Verdict::Yes);
    }

    #[test]
    fn bounds() {
        assert_eq!(square_free_test_bound(&h()), Some(3));
        let f = Morphism::from_pairs(&[('a', "abcbacbcabcba"), ('b', "a"), ('c', "bc")]).unwrap();
        // max(3, 1 + ceil(10 / 1))
        assert_eq!(square_free_test_bound(&f), Some(11));
        let g = Morphism::new(vec![('a', w("ab")), ('b', Word::empty())], None).unwrap();
        assert_eq!(square_free_test_bound(&g), None);
    }
}
