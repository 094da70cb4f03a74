use serde::{Deserialize, Serialize};

use super::Morphism;
use crate::word::Letter;

/// Structural classification of a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismProfile {
    pub uniform_length: Option<usize>,
    pub non_erasing: bool,
    /// No image is a prefix of another letter's image.
    pub prefix: bool,
    /// No image is a suffix of another letter's image.
    pub suffix: bool,
    pub bifix: bool,
    /// No factorization `f(a) = ps`, `f(b) = ps'`, `f(c) = p's` with
    /// `b != a` and `c != a` (`c = b` allowed).
    pub ps: bool,
}

pub fn profile(f: &Morphism) -> MorphismProfile {
    let images = f.images();
    let distinct_pairs = || {
        (0..images.len()).flat_map(move |i| {
            (0..images.len())
                .filter(move |&j| j != i)
                .map(move |j| (i, j))
        })
    };
    let prefix = !distinct_pairs().any(|(i, j)| images[i].is_prefix_of(&images[j]));
    let suffix = !distinct_pairs().any(|(i, j)| images[i].is_suffix_of(&images[j]));
    MorphismProfile {
        uniform_length: f.uniform_length(),
        non_erasing: images.iter().all(|w| !w.is_empty()),
        prefix,
        suffix,
        bifix: prefix && suffix,
        ps: ps_witness(f).is_none(),
    }
}

/// First `(a, b, c, split)` with `f(a) = ps`, `p` a prefix of `f(b)` and `s`
/// a suffix of `f(c)`, where `b != a`, `c != a`.
pub(crate) fn ps_witness(f: &Morphism) -> Option<(Letter, Letter, Letter, usize)> {
    let letters = f.domain().letters();
    let images = f.images();
    for (a, fa) in images.iter().enumerate() {
        let fa = fa.letters();
        for split in 0..=fa.len() {
            let (p, s) = fa.split_at(split);
            let b = (0..images.len()).find(|&b| b != a && images[b].letters().starts_with(p));
            let c = (0..images.len()).find(|&c| c != a && images[c].letters().ends_with(s));
            if let (Some(b), Some(c)) = (b, c) {
                return Some((letters[a], letters[b], letters[c], split));
            }
        }
    }
    None
}
