//! Morphisms between free monoids.

mod format;
mod profile;

use std::collections::HashMap;

use crate::word::{Alphabet, Letter, Word};
use crate::{Error, Result};

pub use format::{parse_morphism, serialize_morphism};
pub use profile::{profile, MorphismProfile};

/// A morphism from `domain*` to `codomain*`, given by the image of every
/// domain letter.
#[derive(Debug, Clone)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
    index: HashMap<Letter, usize>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.images == other.images
    }
}

impl Eq for Morphism {}

impl Morphism {
    /// `rules` pairs each domain letter with its image, in declaration
    /// order. Without an explicit codomain, it is the set of image letters
    /// in order of first occurrence (or the domain, if every image is empty).
    pub fn new(rules: Vec<(Letter, Word)>, codomain: Option<Alphabet>) -> Result<Self> {
        let domain = Alphabet::new(rules.iter().map(|(c, _)| *c))?;
        let images: Vec<Word> = rules.into_iter().map(|(_, w)| w).collect();
        let codomain = match codomain {
            Some(codomain) => {
                for image in &images {
                    if let Some(&c) = image.letters().iter().find(|&&c| !codomain.contains(c)) {
                        return Err(Error::InvalidParameter(format!(
                            "image letter {c:?} is not in the codomain {codomain}"
                        )));
                    }
                }
                codomain
            }
            None => {
                let all: Vec<Letter> = images
                    .iter()
                    .flat_map(|w| w.letters().iter().copied())
                    .collect();
                if all.is_empty() {
                    domain.clone()
                } else {
                    Alphabet::inferred_from(&Word::from_letters_unchecked(all))?
                }
            }
        };
        let index = domain
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        Ok(Morphism {
            domain,
            codomain,
            images,
            index,
        })
    }

    /// Convenience constructor from `(letter, image)` string pairs.
    pub fn from_pairs(pairs: &[(char, &str)]) -> Result<Self> {
        let rules = pairs
            .iter()
            .map(|&(c, img)| Ok((c, img.parse::<Word>()?)))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(rules, None)
    }

    /// The identity on `alphabet`.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let rules = alphabet
            .letters()
            .iter()
            .map(|&c| (c, Word::from_letters_unchecked(vec![c])))
            .collect();
        Morphism::new(rules, Some(alphabet.clone())).expect("identity is well-formed")
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, c: Letter) -> Option<&Word> {
        self.index.get(&c).map(|&i| &self.images[i])
    }

    /// `Some(L)` when every image has the same positive length `L`.
    pub fn uniform_length(&self) -> Option<usize> {
        let len = self.images.first()?.len();
        (len > 0 && self.images.iter().all(|w| w.len() == len)).then_some(len)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.codomain
            .letters()
            .iter()
            .all(|&c| self.domain.contains(c))
    }

    fn check_endomorphism(&self) -> Result<()> {
        match self
            .codomain
            .letters()
            .iter()
            .find(|&&c| !self.domain.contains(c))
        {
            Some(&c) => Err(Error::NotEndomorphism(c)),
            None => Ok(()),
        }
    }

    /// `f(w)`, the concatenation of the images of the letters of `w`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::new();
        for (pos, &c) in w.letters().iter().enumerate() {
            let image = self.image(c).ok_or(Error::NotInDomain {
                letter: c,
                position: pos + 1,
            })?;
            out.extend_from_slice(image.letters());
        }
        Ok(Word::from_letters_unchecked(out))
    }

    /// `f^n(w)`, with `f^0(w) = w`. Requires an endomorphism for `n >= 2`.
    pub fn iterate(&self, w: &Word, n: usize) -> Result<Word> {
        if n >= 2 {
            self.check_endomorphism()?;
        }
        if n == 0 {
            if let Some((pos, &c)) = w
                .letters()
                .iter()
                .enumerate()
                .find(|(_, &c)| !self.domain.contains(c))
            {
                return Err(Error::NotInDomain {
                    letter: c,
                    position: pos + 1,
                });
            }
        }
        let mut current = w.clone();
        for _ in 0..n {
            current = self.apply(&current)?;
        }
        Ok(current)
    }

    /// The length-`n` prefix of the fixed point `f^ω(a)`. Expands lazily,
    /// never holding more than `n + max |f(c)|` letters.
    pub fn fixed_point_prefix(&self, a: Letter, n: usize) -> Result<Word> {
        self.check_endomorphism()?;
        let image = self.image(a).ok_or(Error::NotInDomain {
            letter: a,
            position: 1,
        })?;
        if image.len() < 2 || image.letters()[0] != a {
            return Err(Error::NotProlongable(a));
        }
        let mut out: Vec<Letter> = image.letters().to_vec();
        // out[0] = a has already been expanded into f(a)
        let mut cursor = 1;
        while out.len() < n {
            if cursor >= out.len() {
                return Err(Error::FiniteFixedPoint {
                    letter: a,
                    len: out.len(),
                });
            }
            let c = out[cursor];
            out.extend_from_slice(self.images[self.index[&c]].letters());
            cursor += 1;
        }
        out.truncate(n);
        Ok(Word::from_letters_unchecked(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn h() -> Morphism {
        Morphism::from_pairs(&[
            ('a', "abceacd"),
            ('b', "abecaed"),
            ('c', "acbaecd"),
            ('d', "acbeabd"),
            ('e', "acebced"),
        ])
        .unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(h().apply(&w("ab")).unwrap(), w("abceacdabecaed"));
        assert_eq!(h().apply(&Word::empty()).unwrap(), Word::empty());
        let id = Morphism::identity(&"abc".parse().unwrap());
        assert_eq!(id.apply(&w("abcab")).unwrap(), w("abcab"));
        assert_eq!(
            h().apply(&w("abz")),
            Err(Error::NotInDomain {
                letter: 'z',
                position: 3
            })
        );
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(h().iterate(&w("a"), 1).unwrap(), w("abceacd"));
        assert_eq!(
            h().iterate(&w("a"), 2).unwrap(),
            w("abceacdabecaedacbaecdacebcedabceacdacbaecdacbeabd")
        );
        assert_eq!(h().iterate(&w("a"), 0).unwrap(), w("a"));
    }

    #[test]
    fn iterate_requires_endomorphism() {
        let f = Morphism::from_pairs(&[('a', "xy"), ('b', "yx")]).unwrap();
        assert_eq!(f.iterate(&w("ab"), 1).unwrap(), w("xyyx"));
        assert_eq!(f.iterate(&w("ab"), 2), Err(Error::NotEndomorphism('x')));
    }

    #[test]
    fn fixed_point_examples() {
        let prefix =
            "abceacdabecaedacbaecdacebcedabceacdacbaecdacbeabdabceacdabecaedacebcedacbaecdabceacd";
        assert_eq!(h().fixed_point_prefix('a', 84).unwrap(), w(prefix));
        assert_eq!(h().fixed_point_prefix('a', 7).unwrap(), w("abceacd"));
        assert_eq!(h().fixed_point_prefix('a', 0).unwrap(), Word::empty());
        assert_eq!(
            h().fixed_point_prefix('b', 3),
            Err(Error::NotProlongable('b'))
        );
    }

    #[test]
    fn finite_fixed_point_is_reported() {
        let f = Morphism::new(vec![('a', w("ab")), ('b', Word::empty())], None).unwrap();
        assert_eq!(f.fixed_point_prefix('a', 2).unwrap(), w("ab"));
        assert_eq!(
            f.fixed_point_prefix('a', 3),
            Err(Error::FiniteFixedPoint {
                letter: 'a',
                len: 2
            })
        );
    }

    #[test]
    fn uniformity() {
        assert_eq!(h().uniform_length(), Some(7));
        assert_eq!(
            Morphism::from_pairs(&[('a', "ab"), ('b', "a")])
                .unwrap()
                .uniform_length(),
            None
        );
        let erasing = Morphism::new(vec![('a', Word::empty())], None).unwrap();
        assert_eq!(erasing.uniform_length(), None);
    }

    #[test]
    fn explicit_codomain_must_cover_images() {
        let r = Morphism::new(vec![('a', w("ab"))], Some("a".parse().unwrap()));
        assert!(r.is_err());
    }
}
