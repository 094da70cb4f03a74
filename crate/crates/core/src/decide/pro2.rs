use serde::{Deserialize, Serialize};

use crate::morphism::Morphism;
use crate::word::{Letter, Word};
use crate::{Error, Result};

/// Letters `a, b, c, d, x` and words with `s` a suffix of `f(a)`, `p` a
/// prefix of `f(b)`, `sigma` a non-empty suffix of `f(c)`, `pi` a non-empty
/// prefix of `f(d)` and `s p = sigma f(x) pi`. A uniform morphism admitting
/// such a configuration is not square-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pro2Configuration {
    pub a: Letter,
    pub b: Letter,
    pub c: Letter,
    pub d: Letter,
    pub x: Letter,
    pub s: Word,
    pub p: Word,
    pub sigma: Word,
    pub pi: Word,
}

impl Pro2Configuration {
    pub fn validate(&self, f: &Morphism) -> bool {
        let img = |c: Letter| f.image(c).cloned();
        let (Some(fa), Some(fb), Some(fc), Some(fd), Some(fx)) = (
            img(self.a),
            img(self.b),
            img(self.c),
            img(self.d),
            img(self.x),
        ) else {
            return false;
        };
        self.s.is_suffix_of(&fa)
            && self.p.is_prefix_of(&fb)
            && !self.sigma.is_empty()
            && self.sigma.is_suffix_of(&fc)
            && !self.pi.is_empty()
            && self.pi.is_prefix_of(&fd)
            && self.s.concat(&self.p) == self.sigma.concat(&fx).concat(&self.pi)
    }
}

/// Searches for a [`Pro2Configuration`] in the order: `x`, then `|sigma|`,
/// `c`, `|pi|`, `d`, `|s|`, and finally the first `a` and `b` (domain order)
/// that fit. Lengths ascend.
pub fn pro2_scan(f: &Morphism) -> Result<Option<Pro2Configuration>> {
    let len = f.uniform_length().ok_or(Error::NonUniform)?;
    let letters = f.domain().letters();
    if letters.len() < 2 {
        return Err(Error::DomainTooSmall {
            min: 2,
            actual: letters.len(),
        });
    }
    let images = f.images();
    let mut target: Vec<Letter> = Vec::with_capacity(2 * len);
    for (xi, fx) in images.iter().enumerate() {
        for sigma_len in 1..len {
            for (ci, fc) in images.iter().enumerate() {
                let sigma = &fc.letters()[len - sigma_len..];
                for pi_len in 1..=len - sigma_len {
                    for (di, fd) in images.iter().enumerate() {
                        let pi = &fd.letters()[..pi_len];
                        target.clear();
                        target.extend_from_slice(sigma);
                        target.extend_from_slice(fx.letters());
                        target.extend_from_slice(pi);
                        let total = target.len();
                        for s_len in total - len..=len {
                            let (s, p) = target.split_at(s_len);
                            let a = images.iter().position(|w| w.letters().ends_with(s));
                            let b = images.iter().position(|w| w.letters().starts_with(p));
                            if let (Some(ai), Some(bi)) = (a, b) {
                                return Ok(Some(Pro2Configuration {
                                    a: letters[ai],
                                    b: letters[bi],
                                    c: letters[ci],
                                    d: letters[di],
                                    x: letters[xi],
                                    s: Word::from_letters_unchecked(s.to_vec()),
                                    p: Word::from_letters_unchecked(p.to_vec()),
                                    sigma: Word::from_letters_unchecked(sigma.to_vec()),
                                    pi: Word::from_letters_unchecked(pi.to_vec()),
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
