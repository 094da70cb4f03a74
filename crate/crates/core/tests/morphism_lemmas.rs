//! Factorization lemmas for prefix and suffix morphisms, checked on
//! seeded random fixtures.

use apw_core::morphism::{profile, Morphism};
use apw_core::word::Word;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const DOMAIN: [char; 3] = ['a', 'b', 'c'];

fn random_word(rng: &mut impl Rng, letters: &[char], len: usize) -> Vec<char> {
    (0..len).map(|_| *letters.choose(rng).unwrap()).collect()
}

fn is_prefix_code(images: &[Vec<char>]) -> bool {
    (0..images.len())
        .all(|i| (0..images.len()).all(|j| i == j || !images[j].starts_with(&images[i])))
}

fn is_suffix_code(images: &[Vec<char>]) -> bool {
    (0..images.len()).all(|i| (0..images.len()).all(|j| i == j || !images[j].ends_with(&images[i])))
}

/// Random non-uniform morphisms on {a, b, c} whose images pass `keep`.
fn fixtures(
    seed: u64,
    count: usize,
    keep: fn(&[Vec<char>]) -> bool,
) -> Vec<(Morphism, Vec<Vec<char>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let images: Vec<Vec<char>> = (0..3)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                random_word(&mut rng, &['x', 'y'], len)
            })
            .collect();
        if !keep(&images) {
            continue;
        }
        let rules = DOMAIN
            .iter()
            .zip(&images)
            .map(|(&c, img)| (c, Word::new(img.clone()).unwrap()))
            .collect();
        out.push((Morphism::new(rules, None).unwrap(), images));
    }
    out
}

/// Every `v` with `f(v)` a prefix of `target`, found by depth-first search.
fn preimages_of_prefixes(images: &[Vec<char>], target: &[char]) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((v, used)) = stack.pop() {
        out.push((v.clone(), used));
        for (i, img) in images.iter().enumerate() {
            if target[used..].starts_with(img) {
                let mut next = v.clone();
                next.push(i);
                stack.push((next, used + img.len()));
            }
        }
    }
    out
}

#[test]
fn prefix_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (f, images) in fixtures(1, 30, is_prefix_code) {
        assert!(profile(&f).prefix);
        for _ in 0..20 {
            let len = rng.gen_range(0..=4);
            let u: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
            let a = rng.gen_range(0..3);
            let p1_len = rng.gen_range(0..=images[a].len());
            let mut target: Vec<char> = u.iter().flat_map(|&i| images[i].clone()).collect();
            target.extend_from_slice(&images[a][..p1_len]);
            let p1 = &images[a][..p1_len];
            for (v, used) in preimages_of_prefixes(&images, &target) {
                let p2 = &target[used..];
                for (b, fb) in images.iter().enumerate() {
                    if !fb.starts_with(p2) {
                        continue;
                    }
                    let excluded = (p1.is_empty() && p2 == fb.as_slice())
                        || (p1 == images[a].as_slice() && p2.is_empty());
                    if excluded {
                        continue;
                    }
                    assert_eq!(v, u, "f = {:?}, b = {b}", images);
                    assert_eq!(p2, p1);
                }
            }
        }
    }
}

#[test]
fn suffix_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (f, images) in fixtures(2, 30, is_suffix_code) {
        assert!(profile(&f).suffix);
        // mirror images reduce the suffix case to the prefix search
        let mirrored: Vec<Vec<char>> = images
            .iter()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        for _ in 0..20 {
            let len = rng.gen_range(0..=4);
            let u: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
            let a = rng.gen_range(0..3);
            let s1_len = rng.gen_range(0..=images[a].len());
            let s1 = &images[a][images[a].len() - s1_len..];
            let mut target: Vec<char> = s1.to_vec();
            target.extend(u.iter().flat_map(|&i| images[i].clone()));
            let reversed: Vec<char> = target.iter().rev().copied().collect();
            for (v_rev, used) in preimages_of_prefixes(&mirrored, &reversed) {
                let s2 = &target[..target.len() - used];
                let v: Vec<usize> = v_rev.into_iter().rev().collect();
                for fb in &images {
                    if !fb.ends_with(s2) {
                        continue;
                    }
                    let excluded = (s1.is_empty() && s2 == fb.as_slice())
                        || (s1 == images[a].as_slice() && s2.is_empty());
                    if excluded {
                        continue;
                    }
                    assert_eq!(v, u, "f = {:?}", images);
                    assert_eq!(s2, s1);
                }
            }
        }
    }
}

#[test]
fn prefix_morphisms_are_injective() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (f, _) in fixtures(3, 30, is_prefix_code) {
        for _ in 0..200 {
            let (lu, lv) = (rng.gen_range(0..6), rng.gen_range(0..6));
            let u = Word::new(random_word(&mut rng, &DOMAIN, lu)).unwrap();
            let v = Word::new(random_word(&mut rng, &DOMAIN, lv)).unwrap();
            if u != v {
                assert_ne!(f.apply(&u).unwrap(), f.apply(&v).unwrap());
            }
        }
    }
}

#[test]
fn profile_invariants() {
    for (f, _) in fixtures(4, 200, |_| true) {
        let p = profile(&f);
        assert_eq!(p.bifix, p.prefix && p.suffix);
        assert!(!p.ps || p.bifix);
        assert!(p.uniform_length.is_none() || p.non_erasing);
    }
}
