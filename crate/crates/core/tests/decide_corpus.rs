//! Consistency between the decision procedures over a seeded corpus of
//! small uniform morphisms.

use apw_core::antipower::check_k_anti_power;
use apw_core::decide::{
    anti_power_up_to, decide_3_anti_power, pro2_scan, test_square_free_morphism, Decision, Verdict,
};
use apw_core::morphism::{profile, Morphism};
use apw_core::word::{Alphabet, Word};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const LETTERS: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

fn random_uniform(
    rng: &mut impl Rng,
    domain_size: usize,
    codomain_size: usize,
    len: usize,
) -> Morphism {
    let rules = LETTERS[..domain_size]
        .iter()
        .map(|&c| {
            let image: Vec<char> = (0..len)
                .map(|_| LETTERS[rng.gen_range(0..codomain_size)])
                .collect();
            (c, Word::new(image).unwrap())
        })
        .collect();
    Morphism::new(rules, None).unwrap()
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

fn corpus() -> Vec<Morphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = vec![h(), Morphism::identity(&"abc".parse().unwrap())];
    while out.len() < 150 {
        let domain_size = rng.gen_range(2..=4);
        let codomain_size = domain_size + rng.gen_range(0..=1);
        let len = *[1usize, 2, 3, 3, 5, 5].choose(&mut rng).unwrap();
        out.push(random_uniform(&mut rng, domain_size, codomain_size, len));
    }
    out
}

#[test]
fn pro2_configuration_implies_not_square_free() {
    let mut found = 0;
    for f in corpus() {
        if let Some(cfg) = pro2_scan(&f).unwrap() {
            found += 1;
            assert!(cfg.validate(&f));
            assert_eq!(
                test_square_free_morphism(&f).verdict(),
                Verdict::No,
                "{f:?}"
            );
        }
    }
    assert!(found > 0);
}

#[test]
fn square_free_implies_ps() {
    let mut square_free = 0;
    for f in corpus() {
        if test_square_free_morphism(&f).verdict() == Verdict::Yes {
            square_free += 1;
            assert!(profile(&f).ps, "{f:?}");
        }
        if !profile(&f).ps {
            assert_eq!(test_square_free_morphism(&f).verdict(), Verdict::No);
        }
    }
    assert!(square_free > 0);
}

#[test]
fn yes_verdicts_survive_longer_search_and_no_witnesses_reverify() {
    let mut yes = 0;
    for f in corpus() {
        match decide_3_anti_power(&f, 9).unwrap() {
            Decision::Yes { .. } => {
                yes += 1;
                assert_eq!(anti_power_up_to(&f, 3, 9).unwrap(), None, "{f:?}");
            }
            Decision::No { witness } => assert!(witness.reverify(&f), "{f:?}"),
            Decision::Inconclusive { .. } => {}
        }
    }
    assert!(yes >= 2);
}

#[test]
fn even_lengths_are_never_yes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let domain_size = rng.gen_range(3..=5);
        let len = *[2usize, 4, 6].choose(&mut rng).unwrap();
        let f = random_uniform(&mut rng, domain_size, domain_size, len);
        assert_ne!(decide_3_anti_power(&f, 9).unwrap().verdict(), Verdict::Yes);
        let abc = f.domain().letters();
        let abcab = Word::new(vec![abc[0], abc[1], abc[2], abc[0], abc[1]]).unwrap();
        assert!(check_k_anti_power(&f.apply(&abcab).unwrap(), 3)
            .unwrap()
            .is_some());
    }
}

#[test]
fn renamed_h_is_still_three_anti_power() {
    // swapping letters on both sides preserves the property
    let swap = |c: char| match c {
        'a' => 'b',
        'b' => 'a',
        other => other,
    };
    let h = h();
    let rules = h
        .domain()
        .letters()
        .iter()
        .map(|&c| {
            (
                swap(c),
                Word::new(
                    h.image(c)
                        .unwrap()
                        .letters()
                        .iter()
                        .map(|&x| swap(x))
                        .collect(),
                )
                .unwrap(),
            )
        })
        .collect();
    let g = Morphism::new(
        rules,
        Some(Alphabet::new(['a', 'b', 'c', 'd', 'e']).unwrap()),
    )
    .unwrap();
    assert_eq!(decide_3_anti_power(&g, 9).unwrap().verdict(), Verdict::Yes);
}
