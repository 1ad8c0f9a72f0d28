//! Library results against brute-force reference computations.

mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use wordavoid::catalog::Catalog;
use wordavoid::morphic::{sqf_image_factors, verify_squares, MorphicWordSpec, Verdict};
use wordavoid::occurrence::divisibility_witness;
use wordavoid::search::{
    avoiders_of_length, enumerate_avoiders, extendable_words, ConstraintSet, SearchConfig,
};
use wordavoid::words::{enumerate_square_free, find_square};
use wordavoid::{find_occurrence, is_divisible_by, Alphabet, Formula, Word};

fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

#[test]
fn find_square_matches_brute_force() {
    for (k, max) in [(2u8, 14usize), (3, 11)] {
        let bad = (1..=max)
            .flat_map(|n| common::all_words(k, n))
            .collect::<Vec<_>>()
            .into_par_iter()
            .find_any(|w| {
                let n = w.len();
                [(1, n), (2, n), (3, 4), (2, 2)].iter().any(|&(lo, hi)| {
                    let hit = find_square(w, lo, hi);
                    let brute = common::brute_has_square(w, lo, hi);
                    hit.is_some() != brute
                        || hit.is_some_and(|h| {
                            !h.holds_in(w)
                                || h.period < lo
                                || h.period > hi
                                || common::brute_has_square(w, lo, h.period - 1)
                        })
                })
            });
        assert!(bad.is_none(), "disagreement on {}", common::render(&bad.unwrap()));
    }
}

#[test]
fn square_free_counts_match_filtering() {
    for n in 1..=10 {
        let lib = enumerate_square_free(3, n).unwrap();
        let brute: Vec<Vec<u8>> = common::all_words(3, n)
            .into_iter()
            .filter(|w| !common::brute_has_square(w, 1, n))
            .collect();
        assert_eq!(lib.len(), brute.len(), "length {n}");
        for w in &lib {
            assert!(find_square(w.letters(), 1, n).is_none());
        }
        let lib: BTreeSet<Vec<u8>> = lib.into_iter().map(Word::into_letters).collect();
        assert_eq!(lib, brute.into_iter().collect());
    }
}

#[test]
fn occurrences_match_brute_force_on_random_words() {
    let formulas = [
        "AA", "ABA.BAB", "AAB.BBAA", "ABAAB", "AA.ABA.ABBA", "AABA.AABBA", "BAB.ABA.AABB", "ABAB.BABA",
    ];
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..400 {
        let k = rng.gen_range(2..=3u8);
        let len = rng.gen_range(1..=11);
        let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..k)).collect();
        let word = Word::new(w.clone(), Alphabet::new(k).unwrap()).unwrap();
        for s in formulas {
            let lib = find_occurrence(&word, &f(s));
            let brute = common::brute_occurrence(&w, s);
            assert_eq!(lib.is_some(), brute.is_some(), "{s} in {}", common::render(&w));
            if let Some(o) = lib {
                assert!(o.validate(&word, &f(s)));
            }
        }
    }
}

#[test]
fn divisibility_matches_brute_force() {
    let cat = Catalog::builtin().unwrap();
    let mut texts: Vec<String> = cat.formulas.iter().map(|e| e.text.clone()).collect();
    texts.extend(["AABA.AABBA", "ABAABB", "AA", "AAA", "ABA.BAB", "ABAB"].map(String::from));
    for big in &texts {
        let bf = f(big);
        let frags: Vec<Vec<u8>> = bf.fragments().to_vec();
        for small in &texts {
            let sf = f(small);
            // The oracle indexes variables from A; catalog formulas only use A and B.
            let brute = common::brute_occurrence_in(&frags, &sf.to_string()).is_some();
            assert_eq!(is_divisible_by(&bf, &sf), brute, "{big} / {small}");
            if let Some(wit) = divisibility_witness(&bf, &sf) {
                let imgs: Vec<Vec<u8>> = sf
                    .variables()
                    .iter()
                    .map(|&v| {
                        wit[&wordavoid::formula::variable_name(v)]
                            .bytes()
                            .map(|b| b - b'A')
                            .collect()
                    })
                    .collect();
                for fr in common::fragments(&sf.to_string()) {
                    let img: Vec<u8> = fr.iter().flat_map(|&v| imgs[v].clone()).collect();
                    assert!(frags.iter().any(|t| common::is_factor(t, &img)));
                }
            }
        }
    }
    assert!(is_divisible_by(&f("ABAABB"), &f("ABA.AABB")));
}

#[test]
fn catalog_counts_match_filtering_up_to_12() {
    let cat = Catalog::builtin().unwrap();
    for e in cat.figure_rows() {
        let t = enumerate_avoiders(&ConstraintSet::formula(e.formula().unwrap()), 2, &SearchConfig::with_limit(12))
            .unwrap();
        for n in 1..=12 {
            let brute = common::all_words(2, n)
                .into_par_iter()
                .filter(|w| common::brute_avoids(w, &e.text))
                .count() as u64;
            assert_eq!(t.count(n), brute, "{} at length {n}", e.text);
        }
    }
}

#[test]
fn forbidden_factors_and_square_floor_match_filtering() {
    let c = ConstraintSet::formula(f("AA.ABA.ABBA"))
        .forbid(Word::parse("0110", Alphabet::BINARY).unwrap())
        .squares_from(3);
    let t = enumerate_avoiders(&c, 2, &SearchConfig::with_limit(12)).unwrap();
    for n in 1..=12 {
        let brute = common::all_words(2, n)
            .into_iter()
            .filter(|w| {
                !common::is_factor(w, &[0, 1, 1, 0])
                    && !common::brute_has_square(w, 3, n)
                    && common::brute_avoids(w, "AA.ABA.ABBA")
            })
            .count() as u64;
        assert_eq!(t.count(n), brute, "length {n}");
    }
}

#[test]
fn extendable_words_match_filtering() {
    let c = ConstraintSet::formula(f("ABA.AABB"));
    let (n, m) = (6, 5);
    let lib: BTreeSet<Vec<u8>> = extendable_words(&c, 2, n, m)
        .unwrap()
        .into_iter()
        .map(Word::into_letters)
        .collect();
    let long: Vec<Vec<u8>> = avoiders_of_length(&c, 2, n + 2 * m).unwrap();
    for w in &long {
        assert!(common::brute_avoids(w, "ABA.AABB"));
    }
    let brute: BTreeSet<Vec<u8>> = long.iter().map(|w| w[m..m + n].to_vec()).collect();
    assert_eq!(lib, brute);
}

#[test]
fn search_is_identical_without_symmetry_or_threads() {
    let c = ConstraintSet::formula(f("AAB.BABB"));
    let a = enumerate_avoiders(&c, 2, &SearchConfig::default()).unwrap();
    let cfg = SearchConfig {
        use_symmetry: false,
        threads: Some(1),
        split_depth: 5,
        ..SearchConfig::default()
    };
    let b = enumerate_avoiders(&c, 2, &cfg).unwrap();
    assert_eq!(a.counts, b.counts);
    assert_eq!(a.witness_longest, b.witness_longest);
}

#[test]
fn g_y_image_factors_match_scan() {
    let cat = Catalog::builtin().unwrap();
    let gy = cat.morphism("g_y").unwrap();
    let set = sqf_image_factors(&gy, 6, 3).unwrap();
    // Reference: scan the images of every square-free ternary word of
    // length at most 6.
    let mut brute = BTreeSet::new();
    for n in 1..=6 {
        for w in common::all_words(3, n) {
            if common::brute_has_square(&w, 1, n) {
                continue;
            }
            let img: Vec<u8> = w.iter().flat_map(|&l| gy.image(l).to_vec()).collect();
            for x in img.windows(3) {
                brute.insert(x.to_vec());
            }
        }
    }
    let lib: BTreeSet<Vec<u8>> = set.into_iter().map(Word::into_letters).collect();
    assert_eq!(lib, brute);
    assert!(lib.contains(&vec![1, 1, 1]));
    let two = sqf_image_factors(&gy, 6, 2).unwrap();
    assert!(two.contains(&Word::parse("11", Alphabet::BINARY).unwrap()));
    assert_eq!(sqf_image_factors(&gy, 6, 3).unwrap(), sqf_image_factors(&gy, 6, 3).unwrap());
}

#[test]
fn uniform_images_contain_their_letter_images() {
    let cat = Catalog::builtin().unwrap();
    for m in cat.morphisms().iter().filter(|m| m.name().starts_with("m_")) {
        let q = m.uniform_width().unwrap();
        let set = sqf_image_factors(m, 3, q).unwrap();
        for a in 0..3 {
            assert!(set.contains(&Word::parse(&common::render(m.image(a)), Alphabet::BINARY).unwrap()));
        }
    }
}

#[test]
fn square_certificate_examples() {
    let cat = Catalog::builtin().unwrap();
    let g11 = cat.morphism("m_aa_abab_bb").unwrap();
    assert_eq!(g11.uniform_width(), Some(11));
    assert_eq!(verify_squares(&g11, 4).unwrap().verdict, Verdict::Certified);
    let s3 = verify_squares(&g11, 3).unwrap();
    assert_eq!(s3.verdict, Verdict::Refuted);
    let cex = s3.checks.iter().find(|c| !c.passed).unwrap().counterexample.clone().unwrap();
    assert!(cex.contains("period 3"), "{cex}");
    let g50 = cat.morphism("m_abab_baba").unwrap();
    assert_eq!(verify_squares(&g50, 3).unwrap().verdict, Verdict::Certified);
    assert!(cat.morphism("m_abaab").unwrap().is_synchronizing());
    assert!(verify_squares(&cat.morphism("g_y").unwrap(), 3).is_err());
}

#[test]
fn certified_morphisms_avoid_on_long_images() {
    // Independent spot check: the image of a long square-free prefix avoids
    // the claimed formulas and squares.
    let cat = Catalog::builtin().unwrap();
    let b3 = MorphicWordSpec::parse("b3", &cat).unwrap();
    let pre = b3.prefix(24).unwrap();
    cat.claims.par_iter().for_each(|c| {
        let g = cat.morphism(&c.morphism).unwrap();
        let img = g.apply(&pre).unwrap();
        let window = &img.letters()[..img.len().min(400)];
        assert!(find_square(window, c.sq, window.len()).is_none(), "{}", c.morphism);
        let w = Word::new(window.to_vec(), Alphabet::BINARY).unwrap();
        for fo in c.formulas().unwrap() {
            assert!(wordavoid::avoids(&w, &fo), "{} / {fo}", c.morphism);
        }
    });
}
