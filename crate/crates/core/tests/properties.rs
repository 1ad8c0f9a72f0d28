mod common;

use proptest::prelude::*;

use wordavoid::catalog::Catalog;
use wordavoid::morphic::MorphicWordSpec;
use wordavoid::occurrence::{avoids_extension, AvoidanceContext};
use wordavoid::search::{enumerate_avoiders, extendable_words, ConstraintSet, SearchConfig};
use wordavoid::{avoids, is_divisible_by, Alphabet, Formula, Word};

const FORMULAS: &[&str] = &[
    "AA", "AAA", "ABA.BAB", "AAB.BBAA", "ABA.ABBA", "ABAAB", "AA.ABA.ABBA", "ABA.AABB", "AABA.ABB.BBA",
    "AABA.AABBA", "BBA.AABA.AABB", "AAB.ABA.ABB.BBA.BAB.BAA",
];

fn word(k: u8, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 1..=max).prop_map(move |v| Word::new(v, Alphabet::new(k).unwrap()).unwrap())
}

fn any_word(max: usize) -> impl Strategy<Value = Word> {
    (2u8..=3).prop_flat_map(move |k| word(k, max))
}

fn formula() -> impl Strategy<Value = Formula> {
    prop::sample::select(FORMULAS).prop_map(|s| Formula::parse(s).unwrap())
}

fn permutation(k: u8) -> impl Strategy<Value = Vec<u8>> {
    Just((0..k).collect::<Vec<u8>>()).prop_shuffle()
}

/// Random formulas over A, B, C: fragments of length 1..=5 in which every
/// variable of the literal occurs at least twice overall.
fn random_formula() -> impl Strategy<Value = Formula> {
    prop::collection::vec(prop::collection::vec(0u8..3, 1..=5), 1..=4).prop_filter_map("isolated variable", |frags| {
        let text = frags
            .iter()
            .map(|f| f.iter().map(|&v| char::from(b'A' + v)).collect::<String>())
            .collect::<Vec<_>>()
            .join(".");
        Formula::parse(&text).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn contains_factor_is_symmetric(w in any_word(14), start in 0usize..14, len in 1usize..5, seed in any::<u64>()) {
        let n = w.len();
        let s = start % n;
        let e = (s + len).min(n);
        let u = Word::new(w.letters()[s..e].to_vec(), w.alphabet()).unwrap();
        prop_assert!(w.contains_factor(&u).unwrap());
        let k = w.alphabet().size();
        let mut perm: Vec<u8> = (0..k).collect();
        perm.rotate_left((seed % k as u64) as usize);
        for v in [u.clone(), u.complement()] {
            let v = Word::new(v.letters().iter().map(|&l| l % k).collect(), w.alphabet()).unwrap();
            let direct = w.contains_factor(&v).unwrap();
            prop_assert_eq!(direct, w.reversed().contains_factor(&v.reversed()).unwrap());
            prop_assert_eq!(
                direct,
                w.permute_letters(&perm).unwrap().contains_factor(&v.permute_letters(&perm).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn avoidance_is_symmetric(w in word(2, 14), f in formula(), perm in permutation(2)) {
        let a = avoids(&w, &f);
        prop_assert_eq!(a, avoids(&w.reversed(), &f.reversed()));
        prop_assert_eq!(a, avoids(&w.permute_letters(&perm).unwrap(), &f));
    }

    #[test]
    fn avoidance_is_symmetric_ternary(w in word(3, 12), f in formula(), perm in permutation(3)) {
        let a = avoids(&w, &f);
        prop_assert_eq!(a, avoids(&w.reversed(), &f.reversed()));
        prop_assert_eq!(a, avoids(&w.permute_letters(&perm).unwrap(), &f));
    }

    #[test]
    fn avoidance_is_factor_closed(w in word(2, 16), f in formula(), i in 0usize..16, j in 0usize..16) {
        if avoids(&w, &f) {
            let (a, b) = (i % w.len(), j % w.len());
            let (i, j) = (a.min(b), a.max(b));
            let u = Word::new(w.letters()[i..=j].to_vec(), w.alphabet()).unwrap();
            prop_assert!(avoids(&u, &f));
        }
    }

    #[test]
    fn divisibility_transfers_avoidance(w in word(2, 12), big in formula(), small in formula()) {
        if is_divisible_by(&big, &small) && avoids(&w, &small) {
            prop_assert!(avoids(&w, &big));
        }
    }

    #[test]
    fn occurrence_witnesses_validate(w in word(2, 14), f in formula()) {
        match wordavoid::find_occurrence(&w, &f) {
            Some(o) => prop_assert!(o.validate(&w, &f)),
            None => prop_assert!(avoids(&w, &f)),
        }
    }

    #[test]
    fn incremental_extension_agrees(w in word(2, 14), f in formula(), a in 0u8..2) {
        if let Ok(ctx) = AvoidanceContext::new(&w, &f) {
            let (ok, next) = avoids_extension(&w, a, &ctx).unwrap();
            let wa = w.concat(&Word::new(vec![a], Alphabet::BINARY).unwrap()).unwrap();
            prop_assert_eq!(ok, avoids(&wa, &f));
            prop_assert_eq!(next.is_some(), ok);
        }
    }

    #[test]
    fn normal_forms_are_idempotent(f in random_formula()) {
        let (again, dropped) = Formula::normalize(f.fragments().to_vec()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(dropped.is_empty());
        let c = f.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(c.same_up_to_renaming(&f));
        prop_assert_eq!(f.symmetry_canonical().symmetry_canonical(), f.symmetry_canonical());
        // Normalization may leave a variable occurring once; such values
        // print as literals that parsing rejects.
        let once = f.variables().into_iter().any(|v| f.fragments().iter().flatten().filter(|&&x| x == v).count() == 1);
        if !once {
            prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f.clone());
        }
    }

    #[test]
    fn renaming_preserves_avoidance(w in word(2, 12), f in formula()) {
        prop_assert_eq!(avoids(&w, &f), avoids(&w, &f.canonical()));
    }
}

#[test]
fn catalog_formulas_round_trip() {
    let cat = Catalog::builtin().unwrap();
    for e in &cat.formulas {
        let f = e.formula().unwrap();
        assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
    }
}

#[test]
fn tough_formulas_among_exponential_list() {
    let cat = Catalog::builtin().unwrap();
    let tough: Vec<String> = cat
        .formulas
        .iter()
        .filter(|e| e.list == "minimally 2-avoidable" && e.growth == Some(wordavoid::catalog::Growth::Exponential))
        .map(|e| e.formula().unwrap())
        .filter(|f| !f.is_easy())
        .map(|f| f.to_string())
        .collect();
    let want: Vec<String> = ["ABA.BAAB.BAB", "AABA.ABAA.BAB", "AABA.ABAA.BAAB", "ABAAB"]
        .iter()
        .map(|s| Formula::parse(s).unwrap().to_string())
        .collect();
    let mut t = tough.clone();
    t.sort();
    let mut w = want.clone();
    w.sort();
    assert_eq!(t, w);
}

#[test]
fn complement_pairing_gives_even_counts() {
    for s in ["AAB.BBAA", "ABA.AABB", "AA.ABA.ABBA"] {
        let c = ConstraintSet::formula(Formula::parse(s).unwrap())
            .forbid(Word::parse("0110", Alphabet::BINARY).unwrap())
            .forbid(Word::parse("1001", Alphabet::BINARY).unwrap());
        let t = enumerate_avoiders(&c, 2, &SearchConfig::with_limit(40)).unwrap();
        assert!(t.counts[1..].iter().all(|c| c % 2 == 0), "{s}");
    }
}

#[test]
fn aaa_counts_increase() {
    let c = ConstraintSet::formula(Formula::parse("AAA").unwrap());
    let t = enumerate_avoiders(&c, 2, &SearchConfig::with_limit(30)).unwrap();
    assert!(t.counts[5..=30].windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn extendable_words_shrink_with_margin() {
    let c = ConstraintSet::formula(Formula::parse("AA.ABA.ABBA").unwrap());
    let n = 10;
    let sets: Vec<_> = (0..=n).map(|m| extendable_words(&c, 2, n, m).unwrap()).collect();
    for p in sets.windows(2) {
        assert!(p[1].is_subset(&p[0]));
    }
    assert_eq!(sets[n - 1], sets[n]);
}

#[test]
fn fixed_points_are_prefix_stable() {
    let cat = Catalog::builtin().unwrap();
    for name in ["b2", "b3", "b4", "b5", "g_y(b3)", "g_t(b3)", "g_w(b3)"] {
        let s = MorphicWordSpec::parse(name, &cat).unwrap();
        let long = s.prefix(3000).unwrap();
        for n in [1, 7, 100, 999] {
            assert_eq!(s.prefix(n).unwrap().letters(), &long.letters()[..n], "{name}");
        }
    }
}

#[test]
fn uniform_image_lengths() {
    let cat = Catalog::builtin().unwrap();
    let sqf = wordavoid::words::enumerate_square_free(3, 7).unwrap();
    for m in cat.morphisms().iter().filter(|m| m.name().starts_with("m_")) {
        let q = m.uniform_width().unwrap();
        for w in sqf.iter().step_by(11) {
            assert_eq!(m.apply(w).unwrap().len(), q * w.len());
        }
        assert!(m.is_synchronizing(), "{}", m.name());
    }
}
