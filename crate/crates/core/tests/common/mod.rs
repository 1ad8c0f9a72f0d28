//! Brute-force reference implementations, independent of the library's
//! matching and search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Formula as fragments of variable indices (`A` = 0, `B` = 1, ...).
pub fn fragments(f: &str) -> Vec<Vec<usize>> {
    f.split('.')
        .map(|fr| fr.bytes().map(|b| (b - b'A') as usize).collect())
        .collect()
}

pub fn is_factor(w: &[u8], u: &[u8]) -> bool {
    u.is_empty() || (u.len() <= w.len() && w.windows(u.len()).any(|x| x == u))
}

fn image(frag: &[usize], assignment: &[&[u8]]) -> Vec<u8> {
    frag.iter().flat_map(|&v| assignment[v].iter().copied()).collect()
}

/// Tries every assignment of non-empty factors of `w` to the variables.
pub fn brute_occurrence(w: &[u8], f: &str) -> Option<Vec<Vec<u8>>> {
    brute_occurrence_in(&[w.to_vec()], f)
}

/// Same over a set of texts: each fragment image must be a factor of one
/// of them.
pub fn brute_occurrence_in(texts: &[Vec<u8>], f: &str) -> Option<Vec<Vec<u8>>> {
    let frags = fragments(f);
    let nvars = frags.iter().flatten().max().map_or(0, |m| m + 1);
    let mut factors: BTreeSet<&[u8]> = BTreeSet::new();
    for w in texts {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                factors.insert(&w[i..j]);
            }
        }
    }
    let factors: Vec<&[u8]> = factors.into_iter().collect();
    let mut idx = vec![0usize; nvars];
    if factors.is_empty() {
        return None;
    }
    loop {
        let assignment: Vec<&[u8]> = idx.iter().map(|&i| factors[i]).collect();
        if frags
            .iter()
            .all(|fr| texts.iter().any(|w| is_factor(w, &image(fr, &assignment))))
        {
            return Some(assignment.iter().map(|a| a.to_vec()).collect());
        }
        let mut k = 0;
        loop {
            if k == nvars {
                return None;
            }
            idx[k] += 1;
            if idx[k] < factors.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn brute_avoids(w: &[u8], f: &str) -> bool {
    brute_occurrence(w, f).is_none()
}

/// Checks an assignment (variable letter → image) against `w`.
pub fn validate_assignment(w: &[u8], f: &str, images: &[Vec<u8>]) -> bool {
    let refs: Vec<&[u8]> = images.iter().map(Vec::as_slice).collect();
    refs.iter().all(|i| !i.is_empty()) && fragments(f).iter().all(|fr| is_factor(w, &image(fr, &refs)))
}

/// Squares by definition: some `i`, `p` with `w[i..i+p] == w[i+p..i+2p]`.
pub fn brute_has_square(w: &[u8], tmin: usize, tmax: usize) -> bool {
    (tmin.max(1)..=tmax).any(|p| (0..w.len()).any(|i| i + 2 * p <= w.len() && w[i..i + p] == w[i + p..i + 2 * p]))
}

pub fn all_words(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn digits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn render(w: &[u8]) -> String {
    w.iter().map(|&l| char::from(b'0' + l)).collect()
}

/// Plain recursive count of words over `Σ_k` accepted by `ok`, assuming
/// `ok` is factor-closed. Returns counts per length (index 0 = empty word)
/// up to `limit`.
pub fn brute_tree_counts(k: u8, limit: usize, ok: &dyn Fn(&[u8]) -> bool) -> Vec<u64> {
    fn go(k: u8, limit: usize, w: &mut Vec<u8>, counts: &mut Vec<u64>, ok: &dyn Fn(&[u8]) -> bool) {
        counts[w.len()] += 1;
        if w.len() == limit {
            return;
        }
        for a in 0..k {
            w.push(a);
            if ok(w) {
                go(k, limit, w, counts, ok);
            }
            w.pop();
        }
    }
    let mut counts = vec![0; limit + 1];
    go(k, limit, &mut Vec::new(), &mut counts, ok);
    counts
}
