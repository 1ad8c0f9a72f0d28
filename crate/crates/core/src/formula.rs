//! Patterns and formulas over the variables `A`..`Z`.
//!
//! A [`Formula`] is kept normalized: duplicate fragments and fragments that
//! are factors of other fragments are dropped, and the survivors are sorted
//! by (length, lexicographic). Two formulas are equal exactly when their
//! normalized fragment lists are equal.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::contains_slice;

pub const MAX_VARIABLES: usize = 26;

pub fn variable_name(v: u8) -> char {
    char::from(b'A' + v)
}

/// A non-empty word over the variables, stored as indices (`A` = 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Vec<u8>);

impl Pattern {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyWord("patterns are non-empty"));
        }
        if let Some(&v) = symbols.iter().find(|&&v| v as usize >= MAX_VARIABLES) {
            return Err(Error::Parse(format!("variable index {v} is not in A..Z")));
        }
        Ok(Pattern(symbols))
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        let symbols = text
            .chars()
            .map(|c| {
                if c.is_ascii_uppercase() {
                    Ok(c as u8 - b'A')
                } else {
                    Err(Error::Parse(format!("illegal character {c:?} in {text:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pattern(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn occurrence_counts(&self) -> [usize; MAX_VARIABLES] {
        let mut counts = [0; MAX_VARIABLES];
        for &v in &self.0 {
            counts[v as usize] += 1;
        }
        counts
    }

    /// Every variable occurs at least twice.
    pub fn is_doubled(&self) -> bool {
        self.occurrence_counts().iter().all(|&c| c == 0 || c >= 2)
    }

    /// Replaces every isolated variable by a dot and normalizes.
    pub fn to_formula(&self) -> Result<Formula> {
        let counts = self.occurrence_counts();
        let fragments: Vec<Vec<u8>> = self
            .0
            .split(|&v| counts[v as usize] == 1)
            .filter(|block| !block.is_empty())
            .map(<[u8]>::to_vec)
            .collect();
        if fragments.is_empty() {
            return Err(Error::AllIsolated(self.to_string()));
        }
        Ok(Formula::normalize(fragments)?.0)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|&v| write!(f, "{}", variable_name(v)))
    }
}

fn cmp_fragments(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    fragments: Vec<Vec<u8>>,
}

impl Formula {
    /// Parses `FRAGMENT('.'FRAGMENT)*`. A variable that occurs exactly once
    /// in the literal is rejected; redundant fragments are dropped silently
    /// (see [`Formula::parse_reporting`]).
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_reporting(text).map(|(f, _)| f)
    }

    /// Like [`Formula::parse`], also returning the fragments removed by
    /// normalization.
    pub fn parse_reporting(text: &str) -> Result<(Self, Vec<Pattern>)> {
        if text.is_empty() {
            return Err(Error::Parse("empty formula".into()));
        }
        let fragments = text
            .split('.')
            .map(|frag| {
                if frag.is_empty() {
                    Err(Error::Parse(format!("empty fragment in {text:?}")))
                } else {
                    Pattern::parse(frag).map(|p| p.0)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut counts = [0usize; MAX_VARIABLES];
        fragments.iter().flatten().for_each(|&v| counts[v as usize] += 1);
        if let Some(v) = counts.iter().position(|&c| c == 1) {
            return Err(Error::IsolatedVariable(variable_name(v as u8)));
        }
        Self::normalize(fragments)
    }

    /// Drops duplicates and fragments that are factors of another fragment,
    /// then sorts. Returns the normalized formula and the dropped fragments.
    pub fn normalize(fragments: Vec<Vec<u8>>) -> Result<(Self, Vec<Pattern>)> {
        if fragments.is_empty() {
            return Err(Error::InvalidArgument("a formula needs at least one fragment".into()));
        }
        for frag in &fragments {
            Pattern::new(frag.clone())?;
        }
        let mut sorted = fragments;
        // Longest first, so dominated fragments are seen after their superwords.
        sorted.sort_by(|a, b| cmp_fragments(b, a));
        let mut kept: Vec<Vec<u8>> = Vec::new();
        let mut dropped = Vec::new();
        for frag in sorted {
            if kept.iter().any(|k| contains_slice(k, &frag)) {
                dropped.push(Pattern(frag));
            } else {
                kept.push(frag);
            }
        }
        kept.sort_by(|a, b| cmp_fragments(a, b));
        Ok((Formula { fragments: kept }, dropped))
    }

    pub fn from_fragments(fragments: Vec<Vec<u8>>) -> Result<Self> {
        Ok(Self::normalize(fragments)?.0)
    }

    pub fn fragments(&self) -> &[Vec<u8>] {
        &self.fragments
    }

    /// Distinct variables, ascending.
    pub fn variables(&self) -> Vec<u8> {
        self.fragments
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn max_fragment_len(&self) -> usize {
        self.fragments.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Formula {
        let fragments = self
            .fragments
            .iter()
            .map(|f| f.iter().rev().copied().collect())
            .collect();
        Formula::from_fragments(fragments).expect("reversal keeps fragments valid")
    }

    /// Applies `map[old] = new` to every variable.
    pub fn rename(&self, map: &[u8]) -> Formula {
        let fragments = self
            .fragments
            .iter()
            .map(|f| f.iter().map(|&v| map[v as usize]).collect())
            .collect();
        Formula::from_fragments(fragments).expect("renaming keeps fragments valid")
    }

    /// Least formula over all bijective renamings of the occurring
    /// variables onto `A, B, ...`.
    pub fn canonical(&self) -> Formula {
        let vars = self.variables();
        let mut best: Option<Formula> = None;
        let mut perm: Vec<u8> = (0..vars.len() as u8).collect();
        loop {
            let mut map = [0u8; MAX_VARIABLES];
            for (i, &v) in vars.iter().enumerate() {
                map[v as usize] = perm[i];
            }
            let candidate = self.rename(&map);
            if best.as_ref().is_none_or(|b| candidate.cmp_key(b) == Ordering::Less) {
                best = Some(candidate);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.expect("at least one renaming")
    }

    /// Canonical representative of `{f, f^R}` up to renaming.
    pub fn symmetry_canonical(&self) -> Formula {
        let a = self.canonical();
        let b = self.reversed().canonical();
        if b.cmp_key(&a) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn same_up_to_renaming(&self, other: &Formula) -> bool {
        self.canonical() == other.canonical()
    }

    fn cmp_key(&self, other: &Formula) -> Ordering {
        for (a, b) in self.fragments.iter().zip(&other.fragments) {
            match cmp_fragments(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.fragments.len().cmp(&other.fragments.len())
    }

    /// Every variable lies inside some square factor `uu` of a fragment.
    pub fn is_easy(&self) -> bool {
        let mut covered = [false; MAX_VARIABLES];
        for frag in &self.fragments {
            let n = frag.len();
            for start in 0..n {
                for half in 1..=(n - start) / 2 {
                    let sq = &frag[start..start + 2 * half];
                    if sq[..half] == sq[half..] {
                        sq.iter().for_each(|&v| covered[v as usize] = true);
                    }
                }
            }
        }
        self.variables().iter().all(|&v| covered[v as usize])
    }

    /// Variables that lie in no square factor of any fragment.
    pub fn unsquared_variables(&self) -> Vec<u8> {
        self.variables()
            .into_iter()
            .filter(|&v| {
                !self.fragments.iter().any(|frag| {
                    let n = frag.len();
                    (0..n).any(|s| {
                        (1..=(n - s) / 2).any(|h| {
                            frag[s..s + h] == frag[s + h..s + 2 * h]
                                && frag[s..s + 2 * h].contains(&v)
                        })
                    })
                })
            })
            .collect()
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, frag) in self.fragments.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            for &v in frag {
                write!(f, "{}", variable_name(v))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::parse(s)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Formula::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    fn frags(f: &Formula) -> Vec<String> {
        f.to_string().split('.').map(String::from).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(frags(&f("AAB.BBAA")), ["AAB", "BBAA"]);
        assert_eq!(f("ABAAB").fragments().len(), 1);
        let (g, dropped) = Formula::parse_reporting("AAB.B.BA").unwrap();
        // B is a factor of BA, but BA is not a factor of AAB.
        assert_eq!(g.to_string(), "BA.AAB");
        assert_eq!(dropped, vec![Pattern::parse("B").unwrap()]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Formula::parse(""), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse("AA..BB"), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse("AA."), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse("AaB"), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse("AA B"), Err(Error::Parse(_))));
        assert!(matches!(Formula::parse("AAB"), Err(Error::IsolatedVariable('B'))));
    }

    #[test]
    fn pattern_to_formula_examples() {
        let p = |s| Pattern::parse(s).unwrap().to_formula().unwrap();
        assert_eq!(p("ABACAABB"), f("ABA.AABB"));
        assert_eq!(p("AABACAABB"), f("AABA.AABB"));
        assert_eq!(p("ABACBA").to_string(), "ABA");
        assert!(matches!(
            Pattern::parse("ABC").unwrap().to_formula(),
            Err(Error::AllIsolated(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let n = |v: &[&str]| {
            let raw = v.iter().map(|s| Pattern::parse(s).unwrap().0).collect();
            Formula::normalize(raw).unwrap().0.to_string()
        };
        assert_eq!(n(&["ABA", "BA"]), "ABA");
        assert_eq!(n(&["AAB", "BBAA"]), "AAB.BBAA");
        assert_eq!(n(&["AA", "AA"]), "AA");
        assert!(Formula::normalize(vec![]).is_err());
        assert!(Formula::normalize(vec![vec![]]).is_err());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(f("ABAAB").reversed(), f("BAABA"));
        assert_eq!(f("AAB.BBAB").reversed(), f("BAA.BABB"));
        let g = f("AA.ABAB.BB");
        assert_eq!(g.reversed(), f("AA.BABA.BB"));
        assert!(g.reversed().same_up_to_renaming(&g));
        assert_eq!(g.reversed().reversed(), g);
    }

    #[test]
    fn canonical_examples() {
        let swap = {
            let mut m = [0u8; MAX_VARIABLES];
            m[0] = 1;
            m[1] = 0;
            m
        };
        let g = f("BBA.ABB");
        assert_eq!(g.rename(&swap).canonical(), g.canonical());
        assert_eq!(
            f("BAB.ABA.AABB").canonical(),
            f("ABA.BAB.BBAA").rename(&swap).canonical()
        );
        assert_eq!(f("AAA").canonical(), f("AAA"));
        assert_eq!(f("BBB").canonical(), f("AAA"));
    }

    #[test]
    fn doubled() {
        let d = |s| Pattern::parse(s).unwrap().is_doubled();
        assert!(d("AABB"));
        assert!(!d("AAB"));
        assert!(d("ABAB"));
    }

    #[test]
    fn easy_and_tough() {
        assert!(!f("ABAAB").is_easy());
        assert!(!f("AABA.ABAA.BAB").is_easy());
        assert!(f("AA.ABAB.BB").is_easy());
        assert_eq!(f("ABA.BAAB.BAB").unsquared_variables(), vec![1]);
    }
}
