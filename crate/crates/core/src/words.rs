//! Finite words over small indexed alphabets.
//!
//! Letters are stored as `u8` indices `0..size` and rendered as decimal
//! digits, so `Σ_3` words look like `012021`. Most of the heavy lifting
//! elsewhere in the crate works on raw `&[u8]` slices; [`Word`] is the
//! checked value type used at API boundaries.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ALPHABET: u8 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);
    pub const TERNARY: Alphabet = Alphabet(3);

    pub fn new(size: u8) -> Result<Self> {
        if (1..=MAX_ALPHABET).contains(&size) {
            Ok(Alphabet(size))
        } else {
            Err(Error::AlphabetSize(size as usize))
        }
    }

    pub fn size(self) -> u8 {
        self.0
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        0..self.0
    }

    pub fn contains(self, letter: u8) -> bool {
        letter < self.0
    }
}

/// A finite word; every letter is below the alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !alphabet.contains(l)) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                size: alphabet.size(),
            });
        }
        Ok(Word { letters, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    /// Parses a digit string over the given alphabet.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let letters = parse_digits(text)?;
        Word::new(letters, alphabet)
    }

    /// Parses a digit string, taking the smallest alphabet (at least binary)
    /// that contains every letter.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let letters = parse_digits(text)?;
        let size = letters.iter().copied().max().map_or(2, |m| (m + 1).max(2));
        Word::new(letters, Alphabet::new(size)?)
    }

    pub(crate) fn from_raw(letters: Vec<u8>, alphabet: Alphabet) -> Self {
        debug_assert!(letters.iter().all(|&l| alphabet.contains(l)));
        Word { letters, alphabet }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters over a larger alphabet.
    pub fn widen(&self, alphabet: Alphabet) -> Result<Self> {
        Word::new(self.letters.clone(), alphabet)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_same_alphabet(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_raw(letters, self.alphabet))
    }

    fn check_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.size(),
                right: other.alphabet.size(),
            });
        }
        Ok(())
    }

    /// The distinct factors of length `n`; empty when `n > |w|`.
    pub fn factors(&self, n: usize) -> Result<BTreeSet<Word>> {
        if n == 0 {
            return Err(Error::EmptyWord("factor length must be at least 1"));
        }
        Ok(distinct_factors(&self.letters, n)
            .into_iter()
            .map(|f| Word::from_raw(f, self.alphabet))
            .collect())
    }

    pub fn contains_factor(&self, u: &Word) -> Result<bool> {
        self.check_same_alphabet(u)?;
        if u.is_empty() {
            return Err(Error::EmptyWord("factor must be non-empty"));
        }
        Ok(contains_slice(&self.letters, &u.letters))
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_raw(letters, self.alphabet)
    }

    /// Applies a letter permutation given as `perm[letter] = image`.
    pub fn permute_letters(&self, perm: &[u8]) -> Result<Word> {
        check_permutation(perm, self.alphabet)?;
        let letters = self.letters.iter().map(|&l| perm[l as usize]).collect();
        Ok(Word::from_raw(letters, self.alphabet))
    }

    /// Exchanges 0 and 1 (binary complement).
    pub fn complement(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|&l| match l {
                0 => 1,
                1 => 0,
                x => x,
            })
            .collect();
        Word::from_raw(letters, self.alphabet)
    }

    pub fn find_square(&self, tmin: usize, tmax: usize) -> Result<Option<SquareHit>> {
        if tmin == 0 || tmin > tmax {
            return Err(Error::InvalidArgument(format!(
                "square period range [{tmin}, {tmax}] is empty or starts at 0"
            )));
        }
        Ok(find_square(&self.letters, tmin, tmax))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.letters))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_auto(s)
    }
}

pub fn parse_digits(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) => Ok(d as u8),
            None => Err(Error::Parse(format!("invalid letter {c:?} in word {text:?}"))),
        })
        .collect()
}

pub fn render(letters: &[u8]) -> String {
    letters.iter().map(|&l| char::from(b'0' + l)).collect()
}

pub(crate) fn check_permutation(perm: &[u8], alphabet: Alphabet) -> Result<()> {
    let k = alphabet.size() as usize;
    let mut seen = vec![false; k];
    if perm.len() != k {
        return Err(Error::NotAPermutation(perm.to_vec()));
    }
    for &p in perm {
        if (p as usize) >= k || seen[p as usize] {
            return Err(Error::NotAPermutation(perm.to_vec()));
        }
        seen[p as usize] = true;
    }
    Ok(())
}

pub(crate) fn contains_slice(haystack: &[u8], needle: &[u8]) -> bool {
    if needle.len() > haystack.len() {
        return false;
    }
    if needle.is_empty() {
        return true;
    }
    haystack.windows(needle.len()).any(|w| w == needle)
}

pub(crate) fn distinct_factors(letters: &[u8], n: usize) -> BTreeSet<Vec<u8>> {
    if n == 0 || n > letters.len() {
        return BTreeSet::new();
    }
    letters.windows(n).map(<[u8]>::to_vec).collect()
}

/// A square `uu` at `position` with `|u| = period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareHit {
    pub position: usize,
    pub period: usize,
}

impl SquareHit {
    pub fn holds_in(&self, letters: &[u8]) -> bool {
        let (p, q) = (self.position, self.period);
        q >= 1
            && p + 2 * q <= letters.len()
            && letters[p..p + q] == letters[p + q..p + 2 * q]
    }
}

/// Finds a square with period in `[tmin, tmax]`, preferring the smallest
/// period and then the leftmost position.
pub fn find_square(letters: &[u8], tmin: usize, tmax: usize) -> Option<SquareHit> {
    let n = letters.len();
    let tmin = tmin.max(1);
    let tmax = tmax.min(n / 2);
    for period in tmin..=tmax {
        // Length of the current run of positions i with w[i] == w[i + period].
        let mut run = 0;
        for i in 0..n - period {
            if letters[i] == letters[i + period] {
                run += 1;
                if run == period {
                    return Some(SquareHit {
                        position: i + 1 - period,
                        period,
                    });
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

/// True when `letters` ends with a square of period at least `tmin`.
pub(crate) fn has_square_suffix(letters: &[u8], tmin: usize) -> bool {
    let n = letters.len();
    (tmin.max(1)..=n / 2).any(|p| letters[n - 2 * p..n - p] == letters[n - p..])
}

pub(crate) fn is_square_free(letters: &[u8]) -> bool {
    find_square(letters, 1, letters.len() / 2).is_none()
}

/// All square-free words of length `n` over `Σ_k`, in lexicographic order.
pub fn enumerate_square_free(k: u8, n: usize) -> Result<Vec<Word>> {
    let alphabet = Alphabet::new(k)?;
    Ok(square_free_raw(k, n)
        .into_iter()
        .map(|w| Word::from_raw(w, alphabet))
        .collect())
}

pub(crate) fn square_free_raw(k: u8, n: usize) -> Vec<Vec<u8>> {
    fn go(k: u8, n: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..k {
            cur.push(a);
            if !has_square_suffix(cur, 1) {
                go(k, n, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Two bits per letter, for alphabets of size at most 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PackedWord {
    len: usize,
    blocks: Vec<u64>,
}

impl PackedWord {
    pub fn from_letters(letters: &[u8]) -> Result<Self> {
        let mut p = PackedWord::default();
        for &l in letters {
            p.push(l)?;
        }
        Ok(p)
    }

    pub fn push(&mut self, letter: u8) -> Result<()> {
        if letter > 3 {
            return Err(Error::LetterOutOfRange { letter, size: 4 });
        }
        let (block, shift) = (self.len / 32, (self.len % 32) * 2);
        if block == self.blocks.len() {
            self.blocks.push(0);
        }
        self.blocks[block] |= u64::from(letter) << shift;
        self.len += 1;
        Ok(())
    }

    pub fn get(&self, index: usize) -> Option<u8> {
        (index < self.len).then(|| ((self.blocks[index / 32] >> ((index % 32) * 2)) & 3) as u8)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn to_letters(&self) -> Vec<u8> {
        (0..self.len).filter_map(|i| self.get(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_auto(s).unwrap()
    }

    fn set(words: &[&str], k: u8) -> BTreeSet<Word> {
        let a = Alphabet::new(k).unwrap();
        words.iter().map(|s| Word::parse(s, a).unwrap()).collect()
    }

    #[test]
    fn factors_examples() {
        assert_eq!(w("0102").factors(2).unwrap(), set(&["01", "10", "02"], 3));
        assert_eq!(w("000").factors(1).unwrap(), set(&["0"], 2));
        assert!(w("01").factors(3).unwrap().is_empty());
        assert!(w("01").factors(0).is_err());
    }

    #[test]
    fn contains_factor_examples() {
        assert!(w("01202").contains_factor(&w("120").widen(Alphabet::TERNARY).unwrap()).unwrap());
        assert!(!w("0101").contains_factor(&w("00")).unwrap());
        assert!(w("01110001110").contains_factor(&w("01110001110")).unwrap());
        assert!(matches!(
            w("012").contains_factor(&w("01")),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn reverse_and_permute() {
        assert_eq!(w("001").reversed(), w("100"));
        let swap = [1, 0];
        assert_eq!(w("0100").permute_letters(&swap).unwrap(), w("1011"));
        let x = w("0110100");
        assert_eq!(x.permute_letters(&swap).unwrap().permute_letters(&swap).unwrap(), x);
        assert_eq!(x.complement(), x.permute_letters(&swap).unwrap());
        assert!(x.permute_letters(&[0, 0]).is_err());
        assert!(x.permute_letters(&[0]).is_err());
    }

    #[test]
    fn find_square_examples() {
        assert_eq!(
            w("0101").find_square(1, 4).unwrap(),
            Some(SquareHit { position: 0, period: 2 })
        );
        assert_eq!(w("010").find_square(1, 3).unwrap(), None);
        assert_eq!(
            w("0120120").find_square(3, 3).unwrap(),
            Some(SquareHit { position: 0, period: 3 })
        );
        assert!(w("0").find_square(0, 1).is_err());
    }

    #[test]
    fn square_free_counts() {
        assert_eq!(enumerate_square_free(3, 1).unwrap().len(), 3);
        assert_eq!(enumerate_square_free(3, 3).unwrap().len(), 12);
        assert_eq!(enumerate_square_free(3, 5).unwrap().len(), 30);
        assert_eq!(enumerate_square_free(2, 4).unwrap().len(), 0);
        assert_eq!(enumerate_square_free(3, 0).unwrap(), vec![Word::empty(Alphabet::TERNARY)]);
    }

    #[test]
    fn parse_rejects_non_digits() {
        assert!(Word::parse("01a", Alphabet::BINARY).is_err());
        assert!(Word::parse("012", Alphabet::BINARY).is_err());
        assert!(Alphabet::new(11).is_err());
        assert!(Alphabet::new(0).is_err());
    }

    #[test]
    fn packed_round_trip() {
        let letters = (0..100u32).map(|i| ((i * 7 + i / 3) % 4) as u8).collect::<Vec<_>>();
        let p = PackedWord::from_letters(&letters).unwrap();
        assert_eq!(p.len(), 100);
        assert_eq!(p.to_letters(), letters);
        assert!(PackedWord::from_letters(&[4]).is_err());
    }
}
