//! Occurrences of formulas in words.
//!
//! An occurrence of a formula in a word is a non-erasing assignment of
//! words to variables such that the image of every fragment is a factor of
//! the word. The matcher below is a positional backtracking search: a
//! fragment is anchored at a position of some text, and the images of its
//! unassigned variables are read off the text as the scan proceeds, so a
//! mismatch prunes immediately. Fragments whose variables are all known are
//! checked by factor lookup only.
//!
//! The same matcher serves three kinds of "haystack": a single word, the
//! fragments of another formula (divisibility), and the factor language of
//! square-free morphic images (certification, see [`crate::morphic`]).

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formula::{variable_name, Formula};
use crate::words::{contains_slice, render, Alphabet, Word};

/// A set of words queried by the matcher.
///
/// `text(i)` enumerates anchor texts: every factor of the language that the
/// matcher may need to anchor a fragment on must be a factor of some text.
/// `contains` decides membership for arbitrary needles.
pub(crate) trait Haystack {
    fn text_count(&self) -> usize;
    fn text(&self, i: usize) -> &[u8];
    fn contains(&self, needle: &[u8]) -> bool;
}

pub(crate) struct SingleText<'a>(pub &'a [u8]);

impl Haystack for SingleText<'_> {
    fn text_count(&self) -> usize {
        1
    }
    fn text(&self, _: usize) -> &[u8] {
        self.0
    }
    fn contains(&self, needle: &[u8]) -> bool {
        contains_slice(self.0, needle)
    }
}

pub(crate) struct TextSet(pub Vec<Vec<u8>>);

impl Haystack for TextSet {
    fn text_count(&self) -> usize {
        self.0.len()
    }
    fn text(&self, i: usize) -> &[u8] {
        &self.0[i]
    }
    fn contains(&self, needle: &[u8]) -> bool {
        self.0.iter().any(|t| contains_slice(t, needle))
    }
}

/// A formula with variables renumbered to dense slots and a fixed order in
/// which fragments are matched.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    /// Fragments over slots `0..vars.len()`.
    pub frags: Vec<Vec<usize>>,
    /// `vars[slot]` is the original variable index; ascending.
    pub vars: Vec<u8>,
    /// Matching order over fragment indices.
    pub plan: Vec<usize>,
}

impl Compiled {
    pub fn new(f: &Formula) -> Self {
        let vars = f.variables();
        let slot = |v: u8| vars.iter().position(|&x| x == v).expect("variable present");
        let frags: Vec<Vec<usize>> = f
            .fragments()
            .iter()
            .map(|fr| fr.iter().map(|&v| slot(v)).collect())
            .collect();
        let mut total = vec![0usize; vars.len()];
        frags.iter().flatten().for_each(|&s| total[s] += 1);

        // Greedy: next fragment is the one that fixes the most unassigned
        // variable occurrences (weighted by how often those variables
        // occur overall), ties to the longer fragment.
        let mut plan = Vec::with_capacity(frags.len());
        let mut assigned = vec![false; vars.len()];
        let mut used = vec![false; frags.len()];
        for _ in 0..frags.len() {
            let score = |fi: usize| {
                let mut seen = vec![false; vars.len()];
                let mut s = 0usize;
                for &v in &frags[fi] {
                    if !assigned[v] && !seen[v] {
                        seen[v] = true;
                        s += total[v];
                    }
                }
                (s, frags[fi].len())
            };
            let best = (0..frags.len())
                .filter(|&i| !used[i])
                .max_by_key(|&i| (score(i), std::cmp::Reverse(i)))
                .expect("unused fragment");
            used[best] = true;
            frags[best].iter().for_each(|&v| assigned[v] = true);
            plan.push(best);
        }
        Compiled { frags, vars, plan }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

/// Inclusive per-slot bounds on image lengths.
#[derive(Debug, Clone)]
pub(crate) struct LengthBounds {
    pub min: Vec<usize>,
    pub max: Vec<usize>,
}

impl LengthBounds {
    pub fn unbounded(nvars: usize) -> Self {
        LengthBounds {
            min: vec![1; nvars],
            max: vec![usize::MAX; nvars],
        }
    }
}

pub(crate) struct Matcher<'h, 'c, H: Haystack, V> {
    c: &'c Compiled,
    hay: &'h H,
    bounds: LengthBounds,
    images: Vec<Option<&'h [u8]>>,
    buf: Vec<u8>,
    visit: V,
}

impl<'h, 'c, H, V> Matcher<'h, 'c, H, V>
where
    H: Haystack,
    V: FnMut(&[&[u8]]) -> ControlFlow<()>,
{
    pub fn new(c: &'c Compiled, hay: &'h H, bounds: LengthBounds, visit: V) -> Self {
        Matcher {
            c,
            hay,
            bounds,
            images: vec![None; c.nvars()],
            buf: Vec::new(),
            visit,
        }
    }

    /// Visits every occurrence (possibly repeatedly).
    pub fn run(&mut self) -> ControlFlow<()> {
        self.fragment(0)
    }

    /// Visits occurrences in which fragment `fi` is matched as a suffix of
    /// text 0.
    pub fn run_suffix_anchored(&mut self, fi: usize) -> ControlFlow<()> {
        let hay = self.hay;
        let text = hay.text(0);
        self.scan_backward(fi, text, text.len(), self.c.frags[fi].len())
    }

    fn emit(&mut self) -> ControlFlow<()> {
        let imgs: Vec<&[u8]> = self.images.iter().map(|i| i.expect("complete")).collect();
        (self.visit)(&imgs)
    }

    fn fragment(&mut self, k: usize) -> ControlFlow<()> {
        if k == self.c.plan.len() {
            return self.emit();
        }
        let (c, hay) = (self.c, self.hay);
        let fi = c.plan[k];
        let frag = &c.frags[fi];
        if frag.iter().all(|&v| self.images[v].is_some()) {
            self.buf.clear();
            for &v in frag {
                self.buf.extend_from_slice(self.images[v].expect("assigned"));
            }
            if hay.contains(&self.buf) {
                return self.fragment(k + 1);
            }
            return ControlFlow::Continue(());
        }
        let need = self.min_len(frag, 0);
        for t in 0..hay.text_count() {
            let text = hay.text(t);
            if text.len() < need {
                continue;
            }
            for start in 0..=text.len() - need {
                self.scan_forward(k, fi, text, start, 0)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Minimum image length of `frag[from..]` under the current assignment.
    fn min_len(&self, frag: &[usize], from: usize) -> usize {
        frag[from..]
            .iter()
            .map(|&v| self.images[v].map_or(self.bounds.min[v], <[u8]>::len))
            .sum()
    }

    fn scan_forward(
        &mut self,
        k: usize,
        fi: usize,
        text: &'h [u8],
        pos: usize,
        idx: usize,
    ) -> ControlFlow<()> {
        let c = self.c;
        let frag = &c.frags[fi];
        if idx == frag.len() {
            return self.fragment(k + 1);
        }
        let v = frag[idx];
        if let Some(img) = self.images[v] {
            if text[pos..].starts_with(img) {
                return self.scan_forward(k, fi, text, pos + img.len(), idx + 1);
            }
            return ControlFlow::Continue(());
        }
        let after = self.min_len(frag, idx + 1);
        if pos + after > text.len() {
            return ControlFlow::Continue(());
        }
        let room = text.len() - pos - after;
        let hi = self.bounds.max[v].min(room);
        for len in self.bounds.min[v]..=hi {
            self.images[v] = Some(&text[pos..pos + len]);
            let r = self.scan_forward(k, fi, text, pos + len, idx + 1);
            self.images[v] = None;
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Matches `frag[..idx]` so that it ends at `end`.
    fn scan_backward(
        &mut self,
        fi: usize,
        text: &'h [u8],
        end: usize,
        idx: usize,
    ) -> ControlFlow<()> {
        if idx == 0 {
            return self.fragment(0);
        }
        let c = self.c;
        let frag = &c.frags[fi];
        let v = frag[idx - 1];
        if let Some(img) = self.images[v] {
            if text[..end].ends_with(img) {
                return self.scan_backward(fi, text, end - img.len(), idx - 1);
            }
            return ControlFlow::Continue(());
        }
        let before: usize = frag[..idx - 1]
            .iter()
            .map(|&u| self.images[u].map_or(self.bounds.min[u], <[u8]>::len))
            .sum();
        if before > end {
            return ControlFlow::Continue(());
        }
        let hi = self.bounds.max[v].min(end - before);
        for len in self.bounds.min[v]..=hi {
            self.images[v] = Some(&text[end - len..end]);
            let r = self.scan_backward(fi, text, end - len, idx - 1);
            self.images[v] = None;
            r?;
        }
        ControlFlow::Continue(())
    }
}

/// First occurrence found in `hay` under `bounds`, as images per slot.
pub(crate) fn first_match<H: Haystack>(
    c: &Compiled,
    hay: &H,
    bounds: LengthBounds,
) -> Option<Vec<Vec<u8>>> {
    let mut found = None;
    let mut m = Matcher::new(c, hay, bounds, |imgs: &[&[u8]]| {
        found = Some(imgs.iter().map(|i| i.to_vec()).collect());
        ControlFlow::Break(())
    });
    let _ = m.run();
    found
}

/// True when `word` contains an occurrence whose image of some fragment is
/// a suffix of `word`. If `word[..len-1]` avoids the formula, this is exactly
/// "appending the last letter created an occurrence".
pub(crate) fn has_suffix_occurrence(c: &Compiled, word: &[u8]) -> bool {
    let hay = SingleText(word);
    (0..c.frags.len()).any(|fi| {
        let mut m = Matcher::new(c, &hay, LengthBounds::unbounded(c.nvars()), |_: &[&[u8]]| {
            ControlFlow::Break(())
        });
        m.run_suffix_anchored(fi).is_break()
    })
}

pub(crate) fn raw_avoids(c: &Compiled, word: &[u8]) -> bool {
    first_match(c, &SingleText(word), LengthBounds::unbounded(c.nvars())).is_none()
}

/// A variable assignment witnessing an occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    assignment: BTreeMap<char, Word>,
}

impl Occurrence {
    pub fn new(assignment: BTreeMap<char, Word>) -> Self {
        Occurrence { assignment }
    }

    pub fn assignment(&self) -> &BTreeMap<char, Word> {
        &self.assignment
    }

    pub fn image(&self, var: char) -> Option<&Word> {
        self.assignment.get(&var)
    }

    /// Image of a fragment given as variable indices.
    pub fn fragment_image(&self, fragment: &[u8]) -> Option<Vec<u8>> {
        let mut out = Vec::new();
        for &v in fragment {
            out.extend_from_slice(self.assignment.get(&variable_name(v))?.letters());
        }
        Some(out)
    }

    /// Checks every image is non-empty and every fragment image is a factor
    /// of `w`.
    pub fn validate(&self, w: &Word, f: &Formula) -> bool {
        f.variables()
            .iter()
            .all(|&v| self.assignment.get(&variable_name(v)).is_some_and(|img| !img.is_empty()))
            && f.fragments().iter().all(|frag| {
                self.fragment_image(frag)
                    .is_some_and(|img| contains_slice(w.letters(), &img))
            })
    }

    pub(crate) fn from_slots(c: &Compiled, images: &[Vec<u8>], alphabet: Alphabet) -> Self {
        let assignment = c
            .vars
            .iter()
            .zip(images)
            .map(|(&v, img)| (variable_name(v), Word::from_raw(img.clone(), alphabet)))
            .collect();
        Occurrence { assignment }
    }
}

impl Serialize for Occurrence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> = self
            .assignment
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        m.serialize(s)
    }
}

impl std::fmt::Display for Occurrence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(k, v)| format!("{k}->{v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// The lexicographically least occurrence of `f` in `w` (images compared in
/// variable order), or `None` when `w` avoids `f`.
pub fn find_occurrence(w: &Word, f: &Formula) -> Option<Occurrence> {
    let c = Compiled::new(f);
    let hay = SingleText(w.letters());
    let mut best: Option<Vec<Vec<u8>>> = None;
    let mut m = Matcher::new(&c, &hay, LengthBounds::unbounded(c.nvars()), |imgs: &[&[u8]]| {
        if best.as_ref().is_none_or(|b| {
            imgs.iter().map(|i| &i[..]).lt(b.iter().map(|i| &i[..]))
        }) {
            best = Some(imgs.iter().map(|i| i.to_vec()).collect());
        }
        ControlFlow::Continue(())
    });
    let _ = m.run();
    best.map(|imgs| Occurrence::from_slots(&c, &imgs, w.alphabet()))
}

pub fn avoids(w: &Word, f: &Formula) -> bool {
    raw_avoids(&Compiled::new(f), w.letters())
}

/// Incremental avoidance state for a word known to avoid a formula.
#[derive(Debug, Clone)]
pub struct AvoidanceContext {
    compiled: Compiled,
    formula: Formula,
    word: Vec<u8>,
}

impl AvoidanceContext {
    /// Builds the context for `w`; fails if `w` does not avoid `f`.
    pub fn new(w: &Word, f: &Formula) -> Result<Self> {
        let compiled = Compiled::new(f);
        if !raw_avoids(&compiled, w.letters()) {
            return Err(Error::InvalidArgument(format!("{w} does not avoid {f}")));
        }
        Ok(AvoidanceContext {
            compiled,
            formula: f.clone(),
            word: w.letters().to_vec(),
        })
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }
}

/// Decides whether `w·a` avoids the context's formula, checking only
/// occurrences that touch the new last position. Returns the context for
/// `w·a` when it avoids.
pub fn avoids_extension(
    w: &Word,
    a: u8,
    ctx: &AvoidanceContext,
) -> Result<(bool, Option<AvoidanceContext>)> {
    if ctx.word != w.letters() {
        return Err(Error::StaleContext);
    }
    if !w.alphabet().contains(a) {
        return Err(Error::LetterOutOfRange {
            letter: a,
            size: w.alphabet().size(),
        });
    }
    let mut word = ctx.word.clone();
    word.push(a);
    if has_suffix_occurrence(&ctx.compiled, &word) {
        return Ok((false, None));
    }
    let next = AvoidanceContext {
        compiled: ctx.compiled.clone(),
        formula: ctx.formula.clone(),
        word,
    };
    Ok((true, Some(next)))
}

/// `big` is divisible by `small` when some non-erasing morphism maps every
/// fragment of `small` to a factor of a fragment of `big`.
pub fn is_divisible_by(big: &Formula, small: &Formula) -> bool {
    divisibility_witness(big, small).is_some()
}

/// The morphism witnessing divisibility, as `variable of small -> word over
/// the variables of big`.
pub fn divisibility_witness(big: &Formula, small: &Formula) -> Option<BTreeMap<char, String>> {
    let c = Compiled::new(small);
    let hay = TextSet(big.fragments().to_vec());
    let images = first_match(&c, &hay, LengthBounds::unbounded(c.nvars()))?;
    Some(
        c.vars
            .iter()
            .zip(images)
            .map(|(&v, img)| (variable_name(v), img.iter().map(|&x| variable_name(x)).collect()))
            .collect(),
    )
}

pub fn render_images(images: &[Vec<u8>]) -> Vec<String> {
    images.iter().map(|i| render(i)).collect()
}
