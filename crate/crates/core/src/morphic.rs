//! Morphisms, morphic words, and certificates for uniform morphisms.
//!
//! A certificate for a `q`-uniform morphism `g: Σ_3 → Σ_2` states that the
//! images of ternary square-free words (sqf-g-images) avoid a set of
//! formulas together with every square of period at least `t`. It is built
//! from finite checks:
//!
//! 1. `g` is synchronizing: `g(a)` occurs in `g(bc)` only as a prefix or a
//!    suffix.
//! 2. No sqf-g-image contains a square of period in `[t, 2q-2]`, and no
//!    `g(abc)` with `abc` square-free contains one of period `q`. Together
//!    with synchronization this excludes every longer square.
//! 3. Per formula: if every variable sits inside a square of a fragment
//!    (easy formula), every occurrence has all images shorter than `t`, so a
//!    bounded search over short factors settles it. Otherwise (tough
//!    formula, one unsquared variable `B`), short `B` are searched
//!    exhaustively; long `B` occur at distances that are multiples of `q`,
//!    which either yields a contradiction by congruences alone or reduces
//!    to images of square-free words `aXbXc` with short `X`.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::formula::{variable_name, Formula};
use crate::occurrence::{first_match, Compiled, Haystack, LengthBounds};
use crate::words::{has_square_suffix, find_square, render, square_free_raw, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    name: String,
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Vec<u8>>,
}

impl Morphism {
    pub fn new(name: impl Into<String>, images: Vec<Vec<u8>>, codomain: Alphabet) -> Result<Self> {
        let name = name.into();
        if images.is_empty() {
            return Err(Error::Morphism(format!("{name}: no images")));
        }
        let domain = Alphabet::new(
            u8::try_from(images.len()).map_err(|_| Error::Morphism(format!("{name}: too many letters")))?,
        )?;
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::Morphism(format!("{name}: image of {a} is empty")));
            }
            if let Some(&l) = img.iter().find(|&&l| !codomain.contains(l)) {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    size: codomain.size(),
                });
            }
        }
        Ok(Morphism {
            name,
            domain,
            codomain,
            images,
        })
    }

    /// Parses the `d -> w` line format. The domain is `0..lines`; the
    /// codomain is the smallest alphabet (at least binary) holding every
    /// image letter.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let name = name.into();
        let mut entries: Vec<(u8, Vec<u8>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse(format!("{name}:{}: expected `d -> w`, got {raw:?}", lineno + 1));
            let (lhs, rhs) = line.split_once("->").ok_or_else(bad)?;
            let (lhs, rhs) = (lhs.trim(), rhs.trim());
            let mut chars = lhs.chars();
            let letter = match (chars.next().and_then(|c| c.to_digit(10)), chars.next()) {
                (Some(d), None) => d as u8,
                _ => return Err(bad()),
            };
            if rhs.is_empty() || rhs.contains(char::is_whitespace) {
                return Err(bad());
            }
            let image = crate::words::parse_digits(rhs)?;
            if entries.iter().any(|(l, _)| *l == letter) {
                return Err(Error::Parse(format!("{name}: letter {letter} defined twice")));
            }
            entries.push((letter, image));
        }
        entries.sort_by_key(|(l, _)| *l);
        for (i, (l, _)) in entries.iter().enumerate() {
            if *l as usize != i {
                return Err(Error::Parse(format!("{name}: letter {i} has no image")));
            }
        }
        let images: Vec<Vec<u8>> = entries.into_iter().map(|(_, w)| w).collect();
        let top = images.iter().flatten().copied().max().unwrap_or(0);
        Morphism::new(name, images, Alphabet::new((top + 1).max(2))?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        Morphism::parse(name, &text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Alphabet {
        self.domain
    }

    pub fn codomain(&self) -> Alphabet {
        self.codomain
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    /// The common image length, if all images have the same length.
    pub fn uniform_width(&self) -> Option<usize> {
        let q = self.images[0].len();
        self.images.iter().all(|i| i.len() == q).then_some(q)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet().size() > self.domain.size() {
            if let Some(&l) = w.letters().iter().find(|&&l| !self.domain.contains(l)) {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    size: self.domain.size(),
                });
            }
        }
        Ok(Word::from_raw(self.apply_raw(w.letters()), self.codomain))
    }

    pub(crate) fn apply_raw(&self, letters: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(letters.len() * self.max_image_len());
        for &l in letters {
            out.extend_from_slice(&self.images[l as usize]);
        }
        out
    }

    /// The same morphism with letters of the codomain exchanged by `perm`.
    pub fn relabel(&self, name: impl Into<String>, perm: &[u8]) -> Result<Morphism> {
        crate::words::check_permutation(perm, self.codomain)?;
        let images = self
            .images
            .iter()
            .map(|i| i.iter().map(|&l| perm[l as usize]).collect())
            .collect();
        Morphism::new(name, images, self.codomain)
    }

    /// Checks that every `g(a)` occurs in every `g(b)g(c)` only as a prefix
    /// or a suffix.
    pub fn synchronization(&self) -> SyncReport {
        let k = self.domain.size();
        for a in 0..k {
            let ga = self.image(a);
            for b in 0..k {
                for c in 0..k {
                    let mut bc = self.image(b).to_vec();
                    bc.extend_from_slice(self.image(c));
                    if ga.len() > bc.len() {
                        continue;
                    }
                    let last = bc.len() - ga.len();
                    if let Some(offset) =
                        (1..last).find(|&o| &bc[o..o + ga.len()] == ga)
                    {
                        return SyncReport {
                            synchronizing: false,
                            violation: Some(SyncViolation { a, b, c, offset }),
                        };
                    }
                }
            }
        }
        SyncReport {
            synchronizing: true,
            violation: None,
        }
    }

    pub fn is_synchronizing(&self) -> bool {
        self.synchronization().synchronizing
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `g(a)` found at interior `offset` of `g(b)g(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SyncViolation {
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncReport {
    pub synchronizing: bool,
    pub violation: Option<SyncViolation>,
}

/// A fixed point of a prolongable morphism, optionally mapped through an
/// outer morphism (e.g. `g_y(b_3)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphicWordSpec {
    label: String,
    fixed: Morphism,
    seed: u8,
    outer: Option<Morphism>,
}

impl MorphicWordSpec {
    pub fn new(fixed: Morphism, seed: u8, outer: Option<Morphism>) -> Result<Self> {
        if !fixed.domain.contains(seed) {
            return Err(Error::LetterOutOfRange {
                letter: seed,
                size: fixed.domain.size(),
            });
        }
        if fixed.codomain.size() > fixed.domain.size()
            && fixed.images.iter().flatten().any(|&l| !fixed.domain.contains(l))
        {
            return Err(Error::Morphism(format!("{} is not an endomorphism", fixed.name)));
        }
        let img = fixed.image(seed);
        if img.len() < 2 || img[0] != seed {
            return Err(Error::Morphism(format!(
                "{} is not prolongable on {seed}",
                fixed.name
            )));
        }
        if let Some(o) = &outer {
            if o.domain.size() < fixed.domain.size() {
                return Err(Error::Morphism(format!(
                    "{} cannot be applied to the fixed point of {}",
                    o.name, fixed.name
                )));
            }
        }
        let label = match &outer {
            Some(o) => format!("{}({})", o.name, fixed.name),
            None => fixed.name.clone(),
        };
        Ok(MorphicWordSpec {
            label,
            fixed,
            seed,
            outer,
        })
    }

    /// `b3`, `g_y(b3)`, or a morphism file path in place of either name.
    pub fn parse(text: &str, catalog: &Catalog) -> Result<Self> {
        let text = text.trim();
        if let Some(open) = text.find('(') {
            let inner = text
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
            let outer = catalog.resolve_morphism(&text[..open])?;
            let fixed = catalog.resolve_morphism(&inner[open + 1..])?;
            MorphicWordSpec::new(fixed, 0, Some(outer))
        } else {
            MorphicWordSpec::new(catalog.resolve_morphism(text)?, 0, None)
        }
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Ok(match &self.outer {
            Some(o) => o.codomain,
            None => self.fixed.domain,
        })
    }

    fn fixed_prefix_raw(&self, n: usize) -> Vec<u8> {
        let mut w = vec![self.seed];
        while w.len() < n {
            w = self.fixed.apply_raw(&w);
        }
        w.truncate(n);
        w
    }

    pub(crate) fn prefix_raw(&self, n: usize) -> Vec<u8> {
        match &self.outer {
            None => self.fixed_prefix_raw(n),
            Some(o) => {
                let mut w = o.apply_raw(&self.fixed_prefix_raw(n));
                w.truncate(n);
                w
            }
        }
    }

    /// The length-`n` prefix of the word.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        if n == 0 {
            return Err(Error::InvalidArgument("prefix length must be at least 1".into()));
        }
        Ok(Word::from_raw(self.prefix_raw(n), self.alphabet()?))
    }

    /// Length-`n` factors, read from prefixes that double in length until
    /// the set is unchanged by two consecutive doublings.
    pub fn stable_factors(&self, n: usize) -> Result<BTreeSet<Vec<u8>>> {
        const MAX_PREFIX: usize = 1 << 22;
        let mut len = (8 * n).max(64);
        let mut prev = crate::words::distinct_factors(&self.prefix_raw(len), n);
        let mut unchanged = 0;
        while len < MAX_PREFIX {
            len *= 2;
            let next = crate::words::distinct_factors(&self.prefix_raw(len), n);
            if next == prev {
                unchanged += 1;
                if unchanged == 2 {
                    return Ok(next);
                }
            } else {
                unchanged = 0;
            }
            prev = next;
        }
        Err(Error::PrefixTooShort {
            spec: self.label.clone(),
            length: len,
        })
    }
}

impl fmt::Display for MorphicWordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub fn fixed_point_prefix(spec: &MorphicWordSpec, n: usize) -> Result<Word> {
    spec.prefix(n)
}

fn require_ternary(g: &Morphism) -> Result<()> {
    if g.domain.size() != 3 {
        return Err(Error::Morphism(format!(
            "{} must be defined on a ternary alphabet",
            g.name
        )));
    }
    Ok(())
}

/// Square-free ternary words whose images cover every factor of an
/// sqf-g-image spanning at most `span` letters: all square-free words of
/// length `span`, plus the shorter ones that extend on neither side.
fn span_words(span: usize) -> Vec<Vec<u8>> {
    let mut out = square_free_raw(3, span);
    for len in 1..span {
        for w in square_free_raw(3, len) {
            let extends = (0..3u8).any(|a| {
                let mut r = w.clone();
                r.push(a);
                let mut l = vec![a];
                l.extend_from_slice(&w);
                !has_square_suffix(&r, 1) || crate::words::is_square_free(&l)
            });
            if !extends {
                out.push(w);
            }
        }
    }
    out
}

/// Length-`n` factors of images of square-free ternary words of length
/// `span`.
pub fn sqf_image_factors(g: &Morphism, span: usize, n: usize) -> Result<BTreeSet<Word>> {
    require_ternary(g)?;
    if n == 0 || span < 2 || (span - 2) * g.min_image_len() < n {
        return Err(Error::SpanTooSmall { span, n });
    }
    let mut set = BTreeSet::new();
    for v in span_words(span) {
        set.extend(crate::words::distinct_factors(&g.apply_raw(&v), n));
    }
    Ok(set
        .into_iter()
        .map(|w| Word::from_raw(w, g.codomain))
        .collect())
}

/// The factor language of sqf-g-images for a uniform `g`.
///
/// Anchor texts are the images of [`span_words`]; membership is decided
/// exactly for needles of any length by parsing the needle into blocks of
/// width `q` and searching for a square-free preimage.
pub(crate) struct SqfImageLanguage<'g> {
    g: &'g Morphism,
    q: usize,
    texts: Vec<Vec<u8>>,
}

impl<'g> SqfImageLanguage<'g> {
    /// Anchors cover every factor of length at most `cover`.
    pub fn new(g: &'g Morphism, cover: usize) -> Result<Self> {
        require_ternary(g)?;
        let q = g
            .uniform_width()
            .ok_or_else(|| Error::Morphism(format!("{} is not uniform", g.name)))?;
        let span = cover.div_ceil(q) + 2;
        let texts = span_words(span).iter().map(|v| g.apply_raw(v)).collect();
        Ok(SqfImageLanguage { g, q, texts })
    }

    /// Anchored on a single given text; membership still uses the whole
    /// language.
    fn with_texts(g: &'g Morphism, q: usize, texts: Vec<Vec<u8>>) -> Self {
        SqfImageLanguage { g, q, texts }
    }

    pub fn decodes(&self, w: &[u8]) -> bool {
        if w.is_empty() {
            return true;
        }
        let q = self.q;
        let n = w.len();
        'offset: for o in 0..q {
            let blocks = (o + n).div_ceil(q);
            let mut cands: Vec<Vec<u8>> = Vec::with_capacity(blocks);
            for j in 0..blocks {
                let from = (j * q).saturating_sub(o);
                let to = ((j + 1) * q - o).min(n);
                let img_from = if j == 0 { o } else { 0 };
                let seg = &w[from..to];
                let c: Vec<u8> = (0..3u8)
                    .filter(|&a| &self.g.image(a)[img_from..img_from + seg.len()] == seg)
                    .collect();
                if c.is_empty() {
                    continue 'offset;
                }
                cands.push(c);
            }
            let mut pre = Vec::with_capacity(blocks);
            if square_free_choice(&cands, &mut pre) {
                return true;
            }
        }
        false
    }
}

fn square_free_choice(cands: &[Vec<u8>], pre: &mut Vec<u8>) -> bool {
    if pre.len() == cands.len() {
        return true;
    }
    for &a in &cands[pre.len()] {
        pre.push(a);
        let ok = !has_square_suffix(pre, 1) && square_free_choice(cands, pre);
        pre.pop();
        if ok {
            return true;
        }
    }
    false
}

impl Haystack for SqfImageLanguage<'_> {
    fn text_count(&self) -> usize {
        self.texts.len()
    }
    fn text(&self, i: usize) -> &[u8] {
        &self.texts[i]
    }
    fn contains(&self, needle: &[u8]) -> bool {
        self.decodes(needle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Refuted,
    BoundedOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::BoundedOnly => "bounded-only",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub bound: String,
    pub passed: bool,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, bound: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            bound: bound.into(),
            passed: true,
            verdict: Verdict::Certified,
            counterexample: None,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, bound: impl Into<String>, cex: String, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            bound: bound.into(),
            passed: false,
            verdict: Verdict::Refuted,
            counterexample: Some(cex),
            detail: detail.into(),
        }
    }
}

fn combine(checks: &[Check]) -> Verdict {
    if checks.iter().any(|c| c.verdict == Verdict::Refuted) {
        Verdict::Refuted
    } else if checks.iter().any(|c| c.verdict == Verdict::BoundedOnly) {
        Verdict::BoundedOnly
    } else {
        Verdict::Certified
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub subject: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

impl Section {
    fn new(subject: String, checks: Vec<Check>) -> Self {
        Section {
            verdict: combine(&checks),
            subject,
            checks,
        }
    }
}

fn uniform(g: &Morphism) -> Result<usize> {
    require_ternary(g)?;
    g.uniform_width()
        .ok_or_else(|| Error::Morphism(format!("{} is not uniform", g.name)))
}

/// Certifies that sqf-g-images avoid every square of period at least `t`.
pub fn verify_squares(g: &Morphism, t: usize) -> Result<Section> {
    let q = uniform(g)?;
    if t == 0 {
        return Err(Error::InvalidArgument("square floor must be at least 1".into()));
    }
    let mut checks = Vec::new();

    let sync = g.synchronization();
    checks.push(match sync.violation {
        None => Check::pass("synchronizing", "all letter triples", "g(a) occurs in g(bc) only at the ends"),
        Some(v) => Check::fail(
            "synchronizing",
            "all letter triples",
            format!("g({}) at offset {} of g({}{})", v.a, v.offset, v.b, v.c),
            "interior occurrence",
        ),
    });

    let hi = 2 * q - 2;
    let bound = format!("periods {t}..={hi}");
    let span = (2 * hi).div_ceil(q) + 2;
    let mut hit = None;
    if t <= hi {
        for v in span_words(span) {
            let img = g.apply_raw(&v);
            if let Some(h) = find_square(&img, t, hi) {
                hit = Some((v, img, h));
                break;
            }
        }
    }
    checks.push(match hit {
        None => Check::pass("short squares", bound, format!("images of square-free words of length {span}")),
        Some((v, img, h)) => Check::fail(
            "short squares",
            bound,
            format!(
                "g({}) contains {} (period {} at {})",
                render(&v),
                render(&img[h.position..h.position + 2 * h.period]),
                h.period,
                h.position
            ),
            "square in an sqf-g-image",
        ),
    });

    let mut hit = None;
    for v in square_free_raw(3, 3) {
        let img = g.apply_raw(&v);
        if let Some(h) = find_square(&img, q, q) {
            hit = Some((v, h));
            break;
        }
    }
    checks.push(match hit {
        None => Check::pass("block squares", format!("period {q}"), "g(abc) for square-free abc"),
        Some((v, h)) => Check::fail(
            "block squares",
            format!("period {q}"),
            format!("g({}) has a square at {}", render(&v), h.position),
            "square of period q",
        ),
    });

    Ok(Section::new(format!("SQ{t}"), checks))
}

/// Options for tough formulas.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest `|X|` in the `aXbXc` reduction check.
    pub x_bound: usize,
    /// Report a passing reduction check as certified rather than
    /// bounded-only.
    pub accept_reduction: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            x_bound: 8,
            accept_reduction: false,
        }
    }
}

fn describe(c: &Compiled, images: &[Vec<u8>]) -> String {
    c.vars
        .iter()
        .zip(images)
        .map(|(&v, i)| format!("{}={}", variable_name(v), render(i)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Certifies that sqf-g-images avoid `f`, assuming [`verify_squares`]
/// passed for the same `t`.
pub fn verify_formula(g: &Morphism, f: &Formula, t: usize, cfg: &VerifyConfig) -> Result<Section> {
    let q = uniform(g)?;
    if t < 2 {
        return Err(Error::InvalidArgument("formula checks need t >= 2".into()));
    }
    let c = Compiled::new(f);
    let unsquared = f.unsquared_variables();
    let checks = if unsquared.is_empty() {
        vec![easy_check(g, &c, f, t)?]
    } else {
        if unsquared.len() > 1 {
            return Err(Error::Unsupported(format!(
                "{f}: more than one variable outside every square"
            )));
        }
        if t > q {
            return Err(Error::Unsupported(format!(
                "{f}: tough certification needs t <= q (t = {t}, q = {q})"
            )));
        }
        let slot = c.vars.iter().position(|&v| v == unsquared[0]).expect("variable present");
        tough_checks(g, &c, f, t, q, slot, cfg)?
    };
    Ok(Section::new(f.to_string(), checks))
}

fn easy_check(g: &Morphism, c: &Compiled, f: &Formula, t: usize) -> Result<Check> {
    let cover = f.max_fragment_len() * (t - 1);
    let lang = SqfImageLanguage::new(g, cover)?;
    let bounds = LengthBounds {
        min: vec![1; c.nvars()],
        max: vec![t - 1; c.nvars()],
    };
    let bound = format!("all images shorter than {t}, factors up to length {cover}");
    Ok(match first_match(c, &lang, bounds) {
        None => Check::pass("easy formula", bound, "no occurrence among short factors"),
        Some(imgs) => Check::fail("easy formula", bound, describe(c, &imgs), "occurrence in an sqf-g-image"),
    })
}

/// Distances between consecutive occurrences of `slot` inside each
/// fragment, as coefficient vectors over the slots.
fn repeat_distances(c: &Compiled, slot: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for (fi, frag) in c.frags.iter().enumerate() {
        let pos: Vec<usize> = frag.iter().enumerate().filter(|(_, &v)| v == slot).map(|(i, _)| i).collect();
        for pair in pos.windows(2) {
            let mut coef = vec![0; c.nvars()];
            frag[pair[0]..pair[1]].iter().for_each(|&v| coef[v] += 1);
            out.push((fi, coef));
        }
    }
    out
}

fn for_each_tuple(ranges: &[std::ops::RangeInclusive<usize>], f: &mut dyn FnMut(&[usize])) {
    fn go(ranges: &[std::ops::RangeInclusive<usize>], cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == ranges.len() {
            f(cur);
            return;
        }
        for x in ranges[cur.len()].clone() {
            cur.push(x);
            go(ranges, cur, f);
            cur.pop();
        }
    }
    go(ranges, &mut Vec::new(), f);
}

fn tough_checks(
    g: &Morphism,
    c: &Compiled,
    f: &Formula,
    t: usize,
    q: usize,
    b: usize,
    cfg: &VerifyConfig,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let long_b = 2 * q - 1;

    // Short B: exhaustive.
    let mut max = vec![t - 1; c.nvars()];
    max[b] = long_b - 1;
    let cover: usize = c
        .frags
        .iter()
        .map(|fr| fr.iter().map(|&v| max[v]).sum::<usize>())
        .max()
        .unwrap_or(0);
    let lang = SqfImageLanguage::new(g, cover)?;
    let bounds = LengthBounds {
        min: vec![1; c.nvars()],
        max: max.clone(),
    };
    let bname = variable_name(c.vars[b]);
    let bound = format!("|{bname}| <= {}, other images shorter than {t}", long_b - 1);
    checks.push(match first_match(c, &lang, bounds) {
        None => Check::pass("tough formula, short images", bound, "no occurrence"),
        Some(imgs) => {
            checks.push(Check::fail("tough formula, short images", bound, describe(c, &imgs), "occurrence in an sqf-g-image"));
            return Ok(checks);
        }
    });

    // Long B: occurrences of B inside one fragment image are q apart.
    let distances = repeat_distances(c, b);
    if distances.is_empty() {
        return Err(Error::Unsupported(format!(
            "{f}: no fragment repeats {bname}"
        )));
    }
    let others: Vec<usize> = (0..c.nvars()).filter(|&v| v != b).collect();
    let ranges: Vec<_> = others.iter().map(|_| 1..=t - 1).collect();
    let mut solutions = 0usize;
    for_each_tuple(&ranges, &mut |lens| {
        for r in 0..q {
            let ok = distances.iter().all(|(_, coef)| {
                let mut s = coef[b] * r;
                for (i, &v) in others.iter().enumerate() {
                    s += coef[v] * lens[i];
                }
                s % q == 0
            });
            if ok {
                solutions += 1;
            }
        }
    });
    let congruences = distances
        .iter()
        .map(|(_, coef)| {
            let terms: Vec<String> = coef
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    let name = variable_name(c.vars[v]);
                    if k == 1 { format!("|{name}|") } else { format!("{k}|{name}|") }
                })
                .collect();
            format!("{q} | {}", terms.join("+"))
        })
        .collect::<Vec<_>>()
        .join(", ");
    if solutions == 0 {
        checks.push(Check::pass(
            "tough formula, long images",
            format!("|{bname}| >= {long_b}"),
            format!("{congruences} has no solution with other images shorter than {t}"),
        ));
        return Ok(checks);
    }

    // Reduction to images of square-free aXbXc with short X.
    let (important, _) = distances[0].clone();
    let mut plan_first = c.clone();
    plan_first.plan.retain(|&fi| fi != important);
    plan_first.plan.insert(0, important);
    let frag = &c.frags[important];
    let mut found: Option<String> = None;
    let mut tried = 0usize;
    'outer: for u in reduction_words(cfg.x_bound) {
        tried += 1;
        let text = g.apply_raw(&u);
        let hay = SqfImageLanguage::with_texts(g, q, vec![text.clone()]);
        let mut lens_other: Vec<usize> = vec![0; c.nvars()];
        let mut hit = None;
        for_each_tuple(&ranges, &mut |lens| {
            if hit.is_some() {
                return;
            }
            for (i, &v) in others.iter().enumerate() {
                lens_other[v] = lens[i];
            }
            let mut lb = long_b;
            while lb <= text.len() {
                let mut all = lens_other.clone();
                all[b] = lb;
                let fits = distances.iter().all(|(_, coef)| {
                    coef.iter().zip(&all).map(|(k, l)| k * l).sum::<usize>() % q == 0
                });
                if fits {
                    if let Some(imgs) = scan_fixed(&plan_first, frag, &all, &text, &hay) {
                        hit = Some(imgs);
                        return;
                    }
                }
                lb += 1;
            }
        });
        if let Some(imgs) = hit {
            found = Some(format!("in g({}): {}", render(&u), describe(c, &imgs)));
            break 'outer;
        }
    }
    let bound = format!("aXbXc with 1 <= |X| <= {}", cfg.x_bound);
    checks.push(match found {
        Some(cex) => Check::fail("tough formula, reduction", bound, cex, "occurrence with a long image"),
        None => {
            let mut ch = Check::pass(
                "tough formula, reduction",
                bound,
                format!("{congruences}; no occurrence over {tried} square-free preimages"),
            );
            if !cfg.accept_reduction {
                ch.verdict = Verdict::BoundedOnly;
            }
            ch
        }
    });
    Ok(checks)
}

/// Finds fixed-length placements of `frag` in `text` whose remaining
/// fragments belong to the language.
fn scan_fixed(
    c: &Compiled,
    frag: &[usize],
    lens: &[usize],
    text: &[u8],
    lang: &SqfImageLanguage<'_>,
) -> Option<Vec<Vec<u8>>> {
    let total: usize = frag.iter().map(|&v| lens[v]).sum();
    if total > text.len() {
        return None;
    }
    'start: for s in 0..=text.len() - total {
        let mut imgs: Vec<Option<&[u8]>> = vec![None; lens.len()];
        let mut p = s;
        for &v in frag {
            let piece = &text[p..p + lens[v]];
            match imgs[v] {
                Some(prev) if prev != piece => continue 'start,
                Some(_) => {}
                None => imgs[v] = Some(piece),
            }
            p += lens[v];
        }
        let mut buf = Vec::new();
        for &fi in &c.plan[1..] {
            buf.clear();
            for &v in &c.frags[fi] {
                buf.extend_from_slice(imgs[v].expect("all variables occur in the anchored fragment"));
            }
            if !lang.contains(&buf) {
                continue 'start;
            }
        }
        return Some(imgs.into_iter().map(|i| i.expect("assigned").to_vec()).collect());
    }
    None
}

/// Square-free words `a·X·b·X·c` with `|a| = |c| = 1`, `1 <= |b| <= 2` and
/// `1 <= |X| <= x_bound`.
fn reduction_words(x_bound: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for xl in 1..=x_bound {
        for x in square_free_raw(3, xl) {
            for a in 0..3u8 {
                for mid in [1usize, 2] {
                    for bi in 0..3usize.pow(mid as u32) {
                        let bw: Vec<u8> = if mid == 1 {
                            vec![bi as u8]
                        } else {
                            vec![(bi / 3) as u8, (bi % 3) as u8]
                        };
                        for cl in 0..3u8 {
                            let mut u = vec![a];
                            u.extend_from_slice(&x);
                            u.extend_from_slice(&bw);
                            u.extend_from_slice(&x);
                            u.push(cl);
                            if crate::words::is_square_free(&u) {
                                out.push(u);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// A full certificate for one morphism and claim.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub morphism: String,
    pub width: Option<usize>,
    pub square_floor: usize,
    pub formulas: Vec<String>,
    pub x_bound: usize,
    pub sections: Vec<Section>,
    pub verdict: Verdict,
}

/// Runs [`verify_squares`] and, when it passes, [`verify_formula`] for
/// each formula.
pub fn certify(g: &Morphism, formulas: &[Formula], t: usize, cfg: &VerifyConfig) -> Result<Certificate> {
    let squares = verify_squares(g, t)?;
    let mut sections = vec![squares];
    if sections[0].verdict != Verdict::Refuted {
        for f in formulas {
            sections.push(verify_formula(g, f, t, cfg)?);
        }
    }
    let verdict = if sections.iter().any(|s| s.verdict == Verdict::Refuted) {
        Verdict::Refuted
    } else if sections.iter().any(|s| s.verdict == Verdict::BoundedOnly) {
        Verdict::BoundedOnly
    } else {
        Verdict::Certified
    };
    Ok(Certificate {
        morphism: g.name.clone(),
        width: g.uniform_width(),
        square_floor: t,
        formulas: formulas.iter().map(ToString::to_string).collect(),
        x_bound: cfg.x_bound,
        sections,
        verdict,
    })
}
