//! Exhaustive backtracking over words avoiding a set of constraints.
//!
//! The search walks the prefix tree depth-first in letter order. A child is
//! kept only if appending its letter creates no new violation; since every
//! constraint is factor-closed, a new violation has to touch the last
//! position, which is all [`Checker::rejects_last`] looks at.
//!
//! When every constraint is invariant under letter permutations, only the
//! subtree below the letter `0` is explored and the counts are multiplied by
//! the alphabet size. Below a fixed split depth, subtrees are searched in
//! parallel and merged in prefix order, so totals and witnesses do not
//! depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::morphic::MorphicWordSpec;
use crate::occurrence::{has_suffix_occurrence, Compiled};
use crate::words::{has_square_suffix, render, Alphabet, Word};

/// Formulas, forbidden factors and an optional square floor `t` (all
/// squares of period at least `t` are forbidden).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub formulas: Vec<Formula>,
    pub forbidden_factors: Vec<Word>,
    pub square_floor: Option<usize>,
}

impl ConstraintSet {
    pub fn formula(f: Formula) -> Self {
        ConstraintSet {
            formulas: vec![f],
            ..Default::default()
        }
    }

    pub fn with_formula(mut self, f: Formula) -> Self {
        self.formulas.push(f);
        self
    }

    pub fn forbid(mut self, w: Word) -> Self {
        self.forbidden_factors.push(w);
        self
    }

    pub fn squares_from(mut self, t: usize) -> Self {
        self.square_floor = Some(t);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty() && self.forbidden_factors.is_empty() && self.square_floor.is_none()
    }

    pub fn reversed(&self) -> Self {
        ConstraintSet {
            formulas: self.formulas.iter().map(Formula::reversed).collect(),
            forbidden_factors: self.forbidden_factors.iter().map(Word::reversed).collect(),
            square_floor: self.square_floor,
        }
    }

    /// True when the constraint set is invariant under every permutation of
    /// `Σ_k`. Formulas and square floors always are; forbidden factors must
    /// form a set closed under each transposition `(0 a)`, which generate
    /// the symmetric group.
    pub fn is_letter_symmetric(&self, k: u8) -> bool {
        let set: BTreeSet<&[u8]> = self.forbidden_factors.iter().map(Word::letters).collect();
        (1..k).all(|a| {
            set.iter().all(|w| {
                let swapped: Vec<u8> = w
                    .iter()
                    .map(|&l| match l {
                        0 => a,
                        x if x == a => 0,
                        x => x,
                    })
                    .collect();
                set.contains(&swapped[..])
            })
        })
    }

    fn validate(&self, k: u8) -> Result<()> {
        if self.is_empty() {
            return Err(Error::InvalidArgument("empty constraint set".into()));
        }
        for w in &self.forbidden_factors {
            if w.is_empty() {
                return Err(Error::EmptyWord("forbidden factors are non-empty"));
            }
            if let Some(&l) = w.letters().iter().find(|&&l| l >= k) {
                return Err(Error::LetterOutOfRange { letter: l, size: k });
            }
        }
        if self.square_floor == Some(0) {
            return Err(Error::InvalidArgument("square floor must be at least 1".into()));
        }
        Ok(())
    }

    pub fn checker(&self) -> Checker {
        Checker {
            formulas: self.formulas.iter().map(Compiled::new).collect(),
            forbidden: self.forbidden_factors.iter().map(|w| w.letters().to_vec()).collect(),
            square_floor: self.square_floor,
        }
    }

    /// Full check of a finite word.
    pub fn accepts(&self, w: &[u8]) -> bool {
        self.checker().accepts(w)
    }
}

impl fmt::Display for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.formulas.iter().map(ToString::to_string).collect();
        parts.extend(self.forbidden_factors.iter().map(ToString::to_string));
        if let Some(t) = self.square_floor {
            parts.push(format!("SQ{t}"));
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Compiled form of a [`ConstraintSet`].
#[derive(Debug, Clone)]
pub struct Checker {
    formulas: Vec<Compiled>,
    forbidden: Vec<Vec<u8>>,
    square_floor: Option<usize>,
}

impl Checker {
    /// Whether the last letter of `w` completes a violation, assuming
    /// `w[..len-1]` satisfies every constraint.
    pub fn rejects_last(&self, w: &[u8]) -> bool {
        self.forbidden.iter().any(|f| w.ends_with(f))
            || self.square_floor.is_some_and(|t| has_square_suffix(w, t))
            || self.formulas.iter().any(|c| has_suffix_occurrence(c, w))
    }

    pub fn accepts(&self, w: &[u8]) -> bool {
        (1..=w.len()).all(|n| !self.rejects_last(&w[..n]))
    }
}

/// Knobs for [`enumerate_avoiders`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub limit: usize,
    /// Depth at which the prefix tree is split into parallel tasks.
    pub split_depth: usize,
    pub node_budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Explore only words starting with `0` when the constraints allow it.
    pub use_symmetry: bool,
}

pub const DEFAULT_LIMIT: usize = 200;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limit: DEFAULT_LIMIT,
            split_depth: 12,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: None,
            use_symmetry: true,
        }
    }
}

impl SearchConfig {
    pub fn with_limit(limit: usize) -> Self {
        SearchConfig {
            limit,
            ..Default::default()
        }
    }

    fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(op),
                Err(_) => op(),
            },
            None => op(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    /// Some length up to the limit has no avoiding word.
    Exhausted,
    /// Avoiding words of the limit length exist.
    LimitReached,
    BudgetExhausted,
}

/// How the "total" of an [`AvoidanceTable`] is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CountingConvention {
    /// Non-empty words of every length.
    #[serde(rename = "nonempty")]
    NonEmpty,
    /// As above, plus the empty word.
    #[serde(rename = "with-empty")]
    WithEmpty,
}

impl CountingConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            CountingConvention::NonEmpty => "nonempty",
            CountingConvention::WithEmpty => "with-empty",
        }
    }
}

/// The convention that reproduces the published totals.
pub const FIGURE_CONVENTION: CountingConvention = CountingConvention::NonEmpty;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceTable {
    pub constraints: String,
    pub alphabet: u8,
    pub limit: usize,
    /// `counts[n]` is the number of avoiding words of length `n`; `counts[0]`
    /// is the empty word.
    pub counts: Vec<u64>,
    pub max_length: Option<usize>,
    pub exhausted: bool,
    pub status: SearchStatus,
    /// Lexicographically least avoiding word of maximal explored length.
    pub witness_longest: Word,
    pub nodes: u64,
}

impl AvoidanceTable {
    pub fn count(&self, n: usize) -> u64 {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn total(&self, convention: CountingConvention) -> u64 {
        let nonempty: u64 = self.counts.iter().skip(1).sum();
        match convention {
            CountingConvention::NonEmpty => nonempty,
            CountingConvention::WithEmpty => nonempty + self.count(0),
        }
    }

    pub fn to_json(&self, convention: CountingConvention) -> Value {
        let counts: serde_json::Map<String, Value> = self
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| (n.to_string(), json!(c)))
            .collect();
        json!({
            "formula": self.constraints,
            "alphabet": self.alphabet,
            "counts": counts,
            "max_length": self.max_length,
            "total": self.total(convention),
            "convention": convention.as_str(),
            "exhausted": self.exhausted,
            "status": self.status,
            "limit": self.limit,
            "witness_longest": self.witness_longest.to_string(),
            "nodes": self.nodes,
        })
    }

    pub const CSV_HEADER: &'static str = "formula,max_length,total";

    pub fn to_csv_row(&self, label: &str, convention: CountingConvention) -> String {
        let max = self.max_length.map_or_else(String::new, |m| m.to_string());
        format!("{label},{max},{}", self.total(convention))
    }
}

struct Subtree {
    counts: Vec<u64>,
    longest: Vec<u8>,
    nodes: u64,
}

struct Dfs<'a> {
    checker: &'a Checker,
    k: u8,
    word: Vec<u8>,
    counts: Vec<u64>,
    longest: Vec<u8>,
    nodes: u64,
    unflushed: u64,
    budget: &'a Budget,
}

struct Budget {
    limit: u64,
    used: AtomicU64,
    blown: AtomicBool,
}

impl Budget {
    fn charge(&self, n: u64) -> bool {
        let used = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if used > self.limit {
            self.blown.store(true, Ordering::Relaxed);
        }
        !self.blown.load(Ordering::Relaxed)
    }
}

impl<'a> Dfs<'a> {
    fn new(checker: &'a Checker, k: u8, limit: usize, prefix: Vec<u8>, budget: &'a Budget) -> Self {
        Dfs {
            checker,
            k,
            longest: prefix.clone(),
            word: prefix,
            counts: vec![0; limit + 1],
            nodes: 0,
            unflushed: 0,
            budget,
        }
    }

    /// Counts and explores the strict descendants of the current word, up
    /// to `depth_cap`; words reaching the cap are handed to `at_cap`.
    fn run(&mut self, depth_cap: usize, at_cap: &mut dyn FnMut(&[u8])) -> bool {
        if self.word.len() == depth_cap {
            at_cap(&self.word);
            return true;
        }
        for a in 0..self.k {
            self.word.push(a);
            self.nodes += 1;
            self.unflushed += 1;
            if self.unflushed == 4096 {
                self.unflushed = 0;
                if !self.budget.charge(4096) {
                    self.word.pop();
                    return false;
                }
            }
            if !self.checker.rejects_last(&self.word) {
                let n = self.word.len();
                self.counts[n] += 1;
                if n > self.longest.len() {
                    self.longest.clone_from(&self.word);
                }
                if !self.run(depth_cap, at_cap) {
                    self.word.pop();
                    return false;
                }
            }
            self.word.pop();
        }
        true
    }

    fn finish(self) -> Subtree {
        self.budget.charge(self.unflushed);
        Subtree {
            counts: self.counts,
            longest: self.longest,
            nodes: self.nodes,
        }
    }
}

/// Counts every word of length `1..=limit` over `Σ_k` satisfying `c`.
pub fn enumerate_avoiders(c: &ConstraintSet, k: u8, cfg: &SearchConfig) -> Result<AvoidanceTable> {
    let alphabet = Alphabet::new(k)?;
    if k < 2 {
        return Err(Error::InvalidArgument("enumeration needs at least 2 letters".into()));
    }
    if cfg.limit == 0 {
        return Err(Error::InvalidArgument("limit must be at least 1".into()));
    }
    c.validate(k)?;
    let checker = c.checker();
    let symmetric = cfg.use_symmetry && c.is_letter_symmetric(k);
    let budget = Budget {
        limit: cfg.node_budget,
        used: AtomicU64::new(0),
        blown: AtomicBool::new(false),
    };
    let limit = cfg.limit;

    let (root, mut counts) = if symmetric {
        let mut counts = vec![0u64; limit + 1];
        counts[0] = 1;
        if checker.rejects_last(&[0]) {
            (None, counts)
        } else {
            counts[1] = 1;
            (Some(vec![0u8]), counts)
        }
    } else {
        let mut counts = vec![0u64; limit + 1];
        counts[0] = 1;
        (Some(Vec::new()), counts)
    };

    let mut longest = Vec::new();
    let mut nodes = 0u64;
    if let Some(root) = root {
        let split = cfg.split_depth.max(root.len()).min(limit);
        let mut frontier = Vec::new();
        let mut top = Dfs::new(&checker, k, limit, root, &budget);
        top.run(split, &mut |w| frontier.push(w.to_vec()));
        let top = top.finish();
        for (n, &x) in top.counts.iter().enumerate() {
            counts[n] += x;
        }
        longest = top.longest;
        nodes += top.nodes;

        let subtrees: Vec<Subtree> = cfg.install(|| {
            frontier
                .into_par_iter()
                .map(|prefix| {
                    let mut d = Dfs::new(&checker, k, limit, prefix, &budget);
                    d.run(limit, &mut |_| {});
                    d.finish()
                })
                .collect()
        });
        for s in subtrees {
            for (n, &x) in s.counts.iter().enumerate() {
                counts[n] += x;
            }
            if s.longest.len() > longest.len() {
                longest = s.longest;
            }
            nodes += s.nodes;
        }
    }

    if symmetric {
        counts.iter_mut().skip(1).for_each(|x| *x *= u64::from(k));
    }
    let first_gap = counts.iter().position(|&x| x == 0);
    let status = if budget.blown.load(Ordering::Relaxed) {
        SearchStatus::BudgetExhausted
    } else if first_gap.is_some() {
        SearchStatus::Exhausted
    } else {
        SearchStatus::LimitReached
    };
    let max_length = match status {
        SearchStatus::Exhausted => first_gap.map(|g| g - 1),
        _ => None,
    };
    if let Some(m) = max_length {
        counts.truncate(m + 1);
    }
    Ok(AvoidanceTable {
        constraints: c.to_string(),
        alphabet: k,
        limit,
        counts,
        max_length,
        exhausted: status == SearchStatus::Exhausted,
        status,
        witness_longest: Word::from_raw(longest, alphabet),
        nodes,
    })
}

/// Length of the longest word satisfying `c`, or `None` when words of
/// length `limit` still exist (or the node budget ran out).
pub fn max_avoiding_length(c: &ConstraintSet, k: u8, cfg: &SearchConfig) -> Result<Option<usize>> {
    let table = enumerate_avoiders(c, k, cfg)?;
    match table.status {
        SearchStatus::BudgetExhausted => Err(Error::BudgetExhausted(cfg.node_budget)),
        _ => Ok(table.max_length),
    }
}

/// All words of length exactly `n` satisfying `c`, in lexicographic order.
pub fn avoiders_of_length(c: &ConstraintSet, k: u8, n: usize) -> Result<Vec<Vec<u8>>> {
    Alphabet::new(k)?;
    c.validate(k)?;
    let checker = c.checker();
    let budget = Budget {
        limit: u64::MAX,
        used: AtomicU64::new(0),
        blown: AtomicBool::new(false),
    };
    let split = n.min(8);
    let mut frontier = Vec::new();
    Dfs::new(&checker, k, n, Vec::new(), &budget).run(split, &mut |w| frontier.push(w.to_vec()));
    let parts: Vec<Vec<Vec<u8>>> = frontier
        .into_par_iter()
        .map(|prefix| {
            let mut out = Vec::new();
            Dfs::new(&checker, k, n, prefix, &budget).run(n, &mut |w| out.push(w.to_vec()));
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Depth-first search for a word of length `target` extending `word` to the
/// right, every intermediate word accepted by `checker`.
fn extends_right(checker: &Checker, k: u8, word: &mut Vec<u8>, target: usize) -> bool {
    if word.len() == target {
        return true;
    }
    for a in 0..k {
        word.push(a);
        let ok = !checker.rejects_last(word) && extends_right(checker, k, word, target);
        word.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Extends `rev` (a reversed word) by `left` more letters under the
/// reversed constraints, and for each such left extension tries to extend
/// the resulting word by `right` letters to the right.
fn extends_both(
    fwd: &Checker,
    rev_checker: &Checker,
    k: u8,
    rev: &mut Vec<u8>,
    target_left: usize,
    right: usize,
) -> bool {
    if rev.len() == target_left {
        let mut word: Vec<u8> = rev.iter().rev().copied().collect();
        let target = word.len() + right;
        return extends_right(fwd, k, &mut word, target);
    }
    for a in 0..k {
        rev.push(a);
        let ok = !rev_checker.rejects_last(rev)
            && extends_both(fwd, rev_checker, k, rev, target_left, right);
        rev.pop();
        if ok {
            return true;
        }
    }
    false
}

/// Words `u` of length `n` such that some `x·u·y` with `|x| = |y| = margin`
/// satisfies `c`.
pub fn extendable_words(c: &ConstraintSet, k: u8, n: usize, margin: usize) -> Result<BTreeSet<Word>> {
    if n == 0 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    let alphabet = Alphabet::new(k)?;
    let candidates = avoiders_of_length(c, k, n)?;
    let fwd = c.checker();
    let rev_checker = c.reversed().checker();
    let kept: Vec<Vec<u8>> = candidates
        .into_par_iter()
        .filter(|u| {
            let mut rev: Vec<u8> = u.iter().rev().copied().collect();
            extends_both(&fwd, &rev_checker, k, &mut rev, n + margin, margin)
        })
        .collect();
    Ok(kept.into_iter().map(|w| Word::from_raw(w, alphabet)).collect())
}

/// Result of comparing the two-sided extendable words of a constraint set
/// with the factors of a finite family of morphic words.
#[derive(Debug, Clone, Serialize)]
pub struct EssentialReport {
    pub passed: bool,
    pub length: usize,
    pub margin: usize,
    pub generators: Vec<String>,
    pub constraints: String,
    pub generator_factors: usize,
    pub extendable: usize,
    /// Extendable words that are not factors of any generator.
    pub only_extendable: Vec<String>,
    /// Generator factors that are not extendable.
    pub only_generated: Vec<String>,
    /// Windows of a generator (length `n + 2·margin`) violating the constraints.
    pub violations: Vec<String>,
}

/// Bounded check that `generators` essentially avoid `c`: every window of
/// length `n + 2m` of every generator satisfies `c`, and the length-`n`
/// words extendable by `m` letters on both sides are exactly the length-`n`
/// factors of the generators.
pub fn essential_avoidance_check(
    generators: &[MorphicWordSpec],
    c: &ConstraintSet,
    n: usize,
    margin: usize,
) -> Result<EssentialReport> {
    let first = generators
        .first()
        .ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    let k = first.alphabet()?.size();
    let window = n + 2 * margin;
    let checker = c.checker();
    let mut generated = BTreeSet::new();
    let mut violations = Vec::new();
    for g in generators {
        let gk = g.alphabet()?.size();
        if gk != k {
            return Err(Error::AlphabetMismatch { left: k, right: gk });
        }
        for w in g.stable_factors(window)? {
            if !checker.accepts(&w) {
                violations.push(format!("{}: {}", g, render(&w)));
            }
        }
        generated.extend(g.stable_factors(n)?);
    }
    let extendable: BTreeSet<Vec<u8>> = extendable_words(c, k, n, margin)?
        .into_iter()
        .map(Word::into_letters)
        .collect();
    let only_extendable: Vec<String> = extendable.difference(&generated).map(|w| render(w)).collect();
    let only_generated: Vec<String> = generated.difference(&extendable).map(|w| render(w)).collect();
    Ok(EssentialReport {
        passed: violations.is_empty() && only_extendable.is_empty() && only_generated.is_empty(),
        length: n,
        margin,
        generators: generators.iter().map(ToString::to_string).collect(),
        constraints: c.to_string(),
        generator_factors: generated.len(),
        extendable: extendable.len(),
        only_extendable,
        only_generated,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthLabel {
    Polynomial,
    Exponential,
    Inconclusive,
}

impl fmt::Display for GrowthLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthLabel::Polynomial => "polynomial",
            GrowthLabel::Exponential => "exponential",
            GrowthLabel::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthVerdict {
    pub label: GrowthLabel,
    pub counts: Vec<u64>,
    /// Geometric mean of `c(n+1)/c(n)` over the window.
    pub mean_ratio: f64,
    /// Slope of `log c(n)` against `log n` across the window.
    pub degree: f64,
    pub differences: Vec<i64>,
}

/// Thresholds of the growth decision rule.
///
/// Over the trailing window, counts growing by a mean factor of at least
/// `exponential_ratio` per letter are exponential; counts whose log-log
/// slope is at most `polynomial_degree` are polynomial; anything between is
/// inconclusive.
#[derive(Debug, Clone)]
pub struct GrowthRule {
    /// Number of trailing lengths the statistics are taken over.
    pub window: usize,
    pub exponential_ratio: f64,
    pub polynomial_degree: f64,
}

impl Default for GrowthRule {
    fn default() -> Self {
        GrowthRule {
            window: 12,
            exponential_ratio: 1.15,
            polynomial_degree: 2.5,
        }
    }
}

/// Default limit for growth classification.
pub const GROWTH_LIMIT: usize = 30;

impl GrowthRule {
    /// `counts[n]` is the number of avoiders of length `n`.
    pub fn classify(&self, counts: &[u64]) -> GrowthVerdict {
        let hi = counts.len().saturating_sub(1);
        let lo = hi.saturating_sub(self.window).max(1);
        let tail = &counts[lo.min(hi)..];
        let ratios: Vec<f64> = tail.windows(2).map(|p| p[1] as f64 / p[0] as f64).collect();
        let mean_ratio = if ratios.is_empty() {
            1.0
        } else {
            (ratios.iter().map(|r| r.ln()).sum::<f64>() / ratios.len() as f64).exp()
        };
        let degree = if hi > lo && counts[lo] > 0 && counts[hi] > 0 {
            (counts[hi] as f64 / counts[lo] as f64).ln() / (hi as f64 / lo as f64).ln()
        } else {
            f64::NAN
        };
        let differences: Vec<i64> = tail.windows(2).map(|p| p[1] as i64 - p[0] as i64).collect();
        let label = if mean_ratio >= self.exponential_ratio {
            GrowthLabel::Exponential
        } else if degree <= self.polynomial_degree {
            GrowthLabel::Polynomial
        } else {
            GrowthLabel::Inconclusive
        };
        GrowthVerdict {
            label,
            counts: counts.to_vec(),
            mean_ratio,
            degree,
            differences,
        }
    }
}

/// Labels the growth of the number of words over `Σ_k` avoiding `f`.
pub fn classify_growth(f: &Formula, k: u8, limit: usize) -> Result<GrowthVerdict> {
    classify_growth_with(f, k, &SearchConfig::with_limit(limit), &GrowthRule::default())
}

pub fn classify_growth_with(
    f: &Formula,
    k: u8,
    cfg: &SearchConfig,
    rule: &GrowthRule,
) -> Result<GrowthVerdict> {
    let table = enumerate_avoiders(&ConstraintSet::formula(f.clone()), k, cfg)?;
    match table.status {
        SearchStatus::Exhausted => Err(Error::NotAvoidable {
            formula: f.to_string(),
            k,
            max_length: table.max_length.unwrap_or(0),
        }),
        SearchStatus::BudgetExhausted => Err(Error::BudgetExhausted(cfg.node_budget)),
        SearchStatus::LimitReached => Ok(rule.classify(&table.counts)),
    }
}
