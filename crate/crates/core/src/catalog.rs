//! Built-in formulas, morphisms and certification claims.
//!
//! The data files live in `data/` at the workspace root and are embedded at
//! compile time.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::morphic::Morphism;

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../../data/", $name, ".txt")))),*]
    };
}

const MORPHISMS: &[(&str, &str)] = embedded![
    "b2", "b3", "b4", "b5",
    "g_x", "g_y", "g_z", "g_zbar", "g_t", "g_w",
    "m_aa_aba_babb_22", "m_aa_aba_babb_44", "m_aa_abb_bbab", "m_aa_abab_bb",
    "m_aa_abba_bab", "m_aab_abb_bbaa", "m_aab_abba_baa", "m_aabb_abba",
    "m_abab_baba", "m_aaa", "m_aba_baab_bab", "m_aaba_abaa_bab",
    "m_aaba_abaa_baab", "m_abaab", "m_bab_aba_aabb", "m_aab_aba_abba",
    "m_baa_aba_aabb", "m_bba_aaba_aabb_160", "m_bba_aaba_aabb_202",
];

const FORMULAS: &str = include_str!("../../../data/formulas.toml");
const CLAIMS: &str = include_str!("../../../data/claims.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Growth {
    Polynomial,
    Exponential,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormulaEntry {
    pub text: String,
    /// Avoidability index.
    pub index: u8,
    pub list: String,
    #[serde(default)]
    pub growth: Option<Growth>,
    /// Longest binary avoider, for 2-unavoidable entries.
    #[serde(default)]
    pub max_length: Option<usize>,
    /// Number of nonempty binary avoiders, for 2-unavoidable entries.
    #[serde(default)]
    pub count: Option<u64>,
}

impl FormulaEntry {
    pub fn formula(&self) -> Result<Formula> {
        Formula::parse(&self.text)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    pub formula: String,
    pub morphism: String,
    /// Every square of period at least `sq` is avoided.
    pub sq: usize,
    /// The reverse formula is avoided as well.
    #[serde(default)]
    pub reverse: bool,
}

impl Claim {
    /// The formula, followed by its reverse when claimed.
    pub fn formulas(&self) -> Result<Vec<Formula>> {
        let f = Formula::parse(&self.formula)?;
        let mut out = vec![f.clone()];
        if self.reverse {
            out.push(f.reversed());
        }
        Ok(out)
    }
}

#[derive(Deserialize)]
struct FormulaFile {
    formula: Vec<FormulaEntry>,
}

#[derive(Deserialize)]
struct ClaimFile {
    claim: Vec<Claim>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub formulas: Vec<FormulaEntry>,
    pub claims: Vec<Claim>,
    morphisms: Vec<Morphism>,
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        let formulas = toml::from_str::<FormulaFile>(FORMULAS)
            .map_err(|e| Error::Catalog(format!("formulas.toml: {e}")))?
            .formula;
        let claims = toml::from_str::<ClaimFile>(CLAIMS)
            .map_err(|e| Error::Catalog(format!("claims.toml: {e}")))?
            .claim;
        let morphisms = MORPHISMS
            .iter()
            .map(|(name, text)| Morphism::parse(*name, text))
            .collect::<Result<Vec<_>>>()?;
        let cat = Catalog {
            formulas,
            claims,
            morphisms,
        };
        for c in &cat.claims {
            cat.morphism(&c.morphism)?;
            c.formulas()?;
        }
        for f in &cat.formulas {
            f.formula()?;
        }
        Ok(cat)
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    /// Looks up a built-in morphism; `gy` and `g_y` are the same name.
    pub fn morphism(&self, name: &str) -> Result<Morphism> {
        let norm = |s: &str| s.replace('_', "").to_ascii_lowercase();
        let key = norm(name);
        self.morphisms
            .iter()
            .find(|m| norm(m.name()) == key)
            .cloned()
            .ok_or_else(|| Error::Catalog(format!("unknown morphism {name:?}")))
    }

    /// A built-in name, or else a path to a morphism file.
    pub fn resolve_morphism(&self, name: &str) -> Result<Morphism> {
        match self.morphism(name) {
            Ok(m) => Ok(m),
            Err(e) => {
                let p = Path::new(name);
                if p.exists() {
                    Morphism::load(p)
                } else {
                    Err(e)
                }
            }
        }
    }

    /// Rows with an exhaustive longest-avoider length and count.
    pub fn figure_rows(&self) -> impl Iterator<Item = &FormulaEntry> {
        self.formulas.iter().filter(|f| f.max_length.is_some())
    }

    pub fn entry(&self, f: &Formula) -> Option<&FormulaEntry> {
        self.formulas
            .iter()
            .find(|e| e.formula().is_ok_and(|g| g.same_up_to_renaming(f)))
    }

    pub fn claims_for(&self, f: &Formula) -> Vec<&Claim> {
        self.claims
            .iter()
            .filter(|c| Formula::parse(&c.formula).is_ok_and(|g| g.same_up_to_renaming(f)))
            .collect()
    }
}
