//! Avoidance of binary formulas over small alphabets.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: finite words, factors, squares, square-free enumeration;
//! * [`formula`]: patterns, formulas, normalization, symmetries;
//! * [`occurrence`]: occurrence matching, incremental checks, divisibility;
//! * [`search`]: exhaustive backtracking, growth classification and
//!   bounded two-sided extendability checks;
//! * [`morphic`]: morphisms, fixed points and certificates for uniform
//!   morphisms;
//! * [`catalog`]: the built-in formulas, morphisms and claims.

pub mod catalog;
pub mod error;
pub mod formula;
pub mod morphic;
pub mod occurrence;
pub mod search;
pub mod words;

pub use error::{Error, Result};
pub use formula::{Formula, Pattern};
pub use occurrence::{avoids, find_occurrence, is_divisible_by, Occurrence};
pub use words::{Alphabet, Word};
