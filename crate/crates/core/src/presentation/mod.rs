//! Words, finite presentations, the presentation text format, and the
//! catalog of named p-group families.

mod catalog;
mod parse;
mod word;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use catalog::{catalog_group, Family, GroupSpec};
pub(crate) use catalog::prime_power;
pub use parse::parse_presentation;
pub use word::{free_reduce, Letter, NamedWord, Word};

/// A finitely presented group `<X | R>`.
///
/// Relators are kept as given (left-to-right products, freely reduced); no
/// cyclic reduction is applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl FinitePresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = names.len() as u32;
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(Error::invariant(format!(
                        "relator {i} uses generator {g} but only {n} generators exist"
                    )));
                }
            }
        }
        Ok(FinitePresentation { names, relators })
    }

    /// Generators named `a, b, c, ...` (then `x27, x28, ...`).
    pub fn with_default_names(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        FinitePresentation::new(default_names(ngens), relators)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn push_relator(&mut self, r: Word) {
        debug_assert!(r.max_generator().is_none_or(|g| (g as usize) < self.names.len()));
        self.relators.push(r);
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> NamedWord<'a> {
        NamedWord {
            word: w,
            names: &self.names,
        }
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens")?;
        for n in &self.names {
            write!(f, " {n}")?;
        }
        writeln!(f)?;
        for r in &self.relators {
            writeln!(f, "rel {}", self.display_word(r))?;
        }
        Ok(())
    }
}

impl FromStr for FinitePresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}
