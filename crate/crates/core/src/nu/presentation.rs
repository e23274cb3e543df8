use serde::{Deserialize, Serialize};

use crate::coset::regular_group;
use crate::error::{Error, Result};
use crate::presentation::{FinitePresentation, Word};

/// Largest group for which the element-indexed presentation is written out.
pub const ELEMENT_MODE_LIMIT: u64 = 16;

/// Which words index the defining relations of `nu(G)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexMode {
    /// Relations for every triple of generators.
    #[default]
    Generators,
    /// Relations for every triple of group elements (one word per element).
    Elements,
}

/// Names for the second copy of the generators.
pub(crate) fn phi_names(names: &[String]) -> Vec<String> {
    names
        .iter()
        .map(|n| {
            let mut candidate = format!("{n}_phi");
            while names.contains(&candidate) {
                candidate.push('_');
            }
            candidate
        })
        .collect()
}

/// The two relators `[w1, w2^f]^{w3} = [w1^{w3}, (w2^{w3})^f]` and
/// `[w1, w2^f]^{w3^f} = [w1^{w3}, (w2^{w3})^f]`, with `f` shifting generator
/// indices by `n`.
pub(crate) fn nu_relators(w1: &Word, w2: &Word, w3: &Word, n: u32) -> [Word; 2] {
    let phi = |w: &Word| w.map_generators(|g| g + n);
    let base = w1.commutator(&phi(w2));
    let rhs = w1.conjugate(w3).commutator(&phi(&w2.conjugate(w3)));
    let first = base.conjugate(w3).inverse().mul(&rhs);
    let second = base.conjugate(&phi(w3)).inverse().mul(&rhs);
    [first, second]
}

/// Words for all elements of the group presented by `pres`, generators first.
pub(crate) fn element_words(pres: &FinitePresentation, max_cosets: usize) -> Result<Vec<Word>> {
    let g = regular_group(pres, max_cosets)?;
    let ar = g.arith();
    let gen_points: Vec<u32> = g.generators().iter().map(|x| x.apply(0)).collect();
    let mut words: Vec<Word> = (0..pres.num_generators() as u32).map(Word::gen).collect();
    for &u in ar.elements() {
        if !gen_points.contains(&u) {
            words.push(Word::from_pairs(ar.word(u).into_iter().map(|l| (l, 1))));
        }
    }
    Ok(words)
}

/// A presentation of `nu(G)` on generators `X` and `X^phi`: the relators of
/// `G`, their copies on `X^phi`, and the two defining relations for every
/// triple from the index set.
pub fn nu_presentation(pres: &FinitePresentation, mode: IndexMode) -> Result<FinitePresentation> {
    nu_presentation_bounded(pres, mode, crate::coset::DEFAULT_MAX_COSETS)
}

pub(crate) fn nu_presentation_bounded(
    pres: &FinitePresentation,
    mode: IndexMode,
    max_cosets: usize,
) -> Result<FinitePresentation> {
    let n = pres.num_generators() as u32;
    let index: Vec<Word> = match mode {
        IndexMode::Generators => (0..n).map(Word::gen).collect(),
        IndexMode::Elements => {
            let words = element_words(pres, max_cosets)?;
            if words.len() as u64 > ELEMENT_MODE_LIMIT + n as u64 {
                return Err(Error::exceeded("group order for element-indexed relations", ELEMENT_MODE_LIMIT));
            }
            words
        }
    };
    let mut names = pres.names().to_vec();
    names.extend(phi_names(pres.names()));
    let mut relators: Vec<Word> = pres.relators().to_vec();
    relators.extend(pres.relators().iter().map(|r| r.map_generators(|g| g + n)));
    let mut seen = std::collections::HashSet::new();
    for w1 in &index {
        for w2 in &index {
            for w3 in &index {
                for r in nu_relators(w1, w2, w3, n) {
                    if !r.is_identity() && seen.insert(r.clone()) {
                        relators.push(r);
                    }
                }
            }
        }
    }
    FinitePresentation::new(names, relators)
}
