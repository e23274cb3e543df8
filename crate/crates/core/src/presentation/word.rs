use std::fmt;

/// One syllable of a word: a generator index raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub exp: i32,
}

/// A freely reduced word in the free group on numbered generators.
///
/// Adjacent letters always carry distinct generator indices; the empty
/// word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(gen: u32) -> Self {
        Word::power(gen, 1)
    }

    pub fn power(gen: u32, exp: i32) -> Self {
        if exp == 0 {
            Word::identity()
        } else {
            Word {
                letters: vec![Letter { gen, exp }],
            }
        }
    }

    /// Builds a word from raw `(generator, exponent)` pairs, reducing freely.
    pub fn from_pairs<I: IntoIterator<Item = (u32, i32)>>(pairs: I) -> Self {
        let mut w = Word::identity();
        for (gen, exp) in pairs {
            w.push(gen, exp);
        }
        w
    }

    /// Appends `gen^exp`, merging with the last letter and cancelling as needed.
    pub fn push(&mut self, gen: u32, exp: i32) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(Letter { gen, exp }),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length as a sequence of single generator letters (sum of |exponent|).
    pub fn total_length(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for l in &other.letters {
            w.push(l.gen, l.exp);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse()
            .mul(&other.inverse())
            .mul(self)
            .mul(other)
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    /// Replaces every generator index through `f`, keeping exponents.
    pub fn map_generators(&self, mut f: impl FnMut(u32) -> u32) -> Word {
        Word::from_pairs(self.letters.iter().map(|l| (f(l.gen), l.exp)))
    }

    /// Substitutes a word for every generator.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut w = Word::identity();
        for l in &self.letters {
            w = w.mul(&images[l.gen as usize].pow(l.exp));
        }
        w
    }

    /// Expands into single-letter steps `(generator, inverted)`.
    pub fn expand(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.letters.iter().flat_map(|l| {
            std::iter::repeat_n((l.gen, l.exp < 0), l.exp.unsigned_abs() as usize)
        })
    }
}

/// Returns the unique freely reduced form of an arbitrary letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Word {
    Word::from_pairs(letters.iter().map(|l| (l.gen, l.exp)))
}

/// Display helper that prints a word with generator names.
pub struct NamedWord<'a> {
    pub word: &'a Word,
    pub names: &'a [String],
}

impl fmt::Display for NamedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = &self.names[l.gen as usize];
            if l.exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{}", l.exp)?;
            }
        }
        Ok(())
    }
}
