//! Line-oriented presentation text format.
//!
//! ```text
//! # quaternion group of order 8
//! gens a b
//! rel a^4; rel b^2 a^-2
//! rel [a,b] a^-2
//! ```
//!
//! Statements end at a newline or `;`. `gens` must come first and only
//! once. A word is a juxtaposition of factors `name`, `name^k`,
//! `[w1,w2,...]` (left-normed commutator) or `(w)`, each optionally raised
//! to a nonzero integer power; `1` is the empty word. A `rel` statement may
//! list several relators separated by top-level commas.

use super::{FinitePresentation, Word};
use crate::error::{Error, Result};

pub fn parse_presentation(text: &str) -> Result<FinitePresentation> {
    let mut p = Parser::new(text);
    let mut names: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    loop {
        p.skip_separators();
        if p.at_end() {
            break;
        }
        let (line, column) = p.position();
        let keyword = p.identifier().ok_or_else(|| p.syntax("expected `gens` or `rel`"))?;
        match keyword.as_str() {
            "gens" => {
                if names.is_some() {
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: "`gens` given twice".into(),
                    });
                }
                names = Some(p.generator_list()?);
            }
            "rel" => {
                let gens = names.as_ref().ok_or(Error::Syntax {
                    line,
                    column,
                    message: "`rel` before `gens`".into(),
                })?;
                loop {
                    relators.push(p.word(gens)?);
                    p.skip_blanks();
                    if !p.eat(',') {
                        break;
                    }
                }
                p.end_of_statement()?;
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unknown statement `{other}`"),
                })
            }
        }
    }
    let names = names.ok_or_else(|| p.syntax("missing `gens` statement"))?;
    FinitePresentation::new(names, relators)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn skip_comment(&mut self) {
        if self.peek() == Some('#') {
            while let Some(c) = self.peek() {
                if c == '\n' {
                    break;
                }
                self.bump();
            }
        }
    }

    /// Skips spaces and tabs (not newlines) and trailing comments.
    fn skip_blanks(&mut self) {
        loop {
            match self.peek() {
                Some(' ') | Some('\t') | Some('\r') => {
                    self.bump();
                }
                Some('#') => self.skip_comment(),
                _ => break,
            }
        }
    }

    fn skip_separators(&mut self) {
        loop {
            self.skip_blanks();
            match self.peek() {
                Some('\n') | Some(';') => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    fn end_of_statement(&mut self) -> Result<()> {
        self.skip_blanks();
        match self.peek() {
            None | Some('\n') | Some(';') => Ok(()),
            Some(c) => Err(self.syntax(&format!("unexpected `{c}`"))),
        }
    }

    fn identifier(&mut self) -> Option<String> {
        let c = self.peek()?;
        if !(c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Some(s)
    }

    fn generator_list(&mut self) -> Result<Vec<String>> {
        let mut names = Vec::new();
        loop {
            self.skip_blanks();
            self.eat(',');
            self.skip_blanks();
            match self.peek() {
                None | Some('\n') | Some(';') => break,
                _ => {
                    let (line, column) = self.position();
                    let name = self
                        .identifier()
                        .ok_or_else(|| self.syntax("expected a generator name"))?;
                    if names.contains(&name) {
                        return Err(Error::Syntax {
                            line,
                            column,
                            message: format!("duplicate generator `{name}`"),
                        });
                    }
                    names.push(name);
                }
            }
        }
        if names.is_empty() {
            return Err(self.syntax("`gens` needs at least one name"));
        }
        Ok(names)
    }

    fn exponent(&mut self) -> Result<i32> {
        self.skip_blanks();
        let (line, column) = self.position();
        let negative = self.eat('-');
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(Error::Syntax {
                line,
                column,
                message: "expected an integer exponent".into(),
            });
        }
        let value: i32 = digits.parse().map_err(|_| Error::Syntax {
            line,
            column,
            message: "exponent out of range".into(),
        })?;
        if value == 0 {
            return Err(Error::ZeroExponent { line, column });
        }
        Ok(if negative { -value } else { value })
    }

    /// Parses a product of factors up to a delimiter (`,`, `]`, `)`, end of statement).
    fn word(&mut self, gens: &[String]) -> Result<Word> {
        let mut w = Word::identity();
        let mut any = false;
        loop {
            self.skip_blanks();
            match self.peek() {
                None | Some('\n') | Some(';') | Some(',') | Some(']') | Some(')') => break,
                _ => {}
            }
            let f = self.factor(gens)?;
            w = w.mul(&f);
            any = true;
        }
        if !any {
            return Err(self.syntax("expected a word"));
        }
        Ok(w)
    }

    fn factor(&mut self, gens: &[String]) -> Result<Word> {
        let (line, column) = self.position();
        let atom = match self.peek() {
            Some('[') => {
                self.bump();
                let mut acc = self.word(gens)?;
                let mut parts = 1;
                loop {
                    self.skip_blanks();
                    if self.eat(',') {
                        let next = self.word(gens)?;
                        acc = acc.commutator(&next);
                        parts += 1;
                    } else if self.eat(']') {
                        break;
                    } else {
                        return Err(self.syntax("unclosed `[`"));
                    }
                }
                if parts < 2 {
                    return Err(Error::Syntax {
                        line,
                        column,
                        message: "commutator needs at least two entries".into(),
                    });
                }
                acc
            }
            Some('(') => {
                self.bump();
                let inner = self.word(gens)?;
                self.skip_blanks();
                if !self.eat(')') {
                    return Err(self.syntax("unclosed `(`"));
                }
                inner
            }
            Some('1') => {
                self.bump();
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.identifier().unwrap_or_default();
                let idx = gens
                    .iter()
                    .position(|g| *g == name)
                    .ok_or(Error::UnknownGenerator { name, line, column })?;
                Word::gen(idx as u32)
            }
            Some(c) => return Err(self.syntax(&format!("unexpected `{c}`"))),
            None => return Err(self.syntax("unexpected end of input")),
        };
        self.skip_blanks();
        if self.eat('^') {
            let k = self.exponent()?;
            Ok(atom.pow(k))
        } else {
            Ok(atom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_power_relator() {
        let p = parse_presentation("gens a; rel a^2").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert_eq!(p.relators(), &[Word::power(0, 2)]);
    }

    #[test]
    fn commutator_token_expands() {
        let p = parse_presentation("gens a b; rel [a,b]").unwrap();
        assert_eq!(
            p.relators()[0],
            Word::from_pairs([(0, -1), (1, -1), (0, 1), (1, 1)])
        );
    }

    #[test]
    fn zero_exponent_rejected() {
        let err = parse_presentation("gens a; rel a^0").unwrap_err();
        assert_eq!(err, Error::ZeroExponent { line: 1, column: 15 });
    }

    #[test]
    fn unknown_generator_reports_position() {
        let err = parse_presentation("gens a\nrel a b").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownGenerator {
                name: "b".into(),
                line: 2,
                column: 7
            }
        );
    }

    #[test]
    fn comments_and_multiple_relators() {
        let text = "# Q8\ngens a b   # two generators\nrel a^4, b^2 a^-2\nrel [a,b] a^-2";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relators().len(), 3);
    }

    #[test]
    fn left_normed_triple_commutator() {
        let p = parse_presentation("gens a b c; rel [a,b,c]").unwrap();
        let (a, b, c) = (Word::gen(0), Word::gen(1), Word::gen(2));
        assert_eq!(p.relators()[0], a.commutator(&b).commutator(&c));
    }

    #[test]
    fn rel_before_gens_is_an_error() {
        assert!(matches!(
            parse_presentation("rel a"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    fn arb_presentation() -> impl Strategy<Value = FinitePresentation> {
        (1usize..4).prop_flat_map(|n| {
            let word = prop::collection::vec((0..n as u32, -4i32..=4), 0..8)
                .prop_map(Word::from_pairs);
            prop::collection::vec(word, 0..5).prop_map(move |rels| {
                FinitePresentation::with_default_names(n, rels).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn serialize_parse_round_trip(p in arb_presentation()) {
            let text = p.to_string();
            let again = parse_presentation(&text).unwrap();
            prop_assert_eq!(&again, &p);
            prop_assert_eq!(again.to_string(), text);
        }
    }
}
