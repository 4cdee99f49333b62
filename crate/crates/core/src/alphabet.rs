use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter within its [`Alphabet`].
pub type Letter = usize;

/// A finite word, stored as letter indices.
pub type Word = Vec<Letter>;

/// An ordered, non-empty set of distinct symbols.
///
/// The order of the symbols is significant: it is the order used for all
/// lexicographic comparisons and tie-breaking in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidArgument("alphabet must not be empty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty()
                || s.chars()
                    .any(|c| c.is_whitespace() || matches!(c, ',' | '(' | ')' | '[' | ']' | '#' | '"'))
            {
                return Err(Error::InvalidArgument(format!("invalid letter symbol {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidArgument(format!("duplicate letter {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet whose letters are the characters of `chars`, in order.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// True if every symbol is a single character, so words can be written
    /// without separators.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    pub fn contains_word(&self, word: &[Letter]) -> bool {
        word.iter().all(|&a| a < self.len())
    }

    /// Parses a finite word. Single-character alphabets accept plain
    /// concatenation (`"aba"`); otherwise letters are separated by commas or
    /// whitespace. `ε` and the empty string denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Vec::new());
        }
        let pieces: Vec<&str> = if self.is_single_char() && !text.contains([',', ' ']) {
            text.char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .collect()
        } else {
            text.split([',', ' ']).filter(|p| !p.is_empty()).collect()
        };
        pieces
            .into_iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown letter {p:?}")))
            })
            .collect()
    }

    /// Renders a finite word; the empty word is rendered as `ε`.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        self.join_word(word)
    }

    /// Renders a word without the `ε` convention (empty word → empty string).
    pub(crate) fn join_word(&self, word: &[Letter]) -> String {
        let sep = if self.is_single_char() { "" } else { "," };
        word.iter()
            .map(|&a| self.symbol(a))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(", "))
    }
}

/// Shortlex order: shorter words first, equal lengths compared letter by letter.
pub fn shortlex_cmp(a: &[Letter], b: &[Letter]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "b", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
    }

    #[test]
    fn word_round_trip() {
        let ab = Alphabet::from_chars("ab").unwrap();
        assert_eq!(ab.parse_word("abba").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(ab.format_word(&[0, 1]), "ab");
        assert_eq!(ab.parse_word("ε").unwrap(), Vec::<Letter>::new());
        assert!(ab.parse_word("abc").is_err());

        let vs = Alphabet::new(["v1", "v2", "x_v1"]).unwrap();
        assert_eq!(vs.parse_word("v1,x_v1").unwrap(), vec![0, 2]);
        assert_eq!(vs.format_word(&[2, 1]), "x_v1,v2");
    }

    #[test]
    fn shortlex() {
        use std::cmp::Ordering::*;
        assert_eq!(shortlex_cmp(&[1], &[0, 0]), Less);
        assert_eq!(shortlex_cmp(&[0, 1], &[1, 0]), Less);
        assert_eq!(shortlex_cmp(&[], &[]), Equal);
    }
}
