//! Symbols, texts, and canonical (restricted-growth) texts.
//!
//! A symbol is a 1-based alphabet index; `1 < 2 < 3 < …` is the lexicographic
//! order.  Texts render as digit strings for symbols `1..=9` and as bracketed
//! decimals (`"[12]"`) beyond, so the alphabet is not capped by a character
//! set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based alphabet index.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(try_from = "u32", into = "u32")]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 {
            Err(Error::ZeroSymbol)
        } else {
            Ok(Symbol(id))
        }
    }

    pub fn id(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Symbol {
    type Error = Error;
    fn try_from(v: u32) -> Result<Self> {
        Symbol::new(v)
    }
}

impl From<Symbol> for u32 {
    fn from(s: Symbol) -> u32 {
        s.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 <= 9 {
            write!(f, "{}", self.0)
        } else {
            write!(f, "[{}]", self.0)
        }
    }
}

/// A sequence of symbols.  May be empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Text {
    symbols: Vec<Symbol>,
}

impl Text {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Text { symbols }
    }

    /// Builds a text from raw 1-based ids, rejecting zeros.
    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        let symbols = ids
            .iter()
            .map(|&id| Symbol::new(id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Text { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// 1-based indexing, matching the positional conventions used throughout.
    pub fn at(&self, pos: usize) -> Symbol {
        self.symbols[pos - 1]
    }

    pub fn ids(&self) -> Vec<u32> {
        self.symbols.iter().map(|s| s.0).collect()
    }

    pub fn distinct_symbols(&self) -> usize {
        let mut ids = self.ids();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }
}

pub(crate) fn is_palindrome<T: Eq>(s: &[T]) -> bool {
    let n = s.len();
    (0..n / 2).all(|i| s[i] == s[n - 1 - i])
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Text {
    type Err = Error;

    /// Parses digit strings with optional bracketed multi-digit symbols,
    /// e.g. `"121"` or `"1[12]1"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadText(s.to_string());
        let mut symbols = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            match c {
                '1'..='9' => symbols.push(Symbol(c as u32 - '0' as u32)),
                '[' => {
                    let mut digits = String::new();
                    loop {
                        match chars.next() {
                            Some(']') => break,
                            Some(d) if d.is_ascii_digit() => digits.push(d),
                            _ => return Err(bad()),
                        }
                    }
                    let id: u32 = digits.parse().map_err(|_| bad())?;
                    symbols.push(Symbol::new(id).map_err(|_| bad())?);
                }
                _ => return Err(bad()),
            }
        }
        Ok(Text { symbols })
    }
}

/// A text whose distinct symbols first appear in increasing order `1, 2, 3, …`
/// (the restricted-growth condition); the unique representative of its
/// symbol-permutation class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Text", into = "Text")]
pub struct CanonicalText(Text);

impl CanonicalText {
    pub fn new(text: Text) -> Result<Self> {
        let mut max = 0u32;
        for sym in text.symbols() {
            if sym.0 > max + 1 {
                return Err(Error::BadText(format!(
                    "not in restricted-growth form: {text}"
                )));
            }
            max = max.max(sym.0);
        }
        Ok(CanonicalText(text))
    }

    pub fn text(&self) -> &Text {
        &self.0
    }

    pub fn into_text(self) -> Text {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Text> for CanonicalText {
    type Error = Error;
    fn try_from(t: Text) -> Result<Self> {
        CanonicalText::new(t)
    }
}

impl From<CanonicalText> for Text {
    fn from(c: CanonicalText) -> Text {
        c.0
    }
}

impl fmt::Display for CanonicalText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CanonicalText {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CanonicalText::new(s.parse()?)
    }
}

/// Relabels symbols by order of first occurrence.  The Manacher array is
/// unchanged: palindromic structure is invariant under symbol permutation.
pub fn canonicalize(text: &Text) -> CanonicalText {
    let mut map = std::collections::HashMap::new();
    let mut next = 0u32;
    let symbols = text
        .symbols()
        .iter()
        .map(|s| {
            let id = *map.entry(s.0).or_insert_with(|| {
                next += 1;
                next
            });
            Symbol(id)
        })
        .collect();
    CanonicalText(Text { symbols })
}
