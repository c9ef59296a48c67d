//! Event tokens, alphabets, and words.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("symbol name is empty")]
    Empty,
    #[error("invalid symbol name {0:?}: expected [A-Za-z][A-Za-z0-9_]*")]
    Invalid(String),
    #[error("duplicate symbol `{0}` in alphabet")]
    Duplicate(Symbol),
}

/// A named event token such as `Deliver_Lecture`.
///
/// Names follow `[A-Za-z][A-Za-z0-9_]*`. Cloning is cheap: the name is shared.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self, SymbolError> {
        if is_token(name) {
            Ok(Symbol(Arc::from(name)))
        } else if name.is_empty() {
            Err(SymbolError::Empty)
        } else {
            Err(SymbolError::Invalid(name.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Whether `s` matches the token grammar `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_token(s: &str) -> bool {
    let mut bytes = s.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for Symbol {
    type Err = SymbolError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Symbol::new(s)
    }
}

/// A finite set of symbols kept in first-insertion order.
///
/// The order matters: serialization, DOT export and canonical state numbering
/// all walk symbols in this order.
#[derive(Clone, Default)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet, rejecting duplicates.
    pub fn from_symbols<I>(symbols: I) -> Result<Self, SymbolError>
    where
        I: IntoIterator<Item = Symbol>,
    {
        let mut alphabet = Alphabet::new();
        for symbol in symbols {
            if !alphabet.insert(symbol.clone()) {
                return Err(SymbolError::Duplicate(symbol));
            }
        }
        Ok(alphabet)
    }

    /// Parses and collects token names, rejecting duplicates.
    pub fn from_names<I, S>(names: I) -> Result<Self, SymbolError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let symbols = names
            .into_iter()
            .map(|n| Symbol::new(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_symbols(symbols)
    }

    /// Appends `symbol` unless already present. Returns whether it was added.
    pub fn insert(&mut self, symbol: Symbol) -> bool {
        if self.index.contains_key(&symbol) {
            return false;
        }
        self.index.insert(symbol.clone(), self.symbols.len());
        self.symbols.push(symbol);
        true
    }

    pub fn index_of(&self, symbol: &Symbol) -> Option<usize> {
        self.index.get(symbol).copied()
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index.contains_key(symbol)
    }

    pub fn get(&self, index: usize) -> Option<&Symbol> {
        self.symbols.get(index)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.symbols.iter()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Same members, ignoring order.
    pub fn same_set(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && self.iter().all(|s| other.contains(s))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.symbols.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Alphabet {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.symbols.iter()
    }
}

/// A finite sequence of events. The empty word is λ.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(events: Vec<Symbol>) -> Self {
        Word(events)
    }

    pub fn from_tokens<I, S>(tokens: I) -> Result<Self, SymbolError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        tokens
            .into_iter()
            .map(|t| Symbol::new(t.as_ref()))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn events(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(events: Vec<Symbol>) -> Self {
        Word(events)
    }
}

impl From<&[Symbol]> for Word {
    fn from(events: &[Symbol]) -> Self {
        Word(events.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("λ");
        }
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_grammar() {
        assert!(is_token("Deliver_Lecture"));
        assert!(is_token("a1_"));
        assert!(!is_token(""));
        assert!(!is_token("_a"));
        assert!(!is_token("1a"));
        assert!(!is_token("bad token!"));
        assert!(!is_token("Deliver Lecture"));
        assert_eq!(Symbol::new(""), Err(SymbolError::Empty));
    }

    #[test]
    fn symbols_compare_by_name() {
        assert_eq!(Symbol::new("a").unwrap(), Symbol::new("a").unwrap());
        assert_ne!(Symbol::new("a").unwrap(), Symbol::new("A").unwrap());
    }

    #[test]
    fn alphabet_keeps_insertion_order_and_rejects_duplicates() {
        let alphabet = Alphabet::from_names(["b", "a", "c"]).unwrap();
        let names: Vec<_> = alphabet.iter().map(Symbol::as_str).collect();
        assert_eq!(names, ["b", "a", "c"]);
        assert_eq!(alphabet.index_of(&Symbol::new("a").unwrap()), Some(1));

        let err = Alphabet::from_names(["a", "b", "a"]).unwrap_err();
        assert_eq!(err, SymbolError::Duplicate(Symbol::new("a").unwrap()));

        let other = Alphabet::from_names(["c", "b", "a"]).unwrap();
        assert!(alphabet.same_set(&other));
        assert_ne!(alphabet, other);
    }
}
