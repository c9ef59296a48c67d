//! The line-oriented `automaton v1` document format.
//!
//! ```text
//! automaton v1
//! alphabet: a b
//! states: 2
//! start: 0
//! accept: 1
//! trans: 0 a 1
//! trans: 0 b 0
//! trans: 1 a 1
//! trans: 1 b 0
//! ```
//!
//! The header comes first. `alphabet`, `states`, `start` and `accept` appear
//! exactly once each; `trans` lines must cover every (state, symbol) pair.
//! Optional `label: <state> <token>` lines name states for humans and are
//! ignored by every algorithm. Blank lines and `#` comments are skipped.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::dfa::{AutomatonError, Dfa, StateId};
use crate::symbol::{is_token, Alphabet, Symbol};

pub const HEADER: &str = "automaton v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    InvalidAutomaton(#[from] AutomatonError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed document: the machine plus any state labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonDocument {
    pub dfa: Dfa,
    pub labels: BTreeMap<StateId, Symbol>,
}

impl AutomatonDocument {
    pub fn new(dfa: Dfa) -> Self {
        AutomatonDocument {
            dfa,
            labels: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        parse_document(text)
    }

    /// Canonical rendering: the [`serialize_dfa`] body followed by labels in
    /// ascending state order.
    pub fn render(&self) -> String {
        let mut out = serialize_dfa(&self.dfa);
        for (state, label) in &self.labels {
            writeln!(out, "label: {state} {label}").unwrap();
        }
        out
    }
}

/// Deterministic rendering: states ascending, symbols in alphabet order.
pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    out.push_str("alphabet:");
    for symbol in dfa.alphabet() {
        write!(out, " {symbol}").unwrap();
    }
    out.push('\n');
    writeln!(out, "states: {}", dfa.state_count()).unwrap();
    writeln!(out, "start: {}", dfa.start()).unwrap();
    out.push_str("accept:");
    for q in dfa.accepting_states() {
        write!(out, " {q}").unwrap();
    }
    out.push('\n');
    for q in dfa.states() {
        for (column, symbol) in dfa.alphabet().iter().enumerate() {
            writeln!(out, "trans: {q} {symbol} {}", dfa.target(q, column)).unwrap();
        }
    }
    out
}

pub fn deserialize_dfa(text: &str) -> Result<Dfa, FormatError> {
    parse_document(text).map(|doc| doc.dfa)
}

fn parse_state(token: &str, line: usize) -> Result<usize, FormatError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("expected a state number, found {token:?}")));
    }
    token
        .parse()
        .map_err(|_| syntax(line, format!("state number {token} out of range")))
}

fn parse_symbol(token: &str, line: usize) -> Result<Symbol, FormatError> {
    if !is_token(token) {
        return Err(syntax(line, format!("bad symbol {token:?}")));
    }
    Ok(Symbol::new(token).expect("checked token"))
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<(), FormatError> {
    if slot.is_some() {
        return Err(syntax(line, format!("duplicate `{key}` line")));
    }
    *slot = Some(value);
    Ok(())
}

fn parse_document(text: &str) -> Result<AutomatonDocument, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((line, other)) => {
            return Err(syntax(line, format!("expected `{HEADER}`, found {other:?}")))
        }
        None => return Err(syntax(1, format!("missing `{HEADER}` header"))),
    }

    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut start: Option<(usize, usize)> = None;
    let mut accept: Option<(usize, Vec<usize>)> = None;
    let mut transitions: Vec<(usize, usize, Symbol, usize)> = Vec::new();
    let mut labels: Vec<(usize, usize, Symbol)> = Vec::new();
    let mut last_line = 1;

    for (line, content) in lines {
        last_line = line;
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected `key: value`, found {content:?}")))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "alphabet" => {
                let symbols = fields
                    .iter()
                    .map(|f| parse_symbol(f, line))
                    .collect::<Result<Vec<_>, _>>()?;
                let parsed = Alphabet::from_symbols(symbols)
                    .map_err(|e| syntax(line, e.to_string()))?;
                set_once(&mut alphabet, parsed, "alphabet", line)?;
            }
            "states" => {
                let [count] = fields[..] else {
                    return Err(syntax(line, "expected one state count"));
                };
                set_once(&mut states, parse_state(count, line)?, "states", line)?;
            }
            "start" => {
                let [q] = fields[..] else {
                    return Err(syntax(line, "expected one start state"));
                };
                set_once(&mut start, (line, parse_state(q, line)?), "start", line)?;
            }
            "accept" => {
                let finals = fields
                    .iter()
                    .map(|f| parse_state(f, line))
                    .collect::<Result<Vec<_>, _>>()?;
                set_once(&mut accept, (line, finals), "accept", line)?;
            }
            "trans" => {
                let [q, a, t] = fields[..] else {
                    return Err(syntax(line, "expected `trans: <state> <symbol> <state>`"));
                };
                transitions.push((line, parse_state(q, line)?, parse_symbol(a, line)?, parse_state(t, line)?));
            }
            "label" => {
                let [q, name] = fields[..] else {
                    return Err(syntax(line, "expected `label: <state> <token>`"));
                };
                labels.push((line, parse_state(q, line)?, parse_symbol(name, line)?));
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }

    let missing = |key: &str| syntax(last_line, format!("missing `{key}` line"));
    let alphabet = alphabet.ok_or_else(|| missing("alphabet"))?;
    let states = states.ok_or_else(|| missing("states"))?;
    let (start_line, start) = start.ok_or_else(|| missing("start"))?;
    let (accept_line, accept) = accept.ok_or_else(|| missing("accept"))?;

    let in_range = |q: usize, line: usize| {
        if q < states {
            Ok(q)
        } else {
            Err(syntax(line, format!("state {q} out of range (states: {states})")))
        }
    };
    in_range(start, start_line)?;
    for &q in &accept {
        in_range(q, accept_line)?;
    }
    let mut seen = vec![false; states * alphabet.len()];
    for (line, q, a, t) in &transitions {
        in_range(*q, *line)?;
        in_range(*t, *line)?;
        let column = alphabet
            .index_of(a)
            .ok_or_else(|| syntax(*line, format!("symbol `{a}` not in alphabet")))?;
        let slot = &mut seen[q * alphabet.len() + column];
        if *slot {
            return Err(syntax(*line, format!("duplicate transition for ({q}, {a})")));
        }
        *slot = true;
    }
    let mut label_map = BTreeMap::new();
    for (line, q, name) in labels {
        in_range(q, line)?;
        if label_map.insert(StateId(q), name).is_some() {
            return Err(syntax(line, format!("duplicate label for state {q}")));
        }
    }

    let dfa = Dfa::from_transitions(
        alphabet,
        states,
        start,
        accept,
        transitions.into_iter().map(|(_, q, a, t)| (q, a, t)),
    )?;
    Ok(AutomatonDocument {
        dfa,
        labels: label_map,
    })
}
