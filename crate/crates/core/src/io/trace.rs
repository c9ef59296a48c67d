//! One-event-per-line trace files.

use thiserror::Error;

use crate::symbol::{is_token, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: bad event token {token:?}")]
pub struct BadToken {
    /// 1-based.
    pub line: usize,
    pub token: String,
}

/// Reads one event per line. Blank lines and lines whose first non-space
/// character is `#` are skipped; tokens are trimmed.
pub fn parse_trace(text: &str) -> Result<Word, BadToken> {
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let token = raw.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        if !is_token(token) {
            return Err(BadToken {
                line: i + 1,
                token: token.to_owned(),
            });
        }
        events.push(Symbol::new(token).expect("checked token"));
    }
    Ok(Word::new(events))
}

/// Writes one event per line with a trailing newline.
pub fn render_trace(word: &[Symbol]) -> String {
    word.iter().map(|e| format!("{e}\n")).collect()
}
