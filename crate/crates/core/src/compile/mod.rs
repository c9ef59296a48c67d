//! Regex → ε-NFA → DFA compilation, minimization, and equivalence.

mod equiv;
mod minimize;
mod nfa;
mod oracle;
mod subset;

pub use equiv::{equivalent, Equivalence};
pub use minimize::{hopcroft_minimize, is_trim};
pub use nfa::{epsilon_closure, thompson, CompileError, Nfa, StateSet};
pub use oracle::brute_force_match;
pub use subset::subset_construct;

use crate::regex::{parse_regex, RegexAst, RegexError, RegexSource};
use crate::symbol::Alphabet;
use crate::Dfa;

/// Thompson construction followed by determinization.
pub fn compile(ast: &RegexAst, alphabet: &Alphabet) -> Result<Dfa, CompileError> {
    Ok(subset_construct(&thompson(ast, alphabet)?))
}

/// [`compile`] followed by [`hopcroft_minimize`].
pub fn compile_minimal(ast: &RegexAst, alphabet: &Alphabet) -> Result<Dfa, CompileError> {
    Ok(hopcroft_minimize(&compile(ast, alphabet)?))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompileTextError {
    #[error(transparent)]
    Regex(#[from] RegexError),
    #[error(transparent)]
    Compile(#[from] CompileError),
}

/// Parses and compiles `text`. Without a declared alphabet the symbols of the
/// expression are used, in order of first occurrence.
pub fn compile_str(text: &str, alphabet: Option<&Alphabet>) -> Result<Dfa, CompileTextError> {
    let src = RegexSource {
        text,
        declared_alphabet: alphabet,
    };
    let ast = parse_regex(&src)?;
    let inferred;
    let alphabet = match alphabet {
        Some(a) => a,
        None => {
            inferred = ast.alphabet();
            &inferred
        }
    };
    Ok(compile(&ast, alphabet)?)
}
