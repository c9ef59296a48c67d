//! Deterministic finite automata over symbolic event alphabets.
//!
//! Regular expressions written over named events (`Deliver_Lecture`,
//! `Ask_Queries`, …) compile through a Thompson ε-NFA and the subset
//! construction into total DFAs, which can be minimized to a canonical form,
//! compared for language equivalence, serialized, and exported to DOT.
//! The [`classroom`] module packages two interaction models built this way
//! and classifies recorded session traces against them.
//!
//! ```
//! use tracefa::{compile_str, hopcroft_minimize, Alphabet, Word};
//!
//! let ab = Alphabet::from_names(["a", "b"]).unwrap();
//! let dfa = hopcroft_minimize(&compile_str("(a + b)* . a", Some(&ab)).unwrap());
//! assert_eq!(dfa.state_count(), 2);
//! assert!(dfa.accepts(&Word::from_tokens(["b", "a"]).unwrap()).unwrap());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod classroom;
pub mod compile;
pub mod dfa;
pub mod io;
pub mod regex;
pub mod symbol;

#[cfg(any(test, feature = "testing"))]
pub mod testing;

pub use compile::{
    brute_force_match, compile, compile_minimal, compile_str, epsilon_closure, equivalent,
    hopcroft_minimize, subset_construct, thompson, CompileError, CompileTextError, Equivalence,
    Nfa, StateSet,
};
pub use dfa::{AutomatonError, Configuration, Dfa, RunError, StateId};
pub use regex::{parse_regex, print_regex, RegexAst, RegexError, RegexSource};
pub use symbol::{Alphabet, Symbol, SymbolError, Word};
