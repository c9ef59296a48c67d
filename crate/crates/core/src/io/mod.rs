//! File formats: traces, automaton documents, DOT export, session naming.

mod automaton;
mod dot;
mod sessions;
mod trace;

pub use automaton::{deserialize_dfa, serialize_dfa, AutomatonDocument, FormatError, HEADER};
pub use dot::export_dot;
pub use sessions::SessionName;
pub use trace::{parse_trace, render_trace, BadToken};
