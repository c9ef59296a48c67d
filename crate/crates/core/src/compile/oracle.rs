//! Direct denotational matcher, independent of any automaton.

use crate::regex::RegexAst;
use crate::symbol::Symbol;

/// Whether `w` is in the language of `ast`, by structural recursion on the
/// expression and exhaustive splitting of the word.
///
/// Each star iteration must consume a nonempty prefix, which guarantees
/// termination. Exponential in general; meant for short words.
pub fn brute_force_match(ast: &RegexAst, w: &[Symbol]) -> bool {
    match ast {
        RegexAst::EmptySet => false,
        RegexAst::Epsilon => w.is_empty(),
        RegexAst::Sym(a) => w.len() == 1 && &w[0] == a,
        RegexAst::Concat(l, r) => {
            (0..=w.len()).any(|i| brute_force_match(l, &w[..i]) && brute_force_match(r, &w[i..]))
        }
        RegexAst::Union(l, r) => brute_force_match(l, w) || brute_force_match(r, w),
        RegexAst::Star(inner) => {
            w.is_empty()
                || (1..=w.len())
                    .any(|i| brute_force_match(inner, &w[..i]) && brute_force_match(ast, &w[i..]))
        }
    }
}
