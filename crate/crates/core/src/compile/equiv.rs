//! Language equivalence by breadth-first search of the product automaton.

use std::collections::VecDeque;

use crate::dfa::{AutomatonError, Dfa, StateId};
use crate::symbol::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// A shortest word accepted by exactly one of the two machines.
    Counterexample(Word),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

/// Decides `L(left) = L(right)`.
///
/// Both machines must range over the same set of symbols; column order may
/// differ. Counterexamples are spelled in `left`'s alphabet order and are of
/// minimal length.
pub fn equivalent(left: &Dfa, right: &Dfa) -> Result<Equivalence, AutomatonError> {
    if !left.alphabet().same_set(right.alphabet()) {
        return Err(AutomatonError::AlphabetMismatch {
            left: left.alphabet().symbols().to_vec(),
            right: right.alphabet().symbols().to_vec(),
        });
    }
    let symbols = left.alphabet().symbols();
    let right_columns: Vec<usize> = symbols
        .iter()
        .map(|s| right.alphabet().index_of(s).expect("same symbol set"))
        .collect();

    let pairs = left.state_count() * right.state_count();
    let key = |p: StateId, q: StateId| p.0 * right.state_count() + q.0;
    // parent[k] = (previous pair key, column) on the BFS tree.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; pairs];
    let mut seen = vec![false; pairs];
    let mut queue = VecDeque::new();
    let start = (left.start(), right.start());
    seen[key(start.0, start.1)] = true;
    queue.push_back(start);

    while let Some((p, q)) = queue.pop_front() {
        if left.is_accepting(p) != right.is_accepting(q) {
            let mut events = Vec::new();
            let mut k = key(p, q);
            while let Some((prev, column)) = parent[k] {
                events.push(symbols[column].clone());
                k = prev;
            }
            events.reverse();
            return Ok(Equivalence::Counterexample(Word::new(events)));
        }
        for (column, &right_column) in right_columns.iter().enumerate() {
            let next = (left.target(p, column), right.target(q, right_column));
            let k = key(next.0, next.1);
            if !seen[k] {
                seen[k] = true;
                parent[k] = Some((key(p, q), column));
                queue.push_back(next);
            }
        }
    }
    Ok(Equivalence::Equal)
}
