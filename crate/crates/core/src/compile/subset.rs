//! Determinization by the subset construction.

use std::collections::HashMap;

use super::nfa::{epsilon_closure, Nfa, StateSet};
use crate::dfa::Dfa;

/// Determinizes `nfa` into a total DFA over the same alphabet.
///
/// Only reachable subsets become states. The empty subset plays the role of
/// the sink and is materialized only when some transition needs it. States are
/// numbered in discovery order (breadth-first, symbols in alphabet order).
pub fn subset_construct(nfa: &Nfa) -> Dfa {
    let width = nfa.alphabet().len();
    let start = epsilon_closure(nfa, &StateSet::singleton(nfa.start()));
    let mut ids: HashMap<StateSet, usize> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        let mut row = Vec::with_capacity(width);
        for column in 0..width {
            let next = epsilon_closure(nfa, &nfa.move_on(&subsets[head], column));
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    ids.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
            row.push(id);
        }
        rows.push(row);
        head += 1;
    }
    let accepting = subsets
        .iter()
        .enumerate()
        .filter(|(_, set)| set.contains(nfa.accept()))
        .map(|(id, _)| id)
        .collect::<Vec<_>>();
    Dfa::from_rows(nfa.alphabet().clone(), rows, 0, accepting)
        .expect("subset construction yields a total table")
}
