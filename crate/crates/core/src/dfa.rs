//! Deterministic finite automata `M = (Q, Σ, δ, q0, F)` with a total `δ`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::symbol::{Alphabet, Symbol, Word};

/// Dense state index in `[0, |Q|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for StateId {
    fn from(index: usize) -> Self {
        StateId(index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    /// An event outside the automaton's alphabet. `offset` is its position in
    /// the input word (0 for single steps).
    #[error("unknown symbol `{symbol}` at offset {offset}")]
    UnknownSymbol { symbol: Symbol, offset: usize },
    #[error("invalid state {state} (automaton has {count} states)")]
    InvalidState { state: usize, count: usize },
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<Symbol>, right: Vec<Symbol> },
}

/// A run snapshot `[q, w]`: current state and the unprocessed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub state: StateId,
    pub remaining: Word,
}

/// A run that stopped at an event outside the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source}")]
pub struct RunError {
    /// Configurations up to and including the one whose head is the bad event.
    pub partial: Vec<Configuration>,
    pub source: AutomatonError,
}

/// A validated DFA. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    /// Row-major `|Q| × |Σ|` transition table.
    table: Vec<usize>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from one row of targets per state, columns in alphabet
    /// order. Every row must be complete.
    pub fn from_rows<I>(
        alphabet: Alphabet,
        rows: Vec<Vec<usize>>,
        start: usize,
        accepting: I,
    ) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = usize>,
    {
        let count = rows.len();
        if count == 0 {
            return Err(AutomatonError::InvalidAutomaton(
                "automaton has no states".into(),
            ));
        }
        if alphabet.is_empty() {
            return Err(AutomatonError::InvalidAutomaton(
                "alphabet is empty".into(),
            ));
        }
        let width = alphabet.len();
        let mut table = Vec::with_capacity(count * width);
        for (q, row) in rows.into_iter().enumerate() {
            if row.len() != width {
                return Err(AutomatonError::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {width}",
                    row.len()
                )));
            }
            table.extend(row);
        }
        Self::from_table(alphabet, table, start, accepting)
    }

    /// Builds a DFA from explicit `(source, symbol, target)` triples.
    /// Missing or conflicting entries are rejected.
    pub fn from_transitions<I, A>(
        alphabet: Alphabet,
        states: usize,
        start: usize,
        accepting: A,
        transitions: I,
    ) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = (usize, Symbol, usize)>,
        A: IntoIterator<Item = usize>,
    {
        if states == 0 {
            return Err(AutomatonError::InvalidAutomaton(
                "automaton has no states".into(),
            ));
        }
        let width = alphabet.len();
        let mut table: Vec<Option<usize>> = vec![None; states * width];
        for (source, symbol, target) in transitions {
            if source >= states {
                return Err(AutomatonError::InvalidState {
                    state: source,
                    count: states,
                });
            }
            let column = alphabet
                .index_of(&symbol)
                .ok_or(AutomatonError::UnknownSymbol { symbol: symbol.clone(), offset: 0 })?;
            let slot = &mut table[source * width + column];
            if slot.is_some_and(|t| t != target) {
                return Err(AutomatonError::InvalidAutomaton(format!(
                    "conflicting transitions for ({source}, {symbol})"
                )));
            }
            *slot = Some(target);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| {
                    AutomatonError::InvalidAutomaton(format!(
                        "missing transition for ({}, {})",
                        i / width,
                        alphabet.symbols()[i % width]
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_table(alphabet, table, start, accepting)
    }

    fn from_table<I>(
        alphabet: Alphabet,
        table: Vec<usize>,
        start: usize,
        accepting: I,
    ) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = usize>,
    {
        if alphabet.is_empty() {
            return Err(AutomatonError::InvalidAutomaton(
                "alphabet is empty".into(),
            ));
        }
        let count = table.len() / alphabet.len();
        if let Some(&bad) = table.iter().find(|&&t| t >= count) {
            return Err(AutomatonError::InvalidState { state: bad, count });
        }
        if start >= count {
            return Err(AutomatonError::InvalidState { state: start, count });
        }
        let mut flags = vec![false; count];
        for q in accepting {
            if q >= count {
                return Err(AutomatonError::InvalidState { state: q, count });
            }
            flags[q] = true;
        }
        Ok(Dfa {
            alphabet,
            table,
            start,
            accepting: flags,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.state_count()).map(StateId)
    }

    pub fn start(&self) -> StateId {
        StateId(self.start)
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.get(q.0).copied().unwrap_or(false)
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(q, _)| StateId(q))
    }

    /// `δ(q, a)` addressed by column index. Panics if either is out of range.
    pub fn target(&self, q: StateId, column: usize) -> StateId {
        assert!(column < self.alphabet.len(), "column {column} out of range");
        StateId(self.table[q.0 * self.alphabet.len() + column])
    }

    /// `δ(q, a)`.
    pub fn step(&self, q: StateId, a: &Symbol) -> Result<StateId, AutomatonError> {
        self.check_state(q)?;
        let column = self.column(a, 0)?;
        Ok(self.target(q, column))
    }

    /// `δ*(q, w)`: consumes `w` left to right, so `δ*(q, λ) = q` and
    /// `δ*(q, ya) = δ(δ*(q, y), a)`.
    pub fn extended_step(&self, q: StateId, w: &[Symbol]) -> Result<StateId, AutomatonError> {
        self.check_state(q)?;
        w.iter().enumerate().try_fold(q, |state, (offset, a)| {
            let column = self.column(a, offset)?;
            Ok(self.target(state, column))
        })
    }

    /// Whether `δ*(q0, w) ∈ F`. Foreign events are an error, not a rejection.
    pub fn accepts(&self, w: &[Symbol]) -> Result<bool, AutomatonError> {
        let end = self.extended_step(self.start(), w)?;
        Ok(self.is_accepting(end))
    }

    /// The configuration sequence `[q0, w] ⊢ … ⊢ [q, λ]`, `|w| + 1` entries.
    pub fn run(&self, w: &[Symbol]) -> Result<Vec<Configuration>, RunError> {
        let mut state = self.start();
        let mut configs = Vec::with_capacity(w.len() + 1);
        for (offset, a) in w.iter().enumerate() {
            configs.push(Configuration {
                state,
                remaining: Word::from(&w[offset..]),
            });
            match self.column(a, offset) {
                Ok(column) => state = self.target(state, column),
                Err(source) => {
                    return Err(RunError {
                        partial: configs,
                        source,
                    })
                }
            }
        }
        configs.push(Configuration {
            state,
            remaining: Word::empty(),
        });
        Ok(configs)
    }

    /// States from which some accepting state is reachable (including
    /// accepting states themselves).
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let width = self.alphabet.len();
        let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &t) in self.table.iter().enumerate() {
            reverse[t].push(i / width);
        }
        let mut live = self.accepting.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &reverse[q] {
                if !live[p] {
                    live[p] = true;
                    queue.push_back(p);
                }
            }
        }
        live
    }

    /// States reachable from the start state, in breadth-first order with
    /// successors visited in alphabet order.
    pub fn reachable_bfs(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.start()];
        seen[self.start] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for column in 0..self.alphabet.len() {
                let t = self.target(q, column);
                if !seen[t.0] {
                    seen[t.0] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    fn check_state(&self, q: StateId) -> Result<(), AutomatonError> {
        if q.0 < self.state_count() {
            Ok(())
        } else {
            Err(AutomatonError::InvalidState {
                state: q.0,
                count: self.state_count(),
            })
        }
    }

    fn column(&self, a: &Symbol, offset: usize) -> Result<usize, AutomatonError> {
        self.alphabet
            .index_of(a)
            .ok_or_else(|| AutomatonError::UnknownSymbol {
                symbol: a.clone(),
                offset,
            })
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Dfa {{ alphabet: {:?}, start: {} }}", self.alphabet, self.start)?;
        for q in self.states() {
            let mark = if self.is_accepting(q) { "*" } else { " " };
            write!(f, "  {mark}{q}:")?;
            for column in 0..self.alphabet.len() {
                write!(f, " {}", self.target(q, column))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> Symbol {
        Symbol::new(name).unwrap()
    }

    fn word(tokens: &[&str]) -> Word {
        Word::from_tokens(tokens).unwrap()
    }

    /// Q={q0,q1}, Σ={a,b}; a goes to q1, b goes to q0; F={q1}.
    fn d_ab() -> Dfa {
        let alphabet = Alphabet::from_names(["a", "b"]).unwrap();
        Dfa::from_rows(alphabet, vec![vec![1, 0], vec![1, 0]], 0, [1]).unwrap()
    }

    #[test]
    fn step_reads_the_table() {
        let d = d_ab();
        assert_eq!(d.step(StateId(0), &sym("a")), Ok(StateId(1)));
        assert_eq!(d.step(StateId(1), &sym("b")), Ok(StateId(0)));
        assert_eq!(
            d.step(StateId(0), &sym("c")),
            Err(AutomatonError::UnknownSymbol { symbol: sym("c"), offset: 0 })
        );
        assert_eq!(
            d.step(StateId(2), &sym("a")),
            Err(AutomatonError::InvalidState { state: 2, count: 2 })
        );
    }

    #[test]
    fn extended_step_examples() {
        let d = d_ab();
        assert_eq!(d.extended_step(StateId(0), &[]), Ok(StateId(0)));
        assert_eq!(d.extended_step(StateId(0), &word(&["a", "b", "a"])), Ok(StateId(1)));
        assert_eq!(d.extended_step(StateId(1), &word(&["b"])), Ok(StateId(0)));
        assert_eq!(
            d.extended_step(StateId(0), &word(&["a", "b", "z"])),
            Err(AutomatonError::UnknownSymbol { symbol: sym("z"), offset: 2 })
        );
    }

    #[test]
    fn accepts_examples() {
        let d = d_ab();
        assert_eq!(d.accepts(&word(&["a"])), Ok(true));
        assert_eq!(d.accepts(&word(&["b", "b"])), Ok(false));
        assert_eq!(d.accepts(&[]), Ok(false));
        assert!(d.accepts(&word(&["a", "c"])).is_err());
    }

    #[test]
    fn run_examples() {
        let d = d_ab();
        let cfg = |q, w: &[&str]| Configuration { state: StateId(q), remaining: word(w) };
        assert_eq!(d.run(&word(&["a"])).unwrap(), vec![cfg(0, &["a"]), cfg(1, &[])]);
        assert_eq!(d.run(&[]).unwrap(), vec![cfg(0, &[])]);
        assert_eq!(
            d.run(&word(&["b", "a"])).unwrap(),
            vec![cfg(0, &["b", "a"]), cfg(0, &["a"]), cfg(1, &[])]
        );
    }

    #[test]
    fn run_error_carries_partial_run() {
        let d = d_ab();
        let err = d.run(&word(&["a", "x", "b"])).unwrap_err();
        assert_eq!(err.source, AutomatonError::UnknownSymbol { symbol: sym("x"), offset: 1 });
        assert_eq!(err.partial.len(), 2);
        assert_eq!(err.partial[1].state, StateId(1));
        assert_eq!(err.partial[1].remaining, word(&["x", "b"]));
    }

    #[test]
    fn construction_rejects_partial_or_malformed_tables() {
        let ab = || Alphabet::from_names(["a", "b"]).unwrap();
        assert!(matches!(
            Dfa::from_rows(ab(), vec![vec![0]], 0, []),
            Err(AutomatonError::InvalidAutomaton(_))
        ));
        assert!(matches!(
            Dfa::from_rows(ab(), vec![], 0, []),
            Err(AutomatonError::InvalidAutomaton(_))
        ));
        assert_eq!(
            Dfa::from_rows(ab(), vec![vec![0, 1]], 0, []),
            Err(AutomatonError::InvalidState { state: 1, count: 1 })
        );
        assert_eq!(
            Dfa::from_rows(ab(), vec![vec![0, 0]], 3, []),
            Err(AutomatonError::InvalidState { state: 3, count: 1 })
        );
        assert!(matches!(
            Dfa::from_rows(Alphabet::new(), vec![vec![]], 0, []),
            Err(AutomatonError::InvalidAutomaton(_))
        ));
        let missing = Dfa::from_transitions(ab(), 1, 0, [], [(0, sym("a"), 0)]);
        assert!(matches!(missing, Err(AutomatonError::InvalidAutomaton(_))));
        let conflict = Dfa::from_transitions(
            ab(),
            1,
            0,
            [],
            [(0, sym("a"), 0), (0, sym("b"), 0), (0, sym("a"), 1)],
        );
        assert!(conflict.is_err());
    }

    #[test]
    fn live_states_exclude_sinks() {
        // 0 -a-> 1 (accepting), everything else to sink 2.
        let alphabet = Alphabet::from_names(["a"]).unwrap();
        let d = Dfa::from_rows(alphabet, vec![vec![1], vec![2], vec![2]], 0, [1]).unwrap();
        assert_eq!(d.live_states(), vec![true, true, false]);
        assert_eq!(d.reachable_bfs(), vec![StateId(0), StateId(1), StateId(2)]);
    }
}
