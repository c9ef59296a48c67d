//! ε-NFAs in Thompson form.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dfa::StateId;
use crate::regex::RegexAst;
use crate::symbol::{Alphabet, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("symbol `{0}` is not in the alphabet")]
    UndeclaredSymbol(Symbol),
    #[error("cannot compile over an empty alphabet")]
    EmptyAlphabet,
}

/// Thompson-form ε-NFA: one start state without incoming edges and one
/// accepting state without outgoing edges. Symbols are stored as alphabet
/// column indices.
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    symbol_edges: Vec<Vec<(usize, usize)>>,
    epsilon_edges: Vec<Vec<usize>>,
    start: usize,
    accept: usize,
}

impl Nfa {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.epsilon_edges.len()
    }

    pub fn start(&self) -> StateId {
        StateId(self.start)
    }

    pub fn accept(&self) -> StateId {
        StateId(self.accept)
    }

    /// `(column, target)` pairs leaving `q` on a symbol.
    pub fn symbol_edges(&self, q: StateId) -> &[(usize, usize)] {
        &self.symbol_edges[q.0]
    }

    pub fn epsilon_edges(&self, q: StateId) -> &[usize] {
        &self.epsilon_edges[q.0]
    }

    /// All `(source, symbol, target)` triples.
    pub fn symbol_transitions(&self) -> impl Iterator<Item = (StateId, &Symbol, StateId)> + '_ {
        self.symbol_edges.iter().enumerate().flat_map(move |(q, edges)| {
            edges
                .iter()
                .map(move |&(c, t)| (StateId(q), &self.alphabet.symbols()[c], StateId(t)))
        })
    }

    pub fn epsilon_transitions(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.epsilon_edges
            .iter()
            .enumerate()
            .flat_map(|(q, edges)| edges.iter().map(move |&t| (StateId(q), StateId(t))))
    }

    /// States reachable from `set` on `column`, before closure.
    pub fn move_on(&self, set: &StateSet, column: usize) -> StateSet {
        let mut out = BTreeSet::new();
        for &q in &set.0 {
            for &(c, t) in &self.symbol_edges[q] {
                if c == column {
                    out.insert(t);
                }
            }
        }
        StateSet(out)
    }

    fn add_state(&mut self) -> usize {
        self.symbol_edges.push(Vec::new());
        self.epsilon_edges.push(Vec::new());
        self.epsilon_edges.len() - 1
    }
}

/// A set of NFA states, ordered so it can key the subset construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(pub BTreeSet<usize>);

impl StateSet {
    pub fn singleton(q: StateId) -> Self {
        StateSet(BTreeSet::from([q.0]))
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.0.contains(&q.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        StateSet(iter.into_iter().collect())
    }
}

/// Least superset of `set` closed under ε-edges.
pub fn epsilon_closure(nfa: &Nfa, set: &StateSet) -> StateSet {
    let mut closed = set.0.clone();
    let mut stack: Vec<usize> = set.0.iter().copied().collect();
    while let Some(q) = stack.pop() {
        for &t in &nfa.epsilon_edges[q] {
            if closed.insert(t) {
                stack.push(t);
            }
        }
    }
    StateSet(closed)
}

/// Thompson's construction. Each `EmptySet`, `Epsilon`, `Sym`, `Union` and
/// `Star` node adds two states and `Concat` adds none, so the result has at
/// most `2 × node_count` states.
pub fn thompson(ast: &RegexAst, alphabet: &Alphabet) -> Result<Nfa, CompileError> {
    if alphabet.is_empty() {
        return Err(CompileError::EmptyAlphabet);
    }
    let mut nfa = Nfa {
        alphabet: alphabet.clone(),
        symbol_edges: Vec::new(),
        epsilon_edges: Vec::new(),
        start: 0,
        accept: 0,
    };
    let (start, accept) = build(ast, &mut nfa)?;
    nfa.start = start;
    nfa.accept = accept;
    Ok(nfa)
}

fn build(ast: &RegexAst, nfa: &mut Nfa) -> Result<(usize, usize), CompileError> {
    Ok(match ast {
        RegexAst::EmptySet => (nfa.add_state(), nfa.add_state()),
        RegexAst::Epsilon => {
            let (s, f) = (nfa.add_state(), nfa.add_state());
            nfa.epsilon_edges[s].push(f);
            (s, f)
        }
        RegexAst::Sym(symbol) => {
            let column = nfa
                .alphabet
                .index_of(symbol)
                .ok_or_else(|| CompileError::UndeclaredSymbol(symbol.clone()))?;
            let (s, f) = (nfa.add_state(), nfa.add_state());
            nfa.symbol_edges[s].push((column, f));
            (s, f)
        }
        RegexAst::Concat(l, r) => {
            let (ls, lf) = build(l, nfa)?;
            let (rs, rf) = build(r, nfa)?;
            nfa.epsilon_edges[lf].push(rs);
            (ls, rf)
        }
        RegexAst::Union(l, r) => {
            let s = nfa.add_state();
            let (ls, lf) = build(l, nfa)?;
            let (rs, rf) = build(r, nfa)?;
            let f = nfa.add_state();
            nfa.epsilon_edges[s].extend([ls, rs]);
            nfa.epsilon_edges[lf].push(f);
            nfa.epsilon_edges[rf].push(f);
            (s, f)
        }
        RegexAst::Star(inner) => {
            let s = nfa.add_state();
            let (is, if_) = build(inner, nfa)?;
            let f = nfa.add_state();
            nfa.epsilon_edges[s].extend([is, f]);
            nfa.epsilon_edges[if_].extend([is, f]);
            (s, f)
        }
    })
}
