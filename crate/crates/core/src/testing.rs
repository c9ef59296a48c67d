//! Independent oracles and seeded generators for test suites.
//!
//! Nothing here calls the compilation pipeline: distinguishability uses the
//! classic table-filling algorithm and minimal sizes come from Brzozowski's
//! double reversal, so both can check Hopcroft's output.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dfa::{Dfa, StateId};
use crate::regex::RegexAst;
use crate::symbol::{Alphabet, Symbol, Word};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(names: &[&str]) -> Alphabet {
    Alphabet::from_names(names).expect("valid alphabet")
}

pub fn word(tokens: &[&str]) -> Word {
    Word::from_tokens(tokens).expect("valid tokens")
}

/// Q={0,1}, Σ={a,b}; `a` leads to 1, `b` leads to 0; F={1}.
pub fn d_ab() -> Dfa {
    Dfa::from_rows(alphabet(&["a", "b"]), vec![vec![1, 0], vec![1, 0]], 0, [1]).expect("valid")
}

/// Every word over `alphabet` of length `0..=max_len`, shortest first.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            for s in alphabet {
                let mut longer = w.clone();
                longer.push(s.clone());
                next.push(longer);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// A uniformly random total DFA with `1..=max_states` states.
pub fn random_dfa<R: Rng>(rng: &mut R, max_states: usize, alphabet: &Alphabet) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let rows = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Dfa::from_rows(alphabet.clone(), rows, rng.gen_range(0..n), accepting).expect("valid")
}

/// A random word of length `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| alphabet.symbols()[rng.gen_range(0..alphabet.len())].clone())
        .collect()
}

/// A random expression of depth at most `depth` (a leaf has depth 1).
pub fn random_ast<R: Rng>(rng: &mut R, depth: usize, symbols: &[Symbol]) -> RegexAst {
    if depth <= 1 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => RegexAst::EmptySet,
            1 => RegexAst::Epsilon,
            _ => RegexAst::Sym(symbols[rng.gen_range(0..symbols.len())].clone()),
        };
    }
    match rng.gen_range(0..3) {
        0 => RegexAst::concat(random_ast(rng, depth - 1, symbols), random_ast(rng, depth - 1, symbols)),
        1 => RegexAst::union(random_ast(rng, depth - 1, symbols), random_ast(rng, depth - 1, symbols)),
        _ => RegexAst::star(random_ast(rng, depth - 1, symbols)),
    }
}

pub fn ast_depth(ast: &RegexAst) -> usize {
    match ast {
        RegexAst::EmptySet | RegexAst::Epsilon | RegexAst::Sym(_) => 1,
        RegexAst::Concat(l, r) | RegexAst::Union(l, r) => 1 + ast_depth(l).max(ast_depth(r)),
        RegexAst::Star(inner) => 1 + ast_depth(inner),
    }
}

/// Table-filling: `table[p][q]` is true iff some word leads exactly one of
/// `p`, `q` to acceptance.
pub fn distinguishability_table(dfa: &Dfa) -> Vec<Vec<bool>> {
    let n = dfa.state_count();
    let width = dfa.alphabet().len();
    let mut table = vec![vec![false; n]; n];
    for p in 0..n {
        for q in 0..n {
            table[p][q] = dfa.is_accepting(StateId(p)) != dfa.is_accepting(StateId(q));
        }
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            for q in 0..n {
                if table[p][q] {
                    continue;
                }
                let split = (0..width).any(|c| {
                    let (tp, tq) = (dfa.target(StateId(p), c).0, dfa.target(StateId(q), c).0);
                    table[tp][tq]
                });
                if split {
                    table[p][q] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return table;
        }
    }
}

/// Every pair of distinct states is distinguishable.
pub fn all_pairs_distinguishable(dfa: &Dfa) -> bool {
    let table = distinguishability_table(dfa);
    (0..dfa.state_count()).all(|p| (0..p).all(|q| table[p][q]))
}

/// A word separating states `p` and `q`, searched by brute force up to
/// `max_len`.
pub fn separating_word(dfa: &Dfa, p: StateId, q: StateId, max_len: usize) -> Option<Word> {
    words_up_to(dfa.alphabet(), max_len).into_iter().find(|w| {
        let end_p = dfa.extended_step(p, w).expect("in alphabet");
        let end_q = dfa.extended_step(q, w).expect("in alphabet");
        dfa.is_accepting(end_p) != dfa.is_accepting(end_q)
    })
}

/// Size of the minimal total DFA by Brzozowski's double reversal.
pub fn brzozowski_state_count(dfa: &Dfa) -> usize {
    let n = dfa.state_count();
    let width = dfa.alphabet().len();
    // Forward edges as an NFA: edges[q] = (column, target).
    let forward: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|q| (0..width).map(|c| (c, dfa.target(StateId(q), c).0)).collect())
        .collect();
    let starts: BTreeSet<usize> = [dfa.start().0].into();
    let finals: BTreeSet<usize> = dfa.accepting_states().map(|q| q.0).collect();

    let reversed = reverse(&forward, n);
    let (det1, det1_starts, det1_finals) = determinize(&reversed, width, &finals, &starts);
    let reversed2 = reverse(&det1, det1.len());
    let (det2, _, _) = determinize(&reversed2, width, &det1_finals, &det1_starts);
    det2.len()
}

fn reverse(edges: &[Vec<(usize, usize)>], n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); n];
    for (q, list) in edges.iter().enumerate() {
        for &(c, t) in list {
            out[t].push((c, q));
        }
    }
    out
}

type Determinized = (Vec<Vec<(usize, usize)>>, BTreeSet<usize>, BTreeSet<usize>);

/// Subset construction from a set of start states; returns edges, the single
/// start, and the accepting subsets (those meeting `finals`).
fn determinize(
    edges: &[Vec<(usize, usize)>],
    width: usize,
    starts: &BTreeSet<usize>,
    finals: &BTreeSet<usize>,
) -> Determinized {
    let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::from([(starts.clone(), 0)]);
    let mut sets = vec![starts.clone()];
    let mut out = Vec::new();
    let mut head = 0;
    while head < sets.len() {
        let mut row = Vec::new();
        for c in 0..width {
            let next: BTreeSet<usize> = sets[head]
                .iter()
                .flat_map(|&q| edges[q].iter().filter(move |(col, _)| *col == c).map(|&(_, t)| t))
                .collect();
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                sets.push(next);
                sets.len() - 1
            });
            row.push((c, id));
        }
        out.push(row);
        head += 1;
    }
    let accepting = sets
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_disjoint(finals))
        .map(|(i, _)| i)
        .collect();
    (out, BTreeSet::from([0]), accepting)
}

/// Checks that `text` is a DOT digraph in the subset this crate emits:
/// `digraph ID { stmt* }` where each statement is an attribute assignment,
/// a node statement, or an edge statement, each followed by `;`.
pub fn validate_dot(text: &str) -> Result<(), String> {
    let tokens = dot_tokens(text)?;
    let mut pos = 0;
    let expect = |want: &str, pos: &mut usize| -> Result<(), String> {
        match tokens.get(*pos) {
            Some(t) if t == want => {
                *pos += 1;
                Ok(())
            }
            other => Err(format!("expected {want:?}, found {other:?}")),
        }
    };
    expect("digraph", &mut pos)?;
    if tokens.get(pos).is_some_and(|t| is_id(t)) {
        pos += 1;
    }
    expect("{", &mut pos)?;
    loop {
        match tokens.get(pos).map(String::as_str) {
            Some("}") => {
                pos += 1;
                break;
            }
            Some(t) if is_id(t) => {
                pos += 1;
                match tokens.get(pos).map(String::as_str) {
                    Some("=") => {
                        pos += 1;
                        if !tokens.get(pos).is_some_and(|t| is_id(t)) {
                            return Err("expected a value after `=`".into());
                        }
                        pos += 1;
                    }
                    Some("->") => {
                        while tokens.get(pos).map(String::as_str) == Some("->") {
                            pos += 1;
                            if !tokens.get(pos).is_some_and(|t| is_id(t)) {
                                return Err("expected a node after `->`".into());
                            }
                            pos += 1;
                        }
                        pos = attr_list(&tokens, pos)?;
                    }
                    _ => pos = attr_list(&tokens, pos)?,
                }
                expect(";", &mut pos)?;
            }
            other => return Err(format!("unexpected token {other:?}")),
        }
    }
    if pos != tokens.len() {
        return Err("trailing tokens after the closing brace".into());
    }
    Ok(())
}

fn attr_list(tokens: &[String], mut pos: usize) -> Result<usize, String> {
    if tokens.get(pos).map(String::as_str) != Some("[") {
        return Ok(pos);
    }
    pos += 1;
    loop {
        match tokens.get(pos).map(String::as_str) {
            Some("]") => return Ok(pos + 1),
            Some(t) if is_id(t) => {
                if tokens.get(pos + 1).map(String::as_str) != Some("=")
                    || !tokens.get(pos + 2).is_some_and(|t| is_id(t))
                {
                    return Err(format!("malformed attribute at {t:?}"));
                }
                pos += 3;
                if tokens.get(pos).map(String::as_str) == Some(",") {
                    pos += 1;
                }
            }
            other => return Err(format!("unexpected {other:?} in attribute list")),
        }
    }
}

fn is_id(token: &str) -> bool {
    if token.starts_with('"') {
        return true;
    }
    let mut chars = token.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        Some(c) if c.is_ascii_digit() || c == '.' => token.chars().all(|c| c.is_ascii_digit() || c == '.'),
        _ => false,
    }
}

fn dot_tokens(text: &str) -> Result<Vec<String>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if "{}[];,=".contains(c) {
            tokens.push(c.to_string());
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            tokens.push("->".into());
            i += 2;
        } else if c == '"' {
            let mut s = String::from('"');
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('\\') => {
                        s.push('\\');
                        s.push(*chars.get(i + 1).ok_or("dangling escape")?);
                        i += 2;
                    }
                    Some('"') => {
                        s.push('"');
                        i += 1;
                        break;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            tokens.push(s);
        } else if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
            let begin = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            tokens.push(chars[begin..i].iter().collect());
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(tokens)
}
