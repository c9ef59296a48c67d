//! Exhaustive cross-checks of the pipeline against independent oracles.

use tracefa::classroom::{classify_trace, emotional_model, simple_model, ClassroomModel};
use tracefa::io::serialize_dfa;
use tracefa::testing::{
    alphabet, all_pairs_distinguishable, brzozowski_state_count, random_ast, seeded_rng,
    separating_word, word, words_up_to,
};
use tracefa::{
    brute_force_match, compile, compile_str, epsilon_closure, hopcroft_minimize, subset_construct,
    thompson, Alphabet, RegexAst, StateId, StateSet, Symbol, Word,
};

fn sym(name: &str) -> RegexAst {
    RegexAst::Sym(Symbol::new(name).unwrap())
}

#[test]
fn star_nfa_agrees_with_oracle() {
    let a = alphabet(&["a"]);
    let ast = RegexAst::star(sym("a"));
    let nfa = thompson(&ast, &a).unwrap();
    assert_eq!(nfa.state_count(), 4);
    let dfa = subset_construct(&nfa);
    for w in words_up_to(&a, 4) {
        assert_eq!(dfa.accepts(&w).unwrap(), brute_force_match(&ast, &w), "{w:?}");
        assert!(dfa.accepts(&w).unwrap());
    }
}

#[test]
fn star_closure_reaches_accept_by_graph_search() {
    let nfa = thompson(&RegexAst::star(sym("a")), &alphabet(&["a"])).unwrap();
    // Plain DFS over ε-edges, without epsilon_closure.
    let mut seen = vec![nfa.start().0];
    let mut stack = vec![nfa.start().0];
    while let Some(q) = stack.pop() {
        for &t in nfa.epsilon_edges(StateId(q)) {
            if !seen.contains(&t) {
                seen.push(t);
                stack.push(t);
            }
        }
    }
    assert!(seen.contains(&nfa.accept().0));
    let closure = epsilon_closure(&nfa, &StateSet::singleton(nfa.start()));
    let mut sorted = seen.clone();
    sorted.sort_unstable();
    assert_eq!(closure.0.into_iter().collect::<Vec<_>>(), sorted);
}

#[test]
fn single_symbol_subset_states() {
    let a = alphabet(&["a"]);
    let dfa = compile(&sym("a"), &a).unwrap();
    assert_eq!(dfa.state_count(), 3);
    let accepted: Vec<Word> = words_up_to(&a, 5).into_iter().filter(|w| dfa.accepts(w).unwrap()).collect();
    assert_eq!(accepted, vec![word(&["a"])]);
}

#[test]
fn random_expressions_match_oracle_and_brzozowski() {
    let ab = alphabet(&["a", "b"]);
    let symbols = ab.symbols().to_vec();
    let words = words_up_to(&ab, 6);
    let mut rng = seeded_rng(0x5eed);
    for _ in 0..200 {
        let ast = random_ast(&mut rng, 5, &symbols);
        let dfa = compile(&ast, &ab).unwrap();
        let min = hopcroft_minimize(&dfa);
        for w in &words {
            let expected = brute_force_match(&ast, w);
            assert_eq!(dfa.accepts(w).unwrap(), expected, "{ast} on {w:?}");
            assert_eq!(min.accepts(w).unwrap(), expected, "{ast} on {w:?}");
        }
        assert_eq!(min.state_count(), brzozowski_state_count(&dfa), "{ast}");
        assert!(all_pairs_distinguishable(&min), "{ast}");
    }
}

#[test]
fn known_minimal_sizes() {
    let ab = alphabet(&["a", "b"]);
    let ends_in_a = hopcroft_minimize(&compile_str("(a + b)* . a", Some(&ab)).unwrap());
    assert_eq!(ends_in_a.state_count(), 2);
    // The two classes are witnessed by the empty word.
    assert_eq!(separating_word(&ends_in_a, StateId(0), StateId(1), 0), Some(Word::empty()));

    let a = alphabet(&["a"]);
    let single = hopcroft_minimize(&compile_str("a", Some(&a)).unwrap());
    assert_eq!(single.state_count(), 3);
    assert!(all_pairs_distinguishable(&single));

    let a_star_b = compile_str("(a)* . b", Some(&ab)).unwrap();
    assert_eq!(brzozowski_state_count(&a_star_b), 3);
    assert_eq!(hopcroft_minimize(&a_star_b).state_count(), 3);
}

/// Minimal sizes of the classroom models, from Brzozowski's construction.
const SIMPLE_STATES: usize = 5;
const EMOTIONAL_STATES: usize = 10;

#[test]
fn classroom_model_sizes() {
    for (model, expected) in [(simple_model(), SIMPLE_STATES), (emotional_model(), EMOTIONAL_STATES)] {
        let raw = compile(&model.source_regex, &model.alphabet).unwrap();
        assert_eq!(brzozowski_state_count(&raw), expected);
        assert_eq!(model.machine.state_count(), expected);
        assert!(all_pairs_distinguishable(&model.machine));
    }
}

fn subsets_of_four(alphabet: &Alphabet) -> Vec<Alphabet> {
    let n = alphabet.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == 4 {
            let chosen = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| alphabet.symbols()[i].clone());
            out.push(Alphabet::from_symbols(chosen).unwrap());
        }
    }
    out
}

fn sweep(model: &ClassroomModel, max_len: usize) -> usize {
    let mut checked = 0;
    for sub in subsets_of_four(&model.alphabet) {
        for w in words_up_to(&sub, max_len) {
            assert_eq!(
                model.accepts(&w).unwrap(),
                brute_force_match(&model.source_regex, &w),
                "{:?} on {w:?}",
                model.id
            );
            checked += 1;
        }
    }
    checked
}

#[test]
fn classroom_models_match_oracle() {
    assert_eq!(sweep(&simple_model(), 6), 5461);
    assert_eq!(sweep(&emotional_model(), 5), 70 * 1365);
}

/// Brute-force check of a failure offset: every extension of the prefix up
/// to and including the offending event, by suffixes of length ≤ 4, is rejected.
fn hopeless(model: &ClassroomModel, prefix: &[Symbol]) -> bool {
    words_up_to(&model.alphabet, 4).iter().all(|s| {
        let mut w: Vec<Symbol> = prefix.to_vec();
        w.extend(s.iter().cloned());
        !brute_force_match(&model.source_regex, &w)
    })
}

#[test]
fn failure_offset_examples_by_suffix_search() {
    let simple = simple_model();
    let trace = word(&["Understand_Lecture", "Understand_Lecture"]);
    assert!(!hopeless(&simple, &trace[..1]));
    assert!(hopeless(&simple, &trace[..2]));
    assert_eq!(classify_trace(&simple, &trace).unwrap().failure_offset, Some(1));

    let emotional = emotional_model();
    let trace = word(&["Positive_Language"]);
    assert!(!hopeless(&emotional, &trace[..0]));
    assert!(hopeless(&emotional, &trace[..1]));
    assert_eq!(classify_trace(&emotional, &trace).unwrap().failure_offset, Some(0));
}

#[test]
fn failure_offset_soundness_on_random_traces() {
    let mut rng = seeded_rng(42);
    for model in [simple_model(), emotional_model()] {
        for _ in 0..150 {
            let trace = tracefa::testing::random_word(&mut rng, &model.alphabet, 6);
            let verdict = classify_trace(&model, &trace).unwrap();
            assert_eq!(verdict.accepted, brute_force_match(&model.source_regex, &trace));
            assert_eq!(verdict.run.len(), trace.len() + 1);
            let expected_queries = trace.iter().filter(|e| *e == model.query_symbol()).count();
            assert_eq!(verdict.query_count, expected_queries);
            match verdict.failure_offset {
                Some(i) => {
                    assert!(!verdict.accepted);
                    assert!(hopeless(&model, &trace[..=i]), "{trace:?} at {i}");
                    // Earliest: no shorter prefix is provably hopeless.
                    for j in 0..i {
                        let live = model.machine.live_states()[verdict.run[j + 1].state.0];
                        assert!(live);
                    }
                }
                None if !verdict.accepted => {
                    // Ends in a live state: some completion exists.
                    let end = verdict.run.last().unwrap().state;
                    assert!(model.machine.live_states()[end.0]);
                }
                None => {}
            }
        }
    }
}

#[test]
fn classroom_models_are_deterministic() {
    assert_eq!(serialize_dfa(&simple_model().machine), serialize_dfa(&simple_model().machine));
    assert_eq!(serialize_dfa(&emotional_model().machine), serialize_dfa(&emotional_model().machine));
}
