//! Fixtures shared by the benchmarks in `benches/`.

use std::collections::BTreeMap;

use semihopf::automata::{from_dfa, LinearAutomaton};
use semihopf::{example, BisemialgebraDesc, Example, Semiring};

/// Builds a two-state DFA over `{x, y}` from `(state, letter, next)` rows.
fn dfa(rows: &[(&str, &str, &str)], initial: &str, accepting: &str) -> semihopf::automata::Dfa {
    let mut transitions: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for (q, a, r) in rows {
        transitions.entry(q.to_string()).or_default().insert(a.to_string(), r.to_string());
    }
    semihopf::automata::Dfa {
        states: transitions.keys().cloned().collect(),
        alphabet: vec!["x".into(), "y".into()],
        transitions,
        initial: initial.into(),
        accepting: vec![accepting.into()],
    }
}

pub fn words(unshuffle: bool) -> BisemialgebraDesc {
    let alphabet = vec!["x".to_string(), "y".to_string()];
    let ex = if unshuffle { Example::WordsUnshuffle { alphabet } } else { Example::WordsGrouplike { alphabet } };
    example(&ex, &Semiring::boolean()).unwrap().into_bisemialgebra().unwrap()
}

/// "Contains an x" and "ends in y" over the given word structure.
pub fn automata(over: &BisemialgebraDesc) -> (LinearAutomaton, LinearAutomaton) {
    let contains_x = dfa(&[("n", "x", "s"), ("n", "y", "n"), ("s", "x", "s"), ("s", "y", "s")], "n", "s");
    let ends_in_y = dfa(&[("a", "x", "a"), ("a", "y", "b"), ("b", "x", "a"), ("b", "y", "b")], "a", "b");
    (from_dfa(&contains_x, over).unwrap(), from_dfa(&ends_in_y, over).unwrap())
}
