//! `S`-linear automata over a bisemialgebra `B`: a right `B`-semimodule `M`
//! with a start vector `𝐬` and an observation `Ω`, recognizing the language
//! `ρ(b) = Ω(𝐬 b)`. Tensor products of automata recognize the convolution
//! of their languages.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::semimodule::{BasisId, Functional, LinearMap, Vector};
use crate::semiring::{scalar_vector, Scalar, Semiring};
use crate::structures::{convolve_functionals, split, BisemialgebraDesc, Carrier};

#[derive(Clone, Debug)]
pub struct LinearAutomaton {
    pub name: String,
    pub over: BisemialgebraDesc,
    pub state_basis: Vec<BasisId>,
    /// `m ⊗ b ↦ m b` on pairs (state, `B`-basis element).
    pub action: LinearMap,
    pub start: Vector,
    pub observe: Functional,
}

/// A deterministic automaton over a finite alphabet. Missing transitions go
/// to an implicit dead state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    /// `state → letter → state`.
    pub transitions: BTreeMap<String, BTreeMap<String, String>>,
    pub initial: String,
    pub accepting: Vec<String>,
}

impl LinearAutomaton {
    pub fn semiring(&self) -> &Semiring {
        self.over.semiring()
    }

    /// The recognized language `b ↦ Ω(𝐬 b)` as a functional on `B`.
    pub fn language(&self) -> Functional {
        let aut = self.clone();
        Functional::new(format!("ρ[{}]", self.name), self.semiring(), move |b| {
            aut.observe.eval(&aut.action.apply(&aut.start.tensor(&Vector::basis(aut.semiring(), b.clone()))?)?)
        })
    }

    /// One state `q` with `q b = ε(b) q`, `𝐬 = q` and `Ω(q) = 1`; recognizes `ε`.
    pub fn trivial(b: &BisemialgebraDesc) -> Self {
        let s = b.semiring().clone();
        let q = BasisId::atom("q");
        let eps = b.epsilon().clone();
        let action = LinearMap::new("q·b = ε(b)q", &s, move |p| {
            let (m, x) = split(p)?;
            Ok(Vector::term(eps.semiring(), eps.on_basis(x)?, m.clone()))
        });
        LinearAutomaton {
            name: "trivial".into(),
            over: b.clone(),
            state_basis: vec![q.clone()],
            action,
            start: Vector::basis(&s, q.clone()),
            observe: Functional::from_table("Ω", &s, BTreeMap::from([(q, s.one())])),
        }
    }
}

/// `Ω(𝐬 · input)`, linear in `input`.
pub fn run_language(aut: &LinearAutomaton, input: &Vector) -> Result<Scalar> {
    aut.semiring().check_same(input.semiring())?;
    aut.observe.eval(&aut.action.apply(&aut.start.tensor(input)?)?)
}

fn word_alphabet(b: &BisemialgebraDesc) -> Result<&[String]> {
    match b.carrier() {
        Carrier::Words { alphabet, .. } => Ok(alphabet),
        _ => Err(Error::Parameter(format!("{} is not a word bisemialgebra", b.name()))),
    }
}

/// The linear automaton of a DFA: states become basis vectors, letters act by
/// the transition function, words by composing letters.
pub fn from_dfa(dfa: &Dfa, b: &BisemialgebraDesc) -> Result<LinearAutomaton> {
    let alphabet = word_alphabet(b)?;
    let declared: BTreeSet<&String> = dfa.alphabet.iter().collect();
    if declared != alphabet.iter().collect::<BTreeSet<_>>() {
        return Err(Error::Parameter(format!(
            "DFA alphabet {:?} does not match the generators {alphabet:?} of {}",
            dfa.alphabet,
            b.name()
        )));
    }
    let states: BTreeSet<&String> = dfa.states.iter().collect();
    let known = |q: &String, what: &str| {
        if states.contains(q) { Ok(()) } else { Err(Error::Parameter(format!("unknown {what} state {q:?}"))) }
    };
    known(&dfa.initial, "initial")?;
    for q in &dfa.accepting {
        known(q, "accepting")?;
    }
    for (q, row) in &dfa.transitions {
        known(q, "source")?;
        for (letter, r) in row {
            if !declared.contains(letter) {
                return Err(Error::Parameter(format!("unknown letter {letter:?} in the transitions of {q:?}")));
            }
            known(r, "target")?;
        }
    }
    let s = b.semiring().clone();
    let delta = dfa.transitions.clone();
    let s2 = s.clone();
    let action = LinearMap::new("transition", &s, move |p| {
        let (m, w) = split(p)?;
        let (BasisId::Atom { name, .. }, Some(letters)) = (m, w.as_word()) else {
            return Err(Error::Domain { map: "transition".into(), basis: p.to_string() });
        };
        let mut q = Some(name.clone());
        for a in letters {
            q = q.and_then(|q| delta.get(&q).and_then(|row| row.get(a)).cloned());
        }
        Ok(q.map_or_else(|| Vector::zero(&s2), |q| Vector::basis(&s2, BasisId::atom(q))))
    });
    let observe = Functional::finite_support(
        "accepting",
        &s,
        dfa.accepting.iter().map(|q| (BasisId::atom(q.clone()), s.one())).collect(),
    );
    Ok(LinearAutomaton {
        name: format!("dfa({})", dfa.initial),
        over: b.clone(),
        state_basis: dfa.states.iter().map(|q| BasisId::atom(q.clone())).collect(),
        action,
        start: Vector::basis(&s, BasisId::atom(dfa.initial.clone())),
        observe,
    })
}

/// Module laws `(m b) b′ = m (b b′)` and `m 1 = m` on basis elements of degree
/// at most `d`.
pub fn check_automaton(aut: &LinearAutomaton, d: usize) -> Result<CheckReport> {
    let s = aut.semiring();
    let b = &aut.over;
    let mut report = CheckReport::new(format!("module laws of automaton {}", aut.name)).with_bound(d);
    let bs = b.carrier().up_to(d);
    for m in &aut.state_basis {
        let mv = Vector::basis(s, m.clone());
        let unit = aut.action.apply(&mv.tensor(b.unit())?)?;
        let eq = b.quotient().equal(&unit, &mv)?;
        report.expect_eq("m 1 = m", &[m.to_string()], &unit, &mv, eq);
        for x in &bs {
            let mx = aut.action.on_pair(m, x)?;
            for y in &bs {
                if x.degree() + y.degree() > d {
                    continue;
                }
                let lhs = aut.action.apply(&mx.tensor(&Vector::basis(s, y.clone()))?)?;
                let rhs = aut.action.apply(&mv.tensor(&b.algebra.mul_basis(x, y)?)?)?;
                let eq = b.quotient().equal(&lhs, &rhs)?;
                report.expect_eq("(m b) b′ = m (b b′)", &[m.to_string(), x.to_string(), y.to_string()], &lhs, &rhs, eq);
            }
        }
    }
    Ok(report)
}

/// `A ⊗ A′` on the pair states with diagonal action through `Δ`, start
/// `𝐬 ⊗ 𝐬′` and observation `Ω ⊗ Ω′`. Over a word bisemialgebra the action
/// on a word is built letter by letter from `Δ` of each letter, as in a
/// product automaton; it agrees with `Σ m b₁ ⊗ n b₂` exactly when both
/// components are genuine `B`-semimodules.
pub fn tensor_automata(a1: &LinearAutomaton, a2: &LinearAutomaton) -> Result<LinearAutomaton> {
    a1.semiring().check_same(a2.semiring())?;
    if a1.over.name() != a2.over.name() {
        return Err(Error::Type(format!(
            "automata over different bisemialgebras: {} and {}",
            a1.over.name(),
            a2.over.name()
        )));
    }
    let s = a1.semiring().clone();
    let state_basis: Vec<BasisId> = a1
        .state_basis
        .iter()
        .flat_map(|m| a2.state_basis.iter().map(move |n| BasisId::pair(m.clone(), n.clone())))
        .collect();
    let (x1, x2) = (a1.clone(), a2.clone());
    let diagonal = move |m: &BasisId, n: &BasisId, b: &BasisId| -> Result<Vector> {
        let s = x1.semiring();
        let mut out = Vector::zero(s);
        for (p, c) in x1.over.delta().on_basis(b)?.iter() {
            let (b1, b2) = split(p)?;
            out.add_scaled(c, &x1.action.on_pair(m, b1)?.tensor(&x2.action.on_pair(n, b2)?)?);
        }
        Ok(out)
    };
    let s2 = s.clone();
    let action = LinearMap::new("diagonal action", &s, move |p| {
        let (mn, b) = split(p)?;
        let (m, n) = split(mn)?;
        let Some(letters) = b.as_word() else {
            return diagonal(m, n, b);
        };
        let mut state = Vector::basis(&s2, mn.clone());
        for a in letters {
            let letter = BasisId::word(std::slice::from_ref(a));
            let mut next = Vector::zero(&s2);
            for (q, c) in state.iter() {
                let (m, n) = split(q)?;
                next.add_scaled(c, &diagonal(m, n, &letter)?);
            }
            state = next;
        }
        Ok(state)
    });
    let (o1, o2) = (a1.observe.clone(), a2.observe.clone());
    let observe = Functional::new("Ω⊗Ω′", &s, move |p| {
        let (m, n) = split(p)?;
        Ok(o1.semiring().mul(&o1.on_basis(m)?, &o2.on_basis(n)?))
    });
    Ok(LinearAutomaton {
        name: format!("{} ⊗ {}", a1.name, a2.name),
        over: a1.over.clone(),
        state_basis,
        action,
        start: a1.start.tensor(&a2.start)?,
        observe,
    })
}

/// The language of `A ⊗ A′` against `ρ ∗ ρ′` on every word of length at most
/// `max_len`.
pub fn verify_language_convolution(a1: &LinearAutomaton, a2: &LinearAutomaton, max_len: usize) -> Result<CheckReport> {
    let s = a1.semiring();
    let t = tensor_automata(a1, a2)?;
    let conv = convolve_functionals(&a1.language(), &a2.language(), &a1.over.coalgebra)?;
    let rho = t.language();
    let mut report = CheckReport::new(format!("language of {} is the convolution", t.name)).with_bound(max_len);
    for w in a1.over.carrier().up_to(max_len) {
        let lhs = scalar_vector(s, rho.on_basis(&w)?);
        let rhs = scalar_vector(s, conv.on_basis(&w)?);
        let eq = lhs == rhs;
        report.expect_eq("ρ⊗ = ρ ∗ ρ′", &[w.to_string()], &lhs, &rhs, eq);
    }
    Ok(report)
}
