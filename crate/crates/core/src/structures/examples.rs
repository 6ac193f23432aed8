//! Builtin gallery of (bi)semialgebras and Hopf semialgebras.
//!
//! Quotient examples whose relations read `x + y = 0` are instantiated over
//! the naturals (or a finite ring) with null-pair normalizers; over an
//! additively idempotent semiring those relations collapse, and the
//! constructors refuse with a diagnostic.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{BisemialgebraDesc, Carrier, HopfDesc, SemialgebraDesc, SemicoalgebraDesc, StructureDesc};
use crate::error::{Error, Result};
use crate::semimodule::{idempotent_collapse_diagnostic, null_pairs, BasisId, Functional, LinearMap, NullPairs, Quotient, Vector};
use crate::semiring::{Scalar, Semiring};

/// Longest word whose unshuffle coproduct is expanded.
const MAX_UNSHUFFLE_LEN: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "example", rename_all = "snake_case")]
pub enum Example {
    /// The base semiring as a one-dimensional Hopf semialgebra.
    Ground,
    /// `S[Z/n]` with group-like coproduct and antipode `g ↦ g⁻¹`.
    GroupHopf { order: u32 },
    /// `S[Z/n]` with `Δ(g) = g⊗1 + 1⊗g`; not a bisemialgebra for `n ≥ 2`.
    GroupPrimitive { order: u32 },
    PolyGrouplike,
    /// `S[x]` with `Δ(xⁱ) = Σ C(i,j) xʲ ⊗ x^(i-j)`.
    PolyBinomial,
    Laurent,
    /// `S ⊕ S` with pointwise product; the coproduct misses `Δ(1) = 1⊗1`.
    DirectSum,
    /// The coalgebra `S ⊕ M` for free `M`.
    DirectSumCoalgebra { generators: u32 },
    WordsGrouplike { alphabet: Vec<String> },
    WordsUnshuffle { alphabet: Vec<String> },
    /// Concatenation with deconcatenation; incompatible.
    HazWords { alphabet: Vec<String> },
    DividedPowers,
    TensorSemialgebra { generators: Vec<String>, truncation: usize },
    /// `S[x]/(x + x²)` with `Δ(x) = x⊗1 + 1⊗x + 2 x⊗x`.
    QuotientPoly,
    Sweedler,
    /// `q` is written as an element literal of the base semiring.
    Taft { n: u32, q: String },
    Pareigis,
}

impl Example {
    pub fn name(&self) -> &'static str {
        match self {
            Example::Ground => "ground",
            Example::GroupHopf { .. } => "group_hopf",
            Example::GroupPrimitive { .. } => "group_primitive",
            Example::PolyGrouplike => "poly_grouplike",
            Example::PolyBinomial => "poly_binomial",
            Example::Laurent => "laurent",
            Example::DirectSum => "direct_sum",
            Example::DirectSumCoalgebra { .. } => "direct_sum_coalgebra",
            Example::WordsGrouplike { .. } => "words_grouplike",
            Example::WordsUnshuffle { .. } => "words_unshuffle",
            Example::HazWords { .. } => "haz_words",
            Example::DividedPowers => "divided_powers",
            Example::TensorSemialgebra { .. } => "tensor_semialgebra",
            Example::QuotientPoly => "quotient_poly",
            Example::Sweedler => "sweedler",
            Example::Taft { .. } => "taft",
            Example::Pareigis => "pareigis",
        }
    }

    /// Examples that are expected to fail their own law suite.
    pub fn is_negative(&self) -> bool {
        matches!(self, Example::GroupPrimitive { .. } | Example::DirectSum | Example::HazWords { .. })
    }

    /// The gallery with the parameters and base semirings used throughout
    /// the test suite.
    pub fn gallery() -> Vec<(Example, Semiring)> {
        let b = Semiring::boolean;
        let n = Semiring::naturals;
        let x2 = || Semiring::xn(2).expect("valid");
        let xy = || vec!["x".to_string(), "y".to_string()];
        vec![
            (Example::Ground, b()),
            (Example::Ground, n()),
            (Example::GroupHopf { order: 2 }, b()),
            (Example::GroupHopf { order: 3 }, b()),
            (Example::GroupHopf { order: 2 }, x2()),
            (Example::GroupHopf { order: 3 }, x2()),
            (Example::PolyGrouplike, b()),
            (Example::PolyGrouplike, n()),
            (Example::PolyBinomial, b()),
            (Example::PolyBinomial, n()),
            (Example::Laurent, b()),
            (Example::Laurent, n()),
            (Example::DirectSumCoalgebra { generators: 1 }, n()),
            (Example::WordsGrouplike { alphabet: xy() }, b()),
            (Example::WordsUnshuffle { alphabet: xy() }, b()),
            (Example::DividedPowers, b()),
            (Example::TensorSemialgebra { generators: xy(), truncation: 3 }, n()),
            (Example::QuotientPoly, n()),
            (Example::Sweedler, n()),
            (Example::Taft { n: 2, q: "2".into() }, Semiring::integers_mod(3).expect("valid")),
            (Example::Taft { n: 3, q: "2".into() }, Semiring::integers_mod(7).expect("valid")),
            (Example::Pareigis, n()),
            (Example::HazWords { alphabet: vec!["2".into(), "3".into()] }, n()),
            (Example::GroupPrimitive { order: 2 }, b()),
            (Example::DirectSum, b()),
        ]
    }
}

/// Builds the named example over `s`.
pub fn example(ex: &Example, s: &Semiring) -> Result<StructureDesc> {
    match ex {
        Example::Ground => Ok(StructureDesc::Hopf(ground(s))),
        Example::GroupHopf { order } => group(s, *order, true),
        Example::GroupPrimitive { order } => group(s, *order, false),
        Example::PolyGrouplike => Ok(StructureDesc::Bisemialgebra(poly(s, false))),
        Example::PolyBinomial => Ok(StructureDesc::Bisemialgebra(poly(s, true))),
        Example::Laurent => Ok(StructureDesc::Hopf(laurent(s))),
        Example::DirectSum => Ok(StructureDesc::Bisemialgebra(direct_sum(s))),
        Example::DirectSumCoalgebra { generators } => Ok(StructureDesc::Semicoalgebra(direct_sum_coalgebra(s, *generators))),
        Example::WordsGrouplike { alphabet } => words(s, alphabet, None, WordCoproduct::Grouplike, "words_grouplike"),
        Example::WordsUnshuffle { alphabet } => words(s, alphabet, None, WordCoproduct::Unshuffle, "words_unshuffle"),
        Example::HazWords { alphabet } => words(s, alphabet, None, WordCoproduct::Deconcatenation, "haz_words"),
        Example::TensorSemialgebra { generators, truncation } => {
            words(s, generators, Some(*truncation), WordCoproduct::Unshuffle, "tensor_semialgebra")
        }
        Example::DividedPowers => divided_powers(s),
        Example::QuotientPoly => quotient_poly(s),
        Example::Sweedler => sweedler(s),
        Example::Taft { n, q } => taft(s, *n, q),
        Example::Pareigis => pareigis(s),
    }
}

fn algebra(name: &str, s: &Semiring, carrier: Carrier, mu: LinearMap, eta: Vector, quotient: Quotient) -> SemialgebraDesc {
    SemialgebraDesc { name: name.to_string(), semiring: s.clone(), carrier, mu: mu.renamed("μ"), eta, quotient }
}

fn bisemialgebra(a: SemialgebraDesc, delta: LinearMap, epsilon: Functional) -> BisemialgebraDesc {
    let coalgebra = SemicoalgebraDesc {
        name: a.name.clone(),
        semiring: a.semiring.clone(),
        carrier: a.carrier.clone(),
        delta: delta.renamed("Δ"),
        epsilon: epsilon.renamed("ε"),
        quotient: a.quotient.clone(),
    };
    BisemialgebraDesc { algebra: a, coalgebra }
}

fn hopf(bi: BisemialgebraDesc, antipode: LinearMap) -> HopfDesc {
    HopfDesc { bi, antipode: antipode.renamed("𝔞") }
}

fn domain(map: &str, b: &BasisId) -> Error {
    Error::Domain { map: map.to_string(), basis: b.to_string() }
}

fn pair_parts<'a>(map: &str, b: &'a BasisId) -> Result<(&'a BasisId, &'a BasisId)> {
    b.as_pair().ok_or_else(|| domain(map, b))
}

fn single(s: &Semiring, b: BasisId) -> Vector {
    Vector::basis(s, b)
}

fn diag(s: &Semiring, b: &BasisId) -> Vector {
    Vector::basis(s, BasisId::pair(b.clone(), b.clone()))
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The base semiring as a Hopf semialgebra on the ground basis element.
pub fn ground(s: &Semiring) -> HopfDesc {
    let one = BasisId::ground();
    let eta = single(s, one.clone());
    let (s1, s2, s3) = (s.clone(), s.clone(), s.clone());
    let is_one = |b: &BasisId| *b == BasisId::ground();
    let mu = LinearMap::new("μ", s, move |b| match b.as_pair() {
        Some((l, r)) if is_one(l) && is_one(r) => Ok(single(&s1, BasisId::ground())),
        _ => Err(domain("μ", b)),
    });
    let delta = LinearMap::new("Δ", s, move |b| if is_one(b) { Ok(diag(&s2, b)) } else { Err(domain("Δ", b)) });
    let eps = Functional::from_table("ε", s, BTreeMap::from([(one.clone(), s.one())]));
    let antipode = LinearMap::new("𝔞", s, move |b| if is_one(b) { Ok(single(&s3, b.clone())) } else { Err(domain("𝔞", b)) });
    let a = algebra("ground", s, Carrier::Finite(vec![one]), mu, eta, Quotient::Free);
    hopf(bisemialgebra(a, delta, eps), antipode)
}

fn group_elem(i: u32) -> BasisId {
    match i {
        0 => BasisId::atom("e"),
        1 => BasisId::atom("g"),
        _ => BasisId::atom(format!("g^{i}")),
    }
}

fn group(s: &Semiring, order: u32, grouplike: bool) -> Result<StructureDesc> {
    if order == 0 {
        return Err(Error::Parameter("group order must be at least 1".into()));
    }
    let elems: Vec<BasisId> = (0..order).map(group_elem).collect();
    let index: BTreeMap<BasisId, u32> = elems.iter().cloned().zip(0..).collect();
    let idx = move |map: &str, b: &BasisId| index.get(b).copied().ok_or_else(|| domain(map, b));
    let (i1, i2, i3, i4) = (idx.clone(), idx.clone(), idx.clone(), idx);
    let (s1, s2, s3) = (s.clone(), s.clone(), s.clone());
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        Ok(single(&s1, group_elem((i1("μ", l)? + i1("μ", r)?) % order)))
    });
    let e = group_elem(0);
    let name = format!("{}[Z/{order}]", if grouplike { "group_hopf" } else { "group_primitive" });
    let a = algebra(&name, s, Carrier::Finite(elems), mu, single(s, e.clone()), Quotient::Free);
    if grouplike {
        let delta = LinearMap::new("Δ", s, move |b| {
            i2("Δ", b)?;
            Ok(diag(&s2, b))
        });
        let eps = Functional::new("ε", s, {
            let s = s.clone();
            move |b| i3("ε", b).map(|_| s.one())
        });
        let antipode = LinearMap::new("𝔞", s, move |b| Ok(single(&s3, group_elem((order - i4("𝔞", b)?) % order))));
        Ok(StructureDesc::Hopf(hopf(bisemialgebra(a, delta, eps), antipode)))
    } else {
        let delta = LinearMap::new("Δ", s, move |b| {
            if i2("Δ", b)? == 0 {
                return Ok(diag(&s2, b));
            }
            let e = group_elem(0);
            Ok(Vector::sum_of(&s2, [BasisId::pair(b.clone(), e.clone()), BasisId::pair(e, b.clone())]))
        });
        let eps = Functional::new("ε", s, {
            let s = s.clone();
            move |b| Ok(if i3("ε", b)? == 0 { s.one() } else { s.zero() })
        });
        Ok(StructureDesc::Bisemialgebra(bisemialgebra(a, delta, eps)))
    }
}

fn exponent(map: &str, b: &BasisId, symbol: &str) -> Result<i64> {
    b.exponent_of(symbol).ok_or_else(|| domain(map, b))
}

fn x_pow(n: i64) -> BasisId {
    BasisId::power("x", n)
}

fn poly_mu(s: &Semiring, negative_ok: bool) -> LinearMap {
    let s = s.clone();
    LinearMap::new("μ", &s.clone(), move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let (i, j) = (exponent("μ", l, "x")?, exponent("μ", r, "x")?);
        if !negative_ok && (i < 0 || j < 0) {
            return Err(domain("μ", b));
        }
        Ok(single(&s, x_pow(i + j)))
    })
}

fn poly(s: &Semiring, binomial_coproduct: bool) -> BisemialgebraDesc {
    let carrier = Carrier::graded(|d| vec![x_pow(d as i64)]);
    let name = if binomial_coproduct { "poly_binomial" } else { "poly_grouplike" };
    let a = algebra(name, s, carrier, poly_mu(s, false), single(s, x_pow(0)), Quotient::Free);
    let s2 = s.clone();
    if binomial_coproduct {
        let delta = LinearMap::new("Δ", s, move |b| {
            let i = exponent("Δ", b, "x")?;
            if i < 0 {
                return Err(domain("Δ", b));
            }
            Ok(Vector::from_terms(
                &s2,
                (0..=i).map(|j| (s2.from_natural(&binomial(i as u64, j as u64)), BasisId::pair(x_pow(j), x_pow(i - j)))),
            ))
        });
        let s3 = s.clone();
        let eps = Functional::new("ε", s, move |b| {
            Ok(if exponent("ε", b, "x")? == 0 { s3.one() } else { s3.zero() })
        });
        bisemialgebra(a, delta, eps)
    } else {
        let delta = LinearMap::new("Δ", s, move |b| {
            exponent("Δ", b, "x")?;
            Ok(diag(&s2, b))
        });
        let s3 = s.clone();
        let eps = Functional::new("ε", s, move |b| exponent("ε", b, "x").map(|_| s3.one()));
        bisemialgebra(a, delta, eps)
    }
}

fn laurent(s: &Semiring) -> HopfDesc {
    let carrier = Carrier::graded(|d| if d == 0 { vec![x_pow(0)] } else { vec![x_pow(d as i64), x_pow(-(d as i64))] });
    let a = algebra("laurent", s, carrier, poly_mu(s, true), single(s, x_pow(0)), Quotient::Free);
    let (s2, s3, s4) = (s.clone(), s.clone(), s.clone());
    let delta = LinearMap::new("Δ", s, move |b| {
        exponent("Δ", b, "x")?;
        Ok(diag(&s2, b))
    });
    let eps = Functional::new("ε", s, move |b| exponent("ε", b, "x").map(|_| s3.one()));
    let antipode = LinearMap::new("𝔞", s, move |b| Ok(single(&s4, x_pow(-exponent("𝔞", b, "x")?))));
    hopf(bisemialgebra(a, delta, eps), antipode)
}

fn direct_sum(s: &Semiring) -> BisemialgebraDesc {
    let (u, a) = (BasisId::atom("s"), BasisId::atom("a"));
    let (s1, s2) = (s.clone(), s.clone());
    let (u1, u2) = (u.clone(), u.clone());
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        Ok(if l == r { single(&s1, l.clone()) } else { Vector::zero(&s1) })
    });
    let eta = Vector::sum_of(s, [u.clone(), a.clone()]);
    let alg = algebra("direct_sum", s, Carrier::Finite(vec![u.clone(), a.clone()]), mu, eta, Quotient::Free);
    let delta = LinearMap::new("Δ", s, move |b| {
        if *b == u1 {
            Ok(diag(&s2, b))
        } else {
            Ok(Vector::sum_of(&s2, [BasisId::pair(u1.clone(), b.clone()), BasisId::pair(b.clone(), u1.clone())]))
        }
    });
    let eps = Functional::finite_support("ε", s, BTreeMap::from([(u2, s.one())]));
    bisemialgebra(alg, delta, eps)
}

fn direct_sum_coalgebra(s: &Semiring, generators: u32) -> SemicoalgebraDesc {
    let u = BasisId::atom("u");
    let mut basis = vec![u.clone()];
    basis.extend((1..=generators).map(|i| BasisId::atom(format!("m{i}"))));
    let known = basis.clone();
    let s2 = s.clone();
    let u1 = u.clone();
    let delta = LinearMap::new("Δ", s, move |b| {
        if !known.contains(b) {
            return Err(domain("Δ", b));
        }
        if *b == u1 {
            return Ok(diag(&s2, b));
        }
        Ok(Vector::sum_of(&s2, [BasisId::pair(u1.clone(), b.clone()), BasisId::pair(b.clone(), u1.clone())]))
    });
    let mut eps: BTreeMap<BasisId, Scalar> = basis.iter().map(|b| (b.clone(), s.zero())).collect();
    eps.insert(u, s.one());
    SemicoalgebraDesc {
        name: "direct_sum_coalgebra".into(),
        semiring: s.clone(),
        carrier: Carrier::Finite(basis),
        delta,
        epsilon: Functional::from_table("ε", s, eps),
        quotient: Quotient::Free,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum WordCoproduct {
    Grouplike,
    Unshuffle,
    Deconcatenation,
}

fn word<'a>(map: &str, b: &'a BasisId) -> Result<&'a [String]> {
    b.as_word().ok_or_else(|| domain(map, b))
}

/// All ways of splitting `w` into a subword and its complement.
pub fn unshuffles(w: &[String]) -> Result<Vec<(Vec<String>, Vec<String>)>> {
    if w.len() > MAX_UNSHUFFLE_LEN {
        return Err(Error::Size { required: format!("2^{}", w.len()), budget: 1 << MAX_UNSHUFFLE_LEN });
    }
    Ok((0u32..1 << w.len())
        .map(|mask| {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (i, a) in w.iter().enumerate() {
                if mask >> i & 1 == 1 { l.push(a.clone()) } else { r.push(a.clone()) }
            }
            (l, r)
        })
        .collect())
}

fn words(s: &Semiring, alphabet: &[String], truncation: Option<usize>, kind: WordCoproduct, name: &str) -> Result<StructureDesc> {
    let mut seen = alphabet.to_vec();
    seen.sort();
    seen.dedup();
    if seen.len() != alphabet.len() {
        return Err(Error::Parameter("alphabet letters must be distinct".into()));
    }
    let letters = alphabet.to_vec();
    let valid = move |map: &str, b: &BasisId| -> Result<Vec<String>> {
        let w = word(map, b)?;
        if w.iter().all(|a| letters.contains(a)) { Ok(w.to_vec()) } else { Err(domain(map, b)) }
    };
    let (v1, v2, v3) = (valid.clone(), valid.clone(), valid);
    let s1 = s.clone();
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let mut w = v1("μ", l)?;
        w.extend(v1("μ", r)?);
        Ok(single(&s1, BasisId::Word(w)))
    });
    let a = algebra(name, s, Carrier::words(alphabet, truncation), mu, single(s, BasisId::empty_word()), Quotient::Free);
    let s2 = s.clone();
    let delta = LinearMap::new("Δ", s, move |b| {
        let w = v2("Δ", b)?;
        Ok(match kind {
            WordCoproduct::Grouplike => diag(&s2, b),
            WordCoproduct::Deconcatenation => Vector::sum_of(
                &s2,
                (0..=w.len()).map(|i| BasisId::pair(BasisId::Word(w[..i].to_vec()), BasisId::Word(w[i..].to_vec()))),
            ),
            WordCoproduct::Unshuffle => Vector::sum_of(
                &s2,
                unshuffles(&w)?.into_iter().map(|(l, r)| BasisId::pair(BasisId::Word(l), BasisId::Word(r))),
            ),
        })
    });
    let s3 = s.clone();
    let eps = Functional::new("ε", s, move |b| {
        let w = v3("ε", b)?;
        Ok(if kind == WordCoproduct::Grouplike || w.is_empty() { s3.one() } else { s3.zero() })
    });
    Ok(StructureDesc::Bisemialgebra(bisemialgebra(a, delta, eps)))
}

fn e_index(map: &str, b: &BasisId) -> Result<u64> {
    match b {
        BasisId::Indexed { symbol, index } if symbol == "e" => Ok(*index),
        _ => Err(domain(map, b)),
    }
}

fn divided_powers(s: &Semiring) -> Result<StructureDesc> {
    if !s.is_additively_idempotent() {
        return Err(Error::Parameter(format!(
            "divided powers need an additively idempotent semiring, {s} is not: Δ(e₁e₁) = Δ(e₂) has e₁⊗e₁ once but Δ(e₁)Δ(e₁) has it twice"
        )));
    }
    let e = |n: u64| BasisId::indexed("e", n);
    let (s1, s2, s3) = (s.clone(), s.clone(), s.clone());
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        Ok(single(&s1, e(e_index("μ", l)? + e_index("μ", r)?)))
    });
    let a = algebra("divided_powers", s, Carrier::graded(move |d| vec![e(d as u64)]), mu, single(s, e(0)), Quotient::Free);
    let delta = LinearMap::new("Δ", s, move |b| {
        let n = e_index("Δ", b)?;
        Ok(Vector::sum_of(&s2, (0..=n).map(|p| BasisId::pair(e(p), e(n - p)))))
    });
    let eps = Functional::new("ε", s, move |b| Ok(if e_index("ε", b)? == 0 { s3.one() } else { s3.zero() }));
    Ok(StructureDesc::Bisemialgebra(bisemialgebra(a, delta, eps)))
}

fn require_negatives(s: &Semiring, what: &str) -> Result<()> {
    if s.is_additively_idempotent() {
        return Err(idempotent_collapse_diagnostic(s, what));
    }
    Ok(())
}

/// Multiplicative extension of the coproduct and antipode over a finite
/// basis, tabulated from the values on generators.
fn tabulate(
    a: &SemialgebraDesc,
    words: &[(BasisId, Vec<usize>)],
    generator_delta: &[Vector],
    generator_antipode: &[Vector],
) -> Result<(LinearMap, LinearMap)> {
    let mut delta = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    for (b, gens) in words {
        let mut d = a.eta.tensor(&a.eta)?;
        let mut s = a.eta.clone();
        for &g in gens {
            d = a.pair_mul(&d, &generator_delta[g])?;
            // the antipode reverses products
            s = a.mul(&generator_antipode[g], &s)?;
        }
        delta.insert(b.clone(), a.quotient.reduce(&d)?);
        antipode.insert(b.clone(), a.quotient.reduce(&s)?);
    }
    Ok((LinearMap::from_table("Δ", &a.semiring, delta), LinearMap::from_table("𝔞", &a.semiring, antipode)))
}

fn quotient_poly(s: &Semiring) -> Result<StructureDesc> {
    require_negatives(s, "S[x]/(x + x²)")?;
    let two = s.from_u64(2);
    if s.is_zero(&two) {
        return Err(Error::Parameter(format!("S[x]/(bx + x²) needs 2 ≠ 0, which fails in {s}")));
    }
    let basis = vec![x_pow(0), x_pow(1), x_pow(2)];
    let quotient = null_pairs(s, vec![(x_pow(1), x_pow(2))])?;
    let s1 = s.clone();
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let (i, j) = (exponent("μ", l, "x")?, exponent("μ", r, "x")?);
        if !(0..=2).contains(&i) || !(0..=2).contains(&j) {
            return Err(domain("μ", b));
        }
        // xⁿ = (-1)ⁿ⁻¹ x for n ≥ 1, and x² represents -x
        let n = i + j;
        Ok(single(&s1, if i == 0 || j == 0 { x_pow(n) } else if n % 2 == 0 { x_pow(2) } else { x_pow(1) }))
    });
    let a = algebra("quotient_poly", s, Carrier::Finite(basis.clone()), mu, single(s, x_pow(0)), quotient);
    let dx = Vector::from_terms(
        s,
        [
            (s.one(), BasisId::pair(x_pow(1), x_pow(0))),
            (s.one(), BasisId::pair(x_pow(0), x_pow(1))),
            (two, BasisId::pair(x_pow(1), x_pow(1))),
        ],
    );
    let words = vec![(x_pow(0), vec![]), (x_pow(1), vec![0]), (x_pow(2), vec![0, 0])];
    let (delta, _) = tabulate(&a, &words, &[dx], &[single(s, x_pow(1))])?;
    let eps = Functional::from_table(
        "ε",
        s,
        BTreeMap::from([(x_pow(0), s.one()), (x_pow(1), s.zero()), (x_pow(2), s.zero())]),
    );
    let antipode = LinearMap::identity(s);
    let known = basis;
    let antipode = LinearMap::new("𝔞", s, move |b| {
        if known.contains(b) { antipode.on_basis(b) } else { Err(domain("𝔞", b)) }
    });
    Ok(StructureDesc::Hopf(hopf(bisemialgebra(a, delta, eps), antipode)))
}

/// `(negative, g-exponent, x-exponent)` of a Sweedler basis label.
fn sweedler_decode(b: &BasisId) -> Option<(bool, u8, u8)> {
    let BasisId::Monomial(f) = b else { return None };
    let f: Vec<(&str, i64)> = f.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    match f.as_slice() {
        [] => Some((false, 0, 0)),
        [("g", 1)] => Some((false, 1, 0)),
        [("x", 1)] => Some((false, 0, 1)),
        [("y", 1)] => Some((true, 0, 1)),
        [("g", 1), ("x", 1)] => Some((false, 1, 1)),
        [("g", 1), ("y", 1)] => Some((true, 1, 1)),
        _ => None,
    }
}

fn sweedler_encode(neg: bool, a: u8, b: u8) -> BasisId {
    BasisId::monomial(&[("g", a as i64), (if neg { "y" } else { "x" }, b as i64)])
}

fn sweedler(s: &Semiring) -> Result<StructureDesc> {
    require_negatives(s, "Sweedler's relations x + y = 0")?;
    let basis: Vec<BasisId> =
        [(false, 0, 0), (false, 1, 0), (false, 0, 1), (true, 0, 1), (false, 1, 1), (true, 1, 1)]
            .into_iter()
            .map(|(n, a, b)| sweedler_encode(n, a, b))
            .collect();
    let quotient = null_pairs(
        s,
        vec![(sweedler_encode(false, 0, 1), sweedler_encode(true, 0, 1)), (sweedler_encode(false, 1, 1), sweedler_encode(true, 1, 1))],
    )?;
    let dec = |map: &str, b: &BasisId| sweedler_decode(b).ok_or_else(|| domain(map, b));
    let s1 = s.clone();
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let ((n1, a1, b1), (n2, a2, b2)) = (dec("μ", l)?, dec("μ", r)?);
        if b1 + b2 >= 2 {
            return Ok(Vector::zero(&s1));
        }
        // ξ g = -g ξ
        let neg = n1 ^ n2 ^ (b1 * a2 == 1);
        Ok(single(&s1, sweedler_encode(neg, (a1 + a2) % 2, b1 + b2)))
    });
    let a = algebra("sweedler", s, Carrier::Finite(basis), mu, single(s, sweedler_encode(false, 0, 0)), quotient);
    let s2 = s.clone();
    let delta = LinearMap::new("Δ", s, move |b| {
        let (neg, a, e) = dec("Δ", b)?;
        let g = |a: u8| sweedler_encode(false, a % 2, 0);
        if e == 0 {
            return Ok(diag(&s2, b));
        }
        // Δ(gᵃξ) = gᵃξ ⊗ gᵃ + gᵃ⁺¹ ⊗ gᵃξ
        Ok(Vector::sum_of(
            &s2,
            [BasisId::pair(sweedler_encode(neg, a, 1), g(a)), BasisId::pair(g(a + 1), sweedler_encode(neg, a, 1))],
        ))
    });
    let s3 = s.clone();
    let eps = Functional::new("ε", s, move |b| Ok(if dec("ε", b)?.2 == 0 { s3.one() } else { s3.zero() }));
    let s4 = s.clone();
    let antipode = LinearMap::new("𝔞", s, move |b| {
        let (neg, a, e) = dec("𝔞", b)?;
        if e == 0 {
            return Ok(single(&s4, b.clone()));
        }
        // 𝔞(gᵃξ) = (-1)ᵃ⁺¹ gᵃ⁺¹ ξ
        let flip = a % 2 == 0;
        Ok(single(&s4, sweedler_encode(neg ^ flip, (a + 1) % 2, 1)))
    });
    Ok(StructureDesc::Hopf(hopf(bisemialgebra(a, delta, eps), antipode)))
}

fn taft(s: &Semiring, n: u32, q: &str) -> Result<StructureDesc> {
    if n < 2 {
        return Err(Error::Parameter(format!("Taft needs n ≥ 2, got {n}")));
    }
    let q = s.parse(q)?;
    if s.pow(&q, n as u64) != s.one() {
        return Err(Error::Parameter(format!("Taft needs qⁿ = 1, but {}^{n} ≠ 1 in {s}", s.format(&q))));
    }
    if let Some(i) = (1..n).find(|i| s.pow(&q, *i as u64) == s.one()) {
        let hint = if s.builtin_kind().is_some() && !s.is_additively_idempotent() {
            "; over the naturals only q = 1 satisfies qⁿ = 1, so no admissible q exists"
        } else {
            ""
        };
        return Err(Error::Parameter(format!(
            "Taft needs q to be a primitive n-th root of unity, but {}^{i} = 1{hint}",
            s.format(&q)
        )));
    }
    let minus_one = s.negate(&s.one()).ok_or_else(|| {
        if s.is_additively_idempotent() {
            idempotent_collapse_diagnostic(s, "Taft's relation x + y = 0")
        } else {
            Error::Parameter(format!("Taft's relation x + y = 0 needs additive inverses, which {s} lacks"))
        }
    })?;
    let label = |a: u32, b: u32| BasisId::monomial(&[("g", a as i64), ("x", b as i64)]);
    let mut index = BTreeMap::new();
    let mut basis = Vec::new();
    let mut words = Vec::new();
    for b in 0..n {
        for a in 0..n {
            index.insert(label(a, b), (a, b));
            basis.push(label(a, b));
            let mut gens = vec![0; a as usize];
            gens.extend(std::iter::repeat_n(1, b as usize));
            words.push((label(a, b), gens));
        }
    }
    let s1 = s.clone();
    let q1 = q.clone();
    let idx = move |map: &str, b: &BasisId| index.get(b).copied().ok_or_else(|| domain(map, b));
    let idx2 = idx.clone();
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let ((a1, b1), (a2, b2)) = (idx("μ", l)?, idx("μ", r)?);
        if b1 + b2 >= n {
            return Ok(Vector::zero(&s1));
        }
        // xᵇ gᵃ = q^(ab) gᵃ xᵇ
        let c = s1.pow(&q1, (b1 * a2) as u64);
        Ok(Vector::term(&s1, c, label((a1 + a2) % n, b1 + b2)))
    });
    let a = algebra(&format!("taft(n={n})"), s, Carrier::Finite(basis), mu, single(s, label(0, 0)), Quotient::Free);
    let (g, x, ginv) = (label(1, 0), label(0, 1), label(n - 1, 0));
    let dg = diag(s, &g);
    let dx = Vector::sum_of(s, [BasisId::pair(x.clone(), label(0, 0)), BasisId::pair(g.clone(), x)]);
    let sg = single(s, ginv.clone());
    let sx = Vector::term(s, minus_one, label(n - 1, 1));
    let (delta, antipode) = tabulate(&a, &words, &[dg, dx], &[sg, sx])?;
    let s2 = s.clone();
    let eps = Functional::new("ε", s, move |b| Ok(if idx2("ε", b)?.1 == 0 { s2.one() } else { s2.zero() }));
    Ok(StructureDesc::Hopf(hopf(bisemialgebra(a, delta, eps), antipode)))
}

/// `(negative, x-exponent, y-exponent)` of a Pareigis basis label; the
/// negative partner of `x yᵏ` is written `y x yᵏ⁻¹`.
fn pareigis_decode(b: &BasisId) -> Option<(bool, u8, i64)> {
    let BasisId::Monomial(f) = b else { return None };
    let f: Vec<(&str, i64)> = f.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    match f.as_slice() {
        [] => Some((false, 0, 0)),
        [("y", k)] => Some((false, 0, *k)),
        [("x", 1)] => Some((false, 1, 0)),
        [("x", 1), ("y", k)] => Some((false, 1, *k)),
        [("y", 1), ("x", 1)] => Some((true, 1, 1)),
        [("y", 1), ("x", 1), ("y", j)] => Some((true, 1, j + 1)),
        _ => None,
    }
}

fn pareigis_encode(neg: bool, e: u8, k: i64) -> BasisId {
    match (e, neg) {
        (0, _) => BasisId::power("y", k),
        (_, false) => BasisId::monomial(&[("x", 1), ("y", k)]),
        (_, true) => BasisId::monomial(&[("y", 1), ("x", 1), ("y", k - 1)]),
    }
}

fn pareigis(s: &Semiring) -> Result<StructureDesc> {
    require_negatives(s, "Pareigis' relation xy + yx = 0")?;
    let carrier = Carrier::graded(|d| {
        let d = d as i64;
        if d == 0 {
            return vec![pareigis_encode(false, 0, 0)];
        }
        let mut out = vec![pareigis_encode(false, 0, d), pareigis_encode(false, 0, -d)];
        let ks = if d == 1 { vec![0] } else { vec![d - 1, -(d - 1)] };
        for k in ks {
            out.push(pareigis_encode(false, 1, k));
            out.push(pareigis_encode(true, 1, k));
        }
        out
    });
    let sample = (-4..=4).map(|k| (pareigis_encode(false, 1, k), pareigis_encode(true, 1, k))).collect();
    let quotient = NullPairs::with_rule(
        s,
        "x yᵏ + y x yᵏ⁻¹ ~ 0",
        |b| match pareigis_decode(b) {
            Some((neg, 1, k)) => Some((pareigis_encode(false, 1, k), neg)),
            _ => None,
        },
        |b| match pareigis_decode(b) {
            Some((false, 1, k)) => Some(pareigis_encode(true, 1, k)),
            _ => None,
        },
        sample,
    )?
    .into_quotient();
    let dec = |map: &str, b: &BasisId| pareigis_decode(b).ok_or_else(|| domain(map, b));
    let s1 = s.clone();
    let mu = LinearMap::new("μ", s, move |b| {
        let (l, r) = pair_parts("μ", b)?;
        let ((n1, e1, k1), (n2, e2, k2)) = (dec("μ", l)?, dec("μ", r)?);
        if e1 + e2 >= 2 {
            return Ok(Vector::zero(&s1));
        }
        // yᵏ x = (-1)ᵏ x yᵏ
        let neg = n1 ^ n2 ^ (e2 == 1 && k1.rem_euclid(2) == 1);
        Ok(single(&s1, pareigis_encode(neg, e1 + e2, k1 + k2)))
    });
    let a = algebra("pareigis", s, carrier, mu, single(s, pareigis_encode(false, 0, 0)), quotient);
    let s2 = s.clone();
    let delta = LinearMap::new("Δ", s, move |b| {
        let (neg, e, k) = dec("Δ", b)?;
        let y = |k: i64| pareigis_encode(false, 0, k);
        if e == 0 {
            return Ok(diag(&s2, b));
        }
        // Δ(x yᵏ) = x yᵏ ⊗ yᵏ + yᵏ⁻¹ ⊗ x yᵏ
        Ok(Vector::sum_of(
            &s2,
            [BasisId::pair(pareigis_encode(neg, 1, k), y(k)), BasisId::pair(y(k - 1), pareigis_encode(neg, 1, k))],
        ))
    });
    let s3 = s.clone();
    let eps = Functional::new("ε", s, move |b| Ok(if dec("ε", b)?.1 == 0 { s3.one() } else { s3.zero() }));
    let s4 = s.clone();
    let antipode = LinearMap::new("𝔞", s, move |b| {
        let (neg, e, k) = dec("𝔞", b)?;
        if e == 0 {
            return Ok(single(&s4, pareigis_encode(false, 0, -k)));
        }
        // 𝔞(x yᵏ) = (-1)ᵏ x y¹⁻ᵏ
        Ok(single(&s4, pareigis_encode(neg ^ (k.rem_euclid(2) == 1), 1, 1 - k)))
    });
    Ok(StructureDesc::Hopf(hopf(bisemialgebra(a, delta, eps), antipode)))
}
