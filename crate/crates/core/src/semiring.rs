//! Commutative semirings with exact arithmetic.
//!
//! A [`Semiring`] is a cheap, cloneable handle; [`Scalar`] values carry no
//! reference to their semiring, so every operation goes through the handle.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::semimodule::{BasisId, Vector};

/// Seed used by sampled axiom checks unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Largest ground set accepted by [`Semiring::subset_lattice`].
pub const MAX_SUBSET_GROUND: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Nat(BigUint),
    Bool(bool),
    /// Element of `X_n`; `None` is the sentinel `-inf`.
    Capped(Option<u32>),
    /// Subset of the ground set `{0, .., k-1}` as a bitmask.
    Subset(u64),
    /// Index into the carrier of a table semiring.
    Table(u16),
}

impl Scalar {
    pub fn nat(n: u64) -> Self {
        Scalar::Nat(BigUint::from(n))
    }
}

/// Builtin semiring families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinKind {
    Naturals,
    Boolean,
    Xn,
    SubsetLattice,
}

impl BuiltinKind {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "naturals" | "nat" | "N" => Ok(BuiltinKind::Naturals),
            "boolean" | "bool" | "B" => Ok(BuiltinKind::Boolean),
            "xn" | "Xn" | "X_n" => Ok(BuiltinKind::Xn),
            "subset_lattice" | "subsets" => Ok(BuiltinKind::SubsetLattice),
            other => Err(Error::Parameter(format!("unknown builtin semiring `{other}`"))),
        }
    }
}

/// A finite semiring given by explicit operation tables over indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSemiring {
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<u16>>,
    pub mul: Vec<Vec<u16>>,
    pub zero: u16,
    pub one: u16,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Naturals,
    Boolean,
    Xn(u32),
    Subsets(u32),
    Table(Arc<TableSemiring>),
}

/// Handle to a commutative semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiring {
    repr: Repr,
}

impl Semiring {
    pub fn naturals() -> Self {
        Semiring { repr: Repr::Naturals }
    }

    pub fn boolean() -> Self {
        Semiring { repr: Repr::Boolean }
    }

    /// `X_n = {-inf, 0, 1, .., n}` with `max` as addition and `min(i + h, n)`
    /// as multiplication.
    pub fn xn(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("X_n requires n >= 1".into()));
        }
        Ok(Semiring { repr: Repr::Xn(n) })
    }

    /// Subsets of a ground set of size `k` under union and intersection.
    pub fn subset_lattice(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_SUBSET_GROUND {
            return Err(Error::Parameter(format!(
                "subset lattice ground set size must be in 1..={MAX_SUBSET_GROUND}, got {k}"
            )));
        }
        Ok(Semiring { repr: Repr::Subsets(k) })
    }

    pub fn builtin(kind: BuiltinKind, param: Option<u32>) -> Result<Self> {
        match kind {
            BuiltinKind::Naturals => Ok(Self::naturals()),
            BuiltinKind::Boolean => Ok(Self::boolean()),
            BuiltinKind::Xn => {
                Self::xn(param.ok_or_else(|| Error::Parameter("X_n requires parameter n".into()))?)
            }
            BuiltinKind::SubsetLattice => Self::subset_lattice(
                param.ok_or_else(|| Error::Parameter("subset lattice requires ground set size".into()))?,
            ),
        }
    }

    /// Validates user tables (closure and every semiring axiom) and builds the semiring.
    pub fn from_tables(tables: &FiniteTables) -> Result<Self> {
        let report = tables.check(u64::MAX);
        if !report.passed() {
            let detail = report
                .witnesses
                .first()
                .map(|w| format!("{} at ({})", w.law, w.inputs.join(", ")))
                .unwrap_or_default();
            return Err(Error::Parameter(format!(
                "tables for `{}` do not define a commutative semiring: {detail}",
                tables.name
            )));
        }
        let index = |label: &str| tables.index_of(label).map(|i| i as u16);
        let table = |t: &Vec<Vec<String>>| -> Vec<Vec<u16>> {
            t.iter()
                .map(|row| row.iter().map(|c| index(c).expect("closure checked")).collect())
                .collect()
        };
        Ok(Semiring {
            repr: Repr::Table(Arc::new(TableSemiring {
                name: tables.name.clone(),
                carrier: tables.carrier.clone(),
                add: table(&tables.add),
                mul: table(&tables.mul),
                zero: index(&tables.zero).expect("checked"),
                one: index(&tables.one).expect("checked"),
            })),
        })
    }

    /// The ring `Z/m` as a finite table semiring.
    pub fn integers_mod(m: u32) -> Result<Self> {
        if !(2..=256).contains(&m) {
            return Err(Error::Parameter(format!("Z/m requires 2 <= m <= 256, got {m}")));
        }
        Self::from_tables(&FiniteTables::integers_mod(m))
    }

    pub fn name(&self) -> String {
        match &self.repr {
            Repr::Naturals => "naturals".into(),
            Repr::Boolean => "boolean".into(),
            Repr::Xn(n) => format!("X_{n}"),
            Repr::Subsets(k) => format!("subsets({k})"),
            Repr::Table(t) => t.name.clone(),
        }
    }

    pub fn table(&self) -> Option<&TableSemiring> {
        match &self.repr {
            Repr::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn builtin_kind(&self) -> Option<(BuiltinKind, Option<u32>)> {
        match self.repr {
            Repr::Naturals => Some((BuiltinKind::Naturals, None)),
            Repr::Boolean => Some((BuiltinKind::Boolean, None)),
            Repr::Xn(n) => Some((BuiltinKind::Xn, Some(n))),
            Repr::Subsets(k) => Some((BuiltinKind::SubsetLattice, Some(k))),
            Repr::Table(_) => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.repr {
            Repr::Naturals => Scalar::Nat(BigUint::zero()),
            Repr::Boolean => Scalar::Bool(false),
            Repr::Xn(_) => Scalar::Capped(None),
            Repr::Subsets(_) => Scalar::Subset(0),
            Repr::Table(t) => Scalar::Table(t.zero),
        }
    }

    pub fn one(&self) -> Scalar {
        match &self.repr {
            Repr::Naturals => Scalar::Nat(BigUint::one()),
            Repr::Boolean => Scalar::Bool(true),
            Repr::Xn(_) => Scalar::Capped(Some(0)),
            Repr::Subsets(k) => Scalar::Subset(full_mask(*k)),
            Repr::Table(t) => Scalar::Table(t.one),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// Whether `a` is a well-formed element of this semiring.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&self.repr, a) {
            (Repr::Naturals, Scalar::Nat(_)) | (Repr::Boolean, Scalar::Bool(_)) => true,
            (Repr::Xn(n), Scalar::Capped(v)) => v.is_none_or(|v| v <= *n),
            (Repr::Subsets(k), Scalar::Subset(m)) => m & !full_mask(*k) == 0,
            (Repr::Table(t), Scalar::Table(i)) => (*i as usize) < t.carrier.len(),
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.repr, a, b) {
            (Repr::Naturals, Scalar::Nat(x), Scalar::Nat(y)) => Scalar::Nat(x + y),
            (Repr::Boolean, Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x || *y),
            (Repr::Xn(_), Scalar::Capped(x), Scalar::Capped(y)) => Scalar::Capped((*x).max(*y)),
            (Repr::Subsets(_), Scalar::Subset(x), Scalar::Subset(y)) => Scalar::Subset(x | y),
            (Repr::Table(t), Scalar::Table(x), Scalar::Table(y)) => {
                Scalar::Table(t.add[*x as usize][*y as usize])
            }
            _ => panic!("scalar {a:?} or {b:?} does not belong to {}", self.name()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.repr, a, b) {
            (Repr::Naturals, Scalar::Nat(x), Scalar::Nat(y)) => Scalar::Nat(x * y),
            (Repr::Boolean, Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x && *y),
            (Repr::Xn(n), Scalar::Capped(x), Scalar::Capped(y)) => match (x, y) {
                (Some(x), Some(y)) => Scalar::Capped(Some((x + y).min(*n))),
                _ => Scalar::Capped(None),
            },
            (Repr::Subsets(_), Scalar::Subset(x), Scalar::Subset(y)) => Scalar::Subset(x & y),
            (Repr::Table(t), Scalar::Table(x), Scalar::Table(y)) => {
                Scalar::Table(t.mul[*x as usize][*y as usize])
            }
            _ => panic!("scalar {a:?} or {b:?} does not belong to {}", self.name()),
        }
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn pow(&self, a: &Scalar, exp: u64) -> Scalar {
        let mut out = self.one();
        for _ in 0..exp {
            out = self.mul(&out, a);
        }
        out
    }

    /// The image of the natural number `n` (that is, `1 + 1 + .. + 1`).
    pub fn from_natural(&self, n: &BigUint) -> Scalar {
        match &self.repr {
            Repr::Naturals => Scalar::Nat(n.clone()),
            _ if n.is_zero() => self.zero(),
            Repr::Boolean | Repr::Xn(_) | Repr::Subsets(_) => self.one(),
            Repr::Table(_) => {
                // double-and-add over the bits of n
                let mut acc = self.zero();
                let one = self.one();
                for bit in (0..n.bits()).rev() {
                    acc = self.add(&acc, &acc);
                    if n.bit(bit) {
                        acc = self.add(&acc, &one);
                    }
                }
                acc
            }
        }
    }

    pub fn from_u64(&self, n: u64) -> Scalar {
        self.from_natural(&BigUint::from(n))
    }

    /// Additive inverse, when one exists.
    pub fn negate(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        match &self.repr {
            Repr::Table(t) => {
                let Scalar::Table(i) = a else { return None };
                (0..t.carrier.len() as u16)
                    .find(|&j| t.add[*i as usize][j as usize] == t.zero)
                    .map(Scalar::Table)
            }
            _ => None,
        }
    }

    /// Whether every element has an additive inverse.
    pub fn is_ring(&self) -> bool {
        match &self.repr {
            Repr::Table(t) => (0..t.carrier.len() as u16).all(|i| self.negate(&Scalar::Table(i)).is_some()),
            _ => false,
        }
    }

    pub fn is_additively_idempotent(&self) -> bool {
        let one = self.one();
        self.add(&one, &one) == one
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.repr, Repr::Naturals)
    }

    pub fn cardinality(&self) -> Option<u64> {
        match &self.repr {
            Repr::Naturals => None,
            Repr::Boolean => Some(2),
            Repr::Xn(n) => Some(*n as u64 + 2),
            Repr::Subsets(k) => Some(1u64 << k),
            Repr::Table(t) => Some(t.carrier.len() as u64),
        }
    }

    /// All elements in a fixed order.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match &self.repr {
            Repr::Naturals => Err(Error::Unsupported(
                "the naturals have no finite enumeration".into(),
            )),
            Repr::Boolean => Ok(vec![Scalar::Bool(false), Scalar::Bool(true)]),
            Repr::Xn(n) => Ok(std::iter::once(Scalar::Capped(None))
                .chain((0..=*n).map(|i| Scalar::Capped(Some(i))))
                .collect()),
            Repr::Subsets(k) => Ok((0..(1u64 << k)).map(Scalar::Subset).collect()),
            Repr::Table(t) => Ok((0..t.carrier.len() as u16).map(Scalar::Table).collect()),
        }
    }

    /// Parses an element literal.
    pub fn parse(&self, token: &str) -> Result<Scalar> {
        let token = token.trim();
        let bad = || Error::Parameter(format!("`{token}` is not an element of {}", self.name()));
        match &self.repr {
            Repr::Naturals => token.parse::<BigUint>().map(Scalar::Nat).map_err(|_| bad()),
            Repr::Boolean => match token {
                "0" | "false" => Ok(Scalar::Bool(false)),
                "1" | "true" => Ok(Scalar::Bool(true)),
                _ => Err(bad()),
            },
            Repr::Xn(n) => {
                if matches!(token, "-inf" | "-∞") {
                    return Ok(Scalar::Capped(None));
                }
                let v: u32 = token.parse().map_err(|_| bad())?;
                if v > *n {
                    return Err(bad());
                }
                Ok(Scalar::Capped(Some(v)))
            }
            Repr::Subsets(k) => {
                let inner = token
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(bad)?;
                let mut mask = 0u64;
                for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let i: u32 = part.parse().map_err(|_| bad())?;
                    if i >= *k {
                        return Err(bad());
                    }
                    mask |= 1 << i;
                }
                Ok(Scalar::Subset(mask))
            }
            Repr::Table(t) => t
                .carrier
                .iter()
                .position(|c| c == token)
                .map(|i| Scalar::Table(i as u16))
                .ok_or_else(bad),
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match (&self.repr, a) {
            (_, Scalar::Nat(n)) => n.to_string(),
            (_, Scalar::Bool(b)) => u8::from(*b).to_string(),
            (_, Scalar::Capped(None)) => "-inf".into(),
            (_, Scalar::Capped(Some(v))) => v.to_string(),
            (_, Scalar::Subset(m)) => {
                let items: Vec<String> = (0..64).filter(|i| m >> i & 1 == 1).map(|i| i.to_string()).collect();
                format!("{{{}}}", items.join(","))
            }
            (Repr::Table(t), Scalar::Table(i)) => t.carrier[*i as usize].clone(),
            (_, Scalar::Table(i)) => format!("#{i}"),
        }
    }

    /// Deterministic pseudo-random element; naturals are drawn from `0..=bound`.
    pub fn sample(&self, rng: &mut ChaCha8Rng, bound: u64) -> Scalar {
        match &self.repr {
            Repr::Naturals => Scalar::nat(rng.random_range(0..=bound)),
            Repr::Boolean => Scalar::Bool(rng.random()),
            Repr::Xn(n) => {
                let v = rng.random_range(0..=*n + 1);
                Scalar::Capped(if v == 0 { None } else { Some(v - 1) })
            }
            Repr::Subsets(k) => Scalar::Subset(rng.random::<u64>() & full_mask(*k)),
            Repr::Table(t) => Scalar::Table(rng.random_range(0..t.carrier.len() as u16)),
        }
    }

    pub(crate) fn check_same(&self, other: &Semiring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SemiringMismatch { left: self.name(), right: other.name() })
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn full_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// `make_builtin_semiring` entry point.
pub fn make_builtin_semiring(kind: BuiltinKind, param: Option<u32>) -> Result<Semiring> {
    Semiring::builtin(kind, param)
}

/// Lists every element of a finite semiring exactly once.
pub fn enumerate_elements(s: &Semiring) -> Result<Vec<Scalar>> {
    s.elements()
}

/// User-supplied operation tables over string labels, not yet validated.
///
/// Table entries may name labels outside the carrier; the axiom check reports
/// them as closure violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTables {
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub zero: String,
    pub one: String,
}

impl FiniteTables {
    pub fn integers_mod(m: u32) -> Self {
        let carrier: Vec<String> = (0..m).map(|i| i.to_string()).collect();
        let table = |op: fn(u32, u32) -> u32| -> Vec<Vec<String>> {
            (0..m).map(|a| (0..m).map(|b| (op(a, b) % m).to_string()).collect()).collect()
        };
        FiniteTables {
            name: format!("Z/{m}"),
            carrier,
            add: table(|a, b| a + b),
            mul: table(|a, b| a * b),
            zero: "0".into(),
            one: "1".into(),
        }
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == label)
    }

    /// Closure, shape and all commutative semiring axioms, exhaustively when
    /// `|S|^3 <= budget` and otherwise on `budget` sampled triples.
    pub fn check(&self, budget: u64) -> CheckReport {
        let mut report = CheckReport::new(format!("semiring axioms [{}]", self.name));
        let n = self.carrier.len();
        let shape_ok = self.add.len() == n
            && self.mul.len() == n
            && self.add.iter().chain(&self.mul).all(|row| row.len() == n);
        if !shape_ok {
            report.fail_note("tables", format!("operation tables must be {n}x{n}"));
            return report;
        }
        let Some(zero) = self.index_of(&self.zero) else {
            report.fail_note("zero in carrier", format!("zero `{}` is not in the carrier", self.zero));
            return report;
        };
        let Some(one) = self.index_of(&self.one) else {
            report.fail_note("one in carrier", format!("one `{}` is not in the carrier", self.one));
            return report;
        };
        let carrier = self.carrier.clone();
        let lookup = |table: &Vec<Vec<String>>, a: usize, b: usize| -> std::result::Result<usize, String> {
            let label = &table[a][b];
            self.index_of(label).ok_or_else(|| label.clone())
        };
        // closure is checked over every table cell before anything else
        for (op, table) in [("add", &self.add), ("mul", &self.mul)] {
            for a in 0..n {
                for b in 0..n {
                    report.count();
                    if let Err(label) = lookup(table, a, b) {
                        report.fail_scalar(
                            &format!("closure of {op}"),
                            vec![carrier[a].clone(), carrier[b].clone()],
                            label,
                            "an element of the carrier".into(),
                        );
                    }
                }
            }
        }
        if !report.passed() {
            return report;
        }
        let add = |a: &usize, b: &usize| lookup(&self.add, *a, *b).ok();
        let mul = |a: &usize, b: &usize| lookup(&self.mul, *a, *b).ok();
        let elements: Vec<usize> = (0..n).collect();
        check_laws(
            &mut report,
            &LawInputs {
                elements: Some(&elements),
                zero,
                one,
                add: &add,
                mul: &mul,
                show: &|a: &usize| carrier[*a].clone(),
                sample: &|rng: &mut ChaCha8Rng| rng.random_range(0..n),
            },
            budget,
            DEFAULT_SEED,
        );
        report
    }
}

struct LawInputs<'a, E> {
    elements: Option<&'a [E]>,
    zero: E,
    one: E,
    add: &'a dyn Fn(&E, &E) -> Option<E>,
    mul: &'a dyn Fn(&E, &E) -> Option<E>,
    show: &'a dyn Fn(&E) -> String,
    sample: &'a dyn Fn(&mut ChaCha8Rng) -> E,
}

fn check_laws<E: Clone + PartialEq>(report: &mut CheckReport, laws: &LawInputs<'_, E>, budget: u64, seed: u64) {
    let show = laws.show;
    if laws.zero == laws.one {
        report.fail_scalar("zero != one", vec![], show(&laws.zero), show(&laws.one));
    }
    let exhaustive = laws
        .elements
        .filter(|els| (els.len() as u128).pow(3) <= budget as u128);
    let triples: Vec<(E, E, E)> = match exhaustive {
        Some(els) => {
            let mut out = Vec::with_capacity(els.len().pow(3));
            for a in els {
                for b in els {
                    for c in els {
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            out
        }
        None => {
            report.seed = Some(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..budget.max(1))
                .map(|_| ((laws.sample)(&mut rng), (laws.sample)(&mut rng), (laws.sample)(&mut rng)))
                .collect()
        }
    };
    if exhaustive.is_some() {
        report.note(format!("exhaustive over {} triples", triples.len()));
    } else {
        report.note(format!("sampled {} triples", triples.len()));
    }
    let opt = |x: Option<E>| x.map(|v| show(&v)).unwrap_or_else(|| "<outside carrier>".into());
    for (a, b, c) in &triples {
        let inputs = vec![show(a), show(b), show(c)];
        let add = |x: &E, y: &E| (laws.add)(x, y);
        let mul = |x: &E, y: &E| (laws.mul)(x, y);
        let both = |f: &dyn Fn(&E, &E) -> Option<E>, x: Option<E>, y: &E| x.and_then(|x| f(&x, y));
        let mut law = |name: &str, lhs: Option<E>, rhs: Option<E>| {
            report.count();
            if lhs.is_none() || lhs != rhs {
                report.fail_scalar(name, inputs.clone(), opt(lhs), opt(rhs));
            }
        };
        law("additive associativity", both(&add, add(a, b), c), add(b, c).and_then(|bc| add(a, &bc)));
        law("additive commutativity", add(a, b), add(b, a));
        law("multiplicative associativity", both(&mul, mul(a, b), c), mul(b, c).and_then(|bc| mul(a, &bc)));
        law("multiplicative commutativity", mul(a, b), mul(b, a));
        law(
            "distributivity",
            add(b, c).and_then(|bc| mul(a, &bc)),
            match (mul(a, b), mul(a, c)) {
                (Some(x), Some(y)) => add(&x, &y),
                _ => None,
            },
        );
        law("absorbing zero", mul(a, &laws.zero), Some(laws.zero.clone()));
        law("multiplicative unit", mul(a, &laws.one), Some(a.clone()));
        law("additive unit", add(a, &laws.zero), Some(a.clone()));
    }
}

/// Verifies the commutative semiring axioms of `s`, exhaustively when the
/// carrier is enumerable and `|S|^3 <= budget`, otherwise on `budget`
/// deterministic samples.
pub fn semiring_axiom_check(s: &Semiring, budget: u64) -> CheckReport {
    semiring_axiom_check_seeded(s, budget, DEFAULT_SEED)
}

pub fn semiring_axiom_check_seeded(s: &Semiring, budget: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("semiring axioms [{}]", s.name()));
    let elements = s.elements().ok();
    let add = |a: &Scalar, b: &Scalar| Some(s.add(a, b)).filter(|x| s.contains(x));
    let mul = |a: &Scalar, b: &Scalar| Some(s.mul(a, b)).filter(|x| s.contains(x));
    check_laws(
        &mut report,
        &LawInputs {
            elements: elements.as_deref(),
            zero: s.zero(),
            one: s.one(),
            add: &add,
            mul: &mul,
            show: &|a: &Scalar| s.format(a),
            sample: &|rng: &mut ChaCha8Rng| s.sample(rng, 1 << 40),
        },
        budget.max(1),
        seed,
    );
    if s.is_additively_idempotent() {
        if let Ok(els) = s.elements() {
            for a in &els {
                report.count();
                let aa = s.add(a, a);
                if &aa != a {
                    report.fail_scalar("additive idempotency", vec![s.format(a)], s.format(&aa), s.format(a));
                }
            }
        }
    }
    report
}

/// Wraps a scalar as a vector over the one-dimensional ground basis, for reports.
pub(crate) fn scalar_vector(s: &Semiring, value: Scalar) -> Vector {
    Vector::term(s, value, BasisId::ground())
}
