use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::congruence::CongruenceQuotient;
use super::{BasisId, Functional, LinearMap, Vector};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::semiring::{Scalar, Semiring, DEFAULT_SEED};

/// A canonicalizing map on vectors realizing quotient equality.
pub trait Normalizer: Send + Sync {
    fn name(&self) -> String;
    fn normalize(&self, v: &Vector) -> Result<Vector>;
    /// Defining relations `(u, v)`, used by compatibility checks.
    fn generators(&self, _s: &Semiring) -> Vec<(Vector, Vector)> {
        Vec::new()
    }
}

/// How equality is decided in a carrier.
#[derive(Clone, Default)]
pub enum Quotient {
    #[default]
    Free,
    Normalizer(Arc<dyn Normalizer>),
    Congruence(Arc<CongruenceQuotient>),
}

impl fmt::Debug for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::Free => f.write_str("Free"),
            Quotient::Normalizer(n) => write!(f, "Normalizer({})", n.name()),
            Quotient::Congruence(c) => write!(f, "Congruence({} generators)", c.generators().len()),
        }
    }
}

impl Quotient {
    pub fn is_free(&self) -> bool {
        matches!(self, Quotient::Free)
    }

    pub fn mode(&self) -> &'static str {
        match self {
            Quotient::Free => "free",
            Quotient::Normalizer(_) => "normalizer",
            Quotient::Congruence(_) => "finite_congruence",
        }
    }

    /// Canonical representative of the class of `v`. Vectors over pairs of
    /// congruence basis elements are reduced in the induced tensor congruence.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        match self {
            Quotient::Free => Ok(v.clone()),
            Quotient::Normalizer(n) => n.normalize(v),
            Quotient::Congruence(c) => {
                if c.covers(v) {
                    return c.reduce(v);
                }
                let sq = c.tensor_square()?;
                if sq.covers(v) {
                    return sq.reduce(v);
                }
                let outside = v.support().find(|b| !sq.basis().contains(b)).expect("uncovered term");
                Err(Error::Configuration(format!(
                    "finite congruence cannot decide equality on basis element {outside}"
                )))
            }
        }
    }

    pub fn equal(&self, u: &Vector, v: &Vector) -> Result<bool> {
        if u == v {
            return Ok(true);
        }
        match self {
            Quotient::Free => Ok(false),
            _ => Ok(self.reduce(u)? == self.reduce(v)?),
        }
    }

    pub fn generators(&self, s: &Semiring) -> Vec<(Vector, Vector)> {
        match self {
            Quotient::Free => Vec::new(),
            Quotient::Normalizer(n) => n.generators(s),
            Quotient::Congruence(c) => c.generators().to_vec(),
        }
    }
}

/// Diagnostic for relations `u + v ~ 0` over an additively idempotent semiring.
pub fn idempotent_collapse_diagnostic(s: &Semiring, what: &str) -> Error {
    Error::Parameter(format!(
        "{what} over the additively idempotent semiring {s} collapses: u + v ~ 0 forces u ~ u + (u + v) ~ 0 and likewise v ~ 0"
    ))
}

type SignFn = dyn Fn(&BasisId) -> Option<(BasisId, bool)> + Send + Sync;
type NegFn = dyn Fn(&BasisId) -> Option<BasisId> + Send + Sync;

/// Relations `a + b ~ 0` for disjoint pairs of basis elements, extended to
/// tensor products: a pair basis element is signed when a factor is, with the
/// sign being the parity of its signed factors.
pub struct NullPairs {
    semiring: Semiring,
    name: String,
    /// Positive partner and sign of a signed non-pair element.
    atom_sign: Arc<SignFn>,
    /// Negative partner of a positive non-pair element.
    atom_negative: Arc<NegFn>,
    pairs: Vec<(BasisId, BasisId)>,
}

impl fmt::Debug for NullPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NullPairs({})", self.name)
    }
}

fn check_null_pair_semiring(s: &Semiring) -> Result<()> {
    if s.is_additively_idempotent() {
        return Err(idempotent_collapse_diagnostic(s, "null-pair quotient"));
    }
    if !(s.builtin_kind().is_some() || s.is_ring()) {
        return Err(Error::Unsupported(format!("null-pair normalizer needs the naturals or a ring, got {s}")));
    }
    Ok(())
}

impl NullPairs {
    pub fn new(s: &Semiring, pairs: Vec<(BasisId, BasisId)>) -> Result<Self> {
        check_null_pair_semiring(s)?;
        let mut sign = BTreeMap::new();
        let mut negative = BTreeMap::new();
        for (p, n) in &pairs {
            if p == n || sign.contains_key(p) || sign.contains_key(n) {
                return Err(Error::Parameter(format!("null pairs must be disjoint, offending pair ({p}, {n})")));
            }
            sign.insert(p.clone(), (p.clone(), false));
            sign.insert(n.clone(), (p.clone(), true));
            negative.insert(p.clone(), n.clone());
        }
        let listed: Vec<String> = pairs.iter().map(|(p, n)| format!("{p}+{n}~0")).collect();
        Ok(NullPairs {
            semiring: s.clone(),
            name: format!("null pairs {}", listed.join(", ")),
            atom_sign: Arc::new(move |b| sign.get(b).cloned()),
            atom_negative: Arc::new(move |b| negative.get(b).cloned()),
            pairs,
        })
    }

    /// Infinitely many pairs given by a rule. `sample` lists the relations
    /// reported as generators.
    pub fn with_rule(
        s: &Semiring,
        name: impl Into<String>,
        sign: impl Fn(&BasisId) -> Option<(BasisId, bool)> + Send + Sync + 'static,
        negative: impl Fn(&BasisId) -> Option<BasisId> + Send + Sync + 'static,
        sample: Vec<(BasisId, BasisId)>,
    ) -> Result<Self> {
        check_null_pair_semiring(s)?;
        Ok(NullPairs {
            semiring: s.clone(),
            name: name.into(),
            atom_sign: Arc::new(sign),
            atom_negative: Arc::new(negative),
            pairs: sample,
        })
    }

    pub fn into_quotient(self) -> Quotient {
        Quotient::Normalizer(Arc::new(self))
    }

    pub fn pairs(&self) -> &[(BasisId, BasisId)] {
        &self.pairs
    }

    /// Positive representative and sign, or `None` for unsigned elements.
    pub fn signed(&self, b: &BasisId) -> Option<(BasisId, bool)> {
        if let Some(x) = (self.atom_sign)(b) {
            return Some(x);
        }
        let (l, r) = b.as_pair()?;
        let sl = self.signed(l);
        let sr = self.signed(r);
        if sl.is_none() && sr.is_none() {
            return None;
        }
        let (cl, nl) = sl.unwrap_or_else(|| (l.clone(), false));
        let (cr, nr) = sr.unwrap_or_else(|| (r.clone(), false));
        Some((BasisId::pair(cl, cr), nl != nr))
    }

    /// The element representing `-b` for a positive representative `b`.
    pub fn negative(&self, b: &BasisId) -> BasisId {
        if let Some(n) = (self.atom_negative)(b) {
            return n;
        }
        match b.as_pair() {
            Some((l, r)) if self.signed(l).is_some() => BasisId::pair(self.negative(l), r.clone()),
            Some((l, r)) => BasisId::pair(l.clone(), self.negative(r)),
            None => unreachable!("unsigned element {b} has no negative"),
        }
    }
}

impl Normalizer for NullPairs {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn normalize(&self, v: &Vector) -> Result<Vector> {
        let s = &self.semiring;
        let mut out = Vector::zero(s);
        let mut groups: BTreeMap<BasisId, (Scalar, Scalar)> = BTreeMap::new();
        for (b, c) in v.iter() {
            match self.signed(b) {
                None => out.add_term(b.clone(), c.clone()),
                Some((pos, neg)) => {
                    let e = groups.entry(pos).or_insert_with(|| (s.zero(), s.zero()));
                    let slot = if neg { &mut e.1 } else { &mut e.0 };
                    *slot = s.add(slot, c);
                }
            }
        }
        for (pos, (p, n)) in groups {
            match (&p, &n) {
                (Scalar::Nat(p), Scalar::Nat(n)) => {
                    if p >= n {
                        out.add_term(pos, Scalar::Nat(p - n));
                    } else {
                        let neg = self.negative(&pos);
                        out.add_term(neg, Scalar::Nat(n - p));
                    }
                }
                _ => {
                    let minus = s.negate(&n).ok_or_else(|| Error::Unsupported(format!("{s} lacks negatives")))?;
                    out.add_term(pos, s.add(&p, &minus));
                }
            }
        }
        Ok(out)
    }

    fn generators(&self, s: &Semiring) -> Vec<(Vector, Vector)> {
        self.pairs
            .iter()
            .map(|(p, n)| (Vector::sum_of(s, [p.clone(), n.clone()]), Vector::zero(s)))
            .collect()
    }
}

/// `x + y ~ 0` style quotient over the naturals or a ring.
pub fn null_pairs(s: &Semiring, pairs: Vec<(BasisId, BasisId)>) -> Result<Quotient> {
    Ok(NullPairs::new(s, pairs)?.into_quotient())
}

/// Normalizer given by an arbitrary function, for user-defined quotients.
pub struct FnNormalizer<F> {
    pub name: String,
    pub f: F,
    pub generators: Vec<(Vector, Vector)>,
}

impl<F: Fn(&Vector) -> Result<Vector> + Send + Sync> Normalizer for FnNormalizer<F> {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn normalize(&self, v: &Vector) -> Result<Vector> {
        (self.f)(v)
    }
    fn generators(&self, _s: &Semiring) -> Vec<(Vector, Vector)> {
        self.generators.clone()
    }
}

pub fn normalizer_fn(
    name: impl Into<String>,
    f: impl Fn(&Vector) -> Result<Vector> + Send + Sync + 'static,
) -> Quotient {
    Quotient::Normalizer(Arc::new(FnNormalizer { name: name.into(), f, generators: Vec::new() }))
}

fn random_vector(s: &Semiring, basis: &[BasisId], rng: &mut ChaCha8Rng) -> Vector {
    Vector::from_terms(s, basis.iter().map(|b| (s.sample(rng, 4), b.clone())))
}

/// Samples the normalizer laws: idempotency, zero, additivity and scalar
/// compatibility, on vectors over `probe`.
pub fn check_normalizer(q: &Quotient, s: &Semiring, probe: &[BasisId], samples: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("normalizer laws [{}]", q.mode()));
    report.seed = Some(DEFAULT_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let n = |v: &Vector| q.reduce(v);
    let run = |report: &mut CheckReport, rng: &mut ChaCha8Rng| -> Result<()> {
        let zero = Vector::zero(s);
        report.expect_eq("n(0) = 0", &[], &n(&zero)?, &zero, n(&zero)? == zero);
        for _ in 0..samples.max(1) {
            let u = random_vector(s, probe, rng);
            let v = random_vector(s, probe, rng);
            let c = s.sample(rng, 4);
            let inputs = vec![u.to_string(), v.to_string(), s.format(&c)];
            let nu = n(&u)?;
            let nnu = n(&nu)?;
            report.expect_eq("idempotency", &inputs, &nnu, &nu, nnu == nu);
            let lhs = n(&u.add(&v)?)?;
            let rhs = n(&nu.add(&n(&v)?)?)?;
            report.expect_eq("additivity", &inputs, &lhs, &rhs, lhs == rhs);
            let lhs = n(&u.scale(&c))?;
            let rhs = n(&nu.scale(&c))?;
            report.expect_eq("scalar compatibility", &inputs, &lhs, &rhs, lhs == rhs);
        }
        Ok(())
    };
    if let Err(e) = run(&mut report, &mut rng) {
        report.fail_note("evaluation", e.to_string());
    }
    report
}

/// Arity of a structure map for quotient compatibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    Unary,
    Binary,
}

/// Checks that `map` respects the relations of `source`, judged by the
/// equality of `target`.
pub fn check_quotient_compat(
    map: &LinearMap,
    arity: Arity,
    source: &Quotient,
    target: &Quotient,
    probe: &[BasisId],
) -> CheckReport {
    let s = map.semiring().clone();
    let mut report = CheckReport::new(format!("quotient compatibility of {}", map.name()));
    let gens = source.generators(&s);
    if gens.is_empty() {
        report.note("no relations to respect");
    }
    let run = |report: &mut CheckReport| -> Result<()> {
        for (u, v) in &gens {
            match arity {
                Arity::Unary => {
                    let (fu, fv) = (map.apply(u)?, map.apply(v)?);
                    let eq = target.equal(&fu, &fv)?;
                    report.expect_eq("relation preserved", &[u.to_string(), v.to_string()], &fu, &fv, eq);
                }
                Arity::Binary => {
                    for w in probe {
                        let w = Vector::basis(&s, w.clone());
                        let inputs = vec![u.to_string(), v.to_string(), w.to_string()];
                        let (l, r) = (map.apply2(u, &w)?, map.apply2(v, &w)?);
                        let eq = target.equal(&l, &r)?;
                        report.expect_eq("relation preserved on the left", &inputs, &l, &r, eq);
                        let (l, r) = (map.apply2(&w, u)?, map.apply2(&w, v)?);
                        let eq = target.equal(&l, &r)?;
                        report.expect_eq("relation preserved on the right", &inputs, &l, &r, eq);
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.fail_note("evaluation", e.to_string());
    }
    report
}

/// Compatibility of a scalar-valued map with the relations of `source`.
pub fn check_functional_quotient_compat(f: &Functional, source: &Quotient) -> CheckReport {
    let s = f.semiring().clone();
    let mut report = CheckReport::new(format!("quotient compatibility of {}", f.name()));
    for (u, v) in source.generators(&s) {
        match (f.eval(&u), f.eval(&v)) {
            (Ok(a), Ok(b)) => {
                let lhs = Vector::term(&s, a, BasisId::ground());
                let rhs = Vector::term(&s, b, BasisId::ground());
                let eq = lhs == rhs;
                report.expect_eq("relation preserved", &[u.to_string(), v.to_string()], &lhs, &rhs, eq);
            }
            (Err(e), _) | (_, Err(e)) => report.fail_note("evaluation", e.to_string()),
        }
    }
    report
}
