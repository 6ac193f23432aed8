//! Integrals, invariants and coinvariants, the maps γ and ω, the Hopf module
//! isomorphism ψ, finite duals, and exhaustive element searches.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::search::{candidate_space, decode, par_filter, vector_from};
use crate::semimodule::{contract_right, reassociate_left, BasisId, Functional, LinearMap, Quotient, Vector};
use crate::semiring::{scalar_vector, Scalar, Semiring, DEFAULT_SEED};
use crate::structures::{
    convolve_functionals, split, BisemialgebraDesc, Carrier, HopfDesc, SemialgebraDesc, SemicoalgebraDesc,
    StructureDesc,
};

pub use crate::search::DEFAULT_SEARCH_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn basis_vec(s: &Semiring, b: &BasisId) -> Vector {
    Vector::basis(s, b.clone())
}

// ---------------------------------------------------------------------------
// Integrals on B

#[derive(Clone, Debug)]
pub struct IntegralReport {
    pub is_integral: bool,
    pub is_total: bool,
    pub report: CheckReport,
}

/// Coproduct terms `(c, b₁, b₂)` of a basis element.
fn delta_terms(b: &BisemialgebraDesc, u: &BasisId) -> Result<Vec<(Scalar, BasisId, BasisId)>> {
    b.delta()
        .on_basis(u)?
        .iter()
        .map(|(p, c)| split(p).map(|(l, r)| (c.clone(), l.clone(), r.clone())))
        .collect()
}

/// `Σ b₁ t(b₂)` (left) or `Σ t(b₁) b₂` (right).
fn integral_side(
    s: &Semiring,
    terms: &[(Scalar, BasisId, BasisId)],
    side: Side,
    t: impl Fn(&BasisId) -> Result<Scalar>,
) -> Result<Vector> {
    let mut out = Vector::zero(s);
    for (c, l, r) in terms {
        let (kept, fed) = match side {
            Side::Left => (l, r),
            Side::Right => (r, l),
        };
        let v = s.mul(c, &t(fed)?);
        out.add_term(kept.clone(), v);
    }
    Ok(out)
}

/// Checks `Σ b₁ t(b₂) = t(b) 1_B` (or its mirror) on basis elements of degree
/// at most `d`, and totality `t(1_B) = 1`.
pub fn verify_integral_on(t: &Functional, b: &BisemialgebraDesc, side: Side, d: usize) -> Result<IntegralReport> {
    let s = b.semiring();
    s.check_same(t.semiring())?;
    let mut report = CheckReport::new(format!("{side} integral {} on {}", t.name(), b.name())).with_bound(d);
    for u in b.carrier().up_to(d) {
        let lhs = integral_side(s, &delta_terms(b, &u)?, side, |x| t.on_basis(x))?;
        let rhs = b.unit().scale(&t.on_basis(&u)?);
        let eq = b.quotient().equal(&lhs, &rhs)?;
        report.expect_eq(&format!("{side} integral"), &[u.to_string()], &lhs, &rhs, eq);
    }
    let is_integral = report.passed();
    let is_total = s.is_one(&t.eval(b.unit())?);
    if !is_total {
        report.note("not total: t(1) ≠ 1");
    }
    Ok(IntegralReport { is_integral, is_total, report })
}

/// Checks `f ∗ t = f(1_B) t` for `ε`, every coordinate functional and
/// `samples` seeded random functionals on the basis of degree at most `d`.
pub fn verify_integral_ideal_property(t: &Functional, b: &BisemialgebraDesc, d: usize, samples: u64) -> Result<CheckReport> {
    let s = b.semiring();
    let basis = b.carrier().up_to(d);
    let mut fs = vec![b.epsilon().clone()];
    fs.extend(basis.iter().map(|u| Functional::delta(s, u.clone()).renamed(format!("{u}*"))));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for i in 0..samples {
        let values = basis.iter().map(|u| (u.clone(), s.sample(&mut rng, 4))).collect();
        fs.push(Functional::finite_support(format!("f{i}"), s, values));
    }
    let mut report = CheckReport::new(format!("integral ideal property of {}", t.name())).with_bound(d);
    report.seed = Some(DEFAULT_SEED);
    for f in &fs {
        let ft = convolve_functionals(f, t, &b.coalgebra)?;
        let f1 = f.eval(b.unit())?;
        for u in &basis {
            let lhs = scalar_vector(s, ft.on_basis(u)?);
            let rhs = scalar_vector(s, s.mul(&f1, &t.on_basis(u)?));
            let eq = lhs == rhs;
            report.expect_eq("f ∗ t = f(1) t", &[f.name().to_string(), u.to_string()], &lhs, &rhs, eq);
        }
    }
    Ok(report)
}

/// A coefficient with the two basis elements it pairs.
type Term3 = (Scalar, BasisId, BasisId);

/// All functionals supported on the basis of degree at most `d` that are
/// integrals. The law is checked through degree `d + 1` so that a value at
/// the top degree must be compatible with the next one.
pub fn search_integrals_on(b: &BisemialgebraDesc, side: Side, d: usize, budget: u64) -> Result<Vec<Functional>> {
    let s = b.semiring();
    let basis = b.carrier().up_to(d);
    let (elems, total) = candidate_space(s, basis.len(), budget)?;
    let index: HashMap<&BasisId, usize> = basis.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let laws: Vec<(BasisId, Vec<Term3>)> = b
        .carrier()
        .up_to(d + 1)
        .into_iter()
        .map(|u| delta_terms(b, &u).map(|t| (u, t)))
        .collect::<Result<_>>()?;
    let found = par_filter(total, |i| {
        let coeffs = decode(&elems, basis.len(), i);
        let t = |x: &BasisId| Ok(index.get(x).map_or_else(|| s.zero(), |&k| coeffs[k].clone()));
        for (u, terms) in &laws {
            let lhs = integral_side(s, terms, side, t)?;
            let rhs = b.unit().scale(&t(u)?);
            if !b.quotient().equal(&lhs, &rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(found
        .into_iter()
        .map(|i| {
            let coeffs = decode(&elems, basis.len(), i);
            let values = basis.iter().zip(coeffs).map(|(u, c)| (u.clone(), c.clone())).collect();
            Functional::finite_support(format!("t{i}"), s, values)
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Integrals in B

#[derive(Clone, Debug)]
pub struct IntegralInReport {
    pub is_integral: bool,
    pub is_normalized: bool,
    pub report: CheckReport,
}

fn integral_in_holds(b: &BisemialgebraDesc, w: &Vector, u: &BasisId, side: Side) -> Result<(Vector, Vector, bool)> {
    let s = b.semiring();
    let uv = basis_vec(s, u);
    let lhs = match side {
        Side::Left => b.algebra.mul(&uv, w)?,
        Side::Right => b.algebra.mul(w, &uv)?,
    };
    let rhs = w.scale(&b.epsilon().on_basis(u)?);
    let eq = b.quotient().equal(&lhs, &rhs)?;
    Ok((lhs, rhs, eq))
}

/// Checks `b w = ε(b) w` (or `w b = ε(b) w`) on basis elements of degree at
/// most `d`; normalized means `ε(w) = 1`.
pub fn verify_integral_in(w: &Vector, b: &BisemialgebraDesc, side: Side, d: usize) -> Result<IntegralInReport> {
    let s = b.semiring();
    s.check_same(w.semiring())?;
    let mut report = CheckReport::new(format!("{side} integral {w} in {}", b.name())).with_bound(d);
    for u in b.carrier().up_to(d) {
        let (lhs, rhs, eq) = integral_in_holds(b, w, &u, side)?;
        report.expect_eq(&format!("{side} integral in B"), &[u.to_string()], &lhs, &rhs, eq);
    }
    let is_normalized = s.is_one(&b.epsilon().eval(w)?);
    Ok(IntegralInReport { is_integral: report.passed(), is_normalized, report })
}

/// Enumerates every vector supported on the basis of degree at most `d`,
/// each coefficient ranging over the whole semiring.
fn search_vectors(
    s: &Semiring,
    basis: &[BasisId],
    budget: u64,
    keep: impl Fn(&Vector) -> Result<bool> + Sync,
) -> Result<Vec<Vector>> {
    let (elems, total) = candidate_space(s, basis.len(), budget)?;
    let found = par_filter(total, |i| keep(&vector_from(s, basis, &decode(&elems, basis.len(), i))))?;
    Ok(found.into_iter().map(|i| vector_from(s, basis, &decode(&elems, basis.len(), i))).collect())
}

pub fn search_integrals_in(b: &BisemialgebraDesc, side: Side, d: usize, budget: u64) -> Result<Vec<Vector>> {
    let basis = b.carrier().up_to(d);
    search_vectors(b.semiring(), &basis, budget, |w| {
        for u in &basis {
            if !integral_in_holds(b, w, u, side)?.2 {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

// ---------------------------------------------------------------------------
// Hopf modules

/// A right `B`-semimodule and right `B`-semicomodule on the same carrier.
#[derive(Clone, Debug)]
pub struct HopfModuleDesc {
    pub name: String,
    pub carrier: Carrier,
    /// `m ⊗ b ↦ m b`, defined on pair basis elements.
    pub action: LinearMap,
    /// `m ↦ Σ m₍₀₎ ⊗ m₍₁₎`.
    pub coaction: LinearMap,
    pub over: BisemialgebraDesc,
    pub quotient: Quotient,
}

impl HopfModuleDesc {
    /// `B` acting on itself by `μ` and coacting by `Δ`.
    pub fn regular(b: &BisemialgebraDesc) -> Self {
        HopfModuleDesc {
            name: format!("regular {}", b.name()),
            carrier: b.carrier().clone(),
            action: b.mu().clone(),
            coaction: b.delta().clone(),
            over: b.clone(),
            quotient: b.quotient().clone(),
        }
    }

    /// `B ⊗ᵃ B`: diagonal action `(m⊗n) b = Σ m b₁ ⊗ n b₂`, coaction on the
    /// right factor.
    pub fn tensor_a(b: &BisemialgebraDesc) -> Self {
        let carrier = match b.carrier() {
            Carrier::Finite(basis) => Carrier::Finite(
                basis.iter().flat_map(|u| basis.iter().map(move |v| BasisId::pair(u.clone(), v.clone()))).collect(),
            ),
            other => {
                let inner = other.clone();
                Carrier::graded(move |k| {
                    let basis = inner.up_to(k);
                    let mut out = Vec::new();
                    for u in &basis {
                        for v in &basis {
                            if u.degree() + v.degree() == k {
                                out.push(BasisId::pair(u.clone(), v.clone()));
                            }
                        }
                    }
                    out
                })
            }
        };
        let s = b.semiring().clone();
        let bi = b.clone();
        let action = LinearMap::new("diagonal action", &s, move |p| {
            let (mn, x) = split(p)?;
            let (m, n) = split(mn)?;
            let mut out = Vector::zero(&bi.algebra.semiring);
            for (c, x1, x2) in delta_terms(&bi, x)? {
                let l = bi.algebra.mul_basis(m, &x1)?;
                let r = bi.algebra.mul_basis(n, &x2)?;
                out.add_scaled(&c, &l.tensor(&r)?);
            }
            Ok(out)
        });
        let bi = b.clone();
        let coaction = LinearMap::new("right coaction", &s, move |p| {
            let (m, n) = split(p)?;
            let mut out = Vector::zero(&bi.algebra.semiring);
            for (c, n1, n2) in delta_terms(&bi, n)? {
                out.add_term(BasisId::pair(BasisId::pair(m.clone(), n1), n2), c);
            }
            Ok(out)
        });
        HopfModuleDesc {
            name: format!("{} ⊗ᵃ {}", b.name(), b.name()),
            carrier,
            action,
            coaction,
            over: b.clone(),
            quotient: b.quotient().clone(),
        }
    }

    /// Free module on `basis` with action `m b = ε(b) m` and coaction
    /// `m ↦ m ⊗ 1`. A Hopf module only when `B` is one-dimensional.
    pub fn trivial(b: &BisemialgebraDesc, basis: Vec<BasisId>) -> Self {
        let s = b.semiring().clone();
        let eps = b.epsilon().clone();
        let eta = b.unit().clone();
        let action = LinearMap::new("trivial action", &s, move |p| {
            let (m, x) = split(p)?;
            Ok(Vector::term(eps.semiring(), eps.on_basis(x)?, m.clone()))
        });
        let coaction = LinearMap::new("trivial coaction", &s, move |m| Vector::basis(eta.semiring(), m.clone()).tensor(&eta));
        HopfModuleDesc {
            name: format!("trivial {}-module", b.name()),
            carrier: Carrier::Finite(basis),
            action,
            coaction,
            over: b.clone(),
            quotient: Quotient::Free,
        }
    }

    pub fn act(&self, m: &Vector, b: &Vector) -> Result<Vector> {
        self.action.apply2(m, b)
    }

    pub fn coact(&self, m: &Vector) -> Result<Vector> {
        self.coaction.apply(m)
    }

    fn semiring(&self) -> &Semiring {
        self.over.semiring()
    }
}

/// Module and comodule laws plus the Hopf compatibility
/// `ρ(m b) = Σ m₍₀₎ b₁ ⊗ m₍₁₎ b₂` on basis elements of degree at most `d`.
pub fn check_hopf_module(m: &HopfModuleDesc, d: usize) -> Result<CheckReport> {
    let s = m.semiring();
    let b = &m.over;
    let q = &m.quotient;
    let mut report = CheckReport::new(format!("Hopf module laws of {}", m.name)).with_bound(d);
    let ms = m.carrier.up_to(d);
    let bs = b.carrier().up_to(d);
    let delta_id = LinearMap::tensor(&m.coaction, &LinearMap::identity(s))?;
    let id_delta = LinearMap::tensor(&LinearMap::identity(s), b.delta())?;
    for x in &ms {
        let xv = basis_vec(s, x);
        let unit = m.act(&xv, b.unit())?;
        let eq = q.equal(&unit, &xv)?;
        report.expect_eq("action unit", &[x.to_string()], &unit, &xv, eq);
        let rho = m.coaction.on_basis(x)?;
        let lhs = delta_id.apply(&rho)?;
        let rhs = reassociate_left(&id_delta.apply(&rho)?)?;
        let eq = q.equal(&lhs, &rhs)?;
        report.expect_eq("coaction coassociativity", &[x.to_string()], &lhs, &rhs, eq);
        let counit = contract_right(b.epsilon(), &rho)?;
        let eq = q.equal(&counit, &xv)?;
        report.expect_eq("coaction counit", &[x.to_string()], &counit, &xv, eq);
        for u in &bs {
            let uv = basis_vec(s, u);
            let xu = m.act(&xv, &uv)?;
            for v in &bs {
                let vv = basis_vec(s, v);
                let lhs = m.act(&xu, &vv)?;
                let rhs = m.act(&xv, &b.algebra.mul(&uv, &vv)?)?;
                let eq = q.equal(&lhs, &rhs)?;
                report.expect_eq("action associativity", &[x.to_string(), u.to_string(), v.to_string()], &lhs, &rhs, eq);
            }
            let lhs = m.coact(&xu)?;
            let mut rhs = Vector::zero(s);
            for (p, c) in rho.iter() {
                let (m0, m1) = split(p)?;
                for (e, u1, u2) in delta_terms(b, u)? {
                    let left = m.action.on_pair(m0, &u1)?;
                    let right = b.algebra.mul_basis(m1, &u2)?;
                    rhs.add_scaled(&s.mul(c, &e), &left.tensor(&right)?);
                }
            }
            let eq = q.equal(&lhs, &rhs)?;
            report.expect_eq("Hopf compatibility", &[x.to_string(), u.to_string()], &lhs, &rhs, eq);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Invariants and coinvariants

pub type Membership = Arc<dyn Fn(&Vector) -> Result<bool> + Send + Sync>;

/// A subsemimodule, either listed with generators or as a predicate.
#[derive(Clone)]
pub enum Subset {
    /// Every element in enumeration order, and a greedy generating set that
    /// is minimal under that order.
    Enumerated { elements: Vec<Vector>, generators: Vec<Vector> },
    Predicate(Membership),
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subset::Enumerated { elements, generators } => f
                .debug_struct("Enumerated")
                .field("elements", &elements.len())
                .field("generators", generators)
                .finish(),
            Subset::Predicate(_) => f.write_str("Predicate"),
        }
    }
}

impl Subset {
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        match self {
            Subset::Enumerated { elements, .. } => Ok(elements.contains(v)),
            Subset::Predicate(p) => p(v),
        }
    }

    pub fn elements(&self) -> Option<&[Vector]> {
        match self {
            Subset::Enumerated { elements, .. } => Some(elements),
            Subset::Predicate(_) => None,
        }
    }

    pub fn generators(&self) -> Option<&[Vector]> {
        match self {
            Subset::Enumerated { generators, .. } => Some(generators),
            Subset::Predicate(_) => None,
        }
    }
}

/// The subsemimodule generated by `gens`, as a set; `None` past `limit`.
pub fn span(s: &Semiring, gens: &[Vector], limit: usize) -> Result<Option<HashSet<Vector>>> {
    let elems = s.elements()?;
    let mut set: HashSet<Vector> = HashSet::from([Vector::zero(s)]);
    for g in gens {
        let mut next = HashSet::new();
        for x in &set {
            for c in &elems {
                let mut y = x.clone();
                y.add_scaled(c, g);
                next.insert(y);
                if next.len() > limit {
                    return Ok(None);
                }
            }
        }
        set = next;
    }
    Ok(Some(set))
}

/// Whether `target` lies in the span of `gens`, by closure over a finite
/// semiring.
pub fn span_contains(s: &Semiring, gens: &[Vector], target: &Vector, limit: usize) -> Result<bool> {
    match span(s, gens, limit)? {
        Some(set) => Ok(set.contains(target)),
        None => Err(Error::Size { required: format!("more than {limit} span elements"), budget: limit as u64 }),
    }
}

fn greedy_generators(s: &Semiring, elements: &[Vector]) -> Result<Vec<Vector>> {
    let mut gens = Vec::new();
    let mut spanned: HashSet<Vector> = HashSet::from([Vector::zero(s)]);
    let elems = s.elements()?;
    for v in elements {
        if spanned.contains(v) {
            continue;
        }
        let mut next = HashSet::new();
        for x in &spanned {
            for c in &elems {
                let mut y = x.clone();
                y.add_scaled(c, v);
                next.insert(y);
            }
        }
        spanned = next;
        gens.push(v.clone());
    }
    Ok(gens)
}

fn subset(
    m: &HopfModuleDesc,
    budget: u64,
    member: impl Fn(&Vector) -> Result<bool> + Send + Sync + 'static,
) -> Result<Subset> {
    let s = m.semiring();
    if !s.is_finite() || !m.carrier.is_finite() {
        return Ok(Subset::Predicate(Arc::new(member)));
    }
    let basis = m.carrier.all()?;
    let elements = search_vectors(s, &basis, budget, &member)?;
    let generators = greedy_generators(s, &elements)?;
    Ok(Subset::Enumerated { elements, generators })
}

/// `{m : m b = ε(b) m}` for basis elements `b` of degree at most `d`.
pub fn invariants(m: &HopfModuleDesc, d: usize, budget: u64) -> Result<Subset> {
    let mm = m.clone();
    let bs = m.over.carrier().up_to(d);
    subset(m, budget, move |v| {
        for u in &bs {
            let lhs = mm.act(v, &basis_vec(mm.semiring(), u))?;
            let rhs = v.scale(&mm.over.epsilon().on_basis(u)?);
            if !mm.quotient.equal(&lhs, &rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// `{m : ρ(m) = m ⊗ 1_B}`.
pub fn coinvariants(m: &HopfModuleDesc, budget: u64) -> Result<Subset> {
    let mm = m.clone();
    subset(m, budget, move |v| {
        let lhs = mm.coact(v)?;
        let rhs = v.tensor(mm.over.unit())?;
        mm.quotient.equal(&lhs, &rhs)
    })
}

// ---------------------------------------------------------------------------
// γ and ω

/// `γ(a ⊗ b) = Σ a b₁ ⊗ b₂`.
pub fn gamma_map(b: &BisemialgebraDesc) -> LinearMap {
    let bi = b.clone();
    LinearMap::new("γ", b.semiring(), move |p| {
        let (a, x) = split(p)?;
        let mut out = Vector::zero(bi.semiring());
        for (c, x1, x2) in delta_terms(&bi, x)? {
            out.add_scaled(&c, &bi.algebra.mul_basis(a, &x1)?.tensor(&basis_vec(bi.semiring(), &x2))?);
        }
        Ok(out)
    })
}

/// `ω(a ⊗ b) = Σ a 𝔞(b₁) ⊗ b₂`, the inverse of `γ`.
pub fn omega_map(h: &HopfDesc) -> LinearMap {
    let hh = h.clone();
    LinearMap::new("ω", h.bi.semiring(), move |p| {
        let (a, x) = split(p)?;
        let s = hh.bi.semiring();
        let mut out = Vector::zero(s);
        for (c, x1, x2) in delta_terms(&hh.bi, x)? {
            let ax = hh.bi.algebra.mul(&basis_vec(s, a), &hh.antipode.on_basis(&x1)?)?;
            out.add_scaled(&c, &ax.tensor(&basis_vec(s, &x2))?);
        }
        Ok(out)
    })
}

fn pairs_up_to(c: &Carrier, d: usize) -> Vec<BasisId> {
    let basis = c.up_to(d);
    let mut out = Vec::new();
    for u in &basis {
        for v in &basis {
            if u.degree() + v.degree() <= d {
                out.push(BasisId::pair(u.clone(), v.clone()));
            }
        }
    }
    out
}

/// For a Hopf semialgebra: `ω∘γ = id` and `γ∘ω = id` on basis pairs of total
/// degree at most `d`. Without an antipode, checks instead that every such
/// pair lies in the span of the images of `γ` (finite semirings only).
pub fn verify_gamma_iso(desc: &StructureDesc, d: usize, budget: u64) -> Result<CheckReport> {
    let b = desc
        .as_bisemialgebra()
        .ok_or_else(|| Error::Configuration(format!("{} is not a bisemialgebra", desc.name())))?;
    let s = b.semiring();
    let gamma = gamma_map(b);
    let pairs = pairs_up_to(b.carrier(), d);
    let q = b.quotient();
    let mut report = CheckReport::new(format!("γ isomorphism of {}", b.name())).with_bound(d);
    if let Some(h) = desc.as_hopf() {
        let omega = omega_map(h);
        for p in &pairs {
            let pv = basis_vec(s, p);
            let og = omega.apply(&gamma.on_basis(p)?)?;
            let eq = q.equal(&og, &pv)?;
            report.expect_eq("ω∘γ = id", &[p.to_string()], &og, &pv, eq);
            let go = gamma.apply(&omega.on_basis(p)?)?;
            let eq = q.equal(&go, &pv)?;
            report.expect_eq("γ∘ω = id", &[p.to_string()], &go, &pv, eq);
        }
        return Ok(report);
    }
    report.note("no antipode: only surjectivity of γ is checked");
    let images: Vec<Vector> = pairs.iter().map(|p| gamma.on_basis(p)).collect::<Result<_>>()?;
    let spanned = span(s, &images, budget as usize)?
        .ok_or_else(|| Error::Size { required: format!("more than {budget} span elements"), budget })?;
    for p in &pairs {
        report.count();
        let pv = basis_vec(s, p);
        if !spanned.contains(&pv) {
            report.fail_scalar("γ surjective", vec![p.to_string()], format!("{p} is not in the image of γ"), String::new());
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Fundamental theorem

/// `ψ(m ⊗ b) = m b` on `M^coB ⊗ B`.
pub fn psi_map(m: &HopfModuleDesc) -> LinearMap {
    let act = m.action.clone();
    LinearMap::new("ψ", m.semiring(), move |p| act.on_basis(p))
}

/// `m ↦ Σ m₍₀₎ 𝔞(m₍₁₎) ⊗ m₍₂₎`, using the coaction twice.
pub fn psi_inverse(m: &HopfModuleDesc, h: &HopfDesc) -> LinearMap {
    let (mm, hh) = (m.clone(), h.clone());
    LinearMap::new("ψ⁻¹", m.semiring(), move |x| {
        let s = mm.semiring();
        let mut out = Vector::zero(s);
        for (p, c) in mm.coaction.on_basis(x)?.iter() {
            let (m0, m1) = split(p)?;
            for (e, l1, l2) in delta_terms(&hh.bi, m1)? {
                let left = mm.act(&basis_vec(s, m0), &hh.antipode.on_basis(&l1)?)?;
                out.add_scaled(&s.mul(c, &e), &left.tensor(&basis_vec(s, &l2))?);
            }
        }
        Ok(out)
    })
}

/// Both composites of `ψ` and its inverse: `ψ∘ψ⁻¹ = id` on every carrier
/// vector (basis elements when the carrier is too large to list), and
/// `ψ⁻¹∘ψ = id` on coinvariant generators tensored with basis elements of
/// degree at most `d`.
pub fn verify_fundamental(m: &HopfModuleDesc, h: &HopfDesc, d: usize, budget: u64) -> Result<CheckReport> {
    let s = m.semiring();
    let q = &m.quotient;
    let co = coinvariants(m, budget)?;
    let gens = co
        .generators()
        .ok_or_else(|| Error::Size { required: "coinvariants of an infinite carrier".into(), budget })?
        .to_vec();
    let psi = psi_map(m);
    let inv = psi_inverse(m, h);
    let mut report = CheckReport::new(format!("fundamental theorem for {}", m.name)).with_bound(d);
    report.note(format!("{} coinvariant generators", gens.len()));
    let basis = m.carrier.all()?;
    let vectors = match candidate_space(s, basis.len(), budget) {
        Ok((elems, total)) => (0..total).map(|i| vector_from(s, &basis, &decode(&elems, basis.len(), i))).collect(),
        Err(_) => basis.iter().map(|b| basis_vec(s, b)).collect::<Vec<_>>(),
    };
    for v in &vectors {
        let back = psi.apply(&inv.apply(v)?)?;
        let eq = q.equal(&back, v)?;
        report.expect_eq("ψ∘ψ⁻¹ = id", &[v.to_string()], &back, v, eq);
    }
    for g in &gens {
        for u in h.bi.carrier().up_to(d) {
            let x = g.tensor(&basis_vec(s, &u))?;
            let back = inv.apply(&psi.apply(&x)?)?;
            let eq = q.equal(&back, &x)?;
            report.expect_eq("ψ⁻¹∘ψ = id", &[g.to_string(), u.to_string()], &back, &x, eq);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Duals

fn finite_free_basis(carrier: &Carrier, quotient: &Quotient, what: &str) -> Result<Vec<BasisId>> {
    if !quotient.is_free() {
        return Err(Error::Unsupported(format!("the dual of {what} needs a free carrier, not a quotient")));
    }
    carrier.all().map_err(|_| Error::Unsupported(format!("the dual of {what} needs a finite basis")))
}

fn dual_of(b: &BasisId) -> BasisId {
    BasisId::dual(b.clone())
}

fn undual<'a>(map: &str, b: &'a BasisId) -> Result<&'a BasisId> {
    match b {
        BasisId::Dual(x) => Ok(x),
        _ => Err(Error::Domain { map: map.to_string(), basis: b.to_string() }),
    }
}

/// The dual coalgebra of a finite algebra: `Δ*(bₖ*) = Σ cᵏᵢⱼ bᵢ*⊗bⱼ*`,
/// counit the coefficients of the unit.
pub fn dual_coalgebra(a: &SemialgebraDesc) -> Result<SemicoalgebraDesc> {
    let s = &a.semiring;
    let basis = finite_free_basis(&a.carrier, &a.quotient, &a.name)?;
    let mut delta: BTreeMap<BasisId, Vector> = basis.iter().map(|k| (dual_of(k), Vector::zero(s))).collect();
    for i in &basis {
        for j in &basis {
            for (k, c) in a.mul_basis(i, j)?.iter() {
                let entry = delta.get_mut(&dual_of(k)).ok_or_else(|| {
                    Error::Unsupported(format!("{} is not closed under μ: {i}·{j} involves {k}", a.name))
                })?;
                entry.add_term(BasisId::pair(dual_of(i), dual_of(j)), c.clone());
            }
        }
    }
    let eps = basis.iter().map(|k| (dual_of(k), a.eta.coeff(k))).collect();
    Ok(SemicoalgebraDesc {
        name: format!("dual of {}", a.name),
        semiring: s.clone(),
        carrier: Carrier::Finite(basis.iter().map(dual_of).collect()),
        delta: LinearMap::from_table("Δ*", s, delta),
        epsilon: Functional::from_table("ε*", s, eps),
        quotient: Quotient::Free,
    })
}

/// The dual algebra of a finite coalgebra: convolution product, unit `ε`.
pub fn dual_algebra(c: &SemicoalgebraDesc) -> Result<SemialgebraDesc> {
    let s = &c.semiring;
    let basis = finite_free_basis(&c.carrier, &c.quotient, &c.name)?;
    let mut mu: BTreeMap<BasisId, Vector> = BTreeMap::new();
    for i in &basis {
        for j in &basis {
            mu.insert(BasisId::pair(dual_of(i), dual_of(j)), Vector::zero(s));
        }
    }
    for k in &basis {
        for (p, coef) in c.delta.on_basis(k)?.iter() {
            let (i, j) = split(p)?;
            let key = BasisId::pair(dual_of(i), dual_of(j));
            let entry = mu.get_mut(&key).ok_or_else(|| Error::Domain { map: "Δ".into(), basis: p.to_string() })?;
            entry.add_term(dual_of(k), coef.clone());
        }
    }
    let eta = Vector::from_terms(s, basis.iter().map(|k| c.epsilon.on_basis(k).map(|e| (e, dual_of(k)))).collect::<Result<Vec<_>>>()?);
    Ok(SemialgebraDesc {
        name: format!("dual of {}", c.name),
        semiring: s.clone(),
        carrier: Carrier::Finite(basis.iter().map(dual_of).collect()),
        mu: LinearMap::from_table("μ*", s, mu),
        eta,
        quotient: Quotient::Free,
    })
}

/// Transposes all structure maps of a finite free structure. Algebras and
/// coalgebras swap roles; bisemialgebras and Hopf semialgebras keep their kind.
pub fn dual_hopf(desc: &StructureDesc) -> Result<StructureDesc> {
    Ok(match desc {
        StructureDesc::Semialgebra(a) => StructureDesc::Semicoalgebra(dual_coalgebra(a)?),
        StructureDesc::Semicoalgebra(c) => StructureDesc::Semialgebra(dual_algebra(c)?),
        StructureDesc::Bisemialgebra(b) => StructureDesc::Bisemialgebra(dual_bisemialgebra(b)?),
        StructureDesc::Hopf(h) => {
            let bi = dual_bisemialgebra(&h.bi)?;
            let s = bi.semiring().clone();
            let basis = h.bi.carrier().all()?;
            let mut table: BTreeMap<BasisId, Vector> = basis.iter().map(|k| (dual_of(k), Vector::zero(&s))).collect();
            for i in &basis {
                for (k, c) in h.antipode.on_basis(i)?.iter() {
                    let entry = table
                        .get_mut(&dual_of(k))
                        .ok_or_else(|| Error::Domain { map: "𝔞".into(), basis: k.to_string() })?;
                    entry.add_term(dual_of(i), c.clone());
                }
            }
            StructureDesc::Hopf(HopfDesc { bi, antipode: LinearMap::from_table("𝔞*", &s, table) })
        }
    })
}

fn dual_bisemialgebra(b: &BisemialgebraDesc) -> Result<BisemialgebraDesc> {
    let mut algebra = dual_algebra(&b.coalgebra)?;
    let mut coalgebra = dual_coalgebra(&b.algebra)?;
    algebra.name = format!("dual of {}", b.name());
    coalgebra.name = algebra.name.clone();
    Ok(BisemialgebraDesc { algebra, coalgebra })
}

/// `b ↦ b**`, the comparison map into the double dual.
pub fn double_dual_embedding(s: &Semiring) -> LinearMap {
    let s2 = s.clone();
    LinearMap::new("b ↦ b**", s, move |b| Ok(Vector::basis(&s2, dual_of(&dual_of(b)))))
}

/// Inverse of [`double_dual_embedding`].
pub fn double_dual_projection(s: &Semiring) -> LinearMap {
    let s2 = s.clone();
    LinearMap::new("b** ↦ b", s, move |b| {
        let inner = undual("b** ↦ b", b)?;
        Ok(Vector::basis(&s2, undual("b** ↦ b", inner)?.clone()))
    })
}

// ---------------------------------------------------------------------------
// Element searches

/// Every `S`-linear map on the basis of degree at most `d` (zero elsewhere)
/// satisfying both antipode identities there.
pub fn search_antipode(b: &BisemialgebraDesc, d: usize, budget: u64) -> Result<Vec<LinearMap>> {
    let s = b.semiring();
    let basis = b.carrier().up_to(d);
    let n = basis.len();
    let (elems, total) = candidate_space(s, n * n, budget)?;
    let index: HashMap<&BasisId, usize> = basis.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut laws = Vec::new();
    for u in &basis {
        let target = b.unit().scale(&b.epsilon().on_basis(u)?);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (c, u1, u2) in delta_terms(b, u)? {
            // 𝔞(u₁) u₂ = Σⱼ A[u₁][j] bⱼ u₂
            if let Some(&i) = index.get(&u1) {
                let prods: Vec<Vector> = basis.iter().map(|bj| b.algebra.mul_basis(bj, &u2)).collect::<Result<_>>()?;
                left.push((c.clone(), i, prods));
            }
            if let Some(&i) = index.get(&u2) {
                let prods: Vec<Vector> = basis.iter().map(|bj| b.algebra.mul_basis(&u1, bj)).collect::<Result<_>>()?;
                right.push((c, i, prods));
            }
        }
        laws.push((target, left, right));
    }
    let eval = |coeffs: &[&Scalar], terms: &[(Scalar, usize, Vec<Vector>)]| {
        let mut out = Vector::zero(s);
        for (c, i, prods) in terms {
            for (j, p) in prods.iter().enumerate() {
                let a = coeffs[i * n + j];
                if !s.is_zero(a) {
                    out.add_scaled(&s.mul(c, a), p);
                }
            }
        }
        out
    };
    let found = par_filter(total, |k| {
        let coeffs = decode(&elems, n * n, k);
        for (target, left, right) in &laws {
            if !b.quotient().equal(&eval(&coeffs, left), target)? || !b.quotient().equal(&eval(&coeffs, right), target)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(found
        .into_iter()
        .map(|k| {
            let coeffs = decode(&elems, n * n, k);
            let table: BTreeMap<BasisId, Vector> = basis
                .iter()
                .enumerate()
                .map(|(i, u)| (u.clone(), vector_from(s, &basis, &coeffs[i * n..(i + 1) * n])))
                .collect();
            let s2 = s.clone();
            LinearMap::new(format!("𝔞{k}"), s, move |u| Ok(table.get(u).cloned().unwrap_or_else(|| Vector::zero(&s2))))
        })
        .collect())
}

fn pairs_of(basis: &[BasisId]) -> Vec<BasisId> {
    basis.iter().flat_map(|u| basis.iter().map(move |v| BasisId::pair(u.clone(), v.clone()))).collect()
}

/// Every `e ∈ H ⊗ H` with `h e = e h` for basis `h` of degree at most `d`
/// and `μ(e) = 1`, where `h (a⊗b) = ha ⊗ b` and `(a⊗b) h = a ⊗ bh`.
pub fn search_separability_idempotent(h: &HopfDesc, d: usize, budget: u64) -> Result<Vec<Vector>> {
    let b = &h.bi;
    let s = b.semiring();
    let basis = b.carrier().up_to(d);
    let pairs = pairs_of(&basis);
    let a = &b.algebra;
    let left_mul = |x: &BasisId, e: &Vector| -> Result<Vector> {
        let mut out = Vector::zero(s);
        for (p, c) in e.iter() {
            let (l, r) = split(p)?;
            out.add_scaled(c, &a.mul_basis(x, l)?.tensor(&basis_vec(s, r))?);
        }
        Ok(out)
    };
    let right_mul = |e: &Vector, x: &BasisId| -> Result<Vector> {
        let mut out = Vector::zero(s);
        for (p, c) in e.iter() {
            let (l, r) = split(p)?;
            out.add_scaled(c, &basis_vec(s, l).tensor(&a.mul_basis(r, x)?)?);
        }
        Ok(out)
    };
    search_vectors(s, &pairs, budget, |e| {
        if !b.quotient().equal(&a.mu.apply(e)?, &a.eta)? {
            return Ok(false);
        }
        for x in &basis {
            if !b.quotient().equal(&left_mul(x, e)?, &right_mul(e, x)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// Every `δ : H ⊗ H → S` on basis pairs of degree at most `d` with
/// `δ∘Δ = ε` and `Σ a₁ δ(a₂ ⊗ b) = Σ δ(a ⊗ b₁) b₂`.
pub fn search_coseparability_form(h: &HopfDesc, d: usize, budget: u64) -> Result<Vec<Functional>> {
    let b = &h.bi;
    let s = b.semiring();
    let basis = b.carrier().up_to(d);
    let pairs = pairs_of(&basis);
    let (elems, total) = candidate_space(s, pairs.len(), budget)?;
    let index: HashMap<&BasisId, usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let deltas: Vec<Vec<(Scalar, BasisId, BasisId)>> = basis.iter().map(|u| delta_terms(b, u)).collect::<Result<_>>()?;
    let found = par_filter(total, |k| {
        let coeffs = decode(&elems, pairs.len(), k);
        let delta = |l: &BasisId, r: &BasisId| {
            index.get(&BasisId::pair(l.clone(), r.clone())).map_or_else(|| s.zero(), |&i| coeffs[i].clone())
        };
        for (i, u) in basis.iter().enumerate() {
            let mut acc = s.zero();
            for (c, l, r) in &deltas[i] {
                acc = s.add(&acc, &s.mul(c, &delta(l, r)));
            }
            if acc != b.epsilon().on_basis(u)? {
                return Ok(false);
            }
            for (j, v) in basis.iter().enumerate() {
                let mut lhs = Vector::zero(s);
                for (c, u1, u2) in &deltas[i] {
                    lhs.add_term(u1.clone(), s.mul(c, &delta(u2, v)));
                }
                let mut rhs = Vector::zero(s);
                for (c, v1, v2) in &deltas[j] {
                    rhs.add_term(v2.clone(), s.mul(c, &delta(u, v1)));
                }
                if !b.quotient().equal(&lhs, &rhs)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })?;
    Ok(found
        .into_iter()
        .map(|k| {
            let coeffs = decode(&elems, pairs.len(), k);
            let values = pairs.iter().zip(coeffs).map(|(p, c)| (p.clone(), c.clone())).collect();
            Functional::finite_support(format!("δ{k}"), s, values)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{example, Example};

    fn bool_group(order: u32) -> HopfDesc {
        example(&Example::GroupHopf { order }, &Semiring::boolean()).unwrap().into_hopf().unwrap()
    }

    #[test]
    fn side_displays_lowercase() {
        assert_eq!(Side::Left.to_string(), "left");
        assert_eq!(serde_json::to_string(&Side::Right).unwrap(), "\"right\"");
    }

    #[test]
    fn span_of_nothing_is_zero() {
        let s = Semiring::boolean();
        let set = span(&s, &[], 10).unwrap().unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn coinvariant_generators_are_minimal() {
        let h = bool_group(2);
        let co = coinvariants(&HopfModuleDesc::regular(&h.bi), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(co.generators().unwrap(), [Vector::basis(&Semiring::boolean(), BasisId::atom("e"))]);
    }
}
