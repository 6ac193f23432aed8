//! Doi-Koppinen data `(B, A, C)`: compatibility checks, DK semimodules, the
//! smash product `A #ᵒᵖ C*`, the Hom product on `Hom(C, A)` and the
//! entwining map `ψ : C ⊗ A → A ⊗ C`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::semimodule::{reassociate_left, BasisId, LinearMap, Quotient, Vector};
use crate::semiring::{scalar_vector, Scalar, Semiring};
use crate::structures::{
    check_morphism, example, split, BisemialgebraDesc, Carrier, Example, MorphismKind, SemialgebraDesc,
    SemicoalgebraDesc, StructureDesc,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompatKind {
    /// Module semialgebra: `μ_A`, `η_A` are `B`-linear.
    Rma,
    /// Module semicoalgebra: `Δ_C`, `ε_C` are `B`-linear.
    Rmc,
    /// Comodule semialgebra: `μ_A`, `η_A` are `B`-colinear.
    Rca,
    /// Comodule semicoalgebra: `Δ_C`, `ε_C` are `B`-colinear.
    ComCoal,
}

/// A right-right Doi-Koppinen datum.
#[derive(Clone, Debug)]
pub struct DKDatum {
    pub name: String,
    pub b: BisemialgebraDesc,
    pub a: SemialgebraDesc,
    /// `a ↦ Σ a₍₀₎ ⊗ a₍₁₎ ∈ A ⊗ B`.
    pub a_coaction: LinearMap,
    pub c: SemicoalgebraDesc,
    /// `c ⊗ b ↦ c b ∈ C`.
    pub c_action: LinearMap,
}

/// A right `A`-semimodule and right `C`-semicomodule.
#[derive(Clone, Debug)]
pub struct DKModule {
    pub name: String,
    pub carrier: Carrier,
    /// `m ⊗ a ↦ m a`.
    pub action: LinearMap,
    /// `m ↦ Σ m₍₀₎ ⊗ m₍₁₎ ∈ M ⊗ C`.
    pub coaction: LinearMap,
    pub quotient: Quotient,
}

fn bv(s: &Semiring, b: &BasisId) -> Vector {
    Vector::basis(s, b.clone())
}

fn names(bs: &[&BasisId]) -> Vec<String> {
    bs.iter().map(|b| b.to_string()).collect()
}

fn terms(v: &Vector) -> Result<Vec<(Scalar, BasisId, BasisId)>> {
    v.iter().map(|(p, c)| split(p).map(|(l, r)| (c.clone(), l.clone(), r.clone()))).collect()
}

impl DKDatum {
    pub fn semiring(&self) -> &Semiring {
        self.b.semiring()
    }

    /// `(B, B, B)`: `B` coacting on itself by `Δ` and acting on itself by `μ`.
    pub fn hopf(b: &BisemialgebraDesc) -> Self {
        DKDatum {
            name: format!("({0}, {0}, {0})", b.name()),
            b: b.clone(),
            a: b.algebra.clone(),
            a_coaction: b.delta().clone(),
            c: b.coalgebra.clone(),
            c_action: b.mu().clone(),
        }
    }

    /// `(B, A, B)` with `A = S[Z/n]` graded by `Z/n → Z/m`, `B = S[Z/m]`:
    /// `gⁱ ↦ gⁱ ⊗ h^(i mod m)`.
    pub fn graded_group(s: &Semiring, n: u32, m: u32) -> Result<Self> {
        if m == 0 || n == 0 || !n.is_multiple_of(m) {
            return Err(Error::Parameter(format!("a Z/{n}-grading by Z/{m} needs m to divide n")));
        }
        let b = example(&Example::GroupHopf { order: m }, s)?.into_bisemialgebra()?;
        let a = example(&Example::GroupHopf { order: n }, s)?.into_bisemialgebra()?.algebra;
        let elem = |i: u32| match i {
            0 => BasisId::atom("e"),
            1 => BasisId::atom("g"),
            _ => BasisId::atom(format!("g^{i}")),
        };
        let table: BTreeMap<BasisId, Vector> =
            (0..n).map(|i| (elem(i), Vector::basis(s, BasisId::pair(elem(i), elem(i % m))))).collect();
        Ok(DKDatum {
            name: format!("(S[Z/{m}], S[Z/{n}], S[Z/{m}])"),
            b: b.clone(),
            a,
            a_coaction: LinearMap::from_table("grading", s, table),
            c: b.coalgebra.clone(),
            c_action: b.mu().clone(),
        })
    }

    /// `B = S` with `a ↦ a ⊗ 1` and `c · 1 = c`.
    pub fn trivial(s: &Semiring, a: &SemialgebraDesc, c: &SemicoalgebraDesc) -> Result<Self> {
        let b = example(&Example::Ground, s)?.into_bisemialgebra()?;
        let one = BasisId::ground();
        let s2 = s.clone();
        let o = one.clone();
        let a_coaction = LinearMap::new("a ↦ a⊗1", s, move |x| Ok(Vector::basis(&s2, BasisId::pair(x.clone(), o.clone()))));
        let s3 = s.clone();
        let c_action = LinearMap::new("c·1 = c", s, move |p| {
            let (c, u) = split(p)?;
            if *u != one {
                return Err(Error::Domain { map: "c·1 = c".into(), basis: p.to_string() });
            }
            Ok(Vector::basis(&s3, c.clone()))
        });
        Ok(DKDatum {
            name: format!("(S, {}, {})", a.name, c.name),
            b,
            a: a.clone(),
            a_coaction,
            c: c.clone(),
            c_action,
        })
    }

    fn act_c(&self, c: &BasisId, b: &BasisId) -> Result<Vector> {
        self.c_action.on_pair(c, b)
    }
}

impl DKModule {
    /// `M = A` acting by `μ_A` and coacting by `A`'s coaction; needs `C = B`.
    pub fn relative_hopf(datum: &DKDatum) -> Self {
        DKModule {
            name: format!("{} as a relative Hopf semimodule", datum.a.name),
            carrier: datum.a.carrier.clone(),
            action: datum.a.mu.clone(),
            coaction: datum.a_coaction.clone(),
            quotient: datum.a.quotient.clone(),
        }
    }
}

/// The displayed identity for `kind` plus its unit or counit companion.
/// `structure` must provide the algebra (`rma`, `rca`) or coalgebra (`rmc`,
/// `com_coal`) part; `map` is the action `X ⊗ B → X` or coaction `X → X ⊗ B`.
pub fn check_action_coaction(
    kind: CompatKind,
    structure: &StructureDesc,
    map: &LinearMap,
    b: &BisemialgebraDesc,
    d: usize,
) -> Result<CheckReport> {
    let s = b.semiring();
    s.check_same(structure.semiring())?;
    let mismatch = |want: &str| {
        Error::Configuration(format!("{kind:?} needs a {want}, but {} is a {}", structure.name(), structure.kind()))
    };
    let bs = b.carrier().up_to(d);
    let mut report = CheckReport::new(format!("{kind:?} compatibility of {}", structure.name())).with_bound(d);
    match kind {
        CompatKind::Rma => {
            let a = structure.as_algebra().ok_or_else(|| mismatch("semialgebra"))?;
            let xs = a.carrier.up_to(d);
            for u in &bs {
                let du = terms(&b.delta().on_basis(u)?)?;
                for x in &xs {
                    for y in &xs {
                        let lhs = map.apply(&a.mul_basis(x, y)?.tensor(&bv(s, u))?)?;
                        let mut rhs = Vector::zero(s);
                        for (c, u1, u2) in &du {
                            let l = map.on_pair(x, u1)?;
                            let r = map.on_pair(y, u2)?;
                            rhs.add_scaled(c, &a.mul(&l, &r)?);
                        }
                        let eq = a.quotient.equal(&lhs, &rhs)?;
                        report.expect_eq("(a ã) b = Σ (a b₁)(ã b₂)", &names(&[x, y, u]), &lhs, &rhs, eq);
                    }
                }
                let lhs = map.apply(&a.eta.tensor(&bv(s, u))?)?;
                let rhs = a.eta.scale(&b.epsilon().on_basis(u)?);
                let eq = a.quotient.equal(&lhs, &rhs)?;
                report.expect_eq("1 b = ε(b) 1", &names(&[u]), &lhs, &rhs, eq);
            }
        }
        CompatKind::Rmc => {
            let c = structure.as_coalgebra().ok_or_else(|| mismatch("semicoalgebra"))?;
            for x in c.carrier.up_to(d) {
                let dx = terms(&c.delta.on_basis(&x)?)?;
                for u in &bs {
                    let xu = map.on_pair(&x, u)?;
                    let lhs = c.delta.apply(&xu)?;
                    let mut rhs = Vector::zero(s);
                    for (k, x1, x2) in &dx {
                        for (e, u1, u2) in terms(&b.delta().on_basis(u)?)? {
                            let t = map.on_pair(x1, &u1)?.tensor(&map.on_pair(x2, &u2)?)?;
                            rhs.add_scaled(&s.mul(k, &e), &t);
                        }
                    }
                    let eq = c.quotient.equal(&lhs, &rhs)?;
                    report.expect_eq("Δ(c b) = Σ c₁ b₁ ⊗ c₂ b₂", &names(&[&x, u]), &lhs, &rhs, eq);
                    let l = scalar_vector(s, c.epsilon.eval(&xu)?);
                    let r = scalar_vector(s, s.mul(&c.epsilon.on_basis(&x)?, &b.epsilon().on_basis(u)?));
                    let eq = l == r;
                    report.expect_eq("ε(c b) = ε(c) ε(b)", &names(&[&x, u]), &l, &r, eq);
                }
            }
        }
        CompatKind::Rca => {
            let a = structure.as_algebra().ok_or_else(|| mismatch("semialgebra"))?;
            let xs = a.carrier.up_to(d);
            for x in &xs {
                let rx = map.on_basis(x)?;
                for y in &xs {
                    let lhs = map.apply(&a.mul_basis(x, y)?)?;
                    let rhs = pair_mul(&a.mu, b.mu(), &rx, &map.on_basis(y)?)?;
                    let eq = a.quotient.equal(&lhs, &rhs)?;
                    report.expect_eq("ρ(a ã) = Σ a₍₀₎ã₍₀₎ ⊗ a₍₁₎ã₍₁₎", &names(&[x, y]), &lhs, &rhs, eq);
                }
            }
            let lhs = map.apply(&a.eta)?;
            let rhs = a.eta.tensor(b.unit())?;
            let eq = a.quotient.equal(&lhs, &rhs)?;
            report.expect_eq("ρ(1) = 1 ⊗ 1", &["1".into()], &lhs, &rhs, eq);
        }
        CompatKind::ComCoal => {
            let c = structure.as_coalgebra().ok_or_else(|| mismatch("semicoalgebra"))?;
            for x in c.carrier.up_to(d) {
                let rx = map.on_basis(&x)?;
                // Σ (c₍₀₎₁ ⊗ c₍₀₎₂) ⊗ c₍₁₎
                let mut lhs = Vector::zero(s);
                for (k, x0, x1) in terms(&rx)? {
                    lhs.add_scaled(&k, &c.delta.on_basis(&x0)?.tensor(&bv(s, &x1))?);
                }
                // Σ (c₁₍₀₎ ⊗ c₂₍₀₎) ⊗ c₁₍₁₎ c₂₍₁₎
                let mut rhs = Vector::zero(s);
                for (k, x1, x2) in terms(&c.delta.on_basis(&x)?)? {
                    for (e, p0, p1) in terms(&map.on_basis(&x1)?)? {
                        for (f, q0, q1) in terms(&map.on_basis(&x2)?)? {
                            let t = Vector::basis(s, BasisId::pair(p0.clone(), q0)).tensor(&b.algebra.mul_basis(&p1, &q1)?)?;
                            rhs.add_scaled(&s.mul(&k, &s.mul(&e, &f)), &t);
                        }
                    }
                }
                let eq = c.quotient.equal(&lhs, &rhs)?;
                report.expect_eq("Δ is colinear", &names(&[&x]), &lhs, &rhs, eq);
                let mut l = Vector::zero(s);
                for (k, x0, x1) in terms(&rx)? {
                    l.add_term(x1, s.mul(&k, &c.epsilon.on_basis(&x0)?));
                }
                let r = b.unit().scale(&c.epsilon.on_basis(&x)?);
                let eq = b.quotient().equal(&l, &r)?;
                report.expect_eq("Σ ε(c₍₀₎) c₍₁₎ = ε(c) 1", &names(&[&x]), &l, &r, eq);
            }
        }
    }
    Ok(report)
}

/// `(x ⊗ y)(x' ⊗ y') = x x' ⊗ y y'` with separate products on each leg.
fn pair_mul(left: &LinearMap, right: &LinearMap, u: &Vector, v: &Vector) -> Result<Vector> {
    let s = u.semiring();
    let mut out = Vector::zero(s);
    for (c, a, b) in terms(u)? {
        for (e, a2, b2) in terms(v)? {
            let t = left.on_pair(&a, &a2)?.tensor(&right.on_pair(&b, &b2)?)?;
            out.add_scaled(&s.mul(&c, &e), &t);
        }
    }
    Ok(out)
}

/// Both component checks of a datum: `A` is a comodule semialgebra and `C` a
/// module semicoalgebra.
pub fn check_datum(datum: &DKDatum, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("Doi-Koppinen datum {}", datum.name)).with_bound(d);
    report.merge(check_action_coaction(
        CompatKind::Rca,
        &StructureDesc::Semialgebra(datum.a.clone()),
        &datum.a_coaction,
        &datum.b,
        d,
    )?);
    report.merge(check_action_coaction(
        CompatKind::Rmc,
        &StructureDesc::Semicoalgebra(datum.c.clone()),
        &datum.c_action,
        &datum.b,
        d,
    )?);
    Ok(report)
}

/// `ρ(m a) = Σ m₍₀₎ a₍₀₎ ⊗ m₍₁₎ a₍₁₎` on basis pairs of degree at most `d`.
pub fn check_dk_module(m: &DKModule, datum: &DKDatum, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("Doi-Koppinen compatibility of {}", m.name)).with_bound(d);
    for x in m.carrier.up_to(d) {
        for a in datum.a.carrier.up_to(d) {
            let (lhs, rhs) = dk_sides(m, datum, &x, &a)?;
            let eq = m.quotient.equal(&lhs, &rhs)?;
            report.expect_eq("DK compatibility", &names(&[&x, &a]), &lhs, &rhs, eq);
        }
    }
    Ok(report)
}

fn dk_sides(m: &DKModule, datum: &DKDatum, x: &BasisId, a: &BasisId) -> Result<(Vector, Vector)> {
    let s = datum.semiring();
    let lhs = m.coaction.apply(&m.action.on_pair(x, a)?)?;
    let mut rhs = Vector::zero(s);
    for (k, m0, m1) in terms(&m.coaction.on_basis(x)?)? {
        for (e, a0, a1) in terms(&datum.a_coaction.on_basis(a)?)? {
            let t = m.action.on_pair(&m0, &a0)?.tensor(&datum.act_c(&m1, &a1)?)?;
            rhs.add_scaled(&s.mul(&k, &e), &t);
        }
    }
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// Smash product

fn finite_c(datum: &DKDatum) -> Result<Vec<BasisId>> {
    datum.c.carrier.all().map_err(|_| Error::Size {
        required: format!("a finite basis for {}", datum.c.name),
        budget: 0,
    })
}

/// Coefficients of `g ∈ C*` on the dual basis, as a map `c ↦ g(c)`.
type Dual = BTreeMap<BasisId, Scalar>;

fn dual_value(g: &Dual, s: &Semiring, c: &BasisId) -> Scalar {
    g.get(c).cloned().unwrap_or_else(|| s.zero())
}

/// `(b g)(c) = g(c b)`, the transpose of the action of `B` on `C`.
fn act_dual(datum: &DKDatum, basis: &[BasisId], b: &BasisId, g: &Dual) -> Result<Dual> {
    let s = datum.semiring();
    let mut out = Dual::new();
    for c in basis {
        let cb = datum.act_c(c, b)?;
        let v = cb.eval_linear(|x| Ok(dual_value(g, s, x)))?;
        out.insert(c.clone(), v);
    }
    Ok(out)
}

/// `(u ∗ f)(c) = Σ u(c₁) f(c₂)`.
fn convolve_dual(datum: &DKDatum, basis: &[BasisId], u: &Dual, f: &Dual) -> Result<Dual> {
    let s = datum.semiring();
    let mut out = Dual::new();
    for c in basis {
        let mut acc = s.zero();
        for (k, c1, c2) in terms(&datum.c.delta.on_basis(c)?)? {
            acc = s.add(&acc, &s.mul(&k, &s.mul(&dual_value(u, s, &c1), &dual_value(f, s, &c2))));
        }
        out.insert(c.clone(), acc);
    }
    Ok(out)
}

fn coordinate(c: &BasisId, s: &Semiring) -> Dual {
    BTreeMap::from([(c.clone(), s.one())])
}

fn smash_vector(s: &Semiring, a: &Vector, f: &Dual) -> Result<Vector> {
    let fv = Vector::from_terms(s, f.iter().map(|(c, v)| (v.clone(), BasisId::dual(c.clone()))));
    a.tensor(&fv)
}

/// `A #ᵒᵖ C*` on the basis `a # c*` with
/// `(a#f)(b#g) = Σ a₍₀₎ b # (a₍₁₎ g) ∗ f` and unit `1 # ε_C`.
pub fn smash_product(datum: &DKDatum) -> Result<SemialgebraDesc> {
    let s = datum.semiring().clone();
    let cb = finite_c(datum)?;
    let dual_basis: Vec<BasisId> = cb.iter().map(|c| BasisId::dual(c.clone())).collect();
    let carrier = match &datum.a.carrier {
        Carrier::Finite(ab) => Carrier::Finite(
            ab.iter().flat_map(|a| dual_basis.iter().map(move |f| BasisId::pair(a.clone(), f.clone()))).collect(),
        ),
        other => {
            let (inner, db) = (other.clone(), dual_basis.clone());
            Carrier::graded(move |k| {
                inner
                    .up_to(k)
                    .into_iter()
                    .filter(|a| a.degree() == k)
                    .flat_map(|a| db.iter().map(move |f| BasisId::pair(a.clone(), f.clone())))
                    .collect()
            })
        }
    };
    let eps: Dual = cb.iter().map(|c| datum.c.epsilon.on_basis(c).map(|e| (c.clone(), e))).collect::<Result<_>>()?;
    let eta = smash_vector(&s, &datum.a.eta, &eps)?;
    let dt = datum.clone();
    let mu = LinearMap::new("smash product", &s, move |p| {
        let s = dt.semiring();
        let (l, r) = split(p)?;
        let (a, f) = split(l)?;
        let (b, g) = split(r)?;
        let (f, g) = match (f, g) {
            (BasisId::Dual(f), BasisId::Dual(g)) => (coordinate(f, s), coordinate(g, s)),
            _ => return Err(Error::Domain { map: "smash product".into(), basis: p.to_string() }),
        };
        let mut out = Vector::zero(s);
        for (k, a0, a1) in terms(&dt.a_coaction.on_basis(a)?)? {
            let a0b = dt.a.mul_basis(&a0, b)?;
            let h = convolve_dual(&dt, &cb, &act_dual(&dt, &cb, &a1, &g)?, &f)?;
            out.add_scaled(&k, &smash_vector(s, &a0b, &h)?);
        }
        Ok(out)
    });
    Ok(SemialgebraDesc {
        name: format!("{} #ᵒᵖ {}*", datum.a.name, datum.c.name),
        semiring: s,
        carrier,
        mu,
        eta,
        quotient: datum.a.quotient.clone(),
    })
}

/// `a ↦ a # ε_C`.
pub fn smash_embedding(datum: &DKDatum) -> Result<LinearMap> {
    let s = datum.semiring().clone();
    let cb = finite_c(datum)?;
    let eps: Dual = cb.iter().map(|c| datum.c.epsilon.on_basis(c).map(|e| (c.clone(), e))).collect::<Result<_>>()?;
    let s2 = s.clone();
    Ok(LinearMap::new("a ↦ a#ε", &s, move |a| smash_vector(&s2, &Vector::basis(&s2, a.clone()), &eps)))
}

/// The embedding `A → A #ᵒᵖ C*` preserves products and the unit.
pub fn check_smash_embedding(datum: &DKDatum, d: usize) -> Result<CheckReport> {
    let smash = smash_product(datum)?;
    check_morphism(
        MorphismKind::Algebra,
        &smash_embedding(datum)?,
        &StructureDesc::Semialgebra(datum.a.clone()),
        &StructureDesc::Semialgebra(smash),
        d,
    )
}

// ---------------------------------------------------------------------------
// Hom product

/// `(f·g)(c) = Σ f(c₂)₍₀₎ g(c₁ f(c₂)₍₁₎)` on `Hom(C, A)`.
pub fn dk_hom_product(f: &LinearMap, g: &LinearMap, datum: &DKDatum) -> LinearMap {
    let (f, g, dt) = (f.clone(), g.clone(), datum.clone());
    LinearMap::new(format!("{}·{}", f.name(), g.name()), datum.semiring(), move |c| {
        let s = dt.semiring();
        let mut out = Vector::zero(s);
        for (k, c1, c2) in terms(&dt.c.delta.on_basis(c)?)? {
            let fc2 = f.on_basis(&c2)?;
            for (e, a0, b1) in terms(&dt.a_coaction.apply(&fc2)?)? {
                let gc = g.apply(&dt.act_c(&c1, &b1)?)?;
                out.add_scaled(&s.mul(&k, &e), &dt.a.mul(&Vector::basis(s, a0), &gc)?);
            }
        }
        Ok(out)
    })
}

/// The unit `η_A ∘ ε_C` of the Hom product.
pub fn dk_hom_unit(datum: &DKDatum) -> LinearMap {
    let (eps, eta) = (datum.c.epsilon.clone(), datum.a.eta.clone());
    LinearMap::new("η∘ε", datum.semiring(), move |c| Ok(eta.scale(&eps.on_basis(c)?)))
}

/// Maps `cᵢ ↦ aⱼ` (zero on other basis elements) for finite `C` and `A`.
pub fn elementary_maps(datum: &DKDatum) -> Result<Vec<LinearMap>> {
    let s = datum.semiring();
    let cb = finite_c(datum)?;
    let ab = datum.a.carrier.all()?;
    let mut out = Vec::new();
    for c in &cb {
        for a in &ab {
            let (c2, a2, s2) = (c.clone(), a.clone(), s.clone());
            out.push(LinearMap::new(format!("{c}↦{a}"), s, move |x| {
                Ok(if *x == c2 { Vector::basis(&s2, a2.clone()) } else { Vector::zero(&s2) })
            }));
        }
    }
    Ok(out)
}

/// Associativity on all triples of `maps` and both unit laws, compared on
/// basis elements of `C` of degree at most `d`.
pub fn check_hom_product(datum: &DKDatum, maps: &[LinearMap], d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("Hom product of {}", datum.name)).with_bound(d);
    let cb = datum.c.carrier.up_to(d);
    let unit = dk_hom_unit(datum);
    let q = &datum.a.quotient;
    for f in maps {
        for c in &cb {
            let fv = f.on_basis(c)?;
            let l = dk_hom_product(&unit, f, datum).on_basis(c)?;
            let eq = q.equal(&l, &fv)?;
            report.expect_eq("(η∘ε)·f = f", &[f.name().to_string(), c.to_string()], &l, &fv, eq);
            let r = dk_hom_product(f, &unit, datum).on_basis(c)?;
            let eq = q.equal(&r, &fv)?;
            report.expect_eq("f·(η∘ε) = f", &[f.name().to_string(), c.to_string()], &r, &fv, eq);
        }
        for g in maps {
            let fg = dk_hom_product(f, g, datum);
            for h in maps {
                let left = dk_hom_product(&fg, h, datum);
                let right = dk_hom_product(f, &dk_hom_product(g, h, datum), datum);
                for c in &cb {
                    let (l, r) = (left.on_basis(c)?, right.on_basis(c)?);
                    let eq = q.equal(&l, &r)?;
                    let inputs = [f.name(), g.name(), h.name(), &c.to_string()].map(str::to_string);
                    report.expect_eq("Hom product associativity", &inputs, &l, &r, eq);
                }
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Entwining

/// `ψ(c ⊗ a) = Σ a₍₀₎ ⊗ c a₍₁₎`.
pub fn entwining_map(datum: &DKDatum) -> LinearMap {
    let dt = datum.clone();
    LinearMap::new("ψ", datum.semiring(), move |p| {
        let s = dt.semiring();
        let (c, a) = split(p)?;
        let mut out = Vector::zero(s);
        for (k, a0, a1) in terms(&dt.a_coaction.on_basis(a)?)? {
            out.add_scaled(&k, &Vector::basis(s, a0).tensor(&dt.act_c(c, &a1)?)?);
        }
        Ok(out)
    })
}

/// Decides, on every basis pair `(m, a)` of degree at most `d`, both the DK
/// compatibility and the entwined condition `ρ(m a) = Σ m₍₀₎ ψ(m₍₁₎ ⊗ a)`,
/// and fails wherever the two verdicts differ.
pub fn check_entwining_equivalence(m: &DKModule, datum: &DKDatum, d: usize) -> Result<CheckReport> {
    let s = datum.semiring();
    let psi = entwining_map(datum);
    let mut report = CheckReport::new(format!("DK ⇔ ψ-entwined for {}", m.name)).with_bound(d);
    let mut holding = 0u64;
    for x in m.carrier.up_to(d) {
        for a in datum.a.carrier.up_to(d) {
            let (lhs, rhs) = dk_sides(m, datum, &x, &a)?;
            let dk = m.quotient.equal(&lhs, &rhs)?;
            let mut entwined = Vector::zero(s);
            for (k, m0, m1) in terms(&m.coaction.on_basis(&x)?)? {
                let pm = Vector::basis(s, m0).tensor(&psi.on_pair(&m1, &a)?)?;
                let acted = LinearMap::tensor(&m.action, &LinearMap::identity(s))?.apply(&reassociate_left(&pm)?)?;
                entwined.add_scaled(&k, &acted);
            }
            let via_psi = m.quotient.equal(&lhs, &entwined)?;
            holding += u64::from(dk);
            if dk != via_psi {
                report.fail_scalar("DK ⇔ ψ", names(&[&x, &a]), format!("DK {dk}"), format!("ψ {via_psi}"));
            } else {
                report.count();
            }
        }
    }
    report.note(format!("DK compatibility holds on {holding} pairs"));
    Ok(report)
}

/// The builtin data paired with their builtin modules: the Hopf case over
/// `B[Z/2]` with `M = B`, the `Z/4 → Z/2` grading with `M = A`, and a
/// corrupted Hopf module (`g·g := g`).
pub fn builtin_instances(s: &Semiring) -> Result<Vec<(DKDatum, DKModule)>> {
    let b = example(&Example::GroupHopf { order: 2 }, s)?.into_bisemialgebra()?;
    let hopf = DKDatum::hopf(&b);
    let regular = DKModule::relative_hopf(&hopf);
    let graded = DKDatum::graded_group(s, 4, 2)?;
    let relative = DKModule::relative_hopf(&graded);
    let mut corrupted = regular.clone();
    corrupted.name = "B[Z/2] with g·g := g".into();
    let mu = b.mu().clone();
    let s2 = s.clone();
    corrupted.action = LinearMap::new("corrupted μ", s, move |p| {
        let g = BasisId::atom("g");
        if *p == BasisId::pair(g.clone(), g.clone()) {
            Ok(Vector::basis(&s2, g))
        } else {
            mu.on_basis(p)
        }
    });
    Ok(vec![(hopf.clone(), regular), (graded, relative), (hopf, corrupted)])
}
