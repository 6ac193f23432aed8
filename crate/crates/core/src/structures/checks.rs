use std::collections::HashMap;

use super::{split, BisemialgebraDesc, HopfDesc, SemialgebraDesc, SemicoalgebraDesc, StructureDesc};
use crate::error::Result;
use crate::report::CheckReport;
use crate::semimodule::{
    check_functional_quotient_compat, check_quotient_compat, contract_left, contract_right, reassociate_left,
    Arity, BasisId, LinearMap, Vector,
};
use crate::semiring::scalar_vector;

fn labels(bs: &[&BasisId]) -> Vec<String> {
    bs.iter().map(|b| b.to_string()).collect()
}

/// Associativity and both unit laws on all basis triples of degree at most `d`.
pub fn check_semialgebra(a: &SemialgebraDesc, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("semialgebra laws of {}", a.name)).with_bound(d);
    let basis = a.carrier.up_to(d);
    let mut products: HashMap<(usize, usize), Vector> = HashMap::new();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            products.insert((i, j), a.mul_basis(u, v)?);
        }
    }
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let uv = &products[&(i, j)];
            for (k, w) in basis.iter().enumerate() {
                let lhs = a.mu.apply(&uv.tensor(&Vector::basis(&a.semiring, w.clone()))?)?;
                let rhs = a.mu.apply(&Vector::basis(&a.semiring, u.clone()).tensor(&products[&(j, k)])?)?;
                let eq = a.equal(&lhs, &rhs)?;
                report.expect_eq("associativity", &labels(&[u, v, w]), &lhs, &rhs, eq);
            }
        }
        let bu = Vector::basis(&a.semiring, u.clone());
        let left = a.mul(&a.eta, &bu)?;
        let eq = a.equal(&left, &bu)?;
        report.expect_eq("left unit", &labels(&[u]), &left, &bu, eq);
        let right = a.mul(&bu, &a.eta)?;
        let eq = a.equal(&right, &bu)?;
        report.expect_eq("right unit", &labels(&[u]), &right, &bu, eq);
    }
    Ok(report)
}

/// Coassociativity and both counit laws on basis elements of degree at most `d`.
pub fn check_semicoalgebra(c: &SemicoalgebraDesc, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("semicoalgebra laws of {}", c.name)).with_bound(d);
    let id = LinearMap::identity(&c.semiring);
    let left = LinearMap::tensor(&c.delta, &id)?;
    let right = LinearMap::tensor(&id, &c.delta)?;
    for b in c.carrier.up_to(d) {
        let bv = Vector::basis(&c.semiring, b.clone());
        let db = c.delta.on_basis(&b)?;
        let lhs = left.apply(&db)?;
        let rhs = reassociate_left(&right.apply(&db)?)?;
        let eq = c.quotient.equal(&lhs, &rhs)?;
        report.expect_eq("coassociativity", &labels(&[&b]), &lhs, &rhs, eq);
        let l = contract_left(&c.epsilon, &db)?;
        let eq = c.quotient.equal(&l, &bv)?;
        report.expect_eq("left counit", &labels(&[&b]), &l, &bv, eq);
        let r = contract_right(&c.epsilon, &db)?;
        let eq = c.quotient.equal(&r, &bv)?;
        report.expect_eq("right counit", &labels(&[&b]), &r, &bv, eq);
    }
    Ok(report)
}

/// Compatibility: `Δ` and `ε` are semialgebra morphisms, on basis pairs of
/// degree at most `d`. Every failing pair is kept as a witness.
pub fn check_bisemialgebra(b: &BisemialgebraDesc, d: usize) -> Result<CheckReport> {
    let a = &b.algebra;
    let s = &a.semiring;
    let mut report = CheckReport::new(format!("bisemialgebra compatibility of {}", a.name)).with_bound(d);
    let basis = a.carrier.up_to(d);
    let deltas: Vec<Vector> = basis.iter().map(|u| b.delta().on_basis(u)).collect::<Result<_>>()?;
    let counits = basis.iter().map(|u| b.epsilon().on_basis(u)).collect::<Result<Vec<_>>>()?;
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let uv = a.mul_basis(u, v)?;
            let lhs = b.delta().apply(&uv)?;
            let rhs = a.pair_mul(&deltas[i], &deltas[j])?;
            let eq = a.quotient.equal(&lhs, &rhs)?;
            report.expect_eq("comultiplication is multiplicative", &labels(&[u, v]), &lhs, &rhs, eq);
            let l = b.epsilon().eval(&uv)?;
            let r = s.mul(&counits[i], &counits[j]);
            let (lv, rv) = (scalar_vector(s, l), scalar_vector(s, r));
            let eq = lv == rv;
            report.expect_eq("counit is multiplicative", &labels(&[u, v]), &lv, &rv, eq);
        }
    }
    let lhs = b.delta().apply(&a.eta)?;
    let rhs = a.eta.tensor(&a.eta)?;
    let eq = a.quotient.equal(&lhs, &rhs)?;
    report.expect_eq("comultiplication preserves the unit", &["1".into()], &lhs, &rhs, eq);
    let e1 = scalar_vector(s, b.epsilon().eval(&a.eta)?);
    let one = scalar_vector(s, s.one());
    let eq = e1 == one;
    report.expect_eq("counit preserves the unit", &["1".into()], &e1, &one, eq);
    Ok(report)
}

/// Both antipode identities on basis elements of degree at most `d`.
pub fn check_hopf(h: &HopfDesc, d: usize) -> Result<CheckReport> {
    let a = &h.bi.algebra;
    let s = &a.semiring;
    let mut report = CheckReport::new(format!("antipode laws of {}", a.name)).with_bound(d);
    for b in a.carrier.up_to(d) {
        let db = h.bi.delta().on_basis(&b)?;
        let target = a.eta.scale(&h.bi.epsilon().on_basis(&b)?);
        let mut left = Vector::zero(s);
        let mut right = Vector::zero(s);
        for (p, c) in db.iter() {
            let (b1, b2) = split(p)?;
            let b1v = Vector::basis(s, b1.clone());
            let b2v = Vector::basis(s, b2.clone());
            left.add_scaled(c, &a.mul(&h.antipode.on_basis(b1)?, &b2v)?);
            right.add_scaled(c, &a.mul(&b1v, &h.antipode.on_basis(b2)?)?);
        }
        let eq = a.equal(&left, &target)?;
        report.expect_eq("left antipode", &labels(&[&b]), &left, &target, eq);
        let eq = a.equal(&right, &target)?;
        report.expect_eq("right antipode", &labels(&[&b]), &right, &target, eq);
    }
    Ok(report)
}

pub fn check_commutativity(a: &SemialgebraDesc, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("commutativity of {}", a.name)).with_bound(d);
    let basis = a.carrier.up_to(d);
    for (i, u) in basis.iter().enumerate() {
        for v in &basis[i + 1..] {
            let lhs = a.mul_basis(u, v)?;
            let rhs = a.mul_basis(v, u)?;
            let eq = a.equal(&lhs, &rhs)?;
            report.expect_eq("commutativity", &labels(&[u, v]), &lhs, &rhs, eq);
        }
    }
    Ok(report)
}

pub fn check_cocommutativity(c: &SemicoalgebraDesc, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("cocommutativity of {}", c.name)).with_bound(d);
    for b in c.carrier.up_to(d) {
        let db = c.delta.on_basis(&b)?;
        let tw = db.twist()?;
        let eq = c.quotient.equal(&tw, &db)?;
        report.expect_eq("cocommutativity", &labels(&[&b]), &tw, &db, eq);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct QuantumMonoidReport {
    pub commutativity: CheckReport,
    pub cocommutativity: CheckReport,
    pub is_quantum_monoid: bool,
}

/// A quantum monoid is a Hopf semialgebra that is neither commutative nor
/// cocommutative; both failures come with witnesses.
pub fn classify_quantum_monoid(h: &HopfDesc, d: usize) -> Result<QuantumMonoidReport> {
    let commutativity = check_commutativity(&h.bi.algebra, d)?;
    let cocommutativity = check_cocommutativity(&h.bi.coalgebra, d)?;
    let is_quantum_monoid = !commutativity.passed() && !cocommutativity.passed();
    Ok(QuantumMonoidReport { commutativity, cocommutativity, is_quantum_monoid })
}

/// Every applicable law of a descriptor, merged into one report. Quotient
/// carriers additionally have their structure maps checked for
/// well-definedness.
pub fn check_structure(desc: &StructureDesc, d: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} {}", desc.kind(), desc.name())).with_bound(d);
    if let Some(a) = desc.as_algebra() {
        report.merge(check_semialgebra(a, d)?);
    }
    if let Some(c) = desc.as_coalgebra() {
        report.merge(check_semicoalgebra(c, d)?);
    }
    if let Some(b) = desc.as_bisemialgebra() {
        report.merge(check_bisemialgebra(b, d)?);
    }
    if let Some(h) = desc.as_hopf() {
        report.merge(check_hopf(h, d)?);
    }
    let q = desc.quotient();
    if !q.is_free() {
        let probe = desc.carrier().up_to(d);
        if let Some(a) = desc.as_algebra() {
            report.merge(check_quotient_compat(&a.mu, Arity::Binary, q, q, &probe));
        }
        if let Some(c) = desc.as_coalgebra() {
            report.merge(check_quotient_compat(&c.delta, Arity::Unary, q, q, &probe));
            report.merge(check_functional_quotient_compat(&c.epsilon, q));
        }
        if let Some(h) = desc.as_hopf() {
            report.merge(check_quotient_compat(&h.antipode, Arity::Unary, q, q, &probe));
        }
    }
    Ok(report)
}
