use super::{split, SemialgebraDesc, SemicoalgebraDesc};
use crate::error::Result;
use crate::report::CheckReport;
use crate::semimodule::{BasisId, Functional, LinearMap, Quotient, Vector};

/// `(f ∗ g)(c) = Σ f(c₁) g(c₂)` with the product of `a`.
pub fn convolve(f: &LinearMap, g: &LinearMap, c: &SemicoalgebraDesc, a: &SemialgebraDesc) -> Result<LinearMap> {
    a.semiring.check_same(&c.semiring)?;
    a.semiring.check_same(f.semiring())?;
    a.semiring.check_same(g.semiring())?;
    let (f2, g2, c2, a2) = (f.clone(), g.clone(), c.clone(), a.clone());
    Ok(LinearMap::new(format!("{}∗{}", f.name(), g.name()), &a.semiring, move |b| {
        let mut out = Vector::zero(&a2.semiring);
        for (p, coef) in c2.delta.on_basis(b)?.iter() {
            let (b1, b2) = split(p)?;
            let term = a2.mul(&f2.on_basis(b1)?, &g2.on_basis(b2)?)?;
            out.add_scaled(coef, &term);
        }
        Ok(out)
    }))
}

/// Convolution in the dual semialgebra `C*`.
pub fn convolve_functionals(f: &Functional, g: &Functional, c: &SemicoalgebraDesc) -> Result<Functional> {
    c.semiring.check_same(f.semiring())?;
    c.semiring.check_same(g.semiring())?;
    let (f2, g2, c2) = (f.clone(), g.clone(), c.clone());
    Ok(Functional::new(format!("{}∗{}", f.name(), g.name()), &c.semiring, move |b| {
        let s = &c2.semiring;
        let mut acc = s.zero();
        for (p, coef) in c2.delta.on_basis(b)?.iter() {
            let (b1, b2) = split(p)?;
            let term = s.mul(coef, &s.mul(&f2.on_basis(b1)?, &g2.on_basis(b2)?));
            acc = s.add(&acc, &term);
        }
        Ok(acc)
    }))
}

/// The convolution unit `η_A ∘ ε_C`.
pub fn unit_map(c: &SemicoalgebraDesc, a: &SemialgebraDesc) -> LinearMap {
    let (eps, eta) = (c.epsilon.clone(), a.eta.clone());
    LinearMap::new("η∘ε", &a.semiring, move |b| Ok(eta.scale(&eps.on_basis(b)?)))
}

/// Compares two maps on the given basis elements under quotient equality.
pub fn maps_agree(
    law: &str,
    f: &LinearMap,
    g: &LinearMap,
    basis: &[BasisId],
    quotient: &Quotient,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(law.to_string());
    for b in basis {
        let (lhs, rhs) = (f.on_basis(b)?, g.on_basis(b)?);
        let eq = quotient.equal(&lhs, &rhs)?;
        report.expect_eq(law, &[b.to_string()], &lhs, &rhs, eq);
    }
    Ok(report)
}
