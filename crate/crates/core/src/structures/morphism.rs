use serde::{Deserialize, Serialize};

use super::StructureDesc;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::semimodule::LinearMap;
use crate::semiring::scalar_vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

/// Checks the defining diagrams of a morphism `f: src → tgt` on basis
/// elements (and pairs) of degree at most `d`.
pub fn check_morphism(
    kind: MorphismKind,
    f: &LinearMap,
    src: &StructureDesc,
    tgt: &StructureDesc,
    d: usize,
) -> Result<CheckReport> {
    let mismatch = |what: &str| {
        Error::Configuration(format!("{kind:?} morphism needs {what} on both sides ({} → {})", src.name(), tgt.name()))
    };
    src.semiring().check_same(tgt.semiring())?;
    let s = src.semiring().clone();
    let basis = src.carrier().up_to(d);
    let mut report = CheckReport::new(format!("{} morphism {}: {} → {}", format!("{kind:?}").to_lowercase(), f.name(), src.name(), tgt.name()))
        .with_bound(d);
    let algebra = matches!(kind, MorphismKind::Algebra | MorphismKind::Bialgebra | MorphismKind::Hopf);
    let coalgebra = matches!(kind, MorphismKind::Coalgebra | MorphismKind::Bialgebra | MorphismKind::Hopf);
    if algebra {
        let (a, a2) = (src.as_algebra().ok_or_else(|| mismatch("a semialgebra"))?, tgt.as_algebra().ok_or_else(|| mismatch("a semialgebra"))?);
        for u in &basis {
            let fu = f.on_basis(u)?;
            for v in &basis {
                let lhs = f.apply(&a.mul_basis(u, v)?)?;
                let rhs = a2.mul(&fu, &f.on_basis(v)?)?;
                let eq = a2.equal(&lhs, &rhs)?;
                report.expect_eq("preserves products", &[u.to_string(), v.to_string()], &lhs, &rhs, eq);
            }
        }
        let lhs = f.apply(&a.eta)?;
        let eq = a2.equal(&lhs, &a2.eta)?;
        report.expect_eq("preserves the unit", &["1".into()], &lhs, &a2.eta, eq);
    }
    if coalgebra {
        let (c, c2) = (
            src.as_coalgebra().ok_or_else(|| mismatch("a semicoalgebra"))?,
            tgt.as_coalgebra().ok_or_else(|| mismatch("a semicoalgebra"))?,
        );
        let ff = LinearMap::tensor(f, f)?;
        for b in &basis {
            let fb = f.on_basis(b)?;
            let lhs = c2.delta.apply(&fb)?;
            let rhs = ff.apply(&c.delta.on_basis(b)?)?;
            let eq = c2.quotient.equal(&lhs, &rhs)?;
            report.expect_eq("preserves the comultiplication", &[b.to_string()], &lhs, &rhs, eq);
            let l = scalar_vector(&s, c2.epsilon.eval(&fb)?);
            let r = scalar_vector(&s, c.epsilon.on_basis(b)?);
            let eq = l == r;
            report.expect_eq("preserves the counit", &[b.to_string()], &l, &r, eq);
        }
    }
    if kind == MorphismKind::Hopf {
        let (h, h2) = (src.as_hopf().ok_or_else(|| mismatch("an antipode"))?, tgt.as_hopf().ok_or_else(|| mismatch("an antipode"))?);
        for b in &basis {
            let lhs = h2.antipode.apply(&f.on_basis(b)?)?;
            let rhs = f.apply(&h.antipode.on_basis(b)?)?;
            let eq = h2.bi.quotient().equal(&lhs, &rhs)?;
            report.expect_eq("intertwines the antipodes", &[b.to_string()], &lhs, &rhs, eq);
        }
    }
    Ok(report)
}
