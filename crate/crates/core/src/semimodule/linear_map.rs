use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{BasisId, Vector};
use crate::error::{Error, Result};
use crate::semiring::{Scalar, Semiring};

type AssignFn = dyn Fn(&BasisId) -> Result<Vector> + Send + Sync;
type EvalFn = dyn Fn(&BasisId) -> Result<Scalar> + Send + Sync;

/// A basis assignment extended linearly. Cloning shares the assignment.
#[derive(Clone)]
pub struct LinearMap {
    name: String,
    semiring: Semiring,
    assign: Arc<AssignFn>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({} over {})", self.name, self.semiring)
    }
}

impl LinearMap {
    pub fn new(
        name: impl Into<String>,
        s: &Semiring,
        assign: impl Fn(&BasisId) -> Result<Vector> + Send + Sync + 'static,
    ) -> Self {
        LinearMap { name: name.into(), semiring: s.clone(), assign: Arc::new(assign) }
    }

    /// Map given by an explicit table; basis elements outside it are a domain error.
    pub fn from_table(name: impl Into<String>, s: &Semiring, table: BTreeMap<BasisId, Vector>) -> Self {
        let name = name.into();
        let label = name.clone();
        Self::new(name, s, move |b| {
            table.get(b).cloned().ok_or_else(|| Error::Domain { map: label.clone(), basis: b.to_string() })
        })
    }

    pub fn identity(s: &Semiring) -> Self {
        let s2 = s.clone();
        Self::new("id", s, move |b| Ok(Vector::basis(&s2, b.clone())))
    }

    pub fn zero(s: &Semiring) -> Self {
        let s2 = s.clone();
        Self::new("0", s, move |_| Ok(Vector::zero(&s2)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn on_basis(&self, b: &BasisId) -> Result<Vector> {
        let v = (self.assign)(b)?;
        self.semiring.check_same(v.semiring())?;
        Ok(v)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.semiring.check_same(v.semiring())?;
        v.map_linear(|b| self.on_basis(b))
    }

    /// Applies a map on a pair basis to `u ⊗ v`.
    pub fn apply2(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.apply(&u.tensor(v)?)
    }

    pub fn on_pair(&self, a: &BasisId, b: &BasisId) -> Result<Vector> {
        self.on_basis(&BasisId::pair(a.clone(), b.clone()))
    }

    /// `f ∘ g`.
    pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        f.semiring.check_same(&g.semiring)?;
        let (f2, g2) = (f.clone(), g.clone());
        Ok(Self::new(format!("{}∘{}", f.name, g.name), &f.semiring, move |b| f2.apply(&g2.on_basis(b)?)))
    }

    /// `f ⊗ g`, acting componentwise on pair basis elements.
    pub fn tensor(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        f.semiring.check_same(&g.semiring)?;
        let (f2, g2) = (f.clone(), g.clone());
        Ok(Self::new(format!("({}⊗{})", f.name, g.name), &f.semiring, move |b| {
            let (l, r) = b.as_pair().ok_or_else(|| {
                Error::Type(format!("{}⊗{} applied to non-pair basis {b}", f2.name, g2.name))
            })?;
            f2.on_basis(l)?.tensor(&g2.on_basis(r)?)
        }))
    }
}

/// A scalar-valued linear map (an element of the dual module).
#[derive(Clone)]
pub struct Functional {
    name: String,
    semiring: Semiring,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional({} over {})", self.name, self.semiring)
    }
}

impl Functional {
    pub fn new(
        name: impl Into<String>,
        s: &Semiring,
        eval: impl Fn(&BasisId) -> Result<Scalar> + Send + Sync + 'static,
    ) -> Self {
        Functional { name: name.into(), semiring: s.clone(), eval: Arc::new(eval) }
    }

    pub fn from_table(name: impl Into<String>, s: &Semiring, table: BTreeMap<BasisId, Scalar>) -> Self {
        let name = name.into();
        let label = name.clone();
        Self::new(name, s, move |b| {
            table.get(b).cloned().ok_or_else(|| Error::Domain { map: label.clone(), basis: b.to_string() })
        })
    }

    /// Functional with the given values, zero everywhere else.
    pub fn finite_support(name: impl Into<String>, s: &Semiring, values: BTreeMap<BasisId, Scalar>) -> Self {
        let s2 = s.clone();
        Self::new(name, s, move |b| Ok(values.get(b).cloned().unwrap_or_else(|| s2.zero())))
    }

    pub fn zero(s: &Semiring) -> Self {
        Self::finite_support("0", s, BTreeMap::new())
    }

    /// Indicator of a single basis element.
    pub fn delta(s: &Semiring, b: BasisId) -> Self {
        let name = format!("δ_{b}");
        Self::finite_support(name, s, BTreeMap::from([(b, s.one())]))
    }

    /// The constant functional on basis elements.
    pub fn constant(name: impl Into<String>, s: &Semiring, value: Scalar) -> Self {
        Self::new(name, s, move |_| Ok(value.clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn on_basis(&self, b: &BasisId) -> Result<Scalar> {
        (self.eval)(b)
    }

    pub fn eval(&self, v: &Vector) -> Result<Scalar> {
        self.semiring.check_same(v.semiring())?;
        v.eval_linear(|b| self.on_basis(b))
    }

    /// The same functional as a map into the ground module.
    pub fn to_linear_map(&self) -> LinearMap {
        let f = self.clone();
        let s = self.semiring.clone();
        LinearMap::new(self.name.clone(), &self.semiring, move |b| {
            Ok(Vector::term(&s, f.on_basis(b)?, BasisId::ground()))
        })
    }

    /// `f ∘ g` for a linear map `g`.
    pub fn after(&self, g: &LinearMap) -> Functional {
        let (f, g) = (self.clone(), g.clone());
        Functional::new(format!("{}∘{}", f.name, g.name()), &self.semiring.clone(), move |b| {
            f.eval(&g.on_basis(b)?)
        })
    }

    /// Restriction to a finite list of basis elements, zero elsewhere.
    pub fn restricted(&self, basis: &[BasisId]) -> Result<Functional> {
        let mut values = BTreeMap::new();
        for b in basis {
            let v = self.on_basis(b)?;
            if !self.semiring.is_zero(&v) {
                values.insert(b.clone(), v);
            }
        }
        Ok(Functional::finite_support(self.name.clone(), &self.semiring, values))
    }
}

/// `(f ⊗ id)(v)` for `v` over a pair basis, with the scalar leg absorbed.
pub fn contract_left(f: &Functional, v: &Vector) -> Result<Vector> {
    v.map_linear(|b| {
        let (l, r) = b.as_pair().ok_or_else(|| Error::Type(format!("expected a pair basis, found {b}")))?;
        Ok(Vector::term(v.semiring(), f.on_basis(l)?, r.clone()))
    })
}

/// `(id ⊗ f)(v)` for `v` over a pair basis.
pub fn contract_right(f: &Functional, v: &Vector) -> Result<Vector> {
    v.map_linear(|b| {
        let (l, r) = b.as_pair().ok_or_else(|| Error::Type(format!("expected a pair basis, found {b}")))?;
        Ok(Vector::term(v.semiring(), f.on_basis(r)?, l.clone()))
    })
}

/// `(f ⊗ g)(v)` as a scalar.
pub fn eval_pair(f: &Functional, g: &Functional, v: &Vector) -> Result<Scalar> {
    let s = v.semiring().clone();
    v.eval_linear(|b| {
        let (l, r) = b.as_pair().ok_or_else(|| Error::Type(format!("expected a pair basis, found {b}")))?;
        Ok(s.mul(&f.on_basis(l)?, &g.on_basis(r)?))
    })
}

/// Re-brackets every term `a ⊗ (b ⊗ c)` as `(a ⊗ b) ⊗ c`.
pub fn reassociate_left(v: &Vector) -> Result<Vector> {
    v.map_linear(|b| {
        let bad = || Error::Type(format!("expected a ⊗ (b ⊗ c), found {b}"));
        let (a, rest) = b.as_pair().ok_or_else(bad)?;
        let (x, y) = rest.as_pair().ok_or_else(bad)?;
        Ok(Vector::basis(v.semiring(), BasisId::pair(BasisId::pair(a.clone(), x.clone()), y.clone())))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_domain_errors() {
        let s = Semiring::naturals();
        let v = Vector::from_terms(&s, [(Scalar::nat(3), BasisId::atom("a")), (Scalar::nat(1), BasisId::atom("b"))]);
        assert_eq!(LinearMap::identity(&s).apply(&v).unwrap(), v);
        let partial = LinearMap::from_table(
            "half",
            &s,
            BTreeMap::from([(BasisId::atom("a"), Vector::basis(&s, BasisId::atom("b")))]),
        );
        match partial.apply(&v) {
            Err(Error::Domain { map, basis }) => {
                assert_eq!(map, "half");
                assert_eq!(basis, "b");
            }
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn compose_order() {
        let s = Semiring::boolean();
        let a = BasisId::atom("a");
        let b = BasisId::atom("b");
        let c = BasisId::atom("c");
        let f = LinearMap::from_table("f", &s, BTreeMap::from([(b.clone(), Vector::basis(&s, c.clone()))]));
        let g = LinearMap::from_table("g", &s, BTreeMap::from([(a.clone(), Vector::basis(&s, b.clone()))]));
        let fg = LinearMap::compose(&f, &g).unwrap();
        assert_eq!(fg.on_basis(&a).unwrap(), Vector::basis(&s, c));
        assert!(LinearMap::compose(&g, &f).unwrap().on_basis(&a).is_err());
    }

    #[test]
    fn tensor_map_is_componentwise() {
        let s = Semiring::naturals();
        let double = LinearMap::new("2", &s, {
            let s = s.clone();
            move |b| Ok(Vector::term(&s, Scalar::nat(2), b.clone()))
        });
        let t = LinearMap::tensor(&double, &LinearMap::identity(&s)).unwrap();
        let p = BasisId::pair(BasisId::atom("a"), BasisId::atom("b"));
        assert_eq!(t.on_basis(&p).unwrap(), Vector::term(&s, Scalar::nat(2), p.clone()));
        assert!(matches!(t.on_basis(&BasisId::atom("a")), Err(Error::Type(_))));
    }
}
