use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::ser::SerializeSeq;
use serde::Serialize;

use super::BasisId;
use crate::error::{Error, Result};
use crate::semiring::{Scalar, Semiring};

/// Finitely supported combination of basis elements in canonical sparse form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    semiring: Semiring,
    terms: BTreeMap<BasisId, Scalar>,
}

impl Hash for Vector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Vector {
    pub fn zero(s: &Semiring) -> Self {
        Vector { semiring: s.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(s: &Semiring, b: BasisId) -> Self {
        Self::term(s, s.one(), b)
    }

    pub fn term(s: &Semiring, c: Scalar, b: BasisId) -> Self {
        let mut v = Self::zero(s);
        v.add_term(b, c);
        v
    }

    /// Sums the given terms; repeated basis elements accumulate.
    pub fn from_terms(s: &Semiring, terms: impl IntoIterator<Item = (Scalar, BasisId)>) -> Self {
        let mut v = Self::zero(s);
        for (c, b) in terms {
            v.add_term(b, c);
        }
        v
    }

    /// Sum of basis elements with coefficient one each.
    pub fn sum_of(s: &Semiring, basis: impl IntoIterator<Item = BasisId>) -> Self {
        Self::from_terms(s, basis.into_iter().map(|b| (s.one(), b)))
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisId, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisId> {
        self.terms.keys()
    }

    pub fn coeff(&self, b: &BasisId) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(|| self.semiring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·b` in place, keeping the sparse form canonical.
    pub fn add_term(&mut self, b: BasisId, c: Scalar) {
        if self.semiring.is_zero(&c) {
            return;
        }
        let s = &self.semiring;
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = s.add(e.get(), &c);
                if s.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `c·v` in place. Both vectors must share the semiring.
    pub fn add_scaled(&mut self, c: &Scalar, v: &Vector) {
        for (b, x) in &v.terms {
            let y = self.semiring.mul(c, x);
            self.add_term(b.clone(), y);
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.semiring.check_same(&other.semiring)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        let mut out = Self::zero(&self.semiring);
        out.add_scaled(c, self);
        out
    }

    /// Bilinear expansion onto the pair basis.
    pub fn tensor(&self, other: &Vector) -> Result<Vector> {
        self.semiring.check_same(&other.semiring)?;
        let mut out = Self::zero(&self.semiring);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(BasisId::pair(a.clone(), b.clone()), self.semiring.mul(x, y));
            }
        }
        Ok(out)
    }

    /// Swaps the components of every pair term.
    pub fn twist(&self) -> Result<Vector> {
        let mut out = Self::zero(&self.semiring);
        for (b, c) in &self.terms {
            let (l, r) = b
                .as_pair()
                .ok_or_else(|| Error::Type(format!("twist needs a pair basis, found {b}")))?;
            out.add_term(BasisId::pair(r.clone(), l.clone()), c.clone());
        }
        Ok(out)
    }

    /// Linear extension of a basis-wise assignment.
    pub fn map_linear(&self, mut f: impl FnMut(&BasisId) -> Result<Vector>) -> Result<Vector> {
        let mut out = Self::zero(&self.semiring);
        for (b, c) in &self.terms {
            let image = f(b)?;
            self.semiring.check_same(image.semiring())?;
            out.add_scaled(c, &image);
        }
        Ok(out)
    }

    /// Linear extension of a scalar-valued assignment.
    pub fn eval_linear(&self, mut f: impl FnMut(&BasisId) -> Result<Scalar>) -> Result<Scalar> {
        let s = &self.semiring;
        let mut acc = s.zero();
        for (b, c) in &self.terms {
            acc = s.add(&acc, &s.mul(c, &f(b)?));
        }
        Ok(acc)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(BasisId::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let label = match b {
                BasisId::Pair(..) if self.terms.len() > 1 || !self.semiring.is_one(c) => format!("({b})"),
                _ => b.to_string(),
            };
            if self.semiring.is_one(c) {
                f.write_str(&label)?;
            } else {
                write!(f, "{}·{label}", self.semiring.format(c))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    coeff: String,
    basis: &'a BasisId,
}

impl Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&TermRecord { coeff: self.semiring.format(c), basis: b })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> BasisId {
        BasisId::atom("x")
    }
    fn y() -> BasisId {
        BasisId::atom("y")
    }

    #[test]
    fn boolean_idempotent_sum() {
        let b = Semiring::boolean();
        let v = Vector::basis(&b, x());
        assert_eq!(v.add(&v).unwrap(), v);
    }

    #[test]
    fn naturals_scaling() {
        let n = Semiring::naturals();
        let v = Vector::sum_of(&n, [x(), y()]);
        let w = v.scale(&Scalar::nat(2));
        assert_eq!(w, Vector::from_terms(&n, [(Scalar::nat(2), x()), (Scalar::nat(2), y())]));
        assert_eq!(w.to_string(), "2·x + 2·y");
    }

    #[test]
    fn xn_sum_is_max() {
        let s = Semiring::xn(2).unwrap();
        let v = Vector::term(&s, Scalar::Capped(Some(1)), x())
            .add(&Vector::term(&s, Scalar::Capped(Some(2)), x()))
            .unwrap();
        assert_eq!(v.coeff(&x()), Scalar::Capped(Some(2)));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let s = Semiring::naturals();
        let v = Vector::term(&s, Scalar::nat(0), x());
        assert!(v.is_zero());
        let z7 = Semiring::integers_mod(7).unwrap();
        let mut w = Vector::term(&z7, z7.parse("3").unwrap(), x());
        w.add_term(x(), z7.parse("4").unwrap());
        assert!(w.is_zero());
    }

    #[test]
    fn tensor_and_twist() {
        let b = Semiring::boolean();
        let z = BasisId::atom("z");
        let u = Vector::sum_of(&b, [x(), y()]);
        let t = u.tensor(&Vector::basis(&b, z.clone())).unwrap();
        assert_eq!(t, Vector::sum_of(&b, [BasisId::pair(x(), z.clone()), BasisId::pair(y(), z.clone())]));
        assert!(Vector::zero(&b).tensor(&u).unwrap().is_zero());
        let n = Semiring::naturals();
        let p = Vector::term(&n, Scalar::nat(2), x()).tensor(&Vector::term(&n, Scalar::nat(3), y())).unwrap();
        assert_eq!(p.coeff(&BasisId::pair(x(), y())), Scalar::nat(6));
        assert_eq!(p.twist().unwrap().coeff(&BasisId::pair(y(), x())), Scalar::nat(6));
        let aa = Vector::basis(&b, BasisId::pair(x(), x()));
        assert_eq!(aa.twist().unwrap(), aa);
        assert!(matches!(u.twist(), Err(Error::Type(_))));
    }

    #[test]
    fn mismatch_is_an_error() {
        let u = Vector::basis(&Semiring::boolean(), x());
        let v = Vector::basis(&Semiring::naturals(), x());
        assert!(matches!(u.add(&v), Err(Error::SemiringMismatch { .. })));
        assert!(matches!(u.tensor(&v), Err(Error::SemiringMismatch { .. })));
    }
}
