//! Structure-constant descriptors, their law checkers, convolution and the
//! builtin example gallery.

mod checks;
mod convolution;
pub mod examples;
mod morphism;

use std::fmt;
use std::sync::Arc;

pub use checks::{
    check_bisemialgebra, check_cocommutativity, check_commutativity, check_hopf, check_semialgebra,
    check_semicoalgebra, check_structure, classify_quantum_monoid, QuantumMonoidReport,
};
pub use convolution::{convolve, convolve_functionals, maps_agree, unit_map};
pub use examples::{example, Example};
pub use morphism::{check_morphism, MorphismKind};

use crate::error::{Error, Result};
use crate::semimodule::{BasisId, Functional, LinearMap, Quotient, Vector};
use crate::semiring::{Scalar, Semiring};

/// Default degree bound for quantifying over infinite bases.
pub const DEFAULT_DEGREE: usize = 4;

type GradedFn = dyn Fn(usize) -> Vec<BasisId> + Send + Sync;

/// The basis of a carrier, enumerated by degree.
#[derive(Clone)]
pub enum Carrier {
    Finite(Vec<BasisId>),
    /// Words over an alphabet in length-lexicographic order, optionally
    /// truncated at `max_len`.
    Words { alphabet: Vec<String>, max_len: Option<usize> },
    /// Basis elements of each exact degree.
    Graded(Arc<GradedFn>),
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Finite(b) => write!(f, "Finite({} elements)", b.len()),
            Carrier::Words { alphabet, max_len } => write!(f, "Words({alphabet:?}, {max_len:?})"),
            Carrier::Graded(_) => f.write_str("Graded"),
        }
    }
}

impl Carrier {
    pub fn graded(f: impl Fn(usize) -> Vec<BasisId> + Send + Sync + 'static) -> Self {
        Carrier::Graded(Arc::new(f))
    }

    pub fn words(alphabet: &[String], max_len: Option<usize>) -> Self {
        Carrier::Words { alphabet: alphabet.to_vec(), max_len }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Carrier::Finite(_) => true,
            Carrier::Words { alphabet, max_len } => max_len.is_some() || alphabet.is_empty(),
            Carrier::Graded(_) => false,
        }
    }

    /// Basis elements of degree at most `d` (all of a finite basis).
    pub fn up_to(&self, d: usize) -> Vec<BasisId> {
        match self {
            Carrier::Finite(b) => b.clone(),
            Carrier::Words { alphabet, max_len } => {
                let top = max_len.map_or(d, |m| m.min(d));
                words_up_to(alphabet, top)
            }
            Carrier::Graded(f) => (0..=d).flat_map(|k| f(k)).collect(),
        }
    }

    /// The whole basis, when finite.
    pub fn all(&self) -> Result<Vec<BasisId>> {
        match self {
            Carrier::Finite(b) => Ok(b.clone()),
            Carrier::Words { alphabet, max_len: Some(m) } => Ok(words_up_to(alphabet, *m)),
            _ => Err(Error::Unsupported("the carrier basis is infinite".into())),
        }
    }
}

/// All words of length at most `max_len`, shorter first, then lexicographic
/// in the alphabet order.
pub fn words_up_to(alphabet: &[String], max_len: usize) -> Vec<BasisId> {
    let mut out = vec![Vec::<String>::new()];
    let mut layer = vec![Vec::<String>::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for a in alphabet {
                let mut w2 = w.clone();
                w2.push(a.clone());
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(BasisId::Word).collect()
}

#[derive(Clone, Debug)]
pub struct SemialgebraDesc {
    pub name: String,
    pub semiring: Semiring,
    pub carrier: Carrier,
    /// Multiplication, defined on pair basis elements.
    pub mu: LinearMap,
    pub eta: Vector,
    pub quotient: Quotient,
}

#[derive(Clone, Debug)]
pub struct SemicoalgebraDesc {
    pub name: String,
    pub semiring: Semiring,
    pub carrier: Carrier,
    pub delta: LinearMap,
    pub epsilon: Functional,
    pub quotient: Quotient,
}

#[derive(Clone, Debug)]
pub struct BisemialgebraDesc {
    pub algebra: SemialgebraDesc,
    pub coalgebra: SemicoalgebraDesc,
}

#[derive(Clone, Debug)]
pub struct HopfDesc {
    pub bi: BisemialgebraDesc,
    pub antipode: LinearMap,
}

#[derive(Clone, Debug)]
pub enum StructureDesc {
    Semialgebra(SemialgebraDesc),
    Semicoalgebra(SemicoalgebraDesc),
    Bisemialgebra(BisemialgebraDesc),
    Hopf(HopfDesc),
}

impl SemialgebraDesc {
    pub fn mul(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.mu.apply2(u, v)
    }

    pub fn mul_basis(&self, a: &BasisId, b: &BasisId) -> Result<Vector> {
        self.mu.on_pair(a, b)
    }

    /// Product on `A ⊗ A` with the middle twist: `(a⊗b)(a'⊗b') = aa' ⊗ bb'`.
    pub fn pair_mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let s = &self.semiring;
        let mut out = Vector::zero(s);
        for (p, c) in x.iter() {
            let (a, b) = split(p)?;
            for (q, e) in y.iter() {
                let (a2, b2) = split(q)?;
                let t = self.mul_basis(a, a2)?.tensor(&self.mul_basis(b, b2)?)?;
                out.add_scaled(&s.mul(c, e), &t);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, v: &Vector, n: u64) -> Result<Vector> {
        let mut out = self.eta.clone();
        for _ in 0..n {
            out = self.mul(&out, v)?;
        }
        Ok(out)
    }

    /// `n`-th power in the pair algebra, starting from `1 ⊗ 1`.
    pub fn pair_pow(&self, v: &Vector, n: u64) -> Result<Vector> {
        let mut out = self.eta.tensor(&self.eta)?;
        for _ in 0..n {
            out = self.pair_mul(&out, v)?;
        }
        Ok(out)
    }

    pub fn equal(&self, u: &Vector, v: &Vector) -> Result<bool> {
        self.quotient.equal(u, v)
    }
}

impl SemicoalgebraDesc {
    pub fn coproduct(&self, v: &Vector) -> Result<Vector> {
        self.delta.apply(v)
    }

    pub fn counit(&self, v: &Vector) -> Result<Scalar> {
        self.epsilon.eval(v)
    }
}

impl BisemialgebraDesc {
    pub fn name(&self) -> &str {
        &self.algebra.name
    }
    pub fn semiring(&self) -> &Semiring {
        &self.algebra.semiring
    }
    pub fn carrier(&self) -> &Carrier {
        &self.algebra.carrier
    }
    pub fn quotient(&self) -> &Quotient {
        &self.algebra.quotient
    }
    pub fn unit(&self) -> &Vector {
        &self.algebra.eta
    }
    pub fn mu(&self) -> &LinearMap {
        &self.algebra.mu
    }
    pub fn delta(&self) -> &LinearMap {
        &self.coalgebra.delta
    }
    pub fn epsilon(&self) -> &Functional {
        &self.coalgebra.epsilon
    }
}

impl HopfDesc {
    pub fn name(&self) -> &str {
        self.bi.name()
    }
    pub fn semiring(&self) -> &Semiring {
        self.bi.semiring()
    }
}

impl StructureDesc {
    pub fn name(&self) -> &str {
        match self {
            StructureDesc::Semialgebra(a) => &a.name,
            StructureDesc::Semicoalgebra(c) => &c.name,
            StructureDesc::Bisemialgebra(b) => b.name(),
            StructureDesc::Hopf(h) => h.name(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            StructureDesc::Semialgebra(_) => "semialgebra",
            StructureDesc::Semicoalgebra(_) => "semicoalgebra",
            StructureDesc::Bisemialgebra(_) => "bisemialgebra",
            StructureDesc::Hopf(_) => "hopf",
        }
    }

    pub fn semiring(&self) -> &Semiring {
        match self {
            StructureDesc::Semialgebra(a) => &a.semiring,
            StructureDesc::Semicoalgebra(c) => &c.semiring,
            StructureDesc::Bisemialgebra(b) => b.semiring(),
            StructureDesc::Hopf(h) => h.semiring(),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        match self {
            StructureDesc::Semialgebra(a) => &a.carrier,
            StructureDesc::Semicoalgebra(c) => &c.carrier,
            StructureDesc::Bisemialgebra(b) => b.carrier(),
            StructureDesc::Hopf(h) => h.bi.carrier(),
        }
    }

    pub fn quotient(&self) -> &Quotient {
        match self {
            StructureDesc::Semialgebra(a) => &a.quotient,
            StructureDesc::Semicoalgebra(c) => &c.quotient,
            StructureDesc::Bisemialgebra(b) => b.quotient(),
            StructureDesc::Hopf(h) => h.bi.quotient(),
        }
    }

    pub fn as_algebra(&self) -> Option<&SemialgebraDesc> {
        match self {
            StructureDesc::Semialgebra(a) => Some(a),
            StructureDesc::Semicoalgebra(_) => None,
            StructureDesc::Bisemialgebra(b) => Some(&b.algebra),
            StructureDesc::Hopf(h) => Some(&h.bi.algebra),
        }
    }

    pub fn as_coalgebra(&self) -> Option<&SemicoalgebraDesc> {
        match self {
            StructureDesc::Semialgebra(_) => None,
            StructureDesc::Semicoalgebra(c) => Some(c),
            StructureDesc::Bisemialgebra(b) => Some(&b.coalgebra),
            StructureDesc::Hopf(h) => Some(&h.bi.coalgebra),
        }
    }

    pub fn as_bisemialgebra(&self) -> Option<&BisemialgebraDesc> {
        match self {
            StructureDesc::Bisemialgebra(b) => Some(b),
            StructureDesc::Hopf(h) => Some(&h.bi),
            _ => None,
        }
    }

    pub fn as_hopf(&self) -> Option<&HopfDesc> {
        match self {
            StructureDesc::Hopf(h) => Some(h),
            _ => None,
        }
    }

    pub fn into_hopf(self) -> Result<HopfDesc> {
        match self {
            StructureDesc::Hopf(h) => Ok(h),
            other => Err(Error::Configuration(format!("{} is a {}, not a Hopf semialgebra", other.name(), other.kind()))),
        }
    }

    pub fn into_bisemialgebra(self) -> Result<BisemialgebraDesc> {
        match self {
            StructureDesc::Bisemialgebra(b) => Ok(b),
            StructureDesc::Hopf(h) => Ok(h.bi),
            other => Err(Error::Configuration(format!("{} is a {}, not a bisemialgebra", other.name(), other.kind()))),
        }
    }
}

pub(crate) fn split(b: &BasisId) -> Result<(&BasisId, &BasisId)> {
    b.as_pair().ok_or_else(|| Error::Type(format!("expected a pair basis element, found {b}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_enumeration_is_length_lexicographic() {
        let alphabet = vec!["x".to_string(), "y".to_string()];
        let words = words_up_to(&alphabet, 2);
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["[]", "[x]", "[y]", "[x,x]", "[x,y]", "[y,x]", "[y,y]"]);
        assert_eq!(words_up_to(&alphabet, 5).len(), 63);
        let truncated = Carrier::words(&alphabet, Some(1));
        assert_eq!(truncated.up_to(4).len(), 3);
        assert!(truncated.is_finite());
    }
}
