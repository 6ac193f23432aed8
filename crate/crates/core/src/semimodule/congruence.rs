use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use petgraph::unionfind::UnionFind;

use super::{BasisId, Vector};
use crate::error::{Error, Result};
use crate::semiring::{Scalar, Semiring};

/// Default bound on the number of carrier vectors a closure may enumerate.
pub const DEFAULT_GUARD: u64 = 65_536;

/// Smallest congruence on the finite carrier `S^basis` containing a set of
/// generating pairs, decided by a precomputed class table.
#[derive(Debug)]
pub struct CongruenceQuotient {
    semiring: Semiring,
    basis: Vec<BasisId>,
    basis_index: HashMap<BasisId, usize>,
    generators: Vec<(Vector, Vector)>,
    guard: u64,
    elements: Vec<Scalar>,
    element_index: HashMap<Scalar, usize>,
    /// Minimum carrier index of the class of each carrier index.
    reps: Vec<u32>,
    square: OnceLock<std::result::Result<Arc<CongruenceQuotient>, Error>>,
}

fn carrier_size(radix: usize, dims: usize, guard: u64) -> Result<usize> {
    let size = (radix as u128).checked_pow(dims as u32).unwrap_or(u128::MAX);
    if size > guard as u128 {
        let required = if size == u128::MAX { format!("{radix}^{dims}") } else { size.to_string() };
        return Err(Error::Size { required, budget: guard });
    }
    Ok(size as usize)
}

/// Computes the congruence generated by `generators` on vectors over `basis`.
pub fn congruence_closure(
    basis: &[BasisId],
    s: &Semiring,
    generators: &[(Vector, Vector)],
    guard: u64,
) -> Result<CongruenceQuotient> {
    let elements = s.elements()?;
    let radix = elements.len();
    let n = basis.len();
    let size = carrier_size(radix, n, guard)?;
    let element_index: HashMap<Scalar, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let basis_index: HashMap<BasisId, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let add: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| element_index[&s.add(a, b)]).collect())
        .collect();
    let mut q = CongruenceQuotient {
        semiring: s.clone(),
        basis: basis.to_vec(),
        basis_index,
        generators: generators.to_vec(),
        guard,
        elements,
        element_index,
        reps: Vec::new(),
        square: OnceLock::new(),
    };
    let mut uf = UnionFind::<usize>::new(size);
    let digits_of = |mut idx: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = idx % radix;
                idx /= radix;
                d
            })
            .collect()
    };
    let plus = |x: &[usize], w: usize| -> usize {
        let mut w = w;
        let mut out = 0;
        let mut place = 1;
        for &xd in x {
            out += add[xd][w % radix] * place;
            w /= radix;
            place *= radix;
        }
        out
    };
    for (u, v) in generators {
        for c in q.elements.clone() {
            let du = digits_of(q.encode(&u.scale(&c))?);
            let dv = digits_of(q.encode(&v.scale(&c))?);
            for w in 0..size {
                uf.union(plus(&du, w), plus(&dv, w));
            }
        }
    }
    let labels = uf.into_labeling();
    let mut min_of: HashMap<usize, u32> = HashMap::new();
    for (i, root) in labels.iter().enumerate() {
        min_of.entry(*root).or_insert(i as u32);
    }
    q.reps = labels.iter().map(|root| min_of[root]).collect();
    Ok(q)
}

impl CongruenceQuotient {
    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }

    pub fn generators(&self) -> &[(Vector, Vector)] {
        &self.generators
    }

    pub fn carrier_size(&self) -> usize {
        self.reps.len()
    }

    pub fn class_count(&self) -> usize {
        self.reps.iter().enumerate().filter(|(i, r)| *i == **r as usize).count()
    }

    pub fn covers(&self, v: &Vector) -> bool {
        v.support().all(|b| self.basis_index.contains_key(b))
    }

    pub fn encode(&self, v: &Vector) -> Result<usize> {
        let radix = self.elements.len();
        let mut idx = 0;
        for (b, c) in v.iter() {
            let pos = *self.basis_index.get(b).ok_or_else(|| Error::Domain {
                map: "congruence carrier".into(),
                basis: b.to_string(),
            })?;
            idx += self.element_index[c] * radix.pow(pos as u32);
        }
        Ok(idx)
    }

    pub fn decode(&self, mut idx: usize) -> Vector {
        let radix = self.elements.len();
        let mut v = Vector::zero(&self.semiring);
        for b in &self.basis {
            v.add_term(b.clone(), self.elements[idx % radix].clone());
            idx /= radix;
        }
        v
    }

    pub fn class_of(&self, v: &Vector) -> Result<usize> {
        Ok(self.reps[self.encode(v)?] as usize)
    }

    pub fn equal(&self, u: &Vector, v: &Vector) -> Result<bool> {
        Ok(self.class_of(u)? == self.class_of(v)?)
    }

    /// Canonical representative: the first class member in carrier order.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        Ok(self.decode(self.class_of(v)?))
    }

    /// The induced congruence on vectors over pairs of basis elements.
    pub fn tensor_square(&self) -> Result<Arc<CongruenceQuotient>> {
        self.square
            .get_or_init(|| {
                let s = &self.semiring;
                let pairs: Vec<BasisId> = self
                    .basis
                    .iter()
                    .flat_map(|a| self.basis.iter().map(move |b| BasisId::pair(a.clone(), b.clone())))
                    .collect();
                let mut gens = Vec::new();
                for (u, v) in &self.generators {
                    for w in &self.basis {
                        let w = Vector::basis(s, w.clone());
                        gens.push((u.tensor(&w)?, v.tensor(&w)?));
                        gens.push((w.tensor(u)?, w.tensor(v)?));
                    }
                }
                congruence_closure(&pairs, s, &gens, self.guard).map(Arc::new)
            })
            .clone()
    }

    /// Every class as a sorted list of carrier indices (for exhaustive tests).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_rep: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, r) in self.reps.iter().enumerate() {
            by_rep.entry(*r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = by_rep.into_values().collect();
        out.sort();
        out
    }

    /// Elements congruent to zero.
    pub fn zero_class(&self) -> HashSet<Vector> {
        let r0 = self.reps[0];
        (0..self.reps.len()).filter(|i| self.reps[*i] == r0).map(|i| self.decode(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(name: &str) -> BasisId {
        BasisId::atom(name)
    }

    #[test]
    fn empty_generators_is_structural_equality() {
        let s = Semiring::boolean();
        let q = congruence_closure(&[b("1"), b("x")], &s, &[], DEFAULT_GUARD).unwrap();
        assert_eq!(q.class_count(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(q.equal(&q.decode(i), &q.decode(j)).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn x_to_zero_kills_the_x_term() {
        let s = Semiring::boolean();
        let x = Vector::basis(&s, b("x"));
        let q = congruence_closure(&[b("1"), b("x")], &s, &[(x.clone(), Vector::zero(&s))], DEFAULT_GUARD).unwrap();
        let one = Vector::basis(&s, b("1"));
        assert!(q.equal(&x, &Vector::zero(&s)).unwrap());
        assert!(q.equal(&one.add(&x).unwrap(), &one).unwrap());
        assert!(!q.equal(&one, &Vector::zero(&s)).unwrap());
        assert_eq!(q.class_count(), 2);
    }

    #[test]
    fn idempotent_collapse_of_null_pair() {
        let s = Semiring::boolean();
        let x = Vector::basis(&s, b("x"));
        let y = Vector::basis(&s, b("y"));
        let gen = (x.add(&y).unwrap(), Vector::zero(&s));
        let q = congruence_closure(&[b("1"), b("x"), b("y")], &s, &[gen], DEFAULT_GUARD).unwrap();
        assert!(q.equal(&x, &Vector::zero(&s)).unwrap());
        assert!(q.equal(&y, &Vector::zero(&s)).unwrap());
    }

    #[test]
    fn guard_is_enforced() {
        let s = Semiring::boolean();
        let basis: Vec<BasisId> = (0..17).map(|i| b(&format!("b{i}"))).collect();
        match congruence_closure(&basis, &s, &[], DEFAULT_GUARD) {
            Err(Error::Size { required, budget }) => {
                assert_eq!(required, "131072");
                assert_eq!(budget, DEFAULT_GUARD);
            }
            other => panic!("expected size error, got {other:?}"),
        }
        assert!(matches!(
            congruence_closure(&basis, &Semiring::naturals(), &[], DEFAULT_GUARD),
            Err(Error::Unsupported(_))
        ));
    }
}
