use std::fmt;

use serde::{Deserialize, Serialize};

/// Symbolic basis element. Ordering is structural and fixes the term order of
/// every printed vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Repr", into = "Repr")]
pub enum BasisId {
    Atom { name: String, degree: usize },
    /// Ordered product of powers; zero exponents are never stored.
    Monomial(Vec<(String, i64)>),
    Indexed { symbol: String, index: u64 },
    Word(Vec<String>),
    Pair(Box<BasisId>, Box<BasisId>),
    Dual(Box<BasisId>),
}

impl BasisId {
    /// The single basis element of the ground semiring viewed as a module.
    pub fn ground() -> Self {
        Self::atom("1")
    }

    pub fn atom(name: impl Into<String>) -> Self {
        BasisId::Atom { name: name.into(), degree: 0 }
    }

    pub fn graded_atom(name: impl Into<String>, degree: usize) -> Self {
        BasisId::Atom { name: name.into(), degree }
    }

    /// `symbol^exp`, collapsing to the empty monomial for `exp = 0`.
    pub fn power(symbol: &str, exp: i64) -> Self {
        Self::monomial(&[(symbol, exp)])
    }

    pub fn monomial(factors: &[(&str, i64)]) -> Self {
        BasisId::Monomial(
            factors.iter().filter(|(_, e)| *e != 0).map(|(s, e)| (s.to_string(), *e)).collect(),
        )
    }

    pub fn indexed(symbol: impl Into<String>, index: u64) -> Self {
        BasisId::Indexed { symbol: symbol.into(), index }
    }

    pub fn word<S: AsRef<str>>(letters: &[S]) -> Self {
        BasisId::Word(letters.iter().map(|l| l.as_ref().to_string()).collect())
    }

    pub fn empty_word() -> Self {
        BasisId::Word(Vec::new())
    }

    pub fn pair(a: BasisId, b: BasisId) -> Self {
        BasisId::Pair(Box::new(a), Box::new(b))
    }

    pub fn dual(a: BasisId) -> Self {
        BasisId::Dual(Box::new(a))
    }

    pub fn as_pair(&self) -> Option<(&BasisId, &BasisId)> {
        match self {
            BasisId::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&[String]> {
        match self {
            BasisId::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            BasisId::Atom { degree, .. } => *degree,
            BasisId::Monomial(f) => f.iter().map(|(_, e)| e.unsigned_abs() as usize).sum(),
            BasisId::Indexed { index, .. } => *index as usize,
            BasisId::Word(w) => w.len(),
            BasisId::Pair(a, b) => a.degree() + b.degree(),
            BasisId::Dual(a) => a.degree(),
        }
    }

    /// Exponent of `symbol` in a single-variable monomial.
    pub fn exponent_of(&self, symbol: &str) -> Option<i64> {
        match self {
            BasisId::Monomial(f) if f.is_empty() => Some(0),
            BasisId::Monomial(f) if f.len() == 1 && f[0].0 == symbol => Some(f[0].1),
            _ => None,
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisId::Atom { name, .. } => f.write_str(name),
            BasisId::Monomial(factors) if factors.is_empty() => f.write_str("1"),
            BasisId::Monomial(factors) => {
                for (i, (s, e)) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    if *e == 1 {
                        write!(f, "{s}")?;
                    } else {
                        write!(f, "{s}^{e}")?;
                    }
                }
                Ok(())
            }
            BasisId::Indexed { symbol, index } => write!(f, "{symbol}_{index}"),
            BasisId::Word(w) => write!(f, "[{}]", w.join(",")),
            BasisId::Pair(a, b) => {
                let wrap = |x: &BasisId| match x {
                    BasisId::Pair(..) => format!("({x})"),
                    _ => x.to_string(),
                };
                write!(f, "{} ⊗ {}", wrap(a), wrap(b))
            }
            BasisId::Dual(a) => match **a {
                BasisId::Pair(..) => write!(f, "({a})*"),
                _ => write!(f, "{a}*"),
            },
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Atom(String),
    Word(Vec<String>),
    Tagged(Tagged),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Tagged {
    Atom { name: String, degree: usize },
    Mono(Vec<(String, i64)>),
    Indexed(String, u64),
    Pair(Box<BasisId>, Box<BasisId>),
    Dual(Box<BasisId>),
}

impl From<Repr> for BasisId {
    fn from(r: Repr) -> Self {
        match r {
            Repr::Atom(name) => BasisId::atom(name),
            Repr::Word(w) => BasisId::Word(w),
            Repr::Tagged(Tagged::Atom { name, degree }) => BasisId::Atom { name, degree },
            Repr::Tagged(Tagged::Mono(f)) => {
                BasisId::Monomial(f.into_iter().filter(|(_, e)| *e != 0).collect())
            }
            Repr::Tagged(Tagged::Indexed(symbol, index)) => BasisId::Indexed { symbol, index },
            Repr::Tagged(Tagged::Pair(a, b)) => BasisId::Pair(a, b),
            Repr::Tagged(Tagged::Dual(a)) => BasisId::Dual(a),
        }
    }
}

impl From<BasisId> for Repr {
    fn from(b: BasisId) -> Self {
        match b {
            BasisId::Atom { name, degree: 0 } => Repr::Atom(name),
            BasisId::Atom { name, degree } => Repr::Tagged(Tagged::Atom { name, degree }),
            BasisId::Monomial(f) => Repr::Tagged(Tagged::Mono(f)),
            BasisId::Indexed { symbol, index } => Repr::Tagged(Tagged::Indexed(symbol, index)),
            BasisId::Word(w) => Repr::Word(w),
            BasisId::Pair(a, b) => Repr::Tagged(Tagged::Pair(a, b)),
            BasisId::Dual(a) => Repr::Tagged(Tagged::Dual(a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_degree() {
        assert_eq!(BasisId::power("x", 0).to_string(), "1");
        assert_eq!(BasisId::power("x", 3).to_string(), "x^3");
        assert_eq!(BasisId::monomial(&[("g", 1), ("x", 2)]).to_string(), "g*x^2");
        assert_eq!(BasisId::word(&["2", "3"]).to_string(), "[2,3]");
        let p = BasisId::pair(BasisId::word(&["2"]), BasisId::word(&["3"]));
        assert_eq!(p.to_string(), "[2] ⊗ [3]");
        assert_eq!(p.degree(), 2);
        let nested = BasisId::pair(p.clone(), BasisId::atom("e"));
        assert_eq!(nested.to_string(), "([2] ⊗ [3]) ⊗ e");
        assert_eq!(BasisId::power("x", -2).degree(), 2);
        assert_eq!(BasisId::indexed("e", 4).degree(), 4);
    }
}
