//! Exhaustive enumeration of coefficient tuples, split across threads.

use std::thread;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::semimodule::{BasisId, Vector};
use crate::semiring::{Scalar, Semiring};

/// Default cap on the number of candidates a search may enumerate.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 20;

/// Elements of `s`, provided `|S|^n` candidates fit in `budget`.
pub(crate) fn candidate_space(s: &Semiring, n: usize, budget: u64) -> Result<(Vec<Scalar>, u64)> {
    if !s.is_finite() {
        return Err(Error::Size { required: format!("infinitely many candidates over {s}"), budget });
    }
    let elems = s.elements()?;
    let total = BigUint::from(elems.len()).pow(n as u32);
    if total > BigUint::from(budget) {
        return Err(Error::Size { required: total.to_string(), budget });
    }
    let total = u64::try_from(&total).expect("bounded by the budget");
    Ok((elems, total))
}

/// The `index`-th tuple in lexicographic order, first coordinate most
/// significant.
pub(crate) fn decode(elems: &[Scalar], n: usize, mut index: u64) -> Vec<&Scalar> {
    let k = elems.len() as u64;
    let mut out = vec![&elems[0]; n];
    for slot in out.iter_mut().rev() {
        *slot = &elems[(index % k) as usize];
        index /= k;
    }
    out
}

pub(crate) fn vector_from(s: &Semiring, basis: &[BasisId], coeffs: &[&Scalar]) -> Vector {
    Vector::from_terms(s, basis.iter().zip(coeffs).map(|(b, c)| ((*c).clone(), b.clone())))
}

/// Indices in `0..total` accepted by `keep`, in increasing order.
pub(crate) fn par_filter<F>(total: u64, keep: F) -> Result<Vec<u64>>
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    let workers = thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    if total < 256 || workers == 1 {
        return (0..total).filter_map(|i| keep(i).map(|k| k.then_some(i)).transpose()).collect();
    }
    let chunk = total.div_ceil(workers);
    let keep = &keep;
    let parts: Vec<Result<Vec<u64>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = (w * chunk)..((w + 1) * chunk).min(total);
                scope.spawn(move || range.filter_map(|i| keep(i).map(|k| k.then_some(i)).transpose()).collect())
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        let s = Semiring::boolean();
        let (elems, total) = candidate_space(&s, 2, 16).unwrap();
        assert_eq!(total, 4);
        let names: Vec<String> =
            (0..total).map(|i| decode(&elems, 2, i).iter().map(|c| s.format(c)).collect::<Vec<_>>().join("")).collect();
        assert_eq!(names, ["00", "01", "10", "11"]);
    }

    #[test]
    fn budget_and_infinite_semirings_are_refused() {
        let err = candidate_space(&Semiring::boolean(), 21, 1 << 20).unwrap_err();
        assert_eq!(err, Error::Size { required: "2097152".into(), budget: 1 << 20 });
        assert!(matches!(candidate_space(&Semiring::naturals(), 1, 10), Err(Error::Size { .. })));
    }

    #[test]
    fn parallel_filter_keeps_order() {
        let got = par_filter(10_000, |i| Ok(i % 997 == 0)).unwrap();
        assert_eq!(got, (0..10_000).filter(|i| i % 997 == 0).collect::<Vec<_>>());
    }
}
