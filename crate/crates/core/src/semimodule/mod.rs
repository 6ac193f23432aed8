//! Free semimodules over symbolic bases: vectors, linear maps, tensor
//! products and quotient equality.

mod basis;
pub mod congruence;
mod linear_map;
pub mod quotient;
mod vector;

pub use basis::BasisId;
pub use congruence::{congruence_closure, CongruenceQuotient, DEFAULT_GUARD};
pub use linear_map::{contract_left, contract_right, eval_pair, reassociate_left, Functional, LinearMap};
pub use quotient::{
    check_functional_quotient_compat, check_normalizer, check_quotient_compat, idempotent_collapse_diagnostic,
    normalizer_fn, null_pairs, Arity, NullPairs, Normalizer, Quotient,
};
pub use vector::Vector;

use crate::error::Result;

pub fn vec_add(u: &Vector, v: &Vector) -> Result<Vector> {
    u.add(v)
}

pub fn scalar_mul(c: &crate::semiring::Scalar, v: &Vector) -> Vector {
    v.scale(c)
}

pub fn tensor_vec(u: &Vector, v: &Vector) -> Result<Vector> {
    u.tensor(v)
}

pub fn twist(v: &Vector) -> Result<Vector> {
    v.twist()
}

pub fn lin_apply(f: &LinearMap, v: &Vector) -> Result<Vector> {
    f.apply(v)
}
