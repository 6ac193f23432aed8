//! Exact computation with semialgebras, semicoalgebras, bisemialgebras and
//! Hopf semialgebras over commutative semirings.
//!
//! Structures are given by structure constants on symbolic bases. Every law
//! is checked mechanically on basis tuples up to a degree bound, which is an
//! exact proof for finite bases and a bounded certificate otherwise.

pub mod automata;
pub mod doi_koppinen;
pub mod error;
pub mod hopf_analysis;
pub mod report;
mod search;
pub mod semimodule;
pub mod semiring;
pub mod structures;

pub use error::{Error, Result};
pub use report::{CheckReport, Verdict, Witness};
pub use semimodule::{BasisId, Functional, LinearMap, Quotient, Vector};
pub use semiring::{BuiltinKind, FiniteTables, Scalar, Semiring};
pub use structures::{
    example, BisemialgebraDesc, Carrier, Example, HopfDesc, SemialgebraDesc, SemicoalgebraDesc, StructureDesc,
};
