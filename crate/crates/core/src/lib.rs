//! Schur multiple zeta values of skew type.
//!
//! A Schur multiple zeta value is a nested Euler-type series indexed by a
//! skew Young diagram: the sum over all semi-standard fillings of the
//! diagram of the product of the entries raised to prescribed negative
//! exponents. Column shapes recover classical multiple zeta values, row
//! shapes recover zeta-star values.
//!
//! The crate provides two independent evaluation routes that serve as
//! mutual oracles:
//!
//! - [`ssyt::zeta_schur_direct`]: bounded summation straight from the
//!   defining series, and
//! - [`jacobi_trudi::jt_eval`]: a signed determinant of classical multiple
//!   zeta values indexed by the diagonals of the filling.
//!
//! On top of these sit the rim-decomposition expansion
//! ([`rims::lemma31_rhs`]), the dual-tableau construction built from
//! admissible pieces ([`duality::dual_tableau`]), and numeric verifiers for
//! the duality identity `zeta(k) = zeta(dual k)` and its Ohno-type
//! generalization ([`duality::verify_duality`], [`duality::verify_ohno`]).

pub mod cache;
mod combin;
pub mod duality;
pub mod error;
pub mod jacobi_trudi;
pub mod mzv;
pub mod rims;
pub mod shapes;
pub mod ssyt;
pub mod tableaux;

pub use cache::MzvCache;
pub use duality::{
    dual_tableau, is_dualizable, ohno_schur, verify_duality, verify_ohno, DualResult, Report,
    SchurMethod,
};
pub use error::{Error, Result};
pub use jacobi_trudi::{determinant_symbolic, jt_eval, jt_matrix, JtEntry, SymbolicExpansion};
pub use mzv::{
    decompose_pieces, dual_index, ohno_sum_classical, zeta_mzv, AdmissibleIndex, AdmissiblePiece,
    MzvResult,
};
pub use rims::{enumerate_e_rim_decompositions, lemma31_rhs, RimDecomposition};
pub use shapes::{Cell, Partition, SkewShape};
pub use ssyt::{enumerate_ssyt, zeta_schur_direct, SsytIterator};
pub use tableaux::{parse_tableau, IntTableau, Region, Tableau};
