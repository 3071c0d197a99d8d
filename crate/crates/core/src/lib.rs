//! Exact weight combinatorics for simple complex Lie algebras and the
//! classification of grading elements whose eigenvalue decomposition has all
//! Hodge numbers equal to one.
//!
//! The crate is `no_std` (it needs `alloc`) and uses exact arithmetic only:
//! integers for Dynkin labels, reduced rationals for simple-root coordinates,
//! and doubled integers ([`HalfInt`]) for grading eigenvalues.
//!
//! Layout:
//!
//! * [`rootsys`]: Cartan data, base change between weight bases, duality.
//! * [`weightsys`]: Freudenthal weight systems, Weyl dimensions, the
//!   weight-multiplicity-free catalog and closed-form spin weights.
//! * [`hodge`]: eigenvalues of grading elements, Hodge numbers, the
//!   real/quaternionic/complex test and the principal predicate.
//! * [`classify`]: the exhaustive search for principal grading elements and
//!   the embedded reference tables.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
mod error;
pub mod hodge;
mod linalg;
pub mod rootsys;
pub mod weightsys;

pub use error::Error;
pub use hodge::{
    check_principal, eigen_report, eigenvalue, is_principal, nominal_report, rcq_structure, t_compact, EigenReport, GradingElement,
    HalfInt, ModuleSpec, Pairing, PrincipalCheck, Rcq, RejectReason, Verdict,
};
pub use rootsys::{build_root_system, dual_weight, fundamental_weight, Family, LieType, ParseLieTypeError, RootSystem, Weight};
pub use classify::{search_principal, type_a_filters, Orientation, SearchOptions, SearchOutcome, Solution};
pub use weightsys::{
    is_weight_multiplicity_free, mf_catalog, spin_weight_oracle, weight_system, weyl_dim, Compute,
    MfCatalogEntry, SpinKind, WeightSystem, WeightSystemSource,
};

/// Resource ceilings shared by every entry point that may allocate a weight
/// system or enumerate a catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    pub rank_ceiling: usize,
    pub dim_ceiling: u64,
    pub sym_degree_ceiling: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            rank_ceiling: 12,
            dim_ceiling: 100_000,
            sym_degree_ceiling: 64,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
