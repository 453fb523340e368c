//! Topology of orbit closures: Poincaré polynomials of `G/P`, primitive
//! cohomology, intersection cohomology, Lyubeznik numbers and local
//! cohomology.

mod poincare;
mod polynomial;
mod tables;

pub use poincare::{lefschetz_sum, printed_poincare, poincare_gp, poincare_report, primitive_betti, PoincareReport};
pub use polynomial::IntPolynomial;
pub use tables::{
    ih_orbit, local_cohomology_entries, local_cohomology_table, lyubeznik, origin_support, IhReport,
    LocalCohomologyEntry, LocalCohomologyTable, LyubeznikReport, Shape,
};
