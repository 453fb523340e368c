//! The quiver with relations of equivariant D-modules, the Fourier
//! symmetry, and characteristic cycles.

mod charc;
mod graph;

pub use charc::{
    charc_report, charc_table, holonomy_connected, CharcReport, Cycle, CycleCheck, CONVENTION, TENSION_NAMING,
    TENSION_SQRT_F,
};
pub use graph::{build_quiver, fourier_permutation, is_arrow_preserving_involution, Quiver};
