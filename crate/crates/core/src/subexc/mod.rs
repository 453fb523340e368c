//! The four cases `m ∈ {1, 2, 4, 8}`: constants, the character catalog of
//! simple equivariant D-modules, and the checks built on them.

mod case;
mod catalog;
mod decomp;
mod identities;
mod recursion;
mod regularity;

pub use case::{case_data, CaseData, HolonomyEdge, CASES};
pub use catalog::{char_df, char_e, char_l2_c3, char_s, char_sf, simple_character, ModuleName};
pub use decomp::{
    default_k, default_targets, greta_summands, sym_cotangent_decomp, sym_cotangent_rank, trivial_scan,
    trivial_scan_with,
    ScanReport, Summand, TrivialHits,
};
pub use identities::{compare_characters, verify_identities, Counterexample, IdentityReport, Status};
pub use recursion::{
    l2_closed_form, l2_weight, ni_multiplicity, recursion_branch, recursion_check, NiOracle, RecursionMismatch,
    RecursionReport,
};
pub use regularity::{
    regularity, regularity_from, semiinvariant_degree_check, Regularity, SemiinvariantReport,
};
