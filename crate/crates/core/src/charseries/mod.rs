//! Graded characters as rational expressions in Cartan products.
//!
//! `1/(1 − t^k V_L)` stands for `Σ_n t^{kn} V_{nL}`, and products of such
//! factors multiply highest weights. Coefficients are extracted by counting
//! lattice points, so nothing is ever truncated by degree.

mod expr;
mod laurent;
mod series;

pub use expr::{CartanExpr, Character, Factor, Slice, Term};
pub use laurent::LaurentPoly;
pub use series::{expand_box, hilbert, BoxSpec, CharSeries, SeriesRow, DEFAULT_CELL_CAP};
#[allow(unused_imports)]
pub(crate) use series::map_weights;
