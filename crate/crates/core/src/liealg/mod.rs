//! Root-system basics: diagrams, weights, reflections and dimensions.

mod diagram;
mod types;
mod weight;

pub use diagram::DynkinDiagram;
pub use types::{fundamental_degrees, SimpleType};
pub use weight::{Root, Weight};
