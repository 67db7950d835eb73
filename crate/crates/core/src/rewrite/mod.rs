//! Reduction systems, termination orders, normal forms and confluence.

mod confluence;
mod definition;
mod order;
mod system;

pub use confluence::{AmbiguityKind, OverlapReport};
pub use definition::{parse_system_definition, SystemDefinition};
pub use order::{TermOrder, Tiebreak};
pub use system::{ReductionSystem, Rule, SystemBuilder, TerminationReport, Violation};

#[cfg(test)]
mod tests;
