//! Generators, named fixtures, the check catalogue and the fuzz runner.

pub mod checks;
pub mod fixtures;
pub mod fuzz;
pub mod generate;

pub use checks::{check, check_many, CheckId, CheckVerdict, Status, Witness};
pub use fixtures::{fixture, fixtures, Fixture};
pub use fuzz::{fuzz, shrink, FuzzConfig, FuzzSummary, Tally};
pub use generate::{generate, GeneratorConfig, GraphKind};
