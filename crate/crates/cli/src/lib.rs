//! Library side of the `hyperint` CLI: output formatting and the
//! verification suites behind `hyperint check`.

pub mod checks;
pub mod output;
