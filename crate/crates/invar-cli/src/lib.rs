//! Command-line front end for the invariant-subspace enumerator: parses
//! problem files describing a set of square rational matrices, runs the
//! scan, and renders the resulting report as a table or as versioned JSON.

pub mod problem;
pub mod report;

pub use problem::{parse_problem, parse_rat, ProblemError, ProblemFile};
pub use report::{
    parse_poly, parse_report, render, render_machine, render_text, run, unsolved_rows,
    DimensionSection, FamilyRow, Format, Report, RunOptions, SCHEMA_VERSION,
};
