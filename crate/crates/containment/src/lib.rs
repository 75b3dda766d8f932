//! File formats, the small-graph corpus, experiment harness and exit codes
//! around `containment-core`.

pub mod corpus;
pub mod enumerate;
pub mod experiments;
pub mod formats;

pub use containment_core as core;

/// Process exit codes of the `containment` binary.
pub mod exit {
    pub const OK: i32 = 0;
    /// I/O and other runtime failures.
    pub const FAILURE: i32 = 1;
    /// Bad flags, configs or input files.
    pub const VALIDATION: i32 = 2;
    /// A solve exceeded its state budget.
    pub const BUDGET: i32 = 3;
    /// `c <= xi <= gamma * Delta` failed on some graph.
    pub const CHAIN_VIOLATION: i32 = 4;
    /// A counterexample to `xi <= c * Delta` was found.
    pub const CONJECTURE_VIOLATION: i32 = 5;
}
