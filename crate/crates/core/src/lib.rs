//! Executable number-theoretic divisibility conditions centred on Fermat
//! numbers, search harnesses that enumerate their divisor candidates, and a
//! bijective codec between vertex-by-vertex increasing graph sequences and
//! integer sequences.
//!
//! The crate is organised in four layers:
//!
//! * [`arith`] — arbitrary-precision kernel: modular exponentiation with
//!   tower exponents, Fermat-number residues, primality, exact
//!   geometric-series sums mod m.
//! * [`conditions`] — one executable predicate per divisibility condition,
//!   each returning a [`conditions::ConditionReport`] that separates the
//!   hypothesis check from an independent verification of the conclusion.
//! * [`explorers`] — reproducible searches: divisor-candidate sweeps,
//!   antidiagonal scans, minimal-witness sequences, streak probes.
//! * [`graphseq`] — the Φ codec between graph sequences and integer
//!   sequences, generators for the worked graph families, closed forms, and
//!   Collatz component counting.

pub mod arith;
pub mod conditions;
pub mod explorers;
pub mod graphseq;

pub use arith::{ArithError, Natural, PrimalityConfig};
pub use conditions::{CondError, ConditionId, ConditionReport, Witness};
pub use explorers::{
    ExplorerConfig, ExplorerError, MinMTerm, PredicateKind, SearchResult, StreakResult,
    StreakVariant,
};
pub use graphseq::{Family, GraphError, SeqTerm, VbvGraph};
