//! Zumkeller and k-layered numbers.
//!
//! A positive integer is Zumkeller when its divisors split into two sets with
//! equal sums, and k-layered when they split into k such sets. This crate
//! pairs complete search oracles with the structural rules that decide most
//! inputs without searching, returns checkable partition certificates for
//! every positive verdict, and ships a harness that sweeps each rule against
//! the oracles over configurable ranges.

pub mod arith;
pub mod harmonic;
pub mod layered;
pub mod oracle;
pub mod verify;
pub mod zumkeller;

pub use arith::{BinaryExpansion, DivisorList, Factorization, Natural, Rational};
pub use oracle::{DivisorPartition, SubsetWitness};

use thiserror::Error;

/// Resource ceilings for divisor enumeration and subset-sum tables.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Largest divisor count that will be enumerated.
    pub tau_cap: u32,
    /// Largest target a dense subset-sum bit table may span.
    pub dp_sum_cap: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            tau_cap: 4096,
            dp_sum_cap: 1 << 26,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(&'static str),
    #[error("instance too large: {what} is {actual}, limit {limit}")]
    InstanceTooLarge {
        what: &'static str,
        actual: u64,
        limit: u64,
    },
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown id: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
