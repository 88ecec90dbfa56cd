//! Exact-arithmetic toolkit for partition families with residue-class and
//! multiplicity constraints.
//!
//! The crate revolves around five pieces:
//!
//! - [`partition`]: the canonical [`Partition`](partition::Partition) value and
//!   its multiset algebra (union, difference, scaling, divisibility splits).
//! - [`families`]: declarative family specifications ([`FamilySpec`](families::FamilySpec)),
//!   a catalog of named families such as `PD[t,r]`, `B[m]` or `PEM[t,m]`, and
//!   exact enumeration / counting (plain, signed by `(-1)^length`, and total
//!   number of parts).
//! - [`qseries`]: truncated power series over big integers, q-Pochhammer
//!   product expansion, theta series, and product formulas for every catalog
//!   family — the second, independent counting route.
//! - [`bijections`]: the explicit maps between families (Glaisher-style
//!   merge/split constructions) together with their inverses, plus the
//!   sign-reversing involutions used in parity arguments.
//! - [`identities`]: a catalog of verifiable equalities, recurrences, and
//!   Beck-type part-count statements, each producing a structured
//!   [`IdentityReport`](identities::IdentityReport).
//! - [`arith`]: the number-theoretic side conditions (factorization,
//!   triangular-number tests, parity/divisibility criteria).
//!
//! All arithmetic is exact. The library is `no_std` (with `alloc`); IO, the
//! CLI, and file formats live in the companion `pedpod` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bijections;
pub mod error;
pub mod families;
pub mod identities;
pub mod partition;
pub mod qseries;

pub use error::{Error, Result};
pub use partition::Partition;
