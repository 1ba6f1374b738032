//! Integer partitions seen through the s-abacus.
//!
//! The crate is `no_std` (it only needs `alloc`). It covers
//!
//! * partition arithmetic: conjugation, hook lengths, hook removal, t-core tests ([`partition`]);
//! * bead-sets and s-abaci, with the axis of symmetry ([`abacus`]);
//! * s-cores and s-quotients and the bijection between them ([`core_quotient`]);
//! * numerical-semigroup gap posets and simultaneous (s,t)-cores ([`simul_cores`]);
//! * the explicit abacus of the maximal (s-1,s+1)-core and its symmetries ([`alpha`]).
//!
//! IO, rendering to files and the command line live in the `abacus-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abacus;
pub mod alpha;
pub mod core_quotient;
mod error;
pub mod partition;
pub mod simul_cores;

pub use abacus::{Abacus, Axis, BeadSet};
pub use alpha::{AlphaAbacus, RectangleR};
pub use core_quotient::{CoreQuotientPair, Quotient};
pub use error::Error;
pub use partition::{HookLengthTable, Partition};
pub use simul_cores::{GapSet, LowerIdeal};

pub type Result<T, E = Error> = core::result::Result<T, E>;
