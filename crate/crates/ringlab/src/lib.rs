//! A workbench for finite unital rings.
//!
//! The crate constructs finite rings from a closed set of families (modular
//! rings, products, full and triangular matrix rings, trivial extensions,
//! formal triangular rings, truncated polynomial rings, group rings,
//! corners, quotients, and six parameterized generator/relation families),
//! computes their structural element sets (units, idempotents, nilpotents,
//! Jacobson radical, quasinilpotents, center, lower nilradical), classifies
//! them (UQ/UJ/UU, Boolean, local, regular, clean family, ...), and runs a
//! registry of executable algebraic claims over a built-in corpus, emitting
//! deterministic machine-readable reports.

pub mod analysis;
pub mod claims;
pub mod config;
pub mod construct;
pub mod expr;
pub mod json_ring;
pub mod ring;

pub use config::{Config, OutputFormat};
pub use ring::{Element, FiniteRing, Result, RingError, RingMeta, Subset};

pub(crate) mod util {
    /// FNV-1a, used for corpus digests; stable across runs and toolchains.
    pub fn fnv1a64(bytes: &[u8]) -> u64 {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for &b in bytes {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
        hash
    }
}
