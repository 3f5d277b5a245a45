//! Level-one perfect crystals for the exceptional affine types and the
//! partition identities they produce.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`rootsystem`]: Cartan data for `G2(1)`, `D4(3)`, `F4(1)`, `E6(2)`,
//!   `E6(1)`, `E7(1)`, `E8(1)`, reflection-closure root generation and the
//!   affine positive roots needed for specialisations.
//! - [`crystal`]: the crystal `B = B(theta) + B(0)` with its Kashiwara arrows
//!   and string statistics.
//! - [`energy`]: the shifted energy `F` on `B (x) B`, propagated over the
//!   tensor graph, and the difference matrix built from it.
//! - [`sumside`]: the colored partition model and the counting series `d(p)`.
//! - [`series`] and [`productside`]: exact truncated power series, Euler
//!   products and the principal specialisation of the character, which
//!   yields `c(p)`.
//!
//! Everything is exact integer arithmetic. Overflow is reported, never
//! wrapped.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod crystal;
pub mod energy;
pub mod productside;
pub mod rootsystem;
pub mod series;
pub mod sumside;

pub use crystal::{build_crystal, Crystal, CrystalElement};
pub use energy::{difference_matrix, DifferenceMatrix};
pub use productside::{normalized_character_series, product_side_series};
pub use rootsystem::{affine_config, AffineType, Root, TypeConfig};
pub use series::TruncatedSeries;
pub use sumside::SumSideModel;

/// Errors raised by the core computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("root closure did not stabilise after {0} roots")]
    RootClosure(usize),
    #[error("specialisation vector must have {expected} entries >= 1, got {got:?}")]
    InvalidSpecialization {
        expected: usize,
        got: alloc::vec::Vec<u32>,
    },
    #[error("height cutoff must be >= 1, got {0}")]
    InvalidCutoff(u32),
    #[error("conflicting energy values at vertex {vertex:?}: {existing} vs {proposed}")]
    Consistency {
        vertex: (usize, usize),
        existing: i32,
        proposed: i32,
    },
    #[error("{unreached} tensor vertices were never reached from the ground vertex")]
    Coverage { unreached: usize },
    #[error("integrity violation: {0}")]
    Integrity(alloc::string::String),
    #[error("oracle bound exceeded: weight {requested} > bound {bound}")]
    Budget { requested: usize, bound: usize },
    #[error("series division needs a unit constant term, got {0}")]
    NonUnit(i128),
    #[error("Pochhammer factor (0;{y})^{exponent} has no inverse")]
    ZeroPochhammer { y: u32, exponent: i32 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("unknown crystal element `{0}`")]
    UnknownElement(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;
