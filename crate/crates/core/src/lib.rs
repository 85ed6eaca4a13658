//! Binary matroids over GF(2) and the Γ-extension operation.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! - [`gf2`]: dense bit matrices with elimination, rank and standard form.
//! - [`matroid`]: labeled binary matroids with rank oracle, circuits,
//!   cocircuits, duality, deletion, components and direct sums.
//! - [`extensions`]: the Γ-extension `M^X`, the splitting matroid `M_Y` and
//!   the parallel extension `M'`.
//! - [`connectivity`]: exhaustive k-separation search and k-connectedness.
//! - [`laws`]: executable checks of the structural facts about `M^X`,
//!   returning [`laws::LawReport`]s with counterexamples.
//! - [`catalog`]: named fixtures and enumeration of small binary matroids.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod connectivity;
pub mod error;
pub mod extensions;
pub mod gf2;
pub mod label;
pub mod laws;
pub mod matroid;

mod xor_basis;

pub use connectivity::{find_separation, is_k_connected, Mode, Separation};
pub use error::{Error, Result};
pub use extensions::{gamma_extension, parallel_extension, splitting, GammaExtension};
pub use gf2::Gf2Matrix;
pub use label::{ElementSet, Label};
pub use laws::{LawId, LawReport, Verdict};
pub use matroid::{BinaryMatroid, Limits};
