//! Exact multiplicity computations for classical groups and their dual pairs.
//!
//! The crate covers Littlewood–Richardson tensor products, Littlewood
//! restriction from `GL(k)` to `SO(k)` and `Sp(k)`, character oracles,
//! stabilization in `k`, and a symbolic Bargmann–Fock module with
//! normal-ordered differential operators.

pub mod branching;
pub mod characters;
pub mod decomposition;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod lr;
pub mod signature;
pub mod stable;

pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use signature::{Family, Group, MixedSignature, Rank, Signature};

/// Version tag recorded alongside cached results.
pub const ENGINE_VERSION: &str = concat!("isotypic-", env!("CARGO_PKG_VERSION"));
