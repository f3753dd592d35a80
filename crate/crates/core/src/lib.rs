//! Construction and certification of large subsets of {1,...,N} whose
//! differences avoid prescribed arithmetic sets (kth powers, polynomial
//! images, homogeneous form images) and which lack the configuration
//! {x, x+y, x+y^k}.
//!
//! The crate is organised around five layers:
//!
//! - [`residue`] — modular arithmetic: residue sets, polynomials and forms,
//!   power-residue images, root conditions, Hensel lifting.
//! - [`search`] — difference-constraint graphs over Z/m, exact branch-and-
//!   bound maximum clique, chain validation and chain-pair search.
//! - [`construct`] — digit-based builders producing explicit subsets of
//!   {1,...,N} with proven avoidance properties.
//! - [`verify`] — independent brute-force oracles certifying avoidance.
//! - [`exponent`] — closed-form density exponents and comparison reports.
//!
//! [`cert`] holds the certificate file format, [`parse`] the polynomial
//! input grammar, and [`reproduce`] the end-to-end check suite behind
//! `avoidset reproduce`.

pub mod cert;
pub mod construct;
pub mod error;
pub mod exponent;
pub mod parse;
pub mod reproduce;
pub mod residue;
pub mod search;
pub mod verify;

pub use error::{Error, Result};

/// Reported in certificates.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
