//! Toric ideals of monomial curves: minimal binomial generators,
//! indispensability, critical ideals, circuits, Graver bases and the
//! classification of curves in 4-space with a unique minimal system.

pub mod classify4;
pub mod cli;
pub mod critical;
pub mod edgeideal;
pub mod error;
pub mod exponents;
pub mod fibergraph;
pub mod graver;
pub mod grobner;
pub mod intlat;
pub mod semigroup;

pub use error::{Error, Result};
