//! Certified sphere-packing bounds for lattices, built on exact rational
//! arithmetic and rigorous interval enclosures.
//!
//! The library works with radial functions of the form
//! `f(x) = p(2π|x|²)·e^{−π|x|²}` on `Rⁿ`, whose Fourier transforms have the
//! same shape with a polynomial profile computed exactly over the rationals.
//! A profile polynomial together with sign conditions (`f ≤ 0` beyond a
//! radius, `f̂ ≥ 0` everywhere) is a *certificate* yielding an upper bound on
//! lattice packing density. Everything a verdict depends on is either an
//! exact rational computation or an interval enclosure with rational
//! endpoints, so every claim can be replayed bit for bit.
//!
//! The crate culminates in [`proof2d::prove_hexagonal_optimal`], a pipeline
//! of machine-checked steps establishing that the hexagonal lattice is the
//! unique densest lattice in the plane.

pub mod elementary;
pub mod error;
pub mod fourier;
pub mod interval;
pub mod lattice;
pub mod poisson;
pub mod poly;
pub mod proof2d;
pub mod rational;
pub mod sturm;

pub use error::{Error, Result};
pub use interval::{Interval, Precision};
pub use poly::Polynomial;
pub use rational::Rational;

/// Largest dimension the library accepts. Nothing above plane geometry is
/// exercised by the shipped proofs; higher dimensions run under a budget
/// guard but are only tested up to small `n`.
pub const MAX_DIMENSION: usize = 24;
