//! Verification toolkit for circle and disk bundles over flag manifolds.
//!
//! The crate has three legs:
//!
//! * exact combinatorics: root systems of the simple Lie types, painted
//!   Dynkin diagrams, Poincaré polynomials of the associated flag manifolds,
//!   and the classification of diagrams with constant Betti numbers
//!   ([`lie`], [`poincare`], [`classify`]);
//! * exact kernel algebra: Hilbert polynomials in the binomial basis, the
//!   closed-form Szegő kernel of the unit disk bundle of a regularly
//!   quantized Kähler manifold, and numerical log-term detection ([`szego`]);
//! * independent oracles: Gauss–Legendre quadrature for monomial section
//!   norms and the Kempf distortion function on projective space ([`kempf`]),
//!   and integer Gysin-sequence cohomology of circle bundles via Smith
//!   normal form ([`gysin`]).
//!
//! [`verify`] bundles the numeric oracles into reproducible pass/fail suites.

pub mod classify;
pub mod error;
pub mod gysin;
pub mod kempf;
pub mod lie;
mod lstsq;
pub mod poincare;
pub mod szego;
pub mod verify;

pub use error::Error;
