//! Exact computations in the spherical building of `SL_n` over `Q(i)` and in
//! the twin building of `SL_n` over the Laurent polynomial ring `Q(i)[z, 1/z]`.
//!
//! Modules, bottom-up: [`exactalg`] (scalars, Laurent polynomials, matrices),
//! [`coxeter`] (types `A` and affine `A`), [`lattice`] (vertices as lattice
//! classes), [`building`] (chambers, distances, codistances, projections,
//! Schubert coordinates), [`veronese`] (hermitian-operator models) and
//! [`cells`] (Schubert cell counts and Poincaré series). [`verify`] bundles
//! seeded check suites and [`sample`] the random generators they use.

pub mod building;
pub mod cells;
pub mod coxeter;
pub mod error;
pub mod exactalg;
pub mod lattice;
pub mod sample;
pub mod veronese;
pub mod verify;

pub use error::{Error, Result};
