//! Exact arithmetic over the Gaussian rationals: scalars, Laurent
//! polynomials, Laurent matrices, and dense constant matrices.

mod dense;
mod gauss;
mod laurent;
mod matrix;
mod text;

pub use dense::QMat;
pub use gauss::GaussRat;
pub use laurent::{LaurentPoly, Place, Val};
pub use matrix::LaurentMatrix;
pub use text::{matrix_from_strings, matrix_to_strings};

/// Shorthand for the monomial `z^e`.
pub fn z(e: i64) -> LaurentPoly {
    LaurentPoly::z_pow(e)
}

/// Valuation of a Laurent polynomial at `0` or `∞`.
pub fn valuation(f: &LaurentPoly, place: Place) -> Val {
    f.valuation(place)
}
