//! Equivariant index characters of holomorphic line bundles over generalized
//! Bott manifolds.
//!
//! The character is computed two independent ways: as the signed lattice
//! points of the generalized twisted cube ([`character_via_cube`]) and by the
//! Demazure-type operator recursion ([`demazure_character`]). A numeric
//! localization check ([`localization`]) compares a character against a
//! fixed-point rational expression.
//!
//! The algebra is generic over the coefficient ring ([`Coefficient`]) and the
//! float type used for evaluation ([`Real`]); the aliases below fix the
//! common choices.

pub mod character;
mod compositions;
pub mod cube;
pub mod demazure;
pub mod error;
pub mod fixtures;
pub mod localization;
pub mod sampling;
pub mod scalar;
pub mod tower;

pub use character::{character_via_cube, mult, LaurentPolynomial, Weight};
pub use cube::{density, enumerate, Branch, CubePoint};
pub use demazure::{apply_d, apply_d_rank_one, demazure_character, simplex, twist, SimplexKind, SimplexSet};
pub use error::{Error, Result};
pub use localization::{localization_check, RationalCharacterExpr};
pub use scalar::{Coefficient, Real};
pub use tower::{TowerSpec, ValidateOptions};

/// Characters with checked 64-bit coefficients.
pub type Character = LaurentPolynomial<i64>;

/// Characters with 128-bit coefficients, for large intermediate sums.
pub type WideCharacter = LaurentPolynomial<i128>;

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
