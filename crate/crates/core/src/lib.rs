//! Covering-based rough set approximations.
//!
//! The second, fifth, sixth and sixth-dual lower/upper approximations of a
//! subset are computed two ways: directly from their set-theoretic
//! definitions ([`oracle`]) and as Boolean products of characteristic
//! matrices ([`matrix`]). The [`verify`] module checks the two against each
//! other.
//!
//! The matrix route also keeps [`MatrixFormula::SixthLowerLegacyWrong`],
//! the formula `(Π^T • Π) ⊙ 𝒳_X` that was once given for the sixth lower
//! approximation. It actually yields the sixth *dual* lower approximation;
//! the correct formula is `Π ⊙ 𝒳_X`.
//!
//! ```
//! use covrough::{parse_covering, CharacteristicMatrices, MatrixFormula, approx_by_matrix};
//!
//! let cov = parse_covering("a b c d e f\na b\na c d\na b c d\nd e f\n").unwrap();
//! let cm = CharacteristicMatrices::new(&cov);
//! let x = cov.universe().set(["a", "b", "c"]).unwrap();
//! let xl = approx_by_matrix(&cm, &x, MatrixFormula::SixthLowerCorrected).unwrap();
//! assert_eq!(xl.to_string(), "{a, b}");
//! let legacy = approx_by_matrix(&cm, &x, MatrixFormula::SixthLowerLegacyWrong).unwrap();
//! assert_eq!(legacy.to_string(), "{b}");
//! ```

pub mod approx;
pub mod boolmat;
pub mod covering;
pub mod error;
pub mod gen;
pub mod matrix;
pub mod oracle;
pub mod text;
pub mod verify;

pub use approx::{approximate, formula_for, ApproxResult, Route};
pub use boolmat::{bool_product, from_set, impl_product, to_set, transpose, BoolMatrix, BoolVector};
pub use covering::{
    build_covering, induced_covering, membership_matrix, neighborhood, star_neighborhood, Covering,
    ElementSet, NeighborhoodSystem, Universe,
};
pub use error::{Error, Result};
pub use matrix::{approx_by_matrix, characteristic_matrices, CharacteristicMatrices, MatrixFormula};
pub use oracle::{lower_approx, upper_approx, Bound, OperatorScheme, Oracle};
pub use text::{covering_to_text, parse_covering, parse_set_spec, parse_sets_file};
pub use verify::{verify_identities, verify_identities_with, verify_random, VerifyOptions, VerifyReport};
