//! Characteristic matrices and matrix-formula approximations.
//!
//! `Γ = M • M^T` relates elements that share a block; `Π = M ⊙ M^T` has row
//! `i` equal to the characteristic vector of `N(x_i)`. Composite formulas are
//! grouped left to right, so `Π^T • Π ⊙ 𝒳_X` means `(Π^T • Π) ⊙ 𝒳_X`.

use std::fmt;
use std::sync::OnceLock;

use crate::boolmat::{from_set, to_set, BoolMatrix, BoolVector};
use crate::covering::{membership_matrix, Covering, ElementSet};
use crate::error::Result;
use crate::oracle::{Bound, OperatorScheme};

/// A matrix expression that yields the characteristic vector of an
/// approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixFormula {
    /// `Γ • 𝒳_X`
    SecondUpper,
    /// `Γ ⊙ 𝒳_X`
    SecondLower,
    /// `Π • 𝒳_X`
    FifthUpper,
    /// `Π ⊙ 𝒳_X`
    FifthLower,
    /// `Π^T • Π • 𝒳_X`
    SixthUpper,
    /// `Π ⊙ 𝒳_X`, the correct matrix form of `XL`.
    SixthLowerCorrected,
    /// `(Π^T ⊙ Π) ⊙ 𝒳_X`, going through the induced covering.
    SixthLowerCov,
    /// `Π^T • Π • 𝒳_X`
    SixthDualUpper,
    /// `(Π^T • Π) ⊙ 𝒳_X`
    SixthDualLower,
    /// Deprecated: `(Π^T • Π) ⊙ 𝒳_X` presented as a formula for `XL`.
    ///
    /// This expression actually computes the sixth *dual* lower
    /// approximation `XL^d`, which differs from `XL` in general. It is kept
    /// only so the discrepancy stays reproducible and regression-tested;
    /// use [`MatrixFormula::SixthLowerCorrected`] for `XL`.
    SixthLowerLegacyWrong,
}

impl MatrixFormula {
    pub const ALL: [MatrixFormula; 10] = [
        MatrixFormula::SecondUpper,
        MatrixFormula::SecondLower,
        MatrixFormula::FifthUpper,
        MatrixFormula::FifthLower,
        MatrixFormula::SixthUpper,
        MatrixFormula::SixthLowerCorrected,
        MatrixFormula::SixthLowerCov,
        MatrixFormula::SixthDualUpper,
        MatrixFormula::SixthDualLower,
        MatrixFormula::SixthLowerLegacyWrong,
    ];

    /// The correct formula for a scheme and bound.
    pub fn for_operator(scheme: OperatorScheme, bound: Bound) -> Self {
        use Bound::*;
        use OperatorScheme::*;
        match (scheme, bound) {
            (Second, Upper) => Self::SecondUpper,
            (Second, Lower) => Self::SecondLower,
            (Fifth, Upper) => Self::FifthUpper,
            (Fifth, Lower) => Self::FifthLower,
            (Sixth, Upper) => Self::SixthUpper,
            (Sixth, Lower) => Self::SixthLowerCorrected,
            (SixthDual, Upper) => Self::SixthDualUpper,
            (SixthDual, Lower) => Self::SixthDualLower,
        }
    }

    /// The operator this formula claims to compute.
    pub fn operator(self) -> (OperatorScheme, Bound) {
        use Bound::*;
        use OperatorScheme::*;
        match self {
            Self::SecondUpper => (Second, Upper),
            Self::SecondLower => (Second, Lower),
            Self::FifthUpper => (Fifth, Upper),
            Self::FifthLower => (Fifth, Lower),
            Self::SixthUpper => (Sixth, Upper),
            Self::SixthLowerCorrected | Self::SixthLowerCov | Self::SixthLowerLegacyWrong => (Sixth, Lower),
            Self::SixthDualUpper => (SixthDual, Upper),
            Self::SixthDualLower => (SixthDual, Lower),
        }
    }

    pub fn is_legacy(self) -> bool {
        self == Self::SixthLowerLegacyWrong
    }

    /// The expression as written in tables.
    pub fn expression(self) -> &'static str {
        match self {
            Self::SecondUpper => "Γ(C) • 𝒳_X",
            Self::SecondLower => "Γ(C) ⊙ 𝒳_X",
            Self::FifthUpper => "Π(C) • 𝒳_X",
            Self::FifthLower | Self::SixthLowerCorrected => "Π(C) ⊙ 𝒳_X",
            Self::SixthUpper | Self::SixthDualUpper => "(Π(C))^T • Π(C) • 𝒳_X",
            Self::SixthLowerCov => "(Π(C))^T ⊙ Π(C) ⊙ 𝒳_X",
            Self::SixthDualLower | Self::SixthLowerLegacyWrong => "(Π(C))^T • Π(C) ⊙ 𝒳_X",
        }
    }
}

impl fmt::Display for MatrixFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.expression())
    }
}

/// `Γ(C)` and `Π(C)` of a covering, with the composite products memoized.
#[derive(Debug)]
pub struct CharacteristicMatrices {
    covering: Covering,
    membership: BoolMatrix,
    gamma: BoolMatrix,
    pi: BoolMatrix,
    pi_t: OnceLock<BoolMatrix>,
    pi_t_bool_pi: OnceLock<BoolMatrix>,
    pi_t_impl_pi: OnceLock<BoolMatrix>,
}

pub fn characteristic_matrices(cov: &Covering) -> CharacteristicMatrices {
    CharacteristicMatrices::new(cov)
}

impl CharacteristicMatrices {
    pub fn new(cov: &Covering) -> Self {
        let membership = membership_matrix(cov);
        let membership_t = membership.transpose();
        let gamma = membership
            .bool_product(&membership_t)
            .expect("M and M^T are conformable");
        let pi = membership
            .impl_product(&membership_t)
            .expect("M and M^T are conformable");
        Self {
            covering: cov.clone(),
            membership,
            gamma,
            pi,
            pi_t: OnceLock::new(),
            pi_t_bool_pi: OnceLock::new(),
            pi_t_impl_pi: OnceLock::new(),
        }
    }

    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    pub fn membership(&self) -> &BoolMatrix {
        &self.membership
    }

    pub fn gamma(&self) -> &BoolMatrix {
        &self.gamma
    }

    pub fn pi(&self) -> &BoolMatrix {
        &self.pi
    }

    /// `Π^T`, whose rows (one per element, duplicates kept) represent the
    /// induced covering.
    pub fn pi_t(&self) -> &BoolMatrix {
        self.pi_t.get_or_init(|| self.pi.transpose())
    }

    pub fn pi_t_bool_pi(&self) -> &BoolMatrix {
        self.pi_t_bool_pi.get_or_init(|| {
            self.pi_t()
                .bool_product(&self.pi)
                .expect("square matrices of equal size")
        })
    }

    pub fn pi_t_impl_pi(&self) -> &BoolMatrix {
        self.pi_t_impl_pi.get_or_init(|| {
            self.pi_t()
                .impl_product(&self.pi)
                .expect("square matrices of equal size")
        })
    }

    /// The result vector of `formula` applied to `x`.
    pub fn evaluate(&self, x: &ElementSet, formula: MatrixFormula) -> Result<BoolVector> {
        x.check_universe(self.covering.universe())?;
        let chi = from_set(x);
        use MatrixFormula::*;
        match formula {
            SecondUpper => self.gamma.bool_mul_vec(&chi),
            SecondLower => self.gamma.impl_mul_vec(&chi),
            FifthUpper => self.pi.bool_mul_vec(&chi),
            FifthLower | SixthLowerCorrected => self.pi.impl_mul_vec(&chi),
            SixthUpper | SixthDualUpper => self.pi_t_bool_pi().bool_mul_vec(&chi),
            SixthLowerCov => self.pi_t_impl_pi().impl_mul_vec(&chi),
            SixthDualLower | SixthLowerLegacyWrong => self.pi_t_bool_pi().impl_mul_vec(&chi),
        }
    }
}

/// The approximation of `x` computed by `formula`.
pub fn approx_by_matrix(
    cm: &CharacteristicMatrices,
    x: &ElementSet,
    formula: MatrixFormula,
) -> Result<ElementSet> {
    let v = cm.evaluate(x, formula)?;
    to_set(&v, cm.covering.universe())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{build_covering, Universe};

    fn example() -> Covering {
        let u = Universe::new(["a", "b", "c", "d", "e", "f"]).unwrap();
        build_covering(
            &u,
            [
                vec!["a", "b"],
                vec!["a", "c", "d"],
                vec!["a", "b", "c", "d"],
                vec!["d", "e", "f"],
            ],
        )
        .unwrap()
    }

    fn run(formula: MatrixFormula, x: &[&str]) -> String {
        let cov = example();
        let cm = characteristic_matrices(&cov);
        approx_by_matrix(&cm, &cov.universe().set(x).unwrap(), formula)
            .unwrap()
            .to_string()
    }

    #[test]
    fn matrix_rows() {
        let cm = characteristic_matrices(&example());
        assert_eq!(cm.pi().row(2).to_string(), "[1 0 1 1 0 0]^T");
        assert_eq!(cm.gamma().row(4).to_string(), "[0 0 0 1 1 1]^T");
        assert!(cm.gamma().is_symmetric());
        assert!(cm.pi().has_unit_diagonal());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(run(MatrixFormula::SixthUpper, &["a"]), "{a, b, c, d}");
        assert_eq!(run(MatrixFormula::SecondUpper, &["a"]), "{a, b, c, d}");
        assert_eq!(
            run(MatrixFormula::SixthLowerCorrected, &["a", "b", "d", "e", "f"]),
            "{a, b, d, e, f}"
        );
        assert_eq!(
            run(MatrixFormula::SixthLowerLegacyWrong, &["a", "b", "d", "e", "f"]),
            "{b, e, f}"
        );
        assert_eq!(run(MatrixFormula::SixthDualLower, &["a"]), "{}");
        assert_eq!(run(MatrixFormula::SixthLowerCov, &["a", "b", "c"]), "{a, b}");
    }

    #[test]
    fn partition_collapses_gamma_and_pi() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let cov = build_covering(&u, [vec!["a", "c"], vec!["b", "d"]]).unwrap();
        let cm = characteristic_matrices(&cov);
        assert_eq!(cm.gamma(), cm.pi());
        let expect = BoolMatrix::from_rows(&[[1u8, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]]);
        assert_eq!(cm.pi(), &expect);
    }

    #[test]
    fn formula_operator_round_trip() {
        for s in OperatorScheme::ALL {
            for b in [Bound::Lower, Bound::Upper] {
                assert_eq!(MatrixFormula::for_operator(s, b).operator(), (s, b));
            }
        }
    }

    #[test]
    fn universe_mismatch() {
        let cm = characteristic_matrices(&example());
        let other = Universe::new(["a"]).unwrap();
        assert!(cm.evaluate(&other.full_set(), MatrixFormula::FifthUpper).is_err());
    }
}
