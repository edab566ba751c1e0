use std::fmt;
use std::str::FromStr;

use crate::boolmat::BoolVector;
use crate::covering::ElementSet;
use crate::error::{Error, Result};
use crate::matrix::{CharacteristicMatrices, MatrixFormula};
use crate::oracle::{Bound, OperatorScheme, Oracle};

/// How an approximation was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Oracle,
    Matrix,
    /// The legacy `(Π^T • Π) ⊙ 𝒳_X` formula; only meaningful for the sixth
    /// lower approximation.
    Legacy,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Matrix => "matrix",
            Route::Legacy => "legacy",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Route::Oracle),
            "matrix" => Ok(Route::Matrix),
            "legacy" => Ok(Route::Legacy),
            other => Err(Error::Syntax(format!("unknown route '{other}'"))),
        }
    }
}

/// An approximated set with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub set: ElementSet,
    /// Result vector of the matrix formula; `None` for the oracle route.
    pub vector: Option<BoolVector>,
    pub scheme: OperatorScheme,
    pub bound: Bound,
    pub route: Route,
}

/// The formula a (scheme, bound, route) triple evaluates, or `None` for the
/// oracle route.
pub fn formula_for(scheme: OperatorScheme, bound: Bound, route: Route) -> Result<Option<MatrixFormula>> {
    match route {
        Route::Oracle => Ok(None),
        Route::Matrix => Ok(Some(MatrixFormula::for_operator(scheme, bound))),
        Route::Legacy if (scheme, bound) == (OperatorScheme::Sixth, Bound::Lower) => {
            Ok(Some(MatrixFormula::SixthLowerLegacyWrong))
        }
        Route::Legacy => Err(Error::RouteMismatch {
            route: route.as_str(),
            scheme: scheme.as_str(),
            bound: bound.as_str(),
        }),
    }
}

pub fn approximate(
    cm: &CharacteristicMatrices,
    x: &ElementSet,
    scheme: OperatorScheme,
    bound: Bound,
    route: Route,
) -> Result<ApproxResult> {
    let (set, vector) = match formula_for(scheme, bound, route)? {
        None => (Oracle::new(cm.covering()).approx(x, scheme, bound)?, None),
        Some(f) => {
            let v = cm.evaluate(x, f)?;
            (ElementSet::from_vector(x.universe().clone(), v.clone())?, Some(v))
        }
    };
    Ok(ApproxResult {
        set,
        vector,
        scheme,
        bound,
        route,
    })
}
