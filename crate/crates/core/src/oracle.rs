//! Set-theoretic reference operators.
//!
//! These follow the defining formulas literally: unions over blocks or
//! neighborhoods, elementwise containment tests, and complement-of-upper-of-
//! complement for the dual lower operators. Nothing here touches the matrix
//! kernels, so every matrix formula can be checked against it.

use std::fmt;
use std::str::FromStr;

use crate::covering::{Covering, ElementSet, NeighborhoodSystem, Universe};
use crate::error::{Error, Result};

/// Which pair of approximation operators to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorScheme {
    /// `SH` / `SL`: unions of blocks meeting the set, and the dual.
    Second,
    /// `IH` / `IL`: elements whose neighborhood meets / lies inside the set.
    Fifth,
    /// `XH` / `XL`: unions of neighborhoods meeting / inside the set.
    Sixth,
    /// `XH^d` / `XL^d`: the upper operator equals `XH`; the lower one is
    /// its complement dual.
    SixthDual,
}

impl OperatorScheme {
    pub const ALL: [OperatorScheme; 4] = [
        OperatorScheme::Second,
        OperatorScheme::Fifth,
        OperatorScheme::Sixth,
        OperatorScheme::SixthDual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorScheme::Second => "second",
            OperatorScheme::Fifth => "fifth",
            OperatorScheme::Sixth => "sixth",
            OperatorScheme::SixthDual => "sixth-dual",
        }
    }

    /// Conventional operator symbol, e.g. `XL^d`.
    pub fn symbol(self, bound: Bound) -> &'static str {
        use Bound::*;
        use OperatorScheme::*;
        match (self, bound) {
            (Second, Upper) => "SH",
            (Second, Lower) => "SL",
            (Fifth, Upper) => "IH",
            (Fifth, Lower) => "IL",
            (Sixth, Upper) => "XH",
            (Sixth, Lower) => "XL",
            (SixthDual, Upper) => "XH^d",
            (SixthDual, Lower) => "XL^d",
        }
    }
}

impl fmt::Display for OperatorScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "second" => Ok(Self::Second),
            "fifth" => Ok(Self::Fifth),
            "sixth" => Ok(Self::Sixth),
            "sixth-dual" | "sixth_dual" => Ok(Self::SixthDual),
            other => Err(Error::Syntax(format!("unknown scheme '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Lower,
    Upper,
}

impl Bound {
    pub fn as_str(self) -> &'static str {
        match self {
            Bound::Lower => "lower",
            Bound::Upper => "upper",
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Self::Lower),
            "upper" => Ok(Self::Upper),
            other => Err(Error::Syntax(format!("unknown bound '{other}'"))),
        }
    }
}

/// A covering with its neighborhoods precomputed, for repeated queries.
#[derive(Clone, Debug)]
pub struct Oracle {
    covering: Covering,
    nbhd: NeighborhoodSystem,
}

impl Oracle {
    pub fn new(cov: &Covering) -> Self {
        Self {
            covering: cov.clone(),
            nbhd: cov.neighborhoods(),
        }
    }

    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    pub fn universe(&self) -> &Universe {
        self.covering.universe()
    }

    pub fn neighborhoods(&self) -> &NeighborhoodSystem {
        &self.nbhd
    }

    pub fn approx(&self, x: &ElementSet, scheme: OperatorScheme, bound: Bound) -> Result<ElementSet> {
        match bound {
            Bound::Upper => self.upper(x, scheme),
            Bound::Lower => self.lower(x, scheme),
        }
    }

    pub fn upper(&self, x: &ElementSet, scheme: OperatorScheme) -> Result<ElementSet> {
        x.check_universe(self.universe())?;
        Ok(match scheme {
            OperatorScheme::Second => union_of_meeting(self.universe(), self.covering.blocks(), x),
            OperatorScheme::Fifth => self.select(|n| n.intersects(x)),
            // XH and XH^d share one defining formula.
            OperatorScheme::Sixth | OperatorScheme::SixthDual => {
                union_of_meeting(self.universe(), self.nbhd.as_slice(), x)
            }
        })
    }

    pub fn lower(&self, x: &ElementSet, scheme: OperatorScheme) -> Result<ElementSet> {
        x.check_universe(self.universe())?;
        Ok(match scheme {
            OperatorScheme::Second | OperatorScheme::SixthDual => {
                self.upper(&x.complement(), scheme)?.complement()
            }
            OperatorScheme::Fifth => self.select(|n| n.is_subset(x)),
            OperatorScheme::Sixth => self
                .nbhd
                .iter()
                .filter(|n| n.is_subset(x))
                .fold(self.universe().empty_set(), |acc, n| acc.union(n)),
        })
    }

    /// `{x_i | pred(N(x_i))}`.
    fn select(&self, pred: impl Fn(&ElementSet) -> bool) -> ElementSet {
        self.universe().set_from_indices(
            self.nbhd
                .iter()
                .enumerate()
                .filter(|(_, n)| pred(n))
                .map(|(i, _)| i),
        )
    }
}

/// Union of the sets in `family` that meet `x`.
pub fn union_of_meeting(universe: &Universe, family: &[ElementSet], x: &ElementSet) -> ElementSet {
    family
        .iter()
        .filter(|s| s.intersects(x))
        .fold(universe.empty_set(), |acc, s| acc.union(s))
}

pub fn upper_approx(cov: &Covering, x: &ElementSet, scheme: OperatorScheme) -> Result<ElementSet> {
    Oracle::new(cov).upper(x, scheme)
}

pub fn lower_approx(cov: &Covering, x: &ElementSet, scheme: OperatorScheme) -> Result<ElementSet> {
    Oracle::new(cov).lower(x, scheme)
}
