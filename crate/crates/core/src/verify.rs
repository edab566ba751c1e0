//! Executes the operator identities as checks over many subsets.
//!
//! Every matrix formula is compared with the set-theoretic oracle, the
//! oracle identities relating the fifth and sixth operators and the induced
//! covering are checked, and the legacy formula is checked to coincide with
//! the sixth dual lower approximation. Subsets are visited in ascending
//! bitmask order (exhaustive) or in a seeded random order (sampled), so the
//! first reported counterexample is deterministic.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::covering::{induced_covering, star_neighborhood, Covering, ElementSet};
use crate::error::{Error, Result};
use crate::gen::{random_covering, random_subset};
use crate::matrix::{CharacteristicMatrices, MatrixFormula};
use crate::oracle::{Bound, OperatorScheme, Oracle};
use crate::text::covering_to_text;

/// Largest universe for which all subsets are enumerated.
pub const EXHAUSTIVE_MAX: usize = 10;

pub const IDENTITY_NAMES: [&str; 20] = [
    "second upper: Γ • 𝒳_X = SH(X)",
    "second lower: Γ ⊙ 𝒳_X = SL(X)",
    "fifth upper: Π • 𝒳_X = IH(X)",
    "fifth lower: Π ⊙ 𝒳_X = IL(X)",
    "IL(X) = XL(X)",
    "sixth upper: Π^T • Π • 𝒳_X = XH(X)",
    "sixth lower: Π ⊙ 𝒳_X = XL(X)",
    "IL over C = IL over Cov(C)",
    "XL over C = XL over Cov(C)",
    "sixth lower: (Π^T ⊙ Π) ⊙ 𝒳_X = XL(X)",
    "(Π^T ⊙ Π) ⊙ 𝒳_X = Π ⊙ 𝒳_X",
    "sixth dual upper: Π^T • Π • 𝒳_X = XH^d(X)",
    "sixth dual lower: (Π^T • Π) ⊙ 𝒳_X = XL^d(X)",
    "legacy formula = XL^d(X)",
    "XL(X) ⊆ X ⊆ XH(X)",
    "XH(X) = XH^d(X)",
    "N*(x) = N(x)",
    "Π row i = 𝒳_N(x_i)",
    "Γ symmetric with unit diagonal",
    "Π unit diagonal",
];

/// Index of the legacy identity in [`IDENTITY_NAMES`].
pub const LEGACY_IDENTITY: usize = 13;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub exhaustive: bool,
    /// Subsets drawn per covering when not exhaustive.
    pub samples: usize,
    pub seed: u64,
    /// Formula checked by the legacy identity. Anything other than the
    /// legacy formula is expected to fail that check.
    pub legacy_formula: MatrixFormula,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            exhaustive: false,
            samples: 1024,
            seed: 0,
            legacy_formula: MatrixFormula::SixthLowerLegacyWrong,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Covering text, filled in when the covering was generated.
    pub covering: Option<String>,
    /// The failing input, e.g. `X = {a, b}` or `x = c`.
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.input, self.expected, self.actual
        )?;
        if let Some(c) = &self.covering {
            write!(f, "\n    covering:")?;
            for line in c.lines() {
                write!(f, "\n      {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<Counterexample>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A subset on which the sixth lower and sixth dual lower approximations
/// differ, with what the corrected and legacy formulas returned there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: ElementSet,
    pub corrected: ElementSet,
    pub legacy: ElementSet,
}

#[derive(Clone, Debug, Default)]
pub struct Separation {
    pub witnesses: Vec<Witness>,
    /// Set when the legacy formula matched the corrected one on a subset
    /// where they should differ.
    pub failure: Option<Counterexample>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub universe_size: usize,
    pub subsets: usize,
    pub exhaustive: bool,
    pub identities: Vec<IdentityCheck>,
    pub separation: Separation,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(IdentityCheck::passed) && self.separation.failure.is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identities.iter().filter(|c| !c.passed())
    }
}

fn write_identities(f: &mut fmt::Formatter<'_>, identities: &[IdentityCheck]) -> fmt::Result {
    for c in identities {
        match &c.failure {
            None => writeln!(f, "PASS  {} ({} checks)", c.name, c.checked)?,
            Some(ce) => writeln!(f, "FAIL  {}: {}", c.name, ce)?,
        }
    }
    Ok(())
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "checked {} subsets of a {}-element universe ({})",
            self.subsets,
            self.universe_size,
            if self.exhaustive { "exhaustive" } else { "sampled" }
        )?;
        write_identities(f, &self.identities)?;
        match &self.separation.failure {
            Some(ce) => writeln!(
                f,
                "FAIL  legacy formula separates from corrected where XL ≠ XL^d: {ce}"
            )?,
            None if self.separation.witnesses.is_empty() => writeln!(
                f,
                "PASS  legacy formula separates from corrected where XL ≠ XL^d (no witness in probe set)"
            )?,
            None => {
                writeln!(
                    f,
                    "PASS  legacy formula separates from corrected where XL ≠ XL^d ({} witnesses)",
                    self.separation.witnesses.len()
                )?;
                for w in &self.separation.witnesses {
                    writeln!(
                        f,
                        "      witness X = {}: corrected {}, legacy {}",
                        w.x, w.corrected, w.legacy
                    )?;
                }
            }
        }
        Ok(())
    }
}

struct Tally {
    checks: Vec<IdentityCheck>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checks: IDENTITY_NAMES
                .iter()
                .map(|&name| IdentityCheck {
                    name,
                    checked: 0,
                    failure: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, idx: usize, ok: bool, describe: impl FnOnce() -> (String, String, String)) {
        let c = &mut self.checks[idx];
        c.checked += 1;
        if !ok && c.failure.is_none() {
            let (input, expected, actual) = describe();
            c.failure = Some(Counterexample {
                covering: None,
                input,
                expected,
                actual,
            });
        }
    }

    fn same(&mut self, idx: usize, x: &ElementSet, expected: &ElementSet, actual: &ElementSet) {
        self.record(idx, expected == actual, || {
            (format!("X = {x}"), expected.to_string(), actual.to_string())
        });
    }
}

struct Checker<'a> {
    cov: &'a Covering,
    cm: CharacteristicMatrices,
    oracle: Oracle,
    induced: Oracle,
    legacy: MatrixFormula,
}

impl<'a> Checker<'a> {
    fn new(cov: &'a Covering, legacy: MatrixFormula) -> Self {
        Self {
            cov,
            cm: CharacteristicMatrices::new(cov),
            oracle: Oracle::new(cov),
            induced: Oracle::new(&induced_covering(cov)),
            legacy,
        }
    }

    fn matrix(&self, x: &ElementSet, f: MatrixFormula) -> Result<ElementSet> {
        ElementSet::from_vector(x.universe().clone(), self.cm.evaluate(x, f)?)
    }

    fn structural(&self, t: &mut Tally) {
        let u = self.cov.universe();
        for i in 0..u.len() {
            let name = u.name(i);
            let n = self.oracle.neighborhoods().get(i);
            let star = star_neighborhood(self.cov, name).expect("element of the universe");
            t.record(16, &star == n, || {
                (format!("x = {name}"), n.to_string(), star.to_string())
            });
            let row = ElementSet::from_vector(u.clone(), self.cm.pi().row(i)).expect("n×n matrix");
            t.record(17, &row == n, || {
                (format!("x = {name}"), n.to_string(), row.to_string())
            });
        }
        let g = self.cm.gamma();
        t.record(18, g.is_symmetric() && g.has_unit_diagonal(), || {
            ("Γ".into(), "symmetric, unit diagonal".into(), format!("\n{g}"))
        });
        let p = self.cm.pi();
        t.record(19, p.has_unit_diagonal(), || {
            ("Π".into(), "unit diagonal".into(), format!("\n{p}"))
        });
    }

    fn subset(&self, x: &ElementSet, t: &mut Tally, sep: &mut Separation) -> Result<()> {
        use Bound::*;
        use MatrixFormula as F;
        use OperatorScheme::*;
        let o = &self.oracle;

        let sh = o.upper(x, Second)?;
        let sl = o.lower(x, Second)?;
        let ih = o.upper(x, Fifth)?;
        let il = o.lower(x, Fifth)?;
        let xh = o.upper(x, Sixth)?;
        let xl = o.lower(x, Sixth)?;
        let xhd = o.upper(x, SixthDual)?;
        let xld = o.lower(x, SixthDual)?;

        t.same(0, x, &sh, &self.matrix(x, F::SecondUpper)?);
        t.same(1, x, &sl, &self.matrix(x, F::SecondLower)?);
        t.same(2, x, &ih, &self.matrix(x, F::FifthUpper)?);
        t.same(3, x, &il, &self.matrix(x, F::FifthLower)?);
        t.same(4, x, &il, &xl);
        t.same(5, x, &xh, &self.matrix(x, F::SixthUpper)?);
        let corrected = self.matrix(x, F::SixthLowerCorrected)?;
        t.same(6, x, &xl, &corrected);
        t.same(7, x, &il, &self.induced.approx(x, Fifth, Lower)?);
        t.same(8, x, &xl, &self.induced.approx(x, Sixth, Lower)?);
        let via_cov = self.matrix(x, F::SixthLowerCov)?;
        t.same(9, x, &xl, &via_cov);
        t.same(10, x, &corrected, &via_cov);
        t.same(11, x, &xhd, &self.matrix(x, F::SixthDualUpper)?);
        t.same(12, x, &xld, &self.matrix(x, F::SixthDualLower)?);
        let legacy = self.matrix(x, self.legacy)?;
        t.same(13, x, &xld, &legacy);
        t.record(14, xl.is_subset(x) && x.is_subset(&xh), || {
            (
                format!("X = {x}"),
                "XL(X) ⊆ X ⊆ XH(X)".into(),
                format!("XL = {xl}, XH = {xh}"),
            )
        });
        t.same(15, x, &xh, &xhd);

        if xl != xld {
            if legacy == corrected && sep.failure.is_none() {
                sep.failure = Some(Counterexample {
                    covering: None,
                    input: format!("X = {x}"),
                    expected: format!("legacy ≠ {corrected}"),
                    actual: legacy.to_string(),
                });
            }
            sep.witnesses.push(Witness {
                x: x.clone(),
                corrected,
                legacy,
            });
        }
        Ok(())
    }
}

/// Checks every identity on `cov`, over all subsets when `exhaustive`.
pub fn verify_identities(cov: &Covering, exhaustive: bool) -> Result<VerifyReport> {
    verify_identities_with(
        cov,
        &VerifyOptions {
            exhaustive,
            ..VerifyOptions::default()
        },
    )
}

pub fn verify_identities_with(cov: &Covering, opts: &VerifyOptions) -> Result<VerifyReport> {
    let n = cov.universe().len();
    if opts.exhaustive && n > EXHAUSTIVE_MAX {
        return Err(Error::UniverseTooLarge {
            n,
            max: EXHAUSTIVE_MAX,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (identities, separation, subsets) = run_checks(cov, opts, &mut rng)?;
    Ok(VerifyReport {
        universe_size: n,
        subsets,
        exhaustive: opts.exhaustive,
        identities,
        separation,
    })
}

fn run_checks(
    cov: &Covering,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<IdentityCheck>, Separation, usize)> {
    let checker = Checker::new(cov, opts.legacy_formula);
    let mut tally = Tally::new();
    let mut sep = Separation::default();
    checker.structural(&mut tally);
    let u = cov.universe();
    let mut count = 0;
    if opts.exhaustive {
        for mask in 0..1u64 << u.len() {
            checker.subset(&u.set_from_mask(mask), &mut tally, &mut sep)?;
            count += 1;
        }
    } else {
        checker.subset(&u.empty_set(), &mut tally, &mut sep)?;
        checker.subset(&u.full_set(), &mut tally, &mut sep)?;
        count += 2;
        for _ in 0..opts.samples {
            checker.subset(&random_subset(u, rng), &mut tally, &mut sep)?;
            count += 1;
        }
    }
    Ok((tally.checks, sep, count))
}

/// Aggregate of [`verify_random`].
#[derive(Clone, Debug)]
pub struct RandomVerifyReport {
    pub trials: usize,
    pub subsets: usize,
    pub identities: Vec<IdentityCheck>,
    /// Coverings on which at least one separation witness was found.
    pub coverings_with_witness: usize,
    pub separation_failure: Option<Counterexample>,
}

impl RandomVerifyReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(IdentityCheck::passed) && self.separation_failure.is_none()
    }
}

impl fmt::Display for RandomVerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "checked {} random coverings, {} subsets in total",
            self.trials, self.subsets
        )?;
        write_identities(f, &self.identities)?;
        match &self.separation_failure {
            Some(ce) => writeln!(f, "FAIL  legacy formula separates from corrected where XL ≠ XL^d: {ce}"),
            None => writeln!(
                f,
                "PASS  legacy formula separates from corrected where XL ≠ XL^d (witnesses on {} of {} coverings)",
                self.coverings_with_witness, self.trials
            ),
        }
    }
}

/// Verifies `trials` coverings of `n` elements and `m` blocks drawn from one
/// seeded stream. Subsets are enumerated when `opts.exhaustive`.
pub fn verify_random(n: usize, m: usize, trials: usize, opts: &VerifyOptions) -> Result<RandomVerifyReport> {
    if opts.exhaustive && n > EXHAUSTIVE_MAX {
        return Err(Error::UniverseTooLarge {
            n,
            max: EXHAUSTIVE_MAX,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = RandomVerifyReport {
        trials,
        subsets: 0,
        identities: Tally::new().checks,
        coverings_with_witness: 0,
        separation_failure: None,
    };
    for _ in 0..trials {
        let cov = random_covering(n, m, &mut rng);
        let (checks, sep, count) = run_checks(&cov, opts, &mut rng)?;
        report.subsets += count;
        for (acc, c) in report.identities.iter_mut().zip(checks) {
            acc.checked += c.checked;
            if acc.failure.is_none() {
                acc.failure = c.failure.map(|ce| Counterexample {
                    covering: Some(covering_to_text(&cov)),
                    ..ce
                });
            }
        }
        if !sep.witnesses.is_empty() {
            report.coverings_with_witness += 1;
        }
        if report.separation_failure.is_none() {
            report.separation_failure = sep.failure.map(|ce| Counterexample {
                covering: Some(covering_to_text(&cov)),
                ..ce
            });
        }
    }
    Ok(report)
}
