//! Re-derivation of published tables: each suite produces one check per
//! table entry, compared against the values in [`crate::known`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::awe::{average_weight_enumerator, average_weight_enumerator_bruteforce, ThresholdCalculator, DEFAULT_HORIZON};
use crate::classify::classify;
use crate::code::{Budget, GeneratorCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::known::{self, RowKind, GENERATOR_ROWS, THRESHOLDS};
use crate::structured::{CirculantSpec, ToeplitzTriple};

/// Lengths compared against the brute-force average enumerator.
pub const AWE_ORACLE_GRID: &[(u8, usize)] = &[(2, 2), (2, 4), (2, 6), (2, 8), (2, 10), (3, 4), (3, 6), (4, 4)];

/// Lengths classified by the small classification suite.
pub const CLASSIFICATION_GRID: &[(u8, usize)] = &[
    (2, 4),
    (2, 6),
    (2, 8),
    (2, 10),
    (2, 12),
    (2, 14),
    (2, 16),
    (2, 18),
    (3, 4),
    (3, 6),
    (3, 8),
    (3, 10),
    (4, 4),
    (4, 6),
    (4, 8),
    (4, 10),
];

/// Dimension limits for generator-row checks.
pub const GENERATOR_BUDGET: Budget = Budget {
    max_k_f2: 24,
    max_k_f3: 14,
    max_k_f4: 13,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    AweOracle,
    Thresholds,
    ClassificationSmall,
    Generators,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::AweOracle, Suite::Thresholds, Suite::ClassificationSmall, Suite::Generators];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AweOracle => "awe-oracle",
            Suite::Thresholds => "thresholds",
            Suite::ClassificationSmall => "classification-small",
            Suite::Generators => "generators",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { what: "suite", input: s.to_string() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// Outside the enumeration budget; not evaluated.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    fn compare<T: PartialEq + fmt::Debug>(name: String, expected: T, got: T) -> Self {
        let outcome = if expected == got { Outcome::Pass } else { Outcome::Fail };
        Check {
            name,
            outcome,
            detail: format!("expected {expected:?}, got {got:?}"),
        }
    }

    fn skipped(name: String, detail: String) -> Self {
        Check {
            name,
            outcome: Outcome::Skipped,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.outcome == Outcome::Fail)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.checks.iter().filter(|c| c.outcome == outcome).count()
    }
}

pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::AweOracle => awe_oracle()?,
        Suite::Thresholds => thresholds()?,
        Suite::ClassificationSmall => classification_small()?,
        Suite::Generators => generators()?,
    };
    Ok(SuiteReport { suite, checks })
}

fn awe_oracle() -> Result<Vec<Check>> {
    AWE_ORACLE_GRID
        .iter()
        .map(|&(q, n)| {
            let field = Field::new(q as u32)?;
            let closed = average_weight_enumerator(field, n)?;
            let brute = average_weight_enumerator_bruteforce(field, n)?;
            Ok(Check::compare(format!("q={q} n={n}"), brute.coeffs(), closed.coeffs()))
        })
        .collect()
}

fn thresholds() -> Result<Vec<Check>> {
    let per_field: Vec<Vec<Check>> = [2u8, 3, 4]
        .par_iter()
        .enumerate()
        .map(|(i, &q)| {
            let mut calc = ThresholdCalculator::new(Field::new(q as u32)?);
            THRESHOLDS
                .iter()
                .map(|row| {
                    let t = calc.threshold(row.d, DEFAULT_HORIZON)?;
                    let mut check = Check::compare(format!("n_{q}({})", row.d), row.n[i], t.n);
                    if !t.is_monotone() {
                        check.detail += &format!(" (bound also holds at {:?})", t.isolated_passes);
                    }
                    Ok(check)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_field.into_iter().flatten().collect())
}

fn classification_small() -> Result<Vec<Check>> {
    CLASSIFICATION_GRID
        .iter()
        .map(|&(q, n)| {
            let known = known::class_counts(q, n).expect("grid lengths are tabulated");
            let report = classify(Field::new(q as u32)?, n)?;
            let expected = (known.d, known.n_dt, known.n_dc, known.n_nc);
            // over F2 and F4 negacirculant codes are circulant, so the
            // tables have a single structured column
            let got = (report.d_opt, Some(report.n_dt), report.n_dc, report.n_nc);
            Ok(Check::compare(format!("q={q} n={n} (d, DT, DC, NC)"), expected, got))
        })
        .collect()
}

/// The code described by a reference generator row.
pub fn row_code(row: &known::GeneratorRow) -> Result<GeneratorCode> {
    let field = Field::new(row.q as u32)?;
    let code = match row.kind {
        RowKind::Circulant => CirculantSpec::parse(field, &format!("C:{}", row.text))?.code(),
        RowKind::Negacirculant => CirculantSpec::parse(field, &format!("N:{}", row.text))?.code(),
        RowKind::Toeplitz => ToeplitzTriple::parse(field, row.text)?.code(),
    };
    if code.n() != row.n {
        return Err(Error::LengthMismatch {
            expected: row.n,
            got: code.n(),
        });
    }
    Ok(code)
}

fn row_name(row: &known::GeneratorRow) -> String {
    let tag = match row.kind {
        RowKind::Circulant => "C",
        RowKind::Negacirculant => "N",
        RowKind::Toeplitz => "T",
    };
    format!("q={} n={} {tag}:{}", row.q, row.n, row.text)
}

fn generators() -> Result<Vec<Check>> {
    GENERATOR_ROWS
        .par_iter()
        .map(|row| {
            let code = row_code(row)?;
            let name = row_name(row);
            let field = code.field();
            if GENERATOR_BUDGET.check(field, code.k()).is_err() {
                let detail = format!("k = {} exceeds {}", code.k(), GENERATOR_BUDGET.max_k(field));
                return Ok(Check::skipped(name, detail));
            }
            let d = code.minimum_weight_within(&GENERATOR_BUDGET)?;
            Ok(Check::compare(name, row.d, d))
        })
        .collect()
}
