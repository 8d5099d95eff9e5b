//! The CLI exchange object and its wire formats.
//!
//! An [`EnumerationTable`] is (k, n_max, engine, counts-as-decimal-strings);
//! counts are strings because the entries overflow 64 bits well before
//! n = 30. Three emitted formats:
//!
//! * CSV — header `n,count`, LF line endings, no quoting;
//! * JSON — `{"k":…,"n_max":…,"engine":…,"counts":[…]}` via serde;
//! * fixture — the verification input: one block per k, a `k=<int>` header
//!   line followed by `n count` pairs, `#` comments and blank lines allowed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle_index::{ktree_cycle_index, CiBounds, CiError};
use crate::gamma_gf::{unlabeled_ktree_series, GammaGfError};
use crate::oracle::{brute_count_series, OracleError};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("fixture line {line}: {reason}")]
    Fixture { line: usize, reason: String },
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("table invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Gf(#[from] GammaGfError),
    #[error(transparent)]
    CycleIndex(#[from] CiError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Which computation produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Engine {
    #[serde(rename = "gf")]
    Gf,
    #[serde(rename = "cycle-index")]
    CycleIndex,
    #[serde(rename = "oracle")]
    Oracle,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Engine::Gf => "gf",
            Engine::CycleIndex => "cycle-index",
            Engine::Oracle => "oracle",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTable {
    pub k: u32,
    pub n_max: usize,
    pub engine: Engine,
    /// counts[n] as a decimal string; entries exceed u64 range past n ≈ 20.
    pub counts: Vec<String>,
}

impl EnumerationTable {
    pub fn from_counts(k: u32, engine: Engine, counts: &[BigInt]) -> Self {
        EnumerationTable {
            k,
            n_max: counts.len() - 1,
            engine,
            counts: counts.iter().map(BigInt::to_string).collect(),
        }
    }

    /// Checks the structural invariants, for tables built from parsed input.
    pub fn validate(&self) -> Result<(), TableError> {
        if self.counts.len() != self.n_max + 1 {
            return Err(TableError::Invariant(format!(
                "counts length {} != n_max+1 = {}",
                self.counts.len(),
                self.n_max + 1
            )));
        }
        if self.counts.first().map(String::as_str) != Some("1") {
            return Err(TableError::Invariant("counts[0] must be 1".into()));
        }
        for (n, c) in self.counts.iter().enumerate() {
            let parsed = BigInt::from_str(c)
                .map_err(|e| TableError::Invariant(format!("counts[{n}] = {c:?}: {e}")))?;
            if parsed.to_string() != *c {
                return Err(TableError::Invariant(format!(
                    "counts[{n}] = {c:?} is not in canonical decimal form"
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let table: EnumerationTable = serde_json::from_str(text)?;
        table.validate()?;
        Ok(table)
    }

    /// CSV with header `n,count` and LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }

    /// Human-readable aligned table.
    pub fn render_text(&self) -> String {
        let width = self.counts.iter().map(String::len).max().unwrap_or(1);
        let mut out =
            format!("# unlabeled {}-trees by hedron count (engine: {})\n", self.k, self.engine);
        for (n, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{n:>4}  {c:>width$}\n"));
        }
        out
    }
}

/// Computes a table with the requested engine. Engines other than `gf` have
/// small-scale bounds and fail past them.
pub fn compute_table(k: u32, n_max: usize, engine: Engine) -> Result<EnumerationTable, TableError> {
    let counts: Vec<BigInt> = match engine {
        Engine::Gf => unlabeled_ktree_series(k, n_max)?,
        Engine::CycleIndex => ktree_cycle_index(k, n_max, &CiBounds::default())?
            .specialize_unlabeled()
            .nonneg_integer_coeffs()
            .map_err(|e| TableError::Invariant(e.to_string()))?,
        Engine::Oracle => {
            brute_count_series(k, n_max as u32)?.into_iter().map(BigInt::from).collect()
        }
    };
    Ok(EnumerationTable::from_counts(k, engine, &counts))
}

/// One `k=<int>` block of a verification fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureBlock {
    pub k: u32,
    pub rows: Vec<(usize, BigInt)>,
}

/// Parses the fixture format: `k=<int>` headers, `n count` pairs, `#`
/// comments and blank lines ignored.
pub fn parse_fixture(content: &str) -> Result<Vec<FixtureBlock>, TableError> {
    let mut blocks: Vec<FixtureBlock> = Vec::new();
    for (idx, raw) in content.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("k=") {
            let k = rest.trim().parse().map_err(|_| TableError::Fixture {
                line: idx + 1,
                reason: format!("invalid k header {line:?}"),
            })?;
            blocks.push(FixtureBlock { k, rows: Vec::new() });
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(n), Some(count), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(TableError::Fixture {
                line: idx + 1,
                reason: format!("expected 'n count', got {line:?}"),
            });
        };
        let n: usize = n.parse().map_err(|_| TableError::Fixture {
            line: idx + 1,
            reason: format!("invalid n {n:?}"),
        })?;
        let count = BigInt::from_str(count).map_err(|_| TableError::Fixture {
            line: idx + 1,
            reason: format!("invalid count {count:?}"),
        })?;
        let Some(block) = blocks.last_mut() else {
            return Err(TableError::Fixture {
                line: idx + 1,
                reason: "data row before any k= header".into(),
            });
        };
        block.rows.push((n, count));
    }
    Ok(blocks)
}

/// Outcome of one fixture entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCheck {
    pub k: u32,
    pub n: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl VerifyCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(VerifyCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Recomputes every fixture entry with the generating-function engine and
/// compares exactly. Blocks are independent and verified in parallel; the
/// report preserves fixture order.
pub fn verify_fixture(content: &str) -> Result<VerifyReport, TableError> {
    let blocks = parse_fixture(content)?;
    let per_block: Vec<Result<Vec<VerifyCheck>, TableError>> = blocks
        .par_iter()
        .map(|block| {
            if block.rows.is_empty() {
                return Ok(Vec::new());
            }
            let n_max = block.rows.iter().map(|&(n, _)| n).max().unwrap_or(0);
            let actual = unlabeled_ktree_series(block.k, n_max)?;
            Ok(block
                .rows
                .iter()
                .map(|(n, expected)| VerifyCheck {
                    k: block.k,
                    n: *n,
                    expected: expected.clone(),
                    actual: actual[*n].clone(),
                })
                .collect())
        })
        .collect();
    let mut report = VerifyReport::default();
    for result in per_block {
        report.checks.extend(result?);
    }
    Ok(report)
}
