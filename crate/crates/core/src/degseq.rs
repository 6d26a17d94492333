//! Degree sequences and majorization.
//!
//! Stored values are sorted non-decreasingly and every condition formula
//! addresses them 1-based: `d.get(1)` is the minimum degree.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::binom;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence {
    values: Vec<u64>,
    r: usize,
}

impl DegreeSequence {
    /// Validates and sorts `values`. Each degree must lie in [0, C(n-1, r-1)].
    pub fn new(values: &[i64], r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::RankTooSmall { r, min: 2 });
        }
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = values.len();
        let max = binom(n as u64 - 1, r as i64 - 1);
        for (index, &value) in values.iter().enumerate() {
            if value < 0 || BigUint::from(value as u64) > max {
                return Err(Error::ValueOutOfRange { index, value, max: max.to_string() });
            }
        }
        let mut values: Vec<u64> = values.iter().map(|&v| v as u64).collect();
        values.sort_unstable();
        Ok(DegreeSequence { values, r })
    }

    pub fn from_degrees(values: &[u64], r: usize) -> Result<Self> {
        let signed: Vec<i64> = values
            .iter()
            .map(|&v| i64::try_from(v).unwrap_or(i64::MAX))
            .collect();
        Self::new(&signed, r)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// 1-based access. Panics outside 1..=n.
    pub fn get(&self, i: usize) -> u64 {
        self.values[i - 1]
    }

    /// Minimum degree δ = d_1.
    pub fn min_degree(&self) -> u64 {
        self.values[0]
    }

    pub fn max_degree(&self) -> u64 {
        self.values[self.values.len() - 1]
    }

    pub fn degree_sum(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Number of edges of any realization, when r divides the degree sum.
    pub fn edge_count(&self) -> Option<u64> {
        let sum = self.degree_sum();
        sum.is_multiple_of(self.r as u64).then(|| sum / self.r as u64)
    }

    /// Whether `self` majorizes `other`: componentwise >= on sorted values.
    pub fn majorizes(&self, other: &DegreeSequence) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a >= b))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

pub fn majorizes(dprime: &DegreeSequence, d: &DegreeSequence) -> Result<bool> {
    dprime.majorizes(d)
}

/// Majorization on raw values, sorted first. No degree bound is applied.
pub fn majorizes_values(dprime: &[u64], d: &[u64]) -> Result<bool> {
    if dprime.len() != d.len() {
        return Err(Error::LengthMismatch { left: dprime.len(), right: d.len() });
    }
    let (mut a, mut b) = (dprime.to_vec(), d.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    Ok(a.iter().zip(&b).all(|(x, y)| x >= y))
}

/// Parses one sequence: decimal integers separated by commas and/or
/// whitespace.
pub fn parse_values(text: &str) -> std::result::Result<Vec<i64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.parse::<i64>().map_err(|e| format!("bad integer {tok:?}: {e}")))
        .collect()
}

/// Reads the sequence text format: one sequence per line, `#` lines and
/// blank lines skipped.
pub fn parse_sequences(text: &str, r: usize) -> Result<Vec<DegreeSequence>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let values = parse_values(line).map_err(|message| Error::Parse { line: lineno + 1, message })?;
        out.push(DegreeSequence::new(&values, r)?);
    }
    Ok(out)
}
