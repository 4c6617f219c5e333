//! Diffing computed values against an OEIS b-file.
//!
//! A b-file's index convention need not be `n`, so the index shift is
//! found first: the shift with the most agreeing values wins, and it must
//! agree on at least [`MIN_ANCHORS`] indices before any diff is trusted.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use circlepath::{Error, Result};
use serde::Serialize;

use crate::bfile::BFile;

pub const MIN_ANCHORS: usize = 2;
/// shifts tried are `-MAX_SHIFT..=MAX_SHIFT`
pub const MAX_SHIFT: i64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sequence {
    /// number of distinct path lengths
    A030077,
    /// number of distinct multisets of chord lengths
    A352568,
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sequence::A030077 => "A030077",
            Sequence::A352568 => "A352568",
        })
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A030077" => Ok(Sequence::A030077),
            "A352568" => Ok(Sequence::A352568),
            _ => Err(Error::InvalidConfig(format!("unknown sequence {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub index: i64,
    pub n: usize,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diff {
    /// b-file index = `n - shift`
    pub shift: i64,
    pub anchors: usize,
    pub results: Vec<IndexResult>,
    /// b-file indices with no computed value
    pub skipped: Vec<i64>,
    pub warnings: Vec<String>,
}

impl Diff {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Aligns `bfile` against `computed` (keyed by `n`) and diffs every index
/// that has a computed value. An empty b-file is a vacuous pass.
pub fn diff(bfile: &BFile, computed: &BTreeMap<usize, String>) -> Result<Diff> {
    if bfile.is_empty() {
        return Ok(Diff {
            shift: 0,
            anchors: 0,
            results: Vec::new(),
            skipped: Vec::new(),
            warnings: vec!["empty b-file: nothing to compare".into()],
        });
    }
    let (shift, anchors) = align(bfile, computed)?;
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    for (index, expected) in &bfile.entries {
        let Some(value) = usize::try_from(index + shift)
            .ok()
            .and_then(|n| computed.get(&n).map(|v| (n, v)))
        else {
            skipped.push(*index);
            continue;
        };
        let (n, got) = value;
        results.push(IndexResult {
            index: *index,
            n,
            expected: expected.clone(),
            computed: got.clone(),
            pass: expected == got,
        });
    }
    let mut warnings = Vec::new();
    if shift != 0 {
        warnings.push(format!("b-file index is offset from n by {}", -shift));
    }
    Ok(Diff {
        shift,
        anchors,
        results,
        skipped,
        warnings,
    })
}

fn align(bfile: &BFile, computed: &BTreeMap<usize, String>) -> Result<(i64, usize)> {
    let mut best: Option<(usize, i64)> = None;
    for shift in -MAX_SHIFT..=MAX_SHIFT {
        let hits = bfile
            .entries
            .iter()
            .filter(|(i, v)| {
                usize::try_from(i + shift)
                    .ok()
                    .and_then(|n| computed.get(&n))
                    .is_some_and(|c| c == v)
            })
            .count();
        // ties go to the smaller |shift|
        let better = match best {
            None => true,
            Some((h, s)) => hits > h || (hits == h && shift.abs() < s.abs()),
        };
        if better {
            best = Some((hits, shift));
        }
    }
    match best {
        Some((hits, shift)) if hits >= MIN_ANCHORS => Ok((shift, hits)),
        _ => Err(Error::InvalidConfig(format!(
            "cannot align the b-file: no index shift in -{MAX_SHIFT}..={MAX_SHIFT} \
             agrees with {MIN_ANCHORS} computed values"
        ))),
    }
}
