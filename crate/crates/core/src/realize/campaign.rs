//! Realizing every admissible multiset in a rank range.
//!
//! Workers scan disjoint rank ranges against a read-only snapshot of the
//! checkpoint and record new realizations in private bitmaps, which are
//! OR-merged at the end. A realization of `M` also realizes every coprime
//! transform of `M` (scale the points), so those bits are set too, each
//! after verifying the scaled path.

use std::fmt;
use std::str::FromStr;

use crate::chord::{Multiset, Path};
use crate::enumerate::{iter_admissible, EnumerationRange};
use crate::error::{Error, Result};
use crate::rank::MultisetRanker;

use super::checkpoint::CampaignCheckpoint;
use super::hillclimb::{HillClimbConfig, HillClimber};
use super::lds::{lds_backtrack, LdsConfig, LdsResult};
use super::{scale_path, verify};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CampaignMethod {
    HillClimb,
    Lds,
    /// a short hill-climb from the previous solution, then LDS with the
    /// discrepancy cap raised until the search is complete
    Mixed,
}

impl fmt::Display for CampaignMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CampaignMethod::HillClimb => "hillclimb",
            CampaignMethod::Lds => "lds",
            CampaignMethod::Mixed => "mixed",
        })
    }
}

impl FromStr for CampaignMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hillclimb" => Ok(CampaignMethod::HillClimb),
            "lds" => Ok(CampaignMethod::Lds),
            "mixed" => Ok(CampaignMethod::Mixed),
            other => Err(Error::InvalidConfig(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignOptions {
    pub method: CampaignMethod,
    pub workers: usize,
    pub seed: u64,
    /// iteration cap per hill-climbing attempt
    pub hill_iters: u64,
    /// hill-climbing attempts per multiset in `HillClimb` mode
    pub hill_restarts: u32,
    /// LDS cap; `None` means `n - 1`, a complete search
    pub lds_max_discrepancy: Option<usize>,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        Self {
            method: CampaignMethod::Mixed,
            workers: 1,
            seed: 0,
            hill_iters: 200,
            hill_restarts: 8,
            lds_max_discrepancy: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub n: usize,
    pub method: CampaignMethod,
    pub from_rank: u128,
    pub to_rank: u128,
    pub admissible_in_range: u64,
    pub realized_in_range: u64,
    /// bits newly set by this run, orbit images included
    pub newly_realized: u64,
    pub solver_calls: u64,
    pub hillclimb_found: u64,
    pub lds_found: u64,
    /// `lds_discrepancies[k]`: LDS successes at discrepancy `k`
    pub lds_discrepancies: Vec<u64>,
    /// admissible multisets of the range left without a realization
    pub unrealized: Vec<Multiset>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.unrealized.is_empty() && self.realized_in_range == self.admissible_in_range
    }
}

struct WorkerResult {
    found: CampaignCheckpoint,
    admissible: u64,
    solver_calls: u64,
    hillclimb_found: u64,
    lds_found: u64,
    lds_discrepancies: Vec<u64>,
    unrealized: Vec<Multiset>,
}

/// Tries to realize every admissible multiset of `range` that is not yet
/// marked in `checkpoint`, and merges the new realizations into it.
pub fn campaign(
    checkpoint: &mut CampaignCheckpoint,
    range: EnumerationRange,
    opts: &CampaignOptions,
) -> Result<CampaignReport> {
    let n = checkpoint.n();
    if range.n != n {
        return Err(Error::Checkpoint(format!(
            "checkpoint is for n={n}, range for n={}",
            range.n
        )));
    }
    if let Some(k) = opts.lds_max_discrepancy {
        LdsConfig {
            max_discrepancy: k,
            ..LdsConfig::default()
        }
        .validate(n)?;
    }
    let before = checkpoint.realized_count();
    let snapshot: &CampaignCheckpoint = checkpoint;
    let parts = range.split(opts.workers.max(1));
    let results: Vec<Result<WorkerResult>> = std::thread::scope(|scope| {
        let handles: Vec<_> = parts
            .into_iter()
            .enumerate()
            .map(|(i, part)| scope.spawn(move || run_worker(snapshot, part, opts, i as u64)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("campaign worker panicked"))
            .collect()
    });
    let mut report = CampaignReport {
        n,
        method: opts.method,
        from_rank: range.from_rank,
        to_rank: range.to_rank,
        admissible_in_range: 0,
        realized_in_range: 0,
        newly_realized: 0,
        solver_calls: 0,
        hillclimb_found: 0,
        lds_found: 0,
        lds_discrepancies: vec![0; n],
        unrealized: Vec::new(),
    };
    let mut pending = Vec::new();
    for r in results {
        let r = r?;
        checkpoint.merge(&r.found)?;
        report.admissible_in_range += r.admissible;
        report.solver_calls += r.solver_calls;
        report.hillclimb_found += r.hillclimb_found;
        report.lds_found += r.lds_found;
        for (a, b) in report
            .lds_discrepancies
            .iter_mut()
            .zip(&r.lds_discrepancies)
        {
            *a += b;
        }
        pending.extend(r.unrealized);
    }
    let ranker = MultisetRanker::new(n)?;
    // another worker may have realized an orbit image in the meantime
    report.unrealized = pending
        .into_iter()
        .filter(|m| !checkpoint.get(ranker.rank(m) as u64))
        .collect();
    report.newly_realized = checkpoint.realized_count() - before;
    iter_admissible(range)?.for_each_counts(|c| {
        if checkpoint.get(ranker.rank_counts(c) as u64) {
            report.realized_in_range += 1;
        }
    });
    Ok(report)
}

fn run_worker(
    snapshot: &CampaignCheckpoint,
    part: EnumerationRange,
    opts: &CampaignOptions,
    index: u64,
) -> Result<WorkerResult> {
    let n = snapshot.n();
    let ranker = MultisetRanker::new(n)?;
    let units = crate::chord::ProblemSize::new(n)?.units();
    let mut climber = HillClimber::new(HillClimbConfig {
        seed: opts.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15),
        max_iters: opts.hill_iters.max(1),
        ..HillClimbConfig::default()
    })?;
    let lds_cfg = LdsConfig {
        max_discrepancy: opts.lds_max_discrepancy.unwrap_or(n - 1),
        ..LdsConfig::default()
    };
    let mut out = WorkerResult {
        found: CampaignCheckpoint::new(n)?,
        admissible: 0,
        solver_calls: 0,
        hillclimb_found: 0,
        lds_found: 0,
        lds_discrepancies: vec![0; n],
        unrealized: Vec::new(),
    };
    let mut previous: Option<Path> = None;
    for (rank, target) in iter_admissible(part)? {
        out.admissible += 1;
        let rank = rank as u64;
        if snapshot.get(rank) || out.found.get(rank) {
            continue;
        }
        out.solver_calls += 1;
        let mut path = None;
        if opts.method != CampaignMethod::Lds {
            let attempts = match opts.method {
                CampaignMethod::HillClimb => opts.hill_restarts.max(1),
                _ => 1,
            };
            for attempt in 0..attempts {
                let start = if attempt == 0 {
                    previous.as_ref()
                } else {
                    None
                };
                if let Some(p) = climber.solve(&target, start)?.path() {
                    out.hillclimb_found += 1;
                    path = Some(p.clone());
                    break;
                }
            }
        }
        if path.is_none() && opts.method != CampaignMethod::HillClimb {
            let outcome = lds_backtrack(&target, lds_cfg)?;
            if let LdsResult::Found {
                path: p,
                discrepancy,
            } = outcome.result
            {
                out.lds_found += 1;
                out.lds_discrepancies[discrepancy] += 1;
                path = Some(p);
            }
        }
        let Some(path) = path else {
            out.unrealized.push(target);
            continue;
        };
        if !verify(path.points(), &target) {
            return Err(Error::VerificationFailed(path.points().to_vec()));
        }
        for &k in &units {
            let image = target.coprime_transform(k)?;
            let scaled = scale_path(&path, k)?;
            if !verify(scaled.points(), &image) {
                return Err(Error::VerificationFailed(scaled.points().to_vec()));
            }
            out.found.set(ranker.rank(&image) as u64);
        }
        previous = Some(path);
    }
    Ok(out)
}
