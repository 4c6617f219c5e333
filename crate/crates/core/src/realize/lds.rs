//! Backtracking with Limited Discrepancy Search.
//!
//! Iteration `k` explores exactly the leaves reached by taking a non-first
//! child `k` times; iterations run for `k = 0, 1, ...`, so leaves are met in
//! nondecreasing discrepancy and a search run up to `n - 1` is complete.

use super::heuristic::{heuristic_order, SearchState};
use crate::chord::{Multiset, Path};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LdsConfig {
    pub max_discrepancy: usize,
    /// nodes expanded over all iterations before giving up
    pub node_budget: Option<u64>,
    /// record the discrepancy of every leaf visited
    pub trace: bool,
}

impl Default for LdsConfig {
    fn default() -> Self {
        Self {
            max_discrepancy: 14,
            node_budget: None,
            trace: false,
        }
    }
}

impl LdsConfig {
    pub fn complete(n: usize) -> Self {
        Self {
            max_discrepancy: n.saturating_sub(1),
            ..Self::default()
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.max_discrepancy > n.saturating_sub(1) {
            return Err(Error::InvalidConfig(format!(
                "max_discrepancy {} exceeds the tree depth {}",
                self.max_discrepancy,
                n - 1
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LdsResult {
    Found {
        path: Path,
        discrepancy: usize,
    },
    /// every leaf up to the discrepancy cap was visited
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdsOutcome {
    pub result: LdsResult,
    pub nodes: u64,
    /// leaf discrepancies in visiting order, when tracing
    pub trace: Vec<usize>,
}

impl LdsOutcome {
    pub fn path(&self) -> Option<&Path> {
        match &self.result {
            LdsResult::Found { path, .. } => Some(path),
            _ => None,
        }
    }
}

struct Run {
    cfg: LdsConfig,
    nodes: u64,
    trace: Vec<usize>,
    over_budget: bool,
}

enum Step {
    Found,
    Continue,
    Stop,
}

/// Searches for a path realizing `target`, starting at point 0 (chord
/// types are invariant under rotation). A discrepancy cap above the tree
/// depth `n - 1` is treated as `n - 1`.
pub fn lds_backtrack(target: &Multiset, cfg: LdsConfig) -> Result<LdsOutcome> {
    let n = target.n();
    let mut state = SearchState::start(n, target.counts(), 0)?;
    let mut run = Run {
        cfg,
        nodes: 0,
        trace: Vec::new(),
        over_budget: false,
    };
    for k in 0..=cfg.max_discrepancy.min(n - 1) {
        match descend(&mut state, k, k, &mut run) {
            Step::Found => {
                let path = Path::new(state.path().to_vec())?;
                return Ok(LdsOutcome {
                    result: LdsResult::Found {
                        path,
                        discrepancy: k,
                    },
                    nodes: run.nodes,
                    trace: run.trace,
                });
            }
            Step::Stop => break,
            Step::Continue => {}
        }
    }
    let result = if run.over_budget {
        LdsResult::BudgetExceeded
    } else {
        LdsResult::Exhausted
    };
    Ok(LdsOutcome {
        result,
        nodes: run.nodes,
        trace: run.trace,
    })
}

fn descend(state: &mut SearchState, allowance: usize, total: usize, run: &mut Run) -> Step {
    if state.is_complete() {
        if allowance == 0 {
            if run.cfg.trace {
                run.trace.push(total);
            }
            return Step::Found;
        }
        return Step::Continue;
    }
    let depth_left = state.n() - state.path().len();
    if allowance > depth_left {
        return Step::Continue;
    }
    if run.cfg.node_budget.is_some_and(|b| run.nodes >= b) {
        run.over_budget = true;
        return Step::Stop;
    }
    run.nodes += 1;
    let children = heuristic_order(state);
    if children.is_empty() {
        if allowance == 0 && run.cfg.trace {
            run.trace.push(total);
        }
        return Step::Continue;
    }
    for (i, child) in children.iter().enumerate() {
        let cost = usize::from(i > 0);
        if cost > allowance {
            break;
        }
        state.push(child);
        let step = descend(state, allowance - cost, total, run);
        if matches!(step, Step::Found) {
            return step;
        }
        state.pop();
        if matches!(step, Step::Stop) {
            return step;
        }
    }
    Step::Continue
}
