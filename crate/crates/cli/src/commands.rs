use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use circlepath::lengths::{count_distinct_lengths_with, reduce_essential};
use circlepath::realize::LdsOutcome;
use circlepath::{
    campaign, count_admissible, count_all, count_distinct_lengths_numeric, dimension_formula,
    enumerate_bounded_identities, hillclimb, identity_basis, improper_identity, lds_backtrack,
    verify, CampaignCheckpoint, CampaignMethod, CampaignOptions, EnumerationRange, Error,
    HillClimbConfig, HillClimbResult, LdsConfig, LdsResult, Multiset, MultisetRanker, Path,
    ProblemSize,
};
use clap::Parser;

use crate::args::*;
use crate::bfile::BFile;
use crate::oeis::{self, Sequence};
use crate::report::{exit, RunReport, Status};

/// What a command produced: a report or plain text, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub report: Option<RunReport>,
    /// help, version or usage text
    pub text: String,
    pub to_stderr: bool,
    pub code: i32,
}

impl Outcome {
    pub fn render(&self, pretty: bool) -> String {
        match &self.report {
            Some(r) if pretty => r.to_pretty(),
            Some(r) => r.to_json_line() + "\n",
            None => self.text.clone(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run(args: Vec<String>) -> (Outcome, bool) {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INVALID_INPUT
            } else {
                exit::SUCCESS
            };
            let outcome = Outcome {
                report: None,
                text: e.render().to_string(),
                to_stderr: e.use_stderr(),
                code,
            };
            return (outcome, false);
        }
    };
    let echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let pretty = cli.pretty;
    (execute(cli, echo), pretty)
}

pub fn execute(cli: Cli, echo: String) -> Outcome {
    let ctx = Context {
        seed: cli.seed,
        workers: cli
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
            .max(1),
    };
    let n = match &cli.command {
        Command::Count(a) => Some(a.n),
        Command::Realize(a) => Some(a.n),
        Command::Campaign(a) => Some(a.n),
        Command::Identities(a) => Some(a.n),
        Command::Lengths(a) => Some(a.n),
        Command::Oeis(_) => None,
    };
    let mut report = RunReport::new(echo, n, cli.seed);
    let start = Instant::now();
    let result = match &cli.command {
        Command::Count(a) => count(a, &mut report),
        Command::Realize(a) => realize(a, &ctx, &mut report),
        Command::Campaign(a) => run_campaign(a, &ctx, &mut report),
        Command::Identities(a) => identities(a, &mut report),
        Command::Lengths(a) => lengths(a, &ctx, &mut report),
        Command::Oeis(a) => run_oeis(a, &ctx, &mut report),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            report.status = Status::Error;
            report.message(e.to_string());
            error_code(&e)
        }
    };
    report.elapsed_secs = start.elapsed().as_secs_f64();
    Outcome {
        report: Some(report),
        text: String::new(),
        to_stderr: false,
        code,
    }
}

struct Context {
    seed: u64,
    workers: usize,
}

type CmdResult = Result<i32, Error>;

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Checkpoint(_) | Error::VerificationFailed(_) | Error::NumericMismatch(_) => {
            exit::INTEGRITY
        }
        Error::InsufficientPrecision { .. } => exit::SEARCH_FAILURE,
        _ => exit::INVALID_INPUT,
    }
}

fn count(a: &CountArgs, report: &mut RunReport) -> CmdResult {
    ProblemSize::new(a.n)?;
    let both = !a.all && !a.admissible;
    if a.all || both {
        report.count("all", count_all(a.n)?);
    }
    if a.admissible || both {
        report.count("admissible", count_admissible(a.n)?);
    }
    Ok(exit::SUCCESS)
}

fn inadmissible(target: &Multiset, d: usize) -> String {
    let sigma = target.sigma(d).unwrap_or(0);
    format!(
        "inadmissible: for divisor d = {d}, the chords of types divisible by {d} number {sigma}, \
         more than n - d = {}",
        target.n() - d
    )
}

fn realize(a: &RealizeArgs, ctx: &Context, report: &mut RunReport) -> CmdResult {
    let target = Multiset::parse(a.n, &a.multiset)?;
    report.detail("multiset", target.to_string());
    if let Some(d) = target.violated_divisor() {
        report.status = Status::Fail;
        report.detail("violated_divisor", d);
        report.message(inadmissible(&target, d));
        return Ok(exit::INVALID_INPUT);
    }
    let n = a.n;
    let hill_cfg = HillClimbConfig {
        seed: ctx.seed,
        max_iters: a.max_iters,
        ..HillClimbConfig::default()
    };
    let lds_cfg = LdsConfig {
        max_discrepancy: a.max_discrepancy.unwrap_or(n - 1),
        node_budget: a.node_budget,
        trace: false,
    };
    lds_cfg.validate(n)?;
    let mut found: Option<Path> = None;
    if a.method == Method::Mixed {
        // one greedy dive along the heuristic order costs at most n nodes
        let dive = LdsConfig {
            max_discrepancy: 0,
            ..lds_cfg
        };
        if let LdsResult::Found { path, .. } = lds_backtrack(&target, dive)?.result {
            report.detail("solver", "lds");
            report.count("discrepancy", 0);
            found = Some(path);
        }
    }
    if found.is_none() && a.method != Method::Lds {
        match hillclimb(&target, hill_cfg)? {
            HillClimbResult::Found { path, iterations } => {
                report.detail("solver", "hillclimb");
                report.count("iterations", iterations);
                found = Some(path);
            }
            HillClimbResult::GaveUp { iterations } => {
                report.message(format!(
                    "hill-climbing gave up after {iterations} iterations"
                ));
            }
        }
    }
    if found.is_none() && a.method != Method::Hillclimb {
        let LdsOutcome { result, nodes, .. } = lds_backtrack(&target, lds_cfg)?;
        report.count("nodes", nodes);
        match result {
            LdsResult::Found { path, discrepancy } => {
                report.detail("solver", "lds");
                report.count("discrepancy", discrepancy);
                found = Some(path);
            }
            LdsResult::Exhausted => {
                report.message(format!(
                    "LDS exhausted every leaf of discrepancy at most {}",
                    lds_cfg.max_discrepancy
                ));
            }
            LdsResult::BudgetExceeded => {
                report.message("LDS node budget exceeded");
            }
        }
    }
    let Some(path) = found else {
        report.status = Status::Fail;
        return Ok(exit::SEARCH_FAILURE);
    };
    if !verify(path.points(), &target) {
        return Err(Error::VerificationFailed(path.points().to_vec()));
    }
    report.detail("path", path.to_string());
    report.detail("verified", true);
    Ok(exit::SUCCESS)
}

fn campaign_method(m: Method) -> CampaignMethod {
    match m {
        Method::Hillclimb => CampaignMethod::HillClimb,
        Method::Lds => CampaignMethod::Lds,
        Method::Mixed => CampaignMethod::Mixed,
    }
}

fn run_campaign(a: &CampaignArgs, ctx: &Context, report: &mut RunReport) -> CmdResult {
    let n = a.n;
    ProblemSize::new(n)?;
    let path: PathBuf = a
        .checkpoint
        .clone()
        .unwrap_or_else(|| a.checkpoint_dir.join(format!("campaign-n{n}.bhrc")));
    report.detail("checkpoint", path.display().to_string());
    let mut checkpoint = if path.exists() {
        let cp = CampaignCheckpoint::load(&path)?;
        cp.validate()?;
        if cp.n() != n {
            return Err(Error::Checkpoint(format!(
                "{} holds a campaign for n={}, not n={n}",
                path.display(),
                cp.n()
            )));
        }
        cp
    } else {
        CampaignCheckpoint::new(n)?
    };
    let total = MultisetRanker::new(n)?.total();
    let range = EnumerationRange::new(n, a.from.unwrap_or(0), a.to.unwrap_or(total))?;
    let opts = CampaignOptions {
        method: campaign_method(a.method),
        workers: ctx.workers,
        seed: ctx.seed,
        hill_iters: a.hill_iters,
        hill_restarts: a.hill_restarts,
        lds_max_discrepancy: a.max_discrepancy,
    };
    let r = campaign(&mut checkpoint, range, &opts)?;
    checkpoint.save(&path)?;
    let admissible = count_admissible(n)?;
    report
        .count("admissible_in_range", r.admissible_in_range)
        .count("realized_in_range", r.realized_in_range)
        .count("newly_realized", r.newly_realized)
        .count("solver_calls", r.solver_calls)
        .count("hillclimb_found", r.hillclimb_found)
        .count("lds_found", r.lds_found)
        .count("realized", checkpoint.realized_count())
        .count("admissible", &admissible);
    report.detail("method", r.method.to_string());
    report.detail("range", [r.from_rank.to_string(), r.to_rank.to_string()]);
    report.detail("lds_discrepancies", &r.lds_discrepancies);
    if !r.unrealized.is_empty() {
        let shown: Vec<String> = r
            .unrealized
            .iter()
            .take(20)
            .map(|m| m.to_string())
            .collect();
        report.detail("unrealized", shown);
    }
    let complete = admissible == checkpoint.realized_count().into();
    if complete {
        report.status = Status::Pass;
        report.message(format!("R_n = A_n for n = {n}: PASS"));
        Ok(exit::SUCCESS)
    } else if range.len() == total {
        report.status = Status::Fail;
        report.message(format!("R_n = A_n for n = {n}: FAIL"));
        Ok(exit::SEARCH_FAILURE)
    } else if r.passed() {
        report.status = Status::Partial;
        Ok(exit::SUCCESS)
    } else {
        report.status = Status::Fail;
        Ok(exit::SEARCH_FAILURE)
    }
}

fn identities(a: &IdentitiesArgs, report: &mut RunReport) -> CmdResult {
    let n = a.n;
    ProblemSize::new(n)?;
    if a.dimension {
        let basis = identity_basis(n)?;
        report
            .count("dimension", basis.dimension())
            .count("dimension_formula", dimension_formula(n));
        if basis.dimension() != dimension_formula(n) {
            return Err(Error::NumericMismatch(format!(
                "nullspace dimension {} differs from the formula {}",
                basis.dimension(),
                dimension_formula(n)
            )));
        }
    } else if a.basis {
        let basis = identity_basis(n)?;
        report.count("dimension", basis.dimension());
        let vectors: Vec<String> = basis.vectors.iter().map(|v| v.to_string()).collect();
        report.detail("basis", vectors);
    } else if a.essential {
        let full = enumerate_bounded_identities(n)?;
        let essential = reduce_essential(&full);
        report
            .count("full", full.len())
            .count("essential", essential.len());
        if !a.counts_only {
            let vectors: Vec<String> = essential.vectors().iter().map(|v| v.to_string()).collect();
            report.detail("identities", vectors);
        }
    } else if a.improper {
        report.detail("improper", improper_identity(n)?.to_string());
    }
    Ok(exit::SUCCESS)
}

fn refuse_unverified(n: usize, assume: bool) -> Result<(), Error> {
    if n > VERIFIED_LIMIT && !assume {
        return Err(Error::InvalidConfig(format!(
            "n = {n}: realizability of every admissible multiset is only verified for \
             n <= {VERIFIED_LIMIT}, so the count would be of admissible multisets, not of paths; \
             pass --assume-conjecture to compute it anyway"
        )));
    }
    Ok(())
}

fn lengths(a: &LengthsArgs, ctx: &Context, report: &mut RunReport) -> CmdResult {
    let n = a.n;
    ProblemSize::new(n)?;
    refuse_unverified(n, a.assume_conjecture)?;
    if n > VERIFIED_LIMIT {
        report.message("assuming every admissible multiset is realizable");
    }
    match a.method {
        LengthMethod::Exact => {
            report.count(
                "distinct_lengths",
                count_distinct_lengths_with(n, ctx.workers)?,
            );
        }
        LengthMethod::Numeric => {
            let c = count_distinct_lengths_numeric(n, a.bits)?;
            report
                .count("distinct_lengths", &c.distinct)
                .count("grouped_pairs", c.grouped_pairs)
                .count("separated_pairs", c.separated_pairs);
            report.detail("precision_bits", a.bits);
        }
    }
    Ok(exit::SUCCESS)
}

/// Sequence values keyed by `n`, for `3 <= n <= n_max`.
pub fn sequence_values(
    seq: Sequence,
    n_max: usize,
    workers: usize,
) -> Result<BTreeMap<usize, String>, Error> {
    let mut out = BTreeMap::new();
    for n in 3..=n_max {
        let v = match seq {
            Sequence::A352568 => count_admissible(n)?,
            Sequence::A030077 => count_distinct_lengths_with(n, workers)?,
        };
        out.insert(n, v.to_string());
    }
    Ok(out)
}

fn run_oeis(a: &OeisArgs, ctx: &Context, report: &mut RunReport) -> CmdResult {
    let seq: Sequence = a.sequence.parse()?;
    refuse_unverified(a.n_max, a.assume_conjecture)?;
    report.detail("sequence", seq.to_string());
    let bfile = BFile::load(&a.bfile)?;
    let computed = sequence_values(seq, a.n_max, ctx.workers)?;
    let diff = match oeis::diff(&bfile, &computed) {
        Ok(d) => d,
        Err(e) => {
            report.status = Status::Fail;
            report.message(e.to_string());
            return Ok(exit::INTEGRITY);
        }
    };
    let lines: Vec<String> = diff
        .results
        .iter()
        .map(|r| {
            if r.pass {
                format!("a({}) n={} PASS {}", r.index, r.n, r.computed)
            } else {
                format!(
                    "a({}) n={} FAIL expected {} computed {}",
                    r.index, r.n, r.expected, r.computed
                )
            }
        })
        .collect();
    let failed = diff.results.iter().filter(|r| !r.pass).count();
    report
        .count("compared", diff.results.len())
        .count("failed", failed)
        .count("skipped", diff.skipped.len())
        .count("anchors", diff.anchors);
    report.detail("shift", diff.shift);
    report.detail("per_index", lines);
    for w in &diff.warnings {
        report.message(format!("warning: {w}"));
    }
    if diff.passed() {
        report.status = Status::Pass;
        Ok(exit::SUCCESS)
    } else {
        report.status = Status::Fail;
        Ok(exit::INTEGRITY)
    }
}
