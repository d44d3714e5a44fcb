//! Theorem runs: the exhaustive suite pass followed by random samples, spread
//! over threads with results assembled in a fixed order.

use std::ops::Range;
use std::thread;
use std::time::Instant;

use mvspec_core::harness::{
    merge_outcomes, run_samples, ProductOfChains, SampleCache, SampleOutcome, Statement, StatementReport, Suite,
};
use mvspec_core::Error;

pub const THREADS_VAR: &str = "MVSPEC_THREADS";

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub samples: u64,
    pub seed: u64,
    pub generator: ProductOfChains,
    pub threads: usize,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { samples: 0, seed: 0, generator: ProductOfChains::default(), threads: 1, timings: false }
    }
}

/// Thread cap from `MVSPEC_THREADS`, defaulting to the available cores.
pub fn thread_count() -> Result<usize, String> {
    match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("{THREADS_VAR} must be a positive integer, got {v:?}")),
        },
        Err(_) => Ok(thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// `0..n` cut into at most `parts` contiguous pieces.
fn split(n: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts as u64).clamp(1, n.max(1));
    let (q, r) = (n / parts, n % parts);
    let mut start = 0;
    (0..parts)
        .map(|i| {
            let len = q + u64::from(i < r);
            let range = start..start + len;
            start += len;
            range
        })
        .collect()
}

/// Runs each statement over the suite, then over random samples for those
/// still without a witness. Reports come back in statement order and do not
/// depend on the thread count.
pub fn run_theorems(
    statements: &[&'static Statement],
    suite: &Suite,
    opts: &RunOptions,
) -> Result<Vec<StatementReport>, Error> {
    let threads = opts.threads.max(1);
    let mut slots: Vec<Option<Result<StatementReport, Error>>> = vec![None; statements.len()];
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads.min(statements.len()))
            .map(|t| {
                s.spawn(move || {
                    let mut out = Vec::new();
                    for i in (t..statements.len()).step_by(threads) {
                        let start = Instant::now();
                        let r = mvspec_core::harness::run_statement(statements[i], suite).map(|mut r| {
                            if opts.timings {
                                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
                            }
                            r
                        });
                        out.push((i, r));
                    }
                    out
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("statement worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    let mut reports = slots.into_iter().map(|r| r.expect("every statement ran")).collect::<Result<Vec<_>, _>>()?;

    if opts.samples == 0 {
        return Ok(reports);
    }
    let open: Vec<usize> = (0..reports.len()).filter(|&i| reports[i].witness.is_none()).collect();
    if open.is_empty() {
        return Ok(reports);
    }
    let pending: Vec<&Statement> = open.iter().map(|&i| statements[i]).collect();
    let start = Instant::now();
    let chunks: Vec<Result<Vec<SampleOutcome>, Error>> = thread::scope(|s| {
        let handles: Vec<_> = split(opts.samples, threads)
            .into_iter()
            .map(|range| {
                let pending = &pending;
                s.spawn(move || run_samples(pending, &opts.generator, opts.seed, range, &mut SampleCache::new()))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sample worker panicked")).collect()
    });
    let merged = merge_outcomes(chunks.into_iter().collect::<Result<Vec<_>, _>>()?);
    let sampling_ms = start.elapsed().as_millis() as u64;

    for (&i, outcome) in open.iter().zip(merged) {
        let r = &mut reports[i];
        r.instances += outcome.tally.instances;
        r.hypothesis_hits += outcome.tally.hits;
        if let Some(c) = r.cases.as_mut() {
            c.case1 += outcome.tally.cases.case1;
            c.case2 += outcome.tally.cases.case2;
        }
        r.samples = outcome.samples;
        if let Some(w) = outcome.witness {
            r.witness = Some(w);
            r.status = mvspec_core::harness::Status::Counterexample;
        } else if r.hypothesis_hits > 0 {
            r.status = mvspec_core::harness::Status::Verified;
        }
        if let Some(ms) = r.elapsed_ms.as_mut() {
            *ms += sampling_ms;
        }
    }
    Ok(reports)
}
