//! Brute-force references and instrumentation.
//!
//! Everything here is deliberately naive and shares no code path with the
//! builders it validates: membership filters run over a plain base-q
//! counter, the Gray check re-counts positions inline, and the cost
//! measurements drive the real generators while only tallying.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::crossbifix::{is_member, stream_s};
use crate::error::{Error, Result};
use crate::fib::{f_first_last, gen_fib_stream};
use crate::gray::{expected_ops, GrayOdometer};
use crate::word::{Symbol, Word};
use crate::OpsReport;

/// Default enumeration bound for [`brute_force_s`]: at most `2^22` words.
pub const DEFAULT_ENUM_BOUND: u64 = 1 << 22;

/// Enumerate all `q^n` words and keep the members of `S(n, q, k)`,
/// returned as a canonically ordered set.
pub fn brute_force_s(n: usize, q: u32, k: usize) -> Result<BTreeSet<Word>> {
    brute_force_s_with_bound(n, q, k, DEFAULT_ENUM_BOUND)
}

/// Exhaustive filter with an explicit bound on `q^n`.
pub fn brute_force_s_with_bound(
    n: usize,
    q: u32,
    k: usize,
    bound: u64,
) -> Result<BTreeSet<Word>> {
    let universe = BigUint::from(q).pow(n as u32);
    if universe > BigUint::from(bound) {
        return Err(Error::Capacity(format!(
            "enumeration of {universe} words is above the bound of {bound}"
        )));
    }
    let mut out = BTreeSet::new();
    let mut current = vec![0 as Symbol; n];
    loop {
        if is_member(&current, k) {
            out.insert(current.clone());
        }
        // base-q increment, most significant symbol first
        let mut i = n;
        while i > 0 && current[i - 1] as u32 == q - 1 {
            current[i - 1] = 0;
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
    }
    Ok(out)
}

/// Result of checking the one-position-per-step property along a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayCheckReport {
    pub ok: bool,
    /// Index of the first offending adjacent pair and its distance.
    pub first_violation: Option<(usize, usize)>,
    pub max_distance: usize,
}

/// Check that every adjacent pair of the list differs in exactly one
/// position (counting a length mismatch as a difference per extra symbol).
pub fn verify_gray(list: &[Word]) -> GrayCheckReport {
    let mut report = GrayCheckReport {
        ok: true,
        first_violation: None,
        max_distance: 0,
    };
    for (index, pair) in list.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        let mut distance = a.len().abs_diff(b.len());
        for i in 0..a.len().min(b.len()) {
            if a[i] != b[i] {
                distance += 1;
            }
        }
        report.max_distance = report.max_distance.max(distance);
        if distance != 1 && report.ok {
            report.ok = false;
            report.first_violation = Some((index, distance));
        }
    }
    report
}

/// Which generator a cost sweep drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatTarget {
    /// The reflected-list odometer at alphabet size `q`; sweep sizes are
    /// word lengths.
    GenTuple { q: u32 },
    /// The binary zero-run recursion at bound `k`; sweep sizes are lengths.
    GenFib { k: usize },
    /// The full streaming generator at `(q, k)`; sweep sizes are lengths.
    StreamS { q: u32, k: usize },
}

/// One sweep point: the exact counters and, for the odometer, the
/// closed-form scan-cost model to compare against.
#[derive(Debug, Clone)]
pub struct CatPoint {
    pub size: usize,
    pub report: OpsReport,
    /// Closed-form model value (odometer target only).
    pub expected_inner: Option<BigUint>,
    /// False when the run was cut off by the word budget.
    pub completed: bool,
}

/// Drive a generator over a size sweep and record exact work counters.
/// `word_budget` caps how many words each point may emit; runs past the
/// budget report the counters of the executed prefix.
pub fn measure_cat(
    target: CatTarget,
    sizes: &[usize],
    word_budget: Option<u64>,
) -> Result<Vec<CatPoint>> {
    let budget = word_budget.unwrap_or(u64::MAX);
    sizes
        .iter()
        .map(|&size| measure_point(target, size, budget))
        .collect()
}

fn measure_point(target: CatTarget, size: usize, budget: u64) -> Result<CatPoint> {
    match target {
        CatTarget::GenTuple { q } => {
            let mut odometer = GrayOdometer::new(size, q)?;
            let mut emitted = 0u64;
            for _ in odometer.by_ref() {
                emitted += 1;
                if emitted >= budget {
                    break;
                }
            }
            let report = odometer.report();
            let completed =
                BigUint::from(report.words_emitted) == crate::gray::gray_list_len(size, q);
            Ok(CatPoint {
                size,
                report,
                expected_inner: Some(expected_ops(size, q)?),
                completed,
            })
        }
        CatTarget::GenFib { k } => {
            let (mut b, _) = f_first_last(size, k)?;
            let mut words = 1u64;
            let mut stopped = false;
            let stats = gen_fib_stream(0, size, k, &mut |pos| {
                b[pos] = 1 - b[pos];
                words += 1;
                if words >= budget {
                    stopped = true;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            Ok(CatPoint {
                size,
                report: OpsReport {
                    words_emitted: words,
                    recursive_calls: stats.calls,
                    ..OpsReport::default()
                },
                expected_inner: None,
                completed: !stopped,
            })
        }
        CatTarget::StreamS { q, k } => {
            let mut emitted = 0u64;
            let report = stream_s(size, q, k, &mut |_| {
                emitted += 1;
                if emitted >= budget {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            Ok(CatPoint {
                size,
                report,
                expected_inner: None,
                completed: emitted < budget,
            })
        }
    }
}
