//! Binary words avoiding `k` consecutive zeros, in Gray code order.
//!
//! The base list `C(n)` is a variant of the binary reflected Gray code with
//! first word `1 0^(n-1)` and last word `0^n`. Restricting to words with no
//! run of `k` zeros gives the list `F(n, k)`, whose length is the
//! k-generalized Fibonacci number `f(n, k)`. `F(n, k)` is built through a
//! two-way recursion over sublists `F(n, k, u)` of words beginning with at
//! most `u` zeros, and the same recursion drives [`gen_fib_stream`], the
//! constant-amortized-time generator at the heart of every streaming list
//! in this crate.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::{periodic_prefix, prepend, reverse_list, Symbol, Word, WordList};
use crate::{OpsReport, DEFAULT_WORD_CAP};

fn validate_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "the zero-run-bounded lists require k >= 2, got {k}"
        )));
    }
    Ok(())
}

/// Number of binary words in `C(n)`.
pub fn c_list_len(n: usize) -> BigUint {
    BigUint::from(1u32) << n
}

/// Reference builder for `C(n)`, capped at [`DEFAULT_WORD_CAP`] words.
pub fn build_c_list(n: usize) -> Result<WordList> {
    build_c_list_with_cap(n, DEFAULT_WORD_CAP)
}

/// Reference builder for `C(n)` with an explicit word cap.
///
/// `C(0)` is the single empty word; `C(n)` prefixes 1 to the reversed
/// `C(n-1)` and then 0 to `C(n-1)`.
pub fn build_c_list_with_cap(n: usize, cap: u64) -> Result<WordList> {
    crate::word::check_word_cap(&c_list_len(n), cap, "binary reflected list")?;
    Ok(build_c_rec(n))
}

fn build_c_rec(n: usize) -> WordList {
    if n == 0 {
        return vec![Vec::new()];
    }
    let sub = build_c_rec(n - 1);
    let mut out = prepend(&[1], reverse_list(sub.clone()));
    out.extend(prepend(&[0], sub));
    out
}

/// The k-generalized Fibonacci number `f(n, k)`: `2^n` for `n < k`, the sum
/// of the previous `k` values otherwise. Equals the length of `F(n, k)`.
pub fn fib_count(n: usize, k: usize) -> Result<BigUint> {
    validate_k(k)?;
    let mut history: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let value = if i < k {
            BigUint::from(1u32) << i
        } else {
            history[i - k..i].iter().sum()
        };
        history.push(value);
    }
    Ok(history.pop().unwrap())
}

/// Reference builder for `F(n, k)`, capped at [`DEFAULT_WORD_CAP`] words.
pub fn build_f_list(n: usize, k: usize) -> Result<WordList> {
    build_f_list_with_cap(n, k, DEFAULT_WORD_CAP)
}

/// Reference builder for `F(n, k)` with an explicit word cap.
pub fn build_f_list_with_cap(n: usize, k: usize, cap: u64) -> Result<WordList> {
    crate::word::check_word_cap(&fib_count(n, k)?, cap, "zero-run-bounded list")?;
    Ok(build_f_rec(n, k - 1, k))
}

// F(n, k, u): the sublist of F(n, k) formed by words starting with at most
// u zeros. F(n, k) itself is F(n, k, k-1).
fn build_f_rec(n: usize, u: usize, k: usize) -> WordList {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = prepend(&[1], reverse_list(build_f_rec(n - 1, k - 1, k)));
    if u > 0 {
        out.extend(prepend(&[0], build_f_rec(n - 1, u - 1, k)));
    }
    out
}

/// Closed-form first and last words of `F(n, k)`: the length-`n` prefixes of
/// the periodic words `(1 0^(k-1) 1)^inf` and `(0^(k-1) 1 1)^inf`.
pub fn f_first_last(n: usize, k: usize) -> Result<(Word, Word)> {
    validate_k(k)?;
    let mut first_period = vec![0 as Symbol; k + 1];
    first_period[0] = 1;
    first_period[k] = 1;
    let mut last_period = vec![0 as Symbol; k + 1];
    last_period[k - 1] = 1;
    last_period[k] = 1;
    Ok((
        periodic_prefix(&first_period, n),
        periodic_prefix(&last_period, n),
    ))
}

/// The unique position (0-based) where two neighbors of an `F(n, k)` list
/// differ. For such neighbors the position is either the last one, or both
/// words carry a 1 immediately to its right.
pub fn transition_position(a: &[Symbol], b: &[Symbol]) -> Result<usize> {
    if crate::word::hamming(a, b)? != 1 {
        return Err(Error::ContractViolation(format!(
            "list neighbors must differ in exactly one position, got distance {}",
            crate::word::hamming(a, b)?
        )));
    }
    Ok((0..a.len()).find(|&i| a[i] != b[i]).unwrap())
}

/// Counters for one run of [`gen_fib_stream`].
#[derive(Debug, Clone, Copy, Default)]
pub struct GenFibStats {
    /// Total number of recursive invocations, terminal calls included.
    pub calls: u64,
    /// True when the run was cut short by the callback.
    pub stopped: bool,
}

/// Drive the two-way recursion over the window `start..end` (0-based,
/// exclusive end), invoking `process(pos)` once per transition.
///
/// The caller owns the word being generated: the recursion itself only
/// tracks the position, the remaining-zero budget `u` and a direction flag,
/// and reports each flip position through the callback. Starting budget is
/// `k - 1` and the starting direction is forward, so a window initialized
/// with the first word of `F(end - start, k)` is swept in exactly that
/// list's order. Returning `ControlFlow::Break` from the callback unwinds
/// the recursion immediately.
///
/// Recursion depth equals the window length; windows up to about `10^5`
/// positions are fine on default stacks.
pub fn gen_fib_stream(
    start: usize,
    end: usize,
    k: usize,
    process: &mut impl FnMut(usize) -> ControlFlow<()>,
) -> Result<GenFibStats> {
    validate_k(k)?;
    let mut stats = GenFibStats::default();
    let flow = gen_fib_rec(start, k - 1, false, end, k, process, &mut stats.calls);
    stats.stopped = flow.is_break();
    Ok(stats)
}

fn gen_fib_rec(
    pos: usize,
    u: usize,
    dir: bool,
    end: usize,
    k: usize,
    process: &mut impl FnMut(usize) -> ControlFlow<()>,
    calls: &mut u64,
) -> ControlFlow<()> {
    *calls += 1;
    if pos >= end {
        return ControlFlow::Continue(());
    }
    if u == 0 {
        gen_fib_rec(pos + 1, k - 1, !dir, end, k, process, calls)
    } else if !dir {
        gen_fib_rec(pos + 1, k - 1, true, end, k, process, calls)?;
        process(pos)?;
        gen_fib_rec(pos + 1, u - 1, false, end, k, process, calls)
    } else {
        gen_fib_rec(pos + 1, u - 1, true, end, k, process, calls)?;
        process(pos)?;
        gen_fib_rec(pos + 1, k - 1, false, end, k, process, calls)
    }
}

/// Stream `F(n, k)` by flipping one bit per transition.
pub fn stream_f(
    n: usize,
    k: usize,
    emit: &mut impl FnMut(&[Symbol]) -> ControlFlow<()>,
) -> Result<OpsReport> {
    validate_k(k)?;
    let (mut b, _) = f_first_last(n, k)?;
    let mut words = 1u64;
    let mut stats = GenFibStats::default();
    if emit(&b).is_continue() {
        stats = gen_fib_stream(0, n, k, &mut |pos| {
            b[pos] = 1 - b[pos];
            words += 1;
            emit(&b)
        })?;
    }
    Ok(OpsReport {
        words_emitted: words,
        recursive_calls: stats.calls,
        ..OpsReport::default()
    })
}

/// Stream `C(n)`: the zero-run bound `n + 1` never binds, so the
/// unrestricted list falls out of the same generator.
pub fn stream_c(n: usize, emit: &mut impl FnMut(&[Symbol]) -> ControlFlow<()>) -> Result<OpsReport> {
    stream_f(n, n + 2, emit)
}
