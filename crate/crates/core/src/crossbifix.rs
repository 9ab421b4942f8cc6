//! The cross-bifix-free sets and their trace-partitioned Gray code lists.
//!
//! `S(n, q, k)` is the set of length-`n` words over `{0, ..., q-1}` that
//! start with exactly `k` zeros (`s[k]` nonzero), end with a nonzero
//! symbol, and whose interior window `s[k+1] .. s[n-2]` (0-based) contains
//! no run of `k` zeros. No proper prefix of any member equals a proper
//! suffix of any member, which makes these sets usable as frame
//! synchronization codebooks.
//!
//! The ordered list puts all words with the same trace next to each other:
//! it expands each word of the binary list `1 F(n-k-2, k) 1`, alternating
//! the expansion direction from block to block, and prepends `0^k`.
//! [`build_s_list`] materializes the list; [`stream_s`] produces the same
//! sequence lazily in constant amortized time by driving the two-way
//! recursion of [`gen_fib_stream`] over the trace while an [`ExpandState`]
//! sweeps out each block in place.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expand::{expand_list_with_cap, ExpandState};
use crate::fib::{build_f_list_with_cap, f_first_last, fib_count, gen_fib_stream};
use crate::word::check_word_cap;
use crate::word::{prepend, trace_of, Params, Symbol, Trace, Word, WordList};
use crate::{OpsReport, DEFAULT_WORD_CAP};

/// Membership test for `S(n, q, k)` with `n` taken from the word length.
/// Words shorter than `k + 2` cannot satisfy the shape and yield `false`.
pub fn is_member(w: &[Symbol], k: usize) -> bool {
    let n = w.len();
    if k == 0 || n < k + 2 {
        return false;
    }
    if w[..k].iter().any(|&s| s != 0) || w[k] == 0 || w[n - 1] == 0 {
        return false;
    }
    // interior window between the two mandatory nonzero symbols
    w[k + 1..n - 1]
        .windows(k)
        .all(|run| run.iter().any(|&s| s != 0))
}

/// True when no proper prefix of either word equals a proper suffix of the
/// other (and, when `u == v`, the word is unbordered).
pub fn is_cross_bifix_free_pair(u: &[Symbol], v: &[Symbol]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument(format!(
            "pair check requires equal lengths, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    let n = u.len();
    for len in 1..n {
        if u[..len] == v[n - len..] || v[..len] == u[n - len..] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A prefix/suffix collision found by the set check: `prefix_len` leading
/// symbols of word `i` equal that many trailing symbols of word `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BifixCounterexample {
    pub i: usize,
    pub j: usize,
    pub prefix_len: usize,
}

/// Check a list of equal-length words for cross-bifix-freeness over all
/// ordered pairs, self-pairs included. Returns the counterexample with the
/// smallest `(i, j, prefix_len)` triple, or `None` when the set is clean.
///
/// The all-clear path hashes, per length, every suffix into a set and
/// probes every prefix, so clean sets cost `O(len * n^2)` symbol hashes
/// rather than a quadratic pair sweep. `parallel` routes the pinpointing
/// scan (only reached on dirty sets) through a deterministic reduction.
pub fn cross_bifix_counterexample(
    list: &[Word],
    parallel: bool,
) -> Result<Option<BifixCounterexample>> {
    let Some(first) = list.first() else {
        return Ok(None);
    };
    let n = first.len();
    if list.iter().any(|w| w.len() != n) {
        return Err(Error::InvalidArgument(
            "set check requires equal-length words".into(),
        ));
    }
    let mut collision = false;
    for len in 1..n {
        let suffixes: HashSet<&[Symbol]> = list.iter().map(|w| &w[n - len..]).collect();
        if list.iter().any(|w| suffixes.contains(&w[..len])) {
            collision = true;
            break;
        }
    }
    if !collision {
        return Ok(None);
    }
    let locate = |i: usize| -> Option<BifixCounterexample> {
        for (j, v) in list.iter().enumerate() {
            for len in 1..n {
                if list[i][..len] == v[n - len..] {
                    return Some(BifixCounterexample { i, j, prefix_len: len });
                }
            }
        }
        None
    };
    let smallest = if parallel {
        (0..list.len())
            .into_par_iter()
            .filter_map(locate)
            .min_by_key(|c| (c.i, c.j, c.prefix_len))
    } else {
        (0..list.len()).find_map(locate)
    };
    Ok(smallest)
}

/// Convenience wrapper over [`cross_bifix_counterexample`].
pub fn is_cross_bifix_free_set(list: &[Word]) -> Result<bool> {
    Ok(cross_bifix_counterexample(list, false)?.is_none())
}

/// Number of words in `S(n, q, k)` (zero when `n < k + 2`).
///
/// For `q = 2` this is the k-generalized Fibonacci number `f(n-k-2, k)`.
/// For larger alphabets each inner word contributes `(q-1)^(ones + 2)`, a
/// sum evaluated by a dynamic program over (position, current zero run)
/// without enumerating words. `k = 1` admits no interior zeros at all,
/// collapsing to `(q-1)^(n-1)`.
pub fn count_s(n: usize, q: u32, k: usize) -> Result<BigUint> {
    let p = match Params::membership(n, q, k) {
        Ok(p) => p,
        Err(_) if k >= 1 && (2..=crate::word::MAX_Q).contains(&q) => {
            return Ok(BigUint::ZERO); // too short for the shape
        }
        Err(e) => return Err(e),
    };
    if k == 1 {
        return Ok(BigUint::from(q - 1).pow(n as u32 - 1));
    }
    if q == 2 {
        return fib_count(p.inner_len(), k);
    }
    let weighted = weighted_inner_count(p.inner_len(), q, k);
    Ok(weighted * BigUint::from(q - 1).pow(2))
}

// Sum over binary words of length `len` with no k-run of zeros of
// (q-1)^(number of ones), tracked by trailing-zero-run length.
fn weighted_inner_count(len: usize, q: u32, k: usize) -> BigUint {
    let one_weight = BigUint::from(q - 1);
    let mut by_run: Vec<BigUint> = vec![BigUint::ZERO; k];
    by_run[0] = BigUint::from(1u32);
    for _ in 0..len {
        let total: BigUint = by_run.iter().sum();
        for r in (1..k).rev() {
            by_run[r] = by_run[r - 1].clone();
        }
        by_run[0] = total * &one_weight;
    }
    by_run.iter().sum()
}

/// Number of words in the list over `S(n, q, k)` suffixes of length `n - k`
/// (the words that begin and end nonzero and avoid `k` zeros in a row).
pub fn h_list_len(n: usize, q: u32, k: usize) -> Result<BigUint> {
    count_s(n + k, q, k)
}

/// Reference builder for the length-`n` list of q-ary words that begin and
/// end with a nonzero symbol and avoid `k` consecutive zeros, capped at
/// [`DEFAULT_WORD_CAP`] words.
pub fn build_h_list(n: usize, q: u32, k: usize) -> Result<WordList> {
    build_h_list_with_cap(n, q, k, DEFAULT_WORD_CAP)
}

/// Reference builder with an explicit word cap. Blocks are the expansions
/// of `1 phi 1` over the binary list `F(n-2, k)`, every second block
/// reversed so the seams stay one symbol apart.
pub fn build_h_list_with_cap(n: usize, q: u32, k: usize, cap: u64) -> Result<WordList> {
    Params::generator(n + k, q, k)?; // same constraints shifted by the prefix
    check_word_cap(&h_list_len(n, q, k)?, cap, "suffix list")?;
    let traces = build_f_list_with_cap(n - 2, k, cap)?;
    if q == 2 {
        let framed = prepend(&[1], traces);
        return Ok(crate::word::append(framed, &[1]));
    }
    let mut out = Vec::new();
    for (index, phi) in traces.into_iter().enumerate() {
        let mut alpha = Vec::with_capacity(n);
        alpha.push(1);
        alpha.extend_from_slice(&phi);
        alpha.push(1);
        let mut block = expand_list_with_cap(&alpha, q, cap)?;
        if index % 2 == 1 {
            block.reverse();
        }
        out.extend(block);
    }
    Ok(out)
}

/// Reference builder for the full list over `S(n, q, k)`, capped at
/// [`DEFAULT_WORD_CAP`] words.
pub fn build_s_list(n: usize, q: u32, k: usize) -> Result<WordList> {
    build_s_list_with_cap(n, q, k, DEFAULT_WORD_CAP)
}

/// Reference builder with an explicit word cap.
pub fn build_s_list_with_cap(n: usize, q: u32, k: usize, cap: u64) -> Result<WordList> {
    let p = Params::generator(n, q, k)?;
    let suffixes = build_h_list_with_cap(p.suffix_len(), q, k, cap)?;
    Ok(prepend(&vec![0; k], suffixes))
}

/// Stream the list over `S(n, q, k)` without materializing it, emitting
/// exactly the sequence of [`build_s_list`].
///
/// The word starts as `0^k 1 first(F(n-k-2, k)) 1`; its first expansion
/// block is swept out, and from then on the trace recursion reports one
/// flip per block boundary, which splices or unlinks a chain position and
/// sweeps the next block. Counters for the recursion, the chain walks and
/// the link maintenance come back in the report.
pub fn stream_s(
    n: usize,
    q: u32,
    k: usize,
    emit: &mut impl FnMut(&[Symbol]) -> ControlFlow<()>,
) -> Result<OpsReport> {
    let p = Params::generator(n, q, k)?;
    let mut b = vec![0 as Symbol; n];
    b[k] = 1;
    let (inner_first, _) = f_first_last(p.inner_len(), k)?;
    b[k + 1..n - 1].copy_from_slice(&inner_first);
    b[n - 1] = 1;

    let mut state = ExpandState::new(b, k, q)?;
    let mut words = 0u64;
    let mut calls = 0u64;
    {
        let mut counted = |w: &[Symbol]| {
            words += 1;
            emit(w)
        };
        if state.expand_run(&mut counted).is_continue() {
            let stats = gen_fib_stream(k + 1, n - 1, k, &mut |pos| {
                state.process_transition(pos);
                state.expand_run(&mut counted)
            })?;
            calls = stats.calls;
        }
    }
    Ok(OpsReport {
        words_emitted: words,
        recursive_calls: calls,
        walk_steps: state.walk_steps,
        link_updates: state.link_updates,
    })
}

/// Stream the suffix list (length `n`, no `0^k` prefix) by running the
/// full generator and dropping the constant prefix from each emission.
pub fn stream_h(
    n: usize,
    q: u32,
    k: usize,
    emit: &mut impl FnMut(&[Symbol]) -> ControlFlow<()>,
) -> Result<OpsReport> {
    stream_s(n + k, q, k, &mut |w| emit(&w[k..]))
}

/// Maximal runs of equal trace in a word list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceBlockReport {
    pub block_count: usize,
    pub block_sizes: Vec<usize>,
    pub block_traces: Vec<Trace>,
}

/// Group a list into maximal runs of words sharing a trace.
pub fn trace_partition(list: &[Word]) -> TraceBlockReport {
    let mut block_sizes = Vec::new();
    let mut block_traces: Vec<Trace> = Vec::new();
    for w in list {
        let t = trace_of(w);
        match block_traces.last() {
            Some(last) if *last == t => *block_sizes.last_mut().unwrap() += 1,
            _ => {
                block_traces.push(t);
                block_sizes.push(1);
            }
        }
    }
    TraceBlockReport {
        block_count: block_sizes.len(),
        block_sizes,
        block_traces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::build_f_list;
    use crate::word::append;

    fn w(s: &str) -> Word {
        s.bytes().map(|b| b - b'0').collect()
    }

    fn ws(strs: &[&str]) -> WordList {
        strs.iter().map(|s| w(s)).collect()
    }

    fn collect_s(n: usize, q: u32, k: usize) -> WordList {
        let mut out = Vec::new();
        stream_s(n, q, k, &mut |word| {
            out.push(word.to_vec());
            ControlFlow::Continue(())
        })
        .unwrap();
        out
    }

    const S_8_2_3: [&str; 7] = [
        "00011001", "00011011", "00011111", "00011101", "00010101", "00010111", "00010011",
    ];

    #[test]
    fn membership_examples() {
        assert!(is_member(&w("00011001"), 3));
        assert!(!is_member(&w("00011000"), 3)); // ends in zero
        assert!(!is_member(&w("00010001"), 3)); // interior run of three zeros
        assert!(!is_member(&w("00011001"), 2)); // third leading symbol must be nonzero
        assert!(!is_member(&w("0001"), 3)); // too short
        assert!(!is_member(&w("011"), 0));
        assert!(is_member(&w("011"), 1));
    }

    #[test]
    fn pair_examples() {
        assert!(!is_cross_bifix_free_pair(&w("101"), &w("110")).unwrap());
        assert!(is_cross_bifix_free_pair(&w("00011001"), &w("00011001")).unwrap());
        assert!(is_cross_bifix_free_pair(&w("00011001"), &w("00011011")).unwrap());
        assert!(is_cross_bifix_free_pair(&w("1"), &w("2")).unwrap());
        assert!(is_cross_bifix_free_pair(&[], &[]).unwrap());
        assert!(is_cross_bifix_free_pair(&w("10"), &w("100")).is_err());
    }

    #[test]
    fn set_check_and_counterexamples() {
        assert!(is_cross_bifix_free_set(&build_s_list(8, 2, 3).unwrap()).unwrap());
        assert!(is_cross_bifix_free_set(&ws(&["0001101"])).unwrap());

        // 101 is bordered, so the smallest violation is its own self-pair
        let ce = cross_bifix_counterexample(&ws(&["101", "110"]), false)
            .unwrap()
            .unwrap();
        assert_eq!(ce, BifixCounterexample { i: 0, j: 0, prefix_len: 1 });

        // unbordered words whose only collision is the cross pair
        let ce = cross_bifix_counterexample(&ws(&["011", "110"]), false)
            .unwrap()
            .unwrap();
        assert_eq!(ce, BifixCounterexample { i: 0, j: 1, prefix_len: 1 });

        let par = cross_bifix_counterexample(&ws(&["011", "110"]), true)
            .unwrap()
            .unwrap();
        assert_eq!(par, ce);
    }

    #[test]
    fn h_5_2_3_exact() {
        assert_eq!(
            build_h_list(5, 2, 3).unwrap(),
            ws(&["11001", "11011", "11111", "11101", "10101", "10111", "10011"])
        );
    }

    #[test]
    fn h_5_3_3_head() {
        let list = build_h_list(5, 3, 3).unwrap();
        assert_eq!(
            &list[..8],
            &ws(&["11001", "11002", "12002", "12001", "22001", "22002", "21002", "21001"])[..]
        );
    }

    #[test]
    fn h_of_length_two_is_the_two_symbol_expansion() {
        let list = build_h_list(2, 4, 2).unwrap();
        assert_eq!(list, crate::expand::expand_list(&w("11"), 4).unwrap());
    }

    #[test]
    fn s_8_2_3_exact() {
        assert_eq!(build_s_list(8, 2, 3).unwrap(), ws(&S_8_2_3));
    }

    #[test]
    fn s_8_3_3_anchors() {
        let list = build_s_list(8, 3, 3).unwrap();
        assert_eq!(list.len(), 104);
        let head = [
            "00011001", "00011002", "00012002", "00012001", "00022001", "00022002", "00021002",
            "00021001",
        ];
        let tail = [
            "00010011", "00010012", "00010022", "00010021", "00020021", "00020022", "00020012",
            "00020011",
        ];
        assert_eq!(&list[..8], &ws(&head)[..]);
        assert_eq!(&list[96..], &ws(&tail)[..]);
        // interior anchors at block seams
        for (index, expected) in [
            (8, "00021011"),
            (23, "00011011"),
            (24, "00011111"),
            (55, "00021111"),
            (56, "00021101"),
            (71, "00011101"),
            (80, "00020111"),
            (95, "00010111"),
        ] {
            assert_eq!(list[index], w(expected), "index {index}");
        }
        let fifth_block = [
            "00010101", "00010102", "00010202", "00010201", "00020201", "00020202", "00020102",
            "00020101",
        ];
        assert_eq!(&list[72..80], &ws(&fifth_block)[..]);
    }

    #[test]
    fn shortest_words_are_the_two_symbol_grid() {
        for q in [2u32, 3, 5] {
            let k = 3;
            let list = build_s_list(k + 2, q, k).unwrap();
            assert_eq!(list.len(), (q as usize - 1).pow(2));
            for word in &list {
                assert!(word[..k].iter().all(|&s| s == 0));
                assert!(word[k] != 0 && word[k + 1] != 0);
            }
        }
    }

    #[test]
    fn parameter_rejections() {
        assert!(matches!(
            build_s_list(8, 3, 1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(build_s_list(4, 3, 3).is_err());
        assert!(stream_s(8, 1, 3, &mut |_| ControlFlow::Continue(())).is_err());
        assert!(matches!(
            build_s_list_with_cap(20, 3, 2, 10),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn stream_matches_reference_on_examples() {
        assert_eq!(collect_s(8, 2, 3), ws(&S_8_2_3));
        assert_eq!(collect_s(8, 3, 3), build_s_list(8, 3, 3).unwrap());
        assert_eq!(collect_s(5, 4, 3), build_s_list(5, 4, 3).unwrap());
    }

    #[test]
    fn stream_matches_reference_on_a_grid() {
        for q in [2u32, 3, 4] {
            for k in 2..=4 {
                for n in k + 2..=k + 7 {
                    assert_eq!(
                        collect_s(n, q, k),
                        build_s_list(n, q, k).unwrap(),
                        "n={n} q={q} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn stream_early_stop() {
        let mut seen = 0u64;
        let report = stream_s(8, 3, 3, &mut |_| {
            seen += 1;
            if seen == 10 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(report.words_emitted, 10);
    }

    #[test]
    fn suffix_stream_strips_the_prefix() {
        for (n, q, k) in [(5usize, 3u32, 3usize), (6, 2, 2), (4, 5, 2)] {
            let mut out = Vec::new();
            stream_h(n, q, k, &mut |word| {
                out.push(word.to_vec());
                ControlFlow::Continue(())
            })
            .unwrap();
            assert_eq!(out, build_h_list(n, q, k).unwrap(), "n={n} q={q} k={k}");
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_s(8, 2, 3).unwrap(), BigUint::from(7u32));
        assert_eq!(count_s(8, 3, 3).unwrap(), BigUint::from(104u32));
        assert_eq!(count_s(5, 4, 3).unwrap(), BigUint::from(9u32));
        assert_eq!(count_s(4, 3, 3).unwrap(), BigUint::ZERO);
        // k = 1 closed form against direct enumeration
        assert_eq!(count_s(5, 3, 1).unwrap(), BigUint::from(16u32));
        let brute = crate::oracle::brute_force_s(5, 3, 1).unwrap();
        assert_eq!(BigUint::from(brute.len()), count_s(5, 3, 1).unwrap());
        // binary case degenerates to the k-Fibonacci numbers
        for n in 4..=16usize {
            for k in 2..=3 {
                if n < k + 2 {
                    continue;
                }
                assert_eq!(
                    count_s(n, 2, k).unwrap(),
                    fib_count(n - k - 2, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn counts_match_list_lengths() {
        for q in [2u32, 3, 4] {
            for k in 2..=4 {
                for n in k + 2..=k + 7 {
                    let list = build_s_list(n, q, k).unwrap();
                    assert_eq!(
                        BigUint::from(list.len()),
                        count_s(n, q, k).unwrap(),
                        "n={n} q={q} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn trace_partition_reports() {
        let report = trace_partition(&build_s_list(8, 3, 3).unwrap());
        assert_eq!(report.block_count, 7);
        assert_eq!(report.block_sizes, vec![8, 16, 32, 16, 8, 16, 8]);
        assert_eq!(report.block_sizes.iter().sum::<usize>(), 104);

        let binary = trace_partition(&build_s_list(8, 2, 3).unwrap());
        assert_eq!(binary.block_count, 7);
        assert!(binary.block_sizes.iter().all(|&s| s == 1));

        let single = trace_partition(&ws(&["011", "012", "022"]));
        assert_eq!(single.block_count, 1);
        assert_eq!(single.block_sizes, vec![3]);
    }

    #[test]
    fn block_traces_follow_the_framed_binary_list() {
        for (q, k, n) in [(3u32, 2usize, 9usize), (3, 3, 8), (4, 2, 7)] {
            let report = trace_partition(&build_s_list(n, q, k).unwrap());
            let mut expected = prepend(&[1], build_f_list(n - k - 2, k).unwrap());
            expected = append(expected, &[1]);
            expected = prepend(&vec![0; k], expected);
            assert_eq!(report.block_traces, expected, "n={n} q={q} k={k}");
            for (trace, size) in report.block_traces.iter().zip(&report.block_sizes) {
                let ones = trace.iter().filter(|&&s| s != 0).count();
                assert_eq!(*size, (q as usize - 1).pow(ones as u32));
            }
        }
    }
}
