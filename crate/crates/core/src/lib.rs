//! Generation, verification and counting of cross-bifix-free codeword sets.
//!
//! A cross-bifix-free set is a set of equal-length words in which no proper
//! prefix of any word is a proper suffix of any word, itself included; such
//! sets make reliable frame-synchronization markers because no shifted
//! overlap of two codewords can masquerade as a codeword boundary. This
//! crate implements the family `S(n, q, k)` of such sets over the alphabet
//! `{0, ..., q-1}` (words starting with exactly `k` zeros, ending nonzero,
//! and avoiding `k` consecutive zeros in between) together with an ordering
//! in which consecutive words differ in exactly one position and all words
//! sharing a trace are adjacent.
//!
//! The modules mirror the layers of the construction:
//!
//! - [`word`]: symbols, words, traces, list primitives, parameter checks.
//! - [`gray`]: the reflected Gray code over `{1, ..., q-1}` and its
//!   odometer generator.
//! - [`fib`]: binary words avoiding `k` consecutive zeros, their Gray
//!   list, k-Fibonacci counting, and the recursive transition generator.
//! - [`expand`]: substitution of trace ones by nonzero symbols, as a
//!   reference list and as an in-place linked-chain sweep.
//! - [`crossbifix`]: membership, prefix/suffix collision checks, the
//!   assembled lists, the streaming generator, counting, trace partitions.
//! - [`oracle`]: brute-force enumeration, Gray verification, and exact
//!   work counters for amortized-cost measurements.
//! - [`cli`]: the `xbifix` command-line front end.
//!
//! Reference builders materialize lists for verification and are guarded
//! by a word cap ([`DEFAULT_WORD_CAP`]); the streaming generators have no
//! cap and emit words through callbacks that may stop the run early.

pub mod cli;
pub mod crossbifix;
pub mod error;
pub mod expand;
pub mod fib;
pub mod gray;
pub mod oracle;
pub mod word;

pub use error::{Error, Result};
pub use word::{Params, Symbol, Trace, Word, WordList};

/// Default cap on materialized list sizes: `2^24` words.
pub const DEFAULT_WORD_CAP: u64 = 1 << 24;

/// Exact work counters for one generator run.
///
/// `inner_steps` aggregates the three elementary-operation counters; the
/// per-word ratio is the measurement behind every amortized-cost claim.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpsReport {
    pub words_emitted: u64,
    /// Recursive invocations of the transition generator.
    pub recursive_calls: u64,
    /// Pointer hops of the saturation scans (odometer or chain walk).
    pub walk_steps: u64,
    /// Chain-link writes performed by trace transitions.
    pub link_updates: u64,
}

impl OpsReport {
    /// Total elementary operations.
    pub fn inner_steps(&self) -> u64 {
        self.recursive_calls + self.walk_steps + self.link_updates
    }

    /// Elementary operations per emitted word (0 when nothing was emitted).
    pub fn steps_per_word(&self) -> f64 {
        if self.words_emitted == 0 {
            return 0.0;
        }
        self.inner_steps() as f64 / self.words_emitted as f64
    }
}
