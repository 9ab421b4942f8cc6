//! Expansion of a binary trace into q-ary words.
//!
//! Given a binary word `beta` with `t` ones, its expansion is the list of
//! `(q-1)^t` words obtained by substituting the ones of `beta`, left to
//! right, with the symbols of successive words of the reflected list
//! `G(t, q)`. The first word of the expansion is `beta` itself and every
//! word shares its trace.
//!
//! [`expand_list`] materializes that list. [`ExpandState`] plus
//! [`ExpandState::expand_run`] realize it in place over a word with a
//! frozen prefix: the nonzero positions are kept on a doubly linked chain
//! (`prec`/`succ`) so the odometer scan can hop over zeros in constant
//! time, and per-position directions make a rerun of the same block come
//! out reversed. That reversal is exactly what the alternating
//! forward/backward block pattern of the q-ary lists needs, so no extra
//! bookkeeping is required between blocks.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::gray::{build_gray_list_with_cap, gray_list_len};
use crate::word::{trace_of, Symbol, Word, WordList, MAX_Q};
use crate::DEFAULT_WORD_CAP;

/// Link value meaning "no neighbor on this side".
pub const NIL: usize = usize::MAX;

/// Materialize the expansion of `beta`, capped at [`DEFAULT_WORD_CAP`] words.
pub fn expand_list(beta: &[Symbol], q: u32) -> Result<WordList> {
    expand_list_with_cap(beta, q, DEFAULT_WORD_CAP)
}

/// Materialize the expansion of `beta` with an explicit word cap.
pub fn expand_list_with_cap(beta: &[Symbol], q: u32, cap: u64) -> Result<WordList> {
    let ones: Vec<usize> = (0..beta.len()).filter(|&i| beta[i] != 0).collect();
    let gray = build_gray_list_with_cap(ones.len(), q, cap)?;
    let template = trace_of(beta);
    Ok(gray
        .into_iter()
        .map(|symbols| {
            let mut word = template.clone();
            for (&pos, &sym) in ones.iter().zip(&symbols) {
                word[pos] = sym;
            }
            word
        })
        .collect())
}

/// Number of words one expansion run will emit.
pub fn expansion_len(beta: &[Symbol], q: u32) -> num_bigint::BigUint {
    let t = beta.iter().filter(|&&s| s != 0).count();
    gray_list_len(t, q)
}

/// In-place expansion state: the word `b`, one direction per nonzero
/// position, and the chain of nonzero positions at or beyond `frozen_len`.
///
/// Positions `0 .. frozen_len` are immutable; the scan never reaches them
/// because the chain's leftmost member has `prec == NIL`.
#[derive(Debug, Clone)]
pub struct ExpandState {
    b: Word,
    d: Vec<i8>,
    prec: Vec<usize>,
    succ: Vec<usize>,
    frozen_len: usize,
    tail: Option<usize>,
    q: u32,
    /// Pointer hops performed by the saturation scan, accumulated across runs.
    pub walk_steps: u64,
    /// Chain-link writes performed by transitions, accumulated across runs.
    pub link_updates: u64,
}

impl ExpandState {
    /// Build a state over `b` with the given frozen prefix length.
    ///
    /// Directions start as +1 on value 1 and -1 on value `q - 1` (with the
    /// `q = 2` overlap resolved to +1; the value is never consulted there),
    /// so a word whose chain symbols are all 1 sweeps its block forward and
    /// one sitting at the opposite extreme sweeps it in reverse.
    pub fn new(b: Word, frozen_len: usize, q: u32) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::InvalidArgument(format!(
                "alphabet size q must be in 2..={MAX_Q}, got {q}"
            )));
        }
        if frozen_len > b.len() {
            return Err(Error::InvalidArgument(format!(
                "frozen prefix {} exceeds word length {}",
                frozen_len,
                b.len()
            )));
        }
        for (i, &s) in b.iter().enumerate() {
            if s as u32 >= q {
                return Err(Error::InvalidArgument(format!(
                    "symbol {} at position {} is outside 0..={}",
                    s,
                    i + 1,
                    q - 1
                )));
            }
        }
        let n = b.len();
        let mut d = vec![1i8; n];
        let mut prec = vec![NIL; n];
        let mut succ = vec![NIL; n];
        let mut previous = NIL;
        for i in frozen_len..n {
            if b[i] == 0 {
                continue;
            }
            d[i] = if b[i] == 1 {
                1
            } else if b[i] as u32 == q - 1 {
                -1
            } else {
                1
            };
            prec[i] = previous;
            if previous != NIL {
                succ[previous] = i;
            }
            previous = i;
        }
        let tail = (previous != NIL).then_some(previous);
        Ok(ExpandState {
            b,
            d,
            prec,
            succ,
            frozen_len,
            tail,
            q,
            walk_steps: 0,
            link_updates: 0,
        })
    }

    /// The current word.
    pub fn word(&self) -> &[Symbol] {
        &self.b
    }

    pub fn frozen_len(&self) -> usize {
        self.frozen_len
    }

    /// Chain positions in increasing order (mainly for inspection and tests).
    pub fn chain(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = match self.tail {
            Some(tail) => {
                let mut head = tail;
                while self.prec[head] != NIL {
                    head = self.prec[head];
                }
                head
            }
            None => return out,
        };
        loop {
            out.push(i);
            if Some(i) == self.tail {
                break;
            }
            i = self.succ[i];
        }
        out
    }

    /// Direction at a position (+1 or -1; meaningful on chain members only).
    pub fn direction(&self, i: usize) -> i8 {
        self.d[i]
    }

    fn saturated(&self, i: usize) -> bool {
        let s = self.b[i] as u32;
        (s == self.q - 1 && self.d[i] == 1) || (s == 1 && self.d[i] == -1)
    }

    /// Emit the current word and sweep out the rest of its block.
    ///
    /// Each advance scans the chain from its tail toward the frozen prefix,
    /// reversing the direction of every saturated position on the way, and
    /// bumps the first unsaturated position by its direction. The run ends
    /// when a scan walks off the chain; at that moment every direction has
    /// been reversed, so an immediate rerun (after one external transition)
    /// covers the next block in the opposite order.
    pub fn expand_run(
        &mut self,
        emit: &mut impl FnMut(&[Symbol]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        emit(&self.b)?;
        if self.q == 2 {
            // every chain position is pinned at 1, which saturates under
            // either direction: the block is this single word
            return ControlFlow::Continue(());
        }
        let Some(tail) = self.tail else {
            return ControlFlow::Continue(());
        };
        loop {
            let mut i = tail;
            loop {
                if !self.saturated(i) {
                    break;
                }
                self.d[i] = -self.d[i];
                let p = self.prec[i];
                self.walk_steps += 1;
                if p == NIL {
                    return ControlFlow::Continue(());
                }
                i = p;
            }
            self.b[i] = (self.b[i] as i16 + self.d[i] as i16) as Symbol;
            emit(&self.b)?;
        }
    }

    /// Flip the trace bit at `pos` between two expansion blocks.
    ///
    /// A zero position is spliced into the chain just before `pos + 1`,
    /// taking over its right neighbor's symbol and direction; a nonzero
    /// position is unlinked and zeroed. The caller guarantees `pos + 1`
    /// is a nonzero position (true for every transition of the
    /// zero-run-bounded lists, whose flips always have a 1 to their right
    /// or sit at the final position, which these drivers never flip).
    pub fn process_transition(&mut self, pos: usize) {
        debug_assert!(pos >= self.frozen_len);
        debug_assert!(pos + 1 < self.b.len() && self.b[pos + 1] != 0);
        if self.b[pos] == 0 {
            let a = self.prec[pos + 1];
            if a != NIL {
                self.succ[a] = pos;
            }
            self.succ[pos] = pos + 1;
            self.prec[pos] = a;
            self.prec[pos + 1] = pos;
            self.b[pos] = self.b[pos + 1];
            self.d[pos] = self.d[pos + 1];
            self.link_updates += 4;
        } else {
            let a = self.prec[pos];
            let z = self.succ[pos];
            if z != NIL {
                self.prec[z] = a;
            }
            if a != NIL {
                self.succ[a] = z;
            }
            self.b[pos] = 0;
            self.link_updates += 2;
        }
    }
}
