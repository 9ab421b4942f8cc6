//! Reflected Gray code over the nonzero alphabet `{1, ..., q-1}`.
//!
//! The list `G(t, q)` contains all `(q-1)^t` words of length `t` over
//! `{1, ..., q-1}` in an order where consecutive words differ in exactly one
//! position, and by exactly +1 or -1 there. It is defined recursively: the
//! block under first symbol `a` carries the length `t-1` list, reflected for
//! every second value of `a`, so that block boundaries glue smoothly.
//!
//! Two realizations are provided: [`build_gray_list`], a materializing
//! reference builder used by the verification suite, and [`GrayOdometer`],
//! a lazy generator that advances the rightmost advanceable position and
//! flips per-position directions at saturated positions.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::{check_word_cap, Symbol, Word, WordList, MAX_Q};
use crate::{OpsReport, DEFAULT_WORD_CAP};

fn validate_q(q: u32) -> Result<()> {
    if q < 3 {
        return Err(Error::InvalidArgument(format!(
            "the reflected list over {{1,...,q-1}} requires q >= 3, got {q}"
        )));
    }
    if q > MAX_Q {
        return Err(Error::InvalidArgument(format!(
            "alphabet size q must be at most {MAX_Q}, got {q}"
        )));
    }
    Ok(())
}

/// Number of words in `G(t, q)`, exactly.
pub fn gray_list_len(t: usize, q: u32) -> BigUint {
    BigUint::from(q - 1).pow(t as u32)
}

/// Reference builder for the list `G(t, q)`, capped at [`DEFAULT_WORD_CAP`] words.
pub fn build_gray_list(t: usize, q: u32) -> Result<WordList> {
    build_gray_list_with_cap(t, q, DEFAULT_WORD_CAP)
}

/// Reference builder for the list `G(t, q)` with an explicit word cap.
pub fn build_gray_list_with_cap(t: usize, q: u32, cap: u64) -> Result<WordList> {
    validate_q(q)?;
    check_word_cap(&gray_list_len(t, q), cap, "reflected list")?;
    Ok(build_rec(t, q))
}

fn build_rec(t: usize, q: u32) -> WordList {
    if t == 0 {
        return vec![Vec::new()];
    }
    let sub = build_rec(t - 1, q);
    let mut out = Vec::with_capacity(sub.len() * (q as usize - 1));
    for a in 1..q {
        // every second block is covered in reverse so adjacent blocks meet
        // on equal sublist words
        let reflected = (a - 1) % 2 == 1;
        let iter: Box<dyn Iterator<Item = &Word>> = if reflected {
            Box::new(sub.iter().rev())
        } else {
            Box::new(sub.iter())
        };
        for w in iter {
            let mut v = Vec::with_capacity(t);
            v.push(a as Symbol);
            v.extend_from_slice(w);
            out.push(v);
        }
    }
    out
}

/// Closed-form first and last words of `G(t, q)`:
/// first is `1^t`; last is `(q-1) 1^(t-1)` when `q` is odd and `(q-1)^t`
/// when `q` is even.
pub fn gray_first_last(t: usize, q: u32) -> Result<(Word, Word)> {
    validate_q(q)?;
    if t == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let first = vec![1 as Symbol; t];
    let top = (q - 1) as Symbol;
    let last = if q % 2 == 1 {
        let mut w = vec![1 as Symbol; t];
        w[0] = top;
        w
    } else {
        vec![top; t]
    };
    Ok((first, last))
}

/// Exact closed-form model for the odometer's scan cost used by the
/// benchmarking front end: `q * (q^t - 1) / (q - 1) - t`.
pub fn expected_ops(t: usize, q: u32) -> Result<BigUint> {
    if t < 1 || q < 2 {
        return Err(Error::InvalidArgument(format!(
            "expected_ops requires t >= 1 and q >= 2, got t = {t}, q = {q}"
        )));
    }
    let q_big = BigUint::from(q);
    let geometric = (q_big.pow(t as u32) - 1u32) / BigUint::from(q - 1);
    Ok(q_big * geometric - BigUint::from(t))
}

/// Lazy generator for `G(t, q)`.
///
/// State is the current word `v`, one direction per position, and an exact
/// count of pointer decrements performed by the saturation scan. Each call
/// to `next` either emits the initial word or advances the odometer by one
/// step: it scans from the rightmost position leftward, reversing the
/// direction of every saturated position (value `q-1` moving up, or value
/// `1` moving down), and applies the direction at the first unsaturated
/// position.
#[derive(Debug, Clone)]
pub struct GrayOdometer {
    v: Word,
    d: Vec<i8>,
    q: u32,
    started: bool,
    done: bool,
    words_emitted: u64,
    walk_steps: u64,
}

impl GrayOdometer {
    pub fn new(t: usize, q: u32) -> Result<Self> {
        validate_q(q)?;
        if t < 1 {
            return Err(Error::InvalidArgument(
                "the odometer requires at least one position".into(),
            ));
        }
        Ok(GrayOdometer {
            v: vec![1; t],
            d: vec![1; t],
            q,
            started: false,
            done: false,
            words_emitted: 0,
            walk_steps: 0,
        })
    }

    fn saturated(&self, i: usize) -> bool {
        let s = self.v[i] as u32;
        (s == self.q - 1 && self.d[i] == 1) || (s == 1 && self.d[i] == -1)
    }

    /// Advance in place; false once the sweep is exhausted.
    fn advance(&mut self) -> bool {
        let mut i = self.v.len() as isize - 1;
        while i >= 0 && self.saturated(i as usize) {
            self.d[i as usize] = -self.d[i as usize];
            i -= 1;
            self.walk_steps += 1;
        }
        if i < 0 {
            return false;
        }
        let i = i as usize;
        self.v[i] = (self.v[i] as i16 + self.d[i] as i16) as Symbol;
        true
    }

    /// Counters accumulated so far (exact once the iterator is exhausted).
    pub fn report(&self) -> OpsReport {
        OpsReport {
            words_emitted: self.words_emitted,
            walk_steps: self.walk_steps,
            ..OpsReport::default()
        }
    }
}

impl Iterator for GrayOdometer {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.words_emitted += 1;
            return Some(self.v.clone());
        }
        if self.advance() {
            self.words_emitted += 1;
            Some(self.v.clone())
        } else {
            self.done = true;
            None
        }
    }
}
