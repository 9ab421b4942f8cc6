//! Words over a small integer alphabet and elementary list operations.
//!
//! A word is a fixed-length sequence of symbols drawn from `{0, ..., q-1}`.
//! The empty word (length 0) is a valid value. All generators in this crate
//! emit words of this form; the binary *trace* of a word replaces every
//! nonzero symbol by 1.

use crate::error::{Error, Result};

/// One alphabet symbol. The alphabet size `q` is bounded at [`MAX_Q`],
/// so symbols always fit in a byte.
pub type Symbol = u8;

/// A word: an owned sequence of symbols.
pub type Word = Vec<Symbol>;

/// A binary word marking the nonzero positions of some word.
pub type Trace = Word;

/// An ordered list of equal-length words.
pub type WordList = Vec<Word>;

/// Largest supported alphabet size.
pub const MAX_Q: u32 = 256;

/// Verify a predicted list size against a word cap and narrow it to usize.
pub(crate) fn check_word_cap(len: &num_bigint::BigUint, cap: u64, what: &str) -> Result<usize> {
    if *len > num_bigint::BigUint::from(cap) {
        return Err(Error::Capacity(format!(
            "{what} holds {len} words, above the cap of {cap}"
        )));
    }
    // cap <= u64, so the conversion cannot fail on 64-bit targets
    Ok(usize::try_from(u64::try_from(len.clone()).unwrap()).unwrap())
}

/// Validated `(n, q, k)` parameter triple for the cross-bifix-free sets:
/// word length `n`, alphabet size `q`, zero-run bound `k`.
///
/// Membership and counting are defined for `k >= 1`; the list builders and
/// streaming generators additionally require `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub q: u32,
    pub k: usize,
}

impl Params {
    /// Validate parameters for membership tests and counting (`k >= 1`).
    pub fn membership(n: usize, q: u32, k: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!(
                "alphabet size q must be at least 2, got {q}"
            )));
        }
        if q > MAX_Q {
            return Err(Error::InvalidArgument(format!(
                "alphabet size q must be at most {MAX_Q}, got {q}"
            )));
        }
        if k < 1 {
            return Err(Error::InvalidArgument(
                "zero-run bound k must be at least 1".into(),
            ));
        }
        if n < k + 2 {
            return Err(Error::InvalidArgument(format!(
                "word length n must be at least k + 2 = {}, got {n}",
                k + 2
            )));
        }
        Ok(Params { n, q, k })
    }

    /// Validate parameters for the list builders and generators (`k >= 2`).
    pub fn generator(n: usize, q: u32, k: usize) -> Result<Self> {
        let p = Self::membership(n, q, k)?;
        if k < 2 {
            return Err(Error::InvalidArgument(
                "list construction requires k >= 2; k = 1 is supported for membership and counting only"
                    .into(),
            ));
        }
        Ok(p)
    }

    /// Length of the inner window (positions k+2 .. n-1, 1-based).
    pub fn inner_len(&self) -> usize {
        self.n - self.k - 2
    }

    /// Length of the words that remain after the `0^k` prefix is stripped.
    pub fn suffix_len(&self) -> usize {
        self.n - self.k
    }
}

/// Hamming distance between two equal-length words.
pub fn hamming(a: &[Symbol], b: &[Symbol]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "hamming distance requires equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// The trace of a word: every nonzero symbol replaced by 1.
pub fn trace_of(w: &[Symbol]) -> Trace {
    w.iter().map(|&s| u8::from(s != 0)).collect()
}

/// The list covered in reverse order.
pub fn reverse_list(mut list: WordList) -> WordList {
    list.reverse();
    list
}

/// Concatenation of two lists of equal-length words.
pub fn concat_lists(mut a: WordList, mut b: WordList) -> Result<WordList> {
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        if x.len() != y.len() {
            return Err(Error::InvalidArgument(format!(
                "cannot concatenate lists of word lengths {} and {}",
                x.len(),
                y.len()
            )));
        }
    }
    a.append(&mut b);
    Ok(a)
}

/// Prefix every word of the list with `u`.
pub fn prepend(u: &[Symbol], list: WordList) -> WordList {
    list.into_iter()
        .map(|w| {
            let mut out = Vec::with_capacity(u.len() + w.len());
            out.extend_from_slice(u);
            out.extend_from_slice(&w);
            out
        })
        .collect()
}

/// Suffix every word of the list with `u`.
pub fn append(list: WordList, u: &[Symbol]) -> WordList {
    list.into_iter()
        .map(|mut w| {
            w.extend_from_slice(u);
            w
        })
        .collect()
}

/// Length-`n` prefix of the infinite periodic word `period^inf`.
pub fn periodic_prefix(period: &[Symbol], n: usize) -> Word {
    assert!(!period.is_empty() || n == 0, "empty period");
    (0..n).map(|i| period[i % period.len()]).collect()
}
