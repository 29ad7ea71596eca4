//! Binary sequences and the tail-sum order on them.
//!
//! For `S = (s_1, …, s_m)` and `T = (t_1, …, t_n)` we write `S ≺ T` when
//! `m ≤ n` and, for every `1 ≤ ℓ ≤ m`, the number of ones in `S[ℓ:m]` is at
//! most the number of ones in `T[ℓ:n]`. Comparing sequences of different
//! lengths is the same as padding the shorter one with trailing zeros.
//!
//! Everything here works on plain `&[u8]` slices so that rows of triangles can
//! be compared without copying.

use std::fmt;
use std::ops::Deref;

use crate::error::{shape, Result};

/// A finite sequence of bits. The empty sequence is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinarySeq(Vec<u8>);

impl BinarySeq {
    /// Builds a sequence, rejecting any entry other than 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(shape(format!(
                "entry {} of a binary sequence is {}, expected 0 or 1",
                pos + 1,
                bits[pos]
            )));
        }
        Ok(BinarySeq(bits))
    }

    /// All-zero sequence of length `len`.
    pub fn zeros(len: usize) -> Self {
        BinarySeq(vec![0; len])
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    /// Returns the sequence with zeros appended up to `len`.
    pub fn padded(&self, len: usize) -> Self {
        let mut bits = self.0.clone();
        if bits.len() < len {
            bits.resize(len, 0);
        }
        BinarySeq(bits)
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for BinarySeq {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl TryFrom<Vec<u8>> for BinarySeq {
    type Error = crate::Error;

    fn try_from(bits: Vec<u8>) -> Result<Self> {
        BinarySeq::new(bits)
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Reverse partial sums: `out[i] = s[i] + s[i+1] + … + s[last]`.
pub fn rev_partial_sums(s: &[u8]) -> Vec<u32> {
    let mut out = vec![0u32; s.len()];
    let mut acc = 0u32;
    for (k, &b) in s.iter().enumerate().rev() {
        acc += u32::from(b);
        out[k] = acc;
    }
    out
}

/// `s ≺ t`. A longer `s` is never below a shorter `t`.
pub fn prec(s: &[u8], t: &[u8]) -> bool {
    prec_violation(s, t).is_none()
}

/// Same predicate as [`prec`]; equality is already admitted there. Kept as a
/// separate name so call sites can mirror the `≺ … ⪯` pattern.
pub fn preceq(s: &[u8], t: &[u8]) -> bool {
    prec(s, t)
}

/// Why `s ≺ t` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecFailure {
    /// `|s| > |t|`.
    TooLong { left: usize, right: usize },
    /// The tail sums starting at 1-based index `ell` are out of order.
    TailSum { ell: usize, left: u32, right: u32 },
}

impl fmt::Display for PrecFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrecFailure::TooLong { left, right } => {
                write!(f, "left length {left} exceeds right length {right}")
            }
            PrecFailure::TailSum { ell, left, right } => {
                write!(f, "tail sum from index {ell}: {left} > {right}")
            }
        }
    }
}

/// First failing condition of `s ≺ t`, scanning `ℓ` from the right end.
pub fn prec_violation(s: &[u8], t: &[u8]) -> Option<PrecFailure> {
    let (m, n) = (s.len(), t.len());
    if m > n {
        return Some(PrecFailure::TooLong { left: m, right: n });
    }
    let mut right: u32 = t[m..].iter().map(|&b| u32::from(b)).sum();
    let mut left = 0u32;
    for ell in (0..m).rev() {
        left += u32::from(s[ell]);
        right += u32::from(t[ell]);
        if left > right {
            return Some(PrecFailure::TailSum {
                ell: ell + 1,
                left,
                right,
            });
        }
    }
    None
}
