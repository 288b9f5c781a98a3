//! Partitions, the rectangle complement `τ_k`, and box enumeration.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A non-increasing sequence of positive integers, largest part first.
///
/// The empty partition cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

/// The box `P^{n,k}`: exactly `n` parts, none larger than `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxBound {
    n: usize,
    k: u32,
}

impl BoxBound {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive { what: "part count" });
        }
        if k == 0 {
            return Err(Error::NonPositive {
                what: "max-part bound",
            });
        }
        Ok(BoxBound { n, k })
    }

    pub fn parts(&self) -> usize {
        self.n
    }

    pub fn max_part(&self) -> u32 {
        self.k
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        lam.len() == self.n && lam.first() <= self.k
    }
}

impl Partition {
    /// Validates `raw` without reordering it.
    pub fn new(raw: Vec<u32>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyPartition);
        }
        for (index, &p) in raw.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
        }
        if let Some(index) = raw.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NonIncreasingViolation { index });
        }
        Ok(Partition(raw))
    }

    /// Like [`Partition::new`] but accepts signed input, so that zero and
    /// negative entries are reported instead of wrapping.
    pub fn from_signed(raw: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(raw.len());
        for (index, &p) in raw.iter().enumerate() {
            if p <= 0 || p > u32::MAX as i64 {
                return Err(Error::NonPositivePart { index });
            }
            parts.push(p as u32);
        }
        Partition::new(parts)
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part.
    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// Smallest part.
    pub fn last(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// `τ_k`: `(λ_1 ≥ … ≥ λ_n) ↦ (k+1−λ_n ≥ … ≥ k+1−λ_1)`.
    pub fn tau(&self, k: u32) -> Result<Partition> {
        if self.first() > k {
            return Err(Error::BoundViolation {
                part: self.first(),
                bound: k,
            });
        }
        Ok(Partition(self.0.iter().rev().map(|&p| k + 1 - p).collect()))
    }

    /// `(λ:j)`, legal for `1 ≤ j ≤ λ_n`.
    pub fn append(&self, j: u32) -> Result<Partition> {
        if j == 0 || j > self.last() {
            return Err(Error::AppendTooLarge {
                value: j,
                last: self.last(),
            });
        }
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.extend_from_slice(&self.0);
        parts.push(j);
        Ok(Partition(parts))
    }

    /// `λ ∖ {λ_n}`.
    pub fn drop_last(&self) -> Result<Partition> {
        if self.0.len() < 2 {
            return Err(Error::TooShort);
        }
        Ok(Partition(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Membership in `P^k_sq`: exactly `k` parts, `λ_1 = k`, `λ_k = 1`.
    pub fn is_square(&self, k: usize) -> bool {
        self.len() == k && self.first() as usize == k && self.last() == 1
    }

    /// Whether `λ` is its own `τ_k` image.
    pub fn is_tau_fixed(&self, k: u32) -> Result<bool> {
        Ok(self.tau(k)? == *self)
    }

    /// `(λ:j)` without bound checks, for the builders whose loops
    /// already respect `j ≤ λ_n`.
    pub(crate) fn appended(&self, j: u32) -> Partition {
        debug_assert!(j >= 1 && j <= self.last());
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.extend_from_slice(&self.0);
        parts.push(j);
        Partition(parts)
    }

    /// `τ_k` for callers that have already established `λ_1 ≤ k`.
    pub(crate) fn reflected(&self, k: u32) -> Partition {
        debug_assert!(self.first() <= k);
        Partition(self.0.iter().rev().map(|&p| k + 1 - p).collect())
    }
}

/// Builds a partition from raw integers; see [`Partition::from_signed`].
pub fn make_partition(raw: &[i64]) -> Result<Partition> {
    Partition::from_signed(raw)
}

pub fn tau_complement(lam: &Partition, k: u32) -> Result<Partition> {
    lam.tau(k)
}

pub fn append_part(lam: &Partition, j: u32) -> Result<Partition> {
    lam.append(j)
}

pub fn drop_last(lam: &Partition) -> Result<Partition> {
    lam.drop_last()
}

pub fn is_square(lam: &Partition, k: usize) -> bool {
    lam.is_square(k)
}

pub fn is_tau_fixed(lam: &Partition, k: u32) -> Result<bool> {
    lam.is_tau_fixed(k)
}

/// All of `P^{n,k}` in descending lexicographic order.
///
/// There are `binomial(n+k−1, n)` of them.
pub fn enumerate_box(n: usize, k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let mut cur = vec![0u32; n];
    fill_box(&mut cur, 0, k, &mut out);
    out
}

fn fill_box(cur: &mut Vec<u32>, pos: usize, cap: u32, out: &mut Vec<Partition>) {
    if pos == cur.len() {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=cap).rev() {
        cur[pos] = p;
        fill_box(cur, pos + 1, p, out);
    }
}

/// Partitions of `total` with at most `max_parts` parts, descending
/// lexicographic. The empty partition of zero is returned as an empty
/// vector, which is why this works on raw part vectors.
pub fn partitions_of(total: usize, max_parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions_rec(total, total, max_parts, &mut cur, &mut out);
    out
}

fn partitions_rec(
    rest: usize,
    cap: usize,
    slots: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p as u32);
        partitions_rec(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-joined text form, e.g. `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (index, tok) in s.split(',').enumerate() {
            let tok = tok.trim();
            if tok.is_empty() && s.trim().is_empty() {
                return Err(Error::EmptyPartition);
            }
            let v: i64 = tok.parse().map_err(|_| Error::NonPositivePart { index })?;
            raw.push(v);
        }
        Partition::from_signed(&raw)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(raw: Vec<u32>) -> Result<Self> {
        Partition::new(raw)
    }
}

impl TryFrom<&[u32]> for Partition {
    type Error = Error;

    fn try_from(raw: &[u32]) -> Result<Self> {
        Partition::new(raw.to_vec())
    }
}
