//! Partitions, e-restriction and e-core predicates, and charged beta-number
//! sets (abacus bead configurations).
//!
//! A partition of rank `n` is a weakly decreasing sequence of positive
//! integers summing to `n`; trailing zeros are implicit.  The beta numbers of
//! charge `h` are the bead positions `j_k = lambda_k + h - k`, stored as a
//! finite strictly decreasing window plus an implicit full tail of beads at
//! every position `<= tail_bound`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The quantum characteristic `e >= 2` and the charge `0 <= m < e` of the
/// first component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    e: u32,
    m: u32,
}

impl Params {
    pub fn new(e: u32, m: u32) -> Result<Self> {
        if e < 2 || m >= e {
            return Err(Error::BadParams { e, m });
        }
        Ok(Params { e, m })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// A partition: weakly decreasing positive parts, trailing zeros implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::IncreasingParts(pair[0], pair[1]));
            }
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        let rank: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        if u32::try_from(rank).is_err() {
            return Err(Error::RankOverflow);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The k-th part, zero past the end.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// True iff consecutive part differences are `< e` (with an implicit
    /// trailing zero), so in particular the last part is `< e`.
    pub fn is_e_restricted(&self, e: u32) -> bool {
        (0..self.parts.len()).all(|i| self.part(i) - self.part(i + 1) < e)
    }

    /// Young-diagram inclusion: every row of `self` fits in `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        (0..self.parts.len()).all(|k| self.part(k) <= outer.part(k))
    }

    /// True iff the beta set is closed under subtracting `e`, i.e. no
    /// removable e-rim-hook exists.  Independent of the charge.
    pub fn is_e_core(&self, e: u32) -> bool {
        let beta = self
            .beta_set(0, self.default_window_len(e))
            .expect("default window");
        beta.window().iter().all(|&x| beta.member(x - i64::from(e)))
    }

    /// Default beta-window length: one bead per part plus `e + 1` of
    /// headroom, enough for every bead inspected by an abacus move.
    pub fn default_window_len(&self, e: u32) -> usize {
        self.parts.len() + e as usize + 1
    }

    /// Beta numbers of the given charge: window entry `k` is
    /// `lambda_k + charge - k` for `0 <= k < window_len`.
    pub fn beta_set(&self, charge: i64, window_len: usize) -> Result<BetaSet> {
        if window_len < self.parts.len() {
            return Err(Error::WindowTooShort {
                window_len,
                parts: self.parts.len(),
            });
        }
        let window: Vec<i64> = (0..window_len)
            .map(|k| i64::from(self.part(k)) + charge - k as i64)
            .collect();
        BetaSet::new(charge, window, charge - window_len as i64)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated decreasing positive integers; `""` or `"-"` is the
    /// empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let value: u32 = token
                .parse()
                .map_err(|_| Error::BadPartitionToken(token.to_string()))?;
            parts.push(value);
        }
        Partition::new(parts)
    }
}

/// All partitions of rank `n`, largest first part first, deterministic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).expect("weakly decreasing by construction"));
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A charged beta-number set: a strictly decreasing finite window of bead
/// positions together with an implicit full tail (`x <= tail_bound` is
/// always a member).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    charge: i64,
    window: Vec<i64>,
    tail_bound: i64,
}

impl BetaSet {
    pub fn new(charge: i64, window: Vec<i64>, tail_bound: i64) -> Result<Self> {
        for pair in window.windows(2) {
            if pair[0] <= pair[1] {
                return Err(Error::MalformedWindow);
            }
        }
        if let Some(&last) = window.last() {
            if last <= tail_bound {
                return Err(Error::MalformedWindow);
            }
        }
        Ok(BetaSet {
            charge,
            window,
            tail_bound,
        })
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn tail_bound(&self) -> i64 {
        self.tail_bound
    }

    /// Exact membership test: window bead or tail bead.
    pub fn member(&self, x: i64) -> bool {
        x <= self.tail_bound || self.window.binary_search_by(|b| x.cmp(b)).is_ok()
    }

    /// Replace bead `removed` by bead `added`, keeping the window sorted.
    /// Both positions must lie strictly above the tail.
    pub(crate) fn replace(&self, removed: i64, added: i64) -> BetaSet {
        debug_assert!(removed > self.tail_bound && added > self.tail_bound);
        debug_assert!(self.member(removed) && !self.member(added));
        let mut window = self.window.clone();
        window.retain(|&x| x != removed);
        let pos = window.partition_point(|&x| x > added);
        window.insert(pos, added);
        BetaSet {
            charge: self.charge,
            window,
            tail_bound: self.tail_bound,
        }
    }

    /// Invert `j_k = lambda_k + charge - k`; trailing zeros are dropped.
    pub fn partition(&self) -> Result<Partition> {
        let mut parts = Vec::new();
        for (k, &j) in self.window.iter().enumerate() {
            let part = j - self.charge + k as i64;
            if part < 0 {
                return Err(Error::MalformedWindow);
            }
            parts.push(part as u32);
        }
        // The implicit tail must continue with zero parts.
        if self.tail_bound != self.charge - self.window.len() as i64 {
            return Err(Error::MalformedWindow);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }
}
