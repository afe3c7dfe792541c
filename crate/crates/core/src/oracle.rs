//! Brute-force ground truth for the ordered sets.
//!
//! Everything here is exhaustive: generate every composition, filter by the
//! definition of lexicality, and sort. The order is realised independently
//! of [`crate::sequence::compare`] by materialising the zero-padded signed
//! view of each sequence as an integer vector and comparing those vectors
//! lexicographically.

use std::cmp::Ordering;

use crate::enumeration::{enumerate_an, enumerate_dn, enumerate_ln};
use crate::error::{Error, Result};
use crate::sequence::{AlphaSequence, SetKind};

pub const DEFAULT_ORACLE_CAP: u64 = 20;

/// `(a_1, -a_2, a_3, ...)` padded with zeros to `width`.
fn signed_view(a: &[u64], width: usize) -> Vec<i64> {
    let mut v: Vec<i64> = a
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .collect();
    v.resize(width.max(a.len()), 0);
    v
}

fn view_cmp(a: &[u64], b: &[u64]) -> Ordering {
    let width = a.len().max(b.len());
    signed_view(a, width).cmp(&signed_view(b, width))
}

fn definitionally_lexical(a: &[u64]) -> bool {
    (1..a.len()).all(|i| view_cmp(a, &a[i..]) == Ordering::Greater)
}

fn sort_by_view(items: &mut [AlphaSequence]) {
    let width = items.iter().map(|a| a.len()).max().unwrap_or(0);
    items.sort_by_cached_key(|a| signed_view(a, width));
}

/// One position where enumeration and oracle disagree. `None` means the
/// corresponding list ended early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub position: usize,
    pub expected: Option<AlphaSequence>,
    pub actual: Option<AlphaSequence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: u64,
    pub set_kind: SetKind,
    pub expected: Vec<AlphaSequence>,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_ORACLE_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: u64) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn check(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidN(n));
        }
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// The `2^{n-1}` compositions of `n`, in generation order. Bit `j` of
    /// the mask marks a cut after unit `j + 1`.
    pub fn all_compositions(&self, n: u64) -> Result<Vec<AlphaSequence>> {
        self.check(n)?;
        let gaps = n - 1;
        let out = (0u64..1 << gaps)
            .map(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for j in 0..gaps {
                    if mask >> j & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                AlphaSequence::new(parts).expect("positive parts")
            })
            .collect();
        Ok(out)
    }

    pub fn an(&self, n: u64) -> Result<Vec<AlphaSequence>> {
        let mut all = self.all_compositions(n)?;
        sort_by_view(&mut all);
        Ok(all)
    }

    pub fn ln(&self, n: u64) -> Result<Vec<AlphaSequence>> {
        self.check(n)?;
        if n == 1 {
            return Ok(vec![AlphaSequence::zero()]);
        }
        let mut lexical: Vec<_> = self
            .all_compositions(n - 1)?
            .into_iter()
            .filter(|a| definitionally_lexical(a))
            .collect();
        sort_by_view(&mut lexical);
        Ok(lexical)
    }

    pub fn dn(&self, n: u64) -> Result<Vec<AlphaSequence>> {
        self.check(n)?;
        let mut all = Vec::new();
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            all.extend(self.ln(d)?);
        }
        sort_by_view(&mut all);
        Ok(all)
    }

    pub fn set(&self, kind: SetKind, n: u64) -> Result<Vec<AlphaSequence>> {
        match kind {
            SetKind::A => self.an(n),
            SetKind::L => self.ln(n),
            SetKind::D => self.dn(n),
        }
    }

    /// Enumerates `A_n`, `L_n` and `D_n` by adjacency for every `n` in the
    /// range and diffs each against the oracle list.
    pub fn verify_range(&self, n_min: u64, n_max: u64) -> Result<Vec<OracleReport>> {
        if n_min == 0 || n_min > n_max {
            return Err(Error::InvalidN(n_min));
        }
        self.check(n_max)?;
        let mut reports = Vec::new();
        for n in n_min..=n_max {
            for kind in [SetKind::A, SetKind::L, SetKind::D] {
                let expected = self.set(kind, n)?;
                let actual: Vec<_> = match kind {
                    SetKind::A => enumerate_an(n, None)?.collect(),
                    SetKind::L => enumerate_ln(n)?.collect(),
                    SetKind::D => enumerate_dn(n)?.collect(),
                };
                let mismatches = diff(&expected, &actual);
                reports.push(OracleReport { n, set_kind: kind, expected, mismatches });
            }
        }
        Ok(reports)
    }
}

fn diff(expected: &[AlphaSequence], actual: &[AlphaSequence]) -> Vec<Mismatch> {
    (0..expected.len().max(actual.len()))
        .filter_map(|i| {
            let e = expected.get(i);
            let a = actual.get(i);
            (e != a).then(|| Mismatch {
                position: i,
                expected: e.cloned(),
                actual: a.cloned(),
            })
        })
        .collect()
}

/// Neighbours of `a` in an ascending list.
pub fn oracle_adjacent(
    set: &[AlphaSequence],
    a: &AlphaSequence,
) -> Result<(Option<AlphaSequence>, Option<AlphaSequence>)> {
    let i = set.iter().position(|x| x == a).ok_or_else(|| Error::NotInList(a.clone()))?;
    let pred = i.checked_sub(1).map(|j| set[j].clone());
    Ok((pred, set.get(i + 1).cloned()))
}
