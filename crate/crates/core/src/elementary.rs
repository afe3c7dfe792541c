//! Cells and the two elementary operations: splitting a cell of value
//! `v >= 2` into `(v - 1, 1)`, and conjugating a value-1 cell into its left
//! neighbour.
//!
//! Both operations preserve degree and flip the parity of the length. On a
//! negative (even) cell they move up in the order; on a positive (odd) cell
//! they move down.

use crate::error::{Error, Result};
use crate::sequence::AlphaSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Positive,
    Negative,
}

/// A 1-based cell position within a particular sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellRef {
    index: usize,
}

impl CellRef {
    pub fn new(seq: &AlphaSequence, index: usize) -> Result<Self> {
        if index == 0 || index > seq.len() {
            return Err(Error::IndexOutOfRange { index, len: seq.len() });
        }
        Ok(CellRef { index })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn parity(&self) -> Parity {
        if self.index % 2 == 1 {
            Parity::Positive
        } else {
            Parity::Negative
        }
    }

    pub fn value(&self, seq: &AlphaSequence) -> u64 {
        seq[self.index - 1]
    }
}

/// `E_s`: replaces cell `i` (value >= 2) by the pair `(a_i - 1, 1)`.
pub fn split(a: &AlphaSequence, i: usize) -> Result<AlphaSequence> {
    let cell = CellRef::new(a, i)?;
    let v = cell.value(a);
    if v < 2 {
        return Err(Error::NotSplittable { seq: a.clone(), index: i });
    }
    let mut out = Vec::with_capacity(a.len() + 1);
    out.extend_from_slice(&a[..i - 1]);
    out.push(v - 1);
    out.push(1);
    out.extend_from_slice(&a[i..]);
    Ok(AlphaSequence::new(out).expect("positive"))
}

/// `E_c`: merges the value-1 cell `i` into cell `i - 1`.
pub fn conjugate(a: &AlphaSequence, i: usize) -> Result<AlphaSequence> {
    let cell = CellRef::new(a, i)?;
    if i == 1 || cell.value(a) != 1 {
        return Err(Error::NotConjugatable { seq: a.clone(), index: i });
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    out.extend_from_slice(&a[..i - 2]);
    out.push(a[i - 2] + 1);
    out.extend_from_slice(&a[i..]);
    Ok(AlphaSequence::new(out).expect("positive"))
}

/// The elementary operation that applies to cell `i`: split when its value
/// is at least 2, conjugate when it is 1.
pub fn apply_at(a: &AlphaSequence, i: usize) -> Result<AlphaSequence> {
    let cell = CellRef::new(a, i)?;
    if cell.value(a) >= 2 {
        split(a, i)
    } else {
        conjugate(a, i)
    }
}

fn largest_even_index(len: usize) -> usize {
    len - len % 2
}

fn largest_odd_index(len: usize) -> usize {
    if len % 2 == 1 {
        len
    } else {
        len.saturating_sub(1)
    }
}

/// Adjacent successor in `A_n`: act on the last negative cell.
pub fn successor_step_an(a: &AlphaSequence) -> Result<AlphaSequence> {
    if a.len() < 2 {
        return Err(Error::Maximal(a.clone()));
    }
    apply_at(a, largest_even_index(a.len()))
}

/// Adjacent predecessor in `A_n`: act on the last positive cell.
pub fn predecessor_step_an(a: &AlphaSequence) -> Result<AlphaSequence> {
    let i = largest_odd_index(a.len());
    if i == 0 || (i == 1 && a[0] == 1) {
        return Err(Error::Minimal(a.clone()));
    }
    apply_at(a, i)
}

/// Scans the negative cells from the right and returns the first result
/// that is lexical, together with the cell index used.
pub fn lexical_successor_candidate(a: &AlphaSequence) -> Result<(AlphaSequence, usize)> {
    let mut i = largest_even_index(a.len());
    while i >= 2 {
        let c = apply_at(a, i)?;
        if c.is_lexical() {
            return Ok((c, i));
        }
        i -= 2;
    }
    Err(Error::NoCandidate(a.clone()))
}

/// Scans the positive cells from the right and returns the first result
/// that is lexical. A value-1 first cell has no left neighbour and is
/// skipped.
pub fn lexical_predecessor_candidate(a: &AlphaSequence) -> Result<(AlphaSequence, usize)> {
    let mut i = largest_odd_index(a.len());
    while i >= 1 {
        if !(i == 1 && a[0] == 1) {
            let c = apply_at(a, i)?;
            if c.is_lexical() {
                return Ok((c, i));
            }
        }
        if i < 2 {
            break;
        }
        i -= 2;
    }
    Err(Error::NoCandidate(a.clone()))
}
