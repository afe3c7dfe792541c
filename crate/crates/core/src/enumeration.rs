//! Lazy, ordered streams over `A_n`, `L_n` and `D_n`, produced by chaining
//! adjacency steps from a single starting element.

use std::collections::VecDeque;

use crate::adjacency::{predecessor_ln, successor_dn, successor_ln};
use crate::elementary::{predecessor_step_an, successor_step_an};
use crate::error::{Error, Result};
use crate::sequence::{least_element, two_adic, AlphaSequence, SetContext, SetKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

/// Pull-based walk over one of the ordered sets.
///
/// `current` is the last element of the underlying `A_n` / `L_n` walk;
/// `pending` holds elements already computed but not yet yielded (the
/// prefix before the anchor, or a `D_n` insertion chain).
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    context: SetContext,
    direction: Direction,
    current: AlphaSequence,
    pending: VecDeque<AlphaSequence>,
    exhausted: bool,
}

impl EnumerationCursor {
    pub fn context(&self) -> SetContext {
        self.context
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    fn end(&self) -> AlphaSequence {
        match self.direction {
            Direction::Ascending => self.context.max_element(),
            Direction::Descending => self.context.min_element(),
        }
    }

    fn step(&self) -> Result<Vec<AlphaSequence>> {
        let n = self.context.n;
        let a = &self.current;
        Ok(match (self.context.kind, self.direction) {
            (SetKind::A, Direction::Ascending) => vec![successor_step_an(a)?],
            (SetKind::A, Direction::Descending) => vec![predecessor_step_an(a)?],
            (SetKind::L, Direction::Ascending) => vec![successor_ln(a, n)?],
            (SetKind::L, Direction::Descending) => vec![predecessor_ln(a, n)?],
            (SetKind::D, Direction::Ascending) => successor_dn(a, n)?,
            (SetKind::D, Direction::Descending) => unreachable!("no descending D_n walk"),
        })
    }
}

impl Iterator for EnumerationCursor {
    type Item = AlphaSequence;

    fn next(&mut self) -> Option<AlphaSequence> {
        if let Some(x) = self.pending.pop_front() {
            return Some(x);
        }
        if self.exhausted {
            return None;
        }
        if self.current == self.end() {
            self.exhausted = true;
            return None;
        }
        // the adjacency theorems guarantee a step from any non-extremal member
        let chain = self.step().expect("adjacency step from a non-extremal member");
        self.current = chain.last().expect("nonempty step").clone();
        self.pending.extend(chain);
        self.pending.pop_front()
    }
}

/// All of `A_n` in ascending order.
///
/// With a seed, the walk first descends from the seed to `(1, n - 1)`,
/// buffers that chain, and then ascends from the seed to `(n)`. Without a
/// seed it starts at the minimum and holds only the current element.
pub fn enumerate_an(n: u64, seed: Option<&AlphaSequence>) -> Result<EnumerationCursor> {
    let context = SetContext::an(n)?;
    let start = match seed {
        Some(s) if !context.contains(s) => {
            return Err(Error::InvalidSeed { seq: s.clone(), n });
        }
        Some(s) => s.clone(),
        None => context.min_element(),
    };
    let min = context.min_element();
    let mut below = vec![start.clone()];
    while *below.last().unwrap() != min {
        below.push(predecessor_step_an(below.last().unwrap())?);
    }
    below.reverse();
    Ok(EnumerationCursor {
        context,
        direction: Direction::Ascending,
        current: start,
        pending: below.into(),
        exhausted: false,
    })
}

/// All of `A_n` in descending order, from `(n)` down to `(1, n - 1)`.
pub fn enumerate_an_desc(n: u64) -> Result<EnumerationCursor> {
    let context = SetContext::an(n)?;
    let top = context.max_element();
    Ok(EnumerationCursor {
        context,
        direction: Direction::Descending,
        current: top.clone(),
        pending: VecDeque::from([top]),
        exhausted: false,
    })
}

/// All of `L_n` in ascending order, from the least element to `(n - 1)`.
pub fn enumerate_ln(n: u64) -> Result<EnumerationCursor> {
    let context = SetContext::ln(n)?;
    let least = least_element(n)?;
    Ok(EnumerationCursor {
        context,
        direction: Direction::Ascending,
        current: least.clone(),
        pending: VecDeque::from([least]),
        exhausted: false,
    })
}

/// All of `L_n` in descending order, walking predecessors from `(n - 1)`.
pub fn enumerate_ln_desc(n: u64) -> Result<EnumerationCursor> {
    let context = SetContext::ln(n)?;
    let top = context.max_element();
    Ok(EnumerationCursor {
        context,
        direction: Direction::Descending,
        current: top.clone(),
        pending: VecDeque::from([top]),
        exhausted: false,
    })
}

/// All of `D_n` in ascending order.
///
/// The walk starts with the harmonics `h_0(0) < ... < h_l(0)` of the zero
/// sequence, `n = 2^l (2s + 1)`, followed by the least element of `L_n`
/// (which is `h_l(0)` itself when `s = 0`). From there it follows the `L_n`
/// successors, inserting the lower-degree chain at every star step.
pub fn enumerate_dn(n: u64) -> Result<EnumerationCursor> {
    SetContext::dn(n)?;
    let (l, _) = two_adic(n);
    let least = least_element(n)?;
    let mut pending: VecDeque<AlphaSequence> =
        (0..=l).map(|j| AlphaSequence::zero().harmonic(j)).collect();
    if pending.back() != Some(&least) {
        pending.push_back(least.clone());
    }
    Ok(EnumerationCursor {
        context: SetContext { kind: SetKind::D, n },
        direction: Direction::Ascending,
        current: least,
        pending,
        exhausted: false,
    })
}
