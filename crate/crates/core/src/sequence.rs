//! Positive integer sequences, their alternating-sign total order, and the
//! algebraic constructions built on top of them.
//!
//! A sequence `(a_1, ..., a_k)` is compared through its signed view
//! `(a_1, -a_2, a_3, ..., 0, 0, ...)`: the first position where two views
//! differ decides the order. The zero sequence `(0)` is the empty list; its
//! view is all zeros, so it sits below every positive sequence.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty list is the zero
/// sequence `(0)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AlphaSequence(Vec<u64>);

impl AlphaSequence {
    /// Builds a sequence, rejecting zero elements.
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::Parse(format!("{elements:?}")));
        }
        Ok(AlphaSequence(elements))
    }

    pub fn zero() -> Self {
        AlphaSequence(Vec::new())
    }

    /// `(1, 1, ..., 1)` with `q` ones.
    pub fn ones(q: usize) -> Self {
        AlphaSequence(vec![1; q])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `(a_i, ..., a_k)` for a 1-based `i`.
    pub fn right_sequence(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(AlphaSequence(self.0[i - 1..].to_vec()))
    }

    /// `(a_1, ..., a_i)` for `0 <= i <= k`; `i = 0` gives the zero sequence.
    pub fn left_sequence(&self, i: usize) -> Result<Self> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(AlphaSequence(self.0[..i].to_vec()))
    }

    pub fn concat(&self, other: &AlphaSequence) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        AlphaSequence(v)
    }

    pub fn power(&self, q: usize) -> Self {
        AlphaSequence(self.0.repeat(q))
    }

    pub fn is_lexical(&self) -> bool {
        is_lexical(&self.0)
    }

    /// The even-length closure `α_e`: increment the last element when the
    /// length is even, append `1` when it is odd.
    ///
    /// The zero sequence has even length but no last element, so this is
    /// undefined for it.
    pub fn extend_even(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Undefined("extend_even of the zero sequence"));
        }
        let mut v = self.0.clone();
        if v.len().is_multiple_of(2) {
            *v.last_mut().unwrap() += 1;
        } else {
            v.push(1);
        }
        Ok(AlphaSequence(v))
    }

    /// The odd-length closure `α_o`: append `1` when the length is even
    /// (including the zero sequence), increment the last element when odd.
    pub fn extend_odd(&self) -> Self {
        let mut v = self.0.clone();
        if v.len().is_multiple_of(2) {
            v.push(1);
        } else {
            *v.last_mut().unwrap() += 1;
        }
        AlphaSequence(v)
    }

    /// `h_j(α)`, with `h_0 = α` and `h_j = (h_{j-1})_o h_{j-1}`.
    pub fn harmonic(&self, j: u32) -> Self {
        let mut h = self.clone();
        for _ in 0..j {
            h = h.extend_odd().concat(&h);
        }
        h
    }

    /// Star product `α_o (α_e)^{β_1 - 1} ... α_o (α_e)^{β_k - 1} α`.
    ///
    /// The zero sequence is a two-sided identity.
    pub fn star(&self, other: &AlphaSequence) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let odd = self.extend_odd();
        let even = self.extend_even().expect("nonzero sequence");
        let mut v = Vec::new();
        for &b in other.iter() {
            v.extend_from_slice(&odd.0);
            for _ in 1..b {
                v.extend_from_slice(&even.0);
            }
        }
        v.extend_from_slice(&self.0);
        AlphaSequence(v)
    }

    /// True unless `self = β_o β` for some `β`. Every higher harmonic is a
    /// first harmonic of the previous one, so `h_1` is the only shape tested.
    pub fn is_fundamental(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let len = self.len();
        [len / 2, (len - 1) / 2].iter().all(|&t| {
            let base = AlphaSequence(self.0[len - t..].to_vec());
            base.extend_odd().concat(&base) != *self
        })
    }

    /// Longest common left factor, closed with the smaller of the first
    /// differing elements.
    pub fn meet(&self, other: &AlphaSequence) -> Result<Self> {
        if self == other {
            return Ok(self.clone());
        }
        match self.iter().zip(other.iter()).position(|(a, b)| a != b) {
            Some(i) => {
                let mut v = self.0[..i].to_vec();
                v.push(self.0[i].min(other.0[i]));
                Ok(AlphaSequence(v))
            }
            None => Err(Error::PrefixAmbiguity(self.clone(), other.clone())),
        }
    }
}

impl Deref for AlphaSequence {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl TryFrom<Vec<u64>> for AlphaSequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        AlphaSequence::new(v)
    }
}

impl<'de> Deserialize<'de> for AlphaSequence {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u64>::deserialize(de)?;
        AlphaSequence::new(v).map_err(serde::de::Error::custom)
    }
}

/// Builds a sequence from literal positive integers; panics on a zero.
#[macro_export]
macro_rules! seq {
    () => { $crate::AlphaSequence::zero() };
    ($($x:expr),+ $(,)?) => {
        $crate::AlphaSequence::new(vec![$($x),+]).expect("positive elements")
    };
}

impl fmt::Display for AlphaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for AlphaSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(AlphaSequence::zero());
        }
        let parts: std::result::Result<Vec<u64>, _> =
            s.split(',').map(|p| p.trim().parse::<u64>()).collect();
        match parts {
            Ok(v) if !v.is_empty() && !v.contains(&0) => Ok(AlphaSequence(v)),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Compares two element slices by their alternating-sign views.
pub fn compare(a: &[u64], b: &[u64]) -> Ordering {
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            // odd 1-based positions carry a plus sign
            return if i % 2 == 0 { x.cmp(&y) } else { y.cmp(&x) };
        }
    }
    Ordering::Equal
}

/// A sequence is lexical when it is strictly greater than each of its proper
/// right sequences.
pub fn is_lexical(a: &[u64]) -> bool {
    (1..a.len()).all(|i| compare(a, &a[i..]) == Ordering::Greater)
}

impl Ord for AlphaSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(&self.0, &other.0)
    }
}

impl PartialOrd for AlphaSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes `n = 2^l (2s + 1)` and returns `(l, s)`.
pub fn two_adic(n: u64) -> (u32, u64) {
    let l = n.trailing_zeros();
    (l, ((n >> l) - 1) / 2)
}

/// The least element of `L_n`: `h_l(0)` when `n = 2^l`, otherwise
/// `h_l(0) ⋆ (2, 1^{2(s-1)})`.
pub fn least_element(n: u64) -> Result<AlphaSequence> {
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    let (l, s) = two_adic(n);
    let h = AlphaSequence::zero().harmonic(l);
    if s == 0 {
        return Ok(h);
    }
    let mut tail = vec![2];
    tail.extend(std::iter::repeat_n(1, 2 * (s as usize - 1)));
    Ok(h.star(&AlphaSequence(tail)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetKind {
    /// All compositions of `n`.
    A,
    /// Lexical sequences of degree `n - 1`.
    L,
    /// Union of `L_d` over the divisors `d` of `n`.
    D,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetKind::A => "A",
            SetKind::L => "L",
            SetKind::D => "D",
        })
    }
}

/// The universe an operation targets: `A_n`, `L_n` or `D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetContext {
    pub kind: SetKind,
    pub n: u64,
}

impl SetContext {
    pub fn new(kind: SetKind, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN(n));
        }
        Ok(SetContext { kind, n })
    }

    pub fn an(n: u64) -> Result<Self> {
        Self::new(SetKind::A, n)
    }

    pub fn ln(n: u64) -> Result<Self> {
        Self::new(SetKind::L, n)
    }

    pub fn dn(n: u64) -> Result<Self> {
        Self::new(SetKind::D, n)
    }

    pub fn contains(&self, a: &AlphaSequence) -> bool {
        match self.kind {
            SetKind::A => !a.is_zero() && a.degree() == self.n,
            SetKind::L => a.is_lexical() && a.degree() + 1 == self.n,
            SetKind::D => a.is_lexical() && self.n.is_multiple_of(a.degree() + 1),
        }
    }

    /// Errors with `NotMember` unless `a` lies in this set.
    pub fn check(&self, a: &AlphaSequence) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotMember { seq: a.clone(), kind: self.kind, n: self.n })
        }
    }

    /// `(n)` in `A_n`, `(n - 1)` in `L_n` and `D_n`.
    pub fn max_element(&self) -> AlphaSequence {
        match self.kind {
            SetKind::A => AlphaSequence(vec![self.n]),
            SetKind::L | SetKind::D if self.n == 1 => AlphaSequence::zero(),
            SetKind::L | SetKind::D => AlphaSequence(vec![self.n - 1]),
        }
    }

    /// `(1, n - 1)` in `A_n` (`(1)` for `n = 1`), the least lexical element
    /// in `L_n`, and the zero sequence in `D_n`.
    pub fn min_element(&self) -> AlphaSequence {
        match self.kind {
            SetKind::A if self.n == 1 => AlphaSequence(vec![1]),
            SetKind::A => AlphaSequence(vec![1, self.n - 1]),
            SetKind::L => least_element(self.n).expect("n >= 1"),
            SetKind::D => AlphaSequence::zero(),
        }
    }
}
