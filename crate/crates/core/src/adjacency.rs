//! Adjacent successors and predecessors inside `L_n`, and the `D_n`
//! insertion chain.
//!
//! The successor of a lexical `α` starts from the lexical candidate `α'`
//! produced on the rightmost workable negative cell. With `f = α ∧ α'`,
//! `m = 1 + D(f)` and `n = m d + r`, the candidate is adjacent when `r > 0`;
//! when `r = 0` the adjacent successor is `f ⋆ λ_d`, with `λ_d` the least
//! element of `L_d`.
//!
//! Predecessors run the other way. Elements of the form `g ⋆ λ_d` with `g`
//! fundamental are preceded by `(g_e)^{d-1} ĝ`; everything else is preceded
//! by the lexical candidate on the rightmost workable positive cell.

use log::debug;

use crate::elementary::{lexical_predecessor_candidate, lexical_successor_candidate};
use crate::error::{Error, Result};
use crate::sequence::{least_element, two_adic, AlphaSequence, SetContext};

/// Everything computed while taking one successor step in `L_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorStep {
    /// Lexical result of the elementary operation.
    pub candidate: AlphaSequence,
    /// 1-based cell the operation acted on.
    pub index: usize,
    /// `α ∧ α'`.
    pub fundamental: AlphaSequence,
    /// `1 + D(f)`.
    pub m: u64,
    pub d: u64,
    pub r: u64,
    /// The adjacent successor: `candidate` when `r > 0`, else `f ⋆ λ_d`.
    pub successor: AlphaSequence,
}

impl SuccessorStep {
    pub fn used_star_branch(&self) -> bool {
        self.r == 0
    }
}

fn check_ln(a: &AlphaSequence, n: u64) -> Result<SetContext> {
    let ctx = SetContext::ln(n)?;
    ctx.check(a)?;
    Ok(ctx)
}

pub fn successor_step_ln(a: &AlphaSequence, n: u64) -> Result<SuccessorStep> {
    let ctx = check_ln(a, n)?;
    if *a == ctx.max_element() {
        return Err(Error::Maximal(a.clone()));
    }
    let (candidate, index) = lexical_successor_candidate(a)?;
    let fundamental = a.meet(&candidate)?;
    let m = 1 + fundamental.degree();
    let (d, r) = (n / m, n % m);
    let successor = if r > 0 {
        candidate.clone()
    } else {
        fundamental.star(&least_element(d)?)
    };
    Ok(SuccessorStep { candidate, index, fundamental, m, d, r, successor })
}

/// The adjacent successor of `a` in `L_n`.
pub fn successor_ln(a: &AlphaSequence, n: u64) -> Result<AlphaSequence> {
    successor_step_ln(a, n).map(|s| s.successor)
}

/// Witness that `α = g ⋆ λ` with `g ∈ L_m` fundamental and `λ` least in
/// `L_d`, `n = m d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarFactorization {
    pub g: AlphaSequence,
    pub m: u64,
    pub lambda: AlphaSequence,
    pub d: u64,
}

impl StarFactorization {
    /// `g = (0)`, i.e. the factored sequence is itself least in `L_n`.
    pub fn is_trivial(&self) -> bool {
        self.g.is_zero()
    }

    pub fn product(&self) -> AlphaSequence {
        self.g.star(&self.lambda)
    }
}

/// Searches for `a = g ⋆ λ_{n/m}` with `g` lexical and fundamental.
///
/// Any such `g` has `g_o` as a left factor of `a`, and `g_o` always has odd
/// length, so each odd-length prefix yields at most one candidate by
/// inverting the `_o` closure. The longest verified `g` wins. The trivial
/// factorization `g = (0)` is returned only for the least element.
pub fn star_factorize(a: &AlphaSequence, n: u64) -> Result<Option<StarFactorization>> {
    check_ln(a, n)?;
    let mut found: Vec<StarFactorization> = Vec::new();
    for p in (1..=a.len()).step_by(2) {
        let Some(g) = invert_odd_closure(&a[..p]) else {
            continue;
        };
        if g.is_zero() {
            continue;
        }
        let m = 1 + g.degree();
        if m >= n || !n.is_multiple_of(m) {
            continue;
        }
        if !g.is_lexical() || !g.is_fundamental() {
            continue;
        }
        let d = n / m;
        let lambda = least_element(d)?;
        if g.star(&lambda) == *a {
            found.push(StarFactorization { g, m, lambda, d });
        }
    }
    if found.len() > 1 {
        debug!("{a:?} in L_{n} has {} star factorizations: {found:?}", found.len());
    }
    if let Some(best) = found.into_iter().max_by_key(|f| f.g.len()) {
        return Ok(Some(best));
    }
    if *a == least_element(n)? && n > 1 {
        return Ok(Some(StarFactorization {
            g: AlphaSequence::zero(),
            m: 1,
            lambda: a.clone(),
            d: n,
        }));
    }
    Ok(None)
}

/// Returns `τ` with `τ_o = prefix`, if one exists.
fn invert_odd_closure(prefix: &[u64]) -> Option<AlphaSequence> {
    if prefix.len().is_multiple_of(2) {
        return None;
    }
    let (&last, head) = prefix.split_last()?;
    let mut v = head.to_vec();
    if last >= 2 {
        v.push(last - 1);
    }
    // last == 1: τ is the even-length head; last >= 2: τ keeps odd length
    AlphaSequence::new(v).ok()
}

/// The companion `ĝ` of a fundamental `g ∈ L_m`, with `1 + D(ĝ) = m`.
///
/// Case (i): `g = τ ⋆ λ_r` for lexical `τ ∈ L_{m/r}` and odd `r > 1`; then
/// `ĝ = τ ⋆ 1^{r-1}`. `τ` is always a right factor of `g`.
///
/// Case (ii): `g = τ_o ζ` with `τ` lexical in `L_{m1}`, `m1 ∤ m`, and
/// `ĝ = τ_e ζ` is the lexical sequence adjacent below `g` in `L_m`. The odd
/// prefixes are tried from the longest down.
pub fn g_hat(g: &AlphaSequence, m: u64) -> Result<AlphaSequence> {
    check_ln(g, m)?;
    if g.is_zero() || !g.is_fundamental() {
        return Err(Error::NoDecomposition(g.clone()));
    }

    for start in (0..=g.len()).rev() {
        let tau = AlphaSequence::new(g[start..].to_vec()).expect("positive");
        let m1 = 1 + tau.degree();
        if !m.is_multiple_of(m1) {
            continue;
        }
        let r = m / m1;
        if r < 3 || r.is_multiple_of(2) || !tau.is_lexical() {
            continue;
        }
        if tau.star(&least_element(r)?) == *g {
            return Ok(tau.star(&AlphaSequence::ones(r as usize - 1)));
        }
    }

    for p in (1..=g.len()).rev().filter(|p| p % 2 == 1) {
        let Some(tau) = invert_odd_closure(&g[..p]) else {
            continue;
        };
        if tau.is_zero() || !tau.is_lexical() || m.is_multiple_of(1 + tau.degree()) {
            continue;
        }
        let rest = AlphaSequence::new(g[p..].to_vec()).expect("positive");
        let candidate = tau.extend_even()?.concat(&rest);
        if candidate.is_lexical() {
            return Ok(candidate);
        }
    }
    Err(Error::NoDecomposition(g.clone()))
}

/// Everything computed while taking one predecessor step in `L_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredecessorStep {
    /// Set when the star-product branch produced the result.
    pub factorization: Option<StarFactorization>,
    pub predecessor: AlphaSequence,
}

pub fn predecessor_step_ln(a: &AlphaSequence, n: u64) -> Result<PredecessorStep> {
    let ctx = check_ln(a, n)?;
    if *a == ctx.min_element() {
        return Err(Error::Minimal(a.clone()));
    }
    if let Some(fact) = star_factorize(a, n)?.filter(|f| !f.is_trivial()) {
        let head = fact.g.extend_even()?.power(fact.d as usize - 1);
        let predecessor = head.concat(&g_hat(&fact.g, fact.m)?);
        return Ok(PredecessorStep { factorization: Some(fact), predecessor });
    }
    let (predecessor, _) = lexical_predecessor_candidate(a)?;
    Ok(PredecessorStep { factorization: None, predecessor })
}

/// The adjacent predecessor of `a` in `L_n`.
pub fn predecessor_ln(a: &AlphaSequence, n: u64) -> Result<AlphaSequence> {
    predecessor_step_ln(a, n).map(|s| s.predecessor)
}

/// The elements of `D_n` that follow `a ∈ L_n`, up to and including the
/// next element of `L_n`.
///
/// On a star step with `d = 2^k (2t + 1)` the chain is
/// `f, h_1(f), ..., h_k(f), f ⋆ λ_d`; when `t = 0` the last harmonic equals
/// the star product and appears once.
pub fn successor_dn(a: &AlphaSequence, n: u64) -> Result<Vec<AlphaSequence>> {
    let step = successor_step_ln(a, n)?;
    if !step.used_star_branch() {
        return Ok(vec![step.successor]);
    }
    let (k, _) = two_adic(step.d);
    let mut chain: Vec<AlphaSequence> = (0..=k).map(|j| step.fundamental.harmonic(j)).collect();
    if chain.last() == Some(&step.successor) {
        chain.pop();
    }
    chain.push(step.successor);
    Ok(chain)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// For prime `p` the star branch never fires, so the successor in `L_p` is
/// the raw lexical candidate.
pub fn prime_shortcut_check(p: u64, a: &AlphaSequence) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidN(p));
    }
    let step = successor_step_ln(a, p)?;
    Ok(step.successor == step.candidate)
}
