//! Construction, ordering and enumeration of positive integer sequences
//! under the alternating-sign lexical order.
//!
//! The sets handled here are `A_n` (all compositions of `n`), `L_n`
//! (lexical sequences of degree `n - 1`) and `D_n` (the union of `L_d` over
//! divisors `d` of `n`). Every set is produced in ascending order by walking
//! adjacent elements from a single starting point, never by sorting; the
//! [`oracle`] module provides exhaustive filter-and-sort ground truth to
//! check that claim.
//!
//! ```
//! use alphaseq::{enumerate_ln, seq};
//!
//! let l7: Vec<_> = enumerate_ln(7).unwrap().collect();
//! assert_eq!(l7.first(), Some(&seq![2, 1, 1, 1, 1]));
//! assert_eq!(l7.last(), Some(&seq![6]));
//! ```

pub mod adjacency;
pub mod cli;
pub mod elementary;
pub mod enumeration;
pub mod error;
pub mod oracle;
pub mod sequence;

pub use adjacency::{
    g_hat, predecessor_ln, predecessor_step_ln, prime_shortcut_check, star_factorize,
    successor_dn, successor_ln, successor_step_ln, PredecessorStep, StarFactorization,
    SuccessorStep,
};
pub use elementary::{
    apply_at, conjugate, lexical_predecessor_candidate, lexical_successor_candidate,
    predecessor_step_an, split, successor_step_an, CellRef, Parity,
};
pub use enumeration::{
    enumerate_an, enumerate_an_desc, enumerate_dn, enumerate_ln, enumerate_ln_desc, Direction,
    EnumerationCursor,
};
pub use error::{Error, Result};
pub use oracle::{oracle_adjacent, Mismatch, Oracle, OracleReport};
pub use sequence::{compare, is_lexical, least_element, AlphaSequence, SetContext, SetKind};
