//! Generating functions of d-fold and multifold partition diamonds.
//!
//! The crate computes the closed bivariate formulas for diamond generating
//! functions, evaluates Stanley's linear-extension formula for arbitrary
//! naturally labelled posets, and checks both against naive enumeration.
//!
//! * [`series`]: exact two-variable polynomials and truncated series.
//! * [`permstat`]: descents, Euler–Mahonian polynomials, the `F_d` recursion.
//! * [`poset`]: naturally labelled posets, diamond builders, linear extensions.
//! * [`diamonds`]: closed formulas and infinite products.
//! * [`oracle`]: brute-force enumeration.
//! * [`verify`]: pass/fail reports tying the above together.

pub mod diamonds;
pub mod oracle;
pub mod permstat;
pub mod poset;
pub mod series;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Perm(#[from] permstat::PermError),
    #[error(transparent)]
    Poset(#[from] poset::PosetError),
}

/// Enumeration limits. `None` disables a guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `d` for which `S_d` is enumerated.
    pub max_d: Option<usize>,
    /// Largest poset enumerated through its linear extensions.
    pub max_poset_size: Option<usize>,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_d: Some(permstat::DEFAULT_MAX_D),
            max_poset_size: Some(poset::DEFAULT_MAX_SIZE),
        }
    }
}

impl Guards {
    pub fn none() -> Self {
        Guards {
            max_d: None,
            max_poset_size: None,
        }
    }
}
