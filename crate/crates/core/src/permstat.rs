//! Permutations, descent statistics, Euler–Mahonian and Eulerian
//! polynomials, and the two-variable recursion that generates the same
//! polynomials without enumerating permutations.
//!
//! Polynomials here live in [`Poly2`] with the first variable read as `x`
//! (or `q0`) and the second as `y` (or `w`).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::series::{Monomial2, Poly2, SeriesError};

/// Largest `d` for which `S_d` is enumerated unless the caller lifts the guard.
pub const DEFAULT_MAX_D: usize = 9;

/// Variable names used when printing permutation polynomials.
pub const XY: [&str; 2] = ["x", "y"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..{len}: {word:?}")]
    InvalidPermutation { word: Vec<usize>, len: usize },
    #[error("d must be at least 1")]
    ZeroD,
    #[error("d = {d} exceeds the enumeration guard ({max}); use the recursion or lift the guard")]
    DTooLarge { d: usize, max: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A permutation of `{1..d}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let len = word.len();
        let mut seen = vec![false; len + 1];
        for &v in &word {
            if v == 0 || v > len || seen[v] {
                return Err(PermError::InvalidPermutation { word, len });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(d: usize) -> Self {
        Permutation {
            word: (1..=d).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `τ(j)` for 1-based `j`.
    pub fn at(&self, j: usize) -> usize {
        self.word[j - 1]
    }

    /// Positions `j` (1-based) with `τ(j) > τ(j+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        descents(&self.word).collect()
    }

    /// Positions `j` (1-based) with `τ(j) < τ(j+1)`.
    pub fn ascent_set(&self) -> BTreeSet<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        descents(&self.word).count()
    }

    pub fn maj(&self) -> usize {
        descents(&self.word).sum()
    }

    /// `j ↦ d + 1 - τ(j)`; swaps descents and ascents position by position.
    pub fn complement(&self) -> Permutation {
        let d = self.word.len();
        Permutation {
            word: self.word.iter().map(|&v| d + 1 - v).collect(),
        }
    }

    /// Steps to the lexicographically next word; returns `false` (leaving the
    /// word unchanged) on the last one.
    pub fn advance(&mut self) -> bool {
        next_permutation(&mut self.word)
    }
}

/// 1-based descent positions of any word over an ordered alphabet.
pub fn descents<T: Ord>(word: &[T]) -> impl Iterator<Item = usize> + '_ {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
}

fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).expect("pivot has a successor");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// All of `S_d` in lexicographic order.
pub fn permutations(d: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some(Permutation::identity(d));
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if succ.advance() {
            next = Some(succ);
        }
        Some(current)
    })
}

fn check_d(d: usize, max_d: Option<usize>) -> Result<(), PermError> {
    if d == 0 {
        return Err(PermError::ZeroD);
    }
    match max_d {
        Some(max) if d > max => Err(PermError::DTooLarge { d, max }),
        _ => Ok(()),
    }
}

/// `E_d(x, y) = sum over S_d of x^des y^maj`, by enumeration, with the default guard.
pub fn euler_mahonian(d: usize) -> Result<Poly2, PermError> {
    euler_mahonian_guarded(d, Some(DEFAULT_MAX_D))
}

/// As [`euler_mahonian`], with an explicit guard (`None` disables it).
pub fn euler_mahonian_guarded(d: usize, max_d: Option<usize>) -> Result<Poly2, PermError> {
    check_d(d, max_d)?;
    // tally (des, maj) in a dense table before building the polynomial
    let max_maj = d * (d - 1) / 2;
    let mut table = vec![vec![0u64; max_maj + 1]; d];
    for tau in permutations(d) {
        table[tau.des()][tau.maj()] += 1;
    }
    let mut p = Poly2::zero();
    for (des, row) in table.iter().enumerate() {
        for (maj, &count) in row.iter().enumerate() {
            p.add_term(Monomial2::new(des as u32, maj as u32), BigInt::from(count));
        }
    }
    Ok(p)
}

/// Eulerian polynomial `E_d(x, 1)`.
pub fn eulerian(d: usize) -> Result<Poly2, PermError> {
    eulerian_guarded(d, Some(DEFAULT_MAX_D))
}

pub fn eulerian_guarded(d: usize, max_d: Option<usize>) -> Result<Poly2, PermError> {
    Ok(euler_mahonian_guarded(d, max_d)?.second_to_one())
}

/// `F_d(q0, w)` from `F_1 = 1` and
/// `F_d = ((1 - q0 w^d) F_{d-1}(q0, w) - w (1 - q0) F_{d-1}(q0 w, w)) / (1 - w)`.
///
/// The division is exact; a remainder surfaces as
/// [`SeriesError::NonExactDivision`].
pub fn djsw_recursion(d: usize) -> Result<Poly2, PermError> {
    check_d(d, None)?;
    let one_minus_w = Poly2::from_terms([(0, 0, 1), (0, 1, -1)]);
    let w_one_minus_q0 = Poly2::from_terms([(0, 1, 1), (1, 1, -1)]);
    let mut f = Poly2::one();
    for k in 2..=d {
        let one_minus_q0_wk = Poly2::from_terms([(0u32, 0u32, 1i64), (1, k as u32, -1)]);
        let shifted = f.subst(Monomial2::new(1, 1), Monomial2::B);
        let numerator = &(&one_minus_q0_wk * &f) - &(&w_one_minus_q0 * &shifted);
        f = numerator.divide_exact(&one_minus_w)?;
    }
    Ok(f)
}

/// Outcome of comparing the recursion against enumeration for one `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Row {
    pub d: usize,
    pub equal: bool,
    pub recursion_terms: usize,
    pub enumeration_terms: usize,
    /// `[exp_x, exp_y, recursion coefficient, enumeration coefficient]` at the
    /// first differing monomial.
    pub first_difference: Option<(u32, u32, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub d_max: usize,
    pub rows: Vec<Theorem1Row>,
}

impl Theorem1Report {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }
}

/// Checks `djsw_recursion(d) == euler_mahonian(d)` for every `d <= d_max`.
pub fn verify_theorem1(d_max: usize, max_d: Option<usize>) -> Result<Theorem1Report, PermError> {
    check_d(d_max, max_d)?;
    let mut rows = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let rec = djsw_recursion(d)?;
        let em = euler_mahonian_guarded(d, max_d)?;
        rows.push(Theorem1Row {
            d,
            equal: rec == em,
            recursion_terms: rec.num_terms(),
            enumeration_terms: em.num_terms(),
            first_difference: first_difference(&rec, &em),
        });
    }
    Ok(Theorem1Report { d_max, rows })
}

fn first_difference(lhs: &Poly2, rhs: &Poly2) -> Option<(u32, u32, String, String)> {
    let monomials: BTreeSet<Monomial2> = lhs.terms().chain(rhs.terms()).map(|(m, _)| m).collect();
    monomials
        .into_iter()
        .find(|&m| lhs.coeff(m) != rhs.coeff(m))
        .map(|m| (m.exp_a, m.exp_b, lhs.coeff(m).to_string(), rhs.coeff(m).to_string()))
}
