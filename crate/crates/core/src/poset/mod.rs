//! Finite naturally labelled posets.
//!
//! Elements are `1..=c`. A poset is stored as its cover relations (the
//! transitive reduction) plus the full order as a bitset per element.
//! Natural labelling, `j ⪯ k ⇒ j <= k`, is checked at construction.

mod diamond;
mod extensions;
mod parse;

pub use diamond::{build_diamond_poset, DiamondSpec};
pub use extensions::{
    count_linear_extensions, for_each_linear_extension, jordan_holder, stanley_sigma,
    DEFAULT_MAX_SIZE,
};
pub use parse::parse_poset_file;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::series::Monomial2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cover {lower} {upper} is not naturally labelled (needs lower < upper)")]
    NotNaturallyLabelled { lower: usize, upper: usize },
    #[error("cover relations contain a cycle through element {element}")]
    CycleDetected { element: usize },
    #[error("element {element} is outside 1..={size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("a poset needs at least one element")]
    Empty,
    #[error("poset has {size} elements, above the enumeration guard of {max}")]
    PosetTooLarge { size: usize, max: usize },
    #[error("assignment covers {got} elements but the poset has {expected}")]
    AssignmentSize { expected: usize, got: usize },
    #[error("invalid diamond: {0}")]
    InvalidSpec(String),
}

/// Fixed-size bitset over element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n / 64 + 1])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: BTreeSet<(usize, usize)>,
    /// `strictly_below[k]` has bit `j` set iff `j ≺ k`.
    strictly_below: Vec<Bits>,
    lower_covers: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds a poset from relations `(j, k)` meaning `j ⪯ k`.
    ///
    /// The input may contain duplicates and transitively implied pairs; the
    /// stored covers are the transitive reduction.
    pub fn new(size: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PosetError> {
        if size == 0 {
            return Err(PosetError::Empty);
        }
        let relations: BTreeSet<(usize, usize)> = relations.into_iter().collect();
        for &(j, k) in &relations {
            for e in [j, k] {
                if e == 0 || e > size {
                    return Err(PosetError::ElementOutOfRange { element: e, size });
                }
            }
        }
        if let Some(element) = find_cycle(size, &relations) {
            return Err(PosetError::CycleDetected { element });
        }
        if let Some(&(lower, upper)) = relations.iter().find(|(j, k)| j > k) {
            return Err(PosetError::NotNaturallyLabelled { lower, upper });
        }

        let mut direct: Vec<Vec<usize>> = vec![Vec::new(); size + 1];
        for &(j, k) in &relations {
            direct[k].push(j);
        }
        // natural labelling: every lower element is finished before k
        let mut strictly_below = vec![Bits::new(size + 1); size + 1];
        for k in 1..=size {
            let mut acc = Bits::new(size + 1);
            for &j in &direct[k] {
                acc.set(j);
                acc.union_with(&strictly_below[j]);
            }
            strictly_below[k] = acc;
        }

        let mut covers = BTreeSet::new();
        let mut lower_covers = vec![Vec::new(); size + 1];
        for k in 1..=size {
            for j in 1..k {
                if strictly_below[k].get(j)
                    && !(j + 1..k).any(|m| strictly_below[m].get(j) && strictly_below[k].get(m))
                {
                    covers.insert((j, k));
                    lower_covers[k].push(j);
                }
            }
        }
        Ok(Poset {
            size,
            covers,
            strictly_below,
            lower_covers,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover relations `(j, k)`, sorted.
    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    /// `j ⪯ k`.
    pub fn leq(&self, j: usize, k: usize) -> bool {
        j == k || self.strictly_below[k].get(j)
    }

    /// Elements covered by `k`, increasing.
    pub fn lower_covers(&self, k: usize) -> &[usize] {
        &self.lower_covers[k]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.size).filter(|&k| self.lower_covers[k].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.size)
            .filter(|&j| !self.covers.iter().any(|&(lo, _)| lo == j))
            .collect()
    }

    /// The dual order, relabelled by `j ↦ c + 1 - j` so it stays natural.
    pub fn dual(&self) -> Poset {
        let c = self.size;
        Poset::new(c, self.covers.iter().map(|&(j, k)| (c + 1 - k, c + 1 - j)))
            .expect("dual of a natural labelling is natural")
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements {}", self.size)?;
        for (j, k) in &self.covers {
            writeln!(f, "cover {j} {k}")?;
        }
        Ok(())
    }
}

/// Some element on a directed cycle, if any.
fn find_cycle(size: usize, relations: &BTreeSet<(usize, usize)>) -> Option<usize> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); size + 1];
    let mut indegree = vec![0usize; size + 1];
    for &(j, k) in relations {
        out[j].push(k);
        indegree[k] += 1;
    }
    let mut stack: Vec<usize> = (1..=size).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = stack.pop() {
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                stack.push(w);
            }
        }
    }
    (1..=size).find(|&v| indegree[v] > 0)
}

/// The `c`-element chain `1 ⪯ 2 ⪯ … ⪯ c`.
pub fn build_chain(c: usize) -> Poset {
    Poset::new(c, (1..c).map(|j| (j, j + 1))).expect("chain is a valid poset")
}

/// `c` pairwise incomparable elements.
pub fn build_antichain(c: usize) -> Poset {
    Poset::new(c, []).expect("antichain is a valid poset")
}

/// `Q_d`: an antichain `1..=d` below a single top element `d + 1`.
pub fn build_q_poset(d: usize) -> Poset {
    Poset::new(d + 1, (1..=d).map(|j| (j, d + 1))).expect("Q_d is a valid poset")
}

/// Linear (ordinal) sum: every element of `first` lies below every element
/// of `second`, whose labels are shifted up by `first.size()`.
pub fn linear_sum(first: &Poset, second: &Poset) -> Poset {
    let shift = first.size;
    let mut relations: Vec<(usize, usize)> = first.covers.iter().copied().collect();
    relations.extend(second.covers.iter().map(|&(j, k)| (j + shift, k + shift)));
    for top in first.maximal_elements() {
        for bottom in second.minimal_elements() {
            relations.push((top, bottom + shift));
        }
    }
    Poset::new(first.size + second.size, relations).expect("linear sum of natural posets is natural")
}

/// Which formal variable weights a poset element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// First variable; fold elements of a diamond.
    A,
    /// Second variable; link elements of a diamond.
    B,
}

impl Var {
    pub fn monomial(self) -> Monomial2 {
        match self {
            Var::A => Monomial2::A,
            Var::B => Monomial2::B,
        }
    }
}

/// A variable tag for each element `1..=c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableAssignment {
    tags: Vec<Var>,
}

impl VariableAssignment {
    pub fn new(tags: Vec<Var>) -> Self {
        VariableAssignment { tags }
    }

    pub fn uniform(c: usize, var: Var) -> Self {
        VariableAssignment { tags: vec![var; c] }
    }

    pub fn all_b(c: usize) -> Self {
        VariableAssignment::uniform(c, Var::B)
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    /// Tag of element `j` (1-based).
    pub fn tag(&self, j: usize) -> Var {
        self.tags[j - 1]
    }

    pub fn tags(&self) -> &[Var] {
        &self.tags
    }

    pub fn reversed(&self) -> VariableAssignment {
        VariableAssignment {
            tags: self.tags.iter().rev().copied().collect(),
        }
    }

    pub(crate) fn check_size(&self, poset: &Poset) -> Result<(), PosetError> {
        if self.tags.len() == poset.size() {
            Ok(())
        } else {
            Err(PosetError::AssignmentSize {
                expected: poset.size(),
                got: self.tags.len(),
            })
        }
    }
}

impl fmt::Display for VariableAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .tags
            .iter()
            .map(|t| match t {
                Var::A => "a",
                Var::B => "b",
            })
            .collect();
        f.write_str(&s.join(","))
    }
}
