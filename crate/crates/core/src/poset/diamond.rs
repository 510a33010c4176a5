use std::fmt;

use super::{build_chain, build_q_poset, linear_sum, Poset, PosetError, Var, VariableAssignment};

/// Fold sequence `(d_1, …, d_M)` of a multifold partition diamond; the
/// uniform `d`-fold diamond of length `M` repeats `d` `M` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiamondSpec {
    folds: Vec<usize>,
}

impl DiamondSpec {
    pub fn new(folds: Vec<usize>) -> Result<Self, PosetError> {
        if folds.is_empty() {
            return Err(PosetError::InvalidSpec("needs at least one block".into()));
        }
        if folds.contains(&0) {
            return Err(PosetError::InvalidSpec("fold counts must be positive".into()));
        }
        Ok(DiamondSpec { folds })
    }

    pub fn uniform(d: usize, length: usize) -> Result<Self, PosetError> {
        DiamondSpec::new(vec![d; length])
    }

    pub fn folds(&self) -> &[usize] {
        &self.folds
    }

    /// Number of blocks `M`.
    pub fn length(&self) -> usize {
        self.folds.len()
    }

    /// `d_k` for 1-based `k`.
    pub fn fold(&self, k: usize) -> usize {
        self.folds[k - 1]
    }

    /// Total element count `c = M + 1 + sum d_j`.
    pub fn element_count(&self) -> usize {
        self.length() + 1 + self.folds.iter().sum::<usize>()
    }

    /// `omega(k) = d_{k+1} + … + d_M` for `0 <= k <= M`.
    pub fn omega(&self, k: usize) -> usize {
        self.folds[k..].iter().sum()
    }

    /// `Some(d)` when every block has `d` folds.
    pub fn uniform_fold(&self) -> Option<usize> {
        let d = self.folds[0];
        self.folds.iter().all(|&x| x == d).then_some(d)
    }

    /// Blocks in the opposite order.
    pub fn reversed(&self) -> DiamondSpec {
        DiamondSpec {
            folds: self.folds.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for DiamondSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.folds.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `{1} ⊕ Q_{d_1} ⊕ … ⊕ Q_{d_M}` with links (element 1 and each block top)
/// tagged `b` and folds tagged `a`.
pub fn build_diamond_poset(spec: &DiamondSpec) -> (Poset, VariableAssignment) {
    let mut poset = build_chain(1);
    let mut tags = vec![Var::B];
    for &d in spec.folds() {
        poset = linear_sum(&poset, &build_q_poset(d));
        tags.extend(std::iter::repeat_n(Var::A, d));
        tags.push(Var::B);
    }
    (poset, VariableAssignment::new(tags))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(s: &str) -> VariableAssignment {
        VariableAssignment::new(
            s.chars()
                .map(|c| if c == 'a' { Var::A } else { Var::B })
                .collect(),
        )
    }

    #[test]
    fn single_fold_is_a_chain() {
        let (p, z) = build_diamond_poset(&DiamondSpec::uniform(1, 1).unwrap());
        assert_eq!(p, build_chain(3));
        assert_eq!(z, tags("bab"));
    }

    #[test]
    fn two_fold_diamonds() {
        let (p, z) = build_diamond_poset(&DiamondSpec::uniform(2, 1).unwrap());
        assert_eq!(p.size(), 4);
        assert_eq!(
            p.covers().iter().copied().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 4), (3, 4)]
        );
        assert_eq!(z, tags("baab"));

        let spec = DiamondSpec::uniform(2, 2).unwrap();
        let (p, z) = build_diamond_poset(&spec);
        assert_eq!(p.size(), 7);
        assert_eq!(spec.element_count(), 7);
        assert_eq!(z, tags("baabaab"));
    }

    #[test]
    fn element_count_matches_uniform_formula() {
        for d in 1..=4 {
            for m in 1..=4 {
                let spec = DiamondSpec::uniform(d, m).unwrap();
                assert_eq!(spec.element_count(), m * (d + 1) + 1);
                assert_eq!(build_diamond_poset(&spec).0.size(), m * (d + 1) + 1);
            }
        }
    }

    #[test]
    fn omega_boundaries() {
        let spec = DiamondSpec::new(vec![3, 1, 2]).unwrap();
        assert_eq!(spec.omega(0), 6);
        assert_eq!(spec.omega(1), 3);
        assert_eq!(spec.omega(2), 2);
        assert_eq!(spec.omega(3), 0);
        assert_eq!(spec.element_count(), 10);
        assert_eq!(spec.uniform_fold(), None);
        assert_eq!(DiamondSpec::uniform(2, 3).unwrap().uniform_fold(), Some(2));
    }

    #[test]
    fn invalid_specs() {
        assert!(DiamondSpec::new(vec![]).is_err());
        assert!(DiamondSpec::new(vec![1, 0]).is_err());
        assert!(DiamondSpec::uniform(0, 2).is_err());
        assert!(DiamondSpec::uniform(2, 0).is_err());
    }

    #[test]
    fn uniform_diamond_is_self_dual() {
        for d in 1..=3 {
            for m in 1..=3 {
                let (p, z) = build_diamond_poset(&DiamondSpec::uniform(d, m).unwrap());
                assert_eq!(p.dual(), p);
                assert_eq!(z.reversed(), z);
            }
        }
    }

    #[test]
    fn multifold_dual_reverses_blocks() {
        let spec = DiamondSpec::new(vec![1, 3, 2]).unwrap();
        let (p, z) = build_diamond_poset(&spec);
        let (q, y) = build_diamond_poset(&spec.reversed());
        assert_eq!(p.dual(), q);
        assert_eq!(z.reversed(), y);
    }
}
