use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Poset, PosetError, VariableAssignment};
use crate::permstat::descents;
use crate::series::{Monomial2, TruncSeries2};

/// Default bound on the number of elements for linear-extension enumeration.
pub const DEFAULT_MAX_SIZE: usize = 12;

fn check_size(p: &Poset, max_size: Option<usize>) -> Result<(), PosetError> {
    match max_size {
        Some(max) if p.size() > max => Err(PosetError::PosetTooLarge {
            size: p.size(),
            max,
        }),
        _ => Ok(()),
    }
}

/// Calls `visit` on every linear extension of `p`, as a word listing the
/// elements in extension order, in lexicographic order of words.
pub fn for_each_linear_extension(
    p: &Poset,
    max_size: Option<usize>,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), PosetError> {
    check_size(p, max_size)?;
    let c = p.size();
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); c + 1];
    let mut pending = vec![0usize; c + 1];
    for &(j, k) in p.covers() {
        upper[j].push(k);
        pending[k] += 1;
    }
    let mut placed = vec![false; c + 1];
    let mut word = Vec::with_capacity(c);
    extend(&upper, &mut pending, &mut placed, &mut word, c, &mut visit);
    Ok(())
}

fn extend(
    upper: &[Vec<usize>],
    pending: &mut [usize],
    placed: &mut [bool],
    word: &mut Vec<usize>,
    c: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if word.len() == c {
        visit(word);
        return;
    }
    for v in 1..=c {
        if placed[v] || pending[v] != 0 {
            continue;
        }
        placed[v] = true;
        word.push(v);
        for &k in &upper[v] {
            pending[k] -= 1;
        }
        extend(upper, pending, placed, word, c, visit);
        for &k in &upper[v] {
            pending[k] += 1;
        }
        word.pop();
        placed[v] = false;
    }
}

/// The Jordan–Hölder set of `p`: all linear extensions as words, in
/// lexicographic order.
pub fn jordan_holder(p: &Poset, max_size: Option<usize>) -> Result<Vec<Vec<usize>>, PosetError> {
    let mut out = Vec::new();
    for_each_linear_extension(p, max_size, |w| out.push(w.to_vec()))?;
    Ok(out)
}

pub fn count_linear_extensions(p: &Poset, max_size: Option<usize>) -> Result<u64, PosetError> {
    let mut n = 0u64;
    for_each_linear_extension(p, max_size, |_| n += 1)?;
    Ok(n)
}

/// Generating function of the order-preserving `P`-partitions of `p`, each
/// element weighted by its tag, via the sum over linear extensions
///
/// `sum_τ prod_{j ∈ Des(τ)} z_{τ(j+1)}…z_{τ(c)} / prod_{j=0}^{c-1} (1 - z_{τ(j+1)}…z_{τ(c)})`,
///
/// expanded to total degree `truncation`.
pub fn stanley_sigma(
    p: &Poset,
    z: &VariableAssignment,
    truncation: u32,
    max_size: Option<usize>,
) -> Result<TruncSeries2, PosetError> {
    z.check_size(p)?;
    let c = p.size();
    // words sharing numerator and denominator are expanded once
    let mut classes: BTreeMap<(Monomial2, Vec<Monomial2>), u64> = BTreeMap::new();
    for_each_linear_extension(p, max_size, |word| {
        // suffix[j] = z_{τ(j+1)} … z_{τ(c)}
        let mut suffix = vec![Monomial2::ONE; c + 1];
        for j in (0..c).rev() {
            suffix[j] = suffix[j + 1] * z.tag(word[j]).monomial();
        }
        let numerator = descents(word).fold(Monomial2::ONE, |acc, j| acc * suffix[j]);
        let mut denominator = suffix[..c].to_vec();
        denominator.sort();
        *classes.entry((numerator, denominator)).or_default() += 1;
    })?;

    let mut total = TruncSeries2::zero(truncation);
    for ((numerator, denominator), count) in classes {
        let mut term = TruncSeries2::zero(truncation);
        term.add_to(numerator, &BigInt::from(count));
        for m in denominator {
            term.div_one_minus(m).expect("suffix products have positive degree");
        }
        total.add_assign(&term).expect("same truncation");
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_antichain, build_chain, build_diamond_poset, DiamondSpec, Var};

    #[test]
    fn jordan_holder_examples() {
        assert_eq!(jordan_holder(&build_chain(2), None).unwrap(), vec![vec![1, 2]]);
        assert_eq!(
            jordan_holder(&build_antichain(2), None).unwrap(),
            vec![vec![1, 2], vec![2, 1]]
        );
        let (diamond, _) = build_diamond_poset(&DiamondSpec::uniform(2, 1).unwrap());
        assert_eq!(
            jordan_holder(&diamond, None).unwrap(),
            vec![vec![1, 2, 3, 4], vec![1, 3, 2, 4]]
        );
    }

    #[test]
    fn extension_counts() {
        assert_eq!(count_linear_extensions(&build_chain(6), None).unwrap(), 1);
        assert_eq!(count_linear_extensions(&build_antichain(5), None).unwrap(), 120);
    }

    #[test]
    fn guard() {
        assert_eq!(
            jordan_holder(&build_chain(13), Some(DEFAULT_MAX_SIZE)),
            Err(PosetError::PosetTooLarge { size: 13, max: 12 })
        );
        assert!(jordan_holder(&build_chain(13), None).is_ok());
    }

    #[test]
    fn stanley_chain() {
        let s = stanley_sigma(&build_chain(3), &VariableAssignment::all_b(3), 4, None).unwrap();
        // partitions into parts of size at most 3
        assert_eq!(s.b_axis().coeffs_i64(), vec![1, 1, 2, 3, 4]);
        assert_eq!(s.num_terms(), 5);
    }

    #[test]
    fn stanley_antichain() {
        let s = stanley_sigma(&build_antichain(2), &VariableAssignment::all_b(2), 3, None).unwrap();
        assert_eq!(s, TruncSeries2::from_terms(3, [(0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 4)]));
    }

    #[test]
    fn stanley_single_fold_diamond() {
        let (p, z) = build_diamond_poset(&DiamondSpec::uniform(1, 1).unwrap());
        assert_eq!(z.tags(), &[Var::B, Var::A, Var::B]);
        let s = stanley_sigma(&p, &z, 3, None).unwrap();
        // 1/((1-b)(1-ab)(1-ab^2))
        let mut expected = TruncSeries2::one(3);
        for m in [Monomial2::B, Monomial2::new(1, 1), Monomial2::new(1, 2)] {
            expected.div_one_minus(m).unwrap();
        }
        assert_eq!(s, expected);
    }

    #[test]
    fn assignment_must_match() {
        assert_eq!(
            stanley_sigma(&build_chain(3), &VariableAssignment::all_b(2), 2, None),
            Err(PosetError::AssignmentSize { expected: 3, got: 2 })
        );
    }
}
