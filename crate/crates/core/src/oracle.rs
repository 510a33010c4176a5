//! Brute-force enumerators used as ground truth.
//!
//! Nothing here goes through linear extensions or closed formulas: every
//! function walks the actual part assignments and counts them. Keep it that
//! way, otherwise the cross-checks stop being independent.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{build_diamond_poset, DiamondSpec, Poset, PosetError, Var, VariableAssignment};
use crate::series::{Monomial2, TruncSeries2, UniSeries};

/// Order-preserving `P`-partitions of `p` (`j ⪯ k ⇒ m_j <= m_k`) with total
/// weight at most `truncation`; each contributes `a^(fold sum) b^(link sum)`.
pub fn enumerate_ppartitions(
    p: &Poset,
    z: &VariableAssignment,
    truncation: u32,
) -> Result<TruncSeries2, PosetError> {
    if z.len() != p.size() {
        return Err(PosetError::AssignmentSize {
            expected: p.size(),
            got: z.len(),
        });
    }
    let mut out = TruncSeries2::zero(truncation);
    let mut parts = vec![0u32; p.size() + 1];
    preserving_dfs(p, z, 1, truncation, Monomial2::ONE, &mut parts, &mut out);
    Ok(out)
}

fn preserving_dfs(
    p: &Poset,
    z: &VariableAssignment,
    elem: usize,
    budget: u32,
    weight: Monomial2,
    parts: &mut [u32],
    out: &mut TruncSeries2,
) {
    if elem > p.size() {
        out.add_to(weight, &BigInt::one());
        return;
    }
    // lower covers carry smaller labels, so they are already assigned
    let low = p.lower_covers(elem).iter().map(|&j| parts[j]).max().unwrap_or(0);
    for value in low..=budget {
        parts[elem] = value;
        let w = weight * z.tag(elem).monomial().pow(value);
        preserving_dfs(p, z, elem + 1, budget - value, w, parts, out);
    }
}

/// All `P`-partitions of the diamond described by `spec`, with folds weighted
/// by `a` and links by `b`.
pub fn enumerate_diamonds(spec: &DiamondSpec, truncation: u32) -> TruncSeries2 {
    let (p, z) = build_diamond_poset(spec);
    enumerate_ppartitions(&p, &z, truncation).expect("diamond assignment matches its poset")
}

/// Order-reversing `P`-partitions (`j ⪯ k ⇒ m_j >= m_k`) of `p` counted by
/// total sum, through `q^truncation`.
pub fn enumerate_reversing_univariate(p: &Poset, truncation: u32) -> UniSeries {
    let mut counts = vec![BigInt::from(0); truncation as usize + 1];
    let mut parts = vec![0u32; p.size() + 1];
    reversing_dfs(p, 1, truncation, truncation, &mut parts, &mut counts);
    UniSeries::from_coeffs(counts)
}

fn reversing_dfs(
    p: &Poset,
    elem: usize,
    budget: u32,
    truncation: u32,
    parts: &mut [u32],
    counts: &mut [BigInt],
) {
    if elem > p.size() {
        counts[(truncation - budget) as usize] += 1;
        return;
    }
    let high = p
        .lower_covers(elem)
        .iter()
        .map(|&j| parts[j])
        .min()
        .unwrap_or(budget)
        .min(budget);
    for value in 0..=high {
        parts[elem] = value;
        reversing_dfs(p, elem + 1, budget - value, truncation, parts, counts);
    }
}

/// Partitions whose parts fill the infinite `d`-fold diamond, counted by
/// total sum through `q^truncation`.
///
/// Uses the length-`truncation` diamond with part values weakly decreasing
/// away from the first link: a nonzero block beyond position `n` forces a sum
/// above `n`, so the finite diamond sees every partition of weight at most
/// `truncation`.
pub fn enumerate_infinite_univariate(d: usize, truncation: u32) -> Result<UniSeries, PosetError> {
    if truncation == 0 {
        DiamondSpec::uniform(d, 1)?;
        return Ok(UniSeries::one(0));
    }
    let spec = DiamondSpec::uniform(d, truncation as usize)?;
    let (p, _) = build_diamond_poset(&spec);
    Ok(enumerate_reversing_univariate(&p, truncation))
}

/// Schmidt-type count: length-`M` diamonds weighted by the sum of their
/// links only, through `q^truncation`.
///
/// Links form a weakly increasing chain `l_0 <= … <= l_M`; each fold of
/// block `k` ranges over `l_{k-1}..=l_k`, so block `k` admits
/// `(l_k - l_{k-1} + 1)^{d_k}` fold fillings.
pub fn schmidt_oracle(spec: &DiamondSpec, truncation: u32) -> UniSeries {
    let mut counts = vec![BigInt::from(0); truncation as usize + 1];
    let mut links = Vec::with_capacity(spec.length() + 1);
    for first in 0..=truncation {
        links.push(first);
        links_dfs(spec, truncation, first, &mut links, &mut counts);
        links.pop();
    }
    UniSeries::from_coeffs(counts)
}

fn links_dfs(
    spec: &DiamondSpec,
    truncation: u32,
    used: u32,
    links: &mut Vec<u32>,
    counts: &mut [BigInt],
) {
    if links.len() == spec.length() + 1 {
        let mut fillings = BigInt::one();
        for (k, pair) in links.windows(2).enumerate() {
            let span = BigInt::from(pair[1] - pair[0] + 1);
            fillings *= num_traits::pow(span, spec.fold(k + 1));
        }
        counts[used as usize] += fillings;
        return;
    }
    let prev = *links.last().expect("first link pushed by caller");
    let mut next = prev;
    while used + next <= truncation {
        links.push(next);
        links_dfs(spec, truncation, used + next, links, counts);
        links.pop();
        next += 1;
    }
}

/// Uniform-tag helper for univariate P-partition counts.
pub fn enumerate_ppartitions_univariate(p: &Poset, truncation: u32) -> UniSeries {
    enumerate_ppartitions(p, &VariableAssignment::uniform(p.size(), Var::B), truncation)
        .expect("uniform assignment matches")
        .b_axis()
}

/// A random naturally labelled poset on `size` elements: each pair `j < k`
/// is related with probability `density`, then transitively reduced.
pub fn random_poset(rng: &mut impl Rng, size: usize, density: f64) -> Poset {
    let mut relations = Vec::new();
    for k in 1..=size {
        for j in 1..k {
            if rng.gen_bool(density) {
                relations.push((j, k));
            }
        }
    }
    Poset::new(size, relations).expect("upper-triangular relations are natural")
}

/// Deterministic corpus of random posets with sizes in `1..=max_size`,
/// random fold/link tags, and varied densities.
pub fn random_corpus(seed: u64, count: usize, max_size: usize) -> Vec<(Poset, VariableAssignment)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            let density = rng.gen_range(0.0..0.7);
            let poset = random_poset(&mut rng, size, density);
            let tags = (0..size)
                .map(|_| if rng.gen_bool(0.5) { Var::A } else { Var::B })
                .collect();
            (poset, VariableAssignment::new(tags))
        })
        .collect()
}
