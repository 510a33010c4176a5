//! Property tests for the algebraic substrate, permutation statistics and
//! poset constructions.

use diamonds::permstat::{permutations, Permutation};
use diamonds::poset::{count_linear_extensions, linear_sum, Poset};
use diamonds::series::{Monomial2, Poly2, RationalExpr, TruncSeries2};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..6).prop_map(Poly2::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = Poly2> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn monomial() -> impl Strategy<Value = Monomial2> {
    (0u32..3, 0u32..3)
        .prop_filter("positive degree", |(i, j)| i + j > 0)
        .prop_map(|(i, j)| Monomial2::new(i, j))
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (1usize..8)
        .prop_flat_map(|d| Just((1..=d).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn small_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|c| {
        prop::collection::vec(any::<bool>(), c * (c - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=c).flat_map(|k| (1..k).map(move |j| (j, k)));
            let rel: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Poset::new(c, rel).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(p in poly(), q in nonzero_poly()) {
        prop_assert_eq!((&p * &q).divide_exact(&q).unwrap(), p);
    }

    #[test]
    fn expansion_round_trips(num in poly(), factors in prop::collection::vec(monomial(), 0..5), t in 0u32..8) {
        let r = RationalExpr::new(num.clone(), factors.clone()).unwrap();
        let mut s = r.expand(t);
        for m in &factors {
            s.mul_one_minus(*m);
        }
        prop_assert_eq!(s, TruncSeries2::from_poly(&num, t));
    }

    #[test]
    fn expansion_ignores_factor_order(num in poly(), mut factors in prop::collection::vec(monomial(), 0..5), t in 0u32..7) {
        let forward = RationalExpr::new(num.clone(), factors.clone()).unwrap().expand(t);
        factors.reverse();
        prop_assert_eq!(forward, RationalExpr::new(num, factors).unwrap().expand(t));
    }

    #[test]
    fn specialization_commutes_with_product(p in poly(), q in poly(), t in 0u32..8) {
        let s = TruncSeries2::from_poly(&p, t);
        let u = TruncSeries2::from_poly(&q, t);
        let lhs = s.mul(&u).unwrap().specialize_univariate();
        let rhs = s.specialize_univariate().mul(&u.specialize_univariate()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly(), q in poly(), x in monomial(), y in monomial()) {
        prop_assert_eq!((&p * &q).subst(x, y), &p.subst(x, y) * &q.subst(x, y));
        prop_assert_eq!((&p + &q).subst(x, y), &p.subst(x, y) + &q.subst(x, y));
    }

    #[test]
    fn descents_and_ascents_partition_positions(tau in permutation()) {
        let des = tau.descent_set();
        let asc = tau.ascent_set();
        prop_assert!(des.is_disjoint(&asc));
        let all: Vec<usize> = des.union(&asc).copied().collect();
        prop_assert_eq!(all, (1..tau.len()).collect::<Vec<_>>());
        prop_assert_eq!(tau.des(), des.len());
        prop_assert_eq!(tau.maj(), des.iter().sum::<usize>());
    }

    #[test]
    fn complement_swaps_descents_and_ascents(tau in permutation()) {
        let c = tau.complement();
        prop_assert_eq!(c.descent_set(), tau.ascent_set());
        prop_assert_eq!(c.ascent_set(), tau.descent_set());
        prop_assert_eq!(c.complement(), tau);
    }

    #[test]
    fn linear_sum_multiplies_extension_counts(a in small_poset(4), b in small_poset(4)) {
        let ab = linear_sum(&a, &b);
        prop_assert_eq!(ab.size(), a.size() + b.size());
        prop_assert_eq!(
            count_linear_extensions(&ab, None).unwrap(),
            count_linear_extensions(&a, None).unwrap() * count_linear_extensions(&b, None).unwrap()
        );
        for j in 1..=a.size() {
            for k in 1..=b.size() {
                prop_assert!(ab.leq(j, a.size() + k));
            }
        }
    }

    #[test]
    fn linear_sum_is_associative(a in small_poset(3), b in small_poset(3), c in small_poset(3)) {
        prop_assert_eq!(linear_sum(&linear_sum(&a, &b), &c), linear_sum(&a, &linear_sum(&b, &c)));
    }

    #[test]
    fn covers_are_a_transitive_reduction(p in small_poset(6)) {
        for &(j, k) in p.covers() {
            prop_assert!(j < k);
            prop_assert!(!(j + 1..k).any(|m| p.leq(j, m) && p.leq(m, k)));
        }
        // rebuilding from covers alone gives the same order
        let rebuilt = Poset::new(p.size(), p.covers().iter().copied()).unwrap();
        prop_assert_eq!(&rebuilt, &p);
    }
}

/// The descent/ascent bijection with formal position weights: summing
/// `prod_{j in Des} z_j` and `prod_{j in Asc} z_j` over `S_d` gives the same
/// multiset of position sets.
#[test]
fn descent_and_ascent_sets_equidistributed() {
    for d in 1..=7 {
        let mut des: Vec<Vec<usize>> = permutations(d).map(|t| t.descent_set().into_iter().collect()).collect();
        let mut asc: Vec<Vec<usize>> = permutations(d).map(|t| t.ascent_set().into_iter().collect()).collect();
        des.sort();
        asc.sort();
        assert_eq!(des, asc, "d = {d}");
    }
}
