//! Cross-module identities: closed forms against linear-extension sums and
//! enumeration, specializations, and stabilization in the length.

use diamonds::diamonds::{
    apr_product, djsw_product, schmidt_closed, schmidt_product, sigma_closed, sigma_multifold_closed,
    sigma_rational,
};
use diamonds::oracle::{
    enumerate_diamonds, enumerate_infinite_univariate, enumerate_ppartitions_univariate,
    enumerate_reversing_univariate, random_corpus, schmidt_oracle,
};
use diamonds::poset::{build_diamond_poset, stanley_sigma, DiamondSpec, VariableAssignment};
use diamonds::series::UniSeries;
use diamonds::Guards;

#[test]
fn single_two_fold_diamond_at_a_eq_b() {
    // (1+q^2)/((1-q)(1-q^2)(1-q^3)(1-q^4)), built in one variable
    let mut expected = UniSeries::one(12);
    expected.mul_one_plus(2);
    for k in 1..=4 {
        expected.div_one_minus(k).unwrap();
    }
    let closed = sigma_closed(2, 1, 12).unwrap().specialize_univariate();
    assert_eq!(closed, expected);
    let oracle = enumerate_diamonds(&DiamondSpec::uniform(2, 1).unwrap(), 12).specialize_univariate();
    assert_eq!(oracle, expected);
    assert_eq!(&expected.coeffs_i64()[..5], &[1, 1, 3, 4, 7]);
}

#[test]
fn enumerate_diamonds_small_listing() {
    let s = enumerate_diamonds(&DiamondSpec::uniform(2, 1).unwrap(), 2);
    assert_eq!(s.to_string(), "1 + b + b^2 + 2*a*b");
    assert_eq!(s, sigma_closed(2, 1, 2).unwrap());
}

#[test]
fn univariate_ppartition_counts_match_linear_extension_sum() {
    for (poset, _) in random_corpus(11, 40, 6) {
        let z = VariableAssignment::all_b(poset.size());
        let stanley = stanley_sigma(&poset, &z, 7, None).unwrap().specialize_univariate();
        assert_eq!(stanley, enumerate_ppartitions_univariate(&poset, 7), "{poset}");
    }
}

#[test]
fn length_stabilization() {
    let t = 9;
    for d in 1..=3 {
        let series: Vec<UniSeries> = (1..=5)
            .map(|m| sigma_closed(d, m, t).unwrap().specialize_univariate())
            .collect();
        for (i, s) in series.iter().enumerate() {
            for (j, u) in series.iter().enumerate() {
                let n = i.min(j) + 1; // min(M, M')
                assert_eq!(s.truncate(n as u32), u.truncate(n as u32), "d={d} M={} M'={}", i + 1, j + 1);
            }
        }
    }
}

#[test]
fn schmidt_is_first_variable_at_one() {
    // folds never exceed the top link, so a-degree <= d * b-degree
    let t = 6;
    for d in 1..=3 {
        for m in 1..=3 {
            let wide = sigma_closed(d, m, (d as u32 + 1) * t).unwrap();
            assert_eq!(wide.first_to_one_upto(t), schmidt_closed(d, m, t).unwrap(), "d={d} M={m}");
        }
    }
}

#[test]
fn schmidt_stabilizes_to_product() {
    for d in 1..=3 {
        let product = schmidt_product(d, 8).unwrap();
        for m in 1..=8usize {
            let closed = schmidt_closed(d, m, 8).unwrap();
            assert_eq!(closed.truncate(m as u32), product.truncate(m as u32), "d={d} M={m}");
        }
    }
}

#[test]
fn schmidt_oracle_matches_closed_multifold() {
    let spec = DiamondSpec::new(vec![2, 1, 3]).unwrap();
    let closed =
        diamonds::diamonds::schmidt_multifold_closed(&spec, 7, &Guards::default()).unwrap();
    assert_eq!(closed, schmidt_oracle(&spec, 7));
}

#[test]
fn order_conventions_agree_on_uniform_diamonds() {
    // order-reversing count of the same finite poset
    for d in 1..=3 {
        for m in 1..=3 {
            let spec = DiamondSpec::uniform(d, m).unwrap();
            let (p, _) = build_diamond_poset(&spec);
            let reversing = enumerate_reversing_univariate(&p, 8);
            let preserving = enumerate_diamonds(&spec, 8).specialize_univariate();
            assert_eq!(reversing, preserving, "d={d} M={m}");
        }
    }
}

#[test]
fn multifold_sequences_against_oracle() {
    for folds in [vec![1, 2], vec![2, 1], vec![1, 1, 2], vec![4, 1]] {
        let spec = DiamondSpec::new(folds).unwrap();
        assert_eq!(sigma_multifold_closed(&spec, 7).unwrap(), enumerate_diamonds(&spec, 7), "{spec}");
    }
}

#[test]
fn block_order_matters_for_multifold_diamonds() {
    let forward = DiamondSpec::new(vec![1, 2]).unwrap();
    let backward = forward.reversed();
    let f = sigma_multifold_closed(&forward, 6).unwrap();
    let b = sigma_multifold_closed(&backward, 6).unwrap();
    assert_ne!(f, b);
    assert_eq!(b, enumerate_diamonds(&backward, 6));
}

#[test]
fn djsw_products_match_enumeration_for_four_folds() {
    assert_eq!(djsw_product(4, 10).unwrap(), enumerate_infinite_univariate(4, 10).unwrap());
}

#[test]
fn apr_is_two_fold_product() {
    assert_eq!(djsw_product(2, 20).unwrap(), apr_product(20));
}

#[test]
fn sigma_expansions_are_nonnegative_with_unit_constant_term() {
    for d in 1..=4 {
        for m in 1..=3 {
            let s = sigma_rational(d, m, &Guards::default()).unwrap().expand(8);
            assert!(s.has_nonnegative_coefficients());
            assert_eq!(s.specialize_univariate().coeffs_i64()[0], 1);
        }
    }
}
