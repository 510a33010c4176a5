//! Closed formulas for diamond generating functions and the classical
//! infinite products they specialize to.
//!
//! Bivariate results are built as [`RationalExpr`] values (exact numerator,
//! list of `(1 - m)` factors) and only then expanded, so substitution into
//! the numerator never sees truncation.

use num_bigint::BigInt;

use crate::permstat::{djsw_recursion, euler_mahonian_guarded, eulerian_guarded};
use crate::poset::DiamondSpec;
use crate::series::{Monomial2, Poly2, RationalExpr, TruncSeries2, UniSeries};
use crate::{Error, Guards};

fn exp(n: usize) -> u32 {
    u32::try_from(n).expect("exponent fits in u32")
}

/// `σ_{d,M}(a, b)` as a rational expression:
///
/// `prod_{n=1}^M E_d(a^{(n-1)d} b^n, a)
///   / ((1 - a^{Md} b^{M+1}) prod_{n=1}^M prod_{j=0}^d (1 - a^{nd-j} b^n))`.
pub fn sigma_rational(d: usize, length: usize, guards: &Guards) -> Result<RationalExpr, Error> {
    let spec = DiamondSpec::uniform(d, length)?;
    let m = spec.length();
    let e_d = euler_mahonian_guarded(d, guards.max_d)?;
    let numerator: Poly2 = (1..=m)
        .map(|n| e_d.subst(Monomial2::new(exp((n - 1) * d), exp(n)), Monomial2::A))
        .product();
    let mut denominator = vec![Monomial2::new(exp(m * d), exp(m + 1))];
    for n in 1..=m {
        for j in 0..=d {
            denominator.push(Monomial2::new(exp(n * d - j), exp(n)));
        }
    }
    Ok(RationalExpr::new(numerator, denominator)?)
}

/// `σ_{d,M}(a, b)` expanded through total degree `truncation`.
pub fn sigma_closed(d: usize, length: usize, truncation: u32) -> Result<TruncSeries2, Error> {
    Ok(sigma_rational(d, length, &Guards::default())?.expand(truncation))
}

/// Multifold diamond with fold sequence `d_1..d_M`, `ω_k = d_{k+1} + … + d_M`:
///
/// `prod_k E_{d_k}(a^{ω_k} b^{M-k+1}, a)
///   / ((1 - a^{ω_0} b^{M+1}) prod_k prod_{j=0}^{d_k} (1 - a^{ω_k + d_k - j} b^{M-k+1}))`.
pub fn multifold_rational(spec: &DiamondSpec, guards: &Guards) -> Result<RationalExpr, Error> {
    let m = spec.length();
    let mut numerator = Poly2::one();
    let mut denominator = vec![Monomial2::new(exp(spec.omega(0)), exp(m + 1))];
    for k in 1..=m {
        let d_k = spec.fold(k);
        let omega = spec.omega(k);
        let links = exp(m - k + 1);
        let e = euler_mahonian_guarded(d_k, guards.max_d)?;
        numerator = numerator * e.subst(Monomial2::new(exp(omega), links), Monomial2::A);
        for j in 0..=d_k {
            denominator.push(Monomial2::new(exp(omega + d_k - j), links));
        }
    }
    Ok(RationalExpr::new(numerator, denominator)?)
}

pub fn sigma_multifold_closed(spec: &DiamondSpec, truncation: u32) -> Result<TruncSeries2, Error> {
    Ok(multifold_rational(spec, &Guards::default())?.expand(truncation))
}

/// Length-`M` Schmidt-type series: `σ_{d,M}(1, q)`, with `a = 1` substituted
/// before expansion.
pub fn schmidt_closed(d: usize, length: usize, truncation: u32) -> Result<UniSeries, Error> {
    schmidt_closed_guarded(d, length, truncation, &Guards::default())
}

pub fn schmidt_closed_guarded(
    d: usize,
    length: usize,
    truncation: u32,
    guards: &Guards,
) -> Result<UniSeries, Error> {
    let rational = sigma_rational(d, length, guards)?.first_to_one()?;
    Ok(rational.expand(truncation).b_axis())
}

/// Schmidt-type multifold series `σ_{d_1..d_M}(1, q)`.
pub fn schmidt_multifold_closed(spec: &DiamondSpec, truncation: u32, guards: &Guards) -> Result<UniSeries, Error> {
    let rational = multifold_rational(spec, guards)?.first_to_one()?;
    Ok(rational.expand(truncation).b_axis())
}

/// `prod_{n>=1} E_d(q^n, 1) / (1 - q^n)^{d+1}` through `q^truncation`.
pub fn schmidt_product(d: usize, truncation: u32) -> Result<UniSeries, Error> {
    schmidt_product_guarded(d, truncation, &Guards::default())
}

pub fn schmidt_product_guarded(d: usize, truncation: u32, guards: &Guards) -> Result<UniSeries, Error> {
    let eulerian = eulerian_guarded(d, guards.max_d)?
        .univariate_coeffs_a()
        .expect("E_d(x, 1) involves x only");
    let mut s = UniSeries::one(truncation);
    // factors with n > T are 1 + O(q^{T+1})
    for n in 1..=truncation {
        let mut factor = vec![BigInt::from(0); truncation as usize + 1];
        for (k, c) in eulerian.iter().enumerate() {
            let e = k * n as usize;
            if e <= truncation as usize {
                factor[e] += c;
            }
        }
        s = s.mul_coeffs(&factor);
        for _ in 0..=d {
            s.div_one_minus(n)?;
        }
    }
    Ok(s)
}

/// `prod_{n>=1} (1 + q^{3n-1}) / (1 - q^n)` through `q^truncation`.
pub fn apr_product(truncation: u32) -> UniSeries {
    let mut s = UniSeries::one(truncation);
    for n in 1..=truncation {
        s.mul_one_plus(3 * n - 1);
        s.div_one_minus(n).expect("n >= 1");
    }
    s
}

/// `prod_{n>=1} F(q^{(n-1)(d+1)+1}, q) / (1 - q^n)` for a given two-variable
/// polynomial `F`.
pub fn infinite_diamond_product(f: &Poly2, d: usize, truncation: u32) -> UniSeries {
    let mut s = UniSeries::one(truncation);
    for n in 1..=truncation as usize {
        let q0 = (n - 1) * (d + 1) + 1;
        let mut factor = vec![BigInt::from(0); truncation as usize + 1];
        for (m, c) in f.terms() {
            let e = m.exp_a as usize * q0 + m.exp_b as usize;
            if e <= truncation as usize {
                factor[e] += c;
            }
        }
        s = s.mul_coeffs(&factor);
        s.div_one_minus(n as u32).expect("n >= 1");
    }
    s
}

/// The infinite `d`-fold diamond product with `F_d` from the recursion.
pub fn djsw_product(d: usize, truncation: u32) -> Result<UniSeries, Error> {
    let f = djsw_recursion(d)?;
    Ok(infinite_diamond_product(&f, d, truncation))
}

/// The same product with `E_d` (by enumeration) in place of `F_d`.
pub fn euler_mahonian_product(d: usize, truncation: u32, guards: &Guards) -> Result<UniSeries, Error> {
    let e = euler_mahonian_guarded(d, guards.max_d)?;
    Ok(infinite_diamond_product(&e, d, truncation))
}
