use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::render::{render_terms, terms_json};
use super::{Monomial2, SeriesError};

/// Exact polynomial in two formal variables with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is exact
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<Monomial2, BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly2::monomial(Monomial2::ONE, c)
    }

    pub fn monomial(m: Monomial2, c: impl Into<BigInt>) -> Self {
        let mut p = Poly2::zero();
        p.add_term(m, c.into());
        p
    }

    /// Builds a polynomial from `(exp_a, exp_b, coefficient)` triples,
    /// collecting repeated monomials.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = Poly2::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial2::new(i, j), c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial2, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial2) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial2, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(Monomial2, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn degree_a(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.exp_a).max()
    }

    pub fn degree_b(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.exp_b).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Value at `a = b = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes monomials for both variables: `a^i b^j ↦ a_image^i · b_image^j`.
    pub fn subst(&self, a_image: Monomial2, b_image: Monomial2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, c) in self.terms() {
            out.add_term(a_image.pow(m.exp_a) * b_image.pow(m.exp_b), c.clone());
        }
        out
    }

    /// Sets the second variable to 1, leaving a polynomial in the first.
    pub fn second_to_one(&self) -> Poly2 {
        self.subst(Monomial2::A, Monomial2::ONE)
    }

    /// Sets the first variable to 1, leaving a polynomial in the second.
    pub fn first_to_one(&self) -> Poly2 {
        self.subst(Monomial2::ONE, Monomial2::B)
    }

    pub fn mul_monomial(&self, m: Monomial2) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division by leading terms in the graded-lex order;
    /// when the division is exact this never gets stuck, so any leftover is
    /// reported as [`SeriesError::NonExactDivision`].
    pub fn divide_exact(&self, divisor: &Poly2) -> Result<Poly2, SeriesError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(SeriesError::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = Poly2::zero();
        while let Some((m, c)) = rest.leading_term() {
            let shift = lead_m.quotient_of(m).ok_or(SeriesError::NonExactDivision)?;
            if !(c % lead_c).is_zero() {
                return Err(SeriesError::NonExactDivision);
            }
            let factor = c / lead_c;
            rest = &rest - &(divisor.mul_monomial(shift) * &Poly2::monomial(Monomial2::ONE, factor.clone()));
            quotient.add_term(shift, factor);
        }
        Ok(quotient)
    }

    /// Coefficients of a polynomial in the first variable only, indexed by
    /// exponent. Returns `None` if any term involves the second variable.
    pub fn univariate_coeffs_a(&self) -> Option<Vec<BigInt>> {
        if self.terms.keys().any(|m| m.exp_b != 0) {
            return None;
        }
        let len = self.degree_a().map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); len];
        for (m, c) in self.terms() {
            out[m.exp_a as usize] = c.clone();
        }
        Some(out)
    }

    /// Text rendering with caller-chosen variable names.
    pub fn render(&self, names: [&str; 2]) -> String {
        render_terms(self.terms(), names)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "terms": terms_json(self.terms()) })
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(Monomial2::ONE).is_one()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["a", "b"]))
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;

    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        -&self
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c);
        }
        out
    }
}

impl Sub for Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: Poly2) -> Poly2 {
        &self - &rhs
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1 * m2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl Mul<&Poly2> for Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        &self * rhs
    }
}

impl std::iter::Product for Poly2 {
    fn product<I: Iterator<Item = Poly2>>(iter: I) -> Poly2 {
        iter.fold(Poly2::one(), |acc, p| acc * p)
    }
}

impl std::iter::Sum for Poly2 {
    fn sum<I: Iterator<Item = Poly2>>(iter: I) -> Poly2 {
        iter.fold(Poly2::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> Poly2 {
        Poly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        let one_xy = p(&[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(&one_xy + &Poly2::zero(), one_xy);
        assert!((&one_xy + &p(&[(0, 0, -1), (1, 1, -1)])).is_zero());
        assert_eq!(&one_xy + &one_xy, p(&[(0, 0, 2), (1, 1, 2)]));
    }

    #[test]
    fn mul_examples() {
        let one_xy = p(&[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(&one_xy * &Poly2::one(), one_xy);
        let telescoped = p(&[(0, 0, 1), (0, 1, -1)]) * p(&[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        assert_eq!(telescoped, p(&[(0, 0, 1), (0, 3, -1)]));
        assert_eq!(&one_xy * &one_xy, p(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    #[test]
    fn subst_examples() {
        let one_xy = p(&[(0, 0, 1), (1, 1, 1)]);
        // x -> b, y -> a
        assert_eq!(one_xy.subst(Monomial2::B, Monomial2::A), p(&[(0, 0, 1), (1, 1, 1)]));
        // q0 -> q0*w, w -> w
        assert_eq!(one_xy.subst(Monomial2::new(1, 1), Monomial2::B), p(&[(0, 0, 1), (1, 2, 1)]));
        assert_eq!(Poly2::one().subst(Monomial2::new(3, 1), Monomial2::new(0, 7)), Poly2::one());
    }

    #[test]
    fn subst_recollects_terms() {
        // a + b with a -> b gives 2b
        let q = p(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(q.subst(Monomial2::B, Monomial2::B), p(&[(0, 1, 2)]));
    }

    #[test]
    fn divide_exact_examples() {
        let one_minus_y = p(&[(0, 0, 1), (0, 1, -1)]);
        assert_eq!(
            p(&[(0, 0, 1), (0, 3, -1)]).divide_exact(&one_minus_y).unwrap(),
            p(&[(0, 0, 1), (0, 1, 1), (0, 2, 1)])
        );
        let step = p(&[(0, 0, 1), (1, 2, -1), (0, 1, -1), (1, 1, 1)]);
        assert_eq!(step.divide_exact(&one_minus_y).unwrap(), p(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(
            p(&[(0, 0, 1), (0, 1, 1)]).divide_exact(&one_minus_y),
            Err(SeriesError::NonExactDivision)
        );
        assert_eq!(one_minus_y.divide_exact(&Poly2::zero()), Err(SeriesError::DivisionByZero));
    }

    #[test]
    fn divide_exact_rejects_non_integral_quotient() {
        let two = Poly2::constant(2);
        assert_eq!(Poly2::constant(3).divide_exact(&two), Err(SeriesError::NonExactDivision));
        assert_eq!(Poly2::constant(6).divide_exact(&two).unwrap(), Poly2::constant(3));
    }

    #[test]
    fn degrees_and_evaluation() {
        let e3 = p(&[(0, 0, 1), (1, 1, 2), (1, 2, 2), (2, 3, 1)]);
        assert_eq!(e3.degree_a(), Some(2));
        assert_eq!(e3.degree_b(), Some(3));
        assert_eq!(e3.eval_at_ones(), BigInt::from(6));
        assert_eq!(e3.second_to_one(), p(&[(0, 0, 1), (1, 0, 4), (2, 0, 1)]));
        assert_eq!(Poly2::zero().degree_a(), None);
    }

    #[test]
    fn coefficients_are_unbounded() {
        let big = Poly2::constant(i64::MAX);
        let sq = &big * &big;
        let expected: BigInt = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(Monomial2::ONE), expected);
    }
}
