use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::render::{render_terms, terms_json};
use super::{Monomial2, Poly2, SeriesError, UniSeries};

/// Bivariate formal power series truncated at total degree `T`.
///
/// Coefficients are held densely over the triangle `exp_a + exp_b <= T`,
/// laid out in graded-lex order, so index order is print order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries2 {
    truncation: u32,
    coeffs: Vec<BigInt>,
}

fn index(m: Monomial2) -> usize {
    let deg = m.total_degree() as usize;
    deg * (deg + 1) / 2 + m.exp_a as usize
}

fn monomial_at(idx: usize) -> Monomial2 {
    // largest deg with deg*(deg+1)/2 <= idx
    let mut deg = ((((8 * idx + 1) as f64).sqrt() - 1.0) / 2.0) as usize;
    while (deg + 1) * (deg + 2) / 2 <= idx {
        deg += 1;
    }
    while deg * (deg + 1) / 2 > idx {
        deg -= 1;
    }
    let a = idx - deg * (deg + 1) / 2;
    Monomial2::new(a as u32, (deg - a) as u32)
}

impl TruncSeries2 {
    pub fn zero(truncation: u32) -> Self {
        let t = truncation as usize;
        TruncSeries2 {
            truncation,
            coeffs: vec![BigInt::zero(); (t + 1) * (t + 2) / 2],
        }
    }

    pub fn one(truncation: u32) -> Self {
        let mut s = TruncSeries2::zero(truncation);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    /// The polynomial `p` with every term above total degree `T` dropped.
    pub fn from_poly(p: &Poly2, truncation: u32) -> Self {
        let mut s = TruncSeries2::zero(truncation);
        for (m, c) in p.terms() {
            if s.in_range(m) {
                s.coeffs[index(m)] += c;
            }
        }
        s
    }

    pub fn from_terms<C: Into<BigInt>>(
        truncation: u32,
        terms: impl IntoIterator<Item = (u32, u32, C)>,
    ) -> Self {
        TruncSeries2::from_poly(&Poly2::from_terms(terms), truncation)
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn in_range(&self, m: Monomial2) -> bool {
        m.total_degree() <= u64::from(self.truncation)
    }

    /// Coefficient of `m`. Panics if `m` lies beyond the truncation, where the
    /// coefficient is unknown.
    pub fn coeff(&self, m: Monomial2) -> &BigInt {
        assert!(
            self.in_range(m),
            "coefficient of {m} is beyond truncation {}",
            self.truncation
        );
        &self.coeffs[index(m)]
    }

    /// Adds `c` to the coefficient of `m`; silently ignored beyond the truncation.
    pub fn add_to(&mut self, m: Monomial2, c: &BigInt) {
        if self.in_range(m) {
            self.coeffs[index(m)] += c;
        }
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial2, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (monomial_at(i), c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_truncation(&self, other: &TruncSeries2) -> Result<(), SeriesError> {
        if self.truncation == other.truncation {
            Ok(())
        } else {
            Err(SeriesError::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            })
        }
    }

    pub fn add(&self, other: &TruncSeries2) -> Result<TruncSeries2, SeriesError> {
        self.check_truncation(other)?;
        let mut out = self.clone();
        for (dst, src) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src;
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &TruncSeries2) -> Result<(), SeriesError> {
        self.check_truncation(other)?;
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst += src;
        }
        Ok(())
    }

    pub fn mul(&self, other: &TruncSeries2) -> Result<TruncSeries2, SeriesError> {
        self.check_truncation(other)?;
        let mut out = TruncSeries2::zero(self.truncation);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let m = m1 * m2;
                if out.in_range(m) {
                    out.coeffs[index(m)] += c1 * c2;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a polynomial, truncating the result.
    pub fn mul_poly(&self, p: &Poly2) -> TruncSeries2 {
        self.mul(&TruncSeries2::from_poly(p, self.truncation))
            .expect("same truncation")
    }

    /// Multiplies in place by `1 / (1 - m) = sum_k m^k`.
    pub fn div_one_minus(&mut self, m: Monomial2) -> Result<(), SeriesError> {
        if m.total_degree() == 0 {
            return Err(SeriesError::NonInvertibleFactor(m));
        }
        // ascending graded order: the source X/m has lower degree and is final
        for idx in 0..self.coeffs.len() {
            let target = monomial_at(idx);
            if let Some(src) = m.quotient_of(target) {
                let add = self.coeffs[index(src)].clone();
                if !add.is_zero() {
                    self.coeffs[idx] += add;
                }
            }
        }
        Ok(())
    }

    /// Multiplies in place by `1 - m`.
    pub fn mul_one_minus(&mut self, m: Monomial2) {
        if m.is_one() {
            self.coeffs.iter_mut().for_each(|c| *c = BigInt::zero());
            return;
        }
        // descending order so every source is read before it is modified
        for idx in (0..self.coeffs.len()).rev() {
            let target = monomial_at(idx);
            if let Some(src) = m.quotient_of(target) {
                let sub = self.coeffs[index(src)].clone();
                self.coeffs[idx] -= sub;
            }
        }
    }

    /// The `a = b = q` specialization: coefficient of `q^n` is the sum of all
    /// coefficients of total degree `n`.
    pub fn specialize_univariate(&self) -> UniSeries {
        let t = self.truncation as usize;
        let mut out = vec![BigInt::zero(); t + 1];
        for (m, c) in self.terms() {
            out[m.total_degree() as usize] += c;
        }
        UniSeries::from_coeffs(out)
    }

    /// Coefficients of `b^0..=b^T` along the `a = 0` edge.
    pub fn b_axis(&self) -> UniSeries {
        let t = self.truncation;
        UniSeries::from_coeffs((0..=t).map(|j| self.coeff(Monomial2::new(0, j)).clone()).collect())
    }

    /// Sets the first variable to 1 and keeps `b^0..=b^n_max`.
    ///
    /// Only meaningful when every term with `b`-degree at most `n_max` lies
    /// inside the truncation; the caller picks `T` large enough.
    pub fn first_to_one_upto(&self, n_max: u32) -> UniSeries {
        assert!(n_max <= self.truncation);
        let mut out = vec![BigInt::zero(); n_max as usize + 1];
        for (m, c) in self.terms() {
            if m.exp_b <= n_max {
                out[m.exp_b as usize] += c;
            }
        }
        UniSeries::from_coeffs(out)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First monomial (graded-lex) where the two series differ, with both
    /// coefficients.
    pub fn first_mismatch(
        &self,
        other: &TruncSeries2,
    ) -> Result<Option<(Monomial2, BigInt, BigInt)>, SeriesError> {
        self.check_truncation(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (l, r))| l != r)
            .map(|(i, (l, r))| (monomial_at(i), l.clone(), r.clone())))
    }

    pub fn to_poly(&self) -> Poly2 {
        let mut p = Poly2::zero();
        for (m, c) in self.terms() {
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn render(&self, names: [&str; 2]) -> String {
        render_terms(self.terms(), names)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "truncation": self.truncation,
            "terms": terms_json(self.terms()),
        })
    }
}

impl fmt::Display for TruncSeries2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["a", "b"]))
    }
}
