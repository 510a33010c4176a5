use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::render::render_coefficients;
use super::SeriesError;

/// Power series in one variable `q`, known through `q^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(truncation: u32) -> Self {
        UniSeries {
            coeffs: vec![BigInt::zero(); truncation as usize + 1],
        }
    }

    pub fn one(truncation: u32) -> Self {
        let mut s = UniSeries::zero(truncation);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    /// Takes `coeffs[n]` as the coefficient of `q^n`; the truncation is
    /// `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least q^0");
        UniSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn truncation(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Coefficients as `i64`; panics if one does not fit. Test convenience.
    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().expect("coefficient fits in i64"))
            .collect()
    }

    /// Keeps `q^0..=q^t`.
    pub fn truncate(&self, t: u32) -> UniSeries {
        assert!(t <= self.truncation());
        UniSeries::from_coeffs(self.coeffs[..=t as usize].to_vec())
    }

    pub fn mul(&self, other: &UniSeries) -> Result<UniSeries, SeriesError> {
        if self.truncation() != other.truncation() {
            return Err(SeriesError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, c1) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, c2) in other.coeffs[..n - i].iter().enumerate() {
                if !c2.is_zero() {
                    out[i + j] += c1 * c2;
                }
            }
        }
        Ok(UniSeries { coeffs: out })
    }

    /// Multiplies by a polynomial given by its coefficient list.
    pub fn mul_coeffs(&self, poly: &[BigInt]) -> UniSeries {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, c1) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, c2) in poly.iter().enumerate().take(n - i) {
                if !c2.is_zero() {
                    out[i + j] += c1 * c2;
                }
            }
        }
        UniSeries { coeffs: out }
    }

    /// Multiplies in place by `1 / (1 - q^k)`.
    pub fn div_one_minus(&mut self, k: u32) -> Result<(), SeriesError> {
        if k == 0 {
            return Err(SeriesError::NonInvertibleFactor(super::Monomial2::ONE));
        }
        let k = k as usize;
        for n in k..self.coeffs.len() {
            let add = self.coeffs[n - k].clone();
            self.coeffs[n] += add;
        }
        Ok(())
    }

    /// Multiplies in place by `1 + q^k`.
    pub fn mul_one_plus(&mut self, k: u32) {
        let k = k as usize;
        if k == 0 {
            self.coeffs.iter_mut().for_each(|c| *c *= 2);
            return;
        }
        for n in (k..self.coeffs.len()).rev() {
            let add = self.coeffs[n - k].clone();
            self.coeffs[n] += add;
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First exponent where the two series differ, with both coefficients.
    pub fn first_mismatch(
        &self,
        other: &UniSeries,
    ) -> Result<Option<(usize, BigInt, BigInt)>, SeriesError> {
        if self.truncation() != other.truncation() {
            return Err(SeriesError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (l, r))| l != r)
            .map(|(n, (l, r))| (n, l.clone(), r.clone())))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "truncation": self.truncation(),
            "coefficients": self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_coefficients(&self.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_numbers() {
        let mut s = UniSeries::one(10);
        for k in 1..=10 {
            s.div_one_minus(k).unwrap();
        }
        assert_eq!(s.coeffs_i64(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn one_plus_and_product() {
        let mut s = UniSeries::one(4);
        s.mul_one_plus(1);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coeffs_i64(), vec![1, 2, 1, 0, 0]);
        assert_eq!(sq.to_string(), "1, 2, 1, 0, 0");
        assert!(UniSeries::one(2).div_one_minus(0).is_err());
    }

    #[test]
    fn mul_coeffs_truncates() {
        let s = UniSeries::one(2);
        let p = [1, 1, 1, 1].map(BigInt::from);
        assert_eq!(s.mul_coeffs(&p).coeffs_i64(), vec![1, 1, 1]);
    }
}
