use super::{Monomial2, Poly2, SeriesError, TruncSeries2};

/// `numerator / prod (1 - m)` over a list of denominator monomials.
///
/// Every denominator monomial has total degree at least one, so each factor
/// is a unit in the ring of formal power series.
#[derive(Clone, Debug)]
pub struct RationalExpr {
    numerator: Poly2,
    denominator: Vec<Monomial2>,
}

impl RationalExpr {
    pub fn new(numerator: Poly2, denominator: Vec<Monomial2>) -> Result<Self, SeriesError> {
        if let Some(m) = denominator.iter().find(|m| m.total_degree() == 0) {
            return Err(SeriesError::NonInvertibleFactor(*m));
        }
        Ok(RationalExpr {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Monomial2] {
        &self.denominator
    }

    /// Expands to total degree `T`. The numerator is truncated first, then
    /// each geometric factor is applied; factor order does not matter.
    pub fn expand(&self, truncation: u32) -> TruncSeries2 {
        let mut s = TruncSeries2::from_poly(&self.numerator, truncation);
        for &m in &self.denominator {
            s.div_one_minus(m).expect("validated at construction");
        }
        s
    }

    /// Sets the first variable to 1 in numerator and denominator.
    pub fn first_to_one(&self) -> Result<RationalExpr, SeriesError> {
        RationalExpr::new(
            self.numerator.first_to_one(),
            self.denominator
                .iter()
                .map(|m| Monomial2::new(0, m.exp_b))
                .collect(),
        )
    }

    /// Denominator monomials sorted, so equal factor multisets compare equal.
    pub fn sorted_denominator(&self) -> Vec<Monomial2> {
        let mut d = self.denominator.clone();
        d.sort();
        d
    }
}

/// Equality as expressions: same numerator and same denominator multiset.
impl PartialEq for RationalExpr {
    fn eq(&self, other: &Self) -> bool {
        self.numerator == other.numerator && self.sorted_denominator() == other.sorted_denominator()
    }
}

impl Eq for RationalExpr {}
