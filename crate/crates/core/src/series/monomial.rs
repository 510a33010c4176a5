use std::cmp::Ordering;
use std::fmt;

/// A monomial `a^exp_a * b^exp_b` in two formal variables.
///
/// Monomials are ordered graded-lexicographically: first by total degree,
/// then by the exponent of the first variable. This is the canonical
/// order for iteration and printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial2 {
    pub exp_a: u32,
    pub exp_b: u32,
}

impl Monomial2 {
    pub const ONE: Monomial2 = Monomial2 { exp_a: 0, exp_b: 0 };
    pub const A: Monomial2 = Monomial2 { exp_a: 1, exp_b: 0 };
    pub const B: Monomial2 = Monomial2 { exp_a: 0, exp_b: 1 };

    pub const fn new(exp_a: u32, exp_b: u32) -> Self {
        Monomial2 { exp_a, exp_b }
    }

    pub fn total_degree(self) -> u64 {
        u64::from(self.exp_a) + u64::from(self.exp_b)
    }

    pub fn is_one(self) -> bool {
        self.exp_a == 0 && self.exp_b == 0
    }

    /// `self^k`. Panics on exponent overflow.
    pub fn pow(self, k: u32) -> Monomial2 {
        Monomial2 {
            exp_a: self.exp_a.checked_mul(k).expect("exponent overflow"),
            exp_b: self.exp_b.checked_mul(k).expect("exponent overflow"),
        }
    }

    pub fn divides(self, other: Monomial2) -> bool {
        self.exp_a <= other.exp_a && self.exp_b <= other.exp_b
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(self, other: Monomial2) -> Option<Monomial2> {
        self.divides(other).then(|| Monomial2 {
            exp_a: other.exp_a - self.exp_a,
            exp_b: other.exp_b - self.exp_b,
        })
    }

    /// Renders with the given variable names, e.g. `a^2*b`; `1` for the unit.
    pub fn render(self, names: [&str; 2]) -> String {
        let mut parts = Vec::with_capacity(2);
        for (exp, name) in [(self.exp_a, names[0]), (self.exp_b, names[1])] {
            match exp {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}


/// Product of two monomials. Panics on exponent overflow.
impl std::ops::Mul for Monomial2 {
    type Output = Monomial2;

    fn mul(self, other: Monomial2) -> Monomial2 {
        Monomial2 {
            exp_a: self.exp_a.checked_add(other.exp_a).expect("exponent overflow"),
            exp_b: self.exp_b.checked_add(other.exp_b).expect("exponent overflow"),
        }
    }
}
impl Ord for Monomial2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.exp_a.cmp(&other.exp_a))
    }
}

impl PartialOrd for Monomial2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["a", "b"]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let mut ms = vec![
            Monomial2::new(1, 1),
            Monomial2::new(0, 2),
            Monomial2::ONE,
            Monomial2::new(0, 1),
            Monomial2::new(3, 0),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial2::ONE,
                Monomial2::new(0, 1),
                Monomial2::new(0, 2),
                Monomial2::new(1, 1),
                Monomial2::new(3, 0),
            ]
        );
    }

    #[test]
    fn render_omits_unit_exponents() {
        assert_eq!(Monomial2::ONE.to_string(), "1");
        assert_eq!(Monomial2::new(1, 0).to_string(), "a");
        assert_eq!(Monomial2::new(2, 3).to_string(), "a^2*b^3");
        assert_eq!(Monomial2::new(1, 2).render(["x", "y"]), "x*y^2");
    }

    #[test]
    fn pow_and_quotient() {
        let m = Monomial2::new(1, 2);
        assert_eq!(m.pow(3), Monomial2::new(3, 6));
        assert_eq!(m.pow(0), Monomial2::ONE);
        assert_eq!(m.quotient_of(Monomial2::new(2, 2)), Some(Monomial2::new(1, 0)));
        assert_eq!(m.quotient_of(Monomial2::new(2, 1)), None);
    }
}
