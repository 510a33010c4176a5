use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::Monomial2;

/// Renders terms as `c*a^i*b^j` joined by ` + `, dropping unit exponents and
/// unit coefficients. Negative coefficients are joined with ` - `.
pub(crate) fn render_terms<'a>(
    terms: impl Iterator<Item = (Monomial2, &'a BigInt)>,
    names: [&str; 2],
) -> String {
    let mut out = String::new();
    for (idx, (m, c)) in terms.enumerate() {
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&m.render(names));
        } else {
            out.push_str(&format!("{magnitude}*{}", m.render(names)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `[i, j, "coefficient"]` triples in iteration order.
pub(crate) fn terms_json<'a>(terms: impl Iterator<Item = (Monomial2, &'a BigInt)>) -> Value {
    Value::Array(
        terms
            .map(|(m, c)| json!([m.exp_a, m.exp_b, c.to_string()]))
            .collect(),
    )
}

/// Comma-separated coefficient list, as used for univariate series.
pub(crate) fn render_coefficients(coeffs: &[BigInt]) -> String {
    coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
