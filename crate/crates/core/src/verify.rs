//! Verification targets: each runs two or three independent computations of
//! the same generating function and reports the first disagreement.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::diamonds::{
    apr_product, djsw_product, euler_mahonian_product, multifold_rational, schmidt_closed_guarded,
    schmidt_product_guarded, sigma_rational,
};
use crate::oracle::{enumerate_diamonds, enumerate_infinite_univariate, enumerate_ppartitions, random_corpus, schmidt_oracle};
use crate::permstat::verify_theorem1;
use crate::poset::{build_diamond_poset, stanley_sigma, DiamondSpec};
use crate::series::{TruncSeries2, UniSeries};
use crate::{Error, Guards};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first coefficient where two computations disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    /// Rendered monomial, e.g. `a^2*b` or `q^5`.
    pub monomial: String,
    pub left: String,
    pub right: String,
    pub left_coefficient: String,
    pub right_coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub target: String,
    pub parameters: BTreeMap<String, Value>,
    pub truncation: Option<u32>,
    pub status: Status,
    pub checks: Vec<Check>,
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Multi-line human-readable summary.
    pub fn render_text(&self) -> String {
        let mut out = format!("verify {}:", self.target);
        for (k, v) in &self.parameters {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        for check in &self.checks {
            let tag = match check.status {
                Status::Pass => "ok  ",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("  [{tag}] {}\n", check.name));
        }
        if let Some(m) = &self.mismatch {
            out.push_str(&format!(
                "  first mismatch in `{}` at {}: {} = {}, {} = {}\n",
                m.check, m.monomial, m.left, m.left_coefficient, m.right, m.right_coefficient
            ));
        }
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        out.push_str(&format!("{status} ({} ms)", self.elapsed_ms));
        out
    }
}

/// Accumulates checks for one report; only the first mismatch is kept.
struct Recorder {
    checks: Vec<Check>,
    mismatch: Option<Mismatch>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checks: Vec::new(),
            mismatch: None,
        }
    }

    fn record(&mut self, name: String, mismatch: Option<Mismatch>) {
        let status = if mismatch.is_some() { Status::Fail } else { Status::Pass };
        self.checks.push(Check { name, status });
        if self.mismatch.is_none() {
            self.mismatch = mismatch;
        }
    }

    fn bivariate(&mut self, left: (&str, &TruncSeries2), right: (&str, &TruncSeries2)) -> Result<(), Error> {
        let name = format!("{} = {}", left.0, right.0);
        let mismatch = left.1.first_mismatch(right.1)?.map(|(m, l, r)| Mismatch {
            check: name.clone(),
            monomial: m.to_string(),
            left: left.0.to_string(),
            right: right.0.to_string(),
            left_coefficient: l.to_string(),
            right_coefficient: r.to_string(),
        });
        self.record(name, mismatch);
        Ok(())
    }

    fn univariate(&mut self, left: (&str, &UniSeries), right: (&str, &UniSeries)) -> Result<(), Error> {
        let name = format!("{} = {}", left.0, right.0);
        let mismatch = left.1.first_mismatch(right.1)?.map(|(n, l, r)| Mismatch {
            check: name.clone(),
            monomial: format!("q^{n}"),
            left: left.0.to_string(),
            right: right.0.to_string(),
            left_coefficient: l.to_string(),
            right_coefficient: r.to_string(),
        });
        self.record(name, mismatch);
        Ok(())
    }

    /// A yes/no property with no coefficient to point at.
    fn property(&mut self, name: &str, holds: bool) {
        let mismatch = (!holds).then(|| Mismatch {
            check: name.to_string(),
            monomial: String::new(),
            left: "expected".into(),
            right: "observed".into(),
            left_coefficient: "true".into(),
            right_coefficient: "false".into(),
        });
        self.record(name.to_string(), mismatch);
    }

    fn finish(
        self,
        target: &str,
        parameters: BTreeMap<String, Value>,
        truncation: Option<u32>,
        details: Option<Value>,
        started: Instant,
    ) -> VerifyReport {
        VerifyReport {
            command: String::new(),
            target: target.to_string(),
            parameters,
            truncation,
            status: if self.mismatch.is_some() { Status::Fail } else { Status::Pass },
            checks: self.checks,
            mismatch: self.mismatch,
            details,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `F_d = E_d` for every `d <= d_max`.
pub fn theorem1(d_max: usize, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let report = verify_theorem1(d_max, guards.max_d)?;
    let mut rec = Recorder::new();
    for row in &report.rows {
        let name = format!("F_{} = E_{}", row.d, row.d);
        let mismatch = row.first_difference.as_ref().map(|(i, j, l, r)| Mismatch {
            check: name.clone(),
            monomial: crate::series::Monomial2::new(*i, *j).render(crate::permstat::XY),
            left: "recursion".into(),
            right: "enumeration".into(),
            left_coefficient: l.clone(),
            right_coefficient: r.clone(),
        });
        rec.record(name, mismatch);
    }
    let details = serde_json::to_value(&report.rows).expect("rows serialize");
    Ok(rec.finish("theorem1", params(&[("dmax", json!(d_max))]), None, Some(details), started))
}

/// Closed formula = linear-extension sum = enumeration for a diamond.
fn diamond_three_way(
    target: &str,
    spec: &DiamondSpec,
    closed: TruncSeries2,
    truncation: u32,
    parameters: BTreeMap<String, Value>,
    guards: &Guards,
    started: Instant,
) -> Result<VerifyReport, Error> {
    let (poset, tags) = build_diamond_poset(spec);
    let stanley = stanley_sigma(&poset, &tags, truncation, guards.max_poset_size)?;
    let oracle = enumerate_diamonds(spec, truncation);
    let mut rec = Recorder::new();
    rec.bivariate(("closed", &closed), ("stanley", &stanley))?;
    rec.bivariate(("closed", &closed), ("oracle", &oracle))?;
    rec.property(
        "coefficients nonnegative",
        closed.has_nonnegative_coefficients() && oracle.has_nonnegative_coefficients(),
    );
    Ok(rec.finish(target, parameters, Some(truncation), None, started))
}

/// Uniform `d`-fold diamond of length `M`.
pub fn main_theorem(d: usize, length: usize, truncation: u32, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let spec = DiamondSpec::uniform(d, length)?;
    let closed = sigma_rational(d, length, guards)?.expand(truncation);
    let parameters = params(&[("d", json!(d)), ("M", json!(length))]);
    diamond_three_way("main", &spec, closed, truncation, parameters, guards, started)
}

/// Multifold diamond; for uniform sequences also checks that the multifold
/// expression is identical to the uniform one.
pub fn multifold(spec: &DiamondSpec, truncation: u32, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let rational = multifold_rational(spec, guards)?;
    let closed = rational.expand(truncation);
    let parameters = params(&[("folds", json!(spec.folds()))]);
    let mut report = diamond_three_way("multifold", spec, closed, truncation, parameters, guards, started)?;
    if let Some(d) = spec.uniform_fold() {
        let uniform = sigma_rational(d, spec.length(), guards)?;
        let same = uniform == rational;
        report.checks.push(Check {
            name: "multifold expression = uniform expression".into(),
            status: if same { Status::Pass } else { Status::Fail },
        });
        if !same && report.mismatch.is_none() {
            report.status = Status::Fail;
            report.mismatch = Some(Mismatch {
                check: "multifold expression = uniform expression".into(),
                monomial: String::new(),
                left: "multifold".into(),
                right: "uniform".into(),
                left_coefficient: rational.numerator().to_string(),
                right_coefficient: uniform.numerator().to_string(),
            });
        }
    }
    Ok(report)
}

/// Schmidt-type series: finite closed form, link-sum enumeration, and (for
/// `q^0..q^min(M,T)`) the infinite product.
pub fn schmidt(d: usize, length: usize, truncation: u32, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let spec = DiamondSpec::uniform(d, length)?;
    let closed = schmidt_closed_guarded(d, length, truncation, guards)?;
    let oracle = schmidt_oracle(&spec, truncation);
    let stable = truncation.min(length as u32);
    let product = schmidt_product_guarded(d, truncation, guards)?.truncate(stable);
    let mut rec = Recorder::new();
    rec.univariate(("closed", &closed), ("oracle", &oracle))?;
    rec.univariate(("closed (stable part)", &closed.truncate(stable)), ("product", &product))?;
    let parameters = params(&[("d", json!(d)), ("M", json!(length))]);
    Ok(rec.finish("schmidt", parameters, Some(truncation), None, started))
}

/// The linear-extension formula against enumeration on a seeded random corpus.
pub fn stanley_corpus(
    seed: u64,
    count: usize,
    max_size: usize,
    truncation: u32,
    guards: &Guards,
) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let corpus = random_corpus(seed, count, max_size);
    let mut rec = Recorder::new();
    let mut failures = 0usize;
    for (idx, (poset, tags)) in corpus.iter().enumerate() {
        let stanley = stanley_sigma(poset, tags, truncation, guards.max_poset_size)?;
        let oracle = enumerate_ppartitions(poset, tags, truncation)?;
        if stanley != oracle {
            failures += 1;
            rec.bivariate((&format!("stanley[{idx}]"), &stanley), (&format!("oracle[{idx}]"), &oracle))?;
        }
    }
    rec.property(&format!("{count} random posets agree"), failures == 0);
    let parameters = params(&[
        ("seed", json!(seed)),
        ("count", json!(count)),
        ("max_size", json!(max_size)),
    ]);
    Ok(rec.finish("stanley", parameters, Some(truncation), None, started))
}

/// Finite-length diamonds at `a = b = q` stabilize to the infinite series;
/// checked at `M = T` and `M = T + 1`.
fn stabilization(rec: &mut Recorder, d: usize, truncation: u32, reference: (&str, &UniSeries), guards: &Guards) -> Result<(), Error> {
    let length = (truncation as usize).max(1);
    for m in [length, length + 1] {
        let finite = sigma_rational(d, m, guards)?.expand(truncation).specialize_univariate();
        rec.univariate(reference, (&format!("sigma(d={d}, M={m}) at a=b=q"), &finite))?;
    }
    Ok(())
}

/// The plane partition diamond product.
pub fn apr(truncation: u32, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let product = apr_product(truncation);
    let oracle = enumerate_infinite_univariate(2, truncation)?;
    let mut rec = Recorder::new();
    rec.univariate(("apr product", &product), ("oracle", &oracle))?;
    stabilization(&mut rec, 2, truncation, ("apr product", &product), guards)?;
    Ok(rec.finish("apr", BTreeMap::new(), Some(truncation), None, started))
}

/// The infinite `d`-fold product built from the recursion.
pub fn djsw(d: usize, truncation: u32, guards: &Guards) -> Result<VerifyReport, Error> {
    let started = Instant::now();
    let product = djsw_product(d, truncation)?;
    let oracle = enumerate_infinite_univariate(d, truncation)?;
    let via_em = euler_mahonian_product(d, truncation, guards)?;
    let mut rec = Recorder::new();
    rec.univariate(("djsw product", &product), ("oracle", &oracle))?;
    rec.univariate(("djsw product", &product), ("euler-mahonian product", &via_em))?;
    stabilization(&mut rec, d, truncation, ("djsw product", &product), guards)?;
    Ok(rec.finish("djsw-product", params(&[("d", json!(d))]), Some(truncation), None, started))
}
