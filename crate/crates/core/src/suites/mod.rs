//! End-to-end identity suites with JSON reports.

mod cauchy;
mod eigen;
mod pieri;
mod structure;

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Field, MultiPoly, TruncSeries};
use crate::dual::RationalFn;
use crate::error::Result;
use crate::operators::EvalCheck;

pub use cauchy::{verify_cauchy_qt, verify_hl, verify_jack_cauchy, verify_one_row_gf, verify_whittaker};
pub use eigen::{verify_eigen, EvalMode};
pub use pieri::{verify_finite_pieri, verify_skew_pieri};
pub use structure::{
    verify_binomial_suite, verify_biorthogonality, verify_dual_oracle, verify_interpolation, verify_macdonald_oracle,
    verify_tq_determinant,
};

/// Outcome of one suite, or of a group of suites.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub passed: bool,
    pub checks: usize,
    pub counterexample: Option<Value>,
    pub millis: u128,
    pub children: Vec<SuiteReport>,
}

impl SuiteReport {
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "suite": self.suite,
            "params": self.params,
            "status": if self.passed { "pass" } else { "fail" },
            "checks": self.checks,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.clone();
        }
        if timing {
            v["millis"] = json!(self.millis);
        }
        if !self.children.is_empty() {
            v["suites"] = Value::Array(self.children.iter().map(|c| c.to_json(timing)).collect());
        }
        v
    }

    /// Combines reports; the first failing child supplies the counterexample.
    pub fn group(name: &str, params: Value, children: Vec<SuiteReport>, millis: u128) -> Self {
        let failed = children.iter().find(|c| !c.passed);
        SuiteReport {
            suite: name.to_string(),
            params,
            passed: failed.is_none(),
            checks: children.iter().map(|c| c.checks).sum(),
            counterexample: failed.map(|c| json!({"suite": c.suite, "detail": c.counterexample})),
            millis,
            children,
        }
    }
}

/// Accumulates checks for one suite and keeps the first failure.
pub(crate) struct Run {
    suite: String,
    params: Value,
    checks: usize,
    failure: Option<Value>,
    start: Instant,
}

impl Run {
    pub fn new(suite: &str, params: Value) -> Self {
        Run { suite: suite.to_string(), params, checks: 0, failure: None, start: Instant::now() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    pub fn check(&mut self, label: &str, ok: bool) {
        self.record(ok, || json!({"check": label}));
    }

    pub fn check_series<F: Field>(&mut self, label: &str, lhs: &TruncSeries<F>, rhs: &TruncSeries<F>, names: &[String]) {
        match lhs.first_difference(rhs) {
            None => self.record(true, || Value::Null),
            Some((e, a, b)) => self.record(false, || coefficient_failure(label, &e, names, a.to_json(), b.to_json())),
        }
    }

    pub fn check_poly<F: Field>(&mut self, label: &str, lhs: &MultiPoly<F>, rhs: &MultiPoly<F>, names: &[String]) {
        let d = lhs.sub(rhs);
        let first = d.terms().next().map(|(e, _)| e.clone());
        match first {
            None => self.record(true, || Value::Null),
            Some(e) => self.record(false, || {
                coefficient_failure(label, &e, names, lhs.coeff(&e).to_json(), rhs.coeff(&e).to_json())
            }),
        }
    }

    /// Cross-multiplied comparison; reports the first differing coefficient
    /// of `num_l * den_r - num_r * den_l`.
    pub fn check_rational<F: Field>(
        &mut self,
        label: &str,
        lhs: &RationalFn<F>,
        rhs: &RationalFn<F>,
        names: &[String],
    ) {
        let a = lhs.numerator().mul(&rhs.den_poly());
        let b = rhs.numerator().mul(&lhs.den_poly());
        self.check_poly(label, &a, &b, names);
    }

    pub fn check_scalar<F: Field>(&mut self, label: &str, lhs: &F, rhs: &F) {
        self.record(lhs.equals(rhs), || json!({"check": label, "lhs": lhs.to_json(), "rhs": rhs.to_json()}));
    }

    pub fn check_eval(&mut self, label: &str, r: &EvalCheck) {
        self.record(r.passed(), || {
            let f = r.failure.as_ref().expect("failed check has a failure");
            json!({
                "check": label,
                "point": f.point.iter().map(|x| x.to_json()).collect::<Vec<_>>(),
                "lhs": f.lhs.to_json(),
                "rhs": f.rhs.to_json(),
            })
        });
    }

    pub fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            params: self.params,
            passed: self.failure.is_none(),
            checks: self.checks,
            counterexample: self.failure,
            millis: self.start.elapsed().as_millis(),
            children: Vec::new(),
        }
    }
}

fn coefficient_failure(label: &str, e: &[u32], names: &[String], lhs: Value, rhs: Value) -> Value {
    let monomial: Vec<Value> =
        e.iter().enumerate().filter(|(_, k)| **k > 0).map(|(i, k)| json!([names.get(i).cloned().unwrap_or_default(), k])).collect();
    json!({"check": label, "exponent": e, "monomial": monomial, "lhs": lhs, "rhs": rhs})
}

/// Moves the variables of `p` to `offset..` in an `nv`-variable ring.
pub(crate) fn embed<F: Field>(p: &MultiPoly<F>, offset: usize, nv: usize) -> MultiPoly<F> {
    let perm: Vec<usize> = (0..p.nvars()).map(|i| offset + i).collect();
    p.rename_vars(&perm, nv)
}

/// `x1..xN, y1..yK` followed by any extra names.
pub(crate) fn xy_names(n: usize, k: usize, extra: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    v.extend((1..=k).map(|j| format!("y{j}")));
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

/// Named parameter sets for `verify all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Small parameters; seconds.
    Quick,
    /// N, K <= 3, |mu| <= 5, cutoffs <= 5.
    Desk,
}

/// Every suite at the given profile, run in parallel; the report order is fixed.
pub fn verify_all(profile: Profile, seed: u64, points: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    type Job = Box<dyn Fn() -> Result<SuiteReport> + Send + Sync>;
    let desk = profile == Profile::Desk;
    let jobs: Vec<Job> = vec![
        Box::new(move || verify_macdonald_oracle(3, if desk { 5 } else { 3 })),
        Box::new(move || verify_interpolation(3, if desk { 5 } else { 3 }, 3)),
        Box::new(move || verify_tq_determinant(3, if desk { 4 } else { 2 })),
        Box::new(move || verify_cauchy_qt(1, 1, 5, 5)),
        Box::new(move || verify_cauchy_qt(1, 2, 5, 5)),
        Box::new(move || verify_cauchy_qt(2, 2, if desk { 5 } else { 3 }, if desk { 5 } else { 3 })),
        Box::new(move || verify_one_row_gf(3, 5)),
        Box::new(move || verify_eigen(2, if desk { 4 } else { 2 }, seed, points, EvalMode::Auto)),
        Box::new(move || verify_eigen(3, if desk { 3 } else { 1 }, seed, points, EvalMode::Auto)),
        Box::new(move || verify_dual_oracle(3, if desk { 4 } else { 2 }, if desk { 4 } else { 2 })),
        Box::new(move || verify_skew_pieri(2, 2, 4)),
        Box::new(move || verify_finite_pieri(2, 2, 2)),
        Box::new(move || verify_jack_cauchy(2, if desk { 4 } else { 2 })),
        Box::new(move || verify_whittaker(2, 2, 4)),
        Box::new(move || verify_hl(2, 2, 4, seed, points)),
        Box::new(move || verify_biorthogonality(if desk { 4 } else { 2 })),
        Box::new(move || verify_binomial_suite(2, if desk { 4 } else { 2 })),
    ];
    let mut jobs = jobs;
    if desk {
        jobs.push(Box::new(|| verify_cauchy_qt(3, 3, 5, 5)));
        jobs.push(Box::new(|| verify_jack_cauchy(3, 4)));
        jobs.push(Box::new(|| verify_whittaker(3, 3, 5)));
        jobs.push(Box::new(move || verify_hl(3, 3, 5, seed, points)));
    }
    let reports: Vec<Result<SuiteReport>> = jobs.par_iter().map(|j| j()).collect();
    let reports = reports.into_iter().collect::<Result<Vec<_>>>()?;
    let name = match profile {
        Profile::Quick => "quick",
        Profile::Desk => "desk",
    };
    Ok(SuiteReport::group("all", json!({"profile": name, "seed": seed, "points": points}), reports, start.elapsed().as_millis()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BlockSpec, Rat};

    #[test]
    fn failure_carries_coefficient_pair() {
        let spec = BlockSpec::single(2, 2);
        let a = TruncSeries::from_poly(MultiPoly::<Rat>::var(2, 1), spec.clone());
        let b = TruncSeries::zero(spec);
        let mut run = Run::new("demo", json!({"n": 1}));
        run.check_series("first", &a, &a, &xy_names(1, 1, &[]));
        run.check_series("second", &a, &b, &xy_names(1, 1, &[]));
        let r = run.finish();
        assert!(!r.passed);
        assert_eq!(r.checks, 2);
        let c = r.counterexample.unwrap();
        assert_eq!(c["check"], "second");
        assert_eq!(c["exponent"], json!([0, 1]));
        assert_eq!(c["monomial"], json!([["y1", 1]]));
        assert_eq!((c["lhs"].clone(), c["rhs"].clone()), (json!("1"), json!("0")));
    }

    #[test]
    fn timing_is_optional_in_json() {
        let ok = Run::new("a", json!({})).finish();
        let g = SuiteReport::group("all", json!({}), vec![ok], 3);
        assert_eq!(g.to_json(true)["millis"], 3);
        assert!(g.to_json(false).get("millis").is_none());
        assert_eq!(g.to_json(false)["suites"][0]["status"], "pass");
    }

    #[test]
    fn trivial_cutoffs_pass() {
        assert!(verify_cauchy_qt(1, 1, 0, 0).unwrap().passed);
        assert!(verify_one_row_gf(1, 0).unwrap().passed);
        assert!(verify_jack_cauchy(1, 0).unwrap().passed);
        assert!(verify_whittaker(1, 1, 0).unwrap().passed);
    }

    #[test]
    fn small_instances_pass() {
        assert!(verify_cauchy_qt(1, 1, 3, 3).unwrap().passed);
        assert!(verify_one_row_gf(3, 4).unwrap().passed);
        assert!(verify_skew_pieri(1, 0, 3).unwrap().passed);
        assert!(verify_finite_pieri(1, 1, 0).unwrap().passed);
        assert!(verify_jack_cauchy(1, 3).unwrap().passed);
        assert!(verify_hl(1, 1, 2, 7, 2).unwrap().passed);
    }
}
