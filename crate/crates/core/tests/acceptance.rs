//! Acceptance criteria, one PASS/FAIL line each. Set `ACCEPTANCE_ONLY=1,5`
//! to run a subset.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qtsym::algebra::{MultiPoly, QtParams, ScalarQT};
use qtsym::error::Result;
use qtsym::interp::{hl_a, interp_i};
use qtsym::operators::DEFAULT_SEED;
use qtsym::partitions::partitions_up_to;
use qtsym::suites::{
    verify_biorthogonality, verify_cauchy_qt, verify_dual_oracle, verify_eigen, verify_finite_pieri, verify_hl,
    verify_interpolation, verify_jack_cauchy, verify_macdonald_oracle, verify_one_row_gf, verify_skew_pieri,
    verify_tq_determinant, verify_whittaker, EvalMode, SuiteReport,
};

const POINTS: usize = 5;

struct Outcome {
    passed: bool,
    detail: String,
}

fn reports(rs: Vec<SuiteReport>) -> Outcome {
    let checks: usize = rs.iter().map(|r| r.checks).sum();
    match rs.iter().find(|r| !r.passed) {
        None => Outcome { passed: true, detail: format!("{} suites, {checks} checks", rs.len()) },
        Some(r) => Outcome {
            passed: false,
            detail: format!("{} {} failed: {}", r.suite, r.params, r.counterexample.clone().unwrap_or_default()),
        },
    }
}

fn all(rs: Vec<Result<SuiteReport>>) -> Result<Outcome> {
    Ok(reports(rs.into_iter().collect::<Result<Vec<_>>>()?))
}

fn set_last(f: &MultiPoly<ScalarQT>, v: ScalarQT) -> MultiPoly<ScalarQT> {
    f.substitute_remove(f.nvars() - 1, &v)
}

fn quasi_stability() -> Result<Outcome> {
    let ctx = QtParams::generic();
    let mut checks = 0;
    for n in 2..=3 {
        for mu in partitions_up_to(5, n) {
            let reduced = set_last(&interp_i(&ctx, &mu, n)?, ScalarQT::monomial(1, 0, n as i32 - 1));
            let expected = if mu.len() < n { interp_i(&ctx, &mu, n - 1)? } else { MultiPoly::zero(n - 1) };
            checks += 1;
            if reduced != expected {
                return Ok(Outcome { passed: false, detail: format!("I{mu:?} at N={n}") });
            }
            if mu.size() <= 4 {
                let reduced = set_last(&hl_a(&mu, n)?, ScalarQT::monomial(1, 0, 1 - n as i32));
                let expected = if mu.len() < n { hl_a(&mu, n - 1)? } else { MultiPoly::zero(n - 1) };
                checks += 1;
                if reduced != expected {
                    return Ok(Outcome { passed: false, detail: format!("A^HL{mu:?} at N={n}") });
                }
            }
        }
    }
    Ok(Outcome { passed: true, detail: format!("{checks} checks") })
}

type Criterion = (u32, &'static str, Option<Duration>, fn() -> Result<Outcome>);

fn criteria() -> Vec<Criterion> {
    vec![
        (1, "Macdonald P equals the orthogonalization oracle, |mu| <= 5, N <= 3", Some(Duration::from_secs(60)), || {
            all(vec![verify_macdonald_oracle(3, 5)])
        }),
        (2, "interpolation vanishing and extra vanishing, |mu| <= 5, N <= 3", Some(Duration::from_secs(120)), || {
            all(vec![verify_interpolation(3, 5, 3)])
        }),
        (3, "quasi-stability of I (|mu| <= 5) and A^HL (|mu| <= 4), N <= 3", None, quasi_stability),
        (4, "t=q determinantal forms and sigma-stability, N <= 3, |mu| <= 4", None, || {
            all(vec![verify_tq_determinant(3, 4)])
        }),
        (5, "truncated Cauchy identity, (N,K) in {(1,1),(1,2),(2,2)}, cutoffs (5,5)", Some(Duration::from_secs(300)), || {
            all(vec![verify_cauchy_qt(1, 1, 5, 5), verify_cauchy_qt(1, 2, 5, 5), verify_cauchy_qt(2, 2, 5, 5)])
        }),
        (6, "one-row generating function, N <= 3, cutoff 5", None, || {
            all((1..=3).map(|n| verify_one_row_gf(n, 5)).collect())
        }),
        (7, "eigen-relations, t=q eigenvalues, commutativity and kernel relation", None, || {
            all(vec![
                verify_eigen(1, 4, DEFAULT_SEED, POINTS, EvalMode::Symbolic),
                verify_eigen(2, 4, DEFAULT_SEED, POINTS, EvalMode::Symbolic),
                verify_eigen(3, 3, DEFAULT_SEED, POINTS, EvalMode::Eval),
            ])
        }),
        (8, "duality oracle equals the combinatorial dual, |nu| <= 4, K <= 3, order 4", None, || {
            all(vec![verify_dual_oracle(3, 4, 4)])
        }),
        (9, "skew Pieri (N <= 2, |nu| <= 2, order 4) and finite Pieri (N <= 2, m <= 2)", None, || {
            let mut v = Vec::new();
            for n in 1..=2 {
                v.push(verify_skew_pieri(n, 2, 4));
                for m in 1..=2 {
                    v.push(verify_finite_pieri(n, m, 2));
                }
            }
            all(v)
        }),
        (10, "Jack Cauchy identity, alternative right side, shift and eigen relations", None, || {
            all(vec![verify_jack_cauchy(1, 4), verify_jack_cauchy(2, 4)])
        }),
        (11, "Whittaker and Hall-Littlewood identities, N, K <= 2", None, || {
            let mut v = Vec::new();
            for n in 1..=2 {
                for k in 1..=2 {
                    v.push(verify_whittaker(n, k, 4));
                    v.push(verify_hl(n, k, 4, DEFAULT_SEED, POINTS));
                }
            }
            all(v)
        }),
        (12, "biorthogonality <I_mu, H_nu> = delta, |mu|, |nu| <= 4", None, || all(vec![verify_biorthogonality(4)])),
    ]
}

fn main() -> ExitCode {
    let only: Option<Vec<u32>> =
        std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = 0;
    for (id, name, limit, run) in criteria() {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            continue;
        }
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { passed: false, detail: format!("error: {e}") });
        let elapsed = start.elapsed();
        let in_time = limit.map_or(true, |l| elapsed <= l);
        let ok = outcome.passed && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!(
            "{} criterion {id:>2}: {name} [{}; {:.1}s{budget}]",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
