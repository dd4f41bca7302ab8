//! Property tests for the exact-arithmetic layer and partition combinatorics.

use proptest::prelude::*;

use qtsym::algebra::{
    series_from_product, BlockSpec, CycloFactored, Field, MultiPoly, PochFactor, QtParams, Rat, ScalarKappa, ScalarQT,
    TruncSeries,
};
use qtsym::dual::{DenFactor, RationalFn};
use qtsym::partitions::{horizontal_substrips, is_horizontal_strip, Partition};

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

/// Sums of a few monomials `c q^a t^b`, occasionally divided by `1 - q^a t^b`.
fn scalar_qt() -> impl Strategy<Value = ScalarQT> {
    (prop::collection::vec((small(), -2i32..=2, -2i32..=2), 1..4), prop::option::of((1i32..=2, 0i32..=2))).prop_map(
        |(terms, den)| {
            let mut s = ScalarQT::zero();
            for (c, a, b) in terms {
                s = s.add(&ScalarQT::monomial(c, a, b));
            }
            match den {
                Some((a, b)) => s.div(&ScalarQT::one().sub(&ScalarQT::monomial(1, a, b))).unwrap(),
                None => s,
            }
        },
    )
}

fn scalar_kappa() -> impl Strategy<Value = ScalarKappa> {
    (small(), small(), prop::option::of(small())).prop_map(|(a, b, r)| {
        let k = ScalarKappa::kappa();
        let s = k.scale_i64(a).add(&ScalarKappa::from_i64(b));
        match r {
            Some(r) => s.div(&k.sub(&ScalarKappa::from_i64(r))).unwrap(),
            None => s,
        }
    })
}

fn cyclo() -> impl Strategy<Value = CycloFactored> {
    prop::collection::vec((0i32..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|fs| {
        let mut out = CycloFactored::one();
        for (a, b, e) in fs {
            if (a, b) != (0, 0) {
                out = out.mul(&CycloFactored::factor(a, b, e).unwrap());
            }
        }
        out
    })
}

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n, d))
}

fn poly2() -> impl Strategy<Value = MultiPoly<Rat>> {
    prop::collection::vec((0u32..=3, 0u32..=3, rat()), 0..5)
        .prop_map(|ts| MultiPoly::from_terms(2, ts.into_iter().map(|(a, b, c)| (vec![a, b], c))))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qt_field_axioms(a in scalar_qt(), b in scalar_qt(), c in scalar_qt()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn kappa_field_axioms(a in scalar_kappa(), b in scalar_kappa(), c in scalar_kappa()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn cyclo_expansion_is_a_homomorphism(a in cyclo(), b in cyclo()) {
        prop_assert_eq!(a.mul(&b).to_scalar(), a.to_scalar().mul(&b.to_scalar()));
        prop_assert_eq!(a.div(&b).unwrap().to_scalar(), a.to_scalar().div(&b.to_scalar()).unwrap());
        let ctx = QtParams::numeric(Rat::new(2, 7), Rat::new(-3, 5));
        prop_assert_eq!(a.eval(&ctx).unwrap(), a.to_scalar().eval(&ctx.q, &ctx.t).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar_qt(), b in scalar_qt()) {
        let (q, t) = (Rat::new(5, 3), Rat::new(-2, 9));
        let (Ok(x), Ok(y)) = (a.eval(&q, &t), b.eval(&q, &t)) else { return Ok(()); };
        prop_assert_eq!(a.mul(&b).eval(&q, &t).unwrap(), x.mul(&y));
        prop_assert_eq!(a.add(&b).eval(&q, &t).unwrap(), x.add(&y));
    }

    #[test]
    fn series_product_commutes_and_respects_truncation(a in poly2(), b in poly2()) {
        let spec = BlockSpec::blocks(&[(1, 4), (1, 3)]);
        let low = BlockSpec::blocks(&[(1, 2), (1, 2)]);
        let sa = TruncSeries::from_poly(a.clone(), spec.clone());
        let sb = TruncSeries::from_poly(b.clone(), spec.clone());
        let ab = sa.mul(&sb).unwrap();
        prop_assert_eq!(ab.clone(), sb.mul(&sa).unwrap());
        let lhs = ab.truncate(&low).unwrap();
        let rhs = sa.truncate(&low).unwrap().mul(&sb.truncate(&low).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs.clone());
        prop_assert_eq!(rhs, TruncSeries::from_poly(a.mul(&b), low));
    }

    #[test]
    fn series_reciprocal(a in poly2(), c in rat()) {
        prop_assume!(!c.is_zero());
        let spec = BlockSpec::blocks(&[(1, 4), (1, 4)]);
        let s = TruncSeries::from_poly(a.mul(&MultiPoly::var(2, 0)).add(&MultiPoly::constant(2, c)), spec.clone());
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()).unwrap(), TruncSeries::one(spec));
    }

    #[test]
    fn pochhammer_inversion(a in -2i32..=2, b in -2i32..=2, e0 in 0u32..=2, e1 in 0u32..=2) {
        prop_assume!(e0 + e1 > 0);
        let ctx = QtParams::generic();
        let spec = BlockSpec::blocks(&[(1, 4), (1, 3)]);
        let c = ScalarQT::monomial(1, a, b);
        let f = [PochFactor::new(c.clone(), vec![e0, e1], 1), PochFactor::new(c, vec![e0, e1], -1)];
        prop_assert_eq!(series_from_product(&ctx, &f, &spec).unwrap(), TruncSeries::one(spec));
    }

    #[test]
    fn exact_division_and_evaluation(a in poly2(), b in poly2(), x in rat(), y in rat()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&a), Some(b.clone()));
        let p = [x, y];
        prop_assert_eq!(a.mul(&b).eval(&p).unwrap(), a.eval(&p).unwrap().mul(&b.eval(&p).unwrap()));
    }

    #[test]
    fn rational_functions_evaluate_homomorphically(a in poly2(), b in poly2(), r in rat(), s in rat(), x in rat(), y in rat()) {
        let f = RationalFn::new(a, vec![DenFactor::new(0, r, 1)], None).unwrap();
        let g = RationalFn::new(b, vec![DenFactor::new(1, s, 2)], None).unwrap();
        let p = [x, y];
        if let (Ok(u), Ok(v)) = (f.eval(&p), g.eval(&p)) {
            prop_assert_eq!(f.add(&g).eval(&p).unwrap(), u.add(&v));
            prop_assert_eq!(f.mul(&g).eval(&p).unwrap(), u.mul(&v));
        }
    }

    #[test]
    fn conjugation_is_an_involution(mu in partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn substrips_are_horizontal_strips(mu in partition()) {
        let subs = horizontal_substrips(&mu);
        prop_assert!(subs.contains(&mu));
        for nu in &subs {
            prop_assert!(is_horizontal_strip(&mu, nu));
            prop_assert!(mu.contains(nu));
            // interlacing: mu_{i+1} <= nu_i <= mu_i
            for i in 0..mu.len() {
                prop_assert!(mu.part(i + 1) <= nu.part(i) && nu.part(i) <= mu.part(i));
            }
        }
        let count: u64 = (0..mu.len()).map(|i| (mu.part(i) - mu.part(i + 1)) as u64 + 1).product();
        prop_assert_eq!(subs.len() as u64, count);
    }
}

fn params() -> impl Strategy<Value = (Rat, Rat)> {
    (2i64..=9, 1i64..=9, -9i64..=9, 1i64..=9).prop_filter_map("generic parameters", |(a, b, c, d)| {
        let (q, t) = (Rat::new(a, b), Rat::new(c, d));
        (!t.is_zero() && generic(&q, &t)).then_some((q, t))
    })
}

/// No relation `q^a t^b = 1` with small exponents, so nodes stay distinct.
fn generic(q: &Rat, t: &Rat) -> bool {
    let pow = |x: &Rat, e: i32| {
        let mut r = Rat::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(x);
        }
        if e < 0 { r.inv().unwrap() } else { r }
    };
    (-8..=8).all(|a| (-8..=8).all(|b| (a, b) == (0, 0) || !pow(q, a).mul(&pow(t, b)).is_one()))
}

fn small_partition(n: usize, size: u32) -> impl Strategy<Value = Partition> {
    prop::sample::select(qtsym::partitions::partitions_up_to(size, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn interpolation_vanishes_off_its_node((q, t) in params(), mu in small_partition(2, 4), lambda in small_partition(2, 4)) {
        use qtsym::interp::{evaluate, interp_i, node};
        let ctx = QtParams::numeric(q, t);
        let f = interp_i(&ctx, &mu, 2).unwrap();
        let v = evaluate(&f, &node(&ctx, &lambda, 2).unwrap()).unwrap();
        if lambda == mu {
            prop_assert!(!v.is_zero());
        } else if lambda.size() <= mu.size() || !lambda.contains(&mu) {
            prop_assert!(v.is_zero());
        }
    }

    #[test]
    fn dual_is_symmetric((q, t) in params(), mu in small_partition(3, 3), u in prop::collection::vec(rat(), 3)) {
        use qtsym::dual::dual_h;
        let h = dual_h(&QtParams::numeric(q, t), &mu, 3).unwrap();
        let Ok(v) = h.eval(&u) else { return Ok(()); };
        let swapped = [u[1].clone(), u[0].clone(), u[2].clone()];
        prop_assert_eq!(h.eval(&swapped).unwrap(), v.clone());
        let rotated = [u[2].clone(), u[0].clone(), u[1].clone()];
        prop_assert_eq!(h.eval(&rotated).unwrap(), v);
    }

    #[test]
    fn interpolation_polynomials_are_eigenfunctions((q, t) in params(), mu in small_partition(2, 3)) {
        use qtsym::interp::interp_i;
        use qtsym::operators::{build_d_qt, eigenvalue_qt};
        let ctx = QtParams::numeric(q, t);
        let i = interp_i(&ctx, &mu, 2).unwrap();
        let d = build_d_qt(&ctx, 2).unwrap();
        prop_assert_eq!(d.apply_poly(&i).unwrap(), eigenvalue_qt(&ctx, &mu, 2).unwrap().mul(&i.extend_vars(1)));
    }
}
