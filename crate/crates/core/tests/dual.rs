use qtsym::algebra::{BlockSpec, QtParams, Rat, ScalarQT, TruncSeries};
use qtsym::dual::oracle::y_pochhammer;
use qtsym::dual::{
    dual_by_duality_oracle, dual_h, dual_h_series, dual_sigma, dual_sigma_vandermonde, multiparam_schur,
    skew_dual_series, strip_weight_qt,
};
use qtsym::interp::interp_i;
use qtsym::macdonald::macdonald_q;
use qtsym::partitions::{horizontal_substrips, partitions_up_to};

fn diagonal_params(n: usize, len: usize) -> Vec<ScalarQT> {
    (0..len).map(|k| ScalarQT::monomial(1, n as i32 - 1 - k as i32, 0)).collect()
}

#[test]
fn oracle_matches_combinatorial_dual() {
    let ctx = QtParams::generic();
    for k in 1..=3 {
        let spec = BlockSpec::single(k, 4);
        let inv = y_pochhammer(&ctx, k, -1, &spec).unwrap();
        for nu in partitions_up_to(4, 4) {
            let oracle = dual_by_duality_oracle(&nu, k, 4).unwrap();
            let combinatorial = dual_h_series(&ctx, &nu, k, &spec).unwrap().mul(&inv).unwrap();
            assert_eq!(oracle, combinatorial, "nu={nu:?}, K={k}");
        }
    }
}

#[test]
fn skew_dual_relation() {
    let ctx = QtParams::generic();
    let spec = BlockSpec::single(1, 5);
    let poch = y_pochhammer(&ctx, 1, 1, &spec).unwrap();
    for mu in partitions_up_to(4, 4) {
        for nu in horizontal_substrips(&mu) {
            let lhs = skew_dual_series(&ctx, &mu, &nu, 5).unwrap().mul(&poch).unwrap();
            let rhs = strip_weight_qt(&ctx, &mu, &nu).unwrap().to_y_series(0, &spec).unwrap();
            assert_eq!(lhs, rhs, "{mu:?}/{nu:?}");
        }
    }
}

#[test]
fn symmetry_and_leading_term() {
    let ctx = QtParams::generic();
    for mu in partitions_up_to(4, 2) {
        let h = dual_h(&ctx, &mu, 2).unwrap();
        assert_eq!(h, h.permute(&[1, 0]), "{mu:?}");
        let spec = BlockSpec::single(2, mu.size());
        let s = dual_h_series(&ctx, &mu, 2, &spec).unwrap();
        let q = TruncSeries::from_poly(macdonald_q(&ctx, &mu, 2).unwrap(), spec);
        assert_eq!(s, q, "{mu:?}");
    }
    // K = 3 by evaluation at rational points
    let num = QtParams::numeric(Rat::new(3, 7), Rat::new(-5, 11));
    let pt = [Rat::new(2, 3), Rat::new(-7, 5), Rat::new(13, 4)];
    for mu in partitions_up_to(4, 3) {
        let h = dual_h(&num, &mu, 3).unwrap();
        let v = h.eval(&pt).unwrap();
        for perm in [[1, 0, 2], [2, 0, 1], [0, 2, 1]] {
            let moved: Vec<Rat> = perm.iter().map(|&i| pt[i].clone()).collect();
            assert_eq!(h.eval(&moved).unwrap(), v, "{mu:?}");
        }
    }
}

#[test]
fn diagonal_determinantal_forms() {
    let ctx = QtParams::diagonal();
    for n in 1..=3 {
        for mu in partitions_up_to(4, n) {
            let c = diagonal_params(n, mu.part(0) as usize + n + 1);
            assert_eq!(interp_i(&ctx, &mu, n).unwrap(), multiparam_schur(&mu, n, &c).unwrap(), "I {mu:?}");
            let h = dual_h(&ctx, &mu, n).unwrap();
            assert_eq!(h, dual_sigma(&mu, n, &c).unwrap(), "H {mu:?}");
            assert_eq!(h, dual_sigma_vandermonde(&mu, n, &c).unwrap(), "H {mu:?}");
        }
    }
}

#[test]
fn sigma_stability() {
    let c: Vec<Rat> = (0..9).map(|k| Rat::new(3 * k * k - 2, 5)).collect();
    let cq = diagonal_params(3, 9);
    for n in 1..=3 {
        for mu in partitions_up_to(3, n) {
            let lim = dual_sigma(&mu, n, &c).unwrap().at_infinity(n - 1).unwrap();
            let limq = dual_sigma(&mu, n, &cq).unwrap().at_infinity(n - 1).unwrap();
            if mu.len() == n {
                assert!(lim.is_zero() && limq.is_zero(), "{mu:?}");
            } else {
                assert_eq!(lim, dual_sigma(&mu, n - 1, &c[1..]).unwrap(), "{mu:?}");
                assert_eq!(limq, dual_sigma(&mu, n - 1, &cq[1..]).unwrap(), "{mu:?}");
            }
        }
    }
}
