//! Tableau-formula Macdonald polynomials against the orthogonalization oracle.

use qtsym::algebra::{Field, MultiPoly, QtParams, ScalarQT};
use qtsym::macdonald::{chain_weights, gram_schmidt_oracle, macdonald_p, scalar_product, Basis, SymFunc};
use qtsym::partitions::partitions_up_to;

#[test]
fn tableau_p_matches_gram_schmidt() {
    let ctx = QtParams::generic();
    for mu in partitions_up_to(5, 5) {
        let gs = gram_schmidt_oracle(&mu, mu.size()).unwrap();
        for n in 1..=3 {
            let comb = macdonald_p(&ctx, &mu, n).unwrap();
            assert_eq!(comb, gs.restrict(n).unwrap(), "mu={mu:?} N={n}");
        }
    }
}

#[test]
fn p_is_symmetric_homogeneous_and_monic() {
    let ctx = QtParams::generic();
    for mu in partitions_up_to(4, 3) {
        let p: MultiPoly<ScalarQT> = macdonald_p(&ctx, &mu, 3).unwrap();
        assert!(p.is_symmetric_in(3));
        assert!(p.terms().all(|(e, _)| e.iter().sum::<u32>() == mu.size()));
        let lead: Vec<u32> = (0..3).map(|i| mu.part(i)).collect();
        assert!(p.coeff(&lead).is_one());
    }
}

#[test]
fn p_and_q_are_dual() {
    let parts = partitions_up_to(4, 4);
    for a in &parts {
        for b in &parts {
            if a.size() != b.size() {
                continue;
            }
            let d = a.size();
            let v = scalar_product(
                &SymFunc::basis_element(Basis::MacdonaldP, a, d),
                &SymFunc::basis_element(Basis::MacdonaldQ, b, d),
            )
            .unwrap();
            assert_eq!(v.is_one(), a == b, "{a:?} {b:?}");
            assert_eq!(v.is_zero(), a != b, "{a:?} {b:?}");
        }
    }
}

#[test]
fn psi_is_invariant_under_parameter_inversion() {
    for mu in partitions_up_to(5, 3) {
        for (_, w) in chain_weights(&mu, 3).unwrap() {
            let s = w.to_scalar();
            assert_eq!(s.invert_params().unwrap(), s, "mu={mu:?}");
        }
    }
}
