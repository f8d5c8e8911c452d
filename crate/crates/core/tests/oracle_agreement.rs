//! Formula-based counts on hyperplane arrangements against the sign-vector
//! oracle.

mod common;

use common::{hyperplanes, ints};
use dissect_core::arrangement::{
    bayer_sturmfels_fiber, chamber_count, check_structure, f_polynomial_geometric, f_polynomial_simple, f_vector,
    generalized_char_poly, ArrangementModel,
};
use dissect_core::builders::{build_hyperplane, HyperplaneSpec};
use dissect_core::corpus::{generic_hyperplanes, random_hyperplane_spec};
use dissect_core::exactmath::IntPolynomial;
use dissect_core::oracle::{enumerate_faces, fiber_count_direct, oracle_f_vector, FacePoset};
use num_bigint::BigInt;

fn corpus() -> Vec<HyperplaneSpec> {
    (0..60).map(|s| random_hyperplane_spec(s, 3, 6)).collect()
}

fn pair(spec: &HyperplaneSpec) -> (ArrangementModel, FacePoset) {
    (build_hyperplane(spec).unwrap(), enumerate_faces(spec).unwrap())
}

#[test]
fn f_vectors_and_chambers_match() {
    for (seed, spec) in corpus().iter().enumerate() {
        let (m, fp) = pair(spec);
        let f = f_vector(&m).unwrap();
        assert_eq!(f.counts, oracle_f_vector(&fp), "seed {seed}");
        assert_eq!(chamber_count(&m).unwrap(), BigInt::from(fp.chambers()), "seed {seed}");
        let l = m.ambient_dim();
        let at_minus_one = generalized_char_poly(&m).evaluate_int(-1);
        assert_eq!(if l % 2 == 0 { at_minus_one } else { -at_minus_one }, BigInt::from(fp.chambers()));
        assert_eq!(f_polynomial_geometric(&m).unwrap(), f.f_polynomial());
    }
}

#[test]
fn classical_characteristic_polynomial() {
    // for hyperplanes Poin_c(Y) = t^dim Y, so the generalized polynomial is Σ μ(X,Y) t^dim Y
    for spec in corpus() {
        let m = build_hyperplane(&spec).unwrap();
        let classical = m
            .mobius()
            .row(m.ambient())
            .iter()
            .fold(IntPolynomial::zero(), |acc, (y, mu)| &acc + &IntPolynomial::monomial(m.flat(*y).dim).scale(mu));
        assert_eq!(generalized_char_poly(&m), classical);
    }
}

#[test]
fn psi_is_surjective_and_rank_preserving() {
    for spec in corpus() {
        let (m, fp) = pair(&spec);
        let mut hit = vec![false; m.flats().len()];
        for i in 0..fp.len() {
            let y = m.index_of(fp.psi(i)).expect("ψ lands on a flat");
            hit[y] = true;
            assert_eq!(fp.dim(i), m.flat(y).dim);
        }
        assert!(hit.iter().all(|&h| h));
        // order preserving: F ≤ G in closure order ⇒ ψ(G) ≤ ψ(F) in L
        for i in 0..fp.len() {
            for j in 0..fp.len() {
                if fp.leq(i, j) {
                    let (yi, yj) = (m.index_of(fp.psi(i)).unwrap(), m.index_of(fp.psi(j)).unwrap());
                    assert!(m.poset().leq(yj, yi));
                }
            }
        }
    }
}

#[test]
fn fibers_match_for_chains_of_length_two_and_three() {
    let mut specs = corpus();
    specs.truncate(30);
    specs.push(hyperplanes(2, &[(&[1, 0], 0), (&[0, 1], 0)]));
    for spec in specs {
        let (m, fp) = pair(&spec);
        for chain in m.poset().enumerate_chains(2).into_iter().filter(|c| c.len() <= 3) {
            let ids: Vec<&str> = chain.iter().map(|&i| m.flat(i).id.as_str()).collect();
            assert_eq!(bayer_sturmfels_fiber(&m, &chain).unwrap(), fiber_count_direct(&fp, &ids).unwrap(), "{ids:?}");
        }
    }
}

#[test]
fn simple_f_polynomial_on_generic_arrangements() {
    for (l, n) in [(1, 3), (2, 2), (2, 4), (3, 4), (3, 5)] {
        let spec = generic_hyperplanes(n as u64 * 31 + l as u64, l, n);
        let (m, fp) = pair(&spec);
        assert!(m.is_simple());
        let f = IntPolynomial::new(oracle_f_vector(&fp).into_iter().rev().collect());
        assert_eq!(f_polynomial_simple(&m).unwrap(), f, "l={l} n={n}");
    }
    let two_lines = build_hyperplane(&hyperplanes(2, &[(&[1, 0], 0), (&[0, 1], 0)])).unwrap();
    assert_eq!(f_vector(&two_lines).unwrap().counts, ints(&[1, 4, 4]));
}

#[test]
fn every_model_is_structurally_sound() {
    for spec in corpus() {
        let m = build_hyperplane(&spec).unwrap();
        let report = check_structure(&m);
        assert!(report.all_pass(), "{report:?}");
    }
}
