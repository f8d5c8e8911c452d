mod common;

use common::{hyperplanes, ints, toric};
use dissect_core::arrangement::f_vector;
use dissect_core::builders::{build_hyperplane, build_projective, build_sphere, build_toric};
use dissect_core::closedforms::{
    alternating_sum, ambient_kappa, binomial, closed_form_f_vector, f_buck_projective, f_simple_hyperplane, ClosedFormError,
    Mode, RankCensus,
};
use dissect_core::corpus::{generic_central, generic_hyperplanes};
use dissect_core::oracle::{enumerate_faces, oracle_f_vector, quotient_counts, QuotientMode};

#[test]
fn general_position_lines_match_oracle() {
    for n in 1..=6 {
        let spec = generic_hyperplanes(n as u64, 2, n);
        let oracle = oracle_f_vector(&enumerate_faces(&spec).unwrap());
        let a = RankCensus::new((0..=2).map(|j| binomial(n, 2 - j)).collect());
        let f: Vec<_> = (0..=2).map(|k| f_simple_hyperplane(&a, 2, k)).collect();
        assert_eq!(f, oracle, "n={n}");
        let m = build_hyperplane(&spec).unwrap();
        assert_eq!(closed_form_f_vector(&m, Mode::Validated).unwrap(), oracle);
    }
}

#[test]
fn sphere_and_projective_closed_forms() {
    for n in [2, 3, 4] {
        let spec = generic_central(n as u64 + 10, 2, n);
        let s = build_sphere(&spec).unwrap();
        assert_eq!(closed_form_f_vector(&s, Mode::Validated).unwrap(), f_vector(&s).unwrap().counts);
        let p = build_projective(&spec).unwrap();
        let buck: Vec<_> = (0..=2).map(|k| f_buck_projective(n, 2, k)).collect();
        assert_eq!(closed_form_f_vector(&p, Mode::Validated).unwrap(), buck);
        let fp = enumerate_faces(&common::as_hyperplanes(&spec)).unwrap();
        assert_eq!(buck, quotient_counts(&fp, QuotientMode::Projective).unwrap());
    }
}

#[test]
fn non_simple_torus_is_refused() {
    let m = build_toric(&toric(2, &[(&[1, 2], (0, 1)), (&[2, 1], (0, 1)), (&[1, -1], (0, 1))])).unwrap();
    assert_eq!(closed_form_f_vector(&m, Mode::Validated).unwrap_err(), ClosedFormError::NotSimple);
    let forced = closed_form_f_vector(&m, Mode::Forced).unwrap();
    assert_eq!(forced, ints(&[3, 6, 3]));
    assert_ne!(forced, f_vector(&m).unwrap().counts);
}

#[test]
fn simple_torus_uses_vertex_count() {
    let m = build_toric(&toric(2, &[(&[1, 1], (0, 1)), (&[1, -1], (0, 1))])).unwrap();
    assert_eq!(closed_form_f_vector(&m, Mode::Validated).unwrap(), f_vector(&m).unwrap().counts);
    assert_eq!(f_vector(&m).unwrap().counts, ints(&[2, 4, 2]));
}

#[test]
fn concurrent_lines_are_not_simple() {
    let m = build_hyperplane(&hyperplanes(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)])).unwrap();
    assert_eq!(closed_form_f_vector(&m, Mode::Validated).unwrap_err(), ClosedFormError::NotSimple);
}

#[test]
fn closed_forms_satisfy_euler_relation() {
    for n in [2, 3, 4] {
        for l in [1, 2, 3] {
            let spec = generic_central((n * 7 + l) as u64, l, n);
            for m in [build_sphere(&spec).unwrap(), build_projective(&spec).unwrap()] {
                let f = closed_form_f_vector(&m, Mode::Validated).unwrap();
                assert_eq!(alternating_sum(&f), ambient_kappa(m.family(), l).unwrap(), "{} n={n} l={l}", m.family());
            }
        }
    }
}
