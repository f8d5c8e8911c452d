mod common;

use common::toric;
use dissect_core::arrangement::{chamber_count, check_structure, f_vector, generalized_char_poly};
use dissect_core::builders::{build_toric, BuildError};
use dissect_core::corpus::random_toric_2d;
use dissect_core::oracle::toric_chambers_2d;
use num_bigint::BigInt;

#[test]
fn euler_oracle_agrees_on_random_cellular_specs() {
    for seed in 0..40 {
        let m = build_toric(&random_toric_2d(seed)).unwrap();
        assert_eq!(chamber_count(&m).unwrap(), toric_chambers_2d(&m).unwrap(), "seed {seed}");
        assert!(check_structure(&m).all_pass(), "seed {seed}");
    }
}

#[test]
fn chambers_from_vertices() {
    // on a torus only points have nonzero κ, so chambers = (−1)^l Σ_{dim Y = 0} μ(X, Y)
    for seed in 0..40 {
        let m = build_toric(&random_toric_2d(seed)).unwrap();
        let from_points: BigInt = m.flats_of_dim(0).map(|y| m.mobius().mu(m.ambient(), y).clone()).sum();
        assert_eq!(chamber_count(&m).unwrap(), from_points);
    }
}

#[test]
fn example_torus() {
    let m = build_toric(&toric(2, &[(&[1, 2], (0, 1)), (&[2, 1], (0, 1)), (&[1, -1], (0, 1))])).unwrap();
    assert_eq!(generalized_char_poly(&m).to_string(), "t^2 - t + 4");
    assert_eq!(toric_chambers_2d(&m).unwrap(), BigInt::from(6));
    assert_eq!(f_vector(&m).unwrap().counts, vec![BigInt::from(3), BigInt::from(9), BigInt::from(6)]);
}

#[test]
fn imprimitive_circle_without_vertex_is_rejected() {
    let err = build_toric(&toric(2, &[(&[2, 0], (0, 1)), (&[1, 0], (1, 4)), (&[0, 1], (0, 1))])).map(|_| ());
    assert!(err.is_ok());
    let err = build_toric(&toric(2, &[(&[2, 0], (0, 1)), (&[2, 0], (1, 2))])).unwrap_err();
    assert!(matches!(err, BuildError::NotCellular2D(_)));
}
