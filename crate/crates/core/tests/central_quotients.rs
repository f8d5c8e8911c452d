mod common;

use common::{as_hyperplanes, central, ints};
use dissect_core::arrangement::{chamber_count, check_structure, f_vector};
use dissect_core::builders::{build_hyperplane, build_projective, build_sphere, CentralSpec};
use dissect_core::corpus::{generic_central, rng};
use dissect_core::exactmath::Rational;
use dissect_core::oracle::{enumerate_faces, quotient_counts, OracleError, QuotientMode};
use num_bigint::BigInt;
use rand::Rng;

/// Random central specs; some are not essential and get skipped by the oracle.
fn random_central(seed: u64) -> CentralSpec {
    let mut r = rng(seed);
    let l = r.gen_range(1..=3usize);
    let n = r.gen_range(1..=5usize);
    loop {
        let normals: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..=l).map(|_| Rational::from_integer(r.gen_range(-2..=2).into())).collect())
            .collect();
        let spec = CentralSpec::new(l, normals);
        if spec.validate().is_ok() {
            return spec;
        }
    }
}

#[test]
fn sphere_and_projective_match_quotient_oracle() {
    let mut checked = 0;
    for seed in 0..60 {
        let spec = random_central(seed);
        let fp = enumerate_faces(&as_hyperplanes(&spec)).unwrap();
        let sphere_counts = match quotient_counts(&fp, QuotientMode::Sphere) {
            Ok(f) => f,
            Err(OracleError::NotCellular(_)) => continue,
            Err(e) => panic!("{e}"),
        };
        let s = build_sphere(&spec).unwrap();
        let p = build_projective(&spec).unwrap();
        assert_eq!(f_vector(&s).unwrap().counts, sphere_counts, "seed {seed}");
        assert_eq!(f_vector(&p).unwrap().counts, quotient_counts(&fp, QuotientMode::Projective).unwrap(), "seed {seed}");
        assert!(check_structure(&s).all_pass() && check_structure(&p).all_pass(), "seed {seed}");
        checked += 1;
    }
    assert!(checked > 30, "only {checked} cellular specs");
}

#[test]
fn central_equals_sphere_equals_twice_projective() {
    for seed in 0..40 {
        let spec = random_central(seed);
        let c = chamber_count(&build_hyperplane(&as_hyperplanes(&spec)).unwrap()).unwrap();
        let s = chamber_count(&build_sphere(&spec).unwrap()).unwrap();
        let p = chamber_count(&build_projective(&spec).unwrap()).unwrap();
        assert_eq!(c, s, "seed {seed}");
        assert_eq!(s, BigInt::from(2) * p, "seed {seed}");
    }
}

#[test]
fn fixed_examples() {
    let two = central(2, &[&[1, 0, 0], &[0, 1, 0]]);
    assert_eq!(f_vector(&build_sphere(&two).unwrap()).unwrap().counts, ints(&[2, 4, 4]));
    let three = generic_central(5, 2, 3);
    assert_eq!(f_vector(&build_projective(&three).unwrap()).unwrap().counts, ints(&[3, 6, 4]));
    assert_eq!(f_vector(&build_sphere(&three).unwrap()).unwrap().counts, ints(&[6, 12, 8]));
}
