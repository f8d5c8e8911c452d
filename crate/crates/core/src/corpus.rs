//! Seeded random arrangement generators for property tests, acceptance
//! runs and `verify --random`. Every generator is a pure function of its
//! seed, so a failing case can be reproduced from the seed alone.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::builders::{
    build_hyperplane, build_projective, build_toric, CentralSpec, Hyperplane, HyperplaneSpec, ToricHypersurface, ToricSpec,
};
use crate::closedforms::binomial;
use crate::exactmath::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

fn random_vector<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..len).map(|_| small_rational(rng, 4, 3)).collect();
        if v.iter().any(|x| *x != Rational::from_integer(0.into())) {
            return v;
        }
    }
}

/// `n` hyperplanes in `ℝ^l` with small rational coefficients. Coincidences
/// (parallel, concurrent, repeated offsets) are common on purpose; exact
/// duplicates are redrawn.
pub fn random_hyperplanes<R: Rng>(rng: &mut R, l: usize, n: usize) -> HyperplaneSpec {
    let mut spec = HyperplaneSpec::new(l, Vec::with_capacity(n));
    while spec.hyperplanes.len() < n {
        // small integer offsets make degenerate intersections likely
        let offset = Rational::from_integer(rng.gen_range(-2..=2).into());
        spec.hyperplanes.push(Hyperplane::new(random_vector(rng, l), offset));
        if spec.validate().is_err() {
            spec.hyperplanes.pop();
        }
    }
    spec
}

/// A hyperplane spec with `1 ≤ l ≤ max_l` and `1 ≤ n ≤ max_n`.
pub fn random_hyperplane_spec(seed: u64, max_l: usize, max_n: usize) -> HyperplaneSpec {
    let mut r = rng(seed);
    let l = r.gen_range(1..=max_l);
    let n = r.gen_range(1..=max_n);
    random_hyperplanes(&mut r, l, n)
}

/// `n` hyperplanes in `ℝ^l` in general position, confirmed by the flat
/// census: exactly `C(n, l−j)` flats of each dimension `j`.
pub fn generic_hyperplanes(seed: u64, l: usize, n: usize) -> HyperplaneSpec {
    let mut r = rng(seed);
    loop {
        let hs = (0..n).map(|_| Hyperplane::new(random_vector(&mut r, l), small_rational(&mut r, 9, 7))).collect();
        let spec = HyperplaneSpec::new(l, hs);
        let Ok(m) = build_hyperplane(&spec) else { continue };
        if census_is_generic(&m.dimension_census(), n, l) {
            return spec;
        }
    }
}

/// `n` central hyperplanes in `ℝ^{l+1}` in general position, confirmed by
/// the projective flat census.
pub fn generic_central(seed: u64, l: usize, n: usize) -> CentralSpec {
    let mut r = rng(seed);
    loop {
        let spec = CentralSpec::new(l, (0..n).map(|_| random_vector(&mut r, l + 1)).collect());
        let Ok(m) = build_projective(&spec) else { continue };
        if census_is_generic(&m.dimension_census(), n, l) {
            return spec;
        }
    }
}

fn census_is_generic(census: &[usize], n: usize, l: usize) -> bool {
    census.iter().enumerate().all(|(j, &a)| BigInt::from(a) == binomial(n, l - j))
}

/// A cellular 2-dimensional toric spec with 2–4 hypersurfaces, covector
/// entries in `[−3, 3]` and offsets with denominator ≤ 4. Odd seeds force
/// an imprimitive covector.
pub fn random_toric_2d(seed: u64) -> ToricSpec {
    let mut r = rng(seed);
    loop {
        let n = r.gen_range(2..=4);
        let mut hs: Vec<ToricHypersurface> = (0..n)
            .map(|_| {
                let c: Vec<BigInt> = (0..2).map(|_| BigInt::from(r.gen_range(-3..=3))).collect();
                let den: i64 = r.gen_range(1..=4);
                ToricHypersurface::new(c, Rational::new(r.gen_range(0..den).into(), den.into()))
            })
            .collect();
        if seed % 2 == 1 {
            let k: i64 = r.gen_range(2..=3);
            let c: Vec<BigInt> = (0..2).map(|_| BigInt::from(r.gen_range(-1..=1) * k)).collect();
            hs[0].covector = c;
        }
        let spec = ToricSpec::new(2, hs);
        if build_toric(&spec).is_ok() {
            return spec;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn deterministic() {
        assert_eq!(random_hyperplane_spec(7, 3, 7), random_hyperplane_spec(7, 3, 7));
        assert_eq!(random_toric_2d(3), random_toric_2d(3));
    }

    #[test]
    fn generic_census() {
        let m = build_hyperplane(&generic_hyperplanes(1, 2, 5)).unwrap();
        assert_eq!(m.dimension_census(), vec![10, 5, 1]);
        let p = build_projective(&generic_central(2, 2, 3)).unwrap();
        assert_eq!(p.dimension_census(), vec![3, 3, 1]);
    }

    #[test]
    fn toric_corpus_mixes_primitive_and_imprimitive() {
        let gcds: Vec<BigInt> = (0..10)
            .flat_map(|s| random_toric_2d(s).hypersurfaces)
            .map(|h| h.covector[0].gcd(&h.covector[1]))
            .collect();
        assert!(gcds.iter().any(|g| *g == BigInt::from(1)));
        assert!(gcds.iter().any(|g| *g > BigInt::from(1)));
    }
}
