//! Subtori of `T^l = ℝ^l / ℤ^l` cut out by `c · x ≡ offset (mod 1)`.
//!
//! For a set of covectors stacked into `A` with Smith form `U A V = D`,
//! substituting `x = V y` turns `A x ≡ b` into `dᵢ yᵢ ≡ (U b)ᵢ`. Each of
//! the first `r = rank A` coordinates has `dᵢ` solutions in `[0, 1)`, the
//! rest are free, so the intersection has `Π dᵢ` components, each a coset
//! of an `(l − r)`-dimensional subtorus. The rows of `V⁻¹` restricted to the
//! first `r` form a saturated basis `P` of the integer covectors vanishing
//! on the subtorus direction; two points lie in the same component iff `P`
//! maps their difference into `ℤ^r`. Taking `P` in Hermite normal form makes
//! `(P, P·x mod 1)` a canonical key for a component.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{check_cap, int_to_rat, is_zero_vector, subsets_up_to, BuildError, BuildOptions};
use crate::arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
use crate::exactmath::{hermite_normal_form, rref, smith_normal_form, IntPolynomial, IntegerMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricHypersurface {
    pub covector: Vec<BigInt>,
    pub offset: Rational,
}

impl ToricHypersurface {
    pub fn new(covector: Vec<BigInt>, offset: Rational) -> Self {
        ToricHypersurface { covector, offset }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSpec {
    pub ambient_dim: usize,
    pub hypersurfaces: Vec<ToricHypersurface>,
}

impl ToricSpec {
    pub fn new(ambient_dim: usize, hypersurfaces: Vec<ToricHypersurface>) -> Self {
        ToricSpec { ambient_dim, hypersurfaces }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        if self.ambient_dim == 0 {
            return Err(BuildError::AmbientTooSmall { min: 1, got: 0 });
        }
        for (i, h) in self.hypersurfaces.iter().enumerate() {
            if h.covector.len() != self.ambient_dim {
                return Err(BuildError::DimensionMismatch { index: i, expected: self.ambient_dim, got: h.covector.len() });
            }
            if is_zero_vector(&h.covector) {
                return Err(BuildError::ZeroNormal(i));
            }
            if h.offset.is_negative() || h.offset >= Rational::one() {
                return Err(BuildError::OffsetOutOfRange { index: i, offset: h.offset.clone() });
            }
        }
        let hs = &self.hypersurfaces;
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let same = hs[i].covector == hs[j].covector && hs[i].offset == hs[j].offset;
                let negated = hs[i].covector.iter().zip(&hs[j].covector).all(|(a, b)| *a == -b)
                    && frac(&(-&hs[i].offset)) == hs[j].offset;
                if same || negated {
                    return Err(BuildError::Duplicate(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Representative in `[0, 1)`.
pub(crate) fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

struct Component {
    witness: Vec<Rational>,
    lattice: IntegerMatrix,
    residue: Vec<Rational>,
}

fn mat_vec_rat(m: &IntegerMatrix, v: &[Rational]) -> Vec<Rational> {
    m.iter_rows()
        .map(|row| row.iter().zip(v).map(|(a, x)| Rational::from_integer(a.clone()) * x).sum())
        .collect()
}

/// Components of `{x : A x ≡ b (mod 1)}` for `A` of full row rank.
fn components(a: &IntegerMatrix, b: &[Rational]) -> Vec<Component> {
    let l = a.cols();
    let snf = smith_normal_form(a);
    let r = snf.rank;
    debug_assert_eq!(r, a.rows());
    let ub = mat_vec_rat(&snf.u, b);
    let lattice = hermite_normal_form(&snf.v_inv.top_rows(r));
    let factors = snf.invariant_factors();

    let total: usize = factors.iter().map(|d| usize::try_from(d).expect("component count fits in usize")).product();
    let mut out = Vec::with_capacity(total);
    for mut k in 0..total {
        let mut y = vec![Rational::zero(); l];
        for (i, d) in factors.iter().enumerate() {
            let di = usize::try_from(d).unwrap();
            let ki = k % di;
            k /= di;
            y[i] = (&ub[i] + Rational::from_integer(ki.into())) / Rational::from_integer(d.clone());
        }
        let witness: Vec<Rational> = mat_vec_rat(&snf.v, &y).iter().map(frac).collect();
        let residue = mat_vec_rat(&lattice, &witness).iter().map(frac).collect();
        out.push(Component { witness, lattice: lattice.clone(), residue });
    }
    out
}

fn rank_of(rows: &[&[BigInt]], cols: usize) -> usize {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| int_to_rat(r)).collect();
    rref(&crate::exactmath::RationalMatrix::from_rows(cols, &rows)).rank
}

/// `inner ⊆ outer`: the row space of `outer.lattice` lies inside that of
/// `inner.lattice`, and `inner`'s witness satisfies `outer`'s congruences.
fn contained_in(inner: &Component, outer: &Component) -> bool {
    let l = inner.witness.len();
    let stacked: Vec<&[BigInt]> = inner.lattice.iter_rows().chain(outer.lattice.iter_rows()).collect();
    if rank_of(&stacked, l) != inner.lattice.rows() {
        return false;
    }
    mat_vec_rat(&outer.lattice, &inner.witness)
        .iter()
        .zip(&outer.residue)
        .all(|(v, r)| frac(v) == *r)
}

pub fn build_toric(spec: &ToricSpec) -> Result<ArrangementModel, BuildError> {
    build_toric_with(spec, &BuildOptions::default())
}

/// Components of dimension `k` get `Poin_c = (1 + t)^k`.
///
/// Cellularity is checked in dimensions 1 and 2 (every circle must carry a
/// vertex, and there must be at least one vertex). In higher dimensions the
/// model is flagged as asserted-cellular instead.
pub fn build_toric_with(spec: &ToricSpec, opts: &BuildOptions) -> Result<ArrangementModel, BuildError> {
    spec.validate()?;
    check_cap(spec.hypersurfaces.len(), opts)?;
    let l = spec.ambient_dim;
    let hs = &spec.hypersurfaces;

    let subsets: Vec<Vec<usize>> = subsets_up_to(hs.len(), l).into_iter().filter(|s| !s.is_empty()).collect();
    let found = opts.exec.map(&subsets, |s| {
        let rows: Vec<&[BigInt]> = s.iter().map(|&i| hs[i].covector.as_slice()).collect();
        if rank_of(&rows, l) < s.len() {
            return Vec::new();
        }
        let a = IntegerMatrix::from_rows(l, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let b: Vec<Rational> = s.iter().map(|&i| hs[i].offset.clone()).collect();
        components(&a, &b)
    });

    let mut unique: BTreeMap<(usize, IntegerMatrix, Vec<Rational>), Component> = BTreeMap::new();
    for c in found.into_iter().flatten() {
        unique.entry((c.lattice.rows(), c.lattice.clone(), c.residue.clone())).or_insert(c);
    }
    let ambient = Component { witness: vec![Rational::zero(); l], lattice: IntegerMatrix::zeros(0, l), residue: vec![] };
    let comps: Vec<Component> = std::iter::once(ambient).chain(unique.into_values()).collect();

    let containing: Vec<Vec<usize>> = opts.exec.map(&comps, |c| {
        (0..hs.len())
            .filter(|&i| {
                let mut rows: Vec<&[BigInt]> = c.lattice.iter_rows().collect();
                rows.push(&hs[i].covector);
                rank_of(&rows, l) == c.lattice.rows() && frac(&dot_int(&hs[i].covector, &c.witness)) == hs[i].offset
            })
            .collect()
    });

    let n = comps.len();
    let related = opts.exec.map_range(n, |j| {
        (0..n).filter(|&i| i != j && comps[j].lattice.rows() > comps[i].lattice.rows() && contained_in(&comps[j], &comps[i])).collect::<Vec<_>>()
    });
    let pairs: Vec<(usize, usize)> = related.iter().enumerate().flat_map(|(j, is)| is.iter().map(move |&i| (i, j))).collect();

    // ids: hypersurfaces through the component, plus #k when several share them
    let mut seen: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut share: BTreeMap<&[usize], usize> = BTreeMap::new();
    for c in &containing {
        *share.entry(c.as_slice()).or_default() += 1;
    }
    let mut nodes = Vec::with_capacity(n);
    let one_plus_t = IntPolynomial::new(vec![BigInt::one(), BigInt::one()]);
    for (c, cont) in comps.into_iter().zip(&containing) {
        let dim = l - c.lattice.rows();
        let id = if cont.is_empty() {
            "X".to_string()
        } else {
            let base = super::slug('t', cont);
            let k = seen.entry(cont.as_slice()).or_default();
            *k += 1;
            if share[cont.as_slice()] > 1 { format!("{base}#{}", *k - 1) } else { base }
        };
        let handle = FlatHandle::Toric {
            covectors: cont.iter().map(|&i| hs[i].covector.clone()).collect(),
            containing: cont.clone(),
            witness: c.witness,
            lattice: c.lattice,
            residue: c.residue,
        };
        nodes.push(FlatNode::new(id, dim, one_plus_t.pow(dim as u32), handle));
    }

    let model = ArrangementModel::with_exec(l, Family::Toric, nodes, &pairs, opts.exec)?;
    if l <= 2 {
        check_cellular_low_dim(&model)?;
        Ok(model)
    } else {
        Ok(model.assert_cellular())
    }
}

fn dot_int(c: &[BigInt], x: &[Rational]) -> Rational {
    c.iter().zip(x).map(|(a, b)| Rational::from_integer(a.clone()) * b).sum()
}

fn check_cellular_low_dim(m: &ArrangementModel) -> Result<(), BuildError> {
    let p = m.poset();
    if m.flats_of_dim(0).next().is_none() {
        return Err(BuildError::NotCellular2D("the arrangement has no vertex".into()));
    }
    for c in m.flats_of_dim(1) {
        if c != m.ambient() && !p.upper_set(c).iter().any(|&v| m.flat(v).dim == 0) {
            return Err(BuildError::NotCellular2D(format!("circle `{}` contains no vertex", m.flat(c).id)));
        }
    }
    Ok(())
}

/// Number of solutions of `A x ≡ b (mod 1)` for square nonsingular `A`:
/// `|det A|`. Used by tests as an independent census.
#[cfg(test)]
pub(crate) fn brute_force_points_2d(c1: &[i64; 2], c2: &[i64; 2], b: [Rational; 2]) -> usize {
    // x = A⁻¹ (b + z), z ranging over a box large enough to cover [0,1)²
    let det = c1[0] * c2[1] - c1[1] * c2[0];
    assert_ne!(det, 0);
    let bound = (c1[0].abs() + c1[1].abs() + c2[0].abs() + c2[1].abs()) + 1;
    let mut pts = std::collections::BTreeSet::new();
    let d = Rational::from_integer(det.into());
    for z0 in -bound..=bound {
        for z1 in -bound..=bound {
            let r0 = &b[0] + Rational::from_integer(z0.into());
            let r1 = &b[1] + Rational::from_integer(z1.into());
            let x = (&r0 * Rational::from_integer(c2[1].into()) - &r1 * Rational::from_integer(c1[1].into())) / &d;
            let y = (&r1 * Rational::from_integer(c1[0].into()) - &r0 * Rational::from_integer(c2[0].into())) / &d;
            pts.insert((frac(&x), frac(&y)));
        }
    }
    pts.len()
}
