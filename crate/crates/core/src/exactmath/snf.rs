use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal,
/// `d₁ | d₂ | …`, all entries non-negative.
///
/// `v_inv` is carried along so callers can read off a saturated basis of
/// the row lattice (first `rank` rows of `v_inv`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

fn row_axpy(m: &mut IntegerMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let v = &m[(src, j)] * q;
        m[(dst, j)] += v;
    }
}

fn col_axpy(m: &mut IntegerMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let v = &m[(i, src)] * q;
        m[(i, dst)] += v;
    }
}

fn negate_row(m: &mut IntegerMatrix, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -std::mem::take(&mut m[(i, j)]);
    }
}

/// Integer row/column reduction, pivoting on the entry of least absolute
/// value in the trailing submatrix.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    let mut v_inv = IntegerMatrix::identity(n);
    let mut rank = 0;

    'diag: for t in 0..m.min(n) {
        loop {
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[(i, j)].is_zero())
                .min_by(|&x, &y| d[x].abs().cmp(&d[y].abs()));
            let Some((pi, pj)) = pivot else { break 'diag };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = -(&d[(i, t)] / &p);
                if !q.is_zero() {
                    row_axpy(&mut d, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = &d[(t, j)] / &p;
                if !q.is_zero() {
                    col_axpy(&mut d, j, t, &-&q);
                    col_axpy(&mut v, j, t, &-&q);
                    row_axpy(&mut v_inv, t, j, &q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::from(1);
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        rank = t + 1;
    }
    SmithForm { u, d, v, v_inv, rank }
}

/// Row-style Hermite normal form of the row lattice of `a`: upper echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`,
/// zero rows dropped. Two matrices have the same HNF iff their rows span
/// the same lattice.
pub fn hermite_normal_form(a: &IntegerMatrix) -> IntegerMatrix {
    let mut h = a.clone();
    let mut row = 0;
    for c in 0..h.cols() {
        if row == h.rows() {
            break;
        }
        loop {
            let pivot = (row..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&x, &y| h[(x, c)].abs().cmp(&h[(y, c)].abs()));
            let Some(pi) = pivot else { break };
            h.swap_rows(row, pi);
            let p = h[(row, c)].clone();
            let mut clean = true;
            for i in row + 1..h.rows() {
                let q = -(&h[(i, c)] / &p);
                if !q.is_zero() {
                    row_axpy(&mut h, i, row, &q);
                }
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(row, c)].is_zero() {
            continue;
        }
        if h[(row, c)].is_negative() {
            negate_row(&mut h, row);
        }
        let p = h[(row, c)].clone();
        for i in 0..row {
            let q = -h[(i, c)].div_floor(&p);
            if !q.is_zero() {
                row_axpy(&mut h, i, row, &q);
            }
        }
        row += 1;
    }
    h.top_rows(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn im(cols: usize, rows: &[&[i64]]) -> IntegerMatrix {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
        IntegerMatrix::from_rows(cols, &rows)
    }

    fn check(a: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "u·a·v = d");
        assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        assert_eq!(s.v.mul(&s.v_inv), IntegerMatrix::identity(a.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        assert!(f.iter().all(|x| x.is_positive()));
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        s
    }

    #[test]
    fn snf_examples() {
        let id = im(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(check(&id).d, id);

        // |det| = 3: the three intersection points of the torus example
        let s = check(&im(2, &[&[1, 2], &[1, -1]]));
        assert_eq!(s.d, im(2, &[&[1, 0], &[0, 3]]));

        let s = check(&im(2, &[&[2, 0]]));
        assert_eq!(s.d, im(2, &[&[2, 0]]));
        assert_eq!(s.rank, 1);

        let s = check(&im(2, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);

        let s = check(&im(3, &[&[0, 0, 0], &[0, 0, 0]]));
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = im(2, &[&[1, 2], &[2, 1], &[1, -1]]);
        let b = im(2, &[&[3, 0], &[1, -1]]);
        // both span the lattice generated by (1,2) and (0,3)
        assert_eq!(hermite_normal_form(&a), hermite_normal_form(&b));
        assert_eq!(hermite_normal_form(&b), im(2, &[&[1, 2], &[0, 3]]));
        assert_eq!(hermite_normal_form(&im(2, &[&[-2, 0]])), im(2, &[&[2, 0]]));
        assert_eq!(hermite_normal_form(&im(2, &[&[0, 0]])).rows(), 0);
    }

    fn int_matrix() -> impl Strategy<Value = IntegerMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(-6i64..7, r * c)
                .prop_map(move |v| IntegerMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()))
        })
    }

    proptest! {
        #[test]
        fn snf_invariants(a in int_matrix()) {
            let s = check(&a);
            if a.rows() == a.cols() {
                let prod: BigInt = (0..a.rows()).map(|i| s.d[(i, i)].clone()).product();
                prop_assert_eq!(prod, a.determinant().abs());
            }
        }

        #[test]
        fn hnf_invariant_under_unimodular_row_ops(a in int_matrix(), k in -3i64..4) {
            let mut b = a.clone();
            if b.rows() > 1 {
                row_axpy(&mut b, 0, 1, &BigInt::from(k));
                b.swap_rows(0, b.rows() - 1);
            }
            negate_row(&mut b, 0);
            prop_assert_eq!(hermite_normal_form(&a), hermite_normal_form(&b));
        }
    }
}
