//! Finite graded posets with a unique minimum, and their Möbius functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{IntPolynomial, Rational};
use crate::exec::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("order relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("poset is not graded: `{upper}` covers `{lower}` but their ranks differ by {gap}")]
    NotGraded { lower: String, upper: String, gap: usize },
    #[error("poset needs exactly one minimal element, found {0:?}")]
    NoUniqueMinimum(Vec<String>),
    #[error("`{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("requested degree {requested} is below the poset rank {rank}")]
    DegreeBelowRank { requested: usize, rank: usize },
}

/// Fixed-size bitset over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub(crate) fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    pub(crate) fn intersection(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// A finite graded poset with a unique minimal element `0̂`.
///
/// Elements are addressed by dense indices; each carries an opaque string
/// id so that nodes can be traced back to whatever built them.
#[derive(Clone, Debug)]
pub struct Poset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    rank: Vec<usize>,
    covers: Vec<(usize, usize)>,
    /// `above[x]` = strict upper set of `x`.
    above: Vec<Bits>,
    /// `below[y]` = strict lower set of `y`.
    below: Vec<Bits>,
    /// Linear extension, sorted by rank then index.
    order: Vec<usize>,
    bottom: usize,
}

/// Builds a poset from element ids and arbitrary order pairs `(lower, upper)`.
/// The relation is closed transitively; reflexive pairs are ignored.
pub fn build_poset<S: AsRef<str>>(elements: &[S], relation_pairs: &[(S, S)]) -> Result<Poset, PosetError> {
    let ids: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(PosetError::DuplicateElement(id.clone()));
        }
    }
    let lookup = |s: &S| {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(s.as_ref().to_string()))
    };
    let pairs = relation_pairs
        .iter()
        .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<Vec<_>, PosetError>>()?;
    Poset::from_indexed(ids, &pairs)
}

impl Poset {
    /// Same as [`build_poset`] with pairs already given as indices into `ids`.
    pub fn from_indexed(ids: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let n = ids.len();
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(PosetError::DuplicateElement(id.clone()));
            }
        }
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in pairs {
            if a != b {
                succ[a].push(b);
                indegree[b] += 1;
            }
        }
        // Kahn
        let mut topo = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(x) = ready.pop() {
            topo.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap();
            return Err(PosetError::Cycle(ids[stuck].clone()));
        }

        let mut above = vec![Bits::new(n); n];
        for &x in topo.iter().rev() {
            let mut set = Bits::new(n);
            for &y in &succ[x] {
                set.insert(y);
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut below = vec![Bits::new(n); n];
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                below[y].insert(x);
            }
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| below[i].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(PosetError::NoUniqueMinimum(minimal.iter().map(|&i| ids[i].clone()).collect()));
        }
        let bottom = minimal[0];

        let mut covers = Vec::new();
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                if !up.intersects(&below[y]) {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        let mut rank = vec![0usize; n];
        let mut lower_covers = vec![Vec::new(); n];
        for &(x, y) in &covers {
            lower_covers[y].push(x);
        }
        for &y in &topo {
            rank[y] = lower_covers[y].iter().map(|&x| rank[x] + 1).max().unwrap_or(0);
        }
        for &(x, y) in &covers {
            if rank[y] != rank[x] + 1 {
                return Err(PosetError::NotGraded {
                    lower: ids[x].clone(),
                    upper: ids[y].clone(),
                    gap: rank[y] - rank[x],
                });
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (rank[i], i));
        Ok(Poset { ids, index, rank, covers, above, below, order, bottom })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Length of the longest chain.
    pub fn height(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements sorted by rank (a linear extension).
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// `{y : y ≥ x}` in rank order.
    pub fn upper_set(&self, x: usize) -> Vec<usize> {
        self.order.iter().copied().filter(|&y| self.leq(x, y)).collect()
    }

    /// `{z : z ≤ y}` in rank order.
    pub fn lower_set(&self, y: usize) -> Vec<usize> {
        self.order.iter().copied().filter(|&z| self.leq(z, y)).collect()
    }

    /// `{z : x ≤ z ≤ y}` in rank order (empty if `x ≰ y`).
    pub fn interval_elements(&self, x: usize, y: usize) -> Vec<usize> {
        if !self.leq(x, y) {
            return Vec::new();
        }
        self.order
            .iter()
            .copied()
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == x).map(|c| c.1).collect()
    }

    /// Induced poset on `[x, y]`, reranked from 0 at `x`.
    pub fn interval_subposet(&self, x: usize, y: usize) -> Result<Poset, PosetError> {
        if !self.leq(x, y) {
            return Err(PosetError::NotComparable(self.ids[x].clone(), self.ids[y].clone()));
        }
        let elems = self.interval_elements(x, y);
        let local: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let pairs: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter_map(|(a, b)| Some((*local.get(a)?, *local.get(b)?)))
            .collect();
        Poset::from_indexed(elems.iter().map(|&e| self.ids[e].clone()).collect(), &pairs)
    }

    /// Minimal elements of a set given as a bitset.
    fn minimal_of(&self, set: &Bits) -> Vec<usize> {
        set.iter().filter(|&u| !self.below[u].intersects(set)).collect()
    }

    fn maximal_of(&self, set: &Bits) -> Vec<usize> {
        set.iter().filter(|&u| !self.above[u].intersects(set)).collect()
    }

    fn closed_above(&self, x: usize) -> Bits {
        let mut s = self.above[x].clone();
        s.insert(x);
        s
    }

    fn closed_below(&self, x: usize) -> Bits {
        let mut s = self.below[x].clone();
        s.insert(x);
        s
    }

    /// Least upper bound, if unique.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        match self.minimal_of(&self.closed_above(a).intersection(&self.closed_above(b)))[..] {
            [j] => Some(j),
            _ => None,
        }
    }

    /// Greatest lower bound, if unique.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        match self.maximal_of(&self.closed_below(a).intersection(&self.closed_below(b)))[..] {
            [m] => Some(m),
            _ => None,
        }
    }

    fn covers_pair(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && self.rank[y] == self.rank[x] + 1
    }

    /// Lattice, atomic (every element is a join of atoms) and semimodular
    /// (if `a`, `b` both cover `a ∧ b` then `a ∨ b` covers both).
    pub fn is_geometric_lattice(&self) -> bool {
        let n = self.len();
        let mut joins = vec![None; n * n];
        for a in 0..n {
            for b in a..n {
                let Some(j) = self.join(a, b) else { return false };
                if self.meet(a, b).is_none() {
                    return false;
                }
                joins[a * n + b] = Some(j);
                joins[b * n + a] = Some(j);
            }
        }
        let join = |a: usize, b: usize| joins[a * n + b].unwrap();

        let atoms = self.upper_covers(self.bottom);
        for x in 0..n {
            if x == self.bottom {
                continue;
            }
            let j = atoms
                .iter()
                .filter(|&&a| self.leq(a, x))
                .fold(self.bottom, |acc, &a| join(acc, a));
            if j != x {
                return false;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let m = self.meet(a, b).unwrap();
                if self.covers_pair(m, a) && self.covers_pair(m, b) {
                    let j = join(a, b);
                    if !(self.covers_pair(a, j) && self.covers_pair(b, j)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every totally ordered subset with at least `min_length` elements,
    /// each listed once in increasing order.
    pub fn enumerate_chains(&self, min_length: usize) -> Vec<Vec<usize>> {
        fn extend(p: &Poset, chain: &mut Vec<usize>, min: usize, out: &mut Vec<Vec<usize>>) {
            if chain.len() >= min {
                out.push(chain.clone());
            }
            let last = *chain.last().unwrap();
            for &y in &p.order {
                if p.lt(last, y) {
                    chain.push(y);
                    extend(p, chain, min, out);
                    chain.pop();
                }
            }
        }
        let mut out = Vec::new();
        for &x in &self.order {
            extend(self, &mut vec![x], min_length, &mut out);
        }
        out
    }

    /// Hasse listing, one line per element: `rank k: id (covers: a, b)`.
    pub fn hasse_dump(&self) -> String {
        let mut lower: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
        for &(x, y) in &self.covers {
            lower.entry(y).or_default().push(&self.ids[x]);
        }
        let mut out = String::new();
        for &i in &self.order {
            let covered = lower.get(&i).map(|v| v.join(", ")).unwrap_or_default();
            let _ = writeln!(out, "rank {}: {} (covers: {})", self.rank[i], self.ids[i], covered);
        }
        out
    }
}

/// `μ(x, y)` for every comparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    /// `rows[x]` = sorted `(y, μ(x, y))` over `y ≥ x`.
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl MobiusTable {
    pub fn get(&self, x: usize, y: usize) -> Option<&BigInt> {
        let row = &self.rows[x];
        row.binary_search_by_key(&y, |e| e.0).ok().map(|i| &row[i].1)
    }

    /// `μ(x, y)`; panics if `x ≰ y`.
    pub fn mu(&self, x: usize, y: usize) -> &BigInt {
        self.get(x, y).expect("Möbius value requested for incomparable pair")
    }

    /// `(y, μ(x, y))` for all `y ≥ x`.
    pub fn row(&self, x: usize) -> &[(usize, BigInt)] {
        &self.rows[x]
    }
}

pub fn mobius_table(p: &Poset) -> MobiusTable {
    mobius_table_with(p, Exec::default())
}

/// Rows are independent, so they are computed in parallel under
/// [`Exec::Parallel`].
pub fn mobius_table_with(p: &Poset, exec: Exec) -> MobiusTable {
    let rows = exec.map_range(p.len(), |x| {
        // μ(x, y) = −Σ_{x ≤ z < y} μ(x, z), y visited in rank order
        let mut values: HashMap<usize, BigInt> = HashMap::new();
        values.insert(x, BigInt::one());
        for &y in &p.order {
            if !p.lt(x, y) {
                continue;
            }
            let mut sum = BigInt::zero();
            for z in p.below[y].iter() {
                if let Some(v) = values.get(&z) {
                    sum += v;
                }
            }
            values.insert(y, -sum);
        }
        let mut row: Vec<(usize, BigInt)> = values.into_iter().collect();
        row.sort_unstable_by_key(|e| e.0);
        row
    });
    MobiusTable { rows }
}

/// `f(y) = Σ_{x ≤ y} μ(x, y) g(x)`: the inverse of summing over lower sets.
pub fn mobius_invert(p: &Poset, mu: &MobiusTable, g: &[Rational]) -> Vec<Rational> {
    assert_eq!(g.len(), p.len(), "one value per element");
    (0..p.len())
        .map(|y| {
            p.lower_set(y)
                .into_iter()
                .map(|x| Rational::from_integer(mu.mu(x, y).clone()) * &g[x])
                .sum()
        })
        .collect()
}

/// `Σ_x μ(0̂, x) t^{n − rank(x)}`.
pub fn characteristic_polynomial_of_poset(p: &Poset, mu: &MobiusTable, n: usize) -> Result<IntPolynomial, PosetError> {
    if n < p.height() {
        return Err(PosetError::DegreeBelowRank { requested: n, rank: p.height() });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for &(x, ref m) in mu.row(p.bottom()) {
        coeffs[n - p.rank(x)] += m;
    }
    Ok(IntPolynomial::new(coeffs))
}
