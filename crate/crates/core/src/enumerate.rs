//! Counting and streaming the r-dimensional subspaces of GF(q)^k with a
//! prescribed support.
//!
//! Every subspace is represented by its unique reduced row echelon basis.
//! Subspaces with support exactly `{1..w}` are produced shape by shape: the
//! pivot columns `1 = i_1 < ... < i_r <= w` are unit vectors and every other
//! column between pivots `i_z` and `i_{z+1}` is a nonzero vector supported on
//! the first `z` rows. Any other support of size `w` is reached by spreading
//! the `w` columns over it.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};
use crate::matrix::Matrix;

/// Pivot columns of an RREF shape, 1-based, starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PivotShape(pub Vec<usize>);

/// An `r x w` (or `r x k`) basis matrix in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRref {
    pub matrix: Matrix,
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The Gaussian binomial `[k r]_q`, the number of r-dimensional subspaces of GF(q)^k.
pub fn gaussian_binomial(k: usize, r: usize, q: u64) -> Result<BigUint> {
    if r > k || q < 2 {
        return Err(Error::BadArgs(format!("gaussian_binomial({k}, {r}, {q})")));
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= q.pow((k - i) as u32) - BigUint::one();
        den *= q.pow((i + 1) as u32) - BigUint::one();
    }
    Ok(num / den)
}

/// Number of r-dimensional subspaces of GF(q)^w whose support is all of `{1..w}`,
/// by inclusion-exclusion over coordinate hyperplanes.
pub fn count_full_support(w: usize, r: usize, q: u64) -> Result<BigUint> {
    if r > w || q < 2 {
        return Err(Error::BadArgs(format!("count_full_support({w}, {r}, {q})")));
    }
    let mut total = BigInt::zero();
    for i in 0..=(w - r) {
        let term = BigInt::from(binomial(w, i) * gaussian_binomial(w - i, r, q)?);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.to_biguint().expect("count is nonnegative"))
}

/// `e_w^r`: r-dimensional subspaces of GF(q)^k with support of size exactly `w`.
pub fn count_e(k: usize, w: usize, r: usize, q: u64) -> Result<BigUint> {
    if r > w || w > k {
        return Err(Error::BadArgs(format!("count_e({k}, {w}, {r}, {q})")));
    }
    Ok(binomial(k, w) * count_full_support(w, r, q)?)
}

/// Work estimate `m * sum_{w=r}^{ceil(d/m - 1)} e_w^r` for `m` disjoint
/// information sets and target weight `d`; terms with `w > k` are zero.
pub fn expected_enumeration(m: usize, d: usize, r: usize, k: usize, q: u64) -> BigUint {
    if m == 0 || d == 0 || r > k {
        return BigUint::zero();
    }
    // ceil(d/m - 1) = ceil(d/m) - 1
    let upper = d.div_ceil(m) - 1;
    let mut sum = BigUint::zero();
    for w in r..=upper.min(k) {
        sum += count_e(k, w, r, q).expect("r <= w <= k");
    }
    sum * BigUint::from(m)
}

/// All pivot shapes `(1, i_2, ..., i_r)` with `i_r <= w`, lexicographically.
pub fn pivot_shapes(r: usize, w: usize) -> impl Iterator<Item = PivotShape> {
    let ok = r >= 1 && r <= w;
    (2..=w).combinations(r.saturating_sub(1)).filter(move |_| ok).map(|rest| {
        let mut p = Vec::with_capacity(rest.len() + 1);
        p.push(1);
        p.extend(rest);
        PivotShape(p)
    })
}

/// All vectors of GF(q)^r with Hamming weight between 1 and `z`: by weight,
/// then support positions lexicographically, then values in odometer order.
pub fn columns_up_to_weight(r: usize, z: usize, field: &FiniteField) -> Result<Vec<Vec<Elem>>> {
    if z == 0 || z > r {
        return Err(Error::BadArgs(format!("columns_up_to_weight({r}, {z})")));
    }
    let nonzero = field.nonzero_elements();
    let mut out = Vec::new();
    for y in 1..=z {
        for positions in (0..r).combinations(y) {
            for values in std::iter::repeat_n(nonzero.iter(), y).multi_cartesian_product() {
                let mut v = vec![Elem::ZERO; r];
                for (&pos, &&val) in positions.iter().zip(&values) {
                    v[pos] = val;
                }
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// All `w`-subsets of `{1..k}` in lexicographic order.
pub fn support_choices(k: usize, w: usize) -> impl Iterator<Item = Vec<usize>> {
    let ok = w <= k;
    (1..=k).combinations(w).filter(move |_| ok)
}

pub(crate) fn support_choices0(k: usize, w: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..k).combinations(w)
}

/// Free-column candidates for each `z`: nonzero vectors supported on the
/// first `z` of `r` rows.
struct ColumnTables {
    by_z: Vec<Vec<Elem>>,
    counts: Vec<usize>,
}

impl ColumnTables {
    fn new(r: usize, field: &FiniteField) -> Self {
        let mut by_z = vec![Vec::new()];
        let mut counts = vec![0];
        for z in 1..=r {
            let cols = columns_up_to_weight(z, z, field).expect("1 <= z <= r");
            counts.push(cols.len());
            let mut flat = Vec::with_capacity(cols.len() * r);
            for c in cols {
                flat.extend_from_slice(&c);
                flat.extend(std::iter::repeat_n(Elem::ZERO, r - z));
            }
            by_z.push(flat);
        }
        Self { by_z, counts }
    }
}

/// Streams every `r x w` RREF matrix of rank r with support `{1..w}` exactly
/// once into an internal buffer (row-major). Pivot shapes are visited
/// lexicographically and free columns in odometer order, rightmost fastest.
pub struct SubspaceStream {
    r: usize,
    w: usize,
    shapes: Vec<Vec<usize>>,
    shape: usize,
    tables: ColumnTables,
    /// (column, z) for each free column of the current shape
    free: Vec<(usize, usize)>,
    counters: Vec<usize>,
    buf: Vec<Elem>,
    started: bool,
}

impl SubspaceStream {
    pub fn new(r: usize, w: usize, field: &FiniteField) -> Result<Self> {
        if r == 0 || r > w {
            return Err(Error::BadArgs(format!("subspaces({r}, {w})")));
        }
        let shapes = pivot_shapes(r, w).map(|s| s.0.into_iter().map(|c| c - 1).collect()).collect();
        Ok(Self {
            r,
            w,
            shapes,
            shape: 0,
            tables: ColumnTables::new(r, field),
            free: Vec::new(),
            counters: Vec::new(),
            buf: vec![Elem::ZERO; r * w],
            started: false,
        })
    }

    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.w
    }

    fn write_column(&mut self, col: usize, z: usize, choice: usize) {
        let r = self.r;
        let src = &self.tables.by_z[z][choice * r..(choice + 1) * r];
        for (i, &v) in src.iter().enumerate() {
            self.buf[i * self.w + col] = v;
        }
    }

    fn load_shape(&mut self) {
        let pivots = &self.shapes[self.shape];
        self.buf.iter_mut().for_each(|e| *e = Elem::ZERO);
        self.free.clear();
        let mut z = 0;
        for col in 0..self.w {
            if z < pivots.len() && pivots[z] == col {
                self.buf[z * self.w + col] = Elem::ONE;
                z += 1;
            } else {
                self.free.push((col, z));
            }
        }
        self.counters = vec![0; self.free.len()];
        for t in 0..self.free.len() {
            let (col, z) = self.free[t];
            self.write_column(col, z, 0);
        }
    }

    /// Moves to the next matrix; false once the stream is exhausted.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            if self.shapes.is_empty() {
                return false;
            }
            self.load_shape();
            return true;
        }
        if self.shape >= self.shapes.len() {
            return false;
        }
        for t in (0..self.free.len()).rev() {
            let (col, z) = self.free[t];
            self.counters[t] += 1;
            if self.counters[t] < self.tables.counts[z] {
                self.write_column(col, z, self.counters[t]);
                return true;
            }
            self.counters[t] = 0;
            self.write_column(col, z, 0);
        }
        self.shape += 1;
        if self.shape >= self.shapes.len() {
            return false;
        }
        self.load_shape();
        true
    }

    /// The current matrix, row-major `r x w`.
    pub fn current(&self) -> &[Elem] {
        &self.buf
    }
}

/// Iterator over [`SubspaceRref`] values backed by a [`SubspaceStream`].
pub struct Subspaces {
    field: Arc<FiniteField>,
    stream: SubspaceStream,
}

impl Iterator for Subspaces {
    type Item = SubspaceRref;

    fn next(&mut self) -> Option<SubspaceRref> {
        if !self.stream.advance() {
            return None;
        }
        let matrix = Matrix::from_raw(
            self.field.clone(),
            self.stream.rows(),
            self.stream.cols(),
            self.stream.current().to_vec(),
        );
        Some(SubspaceRref { matrix })
    }
}

/// Every r-dimensional subspace of GF(q)^w with support `{1..w}`, once each.
pub fn subspaces(r: usize, w: usize, field: Arc<FiniteField>) -> Result<Subspaces> {
    let stream = SubspaceStream::new(r, w, &field)?;
    Ok(Subspaces { field, stream })
}

/// All matrices of the stream concatenated (cached mode).
pub(crate) fn materialize(r: usize, w: usize, field: &FiniteField) -> Result<Vec<Elem>> {
    let mut stream = SubspaceStream::new(r, w, field)?;
    let mut out = Vec::new();
    while stream.advance() {
        out.extend_from_slice(stream.current());
    }
    Ok(out)
}

/// Spreads the `w` columns of `re` over the 1-based positions `support` of a
/// `k`-column matrix, zero elsewhere.
pub fn expand_to_support(re: &Matrix, support: &[usize], k: usize) -> Result<Matrix> {
    if support.len() != re.cols()
        || support.windows(2).any(|p| p[0] >= p[1])
        || support.iter().any(|&c| c == 0 || c > k)
    {
        return Err(Error::BadArgs(format!("support {support:?} does not fit {} columns inside 1..={k}", re.cols())));
    }
    let mut out = Matrix::zeros(re.field().clone(), re.rows(), k);
    for i in 0..re.rows() {
        for (l, &c) in support.iter().enumerate() {
            out.set(i, c - 1, re.get(i, l));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;
    use std::collections::BTreeSet;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(5, 0, 3).unwrap(), big(1));
        assert_eq!(gaussian_binomial(3, 1, 2).unwrap(), big(7));
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), big(35));
        assert!(gaussian_binomial(2, 3, 2).is_err());
        assert!(gaussian_binomial(2, 1, 1).is_err());
        // brute force: 2-dim subspaces of GF(2)^4 and 1-dim of GF(2)^3
        assert_eq!(brute_grassmannian(&gf(2), 4, 2).len(), 35);
        assert_eq!(brute_grassmannian(&gf(2), 3, 1).len(), 7);
    }

    #[test]
    fn full_support_counts() {
        for q in [2u64, 3, 5] {
            for r in 1..4 {
                assert_eq!(count_full_support(r, r, q).unwrap(), big(1));
            }
            for w in 1..7 {
                assert_eq!(count_full_support(w, 1, q).unwrap(), big((q - 1).pow(w as u32 - 1)));
            }
        }
        // oracle: filter the 7 two-dimensional subspaces of GF(2)^3
        let full = brute_grassmannian(&gf(2), 3, 2).into_iter().filter(|m| m.support_size() == 3).count();
        assert_eq!(full, 4);
        assert_eq!(count_full_support(3, 2, 2).unwrap(), big(4));
    }

    #[test]
    fn e_counts() {
        assert_eq!(count_e(3, 3, 2, 2).unwrap(), big(4));
        assert_eq!(count_e(4, 3, 2, 2).unwrap(), big(16));
        for (k, w, q) in [(5, 3, 3), (6, 6, 4), (4, 1, 5)] {
            assert_eq!(count_e(k, w, 1, q).unwrap(), binomial(k, w) * big((q - 1).pow(w as u32 - 1)));
        }
        assert!(count_e(3, 4, 1, 2).is_err());
    }

    #[test]
    fn expected_enumeration_values() {
        for r in 1..4 {
            assert_eq!(expected_enumeration(1, r + 1, r, 5, 3), count_e(5, r, r, 3).unwrap());
        }
        // ceil(6/2 - 1) = 2, so only w = 2 contributes: 2 * binom(4,2)
        assert_eq!(expected_enumeration(2, 6, 2, 4, 2), big(12));
        assert_eq!(expected_enumeration(2, 8, 2, 4, 2), big(2 * (6 + 16)));
        assert_eq!(expected_enumeration(3, 6, 2, 4, 2), big(0));
    }

    #[test]
    fn shapes() {
        let s: Vec<_> = pivot_shapes(1, 3).collect();
        assert_eq!(s, vec![PivotShape(vec![1])]);
        let s: Vec<_> = pivot_shapes(2, 3).collect();
        assert_eq!(s, vec![PivotShape(vec![1, 2]), PivotShape(vec![1, 3])]);
        let s: Vec<_> = pivot_shapes(3, 3).collect();
        assert_eq!(s, vec![PivotShape(vec![1, 2, 3])]);
        assert_eq!(pivot_shapes(3, 7).count(), 15);
    }

    #[test]
    fn columns() {
        let f2 = gf(2);
        let e = |v: &[u16]| v.iter().map(|&x| Elem(x)).collect::<Vec<_>>();
        assert_eq!(columns_up_to_weight(2, 1, &f2).unwrap(), vec![e(&[1, 0]), e(&[0, 1])]);
        assert_eq!(columns_up_to_weight(2, 2, &f2).unwrap(), vec![e(&[1, 0]), e(&[0, 1]), e(&[1, 1])]);
        let c = columns_up_to_weight(2, 2, &gf(3)).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(c.iter().collect::<BTreeSet<_>>().len(), 8);
        assert!(columns_up_to_weight(2, 3, &f2).is_err());
    }

    #[test]
    fn subspaces_of_gf2_cubed() {
        let f2 = gf(2);
        let got: BTreeSet<Vec<Vec<u32>>> = subspaces(2, 3, f2.clone()).unwrap().map(|s| s.matrix.to_rows()).collect();
        let want: BTreeSet<Vec<Vec<u32>>> = [
            vec![vec![1, 0, 0], vec![0, 1, 1]],
            vec![vec![1, 0, 1], vec![0, 1, 0]],
            vec![vec![1, 0, 1], vec![0, 1, 1]],
            vec![vec![1, 1, 0], vec![0, 0, 1]],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        assert_eq!(subspaces(2, 3, f2.clone()).unwrap().count(), 4);

        let one: Vec<_> = subspaces(3, 3, gf(5)).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].matrix, Matrix::identity(gf(5), 3));

        let ones: Vec<_> = subspaces(1, 4, f2.clone()).unwrap().collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].matrix.to_rows(), vec![vec![1, 1, 1, 1]]);
        assert!(subspaces(3, 2, f2).is_err());
    }

    #[test]
    fn streams_are_valid_distinct_and_complete() {
        for (p, s) in [(2, 1), (3, 1), (2, 2)] {
            let f = std::sync::Arc::new(FiniteField::new(p, s, None).unwrap());
            for w in 1..=5 {
                for r in 1..=w {
                    let mut seen = BTreeSet::new();
                    for sub in subspaces(r, w, f.clone()).unwrap() {
                        let m = sub.matrix;
                        assert_eq!(m.rref().matrix, m);
                        assert_eq!(m.rank(), r);
                        assert_eq!(m.support_size(), w);
                        assert!(seen.insert(m.to_rows()));
                    }
                    assert_eq!(
                        BigUint::from(seen.len()),
                        count_full_support(w, r, f.q() as u64).unwrap(),
                        "q={} r={r} w={w}",
                        f.q()
                    );
                }
            }
        }
    }

    #[test]
    fn stratified_enumeration_covers_grassmannian() {
        let f2 = gf(2);
        for k in 1..=4 {
            for r in 1..=k {
                let mut got = BTreeSet::new();
                for w in r..=k {
                    let base: Vec<_> = subspaces(r, w, f2.clone()).unwrap().collect();
                    for support in support_choices(k, w) {
                        for b in &base {
                            let m = expand_to_support(&b.matrix, &support, k).unwrap();
                            assert_eq!(m.rref().matrix, m);
                            assert_eq!(m.support(), support);
                            assert!(got.insert(m.to_rows()));
                        }
                    }
                }
                let want: BTreeSet<_> = brute_grassmannian(&f2, k, r).into_iter().map(|m| m.to_rows()).collect();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn sum_of_e_is_gaussian_binomial() {
        for q in [2u64, 3, 4, 5] {
            for k in 1..=6 {
                for r in 1..=k {
                    let total: BigUint = (r..=k).map(|w| count_e(k, w, r, q).unwrap()).sum();
                    assert_eq!(total, gaussian_binomial(k, r, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn expand_examples() {
        let f2 = gf(2);
        let re = Matrix::from_rows(f2.clone(), &[[1, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(expand_to_support(&re, &[1, 2, 3], 3).unwrap(), re);
        let one = Matrix::from_rows(f2.clone(), &[[1]]).unwrap();
        assert_eq!(expand_to_support(&one, &[3], 4).unwrap().to_rows(), vec![vec![0, 0, 1, 0]]);
        let i2 = Matrix::identity(f2, 2);
        assert_eq!(expand_to_support(&i2, &[1, 3], 3).unwrap().to_rows(), vec![vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(expand_to_support(&i2, &[1, 4], 3).is_err());
    }

    #[test]
    fn support_choice_order() {
        assert_eq!(support_choices(3, 3).collect::<Vec<_>>(), vec![vec![1, 2, 3]]);
        assert_eq!(support_choices(3, 2).collect::<Vec<_>>(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(support_choices(4, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
