//! Oracles and fixtures shared by the unit tests.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::LinearCode;
use crate::gf::{Elem, FiniteField};
use crate::matrix::Matrix;

pub(crate) use crate::samples::hamming74;

pub(crate) fn gf(p: u32) -> Arc<FiniteField> {
    Arc::new(FiniteField::prime(p).unwrap())
}

pub(crate) fn pair_c1() -> LinearCode {
    crate::samples::relative_duality_pairs()[0].0.clone()
}

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_field(rng: &mut ChaCha8Rng) -> Arc<FiniteField> {
    let (p, s) = [(2, 1), (3, 1), (2, 2), (5, 1)][rng.gen_range(0..4)];
    Arc::new(FiniteField::new(p, s, None).unwrap())
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, rows: usize, cols: usize) -> Matrix {
    let rows: Vec<Vec<u32>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..f.q())).collect()).collect();
    Matrix::from_rows(f.clone(), &rows).unwrap()
}

pub(crate) fn random_code_over(rng: &mut ChaCha8Rng, f: &Arc<FiniteField>, n: usize, k: usize) -> LinearCode {
    loop {
        if let Ok(c) = LinearCode::new(random_matrix(rng, f, k, n)) {
            return c;
        }
    }
}

pub(crate) fn random_code(rng: &mut ChaCha8Rng, max_n: usize, max_k: usize) -> LinearCode {
    let f = random_field(rng);
    let k = rng.gen_range(1..=max_k);
    let n = rng.gen_range(k..=max_n.max(k));
    random_code_over(rng, &f, n, k)
}

/// All r-dimensional subspaces of GF(q)^k as RREF matrices, by reducing
/// every r x k matrix.
pub(crate) fn brute_grassmannian(f: &Arc<FiniteField>, k: usize, r: usize) -> Vec<Matrix> {
    let q = f.q() as u64;
    let total = q.pow((r * k) as u32);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mut x in 0..total {
        let mut data = Vec::with_capacity(r * k);
        for _ in 0..r * k {
            data.push(Elem((x % q) as u16));
            x /= q;
        }
        let m = Matrix::new(f.clone(), r, k, data).unwrap().rref();
        if m.rank == r && seen.insert(m.matrix.to_rows()) {
            out.push(m.matrix);
        }
    }
    out
}

/// Minimum weight over all nonzero codewords.
pub(crate) fn brute_min_distance(c: &LinearCode) -> usize {
    let q = c.field().q() as u64;
    let f = c.field();
    let g = c.generator();
    let mut best = usize::MAX;
    for mut x in 1..q.pow(c.k() as u32) {
        let mut word = vec![Elem::ZERO; c.n()];
        for i in 0..c.k() {
            let a = Elem((x % q) as u16);
            x /= q;
            for (j, w) in word.iter_mut().enumerate() {
                *w = f.add(*w, f.mul(a, g.get(i, j)));
            }
        }
        best = best.min(word.iter().filter(|e| !e.is_zero()).count());
    }
    best
}

/// Dimension of the subcode of `c` supported inside the 0-based columns `s`:
/// `k - rank(G restricted to the complement of s)`.
fn shortened_dim(c: &LinearCode, in_s: &[bool]) -> usize {
    let rest: Vec<usize> = (0..c.n()).filter(|&j| !in_s[j]).collect();
    c.k() - c.generator().select_columns(&rest).rank()
}

/// `min |S|` such that `dim C1(S) - dim C2(S) >= r`, over all column subsets;
/// with `c2 = None` this is `d_r(C1)`.
pub(crate) fn subset_oracle(c1: &LinearCode, c2: Option<&LinearCode>, r: usize) -> usize {
    let n = c1.n();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || size < r {
            continue;
        }
        let in_s: Vec<bool> = (0..n).map(|j| mask >> j & 1 == 1).collect();
        let mut dim = shortened_dim(c1, &in_s) as isize;
        if let Some(c2) = c2 {
            dim -= shortened_dim(c2, &in_s) as isize;
        }
        if dim >= r as isize {
            best = size;
        }
    }
    best
}
