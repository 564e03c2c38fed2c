//! Linear codes, dual codes, subcode encoding, cyclic-code utilities and the
//! Reed-Solomon / Reed-Muller / BCH constructors used for testing.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{gcd, Elem, FiniteField, MAX_Q};
use crate::matrix::Matrix;
use crate::poly;

/// A linear code given by a full-rank `k x n` generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    /// Validates that the rows of `generator` form a basis.
    pub fn new(generator: Matrix) -> Result<Self> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::BadDimension("generator matrix must be nonempty".into()));
        }
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        Ok(Self { generator })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: Arc<FiniteField>, rows: &[R]) -> Result<Self> {
        Self::new(Matrix::from_rows(field, rows)?)
    }

    /// The code spanned by the given rows, dropping dependent ones.
    pub fn span(rows: &Matrix) -> Result<Self> {
        let r = rows.rref();
        if r.rank == 0 {
            return Err(Error::BadDimension("rows span the zero code".into()));
        }
        Self::new(r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>()))
    }

    #[inline]
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    #[inline]
    pub fn field(&self) -> &Arc<FiniteField> {
        self.generator.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Generator matrix of the dual code, i.e. a parity check matrix.
    pub fn parity_check(&self) -> Result<Matrix> {
        if self.k() == self.n() {
            return Err(Error::ZeroDual);
        }
        Ok(self.generator.right_kernel_basis())
    }

    pub fn dual(&self) -> Result<LinearCode> {
        Ok(LinearCode { generator: self.parity_check()? })
    }

    /// True when `sub` is a subcode of `self`.
    pub fn contains(&self, sub: &LinearCode) -> bool {
        self.field() == sub.field() && self.n() == sub.n() && self.generator.row_space_contains(&sub.generator)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }

    /// Number of coordinates where every codeword vanishes.
    pub fn zero_columns(&self) -> usize {
        self.n() - self.generator.support_size()
    }

    /// True iff the right cyclic shift of every generator row lies in the code.
    pub fn is_cyclic(&self) -> bool {
        let n = self.n();
        let g = &self.generator;
        let mut shifted = Matrix::zeros(self.field().clone(), g.rows(), n);
        for i in 0..g.rows() {
            for j in 0..n {
                shifted.set(i, (j + 1) % n, g.get(i, j));
            }
        }
        g.row_space_contains(&shifted)
    }

    /// Monic generator polynomial of a cyclic code, coordinate i being the
    /// coefficient of x^i.
    pub fn generator_polynomial(&self) -> Result<Vec<Elem>> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let f = self.field();
        let mut g = poly::x_n_minus_one(f, self.n());
        for i in 0..self.k() {
            g = poly::gcd(f, &g, self.generator.row(i));
        }
        Ok(g)
    }

    /// The BCH bound: one more than the longest run of consecutive exponents
    /// `i` (mod n) with `g(alpha^i) = 0`.
    pub fn bch_bound(&self) -> Result<usize> {
        let g = self.generator_polynomial()?;
        let n = self.n();
        let split = SplittingField::new(self.field(), n)?;
        let zeros: Vec<bool> = (0..n).map(|i| split.is_root(&g, i)).collect();
        Ok(longest_circular_run(&zeros) + 1)
    }

    /// The code with generator polynomial `g`, which must divide `x^n - 1`.
    pub fn cyclic(field: Arc<FiniteField>, n: usize, g: &[u32]) -> Result<Self> {
        let g: Vec<Elem> = g.iter().map(|&c| field.elem(c as u64)).collect::<Result<_>>()?;
        Self::cyclic_from_poly(field, n, &g)
    }

    pub(crate) fn cyclic_from_poly(field: Arc<FiniteField>, n: usize, g: &[Elem]) -> Result<Self> {
        let deg = poly::degree(g).ok_or_else(|| Error::BadArgs("zero generator polynomial".into()))?;
        if deg >= n {
            return Err(Error::BadArgs(format!("generator degree {deg} leaves no message symbols")));
        }
        if !poly::rem(&field, &poly::x_n_minus_one(&field, n), g).is_empty() {
            return Err(Error::BadArgs("generator polynomial does not divide x^n - 1".into()));
        }
        let k = n - deg;
        let mut m = Matrix::zeros(field, k, n);
        for i in 0..k {
            for (j, &c) in g[..=deg].iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        Self::new(m)
    }

    /// Narrow-sense BCH code of length `n` and designed distance `delta`,
    /// with the same primitive n-th root of unity as [`Self::bch_bound`].
    pub fn bch(field: Arc<FiniteField>, n: usize, delta: usize) -> Result<Self> {
        if delta < 2 || delta > n {
            return Err(Error::BadArgs(format!("designed distance {delta} out of range 2..={n}")));
        }
        let split = SplittingField::new(&field, n)?;
        let q = field.q() as usize;
        let mut in_set = vec![false; n];
        for i in 1..delta {
            let mut j = i % n;
            while !in_set[j] {
                in_set[j] = true;
                j = j * q % n;
            }
        }
        let big = &split.big;
        let mut g = vec![Elem::ONE];
        for (i, _) in in_set.iter().enumerate().filter(|(_, &z)| z) {
            let root = big.pow(split.alpha, i as u64);
            g = poly::mul(big, &g, &[big.neg(root), Elem::ONE]);
        }
        let g = g
            .iter()
            .map(|&c| split.restrict(c).ok_or_else(|| Error::BadArgs("generator not over the base field".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::cyclic_from_poly(field, n, &g)
    }

    /// Reed-Solomon code: row j evaluates x^j at every field element in
    /// ascending index order.
    pub fn reed_solomon(field: Arc<FiniteField>, k: usize) -> Result<Self> {
        let q = field.q() as usize;
        if k == 0 || k > q {
            return Err(Error::BadDimension(format!("k = {k} must lie in 1..={q}")));
        }
        let mut m = Matrix::zeros(field.clone(), k, q);
        for (col, x) in field.elements().enumerate() {
            for j in 0..k {
                m.set(j, col, field.pow(x, j as u64));
            }
        }
        Self::new(m)
    }

    /// q-ary Reed-Muller code of degree `nu < q` in `m` variables.
    ///
    /// Points of F^m are listed in lexicographic order (first coordinate most
    /// significant); monomials of total degree <= nu in graded-lex order.
    pub fn reed_muller(field: Arc<FiniteField>, nu: usize, m: usize) -> Result<Self> {
        let q = field.q() as usize;
        if nu >= q {
            return Err(Error::DegreeOutOfRange { nu, q: field.q() });
        }
        if m == 0 {
            return Err(Error::BadArgs("number of variables must be at least 1".into()));
        }
        let n = (q as u64)
            .checked_pow(m as u32)
            .filter(|&n| n <= MAX_Q)
            .ok_or_else(|| Error::BadArgs(format!("length {q}^{m} is too large")))? as usize;
        let monomials = graded_lex_monomials(m, nu);
        let mut mat = Matrix::zeros(field.clone(), monomials.len(), n);
        for t in 0..n {
            let mut point = vec![Elem::ZERO; m];
            let mut rest = t;
            for c in (0..m).rev() {
                point[c] = Elem((rest % q) as u16);
                rest /= q;
            }
            for (row, exps) in monomials.iter().enumerate() {
                let v = exps.iter().zip(&point).fold(Elem::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)));
                mat.set(row, t, v);
            }
        }
        Self::new(mat)
    }
}

/// Exponent vectors of total degree <= `max`, by degree, then lex descending.
fn graded_lex_monomials(vars: usize, max: usize) -> Vec<Vec<usize>> {
    fn fill(vars: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == vars - 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(vars, remaining - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=max {
        fill(vars, d, &mut Vec::new(), &mut out);
    }
    out
}

fn longest_circular_run(flags: &[bool]) -> usize {
    let n = flags.len();
    if flags.iter().all(|&z| z) {
        return n;
    }
    let mut best = 0;
    let mut run = 0;
    // two passes cover runs that wrap around
    for i in 0..2 * n {
        if flags[i % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best.min(n)
}

/// GF(q^t) with n | q^t - 1, a primitive n-th root of unity and an embedding
/// of GF(q).
pub(crate) struct SplittingField {
    pub(crate) big: FiniteField,
    pub(crate) alpha: Elem,
    embed: Vec<Elem>,
}

impl SplittingField {
    pub(crate) fn new(field: &FiniteField, n: usize) -> Result<Self> {
        let p = field.p();
        if (n as u64).is_multiple_of(p as u64) {
            return Err(Error::CharacteristicDividesLength { p, n });
        }
        let q = field.q() as u64;
        let mut t = 1u32;
        let mut qt = q % n as u64;
        while qt != 1 % n as u64 {
            qt = qt * q % n as u64;
            t += 1;
        }
        let st = field.s() * t;
        if (p as u64).checked_pow(st).is_none_or(|size| size > MAX_Q) {
            return Err(Error::ExtensionTooLarge { q: field.q(), t });
        }
        let big = FiniteField::new(p, st, None)?;
        let embed: Vec<Elem> = if field.s() == 1 {
            field.elements().map(|e| Elem(e.0)).collect()
        } else {
            let modulus: Vec<Elem> = field.modulus().iter().map(|&c| Elem(c as u16)).collect();
            let beta = big
                .elements()
                .find(|&x| poly::eval(&big, &modulus, x).is_zero())
                .expect("an extension of degree s contains a root of the modulus");
            field
                .elements()
                .map(|e| {
                    let d: Vec<Elem> = field.digits(e).into_iter().map(|c| Elem(c as u16)).collect();
                    poly::eval(&big, &d, beta)
                })
                .collect()
        };
        let order = (big.q() - 1) as u64;
        let alpha = big.pow(big.primitive_element(), order / n as u64);
        debug_assert_eq!(gcd(order, n as u64), n as u64);
        Ok(Self { big, alpha, embed })
    }

    fn is_root(&self, g: &[Elem], i: usize) -> bool {
        let x = self.big.pow(self.alpha, i as u64);
        let lifted: Vec<Elem> = g.iter().map(|&c| self.embed[c.0 as usize]).collect();
        poly::eval(&self.big, &lifted, x).is_zero()
    }

    fn restrict(&self, c: Elem) -> Option<Elem> {
        self.embed.iter().position(|&e| e == c).map(|i| Elem(i as u16))
    }
}

/// `RE * Gj`: a generator matrix of the subcode encoded from the row space of `re`.
pub fn encode_subspace(gj: &Matrix, re: &Matrix) -> Result<Matrix> {
    if re.cols() != gj.rows() {
        return Err(Error::DimensionMismatch(format!(
            "subspace has {} columns but the generator has {} rows",
            re.cols(),
            gj.rows()
        )));
    }
    re.mat_mul(gj)
}

/// Size of the support of the subcode encoded from `re` through `gj`.
pub fn support_weight(gj: &Matrix, re: &Matrix) -> Result<usize> {
    Ok(encode_subspace(gj, re)?.support_size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn construction() {
        let f2 = gf(2);
        let c = LinearCode::new(Matrix::identity(f2.clone(), 4)).unwrap();
        assert_eq!((c.n(), c.k()), (4, 4));
        assert_eq!(
            LinearCode::from_rows(f2.clone(), &[[1, 1], [1, 1]]),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        );
        let c1 = pair_c1();
        assert_eq!((c1.n(), c1.k()), (10, 5));
    }

    #[test]
    fn duals() {
        let f2 = gf(2);
        let rep = LinearCode::from_rows(f2.clone(), &[[1, 1]]).unwrap();
        assert!(rep.dual().unwrap().same_code(&rep));

        let ham = hamming74();
        let simplex = ham.dual().unwrap();
        assert_eq!(simplex.k(), 3);
        assert!(ham.generator().mat_mul(&simplex.generator().transpose()).unwrap().is_zero());

        let full = LinearCode::new(Matrix::identity(f2, 4)).unwrap();
        assert_eq!(full.dual(), Err(Error::ZeroDual));
    }

    #[test]
    fn encoding_examples() {
        let ham = hamming74();
        let g = ham.generator();
        let id = Matrix::identity(g.field().clone(), 4);
        assert_eq!(encode_subspace(g, &id).unwrap(), *g);
        let e1 = id.select_rows(&[0]);
        assert_eq!(encode_subspace(g, &e1).unwrap(), g.select_rows(&[0]));
        assert_eq!(support_weight(g, &e1).unwrap(), g.select_rows(&[0]).support_size());
        assert_eq!(support_weight(g, &id).unwrap(), 7);

        let f2 = gf(2);
        let i3 = Matrix::identity(f2.clone(), 3);
        let re = Matrix::from_rows(f2, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(encode_subspace(&i3, &re).unwrap(), re);
        assert!(matches!(encode_subspace(&i3, &e1), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn cyclic_detection() {
        let f2 = gf(2);
        let rep = LinearCode::from_rows(f2.clone(), &[[1, 1, 1]]).unwrap();
        assert!(rep.is_cyclic());
        let not = LinearCode::from_rows(f2.clone(), &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(!not.is_cyclic());
        assert!(LinearCode::new(Matrix::identity(f2, 5)).unwrap().is_cyclic());
        assert_eq!(not.bch_bound(), Err(Error::NotCyclic));
    }

    #[test]
    fn bch_bound_examples() {
        for (p, n) in [(2u32, 7usize), (3, 8), (2, 15), (5, 6)] {
            let f = gf(p);
            let ones = vec![1u32; n];
            let rep = LinearCode::from_rows(f.clone(), &[ones]).unwrap();
            assert_eq!(rep.bch_bound().unwrap(), n);
            let full = LinearCode::new(Matrix::identity(f, n)).unwrap();
            assert_eq!(full.bch_bound().unwrap(), 1);
        }
        let f2 = gf(2);
        let even = LinearCode::new(Matrix::identity(f2.clone(), 4)).unwrap();
        assert!(matches!(even.bch_bound(), Err(Error::CharacteristicDividesLength { .. })));

        // [7,4] cyclic Hamming code, g = 1 + x + x^3
        let h = LinearCode::cyclic(f2.clone(), 7, &[1, 1, 0, 1]).unwrap();
        assert_eq!(h.k(), 4);
        assert_eq!(h.bch_bound().unwrap(), 3);
        assert_eq!(h.generator_polynomial().unwrap(), vec![Elem(1), Elem(1), Elem(0), Elem(1)]);
    }

    #[test]
    fn bch_constructor_meets_designed_distance() {
        let f2 = gf(2);
        let c = LinearCode::bch(f2.clone(), 15, 5).unwrap();
        assert_eq!(c.k(), 7);
        assert!(c.bch_bound().unwrap() >= 5);
        let f4 = Arc::new(FiniteField::new(2, 2, None).unwrap());
        let c = LinearCode::bch(f4, 5, 3).unwrap();
        assert!(c.is_cyclic());
        assert!(c.bch_bound().unwrap() >= 3);
    }

    #[test]
    fn reed_solomon() {
        let f5 = gf(5);
        let c = LinearCode::reed_solomon(f5, 1).unwrap();
        assert_eq!(c.generator().to_rows(), vec![vec![1; 5]]);
        let c = LinearCode::reed_solomon(gf(13), 6).unwrap();
        assert_eq!((c.n(), c.k()), (13, 6));
        let f4 = Arc::new(FiniteField::new(2, 2, None).unwrap());
        assert!(matches!(LinearCode::reed_solomon(f4, 5), Err(Error::BadDimension(_))));
    }

    #[test]
    fn reed_solomon_is_mds() {
        for (p, s) in [(2, 2), (5, 1), (7, 1), (2, 3)] {
            let f = Arc::new(FiniteField::new(p, s, None).unwrap());
            for k in 1..=f.q() as usize {
                let c = LinearCode::reed_solomon(f.clone(), k).unwrap();
                assert_eq!(brute_min_distance(&c), f.q() as usize - k + 1);
            }
        }
    }

    #[test]
    fn reed_muller() {
        let c = LinearCode::reed_muller(gf(2), 1, 2).unwrap();
        assert_eq!((c.n(), c.k()), (4, 3));
        assert_eq!(c.generator().to_rows(), vec![vec![1, 1, 1, 1], vec![0, 0, 1, 1], vec![0, 1, 0, 1]]);
        let c = LinearCode::reed_muller(gf(5), 2, 2).unwrap();
        assert_eq!((c.n(), c.k()), (25, 6));
        assert_eq!(LinearCode::reed_muller(gf(3), 3, 1), Err(Error::DegreeOutOfRange { nu: 3, q: 3 }));
        assert_eq!(
            graded_lex_monomials(2, 2),
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
    }

    #[test]
    fn circular_runs() {
        assert_eq!(longest_circular_run(&[true, false, true, true]), 3);
        assert_eq!(longest_circular_run(&[false, true, true, false]), 2);
        assert_eq!(longest_circular_run(&[false; 3]), 0);
    }
}
