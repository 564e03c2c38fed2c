//! Information sets, systematic generator matrices and redundancies.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A sequence of information sets `I_1..I_m` (1-based, ascending), the
/// generator matrices `G_j` that are the identity on `I_j`, and the
/// redundancies `R_j = |I_j ∩ (I_1 ∪ ... ∪ I_{j-1})|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfoSetDecomposition {
    pub sets: Vec<Vec<usize>>,
    pub mats: Vec<Matrix>,
    pub reds: Vec<usize>,
}

impl InfoSetDecomposition {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Checks that the decomposition is usable for `code`: every `G_j`
    /// generates the code, is the identity on `I_j`, and the redundancies
    /// match the sets.
    pub fn validate(&self, code: &LinearCode) -> Result<()> {
        let k = code.k();
        if self.sets.is_empty() || self.sets.len() != self.mats.len() || self.sets.len() != self.reds.len() {
            return Err(Error::BadArgs("information sets, matrices and redundancies differ in number".into()));
        }
        let mut seen = vec![false; code.n()];
        for (j, (set, mat)) in self.sets.iter().zip(&self.mats).enumerate() {
            if set.len() != k || set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&c| c == 0 || c > code.n()) {
                return Err(Error::BadArgs(format!("information set {} is malformed", j + 1)));
            }
            if mat.rows() != k || mat.cols() != code.n() || !mat.same_row_space(code.generator()) {
                return Err(Error::BadArgs(format!("matrix {} does not generate the code", j + 1)));
            }
            for (t, &c) in set.iter().enumerate() {
                for i in 0..k {
                    let expect = if i == t { 1 } else { 0 };
                    if mat.get(i, c - 1).index() != expect {
                        return Err(Error::BadArgs(format!("matrix {} is not systematic on its set", j + 1)));
                    }
                }
            }
            let overlap = set.iter().filter(|&&c| seen[c - 1]).count();
            if overlap != self.reds[j] {
                return Err(Error::BadArgs(format!("redundancy {} should be {overlap}", j + 1)));
            }
            for &c in set {
                seen[c - 1] = true;
            }
        }
        Ok(())
    }
}

/// Rank of the columns `cols` (0-based) of `g`.
fn column_rank(g: &Matrix, cols: &[usize]) -> usize {
    g.select_columns(cols).rank()
}

/// Greedy decomposition: each round eliminates on the columns not yet used,
/// lowest index first, and completes a rank-deficient set with the lowest
/// previously used columns that extend the rank. Identically zero columns
/// are never used.
pub fn information(code: &LinearCode) -> InfoSetDecomposition {
    let g = code.generator();
    let k = code.k();
    let n = code.n();
    let nonzero: Vec<bool> = (0..n).map(|c| (0..k).any(|i| !g.get(i, c).is_zero())).collect();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    let mut mats = Vec::new();
    let mut reds = Vec::new();

    loop {
        let unused: Vec<usize> = (0..n).filter(|&c| nonzero[c] && !used[c]).collect();
        if unused.is_empty() {
            break;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        for &c in &unused {
            if chosen.len() == k {
                break;
            }
            chosen.push(c);
            if column_rank(g, &chosen) < chosen.len() {
                chosen.pop();
            }
        }
        let fresh = chosen.len();
        if fresh < k {
            for c in (0..n).filter(|&c| used[c]) {
                if chosen.len() == k {
                    break;
                }
                chosen.push(c);
                if column_rank(g, &chosen) < chosen.len() {
                    chosen.pop();
                }
            }
        }
        debug_assert_eq!(chosen.len(), k);
        chosen.sort_unstable();
        mats.push(systematic(g, &chosen));
        reds.push(k - fresh);
        for &c in &chosen {
            used[c] = true;
        }
        sets.push(chosen.iter().map(|c| c + 1).collect());
    }
    InfoSetDecomposition { sets, mats, reds }
}

/// `(G_I)^{-1} G`, whose columns at `cols` (0-based, ascending) form the identity.
pub(crate) fn systematic(g: &Matrix, cols: &[usize]) -> Matrix {
    let k = g.rows();
    let mut order: Vec<usize> = cols.to_vec();
    order.extend((0..g.cols()).filter(|c| !cols.contains(c)));
    let permuted = g.select_columns(&order);
    let (reduced, pivots) = permuted.rref_with_pivots();
    debug_assert_eq!(pivots, (0..k).collect::<Vec<_>>());
    let mut out = Matrix::zeros(g.field().clone(), k, g.cols());
    for i in 0..k {
        for (t, &c) in order.iter().enumerate() {
            out.set(i, c, reduced.get(i, t));
        }
    }
    out
}
