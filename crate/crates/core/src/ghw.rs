//! Generalized Hamming weights by a Brouwer-Zimmermann style search over
//! subspaces of the message space, plus relative weights, higher weight
//! spectra, Wei duality and an exhaustive reference implementation.
//!
//! A round `w` encodes, through every active systematic generator `G_j`,
//! each r-dimensional message subspace whose support has size `w`. Once
//! `G_j` has processed rounds `r..=w`, every unseen subcode has at least
//! `w + 1 - R_j` nonzero coordinates on the columns that `I_j` adds to the
//! earlier information sets. Summing over `j` bounds the unseen subcodes from
//! below; the search stops once that bound reaches the best weight found.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::code::LinearCode;
use crate::enumerate::{gaussian_binomial, materialize, support_choices0, SubspaceStream};
use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};
use crate::infoset::{information, InfoSetDecomposition};
use crate::matrix::Matrix;

/// Strictly increasing weights `d_1 < d_2 < ...`.
pub type Hierarchy = Vec<usize>;

pub type ProgressSink = Arc<dyn Fn(&RoundEvent) + Send + Sync>;

pub const DEFAULT_WORK_LIMIT: u64 = 1_000_000_000;

#[derive(Clone)]
pub struct ComputeOptions {
    /// Regenerate the subspace stream for every support instead of caching it per round.
    pub low_mem: bool,
    /// Deliver a [`RoundEvent`] to `progress` after every round.
    pub verbose: bool,
    pub progress: Option<ProgressSink>,
    /// Precomputed information sets; computed greedily when absent.
    pub info_sets: Option<InfoSetDecomposition>,
    /// An externally known lower bound on the requested weight.
    pub initial_lower: Option<usize>,
    /// Raise the initial bound with the BCH bound when the code is cyclic.
    pub use_cyclic_bound: bool,
    /// Worker threads; 0 and 1 both mean sequential.
    pub threads: usize,
    /// Largest number of subspaces per dimension a spectrum may enumerate.
    pub work_limit: u64,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        Self {
            low_mem: false,
            verbose: false,
            progress: None,
            info_sets: None,
            initial_lower: None,
            use_cyclic_bound: true,
            threads: 1,
            work_limit: DEFAULT_WORK_LIMIT,
        }
    }
}

impl fmt::Debug for ComputeOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComputeOptions")
            .field("low_mem", &self.low_mem)
            .field("verbose", &self.verbose)
            .field("progress", &self.progress.is_some())
            .field("info_sets", &self.info_sets.as_ref().map(|d| d.len()))
            .field("initial_lower", &self.initial_lower)
            .field("use_cyclic_bound", &self.use_cyclic_bound)
            .field("threads", &self.threads)
            .field("work_limit", &self.work_limit)
            .finish()
    }
}

/// State after one round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundEvent {
    pub r: usize,
    pub w: usize,
    /// Proven lower bound on the result; never above `upper`.
    pub lower: usize,
    pub upper: usize,
    /// Generators processed in this round.
    pub active: usize,
    /// Message subspaces enumerated in this round.
    pub subspaces: u64,
    pub elapsed: Duration,
}

/// A subcode attaining the reported weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Index of the generator in the information set decomposition.
    pub matrix: usize,
    /// `r x k` message basis in reduced row echelon form.
    pub message: Matrix,
    /// `r x n` basis of the subcode, `message * G_j`.
    pub basis: Matrix,
    pub weight: usize,
}

#[derive(Clone, Debug)]
pub struct GhwReport {
    pub r: usize,
    pub value: usize,
    pub witness: Witness,
    pub rounds: Vec<RoundEvent>,
    /// Bound in force before the first round.
    pub initial_lower: usize,
    pub subspaces: u64,
    /// Subspace-generator pairs encoded.
    pub encodings: u64,
}

/// `counts[r][w]`: number of r-dimensional subcodes with support size `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub counts: Vec<BTreeMap<usize, BigUint>>,
}

impl Spectrum {
    pub fn total(&self, r: usize) -> BigUint {
        self.counts.get(r).map(|m| m.values().sum()).unwrap_or_default()
    }

    /// Smallest support size with a nonzero count.
    pub fn min_weight(&self, r: usize) -> Option<usize> {
        self.counts.get(r)?.keys().next().copied()
    }
}

/// A generator matrix systematic on an information set, laid out for the
/// support computation.
struct Encoder {
    generator: Matrix,
    /// columns outside the information set that are not identically zero
    rest: usize,
    /// `k x rest`, row-major
    rest_rows: Vec<Elem>,
    /// `G_j * H2^T`, `k x check_cols`, row-major
    check: Vec<Elem>,
    check_cols: usize,
}

impl Encoder {
    fn new(g: Matrix, info0: &[usize], h2t: Option<&Matrix>) -> Self {
        let k = g.rows();
        let rest_cols: Vec<usize> =
            (0..g.cols()).filter(|c| !info0.contains(c) && (0..k).any(|i| !g.get(i, *c).is_zero())).collect();
        let rest_rows = g.select_columns(&rest_cols).data().to_vec();
        let (check, check_cols) = match h2t {
            Some(h) => {
                let p = g.mat_mul(h).expect("dimensions agree");
                (p.data().to_vec(), p.cols())
            }
            None => (Vec::new(), 0),
        };
        Self { generator: g, rest: rest_cols.len(), rest_rows, check, check_cols }
    }

    /// Column-major `w x rest` block of the rows in `support`.
    fn gather(&self, support: &[usize], out: &mut Vec<Elem>) {
        out.clear();
        for c in 0..self.rest {
            out.extend(support.iter().map(|&s| self.rest_rows[s * self.rest + c]));
        }
    }

    /// True iff the subcode encoded from `re` on `support` meets C2 trivially.
    fn avoids_subcode(&self, f: &Arc<FiniteField>, re: &[Elem], w: usize, support: &[usize]) -> bool {
        let m = self.check_cols;
        let r = re.len() / w;
        let mut prod = vec![Elem::ZERO; r * m];
        for (i, row) in re.chunks_exact(w).enumerate() {
            for (l, &a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let src = &self.check[support[l] * m..(support[l] + 1) * m];
                for (t, &b) in src.iter().enumerate() {
                    prod[i * m + t] = f.add(prod[i * m + t], f.mul(a, b));
                }
            }
        }
        Matrix::from_raw(f.clone(), r, m, prod).rank() == r
    }
}

/// Number of nonzero columns of `re * block`, stopping once `cap` is reached.
#[inline]
fn rest_weight(f: &FiniteField, re: &[Elem], w: usize, block: &[Elem], cap: usize) -> usize {
    let mut count = 0;
    for col in block.chunks_exact(w) {
        for row in re.chunks_exact(w) {
            let mut acc = Elem::ZERO;
            for (&a, &b) in row.iter().zip(col) {
                acc = f.add(acc, f.mul(a, b));
            }
            if !acc.is_zero() {
                count += 1;
                if count >= cap {
                    return count;
                }
                break;
            }
        }
    }
    count
}

enum Source {
    Cached(Vec<Elem>),
    Streamed,
}

impl Source {
    fn new(low_mem: bool, r: usize, w: usize, f: &FiniteField) -> Self {
        if low_mem {
            Source::Streamed
        } else {
            Source::Cached(materialize(r, w, f).expect("1 <= r <= w"))
        }
    }

    /// Calls `body` on every subspace until it returns false.
    fn visit(&self, r: usize, w: usize, f: &FiniteField, mut body: impl FnMut(&[Elem]) -> bool) {
        match self {
            Source::Cached(all) => {
                for re in all.chunks_exact(r * w) {
                    if !body(re) {
                        return;
                    }
                }
            }
            Source::Streamed => {
                let mut stream = SubspaceStream::new(r, w, f).expect("1 <= r <= w");
                while stream.advance() {
                    if !body(stream.current()) {
                        return;
                    }
                }
            }
        }
    }
}

struct Found {
    weight: usize,
    matrix: usize,
    support: Vec<usize>,
    re: Vec<Elem>,
}

#[derive(Default)]
struct RoundOutcome {
    best: Option<Found>,
    subspaces: u64,
    encodings: u64,
}

impl RoundOutcome {
    fn merge(mut self, other: RoundOutcome) -> RoundOutcome {
        self.subspaces += other.subspaces;
        self.encodings += other.encodings;
        self.best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if b.weight < a.weight { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// A code prepared for the search: its generators and redundancies.
struct Problem {
    field: Arc<FiniteField>,
    n: usize,
    k: usize,
    encoders: Vec<Encoder>,
    reds: Vec<usize>,
    relative: bool,
    pool: Option<rayon::ThreadPool>,
}

fn thread_pool(threads: usize) -> Option<rayon::ThreadPool> {
    if threads <= 1 {
        return None;
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().ok()
}

fn parity_transpose(c2: Option<&LinearCode>) -> Result<Option<Matrix>> {
    c2.map(|c| Ok(c.parity_check()?.transpose())).transpose()
}

impl Problem {
    fn new(code: &LinearCode, c2: Option<&LinearCode>, opts: &ComputeOptions) -> Result<Self> {
        let decomposition = match &opts.info_sets {
            Some(d) => {
                d.validate(code)?;
                d.clone()
            }
            None => information(code),
        };
        let h2t = parity_transpose(c2)?;
        let encoders = decomposition
            .mats
            .iter()
            .zip(&decomposition.sets)
            .map(|(g, set)| {
                let info0: Vec<usize> = set.iter().map(|c| c - 1).collect();
                Encoder::new(g.clone(), &info0, h2t.as_ref())
            })
            .collect();
        Ok(Self {
            field: code.field().clone(),
            n: code.n(),
            k: code.k(),
            encoders,
            reds: decomposition.reds,
            relative: c2.is_some(),
            pool: thread_pool(opts.threads),
        })
    }

    /// A single generator in reduced row echelon form.
    fn single(code: &LinearCode, c2: Option<&LinearCode>, opts: &ComputeOptions) -> Result<Self> {
        let rref = code.generator().rref();
        let info0: Vec<usize> = rref.pivots.iter().map(|c| c - 1).collect();
        let h2t = parity_transpose(c2)?;
        Ok(Self {
            field: code.field().clone(),
            n: code.n(),
            k: code.k(),
            encoders: vec![Encoder::new(rref.matrix, &info0, h2t.as_ref())],
            reds: vec![0],
            relative: c2.is_some(),
            pool: thread_pool(opts.threads),
        })
    }

    fn over_supports<T: Send>(
        &self,
        w: usize,
        work: impl Fn(&[usize]) -> T + Sync + Send,
        merge: impl Fn(T, T) -> T + Sync + Send,
        empty: impl Fn() -> T + Sync + Send,
    ) -> T {
        let supports: Vec<Vec<usize>> = support_choices0(self.k, w).collect();
        match &self.pool {
            Some(pool) => pool.install(|| supports.par_iter().map(|s| work(s)).reduce(&empty, &merge)),
            None => supports.iter().map(|s| work(s)).fold(empty(), merge),
        }
    }

    /// Encodes every subspace of round `w` through the `active` generators,
    /// lowering `upper` on strict improvements. Gives up as soon as `upper`
    /// falls to `stop_at`.
    fn round(
        &self,
        r: usize,
        w: usize,
        active: &[usize],
        upper: &AtomicUsize,
        stop_at: usize,
        low_mem: bool,
    ) -> RoundOutcome {
        let f = &*self.field;
        let source = Source::new(low_mem, r, w, f);
        let work = |support: &[usize]| {
            let mut out = RoundOutcome::default();
            let mut cur = upper.load(Ordering::Relaxed);
            if cur <= stop_at || cur <= w {
                return out;
            }
            let blocks: Vec<Vec<Elem>> = active
                .iter()
                .map(|&j| {
                    let mut b = Vec::new();
                    self.encoders[j].gather(support, &mut b);
                    b
                })
                .collect();
            source.visit(r, w, f, |re| {
                out.subspaces += 1;
                for (&j, block) in active.iter().zip(&blocks) {
                    out.encodings += 1;
                    let weight = w + rest_weight(f, re, w, block, cur - w);
                    if weight < cur && (!self.relative || self.encoders[j].avoids_subcode(&self.field, re, w, support))
                    {
                        cur = weight;
                        upper.fetch_min(weight, Ordering::Relaxed);
                        out.best = Some(Found { weight, matrix: j, support: support.to_vec(), re: re.to_vec() });
                    }
                }
                cur = cur.min(upper.load(Ordering::Relaxed));
                cur > stop_at && cur > w
            });
            out
        };
        self.over_supports(w, work, RoundOutcome::merge, RoundOutcome::default)
    }

    fn witness(&self, found: &Found) -> Witness {
        let w = found.support.len();
        let r = found.re.len() / w;
        let mut message = Matrix::zeros(self.field.clone(), r, self.k);
        for i in 0..r {
            for (l, &s) in found.support.iter().enumerate() {
                message.set(i, s, found.re[i * w + l]);
            }
        }
        let basis = message.mat_mul(&self.encoders[found.matrix].generator).expect("dimensions agree");
        Witness { matrix: found.matrix, weight: basis.support_size(), message, basis }
    }

    /// Unit message vectors through `G_1`: the subcode spanned by `r` rows
    /// of a systematic generator has at most `n - k + r` nonzero columns.
    /// For relative problems the rows are chosen greedily to stay
    /// independent modulo C2.
    fn singleton_witness(&self, r: usize) -> Witness {
        let enc = &self.encoders[0];
        let mut rows: Vec<usize> = Vec::with_capacity(r);
        for i in 0..self.k {
            if rows.len() == r {
                break;
            }
            rows.push(i);
            if self.relative {
                let m = enc.check_cols;
                let data: Vec<Elem> =
                    rows.iter().flat_map(|&t| enc.check[t * m..(t + 1) * m].iter().copied()).collect();
                if Matrix::from_raw(self.field.clone(), rows.len(), m, data).rank() < rows.len() {
                    rows.pop();
                }
            }
        }
        let mut message = Matrix::zeros(self.field.clone(), r, self.k);
        for (t, &i) in rows.iter().enumerate() {
            message.set(t, i, Elem::ONE);
        }
        let basis = message.mat_mul(&enc.generator).expect("dimensions agree");
        Witness { matrix: 0, weight: basis.support_size(), message, basis }
    }

    fn contribution(&self, j: usize, last: usize) -> usize {
        (last + 1).saturating_sub(self.reds[j])
    }

    /// The search for one `r`, starting from the proven bound `lower_init`.
    fn solve(&self, r: usize, dim: usize, lower_init: usize, opts: &ComputeOptions) -> GhwReport {
        let start = Instant::now();
        let k = self.k;
        let m = self.encoders.len();
        let upper = AtomicUsize::new(self.n - dim + r);
        let mut best: Option<Found> = None;
        // every message subspace has support at least r
        let mut last = vec![r - 1; m];
        let mut frozen = vec![false; m];
        let formula = |last: &[usize]| (0..m).map(|j| self.contribution(j, last[j])).sum::<usize>();
        let mut lower = lower_init.max(formula(&last));
        let mut rounds = Vec::new();
        let (mut subspaces, mut encodings) = (0u64, 0u64);

        let mut w = r;
        while w <= k && lower < upper.load(Ordering::Relaxed) {
            let u = upper.load(Ordering::Relaxed);
            // smallest round after which the bound would reach u
            let predicted =
                (w..=k).find(|&x| {
                    (0..m)
                        .map(|j| {
                            if frozen[j] {
                                self.contribution(j, last[j])
                            } else {
                                (x + 1).saturating_sub(self.reds[j])
                            }
                        })
                        .sum::<usize>()
                        >= u
                });
            if let Some(w0) = predicted {
                // no contribution even by the last round
                for (flag, &red) in frozen.iter_mut().zip(&self.reds) {
                    *flag |= w0 < red;
                }
                if w == w0 {
                    // each eligible generator adds one; keep just enough of them
                    let base = formula(&last);
                    let need = u - base;
                    let mut eligible: Vec<usize> = (0..m).filter(|&j| !frozen[j] && w + 1 > self.reds[j]).collect();
                    eligible.sort_by_key(|&j| (self.reds[j], j));
                    for &j in eligible.iter().skip(need) {
                        frozen[j] = true;
                    }
                }
            }
            let active: Vec<usize> = (0..m).filter(|&j| !frozen[j]).collect();
            let outcome = self.round(r, w, &active, &upper, lower, opts.low_mem);
            subspaces += outcome.subspaces;
            encodings += outcome.encodings;
            if let Some(found) = outcome.best {
                if best.as_ref().is_none_or(|b| found.weight < b.weight) {
                    best = Some(found);
                }
            }
            for &j in &active {
                last[j] = w;
            }
            lower = lower.max(formula(&last));
            let u = upper.load(Ordering::Relaxed);
            let event = RoundEvent {
                r,
                w,
                lower: lower.min(u),
                upper: u,
                active: active.len(),
                subspaces: outcome.subspaces,
                elapsed: start.elapsed(),
            };
            if opts.verbose {
                if let Some(sink) = &opts.progress {
                    sink(&event);
                }
            }
            rounds.push(event);
            w += 1;
        }

        let value = upper.load(Ordering::Relaxed);
        let witness = match &best {
            Some(found) => self.witness(found),
            None => self.singleton_witness(r),
        };
        debug_assert_eq!(witness.weight, value);
        GhwReport { r, value, witness, rounds, initial_lower: lower_init.min(self.n - dim + r), subspaces, encodings }
    }

    /// Minimum over every subspace through the single generator.
    fn exhaustive_min(&self, r: usize, low_mem: bool) -> usize {
        let upper = AtomicUsize::new(usize::MAX);
        for w in r..=self.k {
            self.round(r, w, &[0], &upper, 0, low_mem);
        }
        upper.load(Ordering::Relaxed)
    }

    /// Exact support-size counts of every r-dimensional subcode through `G_1`.
    fn count_weights(&self, r: usize, low_mem: bool) -> BTreeMap<usize, BigUint> {
        let f = &*self.field;
        let n = self.n;
        let mut totals = vec![0u64; n + 1];
        for w in r..=self.k {
            let source = Source::new(low_mem, r, w, f);
            let work = |support: &[usize]| {
                let mut counts = vec![0u64; n + 1];
                let enc = &self.encoders[0];
                let mut block = Vec::new();
                enc.gather(support, &mut block);
                source.visit(r, w, f, |re| {
                    if !self.relative || enc.avoids_subcode(&self.field, re, w, support) {
                        counts[w + rest_weight(f, re, w, &block, usize::MAX)] += 1;
                    }
                    true
                });
                counts
            };
            let merge = |mut a: Vec<u64>, b: Vec<u64>| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            };
            let counts = self.over_supports(w, work, merge, || vec![0u64; n + 1]);
            totals.iter_mut().zip(counts).for_each(|(x, y)| *x += y);
        }
        totals.into_iter().enumerate().filter(|&(_, c)| c > 0).map(|(w, c)| (w, BigUint::from(c))).collect()
    }
}

fn check_rank(r: usize, max: usize) -> Result<()> {
    if r == 0 || r > max {
        return Err(Error::BadRank { r, max });
    }
    Ok(())
}

fn check_nested(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.field() != c2.field() || c1.n() != c2.n() || !c1.contains(c2) {
        return Err(Error::NotNested);
    }
    Ok(())
}

/// `max(r, opts.initial_lower, b + r - 1)` with `b` the BCH bound of a cyclic code.
fn initial_lower(code: &LinearCode, r: usize, opts: &ComputeOptions) -> usize {
    let mut lower = r.max(opts.initial_lower.unwrap_or(0));
    if opts.use_cyclic_bound && code.is_cyclic() {
        if let Ok(b) = code.bch_bound() {
            lower = lower.max(b + r - 1);
        }
    }
    lower
}

/// The r-th generalized Hamming weight `d_r(C)`.
pub fn ghw(code: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<usize> {
    Ok(ghw_report(code, r, opts)?.value)
}

pub fn ghw_report(code: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<GhwReport> {
    check_rank(r, code.k())?;
    let problem = Problem::new(code, None, opts)?;
    Ok(problem.solve(r, code.k(), initial_lower(code, r, opts), opts))
}

/// The weight hierarchy `[d_1, ..., d_k]`.
pub fn hierarchy(code: &LinearCode, opts: &ComputeOptions) -> Result<Hierarchy> {
    Ok(hierarchy_report(code, opts)?.into_iter().map(|rep| rep.value).collect())
}

/// One report per `r`; each search starts from `d_{r-1} + 1`.
pub fn hierarchy_report(code: &LinearCode, opts: &ComputeOptions) -> Result<Vec<GhwReport>> {
    let problem = Problem::new(code, None, opts)?;
    Ok(chained(&problem, code, code.k(), opts))
}

/// Searches `r = 1..=count` in turn; `k` enters the Singleton-type bound
/// `n - k + r`.
fn chained(problem: &Problem, code: &LinearCode, count: usize, opts: &ComputeOptions) -> Vec<GhwReport> {
    let mut out: Vec<GhwReport> = Vec::with_capacity(count);
    let first = initial_lower(code, 1, opts);
    for r in 1..=count {
        let lower = match out.last() {
            None => first,
            Some(prev) => (prev.value + 1).max(first + r - 1),
        };
        out.push(problem.solve(r, code.k(), lower, opts));
    }
    out
}

/// The r-th relative generalized Hamming weight `M_r(C1, C2)`.
pub fn rghw(c1: &LinearCode, c2: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<usize> {
    Ok(rghw_report(c1, c2, r, opts)?.value)
}

pub fn rghw_report(c1: &LinearCode, c2: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<GhwReport> {
    check_nested(c1, c2)?;
    check_rank(r, c1.k() - c2.k())?;
    let problem = Problem::new(c1, Some(c2), opts)?;
    Ok(problem.solve(r, c1.k(), initial_lower(c1, r, opts), opts))
}

/// The relative hierarchy `[M_1, ..., M_{k1 - k2}]`.
pub fn rhierarchy(c1: &LinearCode, c2: &LinearCode, opts: &ComputeOptions) -> Result<Hierarchy> {
    Ok(rhierarchy_report(c1, c2, opts)?.into_iter().map(|rep| rep.value).collect())
}

pub fn rhierarchy_report(c1: &LinearCode, c2: &LinearCode, opts: &ComputeOptions) -> Result<Vec<GhwReport>> {
    check_nested(c1, c2)?;
    check_rank(1, c1.k() - c2.k())?;
    let problem = Problem::new(c1, Some(c2), opts)?;
    Ok(chained(&problem, c1, c1.k() - c2.k(), opts))
}

fn check_work(k: usize, dims: usize, q: u64, limit: u64) -> Result<()> {
    for r in 1..=dims {
        let count = gaussian_binomial(k, r, q)?;
        if count.to_u64().is_none_or(|c| c > limit) {
            return Err(Error::WorkLimitExceeded { count: count.to_string(), limit });
        }
    }
    Ok(())
}

/// Counts `A_w^(r)` for `r = 0..=k` by enumerating every subcode.
pub fn higher_spectrum(code: &LinearCode, opts: &ComputeOptions) -> Result<Spectrum> {
    check_work(code.k(), code.k(), code.field().q() as u64, opts.work_limit)?;
    let problem = Problem::single(code, None, opts)?;
    spectrum(&problem, code.k(), opts)
}

/// Counts restricted to subcodes of C1 meeting C2 only in zero,
/// for `r = 0..=k1 - k2`.
pub fn rhigher_spectrum(c1: &LinearCode, c2: &LinearCode, opts: &ComputeOptions) -> Result<Spectrum> {
    check_nested(c1, c2)?;
    let dims = c1.k() - c2.k();
    check_work(c1.k(), dims, c1.field().q() as u64, opts.work_limit)?;
    let problem = Problem::single(c1, Some(c2), opts)?;
    spectrum(&problem, dims, opts)
}

fn spectrum(problem: &Problem, dims: usize, opts: &ComputeOptions) -> Result<Spectrum> {
    let mut counts = vec![BTreeMap::from([(0, BigUint::from(1u8))])];
    for r in 1..=dims {
        counts.push(problem.count_weights(r, opts.low_mem));
    }
    Ok(Spectrum { counts })
}

/// The hierarchy of the dual code: `{1..n}` minus `{n + 1 - d : d in h}`.
pub fn wei_duality(h: &[usize], n: usize) -> Result<Hierarchy> {
    if h.iter().any(|&d| d == 0 || d > n) {
        return Err(Error::BadHierarchy(format!("values must lie in 1..={n}")));
    }
    if h.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::BadHierarchy("values must be strictly increasing".into()));
    }
    let mut taken = vec![false; n + 1];
    for &d in h {
        taken[n + 1 - d] = true;
    }
    Ok((1..=n).filter(|&v| !taken[v]).collect())
}

/// The hierarchy, computed on the dual when that is the smaller code.
pub fn hierarchy_auto(code: &LinearCode, opts: &ComputeOptions) -> Result<Hierarchy> {
    let (n, k) = (code.n(), code.k());
    if k == n {
        return Ok((1..=n).collect());
    }
    if 2 * k <= n {
        return hierarchy(code, opts);
    }
    let dual_opts = ComputeOptions { info_sets: None, initial_lower: None, ..opts.clone() };
    wei_duality(&hierarchy(&code.dual()?, &dual_opts)?, n)
}

/// Reference value: the minimum support size over every r-dimensional
/// subcode, enumerated through one generator without any bounds.
pub fn naive_ghw(code: &LinearCode, r: usize) -> Result<usize> {
    naive_ghw_with(code, r, &ComputeOptions::default())
}

/// [`naive_ghw`] honouring `low_mem` and `threads`.
pub fn naive_ghw_with(code: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<usize> {
    check_rank(r, code.k())?;
    Ok(Problem::single(code, None, opts)?.exhaustive_min(r, opts.low_mem))
}

pub fn naive_rghw(c1: &LinearCode, c2: &LinearCode, r: usize) -> Result<usize> {
    naive_rghw_with(c1, c2, r, &ComputeOptions::default())
}

pub fn naive_rghw_with(c1: &LinearCode, c2: &LinearCode, r: usize, opts: &ComputeOptions) -> Result<usize> {
    check_nested(c1, c2)?;
    check_rank(r, c1.k() - c2.k())?;
    Ok(Problem::single(c1, Some(c2), opts)?.exhaustive_min(r, opts.low_mem))
}
