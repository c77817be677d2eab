//! Brute-force representation theory over `𝔽₂`.
//!
//! Everything here is computed from explicit matrices: Hom spaces from the
//! intertwining equations, submodules from subspace enumeration, extensions
//! from block-triangular twists. None of it consults the closed-form interval
//! rules in [`crate::quiver`], which is the point: the tests compare the two.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intermediate::{h_decomposition, DObj, IntermediateCat};
use crate::lattice::IntVec;
use crate::monoid::CanonicalMonoid;
use crate::quiver::{modules_from, modules_up_to, Interval, LinearAQuiver, ModuleObj};

/// Largest total dimension of a [`Rep`].
pub const MAX_REP_DIM: usize = 12;
/// Largest total dimension accepted by [`all_subreps`].
pub const MAX_SUBREP_DIM: usize = 6;

/// A matrix over `𝔽₂` with at most 64 columns; row `r` is a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl F2Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "at most 64 columns");
        F2Mat {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Mat::zeros(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    /// Matrix whose `k`-th column is the bit vector `cols[k]`.
    pub fn from_columns(rows: usize, cols: &[u64]) -> Self {
        let mut m = F2Mat::zeros(rows, cols.len());
        for (k, &c) in cols.iter().enumerate() {
            for r in 0..rows {
                if c >> r & 1 == 1 {
                    m.data[r] |= 1 << k;
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r] >> c & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if value {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    /// `self · x` for a column vector `x` given as a bitmask.
    pub fn apply(&self, x: u64) -> u64 {
        let mut y = 0;
        for (r, row) in self.data.iter().enumerate() {
            if (row & x).count_ones() % 2 == 1 {
                y |= 1 << r;
            }
        }
        y
    }

    pub fn mul(&self, other: &F2Mat) -> F2Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = F2Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    out.data[r] ^= other.data[k];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&r| r == 0)
    }

    pub fn rank(&self) -> usize {
        f2_rank(self.data.iter().map(|&r| vec![r]).collect())
    }

    fn to_bits(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
            .collect()
    }
}

impl Serialize for F2Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_bits().serialize(s)
    }
}

/// Rank over `𝔽₂` of bitset rows of equal word length.
fn f2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for bit in 0..words * 64 {
        let (w, b) = (bit / 64, bit % 64);
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A representation of `1 ← 2 ← ⋯ ← n` over `𝔽₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Rep {
    dims: Vec<usize>,
    /// `maps[v]` is the arrow `v + 2 → v + 1`, a `dims[v] × dims[v + 1]` matrix.
    maps: Vec<F2Mat>,
}

impl Rep {
    pub fn new(dims: Vec<usize>, maps: Vec<F2Mat>) -> Result<Self> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(Error::InvalidInput(format!(
                "{} vertices need {} arrow matrices, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        let total: usize = dims.iter().sum();
        if total > MAX_REP_DIM {
            return Err(Error::InvalidInput(format!(
                "total dimension {total} exceeds {MAX_REP_DIM}"
            )));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.rows != dims[v] || m.cols != dims[v + 1] {
                return Err(Error::InvalidInput(format!(
                    "arrow {} → {} must be {}×{}, got {}×{}",
                    v + 2,
                    v + 1,
                    dims[v],
                    dims[v + 1],
                    m.rows,
                    m.cols
                )));
            }
        }
        Ok(Rep { dims, maps })
    }

    pub fn zero(n: usize) -> Self {
        Rep {
            dims: vec![0; n],
            maps: (1..n).map(|_| F2Mat::zeros(0, 0)).collect(),
        }
    }

    /// The interval module `[lo, hi]` with identity maps along its support.
    pub fn interval(n: usize, i: Interval) -> Result<Self> {
        LinearAQuiver::new(n)?.interval(i.lo, i.hi)?;
        let dims: Vec<usize> = (1..=n)
            .map(|v| usize::from(i.lo <= v && v <= i.hi))
            .collect();
        let maps = (0..n - 1)
            .map(|v| {
                let mut m = F2Mat::zeros(dims[v], dims[v + 1]);
                if dims[v] == 1 && dims[v + 1] == 1 {
                    m.set(0, 0, true);
                }
                m
            })
            .collect();
        Rep::new(dims, maps)
    }

    pub fn from_module(n: usize, m: &ModuleObj) -> Result<Self> {
        m.summands().iter().try_fold(Rep::zero(n), |acc, &i| {
            acc.direct_sum(&Rep::interval(n, i)?)
        })
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[F2Mat] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        same_n(self, other)?;
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = (0..self.n() - 1)
            .map(|v| {
                let mut m = F2Mat::zeros(dims[v], dims[v + 1]);
                let (r0, c0) = (self.dims[v], self.dims[v + 1]);
                for r in 0..r0 {
                    m.data[r] = self.maps[v].data[r];
                }
                for r in 0..other.dims[v] {
                    m.data[r0 + r] = other.maps[v].data[r] << c0;
                }
                m
            })
            .collect();
        Rep::new(dims, maps)
    }
}

fn same_n(x: &Rep, y: &Rep) -> Result<()> {
    if x.n() == y.n() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "representations of quivers with {} and {} vertices",
            x.n(),
            y.n()
        )))
    }
}

/// `dim Hom(X, Y)`: the nullity of the intertwining system
/// `φ_v ∘ X_α = Y_α ∘ φ_{v+1}` for every arrow `α: v + 1 → v`.
pub fn hom_dim(x: &Rep, y: &Rep) -> Result<usize> {
    same_n(x, y)?;
    let n = x.n();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offset[n];
    if unknowns == 0 {
        return Ok(0);
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * x.dims[v] + c;
    let words = unknowns.div_ceil(64);
    let mut rows = Vec::new();
    for v in 0..n - 1 {
        let (xa, ya) = (&x.maps[v], &y.maps[v]);
        for r in 0..y.dims[v] {
            for c in 0..x.dims[v + 1] {
                let mut row = vec![0u64; words];
                let mut flip = |i: usize| row[i / 64] ^= 1 << (i % 64);
                for k in 0..y.dims[v + 1] {
                    if ya.get(r, k) {
                        flip(var(v + 1, k, c));
                    }
                }
                for k in 0..x.dims[v] {
                    if xa.get(k, c) {
                        flip(var(v, r, k));
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(unknowns - f2_rank(rows))
}

/// A subspace of `𝔽₂^d` (`d ≤ 6`) as an element set and a reduced echelon basis.
#[derive(Debug, Clone)]
struct Subspace {
    members: u64,
    basis: Vec<u64>,
}

impl Subspace {
    fn contains(&self, v: u64) -> bool {
        self.members >> v & 1 == 1
    }

    /// Coordinates of a member in the reduced basis.
    fn coords(&self, v: u64) -> u64 {
        let mut c = 0;
        for (k, b) in self.basis.iter().enumerate() {
            let pivot = 63 - b.leading_zeros();
            if v >> pivot & 1 == 1 {
                c |= 1 << k;
            }
        }
        c
    }
}

fn reduced_basis(members: u64) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for v in (0..64u64).filter(|v| members >> v & 1 == 1) {
        let mut w = v;
        for b in &basis {
            let pivot = 63 - b.leading_zeros();
            if w >> pivot & 1 == 1 {
                w ^= b;
            }
        }
        if w != 0 {
            let pivot = 63 - w.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> pivot & 1 == 1 {
                    *b ^= w;
                }
            }
            basis.push(w);
        }
    }
    basis.sort_by_key(|b| std::cmp::Reverse(63 - b.leading_zeros()));
    basis
}

fn subspaces(d: usize) -> Vec<Subspace> {
    assert!(d <= MAX_SUBREP_DIM);
    let size = 1u64 << d;
    let mut seen: HashSet<u64> = HashSet::from([1]);
    let mut frontier = vec![1u64];
    while let Some(s) = frontier.pop() {
        for v in 0..size {
            if s >> v & 1 == 1 {
                continue;
            }
            let mut grown = s;
            for x in (0..size).filter(|x| s >> x & 1 == 1) {
                grown |= 1 << (x ^ v);
            }
            if seen.insert(grown) {
                frontier.push(grown);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out.into_iter()
        .map(|members| Subspace {
            members,
            basis: reduced_basis(members),
        })
        .collect()
}

/// A subrepresentation with its inclusion maps.
#[derive(Debug, Clone, Serialize)]
pub struct SubRep {
    pub rep: Rep,
    /// `inclusion[v]` has the chosen basis of `U_v` as columns.
    pub inclusion: Vec<F2Mat>,
}

/// Every tuple of subspaces `U_v ⊆ X_v` with `X_α(U_{v+1}) ⊆ U_v`.
pub fn all_subreps(x: &Rep) -> Result<Vec<SubRep>> {
    if x.total_dim() > MAX_SUBREP_DIM {
        return Err(Error::InvalidInput(format!(
            "subrepresentation enumeration is limited to total dimension {MAX_SUBREP_DIM}"
        )));
    }
    let spaces: Vec<Vec<Subspace>> = x.dims.iter().map(|&d| subspaces(d)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = vec![0; x.n()];
    choose_subspaces(x, &spaces, x.n(), &mut chosen, &mut out);
    Ok(out)
}

fn choose_subspaces(
    x: &Rep,
    spaces: &[Vec<Subspace>],
    v: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<SubRep>,
) {
    if v == 0 {
        out.push(build_subrep(x, spaces, chosen));
        return;
    }
    let v = v - 1;
    for (k, u) in spaces[v].iter().enumerate() {
        if v + 1 < x.n() {
            let above = &spaces[v + 1][chosen[v + 1]];
            if !above.basis.iter().all(|&b| u.contains(x.maps[v].apply(b))) {
                continue;
            }
        }
        chosen[v] = k;
        choose_subspaces(x, spaces, v, chosen, out);
    }
}

fn build_subrep(x: &Rep, spaces: &[Vec<Subspace>], chosen: &[usize]) -> SubRep {
    let us: Vec<&Subspace> = chosen
        .iter()
        .enumerate()
        .map(|(v, &k)| &spaces[v][k])
        .collect();
    let dims: Vec<usize> = us.iter().map(|u| u.basis.len()).collect();
    let maps = (0..x.n() - 1)
        .map(|v| {
            let cols: Vec<u64> = us[v + 1]
                .basis
                .iter()
                .map(|&b| us[v].coords(x.maps[v].apply(b)))
                .collect();
            F2Mat::from_columns(dims[v], &cols)
        })
        .collect();
    let inclusion = us
        .iter()
        .enumerate()
        .map(|(v, u)| F2Mat::from_columns(x.dims[v], &u.basis))
        .collect();
    SubRep {
        rep: Rep::new(dims, maps).expect("subrepresentation of a valid representation"),
        inclusion,
    }
}

/// Hom-fingerprint solver: `dim Hom(I, X) = Σ_J m_J · dim Hom(I, J)` has a
/// unique solution because the matrix `dim Hom(I, J)` is invertible.
struct Decomposer {
    intervals: Vec<Interval>,
    reps: Vec<Rep>,
    inverse: Vec<Vec<Ratio<i64>>>,
}

impl Decomposer {
    fn new(n: usize) -> Result<Self> {
        let q = LinearAQuiver::new(n)?;
        let intervals = q.intervals();
        let reps: Vec<Rep> = intervals
            .iter()
            .map(|&i| Rep::interval(n, i))
            .collect::<Result<_>>()?;
        let m = reps.len();
        let mut h: Vec<Vec<Ratio<i64>>> = Vec::with_capacity(m);
        for a in &reps {
            let row = reps
                .iter()
                .map(|b| hom_dim(a, b).map(|d| Ratio::from_integer(d as i64)))
                .collect::<Result<Vec<_>>>()?;
            h.push(row);
        }
        let inverse = invert(h).ok_or_else(|| {
            Error::DecompositionFailed("hom matrix of interval modules is singular".into())
        })?;
        Ok(Decomposer {
            intervals,
            reps,
            inverse,
        })
    }

    fn decompose(&self, x: &Rep) -> Result<ModuleObj> {
        let f: Vec<Ratio<i64>> = self
            .reps
            .iter()
            .map(|i| hom_dim(i, x).map(|d| Ratio::from_integer(d as i64)))
            .collect::<Result<_>>()?;
        let mut summands = Vec::new();
        for (row, &interval) in self.inverse.iter().zip(&self.intervals) {
            let m: Ratio<i64> = row.iter().zip(&f).map(|(a, b)| a * b).sum();
            if !m.is_integer() || m.is_negative() {
                return Err(Error::DecompositionFailed(format!(
                    "multiplicity of {interval} would be {m}"
                )));
            }
            summands.extend(std::iter::repeat_n(interval, *m.numer() as usize));
        }
        let result = ModuleObj::new(summands);
        if result.dim_vector(x.n()) != x.dims {
            return Err(Error::DecompositionFailed(format!(
                "fingerprint solution {result} has the wrong dimension vector"
            )));
        }
        Ok(result)
    }
}

fn invert(mut a: Vec<Vec<Ratio<i64>>>) -> Option<Vec<Vec<Ratio<i64>>>> {
    let m = a.len();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for col in 0..m {
        let p = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let lead = a[col][col];
        for j in 0..m {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..m {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

fn decomposer(n: usize) -> Result<Arc<Decomposer>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Decomposer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().expect("cache lock").get(&n) {
        return Ok(d.clone());
    }
    let d = Arc::new(Decomposer::new(n)?);
    cache.lock().expect("cache lock").insert(n, d.clone());
    Ok(d)
}

/// Krull–Schmidt decomposition into interval modules.
pub fn decompose(x: &Rep) -> Result<ModuleObj> {
    decomposer(x.n())?.decompose(x)
}

/// A short exact sequence `0 → sub → mid → quot → 0`.
#[derive(Debug, Clone, Serialize)]
pub struct SESRecord {
    pub sub: Rep,
    pub mid: Rep,
    pub quot: Rep,
    pub inclusion: Vec<F2Mat>,
    pub projection: Vec<F2Mat>,
    /// Decomposition of `mid`.
    pub middle: ModuleObj,
}

impl SESRecord {
    /// Injective inclusion, surjective projection, zero composite, exactness
    /// by rank count, and both maps intertwine the arrows.
    pub fn is_valid(&self) -> bool {
        let n = self.mid.n();
        (0..n).all(|v| {
            let (i, p) = (&self.inclusion[v], &self.projection[v]);
            i.rank() == self.sub.dims[v]
                && p.rank() == self.quot.dims[v]
                && p.mul(i).is_zero()
                && self.sub.dims[v] + self.quot.dims[v] == self.mid.dims[v]
        }) && (0..n - 1).all(|v| {
            self.mid.maps[v].mul(&self.inclusion[v + 1]) == self.inclusion[v].mul(&self.sub.maps[v])
                && self.projection[v].mul(&self.mid.maps[v])
                    == self.quot.maps[v].mul(&self.projection[v + 1])
        })
    }

    pub fn is_split(&self) -> Result<bool> {
        Ok(self.middle == decompose(&self.sub)?.direct_sum(&decompose(&self.quot)?))
    }
}

/// Largest total dimension of each end term accepted by [`all_ses`].
pub const MAX_SES_END_DIM: usize = 4;

/// Extensions of `c` by `a`, one record per isomorphism class of middle term.
///
/// Middles are `a ⊕ c` with arrow matrices `[[a_α, t_α], [0, c_α]]` for every
/// choice of twist blocks `t_α: c_{v+1} → a_v`.
pub fn all_ses(a: &Rep, c: &Rep) -> Result<Vec<SESRecord>> {
    same_n(a, c)?;
    if a.total_dim() > MAX_SES_END_DIM || c.total_dim() > MAX_SES_END_DIM {
        return Err(Error::InvalidInput(format!(
            "extension enumeration is limited to end terms of dimension {MAX_SES_END_DIM}"
        )));
    }
    let n = a.n();
    let split = a.direct_sum(c)?;
    let blocks: Vec<(usize, usize)> = (0..n - 1).map(|v| (a.dims[v], c.dims[v + 1])).collect();
    let bits: usize = blocks.iter().map(|(r, c)| r * c).sum();
    let inclusion: Vec<F2Mat> = (0..n)
        .map(|v| {
            let cols: Vec<u64> = (0..a.dims[v]).map(|k| 1 << k).collect();
            F2Mat::from_columns(split.dims[v], &cols)
        })
        .collect();
    let projection: Vec<F2Mat> = (0..n)
        .map(|v| {
            let mut p = F2Mat::zeros(c.dims[v], split.dims[v]);
            for k in 0..c.dims[v] {
                p.set(k, a.dims[v] + k, true);
            }
            p
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in 0u64..1 << bits {
        let mut mid = split.clone();
        let mut used = 0;
        for (v, &(rows, cols)) in blocks.iter().enumerate() {
            for r in 0..rows {
                for k in 0..cols {
                    if t >> used & 1 == 1 {
                        mid.maps[v].set(r, a.dims[v + 1] + k, true);
                    }
                    used += 1;
                }
            }
        }
        let middle = decompose(&mid)?;
        if seen.insert(middle.clone()) {
            out.push(SESRecord {
                sub: a.clone(),
                mid,
                quot: c.clone(),
                inclusion: inclusion.clone(),
                projection: projection.clone(),
                middle,
            });
        }
    }
    Ok(out)
}

/// Subobjects and extension middles of every module in a dimension window,
/// computed once and shared by the definitional checks.
#[derive(Debug, Clone)]
pub struct ModuleWindow {
    n: usize,
    bound: usize,
    objects: Vec<ModuleObj>,
    subobjects: HashMap<ModuleObj, BTreeSet<ModuleObj>>,
    middles: HashMap<(ModuleObj, ModuleObj), BTreeSet<ModuleObj>>,
}

impl ModuleWindow {
    /// Modules of total dimension `≤ bound`; extensions are recorded for pairs
    /// whose dimensions add up to at most `bound`.
    pub fn new(n: usize, bound: usize) -> Result<Self> {
        let q = LinearAQuiver::new(n)?;
        if bound > MAX_SES_END_DIM.min(MAX_SUBREP_DIM) + 1 {
            return Err(Error::InvalidInput(format!(
                "window bound {bound} is too large"
            )));
        }
        let objects = modules_up_to(&q, bound);
        let reps: Vec<Rep> = objects
            .iter()
            .map(|m| Rep::from_module(n, m))
            .collect::<Result<_>>()?;
        let mut subobjects = HashMap::new();
        for (m, r) in objects.iter().zip(&reps) {
            let subs = all_subreps(r)?
                .iter()
                .map(|s| decompose(&s.rep))
                .collect::<Result<BTreeSet<_>>>()?;
            subobjects.insert(m.clone(), subs);
        }
        let mut middles = HashMap::new();
        for (a, ra) in objects.iter().zip(&reps) {
            for (c, rc) in objects.iter().zip(&reps) {
                if a.total_dim() + c.total_dim() > bound
                    || a.total_dim() > MAX_SES_END_DIM
                    || c.total_dim() > MAX_SES_END_DIM
                {
                    continue;
                }
                let mids: BTreeSet<ModuleObj> =
                    all_ses(ra, rc)?.into_iter().map(|s| s.middle).collect();
                middles.insert((a.clone(), c.clone()), mids);
            }
        }
        Ok(ModuleWindow {
            n,
            bound,
            objects,
            subobjects,
            middles,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn objects(&self) -> &[ModuleObj] {
        &self.objects
    }

    /// Isomorphism classes of subobjects, zero included.
    pub fn subobjects(&self, m: &ModuleObj) -> Option<&BTreeSet<ModuleObj>> {
        self.subobjects.get(m)
    }

    /// Middle terms `B` of sequences `0 → sub → B → quot → 0`.
    pub fn middles(&self, sub: &ModuleObj, quot: &ModuleObj) -> Option<&BTreeSet<ModuleObj>> {
        self.middles.get(&(sub.clone(), quot.clone()))
    }

    /// `(sub, quot, middle)` for every recorded sequence, in window order.
    pub fn sequences(&self) -> Vec<(ModuleObj, ModuleObj, ModuleObj)> {
        let mut out = Vec::new();
        for a in &self.objects {
            for c in &self.objects {
                if let Some(ms) = self.middles(a, c) {
                    for b in ms {
                        out.push((a.clone(), c.clone(), b.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Definitional torsionfree check on the window: `add T` is closed under
/// every subobject and every extension middle the window records.
pub fn is_torsionfree_window(w: &ModuleWindow, t: &BTreeSet<Interval>) -> bool {
    let inside = |m: &ModuleObj| m.summands().iter().all(|s| t.contains(s));
    let members: Vec<&ModuleObj> = w.objects.iter().filter(|m| inside(m)).collect();
    for m in &members {
        if !w.subobjects[*m].iter().all(inside) {
            return false;
        }
    }
    for a in &members {
        for c in &members {
            if let Some(ms) = w.middles(a, c) {
                if !ms.iter().all(inside) {
                    return false;
                }
            }
        }
    }
    true
}

/// Verdict of [`is_quasi_split_window`].
#[derive(Debug, Clone, Serialize)]
pub struct QuasiSplitVerdict {
    pub holds: bool,
    pub witness: Option<SESRecord>,
}

/// Whether every sequence with `dim sub + dim quot ≤ dim_bound` splits.
pub fn is_quasi_split_window(n: usize, dim_bound: usize) -> Result<QuasiSplitVerdict> {
    let q = LinearAQuiver::new(n)?;
    let objects = modules_up_to(&q, dim_bound);
    for a in &objects {
        for c in &objects {
            if a.total_dim() + c.total_dim() > dim_bound || a.is_zero() || c.is_zero() {
                continue;
            }
            let (ra, rc) = (Rep::from_module(n, a)?, Rep::from_module(n, c)?);
            for s in all_ses(&ra, &rc)? {
                if s.middle != a.direct_sum(c) {
                    return Ok(QuasiSplitVerdict {
                        holds: false,
                        witness: Some(s),
                    });
                }
            }
        }
    }
    Ok(QuasiSplitVerdict {
        holds: true,
        witness: None,
    })
}

/// `middle ~ ends`, the relation a conflation imposes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CEquation {
    pub middle: DObj,
    pub ends: DObj,
}

impl CEquation {
    pub fn new(middle: DObj, left: &DObj, right: &DObj) -> Self {
        CEquation {
            middle,
            ends: left.direct_sum(right),
        }
    }
}

/// A partition of window indices; classes are sorted and ordered by their
/// smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn discrete(size: usize) -> Self {
        Partition {
            classes: (0..size).map(|i| vec![i]).collect(),
        }
    }

    /// Groups indices by key.
    pub fn from_keys<K: Eq + std::hash::Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, k) in keys.into_iter().enumerate() {
            let c = *index.entry(k).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
        }
        Partition { classes }
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let roots: Vec<usize> = (0..uf.parent.len()).map(|i| uf.find(i)).collect();
        Partition::from_keys(roots)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every element.
    pub fn labels(&self) -> Vec<usize> {
        let size = self.classes.iter().map(Vec::len).sum();
        let mut out = vec![0; size];
        for (k, c) in self.classes.iter().enumerate() {
            for &i in c {
                out[i] = k;
            }
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut j = i;
        while self.parent[j] != root {
            let next = self.parent[j];
            self.parent[j] = root;
            j = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// The finest partition of `window` identifying each equation's two sides and
/// closed under adding a common summand, as far as the window allows.
pub fn c_equiv_closure(window: &[DObj], equations: &[CEquation]) -> Result<Partition> {
    let index: HashMap<&DObj, usize> = window.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut uf = UnionFind::new(window.len());
    for e in equations {
        for side in [&e.middle, &e.ends] {
            if !index.contains_key(side) {
                return Err(Error::WindowNotClosed(format!(
                    "{side} from the equation {} ~ {} is outside the window",
                    e.middle, e.ends
                )));
            }
        }
        let (a, b) = (index[&e.middle], index[&e.ends]);
        uf.union(a, b);
        for z in window {
            if let (Some(&x), Some(&y)) = (
                index.get(&e.middle.direct_sum(z)),
                index.get(&e.ends.direct_sum(z)),
            ) {
                uf.union(x, y);
            }
        }
    }
    // a chain may leave the window after adding a summand even though its
    // endpoints do not, so close the relation itself under common summands
    loop {
        let mut changed = false;
        let part = Partition::from_union_find(&mut uf);
        for class in part.classes() {
            let first = &window[class[0]];
            for &other in &class[1..] {
                for z in window {
                    if let (Some(&x), Some(&y)) = (
                        index.get(&first.direct_sum(z)),
                        index.get(&window[other].direct_sum(z)),
                    ) {
                        changed |= uf.union(x, y);
                    }
                }
            }
        }
        if !changed {
            return Ok(Partition::from_union_find(&mut uf));
        }
    }
}

/// `add`-window of modules viewed as objects in degree zero.
pub fn module_dobjs(objects: &[ModuleObj]) -> Vec<DObj> {
    objects.iter().cloned().map(DObj::module).collect()
}

/// Conflations of `mod kA_n` recorded in the window.
pub fn abelian_equations(w: &ModuleWindow) -> Vec<CEquation> {
    w.sequences()
        .into_iter()
        .map(|(a, c, b)| CEquation::new(DObj::module(b), &DObj::module(a), &DObj::module(c)))
        .collect()
}

/// Generating conflations of `C = F[1] * A` inside the window of total
/// dimension `≤ w.bound()`:
///
/// 1. short exact sequences of modules;
/// 2. the cohomology conflations `H⁻¹(X)[1] → X → H⁰(X)`;
/// 3. `G → 0 → G[1]` for `G ∈ add F`;
/// 4. shifted sequences `A[1] → B[1] → C[1]` with all terms in `add F`;
/// 5. rotations of `0 → A → B → Q → 0` with `A ∈ add F`: `B → Q → A[1]`, and when
///    also `B ∈ add F`, `Q → A[1] → B[1]`.
pub fn intermediate_equations(c: &IntermediateCat, w: &ModuleWindow) -> Vec<CEquation> {
    let bound = w.bound();
    let in_f = |m: &ModuleObj| c.torf().contains_obj(m);
    let mut out: BTreeSet<CEquation> = BTreeSet::new();
    for (a, q, b) in w.sequences() {
        let (da, db) = (DObj::module(a.clone()), DObj::module(b.clone()));
        let dq = DObj::module(q.clone());
        out.insert(CEquation::new(db.clone(), &da, &dq));
        if in_f(&a) && in_f(&b) && in_f(&q) {
            out.insert(CEquation::new(
                DObj::shifted(b.clone()),
                &DObj::shifted(a.clone()),
                &DObj::shifted(q.clone()),
            ));
        }
        if in_f(&a) {
            out.insert(CEquation::new(dq.clone(), &db, &DObj::shifted(a.clone())));
        }
        if in_f(&a) && in_f(&b) {
            out.insert(CEquation::new(
                DObj::shifted(a.clone()),
                &dq,
                &DObj::shifted(b.clone()),
            ));
        }
    }
    for x in c.window(bound) {
        let h = h_decomposition(&x);
        out.insert(CEquation::new(h.middle, &h.left, &h.right));
    }
    let f: Vec<Interval> = c.torf().intervals().iter().copied().collect();
    for g in modules_from(&f, bound / 2) {
        out.insert(CEquation::new(
            DObj::default(),
            &DObj::module(g.clone()),
            &DObj::shifted(g),
        ));
    }
    out.into_iter()
        .filter(|e| e.middle.total_dim() <= bound && e.ends.total_dim() <= bound)
        .collect()
}

/// `subset` is a union of partition classes.
pub fn is_c_closed_window(subset: &dyn Fn(&DObj) -> bool, window: &[DObj], p: &Partition) -> bool {
    p.classes().iter().all(|class| {
        class
            .iter()
            .all(|&i| subset(&window[i]) == subset(&window[class[0]]))
    })
}

/// `subset` is closed under sums and summands (within the window) and is c-closed.
pub fn is_serre_window(subset: &dyn Fn(&DObj) -> bool, window: &[DObj], p: &Partition) -> bool {
    let index: HashSet<&DObj> = window.iter().collect();
    for x in window {
        for y in window {
            let s = x.direct_sum(y);
            if !index.contains(&s) {
                continue;
            }
            if subset(&s) != (subset(x) && subset(y)) {
                return false;
            }
        }
    }
    is_c_closed_window(subset, window, p)
}

/// Definitional congruence of `ambient / ⟨gens⟩` on a coordinate window:
/// `x ~ y` when `x + m = y + m'` in `ambient` for `m, m'` sums of generators
/// with coefficients `≤ coef_bound`, closed transitively inside the window.
pub fn congruence_partition(
    ambient: &CanonicalMonoid,
    gens: &[IntVec],
    window: &[IntVec],
    coef_bound: u32,
) -> Result<Partition> {
    let rank = ambient.rank();
    let mut sums: Vec<IntVec> = vec![vec![BigInt::zero(); rank]];
    for g in gens {
        ambient.elem(g.clone())?;
        let mut next = Vec::with_capacity(sums.len() * (coef_bound as usize + 1));
        for s in &sums {
            for k in 0..=coef_bound {
                let k = BigInt::from(k);
                next.push(s.iter().zip(g).map(|(a, b)| a + &k * b).collect::<IntVec>());
            }
        }
        sums = next;
    }
    let relations = ambient.relations();
    let mut diffs: HashSet<IntVec> = HashSet::new();
    for m in &sums {
        for m2 in &sums {
            let d: IntVec = m2.iter().zip(m).map(|(a, b)| a - b).collect();
            diffs.insert(relations.reduce(&d)?);
        }
    }
    let index: HashMap<IntVec, usize> = window
        .iter()
        .enumerate()
        .map(|(i, x)| Ok((relations.reduce(x)?, i)))
        .collect::<Result<_>>()?;
    let mut uf = UnionFind::new(window.len());
    for (i, x) in window.iter().enumerate() {
        // x − y = m' − m  ⟺  y = x − (m' − m)
        for d in &diffs {
            let y: IntVec = x.iter().zip(d).map(|(a, b)| a - b).collect();
            if let Some(&j) = index.get(&relations.reduce(&y)?) {
                uf.union(i, j);
            }
        }
    }
    // window points that coincide in the ambient monoid are one element
    for (i, x) in window.iter().enumerate() {
        uf.union(i, index[&relations.reduce(x)?]);
    }
    Ok(Partition::from_union_find(&mut uf))
}

/// Subgroup membership classes of `mod kA_n` for the dense 2-out-of-3 check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseVerdict {
    pub two_out_of_three: bool,
    pub dense: bool,
    /// An object of the window with no complement found.
    pub undense_witness: Option<ModuleObj>,
}

impl DenseVerdict {
    pub fn holds(&self) -> bool {
        self.two_out_of_three && self.dense
    }
}

/// Checks `member` for 2-out-of-3 along every recorded sequence and for
/// density: each window object `X` has a semisimple `X'` with dimension vector
/// in `[0, search]ⁿ` and `member(X ⊕ X')`.
pub fn dense_two_out_of_three(
    w: &ModuleWindow,
    member: &dyn Fn(&ModuleObj) -> bool,
    search: usize,
) -> DenseVerdict {
    let two_out_of_three = w.sequences().iter().all(|(a, c, b)| {
        let count = [a, b, c].iter().filter(|m| member(m)).count();
        count != 2
    });
    let n = w.n();
    let mut complements: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        complements = complements
            .into_iter()
            .flat_map(|v| {
                (0..=search).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    let semisimple = |v: &[usize]| {
        ModuleObj::new(
            v.iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(Interval::simple(i + 1), k))
                .collect(),
        )
    };
    let mut undense_witness = None;
    for x in w.objects() {
        let found = complements
            .iter()
            .any(|v| member(&x.direct_sum(&semisimple(v))));
        if !found {
            undense_witness = Some(x.clone());
            break;
        }
    }
    DenseVerdict {
        two_out_of_three,
        dense: undense_witness.is_none(),
        undense_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval { lo, hi }
    }

    fn rep(n: usize, ivs: &[(usize, usize)]) -> Rep {
        Rep::from_module(
            n,
            &ModuleObj::new(ivs.iter().map(|&(a, b)| iv(a, b)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim(&rep(2, &[(1, 2)]), &rep(2, &[(1, 2)])).unwrap(), 1);
        assert_eq!(hom_dim(&rep(2, &[(2, 2)]), &rep(2, &[(1, 1)])).unwrap(), 0);
        assert_eq!(hom_dim(&Rep::zero(2), &rep(2, &[(1, 2)])).unwrap(), 0);
        assert_eq!(hom_dim(&rep(2, &[(1, 1)]), &rep(2, &[(1, 2)])).unwrap(), 1);
    }

    #[test]
    fn subrep_examples() {
        let subs = all_subreps(&rep(2, &[(1, 2)])).unwrap();
        assert_eq!(subs.len(), 3);
        let kinds: BTreeSet<ModuleObj> = subs.iter().map(|s| decompose(&s.rep).unwrap()).collect();
        assert_eq!(
            kinds,
            [
                ModuleObj::zero(),
                ModuleObj::from(iv(1, 1)),
                ModuleObj::from(iv(1, 2))
            ]
            .into_iter()
            .collect()
        );
        // zero, three lines and the whole plane
        assert_eq!(all_subreps(&rep(1, &[(1, 1), (1, 1)])).unwrap().len(), 5);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose(&rep(2, &[(1, 1), (2, 2)])).unwrap(),
            ModuleObj::new(vec![iv(1, 1), iv(2, 2)])
        );
        let s = all_ses(&rep(2, &[(1, 1)]), &rep(2, &[(2, 2)])).unwrap();
        let mids: Vec<ModuleObj> = s.iter().map(|r| r.middle.clone()).collect();
        assert_eq!(
            mids,
            vec![
                ModuleObj::new(vec![iv(1, 1), iv(2, 2)]),
                ModuleObj::from(iv(1, 2))
            ]
        );
        assert!(s.iter().all(SESRecord::is_valid));
        assert_eq!(decompose(&s[1].mid).unwrap(), ModuleObj::from(iv(1, 2)));
    }

    #[test]
    fn ses_examples() {
        let s = all_ses(&rep(3, &[(1, 1)]), &rep(3, &[(3, 3)])).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_split().unwrap());
        let s = all_ses(&Rep::zero(3), &rep(3, &[(2, 3)])).unwrap();
        assert_eq!(s.len(), 1);
        let s = all_ses(&rep(3, &[(1, 2)]), &rep(3, &[(2, 3)])).unwrap();
        let mids: BTreeSet<ModuleObj> = s.iter().map(|r| r.middle.clone()).collect();
        assert!(mids.contains(&ModuleObj::new(vec![iv(1, 3), iv(2, 2)])));
    }

    #[test]
    fn quasi_split_boundary() {
        assert!(is_quasi_split_window(1, 4).unwrap().holds);
        let v = is_quasi_split_window(2, 2).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.middle, ModuleObj::from(iv(1, 2)));
        assert!(!is_quasi_split_window(3, 2).unwrap().holds);
    }

    #[test]
    fn abelian_closure_is_dimension_fibers() {
        let w = ModuleWindow::new(2, 2).unwrap();
        let window = module_dobjs(w.objects());
        let p = c_equiv_closure(&window, &abelian_equations(&w)).unwrap();
        let fibers = Partition::from_keys(w.objects().iter().map(|m| m.dim_vector(2)));
        assert_eq!(p, fibers);
        assert_eq!(
            c_equiv_closure(&window, &[]).unwrap(),
            Partition::discrete(window.len())
        );
    }

    #[test]
    fn closed_subsets() {
        let w = ModuleWindow::new(2, 2).unwrap();
        let window = module_dobjs(w.objects());
        let p = c_equiv_closure(&window, &abelian_equations(&w)).unwrap();
        let fiber = |x: &DObj| x.zero.dim_vector(2) == vec![1, 1];
        assert!(is_c_closed_window(&fiber, &window, &p));
        let lone = |x: &DObj| x.zero == ModuleObj::from(iv(1, 2));
        assert!(!is_c_closed_window(&lone, &window, &p));
        let all = |_: &DObj| true;
        assert!(is_c_closed_window(&all, &window, &p));
        assert!(is_serre_window(&all, &window, &p));
    }

    #[test]
    fn window_outside_is_an_error() {
        let window = vec![DObj::default()];
        let e = CEquation::new(
            DObj::module(ModuleObj::from(iv(1, 2))),
            &DObj::default(),
            &DObj::default(),
        );
        assert!(matches!(
            c_equiv_closure(&window, &[e]),
            Err(Error::WindowNotClosed(_))
        ));
    }

    #[test]
    fn rep_json() {
        let r = rep(2, &[(1, 2)]);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"dims":[1,1],"maps":[[[1]]]}"#
        );
    }
}
