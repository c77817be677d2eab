//! The module category of the linearly oriented quiver `1 ← 2 ← ⋯ ← n`.
//!
//! Indecomposables are interval modules `[lo, hi]` with socle `S_lo` and top
//! `S_hi`. Submodules are left-closed subintervals and quotients right-closed
//! ones. Hom and Ext between intervals are closed-form rules; the test suite
//! checks every rule against explicit linear algebra in [`crate::oracle`].
//!
//! Vertices are 1-based. Vertex `i` corresponds to monoid coordinate `i − 1`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{hnf, IntLattice, IntVec};
use crate::monoid::{CanonicalMonoid, SubmonoidGens};
use crate::positivity::strictly_positive_witness;

/// Largest supported number of vertices.
pub const MAX_VERTICES: usize = 8;

/// Linearly oriented `A_n` with arrows `i + 1 → i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearAQuiver {
    n: usize,
}

impl LinearAQuiver {
    pub fn new(n: usize) -> Result<Self> {
        if (1..=MAX_VERTICES).contains(&n) {
            Ok(LinearAQuiver { n })
        } else {
            Err(Error::InvalidInput(format!(
                "number of vertices must be in 1..={MAX_VERTICES}, got {n}"
            )))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All intervals, ordered lexicographically by `(lo, hi)`.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for lo in 1..=self.n {
            for hi in lo..=self.n {
                out.push(Interval { lo, hi });
            }
        }
        out
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Result<Interval> {
        if 1 <= lo && lo <= hi && hi <= self.n {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInput(format!(
                "[{lo},{hi}] is not an interval of 1..={}",
                self.n
            )))
        }
    }

    fn index_of(&self, i: Interval) -> usize {
        // intervals with smaller lo come first
        let before: usize = (1..i.lo).map(|lo| self.n - lo + 1).sum();
        before + (i.hi - i.lo)
    }

    fn check(&self, i: Interval) -> Result<()> {
        self.interval(i.lo, i.hi).map(|_| ())
    }
}

/// The indecomposable with dimension vector `e_lo + ⋯ + e_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl From<[usize; 2]> for Interval {
    fn from([lo, hi]: [usize; 2]) -> Self {
        Interval { lo, hi }
    }
}

impl From<Interval> for [usize; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl Interval {
    /// Simple module `S_i`.
    pub fn simple(i: usize) -> Self {
        Interval { lo: i, hi: i }
    }

    pub fn dim(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn support(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    /// Nonzero submodules `[lo, k]`.
    pub fn submodules(&self) -> Vec<Interval> {
        (self.lo..=self.hi)
            .map(|k| Interval { lo: self.lo, hi: k })
            .collect()
    }

    /// Nonzero quotients `[k, hi]`.
    pub fn quotients(&self) -> Vec<Interval> {
        (self.lo..=self.hi)
            .map(|k| Interval { lo: k, hi: self.hi })
            .collect()
    }
}

/// Submodules of an interval, with `None` standing for the zero module.
pub fn submodules_of(i: Interval) -> Vec<Option<Interval>> {
    std::iter::once(None)
        .chain(i.submodules().into_iter().map(Some))
        .collect()
}

/// `Hom([a,b], [c,d]) ≠ 0` iff `a ≤ c ≤ b ≤ d`.
pub fn hom_nonzero(a: Interval, b: Interval) -> bool {
    a.lo <= b.lo && b.lo <= a.hi && a.hi <= b.hi
}

/// `dim Ext¹([c,d], [a,b])`: one iff `a < c ≤ b + 1` and `b < d`.
pub fn ext_dim(quot: Interval, sub: Interval) -> usize {
    let (a, b, c, d) = (sub.lo, sub.hi, quot.lo, quot.hi);
    usize::from(a < c && c <= b + 1 && b < d)
}

/// Middle term of the non-split extension `0 → [a,b] → E → [c,d] → 0`:
/// `E = [a,d] ⊕ [c,b]`, where `[c,b]` is zero when `c = b + 1`.
pub fn ext_middle(quot: Interval, sub: Interval) -> Result<ModuleObj> {
    if ext_dim(quot, sub) == 0 {
        return Err(Error::NoExtension { quot, sub });
    }
    let mut summands = vec![Interval {
        lo: sub.lo,
        hi: quot.hi,
    }];
    if quot.lo <= sub.hi {
        summands.push(Interval {
            lo: quot.lo,
            hi: sub.hi,
        });
    }
    Ok(ModuleObj::new(summands))
}

/// A finite direct sum of intervals, stored as a sorted multiset.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct ModuleObj {
    summands: Vec<Interval>,
}

impl From<Vec<Interval>> for ModuleObj {
    fn from(v: Vec<Interval>) -> Self {
        ModuleObj::new(v)
    }
}

impl From<ModuleObj> for Vec<Interval> {
    fn from(m: ModuleObj) -> Self {
        m.summands
    }
}

impl From<Interval> for ModuleObj {
    fn from(i: Interval) -> Self {
        ModuleObj { summands: vec![i] }
    }
}

impl ModuleObj {
    pub fn new(mut summands: Vec<Interval>) -> Self {
        summands.sort();
        ModuleObj { summands }
    }

    pub fn zero() -> Self {
        ModuleObj::default()
    }

    pub fn summands(&self) -> &[Interval] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &ModuleObj) -> ModuleObj {
        ModuleObj::new(
            self.summands
                .iter()
                .chain(&other.summands)
                .copied()
                .collect(),
        )
    }

    pub fn total_dim(&self) -> usize {
        self.summands.iter().map(Interval::dim).sum()
    }

    /// Dimension vector in `ℕⁿ` (coordinate `i − 1` counts `S_i`).
    pub fn dim_vector(&self, n: usize) -> Vec<usize> {
        let mut v = vec![0; n];
        for s in &self.summands {
            for i in s.support() {
                v[i - 1] += 1;
            }
        }
        v
    }

    pub fn check_in(&self, q: &LinearAQuiver) -> Result<()> {
        self.summands.iter().try_for_each(|&s| q.check(s))
    }
}

impl fmt::Display for ModuleObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("⊕"))
    }
}

/// Every module with summands from `pool` and total dimension `≤ bound`,
/// ordered by total dimension and then by summands.
pub fn modules_from(pool: &[Interval], bound: usize) -> Vec<ModuleObj> {
    let mut pool = pool.to_vec();
    pool.sort();
    pool.dedup();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_multisets(&pool, 0, bound, &mut current, &mut out);
    out.sort_by(|a, b| a.total_dim().cmp(&b.total_dim()).then_with(|| a.cmp(b)));
    out
}

fn extend_multisets(
    pool: &[Interval],
    start: usize,
    budget: usize,
    current: &mut Vec<Interval>,
    out: &mut Vec<ModuleObj>,
) {
    out.push(ModuleObj::new(current.clone()));
    for k in start..pool.len() {
        if pool[k].dim() <= budget {
            current.push(pool[k]);
            extend_multisets(pool, k, budget - pool[k].dim(), current, out);
            current.pop();
        }
    }
}

/// All modules of total dimension `≤ bound`.
pub fn modules_up_to(q: &LinearAQuiver, bound: usize) -> Vec<ModuleObj> {
    modules_from(&q.intervals(), bound)
}

/// Dimension vector of a module as an integer vector.
pub fn dim_vector(x: &ModuleObj, n: usize) -> IntVec {
    x.dim_vector(n).into_iter().map(BigInt::from).collect()
}

/// Why a set of intervals fails to be a torsionfree class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureViolation {
    MissingSubmodule {
        of: Interval,
        sub: Interval,
    },
    MissingExtension {
        quot: Interval,
        sub: Interval,
        summand: Interval,
    },
    MissingQuotient {
        of: Interval,
        quot: Interval,
    },
    OutOfRange(Interval),
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureViolation::MissingSubmodule { of, sub } => {
                write!(f, "submodule {sub} of {of} is missing")
            }
            ClosureViolation::MissingExtension { quot, sub, summand } => write!(
                f,
                "summand {summand} of the extension of {quot} by {sub} is missing"
            ),
            ClosureViolation::MissingQuotient { of, quot } => {
                write!(f, "quotient {quot} of {of} is missing")
            }
            ClosureViolation::OutOfRange(i) => write!(f, "{i} is not an interval of the quiver"),
        }
    }
}

/// A set of intervals closed under submodules and extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct TorsionfreeClass {
    intervals: BTreeSet<Interval>,
}

impl TryFrom<Vec<Interval>> for TorsionfreeClass {
    type Error = Error;

    fn try_from(v: Vec<Interval>) -> Result<Self> {
        let n = v.iter().map(|i| i.hi).max().unwrap_or(1).max(1);
        let q = LinearAQuiver::new(n)?;
        TorsionfreeClass::new(&q, v)
    }
}

impl From<TorsionfreeClass> for Vec<Interval> {
    fn from(t: TorsionfreeClass) -> Self {
        t.intervals.into_iter().collect()
    }
}

impl TorsionfreeClass {
    /// Validates the closure conditions.
    pub fn new(q: &LinearAQuiver, intervals: impl IntoIterator<Item = Interval>) -> Result<Self> {
        let intervals: BTreeSet<Interval> = intervals.into_iter().collect();
        if let Some(v) = torsionfree_violation(q, &intervals) {
            return Err(Error::NotTorsionfree(v.to_string()));
        }
        Ok(TorsionfreeClass { intervals })
    }

    pub fn empty() -> Self {
        TorsionfreeClass {
            intervals: BTreeSet::new(),
        }
    }

    /// Every interval of the quiver.
    pub fn all(q: &LinearAQuiver) -> Self {
        TorsionfreeClass {
            intervals: q.intervals().into_iter().collect(),
        }
    }

    pub fn intervals(&self) -> &BTreeSet<Interval> {
        &self.intervals
    }

    pub fn contains(&self, i: Interval) -> bool {
        self.intervals.contains(&i)
    }

    /// Whether every summand lies in the class (membership in `add F`).
    pub fn contains_obj(&self, x: &ModuleObj) -> bool {
        x.summands().iter().all(|s| self.contains(*s))
    }

    /// Simples occurring as composition factors of members.
    pub fn simples(&self) -> BTreeSet<usize> {
        self.intervals.iter().flat_map(|i| i.support()).collect()
    }
}

impl fmt::Display for TorsionfreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.intervals.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// First closure violation of `t`, if any.
pub fn torsionfree_violation(
    q: &LinearAQuiver,
    t: &BTreeSet<Interval>,
) -> Option<ClosureViolation> {
    for &i in t {
        if q.check(i).is_err() {
            return Some(ClosureViolation::OutOfRange(i));
        }
    }
    for &i in t {
        for sub in i.submodules() {
            if !t.contains(&sub) {
                return Some(ClosureViolation::MissingSubmodule { of: i, sub });
            }
        }
    }
    extension_violation(t)
}

fn extension_violation(t: &BTreeSet<Interval>) -> Option<ClosureViolation> {
    for &quot in t {
        for &sub in t {
            if let Ok(mid) = ext_middle(quot, sub) {
                if let Some(&summand) = mid.summands().iter().find(|s| !t.contains(s)) {
                    return Some(ClosureViolation::MissingExtension { quot, sub, summand });
                }
            }
        }
    }
    None
}

pub fn is_torsionfree_class(q: &LinearAQuiver, t: &BTreeSet<Interval>) -> bool {
    torsionfree_violation(q, t).is_none()
}

/// Smallest torsionfree class containing the intervals in `mask`.
fn torsionfree_closure(q: &LinearAQuiver, all: &[Interval], mut mask: u64) -> u64 {
    loop {
        let mut next = mask;
        let members: Vec<Interval> = (0..all.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| all[k])
            .collect();
        for &i in &members {
            for s in i.submodules() {
                next |= 1 << q.index_of(s);
            }
        }
        for &c in &members {
            for &a in &members {
                if let Ok(mid) = ext_middle(c, a) {
                    for s in mid.summands() {
                        next |= 1 << q.index_of(*s);
                    }
                }
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// All torsionfree classes, ordered by size and then lexicographically.
///
/// Every closed set is reached from the empty class by repeatedly adjoining one
/// interval and closing, so a search over closures enumerates them all.
pub fn enumerate_torsionfree_classes(q: &LinearAQuiver) -> Vec<TorsionfreeClass> {
    let all = q.intervals();
    let start = torsionfree_closure(q, &all, 0);
    let mut seen: HashSet<u64> = HashSet::from([start]);
    let mut frontier = vec![start];
    while let Some(mask) = frontier.pop() {
        for k in 0..all.len() {
            if mask >> k & 1 == 1 {
                continue;
            }
            let next = torsionfree_closure(q, &all, mask | 1 << k);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<TorsionfreeClass> = seen
        .into_iter()
        .map(|mask| TorsionfreeClass {
            intervals: (0..all.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| all[k])
                .collect(),
        })
        .collect();
    out.sort_by(|a, b| {
        a.intervals
            .len()
            .cmp(&b.intervals.len())
            .then_with(|| a.intervals.iter().cmp(b.intervals.iter()))
    });
    out
}

/// A Serre subcategory, stored by its set of simples (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SerreSub {
    pub simples: BTreeSet<usize>,
}

impl SerreSub {
    pub fn new(q: &LinearAQuiver, simples: impl IntoIterator<Item = usize>) -> Result<Self> {
        let simples: BTreeSet<usize> = simples.into_iter().collect();
        if let Some(&s) = simples.iter().find(|&&s| s == 0 || s > q.n()) {
            return Err(Error::InvalidInput(format!("vertex {s} out of range")));
        }
        Ok(SerreSub { simples })
    }

    /// Intervals whose support lies inside the simple set.
    pub fn intervals(&self, q: &LinearAQuiver) -> BTreeSet<Interval> {
        serre_from_face(q, &self.simples)
    }

    pub fn contains_obj(&self, x: &ModuleObj) -> bool {
        x.summands()
            .iter()
            .all(|s| s.support().all(|v| self.simples.contains(&v)))
    }
}

impl fmt::Display for SerreSub {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.simples.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Intervals supported inside the vertex set `face`.
pub fn serre_from_face(q: &LinearAQuiver, face: &BTreeSet<usize>) -> BTreeSet<Interval> {
    q.intervals()
        .into_iter()
        .filter(|i| i.support().all(|v| face.contains(&v)))
        .collect()
}

/// Union of the supports.
pub fn face_from_serre(t: &BTreeSet<Interval>) -> BTreeSet<usize> {
    t.iter().flat_map(|i| i.support()).collect()
}

/// Closed under submodules, quotients and extensions.
pub fn is_serre(q: &LinearAQuiver, t: &BTreeSet<Interval>) -> bool {
    serre_violation(q, t).is_none()
}

pub fn serre_violation(q: &LinearAQuiver, t: &BTreeSet<Interval>) -> Option<ClosureViolation> {
    if let Some(v) = torsionfree_violation(q, t) {
        return Some(v);
    }
    for &i in t {
        for quot in i.quotients() {
            if !t.contains(&quot) {
                return Some(ClosureViolation::MissingQuotient { of: i, quot });
            }
        }
    }
    None
}

/// All `2ⁿ` Serre subcategories of the module category.
pub fn all_serre_subcategories(q: &LinearAQuiver) -> Vec<SerreSub> {
    let mut out: Vec<SerreSub> = (0u32..1 << q.n())
        .map(|mask| SerreSub {
            simples: (1..=q.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect(),
        })
        .collect();
    out.sort_by(|a, b| {
        a.simples
            .len()
            .cmp(&b.simples.len())
            .then_with(|| a.simples.iter().cmp(b.simples.iter()))
    });
    out
}

/// `M(mod kA_n) ≅ ℕⁿ` via dimension vectors.
pub fn grothendieck_monoid(q: &LinearAQuiver) -> CanonicalMonoid {
    CanonicalMonoid::free(q.n()).expect("n ≥ 1")
}

/// Submonoid of `ℕⁿ` generated by the dimension vectors of the given intervals.
pub fn image_submonoid(q: &LinearAQuiver, t: &BTreeSet<Interval>) -> Result<SubmonoidGens> {
    let m = grothendieck_monoid(q);
    let gens: Vec<IntVec> = t
        .iter()
        .map(|&i| {
            q.check(i)?;
            Ok(dim_vector(&ModuleObj::from(i), q.n()))
        })
        .collect::<Result<_>>()?;
    SubmonoidGens::from_coords(&m, &gens)
}

/// A subgroup `H ⊆ ℤⁿ`; the dense 2-out-of-3 subcategory it classifies is
/// `{X : udim X ∈ H}` when `H` contains a strictly positive vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DenseSubgroup {
    pub lattice: IntLattice,
}

impl DenseSubgroup {
    pub fn new(lattice: IntLattice) -> Self {
        DenseSubgroup { lattice }
    }

    /// A strictly positive element of `H`, when one exists.
    pub fn positive_witness(&self) -> Option<IntVec> {
        strictly_positive_witness(&self.lattice)
    }
}

pub fn subgroup_has_strictly_positive(h: &DenseSubgroup) -> bool {
    h.positive_witness().is_some()
}

pub fn dense_membership(h: &DenseSubgroup, x: &ModuleObj) -> Result<bool> {
    h.lattice.contains(&dim_vector(x, h.lattice.ambient_rank()))
}

/// `⟨udim X : X ∈ objs⟩_ℤ`.
pub fn subgroup_from_objects(n: usize, objs: &[ModuleObj]) -> Result<DenseSubgroup> {
    let gens: Vec<IntVec> = objs.iter().map(|x| dim_vector(x, n)).collect();
    Ok(DenseSubgroup::new(hnf(&gens, n)?))
}

/// A vertex of the Auslander–Reiten quiver of `mod kA_n ∨ (mod kA_n)[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArNode {
    pub interval: Interval,
    pub shifted: bool,
}

impl fmt::Display for ArNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shifted {
            write!(f, "{}[1]", self.interval)
        } else {
            write!(f, "{}", self.interval)
        }
    }
}

/// Irreducible maps among the nodes of `mod kA_n` and its shift.
pub fn ar_arrows(q: &LinearAQuiver) -> Vec<(ArNode, ArNode)> {
    let n = q.n();
    let mut arrows = Vec::new();
    for shifted in [false, true] {
        for i in q.intervals() {
            let node = ArNode {
                interval: i,
                shifted,
            };
            if i.hi < n {
                arrows.push((
                    node,
                    ArNode {
                        interval: Interval {
                            lo: i.lo,
                            hi: i.hi + 1,
                        },
                        shifted,
                    },
                ));
            }
            if i.lo < i.hi {
                arrows.push((
                    node,
                    ArNode {
                        interval: Interval {
                            lo: i.lo + 1,
                            hi: i.hi,
                        },
                        shifted,
                    },
                ));
            }
        }
    }
    // injective [a,n] → projective [1,a-1] shifted
    for a in 2..=n {
        arrows.push((
            ArNode {
                interval: Interval { lo: a, hi: n },
                shifted: false,
            },
            ArNode {
                interval: Interval { lo: 1, hi: a - 1 },
                shifted: true,
            },
        ));
    }
    arrows.sort();
    arrows
}

/// Graphviz rendering of the AR quiver with highlighted nodes filled gray.
pub fn ar_quiver_dot(q: &LinearAQuiver, highlight: &BTreeSet<ArNode>) -> String {
    let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n");
    for shifted in [false, true] {
        for i in q.intervals() {
            let node = ArNode {
                interval: i,
                shifted,
            };
            let style = if highlight.contains(&node) {
                ", style=filled, fillcolor=gray80"
            } else {
                ""
            };
            out.push_str(&format!("  \"{node}\" [label=\"{node}\"{style}];\n"));
        }
    }
    for (a, b) in ar_arrows(q) {
        out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval { lo, hi }
    }

    fn set(v: &[(usize, usize)]) -> BTreeSet<Interval> {
        v.iter().map(|&(a, b)| iv(a, b)).collect()
    }

    #[test]
    fn dim_vectors() {
        assert_eq!(ModuleObj::from(iv(1, 2)).dim_vector(3), vec![1, 1, 0]);
        assert_eq!(ModuleObj::zero().dim_vector(3), vec![0, 0, 0]);
        assert_eq!(
            ModuleObj::new(vec![iv(1, 3), iv(2, 2)]).dim_vector(3),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn submodule_lists() {
        assert_eq!(
            submodules_of(iv(1, 3)),
            vec![None, Some(iv(1, 1)), Some(iv(1, 2)), Some(iv(1, 3))]
        );
        assert_eq!(submodules_of(iv(2, 2)), vec![None, Some(iv(2, 2))]);
        assert_eq!(
            submodules_of(iv(2, 3)),
            vec![None, Some(iv(2, 2)), Some(iv(2, 3))]
        );
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim(iv(2, 2), iv(1, 1)), 1);
        assert_eq!(
            ext_middle(iv(2, 2), iv(1, 1)).unwrap(),
            ModuleObj::from(iv(1, 2))
        );
        assert_eq!(ext_dim(iv(1, 1), iv(2, 2)), 0);
        assert!(matches!(
            ext_middle(iv(1, 1), iv(2, 2)),
            Err(Error::NoExtension { .. })
        ));
        assert_eq!(ext_dim(iv(2, 3), iv(1, 2)), 1);
        assert_eq!(
            ext_middle(iv(2, 3), iv(1, 2)).unwrap(),
            ModuleObj::new(vec![iv(1, 3), iv(2, 2)])
        );
    }

    #[test]
    fn hom_rule() {
        assert!(hom_nonzero(iv(1, 1), iv(1, 2)));
        assert!(hom_nonzero(iv(1, 2), iv(2, 2)));
        assert!(!hom_nonzero(iv(2, 2), iv(1, 2)));
        assert!(!hom_nonzero(iv(2, 2), iv(1, 1)));
    }

    #[test]
    fn torsionfree_examples() {
        let q = LinearAQuiver::new(3).unwrap();
        assert!(is_torsionfree_class(&q, &set(&[(1, 1), (1, 2)])));
        assert_eq!(
            torsionfree_violation(&q, &set(&[(1, 1), (2, 2)])),
            Some(ClosureViolation::MissingExtension {
                quot: iv(2, 2),
                sub: iv(1, 1),
                summand: iv(1, 2)
            })
        );
        assert!(TorsionfreeClass::new(&q, [iv(1, 2)]).is_err());
    }

    #[test]
    fn torsionfree_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_torsionfree_classes(&LinearAQuiver::new(n).unwrap()).len())
            .collect();
        assert_eq!(counts, vec![2, 5, 14, 42]);
    }

    #[test]
    fn serre_examples() {
        let q = LinearAQuiver::new(3).unwrap();
        let s = serre_from_face(&q, &[1, 2].into_iter().collect());
        assert_eq!(s, set(&[(1, 1), (1, 2), (2, 2)]));
        assert!(serre_from_face(&q, &BTreeSet::new()).is_empty());
        assert!(!is_serre(&q, &set(&[(1, 1), (1, 2)])));
        assert!(is_serre(&q, &s));
        assert_eq!(face_from_serre(&s), [1, 2].into_iter().collect());
        assert_eq!(all_serre_subcategories(&q).len(), 8);
    }

    #[test]
    fn image_submonoid_of_example_class() {
        let q = LinearAQuiver::new(3).unwrap();
        let n = image_submonoid(&q, &set(&[(1, 1), (1, 2)])).unwrap();
        let coords: Vec<Vec<i64>> = n
            .gens()
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|x| i64::try_from(x).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(coords, vec![vec![1, 0, 0], vec![1, 1, 0]]);
        assert!(image_submonoid(&q, &BTreeSet::new())
            .unwrap()
            .gens()
            .is_empty());
    }

    #[test]
    fn dense_examples() {
        use crate::lattice::int_vec;
        let h = DenseSubgroup::new(hnf(&[int_vec(&[1, 1, 1])], 3).unwrap());
        assert!(subgroup_has_strictly_positive(&h));
        let h = DenseSubgroup::new(hnf(&[int_vec(&[1, -1, 0]), int_vec(&[0, 0, 1])], 3).unwrap());
        assert!(!subgroup_has_strictly_positive(&h));
        let all = DenseSubgroup::new(IntLattice::full(3));
        assert!(subgroup_has_strictly_positive(&all));
        assert!(dense_membership(&all, &ModuleObj::new(vec![iv(1, 3), iv(2, 2)])).unwrap());
        let h = subgroup_from_objects(2, &[ModuleObj::from(iv(1, 2))]).unwrap();
        assert_eq!(h.lattice, hnf(&[int_vec(&[1, 1])], 2).unwrap());
    }

    #[test]
    fn ar_quiver_matches_three_vertex_picture() {
        let q = LinearAQuiver::new(3).unwrap();
        let arrows = ar_arrows(&q);
        let node = |lo, hi, shifted| ArNode {
            interval: iv(lo, hi),
            shifted,
        };
        assert!(arrows.contains(&(node(2, 3, false), node(1, 1, true))));
        assert!(arrows.contains(&(node(3, 3, false), node(1, 2, true))));
        assert!(arrows.contains(&(node(1, 2, false), node(2, 2, false))));
        // 6 in each copy plus 2 connecting
        assert_eq!(arrows.len(), 14);
        let dot = ar_quiver_dot(&q, &[node(1, 1, true)].into_iter().collect());
        assert!(dot.contains("\"[1,1][1]\" [label=\"[1,1][1]\", style=filled"));
    }

    #[test]
    fn interval_json() {
        let t =
            TorsionfreeClass::new(&LinearAQuiver::new(3).unwrap(), [iv(1, 1), iv(1, 2)]).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,1],[1,2]]");
        let back: TorsionfreeClass = serde_json::from_str("[[1,2],[1,1]]").unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<TorsionfreeClass>("[[2,2],[1,1]]").is_err());
    }
}
