//! Finitely generated commutative monoids in coordinate form.
//!
//! A [`CanonicalMonoid`] is a triple `(n, J, L)`: the image of
//! `{v ∈ ℤⁿ : v_i ≥ 0 for i ∉ J}` in `ℤⁿ / L`. Construction applies a
//! normalization closure and then requires every basis vector of `L` to be
//! supported on `J`, so the monoid is `(ℤ^J / L) ⊕ ℕ^(n − |J|)`. Inside that
//! class the monoid is cancellative and
//!
//! * `x ≡ y` modulo a submonoid `N` iff `x − y ∈ L + ℤ·N`;
//! * the faces are exactly the coordinate faces `(ℤ^J / L) ⊕ ℕ^K`;
//! * localizing at `S` moves the support of `S` into `J`.
//!
//! Coordinates are 0-based positions in the coordinate vector.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{from_json_vec, to_json_vec, JsonInt};
use crate::lattice::{
    self, express_in_generators, fmt_vec, hnf, int_vec, quotient_presentation, unit_vec,
    AbGroupPresentation, IntLattice, IntVec,
};

#[derive(Debug, PartialEq, Eq, Hash)]
struct MonoidData {
    rank: usize,
    inverted: BTreeSet<usize>,
    relations: IntLattice,
}

/// A commutative monoid `(ℤ^J / L) ⊕ ℕ^(n − |J|)` in normalized coordinate form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "MonoidRepr", into = "MonoidRepr")]
pub struct CanonicalMonoid {
    data: Arc<MonoidData>,
}

impl PartialEq for CanonicalMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for CanonicalMonoid {}

impl std::hash::Hash for CanonicalMonoid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.hash(state)
    }
}

#[derive(Serialize, Deserialize)]
struct MonoidRepr {
    rank: usize,
    inverted: Vec<usize>,
    relations: RelationsRepr,
}

#[derive(Serialize, Deserialize)]
struct RelationsRepr {
    basis: Vec<Vec<JsonInt>>,
}

impl From<CanonicalMonoid> for MonoidRepr {
    fn from(m: CanonicalMonoid) -> Self {
        MonoidRepr {
            rank: m.rank(),
            inverted: m.inverted().iter().copied().collect(),
            relations: RelationsRepr {
                basis: m
                    .relations()
                    .basis()
                    .iter()
                    .map(|r| to_json_vec(r))
                    .collect(),
            },
        }
    }
}

impl TryFrom<MonoidRepr> for CanonicalMonoid {
    type Error = Error;

    fn try_from(r: MonoidRepr) -> Result<Self> {
        let gens: Vec<IntVec> = r.relations.basis.into_iter().map(from_json_vec).collect();
        CanonicalMonoid::make(r.rank, &r.inverted, &gens)
    }
}

/// Applies the normalization closure to `(J, L)` and checks the supported-class
/// invariant. `witnesses` are additional vectors known to lie in `L`.
fn normalize(
    rank: usize,
    mut inverted: BTreeSet<usize>,
    relations: IntLattice,
    witnesses: &[IntVec],
) -> Result<(BTreeSet<usize>, IntLattice)> {
    loop {
        let mut grew = false;
        for g in relations.basis().iter().chain(witnesses) {
            for sign in [1i32, -1] {
                let outside: Vec<(usize, BigInt)> = (0..rank)
                    .filter(|i| !inverted.contains(i))
                    .map(|i| (i, if sign > 0 { g[i].clone() } else { -&g[i] }))
                    .collect();
                let nonneg = outside.iter().all(|(_, x)| !x.is_negative());
                if !nonneg {
                    continue;
                }
                for (i, x) in &outside {
                    if x.is_positive() {
                        inverted.insert(*i);
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    for g in relations.basis() {
        if let Some(i) = (0..rank).find(|i| !inverted.contains(i) && !g[*i].is_zero()) {
            return Err(Error::UnsupportedMonoid(format!(
                "relation {} is supported on non-inverted coordinate {i}",
                fmt_vec(g)
            )));
        }
    }
    Ok((inverted, relations))
}

impl CanonicalMonoid {
    /// The free monoid `ℕⁿ`.
    pub fn free(rank: usize) -> Result<Self> {
        Self::make(rank, &[], &[])
    }

    /// `ℕⁿ ⊕ ℤ^J` modulo the relation lattice spanned by `relation_gens`,
    /// normalized into the supported class.
    pub fn make(rank: usize, inverted: &[usize], relation_gens: &[IntVec]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput(
                "rank-0 monoids are not represented; use CanonicalMonoid::trivial".into(),
            ));
        }
        if let Some(&j) = inverted.iter().find(|&&j| j >= rank) {
            return Err(Error::InvalidInput(format!(
                "inverted coordinate {j} out of range for rank {rank}"
            )));
        }
        let relations = hnf(relation_gens, rank)?;
        let (inverted, relations) = normalize(
            rank,
            inverted.iter().copied().collect(),
            relations,
            relation_gens,
        )?;
        Ok(Self::from_parts(rank, inverted, relations))
    }

    /// The trivial monoid, stored as `(1, {0}, ℤ)`.
    pub fn trivial() -> Self {
        Self::from_parts(1, BTreeSet::from([0]), IntLattice::full(1))
    }

    fn from_parts(rank: usize, inverted: BTreeSet<usize>, relations: IntLattice) -> Self {
        CanonicalMonoid {
            data: Arc::new(MonoidData {
                rank,
                inverted,
                relations,
            }),
        }
    }

    pub fn rank(&self) -> usize {
        self.data.rank
    }

    /// The inverted coordinate set `J`.
    pub fn inverted(&self) -> &BTreeSet<usize> {
        &self.data.inverted
    }

    pub fn relations(&self) -> &IntLattice {
        &self.data.relations
    }

    /// Coordinates outside `J`, ascending.
    pub fn free_coords(&self) -> Vec<usize> {
        (0..self.rank()).filter(|i| !self.is_inverted(*i)).collect()
    }

    pub fn is_inverted(&self, i: usize) -> bool {
        self.data.inverted.contains(&i)
    }

    pub fn elem(&self, coords: IntVec) -> Result<MonoidElem> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates, monoid has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        if let Some(i) = self
            .free_coords()
            .into_iter()
            .find(|&i| coords[i].is_negative())
        {
            return Err(Error::InvalidInput(format!(
                "coordinate {i} of {} is negative but not inverted",
                fmt_vec(&coords)
            )));
        }
        Ok(MonoidElem {
            owner: self.clone(),
            coords,
        })
    }

    pub fn elem_i64(&self, coords: &[i64]) -> Result<MonoidElem> {
        self.elem(int_vec(coords))
    }

    pub fn zero(&self) -> MonoidElem {
        MonoidElem {
            owner: self.clone(),
            coords: vec![BigInt::zero(); self.rank()],
        }
    }

    /// Generator `e_i`.
    pub fn basis_elem(&self, i: usize) -> Result<MonoidElem> {
        if i >= self.rank() {
            return Err(Error::InvalidInput(format!("coordinate {i} out of range")));
        }
        self.elem(unit_vec(self.rank(), i))
    }

    /// Presentation of the unit group `ℤ^J / L`.
    pub fn units(&self) -> AbGroupPresentation {
        let j: Vec<usize> = self.inverted().iter().copied().collect();
        let rows: Vec<IntVec> = self
            .relations()
            .basis()
            .iter()
            .map(|r| j.iter().map(|&i| r[i].clone()).collect())
            .collect();
        let restricted = hnf(&rows, j.len()).expect("restricted rows have matching length");
        quotient_presentation(j.len(), &restricted).expect("ranks agree")
    }

    /// `a + b = 0` implies `a = b = 0`; equivalently the unit group is trivial.
    pub fn is_reduced(&self) -> bool {
        self.units().is_trivial()
    }

    /// `M / M^×` in compact form `ℕ^(n − |J|)`.
    pub fn reduced_quotient(&self) -> Self {
        let free = self.free_coords().len();
        if free == 0 {
            Self::trivial()
        } else {
            Self::free(free).expect("positive rank")
        }
    }

    /// Coordinates `j ∈ J` with `e_j ∈ L`; they carry no information.
    pub fn killed_coords(&self) -> Vec<usize> {
        self.inverted()
            .iter()
            .copied()
            .filter(|&j| {
                self.relations()
                    .contains(&unit_vec(self.rank(), j))
                    .expect("rank agrees")
            })
            .collect()
    }

    /// Drops killed coordinates in ascending order, returning the compact
    /// monoid together with the kept coordinates.
    pub fn projected(&self) -> (Self, Vec<usize>) {
        let killed: BTreeSet<usize> = self.killed_coords().into_iter().collect();
        let kept: Vec<usize> = (0..self.rank()).filter(|i| !killed.contains(i)).collect();
        if kept.is_empty() {
            return (Self::trivial(), kept);
        }
        if kept.len() == self.rank() {
            return (self.clone(), kept);
        }
        let rows: Vec<IntVec> = self
            .relations()
            .basis()
            .iter()
            .map(|r| kept.iter().map(|&i| r[i].clone()).collect())
            .collect();
        let relations = hnf(&rows, kept.len()).expect("lengths agree");
        let inverted = kept
            .iter()
            .enumerate()
            .filter(|(_, &i)| self.is_inverted(i))
            .map(|(k, _)| k)
            .collect();
        (Self::from_parts(kept.len(), inverted, relations), kept)
    }

    /// Isomorphism test: in the supported class a monoid is determined up to
    /// isomorphism by its unit group and the rank of `M / M^×`.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.units() == other.units() && self.free_coords().len() == other.free_coords().len()
    }

    /// Smallest face containing `s`: the union of the non-inverted supports.
    pub fn face_generated(&self, s: &[MonoidElem]) -> Result<FaceDesc> {
        let mut coords = BTreeSet::new();
        for x in s {
            self.check_owner(x)?;
            coords.extend(x.free_support());
        }
        Ok(FaceDesc {
            owner: self.clone(),
            coords,
        })
    }

    /// The units face `M^×`.
    pub fn units_face(&self) -> FaceDesc {
        FaceDesc {
            owner: self.clone(),
            coords: BTreeSet::new(),
        }
    }

    /// All `2^(n − |J|)` coordinate faces, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<FaceDesc> {
        let free = self.free_coords();
        let mut out: Vec<FaceDesc> = (0u64..1 << free.len())
            .map(|mask| FaceDesc {
                owner: self.clone(),
                coords: free
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect(),
            })
            .collect();
        out.sort_by(|a, b| {
            a.coords
                .len()
                .cmp(&b.coords.len())
                .then_with(|| a.coords.iter().cmp(b.coords.iter()))
        });
        out
    }

    /// `M / N`: relations grow by the span of `N`, then the result is re-normalized.
    /// The quotient map is the identity on coordinate representatives.
    pub fn quotient_by_submonoid(&self, n: &SubmonoidGens) -> Result<Self> {
        self.check_same(&n.owner)?;
        let gens: Vec<IntVec> = n.gens.iter().map(|g| g.coords.clone()).collect();
        let all: Vec<IntVec> = self
            .relations()
            .basis()
            .iter()
            .cloned()
            .chain(gens.iter().cloned())
            .collect();
        let relations = hnf(&all, self.rank())?;
        let (inverted, relations) =
            normalize(self.rank(), self.inverted().clone(), relations, &gens)?;
        Ok(Self::from_parts(self.rank(), inverted, relations))
    }

    /// `M / F` for a face `F`; the result is reduced.
    pub fn quotient_by_face(&self, face: &FaceDesc) -> Result<Self> {
        self.quotient_by_submonoid(&face.to_submonoid())
    }

    /// `M_S`: localization at `S`, equal to the localization at the face `S` generates.
    pub fn localize(&self, s: &[MonoidElem]) -> Result<Self> {
        let face = self.face_generated(s)?;
        let mut inverted = self.inverted().clone();
        inverted.extend(face.coords.iter().copied());
        Ok(Self::from_parts(
            self.rank(),
            inverted,
            self.relations().clone(),
        ))
    }

    /// `gp M = ℤⁿ / L`.
    pub fn group_completion(&self) -> AbGroupPresentation {
        quotient_presentation(self.rank(), self.relations()).expect("ranks agree")
    }

    pub fn is_group(&self) -> bool {
        self.inverted().len() == self.rank()
    }

    pub fn is_free(&self) -> bool {
        self.inverted().is_empty() && self.relations().is_zero()
    }

    fn check_owner(&self, x: &MonoidElem) -> Result<()> {
        self.check_same(&x.owner)
    }

    fn check_same(&self, other: &CanonicalMonoid) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::InvalidInput(
                "elements belong to different monoids".into(),
            ))
        }
    }
}

impl fmt::Display for CanonicalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = self.units();
        let free = self.free_coords().len();
        let mut parts = Vec::new();
        if !units.is_trivial() {
            parts.push(units.to_string());
        }
        match free {
            0 => {}
            1 => parts.push("ℕ".to_string()),
            k => parts.push(format!("ℕ^{k}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// An element of a [`CanonicalMonoid`], given by a coordinate representative.
#[derive(Debug, Clone, Serialize)]
pub struct MonoidElem {
    #[serde(skip)]
    owner: CanonicalMonoid,
    #[serde(serialize_with = "ser_coords")]
    coords: IntVec,
}

fn ser_coords<S: serde::Serializer>(v: &IntVec, s: S) -> std::result::Result<S::Ok, S::Error> {
    to_json_vec(v).serialize(s)
}

/// JSON form of an element: `{"coords": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElemRepr {
    coords: Vec<JsonInt>,
}

impl ElemRepr {
    pub fn into_elem(self, owner: &CanonicalMonoid) -> Result<MonoidElem> {
        owner.elem(from_json_vec(self.coords))
    }
}

impl MonoidElem {
    pub fn owner(&self) -> &CanonicalMonoid {
        &self.owner
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Equality in the monoid: `a − b ∈ L`.
    pub fn equals(&self, other: &MonoidElem) -> Result<bool> {
        self.owner.check_owner(other)?;
        let diff: IntVec = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        self.owner.relations().contains(&diff)
    }

    pub fn add(&self, other: &MonoidElem) -> Result<MonoidElem> {
        self.owner.check_owner(other)?;
        Ok(MonoidElem {
            owner: self.owner.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `k · self`.
    pub fn scale(&self, k: u64) -> MonoidElem {
        let k = BigInt::from(k);
        MonoidElem {
            owner: self.owner.clone(),
            coords: self.coords.iter().map(|x| x * &k).collect(),
        }
    }

    /// Non-inverted coordinates where the representative is positive. These
    /// are independent of the representative.
    pub fn free_support(&self) -> Vec<usize> {
        self.owner
            .free_coords()
            .into_iter()
            .filter(|&i| self.coords[i].is_positive())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.free_support().is_empty()
    }

    pub fn inverse(&self) -> Option<MonoidElem> {
        self.is_unit().then(|| MonoidElem {
            owner: self.owner.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        })
    }

    /// Image under a coordinate-identity homomorphism into `target`
    /// (quotient and localization maps).
    pub fn map_to(&self, target: &CanonicalMonoid) -> Result<MonoidElem> {
        target.elem(self.coords.clone())
    }

    /// Canonical coordinates: equal elements have equal normal forms.
    pub fn normal_form(&self) -> IntVec {
        self.owner
            .relations()
            .reduce(&self.coords)
            .expect("rank agrees")
    }

    /// Image in the compact monoid returned by [`CanonicalMonoid::projected`].
    pub fn restrict(&self, target: &CanonicalMonoid, kept: &[usize]) -> Result<MonoidElem> {
        if kept.is_empty() {
            return Ok(target.zero());
        }
        target.elem(kept.iter().map(|&i| self.coords[i].clone()).collect())
    }

    pub fn to_repr(&self) -> ElemRepr {
        ElemRepr {
            coords: to_json_vec(&self.coords),
        }
    }
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.coords))
    }
}

/// `elem_eq(a, b)`.
pub fn elem_eq(a: &MonoidElem, b: &MonoidElem) -> Result<bool> {
    a.equals(b)
}

/// A face `(ℤ^J / L) ⊕ ℕ^K ⊕ 0` of its owner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDesc {
    owner: CanonicalMonoid,
    coords: BTreeSet<usize>,
}

impl FaceDesc {
    pub fn new(owner: &CanonicalMonoid, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let coords: BTreeSet<usize> = coords.into_iter().collect();
        if let Some(&i) = coords
            .iter()
            .find(|&&i| i >= owner.rank() || owner.is_inverted(i))
        {
            return Err(Error::InvalidInput(format!(
                "face coordinate {i} is inverted or out of range"
            )));
        }
        Ok(FaceDesc {
            owner: owner.clone(),
            coords,
        })
    }

    pub fn owner(&self) -> &CanonicalMonoid {
        &self.owner
    }

    /// The coordinate set `K`.
    pub fn coords(&self) -> &BTreeSet<usize> {
        &self.coords
    }

    pub fn contains(&self, x: &MonoidElem) -> Result<bool> {
        self.owner.check_owner(x)?;
        Ok(x.free_support().iter().all(|i| self.coords.contains(i)))
    }

    /// Generators `±e_j` for `j ∈ J` and `e_k` for `k ∈ K`.
    pub fn to_submonoid(&self) -> SubmonoidGens {
        let n = self.owner.rank();
        let mut gens = Vec::new();
        for &j in self.owner.inverted() {
            let e = unit_vec(n, j);
            gens.push(
                self.owner
                    .elem(e.iter().map(|x| -x).collect())
                    .expect("inverted"),
            );
            gens.push(self.owner.elem(e).expect("unit vector"));
        }
        for &k in &self.coords {
            gens.push(self.owner.elem(unit_vec(n, k)).expect("unit vector"));
        }
        SubmonoidGens {
            owner: self.owner.clone(),
            gens,
        }
    }
}

/// Outcome of the bounded subtractivity search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubtractiveVerdict {
    /// No counterexample within the box.
    pub holds: bool,
    /// Box edge used for the search; `holds` is only claimed up to this bound.
    pub bound: u32,
    /// `(x, y)` with `x ∈ N`, `x + y ∈ N` and `y ∉ N`.
    #[serde(skip)]
    pub counterexample: Option<(IntVec, IntVec)>,
}

/// The submonoid `⟨gens⟩_ℕ` of its owner.
#[derive(Debug, Clone)]
pub struct SubmonoidGens {
    owner: CanonicalMonoid,
    gens: Vec<MonoidElem>,
}

impl SubmonoidGens {
    pub fn new(owner: &CanonicalMonoid, gens: Vec<MonoidElem>) -> Result<Self> {
        for g in &gens {
            owner.check_owner(g)?;
        }
        Ok(SubmonoidGens {
            owner: owner.clone(),
            gens,
        })
    }

    pub fn from_coords(owner: &CanonicalMonoid, gens: &[IntVec]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| owner.elem(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubmonoidGens {
            owner: owner.clone(),
            gens,
        })
    }

    pub fn owner(&self) -> &CanonicalMonoid {
        &self.owner
    }

    pub fn gens(&self) -> &[MonoidElem] {
        &self.gens
    }

    /// Exact cofinality: the non-inverted supports of the generators cover
    /// every non-inverted coordinate.
    pub fn is_cofinal(&self) -> bool {
        let covered: BTreeSet<usize> = self.gens.iter().flat_map(|g| g.free_support()).collect();
        self.owner.free_coords().iter().all(|i| covered.contains(i))
    }

    /// Membership `x ∈ ⟨gens⟩_ℕ`.
    ///
    /// Coefficients of generators with nonzero non-inverted part are bounded by
    /// `x` and searched exhaustively. Coefficients of pure-unit generators are
    /// searched in `[0, unit_bound]`, so the answer is exact whenever no
    /// generator is a unit.
    pub fn contains(&self, x: &MonoidElem, unit_bound: u32) -> Result<bool> {
        self.owner.check_owner(x)?;
        Ok(self.contains_coords(&x.coords, unit_bound))
    }

    fn contains_coords(&self, x: &[BigInt], unit_bound: u32) -> bool {
        let free = self.owner.free_coords();
        let (positive, units): (Vec<&MonoidElem>, Vec<&MonoidElem>) =
            self.gens.iter().partition(|g| !g.is_unit());
        let mut residual: IntVec = x.to_vec();
        self.search_positive(&free, &positive, 0, &mut residual, &units, unit_bound)
    }

    fn search_positive(
        &self,
        free: &[usize],
        positive: &[&MonoidElem],
        idx: usize,
        residual: &mut IntVec,
        units: &[&MonoidElem],
        unit_bound: u32,
    ) -> bool {
        if free.iter().any(|&i| residual[i].is_negative()) {
            return false;
        }
        if idx == positive.len() {
            if free.iter().any(|&i| !residual[i].is_zero()) {
                return false;
            }
            return self.search_units(units, 0, residual, unit_bound);
        }
        let g = positive[idx].coords();
        let mut taken = 0usize;
        let found = loop {
            if self.search_positive(free, positive, idx + 1, residual, units, unit_bound) {
                break true;
            }
            if free.iter().any(|&i| residual[i] < g[i]) {
                break false;
            }
            lattice::axpy(residual, &BigInt::from(-1), g);
            taken += 1;
        };
        let back = BigInt::from(taken);
        lattice::axpy(residual, &back, g);
        found
    }

    fn search_units(
        &self,
        units: &[&MonoidElem],
        idx: usize,
        residual: &mut IntVec,
        unit_bound: u32,
    ) -> bool {
        if idx == units.len() {
            return self
                .owner
                .relations()
                .contains(residual)
                .expect("rank agrees");
        }
        let g = units[idx].coords();
        let mut found = false;
        let mut taken = 0u32;
        loop {
            if self.search_units(units, idx + 1, residual, unit_bound) {
                found = true;
                break;
            }
            if taken == unit_bound {
                break;
            }
            lattice::axpy(residual, &BigInt::from(-1), g);
            taken += 1;
        }
        lattice::axpy(residual, &BigInt::from(taken), g);
        found
    }

    /// Exhaustive check of `x ∈ N, x + y ∈ N ⇒ y ∈ N` for `x, y` in the box
    /// with non-inverted coordinates in `[0, bound]` and inverted coordinates in
    /// `[−bound, bound]`.
    pub fn is_subtractive(&self, bound: u32) -> SubtractiveVerdict {
        let window = box_window(&self.owner, bound);
        let mut memo: HashMap<IntVec, bool> = HashMap::new();
        let mut member = |v: &IntVec| -> bool {
            if let Some(&b) = memo.get(v) {
                return b;
            }
            let b = self.contains_coords(v, bound);
            memo.insert(v.clone(), b);
            b
        };
        for x in &window {
            if !member(x) {
                continue;
            }
            for y in &window {
                let sum: IntVec = x.iter().zip(y).map(|(a, b)| a + b).collect();
                if member(&sum) && !member(y) {
                    return SubtractiveVerdict {
                        holds: false,
                        bound,
                        counterexample: Some((x.clone(), y.clone())),
                    };
                }
            }
        }
        SubtractiveVerdict {
            holds: true,
            bound,
            counterexample: None,
        }
    }

    /// `Φ(N) = ⟨ρ(N)⟩_ℤ` for a free owner, where `ρ` is the coordinate inclusion into `ℤⁿ`.
    pub fn phi_subgroup(&self) -> Result<IntLattice> {
        if !self.owner.is_free() {
            return Err(Error::UnsupportedMonoid(
                "Φ is implemented for free monoids only".into(),
            ));
        }
        let gens: Vec<IntVec> = self.gens.iter().map(|g| g.coords.clone()).collect();
        hnf(&gens, self.owner.rank())
    }

    /// Witnesses `n, n' ∈ N` with `x + n = y + n'` in the owner, when `x` and `y`
    /// become equal in `M / N`.
    pub fn congruence_witness(
        &self,
        x: &MonoidElem,
        y: &MonoidElem,
    ) -> Result<Option<(MonoidElem, MonoidElem)>> {
        self.owner.check_owner(x)?;
        self.owner.check_owner(y)?;
        let n = self.owner.rank();
        let diff: IntVec = x.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect();
        let mut all: Vec<IntVec> = self.gens.iter().map(|g| g.coords.clone()).collect();
        all.extend(self.owner.relations().basis().iter().cloned());
        let Some(c) = express_in_generators(&diff, &all, n)? else {
            return Ok(None);
        };
        // x − y = Σ c_k g_k + l  ⇒  x + Σ_{c_k<0} |c_k| g_k = y + Σ_{c_k>0} c_k g_k + l
        let mut plus = vec![BigInt::zero(); n];
        let mut minus = vec![BigInt::zero(); n];
        for (ck, g) in c.iter().zip(&self.gens) {
            if ck.is_positive() {
                lattice::axpy(&mut plus, ck, &g.coords);
            } else if ck.is_negative() {
                lattice::axpy(&mut minus, &-ck, &g.coords);
            }
        }
        Ok(Some((self.owner.elem(minus)?, self.owner.elem(plus)?)))
    }
}

/// `Ψ(H)` membership: `ρ(v) ∈ H`.
pub fn psi_member(h: &IntLattice, v: &MonoidElem) -> Result<bool> {
    h.contains(v.coords())
}

/// Coordinate box of a monoid: non-inverted coordinates in `[0, bound]`,
/// inverted ones in `[−bound, bound]`, ordered by `ℓ¹` size then lexicographically.
pub fn box_window(m: &CanonicalMonoid, bound: u32) -> Vec<IntVec> {
    let b = bound as i64;
    let ranges: Vec<(i64, i64)> = (0..m.rank())
        .map(|i| if m.is_inverted(i) { (-b, b) } else { (0, b) })
        .collect();
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for (lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.sort_by(|a, b| {
        let na: i64 = a.iter().map(|x| x.abs()).sum();
        let nb: i64 = b.iter().map(|x| x.abs()).sum();
        na.cmp(&nb).then_with(|| a.cmp(b))
    });
    out.into_iter().map(|v| int_vec(&v)).collect()
}

/// Machine-integer view of a coordinate vector, for display and hashing in reports.
pub fn coords_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(ToPrimitive::to_i64).collect()
}
