//! Exact integer lattices.
//!
//! A sublattice of `ℤⁿ` is stored by its row-style Hermite normal form: rows are
//! linearly independent, pivot columns strictly increase, every pivot is
//! positive and every entry above a pivot lies in `[0, pivot)`. The form is
//! unique, so two lattices are equal iff their stored bases are identical.
//!
//! All arithmetic uses [`BigInt`]; there are no modular shortcuts.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{from_json_vec, to_json_vec, JsonInt};

/// An integer vector.
pub type IntVec = Vec<BigInt>;

/// Converts machine integers into an [`IntVec`].
pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A sublattice of `ℤ^rank` in canonical Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LatticeRepr", into = "LatticeRepr")]
pub struct IntLattice {
    rank: usize,
    basis: Vec<IntVec>,
}

#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    rank: usize,
    basis: Vec<Vec<JsonInt>>,
}

impl From<IntLattice> for LatticeRepr {
    fn from(l: IntLattice) -> Self {
        LatticeRepr {
            rank: l.rank,
            basis: l.basis.iter().map(|r| to_json_vec(r)).collect(),
        }
    }
}

impl TryFrom<LatticeRepr> for IntLattice {
    type Error = Error;

    fn try_from(r: LatticeRepr) -> Result<Self> {
        let gens: Vec<IntVec> = r.basis.into_iter().map(from_json_vec).collect();
        hnf(&gens, r.rank)
    }
}

impl IntLattice {
    /// The zero lattice in `ℤ^rank`.
    pub fn zero(rank: usize) -> Self {
        IntLattice {
            rank,
            basis: Vec::new(),
        }
    }

    /// The full lattice `ℤ^rank`.
    pub fn full(rank: usize) -> Self {
        let basis = (0..rank).map(|i| unit_vec(rank, i)).collect();
        IntLattice { rank, basis }
    }

    /// The lattice spanned by the given coordinate vectors `e_i`.
    pub fn coordinate(rank: usize, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let gens: Vec<IntVec> = coords
            .into_iter()
            .map(|i| {
                if i < rank {
                    Ok(unit_vec(rank, i))
                } else {
                    Err(Error::InvalidInput(format!(
                        "coordinate {i} out of range for rank {rank}"
                    )))
                }
            })
            .collect::<Result<_>>()?;
        hnf(&gens, rank)
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    /// Rank of the lattice itself (number of basis rows).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| leading_index(r).expect("basis rows are nonzero"))
            .collect()
    }

    /// Union of the supports of the basis rows.
    pub fn support(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.basis.iter().any(|r| !r[i].is_zero()))
            .collect()
    }

    /// Coefficients of `v` with respect to the basis, if `v` lies in the lattice.
    pub fn coefficients(&self, v: &[BigInt]) -> Result<Option<IntVec>> {
        check_len(v, self.rank)?;
        let mut rest: IntVec = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = leading_index(row).expect("basis rows are nonzero");
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                axpy(&mut rest, &-&q, row);
            }
            coeffs.push(q);
        }
        Ok(if rest.iter().all(Zero::is_zero) {
            Some(coeffs)
        } else {
            None
        })
    }

    /// True iff `v` is an integer combination of the basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coefficients(v)?.is_some())
    }

    /// Canonical representative of `v + L`: each pivot coordinate is reduced
    /// into `[0, pivot)`. Two vectors are congruent iff their reductions agree.
    pub fn reduce(&self, v: &[BigInt]) -> Result<IntVec> {
        check_len(v, self.rank)?;
        let mut rest: IntVec = v.to_vec();
        for row in &self.basis {
            let p = leading_index(row).expect("basis rows are nonzero");
            let q = rest[p].div_floor(&row[p]);
            if !q.is_zero() {
                axpy(&mut rest, &-&q, row);
            }
        }
        Ok(rest)
    }

    /// Whether this lattice contains every vector of `other`.
    pub fn contains_lattice(&self, other: &IntLattice) -> Result<bool> {
        if other.rank != self.rank {
            return Err(mismatch(self.rank, other.rank));
        }
        for row in &other.basis {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0 ⊆ ℤ^{}", self.rank);
        }
        let rows: Vec<String> = self.basis.iter().map(|r| fmt_vec(r)).collect();
        write!(f, "⟨{}⟩ ⊆ ℤ^{}", rows.join(", "), self.rank)
    }
}

pub(crate) fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A finitely generated abelian group `ℤ^free_rank ⊕ ⨁ ℤ/d_i` with `d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct AbGroupPresentation {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    free_rank: usize,
    torsion: Vec<JsonInt>,
}

impl From<AbGroupPresentation> for PresentationRepr {
    fn from(p: AbGroupPresentation) -> Self {
        PresentationRepr {
            free_rank: p.free_rank,
            torsion: to_json_vec(&p.torsion),
        }
    }
}

impl TryFrom<PresentationRepr> for AbGroupPresentation {
    type Error = Error;

    fn try_from(r: PresentationRepr) -> Result<Self> {
        let torsion = from_json_vec(r.torsion);
        let two = BigInt::from(2);
        if torsion.iter().any(|d| d < &two) {
            return Err(Error::InvalidInput("torsion factors must be ≥ 2".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidInput(
                "torsion factors must form a divisibility chain".into(),
            ));
        }
        Ok(AbGroupPresentation {
            free_rank: r.free_rank,
            torsion,
        })
    }
}

impl AbGroupPresentation {
    pub fn free(rank: usize) -> Self {
        AbGroupPresentation {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("ℤ/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Canonical Hermite basis of the lattice generated by `generators` in `ℤ^ambient_rank`.
pub fn hnf(generators: &[IntVec], ambient_rank: usize) -> Result<IntLattice> {
    Ok(hnf_with_transform(generators, ambient_rank)?.0)
}

/// Hermite form together with the rows of a transform `T` such that
/// `basis[k] = Σ_j T[k][j] · generators[j]`.
pub(crate) fn hnf_with_transform(
    generators: &[IntVec],
    ambient_rank: usize,
) -> Result<(IntLattice, Vec<IntVec>)> {
    for g in generators {
        check_len(g, ambient_rank)?;
    }
    let m = generators.len();
    let mut rows: Vec<IntVec> = generators.to_vec();
    let mut trans: Vec<IntVec> = (0..m).map(|i| unit_vec(m, i)).collect();

    let mut top = 0;
    for col in 0..ambient_rank {
        if top == m {
            break;
        }
        loop {
            let pick = (top..m)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(p) = pick else { break };
            rows.swap(top, p);
            trans.swap(top, p);
            let mut done = true;
            for r in top + 1..m {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[top][col]);
                let (head, tail) = rows.split_at_mut(r);
                axpy(&mut tail[0], &-&q, &head[top]);
                let (head, tail) = trans.split_at_mut(r);
                axpy(&mut tail[0], &-&q, &head[top]);
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top == m || rows[top][col].is_zero() {
            continue;
        }
        if rows[top][col].is_negative() {
            negate(&mut rows[top]);
            negate(&mut trans[top]);
        }
        for r in 0..top {
            let q = rows[r][col].div_floor(&rows[top][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(top);
            axpy(&mut head[r], &-&q, &tail[0]);
            let (head, tail) = trans.split_at_mut(top);
            axpy(&mut head[r], &-&q, &tail[0]);
        }
        top += 1;
    }
    rows.truncate(top);
    trans.truncate(top);
    Ok((
        IntLattice {
            rank: ambient_rank,
            basis: rows,
        },
        trans,
    ))
}

/// True iff `v` lies in `lattice`.
pub fn lattice_member(v: &[BigInt], lattice: &IntLattice) -> Result<bool> {
    lattice.contains(v)
}

/// Integer coefficients `c` with `v = Σ c_j · generators[j]`, if any exist.
pub fn express_in_generators(
    v: &[BigInt],
    generators: &[IntVec],
    ambient_rank: usize,
) -> Result<Option<IntVec>> {
    let (lattice, trans) = hnf_with_transform(generators, ambient_rank)?;
    let Some(coeffs) = lattice.coefficients(v)? else {
        return Ok(None);
    };
    let mut out = vec![BigInt::zero(); generators.len()];
    for (c, t) in coeffs.iter().zip(&trans) {
        axpy(&mut out, c, t);
    }
    Ok(Some(out))
}

/// Hermite basis of `L1 + L2`.
pub fn lattice_sum(a: &IntLattice, b: &IntLattice) -> Result<IntLattice> {
    if a.rank != b.rank {
        return Err(mismatch(a.rank, b.rank));
    }
    let gens: Vec<IntVec> = a.basis.iter().chain(&b.basis).cloned().collect();
    hnf(&gens, a.rank)
}

/// Presentation of `ℤ^ambient_rank / L` from the Smith invariants of `L`.
pub fn quotient_presentation(
    ambient_rank: usize,
    lattice: &IntLattice,
) -> Result<AbGroupPresentation> {
    if lattice.rank != ambient_rank {
        return Err(mismatch(ambient_rank, lattice.rank));
    }
    let factors = smith_invariants(&lattice.basis, ambient_rank)?;
    let one = BigInt::one();
    Ok(AbGroupPresentation {
        free_rank: ambient_rank - factors.len(),
        torsion: factors.into_iter().filter(|d| d > &one).collect(),
    })
}

/// Nonzero invariant factors (diagonal of the Smith normal form) of the matrix
/// whose rows are `rows`, in divisibility order.
pub fn smith_invariants(rows: &[IntVec], cols: usize) -> Result<Vec<BigInt>> {
    for r in rows {
        check_len(r, cols)?;
    }
    let mut a: Vec<IntVec> = rows.to_vec();
    let m = a.len();
    let mut diag = Vec::new();
    for t in 0..m.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                axpy(&mut tail[0], &-&q, &head[t]);
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad =
                    (t + 1..m).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    None => break,
                    Some(i) => {
                        let (head, tail) = a.split_at_mut(i);
                        axpy(&mut head[t], &BigInt::one(), &tail[0]);
                        dirty = true;
                    }
                }
            }
            if dirty {
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..cols {
                        if (i == t || j == t)
                            && !a[i][j].is_zero()
                            && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let (pi, pj) = best.expect("pivot row or column is nonzero");
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

/// Full-rank sublattices of `ℤ^rank` with index at most `max_index`, sorted.
pub fn sublattices_of_index(rank: usize, max_index: u32) -> Result<Vec<IntLattice>> {
    // diagonal d_i, entries right of the diagonal reduced mod the later pivot
    fn diagonals(rank: usize, budget: u32) -> Vec<Vec<u32>> {
        if rank == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for d in 1..=budget {
            for mut rest in diagonals(rank - 1, budget / d) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
        out
    }
    let mut found = BTreeSet::new();
    for diag in diagonals(rank, max_index) {
        let slots: Vec<(usize, usize)> = (0..rank)
            .flat_map(|i| (i + 1..rank).map(move |j| (i, j)))
            .collect();
        let total: u64 = slots.iter().map(|&(_, j)| diag[j] as u64).product();
        for code in 0..total {
            let mut rows: Vec<IntVec> = (0..rank)
                .map(|i| {
                    let mut r = vec![BigInt::zero(); rank];
                    r[i] = BigInt::from(diag[i]);
                    r
                })
                .collect();
            let mut c = code;
            for &(i, j) in &slots {
                let d = diag[j] as u64;
                rows[i][j] = BigInt::from(c % d);
                c /= d;
            }
            found.insert(hnf(&rows, rank)?.basis().to_vec());
        }
    }
    found.into_iter().map(|b| hnf(&b, rank)).collect()
}

pub fn unit_vec(len: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); len];
    v[i] = BigInt::one();
    v
}

fn leading_index(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// `y += a * x`
pub(crate) fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

fn negate(v: &mut [BigInt]) {
    for x in v.iter_mut() {
        *x = -std::mem::take(x);
    }
}

fn check_len(v: &[BigInt], rank: usize) -> Result<()> {
    if v.len() == rank {
        Ok(())
    } else {
        Err(mismatch(rank, v.len()))
    }
}

fn mismatch(expected: usize, got: usize) -> Error {
    Error::InvalidInput(format!(
        "dimension mismatch: expected {expected}, got {got}"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(gens: &[&[i64]], rank: usize) -> IntLattice {
        let gens: Vec<IntVec> = gens.iter().map(|g| int_vec(g)).collect();
        hnf(&gens, rank).unwrap()
    }

    fn rows(l: &IntLattice) -> Vec<Vec<i64>> {
        l.basis()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn hnf_small_examples() {
        assert_eq!(
            rows(&lat(&[&[2, 0], &[1, 1]], 2)),
            vec![vec![1, 1], vec![0, 2]]
        );
        assert!(lat(&[], 3).is_zero());
        assert_eq!(
            rows(&lat(&[&[1, 0], &[0, 1]], 2)),
            vec![vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn hnf_is_idempotent() {
        let l = lat(&[&[4, 6, 2], &[-2, 3, 7], &[6, 3, -5]], 3);
        let again = hnf(l.basis(), 3).unwrap();
        assert_eq!(l, again);
    }

    #[test]
    fn dimension_mismatch_is_invalid_input() {
        let err = hnf(&[int_vec(&[1, 2])], 3).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        let l = lat(&[&[1, 1]], 2);
        assert!(matches!(
            lattice_member(&int_vec(&[1]), &l),
            Err(Error::InvalidInput(_))
        ));
        assert!(lattice_sum(&l, &IntLattice::zero(3)).is_err());
    }

    #[test]
    fn membership_examples() {
        let l = lat(&[&[1, 1], &[0, 2]], 2);
        assert!(lattice_member(&int_vec(&[3, 1]), &l).unwrap());
        assert!(!lattice_member(&int_vec(&[1, 0]), &l).unwrap());
        assert!(lattice_member(&int_vec(&[0, 0]), &l).unwrap());
        assert!(lattice_member(&int_vec(&[0, 0, 0]), &IntLattice::zero(3)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let l = lat(&[&[2, 0], &[1, 1]], 2);
        let p = quotient_presentation(2, &l).unwrap();
        assert_eq!(p.free_rank, 0);
        assert_eq!(p.torsion, vec![BigInt::from(2)]);
        let z = quotient_presentation(3, &IntLattice::zero(3)).unwrap();
        assert_eq!(z, AbGroupPresentation::free(3));
        let sum = lattice_sum(&lat(&[&[1, 0]], 2), &lat(&[&[0, 1]], 2)).unwrap();
        assert_eq!(sum, IntLattice::full(2));
    }

    #[test]
    fn smith_divisibility_chain() {
        // diag(2, 3) ~ diag(1, 6)
        let l = lat(&[&[2, 0], &[0, 3]], 2);
        let p = quotient_presentation(2, &l).unwrap();
        assert_eq!(p.torsion, vec![BigInt::from(6)]);
        let l = lat(&[&[4, 0, 0], &[0, 6, 0]], 3);
        let p = quotient_presentation(3, &l).unwrap();
        assert_eq!(p.free_rank, 1);
        assert_eq!(p.torsion, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn express_recovers_generator_combination() {
        let gens = vec![int_vec(&[2, 3]), int_vec(&[3, 5])];
        let c = express_in_generators(&int_vec(&[1, 0]), &gens, 2)
            .unwrap()
            .unwrap();
        let mut back = vec![BigInt::zero(); 2];
        for (ci, g) in c.iter().zip(&gens) {
            axpy(&mut back, ci, g);
        }
        assert_eq!(back, int_vec(&[1, 0]));
        let gens = vec![int_vec(&[2, 0])];
        assert!(express_in_generators(&int_vec(&[1, 0]), &gens, 2)
            .unwrap()
            .is_none());
    }

    #[test]
    fn json_shape() {
        let l = lat(&[&[2, 0], &[1, 1]], 2);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"rank":2,"basis":[[1,1],[0,2]]}"#);
        let back: IntLattice = serde_json::from_str(r#"{"rank":2,"basis":[[2,0],[1,1]]}"#).unwrap();
        assert_eq!(back, l);
        let big: IntLattice =
            serde_json::from_str(r#"{"rank":1,"basis":[["100000000000000000000000"]]}"#).unwrap();
        assert!(serde_json::to_string(&big)
            .unwrap()
            .contains("\"100000000000000000000000\""));
    }

    #[test]
    fn display() {
        assert_eq!(
            quotient_presentation(3, &lat(&[&[2, 0, 0]], 3))
                .unwrap()
                .to_string(),
            "ℤ^2 ⊕ ℤ/2"
        );
        assert_eq!(AbGroupPresentation::free(0).to_string(), "0");
    }
}
