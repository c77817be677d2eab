//! Exact strict-positivity test for lattices via Fourier–Motzkin elimination.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::{axpy, IntLattice, IntVec};

/// `coeffs · x ≥ rhs`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Ineq {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// A vector of `lattice` with every coordinate `> 0`, if one exists.
///
/// Solves `Σ_k c_k b_k ≥ 1` (componentwise) over the rationals, where `b_k` are
/// the basis rows, then clears denominators. Scaling by a positive integer
/// keeps every coordinate positive and lands back in the lattice.
pub fn strictly_positive_witness(lattice: &IntLattice) -> Option<IntVec> {
    let n = lattice.ambient_rank();
    let basis = lattice.basis();
    let r = basis.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if r == 0 {
        return None;
    }
    let initial: Vec<Ineq> = (0..n)
        .map(|i| Ineq {
            coeffs: basis
                .iter()
                .map(|b| BigRational::from_integer(b[i].clone()))
                .collect(),
            rhs: BigRational::one(),
        })
        .collect();

    // stages[k] involves variables 0..k only
    let mut stages: Vec<Vec<Ineq>> = vec![Vec::new(); r + 1];
    stages[r] = initial;
    for k in (0..r).rev() {
        stages[k] = eliminate(&stages[k + 1], k);
    }
    if stages[0].iter().any(|c| c.rhs.is_positive()) {
        return None;
    }

    let mut x: Vec<BigRational> = Vec::with_capacity(r);
    for k in 0..r {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for ineq in &stages[k + 1] {
            let a = &ineq.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let mut rest = ineq.rhs.clone();
            for (j, xj) in x.iter().enumerate() {
                rest -= &ineq.coeffs[j] * xj;
            }
            let bound = rest / a;
            if a.is_positive() {
                if lower.as_ref().is_none_or(|l| &bound > l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| &bound < u) {
                upper = Some(bound);
            }
        }
        x.push(lower.or(upper).unwrap_or_else(BigRational::zero));
    }

    let denom = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut v = vec![BigInt::zero(); n];
    for (q, b) in x.iter().zip(basis) {
        let c = q.numer() * (&denom / q.denom());
        axpy(&mut v, &c, b);
    }
    debug_assert!(v.iter().all(|t| t.is_positive()));
    Some(v)
}

fn eliminate(system: &[Ineq], var: usize) -> Vec<Ineq> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out: Vec<Ineq> = Vec::new();
    let mut seen: HashSet<Ineq> = HashSet::new();
    let mut push = |ineq: Ineq, out: &mut Vec<Ineq>| {
        let mut ineq = ineq;
        ineq.coeffs.truncate(var);
        let ineq = ineq.normalized();
        if seen.insert(ineq.clone()) {
            out.push(ineq);
        }
    };
    for ineq in system {
        let a = &ineq.coeffs[var];
        if a.is_positive() {
            pos.push(ineq);
        } else if a.is_negative() {
            neg.push(ineq);
        } else {
            push(ineq.clone(), &mut out);
        }
    }
    for p in &pos {
        for q in &neg {
            let ap = p.coeffs[var].clone();
            let aq = -q.coeffs[var].clone();
            let coeffs = p
                .coeffs
                .iter()
                .zip(&q.coeffs)
                .map(|(x, y)| x * &aq + y * &ap)
                .collect();
            let rhs = &p.rhs * &aq + &q.rhs * &ap;
            push(Ineq { coeffs, rhs }, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{hnf, int_vec};

    fn lat(gens: &[&[i64]], n: usize) -> IntLattice {
        hnf(&gens.iter().map(|g| int_vec(g)).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn diagonal_is_positive() {
        let w = strictly_positive_witness(&lat(&[&[1, 1, 1]], 3)).unwrap();
        assert!(w.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn antidiagonal_plus_axis_is_not() {
        assert!(strictly_positive_witness(&lat(&[&[1, -1, 0], &[0, 0, 1]], 3)).is_none());
        assert!(strictly_positive_witness(&IntLattice::zero(2)).is_none());
    }

    #[test]
    fn needs_mixed_combination() {
        // (3,-1) + (-1,3) = (2,2)
        let l = lat(&[&[3, -1], &[-1, 3]], 2);
        let w = strictly_positive_witness(&l).unwrap();
        assert!(w.iter().all(|x| x.is_positive()));
        assert!(l.contains(&w).unwrap());
    }

    #[test]
    fn full_lattice() {
        let w = strictly_positive_witness(&IntLattice::full(5)).unwrap();
        assert!(w.iter().all(|x| x.is_positive()));
    }
}
