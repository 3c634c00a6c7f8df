//! Spin representations of so(n) on the fermionic Fock space Λ(C^m),
//! m = floor(n/2).  Basis vectors are indexed by subsets of {0..m-1},
//! ordered by cardinality then lexicographically.  Gamma matrices come
//! from creation/annihilation operators; for odd n the last gamma is the
//! chirality element of the even part.  The generator R_ab/sqrt(2) of
//! so(n) acts as gamma_a gamma_b / (2 sqrt(2)).

use std::sync::Arc;

use crate::algebra::{so_pair_order, CompactAlgebra};
use crate::error::Error;
use crate::linalg::{cplx, CMat};
use crate::representations::Representation;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    /// The single spin representation of odd so(n).
    Full,
    /// Even-cardinality subsets (even so(n) only).
    Even,
    /// Odd-cardinality subsets (even so(n) only).
    Odd,
}

/// Subsets of {0..m-1} ordered by (cardinality, lex); the Fock basis order.
fn all_subsets(m: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (0..1u32 << m)
        .map(|mask| (0..m).filter(|j| mask >> j & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// Basis subsets of the spin representation, in representation order.
pub fn spin_basis_subsets(n: usize, chirality: Chirality) -> Result<Vec<Vec<usize>>> {
    check_args(n, chirality)?;
    let m = n / 2;
    let keep = |s: &Vec<usize>| match chirality {
        Chirality::Full => true,
        Chirality::Even => s.len() % 2 == 0,
        Chirality::Odd => s.len() % 2 == 1,
    };
    Ok(all_subsets(m).into_iter().filter(keep).collect())
}

fn check_args(n: usize, chirality: Chirality) -> Result<()> {
    if n < 5 {
        return Err(Error::InvalidConstruction(format!(
            "spin representation supported for n >= 5, got {n}"
        )));
    }
    match (n % 2 == 0, chirality) {
        (true, Chirality::Full) => Err(Error::InvalidConstruction(format!(
            "so({n}) splits into chiral halves; pick Even or Odd"
        ))),
        (false, Chirality::Even) | (false, Chirality::Odd) => {
            Err(Error::InvalidConstruction(format!(
                "so({n}) has a single spin representation; use Full"
            )))
        }
        _ => Ok(()),
    }
}

/// All gamma matrices on the full 2^m Fock space: 2m from the fermionic
/// operators, plus the top element when `with_top`.
fn gammas(m: usize, with_top: bool) -> Vec<CMat> {
    let subsets = all_subsets(m);
    let dim = subsets.len();
    let index = |s: &[usize]| subsets.iter().position(|t| t == s).unwrap();

    let mut create = Vec::with_capacity(m);
    let mut annihilate = Vec::with_capacity(m);
    for j in 0..m {
        let mut cr = CMat::zeros(dim, dim);
        let mut an = CMat::zeros(dim, dim);
        for (col, s) in subsets.iter().enumerate() {
            let sign = s.iter().filter(|&&x| x < j).count();
            let sign = if sign % 2 == 0 { 1.0 } else { -1.0 };
            if !s.contains(&j) {
                let mut t = s.clone();
                t.push(j);
                t.sort_unstable();
                cr[(index(&t), col)] = cplx(sign, 0.0);
            } else {
                let t: Vec<usize> = s.iter().copied().filter(|&x| x != j).collect();
                an[(index(&t), col)] = cplx(sign, 0.0);
            }
        }
        create.push(cr);
        annihilate.push(an);
    }

    let mut out = Vec::with_capacity(2 * m + 1);
    for j in 0..m {
        out.push(&annihilate[j] + &create[j]);
        out.push((&annihilate[j] - &create[j]) * cplx(0.0, 1.0));
    }
    if with_top {
        let mut top = CMat::identity(dim, dim);
        for g in &out {
            top = top * g;
        }
        let phase = cplx(0.0, -1.0).powu(m as u32);
        out.push(top * phase);
    }
    out
}

/// The spin representation of so(n) in the basis order of
/// `spin_basis_subsets`.
pub fn spin_rep(n: usize, chirality: Chirality) -> Result<Representation> {
    check_args(n, chirality)?;
    let m = n / 2;
    let gs = gammas(m, n % 2 == 1);
    let full_subsets = all_subsets(m);
    let kept: Vec<usize> = spin_basis_subsets(n, chirality)?
        .iter()
        .map(|s| full_subsets.iter().position(|t| t == s).unwrap())
        .collect();

    let algebra = Arc::new(CompactAlgebra::so(n)?);
    let scale = cplx(1.0 / (2.0 * std::f64::consts::SQRT_2), 0.0);
    let mut matrices = Vec::with_capacity(algebra.dim);
    for &(a, b) in &so_pair_order(n) {
        let sigma = &gs[a] * &gs[b] * scale;
        let restricted = CMat::from_fn(kept.len(), kept.len(), |r, c| sigma[(kept[r], kept[c])]);
        matrices.push(restricted);
    }
    let label = match chirality {
        Chirality::Full => format!("spin({n})"),
        Chirality::Even => format!("spin({n})+"),
        Chirality::Odd => format!("spin({n})-"),
    };
    let dim = kept.len();
    Ok(Representation {
        algebra,
        dim,
        matrices,
        label,
        summands: vec![crate::representations::Summand { offset: 0, dim, weight: 1.0 }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjacent_rotation_indices;
    use crate::linalg::max_abs;
    use crate::representations::{real_form, weight_decomposition};
    use crate::rootsystem::q;

    #[test]
    fn gammas_satisfy_the_clifford_relations() {
        for (m, with_top) in [(2, true), (3, false), (3, true)] {
            let gs = gammas(m, with_top);
            let dim = 1 << m;
            for (a, ga) in gs.iter().enumerate() {
                assert!(max_abs(&(ga - ga.adjoint())) < 1e-14, "gamma {a} not Hermitian");
                for (b, gb) in gs.iter().enumerate() {
                    let anti = ga * gb + gb * ga;
                    let want = if a == b { 2.0 } else { 0.0 };
                    let id = CMat::identity(dim, dim) * cplx(want, 0.0);
                    assert!(max_abs(&(anti - id)) < 1e-13, "pair {a},{b}");
                }
            }
        }
    }

    #[test]
    fn dimensions_match_the_fock_count() {
        assert_eq!(spin_rep(7, Chirality::Full).unwrap().dim, 8);
        assert_eq!(spin_rep(9, Chirality::Full).unwrap().dim, 16);
        assert_eq!(spin_rep(11, Chirality::Full).unwrap().dim, 32);
        assert_eq!(spin_rep(10, Chirality::Even).unwrap().dim, 16);
        assert_eq!(spin_rep(12, Chirality::Even).unwrap().dim, 32);
        assert_eq!(spin_rep(14, Chirality::Even).unwrap().dim, 64);
    }

    #[test]
    fn argument_checks() {
        assert!(spin_rep(4, Chirality::Full).is_err());
        assert!(spin_rep(8, Chirality::Full).is_err());
        assert!(spin_rep(7, Chirality::Even).is_err());
        assert!(spin_rep(9, Chirality::Odd).is_err());
    }

    #[test]
    fn spin_actions_are_homomorphisms() {
        spin_rep(7, Chirality::Full).unwrap().validate().unwrap();
        spin_rep(9, Chirality::Full).unwrap().validate().unwrap();
        spin_rep(10, Chirality::Even).unwrap().validate().unwrap();
        spin_rep(10, Chirality::Odd).unwrap().validate().unwrap();
        spin_rep(12, Chirality::Even).unwrap().validate().unwrap();
    }

    #[test]
    fn spin7_weights_are_half_integer_corners() {
        let rep = spin_rep(7, Chirality::Full).unwrap();
        let decomp = weight_decomposition(&rep).unwrap();
        assert_eq!(decomp.entries.len(), 8);
        let rs = &rep.algebra.root_system;
        for sx in [1i64, -1] {
            for sy in [1i64, -1] {
                for sz in [1i64, -1] {
                    let w = rs
                        .weight_from_epsilon(&[q(sx, 2), q(sy, 2), q(sz, 2)])
                        .unwrap();
                    let space = decomp.space(&w).unwrap();
                    assert_eq!(space.basis.len(), 1);
                }
            }
        }
    }

    #[test]
    fn chiral_halves_partition_the_weights() {
        // so(10): Even = even-cardinality subsets, so the number of -1/2
        // coordinates is odd on the Even half and even on the Odd half.
        let even = weight_decomposition(&spin_rep(10, Chirality::Even).unwrap()).unwrap();
        let odd = weight_decomposition(&spin_rep(10, Chirality::Odd).unwrap()).unwrap();
        assert_eq!(even.total_multiplicity(), 16);
        assert_eq!(odd.total_multiplicity(), 16);
        let minus_count = |w: &crate::rootsystem::Weight| {
            w.eps.iter().filter(|x| **x < crate::rootsystem::qi(0)).count()
        };
        for e in &even.entries {
            assert_eq!(minus_count(&e.weight) % 2, 1);
        }
        for e in &odd.entries {
            assert_eq!(minus_count(&e.weight) % 2, 0);
        }
    }

    #[test]
    fn spin9_has_a_real_form() {
        let rep = spin_rep(9, Chirality::Full).unwrap();
        let real = real_form(&rep, &adjacent_rotation_indices(9)).unwrap();
        for m in &real.matrices {
            assert!(m.iter().all(|z| z.im == 0.0));
            assert!(max_abs(&(m + m.transpose())) < 1e-10);
        }
        real.validate().unwrap();
    }

    #[test]
    fn spin5_is_quaternionic() {
        let rep = spin_rep(5, Chirality::Full).unwrap();
        match real_form(&rep, &adjacent_rotation_indices(5)) {
            Err(Error::NoRealStructure(msg)) => assert!(msg.contains("quaternionic"), "{msg}"),
            other => panic!("expected quaternionic rejection, got {other:?}"),
        }
    }

    #[test]
    fn basis_subsets_order_is_cardinality_then_lex() {
        let subs = spin_basis_subsets(10, Chirality::Even).unwrap();
        assert_eq!(subs[0], Vec::<usize>::new());
        assert_eq!(subs[1], vec![0, 1]);
        assert_eq!(subs.last().unwrap(), &vec![1, 2, 3, 4]);
        assert_eq!(subs.len(), 16);
    }
}
