//! Root systems in epsilon coordinates with exact rational arithmetic.
//!
//! Every quantity here is a `BigRational`; nothing in this module touches
//! floating point.  Roots are generated by closing the simple roots under
//! simple reflections, positivity is decided by exact expansion in the
//! simple basis, and weights are always stored projected onto the span of
//! the simple roots (so for type A the traceless-hyperplane convention is
//! built in).

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Exact dot product in epsilon coordinates.
pub fn inner(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len());
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x * y;
    }
    acc
}

fn vadd(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

fn vscale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

fn vneg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

/// Simple type label.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    F4,
    G2,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        write!(f, "{s}")
    }
}

/// A weight in epsilon coordinates, stored projected onto the span of the
/// simple roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub eps: Vec<Q>,
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight { eps: vec![Q::zero(); dim] }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().all(|c| c.is_zero())
    }

    pub fn scaled(&self, c: &Q) -> Weight {
        Weight { eps: vscale(c, &self.eps) }
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        Weight { eps: vadd(&self.eps, &other.eps) }
    }

    pub fn negated(&self) -> Weight {
        Weight { eps: vneg(&self.eps) }
    }
}

/// A root system realized in Q^ambient.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Q>>,
    /// Sorted by (height, lex), ascending.
    pub positive_roots: Vec<Vec<Q>>,
    /// cartan[i][j] = <alpha_i, alpha_j^vee>.
    pub cartan_matrix: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Weight>,
    gram_inv: Vec<Vec<Q>>,
}

fn simple_roots_for(family: Family, rank: usize) -> Result<(Vec<Vec<Q>>, usize)> {
    let err = || Error::UnsupportedRootSystem { family: family.to_string(), rank };
    let basis = |dim: usize, entries: &[(usize, Q)]| -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        for (i, c) in entries {
            v[*i] = c.clone();
        }
        v
    };
    match family {
        Family::A => {
            if rank < 1 {
                return Err(err());
            }
            let dim = rank + 1;
            let simples = (0..rank)
                .map(|i| basis(dim, &[(i, qi(1)), (i + 1, qi(-1))]))
                .collect();
            Ok((simples, dim))
        }
        Family::B => {
            if rank < 1 {
                return Err(err());
            }
            let dim = rank;
            let mut simples: Vec<Vec<Q>> = (0..rank.saturating_sub(1))
                .map(|i| basis(dim, &[(i, qi(1)), (i + 1, qi(-1))]))
                .collect();
            simples.push(basis(dim, &[(rank - 1, qi(1))]));
            Ok((simples, dim))
        }
        Family::C => {
            if rank < 1 {
                return Err(err());
            }
            let dim = rank;
            let mut simples: Vec<Vec<Q>> = (0..rank.saturating_sub(1))
                .map(|i| basis(dim, &[(i, qi(1)), (i + 1, qi(-1))]))
                .collect();
            simples.push(basis(dim, &[(rank - 1, qi(2))]));
            Ok((simples, dim))
        }
        Family::D => {
            if rank < 2 {
                return Err(err());
            }
            let dim = rank;
            let mut simples: Vec<Vec<Q>> = (0..rank - 1)
                .map(|i| basis(dim, &[(i, qi(1)), (i + 1, qi(-1))]))
                .collect();
            simples.push(basis(dim, &[(rank - 2, qi(1)), (rank - 1, qi(1))]));
            Ok((simples, dim))
        }
        Family::G2 => {
            if rank != 2 {
                return Err(err());
            }
            let a1 = basis(3, &[(0, qi(1)), (1, qi(-1))]);
            let a2 = basis(3, &[(0, qi(-2)), (1, qi(1)), (2, qi(1))]);
            Ok((vec![a1, a2], 3))
        }
        Family::F4 => {
            if rank != 4 {
                return Err(err());
            }
            let a1 = basis(4, &[(1, qi(1)), (2, qi(-1))]);
            let a2 = basis(4, &[(2, qi(1)), (3, qi(-1))]);
            let a3 = basis(4, &[(3, qi(1))]);
            let a4 = basis(4, &[(0, q(1, 2)), (1, q(-1, 2)), (2, q(-1, 2)), (3, q(-1, 2))]);
            Ok((vec![a1, a2, a3, a4], 4))
        }
        Family::E6 | Family::E7 => {
            let want = if family == Family::E6 { 6 } else { 7 };
            if rank != want {
                return Err(err());
            }
            // Standard realization inside Q^8.
            let mut a1 = vec![q(-1, 2); 8];
            a1[0] = q(1, 2);
            a1[7] = q(1, 2);
            let mut simples = vec![
                a1,
                basis(8, &[(0, qi(1)), (1, qi(1))]),
                basis(8, &[(0, qi(-1)), (1, qi(1))]),
                basis(8, &[(1, qi(-1)), (2, qi(1))]),
                basis(8, &[(2, qi(-1)), (3, qi(1))]),
                basis(8, &[(3, qi(-1)), (4, qi(1))]),
            ];
            if family == Family::E7 {
                simples.push(basis(8, &[(4, qi(-1)), (5, qi(1))]));
            }
            Ok((simples, 8))
        }
    }
}

fn expected_positive_count(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank * (rank + 1) / 2,
        Family::B | Family::C => rank * rank,
        Family::D => rank * (rank - 1),
        Family::G2 => 6,
        Family::F4 => 24,
        Family::E6 => 36,
        Family::E7 => 63,
    }
}

/// Exact inverse by Gauss-Jordan elimination.  Returns None if singular.
fn invert_q(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { qi(1) } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

fn reflect(v: &[Q], alpha: &[Q]) -> Vec<Q> {
    let c = qi(2) * inner(v, alpha) / inner(alpha, alpha);
    v.iter().zip(alpha.iter()).map(|(x, a)| x - &c * a).collect()
}

impl RootSystem {
    /// Expansion coefficients of `v` (assumed in the span) in the simple
    /// root basis.
    pub fn simple_coords(&self, v: &[Q]) -> Vec<Q> {
        let b: Vec<Q> = self.simple_roots.iter().map(|a| inner(v, a)).collect();
        (0..self.rank)
            .map(|i| {
                let mut acc = Q::zero();
                for j in 0..self.rank {
                    acc += &self.gram_inv[i][j] * &b[j];
                }
                acc
            })
            .collect()
    }

    /// Orthogonal projection onto the span of the simple roots.
    pub fn project(&self, v: &[Q]) -> Vec<Q> {
        let c = self.simple_coords(v);
        let mut out = vec![Q::zero(); self.ambient_dim];
        for (ci, alpha) in c.iter().zip(self.simple_roots.iter()) {
            for (o, a) in out.iter_mut().zip(alpha.iter()) {
                *o += ci * a;
            }
        }
        out
    }

    /// Weight from raw epsilon coordinates (projected onto the root span).
    pub fn weight_from_epsilon(&self, coords: &[Q]) -> Result<Weight> {
        if coords.len() != self.ambient_dim {
            return Err(Error::InvalidConstruction(format!(
                "epsilon coordinates have length {}, ambient dimension is {}",
                coords.len(),
                self.ambient_dim
            )));
        }
        Ok(Weight { eps: self.project(coords) })
    }

    /// Non-negative integer combination of fundamental weights.
    pub fn weight_from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::InvalidConstruction(format!(
                "{} fundamental coefficients given, rank is {}",
                coeffs.len(),
                self.rank
            )));
        }
        let mut eps = vec![Q::zero(); self.ambient_dim];
        for (c, fw) in coeffs.iter().zip(self.fundamental_weights.iter()) {
            for (e, w) in eps.iter_mut().zip(fw.eps.iter()) {
                *e += qi(*c) * w;
            }
        }
        Ok(Weight { eps })
    }

    /// Pairings <lam, alpha_i^vee> with the simple coroots.
    pub fn fundamental_coords(&self, lam: &Weight) -> Vec<Q> {
        self.simple_roots
            .iter()
            .map(|a| qi(2) * inner(&lam.eps, a) / inner(a, a))
            .collect()
    }

    pub fn is_dominant_integral(&self, lam: &Weight) -> bool {
        self.fundamental_coords(lam)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Half sum of positive roots.
    pub fn weyl_vector(&self) -> Weight {
        let mut eps = vec![Q::zero(); self.ambient_dim];
        for r in &self.positive_roots {
            for (e, x) in eps.iter_mut().zip(r.iter()) {
                *e += x;
            }
        }
        Weight { eps: vscale(&q(1, 2), &eps) }
    }
}

/// Build the root system for a supported simple type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let (simple_roots, ambient_dim) = simple_roots_for(family, rank)?;

    let gram: Vec<Vec<Q>> = simple_roots
        .iter()
        .map(|a| simple_roots.iter().map(|b| inner(a, b)).collect())
        .collect();
    let gram_inv = invert_q(&gram)
        .ok_or_else(|| Error::Internal("simple roots are linearly dependent".into()))?;

    // All roots: close the simple roots under simple reflections.
    let mut all: HashSet<Vec<Q>> = simple_roots.iter().cloned().collect();
    let mut queue: Vec<Vec<Q>> = simple_roots.clone();
    while let Some(v) = queue.pop() {
        for s in &simple_roots {
            let w = reflect(&v, s);
            if all.insert(w.clone()) {
                queue.push(w);
            }
        }
    }

    let mut rs = RootSystem {
        family,
        rank,
        ambient_dim,
        simple_roots,
        positive_roots: Vec::new(),
        cartan_matrix: Vec::new(),
        fundamental_weights: Vec::new(),
        gram_inv,
    };

    let mut positives: Vec<(Q, Vec<Q>)> = Vec::new();
    for root in &all {
        let coords = rs.simple_coords(root);
        let all_nonneg = coords.iter().all(|c| !c.is_negative());
        let all_nonpos = coords.iter().all(|c| !c.is_positive());
        let all_int = coords.iter().all(|c| c.is_integer());
        if !all_int || (!all_nonneg && !all_nonpos) {
            return Err(Error::Internal(format!(
                "root with non-integral or mixed-sign simple expansion: {coords:?}"
            )));
        }
        if all_nonneg {
            let height: Q = coords.iter().fold(Q::zero(), |acc, c| acc + c);
            positives.push((height, root.clone()));
        }
    }
    positives.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    rs.positive_roots = positives.into_iter().map(|(_, r)| r).collect();

    let expect = expected_positive_count(family, rank);
    if rs.positive_roots.len() != expect {
        return Err(Error::Internal(format!(
            "{family}{rank}: found {} positive roots, expected {expect}",
            rs.positive_roots.len()
        )));
    }

    // Cartan matrix, guaranteed integral.
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let c = qi(2) * inner(&rs.simple_roots[i], &rs.simple_roots[j])
                / inner(&rs.simple_roots[j], &rs.simple_roots[j]);
            if !c.is_integer() {
                return Err(Error::Internal("non-integral Cartan entry".into()));
            }
            cartan[i][j] = c.to_integer().to_i64().unwrap();
            if i == j && cartan[i][j] != 2 {
                return Err(Error::Internal("Cartan diagonal is not 2".into()));
            }
            if i != j && cartan[i][j] > 0 {
                return Err(Error::Internal("positive off-diagonal Cartan entry".into()));
            }
        }
    }
    rs.cartan_matrix = cartan;

    // Fundamental weights: Lambda_i = sum_k (C^-1)_{ik} alpha_k solves
    // <Lambda_i, alpha_j^vee> = delta_ij.
    let cartan_q: Vec<Vec<Q>> = rs
        .cartan_matrix
        .iter()
        .map(|row| row.iter().map(|&x| qi(x)).collect())
        .collect();
    let cartan_inv =
        invert_q(&cartan_q).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
    let mut fws = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut eps = vec![Q::zero(); ambient_dim];
        for k in 0..rank {
            for (e, a) in eps.iter_mut().zip(rs.simple_roots[k].iter()) {
                *e += &cartan_inv[i][k] * a;
            }
        }
        fws.push(Weight { eps });
    }
    rs.fundamental_weights = fws;

    for i in 0..rank {
        let coords = rs.fundamental_coords(&rs.fundamental_weights[i]);
        for (j, c) in coords.iter().enumerate() {
            let want = if i == j { qi(1) } else { Q::zero() };
            if *c != want {
                return Err(Error::Internal("fundamental weight duality failed".into()));
            }
        }
    }

    Ok(rs)
}

/// Positive roots exactly orthogonal to a dominant integral weight.
pub fn a_lambda(rs: &RootSystem, lam: &Weight) -> Result<Vec<Vec<Q>>> {
    if !rs.is_dominant_integral(lam) {
        return Err(Error::NotDominantIntegral {
            detail: format!("fundamental coordinates {:?}", rs.fundamental_coords(lam)),
        });
    }
    Ok(rs
        .positive_roots
        .iter()
        .filter(|alpha| inner(&lam.eps, alpha).is_zero())
        .cloned()
        .collect())
}

/// Dimension of the irreducible representation with highest weight `lam`.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<u64> {
    if !rs.is_dominant_integral(lam) {
        return Err(Error::NotDominantIntegral {
            detail: format!("fundamental coordinates {:?}", rs.fundamental_coords(lam)),
        });
    }
    let rho = rs.weyl_vector();
    let shifted = lam.plus(&rho);
    let mut num = qi(1);
    let mut den = qi(1);
    for alpha in &rs.positive_roots {
        num *= inner(&shifted.eps, alpha);
        den *= inner(&rho.eps, alpha);
    }
    let dim = num / den;
    if !dim.is_integer() || !dim.is_positive() {
        return Err(Error::Internal(format!("non-integral Weyl dimension {dim}")));
    }
    dim.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal("Weyl dimension overflows u64".into()))
}

/// Complex projective stabilizer dimension predicted for the point
/// `[v_lam + v_{-lam}]` built from a highest weight vector and an equal-norm
/// lowest-weight partner: `(rank - 1) + 2 |A_lambda|`.
///
/// Requires `lam != 0`, `2 lam` not a positive root, and `2 lam` not a sum
/// of two positive roots; the violated hypothesis is reported exactly.
pub fn predicted_projective_isotropy_dim(rs: &RootSystem, lam: &Weight) -> Result<usize> {
    if lam.is_zero() {
        return Err(Error::PredictionHypothesesFailed { detail: "weight is zero".into() });
    }
    let two_lam: Vec<Q> = vscale(&qi(2), &lam.eps);
    for alpha in &rs.positive_roots {
        if *alpha == two_lam {
            return Err(Error::PredictionHypothesesFailed {
                detail: format!("2*lambda is the positive root {alpha:?}"),
            });
        }
    }
    for (i, alpha) in rs.positive_roots.iter().enumerate() {
        for beta in rs.positive_roots.iter().skip(i) {
            if vadd(alpha, beta) == two_lam {
                return Err(Error::PredictionHypothesesFailed {
                    detail: format!("2*lambda = {alpha:?} + {beta:?}, a sum of positive roots"),
                });
            }
        }
    }
    let a = a_lambda(rs, lam)?;
    Ok((rs.rank - 1) + 2 * a.len())
}
