//! The case table of homogeneous Lagrangian orbits: machine-readable
//! data for all 21 rows, construction of the candidate points, per-row
//! verification, and stabilizer identification.

pub mod castling;
pub mod identify;

pub use castling::{castling_partner, CastlingTriple};
pub use identify::identify_algebra;

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{adjacent_rotation_indices, CompactAlgebra};
use crate::error::Error;
use crate::linalg::{canonical_phase, cplx, herm, nullspace_complex, CMat, CVec};
use crate::momentmap::{
    check_minimal, isotropy_profile, kempf_ness_flow, real_isotropy, verify_lagrangian, FlowOpts,
    ProjectivePoint,
};
use crate::representations::spin::{spin_basis_subsets, spin_rep, Chirality};
use crate::representations::{
    antisym_matrix_coords, datafile, defining_rep, direct_sum, dual_rep, embed_weighted, g2_rep,
    highest_weight_vector, invariant_subspace_rep, real_form, sym_matrix_coords, sym_power,
    wedge_power, weight_decomposition, Representation,
};
use crate::rootsystem::{
    build_root_system, predicted_projective_isotropy_dim, q, weyl_dim, Family, RootSystem, Weight,
};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointRecipe {
    /// Closed-form point given by the case.
    Explicit,
    /// Sum of the extreme weight vectors.
    SelfDual,
    /// Found by the gradient flow from a recorded seed.
    Flow,
}

impl PointRecipe {
    pub fn label(&self) -> &'static str {
        match self {
            PointRecipe::Explicit => "explicit",
            PointRecipe::SelfDual => "self-dual",
            PointRecipe::Flow => "flow",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixAvailability {
    Always,
    /// Needs an external matrix file (the 27-dimensional action).
    WithDataFile,
    /// No construction shipped (the 56-dimensional action).
    Never,
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub row: usize,
    pub parametric: bool,
    pub min_param: usize,
    /// Smallest admissible parameter first, then one larger exercise value.
    pub default_params: Vec<usize>,
    pub point_recipe: PointRecipe,
    pub flow_seed: u64,
    pub availability: MatrixAvailability,
}

pub fn case_table() -> Vec<CaseSpec> {
    (1..=21)
        .map(|row| {
            let (parametric, min_param, default_params) = match row {
                1 | 2 | 3 => (true, 2, vec![2, 4]),
                4 => (true, 3, vec![3, 4]),
                5 => (true, 2, vec![2, 3]),
                10 => (true, 1, vec![1, 3]),
                12 => (true, 3, vec![3, 7]),
                _ => (false, 0, Vec::new()),
            };
            let point_recipe = match row {
                6 | 7 | 17 | 20 => PointRecipe::SelfDual,
                8 | 9 | 16 | 18 | 19 => PointRecipe::Flow,
                _ => PointRecipe::Explicit,
            };
            let availability = match row {
                19 => MatrixAvailability::WithDataFile,
                20 => MatrixAvailability::Never,
                _ => MatrixAvailability::Always,
            };
            CaseSpec {
                row,
                parametric,
                min_param,
                default_params,
                point_recipe,
                flow_seed: row as u64,
                availability,
            }
        })
        .collect()
}

pub fn case_spec(row: usize) -> Result<CaseSpec> {
    if (1..=21).contains(&row) {
        Ok(case_table().swap_remove(row - 1))
    } else {
        Err(Error::Case(format!("row {row} out of range 1..=21")))
    }
}

impl CaseSpec {
    pub fn resolve_param(&self, n: Option<usize>) -> Result<usize> {
        if self.parametric {
            let v = n.unwrap_or(self.default_params[0]);
            if v < self.min_param {
                return Err(Error::Case(format!(
                    "row {}: parameter n={v} below the minimum {}",
                    self.row, self.min_param
                )));
            }
            Ok(v)
        } else {
            match n {
                None => Ok(0),
                Some(v) => Err(Error::Case(format!(
                    "row {} takes no parameter, got n={v}",
                    self.row
                ))),
            }
        }
    }

    pub fn group_name(&self, n: usize) -> String {
        match self.row {
            1 | 2 | 3 => format!("SU({n})"),
            4 => format!("SU({})", 2 * n),
            5 => format!("SU({})", 2 * n + 1),
            6 => "SU(2)".into(),
            7 => "SU(6)".into(),
            8 => "SU(7)".into(),
            9 => "SU(8)".into(),
            10 => format!("Sp({n})"),
            11 => "Sp(3)".into(),
            12 => format!("SO({n})"),
            13 => "Spin(7)".into(),
            14 => "Spin(9)".into(),
            15 => "Spin(10)".into(),
            16 => "Spin(11)".into(),
            17 => "Spin(12)".into(),
            18 => "Spin(14)".into(),
            19 => "E6".into(),
            20 => "E7".into(),
            21 => "G2".into(),
            _ => unreachable!(),
        }
    }

    pub fn rep_name(&self, n: usize) -> String {
        match self.row {
            1 => format!("Sym^2(C^{n})"),
            2 => format!("C^{n} + dual"),
            3 => format!("{n} copies of C^{n}"),
            4 => format!("Wedge^2(C^{})", 2 * n),
            5 => format!("Wedge^2(C^{m}) + C^{m}", m = 2 * n + 1),
            6 => "Sym^3(C^2)".into(),
            7 => "Wedge^3(C^6)".into(),
            8 => "Wedge^3(C^7)".into(),
            9 => "Wedge^3(C^8)".into(),
            10 => format!("C^{m} + C^{m}", m = 2 * n),
            11 => "primitive part of Wedge^3(C^6)".into(),
            12 => format!("C^{n} (vector)"),
            13 => "spin, dim 8".into(),
            14 => "spin, dim 16".into(),
            15 => "half-spin + half-spin, dim 32".into(),
            16 => "spin, dim 32".into(),
            17 => "half-spin, dim 32".into(),
            18 => "half-spin, dim 64".into(),
            19 => "minimal rep, dim 27".into(),
            20 => "minimal rep, dim 56".into(),
            21 => "fundamental, dim 7".into(),
            _ => unreachable!(),
        }
    }

    /// Expected complex dimension of the ambient projective space.
    pub fn expected_proj_dim(&self, n: usize) -> usize {
        match self.row {
            1 => n * (n + 1) / 2 - 1,
            2 => 2 * n - 1,
            3 => n * n - 1,
            4 => n * (2 * n - 1) - 1,
            5 => 2 * n * n + 3 * n,
            6 => 3,
            7 => 19,
            8 => 34,
            9 => 55,
            10 => 4 * n - 1,
            11 => 13,
            12 => n - 1,
            13 => 7,
            14 => 15,
            15 => 31,
            16 => 31,
            17 => 31,
            18 => 63,
            19 => 26,
            20 => 55,
            21 => 6,
            _ => unreachable!(),
        }
    }

    pub fn expected_isotropy_name(&self, n: usize) -> String {
        match self.row {
            1 => format!("so({n})"),
            2 => format!("su({})", n - 1),
            3 | 6 => "trivial".into(),
            4 | 5 => format!("sp({n})"),
            7 => "su(3)+su(3)".into(),
            8 => "g2".into(),
            9 => "su(3)".into(),
            10 => format!("sp({})", n - 1),
            11 => "su(3)".into(),
            12 => format!("so({})", n - 1),
            13 => "g2".into(),
            14 => "spin(7)".into(),
            15 => "g2".into(),
            16 => "su(5)".into(),
            17 => "su(6)".into(),
            18 => "g2+g2".into(),
            19 => "f4".into(),
            20 => "e6".into(),
            21 => "su(3)".into(),
            _ => unreachable!(),
        }
    }

    pub fn expected_isotropy_dim(&self, n: usize) -> usize {
        match self.row {
            1 => n * (n - 1) / 2,
            2 => (n - 1) * (n - 1) - 1,
            3 | 6 => 0,
            4 | 5 => n * (2 * n + 1),
            7 => 16,
            8 => 14,
            9 => 8,
            10 => (n - 1) * (2 * n - 1),
            11 => 8,
            12 => (n - 1) * (n - 2) / 2,
            13 => 14,
            14 => 21,
            15 => 14,
            16 => 24,
            17 => 35,
            18 => 28,
            19 => 52,
            20 => 78,
            21 => 8,
            _ => unreachable!(),
        }
    }

    pub fn expected_center_dim(&self, n: usize) -> usize {
        identify::class_for_name(&self.expected_isotropy_name(n))
            .map(|c| c.center_dim)
            .unwrap_or(0)
    }

    /// Discrete stabilizer quotient; catalog metadata, not verified here.
    pub fn component_group(&self, n: usize) -> String {
        match self.row {
            1 | 3 => format!("Z_{n}"),
            2 | 10 | 12 | 13 | 14 | 21 => "Z_2".into(),
            4 => format!("Z_{}", 2 * n),
            5 => format!("Z_{}", n + 1),
            6 => "Z_3:Z_4".into(),
            7 | 11 | 16 | 17 => "Z_4".into(),
            8 => "Z_7".into(),
            9 => "Z_16".into(),
            15 | 20 => "-".into(),
            18 => "Z_8".into(),
            19 => "Z_3".into(),
            _ => unreachable!(),
        }
    }

    /// Degree of the relative invariant; catalog metadata, not verified.
    pub fn invariant_degree(&self, n: usize) -> String {
        match self.row {
            1 | 3 => format!("{n}"),
            2 | 10 | 12 | 13 | 14 | 21 => "2".into(),
            4 => format!("{}", 2 * n),
            5 => format!("{}", n + 1),
            6 | 7 | 11 | 15 | 16 | 17 | 20 => "4".into(),
            8 => "7".into(),
            9 => "16".into(),
            18 => "8".into(),
            19 => "3".into(),
            _ => unreachable!(),
        }
    }

    /// Sum of the formal dimensions of the summand highest weights,
    /// computed from root data alone.  Must equal expected_proj_dim + 1.
    pub fn weyl_total(&self, n: usize) -> Result<u64> {
        let a_fund = |rank: usize, idx: usize| -> Result<u64> {
            let rs = build_root_system(Family::A, rank)?;
            let mut c = vec![0i64; rank];
            c[idx] = 1;
            let w = rs.weight_from_fundamental(&c)?;
            weyl_dim(&rs, &w)
        };
        match self.row {
            1 => {
                let rs = build_root_system(Family::A, n - 1)?;
                let mut c = vec![0i64; n - 1];
                c[0] = 2;
                let w = rs.weight_from_fundamental(&c)?;
                weyl_dim(&rs, &w)
            }
            2 => Ok(a_fund(n - 1, 0)? + a_fund(n - 1, n - 2)?),
            3 => Ok(n as u64 * a_fund(n - 1, 0)?),
            4 => a_fund(2 * n - 1, 1),
            5 => Ok(a_fund(2 * n, 1)? + a_fund(2 * n, 0)?),
            6 => {
                let rs = build_root_system(Family::A, 1)?;
                let w = rs.weight_from_fundamental(&[3])?;
                weyl_dim(&rs, &w)
            }
            7 => a_fund(5, 2),
            8 => a_fund(6, 2),
            9 => a_fund(7, 2),
            10 => {
                let rs = build_root_system(Family::C, n)?;
                let mut eps = vec![q(0, 1); n];
                eps[0] = q(1, 1);
                let w = rs.weight_from_epsilon(&eps)?;
                Ok(2 * weyl_dim(&rs, &w)?)
            }
            11 => {
                let rs = build_root_system(Family::C, 3)?;
                let w = rs.weight_from_fundamental(&[0, 0, 1])?;
                weyl_dim(&rs, &w)
            }
            12 => {
                let (rs, w) = vector_weight_so(n)?;
                weyl_dim(&rs, &w)
            }
            13 | 14 | 16 => {
                let l = match self.row {
                    13 => 3,
                    14 => 4,
                    _ => 5,
                };
                let rs = build_root_system(Family::B, l)?;
                let w = rs.weight_from_epsilon(&vec![q(1, 2); l])?;
                weyl_dim(&rs, &w)
            }
            15 => {
                let (rs, w) = even_half_spin_weight(10)?;
                Ok(2 * weyl_dim(&rs, &w)?)
            }
            17 | 18 => {
                let (rs, w) = even_half_spin_weight(if self.row == 17 { 12 } else { 14 })?;
                weyl_dim(&rs, &w)
            }
            19 => {
                let (rs, w) = fundamental_with_dim(Family::E6, 6, 27)?;
                weyl_dim(&rs, &w)
            }
            20 => {
                let (rs, w) = fundamental_with_dim(Family::E7, 7, 56)?;
                weyl_dim(&rs, &w)
            }
            21 => {
                let (rs, w) = fundamental_with_dim(Family::G2, 2, 7)?;
                weyl_dim(&rs, &w)
            }
            _ => unreachable!(),
        }
    }

    /// Root-combinatorial prediction of the complex stabilizer dimension
    /// at the self-dual point, for the rows where the hypotheses hold.
    pub fn predicted_complex_isotropy(&self, _n: usize) -> Result<usize> {
        let (rs, w): (RootSystem, Weight) = match self.row {
            6 => {
                let rs = build_root_system(Family::A, 1)?;
                let w = rs.weight_from_fundamental(&[3])?;
                (rs, w)
            }
            7 => {
                let rs = build_root_system(Family::A, 5)?;
                let w = rs.weight_from_fundamental(&[0, 0, 1, 0, 0])?;
                (rs, w)
            }
            17 => even_half_spin_weight(12)?,
            20 => fundamental_with_dim(Family::E7, 7, 56)?,
            other => {
                return Err(Error::Case(format!(
                    "no stabilizer prediction recorded for row {other}"
                )))
            }
        };
        predicted_projective_isotropy_dim(&rs, &w)
    }
}

fn vector_weight_so(n: usize) -> Result<(RootSystem, Weight)> {
    let rs = if n % 2 == 1 {
        build_root_system(Family::B, (n - 1) / 2)?
    } else {
        build_root_system(Family::D, n / 2)?
    };
    let mut eps = vec![q(0, 1); rs.rank];
    eps[0] = q(1, 1);
    let w = rs.weight_from_epsilon(&eps)?;
    Ok((rs, w))
}

/// Highest weight of the even-cardinality half-spin space of so(n).
fn even_half_spin_weight(n: usize) -> Result<(RootSystem, Weight)> {
    let m = n / 2;
    let rs = build_root_system(Family::D, m)?;
    let mut eps = vec![q(1, 2); m];
    if m % 2 == 1 {
        eps[m - 1] = q(-1, 2);
    }
    let w = rs.weight_from_epsilon(&eps)?;
    Ok((rs, w))
}

fn fundamental_with_dim(family: Family, rank: usize, target: u64) -> Result<(RootSystem, Weight)> {
    let rs = build_root_system(family, rank)?;
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        let w = rs.weight_from_fundamental(&c)?;
        if weyl_dim(&rs, &w)? == target {
            return Ok((rs, w));
        }
    }
    Err(Error::Internal(format!(
        "no fundamental weight of {family}{rank} has dimension {target}"
    )))
}

fn su(n: usize) -> Result<Arc<CompactAlgebra>> {
    Ok(Arc::new(CompactAlgebra::su(n)?))
}

fn sp(n: usize) -> Result<Arc<CompactAlgebra>> {
    Ok(Arc::new(CompactAlgebra::sp(n)?))
}

fn so(n: usize) -> Result<Arc<CompactAlgebra>> {
    Ok(Arc::new(CompactAlgebra::so(n)?))
}

fn basis_vec(dim: usize, k: usize) -> CVec {
    let mut v = CVec::zeros(dim);
    v[k] = cplx(1.0, 0.0);
    v
}

/// The standard antisymmetric block form on C^(2n).
fn block_j(n: usize) -> CMat {
    let mut j = CMat::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = cplx(-1.0, 0.0);
        j[(n + k, k)] = cplx(1.0, 0.0);
    }
    j
}

/// The 20-dimensional cube action of sp(3) together with the kernel of
/// the symplectic contraction to C^6 (the 14-dimensional primitive part).
fn sp3_cube_ingredients() -> Result<(Representation, Vec<CVec>)> {
    let alg = sp(3)?;
    let big = wedge_power(&defining_rep(&alg), 3)?;
    let j = block_j(3);
    let subsets: Vec<Vec<usize>> = {
        use itertools::Itertools;
        (0..6usize).combinations(3).collect()
    };
    let mut c = CMat::zeros(6, subsets.len());
    for (col, s) in subsets.iter().enumerate() {
        let (a, b, d) = (s[0], s[1], s[2]);
        c[(d, col)] += j[(a, b)];
        c[(b, col)] -= j[(a, d)];
        c[(a, col)] += j[(b, d)];
    }
    let kernel = nullspace_complex(&c, "symplectic contraction kernel")?;
    if kernel.len() != 14 {
        return Err(Error::Internal(format!(
            "contraction kernel has dimension {}",
            kernel.len()
        )));
    }
    Ok((big, kernel))
}

/// Build the representation for a row at the given parameter value.
pub fn build_rep(
    spec: &CaseSpec,
    n: usize,
    e6_data: Option<&Path>,
) -> Result<Representation> {
    match spec.row {
        1 => sym_power(&defining_rep(&su(n)?), 2),
        2 => {
            let d = defining_rep(&su(n)?);
            let dl = dual_rep(&d);
            direct_sum(&[&d, &dl], &[1.0, 1.0])
        }
        3 => {
            let d = defining_rep(&su(n)?);
            let refs: Vec<&Representation> = std::iter::repeat(&d).take(n).collect();
            direct_sum(&refs, &vec![1.0; n])
        }
        4 => wedge_power(&defining_rep(&su(2 * n)?), 2),
        5 => {
            let d = defining_rep(&su(2 * n + 1)?);
            let w2 = wedge_power(&d, 2)?;
            direct_sum(&[&w2, &d], &[1.0, 2.0])
        }
        6 => sym_power(&defining_rep(&su(2)?), 3),
        7 => wedge_power(&defining_rep(&su(6)?), 3),
        8 => wedge_power(&defining_rep(&su(7)?), 3),
        9 => wedge_power(&defining_rep(&su(8)?), 3),
        10 => {
            let d = defining_rep(&sp(n)?);
            direct_sum(&[&d, &d], &[1.0, 1.0])
        }
        11 => {
            let (big, kernel) = sp3_cube_ingredients()?;
            invariant_subspace_rep(&big, &kernel, "sp(3) primitive cube")
        }
        12 => Ok(defining_rep(&so(n)?)),
        13 => real_form(&spin_rep(7, Chirality::Full)?, &adjacent_rotation_indices(7)),
        14 => real_form(&spin_rep(9, Chirality::Full)?, &adjacent_rotation_indices(9)),
        15 => {
            let e = spin_rep(10, Chirality::Even)?;
            direct_sum(&[&e, &e], &[1.0, 1.0])
        }
        16 => spin_rep(11, Chirality::Full),
        17 => spin_rep(12, Chirality::Even),
        18 => spin_rep(14, Chirality::Even),
        19 => match e6_data {
            Some(path) => datafile::load_rep(path, "e6", build_root_system(Family::E6, 6)?),
            None => Err(Error::NotConstructibleWithoutData {
                what: "27-dimensional e6 action (supply a matrix data file)".into(),
            }),
        },
        20 => Err(Error::NotConstructibleWithoutData {
            what: "56-dimensional e7 action".into(),
        }),
        21 => g2_rep(),
        other => Err(Error::Case(format!("row {other} out of range"))),
    }
}

/// Sum of the two extreme weight vectors, the distinguished point of a
/// self-dual irreducible space.
pub fn self_dual_point(rep: &Representation) -> Result<ProjectivePoint> {
    let (lam, v) = highest_weight_vector(rep)?;
    let decomp = weight_decomposition(rep)?;
    let neg = lam.negated();
    let space = decomp.space(&neg).ok_or_else(|| {
        Error::Case(format!(
            "{}: opposite extreme weight is not a weight (space is not self-dual)",
            rep.label
        ))
    })?;
    if space.basis.len() != 1 {
        return Err(Error::NotIrreducible(format!(
            "{}: opposite extreme weight space is not a line",
            rep.label
        )));
    }
    let u = canonical_phase(&space.basis[0]);
    ProjectivePoint::new(&(v + u))
}

/// The closed-form candidate point of a row.  Errors for flow rows.
pub fn candidate_point(
    spec: &CaseSpec,
    rep: &Representation,
    n: usize,
) -> Result<ProjectivePoint> {
    match spec.point_recipe {
        PointRecipe::Flow => Err(Error::Case(format!(
            "row {} has no closed-form point; use the flow",
            spec.row
        ))),
        PointRecipe::SelfDual => self_dual_point(rep),
        PointRecipe::Explicit => explicit_point(spec.row, rep, n),
    }
}

fn explicit_point(row: usize, rep: &Representation, n: usize) -> Result<ProjectivePoint> {
    let v: CVec = match row {
        1 => sym_matrix_coords(&CMat::identity(n, n))?,
        2 => embed_weighted(rep, &[basis_vec(n, 0), basis_vec(n, 0)])?,
        3 => {
            let parts: Vec<CVec> = (0..n).map(|i| basis_vec(n, i)).collect();
            embed_weighted(rep, &parts)?
        }
        4 => antisym_matrix_coords(&block_j(n))?,
        5 => {
            // Antisymmetric block form on the last 2n coordinates, paired
            // with the first basis vector of the extra summand.
            let m = 2 * n + 1;
            let mut jh = CMat::zeros(m, m);
            for k in 0..n {
                jh[(1 + k, 1 + n + k)] = cplx(-1.0, 0.0);
                jh[(1 + n + k, 1 + k)] = cplx(1.0, 0.0);
            }
            embed_weighted(rep, &[antisym_matrix_coords(&jh)?, basis_vec(m, 0)])?
        }
        10 => embed_weighted(rep, &[basis_vec(2 * n, 0), basis_vec(2 * n, n)])?,
        11 => {
            let (big, kernel) = sp3_cube_ingredients()?;
            let mut w = CVec::zeros(big.dim);
            w[0] = cplx(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            w[big.dim - 1] = cplx(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            let coords = CVec::from_fn(kernel.len(), |k, _| herm(&w, &kernel[k]));
            if (coords.norm() - 1.0).abs() > 1e-10 {
                return Err(Error::Internal(
                    "candidate does not lie in the primitive subspace".into(),
                ));
            }
            coords
        }
        12 | 13 | 14 | 21 => basis_vec(rep.dim, 0),
        15 => {
            let subs = spin_basis_subsets(10, Chirality::Even)?;
            let idx = |want: &[usize]| -> Result<usize> {
                subs.iter()
                    .position(|s| s[..] == *want)
                    .ok_or_else(|| Error::Internal("missing Fock subset".into()))
            };
            let mut p1 = CVec::zeros(16);
            p1[idx(&[])?] = cplx(1.0, 0.0);
            p1[idx(&[0, 1, 2, 3])?] = cplx(1.0, 0.0);
            let mut p2 = CVec::zeros(16);
            p2[idx(&[0, 4])?] = cplx(1.0, 0.0);
            p2[idx(&[1, 2, 3, 4])?] = cplx(1.0, 0.0);
            embed_weighted(rep, &[p1, p2])?
        }
        other => {
            return Err(Error::Case(format!(
                "row {other} has no explicit point recipe"
            )))
        }
    };
    ProjectivePoint::new(&v)
}

#[derive(Clone, Debug)]
pub struct VerifyOpts {
    pub mu_tol: f64,
    /// Overrides the row's recorded flow seed.
    pub seed: Option<u64>,
    pub e6_data: Option<PathBuf>,
    pub flow: FlowOpts,
}

impl Default for VerifyOpts {
    fn default() -> Self {
        VerifyOpts { mu_tol: 1e-9, seed: None, e6_data: None, flow: FlowOpts::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub row: usize,
    pub group: String,
    pub rep: String,
    pub n: Option<usize>,
    pub point_recipe: String,
    pub mu_norm: f64,
    pub orbit_dim: usize,
    pub expected_dim: usize,
    pub isotropy_dim: usize,
    pub expected_isotropy_dim: usize,
    pub isotropy_center_dim: usize,
    pub isotropy_rank: usize,
    pub identified: String,
    pub expected_isotropy: String,
    pub component_group: String,
    pub invariant_degree: String,
    pub lagrangian: bool,
    pub minimal: bool,
    pub flow_iterations: Option<usize>,
    pub pass: bool,
    pub seconds: f64,
}

/// Run the full verification for one row: build the space, obtain the
/// candidate point, certify the Lagrangian property, measure and
/// recognize the stabilizer, and compare against the expected values.
pub fn verify_case(row: usize, n: Option<usize>, opts: &VerifyOpts) -> Result<CaseResult> {
    let started = Instant::now();
    let spec = case_spec(row)?;
    let n = spec.resolve_param(n)?;
    let rep = build_rep(&spec, n, opts.e6_data.as_deref())?;
    rep.validate()?;
    let expected_dim = spec.expected_proj_dim(n);
    if rep.dim != expected_dim + 1 {
        return Err(Error::Internal(format!(
            "row {row}: built space has projective dimension {}, expected {expected_dim}",
            rep.dim - 1
        )));
    }

    let mut flow_iterations = None;
    let point = match spec.point_recipe {
        PointRecipe::Flow => {
            let fo = FlowOpts { seed: opts.seed.unwrap_or(spec.flow_seed), ..opts.flow };
            let res = kempf_ness_flow(&rep, &fo)?;
            flow_iterations = Some(res.iterations);
            res.point
        }
        _ => candidate_point(&spec, &rep, n)?,
    };

    let check = verify_lagrangian(&rep, &point)?;
    let iso = real_isotropy(&rep, &point)?;
    let profile = isotropy_profile(&rep.algebra, &iso, 1000 + row as u64)?;
    let expected_name = spec.expected_isotropy_name(n);
    let name_ok = identify::consistent_with(&profile, &expected_name);
    let candidates = identify::identify_algebra(&profile);
    let identified = if name_ok {
        identify::canonical_name(&expected_name)
    } else if candidates.is_empty() {
        format!(
            "unrecognized(dim={}, rank={}, center={})",
            profile.dim, profile.rank, profile.center_dim
        )
    } else {
        candidates.join("|")
    };
    let minimal = check_minimal(&rep, &point, 1e-8)?;

    let pass = check.lagrangian
        && check.mu_norm < opts.mu_tol
        && check.orbit_dim == expected_dim
        && profile.dim == spec.expected_isotropy_dim(n)
        && profile.center_dim == spec.expected_center_dim(n)
        && name_ok
        && minimal;

    Ok(CaseResult {
        row,
        group: spec.group_name(n),
        rep: spec.rep_name(n),
        n: spec.parametric.then_some(n),
        point_recipe: spec.point_recipe.label().into(),
        mu_norm: check.mu_norm,
        orbit_dim: check.orbit_dim,
        expected_dim,
        isotropy_dim: profile.dim,
        expected_isotropy_dim: spec.expected_isotropy_dim(n),
        isotropy_center_dim: profile.center_dim,
        isotropy_rank: profile.rank,
        identified,
        expected_isotropy: identify::canonical_name(&expected_name),
        component_group: spec.component_group(n),
        invariant_degree: spec.invariant_degree(n),
        lagrangian: check.lagrangian,
        minimal,
        flow_iterations,
        pass,
        seconds: started.elapsed().as_secs_f64(),
    })
}

/// One line of the machine-readable report.  Rows without matrices get a
/// metadata-only record with null measurements.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub row: usize,
    pub group: String,
    pub rep: String,
    pub n: Option<usize>,
    pub point_recipe: String,
    pub mu_norm: Option<f64>,
    pub orbit_dim: Option<usize>,
    pub expected_dim: usize,
    pub isotropy_dim: Option<usize>,
    pub expected_isotropy_dim: usize,
    pub identified: Option<String>,
    pub pass: Option<bool>,
    pub seconds: Option<f64>,
}

impl ReportRecord {
    pub fn from_result(r: &CaseResult) -> Self {
        ReportRecord {
            row: r.row,
            group: r.group.clone(),
            rep: r.rep.clone(),
            n: r.n,
            point_recipe: r.point_recipe.clone(),
            mu_norm: Some(r.mu_norm),
            orbit_dim: Some(r.orbit_dim),
            expected_dim: r.expected_dim,
            isotropy_dim: Some(r.isotropy_dim),
            expected_isotropy_dim: r.expected_isotropy_dim,
            identified: Some(r.identified.clone()),
            pass: Some(r.pass),
            seconds: Some(r.seconds),
        }
    }

    pub fn metadata_only(spec: &CaseSpec) -> Self {
        let n = spec.default_params.first().copied().unwrap_or(0);
        ReportRecord {
            row: spec.row,
            group: spec.group_name(n),
            rep: spec.rep_name(n),
            n: None,
            point_recipe: "unavailable".into(),
            mu_norm: None,
            orbit_dim: None,
            expected_dim: spec.expected_proj_dim(n),
            isotropy_dim: None,
            expected_isotropy_dim: spec.expected_isotropy_dim(n),
            identified: None,
            pass: None,
            seconds: None,
        }
    }
}
