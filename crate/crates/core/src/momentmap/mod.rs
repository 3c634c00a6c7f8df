//! Moment map geometry for a unitary action on complex projective space.
//!
//! For a unit vector v and anti-Hermitian generators X_a, the moment map
//! component along X_a is mu_a = -i <X_a v, v>.  The symplectic form on
//! horizontal tangent vectors is omega(u, w) = 2 Im <u, w>, for which the
//! fundamental vector fields are Hamiltonian with Hamiltonians mu_a, and
//! the Euclidean gradient of |mu|^2 is -4i M v with M = sum_a mu_a X_a.

pub mod flow;
pub mod isotropy;

pub use flow::{flow_from, kempf_ness_flow, FlowOpts, FlowResult};
pub use isotropy::{
    complex_isotropy, isotropy_profile, real_isotropy, IsotropyProfile, IsotropySubalgebra,
};

use crate::error::Error;
use crate::linalg::{canonical_phase, cplx, herm, orthonormalize_real_span, rank_complex, CMat, CVec, RVec};
use crate::representations::Representation;
use crate::Result;

/// A point of projective space held as a unit vector with canonical phase.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    pub v: CVec,
}

impl ProjectivePoint {
    pub fn new(v: &CVec) -> Result<Self> {
        let n = v.norm();
        if n < 1e-12 {
            return Err(Error::DegenerateVector { norm: n });
        }
        Ok(ProjectivePoint { v: canonical_phase(&(v / cplx(n, 0.0))) })
    }

    /// Dimension of the ambient projective space.
    pub fn proj_dim(&self) -> usize {
        self.v.len() - 1
    }
}

/// Component of u orthogonal to v (the horizontal part at v).
pub fn horizontal(v: &CVec, u: &CVec) -> CVec {
    u - v * herm(u, v)
}

/// All moment map components mu_a at p.  Each component must be real up
/// to roundoff; a larger imaginary residue indicates a non-anti-Hermitian
/// action and is an error.
pub fn moment(rep: &Representation, p: &ProjectivePoint) -> Result<RVec> {
    let mut out = RVec::zeros(rep.matrices.len());
    for (a, x) in rep.matrices.iter().enumerate() {
        let z = herm(&(x * &p.v), &p.v) * cplx(0.0, -1.0);
        if z.im.abs() > 1e-12 {
            return Err(Error::Internal(format!(
                "moment component {a} has imaginary part {}",
                z.im
            )));
        }
        out[a] = z.re;
    }
    Ok(out)
}

pub fn moment_norm_sq(rep: &Representation, p: &ProjectivePoint) -> Result<f64> {
    Ok(moment(rep, p)?.norm_squared())
}

/// Horizontal fundamental vector field of the algebra element with the
/// given coefficients.
pub fn fundamental_field(rep: &Representation, p: &ProjectivePoint, coeffs: &RVec) -> CVec {
    let mut u = CVec::zeros(rep.dim);
    for (a, x) in rep.matrices.iter().enumerate() {
        if coeffs[a] != 0.0 {
            u += x * &p.v * cplx(coeffs[a], 0.0);
        }
    }
    horizontal(&p.v, &u)
}

/// Symplectic pairing of two horizontal tangent vectors at p.
pub fn fubini_study_omega(p: &ProjectivePoint, u: &CVec, w: &CVec) -> Result<f64> {
    for t in [u, w] {
        let residual = herm(t, &p.v).norm();
        if residual > 1e-8 * t.norm().max(1e-30) {
            return Err(Error::NotHorizontal { residual });
        }
    }
    Ok(2.0 * herm(u, w).im)
}

/// Euclidean gradient of |mu|^2 as a horizontal vector at p.
pub fn grad_moment_norm_sq(rep: &Representation, p: &ProjectivePoint) -> Result<CVec> {
    let mu = moment(rep, p)?;
    let mut mv = CVec::zeros(rep.dim);
    for (a, x) in rep.matrices.iter().enumerate() {
        if mu[a].abs() > 0.0 {
            mv += x * &p.v * cplx(mu[a], 0.0);
        }
    }
    Ok(horizontal(&p.v, &(mv * cplx(0.0, -4.0))))
}

/// Orthonormal frame (over the reals) of the group orbit's tangent space.
pub fn tangent_frame(rep: &Representation, p: &ProjectivePoint) -> Vec<CVec> {
    let fields: Vec<CVec> = rep
        .matrices
        .iter()
        .map(|x| horizontal(&p.v, &(x * &p.v)))
        .collect();
    orthonormalize_real_span(&fields, 1e-8)
}

/// Whether the complexified orbit through p is open in projective space.
pub fn is_open_orbit(rep: &Representation, p: &ProjectivePoint) -> Result<bool> {
    let d = rep.matrices.len();
    let mut a = CMat::zeros(rep.dim, d);
    for (j, x) in rep.matrices.iter().enumerate() {
        a.set_column(j, &horizontal(&p.v, &(x * &p.v)));
    }
    Ok(rank_complex(&a, "complexified orbit tangent")? == rep.dim - 1)
}

#[derive(Clone, Debug)]
pub struct LagrangianCheck {
    pub mu_norm: f64,
    /// Real dimension of the group orbit through the point.
    pub orbit_dim: usize,
    /// Largest symplectic pairing over the orbit tangent frame.
    pub omega_residual: f64,
    pub open_orbit: bool,
    /// Orbit dimension equals the complex dimension of the ambient
    /// projective space and the symplectic form vanishes on it.
    pub lagrangian: bool,
}

/// Measure everything needed to certify the orbit through p as a
/// Lagrangian submanifold of projective space.
pub fn verify_lagrangian(rep: &Representation, p: &ProjectivePoint) -> Result<LagrangianCheck> {
    let mu_norm = moment(rep, p)?.norm();
    let iso = real_isotropy(rep, p)?;
    let orbit_dim = rep.algebra.dim - iso.dim;
    let frame = tangent_frame(rep, p);
    if frame.len() != orbit_dim {
        return Err(Error::Internal(format!(
            "tangent frame has {} vectors for an orbit of dimension {orbit_dim}",
            frame.len()
        )));
    }
    let mut omega_residual = 0.0f64;
    for i in 0..frame.len() {
        for j in (i + 1)..frame.len() {
            omega_residual = omega_residual.max(fubini_study_omega(p, &frame[i], &frame[j])?.abs());
        }
    }
    let open_orbit = is_open_orbit(rep, p)?;
    let lagrangian = orbit_dim == rep.dim - 1 && omega_residual < 1e-9;
    Ok(LagrangianCheck { mu_norm, orbit_dim, omega_residual, open_orbit, lagrangian })
}

/// A zero of the moment map whose orbit is Lagrangian is a minimal
/// submanifold; this checks both conditions at p.
pub fn check_minimal(rep: &Representation, p: &ProjectivePoint, tol: f64) -> Result<bool> {
    let mu_norm = moment(rep, p)?.norm();
    if mu_norm > tol {
        return Ok(false);
    }
    let iso = real_isotropy(rep, p)?;
    Ok(rep.algebra.dim - iso.dim == rep.dim - 1)
}
