//! Isotropy subalgebras of a projective point and their coarse structure
//! (dimension, center, rank), used to recognize the stabilizer.

use nalgebra::DMatrix;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::CompactAlgebra;
use crate::error::Error;
use crate::linalg::{cplx, nullspace_complex, nullspace_real, rank_real, CMat, CVec, RMat, RVec};
use crate::momentmap::{horizontal, ProjectivePoint};
use crate::representations::Representation;
use crate::Result;

/// The stabilizer subalgebra of a point, as orthonormal coefficient
/// vectors in the ambient generator basis.
#[derive(Clone, Debug)]
pub struct IsotropySubalgebra {
    pub dim: usize,
    pub basis: Vec<RVec>,
}

/// Real span of the generators whose fundamental field vanishes at p.
pub fn real_isotropy(rep: &Representation, p: &ProjectivePoint) -> Result<IsotropySubalgebra> {
    let d = rep.matrices.len();
    let n = rep.dim;
    let mut stacked = RMat::zeros(2 * n, d);
    for (j, x) in rep.matrices.iter().enumerate() {
        let col = horizontal(&p.v, &(x * &p.v));
        for i in 0..n {
            stacked[(i, j)] = col[i].re;
            stacked[(n + i, j)] = col[i].im;
        }
    }
    let basis = nullspace_real(&stacked, "real isotropy")?;
    Ok(IsotropySubalgebra { dim: basis.len(), basis })
}

/// Complex coefficient vectors annihilating the point projectively; their
/// count is the complex dimension of the stabilizer of the complexified
/// group.
pub fn complex_isotropy(rep: &Representation, p: &ProjectivePoint) -> Result<Vec<CVec>> {
    let d = rep.matrices.len();
    let mut a = CMat::zeros(rep.dim, d);
    for (j, x) in rep.matrices.iter().enumerate() {
        a.set_column(j, &horizontal(&p.v, &(x * &p.v)));
    }
    nullspace_complex(&a, "complex isotropy")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsotropyProfile {
    pub dim: usize,
    /// Dimension of the center (kernel of the Killing form).
    pub center_dim: usize,
    /// Dimension of a maximal torus, from generic-element centralizers.
    pub rank: usize,
}

/// Structure constants of the isotropy subalgebra and the invariants
/// needed to recognize it.  The subalgebra must close under brackets.
pub fn isotropy_profile(
    alg: &CompactAlgebra,
    iso: &IsotropySubalgebra,
    seed: u64,
) -> Result<IsotropyProfile> {
    let dim = iso.dim;
    if dim == 0 {
        return Ok(IsotropyProfile { dim: 0, center_dim: 0, rank: 0 });
    }
    let elements: Vec<CMat> = iso
        .basis
        .iter()
        .map(|b| {
            let coeffs = CVec::from_fn(alg.dim, |i, _| cplx(b[i], 0.0));
            alg.element(&coeffs)
        })
        .collect();

    // ad[i][(k, j)] = coefficient of basis k in [b_i, b_j].
    let mut ad = vec![DMatrix::<f64>::zeros(dim, dim); dim];
    for i in 0..dim {
        for j in (i + 1)..dim {
            let bracket = &elements[i] * &elements[j] - &elements[j] * &elements[i];
            let coeffs = alg.project(&bracket);
            let mut real = RVec::zeros(alg.dim);
            for a in 0..alg.dim {
                if coeffs[a].im.abs() > 1e-9 {
                    return Err(Error::Internal(
                        "isotropy bracket has complex coefficients".into(),
                    ));
                }
                real[a] = coeffs[a].re;
            }
            let mut residual = real.clone();
            for k in 0..dim {
                let c = real.dot(&iso.basis[k]);
                residual -= &iso.basis[k] * c;
                ad[i][(k, j)] = c;
                ad[j][(k, i)] = -c;
            }
            if residual.norm() > 1e-7 * (1.0 + real.norm()) {
                return Err(Error::Internal(format!(
                    "isotropy set does not close under brackets: residual {}",
                    residual.norm()
                )));
            }
        }
    }

    let mut killing = DMatrix::<f64>::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let k = (&ad[i] * &ad[j]).trace();
            killing[(i, j)] = k;
            killing[(j, i)] = k;
        }
    }
    let center_dim = dim - rank_real(&killing, "isotropy Killing form")?;

    let mut rank = dim;
    for s in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s));
        let mut ad_x = DMatrix::<f64>::zeros(dim, dim);
        for m in &ad {
            let c: f64 = rng.sample(StandardNormal);
            ad_x += m * c;
        }
        let nullity = dim - rank_real(&ad_x, "generic centralizer")?;
        rank = rank.min(nullity);
    }
    Ok(IsotropyProfile { dim, center_dim, rank })
}
