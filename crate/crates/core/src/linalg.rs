//! Dense linear algebra helpers shared by the representation and moment map
//! code: Hermitian products, SVD-based rank and nullspace extraction with an
//! explicit spectral gap check, and small orthonormalization utilities.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::Error;
use crate::Result;

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;
pub type RMat = DMatrix<f64>;
pub type RVec = DVector<f64>;

/// Relative singular value threshold for rank decisions.
pub const RANK_REL_TOL: f64 = 1e-8;
/// Largest allowed ratio (largest discarded) / (smallest kept).
pub const RANK_GAP: f64 = 0.1;

pub fn cplx(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Hermitian inner product, linear in the first argument.
pub fn herm(u: &CVec, w: &CVec) -> C64 {
    w.dotc(u)
}

/// Decide the numerical rank of a descending singular value list.
///
/// Values below `RANK_REL_TOL * s_max` are discarded; the split must be
/// clean (gap ratio below `RANK_GAP`), otherwise the decision is refused.
pub fn numerical_rank(svals: &[f64], context: &str) -> Result<usize> {
    if svals.is_empty() {
        return Ok(0);
    }
    let mut sorted: Vec<f64> = svals.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let smax = sorted[0];
    if smax == 0.0 {
        return Ok(0);
    }
    let tol = RANK_REL_TOL * smax;
    let rank = sorted.iter().take_while(|&&s| s >= tol).count();
    if rank < sorted.len() {
        let largest_discarded = sorted[rank];
        let smallest_kept = sorted[rank - 1];
        if largest_discarded / smallest_kept >= RANK_GAP {
            return Err(Error::IllConditionedRank {
                detail: format!(
                    "{context}: no clean gap at threshold {tol:.3e} \
                     (discarded {largest_discarded:.3e} vs kept {smallest_kept:.3e})"
                ),
                spectrum: sorted,
            });
        }
    }
    Ok(rank)
}

/// Right nullspace of a complex matrix, orthonormal basis.
pub fn nullspace_complex(m: &CMat, context: &str) -> Result<Vec<CVec>> {
    let ncols = m.ncols();
    let svd = m.clone().svd(false, true);
    let svals: Vec<f64> = svd.singular_values.iter().copied().collect();
    let rank = numerical_rank(&svals, context)?;
    let v_t = svd.v_t.expect("svd requested v_t");
    // Rows of V^H beyond the rank span nullspace directions.  nalgebra
    // returns a thin V^H, so a wide matrix needs the orthogonal complement
    // of the whole row set appended.
    let mut basis: Vec<CVec> = (rank..v_t.nrows()).map(|i| v_t.row(i).adjoint()).collect();
    if v_t.nrows() < ncols {
        let rows: Vec<CVec> = (0..v_t.nrows()).map(|i| v_t.row(i).adjoint()).collect();
        let needed = ncols - rank;
        for j in 0..ncols {
            if basis.len() == needed {
                break;
            }
            let mut e = CVec::zeros(ncols);
            e[j] = cplx(1.0, 0.0);
            for _ in 0..2 {
                for b in rows.iter().chain(basis.iter()) {
                    let c = herm(&e, b);
                    e -= b * c;
                }
            }
            let n = e.norm();
            if n > 1e-6 {
                e /= cplx(n, 0.0);
                basis.push(e);
            }
        }
        if basis.len() != needed {
            return Err(Error::Internal(format!(
                "{context}: nullspace completion found {} of {needed} vectors",
                basis.len()
            )));
        }
    }
    Ok(basis)
}

/// Right nullspace of a real matrix, orthonormal basis.
pub fn nullspace_real(m: &RMat, context: &str) -> Result<Vec<RVec>> {
    let ncols = m.ncols();
    let svd = m.clone().svd(false, true);
    let svals: Vec<f64> = svd.singular_values.iter().copied().collect();
    let rank = numerical_rank(&svals, context)?;
    let v_t = svd.v_t.expect("svd requested v_t");
    let mut basis: Vec<RVec> = (rank..v_t.nrows()).map(|i| v_t.row(i).transpose()).collect();
    if v_t.nrows() < ncols {
        let rows: Vec<RVec> = (0..v_t.nrows()).map(|i| v_t.row(i).transpose()).collect();
        let needed = ncols - rank;
        for j in 0..ncols {
            if basis.len() == needed {
                break;
            }
            let mut e = RVec::zeros(ncols);
            e[j] = 1.0;
            for _ in 0..2 {
                for b in rows.iter().chain(basis.iter()) {
                    let c = b.dot(&e);
                    e -= b * c;
                }
            }
            let n = e.norm();
            if n > 1e-6 {
                e /= n;
                basis.push(e);
            }
        }
        if basis.len() != needed {
            return Err(Error::Internal(format!(
                "{context}: nullspace completion found {} of {needed} vectors",
                basis.len()
            )));
        }
    }
    Ok(basis)
}

/// Numerical rank of a complex matrix.
pub fn rank_complex(m: &CMat, context: &str) -> Result<usize> {
    let svd = m.clone().svd(false, false);
    let svals: Vec<f64> = svd.singular_values.iter().copied().collect();
    numerical_rank(&svals, context)
}

/// Numerical rank of a real matrix.
pub fn rank_real(m: &RMat, context: &str) -> Result<usize> {
    let svd = m.clone().svd(false, false);
    let svals: Vec<f64> = svd.singular_values.iter().copied().collect();
    numerical_rank(&svals, context)
}

/// Stack a complex matrix into a real one: rows (Re; Im).
pub fn realify_rows(m: &CMat) -> RMat {
    let (r, c) = m.shape();
    let mut out = RMat::zeros(2 * r, c);
    for i in 0..r {
        for j in 0..c {
            out[(i, j)] = m[(i, j)].re;
            out[(r + i, j)] = m[(i, j)].im;
        }
    }
    out
}

/// Modified Gram-Schmidt over C with one re-orthogonalization pass.
/// Vectors with norm below `drop_tol` after projection are dropped.
pub fn orthonormalize_complex(vectors: &[CVec], drop_tol: f64) -> Vec<CVec> {
    let mut basis: Vec<CVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = herm(&w, b);
                w -= b * c;
            }
        }
        let n = w.norm();
        if n > drop_tol {
            w /= cplx(n, 0.0);
            basis.push(w);
        }
    }
    basis
}

/// Modified Gram-Schmidt over R with one re-orthogonalization pass.
pub fn orthonormalize_real(vectors: &[RVec], drop_tol: f64) -> Vec<RVec> {
    let mut basis: Vec<RVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        let n = w.norm();
        if n > drop_tol {
            w /= n;
            basis.push(w);
        }
    }
    basis
}

/// Frobenius inner product Re tr(A B^H).
pub fn frob_re(a: &CMat, b: &CMat) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.re * y.re + x.im * y.im;
    }
    acc
}

/// Max absolute entry of a complex matrix.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max absolute imaginary part.
pub fn max_imag(m: &CMat) -> f64 {
    m.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
}

/// Promote a real matrix to a complex one.
pub fn to_complex(m: &RMat) -> CMat {
    CMat::from_fn(m.nrows(), m.ncols(), |i, j| cplx(m[(i, j)], 0.0))
}

/// Rotate a vector's global phase so its first nonzero coordinate is real
/// and positive.  Fixes the representative of a projective point.
pub fn canonical_phase(v: &CVec) -> CVec {
    match v.iter().find(|z| z.norm() > 1e-10) {
        Some(z) => v * (z.conj() / z.norm()),
        None => v.clone(),
    }
}

/// Gram-Schmidt over the reals: orthonormalizes the real span of complex
/// vectors for the inner product Re<u,w>, so i*v is independent of v.
/// Vectors whose residual drops below `drop_tol` are dropped.
pub fn orthonormalize_real_span(vectors: &[CVec], drop_tol: f64) -> Vec<CVec> {
    let mut basis: Vec<CVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = herm(&w, b).re;
                w -= b * cplx(c, 0.0);
            }
        }
        let n = w.norm();
        if n > drop_tol {
            w /= cplx(n, 0.0);
            basis.push(w);
        }
    }
    basis
}

/// Simultaneous eigenbasis of pairwise commuting Hermitian matrices.
///
/// Returns one eigenvalue tuple per column of the unitary basis, column j
/// satisfying `mats[k] * u_j = tuples[j][k] * u_j` up to `cluster_tol`-scale
/// residuals.  Works by diagonalizing the first matrix, splitting eigenvalue
/// clusters wider than `cluster_tol`, and recursing on each block.
pub fn joint_hermitian_eigen(
    mats: &[CMat],
    cluster_tol: f64,
    context: &str,
) -> Result<(Vec<Vec<f64>>, CMat)> {
    let dim = if mats.is_empty() { 0 } else { mats[0].nrows() };
    if mats.is_empty() || dim == 0 {
        return Ok((vec![Vec::new(); dim], CMat::identity(dim, dim)));
    }
    for m in mats {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::Internal(format!("{context}: ragged matrix list")));
        }
    }
    if max_abs(&(&mats[0] - mats[0].adjoint())) > 1e-8 {
        return Err(Error::Internal(format!("{context}: matrix is not Hermitian")));
    }

    let eig = nalgebra::SymmetricEigen::new(mats[0].clone());
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());

    let mut tuples: Vec<Vec<f64>> = Vec::with_capacity(dim);
    let mut basis = CMat::zeros(dim, dim);
    let mut filled = 0usize;
    let mut start = 0usize;
    while start < dim {
        let mut end = start + 1;
        while end < dim
            && eig.eigenvalues[order[end]] - eig.eigenvalues[order[end - 1]] < cluster_tol
        {
            end += 1;
        }
        let cluster: Vec<usize> = order[start..end].to_vec();
        let mean = cluster.iter().map(|&i| eig.eigenvalues[i]).sum::<f64>() / cluster.len() as f64;
        let mut u = CMat::zeros(dim, cluster.len());
        for (c, &i) in cluster.iter().enumerate() {
            u.set_column(c, &eig.eigenvectors.column(i).into_owned());
        }
        let (sub_tuples, sub_basis) = if mats.len() == 1 {
            (vec![Vec::new(); cluster.len()], CMat::identity(cluster.len(), cluster.len()))
        } else {
            let rest: Vec<CMat> = mats[1..].iter().map(|m| u.adjoint() * m * &u).collect();
            joint_hermitian_eigen(&rest, cluster_tol, context)?
        };
        let lifted = &u * sub_basis;
        for (c, sub) in sub_tuples.into_iter().enumerate() {
            let mut t = Vec::with_capacity(mats.len());
            t.push(mean);
            t.extend(sub);
            tuples.push(t);
            basis.set_column(filled, &lifted.column(c).into_owned());
            filled += 1;
        }
        start = end;
    }
    debug_assert_eq!(filled, dim);
    Ok((tuples, basis))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_split_with_clean_gap() {
        let svals = [3.0, 2.0, 1e-12, 1e-13];
        assert_eq!(numerical_rank(&svals, "test").unwrap(), 2);
    }

    #[test]
    fn rank_split_refuses_murky_gap() {
        // 9e-9 falls below the cutoff but is only a factor ~3 under the
        // smallest kept value, well inside the forbidden gap ratio.
        let svals = [1.0, 2.9e-8, 9.0e-9];
        match numerical_rank(&svals, "test") {
            Err(Error::IllConditionedRank { .. }) => {}
            other => panic!("expected ill-conditioned rank, got {other:?}"),
        }
    }

    #[test]
    fn nullspace_of_projection() {
        // Projection onto the first coordinate in C^3: nullspace is 2-dim.
        let mut m = CMat::zeros(3, 3);
        m[(0, 0)] = cplx(1.0, 0.0);
        let ns = nullspace_complex(&m, "proj").unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((m.clone() * v).norm() < 1e-12);
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn nullspace_real_wide_matrix() {
        // 1x4 real matrix: nullspace is 3-dim even though svd returns thin V^T.
        let m = RMat::from_row_slice(1, 4, &[1.0, 1.0, 0.0, 0.0]);
        let ns = nullspace_real(&m, "wide").unwrap();
        assert_eq!(ns.len(), 3);
        for v in &ns {
            assert!((m.clone() * v).norm() < 1e-12);
        }
        for i in 0..ns.len() {
            for j in 0..i {
                assert!(ns[i].dot(&ns[j]).abs() < 1e-10);
            }
        }
    }
}
