//! Orthonormal matrix bases of the compact Lie algebras su(n), so(n), sp(n)
//! and g2, together with the data needed to read weights off a
//! representation.
//!
//! Conventions fixed here and relied on everywhere else:
//! - generators are anti-Hermitian and orthonormal for <X,Y> = -tr(XY);
//! - the first `rank` generators span a Cartan subalgebra;
//! - `chart` converts a tuple of eigenvalues of -i H_m (one per Cartan
//!   generator, in order) into epsilon coordinates of the root system, so
//!   `chart * t` lands on the exact weight lattice realization;
//! - sp(n) acts on C^{2n} in block form: X = [[A, B], [-conj(B), conj(A)]]
//!   with A anti-Hermitian and B symmetric.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::linalg::{
    cplx, joint_hermitian_eigen, max_abs, nullspace_real, orthonormalize_real, CMat, CVec, RMat,
    RVec,
};
use crate::rootsystem::{build_root_system, Family, RootSystem};
use crate::Result;

/// A compact simple matrix Lie algebra with a fixed orthonormal basis.
#[derive(Clone, Debug)]
pub struct CompactAlgebra {
    pub name: String,
    /// Number of generators.
    pub dim: usize,
    /// Size of the defining matrices.
    pub matrix_dim: usize,
    pub rank: usize,
    /// Anti-Hermitian, orthonormal under -tr(XY); Cartan generators first.
    pub generators: Vec<CMat>,
    /// ambient_dim x rank; maps Cartan eigenvalue tuples to epsilon coords.
    /// Absent for algebras loaded from a data file, whose Cartan alignment
    /// with the exact realization is unknown.
    pub chart: Option<RMat>,
    pub root_system: RootSystem,
}

/// -tr(XY), the invariant pairing the bases are orthonormal under.
pub fn trace_pairing(x: &CMat, y: &CMat) -> crate::linalg::C64 {
    -(x * y).trace()
}

/// Index pairs (a, b), a < b, for a basis of so(n): the rank Cartan planes
/// (0,1), (2,3), ... first, then the remaining pairs in lexicographic order.
pub fn so_pair_order(n: usize) -> Vec<(usize, usize)> {
    let l = n / 2;
    let mut pairs: Vec<(usize, usize)> = (0..l).map(|j| (2 * j, 2 * j + 1)).collect();
    for a in 0..n {
        for b in (a + 1)..n {
            if !(a % 2 == 0 && b == a + 1 && b < 2 * l) {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

fn elementary(n: usize, r: usize, c: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(r, c)] = cplx(1.0, 0.0);
    m
}

/// Rotation generator E_ab - E_ba.
fn rot(n: usize, a: usize, b: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(a, b)] = cplx(1.0, 0.0);
    m[(b, a)] = cplx(-1.0, 0.0);
    m
}

impl CompactAlgebra {
    /// su(n), n >= 2.
    pub fn su(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidConstruction(format!("su({n}) is not supported")));
        }
        let rank = n - 1;
        let mut generators = Vec::with_capacity(n * n - 1);
        // Cartan: i diag(h_m) with h_m = (1,..,1,-m,0,..)/sqrt(m(m+1)).
        let mut chart = RMat::zeros(n, rank);
        for m in 1..n {
            let s = 1.0 / ((m * (m + 1)) as f64).sqrt();
            let mut g = CMat::zeros(n, n);
            for j in 0..m {
                g[(j, j)] = cplx(0.0, s);
                chart[(j, m - 1)] = s;
            }
            g[(m, m)] = cplx(0.0, -(m as f64) * s);
            chart[(m, m - 1)] = -(m as f64) * s;
            generators.push(g);
        }
        let inv_sqrt2 = cplx(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        for a in 0..n {
            for b in (a + 1)..n {
                generators.push((elementary(n, a, b) - elementary(n, b, a)) * inv_sqrt2);
                generators
                    .push((elementary(n, a, b) + elementary(n, b, a)) * cplx(0.0, 1.0) * inv_sqrt2);
            }
        }
        Ok(CompactAlgebra {
            name: format!("su({n})"),
            dim: n * n - 1,
            matrix_dim: n,
            rank,
            generators,
            chart: Some(chart),
            root_system: build_root_system(Family::A, rank)?,
        })
    }

    /// so(n), n >= 3, real antisymmetric matrices.
    pub fn so(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidConstruction(format!("so({n}) is not supported")));
        }
        let l = n / 2;
        let family = if n % 2 == 1 { Family::B } else { Family::D };
        let inv_sqrt2 = cplx(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let generators: Vec<CMat> =
            so_pair_order(n).into_iter().map(|(a, b)| rot(n, a, b) * inv_sqrt2).collect();
        let chart = RMat::identity(l, l) * std::f64::consts::SQRT_2;
        Ok(CompactAlgebra {
            name: format!("so({n})"),
            dim: n * (n - 1) / 2,
            matrix_dim: n,
            rank: l,
            generators,
            chart: Some(chart),
            root_system: build_root_system(family, l)?,
        })
    }

    /// sp(n), n >= 1, acting on C^{2n} in block form.
    pub fn sp(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidConstruction("sp(0) is not supported".into()));
        }
        let nn = 2 * n;
        let mut generators = Vec::with_capacity(n * (2 * n + 1));
        let inv_sqrt2 = cplx(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let half = cplx(0.5, 0.0);
        // Cartan: A = i E_jj, so X = i(E_jj - E_{n+j,n+j}).
        for j in 0..n {
            let g = (elementary(nn, j, j) - elementary(nn, n + j, n + j))
                * cplx(0.0, 1.0)
                * inv_sqrt2;
            generators.push(g);
        }
        // A-block off-diagonal: A skew real and A imaginary symmetric,
        // doubled into the conjugate block.
        for a in 0..n {
            for b in (a + 1)..n {
                let re = (elementary(nn, a, b) - elementary(nn, b, a)
                    + elementary(nn, n + a, n + b)
                    - elementary(nn, n + b, n + a))
                    * half;
                let im = ((elementary(nn, a, b) + elementary(nn, b, a))
                    - (elementary(nn, n + a, n + b) + elementary(nn, n + b, n + a)))
                    * cplx(0.0, 1.0)
                    * half;
                generators.push(re);
                generators.push(im);
            }
        }
        // B-block: B symmetric, C = -conj(B).
        for j in 0..n {
            let b_re = (elementary(nn, j, n + j) - elementary(nn, n + j, j)) * inv_sqrt2;
            let b_im =
                (elementary(nn, j, n + j) + elementary(nn, n + j, j)) * cplx(0.0, 1.0) * inv_sqrt2;
            generators.push(b_re);
            generators.push(b_im);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                let s_re = (elementary(nn, a, n + b) + elementary(nn, b, n + a)
                    - elementary(nn, n + a, b)
                    - elementary(nn, n + b, a))
                    * half;
                let s_im = (elementary(nn, a, n + b)
                    + elementary(nn, b, n + a)
                    + elementary(nn, n + a, b)
                    + elementary(nn, n + b, a))
                    * cplx(0.0, 1.0)
                    * half;
                generators.push(s_re);
                generators.push(s_im);
            }
        }
        let chart = RMat::identity(n, n) * std::f64::consts::SQRT_2;
        Ok(CompactAlgebra {
            name: format!("sp({n})"),
            dim: n * (2 * n + 1),
            matrix_dim: nn,
            rank: n,
            generators,
            chart: Some(chart),
            root_system: build_root_system(Family::C, n)?,
        })
    }

    /// g2 as the derivation algebra of the octonions, acting on the
    /// imaginary units R^7.
    pub fn g2() -> Result<Self> {
        let phi = octonion_three_form();
        let pairs = so_pair_order(7);
        let npairs = pairs.len();
        debug_assert_eq!(npairs, 21);

        // Derivation condition: phi(Ax,y,z)+phi(x,Ay,z)+phi(x,y,Az) = 0 for
        // the coordinate triples x,y,z; unknowns are the so(7) coefficients.
        let mut rows = Vec::new();
        for i in 0..7 {
            for j in (i + 1)..7 {
                for k in (j + 1)..7 {
                    let mut row = vec![0.0; npairs];
                    for (col, &(p, q)) in pairs.iter().enumerate() {
                        // A = E_pq - E_qp contributes A_{m i} phi[m][j][k]
                        // etc. with A_{pq} = 1, A_{qp} = -1.
                        row[col] += phi[p][j][k] * indicator(q, i) - phi[q][j][k] * indicator(p, i);
                        row[col] += phi[i][p][k] * indicator(q, j) - phi[i][q][k] * indicator(p, j);
                        row[col] += phi[i][j][p] * indicator(q, k) - phi[i][j][q] * indicator(p, k);
                    }
                    rows.push(row);
                }
            }
        }
        let sys = RMat::from_fn(rows.len(), npairs, |r, c| rows[r][c]);
        let null = nullspace_real(&sys, "g2 derivation system")?;
        if null.len() != 14 {
            return Err(Error::Internal(format!(
                "g2 derivation nullspace has dimension {}",
                null.len()
            )));
        }
        let raw: Vec<CMat> = null.iter().map(|c| coeffs_to_so_matrix(7, &pairs, c)).collect();

        // Cartan subalgebra: centralizer of a generic element inside g2.
        let mut cartan_coeffs: Option<Vec<RVec>> = None;
        for seed in 0..3u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let coeffs: Vec<f64> = (0..14).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let mut x = CMat::zeros(7, 7);
            for (c, g) in coeffs.iter().zip(raw.iter()) {
                x += g * cplx(*c, 0.0);
            }
            let mut cols = RMat::zeros(49, 14);
            for (a, g) in raw.iter().enumerate() {
                let br = &x * g - g * &x;
                for r in 0..7 {
                    for c in 0..7 {
                        cols[(r * 7 + c, a)] = br[(r, c)].re;
                    }
                }
            }
            if let Ok(ns) = nullspace_real(&cols, "g2 Cartan centralizer") {
                if ns.len() == 2 {
                    cartan_coeffs = Some(ns);
                    break;
                }
            }
        }
        let cartan_coeffs = cartan_coeffs
            .ok_or_else(|| Error::Internal("no regular element found for g2 Cartan".into()))?;

        // Cartan-first orthonormal coefficient basis of the 14-dim space.
        let mut seed_vecs = cartan_coeffs.clone();
        for a in 0..14 {
            seed_vecs.push(RVec::from_fn(14, |i, _| if i == a { 1.0 } else { 0.0 }));
        }
        let coeff_basis = orthonormalize_real(&seed_vecs, 1e-8);
        if coeff_basis.len() != 14 {
            return Err(Error::Internal("g2 basis completion failed".into()));
        }
        let generators: Vec<CMat> = coeff_basis
            .iter()
            .map(|c| {
                let mut m = CMat::zeros(7, 7);
                for (a, g) in raw.iter().enumerate() {
                    m += g * cplx(c[a], 0.0);
                }
                m
            })
            .collect();

        let root_system = build_root_system(Family::G2, 2)?;
        let chart = g2_chart(&generators[0], &generators[1])?;

        Ok(CompactAlgebra {
            name: "g2".into(),
            dim: 14,
            matrix_dim: 7,
            rank: 2,
            generators,
            chart: Some(chart),
            root_system,
        })
    }

    /// Matrix of a (possibly complex) coefficient vector in this basis.
    pub fn element(&self, coeffs: &CVec) -> CMat {
        let mut m = CMat::zeros(self.matrix_dim, self.matrix_dim);
        for (c, g) in coeffs.iter().zip(self.generators.iter()) {
            m += g * *c;
        }
        m
    }

    /// Coefficients of a matrix in the span of the basis, via the bilinear
    /// pairing -tr(MX_k) (valid for complexified elements too).
    pub fn project(&self, m: &CMat) -> CVec {
        CVec::from_fn(self.dim, |k, _| trace_pairing(m, &self.generators[k]))
    }

    /// Algebra from externally supplied anti-Hermitian matrices (e.g. a
    /// structure-constant data file).  The matrices are orthonormalized
    /// under -tr(XY); no Cartan ordering or weight chart is available.
    pub fn from_generators(
        name: &str,
        matrices: Vec<CMat>,
        root_system: RootSystem,
    ) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::InvalidConstruction("empty generator list".into()));
        }
        let n = matrices[0].nrows();
        for m in &matrices {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::InvalidConstruction("ragged generator matrices".into()));
            }
        }
        let flat: Vec<CVec> = matrices
            .iter()
            .map(|m| CVec::from_fn(n * n, |i, _| m[(i / n, i % n)]))
            .collect();
        let ortho = crate::linalg::orthonormalize_complex(&flat, 1e-10);
        if ortho.len() != matrices.len() {
            return Err(Error::InvalidConstruction(format!(
                "generators are linearly dependent: span has dimension {} of {}",
                ortho.len(),
                matrices.len()
            )));
        }
        let generators: Vec<CMat> = ortho
            .iter()
            .map(|v| CMat::from_fn(n, n, |r, c| v[r * n + c]))
            .collect();
        let rank = root_system.rank;
        Ok(CompactAlgebra {
            name: name.into(),
            dim: generators.len(),
            matrix_dim: n,
            rank,
            generators,
            chart: None,
            root_system,
        })
    }
}

/// Positions in the so(n) basis order of the adjacent-plane rotations
/// (0,1), (1,2), ..., (n-2, n-1), which generate so(n).
pub fn adjacent_rotation_indices(n: usize) -> Vec<usize> {
    let pairs = so_pair_order(n);
    (0..n - 1)
        .map(|a| pairs.iter().position(|&p| p == (a, a + 1)).expect("adjacent pair present"))
        .collect()
}

fn indicator(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

fn coeffs_to_so_matrix(n: usize, pairs: &[(usize, usize)], coeffs: &RVec) -> CMat {
    let mut m = CMat::zeros(n, n);
    for (col, &(a, b)) in pairs.iter().enumerate() {
        let c = coeffs[col] * std::f64::consts::FRAC_1_SQRT_2;
        m[(a, b)] += cplx(c, 0.0);
        m[(b, a)] -= cplx(c, 0.0);
    }
    m
}

/// Octonion structure constants phi[i][j][k] = <o_{i+1} o_{j+1}, o_{k+1}>
/// on the imaginary units, built by Cayley-Dickson doubling of the
/// quaternions.
fn octonion_three_form() -> Vec<Vec<Vec<f64>>> {
    // Quaternion products as (sign, index) over basis 1,i,j,k.
    let qmul = |a: usize, b: usize| -> (f64, usize) {
        const TABLE: [[(f64, usize); 4]; 4] = [
            [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
            [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
            [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
            [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
        ];
        TABLE[a][b]
    };
    let qconj = |a: usize| -> f64 {
        if a == 0 {
            1.0
        } else {
            -1.0
        }
    };
    // Octonion basis: o_m = (q_m, 0) for m < 4, (0, q_{m-4}) otherwise;
    // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
    let omul = |x: usize, y: usize| -> (f64, usize) {
        match (x < 4, y < 4) {
            (true, true) => qmul(x, y),
            (true, false) => {
                let d = y - 4;
                let (s, idx) = qmul(d, x);
                (s, idx + 4)
            }
            (false, true) => {
                let b = x - 4;
                let (s, idx) = qmul(b, y);
                (s * qconj(y), idx + 4)
            }
            (false, false) => {
                let (b, d) = (x - 4, y - 4);
                let (s, idx) = qmul(d, b);
                (-s * qconj(d), idx)
            }
        }
    };
    let mut phi = vec![vec![vec![0.0; 7]; 7]; 7];
    for i in 1..8 {
        for j in 1..8 {
            let (s, idx) = omul(i, j);
            if idx >= 1 {
                phi[i - 1][j - 1][idx - 1] = s;
            }
        }
    }
    phi
}

/// Chart for g2 from the eigenvalue tuples of the 7-dim representation:
/// the six nonzero tuples form a hexagon u, v, u+v, -u, -v, -(u+v) which is
/// matched onto the short roots of the exact realization.
fn g2_chart(h1: &CMat, h2: &CMat) -> Result<RMat> {
    let comm = h1 * h2 - h2 * h1;
    if max_abs(&comm) > 1e-10 {
        return Err(Error::Internal("g2 Cartan generators do not commute".into()));
    }
    let mats = [h1 * cplx(0.0, -1.0), h2 * cplx(0.0, -1.0)];
    let (tuples, _) = joint_hermitian_eigen(&mats, 1e-7, "g2 chart")?;
    let close = |a: &[f64], b: &[f64]| -> bool {
        (a[0] - b[0]).abs() < 1e-7 && (a[1] - b[1]).abs() < 1e-7
    };
    let nonzero: Vec<Vec<f64>> = tuples
        .iter()
        .filter(|t| t[0].abs() > 1e-7 || t[1].abs() > 1e-7)
        .cloned()
        .collect();
    if nonzero.len() != 6 {
        return Err(Error::Internal(format!(
            "7-dim g2 representation has {} nonzero weight tuples, expected 6",
            nonzero.len()
        )));
    }
    let mut sorted = nonzero.clone();
    sorted.sort_by(|a, b| b[0].partial_cmp(&a[0]).unwrap().then(b[1].partial_cmp(&a[1]).unwrap()));
    let u = sorted[0].clone();
    let mut chosen = None;
    for v in sorted.iter().skip(1) {
        if close(v, &[-u[0], -u[1]]) {
            continue;
        }
        let sum = [u[0] + v[0], u[1] + v[1]];
        if nonzero.iter().any(|t| close(t, &sum)) {
            chosen = Some(v.clone());
            break;
        }
    }
    let v = chosen.ok_or_else(|| Error::Internal("g2 weight hexagon not recognized".into()))?;
    // Send u to (1,-1,0) and v to (0,1,-1), both short roots.
    let det = u[0] * v[1] - u[1] * v[0];
    if det.abs() < 1e-10 {
        return Err(Error::Internal("degenerate g2 weight tuples".into()));
    }
    let inv = [[v[1] / det, -v[0] / det], [-u[1] / det, u[0] / det]];
    let w1 = [1.0, -1.0, 0.0];
    let w2 = [0.0, 1.0, -1.0];
    let mut chart = RMat::zeros(3, 2);
    for r in 0..3 {
        chart[(r, 0)] = w1[r] * inv[0][0] + w2[r] * inv[1][0];
        chart[(r, 1)] = w1[r] * inv[0][1] + w2[r] * inv[1][1];
    }
    Ok(chart)
}
