//! Generates the matrix data file for the 27-dimensional action of
//! compact e6, which the verifier loads with `--e6-data`.
//!
//! Construction: octonions by three Cayley-Dickson doublings from the
//! reals; the exceptional Jordan algebra of 3x3 octonionic Hermitian
//! matrices with A∘B = (AB+BA)/2; f4 spanned by the commutators
//! [L_A, L_B] of Jordan multiplications (52 of them); e6 = f4 ⊕ i·L_X
//! over trace-free X (26 more).  All 78 generators act on the
//! complexified algebra C^27 and are anti-Hermitian for the trace form.
//!
//! Usage: cargo run --example make_e6_data [-- OUT_PATH]
//! Default output: data/e6_fund27.txt

use nalgebra::{Complex, DMatrix, DVector};

type Oct = [f64; 8];
type RMat = DMatrix<f64>;
type CMat = DMatrix<Complex<f64>>;

/// Basis products of a Cayley-Dickson algebra: table[i][j] = (k, s)
/// means e_i e_j = s e_k.
fn doubled(m: &[Vec<(usize, f64)>]) -> Vec<Vec<(usize, f64)>> {
    let d = m.len();
    // conj(e_0) = e_0, conj(e_k) = -e_k for k > 0, at every level.
    let csign = |i: usize| if i == 0 { 1.0 } else { -1.0 };
    let mut out = vec![vec![(0usize, 0.0f64); 2 * d]; 2 * d];
    for i in 0..2 * d {
        for j in 0..2 * d {
            // (a,b)(c,e) = (ac - ē b, ea + b c̄)
            out[i][j] = match (i < d, j < d) {
                (true, true) => m[i][j],
                (true, false) => {
                    let (k, s) = m[j - d][i];
                    (d + k, s)
                }
                (false, true) => {
                    let (k, s) = m[i - d][j];
                    (d + k, s * csign(j))
                }
                (false, false) => {
                    let (k, s) = m[j - d][i - d];
                    (k, -s * csign(j - d))
                }
            };
        }
    }
    out
}

fn octonion_table() -> Vec<Vec<(usize, f64)>> {
    let mut t = vec![vec![(0usize, 1.0f64)]];
    for _ in 0..3 {
        t = doubled(&t);
    }
    t
}

fn omul(t: &[Vec<(usize, f64)>], a: &Oct, b: &Oct) -> Oct {
    let mut out = [0.0; 8];
    for i in 0..8 {
        if a[i] == 0.0 {
            continue;
        }
        for j in 0..8 {
            if b[j] == 0.0 {
                continue;
            }
            let (k, s) = t[i][j];
            out[k] += s * a[i] * b[j];
        }
    }
    out
}

fn oconj(a: &Oct) -> Oct {
    let mut out = *a;
    for x in out.iter_mut().skip(1) {
        *x = -*x;
    }
    out
}

fn onorm(a: &Oct) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// 3x3 octonionic matrix.
type JMat = [[Oct; 3]; 3];

fn jmat_zero() -> JMat {
    [[[0.0; 8]; 3]; 3]
}

fn jordan(t: &[Vec<(usize, f64)>], a: &JMat, b: &JMat) -> JMat {
    let mut out = jmat_zero();
    for r in 0..3 {
        for c in 0..3 {
            for k in 0..3 {
                let ab = omul(t, &a[r][k], &b[k][c]);
                let ba = omul(t, &b[r][k], &a[k][c]);
                for u in 0..8 {
                    out[r][c][u] += 0.5 * (ab[u] + ba[u]);
                }
            }
        }
    }
    out
}

const OFF_POS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Orthonormal basis for tr(A∘B): E_ii, then (e_u at each upper slot,
/// conjugate below) / sqrt(2).
fn jordan_basis() -> Vec<JMat> {
    let mut basis = Vec::with_capacity(27);
    for i in 0..3 {
        let mut m = jmat_zero();
        m[i][i][0] = 1.0;
        basis.push(m);
    }
    for &(r, c) in &OFF_POS {
        for u in 0..8 {
            let mut m = jmat_zero();
            m[r][c][u] = SQRT_HALF;
            let mut e = [0.0; 8];
            e[u] = SQRT_HALF;
            m[c][r] = oconj(&e);
            basis.push(m);
        }
    }
    basis
}

fn coords(m: &JMat) -> DVector<f64> {
    let mut v = DVector::zeros(27);
    for i in 0..3 {
        v[i] = m[i][i][0];
    }
    for (p, &(r, c)) in OFF_POS.iter().enumerate() {
        for u in 0..8 {
            v[3 + 8 * p + u] = m[r][c][u] / SQRT_HALF;
        }
    }
    v
}

/// Modified Gram-Schmidt over flattened real matrices.
fn mgs(mats: &[RMat]) -> Vec<RMat> {
    let mut kept: Vec<RMat> = Vec::new();
    for m in mats {
        let mut w = m.clone();
        for _ in 0..2 {
            for b in &kept {
                let c = (b.transpose() * &w).trace();
                w -= b * c;
            }
        }
        let n = (w.transpose() * &w).trace().sqrt();
        if n > 1e-8 {
            kept.push(w / n);
        }
    }
    kept
}

fn to_complex(m: &RMat) -> CMat {
    m.map(|x| Complex::new(x, 0.0))
}

fn main() {
    let out_path = std::env::args().nth(1).unwrap_or_else(|| "data/e6_fund27.txt".into());
    let t = octonion_table();

    // Composition property |xy| = |x||y| pins the table down.
    let x: Oct = [0.3, -1.1, 0.7, 0.2, -0.5, 0.9, -0.4, 0.6];
    let y: Oct = [-0.8, 0.1, 0.4, -0.9, 0.2, 0.5, 1.3, -0.7];
    let xy = omul(&t, &x, &y);
    assert!((onorm(&xy) - onorm(&x) * onorm(&y)).abs() < 1e-12, "not a composition algebra");
    // Associativity must fail somewhere (octonions, not a matrix algebra).
    let mut assoc = true;
    for i in 1..8 {
        for j in 1..8 {
            for k in 1..8 {
                let (mut a, mut b, mut c) = ([0.0; 8], [0.0; 8], [0.0; 8]);
                (a[i], b[j], c[k]) = (1.0, 1.0, 1.0);
                let lhs = omul(&t, &omul(&t, &a, &b), &c);
                let rhs = omul(&t, &a, &omul(&t, &b, &c));
                if lhs != rhs {
                    assoc = false;
                }
            }
        }
    }
    assert!(!assoc, "table is associative; doubling went wrong");

    let basis = jordan_basis();
    // The basis must be orthonormal for tr(A∘B).
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let p = jordan(&t, a, b);
            let tr: f64 = (0..3).map(|d| p[d][d][0]).sum();
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((tr - want).abs() < 1e-12, "gram({i},{j}) = {tr}");
        }
    }

    // Jordan multiplication operators in coordinates.
    let l_ops: Vec<RMat> = basis
        .iter()
        .map(|bi| {
            let mut m = RMat::zeros(27, 27);
            for (j, bj) in basis.iter().enumerate() {
                m.set_column(j, &coords(&jordan(&t, bi, bj)));
            }
            m
        })
        .collect();

    // f4 = span of [L_A, L_B]; 52-dimensional.
    let mut comms = Vec::new();
    for i in 0..27 {
        for j in (i + 1)..27 {
            comms.push(&l_ops[i] * &l_ops[j] - &l_ops[j] * &l_ops[i]);
        }
    }
    let f4 = mgs(&comms);
    assert_eq!(f4.len(), 52, "derivation algebra dimension");
    for d in &f4 {
        assert!((d + d.transpose()).abs().max() < 1e-12, "derivation not antisymmetric");
    }

    // Trace-free multiplications: two diagonal differences + all
    // off-diagonal basis elements.
    let mut tracefree: Vec<RMat> = vec![&l_ops[0] - &l_ops[1], &l_ops[1] - &l_ops[2]];
    tracefree.extend(l_ops[3..].iter().cloned());
    for l in &tracefree {
        assert!((l - l.transpose()).abs().max() < 1e-12, "L_X not symmetric");
        assert!(l.trace().abs() < 1e-12, "L_X not trace-free");
    }

    let mut gens: Vec<CMat> = f4.iter().map(to_complex).collect();
    gens.extend(tracefree.iter().map(|l| l.map(|x| Complex::new(0.0, x))));
    assert_eq!(gens.len(), 78);

    // Spot-check closure: brackets stay in the real span of the set.
    let flat: Vec<DVector<Complex<f64>>> = gens
        .iter()
        .map(|g| DVector::from_fn(27 * 27, |i, _| g[(i / 27, i % 27)]))
        .collect();
    for (a, b) in [(0usize, 60usize), (53, 70), (10, 33), (61, 77), (5, 52)] {
        let br = &gens[a] * &gens[b] - &gens[b] * &gens[a];
        let mut rem = DVector::from_fn(27 * 27, |i, _| br[(i / 27, i % 27)]);
        for f in &flat {
            let c = f.dotc(&rem).re / f.dotc(f).re;
            rem -= f * Complex::new(c, 0.0);
        }
        assert!(rem.norm() < 1e-10, "bracket [{a},{b}] leaves the span");
    }

    let mut out = String::new();
    out.push_str("# 27-dimensional action of compact e6 on the complexified\n");
    out.push_str("# exceptional Jordan algebra.  Generated by make_e6_data.\n");
    out.push_str("# Format: header `dim_algebra dim_rep`, then `a row col re im`.\n");
    out.push_str("78 27\n");
    for (a, g) in gens.iter().enumerate() {
        for r in 0..27 {
            for c in 0..27 {
                let z = g[(r, c)];
                if z.norm() > 1e-14 {
                    out.push_str(&format!("{a} {r} {c} {:.17e} {:.17e}\n", z.re, z.im));
                }
            }
        }
    }
    if let Some(dir) = std::path::Path::new(&out_path).parent() {
        std::fs::create_dir_all(dir).expect("create output directory");
    }
    std::fs::write(&out_path, out).expect("write data file");
    println!("wrote {out_path}: 78 generators on C^27");
}
