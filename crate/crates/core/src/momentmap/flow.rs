//! Norm-square gradient flow: descends |mu|^2 along the complexified
//! orbit of a random start until it stalls at a critical point.  On an
//! open orbit the limit with |mu| = 0 locates the distinguished compact
//! orbit; on unstable spaces the flow settles on a positive floor.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::Error;
use crate::linalg::{cplx, CVec};
use crate::momentmap::{
    grad_moment_norm_sq, is_open_orbit, moment_norm_sq, ProjectivePoint,
};
use crate::representations::Representation;
use crate::Result;

#[derive(Clone, Copy, Debug)]
pub struct FlowOpts {
    /// Stop iterating when the gradient norm falls below this
    /// (stationarity; reached both at zeros and at positive floors).
    pub grad_tol: f64,
    /// `converged` means the final |mu| fell below this.
    pub mu_tol: f64,
    pub max_iters: usize,
    /// Random starts to try when a draw lands off the open orbit.
    pub max_restarts: usize,
    pub seed: u64,
}

impl Default for FlowOpts {
    fn default() -> Self {
        FlowOpts { grad_tol: 1e-13, mu_tol: 1e-9, max_iters: 50_000, max_restarts: 10, seed: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct FlowResult {
    pub point: ProjectivePoint,
    pub mu_norm: f64,
    pub grad_norm: f64,
    pub iterations: usize,
    pub restarts: usize,
    /// Final |mu| below `mu_tol`.  A flow that stalls on a positive
    /// floor (no zero exists) ends stationary but not converged.
    pub converged: bool,
    /// |mu| after every accepted step; non-increasing by construction.
    pub norm_history: Vec<f64>,
}

fn random_start(dim: usize, seed: u64) -> Result<ProjectivePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = CVec::from_fn(dim, |_, _| {
        cplx(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    ProjectivePoint::new(&v)
}

/// Backtracking gradient descent from a given start, run to
/// stationarity (or a stall, or the iteration cap); the final point is
/// returned either way and judged against `mu_tol`.
pub fn flow_from(
    rep: &Representation,
    start: &ProjectivePoint,
    opts: &FlowOpts,
) -> Result<FlowResult> {
    let mut v = start.v.clone();
    let mut eta = 0.25f64;
    let mut history = Vec::new();
    let mut iterations = 0;
    let (mut f, mut gn);
    loop {
        let p = ProjectivePoint { v: v.clone() };
        f = moment_norm_sq(rep, &p)?;
        history.push(f.sqrt());
        let g = grad_moment_norm_sq(rep, &p)?;
        gn = g.norm();
        if gn < opts.grad_tol {
            break;
        }
        if iterations >= opts.max_iters {
            break;
        }
        let mut accepted = false;
        while eta > 1e-18 {
            let step = &v - &g * cplx(eta, 0.0);
            let cand = &step / cplx(step.norm(), 0.0);
            let fc = moment_norm_sq(rep, &ProjectivePoint { v: cand.clone() })?;
            if fc <= f - 1e-4 * eta * gn * gn {
                v = cand;
                eta = (2.0 * eta).min(1.0);
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if !accepted {
            break;
        }
        iterations += 1;
    }
    Ok(FlowResult {
        point: ProjectivePoint::new(&v)?,
        mu_norm: f.sqrt(),
        grad_norm: gn,
        iterations,
        restarts: 0,
        converged: f.sqrt() < opts.mu_tol,
        norm_history: history,
    })
}

/// Flow from a reproducible random start, redrawing (up to
/// `max_restarts`) while the start misses the open complexified orbit.
pub fn kempf_ness_flow(rep: &Representation, opts: &FlowOpts) -> Result<FlowResult> {
    for attempt in 0..=opts.max_restarts {
        let seed = opts.seed.wrapping_add((attempt as u64).wrapping_mul(0x9E3779B97F4A7C15));
        let start = random_start(rep.dim, seed)?;
        if !is_open_orbit(rep, &start)? {
            continue;
        }
        let mut result = flow_from(rep, &start, opts)?;
        result.restarts = attempt;
        return Ok(result);
    }
    Err(Error::Internal(format!(
        "{}: no start on an open orbit after {} draws",
        rep.label,
        opts.max_restarts + 1
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CompactAlgebra;
    use crate::momentmap::real_isotropy;
    use crate::representations::{defining_rep, sym_power, wedge_power};
    use std::sync::Arc;

    fn su(n: usize) -> Arc<CompactAlgebra> {
        Arc::new(CompactAlgebra::su(n).unwrap())
    }

    fn assert_monotone(history: &[f64]) {
        for w in history.windows(2) {
            assert!(w[1] <= w[0] + 1e-15, "history increased: {} -> {}", w[0], w[1]);
        }
    }

    #[test]
    fn unstable_line_flow_settles_on_the_floor() {
        let rep = defining_rep(&su(2));
        let res = kempf_ness_flow(&rep, &FlowOpts { seed: 3, ..Default::default() }).unwrap();
        // Stationary on the positive floor: no zero of mu exists here.
        assert!(!res.converged);
        assert!((res.mu_norm * res.mu_norm - 0.5).abs() < 1e-9, "{}", res.mu_norm);
        assert_monotone(&res.norm_history);
    }

    #[test]
    fn quadric_flow_reaches_a_moment_zero() {
        let rep = sym_power(&defining_rep(&su(2)), 2).unwrap();
        let res = kempf_ness_flow(&rep, &FlowOpts { seed: 17, ..Default::default() }).unwrap();
        assert!(res.converged);
        assert!(res.mu_norm < 1e-10, "{}", res.mu_norm);
        assert_monotone(&res.norm_history);
        let iso = real_isotropy(&rep, &res.point).unwrap();
        assert_eq!(iso.dim, 1);
    }

    #[test]
    fn exterior_cube_flow_finds_the_sixteen_dimensional_stabilizer() {
        let rep = wedge_power(&defining_rep(&su(6)), 3).unwrap();
        let res = kempf_ness_flow(&rep, &FlowOpts { seed: 7, ..Default::default() }).unwrap();
        assert!(res.mu_norm < 1e-9, "{}", res.mu_norm);
        let iso = real_isotropy(&rep, &res.point).unwrap();
        assert_eq!(iso.dim, 16);
    }

    #[test]
    fn same_seed_reproduces_the_same_limit() {
        let rep = sym_power(&defining_rep(&su(2)), 2).unwrap();
        let opts = FlowOpts { seed: 5, ..Default::default() };
        let a = kempf_ness_flow(&rep, &opts).unwrap();
        let b = kempf_ness_flow(&rep, &opts).unwrap();
        assert_eq!(a.iterations, b.iterations);
        assert!((&a.point.v - &b.point.v).norm() < 1e-14);
    }
}
