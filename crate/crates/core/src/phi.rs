//! Solver for the single-letter optimization
//! `phi_c(Q_XY) = inf_{P(U|X)} { c*H(Y|U) + I(U;X) }` over auxiliary
//! channels with the Markov chain U - X - Y, together with its gradient in
//! the joint distribution, a stationarity diagnostic, finite-difference
//! oracles, and the closed form for binary symmetric sources.

use rand::Rng;
use rayon::prelude::*;

use crate::info::{compose, conditional_entropy, entropy, info_density_tables, Channel, Dist, Joint};
use crate::optim::{self, PgOptions};
use crate::rng::stream;
use crate::{Error, Result};

/// Floor used inside logarithms when forming gradients near the simplex
/// boundary. Objective evaluations never use it (0 ln 0 = 0 exactly).
const LOG_FLOOR: f64 = 1e-18;

/// Mass threshold below which an auxiliary symbol is pruned from the
/// returned solution; information densities are undefined at zero-mass u.
const PRUNE_TOL: f64 = 1e-12;

/// Cells of `P(u|x)` smaller than this count as off the row support when
/// assessing stationarity.
const SUPPORT_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SolverParams {
    /// Auxiliary alphabet size; `|X| + 2` suffices by Caratheodory.
    pub u_size: usize,
    pub restarts: usize,
    pub tol: f64,
    pub max_iters: usize,
    pub seed: u64,
}

impl SolverParams {
    pub fn for_joint(q: &Joint) -> Self {
        Self {
            u_size: q.rows() + 2,
            restarts: 32,
            tol: 1e-10,
            max_iters: 100_000,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_u_size(mut self, u_size: usize) -> Self {
        self.u_size = u_size;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }
}

/// Optimized auxiliary channel for one `(Q_XY, c)` instance.
#[derive(Debug, Clone)]
pub struct PhiSolution {
    pub value: f64,
    /// `P(U|X)`: rows indexed by x over the surviving auxiliary symbols.
    /// Rows at zero-mass x are uniform placeholders.
    pub aux_channel: Channel,
    /// Effective auxiliary alphabet size after pruning.
    pub u_size: usize,
    pub c: f64,
    pub converged: bool,
    pub objective_history_len: usize,
    pub seed: u64,
}

/// Gradient of `phi_c` with respect to the joint, tabulated over `(x, y)`.
/// Off-support cells are NaN.
#[derive(Debug, Clone)]
pub struct GradientTable {
    values: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl GradientTable {
    pub fn get(&self, x: usize, y: usize) -> Option<f64> {
        let v = self.values[x * self.cols + y];
        v.is_finite().then_some(v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Expectation under a joint of the same shape.
    pub fn expectation(&self, q: &Joint) -> f64 {
        let mut e = 0.0;
        for x in 0..self.rows {
            for y in 0..self.cols {
                let w = q.get(x, y);
                if w > 0.0 {
                    e += w * self.values[x * self.cols + y];
                }
            }
        }
        e
    }

    /// Inner product with a tangent direction (same shape, entries sum to 0),
    /// taken over the support of `q`.
    pub fn inner(&self, direction: &[f64]) -> f64 {
        direction
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| v.is_finite())
            .map(|(d, v)| d * v)
            .sum()
    }
}

/// Problem restricted to the positive-mass rows/columns of the joint.
struct Reduced {
    qxy: Vec<Vec<f64>>, // nx x ny
    qx: Vec<f64>,
    x_ids: Vec<usize>,
    y_ids: Vec<usize>,
    nx: usize,
    ny: usize,
}

fn reduce_support(q: &Joint) -> Reduced {
    let mx = q.x_marginal();
    let my = q.y_marginal();
    let x_ids: Vec<usize> = (0..q.rows()).filter(|&x| mx.get(x) > 0.0).collect();
    let y_ids: Vec<usize> = (0..q.cols()).filter(|&y| my.get(y) > 0.0).collect();
    let qxy: Vec<Vec<f64>> = x_ids
        .iter()
        .map(|&x| y_ids.iter().map(|&y| q.get(x, y)).collect())
        .collect();
    let qx: Vec<f64> = x_ids.iter().map(|&x| mx.get(x)).collect();
    Reduced {
        nx: x_ids.len(),
        ny: y_ids.len(),
        qxy,
        qx,
        x_ids,
        y_ids,
    }
}

fn xlnx(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

/// `c*H(Y|U) + I(U;X)` for the channel rows `p[x][u]`.
fn objective(red: &Reduced, c: f64, p: &[Vec<f64>]) -> f64 {
    let nu = p[0].len();
    let mut p_u = vec![0.0; nu];
    let mut p_uy = vec![vec![0.0; red.ny]; nu];
    for x in 0..red.nx {
        for u in 0..nu {
            let w = p[x][u];
            if w > 0.0 {
                p_u[u] += red.qx[x] * w;
                for y in 0..red.ny {
                    p_uy[u][y] += red.qxy[x][y] * w;
                }
            }
        }
    }
    // H(Y|U) = H(U,Y) - H(U)
    let mut h_uy = 0.0;
    for row in &p_uy {
        for &v in row {
            h_uy -= xlnx(v);
        }
    }
    let h_u: f64 = -p_u.iter().copied().map(xlnx).sum::<f64>();
    let h_y_given_u = h_uy - h_u;
    // I(U;X) = sum qx p(u|x) ln(p(u|x)/p_u)
    let mut mi = 0.0;
    for x in 0..red.nx {
        for u in 0..nu {
            let w = p[x][u];
            if w > 0.0 && p_u[u] > 0.0 {
                mi += red.qx[x] * w * (w / p_u[u]).ln();
            }
        }
    }
    c * h_y_given_u + mi.max(0.0)
}

/// Partial derivatives with respect to `p[x][u]`:
/// `qx[x] * ( c * E[i_{Y|U}(Y|u) | X=x] + ln(p[x][u]/p_u[u]) )`,
/// with logarithms floored near the boundary.
fn gradient(red: &Reduced, c: f64, p: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let nu = p[0].len();
    let mut p_u = vec![0.0; nu];
    let mut p_uy = vec![vec![0.0; red.ny]; nu];
    for x in 0..red.nx {
        for u in 0..nu {
            let w = p[x][u];
            if w > 0.0 {
                p_u[u] += red.qx[x] * w;
                for y in 0..red.ny {
                    p_uy[u][y] += red.qxy[x][y] * w;
                }
            }
        }
    }
    // ln Q(y|u) with flooring; rows for unused u fall back to the Y marginal
    let mut ln_qyu = vec![vec![0.0; red.ny]; nu];
    for u in 0..nu {
        for y in 0..red.ny {
            let ratio = if p_u[u] > LOG_FLOOR {
                p_uy[u][y] / p_u[u]
            } else {
                red.qxy.iter().map(|row| row[y]).sum::<f64>()
            };
            ln_qyu[u][y] = ratio.max(LOG_FLOOR).min(1.0).ln();
        }
    }
    let mut g = vec![vec![0.0; nu]; red.nx];
    for x in 0..red.nx {
        for u in 0..nu {
            let mut cond = 0.0;
            for y in 0..red.ny {
                cond -= red.qxy[x][y] * ln_qyu[u][y];
            }
            let ln_ratio = p[x][u].max(LOG_FLOOR).ln() - p_u[u].max(LOG_FLOOR).ln();
            g[x][u] = c * cond + red.qx[x] * ln_ratio;
        }
    }
    g
}

/// Snap near-zero cells to exact zeros when that does not hurt the
/// objective; keeps row supports honest for the stationarity diagnostic.
fn cleanup(red: &Reduced, c: f64, p: Vec<Vec<f64>>, value: f64) -> (Vec<Vec<f64>>, f64) {
    let mut snapped = p.clone();
    let mut changed = false;
    for row in snapped.iter_mut() {
        let before: f64 = row.iter().sum();
        for v in row.iter_mut() {
            if *v < 1e-12 && *v > 0.0 {
                *v = 0.0;
                changed = true;
            }
        }
        let after: f64 = row.iter().sum();
        if after > 0.0 && after != before {
            for v in row.iter_mut() {
                *v *= before / after;
            }
        }
    }
    if !changed {
        return (p, value);
    }
    let new_value = objective(red, c, &snapped);
    if new_value <= value + 1e-11 {
        (snapped, new_value)
    } else {
        (p, value)
    }
}

fn sample_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    // Dirichlet(1): normalized exponentials
    let mut v: Vec<f64> = (0..k)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let s: f64 = v.iter().sum();
    for x in v.iter_mut() {
        *x /= s;
    }
    v
}

fn run_one(red: &Reduced, c: f64, init: Vec<Vec<f64>>, tol: f64, max_iters: usize) -> optim::PgOutcome {
    let opts = PgOptions {
        max_iters,
        tol,
        plateau_window: 50,
    };
    let out = optim::minimize(
        init,
        |p| objective(red, c, p),
        |p| gradient(red, c, p),
        &opts,
    );
    let (point, value) = cleanup(red, c, out.point, out.value);
    optim::PgOutcome {
        point,
        value,
        converged: out.converged,
        iterations: out.iterations,
    }
}

/// Embeds the reduced channel back onto the full X alphabet and prunes
/// auxiliary symbols with negligible mass.
fn finish(q: &Joint, red: &Reduced, c: f64, best: optim::PgOutcome, seed: u64) -> PhiSolution {
    let nu = best.point[0].len();
    let mut p_u = vec![0.0; nu];
    for x in 0..red.nx {
        for u in 0..nu {
            p_u[u] += red.qx[x] * best.point[x][u];
        }
    }
    let mut keep: Vec<usize> = (0..nu).filter(|&u| p_u[u] >= PRUNE_TOL).collect();
    if keep.is_empty() {
        keep.push(0);
    }
    let mut rows = Vec::with_capacity(q.rows());
    let mut red_iter = 0usize;
    for x in 0..q.rows() {
        if red_iter < red.x_ids.len() && red.x_ids[red_iter] == x {
            let mut row: Vec<f64> = keep.iter().map(|&u| best.point[red_iter][u]).collect();
            let s: f64 = row.iter().sum();
            for v in row.iter_mut() {
                *v /= s;
            }
            rows.push(row);
            red_iter += 1;
        } else {
            rows.push(vec![1.0 / keep.len() as f64; keep.len()]);
        }
    }
    PhiSolution {
        value: best.value,
        aux_channel: Channel::from_rows_unchecked(rows),
        u_size: keep.len(),
        c,
        converged: best.converged,
        objective_history_len: best.iterations,
        seed,
    }
}

/// Best local minimum of `c*H(Y|U) + I(U;X)` over `params.restarts`
/// independent starts. Ties go to the lowest restart index, so the result
/// does not depend on scheduling.
pub fn solve_phi(q: &Joint, c: f64, params: &SolverParams) -> Result<PhiSolution> {
    if c <= 0.0 {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    if params.u_size == 0 {
        return Err(Error::Domain("u_size must be at least 1".into()));
    }
    let red = reduce_support(q);
    let results: Vec<(usize, optim::PgOutcome)> = (0..params.restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut rng = stream(params.seed, 0x5048_4920, r as u64);
            let init: Vec<Vec<f64>> = (0..red.nx)
                .map(|_| sample_simplex(&mut rng, params.u_size))
                .collect();
            (r, run_one(&red, c, init, params.tol, params.max_iters))
        })
        .collect();
    let (_, best) = results
        .into_iter()
        .min_by(|(ia, a), (ib, b)| {
            a.value
                .partial_cmp(&b.value)
                .unwrap()
                .then(ia.cmp(ib))
        })
        .expect("at least one restart");
    Ok(finish(q, &red, c, best, params.seed))
}

/// Single run warm-started from a known channel; used by the
/// finite-difference oracle to suppress restart noise.
pub fn solve_phi_warm(q: &Joint, c: f64, init: &Channel, tol: f64) -> Result<PhiSolution> {
    let red = reduce_support(q);
    let nu = init.output_size();
    let init_rows: Vec<Vec<f64>> = red.x_ids.iter().map(|&x| init.row(x).to_vec()).collect();
    if init_rows.iter().any(|r| r.len() != nu) {
        return Err(Error::DimensionMismatch("warm-start channel shape".into()));
    }
    let best = run_one(&red, c, init_rows, tol, 100_000);
    Ok(finish(q, &red, c, best, 0))
}

/// Recomputes `c*H(Y|U) + I(U;X)` from a solution's channel; consistency
/// check for the stored value.
pub fn objective_of(q: &Joint, c: f64, ch: &Channel) -> Result<f64> {
    let red = reduce_support(q);
    let rows: Vec<Vec<f64>> = red.x_ids.iter().map(|&x| ch.row(x).to_vec()).collect();
    Ok(objective(&red, c, &rows))
}

/// Per-(u, x) conditional means `E[c*i_{Y|U}(Y|u) + i_{U;X}(u;x) | X=x]`,
/// restricted to the support of the joint and of each channel row.
fn conditional_means(q: &Joint, c: f64, sol: &PhiSolution) -> (Vec<Vec<Option<f64>>>, Dist) {
    let red = reduce_support(q);
    let nu = sol.aux_channel.output_size();
    let rows: Vec<Vec<f64>> = red.x_ids.iter().map(|&x| sol.aux_channel.row(x).to_vec()).collect();
    let mut p_u = vec![0.0; nu];
    let mut p_uy = vec![vec![0.0; red.ny]; nu];
    for x in 0..red.nx {
        for u in 0..nu {
            let w = rows[x][u];
            p_u[u] += red.qx[x] * w;
            for y in 0..red.ny {
                p_uy[u][y] += red.qxy[x][y] * w;
            }
        }
    }
    let mut means = vec![vec![None; nu]; red.nx];
    for x in 0..red.nx {
        for u in 0..nu {
            if rows[x][u] <= SUPPORT_TOL || p_u[u] <= 0.0 {
                continue;
            }
            let mut cond = 0.0;
            for y in 0..red.ny {
                if red.qxy[x][y] > 0.0 {
                    let qyu = p_uy[u][y] / p_u[u];
                    cond -= red.qxy[x][y] / red.qx[x] * qyu.ln();
                }
            }
            let dens = (rows[x][u] / p_u[u]).ln();
            means[x][u] = Some(c * cond + dens);
        }
    }
    (means, Dist::new(p_u.clone()).unwrap_or_else(|_| {
        // tiny renormalization drift on pruned systems
        let s: f64 = p_u.iter().sum();
        Dist::new(p_u.iter().map(|v| v / s).collect()).expect("valid")
    }))
}

/// Stationarity diagnostic: the largest spread, over x, of the conditional
/// means across auxiliary symbols in the row support. Near zero at a true
/// stationary point.
pub fn stationarity_residual(q: &Joint, c: f64, sol: &PhiSolution) -> Result<f64> {
    let (means, _) = conditional_means(q, c, sol);
    let mut worst: f64 = 0.0;
    for row in &means {
        let vals: Vec<f64> = row.iter().flatten().copied().collect();
        if vals.len() > 1 {
            let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
            worst = worst.max(max - min);
        }
    }
    Ok(worst)
}

/// Gradient of `phi_c` at the joint: `(x, y) -> sum_u P(u|x) * g(u,x,y)`
/// with `g = c*i_{Y|U} + i_{U;X}`. The conditional law of U given
/// `(X, Y) = (x, y)` is `P(U|X=x)` by the Markov chain.
pub fn phi_gradient(q: &Joint, c: f64, sol: &PhiSolution) -> Result<GradientTable> {
    let red = reduce_support(q);
    let nu = sol.aux_channel.output_size();
    let rows: Vec<Vec<f64>> = red.x_ids.iter().map(|&x| sol.aux_channel.row(x).to_vec()).collect();
    let mut p_u = vec![0.0; nu];
    let mut p_uy = vec![vec![0.0; red.ny]; nu];
    for x in 0..red.nx {
        for u in 0..nu {
            let w = rows[x][u];
            p_u[u] += red.qx[x] * w;
            for y in 0..red.ny {
                p_uy[u][y] += red.qxy[x][y] * w;
            }
        }
    }
    let mut values = vec![f64::NAN; q.rows() * q.cols()];
    for (rx, &x) in red.x_ids.iter().enumerate() {
        for (ry, &y) in red.y_ids.iter().enumerate() {
            if red.qxy[rx][ry] <= 0.0 {
                continue;
            }
            let mut v = 0.0;
            for u in 0..nu {
                let w = rows[rx][u];
                if w > 0.0 {
                    let qyu = p_uy[u][ry] / p_u[u];
                    v += w * (c * (1.0 / qyu).ln() + (w / p_u[u]).ln());
                }
            }
            values[x * q.cols() + y] = v;
        }
    }
    Ok(GradientTable {
        values,
        rows: q.rows(),
        cols: q.cols(),
    })
}

/// Central difference `[phi(q + s*d) - phi(q - s*d)] / (2s)` along a tangent
/// direction (row-major, sums to zero), each endpoint re-solved warm-started
/// from `sol`.
pub fn fd_gradient(q: &Joint, c: f64, direction: &[f64], step: f64, sol: &PhiSolution) -> Result<f64> {
    if direction.len() != q.rows() * q.cols() {
        return Err(Error::DimensionMismatch("direction shape".into()));
    }
    let total: f64 = direction.iter().sum();
    if total.abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "direction must be tangent to the simplex (sums to {total})"
        )));
    }
    let perturb = |sign: f64| -> Result<Joint> {
        let probs: Vec<f64> = q
            .probs()
            .iter()
            .zip(direction)
            .map(|(p, d)| p + sign * step * d)
            .collect();
        if probs.iter().any(|p| *p < 0.0) {
            return Err(Error::Domain("step pushes the joint off the simplex".into()));
        }
        Joint::new(q.rows(), q.cols(), probs)
    };
    let plus = solve_phi_warm(&perturb(1.0)?, c, &sol.aux_channel, 1e-12)?;
    let minus = solve_phi_warm(&perturb(-1.0)?, c, &sol.aux_channel, 1e-12)?;
    Ok((plus.value - minus.value) / (2.0 * step))
}

/// Largest second difference of `phi_c` along random tangent directions;
/// empirical local-smoothness diagnostic (no certification).
pub fn fd_curvature(q: &Joint, c: f64, sol: &PhiSolution, step: f64, samples: usize, seed: u64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for s in 0..samples {
        let mut rng = stream(seed, 0x4845_5353, s as u64);
        let d = random_tangent(q, &mut rng);
        let probs_at = |sign: f64| -> Result<f64> {
            let probs: Vec<f64> = q
                .probs()
                .iter()
                .zip(&d)
                .map(|(p, di)| p + sign * step * di)
                .collect();
            if probs.iter().any(|p| *p < 0.0) {
                return Err(Error::Domain("step pushes the joint off the simplex".into()));
            }
            let j = Joint::new(q.rows(), q.cols(), probs)?;
            Ok(solve_phi_warm(&j, c, &sol.aux_channel, 1e-12)?.value)
        };
        let second = (probs_at(1.0)? - 2.0 * sol.value + probs_at(-1.0)?) / (step * step);
        worst = worst.max(second.abs());
    }
    Ok(worst)
}

/// Random zero-sum direction supported on the support of `q`, normalized to
/// unit l1 norm.
pub fn random_tangent<R: Rng>(q: &Joint, rng: &mut R) -> Vec<f64> {
    let n = q.rows() * q.cols();
    loop {
        let mut d: Vec<f64> = (0..n)
            .map(|i| {
                if q.probs()[i] > 0.0 {
                    rng.random::<f64>() - 0.5
                } else {
                    0.0
                }
            })
            .collect();
        let support: usize = q.probs().iter().filter(|p| **p > 0.0).count();
        if support < 2 {
            return vec![0.0; n];
        }
        let mean: f64 = d.iter().sum::<f64>() / support as f64;
        for (di, p) in d.iter_mut().zip(q.probs()) {
            if *p > 0.0 {
                *di -= mean;
            }
        }
        let l1: f64 = d.iter().map(|v| v.abs()).sum();
        if l1 > 1e-9 {
            for v in d.iter_mut() {
                *v /= l1;
            }
            return d;
        }
    }
}

// ---------------------------------------------------------------------
// Binary symmetric source closed form
// ---------------------------------------------------------------------

/// Binary entropy in nats.
pub fn binary_entropy(p: f64) -> f64 {
    -xlnx(p) - xlnx(1.0 - p)
}

/// Joint pmf of a binary symmetric pair with correlation `rho`:
/// both marginals uniform on two symbols and `P(equal) = (1 + rho)/2`.
pub fn bss_joint(rho: f64) -> Joint {
    let a = (1.0 + rho) / 4.0;
    let b = (1.0 - rho) / 4.0;
    Joint::new(2, 2, vec![a, b, b, a]).expect("valid joint")
}

/// Weight `c` as a function of the encoder correlation `eta`:
/// `ln((1+eta)/(1-eta)) / (rho * ln((1+rho*eta)/(1-rho*eta)))`.
/// The `eta -> 0` limit is `rho^{-2}` (the strong data processing
/// threshold).
pub fn bss_c_of_eta(rho: f64, eta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&rho) || rho == 0.0 {
        return Err(Error::Domain(format!("rho must be in (0,1), got {rho}")));
    }
    if !(0.0..1.0).contains(&eta) {
        return Err(Error::Domain(format!("eta must be in [0,1), got {eta}")));
    }
    if eta == 0.0 {
        return Ok(rho.powi(-2));
    }
    let num = ((1.0 + eta) / (1.0 - eta)).ln();
    let den = rho * ((1.0 + rho * eta) / (1.0 - rho * eta)).ln();
    Ok(num / den)
}

/// Inverse of [`bss_c_of_eta`] by bisection; requires `c >= rho^{-2}`.
pub fn bss_eta_of_c(rho: f64, c: f64) -> Result<f64> {
    let threshold = rho.powi(-2);
    if c < threshold - 1e-12 {
        return Err(Error::Domain(format!(
            "c = {c} below the degenerate threshold rho^-2 = {threshold}"
        )));
    }
    if c <= threshold {
        return Ok(0.0);
    }
    let mut lo = 0.0f64;
    let mut hi = 1.0 - 1e-15;
    if bss_c_of_eta(rho, hi)? < c {
        return Err(Error::Domain(format!("c = {c} unattainably large")));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if bss_c_of_eta(rho, mid)? < c {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Closed-form `phi_c` of the binary symmetric source with correlation
/// `rho` (Mrs. Gerber's lemma):
/// `c*h((1+rho*eta)/2) + ln 2 - h((1+eta)/2)` with `eta` solving the
/// c-equation. Returns `(value, eta)`.
pub fn bss_phi(rho: f64, c: f64) -> Result<(f64, f64)> {
    let eta = bss_eta_of_c(rho, c)?;
    let value = c * binary_entropy((1.0 + rho * eta) / 2.0) + std::f64::consts::LN_2
        - binary_entropy((1.0 + eta) / 2.0);
    Ok((value, eta))
}

/// The two values of `c*i_{Y|U}(y|u) + i_{U;X}(u;x)` at matching and
/// opposite symbols for the symmetric encoder; they differ for `eta > 0`,
/// showing the density genuinely depends on u.
pub fn bss_info_density_values(rho: f64, eta: f64, c: f64) -> (f64, f64) {
    let same = c * (2.0 / (1.0 + rho * eta)).ln() + (1.0 + eta).ln();
    let diff = c * (2.0 / (1.0 - rho * eta)).ln() + (1.0 - eta).ln();
    (same, diff)
}

/// The symmetric BSS encoder channel `P(U|X)` with correlation `eta`.
pub fn bss_encoder(eta: f64) -> Channel {
    let a = (1.0 + eta) / 2.0;
    Channel::new(vec![vec![a, 1.0 - a], vec![1.0 - a, a]]).expect("valid channel")
}
