//! Projected gradient descent over a product of probability simplices with
//! Armijo backtracking. Shared by the single-letter solver and the
//! type-class optimization; both objectives are smooth on the interior but
//! non-convex, so callers run multiple restarts and keep the best.

/// Euclidean projection of `v` onto the probability simplex (Duchi et al.).
pub(crate) fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cssv = 0.0;
    let mut rho = 0usize;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        cssv += ui;
        let t = (cssv - 1.0) / (i as f64 + 1.0);
        if ui - t > 0.0 {
            rho = i + 1;
            theta = t;
        }
    }
    if rho == 0 {
        // all entries tied below threshold; fall back to argmax vertex
        let (idx, _) = v
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.partial_cmp(b).unwrap())
            .unwrap();
        let mut res = vec![0.0; v.len()];
        res[idx] = 1.0;
        return res;
    }
    v.iter().map(|&vi| (vi - theta).max(0.0)).collect()
}

#[derive(Debug, Clone)]
pub(crate) struct PgOptions {
    pub max_iters: usize,
    /// Stop once the objective decrease over `plateau_window` iterations
    /// falls below this.
    pub tol: f64,
    pub plateau_window: usize,
}

impl Default for PgOptions {
    fn default() -> Self {
        Self {
            max_iters: 100_000,
            tol: 1e-10,
            plateau_window: 50,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct PgOutcome {
    pub point: Vec<Vec<f64>>,
    pub value: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Minimizes `objective` over a product of simplices (one per row of the
/// point). `objective` must be finite on the product; `gradient` may clamp
/// logarithms near the boundary, only monotonicity of accepted steps
/// matters.
pub(crate) fn minimize<F, G>(init: Vec<Vec<f64>>, objective: F, gradient: G, opts: &PgOptions) -> PgOutcome
where
    F: Fn(&[Vec<f64>]) -> f64,
    G: Fn(&[Vec<f64>]) -> Vec<Vec<f64>>,
{
    let mut x = init;
    let mut fx = objective(&x);
    let mut step = 1.0;
    let mut window_start = fx;
    let mut converged = false;
    let mut iters = 0;

    for it in 0..opts.max_iters {
        iters = it + 1;
        let g = gradient(&x);

        // Backtracking: accept the first step that strictly improves by the
        // quadratic model margin.
        let mut accepted = false;
        let mut alpha = step;
        for _ in 0..60 {
            let cand: Vec<Vec<f64>> = x
                .iter()
                .zip(&g)
                .map(|(row, grow)| {
                    let moved: Vec<f64> = row.iter().zip(grow).map(|(xi, gi)| xi - alpha * gi).collect();
                    project_simplex(&moved)
                })
                .collect();
            let dist2: f64 = cand
                .iter()
                .zip(&x)
                .flat_map(|(cr, xr)| cr.iter().zip(xr).map(|(a, b)| (a - b) * (a - b)))
                .sum();
            if dist2 == 0.0 {
                break;
            }
            let fc = objective(&cand);
            if fc <= fx - 1e-4 * dist2 / alpha {
                x = cand;
                fx = fc;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if accepted {
            // let the step grow back so progress is not throttled forever
            step = (alpha * 2.0).min(1e3);
        } else {
            // no improving step found: stationary to working precision
            converged = true;
            break;
        }

        if (it + 1) % opts.plateau_window == 0 {
            if window_start - fx < opts.tol {
                converged = true;
                break;
            }
            window_start = fx;
        }
    }

    PgOutcome {
        point: x,
        value: fx,
        converged,
        iterations: iters,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_basics() {
        let p = project_simplex(&[0.2, 0.3, 0.5]);
        for (a, b) in p.iter().zip([0.2, 0.3, 0.5]) {
            assert!((a - b).abs() < 1e-14);
        }
        let p = project_simplex(&[10.0, 0.0]);
        assert_eq!(p, vec![1.0, 0.0]);
        let p = project_simplex(&[-5.0, -5.0]);
        assert!((p[0] - 0.5).abs() < 1e-14);
        let total: f64 = project_simplex(&[0.1, 3.0, -2.0, 0.7]).iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn minimizes_quadratic_on_simplex() {
        // min ||p - t||^2 for a target t inside the simplex
        let target = [0.2, 0.5, 0.3];
        let obj = |x: &[Vec<f64>]| -> f64 {
            x[0].iter().zip(target).map(|(a, b)| (a - b) * (a - b)).sum()
        };
        let grad = |x: &[Vec<f64>]| -> Vec<Vec<f64>> {
            vec![x[0].iter().zip(target).map(|(a, b)| 2.0 * (a - b)).collect()]
        };
        let out = minimize(vec![vec![1.0, 0.0, 0.0]], obj, grad, &PgOptions::default());
        assert!(out.converged);
        for (a, b) in out.point[0].iter().zip(target) {
            assert!((a - b).abs() < 1e-6, "{a} vs {b}");
        }
    }
}
