//! Small deterministic minimizers: BFGS with finite-difference gradients and
//! golden-section search.

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Minimum {
    pub x: Vec<f64>,
    pub f: f64,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct BfgsOptions {
    pub max_iter: usize,
    pub grad_tol: f64,
    pub f_tol: f64,
    pub fd_step: f64,
    /// Largest coordinate change allowed in one line search.
    pub max_step: f64,
}

impl Default for BfgsOptions {
    fn default() -> Self {
        Self { max_iter: 200, grad_tol: 1e-8, f_tol: 1e-12, fd_step: 1e-6, max_step: 2.0 }
    }
}

fn gradient(f: &impl Fn(&[f64]) -> f64, x: &[f64], h: f64, buf: &mut Vec<f64>) -> Vec<f64> {
    buf.clear();
    buf.extend_from_slice(x);
    (0..x.len())
        .map(|i| {
            buf[i] = x[i] + h;
            let up = f(buf);
            buf[i] = x[i] - h;
            let down = f(buf);
            buf[i] = x[i];
            (up - down) / (2.0 * h)
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn bfgs(f: impl Fn(&[f64]) -> f64, x0: Vec<f64>, opts: BfgsOptions) -> Minimum {
    let k = x0.len();
    let mut x = x0;
    let mut fx = f(&x);
    if k == 0 || !fx.is_finite() {
        return Minimum { x, f: fx };
    }
    let mut scratch = Vec::with_capacity(k);
    let mut g = gradient(&f, &x, opts.fd_step, &mut scratch);
    let mut hinv = identity(k);
    let mut trial = vec![0.0; k];

    for _ in 0..opts.max_iter {
        if g.iter().all(|v| v.abs() < opts.grad_tol) {
            break;
        }
        let mut dir: Vec<f64> = (0..k).map(|i| -(0..k).map(|j| hinv[i][j] * g[j]).sum::<f64>()).collect();
        let mut slope = dot(&g, &dir);
        if !(slope < 0.0) {
            hinv = identity(k);
            dir = g.iter().map(|v| -v).collect();
            slope = dot(&g, &dir);
        }
        let largest = dir.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if largest > opts.max_step {
            let s = opts.max_step / largest;
            dir.iter_mut().for_each(|v| *v *= s);
            slope *= s;
        }

        let mut alpha = 1.0;
        let mut f_new = f64::INFINITY;
        while alpha > 1e-12 {
            for i in 0..k {
                trial[i] = x[i] + alpha * dir[i];
            }
            f_new = f(&trial);
            if f_new.is_finite() && f_new <= fx + 1e-4 * alpha * slope {
                break;
            }
            alpha *= 0.5;
        }
        if !(alpha > 1e-12) || !f_new.is_finite() {
            break;
        }
        let s: Vec<f64> = dir.iter().map(|v| alpha * v).collect();
        let g_new = gradient(&f, &trial, opts.fd_step, &mut scratch);
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let improvement = fx - f_new;
        x.copy_from_slice(&trial);
        fx = f_new;
        g = g_new;

        let sy = dot(&s, &y);
        if sy > 1e-12 {
            // H ← (I − ρ s yᵀ) H (I − ρ y sᵀ) + ρ s sᵀ
            let rho = 1.0 / sy;
            let hy: Vec<f64> = (0..k).map(|i| (0..k).map(|j| hinv[i][j] * y[j]).sum()).collect();
            let yhy = dot(&y, &hy);
            for i in 0..k {
                for j in 0..k {
                    hinv[i][j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
                }
            }
        }
        if improvement.abs() <= opts.f_tol * (fx.abs() + opts.f_tol) {
            break;
        }
    }
    Minimum { x, f: fx }
}

fn identity(k: usize) -> Vec<Vec<f64>> {
    (0..k).map(|i| (0..k).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

/// Golden-section search for a minimum of `f` on `[lo, hi]`; returns `(x, f(x))`.
pub(crate) fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > tol {
        if fc <= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfgs_rosenbrock() {
        let rosen = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = bfgs(rosen, vec![-1.2, 1.0], BfgsOptions { max_iter: 2000, ..Default::default() });
        assert!((m.x[0] - 1.0).abs() < 1e-4 && (m.x[1] - 1.0).abs() < 1e-4, "{:?}", m);
    }

    #[test]
    fn bfgs_quadratic_exact() {
        let q = |x: &[f64]| 3.0 * (x[0] - 2.0).powi(2) + (x[1] + 1.0).powi(2) + x[0] * x[1];
        let m = bfgs(q, vec![0.0, 0.0], BfgsOptions::default());
        // ∇ = 0: 6(x0-2) + x1 = 0, 2(x1+1) + x0 = 0
        let x1 = -4.0 / (2.0 - 1.0 / 6.0);
        let x0 = 2.0 - x1 / 6.0;
        assert!((m.x[0] - x0).abs() < 1e-6 && (m.x[1] - x1).abs() < 1e-6, "{:?} vs {x0} {x1}", m.x);
    }

    #[test]
    fn golden_parabola() {
        let (x, fx) = golden_section(|t| (t - 0.3).powi(2) + 1.0, 0.0, 0.5, 1e-8);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((fx - 1.0).abs() < 1e-10);
    }
}
