//! Simultaneous complex root finding (Aberth–Ehrlich iteration).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
}

impl ComplexRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RootConfig {
    pub tol: f64,
    pub max_iterations: usize,
}

impl RootConfig {
    pub fn with_tol(tol: f64) -> Self {
        RootConfig { tol, ..RootConfig::default() }
    }
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig { tol: 1e-12, max_iterations: 500 }
    }
}

/// Value and derivative by Horner's rule; `coeffs` ascending.
fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Backward error `|p(z)| / sum |c_k| |z|^k`.
pub fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0f64, |acc, c| acc * r + c.abs());
    horner(coeffs, z).0.norm() / scale
}

/// Roots of a square-free polynomial, each tagged with `multiplicity`.
///
/// Output is sorted by `(re, im)`, nonreal roots come in exact conjugate
/// pairs, and values within `tol` of zero are snapped to `0.0`.
pub fn complex_roots(p: &UniPoly, multiplicity: u32, config: RootConfig) -> Result<Vec<ComplexRoot>> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    let monic = p.monic();
    let coeffs = monic.to_f64_coeffs();

    // Factor out exact zero roots first; Aberth handles the rest.
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    let reduced = &coeffs[zeros..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    roots.extend(aberth(reduced, config)?);
    debug_assert_eq!(roots.len(), n);

    let mut out = pair_conjugates(roots, config.tol, multiplicity);
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

fn aberth(coeffs: &[f64], config: RootConfig) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)]);
    }
    // Cauchy bound on root moduli.
    let lead = coeffs[n].abs();
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs() / lead));
    // Offset angle keeps the start off the real axis and off symmetry lines.
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..config.max_iterations {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        let worst = z.iter().map(|&r| relative_residual(coeffs, r)).fold(0.0, f64::max);
        if max_step < 1e-16 || (worst < config.tol * 1e-3 && max_step < 1e-14) {
            break;
        }
    }
    // Newton polish.
    for r in &mut z {
        for _ in 0..3 {
            let (p, dp) = horner(coeffs, *r);
            if dp.norm() == 0.0 || p.norm() == 0.0 {
                break;
            }
            let next = *r - p / dp;
            if relative_residual(coeffs, next) < relative_residual(coeffs, *r) {
                *r = next;
            } else {
                break;
            }
        }
    }
    let worst = z.iter().map(|&r| relative_residual(coeffs, r)).fold(0.0, f64::max);
    if worst.is_nan() || worst >= config.tol {
        return Err(Error::NoConvergence { iterations: config.max_iterations, residual: worst });
    }
    Ok(z)
}

/// Replaces each approximate conjugate pair by an exact one, and rounds
/// near-real roots onto the real axis.
fn pair_conjugates(roots: Vec<Complex64>, tol: f64, multiplicity: u32) -> Vec<ComplexRoot> {
    let snap = |x: f64| if x.abs() < tol { 0.0 } else { x };
    let mut used = vec![false; roots.len()];
    let mut out = Vec::with_capacity(roots.len());
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let z = roots[i];
        if z.im.abs() < tol.sqrt() * 1e-2 * z.norm().max(1.0) {
            out.push(ComplexRoot { re: snap(z.re), im: 0.0, multiplicity });
            continue;
        }
        let partner = (0..roots.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (roots[a] - z.conj()).norm().total_cmp(&(roots[b] - z.conj()).norm()));
        let (re, im) = match partner {
            Some(j) => {
                used[j] = true;
                let w = roots[j];
                ((z.re + w.re) / 2.0, (z.im - w.im).abs() / 2.0)
            }
            None => (z.re, z.im.abs()),
        };
        let re = snap(re);
        out.push(ComplexRoot { re, im, multiplicity });
        out.push(ComplexRoot { re, im: -im, multiplicity });
    }
    out
}

/// `prod (t - r)^mult` with complex coefficients, ascending.
pub fn reconstruct(roots: &[ComplexRoot]) -> Vec<Complex64> {
    let mut acc = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        for _ in 0..r.multiplicity {
            let mut next = vec![Complex64::new(0.0, 0.0); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r.value();
            }
            acc = next;
        }
    }
    acc
}
