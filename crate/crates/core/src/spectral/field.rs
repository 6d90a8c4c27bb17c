//! Divergence-free spectral velocity fields.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::grid::{GridSpec, Transform, DIM};
use crate::error::{Error, Result};

/// Filter length and viscosity of the model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorParams {
    /// Filter length `alpha` of the Helmholtz operator `I + alpha^2 A`.
    pub alpha: f64,
    /// Viscosity `nu`.
    pub nu: f64,
}

impl OperatorParams {
    pub fn new(nu: f64, alpha: f64) -> Result<Self> {
        if !(nu > 0.0) || !(alpha > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "viscosity and filter length must be positive, got nu={nu}, alpha={alpha}"
            )));
        }
        Ok(Self { alpha, nu })
    }
}

/// A velocity field stored as Fourier coefficients, one spectrum per
/// component.
///
/// Fields produced by the constructors and operators here live in the
/// discrete counterpart of the space `H`: divergence-free (`k . uhat(k) = 0`
/// for every mode), mean-zero (`uhat(0) = 0`) and conjugate-symmetric, so
/// collocation values are real.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    pub grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl SpectralField {
    pub fn zero(grid: GridSpec) -> Self {
        Self { grid, coeffs: vec![Complex64::default(); DIM * grid.node_count()] }
    }

    pub(crate) fn from_raw(grid: GridSpec, coeffs: Vec<Complex64>) -> Self {
        debug_assert_eq!(coeffs.len(), DIM * grid.node_count());
        Self { grid, coeffs }
    }

    pub fn comp(&self, c: usize) -> &[Complex64] {
        let m = self.grid.node_count();
        &self.coeffs[c * m..(c + 1) * m]
    }

    pub fn comp_mut(&mut self, c: usize) -> &mut [Complex64] {
        let m = self.grid.node_count();
        &mut self.coeffs[c * m..(c + 1) * m]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.scale(s);
        out
    }

    pub fn scale(&mut self, s: f64) {
        for c in &mut self.coeffs {
            *c *= s;
        }
    }

    /// `self += s * other`.
    pub fn axpy(&mut self, s: f64, other: &Self) {
        debug_assert_eq!(self.grid, other.grid);
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += s * b;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.axpy(1.0, other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.axpy(-1.0, other);
        out
    }

    /// Collocation values of both components, laid out `[comp][row][col]`.
    pub fn physical(&self, tf: &Transform) -> Vec<f64> {
        let mut out = Vec::with_capacity(DIM * self.grid.node_count());
        for c in 0..DIM {
            out.extend(tf.physical_values(self.comp(c)));
        }
        out
    }

    /// Largest divergence coefficient relative to the field size; zero for
    /// members of the discrete solenoidal subspace.
    pub fn divergence_residual(&self, tf: &Transform) -> f64 {
        let n = self.grid.n;
        let mut max_div: f64 = 0.0;
        let mut max_coeff: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let idx = i * n + j;
                let (ky, kx) = (tf.k[i], tf.k[j]);
                let div = kx * self.comp(0)[idx] + ky * self.comp(1)[idx];
                max_div = max_div.max(div.norm());
                max_coeff = max_coeff
                    .max(self.comp(0)[idx].norm())
                    .max(self.comp(1)[idx].norm());
            }
        }
        if max_coeff == 0.0 {
            0.0
        } else {
            max_div / max_coeff
        }
    }
}

/// Build a divergence-free field from a spectral streamfunction:
/// `u = (d psi / dy, -d psi / dx)`.
pub fn from_streamfunction(tf: &Transform, psi: &[Complex64]) -> SpectralField {
    let grid = tf.grid;
    let n = grid.n;
    let mut out = SpectralField::zero(grid);
    for i in 0..n {
        for j in 0..n {
            let idx = i * n + j;
            let (ky, kx) = (tf.k[i], tf.k[j]);
            let p = psi[idx];
            out.comp_mut(0)[idx] = Complex64::new(0.0, ky) * p;
            out.comp_mut(1)[idx] = -Complex64::new(0.0, kx) * p;
        }
    }
    for c in 0..DIM {
        tf.restrict(out.comp_mut(c));
    }
    out
}

/// Random smooth divergence-free field: white noise pushed through a
/// low-pass streamfunction, rescaled to the requested L2 norm.
pub fn random_div_free<R: Rng>(
    tf: &Transform,
    rng: &mut R,
    max_mode: i64,
    l2_norm: f64,
) -> SpectralField {
    let grid = tf.grid;
    let n = grid.n;
    let noise: Vec<f64> = (0..grid.node_count()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut psi = tf.spectral_coeffs(&noise);
    for i in 0..n {
        for j in 0..n {
            let (ky, kx) = (tf.k[i] as i64, tf.k[j] as i64);
            if ky.abs() > max_mode || kx.abs() > max_mode || (ky == 0 && kx == 0) {
                psi[i * n + j] = Complex64::default();
            }
        }
    }
    let mut u = from_streamfunction(tf, &psi);
    let norm = super::ops::Spectral::l2_of(&u);
    if norm > 0.0 {
        u.scale(l2_norm / norm);
    }
    u
}

/// Random field that is in general *not* divergence-free (low-pass filtered
/// componentwise noise); useful as a projection-test input.
pub fn random_general<R: Rng>(tf: &Transform, rng: &mut R, max_mode: i64) -> SpectralField {
    let grid = tf.grid;
    let n = grid.n;
    let mut out = SpectralField::zero(grid);
    for c in 0..DIM {
        let noise: Vec<f64> = (0..grid.node_count()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut coeffs = tf.spectral_coeffs(&noise);
        for i in 0..n {
            for j in 0..n {
                let (ky, kx) = (tf.k[i] as i64, tf.k[j] as i64);
                if ky.abs() > max_mode || kx.abs() > max_mode {
                    coeffs[i * n + j] = Complex64::default();
                }
            }
        }
        out.comp_mut(c).copy_from_slice(&coeffs);
    }
    out
}

/// The cellular vortex `a (cos x sin y, -sin x cos y)`; its momentum
/// nonlinearity is a pure gradient and projects to zero.
pub fn taylor_green(tf: &Transform, amplitude: f64) -> SpectralField {
    let grid = tf.grid;
    let n = grid.n;
    let step = grid.length() / n as f64;
    let mut ux = vec![0.0; grid.node_count()];
    let mut uy = vec![0.0; grid.node_count()];
    for i in 0..n {
        let y = i as f64 * step;
        for j in 0..n {
            let x = j as f64 * step;
            ux[i * n + j] = amplitude * x.cos() * y.sin();
            uy[i * n + j] = -amplitude * x.sin() * y.cos();
        }
    }
    let mut out = SpectralField::zero(grid);
    out.comp_mut(0).copy_from_slice(&tf.spectral_coeffs(&ux));
    out.comp_mut(1).copy_from_slice(&tf.spectral_coeffs(&uy));
    out
}

/// A single solenoidal Fourier mode: `u(x) = amp * d * cos(k.x)` with the
/// unit vector `d` perpendicular to `k`.
pub fn single_mode(tf: &Transform, k: (i64, i64), amplitude: f64) -> SpectralField {
    let grid = tf.grid;
    let n = grid.n;
    let (kx, ky) = k;
    assert!(kx != 0 || ky != 0, "zero mode is excluded from H");
    let norm = ((kx * kx + ky * ky) as f64).sqrt();
    let d = (-(ky as f64) / norm, kx as f64 / norm);
    let mut out = SpectralField::zero(grid);
    let half = Complex64::new(0.5 * amplitude, 0.0);
    for (sx, sy) in [(kx, ky), (-kx, -ky)] {
        let i = sy.rem_euclid(n as i64) as usize;
        let j = sx.rem_euclid(n as i64) as usize;
        out.comp_mut(0)[i * n + j] += half * d.0;
        out.comp_mut(1)[i * n + j] += half * d.1;
    }
    out
}
