//! Grid description and Fourier transform plans for the periodic torus.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial dimension; the desk-scale discretization is fixed to 2.
pub const DIM: usize = 2;

/// Default retained-mode fraction of the dealiasing rule.
pub const DEFAULT_DEALIAS_FRACTION: f64 = 2.0 / 3.0;

/// Description of the `[0, 2pi)^2` collocation grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Modes (and collocation points) per dimension; a power of two, >= 8.
    pub n: usize,
    /// Retained-mode fraction; modes with any `|k| > dealias_fraction*n/2`
    /// are zeroed by the dealias mask.
    pub dealias_fraction: f64,
}

impl GridSpec {
    pub fn new(n: usize, dealias_fraction: f64) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidConfig(format!(
                "grid size must be a power of two >= 8, got {n}"
            )));
        }
        // Beyond 2/3 the pseudo-spectral products would alias back into the
        // retained band.
        if !(dealias_fraction > 0.0 && dealias_fraction <= DEFAULT_DEALIAS_FRACTION + 1e-12) {
            return Err(Error::InvalidConfig(format!(
                "dealias fraction must lie in (0, 2/3], got {dealias_fraction}"
            )));
        }
        Ok(Self { n, dealias_fraction })
    }

    pub fn with_default_dealias(n: usize) -> Result<Self> {
        Self::new(n, DEFAULT_DEALIAS_FRACTION)
    }

    /// Domain period (fixed at `2*pi`).
    pub fn length(&self) -> f64 {
        2.0 * PI
    }

    /// Spatial dimension (fixed at 2).
    pub fn dim(&self) -> usize {
        DIM
    }

    /// Number of collocation points / retained spectral coefficients.
    pub fn node_count(&self) -> usize {
        self.n * self.n
    }

    /// Largest retained wavenumber component under the dealias rule.
    pub fn dealias_cutoff(&self) -> i64 {
        (self.dealias_fraction * self.n as f64 / 2.0).floor() as i64
    }

    /// Signed wavenumber for FFT bin `j`.
    pub fn wavenumber(&self, j: usize) -> i64 {
        if j < self.n / 2 {
            j as i64
        } else {
            j as i64 - self.n as i64
        }
    }

    /// Quadrature weight of one collocation node, `(2pi/n)^2`.
    pub fn node_weight(&self) -> f64 {
        let h = self.length() / self.n as f64;
        h * h
    }
}

/// FFT plans plus precomputed wavenumber tables for one grid.
///
/// All entries are immutable after construction, so a `Transform` can be
/// shared freely across threads.
pub struct Transform {
    pub grid: GridSpec,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    /// Signed wavenumber per FFT bin.
    pub k: Vec<f64>,
    /// `|k|^2` per (row, col) bin pair.
    pub k_sq: Vec<f64>,
    /// Dealias mask per bin pair (1.0 retained, 0.0 zeroed).
    pub mask: Vec<f64>,
    /// 1.0 on bins killed by the projection convention (mean and Nyquist).
    keep: Vec<f64>,
}

impl Transform {
    pub fn new(grid: GridSpec) -> Self {
        let n = grid.n;
        let mut planner = FftPlanner::<f64>::new();
        let forward = planner.plan_fft(n, FftDirection::Forward);
        let inverse = planner.plan_fft(n, FftDirection::Inverse);

        let k: Vec<f64> = (0..n).map(|j| grid.wavenumber(j) as f64).collect();
        let cutoff = grid.dealias_cutoff();
        let mut k_sq = vec![0.0; n * n];
        let mut mask = vec![0.0; n * n];
        let mut keep = vec![0.0; n * n];
        for i in 0..n {
            let ki = grid.wavenumber(i);
            for j in 0..n {
                let kj = grid.wavenumber(j);
                let idx = i * n + j;
                k_sq[idx] = (ki * ki + kj * kj) as f64;
                if ki.abs() <= cutoff && kj.abs() <= cutoff {
                    mask[idx] = 1.0;
                }
                // The Nyquist bin has no conjugate partner and the mean is
                // pinned to zero on H; both are excluded from the solenoidal
                // subspace.
                let nyq = -(n as i64) / 2;
                if !(ki == 0 && kj == 0) && ki != nyq && kj != nyq {
                    keep[idx] = 1.0;
                }
            }
        }
        Self { grid, forward, inverse, k, k_sq, mask, keep }
    }

    /// Forward 2D FFT, scaled so the output holds Fourier-series
    /// coefficients: `u(x) = sum_k uhat(k) exp(i k.x)`.
    pub fn to_spectral(&self, data: &mut [Complex64]) {
        let n = self.grid.n;
        debug_assert_eq!(data.len(), n * n);
        for row in data.chunks_exact_mut(n) {
            self.forward.process(row);
        }
        self.columns(data, &self.forward);
        let scale = 1.0 / (n * n) as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
    }

    /// Inverse 2D FFT of Fourier-series coefficients to collocation values.
    pub fn to_physical(&self, data: &mut [Complex64]) {
        let n = self.grid.n;
        debug_assert_eq!(data.len(), n * n);
        for row in data.chunks_exact_mut(n) {
            self.inverse.process(row);
        }
        self.columns(data, &self.inverse);
    }

    fn columns(&self, data: &mut [Complex64], fft: &Arc<dyn Fft<f64>>) {
        let n = self.grid.n;
        let mut col = vec![Complex64::default(); n];
        for j in 0..n {
            for i in 0..n {
                col[i] = data[i * n + j];
            }
            fft.process(&mut col);
            for i in 0..n {
                data[i * n + j] = col[i];
            }
        }
    }

    /// Collocation values of a spectral scalar (real part; the imaginary
    /// part of a conjugate-symmetric field is round-off).
    pub fn physical_values(&self, coeffs: &[Complex64]) -> Vec<f64> {
        let mut buf = coeffs.to_vec();
        self.to_physical(&mut buf);
        buf.iter().map(|c| c.re).collect()
    }

    /// Coefficients of real collocation values.
    pub fn spectral_coeffs(&self, values: &[f64]) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.to_spectral(&mut buf);
        buf
    }

    /// Zero the mean and Nyquist bins (the projection convention).
    pub fn restrict(&self, coeffs: &mut [Complex64]) {
        for (c, &w) in coeffs.iter_mut().zip(self.keep.iter()) {
            *c *= w;
        }
    }

    pub(crate) fn same_grid(&self, other: &GridSpec) -> Result<()> {
        if self.grid == *other {
            Ok(())
        } else {
            Err(Error::ConfigMismatch(format!(
                "grid {:?} does not match operator grid {:?}",
                other, self.grid
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(7, 2.0 / 3.0).is_err());
        assert!(GridSpec::new(12, 2.0 / 3.0).is_err());
        assert!(GridSpec::new(4, 2.0 / 3.0).is_err());
        assert!(GridSpec::new(32, 0.9).is_err());
        assert!(GridSpec::new(32, 2.0 / 3.0).is_ok());
    }

    #[test]
    fn dealias_cutoff_follows_two_thirds_rule() {
        let g = GridSpec::with_default_dealias(32).unwrap();
        assert_eq!(g.dealias_cutoff(), 10);
        let g = GridSpec::with_default_dealias(16).unwrap();
        assert_eq!(g.dealias_cutoff(), 5);
        // Strict separation keeps quadratic products alias-free: n - 2K > K.
        for n in [8usize, 16, 32, 64, 128] {
            let g = GridSpec::with_default_dealias(n).unwrap();
            let k = g.dealias_cutoff();
            assert!(n as i64 - 2 * k > k, "aliasing margin violated for n={n}");
        }
    }

    #[test]
    fn fft_round_trip_is_exact() {
        let grid = GridSpec::with_default_dealias(16).unwrap();
        let tf = Transform::new(grid);
        let vals: Vec<f64> = (0..256).map(|i| ((i * 37 % 101) as f64).sin()).collect();
        let coeffs = tf.spectral_coeffs(&vals);
        let back = tf.physical_values(&coeffs);
        for (a, b) in vals.iter().zip(back.iter()) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn single_mode_transforms_to_plane_wave() {
        let grid = GridSpec::with_default_dealias(16).unwrap();
        let tf = Transform::new(grid);
        // cos(3x + y) = (e^{i(3x+y)} + c.c.)/2 lives in bins (1,3) and (-1,-3).
        let n = grid.n;
        let vals: Vec<f64> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let x = 2.0 * PI * j as f64 / n as f64;
                let y = 2.0 * PI * i as f64 / n as f64;
                (3.0 * x + y).cos()
            })
            .collect();
        let coeffs = tf.spectral_coeffs(&vals);
        let at = |ky: i64, kx: i64| {
            let i = ky.rem_euclid(n as i64) as usize;
            let j = kx.rem_euclid(n as i64) as usize;
            coeffs[i * n + j]
        };
        assert!((at(1, 3) - Complex64::new(0.5, 0.0)).norm() < 1e-12);
        assert!((at(-1, -3) - Complex64::new(0.5, 0.0)).norm() < 1e-12);
        let energy: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        assert!((energy - 0.5).abs() < 1e-12);
    }
}
