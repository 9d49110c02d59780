//! Uniform periodic grid on the 2pi-cube.

use crate::error::{Error, Result};

/// N^3 collocation grid on [0, 2pi)^3 with integer wavenumbers
/// `{-N/2+1, ..., N/2}` per dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid3 {
    n: usize,
}

impl Grid3 {
    pub const LENGTH: f64 = std::f64::consts::TAU;

    pub fn new(n: usize) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::BadGridSize { n });
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        Self::LENGTH / self.n as f64
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(3)
    }

    pub fn volume(&self) -> f64 {
        Self::LENGTH.powi(3)
    }

    /// Coordinate of grid index `i` along any axis.
    pub fn coord(&self, i: usize) -> f64 {
        i as f64 * self.spacing()
    }

    /// Integer wavenumber of FFT bin `i`: `0,1,..,N/2,-N/2+1,..,-1`.
    pub fn wavenumber(&self, i: usize) -> i64 {
        let n = self.n as i64;
        let i = i as i64;
        if i <= n / 2 {
            i
        } else {
            i - n
        }
    }

    pub fn wavenumbers(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.wavenumber(i) as f64).collect()
    }

    /// Two-thirds-rule cutoff: modes with any `|k_i| > floor(N/3)` are
    /// removed after products. `3 * cutoff < N`, so aliases of retained
    /// quadratic products never land inside the retained band.
    pub fn dealias_cutoff(&self) -> i64 {
        (self.n / 3) as i64
    }

    pub fn keeps_mode(&self, kx: i64, ky: i64, kz: i64) -> bool {
        let c = self.dealias_cutoff();
        kx.abs() <= c && ky.abs() <= c && kz.abs() <= c
    }
}
