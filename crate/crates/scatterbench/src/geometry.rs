//! Sample-domain grid, circular sensor ring, and background medium.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Uniform square grid of cell centers over the sample domain, centered at
/// the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainGrid {
    pub n_side: usize,
    /// Physical side length of the domain, meters.
    pub side_length: f64,
    /// Cell centers (x, y) in meters, row-major: index = row * n_side + col.
    pub cell_centers: Vec<(f64, f64)>,
    /// Area of one cell, m^2.
    pub cell_area: f64,
}

impl DomainGrid {
    pub fn new(n_side: usize, side_length: f64) -> Result<Self> {
        if n_side < 2 {
            return Err(Error::geometry("grid needs n_side >= 2"));
        }
        if !(side_length > 0.0) || !side_length.is_finite() {
            return Err(Error::geometry("grid side_length must be positive and finite"));
        }
        let h = side_length / n_side as f64;
        let mut cell_centers = Vec::with_capacity(n_side * n_side);
        for row in 0..n_side {
            for col in 0..n_side {
                // y runs top-down so the image row order matches the grid.
                let x = -side_length / 2.0 + (col as f64 + 0.5) * h;
                let y = side_length / 2.0 - (row as f64 + 0.5) * h;
                cell_centers.push((x, y));
            }
        }
        Ok(DomainGrid { n_side, side_length, cell_centers, cell_area: h * h })
    }

    pub fn n_cells(&self) -> usize {
        self.n_side * self.n_side
    }

    /// Side length of one cell, meters.
    pub fn cell_side(&self) -> f64 {
        self.side_length / self.n_side as f64
    }

    /// Distance from the origin to a domain corner.
    pub fn half_diagonal(&self) -> f64 {
        self.side_length * std::f64::consts::SQRT_2 / 2.0
    }
}

/// Transmitters and receivers uniformly spaced on a circle around the domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensorRing {
    pub n_tx: usize,
    pub n_rx: usize,
    pub radius: f64,
    pub tx_positions: Vec<(f64, f64)>,
    pub rx_positions: Vec<(f64, f64)>,
}

impl SensorRing {
    pub fn new(n_tx: usize, n_rx: usize, radius: f64) -> Result<Self> {
        if n_tx < 1 || n_rx < 1 {
            return Err(Error::geometry("need at least one transmitter and one receiver"));
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::geometry("sensor radius must be positive and finite"));
        }
        let ring = |n: usize| -> Vec<(f64, f64)> {
            (0..n)
                .map(|i| {
                    let theta = 2.0 * PI * i as f64 / n as f64;
                    (radius * theta.cos(), radius * theta.sin())
                })
                .collect()
        };
        Ok(SensorRing {
            n_tx,
            n_rx,
            radius,
            tx_positions: ring(n_tx),
            rx_positions: ring(n_rx),
        })
    }
}

/// Background medium: wavelength and relative permittivity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    wavelength: f64,
    background_permittivity: f64,
}

impl Medium {
    pub fn new(wavelength: f64, background_permittivity: f64) -> Result<Self> {
        if !(wavelength > 0.0) || !wavelength.is_finite() {
            return Err(Error::domain("wavelength must be positive"));
        }
        if !(background_permittivity > 0.0) || !background_permittivity.is_finite() {
            return Err(Error::domain("background permittivity must be positive"));
        }
        Ok(Medium { wavelength, background_permittivity })
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn background_permittivity(&self) -> f64 {
        self.background_permittivity
    }

    /// Free-space wavenumber k = 2*pi/lambda.
    pub fn wavenumber(&self) -> f64 {
        2.0 * PI / self.wavelength
    }

    /// Background wavenumber k_b = k * sqrt(eps_b).
    pub fn background_wavenumber(&self) -> f64 {
        self.wavenumber() * self.background_permittivity.sqrt()
    }
}

impl Default for Medium {
    /// 0.75 m wavelength in vacuum (the standard 2 m / 3 m desk geometry).
    fn default() -> Self {
        Medium { wavelength: 0.75, background_permittivity: 1.0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_centers_are_uniform_and_centered() {
        let g = DomainGrid::new(4, 2.0).unwrap();
        assert_eq!(g.cell_centers.len(), 16);
        assert!((g.cell_area - 0.25).abs() < 1e-15);
        // Symmetric around the origin.
        let (sx, sy) = g
            .cell_centers
            .iter()
            .fold((0.0, 0.0), |(ax, ay), (x, y)| (ax + x, ay + y));
        assert!(sx.abs() < 1e-12 && sy.abs() < 1e-12);
        // Corner cell centers sit half a cell inside the boundary.
        assert_eq!(g.cell_centers[0], (-0.75, 0.75));
        assert_eq!(g.cell_centers[15], (0.75, -0.75));
    }

    #[test]
    fn grid_rejects_degenerate() {
        assert!(DomainGrid::new(1, 2.0).is_err());
        assert!(DomainGrid::new(8, 0.0).is_err());
    }

    #[test]
    fn ring_positions_on_circle() {
        let s = SensorRing::new(16, 32, 3.0).unwrap();
        assert_eq!(s.tx_positions.len(), 16);
        assert_eq!(s.rx_positions.len(), 32);
        for &(x, y) in s.tx_positions.iter().chain(s.rx_positions.iter()) {
            assert!((x.hypot(y) - 3.0).abs() < 1e-12);
        }
        // Uniform angular spacing.
        let a0 = s.tx_positions[1].1.atan2(s.tx_positions[1].0);
        assert!((a0 - 2.0 * PI / 16.0).abs() < 1e-12);
    }

    #[test]
    fn medium_wavenumbers() {
        let m = Medium::new(0.75, 4.0).unwrap();
        assert!((m.wavenumber() - 2.0 * PI / 0.75).abs() < 1e-12);
        assert!((m.background_wavenumber() - 2.0 * m.wavenumber()).abs() < 1e-12);
    }
}
