//! Field and image value types shared by the forward and inverse paths.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a [`ComplexField`] lives: on the domain grid or at the receivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldLayout {
    /// `n_side * n_side` values at cell centers, row-major.
    Domain,
    /// `n_rx` values, one per receiver.
    Receivers,
}

/// Complex-valued field sampled on the domain grid or at receivers.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField {
    pub values: Vec<Complex64>,
    pub layout: FieldLayout,
}

impl ComplexField {
    pub fn new(values: Vec<Complex64>, layout: FieldLayout) -> Result<Self> {
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::domain("complex field contains non-finite entries"));
        }
        Ok(ComplexField { values, layout })
    }

    pub fn zeros(len: usize, layout: FieldLayout) -> Self {
        ComplexField { values: vec![Complex64::ZERO; len], layout }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Euclidean norm over all entries.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn check_layout(&self, layout: FieldLayout, len: usize) -> Result<()> {
        if self.layout != layout || self.values.len() != len {
            return Err(Error::shape(format!(
                "expected {:?} field of length {}, got {:?} of length {}",
                layout,
                len,
                self.layout,
                self.values.len()
            )));
        }
        Ok(())
    }
}

/// Real-valued permittivity contrast on the domain grid (row-major).
///
/// Values are dimensionless and nonnegative: lossless, positive-contrast
/// objects only.
#[derive(Debug, Clone, PartialEq)]
pub struct ContrastImage {
    pub values: Vec<f64>,
    pub n_side: usize,
}

impl ContrastImage {
    pub fn new(values: Vec<f64>, n_side: usize) -> Result<Self> {
        if values.len() != n_side * n_side {
            return Err(Error::shape(format!(
                "contrast image: {} values for n_side {}",
                values.len(),
                n_side
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("contrast image contains non-finite values"));
        }
        if values.iter().any(|&v| v < 0.0) {
            return Err(Error::domain("contrast image contains negative values"));
        }
        Ok(ContrastImage { values, n_side })
    }

    pub fn zeros(n_side: usize) -> Self {
        ContrastImage { values: vec![0.0; n_side * n_side], n_side }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Value at (row, col).
    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.n_side + col]
    }
}
