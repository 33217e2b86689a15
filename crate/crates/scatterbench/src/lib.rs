//! 2D inverse-scattering workbench.
//!
//! Simulates full-wave scattering measurements from permittivity phantoms
//! and reconstructs the permittivity contrast with several methods:
//! backprojection (`bp`), plain neural fields (`nf`), total-variation
//! regularized neural fields (`nf_tv`), and neural fields regularized by a
//! learned denoising score function (`nf_score_d`, `nf_score_s`).
//!
//! The crate is organized around the physical pipeline:
//!
//! - [`geometry`], [`special`], [`operators`]: the discrete scattering
//!   operators for the 2D scalar Helmholtz problem.
//! - [`forward`]: total-field solves and noisy measurement synthesis.
//! - [`phantoms`]: test objects and randomized training sets.
//! - [`autodiff`], [`nn`]: a reverse-mode tape and Fourier-feature MLPs.
//! - [`prior`]: denoiser / score-network training, TV and score losses,
//!   annealed Langevin sampling.
//! - [`recon`]: the reconstruction methods and the J-vs-E ablation.
//! - [`metrics`], [`config`], [`experiment`]: PSNR/SSIM, experiment
//!   configuration, and orchestration.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `scatterbench` binary for the command-line surface.

pub mod autodiff;
pub mod config;
pub mod error;
pub mod experiment;
pub mod forward;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod metrics;
pub mod nn;
pub mod operators;
pub mod phantoms;
pub mod prior;
pub mod recon;
pub mod special;
pub mod types;

pub use error::{Error, Result};
pub use geometry::{DomainGrid, Medium, SensorRing};
pub use types::{ComplexField, ContrastImage, FieldLayout};

/// Initialize the global worker pool, honoring `SCATTERBENCH_THREADS`.
///
/// Safe to call more than once; only the first call takes effect.
pub fn init_threads() {
    let threads = std::env::var("SCATTERBENCH_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
