//! The `d_p` metric on alpha-cut fuzzy sets and its companion functionals.
//!
//! `d_p(u,v) = (integral over (0,1] of H([u]_a, [v]_a)^p da)^(1/p)` with
//! `1 <= p < infinity`. Because cut families are step-constant in alpha,
//! every integral reduces to a weighted sum of level-wise Hausdorff values
//! over the merged grid of the two operands. Node weights implement a
//! trapezoid rule on the merged levels (see `levelset::node_weights`);
//! generators place paired guard levels at jump points, which makes the
//! rule exact for piecewise-linear integrands and second-order accurate
//! for smooth ones, while grid merging stays the single approximation
//! knob.
//!
//! Companions:
//! * `p_mean_modulus(u, h, p)` — the left-continuity modulus
//!   `(integral over [h,1] of H([u]_a, [u]_{a-h})^p da)^(1/p)`, with `h`
//!   snapped into the quadrature by refining the grid with shifted levels;
//! * `lp_extension_norm(u, p) = d_p(u, crisp origin)` — the uniform
//!   p-mean-bound quantity;
//! * `ball_residual(u, r, p)` — the distance from `u` joined with the
//!   crisp radius-`r` ball to that ball; zero exactly when the support
//!   fits inside the ball.

mod csv;
mod matrix;
mod metric;
mod modulus;
mod quad;

pub use csv::{eps_delta_csv, matrix_csv, modulus_csv, sig9};
pub use matrix::distance_matrix;
pub use metric::{ball_residual, dp_distance, dp_distance_detail, lp_extension_norm, DistDetail};
pub use modulus::{default_h_grid, delta_from_curve, modulus_report, p_mean_modulus, ModulusReport};
pub use quad::{merge_levels, trapezoid_weights};

use levelset::LevelError;
use setgeom::GeomError;

/// The exponent of the metric; `p >= 1` finite (Minkowski needs it, and the
/// paper's range is `1 <= p < infinity`, so infinity is rejected).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PNorm {
    p: f64,
}

impl PNorm {
    pub fn new(p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(MetricError::BadP(p));
        }
        Ok(PNorm { p })
    }

    pub fn get(&self) -> f64 {
        self.p
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MetricError {
    #[error("p must satisfy 1 <= p < infinity, got {0}")]
    BadP(f64),
    #[error("h must lie in [0, 1), got {0}")]
    BadH(f64),
    #[error("ball radius must be positive, got {0}")]
    BadRadius(f64),
    #[error("geometry: {0}")]
    Geom(#[from] GeomError),
    #[error("level set: {0}")]
    Level(#[from] LevelError),
}

pub type Result<T> = std::result::Result<T, MetricError>;
