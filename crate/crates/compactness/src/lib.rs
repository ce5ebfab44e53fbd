//! Compactness diagnostics on finite families of fuzzy sets.
//!
//! Totally bounded sets under the `L_p` metric are exactly the uniformly
//! p-mean bounded, p-mean equi-left-continuous ones, so the diagnostics
//! here sample both conditions on a finite family: a shared bound on the
//! extension norm, an `(epsilon, delta)` table for the equi-continuity
//! modulus, greedy epsilon-nets as constructive totally-boundedness
//! evidence, the diagonal subsequence-limit construction, the
//! truncation-convergence equivalences, and the ball-residual test that
//! separates mass escaping to infinity from genuine relative compactness.
//!
//! Every "sequence" notion is a finite-prefix proxy: convergence means the
//! last-quarter tail is pairwise close. Reports say so rather than claim
//! the infinite statements.

mod diagnose;
mod diagonal;
mod family;
pub mod instances;
mod net;
mod relcompact;
mod trunceq;

pub use diagnose::{diagnose, CompactnessReport, EpsEntry, EquiWitness, Verdict};
pub use diagonal::{diagonal_limit, DiagonalResult};
pub use family::Family;
pub use net::{epsilon_net, Assignment, NetResult};
pub use relcompact::{relative_compactness_in_fb, BallResidualReport, ResidualRow};
pub use trunceq::{truncation_equivalence, SplitInfo, TruncEquivalenceReport, TruncRow};

use dpmetric::MetricError;
use levelset::LevelError;

/// Disclaimer attached to every report: closure conditions in the
/// completion are not decidable from finite data, only the two sampled
/// conditions and their finite proxies are reported.
pub const FINITE_PROXY_NOTE: &str =
    "finite-family proxy: sequence statements are checked on the last-quarter tail; \
     closure in the completion is not decidable from finite data";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CompactError {
    #[error("family must be nonempty")]
    EmptyFamily,
    #[error("family members must share one dimension")]
    MixedDims,
    #[error("per-level cut sequence fails the Cauchy test at level {0} for every tried subsequence")]
    NonConvergentLevel(f64),
    #[error("constructed limit is not nested at level {0} and the cuts cannot be intersected")]
    NonNestedLimit(f64),
    #[error("r grid must be positive and nonempty")]
    BadRadiusGrid,
    #[error("epsilon must be positive, got {0}")]
    BadEpsilon(f64),
    #[error("r_list must be decreasing inside (0, 1]")]
    BadRList,
    #[error("metric: {0}")]
    Metric(#[from] MetricError),
    #[error("level set: {0}")]
    Level(#[from] LevelError),
}

pub type Result<T> = std::result::Result<T, CompactError>;

/// Start index of the last-quarter tail (at least two elements when the
/// sequence has them).
pub(crate) fn tail_start(len: usize) -> usize {
    if len <= 2 {
        0
    } else {
        (3 * len / 4).min(len - 2)
    }
}
