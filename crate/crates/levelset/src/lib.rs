//! Alpha-cut level representation of fuzzy sets.
//!
//! A fuzzy set is stored as a finite, nested, descending family of compact
//! cuts indexed by an [`AlphaGrid`] in `(0, 1]`. Between grid levels the cut
//! family is piecewise constant and right-continuous in alpha: `cut(alpha)`
//! is the stored cut at the smallest grid level `>= alpha`. This keeps
//! nestedness exact and turns every metric integral downstream into a
//! finite weighted sum over the grid.
//!
//! Elements whose 0-cut is unbounded (finite `L_p` extension norm but no
//! compact support) carry the `LpTail` flag; their 0-cut is never stored
//! and operations that need it fail with `UnboundedSupport`.

mod classify;
mod fuzzy;
mod grid;
mod io;

pub use classify::{classify, SpaceClass, SpaceLabel};
pub use fuzzy::{FuzzySet, SupportKind};
pub use grid::{node_weights, AlphaGrid, LEVEL_SNAP};
pub use io::{family_from_json, family_to_json, from_json, to_json, FamilyFile};

use setgeom::GeomError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LevelError {
    #[error("nestedness violated between levels {lower} and {upper}")]
    NestednessViolation { lower: f64, upper: f64 },
    #[error("the level-1 cut is empty")]
    EmptyTopCut,
    #[error("empty cut at level {0}")]
    EmptyCut(f64),
    #[error("operation needs the 0-cut but the support is unbounded")]
    UnboundedSupport,
    #[error("alpha {0} outside (0, 1]")]
    InvalidAlpha(f64),
    #[error("grid has {levels} levels but {cuts} cuts were supplied")]
    CutCountMismatch { levels: usize, cuts: usize },
    #[error("cut dimensions are not uniform")]
    MixedDims,
    #[error("invalid alpha grid: {0}")]
    BadGrid(String),
    #[error("geometry: {0}")]
    Geom(#[from] GeomError),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LevelError>;
