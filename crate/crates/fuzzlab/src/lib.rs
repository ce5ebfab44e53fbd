//! Library half of the command-line harness: run configuration, a
//! deterministic PRNG for the seeded suites, generators for random step
//! families and star polygons, and the subcommand implementations.

pub mod cfg;
pub mod rng;
pub mod run;
pub mod starpoly;
pub mod stepgen;

pub use cfg::RunConfig;

/// Process exit codes: 0 success, 2 validation failure, 3 numeric
/// non-convergence.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    NonConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Validation(_) => 2,
            CliError::NonConvergence(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::NonConvergence(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("io: {e}"))
    }
}

impl From<levelset::LevelError> for CliError {
    fn from(e: levelset::LevelError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<dpmetric::MetricError> for CliError {
    fn from(e: dpmetric::MetricError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<setgeom::GeomError> for CliError {
    fn from(e: setgeom::GeomError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<compactness::CompactError> for CliError {
    fn from(e: compactness::CompactError) -> Self {
        match e {
            compactness::CompactError::NonConvergentLevel(_) => {
                CliError::NonConvergence(e.to_string())
            }
            other => CliError::Validation(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
