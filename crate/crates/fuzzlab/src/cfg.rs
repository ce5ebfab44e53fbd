use crate::{CliError, Result};
use std::path::PathBuf;

/// Shared run configuration, filled from the command-line flags
/// `--p --grid --alpha-min --tol --out --seed` plus per-command flags
/// (`--eps`, `--n`, `--alpha`, `--r-max`, `--cauchy-tol`).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub p: f64,
    pub grid_size: usize,
    pub alpha_min: f64,
    pub tolerance: f64,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub eps_list: Vec<f64>,
    pub n: usize,
    pub alpha: f64,
    pub r_max: f64,
    pub cauchy_tol: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p: 1.0,
            grid_size: 1024,
            alpha_min: 1e-3,
            tolerance: 1e-9,
            output_dir: PathBuf::from("out"),
            seed: 42,
            eps_list: vec![0.5, 0.1, 0.02],
            n: 10,
            alpha: 0.5,
            r_max: 2.0,
            cauchy_tol: 1e-6,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_size < 2 {
            return Err(CliError::Validation(format!(
                "--grid must be >= 2, got {}",
                self.grid_size
            )));
        }
        if !(self.alpha_min > 0.0 && self.alpha_min < 1.0) {
            return Err(CliError::Validation(format!(
                "--alpha-min must lie in (0, 1), got {}",
                self.alpha_min
            )));
        }
        if !(self.tolerance > 0.0) {
            return Err(CliError::Validation(format!(
                "--tol must be positive, got {}",
                self.tolerance
            )));
        }
        if !(self.p >= 1.0 && self.p.is_finite()) {
            return Err(CliError::Validation(format!(
                "--p must satisfy 1 <= p < infinity, got {}",
                self.p
            )));
        }
        Ok(())
    }

    /// Parses flags out of the argument list, returning the positional
    /// arguments in order.
    pub fn parse(&mut self, args: &[String]) -> Result<Vec<String>> {
        let mut positional = Vec::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            let mut take = |name: &str| -> Result<String> {
                it.next()
                    .cloned()
                    .ok_or_else(|| CliError::Usage(format!("{name} needs a value")))
            };
            match arg.as_str() {
                "--p" => self.p = parse_f64(&take("--p")?)?,
                "--grid" => self.grid_size = parse_usize(&take("--grid")?)?,
                "--alpha-min" => self.alpha_min = parse_f64(&take("--alpha-min")?)?,
                "--tol" => self.tolerance = parse_f64(&take("--tol")?)?,
                "--out" => self.output_dir = PathBuf::from(take("--out")?),
                "--seed" => self.seed = parse_u64(&take("--seed")?)?,
                "--eps" => {
                    self.eps_list = take("--eps")?
                        .split(',')
                        .map(parse_f64)
                        .collect::<Result<Vec<_>>>()?
                }
                "--n" => self.n = parse_usize(&take("--n")?)?,
                "--alpha" => self.alpha = parse_f64(&take("--alpha")?)?,
                "--r-max" => self.r_max = parse_f64(&take("--r-max")?)?,
                "--cauchy-tol" => self.cauchy_tol = parse_f64(&take("--cauchy-tol")?)?,
                other if other.starts_with("--") => {
                    return Err(CliError::Usage(format!("unknown flag {other}")))
                }
                other => positional.push(other.to_string()),
            }
        }
        self.validate()?;
        Ok(positional)
    }
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("expected a number, got {s:?}")))
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("expected an integer, got {s:?}")))
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("expected an integer, got {s:?}")))
}
