use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "leafwave", version, about = "Leaf functions and exact Duffing solutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a leaf function (sleafh2, cleaf3, ...) or an integral (SL2, SLH2, CLH2).
    Eval,
    /// Print the pole constants zeta2, eta2 and pi2.
    Const,
    /// Regenerate a published table (T1..T17).
    Table,
    /// Emit the curve data behind a figure (1..30).
    Figure,
    /// Work with one exact solution (types VIII..XIV).
    Solution {
        #[command(subcommand)]
        action: SolutionAction,
    },
    /// Period lengths and windows of the XIII/XIV waves.
    Periods {
        #[arg(long, default_value_t = 6)]
        count: u32,
    },
    /// Exact and approximate extrema of XIII/XIV solutions.
    Extrema {
        #[arg(long, default_value_t = 6)]
        k: u32,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict to these check groups or names (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum SolutionAction {
    /// x, dx/dt and d2x/dt2 at --t or over --grid.
    Eval,
    /// Duffing coefficients delta, alpha, beta, F.
    Coeffs,
    /// Intervals of t on which the solution is finite.
    Domain,
    /// Closed-form x(0) and dx/dt(0).
    Initial,
    /// Largest normalized Duffing residual on an interior grid.
    Residual {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Flags shared by every subcommand. Each one can also come from the JSON
/// file given by `--config`, with the flag winning when both are set.
#[derive(Debug, Default, Clone, clap::Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Leaf function or integral name.
    #[arg(long, global = true)]
    pub kind: Option<String>,

    /// Solution type, roman (XIII) or arabic (13).
    #[arg(long = "type", global = true)]
    #[serde(rename = "type")]
    pub solution_type: Option<String>,

    #[arg(long = "A", global = true, allow_hyphen_values = true)]
    #[serde(rename = "A")]
    pub a: Option<f64>,

    #[arg(long, global = true, allow_hyphen_values = true)]
    pub omega: Option<f64>,

    #[arg(long, global = true, allow_hyphen_values = true)]
    pub phi: Option<f64>,

    #[arg(long = "B", global = true, allow_hyphen_values = true)]
    #[serde(rename = "B")]
    pub b: Option<f64>,

    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<f64>,

    /// start:stop:step
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<String>,

    /// Table (T1..T17) or figure (1..30) identifier.
    #[arg(long, global = true)]
    pub id: Option<String>,

    /// Printed digits, 1..=15 (default 9).
    #[arg(long, global = true)]
    pub precision: Option<usize>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Solver tolerance, used as both the absolute and relative tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,

    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,

    #[arg(long, global = true)]
    pub pole_guard: Option<f64>,
}

impl Flags {
    /// Fills unset flags from `--config`.
    pub fn merged(self) -> Result<Flags, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let file = load(&path)?;
        Ok(Flags {
            config: self.config,
            kind: self.kind.or(file.kind),
            solution_type: self.solution_type.or(file.solution_type),
            a: self.a.or(file.a),
            omega: self.omega.or(file.omega),
            phi: self.phi.or(file.phi),
            b: self.b.or(file.b),
            t: self.t.or(file.t),
            grid: self.grid.or(file.grid),
            id: self.id.or(file.id),
            precision: self.precision.or(file.precision),
            format: self.format.or(file.format),
            out: self.out.or(file.out),
            tol: self.tol.or(file.tol),
            abs_tol: self.abs_tol.or(file.abs_tol),
            rel_tol: self.rel_tol.or(file.rel_tol),
            pole_guard: self.pole_guard.or(file.pole_guard),
        })
    }
}

fn load(path: &Path) -> Result<Flags, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    // Numeric ids are accepted as well as strings.
    let mut value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
    if let Some(id) = value.get_mut("id") {
        if let Some(n) = id.as_u64() {
            *id = serde_json::Value::String(n.to_string());
        }
    }
    serde_json::from_value(value).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
}
