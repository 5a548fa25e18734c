//! Regeneration of the published numerical tables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{extrema, Convexity};
use crate::error::{Error, Result};
use crate::integrals::IntegralKind;
use crate::leaf::{Basis, LeafEvaluator, LeafKind};
use crate::solutions::{SolutionSpec, SolutionType};

/// Evenly spaced abscissae `start, start+step, …` up to and including `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub const fn new(start: f64, stop: f64, step: f64) -> Self {
        Grid { start, stop, step }
    }

    pub fn points(&self) -> Result<Vec<f64>> {
        let span = self.stop - self.start;
        if !(self.step.is_finite() && self.step != 0.0 && span.is_finite()) || span * self.step < 0.0 {
            return Err(Error::InvalidSpec(format!("grid {self} is empty or unbounded")));
        }
        let count = (span / self.step + 1e-9).floor() as usize + 1;
        if count > 1_000_000 {
            return Err(Error::InvalidSpec(format!("grid {self} has {count} points")));
        }
        // Round away the drift of repeated float addition so 0.3 prints as 0.3.
        Ok((0..count)
            .map(|i| {
                let t = self.start + i as f64 * self.step;
                (t * 1e12).round() / 1e12
            })
            .collect())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidSpec(format!("grid '{s}' is not start:stop:step"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let v: Vec<f64> =
            parts.iter().map(|p| p.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad())?;
        let g = Grid::new(v[0], v[1], v[2]);
        g.points()?;
        Ok(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TableId(u8);

impl TableId {
    pub fn new(n: u8) -> Result<Self> {
        if (1..=17).contains(&n) {
            Ok(TableId(n))
        } else {
            Err(Error::UnknownId(format!("table T{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = TableId> {
        (1..=17).map(TableId)
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().trim_start_matches(['T', 't']);
        let n: u8 = digits.parse().map_err(|_| Error::UnknownId(format!("table '{s}'")))?;
        TableId::new(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TableSource {
    /// sleafh₂, cleafh₂ and their running integrals.
    Leaf,
    /// x, x³ and x'' of one solution.
    Solution(SolutionSpec),
    Extrema {
        kind: SolutionType,
        convexity: Convexity,
        approximate: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSpec {
    pub id: TableId,
    pub caption: &'static str,
    pub source: TableSource,
    pub grid: Option<Grid>,
}

const PAPER_EXP: (f64, f64, f64) = (1.0, 1.0, -1.0);

impl TableSpec {
    pub fn get(id: TableId) -> TableSpec {
        use SolutionType::*;
        let divergent = |kind| TableSource::Solution(SolutionSpec::new(kind, 1.0, 1.0, 0.0, None));
        let (a, omega, phi) = PAPER_EXP;
        let exp = |kind| TableSource::Solution(SolutionSpec::new(kind, a, omega, phi, Some(1.0)));
        let ext = |kind, convexity, approximate| TableSource::Extrema { kind, convexity, approximate };
        let full = Some(Grid::new(-1.3, 1.3, 0.1));
        let wide = Some(Grid::new(-1.0, 3.0, 0.2));
        let (caption, source, grid) = match id.0 {
            1 => ("sleafh2, cleafh2 and their integrals", TableSource::Leaf, Some(Grid::new(0.0, 1.8, 0.1))),
            2 => ("type VIII, A=1, omega=1, phi=0", divergent(VIII), full),
            3 => ("type IX, A=1, omega=1, phi=0", divergent(IX), full),
            4 => ("type X, A=1, omega=1, phi=0", divergent(X), full),
            5 => ("type XI, A=1, B=1, phi=-1, omega=1", exp(XI), Some(Grid::new(-1.3, 1.0, 0.1))),
            6 => ("type XII, A=1, B=1, phi=-1, omega=1", exp(XII), Some(Grid::new(-1.3, 0.8, 0.1))),
            7 => ("type XIII exact extrema, convex upward", ext(XIII, Convexity::Upward, false), None),
            8 => ("type XIII exact extrema, convex downward", ext(XIII, Convexity::Downward, false), None),
            9 => ("type XIII approximate extrema, convex upward", ext(XIII, Convexity::Upward, true), None),
            10 => ("type XIII approximate extrema, convex downward", ext(XIII, Convexity::Downward, true), None),
            11 => ("type XIII, A=1, B=1, phi=-1, omega=1", exp(XIII), wide),
            12 => ("type XIV exact extrema, convex upward", ext(XIV, Convexity::Upward, false), None),
            13 => ("type XIV exact extrema, convex downward", ext(XIV, Convexity::Downward, false), None),
            14 => ("type XIV approximate extrema, convex upward", ext(XIV, Convexity::Upward, true), None),
            15 => ("type XIV approximate extrema, convex downward", ext(XIV, Convexity::Downward, true), None),
            // Printed with the same caption and rows as table 11.
            16 => ("type XIII, A=1, B=1, phi=-1, omega=1 (duplicate of T11)", exp(XIII), wide),
            _ => ("type XIV, A=1, B=1, phi=-1, omega=1", exp(XIV), wide),
        };
        TableSpec { id, caption, source, grid }
    }
}

/// Number of extremum rows in each extrema table.
pub const EXTREMA_ROWS: u32 = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            _ => None,
        }
    }

    pub fn render(&self, precision: usize) -> String {
        match self {
            Cell::Num(v) => crate::format::number(*v, precision),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleTable {
    pub id: TableId,
    pub caption: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl SampleTable {
    pub fn build(id: TableId, ev: &LeafEvaluator) -> Result<SampleTable> {
        let spec = TableSpec::get(id);
        let header: Vec<String> = match spec.source {
            TableSource::Leaf => vec!["t", "sleafh2(t)", "cleafh2(t)", "int_0^t sleafh2(u)du", "int_0^t cleafh2(u)du"],
            TableSource::Solution(_) => vec!["t", "x(t)", "x(t)^3", "d2x/dt2"],
            TableSource::Extrema { .. } => vec!["label", "t", "x(t)"],
        }
        .into_iter()
        .map(String::from)
        .collect();
        let rows = match spec.source {
            TableSource::Leaf => leaf_rows(spec.grid.as_ref(), ev)?,
            TableSource::Solution(s) => solution_rows(&s, spec.grid.as_ref(), ev)?,
            TableSource::Extrema { kind, convexity, approximate } => extrema_rows(kind, convexity, approximate, ev)?,
        };
        Ok(SampleTable { id, caption: spec.caption.to_string(), header, rows })
    }

    /// The numeric row whose first column equals `t`.
    pub fn row_at(&self, t: f64) -> Option<&[Cell]> {
        self.rows.iter().find(|r| r[0].as_f64().is_some_and(|v| (v - t).abs() < 1e-9)).map(|r| r.as_slice())
    }

    pub fn row_labelled(&self, label: &str) -> Option<&[Cell]> {
        self.rows.iter().find(|r| matches!(&r[0], Cell::Text(s) if s == label)).map(|r| r.as_slice())
    }
}

fn grid_points(grid: Option<&Grid>) -> Result<Vec<f64>> {
    grid.ok_or_else(|| Error::InvalidSpec("table has no grid".into()))?.points()
}

fn leaf_rows(grid: Option<&Grid>, ev: &LeafEvaluator) -> Result<Vec<Vec<Cell>>> {
    let guard = ev.config().pole_guard;
    let reach = |kind| -> Result<f64> { Ok(ev.pole(kind, Basis::TWO)?.map_or(f64::INFINITY, |p| p.abscissa - guard)) };
    let (s_reach, c_reach) = (reach(LeafKind::Sleafh)?, reach(LeafKind::Cleafh)?);
    grid_points(grid)?
        .into_iter()
        .map(|t| {
            let mut row = vec![Cell::Num(t)];
            for (kind, reach) in [(LeafKind::Sleafh, s_reach), (LeafKind::Cleafh, c_reach)] {
                row.push(if t.abs() < reach { Cell::Num(ev.value(kind, Basis::TWO, t)?) } else { Cell::Empty });
            }
            for (kind, reach) in [(IntegralKind::SLH2, s_reach), (IntegralKind::CLH2, c_reach)] {
                row.push(if t.abs() < reach { Cell::Num(ev.leaf_integral(kind, t)?) } else { Cell::Empty });
            }
            Ok(row)
        })
        .collect()
}

fn solution_rows(spec: &SolutionSpec, grid: Option<&Grid>, ev: &LeafEvaluator) -> Result<Vec<Vec<Cell>>> {
    grid_points(grid)?
        .into_iter()
        .map(|t| {
            let j = ev.solution_jet(spec, t)?;
            Ok(vec![Cell::Num(t), Cell::Num(j.x), Cell::Num(j.x.powi(3)), Cell::Num(j.ddx)])
        })
        .collect()
}

fn extrema_rows(
    kind: SolutionType,
    convexity: Convexity,
    approximate: bool,
    ev: &LeafEvaluator,
) -> Result<Vec<Vec<Cell>>> {
    let spec = SolutionSpec::canonical(kind, ev.constants());
    Ok(extrema(kind, &spec, EXTREMA_ROWS, ev)?
        .into_iter()
        .filter(|r| r.kind == convexity)
        .map(|r| {
            let (t, x) = if approximate { (r.t_approx, r.x_approx) } else { (r.t_exact, r.x_exact) };
            vec![Cell::Text(r.label()), Cell::Num(t), Cell::Num(x)]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: Grid = "-1:1:0.5".parse().unwrap();
        assert_eq!(g.points().unwrap(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(Grid::new(0.0, 1.8, 0.1).points().unwrap().len(), 19);
        assert!("1:0:0.1".parse::<Grid>().is_err());
        assert!("1:2".parse::<Grid>().is_err());
    }

    #[test]
    fn table_ids() {
        assert_eq!("T7".parse::<TableId>().unwrap().number(), 7);
        assert_eq!("12".parse::<TableId>().unwrap().to_string(), "T12");
        assert!("T18".parse::<TableId>().is_err());
    }
}
