//! The verification suite behind `leafwave verify`.
//!
//! Every check is a strategy registered by name. Golden-table checks compare
//! against the printed digits, except for cells listed in
//! [`golden::ERRATA`](crate::golden::ERRATA), which are compared against
//! their corrected values and reported as such.

use serde::Serialize;

use crate::analysis::{bracketed_root, parameter_sweep, periods, residual_sweep, verify_identities, IdentityId};
use crate::error::Result;
use crate::golden;
use crate::leaf::LeafEvaluator;
use crate::solutions::{SolutionSpec, SolutionType};
use crate::tables::{SampleTable, TableId, TableSource, TableSpec};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub group: &'static str,
    pub passed: bool,
    /// Worst deviation seen.
    pub measured: f64,
    /// Deviation allowed at the point where `measured` was taken.
    pub allowed: f64,
    pub detail: String,
    /// Printed cells that were compared against corrected values.
    pub errata: Vec<String>,
}

pub trait Check: Send + Sync {
    fn name(&self) -> String;
    fn group(&self) -> &'static str;
    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome>;
}

/// Tracks the worst deviation relative to its own allowance.
struct Worst {
    measured: f64,
    allowed: f64,
    at: String,
    failures: usize,
}

impl Worst {
    fn new() -> Self {
        Worst { measured: 0.0, allowed: f64::INFINITY, at: String::new(), failures: 0 }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN counts as a failure
    fn record(&mut self, measured: f64, allowed: f64, at: impl FnOnce() -> String) {
        if !(measured <= allowed) {
            self.failures += 1;
        }
        if self.at.is_empty() || ratio(measured, allowed) > ratio(self.measured, self.allowed) {
            self.measured = measured;
            self.allowed = allowed;
            self.at = at();
        }
    }

    fn outcome(self, name: String, group: &'static str, errata: Vec<String>) -> CheckOutcome {
        let detail = if self.failures > 0 {
            format!("{} value(s) out of tolerance, worst at {}", self.failures, self.at)
        } else if self.at.is_empty() {
            String::new()
        } else {
            format!("worst at {}", self.at)
        };
        CheckOutcome {
            name,
            group,
            passed: self.failures == 0,
            measured: self.measured,
            allowed: if self.allowed.is_finite() { self.allowed } else { 0.0 },
            detail,
            errata,
        }
    }
}

fn ratio(measured: f64, allowed: f64) -> f64 {
    if measured.is_nan() || measured > 0.0 && allowed == 0.0 {
        f64::INFINITY
    } else if measured == 0.0 {
        0.0
    } else {
        measured / allowed
    }
}

fn decimals(printed: &str) -> i32 {
    printed.split_once('.').map_or(0, |(_, d)| d.len() as i32)
}

struct Constants;

impl Check for Constants {
    fn name(&self) -> String {
        "constants".into()
    }

    fn group(&self) -> &'static str {
        "constants"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let c = ev.constants();
        let mut w = Worst::new();
        // The constants are printed truncated to five decimals.
        for (name, value, printed) in [("zeta2", c.zeta2, 1.85407), ("eta2", c.eta2, 1.31102)] {
            w.record((value - printed).abs(), 1e-5, || format!("{name} = {value}"));
        }
        let gap = (c.eta2 - 0.5 * c.pi2).abs();
        w.record(gap, 1e-10, || format!("|eta2 - pi2/2| = {gap:e}"));
        Ok(w.outcome(self.name(), self.group(), Vec::new()))
    }
}

struct GoldenTable(TableId);

impl GoldenTable {
    /// Allowed deviation for one printed cell.
    fn allowance(
        &self,
        spec: &TableSpec,
        t: Option<f64>,
        printed: &str,
        expected: f64,
        ev: &LeafEvaluator,
    ) -> Result<f64> {
        Ok(match spec.source {
            TableSource::Leaf => 10f64.powi(-decimals(printed)) * (1.0 + 1e-9),
            TableSource::Extrema { approximate: true, .. } => 10f64.powi(-decimals(printed)) * (1.0 + 1e-9),
            TableSource::Extrema { approximate: false, .. } => 1e-6,
            TableSource::Solution(s) => {
                let t = t.unwrap_or(f64::NAN);
                let domain = ev.solution_domain(&s)?;
                let near = domain.intervals.iter().flat_map(|iv| [iv.lo, iv.hi]).any(|e| (e - t).abs() < 0.05);
                (if near { 1e-4 } else { 1e-6 }) * expected.abs().max(f64::MIN_POSITIVE)
            }
        })
    }
}

impl Check for GoldenTable {
    fn name(&self) -> String {
        format!("table-{}", self.0)
    }

    fn group(&self) -> &'static str {
        "tables"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let spec = TableSpec::get(self.0);
        let table = SampleTable::build(self.0, ev)?;
        let printed = golden::printed(self.0.number()).unwrap_or(&[]);
        let mut w = Worst::new();
        let mut errata = Vec::new();
        let mut missing = 0;
        for prow in printed {
            let label = prow[0];
            let t = label.parse::<f64>().ok();
            let row = match t {
                Some(t) if !matches!(spec.source, TableSource::Extrema { .. }) => table.row_at(t),
                _ => table.row_labelled(label),
            };
            let Some(row) = row else {
                missing += 1;
                continue;
            };
            for (col, cell) in prow.iter().enumerate().skip(1) {
                if cell.is_empty() {
                    continue;
                }
                let Some(computed) = row.get(col).and_then(|c| c.as_f64()) else {
                    missing += 1;
                    continue;
                };
                let mut expected: f64 = cell.parse().unwrap_or(f64::NAN);
                if let Some(e) = golden::erratum(self.0.number(), label, col) {
                    errata.push(format!(
                        "{} row {label} col {col}: printed {} corrected {}",
                        self.0, e.printed, e.corrected
                    ));
                    expected = e.corrected;
                }
                let allowed = self.allowance(&spec, t, cell, expected, ev)?;
                let dev = (computed - expected).abs();
                w.record(if dev.is_nan() { f64::INFINITY } else { dev }, allowed, || {
                    format!("row {label} col {} ({computed} vs {expected})", table.header[col])
                });
            }
        }
        if missing > 0 {
            w.record(f64::INFINITY, 0.0, || format!("{missing} printed cell(s) have no computed counterpart"));
        }
        Ok(w.outcome(self.name(), self.group(), errata))
    }
}

struct Identity(IdentityId);

/// 50 points on (−η₂ + 0.05, η₂ − 0.05).
pub fn identity_grid(eta2: f64) -> Vec<f64> {
    let (lo, hi) = (-eta2 + 0.05, eta2 - 0.05);
    (0..50).map(|i| lo + (hi - lo) * i as f64 / 49.0).collect()
}

impl Check for Identity {
    fn name(&self) -> String {
        format!("identity-{}", self.0)
    }

    fn group(&self) -> &'static str {
        "identities"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let report = verify_identities(ev, &identity_grid(ev.constants().eta2))?;
        let mut w = Worst::new();
        if let Some(c) = report.get(self.0) {
            w.record(c.max_deviation, 1e-8, || format!("t = {} ({})", c.worst_t, self.0.statement()));
        }
        Ok(w.outcome(self.name(), self.group(), Vec::new()))
    }
}

struct Residual(SolutionType);

impl Check for Residual {
    fn name(&self) -> String {
        format!("residual-{}", self.0)
    }

    fn group(&self) -> &'static str {
        "residual"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let mut w = Worst::new();
        for spec in parameter_sweep(self.0) {
            let r = residual_sweep(&spec, 50, ev)?;
            w.record(r.max_normalized, 1e-6, || {
                format!("A={} omega={} phi={} B={:?}, t = {}", spec.a, spec.omega, spec.phi, spec.b, r.worst_t)
            });
        }
        Ok(w.outcome(self.name(), self.group(), Vec::new()))
    }
}

struct Domains;

impl Check for Domains {
    fn name(&self) -> String {
        "domains".into()
    }

    fn group(&self) -> &'static str {
        "domains"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let mut w = Worst::new();
        let mut errata = Vec::new();
        for end in golden::DOMAIN_ENDS {
            let spec = SolutionSpec::new(end.kind, 1.0, 1.0, end.phi, Some(end.b));
            let d = ev.solution_domain(&spec)?;
            let what = || format!("{} B={} phi={}", end.kind, end.b, end.phi);
            let Some(iv) = d.intervals.first() else {
                w.record(f64::INFINITY, 0.0, || format!("{}: empty domain", what()));
                continue;
            };
            let v = if end.upper { iv.hi } else { iv.lo };
            let expected = match end.corrected {
                Some(c) => {
                    errata.push(format!(
                        "{} {} end: printed {} corrected {c}",
                        what(),
                        if end.upper { "upper" } else { "lower" },
                        end.printed
                    ));
                    c
                }
                None => end.printed.parse().unwrap_or(f64::NAN),
            };
            // Printed ends may be truncated or rounded, so allow one unit either way.
            let allowed = 10f64.powi(-decimals(end.printed));
            w.record((v - expected).abs(), allowed, || format!("{}: {v} vs {}", what(), end.printed));
        }
        // The one-sided XI/XII examples are unbounded below.
        for kind in [SolutionType::XI, SolutionType::XII] {
            let d = ev.solution_domain(&SolutionSpec::new(kind, 1.0, 1.0, -1.0, Some(1.0)))?;
            let lo = d.intervals.first().map_or(f64::NAN, |iv| iv.lo);
            w.record(if lo == f64::NEG_INFINITY { 0.0 } else { f64::INFINITY }, 0.0, || {
                format!("{kind} B=1 phi=-1 lower end {lo}")
            });
        }
        Ok(w.outcome(self.name(), self.group(), errata))
    }
}

struct Periods(SolutionType);

impl Check for Periods {
    fn name(&self) -> String {
        format!("periods-{}", self.0)
    }

    fn group(&self) -> &'static str {
        "periods"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let spec = SolutionSpec::canonical(self.0, ev.constants());
        let mut w = Worst::new();
        for r in periods(self.0, 6)? {
            let (lo, hi) = r.window;
            if r.m > 1 {
                let gap = (r.length - (hi - lo)).abs();
                w.record(gap, 1e-12, || format!("T{} against its window", r.m));
            }
            let m4 = (4 * r.m) as f64;
            match self.0 {
                // Window ends are zeros of the XIII wave.
                SolutionType::XIII => {
                    let x = |t: f64| ev.solution_jet(&spec, t).map(|j| j.x);
                    let root = bracketed_root(&x, hi - 0.01, hi + 0.01)?;
                    w.record((root - hi).abs(), 1e-8, || format!("zero near ln {m4} at {root}"));
                }
                // Window ends are where the XIV wave touches e^t.
                _ => {
                    let x = ev.solution_jet(&spec, hi)?.x;
                    w.record((x - m4).abs() / m4, 1e-8, || format!("x(ln {m4}) = {x}"));
                }
            }
        }
        Ok(w.outcome(self.name(), self.group(), Vec::new()))
    }
}

struct ExtremumSlopes(SolutionType);

impl Check for ExtremumSlopes {
    fn name(&self) -> String {
        format!("extremum-slopes-{}", self.0)
    }

    fn group(&self) -> &'static str {
        "extrema"
    }

    fn run(&self, ev: &LeafEvaluator) -> Result<CheckOutcome> {
        let spec = SolutionSpec::canonical(self.0, ev.constants());
        let mut w = Worst::new();
        for r in crate::analysis::extrema(self.0, &spec, crate::tables::EXTREMA_ROWS, ev)? {
            w.record(r.slope.abs(), 1e-8, || format!("{} at t = {}", r.label(), r.t_exact));
        }
        Ok(w.outcome(self.name(), self.group(), Vec::new()))
    }
}

pub struct Suite {
    checks: Vec<Box<dyn Check>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.outcomes.len()
    }
}

impl Suite {
    pub fn standard() -> Suite {
        let mut s = Suite { checks: Vec::new() };
        s.register(Box::new(Constants));
        for id in TableId::all() {
            s.register(Box::new(GoldenTable(id)));
        }
        for id in IdentityId::ALL {
            s.register(Box::new(Identity(id)));
        }
        for kind in SolutionType::ALL {
            s.register(Box::new(Residual(kind)));
        }
        s.register(Box::new(Domains));
        for kind in [SolutionType::XIII, SolutionType::XIV] {
            s.register(Box::new(Periods(kind)));
            s.register(Box::new(ExtremumSlopes(kind)));
        }
        s
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<String> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn groups(&self) -> Vec<&'static str> {
        let mut g: Vec<&'static str> = self.checks.iter().map(|c| c.group()).collect();
        g.dedup();
        g
    }

    /// Runs checks whose group or name matches one of `only`, or all of them.
    pub fn run(&self, ev: &LeafEvaluator, only: &[String]) -> SuiteReport {
        let selected =
            self.checks.iter().filter(|c| only.is_empty() || only.iter().any(|o| o == c.group() || *o == c.name()));
        let outcomes = selected
            .map(|c| {
                c.run(ev).unwrap_or_else(|e| CheckOutcome {
                    name: c.name(),
                    group: c.group(),
                    passed: false,
                    measured: f64::INFINITY,
                    allowed: 0.0,
                    detail: e.to_string(),
                    errata: Vec::new(),
                })
            })
            .collect();
        SuiteReport { outcomes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names = Suite::standard().names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }
}
