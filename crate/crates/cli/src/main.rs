mod args;
mod render;

use std::process::ExitCode;

use clap::Parser;
use leafwave::analysis::{extrema, periods, residual_sweep};
use leafwave::checks::Suite;
use leafwave::figures::{FigureData, POINTS_PER_CURVE};
use leafwave::tables::{Cell, Grid, SampleTable, TableId};
use leafwave::{evaluator, parse_leaf_name, EvalConfig, IntegralKind, LeafEvaluator, SolutionSpec, SolutionType};
use serde_json::json;

use args::{Cli, Command, Flags, Format, SolutionAction};
use render::{render, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Eval(#[from] leafwave::Error),
    #[error("{0}")]
    Io(String),
}

/// What a command produced, and whether it counts as a failed verification.
struct Done {
    output: Output,
    failed: bool,
}

impl From<Output> for Done {
    fn from(output: Output) -> Self {
        Done { output, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let flags = cli.flags.merged()?;
    let precision = flags.precision.unwrap_or(9);
    if !(1..=15).contains(&precision) {
        return Err(CliError::Usage(format!("--precision must be in 1..=15, got {precision}")));
    }
    let format = flags.format.unwrap_or(Format::Csv);
    let ev = evaluator(&eval_config(&flags)?)?;
    let done = dispatch(&cli.command, &flags, &ev)?;
    let bytes = render(&done.output, format, precision)?;
    match &flags.out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes).map_err(|e| CliError::Io(e.to_string()))?;
        }
    }
    Ok(done.failed)
}

fn eval_config(flags: &Flags) -> Result<EvalConfig, CliError> {
    let mut cfg = EvalConfig::default();
    if let Some(tol) = flags.tol {
        cfg.abs_tol = tol;
        cfg.rel_tol = tol;
    }
    if let Some(v) = flags.abs_tol {
        cfg.abs_tol = v;
    }
    if let Some(v) = flags.rel_tol {
        cfg.rel_tol = v;
    }
    if let Some(v) = flags.pole_guard {
        cfg.pole_guard = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn dispatch(command: &Command, flags: &Flags, ev: &LeafEvaluator) -> Result<Done, CliError> {
    Ok(match command {
        Command::Eval => cmd_eval(flags, ev)?.into(),
        Command::Const => {
            let c = ev.constants();
            let rows = [("zeta2", c.zeta2), ("eta2", c.eta2), ("pi2", c.pi2)]
                .into_iter()
                .map(|(n, v)| vec![Cell::Text(n.into()), Cell::Num(v)])
                .collect();
            Output::sheet(["name", "value"], rows).into()
        }
        Command::Table => {
            let id: TableId = require(flags.id.as_deref(), "--id")?.parse()?;
            let table = SampleTable::build(id, ev)?;
            Output::Sheet { header: table.header, rows: table.rows }.into()
        }
        Command::Figure => cmd_figure(flags, ev)?.into(),
        Command::Solution { action } => cmd_solution(*action, flags, ev)?.into(),
        Command::Periods { count } => {
            let kind = solution_type(flags)?;
            let rows = periods(kind, *count)?
                .into_iter()
                .map(|p| vec![Cell::Num(p.m.into()), Cell::Num(p.length), Cell::Num(p.window.0), Cell::Num(p.window.1)])
                .collect();
            Output::sheet(["m", "length", "window_lo", "window_hi"], rows).into()
        }
        Command::Extrema { k } => {
            let kind = solution_type(flags)?;
            let spec = damped_spec(kind, flags, ev);
            let rows = extrema(kind, &spec, *k, ev)?
                .into_iter()
                .map(|r| {
                    vec![
                        Cell::Text(r.label()),
                        Cell::Num(r.t_exact),
                        Cell::Num(r.x_exact),
                        Cell::Num(r.t_approx),
                        Cell::Num(r.x_approx),
                        Cell::Num(r.slope),
                    ]
                })
                .collect();
            Output::sheet(["label", "t_exact", "x_exact", "t_approx", "x_approx", "slope"], rows).into()
        }
        Command::Verify { only } => cmd_verify(only, ev)?,
    })
}

fn require<'a, T: ?Sized>(v: Option<&'a T>, flag: &str) -> Result<&'a T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}

fn abscissae(flags: &Flags) -> Result<Option<Vec<f64>>, CliError> {
    match (flags.t, flags.grid.as_deref()) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --t or --grid, not both".into())),
        (Some(_), None) => Ok(None),
        (None, Some(g)) => Ok(Some(g.parse::<Grid>()?.points()?)),
        (None, None) => Err(CliError::Usage("--t or --grid is required".into())),
    }
}

enum Evaluand {
    Leaf(leafwave::LeafKind, leafwave::Basis),
    Integral(IntegralKind),
}

fn cmd_eval(flags: &Flags, ev: &LeafEvaluator) -> Result<Output, CliError> {
    let name = require(flags.kind.as_deref(), "--kind")?;
    let what = match parse_leaf_name(name) {
        Ok((kind, n)) => Evaluand::Leaf(kind, n),
        Err(leaf_err) => match name.parse::<IntegralKind>() {
            Ok(k) => Evaluand::Integral(k),
            Err(_) => return Err(leaf_err.into()),
        },
    };
    let at = |t: f64| -> Result<f64, CliError> {
        Ok(match what {
            Evaluand::Leaf(kind, n) => ev.value(kind, n, t)?,
            Evaluand::Integral(k) => ev.leaf_integral(k, t)?,
        })
    };
    let column = format!("{name}(t)");
    match abscissae(flags)? {
        None => Ok(Output::Value { name: column, value: at(flags.t.unwrap_or_default())? }),
        Some(ts) => {
            let rows =
                ts.into_iter().map(|t| Ok(vec![Cell::Num(t), Cell::Num(at(t)?)])).collect::<Result<_, CliError>>()?;
            Ok(Output::sheet(["t".to_string(), column], rows))
        }
    }
}

fn cmd_figure(flags: &Flags, ev: &LeafEvaluator) -> Result<Output, CliError> {
    let raw = require(flags.id.as_deref(), "--id")?;
    let id: u8 = raw
        .trim()
        .trim_start_matches(|c: char| c.is_ascii_alphabetic() || c == '.')
        .parse()
        .map_err(|_| CliError::Usage(format!("figure id '{raw}' is not a number in 1..=30")))?;
    let fig = FigureData::build(id, ev)?;
    let header: Vec<String> =
        fig.curves.iter().flat_map(|c| [format!("{} t", c.label), format!("{} x", c.label)]).collect();
    let rows = (0..POINTS_PER_CURVE)
        .map(|i| {
            fig.curves
                .iter()
                .flat_map(|c| match (c.t.get(i), c.x.get(i)) {
                    (Some(&t), Some(&x)) => [Cell::Num(t), Cell::Num(x)],
                    _ => [Cell::Empty, Cell::Empty],
                })
                .collect()
        })
        .collect();
    Ok(Output::Sheet { header, rows })
}

fn solution_type(flags: &Flags) -> Result<SolutionType, CliError> {
    Ok(require(flags.solution_type.as_deref(), "--type")?.parse()?)
}

fn solution_spec(flags: &Flags) -> Result<SolutionSpec, CliError> {
    let spec = SolutionSpec::new(
        solution_type(flags)?,
        flags.a.unwrap_or(1.0),
        flags.omega.unwrap_or(1.0),
        flags.phi.unwrap_or(0.0),
        flags.b,
    );
    spec.validate()?;
    Ok(spec)
}

/// Flags over the canonical configuration A=1, ω=1, φ=0, B=π₂/2.
fn damped_spec(kind: SolutionType, flags: &Flags, ev: &LeafEvaluator) -> SolutionSpec {
    let c = SolutionSpec::canonical(kind, ev.constants());
    SolutionSpec::new(
        kind,
        flags.a.unwrap_or(c.a),
        flags.omega.unwrap_or(c.omega),
        flags.phi.unwrap_or(c.phi),
        flags.b.or(c.b),
    )
}

fn cmd_solution(action: SolutionAction, flags: &Flags, ev: &LeafEvaluator) -> Result<Output, CliError> {
    let spec = solution_spec(flags)?;
    Ok(match action {
        SolutionAction::Eval => {
            let ts = match abscissae(flags)? {
                Some(ts) => ts,
                None => vec![flags.t.unwrap_or_default()],
            };
            let rows = ts
                .into_iter()
                .map(|t| {
                    let j = ev.solution_jet(&spec, t)?;
                    Ok(vec![Cell::Num(t), Cell::Num(j.x), Cell::Num(j.dx), Cell::Num(j.ddx)])
                })
                .collect::<Result<_, CliError>>()?;
            Output::sheet(["t", "x(t)", "dx/dt", "d2x/dt2"], rows)
        }
        SolutionAction::Coeffs => {
            let c = leafwave::coefficients(&spec)?;
            let row = vec![Cell::Num(c.delta), Cell::Num(c.alpha), Cell::Num(c.beta), Cell::Num(c.forcing)];
            Output::sheet(["delta", "alpha", "beta", "F"], vec![row])
        }
        SolutionAction::Domain => {
            let d = ev.solution_domain(&spec)?;
            let rows = d.intervals.iter().map(|iv| vec![Cell::Num(iv.lo), Cell::Num(iv.hi)]).collect();
            Output::sheet(["lo", "hi"], rows)
        }
        SolutionAction::Initial => {
            let (x0, v0) = ev.solution_initial_state(&spec)?;
            Output::sheet(["x0", "v0"], vec![vec![Cell::Num(x0), Cell::Num(v0)]])
        }
        SolutionAction::Residual { samples } => {
            let r = residual_sweep(&spec, samples, ev)?;
            let row = vec![Cell::Num(r.samples as f64), Cell::Num(r.max_normalized), Cell::Num(r.worst_t)];
            Output::sheet(["samples", "max_normalized", "worst_t"], vec![row])
        }
    })
}

fn cmd_verify(only: &[String], ev: &LeafEvaluator) -> Result<Done, CliError> {
    let suite = Suite::standard();
    let names = suite.names();
    let groups = suite.groups();
    for o in only {
        if !groups.contains(&o.as_str()) && !names.contains(o) {
            return Err(CliError::Usage(format!("--only '{o}' matches no check or group")));
        }
    }
    let report = suite.run(ev, only);
    let mut text = String::new();
    for o in &report.outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status} {:<28} measured {:.3e} allowed {:.3e}", o.name, o.measured, o.allowed));
        if !o.detail.is_empty() {
            text.push_str(&format!("  {}", o.detail));
        }
        text.push('\n');
        for e in &o.errata {
            text.push_str(&format!("     erratum: {e}\n"));
        }
    }
    let total = report.outcomes.len();
    text.push_str(&format!("{}/{total} checks passed\n", report.passed()));
    let json = json!({
        "passed": report.passed(),
        "total": total,
        "checks": report.outcomes,
    });
    Ok(Done { output: Output::Report { text, json }, failed: !report.all_passed() })
}
