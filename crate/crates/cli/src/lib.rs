//! Command dispatch for the `domchrom` binary.
//!
//! Exit codes: 0 success, 1 verification failure or infeasible instance,
//! 2 usage / input error, 3 size guard exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use domchrom::families::{self, FamilySpec};
use domchrom::invariants::{discrepancy, sigma, sigma_star, Embedding};
use domchrom::io::{self, RunResult, SweepRow};
use domchrom::{
    chi_d, chi_d_cycle_formula, chi_d_path_formula, sweep, verify, BaseGraph, DominationMode,
    FamilyError, InvariantError, SolveError, SweepConfig,
};

#[derive(Debug, Parser)]
#[command(
    name = "domchrom",
    version,
    about = "Exact dominator colorings of digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum dominator coloring of a digraph file.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check a coloring file against a digraph file; exit 1 if it fails.
    Verify {
        digraph: PathBuf,
        coloring: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Solve every orientation of a path, cycle or star.
    Sweep {
        family: SweepFamily,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Build a family member and its explicit optimal coloring.
    Family {
        #[arg(value_parser = FamilySpec::KINDS)]
        kind: String,
        params: Vec<u64>,
        /// Print the digraph file, or write it to the given path.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        emit_digraph: Option<Option<PathBuf>>,
        /// Print the coloring file, or write it to the given path.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        emit_witness: Option<Option<PathBuf>>,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form minimum over orientations.
    Formulas {
        family: FormulaFamily,
        #[command(flatten)]
        range: Range,
        #[arg(long)]
        json: bool,
    },
    /// sigma of a digraph file, or sigma* of a base graph file with --star.
    Invariants {
        #[arg(required_unless_present = "base", conflicts_with = "base")]
        file: Option<PathBuf>,
        #[arg(long, requires = "star")]
        base: Option<PathBuf>,
        #[arg(long, requires = "base")]
        star: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Discrepancy between a family member and its embedded sub-digraph.
    MineDiscrepancy {
        #[arg(long)]
        family: MineFamily,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, default_value_t = DominationMode::SinkExempt)]
    mode: DominationMode,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct Range {
    #[arg(long, conflicts_with_all = ["n_min", "n_max"], required_unless_present_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long, requires = "n_max")]
    n_min: Option<usize>,
    #[arg(long, requires = "n_min")]
    n_max: Option<usize>,
}

impl Range {
    fn bounds(&self) -> std::ops::RangeInclusive<usize> {
        match (self.n, self.n_min, self.n_max) {
            (Some(n), _, _) => n..=n,
            (_, Some(a), Some(b)) => a..=b,
            _ => unreachable!("clap enforces --n or --n-min/--n-max"),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepFamily {
    Path,
    Cycle,
    /// `--n` counts leaves.
    Star,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormulaFamily {
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MineFamily {
    TildeCycle,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Guard(String),
    Failed(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Failed(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Guard(m) | Failure::Failed(m) => m,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::TooManyVertices { .. }
            | SolveError::OracleTooLarge { .. }
            | SolveError::TooManyEdges { .. } => Failure::Guard(e.to_string()),
            SolveError::EmptyGraph => Failure::Usage(e.to_string()),
            SolveError::NoFeasibleOrientation => Failure::Failed(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Solve(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Solve(s) => s.into(),
            InvariantError::Infeasible => Failure::Failed(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve { file, common } => solve(&file, &common, out),
        Command::Verify {
            digraph,
            coloring,
            common,
        } => verify_cmd(&digraph, &coloring, &common, out),
        Command::Sweep {
            family,
            range,
            common,
            csv,
        } => sweep_cmd(family, &range, &common, csv, out),
        Command::Family {
            kind,
            params,
            emit_digraph,
            emit_witness,
            json,
        } => family_cmd(&kind, &params, emit_digraph, emit_witness, json, out),
        Command::Formulas {
            family,
            range,
            json,
        } => formulas(family, &range, json, out),
        Command::Invariants {
            file,
            base,
            star: _,
            common,
        } => match (file, base) {
            (Some(f), _) => invariants_digraph(&f, &common, out),
            (None, Some(b)) => invariants_base(&b, &common, out),
            (None, None) => unreachable!("clap requires a file or --base"),
        },
        Command::MineDiscrepancy {
            family: MineFamily::TildeCycle,
            n_min,
            n_max,
            common,
        } => mine(n_min, n_max, &common, out),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse<T>(
    path: &Path,
    f: impl Fn(&str) -> Result<T, domchrom::ParseError>,
) -> Result<T, Failure> {
    f(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Failed(format!("write failed: {e}")))
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn solve(file: &Path, common: &Common, out: &mut dyn Write) -> Outcome {
    let d = parse(file, io::parse_digraph)?;
    let start = Instant::now();
    let outcome = chi_d(&d, common.mode)?;
    let ms = elapsed_ms(start);
    if common.json {
        let result = RunResult::new(
            "solve",
            json!({
                "value": outcome.value,
                "witness": outcome.witness,
                "mode": common.mode,
                "nodes_explored": outcome.nodes_explored,
                "elapsed_ms": ms,
            }),
        )
        .input("file", file)
        .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else {
        match (outcome.value, &outcome.witness) {
            (Some(v), Some(w)) => write_out(
                out,
                &format!("value {v}\nwitness {}\n", join(w.assignment())),
            )?,
            _ => write_out(out, &format!("infeasible in {} mode\n", common.mode))?,
        }
    }
    Ok(0)
}

fn verify_cmd(digraph: &Path, coloring: &Path, common: &Common, out: &mut dyn Write) -> Outcome {
    let d = parse(digraph, io::parse_digraph)?;
    let c = parse(coloring, io::parse_coloring)?;
    let verdict = verify(&d, &c, common.mode).map_err(|e| Failure::Usage(e.to_string()))?;
    if common.json {
        let result = RunResult::new(
            "verify",
            json!({ "ok": verdict.ok, "violations": verdict.violations, "mode": common.mode }),
        )
        .input("digraph", digraph)
        .input("coloring", coloring)
        .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else if verdict.ok {
        write_out(out, "ok\n")?;
    } else {
        for v in &verdict.violations {
            let line = match v {
                domchrom::Violation::Properness { arc: (a, b) } => {
                    format!("improper arc {a} {b}\n")
                }
                domchrom::Violation::Domination { vertex } => {
                    format!("vertex {vertex} dominates no class\n")
                }
            };
            write_out(out, &line)?;
        }
    }
    Ok(if verdict.ok { 0 } else { 1 })
}

fn sweep_row(
    family: SweepFamily,
    n: usize,
    mode: DominationMode,
    config: &SweepConfig,
) -> Result<SweepRow, Failure> {
    let (name, base, formula) = match family {
        SweepFamily::Path => ("path", BaseGraph::path(n), chi_d_path_formula(n).ok()),
        SweepFamily::Cycle => (
            "cycle",
            BaseGraph::cycle(n).map_err(|e| Failure::Usage(e.to_string()))?,
            chi_d_cycle_formula(n).ok(),
        ),
        SweepFamily::Star => (
            "star",
            BaseGraph::star(n),
            families::chi_d_star_range(n).ok().map(|r| r.0),
        ),
    };
    if base.n() == 0 {
        return Err(Failure::Usage(format!("{name} needs n >= 1")));
    }
    // closed forms describe the sink-exempt minimum only
    let formula = formula.filter(|_| mode == DominationMode::SinkExempt);
    let start = Instant::now();
    let report = sweep(&base, mode, config)?;
    let elapsed_ms = elapsed_ms(start);
    Ok(SweepRow {
        family: name.to_string(),
        n,
        mode: mode.to_string(),
        orientations: report.total(),
        infeasible: report.infeasible,
        min: report.min_value,
        max: report.max_value,
        formula,
        matches_formula: formula.map(|f| report.min_value == Some(f)),
        argmin_codes: report.argmin().iter().map(ToString::to_string).collect(),
        argmin_overflow: report.argmin_overflow,
        distribution: report.distribution,
        elapsed_ms,
    })
}

fn sweep_cmd(
    family: SweepFamily,
    range: &Range,
    common: &Common,
    csv: bool,
    out: &mut dyn Write,
) -> Outcome {
    let config = SweepConfig::from_env();
    let rows = range
        .bounds()
        .map(|n| sweep_row(family, n, common.mode, &config))
        .collect::<Result<Vec<_>, _>>()?;
    if common.json {
        let result = RunResult::new("sweep", json!({ "rows": rows }))
            .input("family", format!("{family:?}").to_lowercase())
            .input("n_min", range.bounds().start())
            .input("n_max", range.bounds().end())
            .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else if csv {
        write_out(out, &io::emit_csv(&rows))?;
    } else {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        write_out(out, "family n orientations min max formula match\n")?;
        for r in &rows {
            let m = r.matches_formula.map_or("-".to_string(), |b| b.to_string());
            let line = format!(
                "{} {} {} {} {} {} {}\n",
                r.family,
                r.n,
                r.orientations,
                show(r.min),
                show(r.max),
                show(r.formula),
                m
            );
            write_out(out, &line)?;
        }
    }
    Ok(0)
}

fn emit_to(target: Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::Failed(format!("{}: {e}", path.display()))),
        None => write_out(out, text),
    }
}

fn family_cmd(
    kind: &str,
    params: &[u64],
    emit_digraph: Option<Option<PathBuf>>,
    emit_witness: Option<Option<PathBuf>>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let spec = FamilySpec::from_args(kind, params)?;
    let witness = families::witness(&spec)?;
    let (d, c) = (witness.digraph(), witness.coloring());
    let emitting = emit_digraph.is_some() || emit_witness.is_some();
    if let Some(target) = emit_digraph {
        emit_to(target, &io::emit_digraph(d), out)?;
    }
    if let Some(target) = emit_witness {
        emit_to(target, &io::emit_coloring(c), out)?;
    }
    if json {
        let formula = match spec {
            FamilySpec::Path { n } => chi_d_path_formula(n).ok(),
            FamilySpec::Cycle { n } => chi_d_cycle_formula(n).ok(),
            _ => None,
        };
        let result = RunResult::new(
            "family",
            json!({
                "value": witness.claimed_value(),
                "witness": c,
                "arcs": d.arcs(),
                "n": d.n(),
                "formula": formula,
                "matches_formula": formula.map(|f| f == witness.claimed_value()),
            }),
        )
        .input("kind", kind)
        .input("params", params);
        write_out(out, &io::emit_json(&result))?;
    } else if !emitting {
        let text = format!(
            "{kind} n={} arcs={} value {}\nwitness {}\n",
            d.n(),
            d.arcs().len(),
            witness.claimed_value(),
            join(c.assignment())
        );
        write_out(out, &text)?;
    }
    Ok(0)
}

fn formulas(family: FormulaFamily, range: &Range, json: bool, out: &mut dyn Write) -> Outcome {
    let f = |n| match family {
        FormulaFamily::Path => chi_d_path_formula(n),
        FormulaFamily::Cycle => chi_d_cycle_formula(n),
    };
    let rows = range
        .bounds()
        .map(|n| f(n).map(|v| (n, v)))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|&(n, v)| json!({ "n": n, "formula": v }))
            .collect();
        let result = RunResult::new("formulas", json!({ "rows": rows }))
            .input("family", format!("{family:?}").to_lowercase())
            .input("n_min", range.bounds().start())
            .input("n_max", range.bounds().end());
        write_out(out, &io::emit_json(&result))?;
    } else {
        write_out(out, "n formula\n")?;
        for (n, v) in rows {
            write_out(out, &format!("{n} {v}\n"))?;
        }
    }
    Ok(0)
}

fn invariants_digraph(file: &Path, common: &Common, out: &mut dyn Write) -> Outcome {
    let d = parse(file, io::parse_digraph)?;
    let r = sigma(&d, common.mode)?;
    if common.json {
        let result = RunResult::new("invariants", &r)
            .input("file", file)
            .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else {
        let text = format!(
            "sigma {}\nchi_d {}\nchi {}\n",
            r.sigma_definitional, r.chi_d_value, r.chi_value
        );
        write_out(out, &text)?;
    }
    Ok(0)
}

fn invariants_base(file: &Path, common: &Common, out: &mut dyn Write) -> Outcome {
    let base = parse(file, io::parse_base)?;
    let r = sigma_star(&base, common.mode, &SweepConfig::from_env())?;
    if common.json {
        let result = RunResult::new("invariants", &r)
            .input("base", file)
            .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else {
        let printed = r
            .printed_table_value
            .map_or("-".to_string(), |v| v.to_string());
        let text = format!(
            "sigma_star {}\norientation_spread {}\nprinted_table {}{}\nchi {}\nmin_chi_d {}\nmax_chi_d {}\n",
            r.sigma_star_definitional,
            r.orientation_spread,
            printed,
            if r.printed_table_value.is_some() && !r.printed_table_applies { " (exceptional n)" } else { "" },
            r.chi_value,
            r.min_chi_d,
            r.max_chi_d
        );
        write_out(out, &text)?;
    }
    Ok(0)
}

fn mine(n_min: usize, n_max: usize, common: &Common, out: &mut dyn Write) -> Outcome {
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let d = families::tilde_cycle(n)?;
        let h = families::directed_cycle(n)?;
        let delta = discrepancy(&d, &h, &Embedding::identity(n), common.mode)?;
        let value = |g| chi_d(g, common.mode).map(|o| o.value);
        rows.push((n, value(&d)?, value(&h)?, delta));
    }
    if common.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|&(n, d, h, delta)| json!({ "n": n, "chi_d_whole": d, "chi_d_sub": h, "discrepancy": delta }))
            .collect();
        let result = RunResult::new("mine-discrepancy", json!({ "rows": rows }))
            .input("family", "tilde-cycle")
            .input("n_min", n_min)
            .input("n_max", n_max)
            .input("mode", common.mode);
        write_out(out, &io::emit_json(&result))?;
    } else {
        write_out(out, "n chi_d_whole chi_d_sub discrepancy\n")?;
        for (n, d, h, delta) in rows {
            let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            write_out(out, &format!("{n} {} {} {delta}\n", show(d), show(h)))?;
        }
    }
    Ok(0)
}
