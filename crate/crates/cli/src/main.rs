use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use crefl::catalog::{build_group, catalog_json, group_order, CatalogError, GroupId, GroupSpec};
use crefl::hyperplanes::{families_json, rank1_window, reflection_families};
use crefl::plot::window_svg;
use crefl::scalars::qi;
use crefl::steinberg::{check_counterexample, full_table_report, sweep, SteinbergError, SweepOptions, TableOptions};

/// Write to stdout, propagating errors such as a closed pipe.
macro_rules! outln {
    ($($t:tt)*) => { writeln!(std::io::stdout(), $($t)*)? };
}

macro_rules! out {
    ($($t:tt)*) => { write!(std::io::stdout(), $($t)*)? };
}

#[derive(Parser)]
#[command(name = "crefl", version, about = "Steinberg property checks for crystallographic complex reflection groups")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, lattice and expected verdict of a group
    Info { group: String },
    /// Reflecting hyperplane families; rank-one groups also list a window
    Reflections {
        group: String,
        #[arg(short = 'R', long = "window", default_value_t = 2)]
        window: i64,
    },
    /// Sweep a translation box for points off the arrangement
    Check {
        group: String,
        #[arg(short = 'B', long, default_value_t = 1)]
        bound: u32,
        /// Sample this many elements instead of the full grid
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Certify the tabled element of a group without the property
    Counterexample { group: String },
    /// Verdicts for every catalog row
    Table {
        #[arg(short = 'B', long, default_value_t = 1)]
        bound: u32,
        /// Sample size for grids too large to sweep in full
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Skip the second sweep at B+1 for rank ≤ 2 rows
        #[arg(long)]
        quick: bool,
    },
    /// SVG of lattice points and hyperplane points of a rank-one group
    Plot {
        group: String,
        #[arg(short = 'R', long = "window", default_value_t = 3)]
        window: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The catalog as JSON
    Catalog,
}

/// A finished command: output already printed, and whether the result
/// matched the tables.
type Verdict = Result<bool>;

fn load(name: &str) -> Result<GroupSpec> {
    let id: GroupId = name.parse()?;
    Ok(build_group(id)?)
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn info(w: &GroupSpec, as_json: bool) -> Verdict {
    let counterexample = w.counterexample.as_ref().map(|g| g.to_string());
    if as_json {
        print_json(&json!({
            "group": w.id,
            "linear_group_order": group_order(w.r(), w.p(), w.n()),
            "lattice": w.lattice.to_json(),
            "lattice_rank": w.lattice.rank(),
            "expected_steinberg": w.expected_steinberg,
            "counterexample": counterexample,
        }))?;
    } else {
        outln!("{}", w.name());
        outln!("  linear part   G({},{},{}) of order {}", w.r(), w.p(), w.n(), group_order(w.r(), w.p(), w.n()));
        for g in &w.linear_generators {
            outln!("  generator     {g}");
        }
        outln!("  lattice       {}", w.lattice);
        outln!("  lattice rank  {}", w.lattice.rank());
        outln!("  steinberg     {}", if w.expected_steinberg { "yes" } else { "no" });
        if let Some(g) = counterexample {
            outln!("  counterexample {g}");
        }
    }
    Ok(true)
}

fn reflections(w: &GroupSpec, radius: i64, as_json: bool) -> Verdict {
    let window = (w.n() == 1 && !w.lattice.uses_alpha())
        .then(|| rank1_window(w, &qi(radius)))
        .transpose()?;
    if as_json {
        let points = window.as_ref().map(|win| {
            json!({
                "radius": radius,
                "lattice": win.lattice_points.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "hyperplanes": win.hyperplane_points.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })
        });
        print_json(&json!({ "group": w.id, "families": families_json(w), "window": points }))?;
        return Ok(true);
    }
    for family in reflection_families(w) {
        for branch in &family.branches {
            outln!("{} = c, λ = {}, c ∈ {}", family.form, branch.eigenvalue, branch.constants);
        }
    }
    if let Some(win) = window {
        outln!("hyperplane points in [-{radius}, {radius}]²:");
        for x in &win.hyperplane_points {
            outln!("  {x}");
        }
    }
    Ok(true)
}

fn check(w: &GroupSpec, opts: SweepOptions, as_json: bool) -> Verdict {
    let report = sweep(w, &opts)?;
    let found = report.violation_count > 0;
    let matches = found != w.expected_steinberg;
    if as_json {
        print_json(&report)?;
    } else {
        outln!(
            "{}: {} of {} elements{}, B = {}",
            w.name(),
            report.examined,
            report.grid_size,
            if report.sampled { " (sampled)" } else { "" },
            opts.bound
        );
        outln!(
            "  no fixed point {}, reflection powers {}, on a hyperplane {}, violations {}",
            report.no_fixed_point, report.reflection_powers, report.on_hyperplane, report.violation_count
        );
        outln!(
            "  lemma witnesses {}, disagreements {}",
            report.witness_checks, report.witness_disagreements
        );
        for v in &report.violations {
            let g = v.element.to_map(w.ring)?;
            outln!("  violation at ({}) by {g}", v.fixed_point.join(", "));
        }
        outln!("  expected {}", if w.expected_steinberg { "no violations" } else { "violations" });
    }
    Ok(matches && report.witness_disagreements == 0 && report.engine_disagreements == 0)
}

fn counterexample(id: GroupId, as_json: bool) -> Verdict {
    let report = match check_counterexample(id) {
        Ok(report) => report,
        Err(SteinbergError::ExpectedPositiveGroup(name)) => {
            eprintln!("{name} has the Steinberg property; there is no counterexample");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if as_json {
        print_json(&report)?;
    } else {
        outln!("{}: pass", report.group);
        outln!("  fixed space dimension {}", report.fixed_space_dimension);
        outln!("  regular fixed point ({})", report.regular_fixed_point.join(", "));
        if let Some(distinct) = report.orbits_distinct {
            outln!("  coordinates in distinct orbits: {distinct}");
        }
    }
    Ok(report.passed)
}

fn table(opts: TableOptions, as_json: bool) -> Verdict {
    let report = full_table_report(&opts)?;
    if as_json {
        print_json(&report)?;
    } else {
        let mark = |b: bool| if b { "✓" } else { "✗" };
        for row in &report.rows {
            outln!(
                "{:<22} expected {} computed {} {}  {}",
                row.group.to_string(),
                mark(row.expected_steinberg),
                row.computed_steinberg.map_or("?", mark),
                if row.matches() { "ok" } else { "MISMATCH" },
                row.note
            );
        }
        outln!("{} rows, {} mismatches", report.rows.len(), report.mismatches);
    }
    Ok(report.mismatches == 0)
}

fn plot(w: &GroupSpec, radius: i64, out: Option<PathBuf>) -> Verdict {
    let window = rank1_window(w, &qi(radius))?;
    let svg = window_svg(&window, &w.name());
    match out {
        Some(path) => std::fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?,
        None => out!("{svg}"),
    }
    Ok(true)
}

fn run(cli: Cli) -> Verdict {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let as_json = cli.json;
    match cli.command {
        Command::Info { group } => info(&load(&group)?, as_json),
        Command::Reflections { group, window } => reflections(&load(&group)?, window, as_json),
        Command::Check { group, bound, budget, seed } => {
            let opts = SweepOptions { bound, budget, seed, ..SweepOptions::default() };
            check(&load(&group)?, opts, as_json)
        }
        Command::Counterexample { group } => counterexample(load(&group)?.id, as_json),
        Command::Table { bound, budget, quick } => {
            let opts = TableOptions {
                bound,
                extended_bound: (!quick).then_some(bound + 1),
                sample_budget: budget,
                ..TableOptions::default()
            };
            table(opts, as_json)
        }
        Command::Plot { group, window, out } => {
            if window < 0 {
                bail!("window radius must be nonnegative");
            }
            plot(&load(&group)?, window, out)
        }
        Command::Catalog => {
            print_json(&catalog_json())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<CatalogError>().is_some_and(|c| matches!(c, CatalogError::UnknownGroup(_)));
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
