//! Batch command-line surface over the slopekit library.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported with the
//! library's error name), 2 on a usage error. JSON output carries a
//! top-level `"schema": 1` field and the same payload values as the text
//! rendering.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use slopekit::orbits::{format_action, parse_action, Building};
use slopekit::splitting::SplitStatus;
use slopekit::surgery::SideStatus;
use slopekit::{
    arc_measure_vs_pi, check_split_slope, count_tight_solid_torus, default_mixed_torus_table,
    farey_adjacent, farey_path, is_mixed_torus, is_universally_tight, meridian_table,
    relative_euler_class, slice_euler_contribution, splitting_slopes, Direction, Error,
    MeridianVerdict, Sign, SlicePath, Slope, SplitSpec,
};

mod fixtures;

#[derive(Parser)]
#[command(name = "slopekit", version, about = "Exact slope calculus for convex tori")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print only the essential result lines.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Farey tessellation queries.
    Farey {
        #[command(subcommand)]
        command: FareyCommand,
    },
    /// Relative Euler class and tightness of a slice path.
    Euler(EulerArgs),
    /// Mixed-torus test at an interior interface of a slice path.
    Mixed(MixedArgs),
    /// Number of tight structures on a solid torus with the given
    /// boundary slope (meridian at slope 0).
    CountTight { slope: String },
    /// Tight splitting slopes of the normalized mixed-torus model.
    Split {
        /// The integer slope behind the second slice.
        #[arg(long, allow_hyphen_values = true)]
        s2: i64,
    },
    /// Meridian classification table for surgery on a twice-stabilized
    /// knot.
    SurgeryTable {
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
    },
    /// Reeb-orbit tables and building feasibility.
    Orbits {
        #[command(subcommand)]
        command: OrbitsCommand,
    },
    /// Recompute every golden value and diff against the stored file.
    Fixtures {
        /// Directory holding the golden file (default: the directory
        /// shipped with the crate, or $SLOPEKIT_FIXTURE_DIR).
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Rewrite the golden file instead of diffing.
        #[arg(long)]
        update: bool,
    },
}

#[derive(Subcommand)]
enum FareyCommand {
    /// Whether two slopes span an edge of the tessellation.
    Adjacent {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// A shortest Farey-adjacent chain between two slopes.
    Path {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Args)]
struct EulerArgs {
    /// Slice path in the form "s0,s1,...,sk ; ++-".
    #[arg(allow_hyphen_values = true)]
    path: String,
}

#[derive(Args)]
struct MixedArgs {
    /// Slice path in the form "s0,s1,...,sk ; ++-".
    #[arg(allow_hyphen_values = true)]
    path: String,
    /// Interior interface index (1-based between slices).
    #[arg(long)]
    interface: usize,
}

#[derive(Subcommand)]
enum OrbitsCommand {
    /// Print the default mixed-torus orbit table.
    Table,
    /// Enumerate buildings with the given total homology class and an
    /// action budget.
    Feasible {
        /// Target homology class "(x,y)".
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Strict upper bound for the total action, "p/q" or integer.
        #[arg(long)]
        budget: String,
        /// Comma-separated orbit names.
        #[arg(long)]
        pool: String,
        /// Extra orbit to inject, "name:(x,y):cz:action"; repeatable.
        #[arg(long = "inject")]
        inject: Vec<String>,
    },
    /// Scan the degenerations of a set of positive ends.
    Scan {
        /// Comma-separated orbit names (repeat a name for multiplicity).
        #[arg(long)]
        ends: String,
        /// Restrict intermediates to these orbit names.
        #[arg(long)]
        pool: Option<String>,
        /// Extra orbit to inject, "name:(x,y):cz:action"; repeatable.
        #[arg(long = "inject")]
        inject: Vec<String>,
    },
}

struct Rendered {
    payload: Value,
    lines: Vec<String>,
    /// Lines still shown under --quiet.
    essential: Vec<String>,
    /// False only when a golden diff failed; maps to exit code 1.
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_name = command_name(&cli.command);
    match run(&cli) {
        Ok(rendered) => {
            match cli.format {
                Format::Json => {
                    let envelope = json!({
                        "schema": 1,
                        "status": if rendered.ok { "ok" } else { "mismatch" },
                        "command": command_name,
                        "payload": rendered.payload,
                    });
                    println!("{envelope}");
                }
                Format::Text => {
                    let lines = if cli.quiet {
                        &rendered.essential
                    } else {
                        &rendered.lines
                    };
                    for line in lines {
                        println!("{line}");
                    }
                }
            }
            if rendered.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            match cli.format {
                Format::Json => {
                    let envelope = json!({
                        "schema": 1,
                        "status": "domain-error",
                        "command": command_name,
                        "error": err.name(),
                        "message": err.to_string(),
                    });
                    println!("{envelope}");
                }
                Format::Text => eprintln!("error: {}: {}", err.name(), err),
            }
            ExitCode::from(1)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Farey {
            command: FareyCommand::Adjacent { .. },
        } => "farey adjacent",
        Command::Farey {
            command: FareyCommand::Path { .. },
        } => "farey path",
        Command::Euler(_) => "euler",
        Command::Mixed(_) => "mixed",
        Command::CountTight { .. } => "count-tight",
        Command::Split { .. } => "split",
        Command::SurgeryTable { .. } => "surgery-table",
        Command::Orbits {
            command: OrbitsCommand::Table,
        } => "orbits table",
        Command::Orbits {
            command: OrbitsCommand::Feasible { .. },
        } => "orbits feasible",
        Command::Orbits {
            command: OrbitsCommand::Scan { .. },
        } => "orbits scan",
        Command::Fixtures { .. } => "fixtures",
    }
}

fn run(cli: &Cli) -> Result<Rendered, Error> {
    match &cli.command {
        Command::Farey { command } => run_farey(command),
        Command::Euler(args) => run_euler(args),
        Command::Mixed(args) => run_mixed(args),
        Command::CountTight { slope } => run_count_tight(slope),
        Command::Split { s2 } => run_split(*s2),
        Command::SurgeryTable { min, max } => run_surgery_table(*min, *max),
        Command::Orbits { command } => run_orbits(command),
        Command::Fixtures { dir, update } => fixtures::run(dir.as_deref(), *update),
    }
}

fn run_farey(command: &FareyCommand) -> Result<Rendered, Error> {
    match command {
        FareyCommand::Adjacent { a, b } => {
            let a: Slope = a.parse()?;
            let b: Slope = b.parse()?;
            let adjacent = farey_adjacent(&a, &b)?;
            let line = adjacent.to_string();
            Ok(Rendered {
                payload: json!({
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "adjacent": adjacent,
                }),
                lines: vec![line.clone()],
                essential: vec![line],
                ok: true,
            })
        }
        FareyCommand::Path { a, b } => {
            let a: Slope = a.parse()?;
            let b: Slope = b.parse()?;
            let path = farey_path(&a, &b)?;
            let rendered: Vec<String> = path.slopes().iter().map(|s| s.to_string()).collect();
            let line = rendered.join(" ");
            Ok(Rendered {
                payload: json!({
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "path": rendered,
                    "edges": path.edge_count(),
                }),
                lines: vec![line.clone()],
                essential: vec![line],
                ok: true,
            })
        }
    }
}

fn run_euler(args: &EulerArgs) -> Result<Rendered, Error> {
    let path: SlicePath = args.path.parse()?;
    let euler = relative_euler_class(&path);
    let tight = is_universally_tight(&path);
    let contributions: Vec<String> = path
        .slices()
        .iter()
        .map(|s| slice_euler_contribution(s).to_string())
        .collect();
    let lines = vec![
        format!("relative euler class: {euler}"),
        format!("universally tight: {tight}"),
        format!("per-slice contributions: {}", contributions.join(" ")),
    ];
    Ok(Rendered {
        payload: json!({
            "path": path.to_string(),
            "relative_euler_class": euler.to_string(),
            "universally_tight": tight,
            "contributions": contributions,
        }),
        essential: vec![lines[0].clone()],
        lines,
        ok: true,
    })
}

fn run_mixed(args: &MixedArgs) -> Result<Rendered, Error> {
    let path: SlicePath = args.path.parse()?;
    let mixed = is_mixed_torus(&path, args.interface)?;
    let line = mixed.to_string();
    Ok(Rendered {
        payload: json!({
            "path": path.to_string(),
            "interface": args.interface,
            "mixed": mixed,
        }),
        lines: vec![line.clone()],
        essential: vec![line],
        ok: true,
    })
}

fn run_count_tight(slope: &str) -> Result<Rendered, Error> {
    let slope: Slope = slope.parse()?;
    let count = count_tight_solid_torus(&slope)?;
    let line = count.to_string();
    Ok(Rendered {
        payload: json!({
            "slope": slope.to_string(),
            "count": count,
        }),
        lines: vec![line.clone()],
        essential: vec![line],
        ok: true,
    })
}

fn run_split(s2: i64) -> Result<Rendered, Error> {
    let spec = SplitSpec::from_integer(s2);
    let tight = splitting_slopes(&spec);

    // Scan a window wide enough to show both failure modes on each side.
    let lo = (-2).min(s2 - 2);
    let hi = 2.max(s2 + 2);
    let mut verdict_rows = Vec::new();
    let mut lines = Vec::new();
    for s in lo..=hi {
        let v = check_split_slope(&spec, Slope::from(s))?;
        let status = match v.status {
            SplitStatus::TightCandidate => "tight-candidate",
            SplitStatus::Overtwisted => "overtwisted",
        };
        let reason = v.reason.map(|r| r.as_str());
        lines.push(match reason {
            Some(r) => format!("s = {s}: {status} ({r})"),
            None => format!("s = {s}: {status}"),
        });
        verdict_rows.push(json!({
            "slope": v.slope.to_string(),
            "status": status,
            "reason": reason,
        }));
    }
    let summary = if tight.is_empty() {
        "no tight splitting slope exists".to_string()
    } else {
        format!(
            "tight splitting slopes: {}",
            tight
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    };
    lines.push(summary.clone());
    Ok(Rendered {
        payload: json!({
            "s2": s2,
            "verdicts": verdict_rows,
            "tight": tight,
        }),
        essential: vec![summary],
        lines,
        ok: true,
    })
}

fn meridian_row_json(v: &MeridianVerdict) -> Value {
    let side = |status: SideStatus, reason: Option<slopekit::ObstructionReason>| {
        json!({
            "status": match status {
                SideStatus::Tight => "tight",
                SideStatus::Overtwisted => "overtwisted",
            },
            "reason": reason.map(|r| r.as_str()),
        })
    };
    json!({
        "m": v.m,
        "meridian": v.meridian_class.to_string(),
        "m1": side(v.m1, v.m1_reason),
        "m2": side(v.m2, v.m2_reason),
        "identification": v.identification.as_ref().map(|(a, b)| json!([a, b])),
    })
}

fn run_surgery_table(min: i64, max: i64) -> Result<Rendered, Error> {
    let rows = meridian_table(min, max);
    let mut lines = Vec::new();
    let label_width = rows
        .iter()
        .map(|v| v.meridian_class.to_string().len())
        .max()
        .unwrap_or(0)
        .max("meridian".len());
    let cell = |status: SideStatus, label: Option<&String>| match (status, label) {
        (SideStatus::Overtwisted, _) => "X".to_string(),
        (SideStatus::Tight, Some(name)) => name.clone(),
        (SideStatus::Tight, None) => String::new(),
    };
    lines.push(format!("{:<label_width$}  {:<14} {}", "meridian", "M1", "M2"));
    for v in &rows {
        let (l1, l2) = match &v.identification {
            Some((a, b)) => (Some(a), Some(b)),
            None => (None, None),
        };
        lines.push(format!(
            "{:<label_width$}  {:<14} {}",
            v.meridian_class.to_string(),
            cell(v.m1, l1),
            cell(v.m2, l2),
        ));
    }
    Ok(Rendered {
        payload: json!({
            "min": min,
            "max": max,
            "rows": rows.iter().map(meridian_row_json).collect::<Vec<_>>(),
        }),
        essential: lines.clone(),
        lines,
        ok: true,
    })
}

fn parse_building(text: &str) -> Building {
    Building::from_names(text.split(',').map(str::trim).filter(|t| !t.is_empty()))
}

/// Parses an injected orbit "name:(x,y):cz:action".
fn parse_injection(text: &str) -> Result<slopekit::OrbitDatum, Error> {
    let err = || Error::ParseError {
        input: text.to_string(),
        expected: "an orbit \"name:(x,y):cz:action\"",
    };
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 4 {
        return Err(err());
    }
    let homology: slopekit::Vec2 = parts[1].parse()?;
    let cz = parts[2].parse::<i64>().map_err(|_| err())?;
    let action = parse_action(parts[3])?;
    slopekit::OrbitDatum::new(parts[0], homology, cz, action)
}

fn run_orbits(command: &OrbitsCommand) -> Result<Rendered, Error> {
    match command {
        OrbitsCommand::Table => {
            let table = default_mixed_torus_table();
            let text = table.to_string();
            let lines: Vec<String> = text.lines().map(String::from).collect();
            Ok(Rendered {
                payload: json!({
                    "orbits": table.orbits().iter().map(|o| json!({
                        "name": o.name,
                        "homology": o.homology.to_string(),
                        "cz": o.cz_index,
                        "action": format_action(&o.action()),
                    })).collect::<Vec<_>>(),
                    "constraints": table
                        .constraints()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>(),
                }),
                essential: lines.clone(),
                lines,
            })
        }
        OrbitsCommand::Feasible {
            target,
            budget,
            pool,
            inject,
        } => {
            let mut table = default_mixed_torus_table();
            for spec in inject {
                table.add_orbit(parse_injection(spec)?)?;
            }
            let target: slopekit::Vec2 = target.parse()?;
            let budget = parse_action(budget)?;
            let pool_names: Vec<&str> = pool.split(',').map(str::trim).collect();
            let found = slopekit::feasible_buildings(target, budget, &pool_names, &table)?;
            let mut lines: Vec<String> = found.iter().map(|b| b.to_string()).collect();
            if lines.is_empty() {
                lines.push("none".into());
            }
            Ok(Rendered {
                payload: json!({
                    "target": target.to_string(),
                    "budget": format_action(&budget),
                    "pool": pool_names,
                    "buildings": found.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                }),
                essential: lines.clone(),
                lines,
            })
        }
        OrbitsCommand::Scan { ends, pool, inject } => {
            let mut table = default_mixed_torus_table();
            for spec in inject {
                table.add_orbit(parse_injection(spec)?)?;
            }
            let ends = parse_building(ends);
            let pool_names: Option<Vec<&str>> =
                pool.as_ref().map(|p| p.split(',').map(str::trim).collect());
            let report = slopekit::breaking_scan(&table, &ends, pool_names.as_deref())?;
            let mut lines = Vec::new();
            if report.is_trivial() {
                lines.push("trivial scan: no positive ends".into());
            } else if report.survivors.is_empty() {
                lines.push("no degeneration is homology/action-consistent".into());
            } else {
                for c in &report.survivors {
                    lines.push(format!("{} => {}", c.broken, c.intermediates));
                }
            }
            Ok(Rendered {
                payload: json!({
                    "ends": report.ends.to_string(),
                    "trivial": report.is_trivial(),
                    "survivors": report.survivors.iter().map(|c| json!({
                        "broken": c.broken.to_string(),
                        "intermediates": c.intermediates.to_string(),
                    })).collect::<Vec<_>>(),
                }),
                essential: lines.clone(),
                lines,
            })
        }
    }
}
