use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ramcalc::commands::{self, HerbrandArgs, LocusArgs, NewtonArgs, Report};
use ramcalc::suite::{self, Golden};
use ramcalc::{input, plot, CliError};

#[derive(Parser)]
#[command(
    name = "ramcalc",
    version,
    about = "Exact profiles, Newton polygons and Herbrand functions"
)]
struct Cli {
    /// Worker threads for probe and subgroup sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton profile, dominant degrees and radiality probes of a disc series.
    Newton {
        series: PathBuf,
        /// File of translation centers to probe.
        #[arg(long)]
        probes: Option<PathBuf>,
        /// Report the multiplicity at this valuation (rational or `inf`).
        #[arg(long)]
        at: Option<String>,
        /// Radius of the locus `{multiplicity > bound}`, probed when `--probes` is given.
        #[arg(long)]
        bound: Option<u64>,
        /// Exit with 3 if a probe refutes radiality.
        #[arg(long)]
        expect_radial: bool,
    },
    /// Filtration, Herbrand's function and different of an inertia datum.
    Herbrand {
        group: PathBuf,
        inertia: PathBuf,
        /// Check transitivity over this normal subgroup, e.g. `0,3,6`.
        #[arg(long)]
        subgroup: Option<String>,
        /// Check transitivity over every normal subgroup.
        #[arg(long, conflicts_with = "subgroup")]
        all_normal: bool,
    },
    /// Profile of a tower of degree-p steps, listed from the base up.
    Tower {
        #[arg(long, env = "RAMCALC_PRIME")]
        p: u64,
        /// `tame:M`, `insep` or `sep:D`.
        #[arg(required = true)]
        steps: Vec<String>,
    },
    /// Multiplicity loci of a skeleton model.
    Locus {
        model: PathBuf,
        #[arg(long)]
        bound: u64,
        /// Membership query `anchor:depth`; repeatable.
        #[arg(long = "point")]
        points: Vec<String>,
        /// Add the point `anchor:depth` to the skeleton.
        #[arg(long)]
        enlarge: Option<String>,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Only checks whose id contains, or whose tags include, this word.
        #[arg(long)]
        filter: Option<String>,
        /// Read reference files from this directory instead of the built-in copies.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// One PASS/FAIL line per check instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Render a piecewise-monomial function.
    Plot {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn emit(report: Report) -> Result<(), CliError> {
    out(&format!(
        "{}\n",
        serde_json::to_string_pretty(&report.json).expect("json")
    ));
    report.failure.map_or(Ok(()), Err)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Newton {
            series,
            probes,
            at,
            bound,
            expect_radial,
        } => emit(commands::newton(
            &series,
            &NewtonArgs {
                probes: probes.as_deref(),
                at: at.as_deref(),
                bound,
                expect_radial,
            },
        )?),
        Command::Herbrand {
            group,
            inertia,
            subgroup,
            all_normal,
        } => {
            let subgroup = subgroup.as_deref().map(input::parse_elements).transpose()?;
            emit(commands::herbrand(
                &group,
                &inertia,
                &HerbrandArgs { subgroup, all_normal },
            )?)
        }
        Command::Tower { p, steps } => emit(commands::tower(p, &steps)?),
        Command::Locus {
            model,
            bound,
            points,
            enlarge,
        } => emit(commands::locus(&model, &LocusArgs { bound, points, enlarge })?),
        Command::Verify {
            filter,
            golden_dir,
            text,
        } => {
            let golden = match golden_dir {
                Some(dir) => Golden::from_dir(&dir)?,
                None => Golden::default(),
            };
            let summary = suite::run(filter.as_deref(), &golden);
            if text {
                let mut s = String::new();
                for c in &summary.checks {
                    s += &format!("{}\n", c.line());
                    for f in &c.failures {
                        s += &format!("    failure: {f}\n");
                    }
                }
                s += &format!("{} passed, {} failed\n", summary.passed, summary.failed);
                out(&s);
            } else {
                out(&format!("{}\n", serde_json::to_string_pretty(&summary).expect("json")));
            }
            let failed: Vec<&str> = summary.checks.iter().filter(|c| !c.pass).map(|c| c.id).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed.join(", ")))
            }
        }
        Command::Plot { function, format } => {
            let f = input::load_pm(&function)?;
            match format {
                Format::Ascii => out(&plot::ascii(&f)),
                Format::Svg => out(&plot::svg(&f)),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("ramcalc: {e}");
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ramcalc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
