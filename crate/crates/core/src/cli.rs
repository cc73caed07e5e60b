//! `cayley` command line: runs check suites and renders reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::exterior::IndexSet;
use crate::golden::Golden;
use crate::report::{emit, CheckResult, Format, Report};
use crate::suites;

#[derive(Parser, Debug)]
#[command(name = "cayley", about = "Exact checks for the Cayley Grassmannian and its torus-fixed points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory of reference tables; missing files fall back to the
    /// bundled copies.
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Algebraic identity suites.
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
    },
    /// Torus-fixed coordinate points lying in X.
    FixedPoints,
    /// Jacobian rank at one fixed point, or at all of them.
    Smoothness {
        #[arg(long, value_parser = parse_point)]
        point: Option<IndexSet>,
    },
    /// Tangent weights under a one-parameter subgroup.
    Weights {
        #[arg(long, value_parser = parse_point)]
        point: Option<IndexSet>,
        #[arg(long, value_parser = parse_subgroup)]
        subgroup: Option<[i64; 3]>,
    },
    /// Positive-weight histogram over the smooth fixed points.
    Betti,
    /// Linear description of the singular locus on a chart.
    SingularLocus {
        #[arg(long, value_parser = parse_point)]
        chart: Option<IndexSet>,
    },
    /// 𝔤₂ root data and the stabilizer of ẽ0246.
    G2Stabilizer,
    /// Every suite.
    Report {
        #[arg(long, required = true)]
        all: bool,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum VerifySuite {
    Algebra,
    Forms,
    Torus,
    Sl2,
}

fn parse_point(s: &str) -> Result<IndexSet, String> {
    let p: IndexSet = s.parse().map_err(|e| format!("{e}"))?;
    if p.len() != 4 {
        return Err(format!("{s} is not a 4-subset of 0..7"));
    }
    Ok(p)
}

fn parse_subgroup(s: &str) -> Result<[i64; 3], String> {
    let v: Vec<i64> = s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| "expected a,b,c".to_string())
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("{}", <Cli as clap::CommandFactory>::command().render_usage());
    2
}

/// Run with the given arguments (including the program name) and return
/// the exit code: 0 all checks pass, 1 some check fails, 2 usage error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let golden = match &cli.common.golden {
        None => Golden::embedded(),
        Some(dir) => Golden::load_dir(dir),
    };
    let report = match golden {
        Ok(g) => match dispatch(&cli.command, &g) {
            Ok(r) => r,
            Err(msg) => return usage(&msg),
        },
        Err(e) => Report { checks: vec![CheckResult::compare("golden.load", "reference tables", e.to_string())], sections: Vec::new() },
    };
    let bytes = emit(&report, cli.common.format);
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| e.to_string()),
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return 1;
    }
    report.exit_code()
}

fn dispatch(cmd: &Command, g: &Golden) -> Result<Report, String> {
    Ok(match cmd {
        Command::Verify { suite } => match suite {
            VerifySuite::Algebra => suites::algebra(g),
            VerifySuite::Forms => suites::forms(g),
            VerifySuite::Torus => suites::torus(g),
            VerifySuite::Sl2 => suites::sl2(g),
        },
        Command::FixedPoints => suites::fixed_points(g),
        Command::Smoothness { point } => {
            if let Some(p) = point {
                require_fixed(*p)?;
            }
            suites::smoothness(g, *point)
        }
        Command::Weights { point, subgroup } => {
            if let Some(p) = point {
                require_fixed(*p)?;
            }
            suites::weights(g, *point, subgroup.unwrap_or(g.subgroup))?
        }
        Command::Betti => suites::betti(g),
        Command::SingularLocus { chart } => suites::singular_locus(g, chart.unwrap_or(g.sigma.chart)),
        Command::G2Stabilizer => suites::g2_stabilizer(g),
        Command::Report { .. } => suites::all(g),
    })
}

fn require_fixed(p: IndexSet) -> Result<(), String> {
    if crate::geometry::in_x(p) {
        Ok(())
    } else {
        Err(format!("ẽ{p} is not a torus-fixed point of X"))
    }
}
