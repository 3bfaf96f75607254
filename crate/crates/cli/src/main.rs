//! Command-line front end for the curve classification toolkit. Every
//! subcommand prints a single report to stdout, JSON by default (canonical:
//! sorted keys, integers and strings only). Exit codes: 0 success, 1 input
//! error, 2 fixture drift from `selftest`.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use curveclass_core::bounds::{pi, pi_1, BoundsReport};
use curveclass_core::cohomology::{h_hirzebruch, h_quadric};
use curveclass_core::hilbert::{analyze, classification_table};
use curveclass_core::surfaces::{
    del_pezzo_classes, elliptic_cone_classes, rational_cone_classes, scroll_classes,
    ClassSolution,
};
use curveclass_core::zeroscheme::{h_ideal, FatPoint, PlanePoint, ZeroScheme};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::Value;

mod fixtures;
mod render;

#[derive(Parser)]
#[command(
    name = "curveclass",
    version,
    about = "Exact-arithmetic reports on curves of low degree in projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Genus bounds and Brill-Noether numbers for degree-d curves in P^r.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        /// Curve genus; without it the genus-dependent fields are null.
        #[arg(long, allow_negative_numbers = true)]
        g: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Line-bundle cohomology on a ruled surface.
    Cohom {
        #[command(subcommand)]
        surface: CohomCmd,
    },
    /// Divisor classes of given degree (and genus) on one surface family.
    Classes {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// Target genus; required for scroll and delpezzo, a filter for the
        /// cone families (which otherwise list every class of the degree).
        #[arg(long, allow_negative_numbers = true)]
        g: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Component report for one (d, g, r).
    Analyze {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classification rows for a whole genus range.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        /// Inclusive genus range, written 10..18 (10..=18 also accepted).
        #[arg(long, value_name = "LO..HI")]
        g_range: GenusRange,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Zero-dimensional schemes in P^2.
    Zscheme {
        #[command(subcommand)]
        cmd: ZschemeCmd,
    },
    /// Replay the golden fixture corpus; any drift exits 2.
    Selftest {
        /// Directory of *.json fixture files replacing the embedded corpus.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CohomCmd {
    /// On F_e, for the class a*h + b*f.
    Hirzebruch {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// On the smooth quadric surface, for the class of type (a, b).
    Quadric {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurfaceArg {
    /// Smooth rational normal scroll in P^r.
    Scroll,
    /// Cone over the rational normal curve of degree r-1.
    Cone,
    /// Cone over an elliptic normal curve of degree r.
    EllipticCone,
    /// Plane blown up at 9-r general points, anticanonically embedded.
    Delpezzo,
}

#[derive(Subcommand)]
enum ZschemeCmd {
    /// Cohomology of the degree-t ideal-sheaf twist of a fat-point scheme.
    H {
        /// JSON file: {"points": [{"coords": ["x", "y", "z"], "m": 2}, ...]}
        /// with exact rational coordinate strings; "m" defaults to 1.
        #[arg(long)]
        points: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Inclusive genus range for `table`.
#[derive(Clone, Copy)]
struct GenusRange {
    lo: i64,
    hi: i64,
}

impl FromStr for GenusRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a range like 10..18, got {s:?}"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let parse = |part: &str| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("range bound {part:?} is not an integer"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(GenusRange { lo, hi })
    }
}

#[derive(Deserialize)]
struct PointsFile {
    points: Vec<PointEntry>,
}

#[derive(Deserialize)]
struct PointEntry {
    coords: [String; 3],
    #[serde(default = "default_multiplicity")]
    m: i64,
}

fn default_multiplicity() -> i64 {
    1
}

fn load_scheme(path: &PathBuf) -> Result<ZeroScheme> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read points file {path:?}"))?;
    let file: PointsFile =
        serde_json::from_str(&text).with_context(|| format!("cannot parse {path:?}"))?;
    let mut fat = Vec::new();
    for entry in &file.points {
        let mut coords = entry.coords.iter().map(|c| {
            BigRational::from_str(c)
                .map_err(|e| anyhow!("coordinate {c:?} is not a rational number: {e}"))
        });
        let (x, y, z) = (
            coords.next().unwrap()?,
            coords.next().unwrap()?,
            coords.next().unwrap()?,
        );
        fat.push(FatPoint::new(PlanePoint::new(x, y, z)?, entry.m)?);
    }
    Ok(ZeroScheme::new(fat)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn emit(format: Format, v: &Value, md: String) {
    match format {
        Format::Json => print_json(v),
        Format::Md => print!("{md}"),
    }
}

fn classes_json(solutions: &[ClassSolution]) -> Value {
    Value::Array(solutions.iter().map(render::solution_json).collect())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Bounds { d, r, g, format } => match g {
            Some(g) => {
                let rep = BoundsReport::new(d, g, r)?;
                emit(format, &render::bounds_json(&rep), render::bounds_md(&rep));
            }
            None => {
                let pi = pi(d, r)?;
                let pi1 = if r == 4 || r == 5 {
                    Some(pi_1(d, r)?.value)
                } else {
                    None
                };
                emit(
                    format,
                    &render::bounds_without_genus_json(d, r, pi, pi1),
                    render::bounds_without_genus_md(d, r, pi, pi1),
                );
            }
        },
        Command::Cohom { surface } => {
            let (h, format) = match surface {
                CohomCmd::Hirzebruch { e, a, b, format } => {
                    if e < 0 {
                        return Err(anyhow!("Hirzebruch parameter e = {e} must be nonnegative"));
                    }
                    (h_hirzebruch(e, a, b), format)
                }
                CohomCmd::Quadric { a, b, format } => (h_quadric(a, b), format),
            };
            emit(format, &render::cohomology_json(&h), render::cohomology_md(&h));
        }
        Command::Classes {
            surface,
            d,
            g,
            r,
            format,
        } => {
            let need_g = || g.ok_or_else(|| anyhow!("--g is required for this surface family"));
            let mut solutions = match surface {
                SurfaceArg::Scroll => scroll_classes(d, need_g()?, r)?,
                SurfaceArg::Cone => rational_cone_classes(d, r)?,
                SurfaceArg::EllipticCone => elliptic_cone_classes(d, r)?,
                SurfaceArg::Delpezzo => {
                    let g = need_g()?;
                    del_pezzo_classes(d, g, g, r)?
                }
            };
            if let (Some(g), SurfaceArg::Cone | SurfaceArg::EllipticCone) = (g, surface) {
                solutions.retain(|s| s.genus == g);
            }
            emit(format, &classes_json(&solutions), render::classes_md(&solutions));
        }
        Command::Analyze { d, g, r, format } => {
            let row = analyze(d, g, r)?;
            emit(format, &render::analyze_json(&row), render::analyze_md(&row));
        }
        Command::Table {
            d,
            r,
            g_range,
            format,
        } => {
            let table = classification_table(d, r, g_range.lo..=g_range.hi)?;
            emit(format, &render::table_json(&table), render::table_md(&table));
        }
        Command::Zscheme {
            cmd: ZschemeCmd::H { points, t, format },
        } => {
            let z = load_scheme(&points)?;
            let (h0, h1) = h_ideal(&z, t);
            let (deg, rank) = (z.degree(), z.degree() - h1);
            emit(
                format,
                &render::zscheme_json(deg, h0, h1, rank),
                render::zscheme_md(deg, h0, h1, rank),
            );
        }
        Command::Selftest { fixtures } => {
            let outcome = fixtures::run(fixtures.as_deref())?;
            print!("{}", outcome.report);
            if outcome.failures > 0 {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
