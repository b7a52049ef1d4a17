use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cayley_core::algebra::{parse_rational, solve_fixedpoint, solve_ode, FixedPoint, MultiPoly, Rational};
use cayley_core::closedform::{p_poly, q_poly};
use cayley_core::harness::{self, Format, Ranges};
use cayley_core::parking::{self, ParkingFn};
use cayley_core::{forests, kary, ordered};

#[derive(Parser)]
#[command(name = "cayley", version, about = "Exact enumeration of trees, forests and parking functions by proper vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity suites and report both sides of every check.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_parser = whole)]
        n_max: Option<u32>,
        #[arg(long, value_parser = whole)]
        k: Option<u32>,
        #[arg(long, value_parser = whole)]
        c: Option<u32>,
        /// Series truncation order.
        #[arg(long, value_parser = whole)]
        order: Option<u32>,
        /// Number of rational sample points.
        #[arg(long, value_parser = whole)]
        points: Option<u32>,
        #[arg(long, default_value = "table")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count the labeled structures on [n].
    Count {
        #[arg(long, value_enum)]
        family: CountFamily,
        #[arg(long, value_parser = whole)]
        n: u32,
        #[arg(long, value_parser = whole)]
        k: Option<u32>,
        #[arg(long, value_parser = whole, default_value = "1")]
        c: u32,
    },
    /// Print a generating polynomial, from enumeration or the product formula.
    Poly {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long, value_parser = whole)]
        n: u32,
        #[arg(long, value_parser = whole)]
        k: Option<u32>,
        #[arg(long, value_parser = whole, default_value = "1")]
        c: u32,
    },
    /// Print series coefficients.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, value_parser = whole)]
        order: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u: Option<Rational>,
        #[arg(long, value_parser = whole)]
        k: Option<u32>,
        /// Print n! times each coefficient.
        #[arg(long)]
        egf: bool,
    },
    /// Simulate the parking process for one preference map.
    Park {
        /// Literal such as "n=3 c=1 prefs=1,1,2".
        literal: Option<String>,
        /// Comma-separated preferences, e.g. 1,1,2.
        #[arg(long, conflicts_with = "literal")]
        prefs: Option<String>,
        #[arg(long, value_parser = whole, default_value = "1", conflicts_with = "literal")]
        c: u32,
        /// Arrival order as a comma-separated permutation.
        #[arg(long)]
        order: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFamily {
    Forest,
    Kary,
    Colored,
    Parking,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFamily {
    /// P_n(a, b, c)
    P,
    /// Q_n(a, b)
    Q,
    Forest,
    Tree,
    Descent,
    Kary,
    KaryTriple,
    Colored,
    ColoredTree,
    ColoredTriple,
    Parking,
    Prime,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Forests,
    Kary,
    Ordered,
    Kcolor,
    Ode,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A non-negative integer, also accepted as a fraction that reduces to one.
fn whole(s: &str) -> Result<u32, String> {
    let r = rational(s)?;
    if !r.is_integer() {
        return Err(format!("`{s}` is not an integer"));
    }
    u32::try_from(r.to_integer()).map_err(|_| format!("`{s}` is out of range"))
}

fn list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| p.trim().parse::<u32>().with_context(|| format!("bad list entry `{p}`")))
        .collect()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(false)` when a verification record fails.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { suite, n_max, k, c, order, points, format, out } => {
            let format: Format = format.parse()?;
            let ranges = Ranges {
                n_max,
                k,
                c,
                order: order.map(|m| m as usize),
                points: points.map(|p| p as usize),
            };
            let records = harness::run_suite(&suite, &ranges)?;
            harness::emit(&records, format, out.as_deref())?;
            Ok(harness::all_passed(&records))
        }
        Command::Count { family, n, k, c } => {
            let count = match family {
                CountFamily::Forest => forests::enumerate_forests(n)?.count(),
                CountFamily::Kary => kary::enumerate_kary(n, k.unwrap_or(2))?.count(),
                CountFamily::Colored => ordered::enumerate_colored_forests(n, k.unwrap_or(1))?.count(),
                CountFamily::Parking => parking::enumerate_parking(n, c)?.count(),
            };
            println!("{count}");
            Ok(true)
        }
        Command::Poly { family, n, k, c } => {
            let poly: MultiPoly = match family {
                PolyFamily::P => p_poly(n),
                PolyFamily::Q => q_poly(n),
                PolyFamily::Forest => forests::forest_vertex_poly(n)?,
                PolyFamily::Tree => forests::tree_vertex_poly(n)?,
                PolyFamily::Descent => forests::forest_descent_poly(n)?,
                PolyFamily::Kary => kary::kary_prop_poly(n, k.unwrap_or(2))?,
                PolyFamily::KaryTriple => kary::kary_triple_poly(n, k.unwrap_or(2))?,
                PolyFamily::Colored => ordered::colored_prop_poly(n, k.unwrap_or(1))?,
                PolyFamily::ColoredTree => ordered::colored_tree_prop_poly(n, k.unwrap_or(1))?,
                PolyFamily::ColoredTriple => ordered::colored_triple_poly(n, k.unwrap_or(1))?,
                PolyFamily::Parking => parking::lucky_poly(n, c)?,
                PolyFamily::Prime => parking::prime_lucky_poly(n)?,
            };
            println!("{poly}");
            Ok(true)
        }
        Command::Series { kind, order, a, b, u, k, egf } => {
            let m = order as usize;
            let s = match kind {
                SeriesKind::Forests => solve_fixedpoint(FixedPoint::Forests, m)?,
                SeriesKind::Kary => solve_fixedpoint(FixedPoint::Kary(k.unwrap_or(2)), m)?,
                SeriesKind::Ordered => solve_fixedpoint(FixedPoint::Ordered, m)?,
                SeriesKind::Kcolor => solve_fixedpoint(FixedPoint::KColor(k.unwrap_or(1)), m)?,
                SeriesKind::Ode => {
                    let (Some(a), Some(b)) = (a, b) else {
                        bail!("--kind ode needs --a and --b");
                    };
                    solve_ode(&a, &b, &u.unwrap_or_else(|| Rational::from_integer(1.into())), m)
                }
            };
            if egf {
                let coeffs: Vec<String> = s.egf_coeffs().iter().map(ToString::to_string).collect();
                println!("{}", coeffs.join(", "));
            } else {
                println!("{s}");
            }
            Ok(true)
        }
        Command::Park { literal, prefs, c, order } => {
            let f: ParkingFn = match (literal, prefs) {
                (Some(lit), _) => lit.parse()?,
                (None, Some(p)) => ParkingFn::new(c, list(&p)?)?,
                (None, None) => bail!("give a literal or --prefs"),
            };
            let outcome = match order {
                Some(o) => parking::park_in_order(&f, &list(&o)?)?,
                None => parking::park(&f),
            };
            println!("{}", serde_json::to_string(&outcome)?);
            Ok(true)
        }
    }
}
