//! Command-line front end. Every subcommand prints deterministic,
//! machine-readable output: canonical polynomial text, JSON with big
//! integers as decimal strings, or line-streamed CSV. Exit codes: 0 success,
//! 2 validation/domain error, 3 enumeration-ceiling refusal.

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use orbitzeta::analysis::{
    hilbert_sd_simplex, igusa_check, natural_boundary_report, reduced_series, BoundaryType,
};
use orbitzeta::carlitz::{
    conjecture_scan, cpoly_enum, cpoly_macmahon, descent_poly, funeq_check, unitary_factor,
};
use orbitzeta::orbit::{
    asymptotic_fit, dirichlet_coeffs, euler_factor, euler_funeq_check, shifted_euler_factor,
};
use orbitzeta::render;
use orbitzeta::words::DEFAULT_ENUMERATION_CEILING;
use orbitzeta::{Error, Partition};

#[derive(Parser)]
#[command(
    name = "orbitzeta",
    version,
    about = "Exact orbit Dirichlet series of products of maps with Z^r-subgroup orbit growth, \
             through descent/major-index statistics on multiset permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has a natural default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Ceiling on |S_lambda| for enumeration-backed operations
    /// (overrides the ORBITZETA_CEILING environment variable; default 10^8)
    #[arg(long, global = true)]
    ceiling: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Sum x^des q^maj over every multiset permutation
    Enum,
    /// Expand the generating identity for products of q-binomials
    Macmahon,
    /// Run both and print their difference
    BothWithDiff,
}

#[derive(Subcommand)]
enum Command {
    /// The joint (des, maj) generating polynomial C_lambda(x,q) of the
    /// multiset permutations S_lambda
    Cpoly {
        /// Partition: comma-separated parts ("3,3,1") or rectangle "r^m"
        partition: String,
        #[arg(long, value_enum, default_value_t = Method::Macmahon)]
        method: Method,
    },

    /// The descent polynomial C_lambda(x,1) (for two parts, the closed-form
    /// sum of products of binomial coefficients)
    DescentPoly { partition: String },

    /// Functional equation of C_lambda under (x,q) -> (x^-1,q^-1), or of the
    /// local Euler factor under p -> p^-1 with --euler
    Funeq {
        partition: String,
        /// Check the Euler-factor identity instead of the polynomial one
        #[arg(long)]
        euler: bool,
        /// Prime for the Euler-factor variant
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },

    /// Charney-Davis quantity C_lambda(-1,1) and the prescribed unitary
    /// factor 1 + x q^{rm/2} when it applies
    Unitary { partition: String },

    /// Scan C_{(l1,l2)}(-1,1) for zeros over all l1 > l2 >= 1 with
    /// l1 + l2 <= max-N (the nonvanishing conjecture predicts none)
    ScanConjecture {
        #[arg(long = "max-N", visible_alias = "max-n")]
        max_n: u32,
    },

    /// Closed-orbit counts O(1..n-max) of T_lambda with partial sums
    OrbitCounts {
        partition: String,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
    },

    /// The local Euler factor at a prime: rational function in t = p^-s and
    /// its series prefix O(p^k)
    EulerFactor {
        partition: String,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// Series prefix length K (coefficients of t^0..t^K)
        #[arg(long, default_value_t = 10)]
        series_k: usize,
        /// Integer shift a for powers of shifted maps (partition must be 1^m)
        #[arg(long)]
        shift: Option<u32>,
    },

    /// Log-log fit of the orbit partial sums against K n^N over the top
    /// decade, with per-decade convergence ratios
    Asymptotics {
        partition: String,
        #[arg(long, default_value_t = 100_000)]
        n_max: u64,
    },

    /// Natural-boundary classification at Re(s) = N-2: Newton data, ghost
    /// factor, and B-polynomials for two-part partitions
    BoundaryReport { partition: String },

    /// Check the Igusa-form rewriting of the Euler factor against its series
    IgusaCheck {
        partition: String,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// Series comparison degree
        #[arg(long, default_value_t = 15)]
        series_k: usize,
    },

    /// The reduced series C_lambda(t,1)/(1-t)^N (Euler factor at p = 1)
    Reduced { partition: String },

    /// Hilbert series of the face ring of the barycentric subdivision of
    /// the (m-1)-simplex; equals the reduced series of (1^m)
    HilbertSd { m: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ceiling = cli
        .ceiling
        .or_else(|| std::env::var("ORBITZETA_CEILING").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_ENUMERATION_CEILING);
    match run(cli, ceiling) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Validation(_) | Error::Domain(_) => ExitCode::from(2),
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Error> {
    let f = format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(Error::Validation(
            "the requested output format is not available for this subcommand".into(),
        ));
    }
    Ok(f)
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(e.to_string())
}

fn run(cli: Cli, ceiling: u64) -> Result<(), Error> {
    match cli.command {
        Command::Cpoly { partition, method } => {
            let p = Partition::from_str(&partition)?;
            let format = pick(cli.format, Format::Text, &[Format::Text, Format::Json])?;
            match method {
                Method::Enum | Method::Macmahon => {
                    let result = match method {
                        Method::Enum => cpoly_enum(&p, ceiling)?,
                        _ => cpoly_macmahon(&p)?,
                    };
                    match format {
                        Format::Text => println!("{}", result.poly.to_text("x", "q")),
                        _ => print_json(&render::poly_json(&result.poly)),
                    }
                }
                Method::BothWithDiff => {
                    let by_enum = cpoly_enum(&p, ceiling)?;
                    let by_macmahon = cpoly_macmahon(&p)?;
                    let diff = &by_enum.poly - &by_macmahon.poly;
                    match format {
                        Format::Text => {
                            println!("enumeration: {}", by_enum.poly.to_text("x", "q"));
                            println!("macmahon:    {}", by_macmahon.poly.to_text("x", "q"));
                            println!("diff:        {}", diff.to_text("x", "q"));
                        }
                        _ => print_json(&json!({
                            "partition": p.to_string(),
                            "enumeration": render::poly_json(&by_enum.poly),
                            "macmahon": render::poly_json(&by_macmahon.poly),
                            "diff": render::poly_json(&diff),
                        })),
                    }
                }
            }
        }

        Command::DescentPoly { partition } => {
            let p = Partition::from_str(&partition)?;
            let dp = descent_poly(&p)?;
            match pick(cli.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Text => println!("{}", dp.to_text("x", "q")),
                _ => print_json(&render::poly_json(&dp)),
            }
        }

        Command::Funeq { partition, euler, prime } => {
            let p = Partition::from_str(&partition)?;
            pick(cli.format, Format::Json, &[Format::Json])?;
            let report = funeq_check(&p)?;
            if euler {
                let holds = if report.holds {
                    euler_funeq_check(p.parts()[0], p.m(), prime)?
                } else {
                    false
                };
                print_json(&render::euler_funeq_json(&report, prime, holds));
            } else {
                print_json(&render::funeq_json(&report));
            }
        }

        Command::Unitary { partition } => {
            let p = Partition::from_str(&partition)?;
            pick(cli.format, Format::Json, &[Format::Json])?;
            print_json(&render::unitary_json(&unitary_factor(&p)?));
        }

        Command::ScanConjecture { max_n } => {
            let rows = conjecture_scan(max_n)?;
            match pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Csv => {
                    let stdout = std::io::stdout();
                    let mut out = stdout.lock();
                    writeln!(out, "{}", render::SCAN_CSV_HEADER).map_err(io_err)?;
                    for row in &rows {
                        writeln!(out, "{}", render::scan_csv_row(row)).map_err(io_err)?;
                        out.flush().map_err(io_err)?;
                    }
                    let zeros = rows.iter().filter(|r| r.value.is_zero()).count();
                    eprintln!("scanned {} pairs, {} zeros", rows.len(), zeros);
                }
                _ => print_json(&render::scan_json(max_n, &rows)),
            }
        }

        Command::OrbitCounts { partition, n_max } => {
            let p = Partition::from_str(&partition)?;
            let data = dirichlet_coeffs(&p, n_max)?;
            match pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Csv => {
                    let stdout = std::io::stdout();
                    let mut out = stdout.lock();
                    writeln!(out, "{}", render::ORBIT_CSV_HEADER).map_err(io_err)?;
                    for n in 1..=n_max {
                        writeln!(out, "{}", render::orbit_csv_row(&data, n)).map_err(io_err)?;
                    }
                }
                _ => print_json(&render::orbit_data_json(&data)),
            }
        }

        Command::EulerFactor { partition, prime, series_k, shift } => {
            let p = Partition::from_str(&partition)?;
            pick(cli.format, Format::Json, &[Format::Json])?;
            let factor = match shift {
                None => euler_factor(&p, prime, series_k)?,
                Some(a) => {
                    if p.parts().iter().any(|&x| x != 1) {
                        return Err(Error::Domain(
                            "--shift applies to powers of a single-orbit map; \
                             the partition must be 1^m"
                                .into(),
                        ));
                    }
                    shifted_euler_factor(p.m(), a, prime, series_k)?
                }
            };
            print_json(&render::euler_factor_json(&factor));
        }

        Command::Asymptotics { partition, n_max } => {
            let p = Partition::from_str(&partition)?;
            let fit = asymptotic_fit(&p, n_max)?;
            match pick(cli.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Text => {
                    println!("partition: {p}");
                    println!("n_max: {n_max}");
                    println!("expected_exponent: {}", p.n());
                    println!("fitted_exponent: {:.6}", fit.fitted_exponent);
                    println!("k_estimate: {:.6}", fit.k_estimate);
                    for (n, ratio) in &fit.decade_ratios {
                        println!("ratio n={n}: {ratio:.6}");
                    }
                }
                _ => print_json(&render::asymptotic_fit_json(&fit)),
            }
        }

        Command::BoundaryReport { partition } => {
            let p = Partition::from_str(&partition)?;
            pick(cli.format, Format::Json, &[Format::Json])?;
            let report = natural_boundary_report(&p)?;
            print_json(&render::boundary_report_json(&report));
            if report.boundary_type == BoundaryType::ConditionalTypeII {
                eprintln!(
                    "note: classification is conditional on the nonvanishing of \
                     C_(l1,l2)(-1,1) for unequal parts"
                );
            }
        }

        Command::IgusaCheck { partition, prime, series_k } => {
            let p = Partition::from_str(&partition)?;
            pick(cli.format, Format::Json, &[Format::Json])?;
            let holds = igusa_check(&p, prime, series_k, ceiling)?;
            print_json(&json!({
                "partition": p.to_string(),
                "prime": prime,
                "series_degree": series_k,
                "holds": holds,
            }));
        }

        Command::Reduced { partition } => {
            let p = Partition::from_str(&partition)?;
            let series = reduced_series(&p)?;
            match pick(cli.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Text => println!("{}", render::series_text(&series, "t", "_")),
                _ => print_json(&render::series_json(&series, "t")),
            }
        }

        Command::HilbertSd { m } => {
            let series = hilbert_sd_simplex(m)?;
            match pick(cli.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Text => println!("{}", render::series_text(&series, "t", "_")),
                _ => print_json(&render::series_json(&series, "t")),
            }
        }
    }
    Ok(())
}
