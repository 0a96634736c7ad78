//! `spherical`: query weight monoids of spherical conjugacy classes.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spherical_core::verify::{self, Variant, VerificationReport};
use spherical_core::{catalog, intlat, CartanType, ClassDescriptor, Error, IntMatrix, Weight};

#[derive(Parser)]
#[command(name = "spherical", version, about = "Weight monoids of spherical conjugacy classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// List the spherical classes of a group.
    List {
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the generators of one monoid.
    Show {
        group: String,
        /// Class label, optionally suffixed `~variant`.
        label: String,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether a dominant weight lies in a monoid.
    Member {
        group: String,
        label: String,
        /// Comma-separated fundamental-weight coordinates.
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        variant: Option<String>,
    },
    /// Emit the monoids of every class of a group.
    Table {
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the engine with the brute-force oracle and the closed-form tables.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_coeff: i64,
        #[arg(long, default_value_t = 8)]
        rank_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Smith normal form of an integer matrix given as `1,2;3,4`.
    Snf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Domain(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}

/// Splits `label~variant` and reconciles it with `--variant`.
fn resolve(group: &str, label: &str, flag: Option<&str>) -> Result<(ClassDescriptor, Variant), Error> {
    let (label, suffix) = match label.split_once('~') {
        Some((l, v)) => (l, Some(v)),
        None => (label, None),
    };
    let variant = match (suffix, flag) {
        (Some(a), Some(b)) if a.parse::<Variant>()? != b.parse::<Variant>()? => {
            return Err(Error::Parse(format!("conflicting variants {a:?} and {b:?}")));
        }
        (Some(v), _) | (None, Some(v)) => v.parse()?,
        (None, None) => Variant::O,
    };
    let class = catalog::lookup(group.parse::<CartanType>()?, label)?;
    if let Variant::Isogeny(tag) = &variant {
        class.isogeny_entry(tag)?;
    }
    Ok((class, variant))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::List { group, format } => {
            let classes = catalog::instantiate(group.parse()?)?;
            Ok(render::list(&classes, format))
        }
        Command::Show {
            group,
            label,
            variant,
            format,
        } => {
            let (class, variant) = resolve(&group, &label, variant.as_deref())?;
            let m = verify::engine_monoid(&class, &variant)?;
            Ok(render::show(&class, &variant, &m, format))
        }
        Command::Member {
            group,
            label,
            weight,
            variant,
        } => {
            let (class, variant) = resolve(&group, &label, variant.as_deref())?;
            let lambda: Weight = weight.parse()?;
            if lambda.rank() != class.rank() {
                return Err(Error::BadWeight(lambda.coords().to_vec()).into());
            }
            let m = verify::engine_monoid(&class, &variant)?;
            Ok(format!("{}\n", m.contains(&lambda)))
        }
        Command::Table { group, format } => {
            let classes = catalog::instantiate(group.parse()?)?;
            render::table(&classes, format).map_err(Failure::from)
        }
        Command::Verify {
            max_coeff,
            rank_max,
            format,
        } => verify_all(max_coeff, rank_max, format),
        Command::Snf { matrix, format } => {
            let m = parse_matrix(&matrix)?;
            Ok(render::snf(&m, &intlat::smith_normal_form(&m), format))
        }
    }
}

fn parse_matrix(s: &str) -> Result<IntMatrix, Error> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| r.parse::<Weight>().map(|w| w.coords().to_vec()))
        .collect::<Result<_, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse(format!("ragged matrix {s:?}")));
    }
    Ok(IntMatrix::from_i64_rows(&rows))
}

fn verify_all(bound: i64, rank_max: usize, format: Format) -> Result<String, Failure> {
    let mut oracle = verify::verify_catalog(rank_max, bound)?;
    let mut tables = verify::verify_tables(rank_max, bound)?;
    let minima = verify::verify_minima(rank_max);
    oracle.sort_by(|a, b| a.class.cmp(&b.class));
    tables.sort_by(|a, b| a.class.cmp(&b.class));
    let passed = [&oracle, &tables]
        .iter()
        .all(|rs| rs.iter().all(VerificationReport::passed))
        && minima.passed();
    let out = match format {
        Format::Json => {
            let doc = json!({
                "max_coeff": bound,
                "rank_max": rank_max,
                "passed": passed,
                "oracle": oracle,
                "tables": tables,
                "minima": minima,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("reports serialize"))
        }
        _ => render::verify_text(&oracle, &tables, &minima),
    };
    if passed {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Mismatch)
    }
}
