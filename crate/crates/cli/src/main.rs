//! `g2`: build, print and audit the two g2 commutation tables.

mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use g2_core::basis_a::{build_hermitian_algebra, rescale_to_integer_basis};
use g2_core::basis_b::build_cyclic_pipeline;
use g2_core::isomap::{check_cartan_factors, solve_diagonal_map, verify_homomorphism, DiagonalMap, GaugePin};
use g2_core::liealg::*;
use g2_core::rootsys::{generate_root_system, CartanMatrix, RootSystem};
use g2_core::{fixtures, Error};
use render::Style;

#[derive(Parser)]
#[command(name = "g2", version, about = "Exact g2 structure constants in two Cartan-Weyl bases")]
struct Cli {
    /// Cartan matrix: a preset (g2, a2, b2, a1a1), a JSON file, or inline JSON
    #[arg(long, global = true, default_value = "g2")]
    cartan: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write the artifact here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Approach {
    Hermitian,
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Table,
    Rescaling,
    Normalizations,
    Constants,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum CheckName {
    Antisym,
    Jacobi,
    Serre,
    Prop28,
    Prop29,
    Prop211,
    Killing,
    Fixture,
}

#[derive(Subcommand)]
enum Command {
    /// List positive roots, or the root chains
    Roots {
        #[arg(long)]
        chains: bool,
    },
    /// Print a commutation table or its intermediate data
    Table {
        #[arg(long, value_enum)]
        approach: Approach,
        #[arg(long, value_enum, default_value_t = Emit::Table)]
        emit: Emit,
        /// Hermitian table before rescaling to integer constants
        #[arg(long)]
        unscaled: bool,
    },
    /// Audit a table; exits 1 if any check fails
    Verify {
        #[arg(long, value_enum)]
        approach: Approach,
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckName>,
    },
    /// Solve for or verify a diagonal isomorphism between the tables
    Iso {
        #[arg(long, value_enum)]
        from: Approach,
        #[arg(long, value_enum)]
        to: Approach,
        #[arg(long)]
        solve: bool,
        /// A map file, or a named published map
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value = "published")]
        pin: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::UnsupportedAlgebra(_)
                | Error::InvalidCartan(_)
                | Error::NotFiniteType(_)
                | Error::UnknownFixture(_)
                | Error::UnknownGenerator(_)
                | Error::Json(_)
                | Error::ParseRational(_)
                | Error::ParseRoot(_)
                | Error::ZeroFactor(_)
                | Error::IncompleteMap(_) => 2,
                _ => 1,
            },
        }
    }
}

fn cartan(source: &str) -> Result<CartanMatrix, CliError> {
    if let Some(m) = CartanMatrix::preset(source) {
        return Ok(m);
    }
    let text = if std::path::Path::new(source).is_file() { std::fs::read_to_string(source)? } else { source.to_string() };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("--cartan {source}: not a preset, file or matrix ({e})")))
}

fn build(rs: &RootSystem, approach: Approach) -> Result<(LieAlgebra, Style), CliError> {
    Ok(match approach {
        Approach::Hermitian => (rescale_to_integer_basis(&build_hermitian_algebra(rs)?)?.0, Style::INTEGER),
        Approach::Cyclic => (build_cyclic_pipeline(rs)?.2, Style::CYCLIC),
    })
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn pairs(format: Format, head: [&str; 2], rows: Vec<(String, g2_core::exactfield::FieldElement)>) -> String {
    match format {
        Format::Csv => render::pairs_csv(head, &rows),
        _ => render::pairs_markdown(head, &rows),
    }
}

/// Artifact text plus whether every check passed.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let rs = generate_root_system(cartan(&cli.cartan)?)?;
    let format = cli.format;
    match &cli.command {
        Command::Roots { chains: false } => {
            let roots = rs.positive_roots();
            let text = match format {
                Format::Markdown => render::roots_markdown(roots),
                Format::Json => json(&roots.iter().map(|r| r.to_string()).collect::<Vec<_>>()),
                Format::Csv => render::roots_csv(roots),
            };
            Ok((text, true))
        }
        Command::Roots { chains: true } => {
            let chains = rs.enumerate_chains();
            let text = match format {
                Format::Markdown => render::chains_markdown(&chains),
                Format::Json => json(&chains),
                Format::Csv => render::chains_csv(&chains),
            };
            Ok((text, true))
        }
        Command::Table { approach, emit, unscaled } => Ok((table(&rs, *approach, *emit, *unscaled, format)?, true)),
        Command::Verify { approach, checks } => verify(&rs, *approach, checks, format),
        Command::Iso { from, to, solve, map, pin } => iso(&rs, *from, *to, *solve, map.as_deref(), pin, format),
    }
}

fn table(rs: &RootSystem, approach: Approach, emit: Emit, unscaled: bool, format: Format) -> Result<String, CliError> {
    if unscaled && (approach != Approach::Hermitian || emit != Emit::Table) {
        return Err(CliError::Usage("--unscaled applies to the hermitian table only".into()));
    }
    match (approach, emit) {
        (_, Emit::Table) => {
            let (alg, style) = if unscaled {
                (build_hermitian_algebra(rs)?, Style::UNSCALED)
            } else {
                build(rs, approach)?
            };
            Ok(match format {
                Format::Markdown => render::table_markdown(&alg, style),
                Format::Json => alg.to_json() + "\n",
                Format::Csv => render::table_csv(&alg),
            })
        }
        (Approach::Hermitian, Emit::Rescaling) => {
            let (_, map) = rescale_to_integer_basis(&build_hermitian_algebra(rs)?)?;
            Ok(match format {
                Format::Json => json(&map),
                _ => pairs(format, ["generator", "factor"], map.0.iter().map(|(l, v)| (l.to_string(), v.clone())).collect()),
            })
        }
        (Approach::Cyclic, Emit::Normalizations) => {
            let (norms, _, _) = build_cyclic_pipeline(rs)?;
            Ok(match format {
                Format::Json => json(&norms),
                _ => pairs(format, ["root", "⟨α, H′_α⟩"], norms.0.iter().map(|(r, v)| (r.pretty(), v.clone())).collect()),
            })
        }
        (Approach::Cyclic, Emit::Constants) => {
            let (_, consts, _) = build_cyclic_pipeline(rs)?;
            Ok(match format {
                Format::Json => json(&consts),
                _ => pairs(
                    format,
                    ["(a, b)", "N′"],
                    consts.0.iter().map(|((a, b), v)| (format!("({}, {})", a.pretty(), b.pretty()), v.clone())).collect(),
                ),
            })
        }
        _ => Err(CliError::Usage("rescaling is hermitian-only; normalizations and constants are cyclic-only".into())),
    }
}

fn fixture_report(alg: &LieAlgebra, approach: Approach) -> Result<AuditReport, CliError> {
    let golden = match approach {
        Approach::Hermitian => fixtures::table1()?,
        Approach::Cyclic => fixtures::table2()?,
    };
    let mut rep = AuditReport::new();
    let basis = alg.basis();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i + 1..] {
            rep.record("fixture", format!("[{x}, {y}]"), alg.bracket_basis(x, y)?.clone(), golden.bracket_basis(x, y)?.clone());
        }
    }
    Ok(rep)
}

fn verify(rs: &RootSystem, approach: Approach, checks: &[CheckName], format: Format) -> Result<(String, bool), CliError> {
    let (alg, _) = build(rs, approach)?;
    let mut wanted: Vec<CheckName> = if checks.is_empty() { CheckName::value_variants().to_vec() } else { checks.to_vec() };
    wanted.sort();
    wanted.dedup();
    let mut reports = BTreeMap::new();
    for c in wanted {
        let (name, rep) = match c {
            CheckName::Antisym => ("antisym", check_antisymmetry(&alg)?),
            CheckName::Jacobi => ("jacobi", check_jacobi(&alg)?),
            CheckName::Serre => ("serre", check_serre(&alg)?),
            CheckName::Prop28 => ("prop28", audit_identity_28(&alg)?),
            CheckName::Prop29 => ("prop29", audit_identity_29(&alg)?),
            CheckName::Prop211 => ("prop211", audit_identity_211(&alg, &rs.enumerate_chains())?),
            CheckName::Killing => ("killing", check_killing(&alg)?),
            CheckName::Fixture => ("fixture", fixture_report(&alg, approach)?),
        };
        reports.insert(name.to_string(), rep);
    }
    Ok((emit_reports(&reports, format), reports.values().all(AuditReport::all_pass)))
}

fn emit_reports(reports: &BTreeMap<String, AuditReport>, format: Format) -> String {
    for (name, rep) in reports {
        for c in rep.failures() {
            eprintln!("FAIL {name} {}: {} vs {}", c.instance, c.lhs, c.rhs);
        }
        eprintln!("{name}: {}", rep.summary());
    }
    match format {
        Format::Markdown => render::report_markdown(reports),
        Format::Json => json(reports),
        Format::Csv => render::report_csv(reports),
    }
}

fn load_map(spec: &str) -> Result<DiagonalMap, CliError> {
    if fixtures::MAP_NAMES.contains(&spec) {
        return Ok(fixtures::named_map(spec)?);
    }
    Ok(DiagonalMap::from_json(&std::fs::read_to_string(spec)?)?)
}

fn iso(
    rs: &RootSystem,
    from: Approach,
    to: Approach,
    solve: bool,
    map: Option<&str>,
    pin: &str,
    format: Format,
) -> Result<(String, bool), CliError> {
    let (a, _) = build(rs, from)?;
    let (b, _) = build(rs, to)?;
    let given = map.map(load_map).transpose()?;
    if solve {
        let pin = GaugePin::named(pin).map_err(|_| CliError::Usage(format!("--pin {pin}: expected published or unit")))?;
        let solved = solve_diagonal_map(&a, &b, &pin)?;
        let mut ok = true;
        if let Some(given) = &given {
            ok = &solved == given;
            if !ok {
                for (l, v) in &solved.0 {
                    if given.0.get(l) != Some(v) {
                        eprintln!("FAIL map {l}: solved {v}, given {}", given.0.get(l).map_or("missing".into(), |g| g.to_string()));
                    }
                }
            }
        }
        let text = match format {
            Format::Json => solved.to_json() + "\n",
            _ => pairs(format, ["generator", "factor"], solved.0.iter().map(|(l, v)| (l.to_string(), v.clone())).collect()),
        };
        return Ok((text, ok));
    }
    let Some(given) = given else {
        return Err(CliError::Usage("iso needs --solve or --map".into()));
    };
    let mut reports = BTreeMap::new();
    reports.insert("homomorphism".to_string(), verify_homomorphism(&a, &b, &given)?);
    reports.insert("cartan-factor".to_string(), check_cartan_factors(&a, &b, &given)?);
    Ok((emit_reports(&reports, format), reports.values().all(AuditReport::all_pass)))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => std::fs::write(path, &text)?,
            None => print!("{text}"),
        }
        Ok(ok)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
