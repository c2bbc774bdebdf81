use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tautilt::catalog::{self, Golden};
use tautilt::enumeration::{
    build_hasse, classify_at, rigid_objects, RigidKind, DEFAULT_LENGTH_CAP,
};
use tautilt::homoracle::{cross_check, Discrepancy};
use tautilt::presentation::Algebra;
use tautilt::report;
use tautilt::strings::{enumerate_strings, Hooked};
use tautilt::{Classification, RigidityOptions};

/// Support τ-tilting pairs, g-vectors and Hasse quivers of string algebras.
#[derive(Parser)]
#[command(name = "tautilt", version)]
struct Cli {
    /// Worker threads for the parallel parts (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file presents a finite-dimensional string algebra.
    Validate { file: PathBuf },
    /// List the strings of length at most N, one per inverse pair.
    Strings {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the rigid objects found among strings of length at most N.
    Rigid {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify support τ-tilting pairs. Without --max-len the string length
    /// grows until the Hasse quiver certifies completeness.
    Tautilt {
        file: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit the Hasse quiver of support τ-tilting pairs.
    Hasse {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
    },
    /// Compare every combinatorial verdict with the linear-algebra oracle.
    OracleCheck {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// List the built-in algebras, or print one of them.
    Catalog {
        name: Option<String>,
        /// Recompute the classification and compare it with the published one.
        #[arg(long)]
        golden: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// A domain failure: reported on one line, exit status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Reads an algebra file. A path that does not exist but names a built-in
/// algebra loads that one instead.
fn load(path: &Path) -> Result<Algebra, Failure> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(Algebra::parse(&text)?),
        Err(e) => {
            let name = path.to_string_lossy();
            catalog::algebra(&name).map_err(|_| Failure(format!("ReadError path={name} {e}")))
        }
    }
}

/// Published data for a built-in algebra with exactly this presentation.
fn published(alg: &Algebra) -> Option<Golden> {
    let name = catalog::canonical_name(alg.name()).ok()?;
    (catalog::algebra(name).ok()? == *alg).then(|| catalog::golden(name).ok())?
}

fn classify(alg: &Algebra, max_len: Option<usize>, cap: usize) -> Result<Classification, Failure> {
    let opts = RigidityOptions::default();
    Ok(match max_len {
        Some(len) => classify_at(alg, len, opts)?,
        None => build_hasse(alg, None, cap, opts)?,
    })
}

fn structured(alg: &Algebra, c: &Classification) -> report::Report {
    let golden = published(alg);
    let names = report::name_objects(alg, c, golden.as_ref());
    report::structured(alg, c, &names)
}

fn validate(file: &Path) -> Outcome {
    let alg = load(file)?;
    Ok(format!(
        "valid {} vertices={} arrows={} relations={} dimension={}\n",
        alg.name(),
        alg.vertex_count(),
        alg.arrow_count(),
        alg.relations().len(),
        alg.dimension()
    ))
}

fn strings(file: &Path, max_len: usize, as_json: bool) -> Outcome {
    let alg = load(file)?;
    let n = alg.vertex_count();
    let rows: Vec<_> = enumerate_strings(&alg, max_len)
        .into_iter()
        .map(|c| {
            let h = Hooked::new(&alg, &c);
            (
                c.display(&alg),
                c.word(&alg),
                h.key().display(&alg),
                h.g_vector(n),
            )
        })
        .collect();
    if as_json {
        let items: Vec<_> = rows
            .iter()
            .map(|(display, word, hook, g)| json!({"display": display, "word": word, "hook": hook, "g": g.0}))
            .collect();
        return Ok(serde_json::to_string_pretty(&items)? + "\n");
    }
    let mut out = String::new();
    for (display, _, hook, g) in &rows {
        writeln!(out, "{display}\thook {hook}\tg {g}").unwrap();
    }
    writeln!(out, "{} strings", rows.len()).unwrap();
    Ok(out)
}

fn rigid(file: &Path, max_len: usize, as_json: bool) -> Outcome {
    let alg = load(file)?;
    let universe = rigid_objects(&alg, max_len, RigidityOptions::default());
    let mut items = Vec::new();
    for o in &universe.objects {
        let support: Vec<&str> = o.support.iter().map(|&v| alg.vertex_name(v)).collect();
        let (kind, display, hook) = match &o.kind {
            RigidKind::String {
                representative,
                hooked,
            } => (
                "string",
                representative.display(&alg),
                hooked.key().display(&alg),
            ),
            RigidKind::Shifted(e) => ("shifted", report::shifted_name(&alg, *e), String::new()),
        };
        items.push(
            json!({"kind": kind, "display": display, "hook": hook, "g": o.g.0, "support": support}),
        );
    }
    if as_json {
        return Ok(serde_json::to_string_pretty(&items)? + "\n");
    }
    let mut out = String::new();
    for (o, item) in universe.objects.iter().zip(&items) {
        let display = item["display"].as_str().unwrap_or_default();
        if o.is_shifted() {
            writeln!(out, "{display}\tg {}", o.g).unwrap();
        } else {
            let hook = item["hook"].as_str().unwrap_or_default();
            writeln!(out, "{display}\thook {hook}\tg {}", o.g).unwrap();
        }
    }
    writeln!(
        out,
        "{} rigid strings, {} shifted projectives",
        universe.string_count(),
        universe.len() - universe.string_count()
    )
    .unwrap();
    Ok(out)
}

fn tautilt(file: &Path, max_len: Option<usize>, cap: usize, as_json: bool) -> Outcome {
    let alg = load(file)?;
    let c = classify(&alg, max_len, cap)?;
    let r = structured(&alg, &c);
    Ok(if as_json {
        report::to_json(&r) + "\n"
    } else {
        report::human(&r)
    })
}

fn hasse(file: &Path, format: Format, cap: usize) -> Outcome {
    let alg = load(file)?;
    let c = classify(&alg, None, cap)?;
    let r = structured(&alg, &c);
    Ok(match format {
        Format::Dot => report::to_dot(&r),
        Format::Json => serde_json::to_string_pretty(&r.hasse)? + "\n",
    })
}

fn oracle_check(file: &Path, max_len: usize) -> Outcome {
    let alg = load(file)?;
    let check = cross_check(&alg, max_len, RigidityOptions::default(), true);
    let mut out = String::new();
    for d in &check.discrepancies {
        let line = match d {
            Discrepancy::Rigidity {
                c,
                d,
                combinatorial,
                oracle,
            } => format!(
                "rigidity C={} D={} combinatorial={combinatorial} oracle={oracle}",
                c.display(&alg),
                d.display(&alg)
            ),
            Discrepancy::Support {
                vertex,
                c,
                combinatorial,
                oracle,
            } => format!(
                "support vertex={} C={} combinatorial={combinatorial} oracle={oracle}",
                alg.vertex_name(*vertex),
                c.display(&alg)
            ),
            Discrepancy::FieldDependence { c, d, prime } => format!(
                "field C={} D={} prime={prime}",
                c.display(&alg),
                d.display(&alg)
            ),
        };
        writeln!(out, "{line}").unwrap();
    }
    let summary = format!(
        "{} strings, {} rigidity checks, {} support checks, {} field checks, {} discrepancies",
        check.strings,
        check.rigidity_checks,
        check.support_checks,
        check.field_checks,
        check.discrepancies.len()
    );
    if check.is_clean() {
        Ok(out + &summary + "\n")
    } else {
        eprint!("{out}");
        Err(Failure(format!("OracleDiscrepancy {summary}")))
    }
}

fn catalog_command(name: Option<&str>, golden: bool) -> Outcome {
    let Some(name) = name else {
        let mut out = String::new();
        for n in catalog::names() {
            let g = catalog::golden(n)?;
            writeln!(out, "{n}\t{} pairs", g.pair_count).unwrap();
        }
        return Ok(out);
    };
    let alg = catalog::algebra(name)?;
    if !golden {
        return Ok(alg.to_json() + "\n");
    }
    let expected = catalog::golden(name)?;
    let c = classify(&alg, None, DEFAULT_LENGTH_CAP)?;
    let computed = structured(&alg, &c);
    let diffs = report::diff(&alg, &computed, &expected);
    if diffs.is_empty() {
        Ok(format!(
            "{}: {} pairs, diff empty\n",
            alg.name(),
            computed.pair_count
        ))
    } else {
        for d in &diffs {
            eprintln!("{d}");
        }
        Err(Failure(format!(
            "GoldenMismatch algebra={} differences={}",
            alg.name(),
            diffs.len()
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Strings {
            file,
            max_len,
            json,
        } => strings(&file, max_len, json),
        Command::Rigid {
            file,
            max_len,
            json,
        } => rigid(&file, max_len, json),
        Command::Tautilt {
            file,
            max_len,
            cap,
            json,
        } => tautilt(&file, max_len, cap, json),
        Command::Hasse { file, format, cap } => hasse(&file, format, cap),
        Command::OracleCheck { file, max_len } => oracle_check(&file, max_len),
        Command::Catalog { name, golden } => catalog_command(name.as_deref(), golden),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(reason)) => {
            eprintln!("error: {}", reason.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
