//! Command-line front end. Exit code contract (stable): 0 = Yes / all
//! checks pass, 1 = No / violations found, 2 = input or usage error,
//! 3 = Unknown.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{catalog_build, catalog_list};
use crate::criteria::{
    decide_frobenius, decide_sep_f, decide_sep_g, decision_to_human, decision_to_json,
    find_cointegral, Decision, FrobeniusConfig,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::representations::serial::{check_module, parse_module, save_morphism};
use crate::representations::{hom_space, HomCategory};
use crate::structures::serial::{parse_bundle, save_bundle};
use crate::structures::{Report, StructureBundle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    #[value(alias = "F")]
    F,
    #[value(alias = "G")]
    G,
}

#[derive(Parser, Debug)]
#[command(
    name = "entwine",
    about = "Exact decision procedures for entwining structures",
    version
)]
struct Cli {
    /// Output format: free-form text or schema-stable JSON.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Verify the axioms of a bundle (and, optionally, module files).
    Check {
        /// Bundle file in the structure file format.
        bundle: PathBuf,
        /// Module files to check against the bundle.
        modules: Vec<PathBuf>,
    },
    /// Decide separability of the induction functor (side F) or the
    /// forgetful functor (side G).
    Separability {
        bundle: PathBuf,
        #[arg(long, value_enum)]
        side: Side,
    },
    /// Decide the Frobenius property by λ-candidate search.
    Frobenius {
        bundle: PathBuf,
        /// Maximum number of enumerated λ candidates.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Height bound for integer combinations over Q.
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
    /// Decide existence of a cointegral.
    Cointegral { bundle: PathBuf },
    /// Compute a basis of the hom-space between two module files.
    Hom {
        bundle: PathBuf,
        #[arg(long)]
        category: String,
        source: PathBuf,
        target: PathBuf,
    },
    /// Emit a catalog entry as a bundle file, or list all entries.
    Catalog {
        #[arg(long)]
        name: Option<String>,
        /// Base field override: "Q" or a prime p (also accepted: "Fp").
        #[arg(long)]
        field: Option<String>,
    },
}

/// Runs the CLI on the given arguments, returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs the CLI on `std::env::args`.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

fn load_bundle_arg(path: &Path) -> Result<StructureBundle> {
    let bundle = parse_bundle(&read_file(path)?)?;
    let report = bundle.check_all();
    if let Some(v) = report.first() {
        return Err(Error::Validation(format!("bundle fails {v}")));
    }
    Ok(bundle)
}

fn print_report(format: Format, sections: &[(String, Report)]) -> i32 {
    let total: usize = sections.iter().map(|(_, r)| r.len()).sum();
    match format {
        Format::Structured => {
            let value = json!({
                "pass": total == 0,
                "sections": sections
                    .iter()
                    .map(|(name, r)| {
                        json!({
                            "name": name,
                            "violations": r
                                .iter()
                                .map(|v| json!({"law": v.law, "detail": v.detail}))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
        }
        Format::Human => {
            for (name, r) in sections {
                if r.is_empty() {
                    println!("{name}: ok");
                } else {
                    println!("{name}: {} violation(s)", r.len());
                    for v in r {
                        println!("  {v}");
                    }
                }
            }
        }
    }
    if total == 0 {
        0
    } else {
        1
    }
}

fn print_decision(format: Format, b: &StructureBundle, d: &Decision) -> i32 {
    match format {
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&decision_to_json(b, d)).expect("valid JSON")
        ),
        Format::Human => print!("{}", decision_to_human(b, d)),
    }
    d.outcome.exit_code()
}

fn parse_field_arg(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.strip_prefix('F').or_else(|| t.strip_prefix('f')).unwrap_or(t);
    let digits = digits.strip_prefix("p:").unwrap_or(digits);
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::Validation(format!("unrecognized field {s:?}; use \"Q\" or a prime")))?;
    let field = FieldSpec::PrimeField(p);
    field.validate()?;
    Ok(field)
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Check { bundle, modules } => {
            let b = parse_bundle(&read_file(bundle)?)?;
            let mut sections =
                vec![(format!("bundle {}", bundle.display()), b.check_all())];
            for path in modules {
                let m = parse_module(&b, &read_file(path)?)?;
                sections.push((format!("module {}", path.display()), check_module(&b, &m)));
            }
            Ok(print_report(cli.format, &sections))
        }
        Cmd::Separability { bundle, side } => {
            let b = load_bundle_arg(bundle)?;
            let d = match side {
                Side::F => decide_sep_f(&b)?,
                Side::G => decide_sep_g(&b)?,
            };
            Ok(print_decision(cli.format, &b, &d))
        }
        Cmd::Frobenius { bundle, budget, height } => {
            if *budget == 0 {
                return Err(Error::Validation("--budget must be at least 1".into()));
            }
            if *height < 0 {
                return Err(Error::Validation("--height must be nonnegative".into()));
            }
            let b = load_bundle_arg(bundle)?;
            let d = decide_frobenius(&b, &FrobeniusConfig { budget: *budget, height: *height })?;
            Ok(print_decision(cli.format, &b, &d))
        }
        Cmd::Cointegral { bundle } => {
            let b = load_bundle_arg(bundle)?;
            let d = find_cointegral(&b)?;
            Ok(print_decision(cli.format, &b, &d))
        }
        Cmd::Hom { bundle, category, source, target } => {
            let b = load_bundle_arg(bundle)?;
            let category = HomCategory::parse(category)?;
            let source = parse_module(&b, &read_file(source)?)?;
            let target = parse_module(&b, &read_file(target)?)?;
            let basis = hom_space(&b, category, &source, &target)?;
            match cli.format {
                Format::Structured => {
                    let value = json!({
                        "dimension": basis.len(),
                        "basis": basis
                            .iter()
                            .map(|phi| {
                                serde_json::from_str::<Value>(&save_morphism(&b, phi))
                                    .expect("valid JSON")
                            })
                            .collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("valid JSON"));
                }
                Format::Human => {
                    println!("dimension: {}", basis.len());
                    for (i, phi) in basis.iter().enumerate() {
                        println!("basis[{i}]:");
                        println!("{}", save_morphism(&b, phi));
                    }
                }
            }
            Ok(0)
        }
        Cmd::Catalog { name, field } => {
            let field = field.as_deref().map(parse_field_arg).transpose()?;
            match name {
                Some(name) => {
                    let b = catalog_build(name, field)?;
                    println!("{}", save_bundle(&b));
                }
                None => {
                    for (name, blurb) in catalog_list() {
                        println!("{name}: {blurb}");
                    }
                }
            }
            Ok(0)
        }
    }
}
