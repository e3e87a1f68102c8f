//! `projdes`: verify, construct and analyse projective t-designs.
//!
//! Exit codes: 0 success, 1 verification failed, 2 input or usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use projdes::bma::{build_with_tol, full_report, BMA_TOL};
use projdes::census::{
    census_csv, census_json, census_text, rationality_csv, rationality_json, rationality_table,
    rationality_text, sweep_with_jobs,
};
use projdes::designs::{construct_cp1_5design, construct_rp1_polygon, FLOAT_DESIGN_TOL};
use projdes::exactnum::DEFAULT_TOL;
use projdes::jacobi::{DesignParams, Field};
use projdes::projective::{design_to_json, load_design};
use projdes::report::{bound_report, construction_summary, pretty, verify_report, Format};

#[derive(Parser, Debug)]
#[command(
    name = "projdes",
    version,
    about = "Exact verification and analysis of projective t-designs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Float tolerance for Gram values, angle sets and identities.
    #[arg(long, env = "PROJDES_TOL", default_value_t = DEFAULT_TOL, value_parser = positive_f64, global = true)]
    tol: f64,

    /// Worker threads for the census sweep (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the design property, the averaging identity and tightness.
    Verify {
        path: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// Write one of the built-in designs as a design file.
    Construct {
        which: Construction,
        /// Strength, required for rp1-polygon.
        #[arg(long)]
        t: Option<u32>,
    },
    /// Build the Bose-Mesner algebra and check its identities.
    Bma {
        path: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// Compare rank L_1 with rank L_s for tight (2s-1)-designs.
    Census {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, default_value_t = 12)]
        s_max: u32,
        /// Restrict to these fields (repeatable); all by default.
        #[arg(long)]
        field: Vec<Field>,
    },
    /// Rationality of the RP^1 polygon angle sets.
    Rationality {
        #[arg(long)]
        t_max: u32,
    },
    /// Cardinality bound and tight angle set for (F, n, t).
    Bound {
        #[arg(long)]
        field: Field,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construction {
    #[value(name = "cp1-5design")]
    Cp15Design,
    #[value(name = "rp1-polygon")]
    Rp1Polygon,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

enum Failure {
    Verification,
    Input(String),
}

impl From<projdes::Error> for Failure {
    fn from(e: projdes::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    main: String,
    /// Printed to stderr when the main output goes to stdout, else to stdout.
    note: Option<String>,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| emit(&cli, out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, out: Output) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            fs::write(path, &out.main)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            if let Some(note) = &out.note {
                print!("{note}");
            }
        }
        None => {
            print!("{}", out.main);
            if let Some(note) = &out.note {
                eprint!("{note}");
            }
        }
    }
    if out.ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = Format::from(cli.format);
    let plain = |main: String| Output {
        main,
        note: None,
        ok: true,
    };
    match &cli.command {
        Command::Verify { path, t } => {
            let ps = load_design(path)?;
            let report = verify_report(&ps, *t, FLOAT_DESIGN_TOL, cli.tol)?;
            Ok(Output {
                main: report.render(format),
                note: None,
                ok: report.passed(),
            })
        }
        Command::Construct { which, t } => {
            let (ps, t) = match which {
                Construction::Cp15Design => (construct_cp1_5design(), 5),
                Construction::Rp1Polygon => {
                    let t = t.ok_or_else(|| Failure::Input("rp1-polygon needs --t".into()))?;
                    if t == 0 {
                        return Err(Failure::Input("rp1-polygon needs --t >= 1".into()));
                    }
                    (construct_rp1_polygon(t)?, t)
                }
            };
            let summary = construction_summary(&ps, t, cli.tol)?;
            let mut file = design_to_json(&ps);
            file.push('\n');
            Ok(Output {
                main: file,
                note: Some(summary.render(format)),
                ok: true,
            })
        }
        Command::Bma { path, t } => {
            let ps = load_design(path)?;
            let alg = build_with_tol(&ps, *t, cli.tol)?;
            let report = full_report(&alg, cli.tol.max(BMA_TOL));
            let main = match format {
                Format::Json => pretty(&report.to_json()),
                Format::Csv => {
                    let mut s = String::from("section,identity,pass\n");
                    for sec in &report.sections {
                        for c in &sec.checks {
                            s.push_str(&format!("{},{},{}\n", sec.title, c.identity, c.pass));
                        }
                    }
                    s
                }
                Format::Text => report.to_text(),
            };
            Ok(Output {
                main,
                note: None,
                ok: report.all_pass(),
            })
        }
        Command::Census {
            n_max,
            s_max,
            field,
        } => {
            let fields: Vec<Field> = if field.is_empty() {
                Field::ALL.to_vec()
            } else {
                field.clone()
            };
            let rows = sweep_with_jobs(&fields, *n_max, *s_max, cli.jobs)?;
            Ok(plain(match format {
                Format::Json => pretty(&census_json(&rows)),
                Format::Csv => census_csv(&rows),
                Format::Text => census_text(&rows),
            }))
        }
        Command::Rationality { t_max } => {
            let rows = rationality_table(*t_max)?;
            Ok(plain(match format {
                Format::Json => pretty(&rationality_json(&rows)),
                Format::Csv => rationality_csv(&rows),
                Format::Text => rationality_text(&rows),
            }))
        }
        Command::Bound { field, n, t } => {
            let params = DesignParams::new(*field, *n, *t)?;
            Ok(plain(bound_report(&params)?.render(format)))
        }
    }
}
