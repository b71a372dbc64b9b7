//! Command-line front end for the lemniscate library: classification,
//! boundary tracing, torsional rigidity, parameter sweeps, a grid-based
//! ground-truth oracle, and a self-check against the reference table.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lemniscate::{
    classify, classify_conic, conic_coefficients, grid_report, label_components,
    projection_polynomial, rigidity_sweep, sign_grid, torsional_rigidity, trace_component,
    ConicConvention, LemniscateFamily, SweepOptions, Variant,
};
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "lemniscate", version, about = "Polynomial lemniscate classification, tracing, and torsional rigidity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the family has a bounded connected component
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Conic-section convention for the quadratic families
        #[arg(long, value_enum, default_value_t = ConventionArg::Definitional)]
        convention: ConventionArg,
        /// Emit a JSON object instead of the one-line verdict
        #[arg(long)]
        json: bool,
    },
    /// Trace the bounded component as theta,alpha CSV samples
    Trace {
        #[command(flatten)]
        family: FamilyArgs,
        /// Number of uniform angular samples
        #[arg(long, default_value_t = 1024)]
        m: usize,
        /// Root refinement tolerance
        #[arg(long, default_value_t = 1e-10)]
        trace_tol: f64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also render the curve to an SVG file
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Torsional rigidity of the bounded component
    Rigidity {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1024)]
        m: usize,
        #[arg(long, default_value_t = 16)]
        radial_order: usize,
        #[arg(long, default_value_t = 1e-10)]
        trace_tol: f64,
        /// Emit a JSON object instead of the one-line result
        #[arg(long)]
        json: bool,
    },
    /// Rigidity over a grid of coefficient and constant-term values
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        /// Coefficient values, comma separated (overrides --C)
        #[arg(long = "C-list", value_delimiter = ',', required = true)]
        c_list: Vec<f64>,
        /// Constant-term values, comma separated (overrides --k)
        #[arg(long = "k-list", value_delimiter = ',', required = true)]
        k_list: Vec<f64>,
        #[arg(long, default_value_t = 1024)]
        m: usize,
        #[arg(long, default_value_t = 16)]
        radial_order: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign-grid component count, independent of the classifier
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 512)]
        resolution: usize,
        /// Half-width of the sampling box (auto-sized when omitted)
        #[arg(long)]
        box_radius: Option<f64>,
        /// Also dump the sign grid as a portable graymap
        #[arg(long)]
        pgm: Option<PathBuf>,
    },
    /// Recompute the reference rigidity table and report pass/fail rows
    Reproduce {
        /// Which reference artifact to reproduce (only 3 is available)
        #[arg(long, default_value_t = 3)]
        section: u32,
        #[arg(long, default_value_t = 1024)]
        m: usize,
        #[arg(long, default_value_t = 16)]
        radial_order: usize,
        /// Also write the curve figure and sweep surface data here
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    TwoTerm,
    Scaled,
    ScaledPair,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Definitional,
    HalfSquare,
}

impl From<ConventionArg> for ConicConvention {
    fn from(v: ConventionArg) -> Self {
        match v {
            ConventionArg::Definitional => ConicConvention::Definitional,
            ConventionArg::HalfSquare => ConicConvention::HalfSquare,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// Curve family
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Leading exponent n (two-term and scaled variants)
    #[arg(long)]
    n: Option<u32>,
    /// Secondary exponent j (two-term variant only)
    #[arg(long)]
    j: Option<u32>,
    /// Coefficient C
    #[arg(long = "C", allow_negative_numbers = true, default_value_t = 0.0)]
    c: f64,
    /// Constant term k
    #[arg(long, default_value_t = 1.0)]
    k: f64,
}

impl FamilyArgs {
    fn build(&self) -> Result<LemniscateFamily, Failure> {
        let variant = match self.variant {
            VariantArg::TwoTerm => {
                let n = self.n.ok_or_else(|| Failure::usage("two-term variant requires --n"))?;
                let j = self.j.ok_or_else(|| Failure::usage("two-term variant requires --j"))?;
                Variant::TwoTerm { n, j }
            }
            VariantArg::Scaled => {
                if self.j.is_some() {
                    return Err(Failure::usage("--j only applies to the two-term variant"));
                }
                let n = self.n.ok_or_else(|| Failure::usage("scaled variant requires --n"))?;
                Variant::Scaled { n }
            }
            VariantArg::ScaledPair => {
                if self.n.is_some() || self.j.is_some() {
                    return Err(Failure::usage("--n/--j do not apply to the scaled-pair variant"));
                }
                Variant::ScaledPair
            }
        };
        LemniscateFamily::from_variant(variant, self.c, self.k).map_err(Failure::from)
    }
}

/// Error plus the process exit code it maps to: 1 for bad input, 2 for a
/// numeric failure on valid input.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Self { code: 1, message: msg.into() }
    }

    fn numeric(msg: impl Into<String>) -> Self {
        Self { code: 2, message: msg.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.message.fmt(f)
    }
}

impl From<lemniscate::Error> for Failure {
    fn from(err: lemniscate::Error) -> Self {
        let code = match err {
            lemniscate::Error::Domain(_) => 1,
            lemniscate::Error::NonConvergence(_) | lemniscate::Error::NotBounded(_) => 2,
        };
        Self { code, message: err.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Self { code: 1, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Err(failure) = configure_threads().and_then(|()| run(cli)) {
        eprintln!("error: {failure}");
        return ExitCode::from(failure.code);
    }
    ExitCode::SUCCESS
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("LEMNISCATE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| Failure::usage(format!("LEMNISCATE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn write_or_print(path: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, content).map_err(Failure::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { family, convention, json } => {
            let fam = family.build()?;
            let cl = match (fam.variant(), convention) {
                // the convention only changes the quadratic coefficients
                (Variant::Scaled { n: 1 } | Variant::Scaled { n: 2 } | Variant::ScaledPair, ConventionArg::HalfSquare)
                | (Variant::TwoTerm { n: 2, .. }, ConventionArg::HalfSquare) => {
                    classify_conic(&conic_coefficients(&fam, convention.into())?)
                }
                _ => classify(&fam)?,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&output::classify_json(&cl)).unwrap());
            } else {
                println!("{}", output::classify_line(&cl));
            }
            Ok(())
        }
        Command::Trace { family, m, trace_tol, out, svg } => {
            let fam = family.build()?;
            if m < 2 {
                return Err(Failure::usage(format!("--m must be at least 2, got {m}")));
            }
            // negated comparison is deliberate: it rejects NaN
            #[allow(clippy::neg_cmp_op_on_partial_ord)]
            if !(trace_tol > 0.0) {
                return Err(Failure::usage("--trace-tol must be positive".to_string()));
            }
            let curve = trace_component(&fam, m, trace_tol)?;
            write_or_print(out.as_ref(), &output::trace_csv(&curve))?;
            if let Some(path) = svg {
                let label = format!("C={}, k={}", fam.c(), fam.k());
                fs::write(path, output::curves_svg(&[(label, &curve)]))?;
            }
            Ok(())
        }
        Command::Rigidity { family, m, radial_order, trace_tol, json } => {
            let fam = family.build()?;
            let curve = trace_component(&fam, m, trace_tol)?;
            let proj = projection_polynomial(&fam);
            let result = torsional_rigidity(&curve, &proj, radial_order)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&output::rigidity_json(&result)).unwrap());
            } else {
                println!(
                    "rigidity={} abs_err={:.3e}",
                    output::decimal(result.value),
                    result.abs_error_estimate
                );
            }
            Ok(())
        }
        Command::Sweep { family, c_list, k_list, m, radial_order, out } => {
            // build once to validate the variant shape; C/k come from the lists
            let probe = FamilyArgs { c: 0.0, k: 1.0, ..family };
            let variant = probe.build()?.variant();
            let opts = SweepOptions { m, radial_order, ..SweepOptions::default() };
            let cells = rigidity_sweep(variant, &c_list, &k_list, &opts);
            for cell in &cells {
                if let Err(err) = &cell.outcome {
                    eprintln!("cell C={}, k={}: {err}", cell.c, cell.k);
                }
            }
            write_or_print(out.as_ref(), &output::sweep_csv(&cells))
        }
        Command::Oracle { family, resolution, box_radius, pgm } => {
            let fam = family.build()?;
            let report = match &pgm {
                Some(path) => {
                    let grid = sign_grid(&fam, resolution, box_radius)?;
                    fs::write(path, grid.to_pgm())?;
                    label_components(&grid)
                }
                None => grid_report(&fam, resolution, box_radius)?,
            };
            println!("{}", serde_json::to_string_pretty(&output::oracle_json(&report)).unwrap());
            Ok(())
        }
        Command::Reproduce { section, m, radial_order, out_dir } => {
            if section != 3 {
                return Err(Failure::usage(format!("unknown section {section}, only 3 is available")));
            }
            reproduce_table(m, radial_order, out_dir.as_deref())
        }
    }
}

const REFERENCE_TABLE: [(f64, f64); 4] =
    [(0.25, 1.63988), (0.2, 1.60815), (0.1, 1.57894), (0.01, 1.57087)];
const REFERENCE_TOL: f64 = 5e-4;

fn reproduce_table(m: usize, radial_order: usize, out_dir: Option<&std::path::Path>) -> Result<(), Failure> {
    let mut all_pass = true;
    for (c, expected) in REFERENCE_TABLE {
        let fam = LemniscateFamily::scaled(4, c, 1.0)?;
        let curve = trace_component(&fam, m, 1e-10)?;
        let proj = projection_polynomial(&fam);
        let result = torsional_rigidity(&curve, &proj, radial_order)?;
        let diff = (result.value - expected).abs();
        let status = if diff <= REFERENCE_TOL { "PASS" } else { "FAIL" };
        all_pass &= diff <= REFERENCE_TOL;
        println!(
            "C={c} expected={expected} computed={:.6} |diff|={diff:.2e} {status}",
            result.value
        );
    }

    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        let mut curves = Vec::new();
        for (c, _) in REFERENCE_TABLE {
            let fam = LemniscateFamily::scaled(4, c, 1.0)?;
            curves.push((format!("C={c}"), trace_component(&fam, 512, 1e-10)?));
        }
        let borrowed: Vec<(String, &lemniscate::PolarCurve)> =
            curves.iter().map(|(label, curve)| (label.clone(), curve)).collect();
        fs::write(dir.join("fig3.svg"), output::curves_svg(&borrowed))?;

        let c_values: Vec<f64> = (0..9).map(|i| 0.03 * i as f64).collect();
        let k_values = [0.2, 0.4, 0.6, 0.8, 1.0];
        let opts = SweepOptions { m: 512, radial_order, ..SweepOptions::default() };
        let cells = rigidity_sweep(Variant::Scaled { n: 4 }, &c_values, &k_values, &opts);
        fs::write(dir.join("fig4.csv"), output::sweep_csv(&cells))?;
    }

    if all_pass {
        Ok(())
    } else {
        Err(Failure::numeric("reference table reproduction failed".to_string()))
    }
}
