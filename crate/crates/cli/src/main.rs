use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use slice_fock::fock::oracle::gram_simpson;
use slice_fock::fock::FockSpace;
use slice_fock::harness::{self, config::parse_exponent, Format, RunConfig};
use slice_fock::series::parse_series;
use slice_fock::{Error, ImaginaryUnit, Quaternion, SliceSeries};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

/// Numerical checks for slice-regular Fock spaces over the quaternions.
#[derive(Parser)]
#[command(name = "slice-fock", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the property checks and write JSON and CSV reports.
    Verify(Common),
    /// Evaluate a series file at a quaternion.
    Eval {
        file: PathBuf,
        /// `x0 x1 x2 x3`, as one argument or four.
        #[arg(num_args = 1..=4, allow_hyphen_values = true, required = true)]
        q: Vec<String>,
    },
    /// Fock norm of a series file: the sup over sampled slices.
    Norm {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel and Gram-corrected kernel at (q, w).
    Kernel {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[command(flatten)]
        common: Common,
    },
    /// Gram diagonal ‖q^m‖² from the grid, the closed form and the oracle.
    Gram(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Disk,
    Plane,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args, Default)]
struct Common {
    /// key=value file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Exponent p; fractions like 4/3 are accepted.
    #[arg(long, value_parser = parse_p)]
    p: Option<f64>,
    /// Maximum random degree (verify) or largest m (gram).
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum)]
    domain: Option<DomainArg>,
    /// Radius of the truncated plane.
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long = "quad-r")]
    quad_r: Option<usize>,
    #[arg(long = "quad-theta")]
    quad_theta: Option<usize>,
    #[arg(long)]
    slices: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Override every per-check instance count.
    #[arg(long)]
    series: Option<usize>,
    /// Comma-separated check ids; empty for none. Default: all.
    #[arg(long)]
    checks: Option<String>,
    /// Report path stem; `.json` and `.csv` are written.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

fn parse_p(s: &str) -> Result<f64, String> {
    parse_exponent(s).map_err(|e| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    })
}

/// `x0 x1 x2 x3`, or a single real number.
fn quaternion(text: &str) -> Result<Quaternion, Failure> {
    if let Ok(x) = text.trim().parse::<f64>() {
        return Ok(Quaternion::real(x));
    }
    text.parse().map_err(|e: String| Failure {
        code: EXIT_USAGE,
        message: format!("bad quaternion `{text}`: {e}"),
    })
}

fn series_file(path: &Path) -> Result<SliceSeries, Failure> {
    parse_series(&read(path)?).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

impl Common {
    fn config(&self) -> Result<RunConfig, Failure> {
        let mut c = RunConfig::default();
        if let Some(path) = &self.config {
            c.apply_text(&read(path)?).map_err(|e| Failure {
                code: EXIT_USAGE,
                message: format!("{}: {e}", path.display()),
            })?;
        }
        let mut set = |k: &str, v: Option<String>| v.map_or(Ok(()), |v| c.set(k, &v));
        set("alpha", self.alpha.map(|x| x.to_string()))?;
        set("degree", self.degree.map(|x| x.to_string()))?;
        set(
            "domain",
            self.domain.map(|d| match d {
                DomainArg::Disk => "disk".into(),
                DomainArg::Plane => "plane".into(),
            }),
        )?;
        set("radius", self.radius.map(|x| x.to_string()))?;
        set("quad-r", self.quad_r.map(|x| x.to_string()))?;
        set("quad-theta", self.quad_theta.map(|x| x.to_string()))?;
        set("slices", self.slices.map(|x| x.to_string()))?;
        set("seed", self.seed.map(|x| x.to_string()))?;
        set("series", self.series.map(|x| x.to_string()))?;
        set("checks", self.checks.clone())?;
        set("out", self.out.as_ref().map(|p| p.display().to_string()))?;
        if let Some(p) = self.p {
            c.params.p = p;
        }
        if let Some(f) = self.format {
            c.format = match f {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
        }
        c.validate()?;
        Ok(c)
    }

    fn space(&self) -> Result<(RunConfig, FockSpace), Failure> {
        let c = self.config()?;
        let space = FockSpace::new(c.params)?;
        Ok((c, space))
    }
}

fn verify(common: &Common) -> Result<u8, Failure> {
    let config = common.config()?;
    let records = harness::run_suite(&config)?;
    match config.format {
        Format::Json => print!("{}", harness::to_json(&records)),
        Format::Csv => print!("{}", harness::to_csv(&records)),
    }
    if let Some(out) = &config.output {
        let (json, csv) = harness::write_reports(&records, out)?;
        eprintln!("wrote {} and {}", json.display(), csv.display());
    }
    for r in &records {
        if r.near_saturation > 0 {
            eprintln!(
                "note: {}: {} of {} instances within 1% of saturation",
                r.check_id, r.near_saturation, r.instances
            );
        }
        if !r.pass {
            eprintln!("FAIL {}: lhs {:e} rhs {:e}", r.check_id, r.lhs, r.rhs);
        }
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    eprintln!("{} records, {} failed", records.len(), failed);
    Ok(if failed == 0 { 0 } else { EXIT_FAIL })
}

fn norm(file: &Path, common: &Common) -> Result<u8, Failure> {
    let f = series_file(file)?;
    let (config, space) = common.space()?;
    let sup = space.norm(&f);
    let slice_i = space.norm_slice(&f, ImaginaryUnit::i());
    match common.format.map(|_| config.format) {
        Some(Format::Json) => println!(
            "{}",
            json!({
                "norm": sup.norm,
                "power": sup.power,
                "unit": sup.unit.vector(),
                "slice_i": slice_i,
                "p": config.params.p,
                "alpha": config.params.alpha,
                "domain": config.params.domain.to_string(),
            })
        ),
        Some(Format::Csv) => {
            println!("norm,power,slice_i,p,alpha,domain");
            println!(
                "{},{},{},{},{},{}",
                sup.norm,
                sup.power,
                slice_i,
                config.params.p,
                config.params.alpha,
                config.params.domain
            );
        }
        None => {
            println!("norm     {}", sup.norm);
            println!("power    {}", sup.power);
            println!("unit     {}", sup.unit);
            println!("slice-i  {slice_i}");
        }
    }
    Ok(0)
}

fn kernel(q: &str, w: &str, common: &Common) -> Result<u8, Failure> {
    let (q, w) = (quaternion(q)?, quaternion(w)?);
    let (_, space) = common.space()?;
    let k = space.kernel_eval(q, w);
    let c = space.corrected_kernel_eval(q, w);
    println!("kernel     {k}");
    println!("corrected  {c}");
    println!("abs-diff   {:e}", (k - c).norm());
    Ok(0)
}

fn gram(common: &Common) -> Result<u8, Failure> {
    let (config, space) = common.space()?;
    let params = config.params;
    let top = common.degree.unwrap_or(12).min(params.truncation);
    let table = space.gram_table();
    let closed = table.closed_form();
    let plane = table.plane_limit();
    let rows: Vec<_> = (0..=top)
        .map(|m| {
            let oracle = gram_simpson(params.alpha, params.domain.radius(), m);
            (m, table.diag[m], closed[m], oracle, plane[m])
        })
        .collect();
    match common.format.map(|_| config.format) {
        Some(Format::Json) => {
            let v: Vec<_> = rows
                .iter()
                .map(|&(m, g, c, o, p)| json!({"m": m, "grid": g, "closed_form": c, "oracle": o, "plane_limit": p}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("json values serialize")
            );
        }
        Some(Format::Csv) => {
            println!("m,grid,closed_form,oracle,plane_limit");
            for (m, g, c, o, p) in rows {
                println!("{m},{g},{c},{o},{p}");
            }
        }
        None => {
            println!("# {} alpha={}", params.domain, params.alpha);
            println!(
                "{:>3} {:>24} {:>24} {:>24} {:>24}",
                "m", "grid", "closed-form", "oracle", "plane-limit"
            );
            for (m, g, c, o, p) in rows {
                println!("{m:>3} {g:>24.17e} {c:>24.17e} {o:>24.17e} {p:>24.17e}");
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify(common) => verify(&common),
        Command::Eval { file, q } => {
            let f = series_file(&file)?;
            let q = quaternion(&q.join(" "))?;
            println!("{}", f.eval(q));
            Ok(0)
        }
        Command::Norm { file, common } => norm(&file, &common),
        Command::Kernel { q, w, common } => kernel(&q, &w, &common),
        Command::Gram(common) => gram(&common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
