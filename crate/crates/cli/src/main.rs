//! `parinv`: JSON-lines front end for the invariant generator library.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parinv_core::generators::{describe, evaluate_json};
use parinv_core::linalg::RationalMatrix;
use parinv_core::sampling::{Sampler, Seed, ShapeSampler, SliceVariant, DEFAULT_BOUND};
use parinv_core::shapes::{make_shape, FlagShape, GroupKind};
use parinv_core::verification::{check_adjugate_minor_lemma, orbit_dimension, run_suite, SuiteOptions};
use parinv_core::Error;

#[derive(Parser)]
#[command(name = "parinv", version, about = "Generators of invariant fields for parabolic unipotent radicals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator descriptors as JSON lines
    Describe {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate every generator at a matrix read from a JSON file
    Eval {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the verification suite and print its report
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        trials: TrialArgs,
        /// Swap the generators for mutated descriptors (negative control)
        #[arg(long, hide = true)]
        mutate: bool,
        /// Also check the second connected component of O(N)
        #[arg(long)]
        swap_component: bool,
        /// Record wall-clock time (makes the report non-reproducible)
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Dimension of the radical orbit through a point
    OrbitDim {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        trials: TrialArgs,
        /// Matrix file; a seeded group point is used when absent
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Print seeded sample matrices
    Sample {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        trials: TrialArgs,
        #[arg(long, value_enum, default_value_t = SampleKind::Group)]
        kind: SampleKind,
        #[arg(long, default_value_t = 1)]
        count: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Quick internal consistency run on a small built-in shape
    Selftest {
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, value_parser = parse_kind)]
    group: GroupKind,
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    parts: Vec<usize>,
}

#[derive(Args)]
struct TrialArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: i64,
    #[arg(long, default_value_t = 100)]
    trials: u32,
}

#[derive(Args)]
struct OutArgs {
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Group,
    Radical,
    Slice,
    Slice0,
    SliceCirc,
}

fn parse_kind(s: &str) -> Result<GroupKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Input(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl ShapeArgs {
    fn shape(&self) -> Result<FlagShape, Failure> {
        Ok(make_shape(self.group, self.n, self.parts.clone())?)
    }
}

struct Sink(Box<dyn Write>);

impl Sink {
    fn open(args: &OutArgs) -> Result<Self, Failure> {
        Ok(Sink(match &args.out {
            Some(p) => Box::new(BufWriter::new(fs::File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        }))
    }

    fn line(&mut self, v: &Value) -> Result<(), Failure> {
        writeln!(self.0, "{v}")?;
        self.0.flush()?;
        Ok(())
    }
}

fn read_matrix(path: &PathBuf, n: usize) -> Result<RationalMatrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let m = RationalMatrix::from_json_str(&text)?;
    if m.rows() != n || m.cols() != n {
        return Err(Failure::Input(format!("matrix is {}x{}, shape needs {n}x{n}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn configure_threads() {
    if let Some(k) = std::env::var("PARINV_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if k > 0 {
            // only fails if a pool already exists, which cannot happen this early
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Describe { shape, out } => {
            let shape = shape.shape()?;
            let mut sink = Sink::open(&out)?;
            for line in describe(&shape)? {
                sink.line(&line)?;
            }
        }
        Command::Eval { shape, matrix, out } => {
            let shape = shape.shape()?;
            let x = read_matrix(&matrix, shape.n())?;
            let v = evaluate_json(&shape, &x)?;
            Sink::open(&out)?.line(&v)?;
        }
        Command::Verify { shape, trials, mutate, swap_component, timing, out } => {
            let shape = shape.shape()?;
            let mut opts = SuiteOptions::new(trials.seed, trials.trials, trials.bound);
            opts.mutate = mutate;
            opts.swap_component = swap_component;
            let start = Instant::now();
            let mut report = run_suite(&shape, &opts)?;
            if timing {
                report.duration_ms = Some(start.elapsed().as_millis() as u64);
            }
            for c in &report.checks {
                eprintln!("{:<28} {}", c.name, if c.pass { "pass" } else { "FAIL" });
            }
            Sink::open(&out)?.line(&report.to_json())?;
            if !report.passed() {
                return Err(Failure::Checks);
            }
        }
        Command::OrbitDim { shape, trials, matrix, out } => {
            let shape = shape.shape()?;
            let x = match matrix {
                Some(p) => read_matrix(&p, shape.n())?,
                None => ShapeSampler::new(&shape)
                    .sample_group_point(&mut Sampler::new(Seed::new(trials.seed, 0)), trials.bound, false)?
                    .into_matrix(),
            };
            let d = orbit_dimension(&shape, &x)?;
            Sink::open(&out)?.line(&json!({ "shape": shape, "orbit_dimension": d, "point": x.to_json() }))?;
        }
        Command::Sample { shape, trials, kind, count, out } => {
            let shape = shape.shape()?;
            let sampler = ShapeSampler::new(&shape);
            let mut sink = Sink::open(&out)?;
            for t in 0..count {
                let mut rng = Sampler::new(Seed::new(trials.seed, t as u64));
                let (m, sign) = match kind {
                    SampleKind::Group => (sampler.sample_group_point(&mut rng, trials.bound, false)?, None),
                    SampleKind::Radical => (sampler.sample_unipotent_radical(&mut rng, trials.bound)?, None),
                    SampleKind::Slice | SampleKind::Slice0 | SampleKind::SliceCirc => {
                        let variant = match kind {
                            SampleKind::Slice => SliceVariant::S,
                            SampleKind::Slice0 => SliceVariant::S0,
                            _ => SliceVariant::SCirc,
                        };
                        let p = sampler.sample_slice(&mut rng, trials.bound, variant)?;
                        (p.point, p.sign)
                    }
                };
                let mut line = json!({ "index": t, "matrix": m.matrix().to_json() });
                if let Some(s) = sign {
                    line["sign"] = json!(s);
                }
                sink.line(&line)?;
            }
        }
        Command::Selftest { out } => {
            let mut sink = Sink::open(&out)?;
            let mut ok = true;
            for (kind, n, parts) in [(GroupKind::Gl, 4, vec![1, 3]), (GroupKind::Sp, 4, vec![1, 2, 1])] {
                let shape = make_shape(kind, n, parts)?;
                let report = run_suite(&shape, &SuiteOptions::new(0, 10, DEFAULT_BOUND))?;
                ok &= report.passed();
                sink.line(&json!({ "shape": shape, "pass": report.passed() }))?;
            }
            let lemma = check_adjugate_minor_lemma(4, 0, 10, DEFAULT_BOUND);
            ok &= lemma.pass;
            sink.line(&json!({ "check": lemma.name, "pass": lemma.pass }))?;
            if !ok {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => {
            eprintln!("parinv: some checks failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("parinv: {msg}");
            ExitCode::from(2)
        }
    }
}
