use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spinterp::blackbox::{make_instance, Instance, InstanceConfig};
use spinterp::decode::{cheb_probe_plan, decode_e, power_probe_plan, verify_candidate, EvalBlock};
use spinterp::fixtures::non_unique_example;
use spinterp::format::{parse_instance, parse_poly, write_instance, write_poly, write_result, ResultFile};
use spinterp::scalar::PointLayout;
use spinterp::selftest::{self, GridConfig};
use spinterp::{Basis, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FIELD: u8 = 3;
const EXIT_DECODE: u8 = 4;

#[derive(Parser)]
#[command(name = "spinterp", version, about = "Sparse polynomial list interpolation with error correction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Power,
    Cheb1,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Power => Basis::Power,
            BasisArg::Cheb1 => Basis::Chebyshev1,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance with planted errors
    Gen {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        basis: BasisArg,
        /// Sparsity bound
        #[arg(long = "B")]
        b: usize,
        /// Degree bound
        #[arg(long = "D")]
        d: u64,
        /// Number of errors to plant (and the decoder's error bound)
        #[arg(long = "E")]
        e: usize,
        /// Number of terms of the hidden polynomial (default: B)
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Probe an instance's black box and list every consistent sparse polynomial
    Decode {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Count the probes a polynomial disagrees with; succeeds iff at most --max-errors
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        #[arg(long = "max-errors")]
        max_errors: usize,
    },
    /// Write the two-interpolant example over GF(13): instance.spi, f1.poly, f2.poly
    Fixture {
        #[arg(long = "out-dir")]
        out_dir: PathBuf,
    },
    /// Run the built-in acceptance checks
    Selftest {
        /// Seeds per (B, E) grid cell
        #[arg(long, default_value_t = 20)]
        seeds: u64,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SelectionExhausted(_) => EXIT_FIELD,
            Error::DecodeFailed => EXIT_DECODE,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: EXIT_USAGE, msg: format!("{}: {e}", path.display()) })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure { code: EXIT_USAGE, msg: format!("{}: {e}", path.display()) })
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure { code: EXIT_USAGE, msg: format!("{}: {e}", path.display()) })
}

/// The blocks a decoder would see, or the recorded transcript if the instance has one.
fn observed_blocks(inst: &Instance) -> Result<Vec<EvalBlock>, Failure> {
    if let Some(tr) = &inst.transcript {
        let entries = tr.iter().enumerate().map(|(k, &(x, v))| (k + 1, x, v)).collect();
        let layout = match inst.basis {
            Basis::Power => PointLayout::Powers,
            Basis::Chebyshev1 => PointLayout::ChebyshevOdd,
        };
        return Ok(vec![EvalBlock { base: inst.field.one(), layout, entries }]);
    }
    let plan = match inst.basis {
        Basis::Power => power_probe_plan(inst.field, inst.b, inst.d, inst.e, inst.seed)?,
        Basis::Chebyshev1 => cheb_probe_plan(inst.field, inst.b, inst.d, inst.e, inst.seed)?,
    };
    let mut oracle = inst.oracle()?;
    plan.bases
        .iter()
        .zip(&plan.lengths)
        .map(|(&w, &len)| {
            let entries = (1..=len)
                .map(|i| {
                    let x = plan.layout.point(w, i);
                    Ok((i, x, oracle.probe(x)?))
                })
                .collect::<Result<_, Error>>()?;
            Ok(EvalBlock { base: w, layout: plan.layout, entries })
        })
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { p, basis, b, d, e, t, seed, out } => {
            let cfg = InstanceConfig { p, basis: basis.into(), b, d, e, t };
            let (inst, _) = make_instance(&cfg, seed)?;
            write(&out, &write_instance(&inst))?;
            Ok(0)
        }
        Command::Decode { instance, out } => {
            let inst = load_instance(&instance)?;
            let mut oracle = inst.oracle()?;
            let res = decode_e(&mut oracle, inst.basis, inst.b, inst.d, inst.e, inst.field, inst.seed)?;
            write(&out, &write_result(&ResultFile::from_decode(inst.field, inst.basis, &res)))?;
            let hit = res.candidates.iter().any(|c| c.poly == inst.hidden);
            println!(
                "N = {}, {} candidate(s), hidden polynomial {}",
                res.probes_used,
                res.candidates.len(),
                if hit { "listed" } else { "not listed" }
            );
            Ok(0)
        }
        Command::Verify { instance, poly, max_errors } => {
            let inst = load_instance(&instance)?;
            let f = parse_poly(&read(&poly)?)
                .map_err(|e| Failure { code: EXIT_USAGE, msg: format!("{}: {e}", poly.display()) })?;
            if f.field() != inst.field || f.basis() != inst.basis {
                return Err(Failure {
                    code: EXIT_USAGE,
                    msg: "polynomial and instance use different fields or bases".into(),
                });
            }
            let blocks = observed_blocks(&inst)?;
            let mism = verify_candidate(&f, &blocks);
            let listed: Vec<String> = mism.iter().map(|(s, i)| format!("{s}:{i}")).collect();
            println!("mismatches {} {}", mism.len(), listed.join(" "));
            Ok(if mism.len() <= max_errors { 0 } else { EXIT_FAIL })
        }
        Command::Fixture { out_dir } => {
            let ex = non_unique_example();
            fs::create_dir_all(&out_dir)
                .map_err(|e| Failure { code: EXIT_USAGE, msg: format!("{}: {e}", out_dir.display()) })?;
            write(&out_dir.join("instance.spi"), &write_instance(&ex.instance()))?;
            write(&out_dir.join("f1.poly"), &write_poly(&ex.f1))?;
            write(&out_dir.join("f2.poly"), &write_poly(&ex.f2))?;
            Ok(0)
        }
        Command::Selftest { seeds } => {
            let checks = selftest::run(&GridConfig { seeds, ..GridConfig::default() });
            for c in &checks {
                println!("{:>2}  {}  {}: {}", c.id, if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
            }
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("spinterp: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
