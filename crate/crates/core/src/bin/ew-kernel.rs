use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ew_kernel::harness::{self, Instance, InstanceFile, Profile, Report};
use ew_kernel::{Field, FieldSpec, Fp, KernelError, Q};

#[derive(Parser)]
#[command(name = "ew-kernel", version, about = "Exact checks for module categories over commutative algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a deterministic instance.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Profile::Small)]
        profile: Profile,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a suite on an instance.
    Run {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        instance: PathBuf,
        /// Seed for the samples drawn by the suite; defaults to the instance seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Six-functor checks for one named map between builtin algebras.
    Six {
        #[arg(long)]
        algebra_src: String,
        #[arg(long)]
        algebra_dst: String,
        #[arg(long)]
        morphism: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The main correspondence suite on an instance.
    MainThm {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The Day convolution suite on an instance.
    Day {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Probe a functor expression such as `tensor(X) ; restrict(f)` for cocontinuity.
    Probe {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        functor: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Calls `$body` with `$t` bound to the field type named by `$spec`.
macro_rules! with_field {
    ($spec:expr, $t:ident, $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                type $t = Q;
                $body
            }
            FieldSpec::Prime(p) => with_field!(@prime p, $t, $body,
                2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97
                101 257 7919 65537 1000003)
        }
    };
    (@prime $p:expr, $t:ident, $body:expr, $($q:literal)*) => {
        match $p {
            $($q => {
                type $t = Fp<$q>;
                $body
            })*
            other => Err(KernelError::Invalid(format!(
                "prime {other} is not compiled in; supported primes are 2..97, 101, 257, 7919, 65537 and 1000003"
            ))),
        }
    };
}

fn read_instance(path: &PathBuf) -> Result<InstanceFile, KernelError> {
    let text = fs::read_to_string(path).map_err(|e| KernelError::Invalid(format!("{}: {e}", path.display())))?;
    InstanceFile::from_json(&text)
}

/// A closed pipe on stdout (`| head`) is not an error.
fn stdout(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), KernelError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| KernelError::Invalid(format!("{}: {e}", p.display()))),
        None => {
            stdout(text);
            Ok(())
        }
    }
}

fn suite_on_file(suite: &str, path: &PathBuf, seed: Option<u64>) -> Result<Report, KernelError> {
    let file = read_instance(path)?;
    with_field!(file.field_spec()?, K, {
        let inst = Instance::<K>::from_file(&file)?;
        harness::run_suite(suite, &inst, seed.unwrap_or(inst.seed))
    })
}

fn emit(report: Report, path: Option<&PathBuf>) -> Result<bool, KernelError> {
    let text = report.to_json();
    if path.is_some() {
        for c in &report.checks {
            eprintln!("{:?} {} ({} samples)", c.status, c.id, c.samples);
        }
    }
    write_out(path, &text)?;
    Ok(report.passed)
}

fn run(cli: Cli) -> Result<bool, KernelError> {
    match cli.cmd {
        Cmd::Generate {
            seed,
            profile,
            field,
            output,
        } => {
            let text = with_field!(field, K, harness::generate::<K>(seed, profile).map(|i| i.to_file().to_json()))?;
            write_out(output.as_ref(), &text)?;
            Ok(true)
        }
        Cmd::Run {
            suite,
            instance,
            seed,
            report,
        } => emit(suite_on_file(&suite, &instance, seed)?, report.as_ref()),
        Cmd::MainThm { instance, seed, report } => emit(suite_on_file("main-thm", &instance, seed)?, report.as_ref()),
        Cmd::Day { instance, seed, report } => emit(suite_on_file("day", &instance, seed)?, report.as_ref()),
        Cmd::Six {
            algebra_src,
            algebra_dst,
            morphism,
            seed,
            samples,
            field,
            report,
        } => {
            let rep = with_field!(field, K, {
                let inst = harness::generate::<K>(seed, Profile::Small)?;
                let f = inst
                    .morphisms
                    .get(&morphism)
                    .ok_or_else(|| KernelError::Unknown(format!("morphism `{morphism}`")))?;
                let src = ew_kernel::monoids::builtin::<K>(&algebra_src)?;
                let dst = ew_kernel::monoids::builtin::<K>(&algebra_dst)?;
                if f.src != src || f.dst != dst {
                    return Err(KernelError::BaseMismatch(format!(
                        "`{morphism}` does not go from {algebra_src} to {algebra_dst}"
                    )));
                }
                harness::run_six(&inst, &morphism, samples, seed)
            })?;
            emit(rep, report.as_ref())
        }
        Cmd::Probe { instance, functor, seed } => {
            let file = read_instance(&instance)?;
            let (name, verdict, field) = with_field!(file.field_spec()?, K, {
                let inst = Instance::<K>::from_file(&file)?;
                harness::probe(&inst, &functor, seed).map(|(n, v)| (n, v, K::spec()))
            })?;
            let out = serde_json::json!({
                "functor": name,
                "field": field.to_string(),
                "all_invertible": verdict.all_invertible(),
                "samples": verdict.samples.iter().map(|s| serde_json::json!({
                    "source_dim": s.source_dim,
                    "target_dim": s.target_dim,
                    "rank": s.rank,
                    "invertible": s.invertible,
                })).collect::<Vec<_>>(),
            });
            stdout(&format!("{}\n", serde_json::to_string_pretty(&out).expect("json")));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
