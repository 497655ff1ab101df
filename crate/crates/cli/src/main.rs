use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use snc_cohom::generate::{generate_random, GenParams};
use snc_cohom::grassmann::rank_one_check;
use snc_cohom::instance::{parse_instance, InstanceError};
use snc_cohom::rewrite::{reduce, RewriteTrace};
use snc_cohom::suite::{exit_status, render_human, render_machine, run_suite, Check, SuiteInput};

#[derive(Parser)]
#[command(name = "snc-cohom", version, about = "Exact cohomology checks for covers and closed-cover resolutions")]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    machine: bool,
    /// Spread instances over worker threads.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Totalized resolution vs relative cohomology of the pair.
    VerifyResolution(InstanceArgs),
    /// Pseudo-Mayer-Vietoris total cohomology vs the shifted deepest intersection.
    VerifyFinal(InstanceArgs),
    /// Companion pair cohomology vs the shifted deepest intersection.
    VerifyTheorem(InstanceArgs),
    /// Certify every step of the reduction on each cover.
    VerifyTrace(InstanceArgs),
    /// Reduce the formal complex for r open sets.
    Reduce {
        #[arg(long = "r")]
        r: usize,
        /// Print every step.
        #[arg(long)]
        trace: bool,
    },
    /// Top Betti number of the torus complement for d = 1.
    RankOne {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Print a random cover instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long)]
        dimension: Option<usize>,
        #[arg(long = "r")]
        r: Option<usize>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance files or directories of `*.json` files.
    paths: Vec<PathBuf>,
    /// First seed of the random suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random instances to add.
    #[arg(long, default_value_t = 0)]
    random: u64,
}

struct UsageError(String);

fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>, UsageError> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let entries = fs::read_dir(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

fn load(path: &Path) -> Result<SuiteInput, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    match parse_instance(&text) {
        Ok(inst) => Ok(SuiteInput::Loaded(inst)),
        Err(e @ InstanceError::Syntax { .. }) => Err(UsageError(format!("{}: {e}", path.display()))),
        Err(e) => Ok(SuiteInput::Invalid {
            name: path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned()),
            reason: e.to_string(),
        }),
    }
}

fn inputs(args: &InstanceArgs) -> Result<Vec<SuiteInput>, UsageError> {
    let mut out = Vec::new();
    for f in expand(&args.paths)? {
        out.push(load(&f)?);
    }
    for seed in args.seed..args.seed + args.random {
        let file = generate_random(seed, GenParams::for_suite(seed)).map_err(|e| UsageError(e.to_string()))?;
        out.push(match file.load() {
            Ok(inst) => SuiteInput::Loaded(inst),
            Err(e) => SuiteInput::Invalid {
                name: file.name.clone(),
                reason: e.to_string(),
            },
        });
    }
    if out.is_empty() {
        return Err(UsageError("no instances given".into()));
    }
    Ok(out)
}

fn trace_json(t: &RewriteTrace) -> String {
    let steps: Vec<_> = t
        .steps
        .iter()
        .map(|s| {
            serde_json::json!({
                "kind": s.kind.to_string(),
                "degree": s.degree,
                "triple": s.triple(),
                "before": s.before.to_string(),
                "after": s.after.to_string(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "r": t.r,
        "initial": t.initial.to_string(),
        "steps": steps,
        "final": t.final_complex.to_string(),
    });
    serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
}

fn run(cli: Cli) -> Result<i32, UsageError> {
    let check = match &cli.command {
        Command::VerifyResolution(a) => Some((Check::Resolution, a)),
        Command::VerifyFinal(a) => Some((Check::Final, a)),
        Command::VerifyTheorem(a) => Some((Check::Theorem, a)),
        Command::VerifyTrace(a) => Some((Check::Trace, a)),
        _ => None,
    };
    if let Some((check, args)) = check {
        let reports = run_suite(check, &inputs(args)?, cli.parallel);
        if cli.machine {
            print!("{}", render_machine(check.name(), &reports));
        } else {
            print!("{}", render_human(&reports));
        }
        return Ok(exit_status(&reports));
    }
    match cli.command {
        Command::Reduce { r, trace } => {
            if r == 0 {
                return Err(UsageError("--r must be at least 1".into()));
            }
            let t = reduce(r);
            if cli.machine {
                print!("{}", trace_json(&t));
            } else if trace {
                print!("{}", t.render());
            } else {
                println!("r = {r}, {} steps\nfinal: {}", t.steps.len(), t.final_complex);
            }
            Ok(0)
        }
        Command::RankOne { n, degrees, d } => {
            let report = rank_one_check(d, n, &degrees).map_err(|e| UsageError(e.to_string()))?;
            let reports = [report];
            if cli.machine {
                print!("{}", render_machine("rank-one", &reports));
            } else {
                print!("{}", render_human(&reports));
            }
            Ok(exit_status(&reports))
        }
        Command::Gen {
            seed,
            vertices,
            dimension,
            r,
            density,
            out,
        } => {
            let base = GenParams::for_suite(seed);
            let params = GenParams {
                vertices: vertices.unwrap_or(base.vertices),
                dimension: dimension.unwrap_or(base.dimension),
                r: r.unwrap_or(base.r),
                density: density.unwrap_or(base.density),
            };
            let file = generate_random(seed, params).map_err(|e| UsageError(e.to_string()))?;
            match out {
                Some(path) => fs::write(&path, file.to_json()).map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
                None => print!("{}", file.to_json()),
            }
            Ok(0)
        }
        _ => unreachable!("checks handled above"),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
