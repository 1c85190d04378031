use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use symcone::harness::{
    boundary_from_json, boundary_to_json, element_from_json, element_to_json, parse_tolerance, read_config_file,
    run_suite, sample_boundary, sample_cone, sample_element, sample_interior, sample_rng, sample_x, write_jsonl,
    ConfigOverrides, RunConfig, Suite,
};
use symcone::spectral::spectral_decompose;
use symcone::wiener_hopf::{act, act_direct, cayley, embed, represent, CompactifiedPoint};
use symcone::Algebra;

#[derive(Parser)]
#[command(name = "symcone", version, about = "Symmetric cones, their order-interval compactification and property checks")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Algebra descriptor, e.g. `sym:3` or `sum(sym:2,spin:3)`. Repeat for several.
    #[arg(long, global = true)]
    algebra: Vec<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Tolerance override `check=value`. Repeatable.
    #[arg(long = "tol", global = true, value_name = "CHECK=VALUE")]
    tol: Vec<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// `key = value` config file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run property suites and emit JSON-lines reports.
    Verify {
        /// Suites to run (alg, hua, spec, wh, axb). Defaults to all.
        #[arg(long = "suite", value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Spectral decomposition of an element.
    Spectral {
        /// Element JSON, inline or a file path.
        input: String,
    },
    /// Apply the cone action `u ⊞ a`.
    Act {
        /// Point of [-1, 1] as element JSON, inline or a file path.
        point: String,
        /// Cone element as element JSON, inline or a file path.
        by: String,
        /// Use the closed formula instead of the boundary representation.
        #[arg(long)]
        direct: bool,
    },
    /// Convert between the cone, the interval [-1, 1] and boundary pairs.
    Compactify {
        #[arg(value_enum)]
        mode: CompactifyMode,
        /// Element or boundary-point JSON, inline or a file path.
        input: String,
    },
    /// Run the ax+b suite.
    Axb,
    /// Emit random samples as JSON lines.
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CompactifyMode {
    /// Cone element x to i(x) = (x - 1)/(x + 1).
    Cayley,
    /// Boundary pair (e, x) to its point of [-1, 1].
    Embed,
    /// Point of [-1, 1] to its boundary pair (e, x).
    Represent,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Element,
    Cone,
    Interior,
    Boundary,
    X,
}

fn read_input(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

fn output(global: &GlobalArgs, text: &str) -> Result<()> {
    match &global.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn overrides(global: &GlobalArgs, suites: Option<Vec<String>>) -> Result<ConfigOverrides> {
    let tolerances = global.tol.iter().map(|t| parse_tolerance(t)).collect::<symcone::Result<_>>()?;
    Ok(ConfigOverrides {
        algebras: (!global.algebra.is_empty()).then(|| global.algebra.clone()),
        seed: global.seed,
        samples: global.samples,
        tolerances,
        suites,
        out: global.out.clone(),
        jobs: global.jobs,
    })
}

fn build_config(global: &GlobalArgs, suites: Option<Vec<String>>) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &global.config {
        read_config_file(path)?.apply(&mut cfg)?;
    }
    overrides(global, suites)?.apply(&mut cfg)?;
    cfg.validate()?;
    Ok(cfg)
}

fn verify(global: &GlobalArgs, suites: Option<Vec<String>>) -> Result<bool> {
    let cfg = build_config(global, suites)?;
    let reports = run_suite(&cfg)?;
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!(
            "FAIL {} on {}: residual {:e} > {:e}{}",
            r.check_id,
            r.algebra,
            r.max_residual,
            r.tolerance,
            r.first_error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()
        );
    }
    if cfg.out.is_none() {
        write_jsonl(std::io::stdout().lock(), &reports)?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn single_algebra(global: &GlobalArgs) -> Result<Algebra> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &global.config {
        read_config_file(path)?.apply(&mut cfg)?;
    }
    overrides(global, None)?.apply(&mut cfg)?;
    match cfg.algebras.as_slice() {
        [a] => Ok(Arc::new(a.clone())),
        _ if global.algebra.is_empty() && global.config.is_none() => bail!("--algebra is required"),
        _ => bail!("exactly one algebra expected"),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    match cli.command {
        Command::Verify { suites } => verify(g, (!suites.is_empty()).then_some(suites)),
        Command::Axb => verify(g, Some(vec![Suite::Axb.to_string()])),
        Command::Spectral { input } => {
            let x = element_from_json(&read_input(&input)?)?;
            let sd = spectral_decompose(&x)?;
            let idempotents: Vec<serde_json::Value> =
                sd.idempotents().iter().map(|c| serde_json::from_str(&element_to_json(c))).collect::<Result<_, _>>()?;
            let v = json!({ "eigenvalues": sd.eigenvalues(), "idempotents": idempotents });
            output(g, &format!("{v}\n"))?;
            Ok(true)
        }
        Command::Act { point, by, direct } => {
            let u = CompactifiedPoint::new(element_from_json(&read_input(&point)?)?)?;
            let a = element_from_json(&read_input(&by)?)?;
            let v = if direct { act_direct(&u, &a)? } else { act(&u, &a)? };
            output(g, &format!("{}\n", element_to_json(v.element())))?;
            Ok(true)
        }
        Command::Compactify { mode, input } => {
            let text = read_input(&input)?;
            let result = match mode {
                CompactifyMode::Cayley => element_to_json(cayley(&element_from_json(&text)?)?.element()),
                CompactifyMode::Embed => element_to_json(embed(&boundary_from_json(&text)?)?.element()),
                CompactifyMode::Represent => {
                    boundary_to_json(&represent(&CompactifiedPoint::new(element_from_json(&text)?)?)?)
                }
            };
            output(g, &format!("{result}\n"))?;
            Ok(true)
        }
        Command::Sample { kind, count } => {
            let alg = single_algebra(g)?;
            let seed = g.seed.unwrap_or(42);
            let stream = format!("sample/{alg}");
            let mut lines = String::new();
            for i in 0..count {
                let mut rng = sample_rng(seed, &stream, i);
                let line = match kind {
                    SampleKind::Element => element_to_json(&sample_element(&alg, &mut rng)),
                    SampleKind::Cone => element_to_json(&sample_cone(&alg, &mut rng)),
                    SampleKind::Interior => element_to_json(&sample_interior(&alg, &mut rng)),
                    SampleKind::Boundary => boundary_to_json(&sample_boundary(&alg, &mut rng)?),
                    SampleKind::X => element_to_json(sample_x(&alg, &mut rng)?.element()),
                };
                lines.push_str(&line);
                lines.push('\n');
            }
            output(g, &lines)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
