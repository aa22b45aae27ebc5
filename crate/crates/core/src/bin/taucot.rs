//! Command-line front end: loads an algebra, runs one computation or
//! verification suite, prints JSON (or DOT) and optionally writes it to a
//! directory. Exit codes: 0 pass, 1 verification failure, 2 input error,
//! 3 search guard abort.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tau_cotorsion::algebra::Algebra;
use tau_cotorsion::bbridge::bb_report;
use tau_cotorsion::context::{Context, DEFAULT_CAP};
use tau_cotorsion::cotorsion::{cotorsion_report, hrs_check};
use tau_cotorsion::modrep::{EnumConfig, ModuleFile};
use tau_cotorsion::report::Report;
use tau_cotorsion::suite::{explicit_pair, find_silting, precondition_failure, resolve_modules, resolve_two_term, verify_all};
use tau_cotorsion::torsion::{enumerate_support_tau_tilting, is_support_tau_tilting, lw_verify, sum_name, torsion_poset_dot, triple, triple_report};
use tau_cotorsion::twoterm::enumerate_two_term_silting;
use tau_cotorsion::Error;

#[derive(Parser)]
#[command(name = "taucot", version, about = "Support τ-tilting modules, weak cotorsion pairs and two-term silting complexes")]
struct Cli {
    /// Algebra description (JSON).
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    /// Largest total dimension of enumerated modules.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    dim_bound: u64,
    /// Largest number of summands in the direct sums a verifier examines.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Largest number of candidates an enumeration may examine.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    guard: u64,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Directory receiving the output file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate indecomposable modules.
    Indecs,
    /// Auslander-Reiten translate of a module.
    Tau { module: String },
    /// Basic support τ-tilting modules.
    Stt,
    /// The triple (C, Gen T, T⊥) of a support τ-tilting module, verified.
    Triple { t: String },
    /// Verify that (add C, add T) is a left weak cotorsion pair.
    VerifyLw { c: String, t: String },
    /// Basic two-term silting complexes.
    Silting,
    /// Verify the complete cotorsion pair of a silting complex.
    VerifyCotorsion { p: String },
    /// Verify the shifted pair inside add P ∗ add P[1].
    Hrs { p: String },
    /// Endomorphism-side checks for a silting complex.
    Bb { p: String },
    /// Run every suite.
    VerifyAll,
    /// Hasse diagram of torsion classes in DOT.
    ExportDot,
}

enum Output {
    Json(Value, bool),
    Dot(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => emit(&cli, out),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Guard { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn emit(cli: &Cli, out: Output) -> ExitCode {
    let (text, pass, ext) = match out {
        Output::Json(v, pass) => (serde_json::to_string_pretty(&v).expect("json") + "\n", pass, "json"),
        Output::Dot(s) => (s, true, "dot"),
    };
    print!("{text}");
    if let Some(dir) = &cli.out {
        let file = dir.join(format!("{}.{ext}", command_name(&cli.command)));
        if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&file, &text)) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Indecs => "indecs",
        Command::Tau { .. } => "tau",
        Command::Stt => "stt",
        Command::Triple { .. } => "triple",
        Command::VerifyLw { .. } => "verify-lw",
        Command::Silting => "silting",
        Command::VerifyCotorsion { .. } => "verify-cotorsion",
        Command::Hrs { .. } => "hrs",
        Command::Bb { .. } => "bb",
        Command::VerifyAll => "verify-all",
        Command::ExportDot => "export-dot",
    }
}

fn load(cli: &Cli) -> Result<Context, Error> {
    let path = cli.algebra.as_ref().ok_or_else(|| Error::Parse("--algebra is required".into()))?;
    let alg = Algebra::from_json(&std::fs::read_to_string(path)?)?;
    let cfg = EnumConfig { bound: cli.dim_bound as usize, guard: cli.guard as u128, ..EnumConfig::default() };
    Ok(Context::new(alg, cfg)?.with_cap(cli.cap as usize))
}

fn report(r: Report) -> Output {
    let pass = r.passed();
    Output::Json(r.to_json(), pass)
}

fn names(ctx: &Context, idx: &[usize]) -> Vec<String> {
    ctx.name_list(idx)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let ctx = load(cli)?;
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Indecs => {
            let list: Vec<Value> = ctx
                .modules
                .iter()
                .map(|m| {
                    json!({
                        "name": m.name,
                        "aliases": m.aliases,
                        "key": m.key,
                        "dims": m.rep.dims(),
                        "tauRigid": m.tau_rigid,
                        "tau": ctx.summand_indices(&m.tau).map(|i| names(&ctx, &i)).unwrap_or_default(),
                        "module": ModuleFile::from_rep(&m.rep),
                    })
                })
                .collect();
            Output::Json(json!({"algebra": ctx.alg.name(), "dim": ctx.alg.dim(), "indecomposables": list}), true)
        }
        Command::Tau { module } => {
            let idx = resolve_modules(&ctx, module)?;
            let m = ctx.sum_of(&idx);
            let tau_summands: Vec<usize> = idx.iter().flat_map(|&i| ctx.summand_indices(&ctx.modules[i].tau).unwrap_or_default()).collect();
            let mut tau_sorted = tau_summands;
            tau_sorted.sort_unstable();
            let tau_rep = ctx.sum_of(&tau_sorted);
            Output::Json(
                json!({
                    "module": sum_name(&ctx, &idx),
                    "dims": m.dims(),
                    "tau": sum_name(&ctx, &tau_sorted),
                    "tauDims": tau_rep.dims(),
                    "tauModule": ModuleFile::from_rep(&tau_rep),
                }),
                true,
            )
        }
        Command::Stt => {
            let list: Vec<Value> = enumerate_support_tau_tilting(&ctx)
                .iter()
                .map(|t| {
                    let vertices: Vec<String> = t.vertices.iter().map(|&v| ctx.alg.quiver().vertices()[v].clone()).collect();
                    json!({"T": t.name(&ctx), "summands": names(&ctx, &t.modules), "projectiveVertices": vertices})
                })
                .collect();
            Output::Json(json!({"algebra": ctx.alg.name(), "count": list.len(), "supportTauTilting": list}), true)
        }
        Command::Triple { t } => {
            let idx = resolve_modules(&ctx, t)?;
            if !is_support_tau_tilting(&ctx, &idx) {
                return Ok(report(precondition_failure("triple", &sum_name(&ctx, &idx), &ctx, "support-tau-tilting")));
            }
            report(triple_report(&ctx, &triple(&ctx, &idx)?))
        }
        Command::VerifyLw { c, t } => {
            let (c, t) = explicit_pair(&ctx, c, t)?;
            report(lw_verify(&ctx, &c, &t))
        }
        Command::Silting => {
            let list: Vec<Value> = enumerate_two_term_silting(&ctx)?
                .iter()
                .map(|s| {
                    let parts: Vec<String> = s.summands.iter().map(|&i| ctx.two_term_names[i].clone()).collect();
                    let h0 = ctx.summand_indices(&s.complex.h0()).map(|i| names(&ctx, &i)).unwrap_or_default();
                    let g: Vec<Vec<i64>> = s.summands.iter().map(|&i| ctx.two_term[i].g_vector()).collect();
                    json!({"P": parts.join("⊕"), "summands": parts, "gVectors": g, "H0": h0})
                })
                .collect();
            Output::Json(json!({"algebra": ctx.alg.name(), "count": list.len(), "silting": list}), true)
        }
        Command::VerifyCotorsion { p } | Command::Hrs { p } | Command::Bb { p } => {
            let idx = resolve_two_term(&ctx, p)?;
            let label = idx.iter().map(|&i| ctx.two_term_names[i].clone()).collect::<Vec<_>>().join("⊕");
            let kind = command_name(&cli.command);
            let Some(s) = find_silting(&ctx, &idx)? else {
                return Ok(report(precondition_failure(kind, &label, &ctx, "silting")));
            };
            report(match &cli.command {
                Command::VerifyCotorsion { .. } => cotorsion_report(&ctx, &s, seed).1,
                Command::Hrs { .. } => hrs_check(&ctx, &s, seed),
                _ => bb_report(&ctx, &s, seed)?,
            })
        }
        Command::VerifyAll => report(verify_all(&ctx, seed)?),
        Command::ExportDot => Output::Dot(torsion_poset_dot(&ctx, &enumerate_support_tau_tilting(&ctx))),
    })
}
