//! Command-line interface: build bundles, compute support clouds, inspect
//! Ext truncations, and run verification checks.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use scheme_catalog::{build_bundle, bundle_to_json, GroupName};

use crate::checks;
use crate::report::{aggregate_exit, CheckReport};

pub const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "double-supp",
    about = "Exact support-variety computations for Drinfeld doubles of small infinitesimal group schemes",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone)]
pub struct BundleArgs {
    /// Catalog group: ga | sl2 | borel | u
    #[arg(long)]
    pub group: String,
    /// Prime characteristic
    #[arg(long)]
    pub p: u16,
    /// Frobenius height (ga only; others fix r = 1)
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a catalog bundle and write its JSON
    Build {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the pi-point support cloud of a module
    PiSupport {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Module JSON file (over the double of the bundle)
        #[arg(long, conflicts_with = "builtin")]
        module: Option<PathBuf>,
        /// Built-in module: trivial | regular | simple:N | syzygy:N | g-side | o-side
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long, default_value_t = 2)]
        emax: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ext-ring truncation of the double (if local) or of D_psi via --psi
    Ext {
        #[command(flatten)]
        bundle: BundleArgs,
        /// Index into the enumerated one-parameter subgroup list
        #[arg(long, default_value_t = 0)]
        psi: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        emax: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification check: hopf | al | projectivity | tensor-product |
    /// carlson | pi-vs-coh | universal-pi | reconstruction | all
    Verify {
        check: String,
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 2)]
        emax: u8,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 0xD0_0B1E)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// json | table
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Aggregate report files into one table / JSON array
    Report {
        /// Input report JSON files
        #[arg(long = "in", num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "table")]
        format: String,
    },
}

fn parse_group(s: &str) -> Result<GroupName, String> {
    GroupName::parse(s).ok_or_else(|| format!("unknown group '{s}' (expected ga|sl2|borel|u)"))
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Build { bundle, out } => {
            let name = parse_group(&bundle.group)?;
            let b = build_bundle(name, bundle.p, bundle.r).map_err(|e| e.to_string())?;
            let json = serde_json::to_string_pretty(&bundle_to_json(&b)).map_err(|e| e.to_string())?;
            std::fs::write(&out, json).map_err(|e| e.to_string())?;
            println!(
                "bundle {} written to {} (kG dim {}, O(G) dim {})",
                bundle.group,
                out.display(),
                b.kg.dim(),
                b.og.dim()
            );
            Ok(0)
        }
        Command::PiSupport {
            bundle,
            module,
            builtin,
            emax,
            out,
        } => {
            let name = parse_group(&bundle.group)?;
            let session = support_lab::SupportSession::new(name, bundle.p, bundle.r, emax)
                .map_err(|e| e.to_string())?;
            let m = resolve_module(&session, module.as_deref(), builtin.as_deref())?;
            let cloud = support_lab::pi_support(&session, &m).map_err(|e| e.to_string())?;
            let json = serde_json::to_string_pretty(&cloud).map_err(|e| e.to_string())?;
            match out {
                Some(path) => {
                    std::fs::write(&path, json).map_err(|e| e.to_string())?;
                    println!("cloud with {} classes written to {}", cloud.len(), path.display());
                }
                None => println!("{json}"),
            }
            Ok(0)
        }
        Command::Ext {
            bundle,
            psi,
            nmax,
            emax,
            out,
        } => {
            let name = parse_group(&bundle.group)?;
            let session = support_lab::SupportSession::new(name, bundle.p, bundle.r, emax)
                .map_err(|e| e.to_string())?;
            if psi >= session.dpsis.len() {
                return Err(format!(
                    "psi index {psi} out of range ({} enumerated)",
                    session.dpsis.len()
                ));
            }
            let local = &session.dpsis[psi].double.algebra;
            let k = algebra_core::ModuleRep::trivial(local);
            let trunc = support_lab::ext_truncation(local, nmax, &[("k".into(), k)])
                .map_err(|e| e.to_string())?;
            println!(
                "Ext truncation of D_psi (psi {}) to degree {}",
                session.dpsis[psi].psi.label(),
                nmax
            );
            println!("betti: {:?}", trunc.betti);
            println!("degree-2 generators: {}", trunc.deg2.len());
            if let Some(path) = out {
                let payload = serde_json::json!({
                    "psi": session.dpsis[psi].psi.label(),
                    "n_max": nmax,
                    "betti": trunc.betti,
                    "deg2_dim": trunc.deg2.len(),
                });
                std::fs::write(&path, serde_json::to_string_pretty(&payload).unwrap())
                    .map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
        Command::Verify {
            check,
            bundle,
            emax,
            nmax,
            seed,
            samples,
            out,
            format,
        } => {
            let name = parse_group(&bundle.group)?;
            let reports = run_checks(&check, name, bundle.p, bundle.r, emax, nmax, seed, samples)?;
            emit(&reports, out.as_deref(), &format)?;
            Ok(aggregate_exit(&reports))
        }
        Command::Report { inputs, format } => {
            let mut reports: Vec<CheckReport> = Vec::new();
            for path in &inputs {
                let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
                // accept either a single report or an array
                if let Ok(one) = serde_json::from_str::<CheckReport>(&text) {
                    reports.push(one);
                } else {
                    let many: Vec<CheckReport> =
                        serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    reports.extend(many);
                }
            }
            reports.sort_by(|a, b| a.check.cmp(&b.check));
            emit(&reports, None, &format)?;
            Ok(aggregate_exit(&reports))
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn run_checks(
    check: &str,
    name: GroupName,
    p: u16,
    r: usize,
    emax: u8,
    nmax: usize,
    seed: u64,
    samples: usize,
) -> Result<Vec<CheckReport>, String> {
    let betti_depth = match name {
        GroupName::Ga => 6,
        _ => 4,
    };
    let one = |c: &str| -> Result<CheckReport, String> {
        Ok(match c {
            "hopf" => checks::check_hopf_suite(name, p, r),
            "al" => checks::check_al(name, p, r, betti_depth),
            "projectivity" => checks::check_projectivity(name, p, r, emax, samples, seed),
            "tensor-product" => checks::check_tensor(name, p, r, emax, seed, 30),
            "carlson" => checks::check_carlson(name, p, r, emax, nmax, seed),
            "pi-vs-coh" => checks::check_pi_vs_coh(name, p, r, emax, nmax),
            "universal-pi" => checks::check_universal(name, p, r, emax, seed, samples),
            "reconstruction" => checks::check_reconstruction(name, p, r, emax),
            other => return Err(format!("unknown check '{other}'")),
        })
    };
    if check == "all" {
        let mut out = Vec::new();
        for c in [
            "hopf",
            "al",
            "projectivity",
            "tensor-product",
            "carlson",
            "pi-vs-coh",
            "universal-pi",
            "reconstruction",
        ] {
            out.push(one(c)?);
        }
        Ok(out)
    } else {
        Ok(vec![one(check)?])
    }
}

fn emit(reports: &[CheckReport], out: Option<&std::path::Path>, format: &str) -> Result<(), String> {
    match format {
        "json" => {
            let json = serde_json::to_string_pretty(reports).map_err(|e| e.to_string())?;
            println!("{json}");
        }
        "table" => {
            for r in reports {
                println!("{}", r.table_row());
                for d in &r.details {
                    println!("    {d}");
                }
            }
        }
        other => return Err(format!("unknown format '{other}' (expected json|table)")),
    }
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(reports).map_err(|e| e.to_string())?;
        std::fs::write(path, json).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn resolve_module(
    session: &support_lab::SupportSession,
    module: Option<&std::path::Path>,
    builtin: Option<&str>,
) -> Result<algebra_core::ModuleRep, String> {
    if let Some(path) = module {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let json: algebra_core::ModuleJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        return algebra_core::module_from_json(&json, &session.double.algebra)
            .map_err(|e| e.to_string());
    }
    let spec = builtin.unwrap_or("trivial");
    let m = match spec {
        "trivial" => algebra_core::ModuleRep::trivial(&session.double.algebra),
        "regular" => algebra_core::ModuleRep::regular(&session.double.algebra),
        "g-side" => checks::g_side_module(session).ok_or("g-side module unavailable")?,
        "o-side" => checks::o_side_module(session).ok_or("o-side module unavailable here")?,
        other => {
            if let Some(n) = other.strip_prefix("simple:") {
                let i: usize = n.parse().map_err(|_| "bad simple index")?;
                session
                    .pims
                    .simples
                    .get(i)
                    .ok_or("simple index out of range")?
                    .module
                    .clone()
            } else if let Some(n) = other.strip_prefix("syzygy:") {
                let i: usize = n.parse().map_err(|_| "bad syzygy index")?;
                if i > session.resolution_k.depth {
                    return Err("syzygy index out of range".into());
                }
                session.resolution_k.syzygy_module(&session.pims, i)
            } else {
                return Err(format!("unknown builtin module '{other}'"));
            }
        }
    };
    Ok(m)
}
