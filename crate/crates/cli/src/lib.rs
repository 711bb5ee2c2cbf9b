//! Command-line front end: parse descriptors, run sieves, oracles and
//! verification suites, emit deterministic tables.
//!
//! Output is byte-deterministic for a given invocation: the worker pool
//! computes per-prime rows independently and rows are emitted in prime
//! order regardless of the pool width (GSP4OBS_THREADS).

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gsp4obs::ff::is_prime;
use gsp4obs::obstruction::{adjoint_invariants, sc_endo_invariants};
use gsp4obs::sieve::{fl_check, ordinary_check, sieve_at, FlOutcome, SieveReport, WeightData};
use gsp4obs::symplectic::euler_defect;
use gsp4obs::tamerep::{concretize_with, parse_descriptor, LocalTypeDescriptor, SqrtChoice};
use gsp4obs::{ExtField, ParityClass};

pub mod suites;

#[derive(Debug, Parser)]
#[command(
    name = "gsp4obs",
    version,
    about = "Local obstruction invariants for GSp(4) local types"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Csv,
    JsonLines,
    PrettyTable,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Parity {
    Even,
    Odd1,
    Odd2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    Steinberg,
    Decomp,
    Euler,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Root {
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate exceptional primes for a local-type descriptor.
    Sieve {
        #[arg(long)]
        desc: PathBuf,
        #[arg(long)]
        pmax: u64,
        #[arg(long, value_enum, default_value = "pretty-table")]
        format: OutputFormat,
    },
    /// Brute-force invariants of the twisted adjoint at a single prime.
    Oracle {
        #[arg(long)]
        desc: PathBuf,
        #[arg(long)]
        p: u64,
        /// Compute without the cyclotomic twist.
        #[arg(long, default_value_t = false)]
        untwisted: bool,
        /// Steinberg parameter (nonzero scalar).
        #[arg(long, default_value_t = 1)]
        tau: u64,
        /// Which square root of ell to use.
        #[arg(long, value_enum, default_value = "plus")]
        root: Root,
    },
    /// Run a verification suite; exit code 1 on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 60)]
        pmax: u64,
    },
    /// The Euler-characteristic defect d1 - d2 for a parity class.
    Euler {
        #[arg(long, value_enum)]
        parity: Parity,
        /// Characteristic of the coefficient field used for the kernel.
        #[arg(long, default_value_t = 7)]
        p: u64,
    },
    /// Fontaine-Laffaille unobstructedness table over primes up to pmax.
    Fl {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        w: i64,
        #[arg(long)]
        pmax: u64,
    },
    /// Ordinary-case congruence table over primes up to pmax.
    Ordinary {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        pmax: u64,
    },
}

fn load_descriptor(path: &PathBuf) -> Result<LocalTypeDescriptor> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read descriptor {}", path.display()))?;
    parse_descriptor(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn configure_pool() -> Result<()> {
    if let Ok(v) = std::env::var("GSP4OBS_THREADS") {
        let n: usize = v.parse().context("GSP4OBS_THREADS must be an integer")?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
    Ok(())
}

fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn emit_reports(out: &mut dyn Write, rows: &[SieveReport], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "p,condition,group")?;
            for r in rows {
                writeln!(out, "{},{},{}", r.p, r.condition, r.group)?;
            }
        }
        OutputFormat::JsonLines => {
            for r in rows {
                writeln!(
                    out,
                    "{{\"p\":{},\"condition\":\"{}\",\"group\":\"{}\"}}",
                    r.p,
                    json_escape(&r.condition),
                    r.group
                )?;
            }
        }
        OutputFormat::PrettyTable => {
            let w = rows
                .iter()
                .map(|r| r.condition.len())
                .max()
                .unwrap_or(9)
                .max(9);
            writeln!(out, "{:>6}  {:<w$}  group", "p", "condition")?;
            for r in rows {
                writeln!(out, "{:>6}  {:<w$}  {}", r.p, r.condition, r.group)?;
            }
        }
    }
    Ok(())
}

/// Run the CLI; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    configure_pool()?;
    match cli.command {
        Command::Sieve { desc, pmax, format } => {
            if pmax < 5 {
                return Err(anyhow!("--pmax must be at least 5"));
            }
            let d = load_descriptor(&desc)?;
            // fan out over primes, merge in order
            let primes: Vec<u64> = (5..=pmax).filter(|&p| is_prime(p) && p != d.ell).collect();
            let chunks: Result<Vec<Vec<SieveReport>>> = primes
                .par_iter()
                .map(|&p| sieve_at(&d, p).map_err(|e| anyhow!("{e}")))
                .collect();
            let rows: Vec<SieveReport> = chunks?.into_iter().flatten().collect();
            emit_reports(out, &rows, format)?;
            Ok(0)
        }
        Command::Oracle {
            desc,
            p,
            untwisted,
            tau,
            root,
        } => {
            let d = load_descriptor(&desc)?;
            let sqrt = match root {
                Root::Plus => SqrtChoice::Plus,
                Root::Minus => SqrtChoice::Minus,
            };
            let conc = concretize_with(&d, p, tau, sqrt).map_err(|e| anyhow!("{e}"))?;
            // the irreducible supercuspidal model is GL_4-only at the tame
            // level; its invariants live over the biquadratic subgroup
            let (report, method) = if d.group == gsp4obs::tamerep::GroupLabel::ScIrreducible {
                (
                    sc_endo_invariants(&conc.rep, !untwisted).map_err(|e| anyhow!("{e}"))?,
                    "oracle(G_M,End)",
                )
            } else {
                (
                    adjoint_invariants(&conc.rep, !untwisted).map_err(|e| anyhow!("{e}"))?,
                    "oracle",
                )
            };
            writeln!(
                out,
                "group={} ell={} p={} twist={} dimension={} method={} basis_size={}",
                d.group,
                d.ell,
                p,
                if untwisted { "1" } else { "nu" },
                report.dimension,
                method,
                report.basis.len()
            )?;
            Ok(0)
        }
        Command::Verify { suite, pmax } => {
            let mut failures = 0usize;
            let mut check = |name: &str, ok: bool, out: &mut dyn Write| -> Result<()> {
                writeln!(out, "{}: {}", name, if ok { "pass" } else { "FAIL" })?;
                if !ok {
                    failures += 1;
                }
                Ok(())
            };
            if matches!(suite, Suite::Euler | Suite::All) {
                for (name, ok) in suites::euler_suite() {
                    check(&name, ok, out)?;
                }
            }
            if matches!(suite, Suite::Steinberg | Suite::All) {
                for (name, ok) in suites::steinberg_suite(pmax) {
                    check(&name, ok, out)?;
                }
            }
            if matches!(suite, Suite::Decomp | Suite::All) {
                for (name, ok) in suites::decomposition_suite() {
                    check(&name, ok, out)?;
                }
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }
        Command::Euler { parity, p } => {
            let field = ExtField::new(p, 1).map_err(|e| anyhow!("{e}"))?;
            let cls = match parity {
                Parity::Even => ParityClass::Even,
                Parity::Odd1 => ParityClass::OddI,
                Parity::Odd2 => ParityClass::OddII,
            };
            let d = euler_defect(&field, cls).map_err(|e| anyhow!("{e}"))?;
            writeln!(out, "{d}")?;
            Ok(0)
        }
        Command::Fl { a, b, w, pmax } => {
            let wd = WeightData::new(a, b, w).map_err(|e| anyhow!("{e}"))?;
            writeln!(out, "hodge_tate_weights = {:?}", wd.hodge_tate_weights())?;
            writeln!(out, "weights_disjoint = {}", wd.weights_disjoint())?;
            for p in (3..=pmax).filter(|&p| is_prime(p)) {
                match fl_check(&wd, p) {
                    FlOutcome::UnobstructedAtP => writeln!(out, "{p}: unobstructed")?,
                    FlOutcome::ConditionFails(reason) => writeln!(out, "{p}: fails ({reason})")?,
                }
            }
            Ok(0)
        }
        Command::Ordinary { a, b, pmax } => {
            let wd = WeightData::new(a, b, a + b + 1).map_err(|e| anyhow!("{e}"))?;
            for p in (3..=pmax).filter(|&p| is_prime(p)) {
                let fired = ordinary_check(&wd, p);
                if fired.is_empty() {
                    writeln!(out, "{p}: none (H^0(G_p, ad(1)) = 0)")?;
                } else {
                    let list: Vec<String> = fired.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{p}: {}", list.join("; "))?;
                }
            }
            Ok(0)
        }
    }
}
