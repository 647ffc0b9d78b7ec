//! `hurwitz`: inspect root systems, Hurwitz orbits and classifications, and
//! run batch verifications from the command line.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hurwitz_core::classify::{classify, dn_maximal_parabolic_intersections};
use hurwitz_core::hurwitz::{hurwitz_orbit, is_hurwitz_transitive, last_slot_coverage, Factorization, DEFAULT_CAP};
use hurwitz_core::lattice::{connection_index, connection_index_by_basis, lattice_index, subsystem_closure};
use hurwitz_core::par::Execution;
use hurwitz_core::verify::{default_scope, verify, Scope, Theorem, VerifyOptions};
use hurwitz_core::{CoxeterGroup, CoxeterType, SignedPermutation};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Hurwitz orbits and quasi-Coxeter elements in finite Coxeter groups")]
struct Cli {
    /// Print JSON instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Bound on orbit and factorization-set sizes.
    #[arg(long, global = true, env = "HURWITZ_CAP")]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// Family: A, B, D, E, F, H or I2.
    #[arg(long = "type", short = 't')]
    ty: CoxeterType,

    /// Rank, or m for I2(m).
    #[arg(long, short = 'n')]
    rank: usize,
}

impl GroupArgs {
    fn build(&self) -> Result<CoxeterGroup> {
        CoxeterGroup::new(self.ty, self.rank).with_context(|| format!("cannot build {}{}", self.ty, self.rank))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeOp {
    Closure,
    Index,
    Cindex,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots of a root system.
    Roots {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Hurwitz orbit of a reduced factorization.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated reflection (positive-root) ids.
        #[arg(long)]
        word: String,
        /// Also report the reflections reachable in the last slot.
        #[arg(long)]
        coverage: bool,
    },
    /// Classify one element.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        /// Element as a comma-separated word in reflection ids.
        #[arg(long, conflicts_with = "signed")]
        element: Option<String>,
        /// Element of B_n or D_n in signed one-line notation, e.g. "-1,-2,-3,-4".
        #[arg(long, allow_hyphen_values = true)]
        signed: Option<String>,
    },
    /// Root subsystem closure, sublattice index, or connection index.
    Lattice {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated root ids.
        #[arg(long)]
        roots: String,
        #[arg(long, value_enum)]
        op: LatticeOp,
        /// For `index`: the ambient root set (default: all roots).
        #[arg(long)]
        sup: Option<String>,
    },
    /// Pairs of maximal parabolic subgroups of D_n with trivial intersection.
    DnIntersections {
        #[arg(long, short = 'n')]
        rank: usize,
    },
    /// Run a batch verification.
    Verify {
        /// 1, 2, 1.6, 6.1, 5.13, 7.1, d4 or table.
        #[arg(long)]
        theorem: Theorem,
        #[arg(long = "type", short = 't')]
        ty: Option<CoxeterType>,
        #[arg(long, short = 'n')]
        rank: Option<usize>,
        /// exhaustive, class-reps or sampled; defaults by group size.
        #[arg(long)]
        scope: Option<Scope>,
        /// Sampled scope: number of elements.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn parse_ids(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().with_context(|| format!("bad id {x:?}")))
        .collect()
}

fn check_reflections(group: &CoxeterGroup, ids: &[usize]) -> Result<()> {
    if let Some(&bad) = ids.iter().find(|&&t| t >= group.num_reflections()) {
        bail!("reflection id {bad} out of range (< {})", group.num_reflections());
    }
    Ok(())
}

fn check_roots(group: &CoxeterGroup, ids: &[usize]) -> Result<()> {
    if ids.is_empty() {
        bail!("empty root set");
    }
    if let Some(&bad) = ids.iter().find(|&&t| t >= group.num_roots()) {
        bail!("root id {bad} out of range (< {})", group.num_roots());
    }
    Ok(())
}

/// Output plus whether it counts as a success for the exit code.
struct Outcome {
    value: Value,
    summary: String,
    ok: bool,
}

fn run(cli: &Cli, exec: Execution, cap: usize) -> Result<Outcome> {
    match &cli.command {
        Command::Roots { group } => {
            let g = group.build()?;
            let value = match g.root_system() {
                Some(rs) => serde_json::to_value(rs.dump())?,
                None => json!({"type": "I2", "m": g.type_parameter(), "num_roots": g.num_roots(), "simple": g.simple_root_ids()}),
            };
            let summary = format!(
                "{}: {} roots, {} positive, simple {:?}",
                g.label(),
                g.num_roots(),
                g.num_reflections(),
                g.simple_root_ids()
            );
            Ok(Outcome { value, summary, ok: true })
        }
        Command::Orbit { group, word, coverage } => {
            let g = group.build()?;
            let tuple = parse_ids(word)?;
            check_reflections(&g, &tuple)?;
            let f = Factorization::reduced(&g, tuple)?;
            let orbit = hurwitz_orbit(&g, &f, cap, exec);
            let verdict = is_hurwitz_transitive(&g, f.product(), cap, exec);
            let red_count = match &verdict {
                hurwitz_core::hurwitz::Transitivity::Transitive { red_count, .. }
                | hurwitz_core::hurwitz::Transitivity::Intransitive { red_count, .. } => Some(*red_count),
                hurwitz_core::hurwitz::Transitivity::Indeterminate { .. } => None,
            };
            let mut value = json!({
                "product_len": f.len(),
                "red_count": red_count,
                "orbit_size": orbit.exhausted().then_some(orbit.len()),
                "transitive": verdict.is_transitive(),
            });
            let mut ok = orbit.exhausted() && verdict.is_transitive().is_some();
            if *coverage {
                let cov = last_slot_coverage(&g, &f, cap, exec);
                ok &= cov.verdict().is_some();
                value["coverage"] = json!(cov.covered);
                value["coverage_complete"] = json!(cov.is_complete());
            }
            let summary = format!(
                "orbit {} of {} reduced factorizations; transitive: {}",
                value["orbit_size"], value["red_count"], value["transitive"]
            );
            Ok(Outcome { value, summary, ok })
        }
        Command::Classify { group, element, signed } => {
            let g = group.build()?;
            let w = match (element, signed) {
                (Some(word), None) => {
                    let ids = parse_ids(word)?;
                    check_reflections(&g, &ids)?;
                    g.element_from_word(&ids)?
                }
                (None, Some(s)) => {
                    let images = s
                        .split(',')
                        .map(|x| x.trim().parse::<i32>().with_context(|| format!("bad entry {x:?}")))
                        .collect::<Result<Vec<_>>>()?;
                    g.from_signed_permutation(&SignedPermutation::new(images)?)?
                }
                _ => bail!("give exactly one of --element or --signed"),
            };
            let record = classify(&g, &w, cap, exec);
            let ok = record.transitivity.is_transitive().is_some();
            let summary = format!(
                "{} word {:?}: length {}, Coxeter {}, quasi-Coxeter {}, parabolic quasi-Coxeter {}, transitive {:?}",
                record.group,
                record.word,
                record.reflection_length,
                record.is_coxeter,
                record.is_quasi_coxeter,
                record.is_parabolic_quasi_coxeter,
                record.transitivity.is_transitive()
            );
            Ok(Outcome { value: serde_json::to_value(&record)?, summary, ok })
        }
        Command::Lattice { group, roots, op, sup } => {
            let g = group.build()?;
            let ids = parse_ids(roots)?;
            check_roots(&g, &ids)?;
            let value = match op {
                LatticeOp::Closure => {
                    let c = subsystem_closure(&g, &ids);
                    json!({"rank": c.rank(), "num_roots": c.len(), "positive_roots": c.positive_roots()})
                }
                LatticeOp::Index => {
                    let sup = match sup {
                        Some(s) => parse_ids(s)?,
                        None => (0..g.num_reflections()).collect(),
                    };
                    check_roots(&g, &sup)?;
                    json!({"index": lattice_index(&g, &ids, &sup)?})
                }
                LatticeOp::Cindex => {
                    let a = connection_index(&g, &ids)?;
                    let b = connection_index_by_basis(&g, &ids)?;
                    if a != b {
                        bail!("connection index routes disagree: {a} vs {b}");
                    }
                    json!({"connection_index": a.to_string()})
                }
            };
            let summary = value.to_string();
            Ok(Outcome { value, summary, ok: true })
        }
        Command::DnIntersections { rank } => {
            let r = dn_maximal_parabolic_intersections(*rank)?;
            let summary = format!(
                "D{}: {} pairs, {} with trivial intersection",
                r.n, r.pairs_checked, r.trivial_pairs
            );
            Ok(Outcome { value: serde_json::to_value(&r)?, summary, ok: true })
        }
        Command::Verify { theorem, ty, rank, scope, samples, seed } => {
            let g = match (theorem, ty, rank) {
                (Theorem::D4Example, ..) => CoxeterGroup::new(CoxeterType::D, 4)?,
                (Theorem::ConnectionTable, ..) => CoxeterGroup::new(CoxeterType::A, 1)?,
                (_, Some(ty), Some(n)) => GroupArgs { ty: *ty, rank: *n }.build()?,
                _ => bail!("--type and --rank are required for theorem {theorem}"),
            };
            let opts = VerifyOptions {
                scope: scope.unwrap_or_else(|| default_scope(&g)),
                cap,
                exec,
                sample_size: *samples,
                seed: *seed,
                ..VerifyOptions::default()
            };
            let report = verify(&g, *theorem, &opts)?;
            let summary = format!(
                "theorem {} on {} ({}): {} checked, {} vacuous, {} failures, {} caps hit, {} ms -> {}",
                report.theorem,
                report.group.as_ref().map_or("-".to_string(), |d| d.label.clone()),
                report.scope,
                report.elements_checked,
                report.vacuous,
                report.failures.len(),
                report.caps_hit,
                report.elapsed_ms,
                if report.success { "PASS" } else { "FAIL" }
            );
            Ok(Outcome { ok: report.success, value: serde_json::to_value(&report)?, summary })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match cli.threads {
        Some(1) => Execution::Sequential,
        Some(n) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("warning: could not configure thread pool: {e}");
            }
            Execution::Parallel
        }
        None => Execution::Parallel,
    };
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    match run(&cli, exec, cap) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.value).expect("serializable")
            } else {
                out.summary
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
