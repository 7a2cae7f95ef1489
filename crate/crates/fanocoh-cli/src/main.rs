//! Command-line front door. Every subcommand wraps one library entry point,
//! echoes its inputs, and emits a deterministic report — pretty JSON by
//! default, compact text with `--text`. Wall time goes to stderr so stdout
//! stays byte-stable across runs.
//!
//! Exit codes: 0 success, 1 bad input (usage or domain), 2 a violated
//! internal consistency check (including any failed `reproduce-paper`
//! criterion).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use fanocoh::acceptance;
use fanocoh::bott::{bott, BottOutcome, GrassmannContext};
use fanocoh::classify::{
    candidate_obstructions, classify, enumerate_candidates, middle_betti, obstruction_check,
    remaining_case_obstructions, remaining_cases, ObstructionReport,
};
use fanocoh::intersect::{aj_class_solver, pairing_factor, pushforward_coeffs};
use fanocoh::koszul::{
    restricted_cohomology, Assumptions, CIProblem, CoefficientBundle, DegreeValue,
};
use fanocoh::plethysm::{wedge_sum, wedge_symd, BundleSpec, SearchOptions};
use fanocoh::schur::ModuleSum;
use fanocoh::{Error, Partition, Result};

#[derive(Parser)]
#[command(
    name = "fanocoh",
    version,
    about = "Exact cohomology of homogeneous bundles on Grassmannians, of their \
             restrictions to Fano schemes of complete intersections, and the \
             Picard-rank classification and intersection numbers built on top"
)]
struct Cli {
    /// Emit pretty JSON on stdout (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit a compact human-readable summary instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Cap the worker pool at N threads (parallel builds only).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cohomology of Gamma^b Q (x) Gamma^a Sigma on G(r+1, n+1)
    Bott(BottArgs),
    /// Decomposition of wedge^t Sym^d Sigma for Sigma of rank `rank`
    Plethysm {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        rank: u32,
    },
    /// Decomposition of wedge^t W for W = Sym^{d_1} Sigma + ... + Sym^{d_s} Sigma
    Wedge {
        /// Rank of Sigma (= r + 1)
        #[arg(long)]
        rank: u32,
        /// Degrees d_1,...,d_s (comma-separated)
        #[arg(long = "d", value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        t: u64,
    },
    /// Cohomology table of a bundle restricted to F_r(X) via the Koszul resolution
    Koszul(KoszulArgs),
    /// Picard-rank verdict for the scheme of r-planes in a complete intersection
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "d", value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Enumerate the delta = 2 candidate families with a termination certificate
    Candidates,
    /// Section searches that decide which candidates carry an obstruction
    Obstructions {
        /// Run a single labelled case (e.g. 1.1, 2.2, Q.3, Qr); default: all ten candidates
        #[arg(long)]
        case: Option<String>,
        /// Disable every search prune (slow route; must agree with the default)
        #[arg(long)]
        exhaustive: bool,
    },
    /// Middle Betti number of a smooth degree-d hypersurface in P^n
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Pushforward coefficients on the theta divisor; optionally solve for the class
    Intersect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        /// Dimension of the intermediate Jacobian (enables the class solver)
        #[arg(long, requires = "l2")]
        g: Option<u64>,
        /// Value of the degree-two relation (enables the class solver)
        #[arg(long, requires = "g")]
        l2: Option<u64>,
    },
    /// Re-derive every published value end to end; one line per criterion
    ReproducePaper,
}

#[derive(Args)]
struct BottArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Partition on the tautological subbundle Sigma, e.g. "3,1" or "0,-2"
    #[arg(long)]
    a: Partition,
    /// Partition on the quotient bundle Q (default: trivial)
    #[arg(long)]
    b: Option<Partition>,
}

#[derive(Args)]
struct KoszulArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Degrees of the complete intersection (comma-separated)
    #[arg(long = "d", value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    /// Coefficient bundle Gamma^e Sigma restricted to F (default: O_F)
    #[arg(long, conflicts_with = "omega")]
    e: Option<Partition>,
    /// Use the restricted cotangent bundle of the Grassmannian instead
    #[arg(long)]
    omega: bool,
    /// Extra twist by O(twist * H)
    #[arg(long, default_value_t = 0)]
    twist: i32,
    /// Resolve ambiguous degrees by treating every differential as maximal rank
    #[arg(long = "assume-max-cancellation")]
    assume_max_cancellation: bool,
}

/// What a subcommand hands back: the JSON report, a text rendering, and
/// whether the run counts as fully successful (only `reproduce-paper` can
/// come back unsuccessful without erroring).
struct Outcome {
    report: RunReport,
    text: String,
    ok: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RunReport {
    subcommand: &'static str,
    inputs: Value,
    outputs: Value,
    notes: Vec<String>,
}

fn render_sum(ms: &ModuleSum) -> String {
    if ms.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<String> = Vec::new();
    for (lam, mult) in ms.iter() {
        let head = if mult == &1u32.into() {
            String::new()
        } else {
            format!("{mult}·")
        };
        terms.push(format!("{head}Gamma^({lam})"));
    }
    terms.reverse();
    terms.join(" + ")
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

fn obstruction_text(rep: &ObstructionReport) -> String {
    let mut lines = Vec::new();
    let label = rep.label.clone().unwrap_or_else(|| "?".into());
    lines.push(format!(
        "case {label}: n = {}, degrees {:?}, r = {} -> {}",
        rep.n,
        rep.degrees,
        rep.r,
        if rep.survives {
            "OBSTRUCTED (witness sections exist)"
        } else {
            "clear (no witness sections)"
        }
    ));
    for k in &rep.k_checks {
        if k.skipped {
            lines.push(format!(
                "  k = {}: skipped, wedge degree t = {} out of range",
                k.k, k.t
            ));
        } else {
            let mut line = format!(
                "  k = {}: t = {}, row bounds {:?}: {}",
                k.k,
                k.t,
                k.bounds,
                render_sum(&k.witnesses)
            );
            if let Some(note) = &k.prune_note {
                line.push_str(&format!(" [{note}]"));
            }
            lines.push(line);
        }
    }
    lines.join("\n")
}

fn run(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Bott(args) => {
            let ctx = GrassmannContext::new(args.n, args.r)?;
            let b = args.b.clone().unwrap_or_else(Partition::empty);
            let outcome = bott(&ctx, &b, &args.a)?;
            let bundle = if b.trimmed().is_empty() {
                format!("Gamma^({}) Sigma", args.a)
            } else {
                format!("Gamma^({}) Q (x) Gamma^({}) Sigma", b, args.a)
            };
            let text = match &outcome {
                BottOutcome::Zero => format!(
                    "H^*(G({},{}), {bundle}) = 0",
                    args.r + 1,
                    args.n + 1
                ),
                BottOutcome::NonZero { q, psi, dim } => format!(
                    "H^{q}(G({},{}), {bundle}) = Gamma^({psi}) V, dim {dim}",
                    args.r + 1,
                    args.n + 1
                ),
            };
            Ok(Outcome {
                report: RunReport {
                    subcommand: "bott",
                    inputs: json!({
                        "n": args.n, "r": args.r,
                        "a": args.a.to_string(), "b": b.to_string(),
                    }),
                    outputs: json!({
                        "grassmannian": {
                            "dim": ctx.dim(),
                            "rankSigma": ctx.rank_sigma(),
                            "rankQ": ctx.rank_q(),
                        },
                        "cohomology": to_value(&outcome)?,
                    }),
                    notes: vec![],
                },
                text,
                ok: true,
            })
        }
        Cmd::Plethysm { t, d, rank } => {
            let ms = wedge_symd(*t, *d, *rank)?;
            let text = format!(
                "wedge^{t} Sym^{d} C^{rank} = {} (dim {})",
                render_sum(&ms),
                ms.dimension()?
            );
            Ok(Outcome {
                report: RunReport {
                    subcommand: "plethysm",
                    inputs: json!({"t": t, "d": d, "rank": rank}),
                    outputs: json!({
                        "modules": to_value(&*ms)?,
                        "dimension": ms.dimension()?.to_string(),
                    }),
                    notes: vec![],
                },
                text,
                ok: true,
            })
        }
        Cmd::Wedge { rank, degrees, t } => {
            let spec = BundleSpec::new(*rank, degrees.clone())?;
            let ms = wedge_sum(&spec, *t)?;
            let text = format!(
                "wedge^{t} W = {} (dim {}), W = {} of total rank {}",
                render_sum(&ms),
                ms.dimension()?,
                degrees
                    .iter()
                    .map(|d| format!("Sym^{d}"))
                    .collect::<Vec<_>>()
                    .join(" + "),
                spec.rank_w()?
            );
            Ok(Outcome {
                report: RunReport {
                    subcommand: "wedge",
                    inputs: json!({"rank": rank, "degrees": degrees, "t": t}),
                    outputs: json!({
                        "rankW": spec.rank_w()?,
                        "modules": to_value(&ms)?,
                        "dimension": ms.dimension()?.to_string(),
                    }),
                    notes: vec![],
                },
                text,
                ok: true,
            })
        }
        Cmd::Koszul(args) => {
            let prob = CIProblem::new(args.n, args.degrees.clone(), args.r)?;
            let coeff = if args.omega {
                CoefficientBundle::Cotangent
            } else {
                match &args.e {
                    None => CoefficientBundle::trivial(),
                    Some(e) => CoefficientBundle::SigmaSchur(e.clone()),
                }
            };
            let assume = Assumptions {
                max_cancellation: args.assume_max_cancellation,
            };
            let rc = restricted_cohomology(&prob, &coeff, args.twist, &assume)?;
            let mut lines = vec![format!(
                "{} twisted by O({}H) on F_{}(X), X of degrees {:?} in P^{}, delta = {}",
                rc.table.coefficient, args.twist, args.r, prob.degrees, args.n, rc.table.delta
            )];
            for (j, v) in &rc.values {
                match v {
                    DegreeValue::Exact(d) => lines.push(format!("  h^{j} = {d}")),
                    DegreeValue::Assumed(d) => {
                        lines.push(format!("  h^{j} = {d} (max cancellation)"))
                    }
                    DegreeValue::Ambiguous(cells) => {
                        lines.push(format!("  h^{j} ambiguous, cells {cells:?}"))
                    }
                }
            }
            if let Some(consistent) = rc.consistent {
                lines.push(format!("  cancellation consistent: {consistent}"));
            }
            let notes = if args.assume_max_cancellation {
                vec!["ambiguous degrees resolved by maximal-rank differentials".into()]
            } else {
                vec![]
            };
            Ok(Outcome {
                report: RunReport {
                    subcommand: "koszul",
                    inputs: json!({
                        "n": args.n, "r": args.r, "degrees": args.degrees,
                        "coefficient": rc.table.coefficient,
                        "twist": args.twist,
                        "assumeMaxCancellation": args.assume_max_cancellation,
                    }),
                    outputs: to_value(&rc)?,
                    notes,
                },
                text: lines.join("\n"),
                ok: true,
            })
        }
        Cmd::Classify { n, r, degrees } => {
            let verdict = classify(*n, degrees, *r)?;
            let rho = verdict
                .rho
                .map(|x| x.to_string())
                .unwrap_or_else(|| "-".into());
            let text = format!(
                "{:?} (rho = {rho}{}): {}",
                verdict.kind,
                if verdict.very_general {
                    ", very general X"
                } else {
                    ", every smooth X"
                },
                verdict.note
            );
            Ok(Outcome {
                report: RunReport {
                    subcommand: "classify",
                    inputs: json!({"n": n, "r": r, "degrees": degrees}),
                    outputs: to_value(&verdict)?,
                    notes: vec![],
                },
                text,
                ok: true,
            })
        }
        Cmd::Candidates => {
            let report = enumerate_candidates()?;
            let mut lines: Vec<String> = report
                .cases
                .iter()
                .map(|c| {
                    format!(
                        "{}: r = {}, degrees {:?}, n = {}, M = {}, k in {:?}",
                        c.label, c.r, c.degrees, c.n, c.m_twist, c.k_values
                    )
                })
                .collect();
            lines.push(format!(
                "termination: r <= {} scanned; {} degree cuts, {} quadric-root cuts, \
                 {} frontier probes, all with monotone margins; {} closed-form tails",
                report.certificate.r_scanned,
                report.certificate.d_cuts.len(),
                report.certificate.s_cuts.len(),
                report.certificate.r_probes.len(),
                report.certificate.quadric_tails.len()
            ));
            Ok(Outcome {
                report: RunReport {
                    subcommand: "candidates",
                    inputs: json!({}),
                    outputs: to_value(&report)?,
                    notes: vec![],
                },
                text: lines.join("\n"),
                ok: true,
            })
        }
        Cmd::Obstructions { case, exhaustive } => {
            let opts = if *exhaustive {
                SearchOptions {
                    weight_prune: false,
                    row_cap_prune: false,
                    first_row_prune: false,
                    sym_row_bound: false,
                }
            } else {
                SearchOptions::default()
            };
            let reports: Vec<ObstructionReport> = match case {
                None => {
                    let mut all = candidate_obstructions(&opts)?;
                    all.extend(remaining_case_obstructions(&opts)?);
                    all
                }
                Some(label) => {
                    let candidate = enumerate_candidates()?
                        .cases
                        .into_iter()
                        .find(|c| &c.label == label)
                        .map(|c| (c.n, c.degrees, c.r));
                    let named = candidate.or_else(|| {
                        remaining_cases()
                            .into_iter()
                            .find(|(l, _, _, _)| l == label)
                            .map(|(_, n, degrees, r)| (n, degrees, r))
                    });
                    let (n, degrees, r) = named.ok_or_else(|| {
                        Error::OutOfRange(format!("no case labelled {label:?}"))
                    })?;
                    let mut rep = obstruction_check(n, &degrees, r, &opts)?;
                    rep.label = Some(label.clone());
                    vec![rep]
                }
            };
            let notes = if *exhaustive {
                vec!["all pruning disabled; results must match the default run".into()]
            } else {
                vec![]
            };
            let text = reports
                .iter()
                .map(obstruction_text)
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                report: RunReport {
                    subcommand: "obstructions",
                    inputs: json!({"case": case, "exhaustive": exhaustive}),
                    outputs: to_value(&reports)?,
                    notes,
                },
                text,
                ok: true,
            })
        }
        Cmd::Betti { n, d } => {
            let b = middle_betti(*n, *d)?;
            Ok(Outcome {
                report: RunReport {
                    subcommand: "betti",
                    inputs: json!({"n": n, "d": d}),
                    outputs: json!({"middleBetti": b.to_string()}),
                    notes: vec![],
                },
                text: format!(
                    "middle Betti number of a smooth degree-{d} hypersurface in P^{n}: {b}"
                ),
                ok: true,
            })
        }
        Cmd::Intersect { n, d, g, l2 } => {
            let push = pushforward_coeffs(*n, *d)?;
            let pairing = pairing_factor(*n, *d)?;
            let mut lines = vec![format!(
                "degree-{d} family in P^{n}: covering equality {}; curve reading {}, \
                 surface reading {}, N = {}, pairing factor {}",
                if push.covering_equality { "holds" } else { "fails" },
                push.class_c,
                push.class_l,
                push.n_canonical,
                pairing
            )];
            let mut outputs = json!({
                "pushforward": to_value(&push)?,
                "pairingFactor": pairing.to_string(),
            });
            if let (Some(g), Some(l2)) = (g, l2) {
                let pairing_u64: u64 = pairing.to_string().parse().map_err(|_| {
                    Error::OutOfRange("pairing factor exceeds the solver's range".into())
                })?;
                let sol = aj_class_solver(*g, pairing_u64, *l2)?;
                lines.push(format!(
                    "solver at g = {g}, l2 = {l2}: x = {}, y = {}",
                    sol.x, sol.y
                ));
                if sol.y_integral {
                    lines.push(format!(
                        "the y-reading is integral: class = {}·Theta^{}/{}!",
                        sol.y,
                        g - 2,
                        g - 2
                    ));
                }
                outputs["classes"] = to_value(&sol)?;
            }
            Ok(Outcome {
                report: RunReport {
                    subcommand: "intersect",
                    inputs: json!({"n": n, "d": d, "g": g, "l2": l2}),
                    outputs,
                    notes: vec![],
                },
                text: lines.join("\n"),
                ok: true,
            })
        }
        Cmd::ReproducePaper => {
            let outcomes = acceptance::run_all();
            let failures = outcomes.iter().filter(|o| !o.passed).count();
            let mut lines: Vec<String> = outcomes
                .iter()
                .map(|o| {
                    format!(
                        "[{}] {} — {}",
                        if o.passed { "PASS" } else { "FAIL" },
                        o.id,
                        o.title
                    )
                })
                .collect();
            lines.push(format!(
                "{} of {} criteria passed",
                outcomes.len() - failures,
                outcomes.len()
            ));
            Ok(Outcome {
                report: RunReport {
                    subcommand: "reproduce-paper",
                    inputs: json!({}),
                    outputs: json!({
                        "criteria": to_value(&outcomes)?,
                        "total": outcomes.len(),
                        "failures": failures,
                    }),
                    notes: vec![],
                },
                text: lines.join("\n"),
                ok: failures == 0,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if !fanocoh::set_parallelism(jobs) {
            eprintln!("note: --jobs ignored (sequential build or pool already running)");
        }
    }
    let started = Instant::now();
    match run(&cli.cmd) {
        Ok(outcome) => {
            let payload = if cli.text {
                let mut t = outcome.text;
                t.push('\n');
                t
            } else {
                let mut j = serde_json::to_string_pretty(&outcome.report)
                    .expect("reports are serializable");
                j.push('\n');
                j
            };
            match &cli.out {
                None => print!("{payload}"),
                Some(path) => {
                    if let Err(e) = fs::write(path, payload) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                    eprintln!("wrote {}", path.display());
                }
            }
            eprintln!(
                "{}: {} ms",
                outcome.report.subcommand,
                started.elapsed().as_millis()
            );
            ExitCode::from(if outcome.ok { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Internal(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
