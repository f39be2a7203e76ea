//! The `norbit` command line: every library operation behind subcommands
//! with text, JSON and DOT output.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 verification
//! discrepancy.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use norbit_core::infchar::{
    even_dual_infchar, infchar, infchar_equal, recipe_infchar_traced, InfCharRule, PairingMode,
};
use norbit_core::orbit::{
    bv_dual, complete_to_triangular, component_group_order, dynkin_h, enumerate_orbits,
    hasse_edges, induce, induce_general, is_cuspidal, is_even, is_special, is_stably_trivial,
    is_triangular, simple_root_labels, triangular_levi, Orbit, StablyTrivialMode,
    DEFAULT_CUSPIDAL_RANK_BOUND,
};
use norbit_core::partition::is_valid;
use norbit_core::weights::{branch_to_levi, weyl_dim, RootSystem, DEFAULT_DIM_BOUND};
use norbit_core::{ClassicalType, LeviShape, Partition, Rat};

use crate::format;
use crate::verify::prop55::{check_prop55_b2, check_prop55_type_a_sweep, report_to_cases};
use crate::verify::richardson::check_richardson_type_a;
use crate::verify::sweeps::{
    check_collapse, check_consistency, check_duality, check_stage_independence,
};
use crate::verify::{any_failure, hilbert, merge_reports, CaseReport, OracleConfig, DEFAULT_SEED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "norbit",
    about = "Partition combinatorics of classical nilpotent orbits, infinitesimal characters, branching, and numeric verification oracles",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    /// Classical type: A, B, C or D
    ty: String,
    /// Rank of the algebra
    rank: u32,
    /// Partition, e.g. "3,1,1"
    partition: String,
    /// Very-even label (type D, all parts even): I or II
    #[arg(long)]
    label: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a partition labels an orbit of the given algebra
    Validate {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
    /// Flags, Dynkin data and the infinitesimal character of one orbit
    OrbitInfo {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// All orbits of one algebra
    OrbitList {
        ty: String,
        rank: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Covering relations of the closure order
    Hasse {
        ty: String,
        rank: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The infinitesimal character of one orbit
    Infchar {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// "literal" disables the rho_gl override for equal column pairs
        #[arg(long, default_value = "consistent")]
        pairing_mode: String,
        /// Print the padding / removal / pairing trace
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// The Barbasch-Vogan dual orbit
    Bvdual {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Lusztig-Spaltenstein induction from a base orbit and gl blocks
    Induce {
        /// Classical type of the ambient algebra
        ty: String,
        /// Ambient rank
        ambient_rank: u32,
        /// Base orbit partition on the residual factor ("" for rank 0)
        #[arg(long, default_value = "")]
        base: String,
        /// Trivial-orbit gl blocks, e.g. "2,4"
        #[arg(long)]
        blocks: Option<String>,
        /// Per-block gl orbits, e.g. "2|1,1" (overrides --blocks)
        #[arg(long)]
        gl_orbits: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Smallest gl-block completion of a stably trivial orbit to a
    /// triangular orbit
    Complete {
        ty: String,
        /// Partition (the rank is inferred from its size)
        partition: String,
        #[arg(long, default_value_t = 12)]
        bound: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Branch an irreducible to a block Levi subalgebra
    Branch {
        ty: String,
        rank: u32,
        /// Highest weight as comma-separated rationals, e.g. "1,0" or "3/2,1/2"
        weight: String,
        /// gl block sizes, e.g. "2,1"
        #[arg(long, default_value = "")]
        levi_blocks: String,
        /// Rank of the residual classical factor
        #[arg(long, default_value_t = 0)]
        levi_residual: u32,
        #[arg(long, default_value_t = DEFAULT_DIM_BOUND)]
        dim_bound: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Verification cases; exit code 2 on any discrepancy
    Verify {
        #[command(subcommand)]
        case: VerifyCase,
        /// Oracle RNG seed (overrides NORBIT_SEED)
        #[arg(long, global = true)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCase {
    /// Degree-by-degree dimensions of a gl orbit closure ring
    Hilbert {
        /// gl orbit partition, e.g. "2,1"
        partition: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Richardson equality for a type A orbit
    Richardson {
        partition: String,
        #[arg(long, default_value_t = 200)]
        dim_bound: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Exact multiplicity equalities for every gl Levi datum up to a size
    Prop55A {
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        #[arg(long, default_value_t = 200)]
        dim_bound: u64,
    },
    /// Informational so(5) multiplicity bounds for the triangular orbit
    Prop55B2 {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 50)]
        dim_bound: u64,
    },
    /// Induction staging independence
    StageIndependence {
        ty: String,
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
        #[arg(long, default_value_t = 4)]
        sum_bound: u32,
    },
    /// Duality as an order-reversing bijection on specials
    Duality { ty: String, rank: u32 },
    /// Greedy collapse against the brute-force definition
    Collapse { ty: String, size: u32 },
    /// Recipe / even-dual / induction consistency audit
    Consistency { ty: String, rank: u32 },
}

fn parse_type(s: &str) -> Result<ClassicalType, String> {
    s.parse::<ClassicalType>().map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_orbit(args: &OrbitArgs) -> Result<Orbit, String> {
    let ty = parse_type(&args.ty)?;
    let partition = parse_partition(&args.partition)?;
    let label = match &args.label {
        Some(l) => Some(format::parse_label(l)?),
        None => None,
    };
    Orbit::new(ty, args.rank, partition, label).map_err(|e| e.to_string())
}

fn parse_weight(s: &str) -> Result<Vec<Rat>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Rat>()
                .map_err(|_| format!("cannot parse rational {tok:?}"))
        })
        .collect()
}

fn parse_blocks(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| format!("cannot parse block size {tok:?}"))
        })
        .collect()
}

/// The seed in effect: flag wins over the NORBIT_SEED environment
/// variable, which wins over the default.
fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("NORBIT_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

/// Runs the CLI against explicit arguments, writing to `out`.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{e}");
            // --help and --version render through the same path
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(out, "error: {msg}");
            1
        }
    }
}

/// DOT output only makes sense for the Hasse diagram.
fn reject_dot(format: OutputFormat) -> Result<(), String> {
    if format == OutputFormat::Dot {
        Err("--format dot is only available for the hasse subcommand".into())
    } else {
        Ok(())
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    let w = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };
    if let Some(format) = match &cli.command {
        Command::Hasse { .. } | Command::Validate { .. } => None,
        Command::OrbitInfo { format, .. }
        | Command::OrbitList { format, .. }
        | Command::Infchar { format, .. }
        | Command::Bvdual { format, .. }
        | Command::Induce { format, .. }
        | Command::Complete { format, .. }
        | Command::Branch { format, .. }
        | Command::Verify { format, .. } => Some(*format),
    } {
        reject_dot(format)?;
    }
    match cli.command {
        Command::Validate { orbit } => {
            let ty = parse_type(&orbit.ty)?;
            let partition = parse_partition(&orbit.partition)?;
            if is_valid(ty, orbit.rank, &partition) {
                w(out, format!("valid: {ty}{} ({partition})", orbit.rank));
                Ok(0)
            } else {
                w(
                    out,
                    format!("invalid: ({partition}) for type {ty} rank {}", orbit.rank),
                );
                Ok(1)
            }
        }
        Command::OrbitInfo { orbit, format } => {
            let o = parse_orbit(&orbit)?;
            let (lambda, rule) = infchar(&o).map_err(|e| e.to_string())?;
            let cuspidal = if o.rank() <= DEFAULT_CUSPIDAL_RANK_BOUND {
                Some(is_cuspidal(&o, DEFAULT_CUSPIDAL_RANK_BOUND).map_err(|e| e.to_string())?)
            } else {
                None
            };
            let triangular = is_triangular(&o);
            match format {
                OutputFormat::Json => {
                    let mut v = format::orbit_json(&o);
                    let obj = v.as_object_mut().unwrap();
                    obj.insert("special".into(), json!(is_special(&o)));
                    obj.insert("even".into(), json!(is_even(&o)));
                    obj.insert(
                        "stably_trivial".into(),
                        json!({
                            "paper_literal": is_stably_trivial(&o, StablyTrivialMode::PaperLiteral),
                            "parity_parallel": is_stably_trivial(&o, StablyTrivialMode::ParityParallel),
                        }),
                    );
                    obj.insert("triangular".into(), json!(triangular));
                    if triangular {
                        let levi = triangular_levi(&o).map_err(|e| e.to_string())?;
                        obj.insert(
                            "triangular_levi".into(),
                            json!({
                                "gl_blocks": levi.gl_blocks,
                                "residual_rank": levi.residual_rank,
                                "a_p_trivial": true,
                            }),
                        );
                    }
                    obj.insert("cuspidal".into(), json!(cuspidal));
                    obj.insert(
                        "component_group_order".into(),
                        json!(component_group_order(&o)),
                    );
                    obj.insert("dynkin_h".into(), json!(dynkin_h(&o)));
                    obj.insert("dynkin_labels".into(), json!(simple_root_labels(&o)));
                    obj.insert("infchar".into(), format::infchar_json(&lambda));
                    obj.insert("infchar_rule".into(), json!(rule.to_string()));
                    w(out, v.to_string());
                }
                _ => {
                    w(out, format!("orbit: {o}"));
                    w(out, format!("  special:        {}", is_special(&o)));
                    w(out, format!("  even:           {}", is_even(&o)));
                    w(
                        out,
                        format!(
                            "  stably trivial: paper-literal {}, parity-parallel {}",
                            is_stably_trivial(&o, StablyTrivialMode::PaperLiteral),
                            is_stably_trivial(&o, StablyTrivialMode::ParityParallel)
                        ),
                    );
                    w(out, format!("  triangular:     {triangular}"));
                    if triangular {
                        let levi = triangular_levi(&o).map_err(|e| e.to_string())?;
                        w(out, format!("  triangular levi: {levi} (A_P trivial)"));
                    }
                    if let Some(c) = cuspidal {
                        w(out, format!("  cuspidal:       {c}"));
                    }
                    w(
                        out,
                        format!("  |A(O)|:         {}", component_group_order(&o)),
                    );
                    w(
                        out,
                        format!(
                            "  dynkin h:       ({})",
                            dynkin_h(&o)
                                .iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                    );
                    w(out, format!("  infchar:        {lambda} [{rule}]"));
                }
            }
            Ok(0)
        }
        Command::OrbitList { ty, rank, format } => {
            let ty = parse_type(&ty)?;
            let orbits = enumerate_orbits(ty, rank);
            match format {
                OutputFormat::Json => {
                    let v: Vec<_> = orbits.iter().map(format::orbit_json).collect();
                    w(out, json!(v).to_string());
                }
                _ => {
                    for o in &orbits {
                        w(out, o.to_string());
                    }
                    w(out, format!("{} orbits", orbits.len()));
                }
            }
            Ok(0)
        }
        Command::Hasse { ty, rank, format } => {
            let ty = parse_type(&ty)?;
            let edges = hasse_edges(ty, rank);
            match format {
                OutputFormat::Dot => {
                    let _ = write!(out, "{}", format::hasse_dot(ty, rank, &edges));
                }
                OutputFormat::Json => {
                    let v: Vec<_> = edges
                        .iter()
                        .map(|(a, b)| {
                            json!({"upper": format::orbit_json(a), "lower": format::orbit_json(b)})
                        })
                        .collect();
                    w(out, json!(v).to_string());
                }
                OutputFormat::Text => {
                    for (a, b) in &edges {
                        w(out, format!("{a} > {b}"));
                    }
                    w(out, format!("{} covering relations", edges.len()));
                }
            }
            Ok(0)
        }
        Command::Infchar {
            orbit,
            pairing_mode,
            explain,
            format,
        } => {
            let o = parse_orbit(&orbit)?;
            let mode = match pairing_mode.as_str() {
                "consistent" => PairingMode::Consistent,
                "literal" => PairingMode::Literal,
                other => return Err(format!("unknown pairing mode {other:?}")),
            };
            let (lambda, rule) = if mode == PairingMode::Literal {
                let (ic, _) = recipe_infchar_traced(&o, mode).map_err(|e| e.to_string())?;
                (ic, InfCharRule::Recipe)
            } else {
                infchar(&o).map_err(|e| e.to_string())?
            };
            let trace = if explain || rule == InfCharRule::Recipe {
                recipe_infchar_traced(&o, mode).ok().map(|(_, t)| t)
            } else {
                None
            };
            match format {
                OutputFormat::Json => {
                    let mut v = format::infchar_json(&lambda);
                    let obj = v.as_object_mut().unwrap();
                    obj.insert("rule".into(), json!(rule.to_string()));
                    obj.insert("orbit".into(), format::orbit_json(&o));
                    if explain {
                        if let Some(t) = &trace {
                            obj.insert("trace".into(), format::trace_json(t));
                        }
                        if let Ok(dual_ic) = even_dual_infchar(&o) {
                            obj.insert("even_dual".into(), format::infchar_json(&dual_ic));
                        }
                    }
                    w(out, v.to_string());
                }
                _ => {
                    w(out, format!("{o}: lambda = {lambda} [{rule}]"));
                    if explain {
                        if let Some(t) = &trace {
                            let _ = write!(out, "{}", format::trace_text(t));
                        }
                        match even_dual_infchar(&o) {
                            Ok(dual_ic) => {
                                w(out, format!("even-dual rule: {dual_ic}"));
                                if let Ok((recipe_ic, _)) = recipe_infchar_traced(&o, mode) {
                                    let agree = infchar_equal(&dual_ic, &recipe_ic)
                                        .map_err(|e| e.to_string())?;
                                    w(out, format!("recipe vs even-dual agree: {agree}"));
                                }
                            }
                            Err(e) => w(out, format!("even-dual rule not applicable: {e}")),
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Bvdual { orbit, format } => {
            let o = parse_orbit(&orbit)?;
            let dual = bv_dual(&o);
            match format {
                OutputFormat::Json => {
                    w(
                        out,
                        json!({
                            "orbit": format::orbit_json(&o),
                            "dual": format::orbit_json(&dual),
                            "dual_is_even": is_even(&dual),
                        })
                        .to_string(),
                    );
                }
                _ => w(out, format!("{o} -> {dual}")),
            }
            Ok(0)
        }
        Command::Induce {
            ty,
            ambient_rank,
            base,
            blocks,
            gl_orbits,
            format,
        } => {
            let ty = parse_type(&ty)?;
            let base_partition = parse_partition(&base)?;
            let base_rank = ty.rank_for_size(base_partition.size()).ok_or_else(|| {
                format!("base size {} does not fit type {ty}", base_partition.size())
            })?;
            let base =
                Orbit::new(ty, base_rank, base_partition, None).map_err(|e| e.to_string())?;
            let induced = if let Some(spec) = gl_orbits {
                let orbits: Vec<Partition> = spec
                    .split('|')
                    .map(parse_partition)
                    .collect::<Result<_, _>>()?;
                induce_general(ty, ambient_rank, &base, &orbits).map_err(|e| e.to_string())?
            } else {
                let blocks = parse_blocks(&blocks.unwrap_or_default())?;
                induce(ty, ambient_rank, &base, &blocks).map_err(|e| e.to_string())?
            };
            match format {
                OutputFormat::Json => w(out, format::orbit_json(&induced).to_string()),
                _ => w(out, format!("induced: {induced}")),
            }
            Ok(0)
        }
        Command::Complete {
            ty,
            partition,
            bound,
            format,
        } => {
            let ty = parse_type(&ty)?;
            let partition = parse_partition(&partition)?;
            let rank = ty
                .rank_for_size(partition.size())
                .ok_or_else(|| format!("size {} does not fit type {ty}", partition.size()))?;
            let o = Orbit::new(ty, rank, partition, None).map_err(|e| e.to_string())?;
            match complete_to_triangular(&o, bound).map_err(|e| e.to_string())? {
                Some((blocks, target)) => {
                    match format {
                        OutputFormat::Json => w(
                            out,
                            json!({
                                "orbit": format::orbit_json(&o),
                                "blocks": blocks,
                                "triangular": format::orbit_json(&target),
                            })
                            .to_string(),
                        ),
                        _ => {
                            if blocks.is_empty() {
                                w(out, format!("{o} is already triangular"));
                            } else {
                                w(
                                    out,
                                    format!(
                                        "{o} + gl blocks [{}] -> {target}",
                                        blocks
                                            .iter()
                                            .map(|b| b.to_string())
                                            .collect::<Vec<_>>()
                                            .join(",")
                                    ),
                                );
                            }
                        }
                    }
                    Ok(0)
                }
                None => {
                    match format {
                        OutputFormat::Json => w(
                            out,
                            json!({
                                "orbit": format::orbit_json(&o),
                                "blocks": null,
                                "diagnostic": format!(
                                    "no completion with block total <= {bound}; \
                                     the search was exhaustive over all block multisets"
                                ),
                            })
                            .to_string(),
                        ),
                        _ => w(
                            out,
                            format!(
                                "{o}: no triangular completion with block total <= {bound} \
                                 (exhaustive search)"
                            ),
                        ),
                    }
                    Ok(0)
                }
            }
        }
        Command::Branch {
            ty,
            rank,
            weight,
            levi_blocks,
            levi_residual,
            dim_bound,
            format,
        } => {
            let ty = parse_type(&ty)?;
            let rs = RootSystem::new(ty, rank);
            let lambda = parse_weight(&weight)?;
            let levi = LeviShape::new(parse_blocks(&levi_blocks)?, levi_residual);
            let decomp =
                branch_to_levi(&rs, &lambda, &levi, dim_bound).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Json => {
                    let v: Vec<_> = decomp
                        .iter()
                        .map(|(w, m)| {
                            json!({"levi_weight": format::weight_strings(w), "multiplicity": m})
                        })
                        .collect();
                    w(
                        out,
                        json!({
                            "weight": format::weight_strings(&lambda),
                            "dim": weyl_dim(&rs, &lambda).map_err(|e| e.to_string())?,
                            "levi": {"gl_blocks": levi.gl_blocks, "residual_rank": levi.residual_rank},
                            "constituents": v,
                        })
                        .to_string(),
                    );
                }
                _ => {
                    for (hw, m) in &decomp {
                        w(
                            out,
                            format!("({}) x {m}", format::weight_strings(hw).join(",")),
                        );
                    }
                    w(out, format!("{} constituents", decomp.len()));
                }
            }
            Ok(0)
        }
        Command::Verify { case, seed, format } => {
            let cfg = OracleConfig::with_seed(resolve_seed(seed));
            let reports = run_verify(case, cfg)?;
            let reports = merge_reports(reports);
            match format {
                OutputFormat::Json => {
                    let v: Vec<_> = reports.iter().map(format::case_json).collect();
                    w(out, json!(v).to_string());
                }
                _ => {
                    for r in &reports {
                        w(out, r.to_string());
                    }
                }
            }
            Ok(if any_failure(&reports) { 2 } else { 0 })
        }
    }
}

fn run_verify(case: VerifyCase, cfg: OracleConfig) -> Result<Vec<CaseReport>, String> {
    match case {
        VerifyCase::Hilbert {
            partition,
            max_degree,
        } => {
            let p = parse_partition(&partition)?;
            let cfg = OracleConfig { max_degree, ..cfg };
            let mut out = Vec::new();
            for d in 0..=max_degree {
                match hilbert::hilbert_oracle(&p, d, &cfg) {
                    Ok(dim) => out.push(CaseReport::pass(
                        format!("hilbert/gl/({p})/degree {d}"),
                        format!("dim {dim}, dual-seed agreement"),
                    )),
                    Err(e) => out.push(CaseReport::fail(
                        format!("hilbert/gl/({p})/degree {d}"),
                        e.to_string(),
                    )),
                }
            }
            Ok(out)
        }
        VerifyCase::Richardson {
            partition,
            dim_bound,
            max_degree,
        } => {
            let p = parse_partition(&partition)?;
            let cfg = OracleConfig { max_degree, ..cfg };
            let report = check_richardson_type_a(&p, dim_bound, &cfg).map_err(|e| e.to_string())?;
            let settled = report.comparisons.iter().filter(|c| c.settled).count();
            let line = format!(
                "{} weights compared, {} settled equalities, oracle through degree {}",
                report.comparisons.len(),
                settled,
                report.max_degree
            );
            Ok(vec![if report.pass {
                CaseReport::pass(format!("richardson/A/({p})"), line)
            } else {
                CaseReport::fail(
                    format!("richardson/A/({p})"),
                    report
                        .comparisons
                        .iter()
                        .filter(|c| c.oracle_cumulative > c.induced_mult)
                        .map(|c| {
                            format!(
                                "mu=({}) oracle {} > induced {}",
                                format::weight_strings(&c.mu).join(","),
                                c.oracle_cumulative,
                                c.induced_mult
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("; "),
                )
            }])
        }
        VerifyCase::Prop55A {
            max_size,
            dim_bound,
        } => {
            let reports =
                check_prop55_type_a_sweep(max_size, dim_bound).map_err(|e| e.to_string())?;
            Ok(reports.iter().flat_map(report_to_cases).collect())
        }
        VerifyCase::Prop55B2 {
            max_degree,
            dim_bound,
        } => {
            let cfg = OracleConfig { max_degree, ..cfg };
            let report = check_prop55_b2(&cfg, dim_bound).map_err(|e| e.to_string())?;
            Ok(report_to_cases(&report))
        }
        VerifyCase::StageIndependence {
            ty,
            max_rank,
            sum_bound,
        } => {
            let ty = parse_type(&ty)?;
            Ok(vec![check_stage_independence(ty, max_rank, sum_bound)])
        }
        VerifyCase::Duality { ty, rank } => {
            let ty = parse_type(&ty)?;
            Ok(vec![check_duality(ty, rank)])
        }
        VerifyCase::Collapse { ty, size } => {
            let ty = parse_type(&ty)?;
            Ok(vec![check_collapse(ty, size)])
        }
        VerifyCase::Consistency { ty, rank } => {
            let ty = parse_type(&ty)?;
            Ok(vec![check_consistency(ty, rank).map_err(|e| e.to_string())?])
        }
    }
}
