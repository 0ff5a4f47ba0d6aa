//! Command-line front end.
//!
//! [`execute`] parses arguments and renders output without touching the
//! process; [`run`] prints or writes the result and returns the exit code:
//! 0 on success, 1 when a verification check fails, 2 on invalid input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::admissibility::{classify_pair, render_tau};
use crate::characters::{branching_multiplicities, decompose};
use crate::error::{Error, Result};
use crate::levi::{
    enumerate_simple_levis, levi_from_generators, project_current_weight, LeviSubalgebra,
};
use crate::rootsystem::{CartanType, Family, RootSystem};
use crate::verify::{
    check_global_local, check_lemma, check_quotient_bound, check_simple_restriction,
    check_surjectivity, check_thm2i, check_thm2ii, lemma_instance, summarize, sweep, CheckKind,
    SweepConfig, VerificationReport,
};
use crate::weight::Weight;
use crate::weylmodule::{local_weyl_character, local_weyl_dim, parse_coords, CurrentWeight};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "levi-weyl",
    version,
    about = "Levi subalgebras and Weyl modules of classical Lie algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "LEVI_WEYL_FORMAT",
        default_value = "text"
    )]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GArg {
    /// Ambient type, e.g. B3.
    #[arg(long)]
    pub g: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root system data.
    Rootsys {
        #[command(subcommand)]
        action: RootsysAction,
    },
    /// Levi subalgebras.
    Levi {
        #[command(subcommand)]
        action: LeviAction,
    },
    /// Project a weight or current weight to a Levi.
    Project {
        #[command(flatten)]
        g: GArg,
        /// Roots generating the Levi (ε-syntax, comma-separated) or an
        /// index from `levi enumerate`.
        #[arg(long)]
        levi: String,
        /// Fundamental coordinates, e.g. 0,1,0.
        #[arg(long, conflicts_with = "current")]
        weight: Option<String>,
        /// Current weight, e.g. "p:1,0,0;q:0,1,0".
        #[arg(long)]
        current: Option<String>,
    },
    /// Admissibility verdict for (Levi, weight), as JSON.
    Admissible {
        #[command(flatten)]
        g: GArg,
        #[arg(long)]
        levi: String,
        #[arg(long)]
        weight: String,
    },
    /// Decomposition of a local Weyl module character.
    WeylChar(WeylArgs),
    /// Dimension of a local Weyl module.
    WeylDim(WeylArgs),
    /// Branching multiplicities of V(λ) restricted to a Levi.
    Branch {
        #[command(flatten)]
        g: GArg,
        #[arg(long)]
        levi: String,
        #[arg(long)]
        weight: String,
    },
    /// Run verification checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct WeylArgs {
    #[command(flatten)]
    pub g: GArg,
    /// Fundamental coordinates (of the Levi when --levi is given).
    #[arg(long, required_unless_present = "current")]
    pub weight: Option<String>,
    /// Current weight; only its total weight matters.
    #[arg(long, conflicts_with = "weight")]
    pub current: Option<String>,
    /// Work over this Levi instead of g.
    #[arg(long)]
    pub levi: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RootsysAction {
    Show(GArg),
}

#[derive(Subcommand, Debug)]
pub enum LeviAction {
    /// List the simple Levi subalgebras.
    Enumerate(GArg),
    /// Build and classify the Levi generated by the given roots.
    Classify {
        #[command(flatten)]
        g: GArg,
        #[arg(long)]
        roots: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// thm2i, thm2ii, lemmas, surjectivity, global-local,
    /// simple-restriction, support-independence, quotient-bound or all.
    pub check: String,
    /// Ambient types to sweep, comma-separated; defaults to all of rank 2 to 4.
    #[arg(long)]
    pub g: Option<String>,
    /// Check a single Levi instead of sweeping.
    #[arg(long, requires = "weight")]
    pub levi: Option<String>,
    /// Check a single weight instead of sweeping.
    #[arg(long, requires = "levi")]
    pub weight: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub max_weight_sum: i64,
    #[arg(long, default_value_t = 2)]
    pub restriction_weight_sum: i64,
    #[arg(long, default_value_t = 8)]
    pub surjectivity_bound: u64,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_system(text: &str) -> Result<RootSystem> {
    let t: CartanType = text.parse()?;
    if !t.is_simple() {
        return Err(Error::Parse(format!("expected a simple type, got {text}")));
    }
    RootSystem::from_type(t)
}

fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight> {
    rs.weight_from_fundamental(&parse_coords(text)?)
}

/// Resolves a Levi given either as ε-roots (closure is taken) or as a
/// 1-based index into `levi enumerate`.
pub fn parse_levi(rs: &RootSystem, text: &str) -> Result<LeviSubalgebra> {
    let text = text.trim();
    if let Ok(index) = text.parse::<usize>() {
        let all = enumerate_simple_levis(rs)?;
        if index == 0 || index > all.len() {
            return Err(Error::IndexOutOfRange {
                index,
                rank: all.len(),
            });
        }
        return Ok(all[index - 1].clone());
    }
    let gens = text
        .split(',')
        .map(|t| rs.parse_eps(t))
        .collect::<Result<Vec<_>>>()?;
    levi_from_generators(rs, &gens)
}

fn decomposition_json(rs: &RootSystem, parts: &[(Weight, u64)]) -> Value {
    Value::Array(
        parts
            .iter()
            .map(|(w, m)| json!({ "weight": rs.render_fundamental(w), "mult": m }))
            .collect(),
    )
}

fn decomposition_text(rs: &RootSystem, parts: &[(Weight, u64)]) -> String {
    parts
        .iter()
        .map(|(w, m)| format!("V({}) x {m}\n", rs.render_fundamental(w)))
        .collect()
}

fn levi_json(a: &LeviSubalgebra) -> Value {
    json!({
        "type": a.cartan_type().to_string(),
        "simple_roots": a.simple_roots_string(),
        "canonical": a.canonical_string(),
        "simple_root_generated": a.is_simple_root_generated(),
        "components": a.components().iter().map(|c| json!({
            "type": c.label(),
            "simple_roots": c.simple_roots.iter().map(|r| a.ambient().render_eps(r)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

struct Rendered {
    json: Value,
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            failed: false,
        }
    }
}

fn rootsys_show(rs: &RootSystem) -> Rendered {
    let eps = |ws: &[Weight]| ws.iter().map(|w| rs.render_eps(w)).collect::<Vec<_>>();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "simple_roots": eps(rs.simple_roots()),
        "positive_roots": eps(rs.positive_roots()),
        "fundamental_weights": eps(rs.fundamental_weights()),
        "rho": rs.render_eps(rs.rho()),
        "cartan_matrix": rs.cartan_matrix(),
    });
    let mut text = format!("type {}\n", rs.cartan_type());
    text += &format!("simple roots: {}\n", eps(rs.simple_roots()).join(", "));
    text += &format!(
        "positive roots ({}): {}\n",
        rs.positive_roots().len(),
        eps(rs.positive_roots()).join(", ")
    );
    text += &format!(
        "fundamental weights: {}\n",
        eps(rs.fundamental_weights()).join(", ")
    );
    text += &format!("rho: {}\n", rs.render_eps(rs.rho()));
    Rendered::ok(json, text)
}

fn levi_enumerate(rs: &RootSystem) -> Result<Rendered> {
    let levis = enumerate_simple_levis(rs)?;
    let mut text = String::new();
    let mut items = Vec::new();
    for (i, a) in levis.iter().enumerate() {
        text += &format!(
            "{}: {} {}{}\n",
            i + 1,
            a.cartan_type(),
            a.simple_roots_string(),
            if a.is_simple_root_generated() {
                ""
            } else {
                " (not simple-root generated)"
            }
        );
        let mut j = levi_json(a);
        j["index"] = json!(i + 1);
        items.push(j);
    }
    Ok(Rendered::ok(
        json!({ "g": rs.cartan_type().to_string(), "count": levis.len(), "levis": items }),
        text,
    ))
}

fn levi_classify(rs: &RootSystem, roots: &str) -> Result<Rendered> {
    let a = parse_levi(rs, roots)?;
    let text = format!(
        "type {}\nsimple roots {}\n",
        a.cartan_type(),
        a.simple_roots_string()
    );
    Ok(Rendered::ok(levi_json(&a), text))
}

fn project(
    rs: &RootSystem,
    levi: &str,
    weight: Option<&str>,
    current: Option<&str>,
) -> Result<Rendered> {
    let a = parse_levi(rs, levi)?;
    if let Some(cur) = current {
        let psi = CurrentWeight::parse(rs, cur)?;
        let image = project_current_weight(&a, &psi)?;
        let mut text = String::new();
        let mut map = serde_json::Map::new();
        for (label, w) in image.entries() {
            let c = a.system().render_fundamental(w);
            text += &format!("{label}: {c}\n");
            map.insert(label.clone(), json!(c));
        }
        let wt = a.system().render_fundamental(&image.wt());
        text += &format!("wt: {wt}\n");
        return Ok(Rendered::ok(
            json!({ "levi": a.to_string(), "entries": map, "wt": wt }),
            text,
        ));
    }
    let w = parse_weight(
        rs,
        weight.ok_or_else(|| Error::Parse("--weight or --current is required".into()))?,
    )?;
    let coords = a.project_coords(&w)?;
    let joined = coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    Ok(Rendered::ok(
        json!({ "levi": a.to_string(), "weight": rs.render_fundamental(&w), "projection": joined, "tau": render_tau(&coords) }),
        format!("{joined}\n"),
    ))
}

fn weyl_context(args: &WeylArgs) -> Result<(RootSystem, Weight)> {
    let g = parse_system(&args.g.g)?;
    let target = match &args.levi {
        Some(l) => parse_levi(&g, l)?.system().clone(),
        None => g,
    };
    let lambda = match (&args.weight, &args.current) {
        (Some(w), _) => parse_weight(&target, w)?,
        (None, Some(c)) => CurrentWeight::parse(&target, c)?.wt(),
        (None, None) => return Err(Error::Parse("--weight or --current is required".into())),
    };
    target.require_dominant(&lambda)?;
    Ok((target, lambda))
}

fn weyl_char(args: &WeylArgs) -> Result<Rendered> {
    let (rs, lambda) = weyl_context(args)?;
    let c = local_weyl_character(&rs, &lambda)?;
    let parts = decompose(&rs, &c)?;
    Ok(Rendered::ok(
        json!({
            "type": rs.cartan_type().to_string(),
            "weight": rs.render_fundamental(&lambda),
            "dimension": c.mass(),
            "decomposition": decomposition_json(&rs, &parts),
        }),
        decomposition_text(&rs, &parts),
    ))
}

fn weyl_dim(args: &WeylArgs) -> Result<Rendered> {
    let (rs, lambda) = weyl_context(args)?;
    let d = local_weyl_dim(&rs, &lambda)?;
    Ok(Rendered::ok(
        json!({ "type": rs.cartan_type().to_string(), "weight": rs.render_fundamental(&lambda), "dimension": d }),
        format!("{d}\n"),
    ))
}

fn branch(rs: &RootSystem, levi: &str, weight: &str) -> Result<Rendered> {
    let a = parse_levi(rs, levi)?;
    let w = parse_weight(rs, weight)?;
    let parts: Vec<(Weight, u64)> = branching_multiplicities(rs, &w, &a)?.into_iter().collect();
    let sys = a.system();
    let mut ordered = parts;
    ordered.sort_by_key(|x| std::cmp::Reverse(sys.fundamental_coords(&x.0).unwrap_or_default()));
    Ok(Rendered::ok(
        json!({ "levi": a.to_string(), "weight": rs.render_fundamental(&w), "decomposition": decomposition_json(sys, &ordered) }),
        decomposition_text(sys, &ordered),
    ))
}

fn default_systems() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D] {
        for n in f.min_rank().max(2)..=4 {
            v.push((f, n));
        }
    }
    v
}

fn single_check(
    kind: CheckKind,
    g: &RootSystem,
    a: &LeviSubalgebra,
    w: &Weight,
    bound: u64,
) -> Result<Vec<VerificationReport>> {
    Ok(match kind {
        CheckKind::Thm2i => vec![check_thm2i(g, a, w)?],
        CheckKind::Thm2ii => vec![check_thm2ii(g, a, w)?],
        CheckKind::QuotientBound => vec![check_quotient_bound(g, a, w)?],
        CheckKind::Surjectivity => vec![check_surjectivity(g, a, w, bound)?],
        CheckKind::GlobalLocal => vec![check_global_local(g, a, w)?],
        CheckKind::SimpleRestriction => vec![check_simple_restriction(g, a, w)?],
        CheckKind::SupportIndependence => {
            let parts: Vec<Weight> = g
                .fundamental_coords(w)?
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| {
                    std::iter::repeat_n(g.fundamental_weights()[i].clone(), m as usize)
                })
                .collect();
            vec![crate::verify::check_support_independence(g, a, w, &parts)?]
        }
        CheckKind::Lemmas => {
            let mut out = Vec::new();
            for (i, &m) in g.fundamental_coords(w)?.iter().enumerate() {
                if m > 0 {
                    if let Some(inst) = lemma_instance(a, i + 1)? {
                        out.push(check_lemma(a, &inst)?);
                    }
                }
            }
            out
        }
    })
}

fn verify(args: &VerifyArgs) -> Result<Rendered> {
    let checks = if args.check == "all" {
        CheckKind::ALL.to_vec()
    } else {
        vec![args.check.parse::<CheckKind>()?]
    };
    let reports = match (&args.levi, &args.weight) {
        (Some(levi), Some(weight)) => {
            let gtext = args
                .g
                .as_deref()
                .ok_or_else(|| Error::Parse("--g is required with --levi".into()))?;
            let g = parse_system(gtext)?;
            let a = parse_levi(&g, levi)?;
            let w = parse_weight(&g, weight)?;
            g.require_dominant(&w)?;
            let mut out = Vec::new();
            for kind in checks {
                out.extend(single_check(kind, &g, &a, &w, args.surjectivity_bound)?);
            }
            out
        }
        _ => {
            let systems = match &args.g {
                Some(list) => list
                    .split(',')
                    .map(|t| {
                        let t: CartanType = t.parse()?;
                        match t.components() {
                            [(f, n)] => Ok((*f, *n)),
                            _ => Err(Error::Parse(format!("expected a simple type, got {t}"))),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => default_systems(),
            };
            sweep(&SweepConfig {
                systems,
                checks,
                max_weight_sum: args.max_weight_sum,
                restriction_weight_sum: args.restriction_weight_sum,
                surjectivity_bound: args.surjectivity_bound,
            })?
        }
    };
    let summary = summarize(&reports);
    let mut text = String::new();
    for r in &reports {
        text += &format!(
            "{} {} {} [{}] [{}] expected={} computed={}\n",
            r.status, r.check, r.g, r.levi, r.lambda, r.expected, r.computed
        );
    }
    text += &format!(
        "summary: {} passed, {} failed, {} skipped\n",
        summary.pass, summary.fail, summary.skipped
    );
    Ok(Rendered {
        json: json!({ "summary": summary, "reports": reports }),
        text,
        failed: summary.fail > 0,
    })
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::Rootsys {
            action: RootsysAction::Show(g),
        } => Ok(rootsys_show(&parse_system(&g.g)?)),
        Command::Levi { action } => match action {
            LeviAction::Enumerate(g) => levi_enumerate(&parse_system(&g.g)?),
            LeviAction::Classify { g, roots } => levi_classify(&parse_system(&g.g)?, roots),
        },
        Command::Project {
            g,
            levi,
            weight,
            current,
        } => project(
            &parse_system(&g.g)?,
            levi,
            weight.as_deref(),
            current.as_deref(),
        ),
        Command::Admissible { g, levi, weight } => {
            let rs = parse_system(&g.g)?;
            let a = parse_levi(&rs, levi)?;
            let w = parse_weight(&rs, weight)?;
            let v = classify_pair(&a, &w)?;
            let json = serde_json::to_value(&v).expect("verdict serializes");
            let text = format!("{}\n", serde_json::to_string(&json).expect("json"));
            Ok(Rendered::ok(json, text))
        }
        Command::WeylChar(args) => weyl_char(args),
        Command::WeylDim(args) => weyl_dim(args),
        Command::Branch { g, levi, weight } => branch(&parse_system(&g.g)?, levi, weight),
        Command::Verify(args) => verify(args),
    }
}

/// Parses `argv` (including the program name) and renders the result.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("json");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
            };
            Outcome {
                code: if r.failed { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let output = Cli::try_parse_from(&argv).ok().and_then(|c| c.output);
    let outcome = execute(&argv);
    eprint!("{}", outcome.stderr);
    match output {
        Some(path) if outcome.code != 2 => {
            if let Err(e) = std::fs::write(&path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        _ => {
            let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
        }
    }
    outcome.code
}
