//! Command-line front end.
//!
//! Every subcommand is a pure function of its arguments (and of the monoid
//! JSON it reads), writing to the supplied sink. Exit codes: 0 success,
//! 1 domain error, 2 usage error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::intermediate::{
    class_of, from_torsionfree, monoid_of, serre_localization, serre_subcats_of, simp_f, DObj,
    IntermediateCat,
};
use crate::lattice::{hnf, IntLattice, IntVec};
use crate::monoid::{CanonicalMonoid, MonoidElem, SubmonoidGens};
use crate::oracle::{dense_two_out_of_three, ModuleWindow};
use crate::quiver::{
    all_serre_subcategories, ar_quiver_dot, dense_membership, enumerate_torsionfree_classes,
    serre_from_face, subgroup_has_strictly_positive, torsionfree_violation, ArNode, DenseSubgroup,
    Interval, LinearAQuiver, SerreSub, TorsionfreeClass,
};
use crate::verify::{dense_rows, run_suite, Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "grothmon",
    version,
    about = "Grothendieck monoids of type-A length categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Monoid,
    Quiver,
    Intermediate,
    All,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct QuiverArgs {
    /// Number of vertices of A_n.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct TorfArgs {
    #[arg(long)]
    pub n: usize,
    /// Torsionfree class: "[1,1];[1,2]", "all", or "" for the empty class.
    #[arg(long, allow_hyphen_values = true)]
    pub torf: String,
}

#[derive(Debug, Args)]
pub struct MonoidInput {
    /// Monoid JSON file, or "-" for stdin.
    #[arg(long)]
    pub monoid: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical commutative monoids.
    Monoid {
        #[command(subcommand)]
        cmd: MonoidCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Torsionfree classes of mod kA_n.
    Torf {
        #[command(subcommand)]
        cmd: TorfCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Serre subcategories of mod kA_n and faces of ℕⁿ.
    Serre {
        #[command(subcommand)]
        cmd: SerreCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Dense 2-out-of-3 subcategories and subgroups of ℤⁿ.
    Dense {
        #[command(subcommand)]
        cmd: DenseCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Intermediate subcategories F[1]*A.
    Inter {
        #[command(subcommand)]
        cmd: InterCmd,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force invariant suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long = "box", default_value_t = 4)]
        box_bound: u32,
        #[arg(long, default_value_t = 4)]
        dim_bound: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum MonoidCmd {
    /// Normalizes (rank, inverted, relations).
    Make {
        #[arg(long)]
        rank: usize,
        /// Comma-separated 0-based coordinates.
        #[arg(long, default_value = "")]
        inverted: String,
        /// Relation generators, "1,-1;0,2".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        relations: String,
    },
    /// Quotient by the submonoid generated by `--gens`.
    Quotient {
        #[command(flatten)]
        input: MonoidInput,
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
    },
    /// Localization at `--elems`.
    Localize {
        #[command(flatten)]
        input: MonoidInput,
        #[arg(long, allow_hyphen_values = true)]
        elems: String,
    },
    /// Group completion and units.
    Gp {
        #[command(flatten)]
        input: MonoidInput,
    },
    /// All faces.
    Faces {
        #[command(flatten)]
        input: MonoidInput,
    },
}

#[derive(Debug, Subcommand)]
pub enum TorfCmd {
    List {
        #[command(flatten)]
        q: QuiverArgs,
    },
    Check {
        #[command(flatten)]
        t: TorfArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SerreCmd {
    List {
        #[command(flatten)]
        q: QuiverArgs,
    },
    /// Serre subcategory of a face, given by 1-based vertices.
    Map {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long, default_value = "")]
        face: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum DenseCmd {
    /// Strict positivity and the window oracle for one subgroup.
    Check {
        #[command(flatten)]
        q: QuiverArgs,
        /// Subgroup generators, "1,2;0,3".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        subgroup: String,
        #[arg(long, default_value_t = 4)]
        dim_bound: usize,
    },
    /// Subgroups of ℤ² of index ≤ 3, rank-one subgroups and zero.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        dim_bound: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum InterCmd {
    Monoid {
        #[command(flatten)]
        t: TorfArgs,
    },
    Serre {
        #[command(flatten)]
        t: TorfArgs,
    },
    Localize {
        #[command(flatten)]
        t: TorfArgs,
        /// Serre subcategory as 1-based simples, "1,2".
        #[arg(long)]
        serre: String,
    },
    Class {
        #[command(flatten)]
        t: TorfArgs,
        /// Object as JSON, {"neg":[[1,2]],"zero":[[2,2]]}.
        #[arg(long)]
        object: String,
    },
}

enum CliError {
    /// stdout closed early, as in `grothmon torf list --n 8 | head`
    Closed,
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses arguments and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(CliError::Closed) => 0,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "usage error: {m}");
            2
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io<T>(r: std::io::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e.kind() {
        std::io::ErrorKind::BrokenPipe => CliError::Closed,
        _ => usage(format!("i/o: {e}")),
    })
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> CliResult<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| usage(e.to_string()))?;
    io(writeln!(out, "{s}"))
}

fn no_dot(format: Format) -> CliResult<()> {
    if format == Format::Dot {
        Err(usage(
            "--format dot is only available for torf and inter monoid",
        ))
    } else {
        Ok(())
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Monoid { cmd, common } => {
            no_dot(common.format)?;
            monoid_cmd(cmd, common.format, out).map(|_| 0)
        }
        Command::Torf { cmd, common } => torf_cmd(cmd, common.format, out),
        Command::Serre { cmd, common } => {
            no_dot(common.format)?;
            serre_cmd(cmd, common.format, out).map(|_| 0)
        }
        Command::Dense { cmd, common } => {
            no_dot(common.format)?;
            dense_cmd(cmd, common.format, out).map(|_| 0)
        }
        Command::Inter { cmd, common } => inter_cmd(cmd, common.format, out).map(|_| 0),
        Command::Verify {
            suite,
            n,
            box_bound,
            dim_bound,
            common,
        } => {
            no_dot(common.format)?;
            if !(1..=8).contains(&n) {
                return Err(usage("--n must lie in 1..=8"));
            }
            let suite = match suite {
                SuiteArg::Monoid => Suite::Monoid,
                SuiteArg::Quiver => Suite::Quiver,
                SuiteArg::Intermediate => Suite::Intermediate,
                SuiteArg::All => Suite::All,
            };
            let opts = VerifyOptions {
                n,
                box_bound,
                dim_bound,
            };
            let results = run_suite(suite, &opts);
            // timings go to stderr so stdout stays byte-identical between runs
            for r in &results {
                io(writeln!(
                    err,
                    "{}/{}: {:.3}s",
                    r.suite,
                    r.name,
                    r.elapsed.as_secs_f64()
                ))?;
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            match common.format {
                Format::Json => emit_json(out, &results)?,
                _ => {
                    for r in &results {
                        let status = if r.passed { "PASS" } else { "FAIL" };
                        io(writeln!(
                            out,
                            "{status} {}/{}: {}",
                            r.suite, r.name, r.detail
                        ))?;
                    }
                    io(writeln!(out, "{} checks, {failed} failed", results.len()))?;
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

// ---- parsing --------------------------------------------------------------

/// "1,-1;0,2" → rows. Empty input gives no rows.
pub fn parse_vectors(s: &str) -> std::result::Result<Vec<IntVec>, String> {
    s.split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse().map_err(|_| format!("bad integer {x:?}")))
                .collect()
        })
        .collect()
}

fn parse_indices(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| format!("bad index {x:?}")))
        .collect()
}

/// Torsionfree-class syntax: `[lo,hi]` pairs separated by `;`, `all`, or empty.
pub fn parse_torf(q: &LinearAQuiver, s: &str) -> std::result::Result<BTreeSet<Interval>, String> {
    let s = s.trim();
    if s == "all" {
        return Ok(q.intervals().into_iter().collect());
    }
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let inner = p
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(|| format!("expected [lo,hi], got {p:?}"))?;
            let ends = parse_indices(inner)?;
            match ends[..] {
                [lo, hi] => q.interval(lo, hi).map_err(|e| e.to_string()),
                _ => Err(format!("expected two endpoints in {p:?}")),
            }
        })
        .collect()
}

fn quiver(n: usize) -> CliResult<LinearAQuiver> {
    LinearAQuiver::new(n).map_err(|e| usage(e.to_string()))
}

fn torf_class(t: &TorfArgs) -> CliResult<(LinearAQuiver, TorsionfreeClass)> {
    let q = quiver(t.n)?;
    let set = parse_torf(&q, &t.torf).map_err(usage)?;
    if let Some(v) = torsionfree_violation(&q, &set) {
        return Err(CliError::Domain(Error::NotTorsionfree(v.to_string())));
    }
    let class = TorsionfreeClass::new(&q, set)?;
    Ok((q, class))
}

fn read_monoid(input: &MonoidInput) -> CliResult<CanonicalMonoid> {
    let text = if input.monoid == "-" {
        let mut s = String::new();
        io(std::io::stdin().read_to_string(&mut s))?;
        s
    } else {
        io(std::fs::read_to_string(&input.monoid))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("monoid JSON: {e}")))
}

fn elems(m: &CanonicalMonoid, text: &str) -> CliResult<Vec<MonoidElem>> {
    let rows = parse_vectors(text).map_err(usage)?;
    Ok(rows
        .into_iter()
        .map(|r| m.elem(r))
        .collect::<crate::Result<_>>()?)
}

// ---- monoid ---------------------------------------------------------------

fn monoid_report(m: &CanonicalMonoid, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => emit_json(out, m),
        _ => {
            io(writeln!(out, "monoid: {m}"))?;
            let inv: Vec<String> = m.inverted().iter().map(|i| i.to_string()).collect();
            io(writeln!(out, "rank: {}", m.rank()))?;
            io(writeln!(out, "inverted: {{{}}}", inv.join(",")))?;
            io(writeln!(out, "relations: {}", m.relations()))
        }
    }
}

fn monoid_cmd(cmd: MonoidCmd, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        MonoidCmd::Make {
            rank,
            inverted,
            relations,
        } => {
            let inv = parse_indices(&inverted).map_err(usage)?;
            let rel = parse_vectors(&relations).map_err(usage)?;
            if rel.iter().any(|r| r.len() != rank) || inv.iter().any(|&i| i >= rank) {
                return Err(usage("coordinates do not match --rank"));
            }
            monoid_report(&CanonicalMonoid::make(rank, &inv, &rel)?, format, out)
        }
        MonoidCmd::Quotient { input, gens } => {
            let m = read_monoid(&input)?;
            let sub = SubmonoidGens::new(&m, elems(&m, &gens)?)?;
            monoid_report(&m.quotient_by_submonoid(&sub)?, format, out)
        }
        MonoidCmd::Localize { input, elems: text } => {
            let m = read_monoid(&input)?;
            monoid_report(&m.localize(&elems(&m, &text)?)?, format, out)
        }
        MonoidCmd::Gp { input } => {
            let m = read_monoid(&input)?;
            let (gp, units) = (m.group_completion(), m.units());
            match format {
                Format::Json => emit_json(out, &json!({ "group_completion": gp, "units": units })),
                _ => {
                    io(writeln!(out, "group completion: {gp}"))?;
                    io(writeln!(out, "units: {units}"))
                }
            }
        }
        MonoidCmd::Faces { input } => {
            let m = read_monoid(&input)?;
            let faces: Vec<Vec<usize>> = m
                .faces()
                .iter()
                .map(|f| f.coords().iter().copied().collect())
                .collect();
            match format {
                Format::Json => emit_json(out, &faces),
                _ => {
                    io(writeln!(out, "{} faces", faces.len()))?;
                    for f in &faces {
                        let parts: Vec<String> = f.iter().map(|i| i.to_string()).collect();
                        io(writeln!(out, "{{{}}}", parts.join(",")))?;
                    }
                    Ok(())
                }
            }
        }
    }
}

// ---- torsionfree and Serre -----------------------------------------------

fn torf_cmd(cmd: TorfCmd, format: Format, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        TorfCmd::List { q } => {
            let quiv = quiver(q.n)?;
            let classes = enumerate_torsionfree_classes(&quiv);
            match format {
                Format::Json => emit_json(out, &classes)?,
                Format::Dot => {
                    for (k, t) in classes.iter().enumerate() {
                        io(writeln!(out, "// class {k}: {t}"))?;
                        io(write!(out, "{}", ar_quiver_dot(&quiv, &unshifted(t))))?;
                    }
                }
                Format::Text => {
                    io(writeln!(
                        out,
                        "{} torsionfree classes of mod kA_{}",
                        classes.len(),
                        q.n
                    ))?;
                    for t in &classes {
                        io(writeln!(out, "{t}"))?;
                    }
                }
            }
            Ok(0)
        }
        TorfCmd::Check { t } => {
            let q = quiver(t.n)?;
            let set = parse_torf(&q, &t.torf).map_err(usage)?;
            let violation = torsionfree_violation(&q, &set);
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "torsionfree": violation.is_none(),
                        "violation": violation.as_ref().map(|v| v.to_string()),
                    }),
                )?,
                Format::Dot => {
                    let nodes = set
                        .iter()
                        .map(|&i| ArNode {
                            interval: i,
                            shifted: false,
                        })
                        .collect();
                    io(write!(out, "{}", ar_quiver_dot(&q, &nodes)))?;
                }
                Format::Text => match &violation {
                    None => io(writeln!(out, "torsionfree"))?,
                    Some(v) => io(writeln!(out, "not torsionfree: {v}"))?,
                },
            }
            Ok(if violation.is_none() { 0 } else { 1 })
        }
    }
}

fn unshifted(t: &TorsionfreeClass) -> BTreeSet<ArNode> {
    t.intervals()
        .iter()
        .map(|&i| ArNode {
            interval: i,
            shifted: false,
        })
        .collect()
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn fmt_intervals(s: &BTreeSet<Interval>) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn serre_cmd(cmd: SerreCmd, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        SerreCmd::List { q } => {
            let quiv = quiver(q.n)?;
            let subs = all_serre_subcategories(&quiv);
            let rows: Vec<_> = subs
                .iter()
                .map(|s| json!({ "simples": s.simples, "intervals": s.intervals(&quiv) }))
                .collect();
            match format {
                Format::Json => emit_json(out, &rows),
                _ => {
                    io(writeln!(
                        out,
                        "{} Serre subcategories of mod kA_{}",
                        subs.len(),
                        q.n
                    ))?;
                    for s in &subs {
                        io(writeln!(
                            out,
                            "face {} ↦ {}",
                            fmt_set(&s.simples),
                            fmt_intervals(&s.intervals(&quiv))
                        ))?;
                    }
                    Ok(())
                }
            }
        }
        SerreCmd::Map { q, face } => {
            let quiv = quiver(q.n)?;
            let face: BTreeSet<usize> = parse_indices(&face).map_err(usage)?.into_iter().collect();
            SerreSub::new(&quiv, face.iter().copied())?;
            let t = serre_from_face(&quiv, &face);
            match format {
                Format::Json => emit_json(out, &t),
                _ => io(writeln!(out, "{}", fmt_intervals(&t))),
            }
        }
    }
}

// ---- dense ----------------------------------------------------------------

fn dense_cmd(cmd: DenseCmd, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        DenseCmd::Check {
            q,
            subgroup,
            dim_bound,
        } => {
            quiver(q.n)?;
            let rows = parse_vectors(&subgroup).map_err(usage)?;
            if rows.iter().any(|r| r.len() != q.n) {
                return Err(usage("subgroup generators must have length --n"));
            }
            let h = DenseSubgroup::new(if rows.is_empty() {
                IntLattice::zero(q.n)
            } else {
                hnf(&rows, q.n)?
            });
            let w = ModuleWindow::new(q.n, dim_bound)?;
            let member = |x: &crate::quiver::ModuleObj| dense_membership(&h, x).unwrap_or(false);
            let verdict = dense_two_out_of_three(&w, &member, 3 * dim_bound);
            let positive = subgroup_has_strictly_positive(&h);
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "subgroup": h.lattice,
                        "strictly_positive": positive,
                        "witness": h.positive_witness().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                        "two_out_of_three": verdict.two_out_of_three,
                        "dense": verdict.dense,
                        "undense_witness": verdict.undense_witness,
                    }),
                ),
                _ => {
                    io(writeln!(out, "subgroup: {}", h.lattice))?;
                    io(writeln!(out, "strictly positive: {positive}"))?;
                    io(writeln!(
                        out,
                        "window 2-out-of-3: {}",
                        verdict.two_out_of_three
                    ))?;
                    io(writeln!(out, "window dense: {}", verdict.dense))
                }
            }
        }
        DenseCmd::Enumerate { dim_bound } => {
            let rows = dense_rows(dim_bound)?;
            match format {
                Format::Json => emit_json(out, &rows),
                _ => {
                    io(writeln!(out, "{} subgroups of ℤ²", rows.len()))?;
                    for r in &rows {
                        io(writeln!(
                            out,
                            "{}: positive {}, 2-out-of-3 {}, dense {}",
                            r.subgroup, r.strictly_positive, r.two_out_of_three, r.dense
                        ))?;
                    }
                    Ok(())
                }
            }
        }
    }
}

// ---- intermediate ---------------------------------------------------------

fn inter(t: &TorfArgs) -> CliResult<IntermediateCat> {
    let (_, class) = torf_class(t)?;
    Ok(from_torsionfree(t.n, &class)?)
}

fn parse_serre(q: &LinearAQuiver, s: &str) -> CliResult<SerreSub> {
    let simples = parse_indices(s).map_err(usage)?;
    SerreSub::new(q, simples).map_err(|e| usage(e.to_string()))
}

fn inter_cmd(cmd: InterCmd, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        InterCmd::Monoid { t } => {
            let c = inter(&t)?;
            let m = monoid_of(&c);
            let serre = serre_subcats_of(&c);
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "torf": c.torf(),
                        "monoid": m,
                        "units": m.units(),
                        "group_completion": m.group_completion(),
                        "serre": serre.iter().map(|s| &s.simples).collect::<Vec<_>>(),
                    }),
                ),
                Format::Dot => {
                    let mut nodes = unshifted(&TorsionfreeClass::all(c.quiver()));
                    nodes.extend(c.torf().intervals().iter().map(|&i| ArNode {
                        interval: i,
                        shifted: true,
                    }));
                    io(write!(out, "{}", ar_quiver_dot(c.quiver(), &nodes)))
                }
                Format::Text => {
                    io(writeln!(out, "F = {}", c.torf()))?;
                    io(writeln!(out, "monoid: {m}"))?;
                    io(writeln!(out, "units: {}", m.units()))?;
                    io(writeln!(out, "group completion: {}", m.group_completion()))?;
                    io(writeln!(out, "{} Serre subcategories", serre.len()))?;
                    for s in &serre {
                        io(writeln!(out, "{s}"))?;
                    }
                    Ok(())
                }
            }
        }
        InterCmd::Serre { t } => {
            no_dot(format)?;
            let c = inter(&t)?;
            let base = simp_f(&c);
            let rows: Vec<_> = serre_subcats_of(&c)
                .into_iter()
                .map(|s| {
                    let face: BTreeSet<usize> = s.simples.difference(&base).copied().collect();
                    (s, face)
                })
                .collect();
            match format {
                Format::Json => emit_json(
                    out,
                    &rows
                        .iter()
                        .map(|(s, f)| json!({ "simples": s.simples, "face": f }))
                        .collect::<Vec<_>>(),
                ),
                _ => {
                    io(writeln!(out, "{} Serre subcategories", rows.len()))?;
                    for (s, f) in &rows {
                        io(writeln!(out, "{s} ↔ face on vertices {}", fmt_set(f)))?;
                    }
                    Ok(())
                }
            }
        }
        InterCmd::Localize { t, serre } => {
            no_dot(format)?;
            let c = inter(&t)?;
            let s = parse_serre(c.quiver(), &serre)?;
            let loc = serre_localization(&c, &s)?;
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "serre": loc.serre.simples,
                        "m_quotient": loc.m_quotient,
                        "a_quotient": loc.a_quotient,
                        "kept": loc.kept,
                        "iso": loc.iso,
                    }),
                ),
                _ => {
                    io(writeln!(out, "S = {}", loc.serre))?;
                    io(writeln!(out, "M(C)/M_S: {}", loc.m_quotient))?;
                    io(writeln!(out, "M(A)/M_S: {}", loc.a_quotient))?;
                    io(writeln!(out, "isomorphic: {}", loc.iso))
                }
            }
        }
        InterCmd::Class { t, object } => {
            no_dot(format)?;
            let c = inter(&t)?;
            let x: DObj =
                serde_json::from_str(&object).map_err(|e| usage(format!("object JSON: {e}")))?;
            for m in [&x.neg, &x.zero] {
                m.check_in(c.quiver()).map_err(|e| usage(e.to_string()))?;
            }
            let class = class_of(&c, &x)?;
            match format {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "object": x,
                        "class": class.to_repr(),
                        "normal_form": class.normal_form().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "unit": class.is_unit(),
                    }),
                ),
                _ => {
                    io(writeln!(out, "[{x}] = {class} in {}", monoid_of(&c)))?;
                    io(writeln!(out, "unit: {}", class.is_unit()))
                }
            }
        }
    }
}
