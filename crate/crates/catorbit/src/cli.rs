//! Argument parsing and dispatch. [`run`] returns the exit status:
//! 0 when everything requested passed, 1 when a verification failed, 2 on
//! a usage or input error.

use std::ffi::OsString;
use std::io::Write;

use catorbit_core::counting::{
    ballot, catalan, count_square_roots, e_table_omega, e_table_square,
    verify_alternating_identity, verify_catalan_convolution,
};
use catorbit_core::orbits::{
    build_omega_levels, build_orbit_levels, build_q_orbit, classify_root, descendants,
    verify_cover, OmegaSpec,
};
use catorbit_core::partitions::{
    append_part, drop_last, enumerate_box, is_square, is_tau_fixed, make_partition, tau_complement,
};
use catorbit_core::symfunc::{
    compositions_of, conjecture_report, default_dmax, independence_check, monomial_symmetric,
    p_of_mu, pm_poly, spanning_check, symmetric_shapes, CheckOptions, SpanConvention,
};
use catorbit_core::trees::{
    build_canonical_tree, build_orbit_tree, check_label_isomorphism, compare_roots,
};
use catorbit_core::{Error, Partition};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::export;

#[derive(Debug, Parser)]
#[command(
    name = "catorbit",
    version,
    about = "Catalan and ballot orbit sets of partitions, their labeled trees, and exact checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
    Dot,
    /// Level sizes as one comma-separated line.
    Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Literal,
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    All,
    Independence,
    Spanning,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let raw = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("expected comma-separated integers: {e}"))?;
    make_partition(&raw).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Show τ_k, squareness, τ-fixedness, drop and append for one partition.
    Partition {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Box bound for τ; defaults to the largest part.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 1)]
        append: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List P^{n,k}, descending-lex.
    Box {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The descendant set d(μ).
    Descendants {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Box level of μ; defaults to its number of parts.
        #[arg(long)]
        level: Option<usize>,
    },
    /// The orbit level P^ℓ(λ).
    Orbit {
        #[arg(long, value_parser = parse_partition)]
        root: Partition,
        /// Size of the root's box; defaults to its number of parts.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The orbit level P^ℓ(Ω_m).
    Omega {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Walk μ ∈ P^ℓ back to its square root.
    Classify {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that the orbits partition P^ℓ.
    Cover {
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The orbit tree, or forest, of a square root.
    Tree {
        #[arg(long, value_parser = parse_partition)]
        root: Partition,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// The canonical labeled tree.
    CanonicalTree {
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Compare orbit-tree labels with the canonical tree.
    CheckLabels {
        #[arg(long, value_parser = parse_partition)]
        root: Partition,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Match the orbit trees of two square roots level by level.
    CompareTrees {
        #[arg(long, value_parser = parse_partition)]
        root1: Partition,
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long, value_parser = parse_partition)]
        root2: Partition,
        #[arg(long)]
        k2: Option<usize>,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Catalan, ballot and square-root counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// The e-table of a square root or of Ω_m, checked against its closed form.
    Etable(EtableArgs),
    /// The convolution or alternating binomial identity.
    Identities(IdentityArgs),
    /// Generalised orbits Q^i(λ) of an arbitrary partition.
    Qorbit {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Polynomials P_m(a,b), comp(μ), P(μ) and monomial symmetric functions.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Graded independence, spanning, rank count and Hilbert comparison.
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Subcommand)]
pub enum CountCommand {
    /// c_n.
    Catalan {
        #[arg(long)]
        n: u32,
    },
    /// b_{ℓ,m}.
    Ballot {
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// #P^k_sq.
    SquareRoots {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["root", "m"])))]
pub struct EtableArgs {
    #[arg(long, value_parser = parse_partition)]
    root: Option<Partition>,
    #[arg(long, requires = "root")]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    lmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("identity").required(true).args(["convolution", "alternating"])))]
pub struct IdentityArgs {
    #[arg(long)]
    convolution: bool,
    #[arg(long, requires = "mmax")]
    alternating: bool,
    #[arg(long)]
    lmax: u32,
    #[arg(long)]
    mmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// P_m(x_a, x_b) in r variables (indices from 1).
    Pm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
    },
    /// comp(μ): the distinct rearrangements of μ.
    Comp {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// P(μ) with ℓ = #parts and r = 2ℓ+m.
    P {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        m: usize,
    },
    /// The monomial symmetric polynomial m_shape in r variables.
    Msym {
        #[arg(long)]
        r: usize,
        /// Omit for the empty shape.
        #[arg(long, value_parser = parse_partition)]
        shape: Option<Partition>,
    },
    /// Shapes indexing the degree-d monomial basis of Λ_r.
    Shapes {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    m: usize,
    /// Defaults to the largest basis degree plus r.
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Convention::Bounded)]
    convention: Convention,
    /// Part bound K for the bounded convention; defaults to ℓ+m−1.
    #[arg(long)]
    bound: Option<u32>,
    #[arg(long, value_enum, default_value_t = Check::All)]
    check: Check,
    #[arg(long, default_value_t = CheckOptions::default().cell_budget)]
    cell_budget: u128,
    /// Skip the Bareiss and rational rank recomputation.
    #[arg(long)]
    no_cross_check: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

/// Outcome of a command that ran to completion.
enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

enum Failure {
    Usage(String),
    Domain(&'static str, Error),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<Status, Failure>;

fn ctx(module: &'static str) -> impl Fn(Error) -> Failure {
    move |e| Failure::Domain(module, e)
}

fn formats(cmd: &str, got: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&got) {
        return Ok(());
    }
    let names: Vec<String> = allowed
        .iter()
        .map(|f| f.to_possible_value().expect("named").get_name().to_string())
        .collect();
    Err(Failure::Usage(format!(
        "--format {} is not available for `{cmd}`; use one of: {}",
        got.to_possible_value().expect("named").get_name(),
        names.join(", ")
    )))
}

fn print_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )
}

/// Parses `args` (including the program name) and runs the command,
/// writing documents to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_out = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if to_out {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 2;
        }
    };
    match execute(cli.command, out, err) {
        Ok(Status::Pass) => 0,
        Ok(Status::Fail) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(module, e)) => {
            let _ = writeln!(err, "error: {module}: {e}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: writing output: {e}");
            2
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Partition {
            mu,
            k,
            append,
            format,
        } => partition(mu, k, append, format, out),
        Command::Box { n, k, format } => {
            formats("box", format, &[Format::Text, Format::Json, Format::Counts])?;
            if n == 0 || k == 0 {
                return Err(Failure::Usage("--n and --k must be at least 1".into()));
            }
            let all = enumerate_box(n, k);
            match format {
                Format::Json => print_json(out, &all.iter().map(export::parts).collect())?,
                Format::Counts => writeln!(out, "{}", all.len())?,
                _ => {
                    for p in &all {
                        writeln!(out, "{p}")?;
                    }
                }
            }
            Ok(Status::Pass)
        }
        Command::Descendants { mu, level } => {
            let level = level.unwrap_or(mu.len());
            for d in descendants(&mu, level).map_err(ctx("orbits"))? {
                writeln!(out, "{d}")?;
            }
            Ok(Status::Pass)
        }
        Command::Orbit {
            root,
            k,
            level,
            format,
        } => {
            formats(
                "orbit",
                format,
                &[Format::Json, Format::Text, Format::Counts],
            )?;
            let k = k.unwrap_or(root.len());
            let levels = build_orbit_levels(&root, k, level).map_err(ctx("orbits"))?;
            orbit_output(&levels, format, out)
        }
        Command::Omega { m, level, format } => {
            formats(
                "omega",
                format,
                &[Format::Json, Format::Text, Format::Counts],
            )?;
            let spec = OmegaSpec::new(m).map_err(ctx("orbits"))?;
            let levels = build_omega_levels(spec, level).map_err(ctx("orbits"))?;
            orbit_output(&levels, format, out)
        }
        Command::Classify { mu, format } => {
            formats("classify", format, &[Format::Text, Format::Json])?;
            let c = classify_root(&mu).map_err(ctx("orbits"))?;
            match format {
                Format::Json => print_json(out, &export::classification(&c))?,
                _ => write!(out, "{}", export::classification_text(&c))?,
            }
            Ok(Status::Pass)
        }
        Command::Cover { level, format } => {
            formats("cover", format, &[Format::Text, Format::Json])?;
            let rep = verify_cover(level).map_err(ctx("orbits"))?;
            match format {
                Format::Json => print_json(out, &export::cover(&rep))?,
                _ => write!(out, "{}", export::cover_text(&rep))?,
            }
            Ok(Status::from(rep.success()))
        }
        Command::Tree {
            root,
            k,
            depth,
            format,
        } => {
            formats("tree", format, &[Format::Dot, Format::Json])?;
            let k = k.unwrap_or(root.len());
            let t = build_orbit_tree(&root, k, depth).map_err(ctx("trees"))?;
            match format {
                Format::Json => print_json(out, &export::orbit_tree(&t, k, depth))?,
                _ => write!(out, "{}", export::orbit_tree_dot(&t))?,
            }
            Ok(Status::Pass)
        }
        Command::CanonicalTree { depth, format } => {
            formats(
                "canonical-tree",
                format,
                &[Format::Dot, Format::Json, Format::Text],
            )?;
            let t = build_canonical_tree(depth);
            match format {
                Format::Json => print_json(out, &export::canonical_tree(&t, depth))?,
                Format::Text => {
                    for row in t.levels() {
                        let labels: Vec<String> = row.iter().map(|n| n.label.to_string()).collect();
                        writeln!(out, "{}", labels.join(" "))?;
                    }
                }
                _ => write!(out, "{}", export::canonical_tree_dot(&t))?,
            }
            Ok(Status::Pass)
        }
        Command::CheckLabels {
            root,
            k,
            depth,
            format,
        } => {
            formats("check-labels", format, &[Format::Text, Format::Json])?;
            let k = k.unwrap_or(root.len());
            let rep = check_label_isomorphism(&root, k, depth).map_err(ctx("trees"))?;
            iso_output(&rep, format, out)
        }
        Command::CompareTrees {
            root1,
            k1,
            root2,
            k2,
            depth,
            format,
        } => {
            formats("compare-trees", format, &[Format::Text, Format::Json])?;
            let k1 = k1.unwrap_or(root1.len());
            let k2 = k2.unwrap_or(root2.len());
            let rep = compare_roots(&root1, k1, &root2, k2, depth).map_err(ctx("trees"))?;
            iso_output(&rep, format, out)
        }
        Command::Count(c) => {
            let v = match c {
                CountCommand::Catalan { n } => catalan(n),
                CountCommand::Ballot { l, m } => ballot(l, m).map_err(ctx("counting"))?,
                CountCommand::SquareRoots { k } => count_square_roots(k),
            };
            writeln!(out, "{v}")?;
            Ok(Status::Pass)
        }
        Command::Etable(a) => etable(a, out, err),
        Command::Identities(a) => {
            formats("identities", a.format, &[Format::Text, Format::Json])?;
            let rep = if a.convolution {
                verify_catalan_convolution(a.lmax)
            } else {
                verify_alternating_identity(a.lmax, a.mmax.expect("required by clap"))
            };
            match a.format {
                Format::Json => print_json(out, &export::identity(&rep))?,
                _ => write!(out, "{}", export::identity_text(&rep))?,
            }
            Ok(Status::from(rep.holds()))
        }
        Command::Qorbit {
            lambda,
            depth,
            format,
        } => {
            formats(
                "qorbit",
                format,
                &[Format::Json, Format::Text, Format::Counts],
            )?;
            let q = build_q_orbit(&lambda, depth).map_err(ctx("orbits"))?;
            match format {
                Format::Counts => {
                    writeln!(out, "{}", export::cardinality_line(&q.cardinalities()))?
                }
                Format::Text => {
                    for l in &q.levels {
                        writeln!(
                            out,
                            "level {} bound {} size {} collisions {} descendant-collisions {} descendant-union {}",
                            l.index,
                            l.bound,
                            l.elements.len(),
                            l.collisions,
                            l.descendant_collisions,
                            l.descendant_union_holds
                        )?;
                        for e in &l.elements {
                            writeln!(out, "  {} {}", e.partition, e.provenance.tag())?;
                        }
                    }
                }
                _ => print_json(out, &export::q_orbit(&q))?,
            }
            Ok(Status::Pass)
        }
        Command::Poly(p) => poly(p, out),
        Command::Conjecture(a) => conjecture(a, out),
    }
}

fn partition(
    mu: Partition,
    k: Option<u32>,
    append: u32,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    formats("partition", format, &[Format::Text, Format::Json])?;
    let k = k.unwrap_or(mu.first());
    let tau = tau_complement(&mu, k).map_err(ctx("partitions"))?;
    let fixed = is_tau_fixed(&mu, k).map_err(ctx("partitions"))?;
    let square = is_square(&mu, k as usize);
    let dropped = drop_last(&mu).ok();
    let appended = append_part(&mu, append).ok();
    match format {
        Format::Json => print_json(
            out,
            &json!({
                "parts": export::parts(&mu),
                "size": mu.size(),
                "k": k,
                "tau": export::parts(&tau),
                "square": square,
                "tau_fixed": fixed,
                "drop_last": dropped.as_ref().map(export::parts),
                "append": append,
                "appended": appended.as_ref().map(export::parts),
            }),
        )?,
        _ => {
            writeln!(out, "partition {mu}")?;
            writeln!(out, "size {}", mu.size())?;
            writeln!(out, "tau_{k} {tau}")?;
            writeln!(out, "square({k}) {square}")?;
            writeln!(out, "tau-fixed({k}) {fixed}")?;
            match dropped {
                Some(d) => writeln!(out, "drop-last {d}")?,
                None => writeln!(out, "drop-last none")?,
            }
            match appended {
                Some(a) => writeln!(out, "append({append}) {a}")?,
                None => writeln!(out, "append({append}) none")?,
            }
        }
    }
    Ok(Status::Pass)
}

fn orbit_output(
    levels: &[catorbit_core::orbits::OrbitLevel],
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let last = levels.last().expect("at least one level");
    match format {
        Format::Counts => {
            let sizes: Vec<usize> = levels.iter().map(|l| l.len()).collect();
            writeln!(out, "{}", export::cardinality_line(&sizes))?;
        }
        Format::Text => {
            for e in &last.elements {
                writeln!(out, "{} {}", e.partition, e.provenance.tag())?;
            }
        }
        _ => print_json(out, &export::orbit_level(last))?,
    }
    Ok(Status::Pass)
}

fn iso_output(
    rep: &catorbit_core::trees::IsoReport,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    match format {
        Format::Json => print_json(out, &export::iso(rep))?,
        _ => write!(out, "{}", export::iso_text(rep))?,
    }
    Ok(Status::from(rep.isomorphic()))
}

fn etable(a: EtableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    formats("etable", a.format, &[Format::Csv])?;
    let table = match (a.root, a.m) {
        (Some(root), _) => {
            let k = a.k.unwrap_or(root.len());
            e_table_square(&root, k, a.lmax).map_err(ctx("counting"))?
        }
        (None, Some(m)) => e_table_omega(m, a.lmax).map_err(ctx("counting"))?,
        (None, None) => unreachable!("clap requires --root or --m"),
    };
    write!(out, "{}", export::etable_csv(&table))?;
    let bad = table.closed_form_mismatches();
    for (l, r, value, closed) in &bad {
        writeln!(
            err,
            "FAIL {}: e[{l}][{r}] = {value} but the closed form gives {closed}",
            export::etable_context(&table)
        )?;
    }
    Ok(Status::from(bad.is_empty()))
}

fn poly(p: PolyCommand, out: &mut dyn Write) -> Outcome {
    match p {
        PolyCommand::Pm { m, a, b, r } => {
            if a == 0 || b == 0 {
                return Err(Failure::Usage("--a and --b count variables from 1".into()));
            }
            let v = pm_poly(m, a - 1, b - 1, r).map_err(ctx("symfunc"))?;
            writeln!(out, "{v}")?;
        }
        PolyCommand::Comp { mu } => {
            for c in compositions_of(&mu, mu.len()).map_err(ctx("symfunc"))? {
                let s: Vec<String> = c.iter().map(u32::to_string).collect();
                writeln!(out, "{}", s.join(","))?;
            }
        }
        PolyCommand::P { mu, m } => {
            let v = p_of_mu(&mu, mu.len(), m).map_err(ctx("symfunc"))?;
            writeln!(out, "{v}")?;
        }
        PolyCommand::Msym { r, shape } => {
            let shape = shape.map(Partition::into_parts).unwrap_or_default();
            let v = monomial_symmetric(r, &shape).map_err(ctx("symfunc"))?;
            writeln!(out, "{v}")?;
        }
        PolyCommand::Shapes { d, r } => {
            for s in symmetric_shapes(d, r) {
                let s: Vec<String> = s.iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "{}",
                    if s.is_empty() {
                        "()".into()
                    } else {
                        s.join(",")
                    }
                )?;
            }
        }
    }
    Ok(Status::Pass)
}

fn conjecture(a: ConjectureArgs, out: &mut dyn Write) -> Outcome {
    formats("conjecture", a.format, &[Format::Json, Format::Text])?;
    if a.bound.is_some() && a.convention == Convention::Literal {
        return Err(Failure::Usage(
            "--bound applies only to --convention bounded".into(),
        ));
    }
    let convention = match a.convention {
        Convention::Literal => SpanConvention::Literal,
        Convention::Bounded => match a.bound {
            Some(k) => SpanConvention::Bounded(k),
            None => SpanConvention::default_for(a.ell, a.m),
        },
    };
    let opts = CheckOptions {
        cell_budget: a.cell_budget,
        cross_check: !a.no_cross_check,
    };
    let dmax = match a.dmax {
        Some(d) => d,
        None => default_dmax(a.ell, a.m).map_err(ctx("symfunc"))?,
    };
    let text = a.format == Format::Text;
    match a.check {
        Check::All => {
            let rep =
                conjecture_report(a.ell, a.m, dmax, convention, &opts).map_err(ctx("symfunc"))?;
            if text {
                write!(out, "{}", export::conjecture_text(&rep))?;
            } else {
                print_json(out, &export::conjecture(&rep))?;
            }
            Ok(Status::from(
                rep.independence && rep.spanning && rep.rank_count_match && rep.hilbert_match,
            ))
        }
        Check::Independence => {
            let rep = independence_check(a.ell, a.m, dmax, &opts).map_err(ctx("symfunc"))?;
            if text {
                write!(out, "{}", export::graded_text(&rep))?;
            } else {
                print_json(out, &export::graded(&rep))?;
            }
            Ok(Status::from(rep.independent()))
        }
        Check::Spanning => {
            let rep =
                spanning_check(a.ell, a.m, convention, dmax, &opts).map_err(ctx("symfunc"))?;
            if text {
                write!(out, "{}", export::graded_text(&rep))?;
            } else {
                print_json(out, &export::graded(&rep))?;
            }
            Ok(Status::from(rep.spans()))
        }
    }
}
