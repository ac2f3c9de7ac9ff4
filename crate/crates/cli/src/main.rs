//! `trihom`: homology tables, reduction statistics and verification for
//! poset-shaped matrix Lie algebras and small simplicial complexes.
//!
//! Exit codes: 0 on success, 1 on a failed verification, 2 on a bad job
//! specification, 3 when the requested complex exceeds the size cap.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use trihom::chain::{
    build_ce_complex_with, simplicial_chain_complex, BuildOptions, ChainComplex, ChainError,
};
use trihom::cup::{verify_exterior_algebra, CupError};
use trihom::homology::{homology_over_field, homology_over_Z, HomologyError, HomologyTable};
use trihom::lie::LieAlgebra;
use trihom::morse::{
    normalization_critical_counts, normalization_matching, normalization_reduce,
    normalized_complex_direct, MorseError,
};
use trihom::poset::Poset;
use trihom::reference::binomial;
use trihom::ring::CoefficientRing;
use trihom::subcomplex::{p_subcomplex, SubcomplexError};
use trihom::verify::{run_suite, suite_names, Workspace};

#[derive(Parser)]
#[command(
    name = "trihom",
    version,
    about = "Homology of matrix Lie algebras shaped by posets"
)]
struct Cli {
    /// Bound worker parallelism (default: all cores).  Results never
    /// depend on the pool size.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homology table of a family member, a poset algebra, or a
    /// simplicial complex.
    Homology(JobArgs),
    /// Per-degree generator counts before and after reduction, with the
    /// aggregate critical/original ratio.
    Stats(JobArgs),
    /// Run a named verification suite and report pass/fail lines.
    Verify(VerifyArgs),
    /// Multiplication table of the cohomology ring of a poset algebra.
    CupTable(CupArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Sol,
    Nil,
    GlPoset,
    GlPosetStrict,
    Dgn,
    So2,
    Simplicial,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReduceMode {
    /// Keep the full complex.
    None,
    /// Retract onto the wedges critical for the normalization matching.
    Normalization,
}

#[derive(Args)]
struct JobArgs {
    /// Complex family.
    #[arg(long, value_enum)]
    family: Family,
    /// Size parameter for sol, nil, dgn, so2.
    #[arg(long)]
    n: Option<usize>,
    /// Poset file for gl-poset and gl-poset-strict.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Facet file for simplicial.
    #[arg(long)]
    facets: Option<PathBuf>,
    /// Coefficients: Z, Q, or Z/m.
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Degree or inclusive range to report, e.g. `3` or `2..5`.
    #[arg(long)]
    deg: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reduction strategy; defaults to normalization whenever the
    /// family carries diagonal generators.
    #[arg(long, value_enum)]
    reduce: Option<ReduceMode>,
    /// Restrict to wedges whose index weights all vanish mod p.
    #[arg(long)]
    p_subcomplex: Option<u64>,
    /// Print the reduction pairing, one `degree upper lower` line per
    /// pair (wedges as bitmasks).
    #[arg(long)]
    emit_matching: bool,
    /// Print the basis and boundary entries before computing.
    #[arg(long)]
    dump_complex: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: tables, uct, tensor, cup, matching, conjecture-probe.
    suite: String,
    /// Torsion order probed by conjecture-probe.
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args)]
struct CupArgs {
    /// One of: sol, dgn, gl-poset (families with diagonals and
    /// matrix-unit generators).
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Coefficients: Q or Z/p.
    #[arg(long, default_value = "Q")]
    ring: String,
}

enum Failure {
    /// Bad job specification: exit 2.
    Spec(String),
    /// Complex exceeds the size cap: exit 3.
    TooLarge(String),
    /// A verification suite failed; the report was already printed.
    Assertion,
}

fn spec(msg: impl Into<String>) -> Failure {
    Failure::Spec(msg.into())
}

impl From<ChainError> for Failure {
    fn from(e: ChainError) -> Failure {
        match e {
            ChainError::ComplexTooLarge { .. } | ChainError::TooManyGenerators(_) => {
                Failure::TooLarge(e.to_string())
            }
            _ => Failure::Spec(e.to_string()),
        }
    }
}

impl From<MorseError> for Failure {
    fn from(e: MorseError) -> Failure {
        match e {
            MorseError::Chain(c) => c.into(),
            _ => Failure::Spec(e.to_string()),
        }
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Failure {
        Failure::Spec(e.to_string())
    }
}

impl From<SubcomplexError> for Failure {
    fn from(e: SubcomplexError) -> Failure {
        match e {
            SubcomplexError::Chain(c) => c.into(),
            SubcomplexError::Morse(m) => m.into(),
            SubcomplexError::Homology(h) => h.into(),
        }
    }
}

impl From<CupError> for Failure {
    fn from(e: CupError) -> Failure {
        match e {
            CupError::Morse(m) => m.into(),
            _ => Failure::Spec(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = match cli.command {
        Command::Homology(a) => cmd_homology(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Verify(a) => cmd_verify(a),
        Command::CupTable(a) => cmd_cup_table(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Spec(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::TooLarge(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

// ---------------------------------------------------------------------
// Job assembly
// ---------------------------------------------------------------------

fn parse_window(deg: &Option<String>) -> Result<Option<(usize, usize)>, Failure> {
    let Some(s) = deg else { return Ok(None) };
    let parse_num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| spec(format!("bad degree {t:?} in --deg {s:?}")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let lo = if a.is_empty() { 0 } else { parse_num(a)? };
        let hi = parse_num(b)?;
        if lo > hi {
            return Err(spec(format!("empty degree range --deg {s:?}")));
        }
        Ok(Some((lo, hi)))
    } else {
        let k = parse_num(s)?;
        Ok(Some((k, k)))
    }
}

fn require_n(args: &JobArgs) -> Result<usize, Failure> {
    args.n.ok_or_else(|| spec("this family needs --n"))
}

fn load_poset(path: &Option<PathBuf>) -> Result<Poset, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| spec("this family needs --poset FILE"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| spec(format!("cannot read {}: {e}", path.display())))?;
    Poset::parse(&text).map_err(|e| spec(format!("{}: {e}", path.display())))
}

fn load_facets(path: &Option<PathBuf>) -> Result<Vec<Vec<String>>, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| spec("the simplicial family needs --facets FILE"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| spec(format!("cannot read {}: {e}", path.display())))?;
    let mut facets = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        facets.push(line.split_whitespace().map(str::to_string).collect());
    }
    if facets.is_empty() {
        return Err(spec(format!("{}: no facets", path.display())));
    }
    Ok(facets)
}

fn family_algebra(args: &JobArgs) -> Result<Option<LieAlgebra>, Failure> {
    Ok(match args.family {
        Family::Sol => Some(LieAlgebra::sol(require_n(args)?)),
        Family::Nil => Some(LieAlgebra::nil(require_n(args)?)),
        Family::Dgn => Some(LieAlgebra::dgn(require_n(args)?)),
        Family::So2 => Some(LieAlgebra::so_char2(require_n(args)?)),
        Family::GlPoset => Some(LieAlgebra::gl_poset(&load_poset(&args.poset)?, false)),
        Family::GlPosetStrict => Some(LieAlgebra::gl_poset(&load_poset(&args.poset)?, true)),
        Family::Simplicial => None,
    })
}

fn has_diagonals(family: Family) -> bool {
    matches!(family, Family::Sol | Family::Dgn | Family::GlPoset | Family::So2)
}

fn effective_reduce(args: &JobArgs) -> Result<ReduceMode, Failure> {
    match args.reduce {
        Some(ReduceMode::Normalization) if args.family == Family::Simplicial => {
            Err(spec("normalization reduction needs a matrix-unit family"))
        }
        Some(mode) => Ok(mode),
        None => Ok(if has_diagonals(args.family) {
            ReduceMode::Normalization
        } else {
            ReduceMode::None
        }),
    }
}

struct BuiltJob {
    complex: ChainComplex,
    name: String,
    matching_dump: Option<String>,
}

fn build_job(args: &JobArgs, window: Option<(usize, usize)>) -> Result<BuiltJob, Failure> {
    let ring = CoefficientRing::parse(&args.ring).map_err(|e| spec(e.to_string()))?;
    if args.family == Family::So2 && ring.characteristic() != 2 {
        return Err(spec("so2 closes only in characteristic 2; use --ring Z/2"));
    }
    let reduce = effective_reduce(args)?;

    if args.family == Family::Simplicial {
        if args.p_subcomplex.is_some() {
            return Err(spec("--p-subcomplex needs a matrix-unit family"));
        }
        if args.emit_matching {
            return Err(spec("--emit-matching needs a matrix-unit family"));
        }
        let facets = load_facets(&args.facets)?;
        let complex = simplicial_chain_complex(&facets, false, &ring)?;
        let name = format!("simplicial over {ring}");
        return Ok(BuiltJob { complex, name, matching_dump: None });
    }

    let g = Arc::new(family_algebra(args)?.expect("matrix-unit family"));
    let name = format!("{} over {ring}", g.name());
    let opts = BuildOptions { max_degree: window.map(|(_, hi)| hi + 1), ..BuildOptions::default() };

    let mut matching_dump = None;
    if args.emit_matching {
        if reduce != ReduceMode::Normalization {
            return Err(spec("--emit-matching needs --reduce normalization"));
        }
        let full = build_ce_complex_with(g.clone(), &ring, BuildOptions::default())?;
        let m = normalization_matching(&full)?;
        matching_dump = Some(m.emit_lines(&full)?);
    }

    let complex = match args.p_subcomplex {
        Some(p) => {
            if p < 2 {
                return Err(spec("--p-subcomplex needs p >= 2"));
            }
            let full = build_ce_complex_with(g.clone(), &ring, opts)?;
            let sub = p_subcomplex(&full, p)?;
            if reduce == ReduceMode::Normalization {
                if sub.is_truncated() {
                    return Err(spec(
                        "--deg cannot combine with --p-subcomplex under normalization; \
                         add --reduce none",
                    ));
                }
                normalization_reduce(&sub)?
            } else {
                sub
            }
        }
        None => match reduce {
            ReduceMode::Normalization => normalized_complex_direct(g.clone(), &ring, opts)?,
            ReduceMode::None => build_ce_complex_with(g.clone(), &ring, opts)?,
        },
    };
    Ok(BuiltJob { complex, name, matching_dump })
}

// ---------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------

fn cmd_homology(args: JobArgs) -> Result<(), Failure> {
    let window = parse_window(&args.deg)?;
    let job = build_job(&args, window)?;
    if let Some(dump) = &job.matching_dump {
        print!("{dump}");
    }
    if args.dump_complex {
        print!("{}", job.complex.dump());
    }
    let table = match job.complex.ring() {
        CoefficientRing::Integers => homology_over_Z(&job.complex)?,
        _ => homology_over_field(&job.complex)?,
    };
    let out = match window {
        None => match args.format {
            Format::Text => table.render_text(&job.name),
            Format::Csv => table.render_csv(&job.name),
            Format::Json => table.render_json(&job.name),
        },
        Some(w) => render_window(&table, &job.name, w, args.format),
    };
    print!("{out}");
    Ok(())
}

/// Same row shapes as the full renderers, restricted to a degree window.
fn render_window(
    table: &HomologyTable,
    name: &str,
    (lo, hi): (usize, usize),
    format: Format,
) -> String {
    let hi = hi.min(table.len().saturating_sub(1));
    let degrees = lo..=hi;
    match format {
        Format::Text => {
            let mut lines = vec![name.to_string()];
            match table.modules() {
                Some(ms) => {
                    for k in degrees {
                        lines.push(format!("H_{k:<3} {}", ms[k].render()));
                    }
                }
                None => {
                    let dims = table.dims();
                    for k in degrees {
                        lines.push(format!("H_{k:<3} dim {}", dims[k]));
                    }
                }
            }
            lines.join("\n") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("n,k,free,torsion\n");
            match table.modules() {
                Some(ms) => {
                    for k in degrees {
                        let torsion = ms[k]
                            .primary()
                            .iter()
                            .map(|(v, c)| format!("{v}^{c}"))
                            .collect::<Vec<_>>()
                            .join("·");
                        out.push_str(&format!("{name},{k},{},{torsion}\n", ms[k].free_rank));
                    }
                }
                None => {
                    let dims = table.dims();
                    for k in degrees {
                        out.push_str(&format!("{name},{k},{},\n", dims[k]));
                    }
                }
            }
            out
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Group {
                k: usize,
                free: usize,
                torsion: Vec<u64>,
            }
            #[derive(Serialize)]
            struct Doc<'a> {
                name: &'a str,
                ring: String,
                groups: Vec<Group>,
            }
            let (ring, groups) = match table {
                HomologyTable::Integral(ms) => (
                    "Z".to_string(),
                    degrees
                        .map(|k| Group {
                            k,
                            free: ms[k].free_rank,
                            torsion: ms[k]
                                .primary()
                                .iter()
                                .flat_map(|&(v, c)| std::iter::repeat_n(v, c))
                                .collect(),
                        })
                        .collect(),
                ),
                HomologyTable::Field { p, dims } => (
                    p.map_or("Q".to_string(), |p| format!("Z/{p}")),
                    degrees
                        .map(|k| Group { k, free: dims[k], torsion: Vec::new() })
                        .collect(),
                ),
            };
            serde_json::to_string_pretty(&Doc { name, ring, groups }).unwrap() + "\n"
        }
    }
}

// ---------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------

fn cmd_stats(args: JobArgs) -> Result<(), Failure> {
    if args.family == Family::Simplicial {
        return Err(spec("stats needs a matrix-unit family"));
    }
    if effective_reduce(&args)? != ReduceMode::Normalization {
        return Err(spec("stats reports on normalization reduction; drop --reduce none"));
    }
    let ring = CoefficientRing::parse(&args.ring).map_err(|e| spec(e.to_string()))?;
    if args.family == Family::So2 && ring.characteristic() != 2 {
        return Err(spec("so2 closes only in characteristic 2; use --ring Z/2"));
    }
    let g = family_algebra(&args)?.expect("matrix-unit family");
    let name = format!("{} over {ring}", g.name());
    let critical = normalization_critical_counts(&g, &ring, BuildOptions::default().size_cap)?;
    let original: Vec<usize> =
        (0..critical.len()).map(|k| binomial(g.rank(), k as i64)).collect();
    let total_original: usize = original.iter().sum();
    let total_critical: usize = critical.iter().sum();
    let ratio = total_critical as f64 / total_original as f64;

    match args.format {
        Format::Text => {
            println!("{name}");
            println!("{:<6} {:>12} {:>12}", "deg", "original", "critical");
            for (k, (o, c)) in original.iter().zip(&critical).enumerate() {
                println!("{k:<6} {o:>12} {c:>12}");
            }
            println!("total  {total_original:>12} {total_critical:>12}");
            println!("ratio  {ratio:.6}");
        }
        Format::Csv => {
            println!("n,k,original,critical");
            for (k, (o, c)) in original.iter().zip(&critical).enumerate() {
                println!("{name},{k},{o},{c}");
            }
            println!("{name},total,{total_original},{total_critical}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Degree {
                k: usize,
                original: usize,
                critical: usize,
            }
            #[derive(Serialize)]
            struct Doc<'a> {
                name: &'a str,
                degrees: Vec<Degree>,
                total_original: usize,
                total_critical: usize,
                ratio: f64,
            }
            let degrees = original
                .iter()
                .zip(&critical)
                .enumerate()
                .map(|(k, (&original, &critical))| Degree { k, original, critical })
                .collect();
            let doc =
                Doc { name: &name, degrees, total_original, total_critical, ratio };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let ws = Workspace::new();
    match run_suite(&args.suite, &ws, args.m) {
        None => Err(spec(format!(
            "unknown suite {:?}; expected one of: {}",
            args.suite,
            suite_names().join(", ")
        ))),
        Some(report) => {
            println!("{}", report.render());
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Assertion)
            }
        }
    }
}

// ---------------------------------------------------------------------
// cup-table
// ---------------------------------------------------------------------

fn cup_poset(args: &CupArgs) -> Result<(String, Poset), Failure> {
    match args.family {
        Family::Sol => {
            let n = args.n.ok_or_else(|| spec("this family needs --n"))?;
            Ok((format!("sol{n}"), Poset::chain(n)))
        }
        Family::Dgn => {
            let n = args.n.ok_or_else(|| spec("this family needs --n"))?;
            Ok((format!("dgn{n}"), Poset::antichain(n)))
        }
        Family::GlPoset => {
            let path = args
                .poset
                .as_ref()
                .ok_or_else(|| spec("this family needs --poset FILE"))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| spec(format!("cannot read {}: {e}", path.display())))?;
            let poset =
                Poset::parse(&text).map_err(|e| spec(format!("{}: {e}", path.display())))?;
            Ok((label_for(path), poset))
        }
        _ => Err(spec("cup-table needs one of: sol, dgn, gl-poset")),
    }
}

fn label_for(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn cmd_cup_table(args: CupArgs) -> Result<(), Failure> {
    let ring = CoefficientRing::parse(&args.ring).map_err(|e| spec(e.to_string()))?;
    let (label, poset) = cup_poset(&args)?;
    let report = verify_exterior_algebra(&poset, &ring)?;
    println!("{label} over {ring}");
    for line in report.render_lines() {
        println!("{line}");
    }
    Ok(())
}
