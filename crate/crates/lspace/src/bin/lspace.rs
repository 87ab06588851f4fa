//! Command-line front end: d-invariant tables, the surgery obstruction, the
//! realizability enumeration, the census cross-check, staircase knot Floer
//! homology, fiberedness checks, and plumbing certification.
//!
//! Exit codes: `0` success or agreement, `1` a checked property failed
//! (obstruction fails, census disagrees, not fibered, not an L-space),
//! `2` usage or input error, `3` internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lspace::cache::DCache;
use lspace::census::Orientation;
use lspace::obstruction::Mode;
use lspace::poly::Laurent;
use lspace::{berge, census, dinv, fibered, hfk, obstruction, plumbing};
use lspace::{Error, LensSpace};

#[derive(Parser)]
#[command(
    name = "lspace",
    version,
    about = "Lens-space surgery census tools",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for census sweeps (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// d-invariant table cache file (versioned CSV); defaults to the
    /// LSPACE_CACHE environment variable when set.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Offset pinned by the conjugation convention.
    Strict,
    /// Any d-symmetric relabeling.
    Relaxed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Relaxed => Mode::Relaxed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    /// Classes up to unoriented homeomorphism (includes mirrors).
    Unoriented,
    /// Classes up to orientation-preserving homeomorphism.
    Oriented,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Orientation {
        match o {
            OrientationArg::Unoriented => Orientation::Unoriented,
            OrientationArg::Oriented => Orientation::Oriented,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print d-invariants of L(p, q): one label or the whole table.
    D {
        /// Order of first homology.
        p: u32,
        /// Surgery coefficient residue, coprime to p.
        q: u32,
        /// Spin-c label; omitted means the whole table 0..p.
        i: Option<u32>,
    },
    /// Run the surgery obstruction on L(p, q).
    Obstruct {
        /// Order of first homology.
        p: u32,
        /// Surgery coefficient residue, coprime to p.
        q: u32,
        /// Correspondence admissibility regime.
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        /// Additionally require a witness polynomial to pass the staircase
        /// validator.
        #[arg(long)]
        canonical_filter: bool,
    },
    /// Enumerate realizability witnesses for all families up to a bound.
    Berge {
        /// Largest first-homology order to emit.
        #[arg(long)]
        pmax: u32,
        /// Restrict output to one family.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
        family: Option<u8>,
        /// Emit CSV with columns family,A,B,a,b,p,q.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Cross-check the obstruction census against the enumeration.
    Verify {
        /// Largest first-homology order to sweep.
        #[arg(long)]
        pmax: u32,
        /// Homeomorphism regime for canonical classes.
        #[arg(long, value_enum, default_value_t = OrientationArg::Unoriented)]
        orientation: OrientationArg,
        /// Correspondence admissibility regime for the obstruction side.
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        /// Additionally require a witness polynomial to pass the staircase
        /// validator on the obstruction side.
        #[arg(long)]
        canonical_filter: bool,
        /// Emit the symmetric difference as CSV rows side,p,class.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Reconstruct knot Floer homology from a staircase Alexander polynomial.
    Hfk {
        /// The polynomial, e.g. "T^3 - T^2 + 1 - T^-2 + T^-3".
        #[arg(long)]
        alex: String,
    },
    /// Check fiberedness of the (p, q, k) one-relator presentation.
    Fibered {
        /// Order of first homology.
        p: u32,
        /// Gluing residue, coprime to p.
        q: u32,
        /// Meridian exponent, coprime to p.
        k: u32,
        /// Also print the relator word.
        #[arg(long)]
        word: bool,
    },
    /// Sweep Brown's criterion over every admissible triple up to a bound.
    FiberedCensus {
        /// Largest first-homology order to sweep.
        #[arg(long)]
        pmax: u32,
    },
    /// Certify a negative-definite plumbing tree as an L-space.
    Plumbing {
        /// JSON tree file: {"weights":[...], "edges":[[i,j],...]}.
        #[arg(long, value_name = "FILE", required_unless_present = "seifert", conflicts_with = "seifert")]
        graph: Option<PathBuf>,
        /// Seifert data "b;b1/a1,b2/a2,...", e.g. "-2;1/2,1/4,1/3".
        #[arg(long, value_name = "DATA", allow_hyphen_values = true)]
        seifert: Option<String>,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (`lspace berge --csv | head`),
    // like any other Unix filter, instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {n} worker threads");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache
        .clone()
        .or_else(|| std::env::var_os("LSPACE_CACHE").map(PathBuf::from))
}

fn run(cli: &Cli) -> lspace::Result<ExitCode> {
    match &cli.command {
        Command::D { p, q, i } => cmd_d(cli, *p, *q, *i),
        Command::Obstruct {
            p,
            q,
            mode,
            canonical_filter,
        } => cmd_obstruct(cli, *p, *q, (*mode).into(), *canonical_filter),
        Command::Berge { pmax, family, csv } => cmd_berge(cli, *pmax, *family, *csv),
        Command::Verify {
            pmax,
            orientation,
            mode,
            canonical_filter,
            csv,
        } => cmd_verify(
            cli,
            *pmax,
            (*orientation).into(),
            (*mode).into(),
            *canonical_filter,
            *csv,
        ),
        Command::Hfk { alex } => cmd_hfk(cli, alex),
        Command::Fibered { p, q, k, word } => cmd_fibered(cli, *p, *q, *k, *word),
        Command::FiberedCensus { pmax } => cmd_fibered_census(cli, *pmax),
        Command::Plumbing { graph, seifert } => cmd_plumbing(cli, graph.as_deref(), seifert.as_deref()),
    }
}

fn cmd_d(cli: &Cli, p: u32, q: u32, i: Option<u32>) -> lspace::Result<ExitCode> {
    let space = LensSpace::new(p, q)?;
    if let Some(i) = i {
        if i >= p {
            return Err(Error::OutOfRange {
                what: "i",
                got: i as i64,
                lo: 0,
                hi: p as i64 - 1,
            });
        }
    }
    // The cache is a pure memo: presence or absence never changes values.
    let values = match cache_path(cli) {
        Some(path) => {
            let mut cache = DCache::load(&path)?;
            let values = cache.get_or_compute(space)?.to_vec();
            cache.store(&path)?;
            values
        }
        None => dinv::d_table(space).values,
    };
    match i {
        Some(i) => {
            let v = &values[i as usize];
            if cli.json {
                println!(
                    "{}",
                    json!({"p": p, "q": q, "i": i, "d": v.to_string()})
                );
            } else {
                println!("{v}");
            }
        }
        None => {
            if cli.json {
                let table: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                println!("{}", json!({"p": p, "q": q, "d": table}));
            } else {
                for (i, v) in values.iter().enumerate() {
                    println!("{i}: {v}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_obstruct(
    cli: &Cli,
    p: u32,
    q: u32,
    mode: Mode,
    canonical_filter: bool,
) -> lspace::Result<ExitCode> {
    let space = LensSpace::new(p, q)?;
    let verdict = obstruction::verdict(space, mode)?;
    let witnesses: Vec<&(obstruction::Correspondence, Laurent)> = verdict
        .witnesses
        .iter()
        .filter(|(_, poly)| !canonical_filter || hfk::validate_lspace_alex(poly).is_ok())
        .collect();
    let passed = if canonical_filter {
        !witnesses.is_empty()
    } else {
        verdict.passed
    };
    if cli.json {
        let ws: Vec<_> = witnesses
            .iter()
            .map(|(sigma, poly)| json!({"u": sigma.u, "c": sigma.c, "alexander": poly.to_string()}))
            .collect();
        println!(
            "{}",
            json!({
                "p": p,
                "q": q,
                "mode": mode,
                "canonical_filter": canonical_filter,
                "pass": passed,
                "witnesses": ws,
            })
        );
    } else {
        let label = if passed { "PASS" } else { "FAIL" };
        println!("{space}: {label}");
        for (sigma, poly) in &witnesses {
            println!("  u={} c={}  {}", sigma.u, sigma.c, poly);
        }
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_berge(cli: &Cli, pmax: u32, family: Option<u8>, csv: bool) -> lspace::Result<ExitCode> {
    let mut witnesses = berge::enumerate(pmax)?;
    if let Some(f) = family {
        witnesses.retain(|w| w.family == f);
    }
    if csv {
        berge::write_csv(&witnesses, std::io::stdout().lock())?;
    } else if cli.json {
        println!(
            "{}",
            json!({"pmax": pmax, "count": witnesses.len(), "witnesses": witnesses})
        );
    } else {
        for w in &witnesses {
            println!(
                "family={} A={} B={} a={} b={} p={} q={}",
                w.family, w.big_a, w.big_b, w.a, w.b, w.p, w.q
            );
        }
        println!("{} witnesses up to p = {pmax}", witnesses.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cli: &Cli,
    pmax: u32,
    orientation: Orientation,
    mode: Mode,
    canonical_filter: bool,
    csv: bool,
) -> lspace::Result<ExitCode> {
    let started = Instant::now();
    let report = census::run_census(pmax, orientation, mode, canonical_filter)?;
    let elapsed = started.elapsed();
    if csv {
        let mut out = String::from("side,p,class\n");
        for &(p, c) in &report.only_obstruction {
            out.push_str(&format!("obstruction,{p},{c}\n"));
        }
        for &(p, c) in &report.only_berge {
            out.push_str(&format!("enumeration,{p},{c}\n"));
        }
        print!("{out}");
    } else if cli.json {
        let mut value = serde_json::to_value(&report)
            .map_err(|e| Error::Parse(format!("report serialization: {e}")))?;
        value["timings"] = json!({"elapsed_ms": elapsed.as_millis() as u64});
        value["agreement"] = json!(report.agreement());
        println!("{value}");
    } else {
        println!("census up to p = {pmax}");
        println!("orientation: {orientation:?}");
        println!("obstruction mode: {mode:?}");
        println!(
            "canonical filter: {}",
            if canonical_filter { "on" } else { "off" }
        );
        println!("obstruction classes: {}", report.obstruction_count);
        println!("enumeration classes: {}", report.berge_count);
        print_diff_side("only obstruction", &report.only_obstruction);
        print_diff_side("only enumeration", &report.only_berge);
        println!(
            "{}",
            if report.agreement() {
                "AGREEMENT"
            } else {
                "DISAGREEMENT"
            }
        );
        println!("elapsed: {:.2}s", elapsed.as_secs_f64());
    }
    Ok(if report.agreement() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_diff_side(label: &str, classes: &[(u32, u32)]) {
    if classes.is_empty() {
        println!("{label}: (none)");
    } else {
        println!("{label}:");
        for &(p, c) in classes {
            println!("  L({p}, {c})");
        }
    }
}

fn cmd_hfk(cli: &Cli, alex: &str) -> lspace::Result<ExitCode> {
    let poly = Laurent::from_str(alex)?;
    match hfk::validate_lspace_alex(&poly) {
        Err(reason) => {
            if cli.json {
                println!(
                    "{}",
                    json!({"alex": poly.to_string(), "valid": false, "reason": reason.to_string()})
                );
            } else {
                println!("REJECTED: {reason}");
            }
            Ok(ExitCode::from(1))
        }
        Ok(stair) => {
            let summary = hfk::hfk_from_alex(&stair);
            let (tau, genus) = hfk::tau_and_genus(&stair);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "alex": poly.to_string(),
                        "valid": true,
                        "generators": summary.generators,
                        "tau": tau,
                        "genus": genus,
                    })
                );
            } else {
                println!("alexander  maslov");
                for g in &summary.generators {
                    println!("{:>9}  {:>6}", g.alexander, g.maslov);
                }
                println!("tau = {tau}");
                println!("genus = {genus}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_fibered(cli: &Cli, p: u32, q: u32, k: u32, word: bool) -> lspace::Result<ExitCode> {
    let verdict = fibered::is_fibered(p, q, k)?;
    let relator = word.then(|| fibered::relator(p, q, k, 0)).transpose()?;
    if cli.json {
        let mut value = serde_json::to_value(&verdict)
            .map_err(|e| Error::Parse(format!("verdict serialization: {e}")))?;
        value["p"] = json!(p);
        value["q"] = json!(q);
        value["k"] = json!(k);
        if let Some(w) = &relator {
            value["word"] = json!(w.to_string());
        }
        println!("{value}");
    } else {
        let label = if verdict.fibered {
            "FIBERED"
        } else {
            "NOT FIBERED"
        };
        println!("({p}, {q}, {k}): {label}");
        println!(
            "max S = {} attained {} time(s), first at position {}",
            verdict.max, verdict.max_count, verdict.max_at
        );
        println!(
            "min S = {} attained {} time(s), first at position {}",
            verdict.min, verdict.min_count, verdict.min_at
        );
        if let Some(w) = &relator {
            println!("relator: {w}");
        }
    }
    Ok(if verdict.fibered {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_fibered_census(cli: &Cli, pmax: u32) -> lspace::Result<ExitCode> {
    let started = Instant::now();
    let report = fibered::fiberedness_census(pmax)?;
    let elapsed = started.elapsed();
    if cli.json {
        let mut value = serde_json::to_value(&report)
            .map_err(|e| Error::Parse(format!("census serialization: {e}")))?;
        value["timings"] = json!({"elapsed_ms": elapsed.as_millis() as u64});
        println!("{value}");
    } else {
        println!(
            "checked {} triples up to p = {}",
            report.triples, report.pmax
        );
        if report.failures.is_empty() {
            println!("failures: (none)");
        } else {
            println!("failures:");
            for &(p, q, k) in &report.failures {
                println!("  ({p}, {q}, {k})");
            }
        }
        println!("elapsed: {:.2}s", elapsed.as_secs_f64());
    }
    Ok(if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_plumbing(
    cli: &Cli,
    graph: Option<&std::path::Path>,
    seifert: Option<&str>,
) -> lspace::Result<ExitCode> {
    let certification = match (graph, seifert) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let tree = plumbing::PlumbingTree::from_json(&text)?;
            if !tree.is_negative_definite() {
                NotDefinite(tree.determinant().magnitude().to_string())
            } else {
                Certified(plumbing::lspace_certify(&tree)?)
            }
        }
        (None, Some(data)) => {
            let (b, pairs) = plumbing::parse_seifert(data)?;
            let tree = plumbing::seifert_to_plumbing(b, &pairs)?;
            if !tree.is_negative_definite() {
                NotDefinite(tree.determinant().magnitude().to_string())
            } else {
                Certified(plumbing::lspace_certify_seifert(b, &pairs)?)
            }
        }
        // clap enforces exactly one source; this is unreachable via the CLI.
        _ => return Err(Error::Parse("need exactly one of --graph/--seifert".into())),
    };
    let (lspace_verdict, definite, det, count, fast_path) = match &certification {
        NotDefinite(det) => (false, false, det.clone(), None, false),
        Certified(cert) => (
            cert.lspace,
            true,
            cert.h1_order.to_string(),
            cert.count.as_ref().map(|c| c.to_string()),
            cert.fast_path,
        ),
    };
    if cli.json {
        println!(
            "{}",
            json!({
                "negative_definite": definite,
                "det": det,
                "full_paths": count,
                "fast_path": fast_path,
                "lspace": lspace_verdict,
            })
        );
    } else {
        println!(
            "negative definite: {}",
            if definite { "yes" } else { "no" }
        );
        println!("|det|: {det}");
        match &count {
            Some(c) => println!("full paths: {c}"),
            None => println!("full paths: (not computed)"),
        }
        println!(
            "L-space: {}",
            if lspace_verdict { "yes" } else { "no" }
        );
    }
    Ok(if lspace_verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

use PlumbingOutcome::{Certified, NotDefinite};

enum PlumbingOutcome {
    /// The form is not negative definite; carries `|det|` for the report.
    NotDefinite(String),
    Certified(plumbing::Certification),
}
