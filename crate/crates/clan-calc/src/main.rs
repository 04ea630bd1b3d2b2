//! Command-line surface for the clan engine: queries, renderings, poset
//! exports, and exhaustive verification sweeps.
//!
//! Exit status: 0 on success, 1 when a verification command finds a failing
//! instance, 2 on usage errors (unknown subcommand, malformed clan or
//! permutation syntax).

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clan_calc::bpd::{clan_polynomial, BpdFragment};
use clan_calc::clan::Clan;
use clan_calc::perm::Permutation;
use clan_calc::schubert::double_schubert;
use clan_calc::verify::{self, SweepReport};
use clan_calc::Engine;

#[derive(Parser)]
#[command(
    name = "clan-calc",
    version,
    about = "Exact engine for (p,q)-clans, pipe dream fragments, and equivariant Schubert calculus"
)]
struct Cli {
    /// Worker threads for sweeps (env CLAN_CALC_JOBS overrides).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or enumerate clans.
    #[command(subcommand)]
    Clan(ClanCmd),
    /// Enumerate or count pipe dream fragments.
    #[command(subcommand)]
    Bpd(BpdCmd),
    /// Print polynomials attached to permutations and clans.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Localize a clan's representative at a permutation (x_i -> y_{w(i)}).
    Localize {
        clan: String,
        perm: String,
        /// Emit the term list as JSON instead of polynomial text.
        #[arg(long)]
        json: bool,
    },
    /// Expand a clan's representative in the double Schubert basis (JSON).
    Expand { clan: String },
    /// Run the three smoothness tests for one clan (JSON report).
    Smooth { clan: String },
    /// Export clan posets.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Verify one of the four structural statements on all clans up to a
    /// size bound. Emits one JSON line per subject plus a text summary.
    Verify {
        /// Which statement: A (localization), B (expansion coefficients),
        /// C (product coefficients), D (smoothness).
        theorem: String,
        /// Largest p+q to sweep (defaults: A 6, B 5, C 5, D 7).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print the (2,2) localization table: clan, v, localized
    /// representative, fragment count.
    Appendix,
}

#[derive(Subcommand)]
enum ClanCmd {
    /// Print a clan's invariants as JSON.
    Info { clan: String },
    /// List all clans of a shape, one per line.
    List {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Emit a JSON array instead of lines.
        #[arg(long)]
        json: bool,
        /// Keep only matchless clans.
        #[arg(long)]
        matchless: bool,
        /// Keep only non-crossing clans.
        #[arg(long)]
        noncrossing: bool,
    },
}

#[derive(Subcommand)]
enum BpdCmd {
    /// Print every fragment of a clan.
    List {
        clan: String,
        /// Enumerate by brute-force tiling search instead of droop closure.
        #[arg(long)]
        oracle: bool,
        /// Draw tiles with box-drawing glyphs.
        #[arg(long, conflicts_with = "json")]
        render: bool,
        /// Emit the documented JSON schema.
        #[arg(long)]
        json: bool,
    },
    /// Print the number of fragments of a clan.
    Count {
        clan: String,
        /// Count by brute-force tiling search instead of droop closure.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// The double Schubert polynomial of a permutation.
    Schubert {
        perm: String,
        #[arg(long)]
        json: bool,
    },
    /// The representative of a clan's orbit closure.
    Upsilon {
        clan: String,
        #[arg(long)]
        json: bool,
    },
    /// The clan polynomial (fragment weight sum in y).
    Clanpoly {
        clan: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Emit the cover graph of a shape's clans as DOT. Weak covers are
    /// solid and labeled with their Hecke indices; strong covers that are
    /// not weak covers are dashed. --weak or --strong restricts the view.
    Hasse {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Only weak-order covers.
        #[arg(long, conflicts_with = "strong")]
        weak: bool,
        /// Only strong-order covers (plain edges).
        #[arg(long)]
        strong: bool,
    },
}

/// Failures mapped to exit codes: usage errors to 2, verification
/// failures to 1.
enum Failure {
    Usage(String),
    Verification(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_jobs(cli.jobs) {
        return report(f);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Failure::Verification(msg) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

/// Applies --jobs, letting CLAN_CALC_JOBS take precedence.
fn configure_jobs(flag: Option<usize>) -> Result<(), Failure> {
    let jobs = match std::env::var("CLAN_CALC_JOBS") {
        Ok(text) => Some(text.parse::<usize>().map_err(|_| {
            Failure::Usage(format!("CLAN_CALC_JOBS must be a positive integer, got '{text}'"))
        })?),
        Err(_) => flag,
    };
    if let Some(jobs) = jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".to_string()));
        }
        // A second initialization attempt is harmless; the pool is global.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    Ok(())
}

fn parse_clan(text: &str) -> Result<Clan, Failure> {
    Clan::parse(text).map_err(|err| Failure::Usage(format!("invalid clan '{text}': {err}")))
}

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    Permutation::parse(text)
        .map_err(|err| Failure::Usage(format!("invalid permutation '{text}': {err}")))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Clan(cmd) => run_clan(cmd),
        Command::Bpd(cmd) => run_bpd(cmd),
        Command::Poly(cmd) => run_poly(cmd),
        Command::Localize { clan, perm, json } => {
            let clan = parse_clan(&clan)?;
            let perm = parse_perm(&perm)?;
            if perm.n() != clan.n() {
                return Err(Failure::Usage(format!(
                    "permutation '{perm}' has {} entries but clan '{clan}' has {} nodes",
                    perm.n(),
                    clan.n()
                )));
            }
            let mut engine = Engine::new();
            let localized = engine.upsilon(&clan).localize(&perm);
            if json {
                println!("{}", serde_json::to_string(&localized.to_json()).unwrap());
            } else {
                println!("{localized}");
            }
            Ok(())
        }
        Command::Expand { clan } => {
            let clan = parse_clan(&clan)?;
            let mut engine = Engine::new();
            let upsilon = engine.upsilon(&clan);
            let table = engine
                .expand(&upsilon)
                .map_err(|err| Failure::Verification(format!("expansion failed: {err}")))?;
            println!("{}", serde_json::to_string(&table.to_json()).unwrap());
            Ok(())
        }
        Command::Smooth { clan } => {
            let clan = parse_clan(&clan)?;
            let mut engine = Engine::new();
            let report = engine.smoothness(&clan);
            let doc = serde_json::json!({
                "clan": clan.to_string(),
                "unique_bpd": report.unique_bpd,
                "avoids_patterns": report.avoids_patterns,
                "localization_matches_product": report.localization_matches_product,
                "consistent": report.consistent(),
                "smooth": report.smooth(),
            });
            println!("{}", serde_json::to_string(&doc).unwrap());
            if report.consistent() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "smoothness tests disagree on {clan}"
                )))
            }
        }
        Command::Order(cmd) => run_order(cmd),
        Command::Verify { theorem, max_n } => run_verify(&theorem, max_n),
        Command::Appendix => {
            run_appendix();
            Ok(())
        }
    }
}

fn run_clan(cmd: ClanCmd) -> Result<(), Failure> {
    match cmd {
        ClanCmd::Info { clan } => {
            let clan = parse_clan(&clan)?;
            let (u, v) = clan.uv_perms();
            let doc = serde_json::json!({
                "clan": clan.to_string(),
                "p": clan.p(),
                "q": clan.q(),
                "n": clan.n(),
                "arcs": clan.arcs(),
                "length": clan.length(),
                "u": u.to_string(),
                "v": v.to_string(),
                "lambda": clan.young_diagram().rows(),
                "matchless": clan.is_matchless(),
                "noncrossing": clan.is_noncrossing(),
                "rainbow": clan.is_rainbow(),
            });
            println!("{}", serde_json::to_string(&doc).unwrap());
            Ok(())
        }
        ClanCmd::List { p, q, json, matchless, noncrossing } => {
            if p == 0 || q == 0 {
                return Err(Failure::Usage("--p and --q must be at least 1".to_string()));
            }
            let clans: Vec<Clan> = Clan::enumerate(p, q)
                .into_iter()
                .filter(|c| !matchless || c.is_matchless())
                .filter(|c| !noncrossing || c.is_noncrossing())
                .collect();
            if json {
                let texts: Vec<String> = clans.iter().map(|c| c.to_string()).collect();
                println!("{}", serde_json::to_string(&texts).unwrap());
            } else {
                for c in &clans {
                    println!("{c}");
                }
            }
            Ok(())
        }
    }
}

fn enumerate_fragments(clan: &Clan, oracle: bool) -> Result<Vec<BpdFragment>, Failure> {
    if oracle {
        BpdFragment::enumerate_oracle(clan).map_err(|err| Failure::Usage(err.to_string()))
    } else {
        Ok(BpdFragment::enumerate(clan))
    }
}

fn run_bpd(cmd: BpdCmd) -> Result<(), Failure> {
    match cmd {
        BpdCmd::List { clan, oracle, render, json } => {
            let clan = parse_clan(&clan)?;
            let fragments = enumerate_fragments(&clan, oracle)?;
            if json {
                let doc = serde_json::json!({
                    "clan": clan.to_string(),
                    "shape": clan.young_diagram().rows(),
                    "fragments": fragments.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string(&doc).unwrap());
            } else {
                for (index, fragment) in fragments.iter().enumerate() {
                    if index > 0 {
                        println!();
                    }
                    if render {
                        println!("{}", fragment.render());
                    } else {
                        for row in fragment.code_rows() {
                            println!("{row}");
                        }
                    }
                    println!("weight: {}", fragment.weight());
                }
            }
            Ok(())
        }
        BpdCmd::Count { clan, oracle } => {
            let clan = parse_clan(&clan)?;
            let fragments = enumerate_fragments(&clan, oracle)?;
            println!("{}", fragments.len());
            Ok(())
        }
    }
}

fn run_poly(cmd: PolyCmd) -> Result<(), Failure> {
    let (poly, json) = match cmd {
        PolyCmd::Schubert { perm, json } => {
            let perm = parse_perm(&perm)?;
            (double_schubert(&perm), json)
        }
        PolyCmd::Upsilon { clan, json } => {
            let clan = parse_clan(&clan)?;
            let mut engine = Engine::new();
            ((*engine.upsilon(&clan)).clone(), json)
        }
        PolyCmd::Clanpoly { clan, json } => {
            let clan = parse_clan(&clan)?;
            (clan_polynomial(&clan), json)
        }
    };
    if json {
        println!("{}", serde_json::to_string(&poly.to_json()).unwrap());
    } else {
        println!("{poly}");
    }
    Ok(())
}

fn run_order(cmd: OrderCmd) -> Result<(), Failure> {
    let OrderCmd::Hasse { p, q, weak, strong } = cmd;
    if p == 0 || q == 0 {
        return Err(Failure::Usage("--p and --q must be at least 1".to_string()));
    }
    let clans = Clan::enumerate(p, q);
    // Weak covers, with every Hecke index that realizes each edge.
    let mut weak_edges: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (from, clan) in clans.iter().enumerate() {
        let mut per_target: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, cover) in clan.weak_covers() {
            let to = clans.binary_search(&cover).expect("cover is a clan of the shape");
            match per_target.iter_mut().find(|(t, _)| *t == to) {
                Some((_, labels)) => labels.push(i),
                None => per_target.push((to, vec![i])),
            }
        }
        per_target.sort_by_key(|(t, _)| *t);
        for (to, labels) in per_target {
            weak_edges.push((from, to, labels));
        }
    }
    // Strong covers: the transitive reduction of the containment order.
    let total = clans.len();
    let mut leq = vec![vec![false; total]; total];
    for (a, x) in clans.iter().enumerate() {
        for (b, y) in clans.iter().enumerate() {
            leq[a][b] = x.strong_leq(y).expect("same shape");
        }
    }
    let mut strong_edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..total {
        for b in 0..total {
            if a == b || !leq[a][b] {
                continue;
            }
            let direct = !(0..total)
                .any(|m| m != a && m != b && leq[a][m] && leq[m][b]);
            if direct {
                strong_edges.push((a, b));
            }
        }
    }
    strong_edges.sort_unstable();
    println!("digraph clans {{");
    println!("  rankdir=BT;");
    println!("  node [shape=box fontname=\"monospace\"];");
    for clan in &clans {
        println!("  \"{clan}\";");
    }
    if !strong {
        for (from, to, labels) in &weak_edges {
            let label: Vec<String> = labels.iter().map(|i| i.to_string()).collect();
            println!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                clans[*from],
                clans[*to],
                label.join(",")
            );
        }
    }
    if !weak {
        for (from, to) in &strong_edges {
            let is_weak = weak_edges.iter().any(|(f, t, _)| f == from && t == to);
            if is_weak && !strong {
                continue; // already drawn solid with its labels
            }
            let style = if strong { "" } else { " [style=dashed]" };
            println!("  \"{}\" -> \"{}\"{};", clans[*from], clans[*to], style);
        }
    }
    println!("}}");
    Ok(())
}

fn run_verify(theorem: &str, max_n: Option<usize>) -> Result<(), Failure> {
    let (default_n, runner): (usize, fn(usize) -> SweepReport) =
        match theorem.to_ascii_uppercase().as_str() {
            "A" => (6, verify::verify_theorem_a),
            "B" => (5, verify::verify_theorem_b),
            "C" => (5, verify::verify_theorem_c),
            "D" => (7, verify::verify_theorem_d),
            other => {
                return Err(Failure::Usage(format!(
                    "unknown theorem '{other}': expected A, B, C, or D"
                )))
            }
        };
    let max_n = max_n.unwrap_or(default_n);
    if max_n < 2 {
        return Err(Failure::Usage("--max-n must be at least 2".to_string()));
    }
    let report = runner(max_n);
    for line in &report.lines {
        let mut doc = serde_json::json!({
            "subject": line.label,
            "pass": line.pass,
        });
        if let Some(detail) = &line.detail {
            doc["detail"] = serde_json::Value::String(detail.clone());
        }
        println!("{}", serde_json::to_string(&doc).unwrap());
    }
    println!("{}", report.summary());
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} subject(s) failed",
            report.failures()
        )))
    }
}

/// Prints the (2,2) table: clan, v, localized representative, and fragment
/// count, tab separated, in canonical clan order.
fn run_appendix() {
    let mut engine = Engine::new();
    for clan in Clan::enumerate(2, 2) {
        let (_, v) = clan.uv_perms();
        let localized = engine.upsilon(&clan).localize(&v);
        let fragments = BpdFragment::enumerate(&clan).len();
        println!("{clan}\t{v}\t{localized}\t{fragments}");
    }
}
