//! Command-line surface for the digraph-profiles library: build the named
//! constructions, check files, run witness finders, estimate profiles,
//! verify theorems, and run the full claim suite.
//!
//! Exit codes: 0 success, 2 usage error, 3 hypothesis/parameter error,
//! 4 claim failure, 5 internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use digraph_profiles::coloring;
use digraph_profiles::constructions::Family;
use digraph_profiles::io;
use digraph_profiles::patterns::{self, PatternId};
use digraph_profiles::search::{self, SearchMode, TheoremId};
use digraph_profiles::witnesses::{self, WitnessError};
use digraph_profiles::Digraph;

const SCHEMA_VERSION: &str = "1";

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_CLAIM: u8 = 4;
const EXIT_INVARIANT: u8 = 5;

#[derive(Parser)]
#[command(
    name = "digraph-profiles",
    version,
    about = "Chromatic profiles of digraphs: constructions, checkers, witnesses, searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write it in the text format.
    Construct(ConstructArgs),
    /// Report δ⁺, χ and pattern-freeness of a digraph file.
    Check(CheckArgs),
    /// Run a proof-extracted witness finder on a digraph file.
    Witness(WitnessArgs),
    /// Empirically estimate a chromatic-profile value at fixed n.
    Profile(ProfileArgs),
    /// Re-verify a theorem's implication over all (or sampled) digraphs.
    Verify(VerifyArgs),
    /// Run the whole claim suite and emit a report.
    VerifyPaper(VerifyPaperArgs),
    /// Convert a digraph file to DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Family: a | b | c3-blowup | aes | aes-relaxed | wheel | tr-blowup | c5 | remark
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Pentagon orientation for --family c5: C5-> | C5' | C5'' | C5'''
    #[arg(long)]
    which: Option<String>,
    /// ε numerator for --family remark (may be 0).
    #[arg(long, default_value_t = 0)]
    eps_num: i64,
    /// ε denominator for --family remark.
    #[arg(long, default_value_t = 1)]
    eps_den: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Verify the family's (δ⁺, χ, freeness) triple and print the verdict.
    #[arg(long)]
    check: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Digraph file in the text format.
    input: PathBuf,
    /// Patterns to test for absence (repeatable): T3, T4x2, Ck5, C5', C5'', C5''', custom:<path>
    #[arg(long = "pattern")]
    patterns: Vec<String>,
    /// Also test k-colorability for this k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    /// Operation: find-tr | find-cycle | find-c5pp | find-c5p | morph | saturate | extract-wheel
    #[arg(long)]
    op: String,
    /// Host digraph file.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Morph target: C5' | C5'' | C5'''
    #[arg(long)]
    target: Option<String>,
    /// Starting 5-cycle for morph, comma-separated vertex ids.
    #[arg(long)]
    cycle: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProfileArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// exhaustive | random | hillclimb
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 10_000)]
    iters: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem: aes | cycle | bipartite
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Pentagon orientation for --theorem bipartite.
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyPaperArgs {
    /// Keep only claims whose id contains this substring.
    #[arg(long)]
    only: Option<String>,
    /// Cap exhaustive scans at this order (default 5).
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Write the JSON report here as well as stdout.
    #[arg(long)]
    json_out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportDotArgs {
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Check(a) => cmd_check(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Verify(a) => cmd_verify(a),
        Command::VerifyPaper(a) => cmd_verify_paper(a),
        Command::ExportDot(a) => cmd_export_dot(a),
    };
    ExitCode::from(code)
}

fn fail(code: u8, msg: &str) -> u8 {
    eprintln!("error: {msg}");
    code
}

fn parse_pattern(s: &str) -> Result<PatternId, String> {
    if let Some(path) = s.strip_prefix("custom:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let d = io::parse_digraph(&text).map_err(|e| format!("{path}: {e}"))?;
        return Ok(PatternId::Custom(d));
    }
    s.parse::<PatternId>().map_err(|e| e.to_string())
}

fn load_digraph(path: &PathBuf) -> Result<Digraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse_digraph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) {
    if json {
        #[derive(Serialize)]
        struct Envelope<'a, T> {
            schema_version: &'static str,
            #[serde(flatten)]
            value: &'a T,
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&Envelope {
                schema_version: SCHEMA_VERSION,
                value
            })
            .expect("report serialization cannot fail")
        );
    } else {
        println!("{text}");
    }
}

fn cmd_construct(a: ConstructArgs) -> u8 {
    let need_n = |n: Option<usize>| n.ok_or_else(|| "--n is required for this family".to_string());
    let need_r = |r: Option<usize>| r.ok_or_else(|| "--r is required for this family".to_string());
    let family = match a.family.as_str() {
        "a" => need_n(a.n).map(|n| Family::A { n }),
        "b" => need_n(a.n).map(|n| Family::B { n }),
        "c3-blowup" => need_n(a.n).map(|n| Family::C3Blowup { n }),
        "aes" => need_n(a.n).and_then(|n| need_r(a.r).map(|r| Family::Aes { n, r })),
        "aes-relaxed" => need_n(a.n).and_then(|n| need_r(a.r).map(|r| Family::AesRelaxed { n, r })),
        "wheel" => need_r(a.r).map(|r| Family::WheelLike {
            r,
            t: a.t.unwrap_or(0),
        }),
        "tr-blowup" => need_r(a.r).map(|r| Family::TrBlowup {
            r,
            t: a.t.unwrap_or(1),
        }),
        "c5" => match a.which.as_deref() {
            None => Err("--which is required for --family c5".to_string()),
            Some(w) => parse_pattern(w).map(Family::C5Orientation),
        },
        "remark" => need_n(a.n).map(|n| Family::Remark {
            n,
            eps_num: a.eps_num,
            eps_den: a.eps_den,
        }),
        other => Err(format!("unknown family {other:?}")),
    };
    let family = match family {
        Ok(f) => f,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    let d = match family.build() {
        Ok(d) => d,
        Err(e) => return fail(EXIT_HYPOTHESIS, &e.to_string()),
    };
    let text = io::serialize_digraph(&d);
    match &a.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return fail(EXIT_USAGE, &format!("{}: {e}", path.display()));
            }
        }
        None if !a.check => print!("{text}"),
        None => {}
    }
    if a.check {
        match family.self_check() {
            Ok(report) => {
                emit(
                    a.json,
                    &report,
                    format!(
                        "n={} delta_plus={} chi={} free={:?} ok={}",
                        report.n, report.delta_plus, report.chi, report.pattern_free, report.ok
                    ),
                );
                if !report.ok {
                    return EXIT_CLAIM;
                }
            }
            Err(e) => return fail(EXIT_HYPOTHESIS, &e.to_string()),
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    arcs: usize,
    delta_plus: usize,
    chi: usize,
    odd_girth: Option<usize>,
    pattern_absent: Vec<(String, bool)>,
    k_colorable: Option<(usize, bool)>,
}

fn cmd_check(a: CheckArgs) -> u8 {
    let d = match load_digraph(&a.input) {
        Ok(d) => d,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    if d.n() == 0 {
        return fail(EXIT_HYPOTHESIS, "digraph is empty");
    }
    let mut pattern_absent = Vec::new();
    for p in &a.patterns {
        let pattern = match parse_pattern(p) {
            Ok(p) => p,
            Err(msg) => return fail(EXIT_USAGE, &msg),
        };
        match patterns::contains_pattern(&d, &pattern) {
            Ok(found) => pattern_absent.push((p.clone(), found.is_none())),
            Err(e) => return fail(EXIT_HYPOTHESIS, &e.to_string()),
        }
    }
    let (chi, _) = coloring::chromatic_number(&d).expect("nonempty");
    let report = CheckReport {
        n: d.n(),
        arcs: d.arc_count(),
        delta_plus: d.min_out_degree().expect("nonempty"),
        chi,
        odd_girth: patterns::odd_girth(&d).value,
        pattern_absent,
        k_colorable: a.k.map(|k| (k, coloring::is_k_colorable(&d, k).is_some())),
    };
    emit(
        a.json,
        &report,
        format!(
            "n={} arcs={} delta_plus={} chi={} odd_girth={:?} pattern_absent={:?} k_colorable={:?}",
            report.n,
            report.arcs,
            report.delta_plus,
            report.chi,
            report.odd_girth,
            report.pattern_absent,
            report.k_colorable
        ),
    );
    EXIT_OK
}

#[derive(Serialize)]
#[serde(tag = "outcome")]
enum WitnessOutcome {
    Embedding {
        map: Vec<usize>,
    },
    Saturation {
        added_arcs: Vec<(usize, usize)>,
        digraph: Digraph,
    },
    Wheel(witnesses::WheelExtraction),
}

fn witness_exit(e: &WitnessError) -> u8 {
    match e {
        WitnessError::Hypothesis(_) => EXIT_HYPOTHESIS,
        WitnessError::Invariant(_) => EXIT_INVARIANT,
        WitnessError::Stall(_) => EXIT_CLAIM,
    }
}

fn cmd_witness(a: WitnessArgs) -> u8 {
    let d = match load_digraph(&a.input) {
        Ok(d) => d,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    let need = |v: Option<usize>, flag: &str| v.ok_or(format!("--{flag} is required for this op"));
    let result: Result<WitnessOutcome, (u8, String)> = (|| {
        match a.op.as_str() {
            "find-tr" => {
                let r = need(a.r, "r").map_err(|m| (EXIT_USAGE, m))?;
                witnesses::find_tr_by_degree(&d, r)
                    .map(|e| WitnessOutcome::Embedding { map: e.map })
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            "find-cycle" => {
                let ell = need(a.ell, "ell").map_err(|m| (EXIT_USAGE, m))?;
                witnesses::find_directed_cycle(&d, ell)
                    .map(|e| WitnessOutcome::Embedding { map: e.map })
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            "find-c5pp" => witnesses::find_c5pp_from_triangle(&d)
                .map(|e| WitnessOutcome::Embedding { map: e.map })
                .map_err(|e| (witness_exit(&e), e.to_string())),
            "find-c5p" => {
                // Locate a C5'' first, then run the case split.
                let e = patterns::contains_pattern(&d, &PatternId::C5DoublePrime)
                    .map_err(|e| (EXIT_HYPOTHESIS, e.to_string()))?
                    .ok_or((EXIT_HYPOTHESIS, "host contains no C5''".to_string()))?;
                witnesses::find_c5p_from_c5pp(&d, &e)
                    .map(|e| WitnessOutcome::Embedding { map: e.map })
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            "morph" => {
                let target = a
                    .target
                    .as_deref()
                    .ok_or((EXIT_USAGE, "--target is required".to_string()))
                    .and_then(|t| parse_pattern(t).map_err(|m| (EXIT_USAGE, m)))?;
                let cycle: Vec<usize> = a
                    .cycle
                    .as_deref()
                    .ok_or((EXIT_USAGE, "--cycle is required".to_string()))?
                    .split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| (EXIT_USAGE, format!("bad --cycle: {e}")))?;
                witnesses::morph_pentagon(&d, &cycle, &target)
                    .map(|e| WitnessOutcome::Embedding { map: e.map })
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            "saturate" => {
                let r = need(a.r, "r").map_err(|m| (EXIT_USAGE, m))?;
                witnesses::saturate_tr(&d, r)
                    .map(|s| WitnessOutcome::Saturation {
                        added_arcs: s.added_arcs,
                        digraph: s.saturated,
                    })
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            "extract-wheel" => {
                let r = need(a.r, "r").map_err(|m| (EXIT_USAGE, m))?;
                witnesses::extract_wheel(&d, r)
                    .map(WitnessOutcome::Wheel)
                    .map_err(|e| (witness_exit(&e), e.to_string()))
            }
            other => Err((EXIT_USAGE, format!("unknown op {other:?}"))),
        }
    })();
    match result {
        Ok(outcome) => {
            let text = match &outcome {
                WitnessOutcome::Embedding { map } => format!("embedding {map:?}"),
                WitnessOutcome::Saturation { added_arcs, .. } => {
                    format!("saturated; added {} arcs", added_arcs.len())
                }
                WitnessOutcome::Wheel(w) => format!(
                    "wheel v={} w1={} w2={} q1={:?} q2={:?} t={}",
                    w.v, w.w1, w.w2, w.q1, w.q2, w.t
                ),
            };
            emit(a.json, &outcome, text);
            EXIT_OK
        }
        Err((code, msg)) => fail(code, &msg),
    }
}

fn parse_mode(
    mode: &str,
    seed: Option<u64>,
    trials: u64,
    iters: u64,
) -> Result<SearchMode, String> {
    match mode {
        "exhaustive" => Ok(SearchMode::Exhaustive),
        "random" => {
            let seed = seed.ok_or("--seed is mandatory for random mode")?;
            Ok(SearchMode::Random { seed, trials })
        }
        "hillclimb" => {
            let seed = seed.ok_or("--seed is mandatory for hillclimb mode")?;
            Ok(SearchMode::HillClimb { seed, iters })
        }
        other => Err(format!("unknown mode {other:?}")),
    }
}

fn cmd_profile(a: ProfileArgs) -> u8 {
    let pattern = match parse_pattern(&a.pattern) {
        Ok(p) => p,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    let mode = match parse_mode(&a.mode, a.seed, a.trials, a.iters) {
        Ok(m) => m,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    match search::empirical_profile(&pattern, a.k, a.n, &mode) {
        Ok(report) => {
            emit(
                a.json,
                &report,
                format!(
                    "pattern={} k={} n={} best_delta_plus={:?} scanned={} survivors={} exact={}",
                    report.pattern,
                    report.k,
                    report.n,
                    report.best_delta_plus,
                    report.counts.scanned,
                    report.counts.non_k_colorable,
                    report.exact
                ),
            );
            EXIT_OK
        }
        Err(search::SearchError::TooLarge { .. }) => fail(EXIT_HYPOTHESIS, "n too large for mode"),
        Err(e) => fail(EXIT_INVARIANT, &e.to_string()),
    }
}

fn cmd_verify(a: VerifyArgs) -> u8 {
    let theorem = match a.theorem.as_str() {
        "aes" => match a.r {
            Some(r) if r >= 3 => TheoremId::Aes { r },
            _ => return fail(EXIT_USAGE, "--r (≥ 3) is required for --theorem aes"),
        },
        "cycle" => match a.ell {
            Some(ell) if ell >= 3 => TheoremId::DirectedOddCycle { ell },
            _ => return fail(EXIT_USAGE, "--ell (≥ 3) is required for --theorem cycle"),
        },
        "bipartite" => match a.which.as_deref().map(parse_pattern) {
            Some(Ok(which)) => TheoremId::PentagonBipartite { which },
            Some(Err(msg)) => return fail(EXIT_USAGE, &msg),
            None => return fail(EXIT_USAGE, "--which is required for --theorem bipartite"),
        },
        other => return fail(EXIT_USAGE, &format!("unknown theorem {other:?}")),
    };
    let mode = match parse_mode(&a.mode, a.seed, a.trials, 0) {
        Ok(m) => m,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    match search::verify_theorem(&theorem, a.n, &mode) {
        Ok(check) => {
            emit(
                a.json,
                &check,
                format!(
                    "theorem={:?} n={} scanned={} hypothesis_count={} conclusion_failures={}",
                    check.theorem,
                    check.n,
                    check.scanned,
                    check.hypothesis_count,
                    check.conclusion_failures
                ),
            );
            if check.conclusion_failures > 0 {
                EXIT_CLAIM
            } else {
                EXIT_OK
            }
        }
        Err(search::SearchError::TooLarge { .. }) => fail(EXIT_HYPOTHESIS, "n too large for mode"),
        Err(e) => fail(EXIT_INVARIANT, &e.to_string()),
    }
}

#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
enum ClaimStatus {
    Verified,
    FiniteArtifact,
    SkippedOutOfScope,
    Failed,
}

#[derive(Serialize)]
struct ClaimEntry {
    id: String,
    parameters: String,
    status: ClaimStatus,
    detail: String,
    runtime_ms: u128,
}

#[derive(Serialize)]
struct PaperSuiteReport {
    schema_version: &'static str,
    entries: Vec<ClaimEntry>,
    failed: usize,
}

fn run_claim(
    entries: &mut Vec<ClaimEntry>,
    only: &Option<String>,
    id: &str,
    parameters: String,
    f: impl FnOnce() -> (ClaimStatus, String),
) {
    if let Some(filter) = only {
        if !id.contains(filter.as_str()) {
            return;
        }
    }
    let start = Instant::now();
    let (status, detail) = f();
    entries.push(ClaimEntry {
        id: id.to_string(),
        parameters,
        status,
        detail,
        runtime_ms: start.elapsed().as_millis(),
    });
}

fn cmd_verify_paper(a: VerifyPaperArgs) -> u8 {
    let mut entries = Vec::new();
    let only = &a.only;

    run_claim(
        &mut entries,
        only,
        "aes-construction",
        "r in 3..=5, two smallest n".into(),
        || {
            for r in 3..=5usize {
                let modulus = if r == 3 { 5 } else { 3 * r - 4 };
                for n in [modulus, 2 * modulus] {
                    match (Family::Aes { n, r }).self_check() {
                        Ok(rep) if rep.ok => {}
                        other => {
                            return (ClaimStatus::Failed, format!("(n={n}, r={r}): {other:?}"))
                        }
                    }
                }
            }
            (ClaimStatus::Verified, "δ⁺, χ and T_r-freeness exact".into())
        },
    );

    run_claim(
        &mut entries,
        only,
        "an-construction",
        "odd n in 5..=21, even n pinned".into(),
        || {
            for n in (5..=21usize).step_by(2) {
                match (Family::A { n }).self_check() {
                    Ok(rep) if rep.ok && rep.delta_plus == n / 2 => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            // Even n: computed δ⁺ is ⌊(n−1)/2⌋, one less than the odd-n formula.
            for n in (6..=20usize).step_by(2) {
                match (Family::A { n }).self_check() {
                    Ok(rep) if rep.ok && rep.delta_plus == (n - 1) / 2 => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "δ⁺ = ⌊n/2⌋ for odd n; even n pinned at ⌊(n−1)/2⌋ (documented discrepancy)".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "bn-construction",
        "n in 5..=32".into(),
        || {
            for n in 5..=32usize {
                match (Family::B { n }).self_check() {
                    Ok(rep) if rep.ok => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "δ⁺ = ⌊(n−2)/3⌋, χ = 3, C5'-free".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "c3blowup-construction",
        "n in 3..=32".into(),
        || {
            for n in 3..=32usize {
                match (Family::C3Blowup { n }).self_check() {
                    Ok(rep) if rep.ok => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "δ⁺ = ⌊n/3⌋, χ = 3, C5''- and C5'''-free".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "remark-construction",
        "n=20, ε=1/20".into(),
        || match (Family::Remark {
            n: 20,
            eps_num: 1,
            eps_den: 20,
        })
        .self_check()
        {
            Ok(rep) if rep.ok && rep.delta_plus == 9 && rep.chi >= 3 => {
                (ClaimStatus::Verified, "C⃗3-free, δ⁺ = 9, χ ≥ 3".into())
            }
            other => (ClaimStatus::Failed, format!("{other:?}")),
        },
    );

    run_claim(
        &mut entries,
        only,
        "aes-theorem-exhaustive",
        format!("r=3, n ≤ {}", a.n_max),
        || {
            for n in 1..=a.n_max.min(search::ENUM_MAX) {
                match search::verify_theorem(&TheoremId::Aes { r: 3 }, n, &SearchMode::Exhaustive) {
                    Ok(c) if c.conclusion_failures == 0 => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "zero failures over all labelled digraphs".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "cycle-theorem-exhaustive",
        format!("ℓ=3, n ≤ {}", a.n_max),
        || {
            for n in 1..=a.n_max.min(search::ENUM_MAX) {
                match search::verify_theorem(
                    &TheoremId::DirectedOddCycle { ell: 3 },
                    n,
                    &SearchMode::Exhaustive,
                ) {
                    Ok(c) if c.conclusion_failures == 0 => {}
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "zero failures over all labelled digraphs".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "bipartite-theorem-exhaustive",
        format!("C5', n ≤ {}", a.n_max),
        || {
            // The ε-carrying theorem runs at ε = 0 with the strict bound;
            // finite-scale failures are artifacts, not refutations.
            let mut artifacts = 0u64;
            for n in 1..=a.n_max.min(search::ENUM_MAX) {
                match search::verify_theorem(
                    &TheoremId::PentagonBipartite {
                        which: PatternId::C5Prime,
                    },
                    n,
                    &SearchMode::Exhaustive,
                ) {
                    Ok(c) => artifacts += c.conclusion_failures,
                    other => return (ClaimStatus::Failed, format!("n={n}: {other:?}")),
                }
            }
            if artifacts == 0 {
                (
                    ClaimStatus::Verified,
                    "zero failures at the ε-free bound".into(),
                )
            } else {
                (
                    ClaimStatus::FiniteArtifact,
                    format!("{artifacts} finite-scale hypothesis instances violate the conclusion"),
                )
            }
        },
    );

    run_claim(
        &mut entries,
        only,
        "homomorphism-facts",
        "C5 orientations vs C⃗3".into(),
        || {
            let c3 = PatternId::DirectedCycle(3).digraph();
            let cases = [
                (PatternId::C5Prime, true),
                (PatternId::C5DoublePrime, false),
                (PatternId::C5TriplePrime, false),
            ];
            for (p, expect) in cases {
                let got = patterns::has_homomorphism(&p.digraph(), &c3)
                    .expect("target within bound")
                    .is_some();
                if got != expect {
                    return (
                        ClaimStatus::Failed,
                        format!("{p} → C⃗3: got {got}, want {expect}"),
                    );
                }
            }
            (
                ClaimStatus::Verified,
                "C5' maps to C⃗3; C5'' and C5''' do not".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "profile-anchors",
        "T3@n=3,4; C⃗3@n=5".into(),
        || {
            for n in [3usize, 4] {
                match search::empirical_profile(
                    &PatternId::TransitiveTournament(3),
                    2,
                    n,
                    &SearchMode::Exhaustive,
                ) {
                    Ok(r) if r.best_delta_plus == Some(1) => {}
                    other => return (ClaimStatus::Failed, format!("T3 n={n}: {other:?}")),
                }
            }
            if a.n_max >= 5 {
                match search::empirical_profile(
                    &PatternId::DirectedCycle(3),
                    2,
                    5,
                    &SearchMode::Exhaustive,
                ) {
                    Ok(r) if r.best_delta_plus == Some(2) => {}
                    other => return (ClaimStatus::Failed, format!("C⃗3 n=5: {other:?}")),
                }
            }
            (
                ClaimStatus::Verified,
                "search reproduces the lower-bound constructions".into(),
            )
        },
    );

    run_claim(
        &mut entries,
        only,
        "stability-asymptotic",
        "regularity machinery".into(),
        || {
            (
                ClaimStatus::SkippedOutOfScope,
                "asymptotic stability and exact infima have no desk-scale analogue".into(),
            )
        },
    );

    let failed = entries
        .iter()
        .filter(|e| e.status == ClaimStatus::Failed)
        .count();
    let report = PaperSuiteReport {
        schema_version: SCHEMA_VERSION,
        entries,
        failed,
    };
    let json = serde_json::to_string_pretty(&report).expect("report serialization cannot fail");
    println!("{json}");
    if let Some(path) = &a.json_out {
        if let Err(e) = std::fs::write(path, &json) {
            return fail(EXIT_USAGE, &format!("{}: {e}", path.display()));
        }
    }
    if failed > 0 {
        EXIT_CLAIM
    } else {
        EXIT_OK
    }
}

fn cmd_export_dot(a: ExportDotArgs) -> u8 {
    let d = match load_digraph(&a.input) {
        Ok(d) => d,
        Err(msg) => return fail(EXIT_USAGE, &msg),
    };
    let dot = io::to_dot(&d);
    match &a.out {
        Some(path) => match std::fs::write(path, dot) {
            Ok(()) => EXIT_OK,
            Err(e) => fail(EXIT_USAGE, &format!("{}: {e}", path.display())),
        },
        None => {
            print!("{dot}");
            EXIT_OK
        }
    }
}
