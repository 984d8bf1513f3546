//! Exhaustive and stochastic exploration: enumerate all small digraphs,
//! empirically estimate chromatic-profile values, and re-verify the
//! theorems' implications on every enumerable instance.
//!
//! Each labelled digraph on `n` vertices is a base-4 code over the
//! n(n−1)/2 vertex pairs (none / u→v / v→u / both), so exhaustive scans
//! shard the code space across workers; reports merge associatively
//! (max δ⁺ with min-code tie-break), making parallel output deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring;
use crate::digraph::Digraph;
use crate::patterns::{self, PatternId};

/// Full enumeration is capped here: 4^10 ≈ 10^6 codes at n = 5.
pub const ENUM_MAX: usize = 5;
/// Hill-climbing cost guard.
pub const HILLCLIMB_MAX: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("exhaustive enumeration is limited to n ≤ {max}, got {n}; use a random mode")]
    TooLarge { n: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64, trials: u64 },
    HillClimb { seed: u64, iters: u64 },
}

fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

/// The lexicographic vertex pairs `(u, v)`, `u < v`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Decodes a base-4 pair code into a digraph.
fn decode(n: usize, pairs: &[(usize, usize)], code: u64) -> Digraph {
    let mut d = Digraph::new(n);
    let mut c = code;
    for &(u, v) in pairs {
        match c & 3 {
            1 => d.add_arc(u, v).unwrap(),
            2 => d.add_arc(v, u).unwrap(),
            3 => {
                d.add_arc(u, v).unwrap();
                d.add_arc(v, u).unwrap();
            }
            _ => {}
        }
        c >>= 2;
    }
    d
}

/// Every loop-free digraph on `n` labelled vertices exactly once; with
/// `canonical_only`, one representative per isomorphism class (the one of
/// least pair code).
pub fn enumerate_digraphs(
    n: usize,
    canonical_only: bool,
) -> Result<impl Iterator<Item = Digraph>, SearchError> {
    if n > ENUM_MAX {
        return Err(SearchError::TooLarge { n, max: ENUM_MAX });
    }
    let ps = pairs(n);
    let total: u64 = 1u64 << (2 * pair_count(n));
    let mut seen = std::collections::HashSet::new();
    Ok((0..total).filter_map(move |code| {
        let d = decode(n, &ps, code);
        if canonical_only {
            let form = crate::iso::canonical_form(&d).expect("n ≤ 5 is within exact range");
            if !seen.insert(form) {
                return None;
            }
        }
        Some(d)
    }))
}

/// Tallies carried through a scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ScanCounts {
    pub scanned: u64,
    pub pattern_free: u64,
    pub non_k_colorable: u64,
}

/// Result of an empirical profile search at fixed `n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ThresholdReport {
    pub pattern: PatternId,
    pub k: usize,
    pub n: usize,
    pub mode: SearchMode,
    /// Max δ⁺ among pattern-free, non-k-colorable digraphs found.
    pub best_delta_plus: Option<usize>,
    pub certificate: Option<Digraph>,
    pub counts: ScanCounts,
    /// True only for exhaustive mode: the maximum is over all digraphs.
    pub exact: bool,
}

/// Merge of two shard results: max δ⁺, ties to the smaller code.
struct ShardBest {
    delta: usize,
    code: u64,
}

fn scan_code(
    n: usize,
    ps: &[(usize, usize)],
    code: u64,
    pattern: &PatternId,
    k: usize,
) -> (ScanCounts, Option<ShardBest>) {
    let mut counts = ScanCounts {
        scanned: 1,
        ..Default::default()
    };
    let d = decode(n, ps, code);
    if patterns::contains_pattern(&d, pattern)
        .expect("profile patterns are within the size bound")
        .is_some()
    {
        return (counts, None);
    }
    counts.pattern_free = 1;
    if coloring::is_k_colorable(&d, k).is_some() {
        return (counts, None);
    }
    counts.non_k_colorable = 1;
    let delta = d.min_out_degree().unwrap_or(0);
    (counts, Some(ShardBest { delta, code }))
}

fn merge_best(a: Option<ShardBest>, b: Option<ShardBest>) -> Option<ShardBest> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.delta, std::cmp::Reverse(y.code)) > (x.delta, std::cmp::Reverse(x.code)) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Finite analogue of the chromatic profile at fixed `n`: the largest δ⁺
/// over pattern-free, non-k-colorable digraphs, with certificate.
///
/// Exhaustive mode scans every labelled digraph and is exact; random mode
/// samples codes from a seeded generator.
pub fn empirical_profile(
    pattern: &PatternId,
    k: usize,
    n: usize,
    mode: &SearchMode,
) -> Result<ThresholdReport, SearchError> {
    let ps = pairs(n);
    let (counts, best, exact) = match *mode {
        SearchMode::Exhaustive => {
            if n > ENUM_MAX {
                return Err(SearchError::TooLarge { n, max: ENUM_MAX });
            }
            let total: u64 = 1u64 << (2 * pair_count(n));
            let shard: u64 = 1 << 12;
            let nshards = total.div_ceil(shard);
            let (counts, best) = (0..nshards)
                .into_par_iter()
                .map(|s| {
                    let mut counts = ScanCounts::default();
                    let mut best: Option<ShardBest> = None;
                    for code in s * shard..((s + 1) * shard).min(total) {
                        let (c, b) = scan_code(n, &ps, code, pattern, k);
                        counts.scanned += c.scanned;
                        counts.pattern_free += c.pattern_free;
                        counts.non_k_colorable += c.non_k_colorable;
                        best = merge_best(best, b);
                    }
                    (counts, best)
                })
                .reduce(
                    || (ScanCounts::default(), None),
                    |(ca, ba), (cb, bb)| {
                        (
                            ScanCounts {
                                scanned: ca.scanned + cb.scanned,
                                pattern_free: ca.pattern_free + cb.pattern_free,
                                non_k_colorable: ca.non_k_colorable + cb.non_k_colorable,
                            },
                            merge_best(ba, bb),
                        )
                    },
                );
            (counts, best, true)
        }
        SearchMode::Random { seed, trials } => {
            let bits = 2 * pair_count(n);
            let mut counts = ScanCounts::default();
            let mut best: Option<ShardBest> = None;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let code = if bits >= 64 {
                    rng.gen::<u64>()
                } else {
                    rng.gen::<u64>() & ((1u64 << bits) - 1)
                };
                let (c, b) = scan_code(n, &ps, code, pattern, k);
                counts.scanned += c.scanned;
                counts.pattern_free += c.pattern_free;
                counts.non_k_colorable += c.non_k_colorable;
                best = merge_best(best, b);
            }
            (counts, best, false)
        }
        SearchMode::HillClimb { seed, iters } => {
            return hillclimb_extremal(pattern, k, n, seed, iters, &[]);
        }
    };
    let (best_delta_plus, certificate) = match best {
        None => (None, None),
        Some(b) => {
            let d = decode(n, &ps, b.code);
            reverify(&d, pattern, k, b.delta)?;
            (Some(b.delta), Some(d))
        }
    };
    Ok(ThresholdReport {
        pattern: pattern.clone(),
        k,
        n,
        mode: mode.clone(),
        best_delta_plus,
        certificate,
        counts,
        exact,
    })
}

/// Certificates are re-verified through the checker modules before
/// emission; failure is an internal invariant violation.
fn reverify(d: &Digraph, pattern: &PatternId, k: usize, delta: usize) -> Result<(), SearchError> {
    let free = patterns::contains_pattern(d, pattern)
        .map(|e| e.is_none())
        .unwrap_or(false);
    let uncolorable = coloring::is_k_colorable(d, k).is_none();
    let delta_ok = d.min_out_degree().unwrap_or(0) == delta;
    if free && uncolorable && delta_ok {
        Ok(())
    } else {
        Err(SearchError::Invariant(format!(
            "certificate re-verification failed (free={free}, uncolorable={uncolorable}, delta_ok={delta_ok})"
        )))
    }
}

/// The theorem implications the scanner can re-verify.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum TheoremId {
    /// T_r-free ∧ δ⁺·(3r−4) > (3r−7)·n ⇒ (r−1)-colorable.
    Aes { r: usize },
    /// 2δ⁺ ≥ n + ℓ − 2 ⇒ contains the directed ℓ-cycle.
    DirectedOddCycle { ell: usize },
    /// `which`-free ∧ 3δ⁺ > n ⇒ bipartite (ε-free finite reading).
    PentagonBipartite { which: PatternId },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub n: usize,
    pub mode: SearchMode,
    pub scanned: u64,
    pub hypothesis_count: u64,
    pub conclusion_failures: u64,
    pub counterexample: Option<Digraph>,
}

/// Hypothesis and conclusion of a theorem on one instance, in exact
/// integer arithmetic.
fn check_instance(d: &Digraph, theorem: &TheoremId) -> (bool, bool) {
    let n = d.n();
    if n == 0 {
        return (false, true);
    }
    let delta = d.min_out_degree().unwrap();
    match theorem {
        TheoremId::Aes { r } => {
            let hyp = delta * (3 * r - 4) > (3 * r - 7) * n
                && patterns::contains_transitive_tournament(d, *r).is_none();
            let concl = !hyp || coloring::is_k_colorable(d, r - 1).is_some();
            (hyp, concl)
        }
        TheoremId::DirectedOddCycle { ell } => {
            let hyp = 2 * delta >= n + ell - 2;
            let concl = !hyp
                || patterns::contains_pattern(d, &PatternId::DirectedCycle(*ell))
                    .map(|e| e.is_some())
                    .unwrap_or(false);
            (hyp, concl)
        }
        TheoremId::PentagonBipartite { which } => {
            let hyp = 3 * delta > n
                && patterns::contains_pattern(d, which)
                    .map(|e| e.is_none())
                    .unwrap_or(false);
            let concl = !hyp || coloring::is_k_colorable(d, 2).is_some();
            (hyp, concl)
        }
    }
}

/// Scans all (or sampled) digraphs at the given order, asserting the
/// theorem's conclusion on every instance meeting its hypothesis.
/// Counterexamples are re-verified before being reported.
pub fn verify_theorem(
    theorem: &TheoremId,
    n: usize,
    mode: &SearchMode,
) -> Result<TheoremCheck, SearchError> {
    let ps = pairs(n);
    let run = |codes: Vec<u64>| -> (u64, u64, u64, Option<u64>) {
        codes
            .into_par_iter()
            .map(|code| {
                let d = decode(n, &ps, code);
                let (hyp, concl) = check_instance(&d, theorem);
                (
                    1u64,
                    hyp as u64,
                    (hyp && !concl) as u64,
                    if hyp && !concl { Some(code) } else { None },
                )
            })
            .reduce(
                || (0, 0, 0, None),
                |a, b| {
                    let ce = match (a.3, b.3) {
                        (None, x) | (x, None) => x,
                        (Some(x), Some(y)) => Some(x.min(y)),
                    };
                    (a.0 + b.0, a.1 + b.1, a.2 + b.2, ce)
                },
            )
    };
    let (scanned, hypothesis_count, conclusion_failures, ce_code) = match *mode {
        SearchMode::Exhaustive => {
            if n > ENUM_MAX {
                return Err(SearchError::TooLarge { n, max: ENUM_MAX });
            }
            let total: u64 = 1u64 << (2 * pair_count(n));
            run((0..total).collect())
        }
        SearchMode::Random { seed, trials } => {
            let bits = 2 * pair_count(n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let codes: Vec<u64> = (0..trials)
                .map(|_| {
                    if bits >= 64 {
                        rng.gen::<u64>()
                    } else {
                        rng.gen::<u64>() & ((1u64 << bits) - 1)
                    }
                })
                .collect();
            run(codes)
        }
        SearchMode::HillClimb { .. } => {
            return Err(SearchError::Invariant(
                "hill climbing does not apply to theorem verification".into(),
            ));
        }
    };
    let counterexample = match ce_code {
        None => None,
        Some(code) => {
            let d = decode(n, &ps, code);
            let (hyp, concl) = check_instance(&d, theorem);
            if !hyp || concl {
                return Err(SearchError::Invariant(
                    "counterexample failed re-verification".into(),
                ));
            }
            Some(d)
        }
    };
    Ok(TheoremCheck {
        theorem: theorem.clone(),
        n,
        mode: mode.clone(),
        scanned,
        hypothesis_count,
        conclusion_failures,
        counterexample,
    })
}

/// Local search over arc-state flips maximizing δ⁺ subject to
/// pattern-freeness and non-k-colorability. Heuristic: never claims
/// exactness. Seeds restart the climb from known-good digraphs (padded or
/// rejected to order n); an infeasible start after all restarts yields an
/// empty report.
pub fn hillclimb_extremal(
    pattern: &PatternId,
    k: usize,
    n: usize,
    seed: u64,
    iters: u64,
    starts: &[Digraph],
) -> Result<ThresholdReport, SearchError> {
    if n > HILLCLIMB_MAX {
        return Err(SearchError::TooLarge {
            n,
            max: HILLCLIMB_MAX,
        });
    }
    let feasible = |d: &Digraph| {
        patterns::contains_pattern(d, pattern)
            .map(|e| e.is_none())
            .unwrap_or(false)
            && coloring::is_k_colorable(d, k).is_none()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Digraph> = starts
        .iter()
        .filter(|d| d.n() == n && feasible(d))
        .cloned()
        .collect();
    // A few random restarts alongside the provided seeds.
    for _ in 0..8 {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                match rng.gen_range(0..4) {
                    1 => d.add_arc(u, v).unwrap(),
                    2 => d.add_arc(v, u).unwrap(),
                    3 => {
                        d.add_arc(u, v).unwrap();
                        d.add_arc(v, u).unwrap();
                    }
                    _ => {}
                }
            }
        }
        if feasible(&d) {
            candidates.push(d);
        }
    }
    let mut counts = ScanCounts::default();
    let mut best: Option<(usize, Digraph)> = None;
    for mut current in candidates {
        let mut delta = current.min_out_degree().unwrap_or(0);
        for _ in 0..iters {
            counts.scanned += 1;
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            let old = (current.has_arc(u, v), current.has_arc(v, u));
            let new_state = rng.gen_range(0..4);
            current.remove_arc(u, v);
            current.remove_arc(v, u);
            if new_state & 1 == 1 {
                current.add_arc(u, v).unwrap();
            }
            if new_state & 2 == 2 {
                current.add_arc(v, u).unwrap();
            }
            let new_delta = current.min_out_degree().unwrap_or(0);
            if new_delta >= delta && feasible(&current) {
                counts.pattern_free += 1;
                counts.non_k_colorable += 1;
                delta = new_delta;
            } else {
                // Revert.
                current.remove_arc(u, v);
                current.remove_arc(v, u);
                if old.0 {
                    current.add_arc(u, v).unwrap();
                }
                if old.1 {
                    current.add_arc(v, u).unwrap();
                }
            }
        }
        if best.as_ref().is_none_or(|(b, _)| delta > *b) {
            best = Some((delta, current));
        }
    }
    let (best_delta_plus, certificate) = match best {
        None => (None, None),
        Some((delta, d)) => {
            reverify(&d, pattern, k, delta)?;
            (Some(delta), Some(d))
        }
    };
    Ok(ThresholdReport {
        pattern: pattern.clone(),
        k,
        n,
        mode: SearchMode::HillClimb { seed, iters },
        best_delta_plus,
        certificate,
        counts,
        exact: false,
    })
}
