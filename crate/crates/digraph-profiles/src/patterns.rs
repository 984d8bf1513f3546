//! Containment of the forbidden patterns: transitive tournaments, their
//! blowups, directed cycles, the four pentagon orientations, and arbitrary
//! small custom patterns. Also odd girth and digraph homomorphisms.
//!
//! Containment is subgraph containment throughout: extra host arcs,
//! including anti-parallel partners, never block an embedding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::VertexSet;
use crate::digraph::{Digraph, Embedding};

/// Search cost bound for generic patterns.
pub const PATTERN_MAX: usize = 8;
/// Homomorphism targets are capped at this order.
pub const HOM_TARGET_MAX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern on {n} vertices exceeds the supported bound {max}")]
    PatternTooLarge { n: usize, max: usize },
    #[error("homomorphism target on {n} vertices exceeds the supported bound {max}")]
    TargetTooLarge { n: usize, max: usize },
    #[error("input is not an oriented 5-cycle: {0}")]
    NotAnOrientedPentagon(String),
    #[error("empty path")]
    EmptyPath,
    #[error("bad pattern syntax {0:?}")]
    Syntax(String),
}

/// Identifier for the patterns the theorems forbid.
///
/// The four pentagon orientations are distinguished by the multiset of
/// maximal directed-block lengths around the cycle: `{5}`, `{4,1}`, `{3,2}`
/// and `{2,1,1,1}` respectively.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum PatternId {
    TransitiveTournament(usize),
    TransitiveBlowup(usize, usize),
    DirectedCycle(usize),
    C5Arrow,
    C5Prime,
    C5DoublePrime,
    C5TriplePrime,
    Custom(Digraph),
}

impl PatternId {
    /// A canonical labelled copy of the pattern.
    pub fn digraph(&self) -> Digraph {
        match self {
            PatternId::TransitiveTournament(r) => transitive_tournament(*r),
            PatternId::TransitiveBlowup(r, t) => transitive_tournament(*r).blowup(&vec![*t; *r]),
            PatternId::DirectedCycle(k) => {
                let arcs: Vec<(usize, usize)> = (0..*k).map(|i| (i, (i + 1) % k)).collect();
                Digraph::from_arcs(*k, &arcs).unwrap()
            }
            // Pentagon arc lists follow the cycle 0-4-3-2-1-0.
            PatternId::C5Arrow => {
                Digraph::from_arcs(5, &[(0, 4), (4, 3), (3, 2), (2, 1), (1, 0)]).unwrap()
            }
            PatternId::C5Prime => {
                Digraph::from_arcs(5, &[(0, 4), (4, 3), (3, 2), (2, 1), (0, 1)]).unwrap()
            }
            PatternId::C5DoublePrime => {
                Digraph::from_arcs(5, &[(0, 4), (4, 3), (3, 2), (1, 2), (0, 1)]).unwrap()
            }
            PatternId::C5TriplePrime => {
                Digraph::from_arcs(5, &[(0, 4), (4, 3), (2, 3), (2, 1), (0, 1)]).unwrap()
            }
            PatternId::Custom(d) => d.clone(),
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::TransitiveTournament(r) => write!(f, "T{r}"),
            PatternId::TransitiveBlowup(r, t) => write!(f, "T{r}x{t}"),
            PatternId::DirectedCycle(k) => write!(f, "Ck{k}"),
            PatternId::C5Arrow => write!(f, "C5->"),
            PatternId::C5Prime => write!(f, "C5'"),
            PatternId::C5DoublePrime => write!(f, "C5''"),
            PatternId::C5TriplePrime => write!(f, "C5'''"),
            PatternId::Custom(_) => write!(f, "custom"),
        }
    }
}

impl FromStr for PatternId {
    type Err = PatternError;

    /// CLI syntax: `T3`, `T4x2`, `Ck5`, `C5'`, `C5''`, `C5'''`. Custom
    /// patterns (`custom:<path>`) are resolved by the caller, which owns
    /// file access.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PatternError::Syntax(s.to_string());
        match s {
            "C5->" => return Ok(PatternId::C5Arrow),
            "C5'" => return Ok(PatternId::C5Prime),
            "C5''" => return Ok(PatternId::C5DoublePrime),
            "C5'''" => return Ok(PatternId::C5TriplePrime),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("Ck") {
            let k: usize = rest.parse().map_err(|_| err())?;
            if k < 2 {
                return Err(err());
            }
            return Ok(PatternId::DirectedCycle(k));
        }
        if let Some(rest) = s.strip_prefix('T') {
            if let Some((r, t)) = rest.split_once('x') {
                let r: usize = r.parse().map_err(|_| err())?;
                let t: usize = t.parse().map_err(|_| err())?;
                if r == 0 || t == 0 {
                    return Err(err());
                }
                return Ok(PatternId::TransitiveBlowup(r, t));
            }
            let r: usize = rest.parse().map_err(|_| err())?;
            if r == 0 {
                return Err(err());
            }
            return Ok(PatternId::TransitiveTournament(r));
        }
        Err(err())
    }
}

/// T_r on vertices `0..r` with arcs `i→j` for `i < j`.
pub fn transitive_tournament(r: usize) -> Digraph {
    let mut d = Digraph::new(r);
    for i in 0..r {
        for j in i + 1..r {
            d.add_arc(i, j).unwrap();
        }
    }
    d
}

/// Searches for a dominance chain `v_1, …, v_r` with `v_i → v_j` for all
/// `i < j`. Absence is exhaustive.
///
/// Depth-first over chains: extending by `v` intersects the candidate set
/// with `N⁺(v)`, so only vertices dominated by the whole chain survive.
/// Candidates are tried in descending out-degree order (ties by id).
pub fn contains_transitive_tournament(d: &Digraph, r: usize) -> Option<Embedding> {
    assert!(r >= 1, "r must be positive");
    let n = d.n();
    if r > n {
        return None;
    }
    let mut order: Vec<usize> = d.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(d.out_degree(v)), v));

    fn extend(
        d: &Digraph,
        order: &[usize],
        candidates: &VertexSet,
        chain: &mut Vec<usize>,
        r: usize,
    ) -> bool {
        if chain.len() == r {
            return true;
        }
        if candidates.len() + chain.len() < r {
            return false;
        }
        for &v in order.iter().filter(|&&v| candidates.contains(v)) {
            chain.push(v);
            let next = candidates.intersection(d.out_neighbors(v));
            if extend(d, order, &next, chain, r) {
                return true;
            }
            chain.pop();
        }
        false
    }

    let mut chain = Vec::with_capacity(r);
    let all = VertexSet::full(n);
    if extend(d, &order, &all, &mut chain, r) {
        Some(Embedding::new(chain))
    } else {
        None
    }
}

/// Order pattern vertices most-constrained-first: start from the vertex of
/// highest total degree, then repeatedly pick the vertex with the most
/// already-placed neighbors.
fn pattern_order(p: &Digraph) -> Vec<usize> {
    let n = p.n();
    let total = |v: usize| p.out_degree(v) + p.in_degree(v);
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order
                    .iter()
                    .filter(|&&u| p.has_arc(u, v) || p.has_arc(v, u))
                    .count();
                (linked, total(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Generic subgraph search for patterns of at most [`PATTERN_MAX`] vertices.
pub fn contains_pattern(
    d: &Digraph,
    pattern: &PatternId,
) -> Result<Option<Embedding>, PatternError> {
    let p = pattern.digraph();
    if p.n() > PATTERN_MAX {
        return Err(PatternError::PatternTooLarge {
            n: p.n(),
            max: PATTERN_MAX,
        });
    }
    Ok(find_embedding(d, &p))
}

/// Backtracking embedding search; host vertices are tried in ascending id so
/// the first embedding found is deterministic.
pub(crate) fn find_embedding(host: &Digraph, p: &Digraph) -> Option<Embedding> {
    let k = p.n();
    if k == 0 {
        return Some(Embedding::new(vec![]));
    }
    if k > host.n() {
        return None;
    }
    let order = pattern_order(p);
    let mut assigned: Vec<Option<usize>> = vec![None; k];
    let mut used = VertexSet::empty(host.n());

    fn place(
        host: &Digraph,
        p: &Digraph,
        order: &[usize],
        depth: usize,
        assigned: &mut Vec<Option<usize>>,
        used: &mut VertexSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        // Candidates must respect every arc to already-placed pattern vertices.
        let mut candidates = VertexSet::full(host.n());
        for &pu in &order[..depth] {
            let hu = assigned[pu].unwrap();
            if p.has_arc(pu, pv) {
                candidates.intersect_with(host.out_neighbors(hu));
            }
            if p.has_arc(pv, pu) {
                candidates.intersect_with(host.in_neighbors(hu));
            }
        }
        for hv in candidates.iter() {
            if used.contains(hv) {
                continue;
            }
            assigned[pv] = Some(hv);
            used.insert(hv);
            if place(host, p, order, depth + 1, assigned, used) {
                return true;
            }
            used.remove(hv);
            assigned[pv] = None;
        }
        false
    }

    if place(host, p, &order, 0, &mut assigned, &mut used) {
        let map = (0..k).map(|i| assigned[i].unwrap()).collect();
        let e = Embedding::new(map);
        debug_assert!(e.is_valid(p, host));
        Some(e)
    } else {
        None
    }
}

/// Odd girth of the underlying graph: length and witness of a shortest odd
/// cycle, or `None` when bipartite.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OddGirthResult {
    pub value: Option<usize>,
    pub witness_cycle: Option<Vec<usize>>,
}

/// Breadth-first search on the bipartite double cover from each vertex; the
/// shortest odd closed walk overall is necessarily a simple cycle.
pub fn odd_girth(d: &Digraph) -> OddGirthResult {
    let g = d.underlying_graph();
    let n = g.n();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for start in 0..n {
        // State (v, parity); dist and parent over 2n states.
        let idx = |v: usize, p: usize| 2 * v + p;
        let mut dist = vec![usize::MAX; 2 * n];
        let mut parent = vec![usize::MAX; 2 * n];
        let mut queue = std::collections::VecDeque::new();
        dist[idx(start, 0)] = 0;
        queue.push_back(idx(start, 0));
        while let Some(s) = queue.pop_front() {
            let (v, p) = (s / 2, s % 2);
            if let Some((b, _)) = &best {
                if dist[s] + 1 >= *b {
                    continue;
                }
            }
            for w in g.neighbors(v).iter() {
                let t = idx(w, 1 - p);
                if dist[t] == usize::MAX {
                    dist[t] = dist[s] + 1;
                    parent[t] = s;
                    queue.push_back(t);
                }
            }
        }
        let odd = idx(start, 1);
        if dist[odd] != usize::MAX && best.as_ref().is_none_or(|(b, _)| dist[odd] < *b) {
            let mut walk = Vec::new();
            let mut s = odd;
            while s != usize::MAX {
                walk.push(s / 2);
                s = parent[s];
            }
            walk.pop(); // drop the duplicated start
            walk.reverse();
            best = Some((dist[odd], walk));
        }
    }
    match best {
        None => OddGirthResult {
            value: None,
            witness_cycle: None,
        },
        Some((len, cycle)) => {
            debug_assert!(len % 2 == 1);
            debug_assert_eq!(cycle.len(), len);
            OddGirthResult {
                value: Some(len),
                witness_cycle: Some(cycle),
            }
        }
    }
}

/// Levels a forward/backward direction sequence onto a directed path.
/// `directions[i]` is `true` when the arc goes `v_i → v_{i+1}`.
///
/// Levels obey `level(v_{i+1}) = level(v_i) ± 1` and are shifted so the
/// minimum is 0; the target path has `t = max level + 1 ≤ k` vertices.
pub fn path_homomorphism_to_directed_path(
    directions: &[bool],
) -> Result<(usize, Vec<usize>), PatternError> {
    if directions.is_empty() {
        return Err(PatternError::EmptyPath);
    }
    let mut levels = vec![0i64];
    for &forward in directions {
        let last = *levels.last().unwrap();
        levels.push(if forward { last + 1 } else { last - 1 });
    }
    let min = *levels.iter().min().unwrap();
    let shifted: Vec<usize> = levels.iter().map(|&l| (l - min) as usize).collect();
    let t = shifted.iter().max().unwrap() + 1;
    debug_assert!(t <= directions.len() + 1);
    Ok((t, shifted))
}

/// Backtracking with forward checking over candidate sets; exhaustive for
/// targets of at most [`HOM_TARGET_MAX`] vertices.
pub fn has_homomorphism(d: &Digraph, h: &Digraph) -> Result<Option<Vec<usize>>, PatternError> {
    if h.n() > HOM_TARGET_MAX {
        return Err(PatternError::TargetTooLarge {
            n: h.n(),
            max: HOM_TARGET_MAX,
        });
    }
    if d.n() == 0 {
        return Ok(Some(vec![]));
    }
    if h.n() == 0 {
        return Ok(None);
    }
    let n = d.n();
    let hn = h.n();
    let full = (1u64 << hn) - 1;
    let candidates = vec![full; n];

    fn assign(
        d: &Digraph,
        h: &Digraph,
        v: usize,
        candidates: &[u64],
        image: &mut Vec<usize>,
    ) -> bool {
        if v == d.n() {
            return true;
        }
        let mut cands = candidates[v];
        while cands != 0 {
            let target = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            // Forward-check against later vertices.
            let mut next: Vec<u64> = candidates.to_vec();
            let mut feasible = true;
            #[allow(clippy::needless_range_loop)]
            for w in v + 1..d.n() {
                let mut mask = next[w];
                if d.has_arc(v, w) {
                    let mut allowed = 0u64;
                    for x in h.out_neighbors(target).iter() {
                        allowed |= 1 << x;
                    }
                    mask &= allowed;
                }
                if d.has_arc(w, v) {
                    let mut allowed = 0u64;
                    for x in h.in_neighbors(target).iter() {
                        allowed |= 1 << x;
                    }
                    mask &= allowed;
                }
                if mask == 0 {
                    feasible = false;
                    break;
                }
                next[w] = mask;
            }
            if feasible {
                image.push(target);
                if assign(d, h, v + 1, &next, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }

    // Propagate arc constraints between already-fixed nothing yet; the
    // search itself does the checking.
    let mut image = Vec::with_capacity(n);
    if assign(d, h, 0, &candidates, &mut image) {
        debug_assert!(d.arcs().all(|(u, v)| h.has_arc(image[u], image[v])));
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

/// Classifies an orientation of the 5-cycle by its multiset of maximal
/// directed-block lengths.
pub fn classify_c5_orientation(c: &Digraph) -> Result<PatternId, PatternError> {
    let shape_err = |msg: &str| PatternError::NotAnOrientedPentagon(msg.to_string());
    if c.n() != 5 {
        return Err(shape_err("expected 5 vertices"));
    }
    if c.arc_count() != 5 {
        return Err(shape_err("expected 5 arcs"));
    }
    let g = c.underlying_graph();
    if g.edge_count() != 5 || (0..5).any(|v| g.degree(v) != 2) {
        return Err(shape_err("underlying graph is not a 5-cycle"));
    }
    // Walk the cycle from vertex 0.
    let mut cycle = vec![0usize];
    let mut prev = usize::MAX;
    for _ in 0..4 {
        let cur = *cycle.last().unwrap();
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&w| w != prev)
            .ok_or_else(|| shape_err("disconnected"))?;
        prev = cur;
        cycle.push(next);
    }
    if g.neighbors(cycle[4]).iter().all(|w| w != cycle[0]) {
        return Err(shape_err("not a single 5-cycle"));
    }
    // Direction bits along the traversal, circular.
    let dirs: Vec<bool> = (0..5)
        .map(|i| c.has_arc(cycle[i], cycle[(i + 1) % 5]))
        .collect();
    let mut blocks = circular_runs(&dirs);
    blocks.sort_unstable();
    match blocks.as_slice() {
        [5] => Ok(PatternId::C5Arrow),
        [1, 4] => Ok(PatternId::C5Prime),
        [2, 3] => Ok(PatternId::C5DoublePrime),
        [1, 1, 1, 2] => Ok(PatternId::C5TriplePrime),
        _ => unreachable!("5 circular bits always split into one of four multisets"),
    }
}

/// Lengths of maximal runs of equal values, treating the slice as circular.
fn circular_runs(bits: &[bool]) -> Vec<usize> {
    let k = bits.len();
    if bits.iter().all(|&b| b == bits[0]) {
        return vec![k];
    }
    // Start at a run boundary.
    let start = (0..k).find(|&i| bits[i] != bits[(i + k - 1) % k]).unwrap();
    let mut runs = Vec::new();
    let mut len = 0;
    for i in 0..k {
        let cur = bits[(start + i) % k];
        let prevb = bits[(start + i + k - 1) % k];
        if i > 0 && cur == prevb {
            len += 1;
        } else {
            if i > 0 {
                runs.push(len);
            }
            len = 1;
        }
    }
    runs.push(len);
    runs
}
