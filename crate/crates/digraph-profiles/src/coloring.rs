//! Exact chromatic number, k-colorability and independence number of
//! underlying graphs, with witnesses attached.
//!
//! Exactness is non-negotiable here: the theorems assert exact χ values.
//! Colorings come from a saturation-degree branch-and-bound with a greedy
//! clique lower bound; independence from a complement-clique style search.
//! All tie-breaking is lowest-vertex-id-first so witnesses reproduce.

use serde::Serialize;

use crate::bits::VertexSet;
use crate::digraph::{Digraph, Graph, GraphError};

/// Proper vertex coloring of an underlying graph with classes `0..k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Coloring {
    pub k: usize,
    pub classes: Vec<usize>,
}

impl Coloring {
    /// Checks properness against the underlying graph of `d`.
    pub fn is_proper(&self, d: &Digraph) -> bool {
        if self.classes.len() != d.n() || self.classes.iter().any(|&c| c >= self.k.max(1)) {
            return self.classes.is_empty() && d.n() == 0;
        }
        d.underlying_graph()
            .edges()
            .all(|(u, v)| self.classes[u] != self.classes[v])
    }
}

/// Greedy clique through ascending vertex ids; a lower bound for χ.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut common = g.neighbors(start).clone();
        while let Some(v) = common.first() {
            clique.push(v);
            common.intersect_with(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// DSATUR-ordered branch and bound; returns a proper coloring with at most
/// `k` classes or proves none exists.
fn color_within(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(vec![]);
    }
    if k == 0 {
        return None;
    }

    struct State<'a> {
        g: &'a Graph,
        k: usize,
        classes: Vec<Option<usize>>,
        // forbidden[v] bitmask over colors (k ≤ 64 suffices here).
        forbidden: Vec<u64>,
        used: usize,
    }

    fn solve(s: &mut State) -> bool {
        // Most saturated uncolored vertex; ties by degree then lowest id.
        let pick = (0..s.g.n())
            .filter(|&v| s.classes[v].is_none())
            .max_by_key(|&v| {
                (
                    s.forbidden[v].count_ones(),
                    s.g.degree(v),
                    std::cmp::Reverse(v),
                )
            });
        let v = match pick {
            None => return true,
            Some(v) => v,
        };
        // Try existing colors ascending, then at most one fresh color.
        let limit = (s.used + 1).min(s.k);
        for c in 0..limit {
            if s.forbidden[v] >> c & 1 == 1 {
                continue;
            }
            s.classes[v] = Some(c);
            let saved: Vec<(usize, u64)> =
                s.g.neighbors(v)
                    .iter()
                    .map(|w| (w, s.forbidden[w]))
                    .collect();
            for &(w, _) in &saved {
                s.forbidden[w] |= 1 << c;
            }
            let prev_used = s.used;
            s.used = s.used.max(c + 1);
            if solve(s) {
                return true;
            }
            s.used = prev_used;
            for (w, mask) in saved {
                s.forbidden[w] = mask;
            }
            s.classes[v] = None;
        }
        false
    }

    let k = k.min(64);
    let mut s = State {
        g,
        k,
        classes: vec![None; n],
        forbidden: vec![0; n],
        used: 0,
    };
    if solve(&mut s) {
        Some(s.classes.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// Proper coloring of the underlying graph with at most `k` classes, or
/// exhaustive absence.
pub fn is_k_colorable(d: &Digraph, k: usize) -> Option<Coloring> {
    let g = d.underlying_graph();
    color_within(&g, k).map(|classes| Coloring { k, classes })
}

/// Exact chromatic number of the underlying graph, with witness.
pub fn chromatic_number(d: &Digraph) -> Result<(usize, Coloring), GraphError> {
    if d.n() == 0 {
        return Err(GraphError::Empty);
    }
    let g = d.underlying_graph();
    let lower = greedy_clique(&g).len().max(1);
    for k in lower..=d.n() {
        if let Some(classes) = color_within(&g, k) {
            let used = classes.iter().max().map_or(0, |&m| m + 1);
            debug_assert!(used <= k);
            let coloring = Coloring { k: used, classes };
            debug_assert!(coloring.is_proper(d));
            return Ok((used, coloring));
        }
    }
    unreachable!("n colors always suffice")
}

/// Maximum independent set of the underlying graph, with witness.
pub fn independence_number(d: &Digraph) -> Result<(usize, Vec<usize>), GraphError> {
    if d.n() == 0 {
        return Err(GraphError::Empty);
    }
    let g = d.underlying_graph();
    let n = g.n();

    fn grow(g: &Graph, candidates: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        match candidates.first() {
            None => {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            }
            Some(v) => {
                // Include v: drop v and its neighbors from the pool.
                let mut with_v = candidates.clone();
                with_v.remove(v);
                let pool = with_v.difference(g.neighbors(v));
                current.push(v);
                grow(g, pool, current, best);
                current.pop();
                // Exclude v.
                grow(g, with_v, current, best);
            }
        }
    }

    let mut best = Vec::new();
    let mut current = Vec::new();
    grow(&g, VertexSet::full(n), &mut current, &mut best);
    best.sort_unstable();
    debug_assert!(best
        .iter()
        .all(|&u| best.iter().all(|&v| u == v || !g.has_edge(u, v))));
    Ok((best.len(), best))
}

/// Bipartiteness verdict: a 2-coloring, or an odd-cycle witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Bipartiteness {
    Bipartite(Coloring),
    OddCycle(Vec<usize>),
}

pub fn is_bipartite(d: &Digraph) -> Bipartiteness {
    match is_k_colorable(d, 2) {
        Some(c) => Bipartiteness::Bipartite(c),
        None => {
            let og = crate::patterns::odd_girth(d);
            let cycle = og
                .witness_cycle
                .expect("non-2-colorable graphs contain an odd cycle");
            Bipartiteness::OddCycle(cycle)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Independent oracle: try every assignment in k^n.
    fn colorable_brute(d: &Digraph, k: usize) -> bool {
        let g = d.underlying_graph();
        let n = g.n();
        if n == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let total = k.pow(n as u32);
        'outer: for code in 0..total {
            let mut classes = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                classes.push(c % k);
                c /= k;
            }
            for (u, v) in g.edges() {
                if classes[u] == classes[v] {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn chromatic_examples() {
        let (chi, w) = chromatic_number(&c3()).unwrap();
        assert_eq!(chi, 3);
        assert!(w.is_proper(&c3()));

        let blow = c3().blowup(&[3, 3, 3]);
        let (chi, w) = chromatic_number(&blow).unwrap();
        assert_eq!(chi, 3);
        assert!(w.is_proper(&blow));

        assert!(is_k_colorable(&c3(), 2).is_none());
        assert!(is_k_colorable(&c3(), 3).is_some());
    }

    #[test]
    fn zero_colors_only_for_empty() {
        assert!(is_k_colorable(&Digraph::new(0), 0).is_some());
        assert!(is_k_colorable(&Digraph::new(1), 0).is_none());
        assert!(is_k_colorable(&Digraph::new(3), 1).is_some());
    }

    #[test]
    fn independence_examples() {
        let (a, w) = independence_number(&Digraph::new(7)).unwrap();
        assert_eq!(a, 7);
        assert_eq!(w.len(), 7);

        let k5 = Graph::complete(5).double_orientation();
        assert_eq!(independence_number(&k5).unwrap().0, 1);

        let blow = c3().blowup(&[2, 3, 4]);
        assert_eq!(independence_number(&blow).unwrap().0, 4);
    }

    #[test]
    fn bipartite_examples() {
        let even = Graph::cycle(6).double_orientation();
        match is_bipartite(&even) {
            Bipartiteness::Bipartite(c) => assert!(c.is_proper(&even)),
            other => panic!("expected bipartite, got {other:?}"),
        }
        let blow = c3().blowup(&[2, 2, 2]);
        match is_bipartite(&blow) {
            Bipartiteness::OddCycle(cycle) => {
                assert_eq!(cycle.len() % 2, 1);
                let g = blow.underlying_graph();
                for i in 0..cycle.len() {
                    assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn matches_brute_force_on_small_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let mut d = Digraph::new(n);
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            let (chi, w) = chromatic_number(&d).unwrap();
            assert!(w.is_proper(&d));
            assert!(colorable_brute(&d, chi));
            assert!(chi == 1 || !colorable_brute(&d, chi - 1));

            // χ ≥ n / α.
            let (alpha, _) = independence_number(&d).unwrap();
            assert!(chi * alpha >= n);
        }
    }
}
