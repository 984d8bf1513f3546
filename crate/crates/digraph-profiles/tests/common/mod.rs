//! Independent oracles for the integration suites.
//!
//! Everything here is written from first principles — plain loops over
//! arcs, tuples, and color assignments — so the library's answers are
//! checked against code that shares none of its machinery.

#![allow(dead_code)]

use digraph_profiles::Digraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Minimum out-degree recomputed from the arc list alone.
pub fn oracle_min_out_degree(d: &Digraph) -> usize {
    let mut out = vec![0usize; d.n()];
    for (u, _) in d.arcs() {
        out[u] += 1;
    }
    out.into_iter().min().unwrap_or(0)
}

/// Transitive-tournament membership by brute force over ordered tuples:
/// an ordered sequence v_1, …, v_r with an arc v_i → v_j for every i < j.
pub fn oracle_has_tr(d: &Digraph, r: usize) -> bool {
    fn extend(d: &Digraph, chain: &mut Vec<usize>, r: usize) -> bool {
        if chain.len() == r {
            return true;
        }
        for v in 0..d.n() {
            if chain.contains(&v) {
                continue;
            }
            if chain.iter().all(|&u| d.has_arc(u, v)) {
                chain.push(v);
                if extend(d, chain, r) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }
    extend(d, &mut Vec::new(), r)
}

/// Directed ℓ-cycle membership by brute force over ordered tuples.
pub fn oracle_has_directed_cycle(d: &Digraph, ell: usize) -> bool {
    fn extend(d: &Digraph, path: &mut Vec<usize>, ell: usize) -> bool {
        if path.len() == ell {
            return d.has_arc(*path.last().unwrap(), path[0]);
        }
        for v in 0..d.n() {
            if path.contains(&v) {
                continue;
            }
            if d.has_arc(*path.last().unwrap(), v) {
                path.push(v);
                if extend(d, path, ell) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    if ell > d.n() {
        return false;
    }
    for start in 0..d.n() {
        let mut path = vec![start];
        if extend(d, &mut path, ell) {
            return true;
        }
    }
    false
}

/// Subgraph containment by brute force over injective vertex maps, with no
/// candidate filtering: every pattern arc must land on a host arc.
pub fn oracle_contains(host: &Digraph, pattern: &Digraph) -> bool {
    let arcs: Vec<(usize, usize)> = pattern.arcs().collect();
    fn extend(host: &Digraph, arcs: &[(usize, usize)], p: usize, map: &mut Vec<usize>) -> bool {
        if map.len() == p {
            return true;
        }
        for v in 0..host.n() {
            if map.contains(&v) {
                continue;
            }
            map.push(v);
            let ok = arcs.iter().all(|&(a, b)| {
                if a < map.len() && b < map.len() {
                    host.has_arc(map[a], map[b])
                } else {
                    true
                }
            });
            if ok && extend(host, arcs, p, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    if pattern.n() > host.n() {
        return false;
    }
    extend(host, &arcs, pattern.n(), &mut Vec::new())
}

/// Proper-coloring check straight off the arc list: no arc inside a color.
pub fn oracle_proper(d: &Digraph, colors: &[usize]) -> bool {
    colors.len() == d.n() && d.arcs().all(|(u, v)| colors[u] != colors[v])
}

/// k-colorability by full enumeration of all k^n assignments (odometer).
/// Callers keep k^n small.
pub fn oracle_k_colorable(d: &Digraph, k: usize) -> bool {
    let n = d.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![0usize; n];
    loop {
        if oracle_proper(d, &colors) {
            return true;
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Validates an embedding by hand: right length, injective, in range, and
/// every pattern arc carried to a host arc.
pub fn oracle_embedding_valid(pattern: &Digraph, host: &Digraph, map: &[usize]) -> bool {
    if map.len() != pattern.n() {
        return false;
    }
    if map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] {
                return false;
            }
        }
    }
    pattern.arcs().all(|(a, b)| host.has_arc(map[a], map[b]))
}

/// Whether non-adjacency in the underlying graph is an equivalence
/// relation, i.e. the underlying graph is complete multipartite.
pub fn oracle_complete_multipartite(d: &Digraph) -> bool {
    let g = d.underlying_graph();
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u != v && v != w && u != w {
                    let uv = !g.has_edge(u, v);
                    let vw = !g.has_edge(v, w);
                    let uw = !g.has_edge(u, w);
                    if uv && vw && !uw {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A random digraph: each ordered pair carries an arc with probability `p`,
/// independently.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}
