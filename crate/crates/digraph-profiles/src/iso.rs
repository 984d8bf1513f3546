//! Exact isomorphism for small digraphs by permutation minimization.
//!
//! The canonical code of an `n`-vertex digraph (`n ≤ 8`) is the minimum,
//! over all vertex permutations, of its adjacency matrix read row-major as
//! an `n²`-bit integer. Two digraphs of equal order are isomorphic iff their
//! codes agree. Beyond 8 vertices only an invariant hash is offered, good
//! for bucketing during enumeration but never for equality claims.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::digraph::{Digraph, GraphError};

pub const EXACT_MAX: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub arc_code: u64,
}

fn code_under(d: &Digraph, perm: &[usize]) -> u64 {
    let n = d.n();
    let mut code = 0u64;
    for (u, v) in d.arcs() {
        code |= 1 << (perm[u] * n + perm[v]);
    }
    code
}

/// Permutation-invariant encoding; exact for `n ≤ 8`.
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm, GraphError> {
    let n = d.n();
    if n > EXACT_MAX {
        return Err(GraphError::TooLarge { n, max: EXACT_MAX });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code_under(d, &perm);
    // Heap's algorithm over all n! permutations.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code_under(d, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm { n, arc_code: best })
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool, GraphError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Isomorphism-invariant hash for digraphs of any size: sorted
/// (out-degree, in-degree) pairs plus the directed-triangle count. Collisions
/// are possible; use only for bucketing.
pub fn invariant_hash(d: &Digraph) -> u64 {
    let mut degrees: Vec<(usize, usize)> = d
        .vertices()
        .map(|v| (d.out_degree(v), d.in_degree(v)))
        .collect();
    degrees.sort_unstable();
    let mut triangles = 0usize;
    for u in d.vertices() {
        for v in d.out_neighbors(u).iter() {
            triangles += d.out_neighbors(v).intersection_len(d.in_neighbors(u));
        }
    }
    let mut h = DefaultHasher::new();
    d.n().hash(&mut h);
    degrees.hash(&mut h);
    triangles.hash(&mut h);
    h.finish()
}
