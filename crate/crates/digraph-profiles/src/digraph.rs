//! Loop-free digraphs with anti-parallel arc pairs, and their undirected
//! shadows.
//!
//! Vertices are dense integer ids `0..n`. Both out- and in-adjacency are
//! kept, mirrored on every mutation, because the structural arguments this
//! crate implements constantly switch between `N⁺` and `N⁻`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::bits::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop arc ({0}, {0}) is not allowed")]
    LoopArc(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("operation requires a nonempty digraph")]
    Empty,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exact isomorphism is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Directed graph on `0..n`. No loops, no parallel duplicates;
/// anti-parallel pairs `u→v`, `v→u` are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    /// Arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            out: vec![VertexSet::empty(n); n],
            inn: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a digraph from an arc list. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopArc(u));
        }
        self.out[u].insert(v);
        self.inn[v].insert(u);
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.out[u].remove(v);
            self.inn[v].remove(u);
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// δ⁺: the minimum out-degree.
    pub fn min_out_degree(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(self.vertices().map(|v| self.out_degree(v)).min().unwrap())
    }

    pub fn arc_count(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).sum()
    }

    /// Arcs in lexicographic `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    /// Underlying graph: `{u,v}` is an edge iff either arc is present.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.arcs() {
            g.add_edge(u, v).expect("arcs are loop-free and in range");
        }
        g
    }

    /// Subdigraph induced by `s`, relabelled `0..s.len()`, together with the
    /// map from new ids back to the original ones. `s` keeps its given order.
    pub fn induced(&self, s: &[usize]) -> Result<(Digraph, Vec<usize>), GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let mut d = Digraph::new(s.len());
        for (i, &u) in s.iter().enumerate() {
            for (j, &v) in s.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    d.add_arc(i, j)?;
                }
            }
        }
        Ok((d, s.to_vec()))
    }

    /// Blowup: vertex `v` becomes an arcless class of `sizes[v]` clones, with
    /// all arcs from class `u` to class `v` whenever `u→v`. A size of 0
    /// deletes the class.
    pub fn blowup(&self, sizes: &[usize]) -> Digraph {
        assert_eq!(sizes.len(), self.n, "one size per vertex");
        let offsets: Vec<usize> = sizes
            .iter()
            .scan(0, |acc, &s| {
                let o = *acc;
                *acc += s;
                Some(o)
            })
            .collect();
        let total: usize = sizes.iter().sum();
        let mut d = Digraph::new(total);
        for (u, v) in self.arcs() {
            for i in 0..sizes[u] {
                for j in 0..sizes[v] {
                    d.add_arc(offsets[u] + i, offsets[v] + j)
                        .expect("clone ids are in range and classes are disjoint");
                }
            }
        }
        d
    }

    /// Mirror invariant: `u ∈ out[v] ⇔ v ∈ in[u]`. Exercised by tests after
    /// mutation-heavy operations.
    pub fn mirror_consistent(&self) -> bool {
        self.vertices().all(|u| {
            self.out[u].iter().all(|v| self.inn[v].contains(u))
                && self.inn[u].iter().all(|v| self.out[v].contains(u))
        })
    }
}

/// Undirected simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The cycle `C_n` on vertices `0..n` in order.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::OutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::LoopArc(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `{u, v}` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Replaces each edge by an anti-parallel arc pair.
    pub fn double_orientation(&self) -> Digraph {
        let mut d = Digraph::new(self.n);
        for (u, v) in self.edges() {
            d.add_arc(u, v).unwrap();
            d.add_arc(v, u).unwrap();
        }
        d
    }

    /// Blowup `G[sizes]`: classes are independent, complete bipartite
    /// between classes of adjacent originals. A size of 0 deletes the class.
    pub fn blowup(&self, sizes: &[usize]) -> Graph {
        assert_eq!(sizes.len(), self.n, "one size per vertex");
        let offsets: Vec<usize> = sizes
            .iter()
            .scan(0, |acc, &s| {
                let o = *acc;
                *acc += s;
                Some(o)
            })
            .collect();
        let total: usize = sizes.iter().sum();
        let mut g = Graph::new(total);
        for (u, v) in self.edges() {
            for i in 0..sizes[u] {
                for j in 0..sizes[v] {
                    g.add_edge(offsets[u] + i, offsets[v] + j).unwrap();
                }
            }
        }
        g
    }

    /// Join `G ∨ H`: disjoint union plus all edges between the parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).unwrap();
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v).unwrap();
            }
        }
        g
    }
}

/// Injective vertex map witnessing that a pattern occurs as a subgraph of a
/// host; `map[i]` is the host vertex playing pattern vertex `i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern_size: usize,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding {
            pattern_size: map.len(),
            map,
        }
    }

    /// Checks injectivity and that every pattern arc is carried to a host arc.
    pub fn is_valid(&self, pattern: &Digraph, host: &Digraph) -> bool {
        if self.map.len() != pattern.n() || self.pattern_size != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..self.map.len() {
            for j in 0..self.map.len() {
                if i != j && self.map[i] == self.map[j] {
                    return false;
                }
            }
        }
        pattern
            .arcs()
            .all(|(i, j)| host.has_arc(self.map[i], self.map[j]))
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DigraphRepr {
            n: self.n,
            arcs: self.arcs().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DigraphRepr::deserialize(deserializer)?;
        Digraph::from_arcs(repr.n, &repr.arcs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn directed_triangle() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn make_digraph_examples() {
        let c3 = directed_triangle();
        assert_eq!(c3.arc_count(), 3);
        assert!(c3.has_arc(2, 0));

        let pair = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(pair.has_arc(0, 1) && pair.has_arc(1, 0));

        let single = Digraph::from_arcs(1, &[]).unwrap();
        assert_eq!(single.min_out_degree().unwrap(), 0);
    }

    #[test]
    fn make_digraph_rejects_loops_and_range() {
        assert_eq!(
            Digraph::from_arcs(2, &[(1, 1)]),
            Err(GraphError::LoopArc(1))
        );
        assert_eq!(
            Digraph::from_arcs(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn min_out_degree_examples() {
        assert_eq!(directed_triangle().min_out_degree().unwrap(), 1);
        let k4 = Graph::complete(4).double_orientation();
        assert_eq!(k4.min_out_degree().unwrap(), 3);
        assert_eq!(Digraph::new(0).min_out_degree(), Err(GraphError::Empty));
    }

    #[test]
    fn underlying_graph_examples() {
        let g = directed_triangle().underlying_graph();
        assert_eq!(g.edge_count(), 3);
        let pair = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(pair.underlying_graph().edge_count(), 1);
    }

    #[test]
    fn double_orientation_examples() {
        let d = Graph::complete(3).double_orientation();
        assert_eq!(d.arc_count(), 6);
        let p2 = Graph::from_edges(2, &[(0, 1)])
            .unwrap()
            .double_orientation();
        assert!(p2.has_arc(0, 1) && p2.has_arc(1, 0));
        assert_eq!(Graph::cycle(5).double_orientation().arc_count(), 10);
    }

    #[test]
    fn blowup_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.blowup(&[1; 5]), c5);
        let b = c5.blowup(&[2; 5]);
        assert_eq!(b.n(), 10);
        assert!((0..10).all(|v| b.degree(v) == 4));
        let k1 = Graph::new(1);
        let empty5 = k1.blowup(&[5]);
        assert_eq!(empty5.n(), 5);
        assert_eq!(empty5.edge_count(), 0);
    }

    #[test]
    fn blowup_digraph_examples() {
        let c3 = directed_triangle();
        assert_eq!(c3.blowup(&[1, 1, 1]), c3);
        let b = c3.blowup(&[3, 3, 3]);
        assert_eq!(b.min_out_degree().unwrap(), 3);
        let b = c3.blowup(&[4, 3, 3]);
        assert_eq!(b.min_out_degree().unwrap(), 3);
        assert!(b.mirror_consistent());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::new(1);
        let k2 = k1.join(&k1);
        assert_eq!(k2.edge_count(), 1);
        let w5 = Graph::cycle(5).join(&k1);
        assert_eq!(w5.degree(5), 5);
        assert!((0..5).all(|v| w5.degree(v) == 3));
    }

    #[test]
    fn induced_examples() {
        let c3 = directed_triangle();
        let (whole, map) = c3.induced(&[0, 1, 2]).unwrap();
        assert_eq!(whole, c3);
        assert_eq!(map, vec![0, 1, 2]);
        let (arc, _) = c3.induced(&[0, 1]).unwrap();
        assert_eq!(arc.arc_count(), 1);
        assert!(arc.has_arc(0, 1));
        assert!(c3.induced(&[0, 7]).is_err());
    }

    #[test]
    fn degree_sums_match_arc_count() {
        let d = directed_triangle().blowup(&[2, 1, 3]);
        let out: usize = d.vertices().map(|v| d.out_degree(v)).sum();
        let inn: usize = d.vertices().map(|v| d.in_degree(v)).sum();
        assert_eq!(out, d.arc_count());
        assert_eq!(inn, d.arc_count());
    }
}
