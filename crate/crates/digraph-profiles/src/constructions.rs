//! Generators for the named extremal digraphs, each with a documented
//! vertex labelling and a self-check triple (δ⁺, χ, forbidden patterns)
//! that the checker modules verify rather than trust.

use serde::Serialize;
use thiserror::Error;

use crate::coloring;
use crate::digraph::{Digraph, Graph};
use crate::patterns::{self, PatternId};

pub use crate::patterns::transitive_tournament;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("family requires n ≥ {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("n = {n} must be divisible by {modulus}")]
    Divisibility { n: usize, modulus: usize },
    #[error("parameter out of range: {0}")]
    Parameter(String),
}

/// A_n: apex vertex 0 dominates everything; vertices `1..n` form a
/// double-oriented balanced complete bipartite graph, smaller side first
/// (vertices `1..1+⌊(n−1)/2⌋`).
///
/// The apex has in-degree 0, so no directed cycle passes through it, and
/// the rest has no directed odd cycle: A_n is C⃗_{2ℓ+1}-free for every ℓ.
pub fn a_n(n: usize) -> Result<Digraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall { n, min: 3 });
    }
    let small = (n - 1) / 2;
    let mut d = Digraph::new(n);
    for v in 1..n {
        d.add_arc(0, v).unwrap();
    }
    for u in 1..=small {
        for v in small + 1..n {
            d.add_arc(u, v).unwrap();
            d.add_arc(v, u).unwrap();
        }
    }
    Ok(d)
}

/// B_n: vertices 0 = u, 1 = v, then the parts X (`⌈(n−2)/3⌉`), Y
/// (`⌊(n−2)/3⌋`) and Z (the rest) in id order. Arcs: u→v; u,v→X; X→Y
/// complete one-directional; Y↔Z anti-parallel complete.
pub fn b_n(n: usize) -> Result<Digraph, ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::TooSmall { n, min: 5 });
    }
    let x = (n - 2).div_ceil(3);
    let y = (n - 2) / 3;
    let x_range = 2..2 + x;
    let y_range = 2 + x..2 + x + y;
    let z_range = 2 + x + y..n;
    let mut d = Digraph::new(n);
    d.add_arc(0, 1).unwrap();
    for xv in x_range.clone() {
        d.add_arc(0, xv).unwrap();
        d.add_arc(1, xv).unwrap();
    }
    for xv in x_range {
        for yv in y_range.clone() {
            d.add_arc(xv, yv).unwrap();
        }
    }
    for yv in y_range {
        for zv in z_range.clone() {
            d.add_arc(yv, zv).unwrap();
            d.add_arc(zv, yv).unwrap();
        }
    }
    Ok(d)
}

/// Blowup of C⃗3 with parts `(⌈n/3⌉, ⌊n/3⌋, n − n₁ − n₂)`.
pub fn c3_blowup_n(n: usize) -> Result<Digraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall { n, min: 3 });
    }
    let n1 = n.div_ceil(3);
    let n2 = n / 3;
    let n3 = n - n1 - n2;
    let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    Ok(c3.blowup(&[n1, n2, n3]))
}

/// Underlying graph of the extremal example: `C_5[m]` for r = 3, and
/// `C_5[m] ∨ K_{r−3}[3m]` for r ≥ 4, with the part size `m` given.
fn aes_underlying(r: usize, m: usize) -> Graph {
    let pentagon = Graph::cycle(5).blowup(&[m; 5]);
    if r == 3 {
        pentagon
    } else {
        let clique_part = Graph::complete(r - 3).blowup(&vec![3 * m; r - 3]);
        pentagon.join(&clique_part)
    }
}

/// Double orientation of the extremal example. Requires exact divisibility
/// (n by 5 for r = 3, by 3r−4 for r ≥ 4) so that δ⁺ = (3r−7)n/(3r−4)
/// holds as an equality.
pub fn extremal_aes(n: usize, r: usize) -> Result<Digraph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::Parameter(format!("r = {r}, need r ≥ 3")));
    }
    let modulus = if r == 3 { 5 } else { 3 * r - 4 };
    if n == 0 || !n.is_multiple_of(modulus) {
        return Err(ConstructionError::Divisibility { n, modulus });
    }
    let m = if r == 3 { n / 5 } else { n / (3 * r - 4) };
    Ok(aes_underlying(r, m).double_orientation())
}

/// Relaxed variant for arbitrary n: part sizes are floored, so no equality
/// self-check applies; useful only for threshold plots.
pub fn extremal_aes_relaxed(n: usize, r: usize) -> Result<Digraph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::Parameter(format!("r = {r}, need r ≥ 3")));
    }
    let modulus = if r == 3 { 5 } else { 3 * r - 4 };
    let m = n / modulus;
    if m == 0 {
        return Err(ConstructionError::TooSmall { n, min: modulus });
    }
    Ok(aes_underlying(r, m).double_orientation())
}

/// The 5-wheel-like digraph W_{r,t} on `2(r−2)−t+3` vertices.
///
/// Labelling: `0..t` are the shared tournament vertices, `t..r−2` private
/// to Q₁, `r−2..2(r−2)−t` private to Q₂; then v, w₁, w₂ in that order.
/// Orientation: each Qᵢ is ordered by vertex id; v dominates all of
/// Q₁ ∪ Q₂; each Qᵢ dominates wᵢ; w₁ → w₂.
pub fn wheel_like(r: usize, t: usize) -> Result<Digraph, ConstructionError> {
    if r < 3 {
        return Err(ConstructionError::Parameter(format!("r = {r}, need r ≥ 3")));
    }
    if t > r - 2 {
        return Err(ConstructionError::Parameter(format!(
            "t = {t} out of range 0..={}",
            r - 2
        )));
    }
    let q = r - 2;
    let n = 2 * q - t + 3;
    let v = 2 * q - t;
    let (w1, w2) = (v + 1, v + 2);
    let q1: Vec<usize> = (0..q).collect();
    let q2: Vec<usize> = (0..t).chain(q..2 * q - t).collect();
    let mut d = Digraph::new(n);
    for qi in [&q1, &q2] {
        for (i, &a) in qi.iter().enumerate() {
            for &b in &qi[i + 1..] {
                d.add_arc(a, b).unwrap();
            }
        }
    }
    for &a in q1.iter().chain(&q2) {
        d.add_arc(v, a).unwrap();
    }
    for &a in &q1 {
        d.add_arc(a, w1).unwrap();
    }
    for &a in &q2 {
        d.add_arc(a, w2).unwrap();
    }
    d.add_arc(w1, w2).unwrap();
    Ok(d)
}

/// Positions of the named roles in [`wheel_like`]'s labelling.
pub fn wheel_like_roles(r: usize, t: usize) -> (Vec<usize>, Vec<usize>, usize, usize, usize) {
    let q = r - 2;
    let v = 2 * q - t;
    let q1 = (0..q).collect();
    let q2 = (0..t).chain(q..2 * q - t).collect();
    (q1, q2, v, v + 1, v + 2)
}

/// Blowup of T_r with all classes of size t.
pub fn tr_blowup(r: usize, t: usize) -> Digraph {
    transitive_tournament(r).blowup(&vec![t; r])
}

/// Canonical labelled copy of a pentagon orientation (or any pattern).
pub fn c5_pattern(which: &PatternId) -> Digraph {
    which.digraph()
}

/// The triangle-free remark digraph: parts A, B, C with |A| = (1/5−2ε)n
/// and |B| = |C| = (2/5+ε)n for the exact rational ε = num/den; all arcs
/// A→B∪C, plus anti-parallel arcs between B and C. Vertices are A, B, C
/// in id order.
pub fn remark_construction(
    n: usize,
    eps_num: i64,
    eps_den: u64,
) -> Result<Digraph, ConstructionError> {
    if eps_den == 0 {
        return Err(ConstructionError::Parameter("ε denominator is zero".into()));
    }
    let (n_i, den) = (n as i64, eps_den as i64);
    // |A| = n(den − 10·num) / (5·den); |B| = |C| = n(2·den + 5·num) / (5·den).
    let part = |numer: i64, label: &str| -> Result<usize, ConstructionError> {
        if numer <= 0 || numer % (5 * den) != 0 {
            return Err(ConstructionError::Parameter(format!(
                "part {label} has non-positive or non-integral size {numer}/{}",
                5 * den
            )));
        }
        Ok((numer / (5 * den)) as usize)
    };
    let a = part(n_i * (den - 10 * eps_num), "A")?;
    let b = part(n_i * (2 * den + 5 * eps_num), "B")?;
    if a + 2 * b != n {
        return Err(ConstructionError::Parameter(format!(
            "parts {a} + {b} + {b} do not cover n = {n}"
        )));
    }
    let mut d = Digraph::new(n);
    for av in 0..a {
        for other in a..n {
            d.add_arc(av, other).unwrap();
        }
    }
    for bv in a..a + b {
        for cv in a + b..n {
            d.add_arc(bv, cv).unwrap();
            d.add_arc(cv, bv).unwrap();
        }
    }
    Ok(d)
}

/// The families addressable from the CLI, with their parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    A {
        n: usize,
    },
    B {
        n: usize,
    },
    C3Blowup {
        n: usize,
    },
    Aes {
        n: usize,
        r: usize,
    },
    AesRelaxed {
        n: usize,
        r: usize,
    },
    WheelLike {
        r: usize,
        t: usize,
    },
    TrBlowup {
        r: usize,
        t: usize,
    },
    C5Orientation(PatternId),
    Remark {
        n: usize,
        eps_num: i64,
        eps_den: u64,
    },
}

impl Family {
    pub fn build(&self) -> Result<Digraph, ConstructionError> {
        match *self {
            Family::A { n } => a_n(n),
            Family::B { n } => b_n(n),
            Family::C3Blowup { n } => c3_blowup_n(n),
            Family::Aes { n, r } => extremal_aes(n, r),
            Family::AesRelaxed { n, r } => extremal_aes_relaxed(n, r),
            Family::WheelLike { r, t } => wheel_like(r, t),
            Family::TrBlowup { r, t } => {
                if r == 0 || t == 0 {
                    return Err(ConstructionError::Parameter(
                        "r and t must be positive".into(),
                    ));
                }
                Ok(tr_blowup(r, t))
            }
            Family::C5Orientation(ref which) => Ok(which.digraph()),
            Family::Remark {
                n,
                eps_num,
                eps_den,
            } => remark_construction(n, eps_num, eps_den),
        }
    }

    /// The family's asserted (δ⁺, χ, freeness) triple, when it has one.
    pub fn expected(&self) -> SelfCheckSpec {
        match *self {
            Family::A { n } => SelfCheckSpec {
                // δ⁺ = ⌊(n−1)/2⌋ as built; equals ⌊n/2⌋ for odd n.
                delta_plus: Some((n - 1) / 2),
                chi: Some(3),
                free_of: vec![PatternId::DirectedCycle(3), PatternId::DirectedCycle(5)],
            },
            Family::B { n } => SelfCheckSpec {
                delta_plus: Some((n - 2) / 3),
                chi: Some(3),
                free_of: vec![PatternId::C5Prime],
            },
            Family::C3Blowup { n } => SelfCheckSpec {
                delta_plus: Some(n / 3),
                chi: Some(3),
                free_of: vec![PatternId::C5DoublePrime, PatternId::C5TriplePrime],
            },
            Family::Aes { n, r } => SelfCheckSpec {
                delta_plus: Some((3 * r - 7) * n / (3 * r - 4)),
                chi: Some(r),
                free_of: vec![PatternId::TransitiveTournament(r)],
            },
            Family::Remark {
                n,
                eps_num,
                eps_den,
            } => SelfCheckSpec {
                delta_plus: Some(
                    ((n as i64 * (2 * eps_den as i64 + 5 * eps_num)) / (5 * eps_den as i64))
                        as usize,
                ),
                chi: None,
                free_of: vec![PatternId::DirectedCycle(3)],
            },
            _ => SelfCheckSpec {
                delta_plus: None,
                chi: None,
                free_of: vec![],
            },
        }
    }

    /// Builds the digraph and verifies its triple through the checker
    /// modules.
    pub fn self_check(&self) -> Result<SelfCheckReport, ConstructionError> {
        let d = self.build()?;
        let spec = self.expected();
        let delta_plus = d.min_out_degree().unwrap_or(0);
        let chi = if d.n() == 0 {
            0
        } else {
            coloring::chromatic_number(&d).unwrap().0
        };
        let free: Vec<(String, bool)> = spec
            .free_of
            .iter()
            .map(|p| {
                let absent = patterns::contains_pattern(&d, p)
                    .map(|e| e.is_none())
                    .unwrap_or(false);
                (p.to_string(), absent)
            })
            .collect();
        let ok = spec.delta_plus.is_none_or(|e| e == delta_plus)
            && spec.chi.is_none_or(|e| e == chi)
            && free.iter().all(|&(_, absent)| absent);
        Ok(SelfCheckReport {
            n: d.n(),
            delta_plus,
            chi,
            expected_delta_plus: spec.delta_plus,
            expected_chi: spec.chi,
            pattern_free: free,
            ok,
        })
    }
}

/// Expected property triple attached to a family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SelfCheckSpec {
    pub delta_plus: Option<usize>,
    pub chi: Option<usize>,
    pub free_of: Vec<PatternId>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SelfCheckReport {
    pub n: usize,
    pub delta_plus: usize,
    pub chi: usize,
    pub expected_delta_plus: Option<usize>,
    pub expected_chi: Option<usize>,
    /// Per forbidden pattern: `(name, confirmed absent)`.
    pub pattern_free: Vec<(String, bool)>,
    pub ok: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{chromatic_number, independence_number};
    use crate::patterns::contains_pattern;

    #[test]
    fn a_n_examples() {
        let a11 = a_n(11).unwrap();
        assert_eq!(a11.min_out_degree().unwrap(), 5);
        assert_eq!(chromatic_number(&a11).unwrap().0, 3);
        assert!(contains_pattern(&a11, &PatternId::DirectedCycle(3))
            .unwrap()
            .is_none());
        assert!(contains_pattern(&a11, &PatternId::DirectedCycle(5))
            .unwrap()
            .is_none());
        assert_eq!(independence_number(&a11).unwrap().0, 5);

        // Apex out-neighborhood induces double-oriented K_{5,5}.
        let nbrs = a11.out_neighbors(0).to_vec();
        assert_eq!(nbrs.len(), 10);
        let (sub, _) = a11.induced(&nbrs).unwrap();
        assert_eq!(sub.arc_count(), 2 * 25);
        assert!(sub.vertices().all(|v| sub.out_degree(v) == 5));

        let a5 = a_n(5).unwrap();
        assert_eq!(a5.min_out_degree().unwrap(), 2);
        assert_eq!(chromatic_number(&a5).unwrap().0, 3);

        let a3 = a_n(3).unwrap();
        assert_eq!(chromatic_number(&a3).unwrap().0, 3);
        assert!(a_n(2).is_err());
    }

    #[test]
    fn b_n_examples() {
        let b14 = b_n(14).unwrap();
        assert_eq!(b14.min_out_degree().unwrap(), 4);
        assert_eq!(chromatic_number(&b14).unwrap().0, 3);
        assert!(contains_pattern(&b14, &PatternId::C5Prime)
            .unwrap()
            .is_none());

        let b5 = b_n(5).unwrap();
        assert_eq!(b5.min_out_degree().unwrap(), 1);
        let b8 = b_n(8).unwrap();
        assert_eq!(b8.min_out_degree().unwrap(), 2);

        // |X|·|Y| + |Y|·|Z| + 2|X| + 1 underlying edges at n = 10.
        let b10 = b_n(10).unwrap();
        assert_eq!(
            b10.underlying_graph().edge_count(),
            3 * 2 + 2 * 3 + 2 * 3 + 1
        );
    }

    #[test]
    fn c3_blowup_examples() {
        let d9 = c3_blowup_n(9).unwrap();
        assert_eq!(d9.min_out_degree().unwrap(), 3);
        assert_eq!(chromatic_number(&d9).unwrap().0, 3);
        let d10 = c3_blowup_n(10).unwrap();
        assert_eq!(d10.min_out_degree().unwrap(), 3);
        assert_eq!(c3_blowup_n(3).unwrap().arc_count(), 3);
    }

    #[test]
    fn aes_examples() {
        let d = extremal_aes(10, 3).unwrap();
        assert_eq!(d.min_out_degree().unwrap(), 4);
        assert_eq!(chromatic_number(&d).unwrap().0, 3);
        assert!(crate::patterns::contains_transitive_tournament(&d, 3).is_none());

        let d = extremal_aes(8, 4).unwrap();
        assert_eq!(d.n(), 8);
        assert_eq!(d.min_out_degree().unwrap(), 5);
        assert_eq!(chromatic_number(&d).unwrap().0, 4);
        assert!(crate::patterns::contains_transitive_tournament(&d, 4).is_none());

        assert_eq!(
            extremal_aes(41, 4),
            Err(ConstructionError::Divisibility { n: 41, modulus: 8 })
        );
        assert_eq!(
            extremal_aes(7, 3),
            Err(ConstructionError::Divisibility { n: 7, modulus: 5 })
        );
        // The relaxed mode floors instead.
        assert_eq!(extremal_aes_relaxed(41, 4).unwrap().n(), 40);
    }

    #[test]
    fn aes_r3_matches_pentagon_blowup() {
        use crate::iso::is_isomorphic;
        let via_family = extremal_aes(5, 3).unwrap();
        let direct = Graph::cycle(5).blowup(&[1; 5]).double_orientation();
        assert!(is_isomorphic(&via_family, &direct).unwrap());
    }

    #[test]
    fn wheel_like_examples() {
        let w = wheel_like(3, 0).unwrap();
        assert_eq!(w.n(), 5);
        let w = wheel_like(4, 1).unwrap();
        // |Q₁ ∪ Q₂| = 2(r−2)−t = 3, plus v, w₁, w₂.
        assert_eq!(w.n(), 6);
        let (q1, q2, v, w1, w2) = wheel_like_roles(4, 1);
        assert_eq!(q1, vec![0, 1]);
        assert_eq!(q2, vec![0, 2]);
        // v dominates both tournaments; wᵢ is dominated by Qᵢ.
        for &a in q1.iter().chain(&q2) {
            assert!(w.has_arc(v, a));
        }
        for &a in &q1 {
            assert!(w.has_arc(a, w1));
        }
        for &a in &q2 {
            assert!(w.has_arc(a, w2));
        }
        assert!(!w.has_arc(v, w1) && !w.has_arc(w1, v));
        assert!(w.has_arc(w1, w2));
        // Standalone construction with t = r−2 is allowed.
        assert!(wheel_like(4, 2).is_ok());
        assert!(wheel_like(4, 3).is_err());
    }

    #[test]
    fn tr_blowup_and_patterns() {
        use crate::iso::is_isomorphic;
        assert!(is_isomorphic(&tr_blowup(3, 1), &transitive_tournament(3)).unwrap());
        let t32 = tr_blowup(3, 2);
        assert_eq!(t32.n(), 6);
        assert_eq!(t32.min_out_degree().unwrap(), 0);
        assert_eq!(c5_pattern(&PatternId::C5Prime).arc_count(), 5);
    }

    #[test]
    fn remark_examples() {
        let d = remark_construction(20, 1, 20).unwrap();
        assert_eq!(d.n(), 20);
        assert_eq!(d.min_out_degree().unwrap(), 9);
        assert!(contains_pattern(&d, &PatternId::DirectedCycle(3))
            .unwrap()
            .is_none());
        // Triangle through A, B, C in the underlying graph forces χ ≥ 3.
        assert!(chromatic_number(&d).unwrap().0 >= 3);

        let d0 = remark_construction(20, 0, 1).unwrap();
        assert_eq!(d0.min_out_degree().unwrap(), 8);
        assert!(contains_pattern(&d0, &PatternId::DirectedCycle(3))
            .unwrap()
            .is_none());

        assert!(remark_construction(21, 1, 20).is_err());
    }

    #[test]
    fn family_self_checks_pass() {
        for family in [
            Family::A { n: 11 },
            Family::B { n: 14 },
            Family::C3Blowup { n: 9 },
            Family::Aes { n: 10, r: 3 },
            Family::Remark {
                n: 20,
                eps_num: 1,
                eps_den: 20,
            },
        ] {
            let report = family.self_check().unwrap();
            assert!(report.ok, "{family:?} failed self-check: {report:?}");
        }
    }
}
