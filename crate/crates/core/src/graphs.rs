//! Simple graphs, edge monoids and edge polytopes, odd-cycle enumeration,
//! and the exceptional-pair generators for edge-monoid normalizations.
//!
//! The edge monoid of a graph is generated by the vectors `e_u + e_v` over
//! its edges. Its normalization is generated by the edges together with
//! one element `e_C + e_C'` for every exceptional pair: two odd cycles
//! that share no vertex and are joined by no edge. Odd cycles are
//! enumerated by depth-first search in canonical form (smallest vertex
//! first, orientation fixed by the second vertex), with a cap; hitting
//! the cap taints downstream pair lists, which is reported rather than
//! hidden.

use std::collections::HashSet;

use crate::cones::LatticePolytope;
use crate::error::{Error, Result};
use crate::monoid::AffineMonoid;

/// Default cap on enumerated simple odd cycles.
pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph, normalizing edges to `(min, max)` order, sorting,
    /// and deduplicating. Loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    n: vertex_count,
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(SimpleGraph {
            vertex_count,
            edges: normalized,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Normalized edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components as sorted vertex lists (isolated vertices
    /// included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of connected components that are bipartite (two-colorable).
    pub fn bipartite_component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut color = vec![None; self.vertex_count];
        let mut count = 0;
        for comp in self.components() {
            let mut ok = true;
            color[comp[0]] = Some(false);
            let mut stack = vec![comp[0]];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[v].expect("colored before push"));
                            stack.push(w);
                        }
                        Some(c) => {
                            if c == color[v].expect("colored before push") {
                                ok = false;
                            }
                        }
                    }
                }
            }
            if ok {
                count += 1;
            }
        }
        count
    }
}

/// Two vertex-disjoint odd cycles with no edge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCyclePair {
    /// First cycle, as a canonical vertex sequence.
    pub cycle_a: Vec<usize>,
    /// Second cycle, as a canonical vertex sequence.
    pub cycle_b: Vec<usize>,
}

impl OddCyclePair {
    /// The vector `e_C + e_C'` over `n` vertices.
    pub fn support_sum(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &u in self.cycle_a.iter().chain(&self.cycle_b) {
            v[u] += 1;
        }
        v
    }
}

/// Result of a capped odd-cycle enumeration.
#[derive(Debug, Clone)]
pub struct CycleEnumeration {
    /// Simple odd cycles found, each in canonical form.
    pub cycles: Vec<Vec<usize>>,
    /// Whether the enumeration finished below the cap.
    pub complete: bool,
}

/// The edge monoid: one generator `e_u + e_v` per edge.
pub fn edge_monoid(g: &SimpleGraph) -> Result<AffineMonoid> {
    if g.edges.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let gens: Vec<Vec<i64>> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![0i64; g.vertex_count];
            e[u] = 1;
            e[v] = 1;
            e
        })
        .collect();
    AffineMonoid::new(&gens)
}

/// The edge polytope: convex hull of the edge vectors, counted against
/// the edge monoid's group lattice.
pub fn edge_polytope(g: &SimpleGraph) -> Result<LatticePolytope> {
    let q = edge_monoid(g)?;
    q.cross_section()
}

/// Enumerates simple odd cycles (length at least 3) up to `cap` of them.
///
/// Canonical form: the smallest vertex comes first and the second vertex
/// is smaller than the last, so each cycle appears exactly once.
pub fn odd_cycles(g: &SimpleGraph, cap: usize) -> CycleEnumeration {
    let adj = g.adjacency();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut complete = true;

    fn dfs(
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        adj: &[Vec<usize>],
        cycles: &mut Vec<Vec<usize>>,
        cap: usize,
        complete: &mut bool,
    ) {
        if !*complete {
            return;
        }
        let v = *path.last().expect("path starts at the root");
        for &w in &adj[v] {
            if w == root && path.len() >= 3 && path.len() % 2 == 1 && path[1] < v {
                if cycles.len() == cap {
                    *complete = false;
                    return;
                }
                cycles.push(path.clone());
            }
            if w > root && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                dfs(root, path, on_path, adj, cycles, cap, complete);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    let mut on_path = vec![false; g.vertex_count];
    for root in 0..g.vertex_count {
        let mut path = vec![root];
        on_path[root] = true;
        dfs(root, &mut path, &mut on_path, &adj, &mut cycles, cap, &mut complete);
        on_path[root] = false;
        if !complete {
            break;
        }
    }
    cycles.sort();
    CycleEnumeration { cycles, complete }
}

/// All unordered pairs of enumerated odd cycles that are vertex-disjoint
/// and joined by no edge. Errors if the cycle cap truncates enumeration.
pub fn exceptional_pairs(g: &SimpleGraph, cycle_cap: usize) -> Result<Vec<OddCyclePair>> {
    let enumeration = odd_cycles(g, cycle_cap);
    if !enumeration.complete {
        return Err(Error::CycleCapExceeded { cap: cycle_cap });
    }
    Ok(pairs_from_cycles(g, &enumeration.cycles))
}

fn pairs_from_cycles(g: &SimpleGraph, cycles: &[Vec<usize>]) -> Vec<OddCyclePair> {
    let edge_set: HashSet<(usize, usize)> = g.edges.iter().copied().collect();
    let supports: Vec<HashSet<usize>> = cycles
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if supports[i].intersection(&supports[j]).next().is_some() {
                continue;
            }
            let bridged = supports[i].iter().any(|&u| {
                supports[j]
                    .iter()
                    .any(|&v| edge_set.contains(&(u.min(v), u.max(v))))
            });
            if bridged {
                continue;
            }
            out.push(OddCyclePair {
                cycle_a: cycles[i].clone(),
                cycle_b: cycles[j].clone(),
            });
        }
    }
    out
}

/// Candidate generators for the edge monoid's normalization: the edges
/// plus `e_C + e_C'` per exceptional pair; tainted when the cycle cap
/// truncated the pair search.
#[derive(Debug, Clone)]
pub struct OhGenerators {
    /// Edge vectors followed by the pair elements, deduplicated.
    pub generators: Vec<Vec<i64>>,
    /// False when the cycle cap was hit, so pairs may be missing.
    pub complete: bool,
}

/// Edge generators plus one element per exceptional pair.
pub fn oh_normalization_generators(g: &SimpleGraph, cycle_cap: usize) -> OhGenerators {
    let enumeration = odd_cycles(g, cycle_cap);
    let pairs = pairs_from_cycles(g, &enumeration.cycles);
    let mut generators: Vec<Vec<i64>> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![0i64; g.vertex_count];
            e[u] = 1;
            e[v] = 1;
            e
        })
        .collect();
    for p in &pairs {
        let s = p.support_sum(g.vertex_count);
        if !generators.contains(&s) {
            generators.push(s);
        }
    }
    OhGenerators {
        generators,
        complete: enumeration.complete,
    }
}

/// The graph of two triangles `u1 u2 u3` and `u4 u5 u6` connected by `k`
/// paths `u3 - v_i' - v_i - u6` with chord `v_i u3`.
///
/// Vertex layout (0-indexed): `u1, u2, u3 = 0, 1, 2`; then `v_i' = 1+2i`
/// and `v_i = 2+2i` for `i = 1..=k`; then `u6 = 2k+3`, `u4 = 2k+4`,
/// `u5 = 2k+5`.
pub fn gk_graph(k: usize) -> SimpleGraph {
    assert!(k >= 1, "the two-triangle family needs at least one path");
    let u3 = 2;
    let u6 = 2 * k + 3;
    let u4 = 2 * k + 4;
    let u5 = 2 * k + 5;
    let mut edges = vec![(0, 1), (0, u3), (1, u3), (u4, u5), (u4, u6), (u5, u6)];
    for i in 1..=k {
        let vi_p = 1 + 2 * i;
        let vi = 2 + 2 * i;
        edges.push((u3, vi_p));
        edges.push((vi_p, vi));
        edges.push((vi, u3));
        edges.push((vi, u6));
    }
    SimpleGraph::new(2 * k + 6, &edges).expect("construction yields valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn triangle() -> SimpleGraph {
        SimpleGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn two_triangles() -> SimpleGraph {
        SimpleGraph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    fn k4() -> SimpleGraph {
        SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn graph_normalization_and_validation() {
        let g = SimpleGraph::new(3, &[(2, 0), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert!(matches!(
            SimpleGraph::new(3, &[(1, 1)]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            SimpleGraph::new(3, &[(0, 3)]),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn edge_monoid_dimensions() {
        let q3 = edge_monoid(&triangle()).unwrap();
        assert_eq!(
            q3.generators(),
            &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
        );
        assert_eq!(q3.dim(), 3);
        assert_eq!(q3.grading().weights(), &[1, 1, 1]);
        assert_eq!(q3.grading().scale(), 2);

        let c4 = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(edge_monoid(&c4).unwrap().dim(), 3);

        let tt = edge_monoid(&two_triangles()).unwrap();
        assert_eq!(tt.dim(), 6);

        let isolated = SimpleGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(edge_monoid(&isolated).unwrap().dim(), 1);
    }

    #[test]
    fn dimension_follows_bipartite_component_count() {
        for g in [triangle(), two_triangles(), k4(), gk_graph(1), gk_graph(2)] {
            let q = edge_monoid(&g).unwrap();
            let vertices_in_edges: HashSet<usize> = g
                .edges()
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .collect();
            let nontrivial: usize = g
                .components()
                .iter()
                .filter(|c| c.iter().any(|v| vertices_in_edges.contains(v)))
                .count();
            let bipartite: usize = g
                .components()
                .iter()
                .filter(|c| {
                    c.iter().any(|v| vertices_in_edges.contains(v)) && {
                        let sub: Vec<(usize, usize)> = g
                            .edges()
                            .iter()
                            .filter(|&&(u, _)| c.contains(&u))
                            .copied()
                            .collect();
                        let remap: std::collections::HashMap<usize, usize> =
                            c.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                        let sub: Vec<(usize, usize)> =
                            sub.iter().map(|&(u, v)| (remap[&u], remap[&v])).collect();
                        SimpleGraph::new(c.len(), &sub)
                            .unwrap()
                            .bipartite_component_count()
                            == 1
                    }
                })
                .count();
            let _ = nontrivial;
            assert_eq!(
                q.dim(),
                vertices_in_edges.len() - bipartite,
                "dimension formula failed for {g:?}"
            );
        }
    }

    #[test]
    fn empty_edge_set_is_rejected() {
        let g = SimpleGraph::new(5, &[]).unwrap();
        assert!(matches!(edge_monoid(&g), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn odd_cycle_enumeration_matches_reference() {
        // Reference values from tools/oracles/brute.py.
        let g1 = gk_graph(1);
        let c1 = odd_cycles(&g1, DEFAULT_CYCLE_CAP);
        assert!(c1.complete);
        assert_eq!(
            c1.cycles,
            vec![vec![0, 1, 2], vec![2, 3, 4], vec![5, 6, 7]]
        );

        let g2 = gk_graph(2);
        let c2 = odd_cycles(&g2, DEFAULT_CYCLE_CAP);
        assert_eq!(c2.cycles.len(), 6);

        assert_eq!(odd_cycles(&k4(), DEFAULT_CYCLE_CAP).cycles.len(), 4);
        assert_eq!(odd_cycles(&two_triangles(), DEFAULT_CYCLE_CAP).cycles.len(), 2);

        let bip = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(odd_cycles(&bip, DEFAULT_CYCLE_CAP).cycles.is_empty());
    }

    #[test]
    fn exceptional_pairs_match_reference() {
        // Reference values from tools/oracles/brute.py.
        let p2 = exceptional_pairs(&gk_graph(2), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].cycle_a, vec![0, 1, 2]);
        assert_eq!(p2[0].cycle_b, vec![7, 8, 9]);

        let p1 = exceptional_pairs(&gk_graph(1), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(p1.len(), 1);
        assert_eq!(p1[0].cycle_b, vec![5, 6, 7]);

        assert!(exceptional_pairs(&k4(), DEFAULT_CYCLE_CAP).unwrap().is_empty());

        let tt = exceptional_pairs(&two_triangles(), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(tt.len(), 1);
    }

    #[test]
    fn cycle_cap_taints_results() {
        let err = exceptional_pairs(&k4(), 2).unwrap_err();
        assert!(matches!(err, Error::CycleCapExceeded { cap: 2 }));
        let oh = oh_normalization_generators(&k4(), 2);
        assert!(!oh.complete);
        let full = oh_normalization_generators(&k4(), DEFAULT_CYCLE_CAP);
        assert!(full.complete);
        assert_eq!(full.generators.len(), 6);
    }

    #[test]
    fn oh_generators_add_pair_elements() {
        let g2 = gk_graph(2);
        let oh = oh_normalization_generators(&g2, DEFAULT_CYCLE_CAP);
        assert!(oh.complete);
        assert_eq!(oh.generators.len(), 15);
        let q = vec![1, 1, 1, 0, 0, 0, 0, 1, 1, 1];
        assert!(oh.generators.contains(&q));

        let tt = oh_normalization_generators(&two_triangles(), DEFAULT_CYCLE_CAP);
        assert_eq!(tt.generators.len(), 7);
        assert!(tt.generators.contains(&vec![1; 6]));

        let bip = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let ohb = oh_normalization_generators(&bip, DEFAULT_CYCLE_CAP);
        assert_eq!(ohb.generators.len(), 4);
    }

    #[test]
    fn triangle_polytope_codegree_is_three() {
        // Parity of the group lattice empties the second dilation; the
        // oracle's interior counts are [0, 0, 1, 3, 6] for ell = 1..=5.
        let p = edge_polytope(&triangle()).unwrap();
        assert_eq!(p.codegree(5).unwrap(), Some(3));
        let interior: Vec<BigInt> = (1..=5).map(|l| p.dilation_count(l, true).unwrap()).collect();
        let want: Vec<BigInt> = [0, 0, 1, 3, 6].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(interior, want);
    }

    #[test]
    fn gk1_polytope_codegree_is_four() {
        let p = edge_polytope(&gk_graph(1)).unwrap();
        assert_eq!(p.codegree(4).unwrap(), Some(4));
    }

    #[test]
    fn single_edge_polytope_has_no_interior() {
        let g = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        let p = edge_polytope(&g).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.codegree(10).unwrap(), None);
        assert_eq!(p.dilation_count(3, false).unwrap(), BigInt::from(1));
    }

    #[test]
    fn gk_graph_edge_sets() {
        let g1 = gk_graph(1);
        assert_eq!(g1.vertex_count(), 8);
        assert_eq!(
            g1.edges(),
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 7),
                (6, 7)
            ]
        );
        let g2 = gk_graph(2);
        assert_eq!(g2.vertex_count(), 10);
        assert_eq!(
            g2.edges(),
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
                (4, 7),
                (5, 6),
                (6, 7),
                (7, 8),
                (7, 9),
                (8, 9)
            ]
        );
    }
}
