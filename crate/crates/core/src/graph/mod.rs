//! Multigraph representation and basic operations.
//!
//! Vertices are dense labels `0..n-1` and adjacency is a symmetric
//! multiplicity matrix with a zero diagonal (graphs are loopless). A
//! simple graph is a multigraph whose multiplicities are all at most 1.
//! All mutating operations are pure: they return a fresh graph.

pub mod canon;
pub mod enumerate;
pub mod graph6;

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};

/// Hard cap on the order of any constructible graph. Large enough for the
/// double-broom trend tables, small enough that the dense multiplicity
/// matrix stays cheap.
pub const MAX_ORDER: usize = 4096;

/// One copy of an edge. `copy` distinguishes parallel edges and is always
/// below the multiplicity of the pair.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub copy: usize,
}

impl Edge {
    /// Normalizes the endpoint order so that `u < v`.
    pub fn new(u: usize, v: usize, copy: usize) -> Edge {
        if u <= v {
            Edge { u, v, copy }
        } else {
            Edge { u: v, v: u, copy }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copy == 0 {
            write!(f, "{}-{}", self.u, self.v)
        } else {
            write!(f, "{}-{}#{}", self.u, self.v, self.copy)
        }
    }
}

/// Loopless multigraph over vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    mult: Vec<u32>, // row-major n*n, symmetric, zero diagonal
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl MultiGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<MultiGraph> {
        if n == 0 {
            return Err(Error::TooSmall {
                what: "multigraph",
                order: 0,
                min: 1,
            });
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "multigraph",
                order: n,
                limit: MAX_ORDER,
            });
        }
        Ok(MultiGraph {
            n,
            mult: vec![0; n * n],
        })
    }

    /// Graph from an edge list; repeated pairs raise multiplicities.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<MultiGraph> {
        let mut g = MultiGraph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopForbidden(u));
            }
            g.mult[u * n + v] += 1;
            g.mult[v * n + u] += 1;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    fn check_vertex(&self, index: usize) -> Result<()> {
        if index >= self.n {
            return Err(Error::VertexOutOfRange {
                index,
                order: self.n,
            });
        }
        Ok(())
    }

    /// Number of edges counting multiplicities.
    pub fn edge_count(&self) -> usize {
        let total: u64 = self.mult.iter().map(|&m| m as u64).sum();
        (total / 2) as usize
    }

    pub fn has_edges(&self) -> bool {
        self.mult.iter().any(|&m| m > 0)
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn is_complete(&self) -> bool {
        self.is_simple()
            && (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.multiplicity(u, v) == 1))
    }

    /// Multigraph degree (each parallel copy counts).
    pub fn degree(&self, u: usize) -> usize {
        self.mult[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&m| m as usize)
            .sum()
    }

    /// Number of distinct neighbors.
    pub fn neighbor_count(&self, u: usize) -> usize {
        self.mult[u * self.n..(u + 1) * self.n]
            .iter()
            .filter(|&&m| m > 0)
            .count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.mult[u * self.n..(u + 1) * self.n]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, _)| v)
    }

    /// Bitmask adjacency, one u64 per vertex. Only valid for n <= 64,
    /// which covers every enumeration and engine workload.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        (0..self.n)
            .map(|u| {
                let mut mask = 0u64;
                for v in self.neighbors(u) {
                    mask |= 1 << v;
                }
                mask
            })
            .collect()
    }

    /// All edge copies in lexicographic `(u, v, copy)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                for copy in 0..self.multiplicity(u, v) as usize {
                    out.push(Edge { u, v, copy });
                }
            }
        }
        out
    }

    /// All nonadjacent pairs `u < v` in lexicographic order. Only defined
    /// for simple graphs.
    pub fn non_edges(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_simple() {
            return Err(Error::NotSimple { op: "non_edges" });
        }
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.multiplicity(u, v) == 0 {
                    out.push((u, v));
                }
            }
        }
        Ok(out)
    }

    /// Returns a copy with one more copy of the edge `u-v`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<MultiGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopForbidden(u));
        }
        let mut g = self.clone();
        g.mult[u * g.n + v] += 1;
        g.mult[v * g.n + u] += 1;
        Ok(g)
    }

    /// Returns a copy with one copy of `e` removed.
    pub fn delete_edge(&self, e: Edge) -> Result<MultiGraph> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        let m = self.multiplicity(e.u, e.v) as usize;
        if m == 0 || e.copy >= m {
            return Err(Error::MissingEdge {
                u: e.u,
                v: e.v,
                copy: e.copy,
            });
        }
        let mut g = self.clone();
        g.mult[e.u * g.n + e.v] -= 1;
        g.mult[e.v * g.n + e.u] -= 1;
        Ok(g)
    }

    /// Induced subgraph on the listed vertices, relabeled `0..k-1` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<MultiGraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut seen = vec![false; self.n];
        for &v in vertices {
            self.check_vertex(v)?;
            if seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            seen[v] = true;
        }
        let k = vertices.len();
        let mut g = MultiGraph::new(k)?;
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                let m = self.multiplicity(a, b);
                g.mult[i * k + j] = m;
                g.mult[j * k + i] = m;
            }
        }
        Ok(g)
    }

    /// Contracts one copy of `e`: `v` is merged into `u`, remaining
    /// parallel copies of `u-v` become loops and are dropped.
    pub fn contract_edge(&self, e: Edge) -> Result<MultiGraph> {
        let m = self.multiplicity(e.u, e.v) as usize;
        if e.u >= self.n || e.v >= self.n || m == 0 || e.copy >= m {
            return Err(Error::MissingEdge {
                u: e.u,
                v: e.v,
                copy: e.copy,
            });
        }
        let kept: Vec<usize> = (0..self.n).filter(|&w| w != e.v).collect();
        let k = kept.len();
        let mut g = MultiGraph::new(k)?;
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                let mut m = self.multiplicity(a, b);
                if a == e.u {
                    m += self.multiplicity(e.v, b);
                }
                if b == e.u {
                    m += self.multiplicity(e.v, a);
                }
                g.mult[i * k + j] = m;
                g.mult[j * k + i] = m;
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut found = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    found += 1;
                    stack.push(v);
                }
            }
        }
        found == self.n
    }

    /// `{"n": .., "edges": [[u, v, multiplicity], ..]}` with `u < v`.
    pub fn to_json(&self) -> String {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.multiplicity(u, v);
                if m > 0 {
                    edges.push((u, v, m));
                }
            }
        }
        serde_json::to_string(&GraphJson { n: self.n, edges }).expect("graph json")
    }

    pub fn from_json(s: &str) -> Result<MultiGraph> {
        let parsed: GraphJson =
            serde_json::from_str(s).map_err(|e| Error::GraphJson(e.to_string()))?;
        let mut g = MultiGraph::new(parsed.n)?;
        for &(u, v, m) in &parsed.edges {
            if u >= v {
                return Err(Error::GraphJson(format!(
                    "edge [{u}, {v}, {m}] must have u < v"
                )));
            }
            g.check_vertex(v)
                .map_err(|e| Error::GraphJson(e.to_string()))?;
            if m == 0 {
                return Err(Error::GraphJson(format!(
                    "edge [{u}, {v}, {m}] must have multiplicity >= 1"
                )));
            }
            if g.mult[u * parsed.n + v] != 0 {
                return Err(Error::GraphJson(format!("pair {u}-{v} listed twice")));
            }
            g.mult[u * parsed.n + v] = m;
            g.mult[v * parsed.n + u] = m;
        }
        Ok(g)
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}", self.n)?;
        let mut sep = "; ";
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.multiplicity(u, v);
                if m == 1 {
                    write!(f, "{sep}{u}-{v}")?;
                    sep = ", ";
                } else if m > 1 {
                    write!(f, "{sep}{u}-{v}x{m}")?;
                    sep = ", ";
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_increments_multiplicity() {
        let p2 = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let doubled = p2.add_edge(0, 1).unwrap();
        assert_eq!(doubled.multiplicity(0, 1), 2);
        assert_eq!(p2.multiplicity(0, 1), 1, "original must be unchanged");
    }

    #[test]
    fn add_edge_to_empty_pair() {
        let e2 = MultiGraph::new(2).unwrap();
        let p2 = e2.add_edge(0, 1).unwrap();
        assert_eq!(p2, MultiGraph::from_edges(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn add_edge_rejects_loops_and_bad_vertices() {
        let g = MultiGraph::new(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::LoopForbidden(1))));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn delete_edge_from_triangle_gives_path() {
        let c3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = c3.delete_edge(Edge::new(0, 2, 0)).unwrap();
        assert_eq!(p3, MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn delete_edge_handles_parallel_copies() {
        let doubled = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let p2 = doubled.delete_edge(Edge::new(0, 1, 1)).unwrap();
        assert_eq!(p2.multiplicity(0, 1), 1);
        assert!(matches!(
            p2.delete_edge(Edge::new(0, 1, 1)),
            Err(Error::MissingEdge { copy: 1, .. })
        ));
    }

    #[test]
    fn add_then_delete_is_identity() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let back = g
            .add_edge(0, 3)
            .unwrap()
            .delete_edge(Edge::new(0, 3, 0))
            .unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let p3 = c4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(c4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), c4);
        assert!(matches!(
            c4.induced_subgraph(&[]),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn induced_subgraph_of_complete() {
        let k4 =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let k3 = k4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert!(k3.is_complete());
        assert_eq!(k3.order(), 3);
    }

    #[test]
    fn connectivity() {
        assert!(!MultiGraph::new(2).unwrap().is_connected());
        let p5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(p5.is_connected());
        assert!(MultiGraph::new(1).unwrap().is_connected());
    }

    #[test]
    fn non_edges_of_path() {
        let p3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.non_edges().unwrap(), vec![(0, 2)]);
        let k3 = MultiGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(k3.non_edges().unwrap().is_empty());
        let multi = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(matches!(multi.non_edges(), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn contract_edge_of_triangle() {
        let c3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let contracted = c3.contract_edge(Edge::new(1, 2, 0)).unwrap();
        // vertices {0, 1'}, edges 0-1' with multiplicity 2
        assert_eq!(contracted.order(), 2);
        assert_eq!(contracted.multiplicity(0, 1), 2);
    }

    #[test]
    fn json_round_trip() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1,2],[1,2,1]]}"#);
        assert_eq!(MultiGraph::from_json(&s).unwrap(), g);
        assert!(MultiGraph::from_json(r#"{"n":2,"edges":[[1,0,1]]}"#).is_err());
        assert!(MultiGraph::from_json(r#"{"n":2,"edges":[[0,1,0]]}"#).is_err());
    }
}
