//! Exhaustive verification scans over small-graph censuses.
//!
//! Each entry point walks every connected graph (or tree) of a given
//! order, decides its property with exact rational comparisons, and
//! aggregates a deterministic report: graphs come from the sorted
//! canonical census, so results and witness lists are reproducible
//! independently of how many workers run the scan.

pub mod report;

use std::time::Instant;

use crate::engine::{tree_local_polynomial_vertex, tree_subtree_polynomial, Engine};
use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::exact::rational::Rational;
use crate::graph::graph6::to_graph6;
use crate::graph::{canonical_form, enumerate, Edge, MultiGraph};
use crate::parallel;

use num_bigint::BigInt;

pub use report::{
    load_report, persist_report, witness_path, EdgeScanResult, PairDelta, SearchReport,
};

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Adds every possible edge to `g` in lexicographic pair order and
/// records the exact mean shift of each addition.
pub fn scan_edge_additions(engine: &Engine, g: &MultiGraph) -> Result<EdgeScanResult> {
    if !g.is_simple() {
        return Err(Error::NotSimple { op: "edge scan" });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let canonical = canonical_form(g)?;
    let base = engine.profile(g)?;
    let mut per_pair = Vec::new();
    for (u, v) in g.non_edges()? {
        let new_mean = engine.profile(&g.add_edge(u, v)?)?.mean.clone();
        let delta = &new_mean - &base.mean;
        per_pair.push(PairDelta {
            u,
            v,
            new_mean,
            delta,
        });
    }
    let worst_delta = per_pair.iter().map(|p| p.delta.clone()).min();
    Ok(EdgeScanResult {
        graph6: to_graph6(g)?,
        canonical,
        base_mean: base.mean.clone(),
        any_increase: per_pair
            .iter()
            .any(|p| !p.delta.is_negative() && !p.delta.is_zero()),
        any_decrease: per_pair.iter().any(|p| p.delta.is_negative()),
        worst_delta,
        per_pair,
    })
}

/// Scans a batch of graphs, in parallel when the feature allows.
pub fn scan_graphs(engine: &Engine, graphs: &[MultiGraph]) -> Result<Vec<EdgeScanResult>> {
    parallel::map_collect(graphs, |g| scan_edge_additions(engine, g))
        .into_iter()
        .collect()
}

/// Sequential twin of [`scan_graphs`], kept for benchmarking the parallel
/// speedup.
pub fn scan_graphs_seq(engine: &Engine, graphs: &[MultiGraph]) -> Result<Vec<EdgeScanResult>> {
    parallel::map_collect_seq(graphs, |g| scan_edge_additions(engine, g))
        .into_iter()
        .collect()
}

fn check_order(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall {
            what,
            order: n,
            min,
        });
    }
    if n > max {
        return Err(Error::TooLarge {
            what,
            order: n,
            limit: max,
        });
    }
    Ok(())
}

/// Scans every connected graph of order `n` for an edge addition that
/// lowers the mean subtree order. Counting is per graph: a graph is a
/// counterexample when at least one addition decreases the mean.
pub fn find_decreasing_counterexamples(engine: &Engine, n: usize) -> Result<SearchReport> {
    check_order("decrease search", n, 3, enumerate::MAX_ENUM_ORDER)?;
    let start = Instant::now();
    let graphs = enumerate::connected_graphs(n)?;
    let scans = scan_graphs(engine, &graphs)?;
    let mut witnesses: Vec<String> = Vec::new();
    let mut max_decrease: Option<Rational> = None;
    for scan in &scans {
        if scan.any_decrease {
            witnesses.push(scan.graph6.clone());
            let decrease = -scan.worst_delta.clone().expect("decrease implies pairs");
            if max_decrease.as_ref().is_none_or(|d| decrease > *d) {
                max_decrease = Some(decrease);
            }
        }
    }
    witnesses.sort_unstable();
    Ok(SearchReport {
        order: n,
        graphs_scanned: graphs.len(),
        counterexample_count: witnesses.len(),
        max_decrease,
        conjecture2_holds: None,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        version: version(),
    })
}

/// Verifies that every connected non-complete graph of order `n` admits
/// at least one mean-raising edge addition. Witnesses are the violators
/// (expected none).
pub fn verify_increasing_addition(engine: &Engine, n: usize) -> Result<SearchReport> {
    check_order("increase verification", n, 2, enumerate::MAX_ENUM_ORDER)?;
    let start = Instant::now();
    let graphs = enumerate::connected_graphs(n)?;
    let scans = scan_graphs(engine, &graphs)?;
    let mut witnesses: Vec<String> = graphs
        .iter()
        .zip(&scans)
        .filter(|(g, scan)| !g.is_complete() && !scan.any_increase)
        .map(|(_, scan)| scan.graph6.clone())
        .collect();
    witnesses.sort_unstable();
    Ok(SearchReport {
        order: n,
        graphs_scanned: graphs.len(),
        counterexample_count: witnesses.len(),
        max_decrease: None,
        conjecture2_holds: Some(witnesses.is_empty()),
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        version: version(),
    })
}

/// A witness edge whose local mean sits strictly above the global mean,
/// which in turn sits strictly above the mean after deletion.
#[derive(Clone, Debug)]
pub struct DeletionWitness {
    pub edge: Edge,
    pub edge_mean: Rational,
    pub mean: Rational,
    pub deleted_mean: Rational,
}

/// Finds the first edge (lexicographic order, parallel copies included)
/// with `mu(G,e) > mu(G) > mu(G-e)`. Such an edge always exists when the
/// graph has one; failure would contradict the deletion lemma.
pub fn edge_deletion_witness(engine: &Engine, g: &MultiGraph) -> Result<DeletionWitness> {
    if !g.has_edges() {
        return Err(Error::NoEdges);
    }
    let mean = engine.profile(g)?.mean.clone();
    for edge in g.edges() {
        let edge_mean = engine.local_edge(g, edge)?.mean;
        if edge_mean <= mean {
            continue;
        }
        let deleted_mean = engine.profile(&g.delete_edge(edge)?)?.mean.clone();
        if deleted_mean < mean {
            return Ok(DeletionWitness {
                edge,
                edge_mean,
                mean,
                deleted_mean,
            });
        }
    }
    Err(Error::DeletionLemmaViolation)
}

/// Runs [`edge_deletion_witness`] over the order-`n` census; violators
/// (expected none) are reported as witnesses.
pub fn verify_edge_deletion(engine: &Engine, n: usize) -> Result<SearchReport> {
    check_order(
        "deletion lemma verification",
        n,
        2,
        enumerate::MAX_ENUM_ORDER,
    )?;
    let start = Instant::now();
    let graphs = enumerate::connected_graphs(n)?;
    let outcomes = parallel::map_collect(&graphs, |g| match edge_deletion_witness(engine, g) {
        Ok(_) => Ok(None),
        Err(Error::DeletionLemmaViolation) => Ok(Some(to_graph6(g)?)),
        Err(e) => Err(e),
    });
    let mut witnesses = Vec::new();
    for outcome in outcomes {
        if let Some(g6) = outcome? {
            witnesses.push(g6);
        }
    }
    witnesses.sort_unstable();
    Ok(SearchReport {
        order: n,
        graphs_scanned: graphs.len(),
        counterexample_count: witnesses.len(),
        max_decrease: None,
        conjecture2_holds: None,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        version: version(),
    })
}

/// Result of doubling a deletion-lemma witness edge.
#[derive(Clone, Debug)]
pub struct ParallelEdgeWitness {
    /// The added copy.
    pub edge: Edge,
    pub mean_before: Rational,
    pub mean_after: Rational,
}

/// Adds one parallel edge so the mean strictly increases, following the
/// constructive proof: on an edgeless graph any pair works; otherwise the
/// deletion-lemma edge is doubled. Verifies the supporting identities
/// exactly: the new copy's local polynomial equals the old edge's (no
/// subtree holds both copies), and the new mean is the implied weighted
/// average.
pub fn parallel_edge_increase(engine: &Engine, g: &MultiGraph) -> Result<ParallelEdgeWitness> {
    if g.order() < 2 {
        return Err(Error::TooSmall {
            what: "parallel edge addition",
            order: g.order(),
            min: 2,
        });
    }
    let mean_before = engine.profile(g)?.mean.clone();
    if !g.has_edges() {
        let joined = g.add_edge(0, 1)?;
        let mean_after = engine.profile(&joined)?.mean.clone();
        if mean_after <= mean_before {
            return Err(Error::ParallelEdgeViolation);
        }
        return Ok(ParallelEdgeWitness {
            edge: Edge::new(0, 1, 0),
            mean_before,
            mean_after,
        });
    }
    let witness = edge_deletion_witness(engine, g)?;
    let old = witness.edge;
    let doubled = g.add_edge(old.u, old.v)?;
    let copy = Edge::new(old.u, old.v, g.multiplicity(old.u, old.v) as usize);
    let old_local = engine.local_edge(g, old)?;
    let new_local = engine.local_edge(&doubled, copy)?;
    if new_local.poly != old_local.poly {
        return Err(Error::ParallelEdgeViolation);
    }
    let whole = engine.profile(g)?;
    let after = engine.profile(&doubled)?;
    // weighted-average identity: S_H = S_{G,e} + S_G at 1 and in derivative
    let total_ok = after.total == old_local.total() + &whole.total;
    let weight_ok = after.weight == old_local.weight() + &whole.weight;
    if !total_ok || !weight_ok || after.mean <= mean_before {
        return Err(Error::ParallelEdgeViolation);
    }
    Ok(ParallelEdgeWitness {
        edge: copy,
        mean_before,
        mean_after: after.mean.clone(),
    })
}

/// Runs [`parallel_edge_increase`] over the order-`n` census.
pub fn verify_parallel_edge(engine: &Engine, n: usize) -> Result<SearchReport> {
    check_order(
        "parallel edge verification",
        n,
        2,
        enumerate::MAX_ENUM_ORDER,
    )?;
    let start = Instant::now();
    let graphs = enumerate::connected_graphs(n)?;
    let outcomes = parallel::map_collect(&graphs, |g| match parallel_edge_increase(engine, g) {
        Ok(_) => Ok(None),
        Err(Error::ParallelEdgeViolation) | Err(Error::DeletionLemmaViolation) => {
            Ok(Some(to_graph6(g)?))
        }
        Err(e) => Err(e),
    });
    let mut witnesses = Vec::new();
    for outcome in outcomes {
        if let Some(g6) = outcome? {
            witnesses.push(g6);
        }
    }
    witnesses.sort_unstable();
    Ok(SearchReport {
        order: n,
        graphs_scanned: graphs.len(),
        counterexample_count: witnesses.len(),
        max_decrease: None,
        conjecture2_holds: None,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        version: version(),
    })
}

/// The constructive edge addition for trees: a vertex with two pendant
/// path branches, whose branch neighbors get joined.
#[derive(Clone, Debug)]
pub struct TreeConstruction {
    /// Vertex whose removal leaves at least two pendant path components.
    pub branch_vertex: usize,
    /// Neighbors of the branch vertex on the two chosen paths.
    pub join: (usize, usize),
    /// Vertices of the first path, from the branch vertex outward.
    pub first_branch: Vec<usize>,
    /// Vertices of the second path, from the branch vertex outward.
    pub second_branch: Vec<usize>,
    /// The added edge between the two join vertices.
    pub edge: Edge,
    /// The tree plus the added edge.
    pub augmented: MultiGraph,
}

fn check_is_tree(t: &MultiGraph) -> Result<()> {
    if !t.is_simple() || !t.is_connected() || t.edge_count() != t.order() - 1 {
        return Err(Error::NotATree("tree construction needs a tree"));
    }
    Ok(())
}

/// Walks away from `hub` through `first`; returns the vertices in walk
/// order if the walk is a simple chain ending in a leaf.
fn pendant_path(t: &MultiGraph, hub: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![first];
    let mut prev = hub;
    let mut cur = first;
    loop {
        let mut next = None;
        for w in t.neighbors(cur) {
            if w == prev {
                continue;
            }
            if next.is_some() {
                return None; // branches; not a path component
            }
            next = Some(w);
        }
        match next {
            None => return Some(path),
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
        }
    }
}

/// Deterministic instance of the tree edge addition: smallest valid
/// branch vertex, then the two pendant paths with smallest leaf labels.
pub fn tree_construction_edge(t: &MultiGraph) -> Result<TreeConstruction> {
    check_is_tree(t)?;
    if t.order() < 3 {
        return Err(Error::TooSmall {
            what: "tree construction",
            order: t.order(),
            min: 3,
        });
    }
    for u in 0..t.order() {
        let mut branches: Vec<Vec<usize>> = t
            .neighbors(u)
            .filter_map(|b| pendant_path(t, u, b))
            .collect();
        if branches.len() < 2 {
            continue;
        }
        branches.sort_by_key(|path| *path.last().expect("paths are nonempty"));
        let second = branches.swap_remove(1);
        let first = branches.swap_remove(0);
        let (v, w) = (first[0], second[0]);
        let augmented = t.add_edge(v, w)?;
        return Ok(TreeConstruction {
            branch_vertex: u,
            join: (v, w),
            first_branch: first,
            second_branch: second,
            edge: Edge::new(v, w, 0),
            augmented,
        });
    }
    Err(Error::TreeConstructionViolation)
}

/// Checks one tree against the construction: the added edge must raise
/// the global mean, its local mean must beat the branch vertex's local
/// mean, and both factored local polynomials must match exactly.
fn tree_theorem_violation(engine: &Engine, t: &MultiGraph) -> Result<Option<String>> {
    let construction = tree_construction_edge(t)?;
    let tree_profile = tree_subtree_polynomial(t)?;
    let joined_profile = engine.profile(&construction.augmented)?;
    let edge_local = engine.local_edge(&construction.augmented, construction.edge)?;
    let hub_local = tree_local_polynomial_vertex(t, construction.branch_vertex)?;

    let p = construction.first_branch.len();
    let q = construction.second_branch.len();
    let in_branch = {
        let mut mark = vec![false; t.order()];
        for &x in construction
            .first_branch
            .iter()
            .chain(&construction.second_branch)
        {
            mark[x] = true;
        }
        mark
    };
    let rest: Vec<usize> = (0..t.order()).filter(|&x| !in_branch[x]).collect();
    let rest_graph = t.induced_subgraph(&rest)?;
    let hub_pos = rest
        .iter()
        .position(|&x| x == construction.branch_vertex)
        .expect("branch vertex stays in the rest");
    let rest_local = tree_local_polynomial_vertex(&rest_graph, hub_pos)?;

    // edge-local factorization: x^2 f_{p-1} f_{q-1} (1 + 2 S_{R,u})
    let mut doubled_rest = &rest_local.poly * &IntPolynomial::from_coeffs(vec![BigInt::from(2)]);
    doubled_rest.add_to_coeff(0, &BigInt::from(1));
    let edge_factored = &(&IntPolynomial::monomial(2) * &IntPolynomial::unit_sum(p - 1))
        * &(&IntPolynomial::unit_sum(q - 1) * &doubled_rest);
    // hub-local factorization: f_p f_q S_{R,u}
    let hub_factored =
        &(&IntPolynomial::unit_sum(p) * &IntPolynomial::unit_sum(q)) * &rest_local.poly;

    let ok = joined_profile.mean > tree_profile.mean
        && edge_local.mean > hub_local.mean
        && edge_local.poly == edge_factored
        && hub_local.poly == hub_factored;
    if ok {
        Ok(None)
    } else {
        Ok(Some(to_graph6(t)?))
    }
}

/// Applies the tree construction to every tree of order `n` and verifies
/// the mean increase and both factorizations.
pub fn verify_tree_construction(engine: &Engine, n: usize) -> Result<SearchReport> {
    check_order(
        "tree construction verification",
        n,
        3,
        enumerate::MAX_TREE_ORDER,
    )?;
    let start = Instant::now();
    let ts = enumerate::trees(n)?;
    let outcomes = parallel::map_collect(&ts, |t| tree_theorem_violation(engine, t));
    let mut witnesses = Vec::new();
    for outcome in outcomes {
        if let Some(g6) = outcome? {
            witnesses.push(g6);
        }
    }
    witnesses.sort_unstable();
    Ok(SearchReport {
        order: n,
        graphs_scanned: ts.len(),
        counterexample_count: witnesses.len(),
        max_decrease: None,
        conjecture2_holds: None,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        version: version(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> Engine {
        Engine::new()
    }

    fn p3() -> MultiGraph {
        MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn scan_of_path_finds_the_cycle_gain() {
        let scan = scan_edge_additions(&engine(), &p3()).unwrap();
        assert_eq!(scan.per_pair.len(), 1);
        let pair = &scan.per_pair[0];
        assert_eq!((pair.u, pair.v), (0, 2));
        assert_eq!(pair.new_mean, Rational::from_ints(2, 1));
        assert_eq!(pair.delta, Rational::from_ints(1, 3));
        assert!(scan.any_increase && !scan.any_decrease);
    }

    #[test]
    fn scan_of_complete_graph_is_empty() {
        let k4 = crate::families::make_complete(4).unwrap();
        let scan = scan_edge_additions(&engine(), &k4).unwrap();
        assert!(scan.per_pair.is_empty());
        assert!(!scan.any_increase && !scan.any_decrease);
        assert_eq!(scan.worst_delta, None);
    }

    #[test]
    fn scan_rejects_disconnected_input() {
        let g = MultiGraph::new(3).unwrap();
        assert!(matches!(
            scan_edge_additions(&engine(), &g),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn no_counterexamples_at_order_four() {
        let report = find_decreasing_counterexamples(&engine(), 4).unwrap();
        assert_eq!(report.graphs_scanned, 6);
        assert_eq!(report.counterexample_count, 0);
        assert_eq!(report.max_decrease, None);
    }

    #[test]
    fn increase_verification_at_order_three() {
        let report = verify_increasing_addition(&engine(), 3).unwrap();
        assert_eq!(report.graphs_scanned, 2);
        assert_eq!(report.conjecture2_holds, Some(true));
    }

    #[test]
    fn deletion_witness_on_single_edge() {
        let p2 = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let w = edge_deletion_witness(&engine(), &p2).unwrap();
        assert_eq!(w.edge, Edge::new(0, 1, 0));
        assert_eq!(w.edge_mean, Rational::from_ints(2, 1));
        assert_eq!(w.mean, Rational::from_ints(4, 3));
        assert_eq!(w.deleted_mean, Rational::from_ints(1, 1));
    }

    #[test]
    fn deletion_witness_on_triangle() {
        let k3 = crate::families::make_complete(3).unwrap();
        let w = edge_deletion_witness(&engine(), &k3).unwrap();
        assert_eq!(w.edge_mean, Rational::from_ints(8, 3));
        assert_eq!(w.mean, Rational::from_ints(2, 1));
        assert_eq!(w.deleted_mean, Rational::from_ints(5, 3));
    }

    #[test]
    fn parallel_edge_on_isolated_pair() {
        let bare = MultiGraph::new(2).unwrap();
        let w = parallel_edge_increase(&engine(), &bare).unwrap();
        assert_eq!(w.mean_before, Rational::from_ints(1, 1));
        assert_eq!(w.mean_after, Rational::from_ints(4, 3));
    }

    #[test]
    fn parallel_edge_on_single_edge() {
        let p2 = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        let w = parallel_edge_increase(&engine(), &p2).unwrap();
        assert_eq!(w.edge, Edge::new(0, 1, 1));
        assert_eq!(w.mean_after, Rational::from_ints(3, 2));
    }

    #[test]
    fn tree_construction_on_p3_closes_the_triangle() {
        let c = tree_construction_edge(&p3()).unwrap();
        assert_eq!(c.branch_vertex, 1);
        assert_eq!(c.join, (0, 2));
        assert!(c.augmented.is_complete());
    }

    #[test]
    fn tree_construction_on_star() {
        let star = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = tree_construction_edge(&star).unwrap();
        assert_eq!(c.branch_vertex, 0);
        assert_eq!(c.join, (1, 2));
        assert_eq!(c.first_branch, vec![1]);
        assert_eq!(c.second_branch, vec![2]);
    }

    #[test]
    fn tree_construction_rejects_non_trees() {
        let c3 = crate::families::make_complete(3).unwrap();
        assert!(matches!(
            tree_construction_edge(&c3),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn tree_verification_small_orders() {
        let engine = engine();
        for n in 3..=6 {
            let report = verify_tree_construction(&engine, n).unwrap();
            assert_eq!(report.counterexample_count, 0, "order {n}");
        }
    }
}
