//! Shared test fixtures: an edge-subset brute-force oracle for subtree
//! counts, a permutation-orbit census oracle, and seeded random graphs.
//! Everything here is deliberately independent of the engine's subset
//! enumeration and Matrix-Tree counting.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use mso_core::exact::poly::IntPolynomial;
use mso_core::graph::MultiGraph;

/// Subtree counts per order from enumerating all edge subsets: a subset
/// is a subtree iff the vertices it covers form one component and the
/// edge count is one less than the covered count. Order-1 subtrees are
/// the vertices themselves.
pub struct OracleCounts {
    /// `global[k]` = subtrees of order k.
    pub global: Vec<u64>,
    /// `per_vertex[v][k]` = subtrees of order k containing v.
    pub per_vertex: Vec<Vec<u64>>,
    /// `per_edge[i][k]` = subtrees of order k containing edge copy i,
    /// indexed like `g.edges()`.
    pub per_edge: Vec<Vec<u64>>,
    pub spanning: u64,
}

pub fn oracle_counts(g: &MultiGraph) -> OracleCounts {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let m = edges.len();
    assert!(m <= 20, "oracle is for small graphs only");
    let mut counts = OracleCounts {
        global: vec![0; n + 1],
        per_vertex: vec![vec![0; n + 1]; n],
        per_edge: vec![vec![0; n + 1]; m],
        spanning: if n == 1 { 1 } else { 0 },
    };
    counts.global[1] = n as u64;
    for (v, row) in counts.per_vertex.iter_mut().enumerate() {
        let _ = v;
        row[1] = 1;
    }
    for mask in 1u64..(1 << m) {
        let edge_count = mask.count_ones() as usize;
        if edge_count > n - 1 {
            continue;
        }
        let mut covered = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                covered |= 1 << u | 1 << v;
            }
        }
        let k = covered.count_ones() as usize;
        if edge_count != k - 1 {
            continue;
        }
        // grow one component from the lowest covered vertex
        let mut component = covered & covered.wrapping_neg();
        loop {
            let mut grown = component;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 && (grown >> u & 1 == 1 || grown >> v & 1 == 1) {
                    grown |= 1 << u | 1 << v;
                }
            }
            if grown == component {
                break;
            }
            component = grown;
        }
        if component != covered {
            continue;
        }
        counts.global[k] += 1;
        for v in 0..n {
            if covered >> v & 1 == 1 {
                counts.per_vertex[v][k] += 1;
            }
        }
        for (i, row) in counts.per_edge.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                row[k] += 1;
            }
        }
        if k == n {
            counts.spanning += 1;
        }
    }
    counts
}

pub fn poly_from_counts(counts: &[u64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// Full engine-vs-oracle comparison on one graph: global polynomial,
/// spanning count, every vertex-local and edge-local polynomial.
pub fn check_against_oracle(engine: &mso_core::engine::Engine, g: &MultiGraph) {
    use mso_core::engine::{local_polynomial_vertex, spanning_tree_count, subtree_polynomial};
    let oracle = oracle_counts(g);
    let profile = subtree_polynomial(g, 20).unwrap();
    assert_eq!(
        profile.poly,
        poly_from_counts(&oracle.global),
        "global polynomial of {g:?}"
    );
    assert_eq!(
        spanning_tree_count(g),
        BigInt::from(oracle.spanning),
        "spanning count of {g:?}"
    );
    for v in 0..g.order() {
        let local = local_polynomial_vertex(g, v, 20).unwrap();
        assert_eq!(
            local.poly,
            poly_from_counts(&oracle.per_vertex[v]),
            "local polynomial of {g:?} at vertex {v}"
        );
    }
    for (i, edge) in g.edges().into_iter().enumerate() {
        let local = engine.local_edge(g, edge).unwrap();
        assert_eq!(
            local.poly,
            poly_from_counts(&oracle.per_edge[i]),
            "local polynomial of {g:?} at {edge}"
        );
    }
}

/// Number of isomorphism classes of connected simple graphs of order n,
/// by walking all labeled edge masks in ascending order and marking whole
/// permutation orbits. Independent of the canonical-form machinery.
pub fn connected_classes_by_orbit(n: usize) -> usize {
    assert!((1..=7).contains(&n), "orbit oracle is sized for n <= 7");
    if n == 1 {
        return 1;
    }
    let pair_count = n * (n - 1) / 2;
    let pair_index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j * (j - 1) / 2 + i
    };
    // edge-index permutation table per vertex permutation
    let mut tables: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permutations(&mut perm, &mut |p| {
        let mut table = vec![0; pair_count];
        for j in 1..n {
            for i in 0..j {
                table[pair_index(i, j)] = pair_index(p[i], p[j]);
            }
        }
        tables.push(table);
    });
    let total = 1u64 << pair_count;
    let mut seen = vec![0u64; total.div_ceil(64) as usize];
    let mut classes = 0;
    for mask in 0..total {
        if seen[(mask >> 6) as usize] >> (mask & 63) & 1 == 1 {
            continue;
        }
        if !mask_connected(mask, n, pair_count) {
            continue;
        }
        classes += 1;
        for table in &tables {
            let mut image = 0u64;
            for (t, &target) in table.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    image |= 1 << target;
                }
            }
            seen[(image >> 6) as usize] |= 1 << (image & 63);
        }
    }
    classes
}

fn mask_connected(mask: u64, n: usize, pair_count: usize) -> bool {
    let mut adj = vec![0u64; n];
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> t & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            t += 1;
        }
    }
    debug_assert_eq!(t, pair_count);
    let mut component = 1u64;
    loop {
        let mut grown = component;
        for (v, &mask) in adj.iter().enumerate() {
            if component >> v & 1 == 1 {
                grown |= mask;
            }
        }
        if grown == component {
            break;
        }
        component = grown;
    }
    component == (1 << n) - 1
}

fn heap_permutations(items: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    fn rec(k: usize, items: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k == 1 {
            visit(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    rec(k, items, visit);
}

/// The order-7 graph whose mean drops when the pair (0, 1) is joined:
/// vertices 0 and 1 share the four neighbors 3, 4, 5, 6 and the extra
/// common neighbor 2; 3-4 and 5-6 are edges.
pub fn order7_decreasing_graph() -> MultiGraph {
    MultiGraph::from_edges(
        7,
        &[
            (0, 2),
            (1, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (3, 4),
            (5, 6),
        ],
    )
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_simple_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    MultiGraph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MultiGraph {
    loop {
        let g = random_simple_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected multigraph with multiplicities up to 3 and a bounded total
/// edge count, sized for the edge-subset oracle.
pub fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> MultiGraph {
    loop {
        let mut g = MultiGraph::new(n).unwrap();
        let mut total = 0;
        for _ in 0..200 {
            if total >= max_edges {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || g.multiplicity(u, v) >= 3 {
                continue;
            }
            g = g.add_edge(u, v).unwrap();
            total += 1;
            if rng.gen_bool(0.25) {
                break;
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform random labeled tree from a random parent sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> MultiGraph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    MultiGraph::from_edges(n, &edges).unwrap()
}
