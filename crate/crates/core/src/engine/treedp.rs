//! Subtree polynomials of trees by rooted dynamic programming.
//!
//! For a root r, every vertex v gets the polynomial of subtrees in which
//! v is the vertex nearest r: `down(v) = x * prod over children (1 + down(c))`.
//! The global polynomial is the sum of `down(v)` over all v, and `down(r)`
//! is exactly the local polynomial at r. Iterative, so paths of order in
//! the thousands pose no stack problem.

use num_bigint::BigInt;
use num_traits::One;

use crate::engine::{Anchor, LocalProfile, SubtreeProfile};
use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::graph::MultiGraph;

fn check_tree(t: &MultiGraph) -> Result<()> {
    if !t.is_simple() {
        return Err(Error::NotATree("multigraphs contain cycles of length 2"));
    }
    if !t.is_connected() {
        return Err(Error::NotATree("graph is disconnected"));
    }
    if t.edge_count() != t.order() - 1 {
        return Err(Error::NotATree("edge count exceeds order - 1"));
    }
    Ok(())
}

/// BFS order and parent links from `root`.
fn bfs(t: &MultiGraph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.order();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    (order, parent)
}

/// Runs the rooted DP; returns the sum over all vertices and the root's
/// own polynomial. Child polynomials are consumed as their parent is
/// processed, so only one chain's worth of polynomials is alive at a time
/// and the single-child (path) case costs no allocation at all.
fn rooted_dp(t: &MultiGraph, root: usize) -> (IntPolynomial, IntPolynomial) {
    let n = t.order();
    let (order, parent) = bfs(t, root);
    let mut down: Vec<IntPolynomial> = vec![IntPolynomial::zero(); n];
    let mut sum = IntPolynomial::zero();
    let one = BigInt::one();
    for &v in order.iter().rev() {
        let mut acc: Option<IntPolynomial> = None;
        for c in t.neighbors(v) {
            if parent[c] == v {
                // 1 + down(c), consuming the child's polynomial
                let mut factor = std::mem::take(&mut down[c]);
                factor.add_to_coeff(0, &one);
                acc = Some(match acc {
                    None => factor,
                    Some(product) => &product * &factor,
                });
            }
        }
        let mut poly = acc.unwrap_or_else(IntPolynomial::one);
        poly.shift_up();
        sum += &poly;
        down[v] = poly;
    }
    let root_poly = std::mem::take(&mut down[root]);
    (sum, root_poly)
}

/// Subtree profile of a tree; agrees with the general engine and scales
/// to orders in the thousands.
pub fn tree_subtree_polynomial(t: &MultiGraph) -> Result<SubtreeProfile> {
    check_tree(t)?;
    let (sum, _) = rooted_dp(t, 0);
    SubtreeProfile::from_poly(sum, t.order())
}

/// Local polynomial of the subtrees containing `v`.
pub fn tree_local_polynomial_vertex(t: &MultiGraph, v: usize) -> Result<LocalProfile> {
    check_tree(t)?;
    if v >= t.order() {
        return Err(Error::VertexOutOfRange {
            index: v,
            order: t.order(),
        });
    }
    let (_, root_poly) = rooted_dp(t, v);
    LocalProfile::from_poly(Anchor::Vertex(v), root_poly, t.order())
}
