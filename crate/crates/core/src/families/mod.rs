//! Named graph families and their closed-form subtree invariants.
//!
//! The double broom is the star of the show: a path of order `n - 2s`
//! with `s` pendant leaves at each endpoint. Joining the two endpoints
//! closes the path into a cycle and the edge-local polynomial factors as
//! `(1+x)^{2s} * S_{C,e}`, which is what lets the density-gap table scale
//! to orders in the thousands without any subset enumeration.

pub mod trends;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::exact::rational::Rational;
use crate::graph::{Edge, MultiGraph};

pub use trends::{
    book_gap_table, density_gap_table, path_cycle_gap_table, rows_to_csv, rows_to_json, TrendRow,
    TrendValue,
};

pub fn make_path(n: usize) -> Result<MultiGraph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    MultiGraph::from_edges(n, &edges)
}

pub fn make_cycle(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "cycle",
            order: n,
            min: 3,
        });
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    MultiGraph::from_edges(n, &edges)
}

pub fn make_complete(n: usize) -> Result<MultiGraph> {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    MultiGraph::from_edges(n, &edges)
}

/// `K_{a,b}` with the left class labeled `0..a`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<MultiGraph> {
    if a == 0 || b == 0 {
        return Err(Error::TooSmall {
            what: "complete bipartite class",
            order: 0,
            min: 1,
        });
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    MultiGraph::from_edges(a + b, &edges)
}

/// `K_{2,n-2}` with the edge inside the 2-class added: n - 2 triangles
/// sharing one edge (a triangular book).
pub fn make_book(n: usize) -> Result<MultiGraph> {
    if n < 4 {
        return Err(Error::TooSmall {
            what: "book graph",
            order: n,
            min: 4,
        });
    }
    let mut g = make_complete_bipartite(2, n - 2)?;
    g = g.add_edge(0, 1)?;
    Ok(g)
}

/// Parameters of a double broom: total order `n`, `s` leaves per end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BroomSpec {
    n: usize,
    s: usize,
}

impl BroomSpec {
    /// Requires `2s <= n - 3`, so the central path has order at least 3.
    pub fn new(n: usize, s: usize) -> Result<BroomSpec> {
        if n < 3 || 2 * s > n - 3 {
            return Err(Error::InvalidBroomSpec {
                n,
                s,
                reason: "need 2s <= n - 3",
            });
        }
        Ok(BroomSpec { n, s })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn leaves_per_end(&self) -> usize {
        self.s
    }

    /// Order of the central path.
    pub fn path_order(&self) -> usize {
        self.n - 2 * self.s
    }

    /// The two path endpoints in the fixed labeling.
    pub fn endpoints(&self) -> (usize, usize) {
        (0, self.path_order() - 1)
    }
}

/// Double broom: path `0..m-1`, leaves `m..m+s-1` on endpoint 0 and
/// leaves `m+s..m+2s-1` on endpoint `m-1`.
pub fn make_double_broom(spec: BroomSpec) -> Result<MultiGraph> {
    let m = spec.path_order();
    let s = spec.s;
    let mut edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    for k in 0..s {
        edges.push((0, m + k));
        edges.push((m - 1, m + s + k));
    }
    MultiGraph::from_edges(spec.n, &edges)
}

/// Double broom with its path endpoints joined, closing the central path
/// into a cycle; returns the graph along with the added edge.
pub fn make_broom_cycle(spec: BroomSpec) -> Result<(MultiGraph, Edge)> {
    let (u, v) = spec.endpoints();
    let broom = make_double_broom(spec)?;
    let g = broom.add_edge(u, v)?;
    Ok((g, Edge::new(u, v, 0)))
}

/// Smallest `s` with `2^s >= n^2` (the integer form of rounding
/// `2 log2 n` up), the default leaf schedule for the density-gap table.
/// Defined for `n >= 32`, where it also satisfies `2s <= n - 3`.
pub fn default_leaf_count(n: usize) -> Result<usize> {
    if n < 32 {
        return Err(Error::TooSmall {
            what: "default leaf schedule",
            order: n,
            min: 32,
        });
    }
    let square = (n as u128) * (n as u128);
    let s = (128 - (square - 1).leading_zeros()) as usize;
    debug_assert!(1u128 << s >= square && 1u128 << (s - 1) < square);
    if 2 * s > n - 3 {
        return Err(Error::InvalidBroomSpec {
            n,
            s,
            reason: "leaf schedule violates 2s <= n - 3",
        });
    }
    Ok(s)
}

/// Edge-local polynomial of the cycle: `x^2 * sum_{i=0}^{n-2} (i+1) x^i`.
pub fn cycle_edge_polynomial(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "cycle",
            order: n,
            min: 3,
        });
    }
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = BigInt::from(k as u64 - 1);
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `(S_{C_n,e}(1), S'_{C_n,e}(1), mu(C_n,e))` in closed form:
/// `(C(n,2), n(n-1)(2n+2)/6, (2n+2)/3)`.
pub fn cycle_edge_closed_form(n: usize) -> Result<(BigInt, BigInt, Rational)> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "cycle",
            order: n,
            min: 3,
        });
    }
    let n = BigInt::from(n as u64);
    let total = &n * (&n - 1) / 2;
    let weight = &n * (&n - 1) * (&n * 2 + 2) / 6;
    let mean = Rational::new(&n * 2 + 2, BigInt::from(3));
    Ok((total, weight, mean))
}

/// Edge-local polynomial of the broom cycle at the closing edge:
/// `(1+x)^{2s} * S_{C_{n-2s},e}`. Every subtree through the edge is a
/// cycle subtree through it plus an arbitrary subset of leaves.
pub fn broom_cycle_edge_polynomial(spec: BroomSpec) -> Result<IntPolynomial> {
    let leaves = IntPolynomial::one_plus_x_power(2 * spec.s);
    let cycle_part = cycle_edge_polynomial(spec.path_order())?;
    Ok(&leaves * &cycle_part)
}

/// Mean of the broom cycle's edge-local polynomial: `(2n - s + 2) / 3`.
pub fn broom_cycle_edge_mean(spec: BroomSpec) -> Rational {
    Rational::new(
        BigInt::from(2 * spec.n as u64) - BigInt::from(spec.s as u64) + 2,
        BigInt::from(3),
    )
}

/// Number of subtrees of the double broom in closed form:
/// `2s + C(n-2s-1, 2) + 2(n-2s-1) 2^s + 2^{2s}`.
pub fn broom_subtree_count(spec: BroomSpec) -> BigInt {
    let s = spec.s;
    let interior = BigInt::from((spec.n - 2 * s - 1) as u64);
    let choose2 = &interior * (&interior - 1) / 2;
    BigInt::from(2 * s as u64)
        + choose2
        + &interior * 2 * (BigInt::from(1) << s)
        + (BigInt::from(1) << (2 * s))
}
