//! Canonical forms for small simple graphs.
//!
//! The form is the lexicographically smallest upper-triangle adjacency
//! encoding over all vertex orderings that sort degrees in non-decreasing
//! order (an isomorphism-invariant restriction, so equal forms still
//! characterize isomorphism exactly). The search walks orderings position
//! by position, pruning as soon as a partial encoding exceeds the best
//! complete one. Fast and auditable at the orders we enumerate; not meant
//! to compete with a real canonical labeler.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Permutation search bound.
pub const MAX_CANON_ORDER: usize = 10;

/// Label-invariant encoding: two simple graphs are isomorphic iff their
/// canonical forms are equal. `bits` holds the upper triangle in graph6
/// column order, first bit in the most significant position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalForm {
    /// Rebuilds the representative graph for this form.
    pub fn to_multigraph(&self) -> MultiGraph {
        let n = self.n as usize;
        let mut g = MultiGraph::new(n).expect("canonical forms have valid order");
        let len = n * (n - 1) / 2;
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    g = g.add_edge(i, j).expect("valid edge");
                }
                t += 1;
            }
        }
        g
    }
}

struct CanonSearch<'a> {
    n: usize,
    len: usize,
    nbr: &'a [u64],
    degree: &'a [usize],
    /// Required degree at each position (sorted non-decreasing).
    target: &'a [usize],
    best: u64,
}

impl CanonSearch<'_> {
    fn descend(&mut self, ordering: &mut Vec<usize>, used: u64, cur: u64) {
        let k = ordering.len();
        if k == self.n {
            if cur < self.best {
                self.best = cur;
            }
            return;
        }
        let prefix_len = k * (k + 1) / 2; // bits fixed once position k is chosen
        let shift = self.len - prefix_len;
        for w in 0..self.n {
            if used >> w & 1 == 1 || self.degree[w] != self.target[k] {
                continue;
            }
            // column k: adjacency of w to the already-placed vertices
            let mut col = 0u64;
            for (i, &p) in ordering.iter().enumerate() {
                col |= (self.nbr[w] >> p & 1) << (k - 1 - i);
            }
            let cur2 = cur | col << shift;
            if cur2 >> shift > self.best >> shift {
                continue;
            }
            ordering.push(w);
            self.descend(ordering, used | 1 << w, cur2);
            ordering.pop();
        }
    }
}

/// Canonical form of a simple graph on at most [`MAX_CANON_ORDER`] vertices.
pub fn canonical_form(g: &MultiGraph) -> Result<CanonicalForm> {
    if !g.is_simple() {
        return Err(Error::NotSimple {
            op: "canonical_form",
        });
    }
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::TooLarge {
            what: "canonical_form",
            order: n,
            limit: MAX_CANON_ORDER,
        });
    }
    if n == 1 {
        return Ok(CanonicalForm { n: 1, bits: 0 });
    }
    let nbr = g.neighbor_masks();
    let degree: Vec<usize> = (0..n).map(|v| g.neighbor_count(v)).collect();
    let mut target = degree.clone();
    target.sort_unstable();
    let mut search = CanonSearch {
        n,
        len: n * (n - 1) / 2,
        nbr: &nbr,
        degree: &degree,
        target: &target,
        best: u64::MAX,
    };
    let mut ordering = Vec::with_capacity(n);
    search.descend(&mut ordering, 0, 0);
    Ok(CanonicalForm {
        n: n as u8,
        bits: search.best,
    })
}
