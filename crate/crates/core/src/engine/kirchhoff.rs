//! Spanning-tree counts via the multiplicity Laplacian.
//!
//! The count is the determinant of any principal minor of `D - A`, with
//! parallel edges entering as multiplicities, evaluated by fraction-free
//! (Bareiss) integer elimination. Intermediate Bareiss entries are minors
//! of the original matrix, so a Hadamard bound on the full graph decides
//! once per graph whether i128 arithmetic is safe; otherwise the same
//! elimination runs over big integers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::MultiGraph;

/// Exact number of spanning trees, parallel copies counted as distinct.
/// Returns 1 for the one-vertex graph and 0 iff the graph is disconnected.
/// Works at any constructible order (no bitmask involved for the full
/// graph).
pub fn spanning_tree_count(g: &MultiGraph) -> BigInt {
    let n = g.order();
    if n == 1 {
        return BigInt::from(1);
    }
    let m = n - 1;
    if hadamard_fits_i128(g) {
        let mut minor = vec![0i128; m * m];
        fill_minor(g, &mut minor, m, |x| x as i128);
        BigInt::from(bareiss_i128(&mut minor, m))
    } else {
        let mut minor = vec![BigInt::zero(); m * m];
        fill_minor(g, &mut minor, m, BigInt::from);
        bareiss_big(&mut minor, m)
    }
}

/// Writes the Laplacian with the last row and column dropped.
fn fill_minor<T: Clone + std::ops::Neg<Output = T> + std::ops::AddAssign>(
    g: &MultiGraph,
    minor: &mut [T],
    m: usize,
    lift: impl Fn(i64) -> T,
) {
    for i in 0..m {
        let mut degree = lift(0);
        for j in 0..=m {
            if i == j {
                continue;
            }
            let mult = g.multiplicity(i, j) as i64;
            degree += lift(mult);
            if j < m {
                minor[i * m + j] = -lift(mult);
            }
        }
        minor[i * m + i] = degree;
    }
}

/// Reusable counter over induced sub-multigraphs of one fixed graph,
/// selected by vertex bitmask. Holds scratch buffers so the per-subset
/// cost is dominated by the elimination itself.
pub struct SpanningCounter<'a> {
    g: &'a MultiGraph,
    fits_i128: bool,
    vertices: Vec<usize>,
    scratch_i128: Vec<i128>,
    scratch_big: Vec<BigInt>,
}

impl<'a> SpanningCounter<'a> {
    pub fn new(g: &'a MultiGraph) -> Self {
        let n = g.order();
        SpanningCounter {
            g,
            fits_i128: hadamard_fits_i128(g),
            vertices: Vec::with_capacity(n),
            scratch_i128: Vec::new(),
            scratch_big: Vec::new(),
        }
    }

    /// Spanning trees of the sub-multigraph induced by the mask bits.
    pub fn count_masked(&mut self, mask: u64) -> BigInt {
        let k = mask.count_ones() as usize;
        if k == 1 {
            return BigInt::from(1);
        }
        self.vertices.clear();
        let mut rest = mask;
        while rest != 0 {
            self.vertices.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        // principal minor: drop the last selected vertex
        let m = k - 1;
        if self.fits_i128 {
            self.scratch_i128.clear();
            self.scratch_i128.resize(m * m, 0);
            for i in 0..m {
                let vi = self.vertices[i];
                let mut degree: i128 = 0;
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    let mult = self.g.multiplicity(vi, self.vertices[j]) as i128;
                    degree += mult;
                    if j < m {
                        self.scratch_i128[i * m + j] = -mult;
                    }
                }
                self.scratch_i128[i * m + i] = degree;
            }
            BigInt::from(bareiss_i128(&mut self.scratch_i128, m))
        } else {
            self.scratch_big.clear();
            self.scratch_big.resize(m * m, BigInt::zero());
            for i in 0..m {
                let vi = self.vertices[i];
                let mut degree: i64 = 0;
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    let mult = self.g.multiplicity(vi, self.vertices[j]) as i64;
                    degree += mult;
                    if j < m {
                        self.scratch_big[i * m + j] = BigInt::from(-mult);
                    }
                }
                self.scratch_big[i * m + i] = BigInt::from(degree);
            }
            bareiss_big(&mut self.scratch_big, m)
        }
    }
}

/// True when every Bareiss intermediate provably fits in i128: the product
/// of row norms stays below 2^61, so products of two minors stay below
/// 2^123 with room for the subtraction.
fn hadamard_fits_i128(g: &MultiGraph) -> bool {
    let n = g.order();
    let mut log_sum = 0.0_f64;
    for u in 0..n {
        let mut norm_sq = 0.0_f64;
        let mut degree = 0.0_f64;
        for v in 0..n {
            if v == u {
                continue;
            }
            let m = g.multiplicity(u, v) as f64;
            norm_sq += m * m;
            degree += m;
        }
        norm_sq += degree * degree;
        if norm_sq > 1.0 {
            log_sum += 0.5 * norm_sq.log2();
        }
    }
    log_sum < 61.0
}

fn bareiss_i128(a: &mut [i128], m: usize) -> i128 {
    if m == 0 {
        return 1;
    }
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..m {
        let pivot = match (k..m).find(|&r| a[r * m + k] != 0) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != k {
            for j in 0..m {
                a.swap(pivot * m + j, k * m + j);
            }
            sign = -sign;
        }
        let akk = a[k * m + k];
        for i in k + 1..m {
            let aik = a[i * m + k];
            for j in k + 1..m {
                a[i * m + j] = (a[i * m + j] * akk - aik * a[k * m + j]) / prev;
            }
            a[i * m + k] = 0;
        }
        prev = akk;
    }
    sign * a[m * m - 1]
}

fn bareiss_big(a: &mut [BigInt], m: usize) -> BigInt {
    if m == 0 {
        return BigInt::from(1);
    }
    let mut prev = BigInt::from(1);
    let mut negate = false;
    for k in 0..m {
        let pivot = match (k..m).find(|&r| !a[r * m + k].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != k {
            for j in 0..m {
                a.swap(pivot * m + j, k * m + j);
            }
            negate = !negate;
        }
        let akk = a[k * m + k].clone();
        for i in k + 1..m {
            let aik = a[i * m + k].clone();
            for j in k + 1..m {
                let value = (&a[i * m + j] * &akk - &aik * &a[k * m + j]) / &prev;
                a[i * m + j] = value;
            }
            a[i * m + k] = BigInt::zero();
        }
        prev = akk;
    }
    let det = a[m * m - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
