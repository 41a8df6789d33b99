//! Enumeration of connected induced vertex subsets by bitmask.
//!
//! ESU-style growth: a subset rooted at its minimum vertex is extended
//! only through "exclusive" neighbors (vertices not already adjacent to
//! the subset), which yields every connected subset exactly once and
//! never touches a disconnected one.

/// Calls `visit` once per nonempty vertex subset inducing a connected
/// subgraph. `nbr` is the adjacency bitmask per vertex.
pub fn for_each_connected_subset(nbr: &[u64], mut visit: impl FnMut(u64)) {
    let n = nbr.len();
    for v in 0..n {
        let above = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
        let seed = 1u64 << v;
        extend(nbr, above, seed, nbr[v] & above, seed | nbr[v], &mut visit);
    }
}

/// Same, restricted to subsets containing the fixed vertex `v`.
pub fn for_each_connected_subset_containing(nbr: &[u64], v: usize, mut visit: impl FnMut(u64)) {
    let seed = 1u64 << v;
    extend(nbr, !0u64, seed, nbr[v], seed | nbr[v], &mut visit);
}

fn extend(
    nbr: &[u64],
    allowed: u64,
    subset: u64,
    ext: u64,
    closed: u64,
    visit: &mut impl FnMut(u64),
) {
    visit(subset);
    let mut pool = ext;
    while pool != 0 {
        let u = pool.trailing_zeros() as usize;
        pool &= pool - 1;
        let exclusive = nbr[u] & allowed & !closed;
        extend(
            nbr,
            allowed,
            subset | 1 << u,
            pool | exclusive,
            closed | nbr[u] | 1 << u,
            visit,
        );
    }
}
