//! Isomorphism-free generation of small connected graphs and trees.
//!
//! Connected graphs of order n are produced by augmenting every
//! representative of order n-1 with a new vertex joined to each nonempty
//! neighborhood, then deduplicating by canonical form. Every connected
//! graph has a non-cut vertex, so removing it shows each isomorphism
//! class is reached. Trees are generated the same way with single-leaf
//! augmentation. One order's worth of canonical forms is held in memory
//! at a time.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::canon::{canonical_form, CanonicalForm};
use crate::graph::MultiGraph;
use crate::parallel;

/// Bound for [`connected_graphs`]; the order-8 census already has 11117
/// classes and the augmentation cost grows steeply past it.
pub const MAX_ENUM_ORDER: usize = 8;

/// Bound for [`trees`], limited by the canonical form search.
pub const MAX_TREE_ORDER: usize = 10;

/// One representative per isomorphism class of connected simple graphs of
/// order `n`, in sorted canonical-form order.
pub fn connected_graphs(n: usize) -> Result<Vec<MultiGraph>> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "connected graph enumeration",
            order: 0,
            min: 1,
        });
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge {
            what: "connected graph enumeration",
            order: n,
            limit: MAX_ENUM_ORDER,
        });
    }
    let mut forms = vec![canonical_form(&MultiGraph::new(1)?)?];
    for order in 2..=n {
        forms = grow(&forms, |g| augmentations(g, order))?;
    }
    Ok(forms.iter().map(CanonicalForm::to_multigraph).collect())
}

/// One representative per isomorphism class of trees of order `n`, in
/// sorted canonical-form order.
pub fn trees(n: usize) -> Result<Vec<MultiGraph>> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "tree enumeration",
            order: 0,
            min: 1,
        });
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::TooLarge {
            what: "tree enumeration",
            order: n,
            limit: MAX_TREE_ORDER,
        });
    }
    let mut forms = vec![canonical_form(&MultiGraph::new(1)?)?];
    for order in 2..=n {
        forms = grow(&forms, |g| leaf_augmentations(g, order))?;
    }
    Ok(forms.iter().map(CanonicalForm::to_multigraph).collect())
}

fn grow<F>(prev: &[CanonicalForm], expand: F) -> Result<Vec<CanonicalForm>>
where
    F: Fn(&MultiGraph) -> Result<Vec<CanonicalForm>> + Sync,
{
    let produced = parallel::map_collect(prev, |form| expand(&form.to_multigraph()));
    let mut set = BTreeSet::new();
    for batch in produced {
        set.extend(batch?);
    }
    Ok(set.into_iter().collect())
}

fn base_edges(g: &MultiGraph) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.multiplicity(u, v) > 0 {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Attach a new last vertex to every nonempty subset of the old vertices.
fn augmentations(g: &MultiGraph, order: usize) -> Result<Vec<CanonicalForm>> {
    let old = order - 1;
    let base = base_edges(g);
    let mut out = Vec::with_capacity((1 << old) - 1);
    for mask in 1u64..(1 << old) {
        let mut edges = base.clone();
        for u in 0..old {
            if mask >> u & 1 == 1 {
                edges.push((u, old));
            }
        }
        out.push(canonical_form(&MultiGraph::from_edges(order, &edges)?)?);
    }
    Ok(out)
}

/// Attach a new leaf to each old vertex in turn.
fn leaf_augmentations(g: &MultiGraph, order: usize) -> Result<Vec<CanonicalForm>> {
    let old = order - 1;
    let base = base_edges(g);
    let mut out = Vec::with_capacity(old);
    for attach in 0..old {
        let mut edges = base.clone();
        edges.push((attach, old));
        out.push(canonical_form(&MultiGraph::from_edges(order, &edges)?)?);
    }
    Ok(out)
}
