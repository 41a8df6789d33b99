//! Subtree profiles of graphs and multigraphs.
//!
//! The general path enumerates connected induced vertex subsets and sums
//! spanning-tree counts per order: the coefficient of `x^k` in the subtree
//! polynomial is the number of k-vertex subtrees. Local polynomials fix a
//! vertex (restricted enumeration) or an edge (difference of two global
//! polynomials, with an independent contraction-based route kept as a
//! cross-check). Trees bypass all of this through [`treedp`].

mod cache;
pub mod kirchhoff;
pub mod subsets;
pub mod treedp;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::exact::rational::Rational;
use crate::graph::{canonical_form, Edge, MultiGraph, MAX_CANON_ORDER};

pub use kirchhoff::{spanning_tree_count, SpanningCounter};
pub use treedp::{tree_local_polynomial_vertex, tree_subtree_polynomial};

/// Default cap on the order of graphs sent through subset enumeration;
/// the cost is roughly `2^n` spanning-tree counts.
pub const DEFAULT_MAX_SUBSET_ORDER: usize = 20;

/// Global subtree data of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeProfile {
    /// Coefficient of `x^k` counts the subtrees of order `k`.
    pub poly: IntPolynomial,
    /// `S(1)`: total number of subtrees.
    pub total: BigInt,
    /// `S'(1)`: total weight (sum of subtree orders).
    pub weight: BigInt,
    /// Mean subtree order, `weight / total`.
    pub mean: Rational,
    /// Mean divided by the order of the graph.
    pub density: Rational,
    /// Number of spanning subtrees (coefficient of `x^n`).
    pub spanning_count: BigInt,
    /// Fraction of subtrees that span.
    pub spanning_proportion: Rational,
}

impl SubtreeProfile {
    pub fn from_poly(poly: IntPolynomial, n: usize) -> Result<SubtreeProfile> {
        let total = poly.eval_at_one();
        if total.is_zero() {
            return Err(Error::UndefinedMean);
        }
        let weight = poly.deriv_at_one();
        let mean = Rational::new(weight.clone(), total.clone());
        let density = &mean / &Rational::from_int(n as u64);
        let spanning_count = poly.coeff(n);
        let spanning_proportion = Rational::new(spanning_count.clone(), total.clone());
        Ok(SubtreeProfile {
            poly,
            total,
            weight,
            mean,
            density,
            spanning_count,
            spanning_proportion,
        })
    }
}

impl Serialize for SubtreeProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SubtreeProfile", 7)?;
        s.serialize_field("coeffs", &coeff_strings(&self.poly))?;
        s.serialize_field("total", &self.total.to_string())?;
        s.serialize_field("weight", &self.weight.to_string())?;
        s.serialize_field("mean", &self.mean)?;
        s.serialize_field("density", &self.density)?;
        s.serialize_field("spanning_count", &self.spanning_count.to_string())?;
        s.serialize_field("spanning_proportion", &self.spanning_proportion)?;
        s.end()
    }
}

fn coeff_strings(poly: &IntPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(|c| c.to_string()).collect()
}

/// What a local polynomial is anchored to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    Vertex(usize),
    Edge(Edge),
}

/// Subtree data restricted to subtrees containing the anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalProfile {
    pub anchor: Anchor,
    pub poly: IntPolynomial,
    pub mean: Rational,
    pub density: Rational,
}

impl LocalProfile {
    pub fn from_poly(anchor: Anchor, poly: IntPolynomial, n: usize) -> Result<LocalProfile> {
        let mean = poly.log_deriv_at_one()?;
        let density = &mean / &Rational::from_int(n as u64);
        Ok(LocalProfile {
            anchor,
            poly,
            mean,
            density,
        })
    }

    pub fn total(&self) -> BigInt {
        self.poly.eval_at_one()
    }

    pub fn weight(&self) -> BigInt {
        self.poly.deriv_at_one()
    }
}

impl Serialize for LocalProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LocalProfile", 4)?;
        s.serialize_field("anchor", &self.anchor)?;
        s.serialize_field("coeffs", &coeff_strings(&self.poly))?;
        s.serialize_field("mean", &self.mean)?;
        s.serialize_field("density", &self.density)?;
        s.end()
    }
}

fn check_subset_order(g: &MultiGraph, max_order: usize) -> Result<()> {
    // 64 is the hard bitmask ceiling no matter how the engine is configured
    let limit = max_order.min(64);
    if g.order() > limit {
        return Err(Error::TooLarge {
            what: "subtree polynomial by subset enumeration (use the tree DP or closed forms)",
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Subtree profile by subset enumeration, no caching.
pub fn subtree_polynomial(g: &MultiGraph, max_order: usize) -> Result<SubtreeProfile> {
    check_subset_order(g, max_order)?;
    let n = g.order();
    let nbr = g.neighbor_masks();
    let mut counter = SpanningCounter::new(g);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    subsets::for_each_connected_subset(&nbr, |mask| {
        coeffs[mask.count_ones() as usize] += counter.count_masked(mask);
    });
    SubtreeProfile::from_poly(IntPolynomial::from_coeffs(coeffs), n)
}

/// Local profile at a vertex by restricted subset enumeration.
pub fn local_polynomial_vertex(g: &MultiGraph, v: usize, max_order: usize) -> Result<LocalProfile> {
    check_subset_order(g, max_order)?;
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { index: v, order: n });
    }
    let nbr = g.neighbor_masks();
    let mut counter = SpanningCounter::new(g);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    subsets::for_each_connected_subset_containing(&nbr, v, |mask| {
        coeffs[mask.count_ones() as usize] += counter.count_masked(mask);
    });
    LocalProfile::from_poly(Anchor::Vertex(v), IntPolynomial::from_coeffs(coeffs), n)
}

fn check_edge(g: &MultiGraph, e: Edge) -> Result<()> {
    if e.u >= g.order() || e.v >= g.order() || e.copy >= g.multiplicity(e.u, e.v) as usize {
        return Err(Error::MissingEdge {
            u: e.u,
            v: e.v,
            copy: e.copy,
        });
    }
    Ok(())
}

/// Independent route to the edge-local polynomial: enumerate connected
/// subsets containing both endpoints and count the spanning trees that use
/// the chosen copy, i.e. the spanning trees of the subset with the edge
/// contracted. Exists as a cross-check for the subtraction route.
pub fn local_polynomial_edge_by_contraction(
    g: &MultiGraph,
    e: Edge,
    max_order: usize,
) -> Result<LocalProfile> {
    check_subset_order(g, max_order)?;
    check_edge(g, e)?;
    let n = g.order();
    let nbr = g.neighbor_masks();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut vertices = Vec::with_capacity(n);
    subsets::for_each_connected_subset_containing(&nbr, e.u, |mask| {
        if mask >> e.v & 1 == 0 {
            return;
        }
        vertices.clear();
        let mut rest = mask;
        while rest != 0 {
            vertices.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        let induced = g
            .induced_subgraph(&vertices)
            .expect("subset vertices valid");
        let pu = vertices
            .iter()
            .position(|&w| w == e.u)
            .expect("u in subset");
        let pv = vertices
            .iter()
            .position(|&w| w == e.v)
            .expect("v in subset");
        let contracted = induced
            .contract_edge(Edge::new(pu, pv, 0))
            .expect("edge present in subset");
        coeffs[mask.count_ones() as usize] += spanning_tree_count(&contracted);
    });
    LocalProfile::from_poly(Anchor::Edge(e), IntPolynomial::from_coeffs(coeffs), n)
}

#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    /// Order bound for subset enumeration.
    pub max_order: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_order: DEFAULT_MAX_SUBSET_ORDER,
        }
    }
}

/// Profile computer with a cache keyed by canonical form, so isomorphic
/// intermediates met during searches are computed once. Safe to share
/// across threads; the cache inserts atomically.
pub struct Engine {
    config: EngineConfig,
    cache: cache::ProfileCache,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Engine {
        Engine::with_config(EngineConfig::default())
    }

    pub fn with_config(config: EngineConfig) -> Engine {
        Engine {
            config,
            cache: cache::ProfileCache::new(),
        }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn cached_profiles(&self) -> usize {
        self.cache.len()
    }

    /// Global profile, cached for small simple graphs. Trees are routed
    /// through the rooted DP (no order bound); everything else goes
    /// through subset enumeration.
    pub fn profile(&self, g: &MultiGraph) -> Result<Arc<SubtreeProfile>> {
        if g.is_simple() && g.order() <= MAX_CANON_ORDER {
            let key = canonical_form(g)?;
            if let Some(hit) = self.cache.get(&key) {
                return Ok(hit);
            }
            let profile = Arc::new(self.compute(g)?);
            self.cache.insert(key, profile.clone());
            Ok(profile)
        } else {
            Ok(Arc::new(self.compute(g)?))
        }
    }

    fn compute(&self, g: &MultiGraph) -> Result<SubtreeProfile> {
        if g.is_simple() && g.edge_count() == g.order() - 1 && g.is_connected() {
            treedp::tree_subtree_polynomial(g)
        } else {
            subtree_polynomial(g, self.config.max_order)
        }
    }

    pub fn local_vertex(&self, g: &MultiGraph, v: usize) -> Result<LocalProfile> {
        local_polynomial_vertex(g, v, self.config.max_order)
    }

    /// Edge-local profile as the difference `S_G - S_{G-e}`, reusing the
    /// cached global profiles.
    pub fn local_edge(&self, g: &MultiGraph, e: Edge) -> Result<LocalProfile> {
        check_edge(g, e)?;
        let whole = self.profile(g)?;
        let without = self.profile(&g.delete_edge(e)?)?;
        let poly = whole.poly.sub(&without.poly);
        LocalProfile::from_poly(Anchor::Edge(e), poly, g.order())
    }

    /// `S*`: the subtree polynomial restricted to subtrees of order >= 2.
    pub fn star_polynomial(&self, g: &MultiGraph) -> Result<IntPolynomial> {
        if !g.has_edges() {
            return Err(Error::NoEdges);
        }
        let profile = self.profile(g)?;
        let singles = {
            let mut coeffs = vec![BigInt::zero(); 2];
            coeffs[1] = BigInt::from(g.order() as u64);
            IntPolynomial::from_coeffs(coeffs)
        };
        Ok(profile.poly.sub(&singles))
    }

    /// Mean order over subtrees of order >= 2; strictly above the mean.
    pub fn mu_star(&self, g: &MultiGraph) -> Result<Rational> {
        self.star_polynomial(g)?.log_deriv_at_one()
    }
}
