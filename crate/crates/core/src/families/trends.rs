//! Trend tables for the asymptotic density claims.
//!
//! Limits are not finitely testable, so each table reports exact values
//! at fixed orders; the acceptance suite asserts calibrated tolerances on
//! individual rows. Rows are computed in parallel and emitted in input
//! order.

use serde_json::{json, Value};

use crate::engine::{tree_subtree_polynomial, Engine};
use crate::error::Result;
use crate::exact::rational::Rational;
use crate::families::{
    broom_cycle_edge_mean, broom_cycle_edge_polynomial, cycle_edge_polynomial, default_leaf_count,
    make_book, make_complete_bipartite, make_double_broom, make_path, BroomSpec,
};
use crate::parallel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrendValue {
    Int(u64),
    Ratio(Rational),
}

/// One table row: the order plus named exact values in a fixed column
/// order, recomputable from the family constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrendRow {
    pub n: u64,
    pub values: Vec<(&'static str, TrendValue)>,
}

impl TrendRow {
    pub fn ratio(&self, name: &str) -> Option<&Rational> {
        self.values.iter().find_map(|(k, v)| match v {
            TrendValue::Ratio(r) if *k == name => Some(r),
            _ => None,
        })
    }
}

fn table<F>(ns: &[usize], row: F) -> Result<Vec<TrendRow>>
where
    F: Fn(usize) -> Result<TrendRow> + Sync,
{
    parallel::map_collect(ns, |&n| row(n)).into_iter().collect()
}

/// Density drop when a double broom's endpoints are joined, with the
/// default leaf schedule. The joined graph's polynomial is assembled as
/// the tree polynomial plus the factored edge-local polynomial, so rows
/// at order in the thousands cost only the tree DP.
pub fn density_gap_table(ns: &[usize]) -> Result<Vec<TrendRow>> {
    table(ns, |n| {
        let s = default_leaf_count(n)?;
        let spec = BroomSpec::new(n, s)?;
        let broom = make_double_broom(spec)?;
        let broom_profile = tree_subtree_polynomial(&broom)?;
        let edge_poly = broom_cycle_edge_polynomial(spec)?;
        let joined_poly = &broom_profile.poly + &edge_poly;
        let joined_mean = joined_poly.log_deriv_at_one()?;
        let order = Rational::from_int(n as u64);
        let joined_density = &joined_mean / &order;
        let gap = &broom_profile.density - &joined_density;
        let edge_density = &broom_cycle_edge_mean(spec) / &order;
        Ok(TrendRow {
            n: n as u64,
            values: vec![
                ("s", TrendValue::Int(s as u64)),
                ("mu_t", TrendValue::Ratio(broom_profile.mean.clone())),
                ("mu_t_floor", TrendValue::Int((n - s - 1) as u64)),
                ("den_t", TrendValue::Ratio(broom_profile.density.clone())),
                ("den_g", TrendValue::Ratio(joined_density)),
                ("gap", TrendValue::Ratio(gap)),
                ("den_ge", TrendValue::Ratio(edge_density)),
            ],
        })
    })
}

/// Density gap between the cycle and the path of the same order. The
/// cycle polynomial is assembled as `S_{C,e} + S_P`.
pub fn path_cycle_gap_table(ns: &[usize]) -> Result<Vec<TrendRow>> {
    table(ns, |n| {
        let path_profile = tree_subtree_polynomial(&make_path(n)?)?;
        let cycle_poly = &cycle_edge_polynomial(n)? + &path_profile.poly;
        let cycle_mean = cycle_poly.log_deriv_at_one()?;
        let cycle_density = &cycle_mean / &Rational::from_int(n as u64);
        let gap = &cycle_density - &path_profile.density;
        Ok(TrendRow {
            n: n as u64,
            values: vec![
                ("den_c", TrendValue::Ratio(cycle_density)),
                ("den_p", TrendValue::Ratio(path_profile.density.clone())),
                ("gap", TrendValue::Ratio(gap)),
            ],
        })
    })
}

/// Mean gap between `K_{2,n-2}` and the book graph obtained from it by
/// joining the 2-class. Exhaustively computed, so the usable range is the
/// engine's subset-enumeration bound.
pub fn book_gap_table(ns: &[usize], engine: &Engine) -> Result<Vec<TrendRow>> {
    table(ns, |n| {
        let bipartite = make_complete_bipartite(2, n - 2)?;
        let book = make_book(n)?;
        let mean_bipartite = engine.profile(&bipartite)?.mean.clone();
        let mean_book = engine.profile(&book)?.mean.clone();
        let gap = &mean_bipartite - &mean_book;
        Ok(TrendRow {
            n: n as u64,
            values: vec![
                ("mu_bipartite", TrendValue::Ratio(mean_bipartite)),
                ("mu_book", TrendValue::Ratio(mean_book)),
                ("gap", TrendValue::Ratio(gap)),
            ],
        })
    })
}

/// CSV with a header row; every rational contributes an exact `num/den`
/// column followed by a decimal column.
pub fn rows_to_csv(rows: &[TrendRow], digits: usize) -> String {
    let mut out = String::new();
    let Some(first) = rows.first() else {
        return out;
    };
    out.push('n');
    for (name, value) in &first.values {
        match value {
            TrendValue::Int(_) => {
                out.push(',');
                out.push_str(name);
            }
            TrendValue::Ratio(_) => {
                out.push(',');
                out.push_str(name);
                out.push_str(&format!(",{name}_dec"));
            }
        }
    }
    out.push('\n');
    for row in rows {
        out.push_str(&row.n.to_string());
        for (_, value) in &row.values {
            match value {
                TrendValue::Int(i) => out.push_str(&format!(",{i}")),
                TrendValue::Ratio(r) => {
                    out.push_str(&format!(",{},{}", r.ratio_string(), r.to_decimal(digits)))
                }
            }
        }
        out.push('\n');
    }
    out
}

pub fn rows_to_json(rows: &[TrendRow], digits: usize) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                obj.insert("n".into(), json!(row.n));
                for (name, value) in &row.values {
                    let rendered = match value {
                        TrendValue::Int(i) => json!(i),
                        TrendValue::Ratio(r) => json!({
                            "exact": r.ratio_string(),
                            "decimal": r.to_decimal(digits),
                        }),
                    };
                    obj.insert((*name).into(), rendered);
                }
                Value::Object(obj)
            })
            .collect(),
    )
}
