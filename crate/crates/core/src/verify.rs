//! Self-check suite: recompute the published table and every independent
//! cross-check, reporting each as a pass/fail line. Never reads the cache.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::Orientation;
use crate::closedforms::{
    k1_bound, neighbor_free_count, nk_closed_form, nk_enumerated, script_n, script_n_enumerated,
};
use crate::conventions::Conventions;
use crate::counting::{lower_bounds, orbits, v_of_net, v_of_net_with, BoundOptions};
use crate::diagram::{catalan_u, enumerate_diagrams, ChordDiagram};
use crate::error::Result;
use crate::reference::published_bound;
use crate::trajectory::{collect_grid, collect_grid_with, TableauRefresh};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Table up to `d = 8` plus every cross-check.
    Fast,
    /// Whole published table.
    Full,
}

impl VerifyLevel {
    pub fn dmax(self) -> usize {
        match self {
            VerifyLevel::Fast => 8,
            VerifyLevel::Full => 14,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Mismatches or errors; empty on success.
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str, failures: Vec<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            failures,
        }
    }

    fn from_result(name: &str, r: Result<Vec<String>>) -> Self {
        match r {
            Ok(failures) => Self::new(name, failures),
            Err(e) => Self::new(name, vec![format!("error: {e}")]),
        }
    }
}

/// `bound(d, k)` for `4 <= d <= dmax`, `1 <= k <= d - 2`.
pub fn compute_table(dmax: usize, jobs: Option<usize>) -> Result<BTreeMap<(usize, usize), u64>> {
    let options = BoundOptions {
        jobs,
        ..BoundOptions::default()
    };
    let mut table = BTreeMap::new();
    for d in 4..=dmax {
        let ks: Vec<usize> = (1..=d - 2).collect();
        for r in lower_bounds(d, &ks, &options)? {
            table.insert((d, r.k), r.bound);
        }
    }
    Ok(table)
}

pub fn check_table(table: &BTreeMap<(usize, usize), u64>) -> CheckResult {
    let failures = table
        .iter()
        .filter_map(|(&(d, k), &b)| match published_bound(d, k) {
            Some(p) if p == b => None,
            Some(p) => Some(format!("(d={d}, k={k}): computed {b}, published {p}")),
            None => Some(format!("(d={d}, k={k}): no published value")),
        })
        .collect();
    CheckResult::new("table", failures)
}

pub fn check_k1_closed_form(table: &BTreeMap<(usize, usize), u64>) -> CheckResult {
    let r = (|| {
        let mut out = Vec::new();
        for (&(d, k), &b) in table {
            if k == 1 && k1_bound(d)? != b {
                out.push(format!(
                    "d={d}: u_d - 2u_(d-1) = {} but bound = {b}",
                    k1_bound(d)?
                ));
            }
        }
        Ok(out)
    })();
    CheckResult::from_result("k=1 closed form", r)
}

pub fn check_k2_closed_form(table: &BTreeMap<(usize, usize), u64>) -> CheckResult {
    let r = (|| {
        let mut out = Vec::new();
        for (d, expected) in (4..=8).zip([1u64, 2, 6, 18, 57]) {
            let (a, b) = (script_n(d)?, script_n_enumerated(d)?);
            if a != expected || b != expected {
                out.push(format!(
                    "d={d}: sum of N_j = {a}, enumeration = {b}, expected {expected}"
                ));
            }
            if let Some(&t) = table.get(&(d, 2)) {
                if t != a {
                    out.push(format!("d={d}: k=2 bound {t} differs from {a}"));
                }
            }
        }
        Ok(out)
    })();
    CheckResult::from_result("k=2 closed form", r)
}

pub fn check_inclusion_exclusion() -> CheckResult {
    let r = (|| {
        let mut out = Vec::new();
        for d in 4..=12 {
            for j in 2..=(d - 2).min(6) {
                let closed = nk_closed_form(d, j)?;
                let enumerated = nk_enumerated(d, j)?;
                if closed != Some(enumerated) {
                    out.push(format!(
                        "N_{j} at d={d}: formula {closed:?}, enumeration {enumerated}"
                    ));
                }
            }
        }
        Ok(out)
    })();
    CheckResult::from_result("inclusion-exclusion identities", r)
}

pub fn check_k1_oracle() -> CheckResult {
    let r = (|| {
        let mut out = Vec::new();
        for d in 3..=7 {
            for g in enumerate_diagrams(d)? {
                let (v, nf) = (v_of_net(&g, 1)?, neighbor_free_count(&g) as u64);
                if v != nf {
                    out.push(format!("{g}: V = {v}, neighbor-free count = {nf}"));
                }
            }
        }
        let mut multiset: Vec<u64> = enumerate_diagrams(4)?
            .iter()
            .map(|g| v_of_net(g, 1))
            .collect::<Result<_>>()?;
        multiset.sort_unstable();
        if multiset != [0, 0, 2, 2, 2] {
            out.push(format!("d=4 multiset {multiset:?}"));
        }
        Ok(out)
    })();
    CheckResult::from_result("per-net k=1 oracle", r)
}

pub fn check_properties() -> CheckResult {
    let r = (|| {
        let mut out = Vec::new();
        for d in 2..=8 {
            let n = enumerate_diagrams(d)?.len() as u64;
            if n != catalan_u(d)? {
                out.push(format!("d={d}: {n} diagrams"));
            }
        }
        for d in 2..=6 {
            for g in enumerate_diagrams(d)? {
                if ChordDiagram::from_tableau(&g.to_tableau())? != g {
                    out.push(format!("{g}: tableau round trip"));
                }
                if (2 * d - 2) % g.shift_period() != 0 {
                    out.push(format!("{g}: shift period {}", g.shift_period()));
                }
            }
        }
        for d in 3..=6 {
            for g in enumerate_diagrams(d)? {
                for k in 1..=2 * d - 4 {
                    let v = v_of_net(&g, k)?;
                    if v_of_net(&g.shift(), k)? != v {
                        out.push(format!("{g} k={k}: V not shift invariant"));
                    }
                    if d <= 5 {
                        let flipped = Conventions {
                            initial_orientation: Orientation::Reversing,
                            ..Conventions::default()
                        };
                        if v_of_net_with(&g, k, &flipped)? != v {
                            out.push(format!("{g} k={k}: V not flip invariant"));
                        }
                        let slow = collect_grid_with(
                            &g,
                            k,
                            &Conventions::default(),
                            TableauRefresh::PerEvent,
                        )?;
                        if slow != collect_grid(&g, k)? {
                            out.push(format!("{g} k={k}: per-event grid differs"));
                        }
                    }
                }
            }
        }
        for d in 3..=7 {
            let ks: Vec<usize> = (1..=2 * d - 4).collect();
            let a = lower_bounds(d, &ks, &BoundOptions::default())?;
            let b = lower_bounds(
                d,
                &ks,
                &BoundOptions {
                    orbit_reduction: false,
                    ..BoundOptions::default()
                },
            )?;
            for (x, y) in a.iter().zip(&b) {
                if x.sum_v != y.sum_v {
                    out.push(format!(
                        "d={d} k={}: orbit sum {} vs naive {}",
                        x.k, x.sum_v, y.sum_v
                    ));
                }
            }
            let total: usize = orbits(d)?.iter().map(|o| o.period).sum();
            if total as u64 != catalan_u(d)? {
                out.push(format!("d={d}: orbit periods sum to {total}"));
            }
        }
        Ok(out)
    })();
    CheckResult::from_result("properties", r)
}

/// Run every check at `level`.
pub fn run(level: VerifyLevel, jobs: Option<usize>) -> Vec<CheckResult> {
    let table = match compute_table(level.dmax(), jobs) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::new("table", vec![format!("error: {e}")])],
    };
    vec![
        check_table(&table),
        check_k1_closed_form(&table),
        check_k2_closed_form(&table),
        check_inclusion_exclusion(),
        check_k1_oracle(),
        check_properties(),
    ]
}
