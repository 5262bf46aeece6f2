//! Extrema of the `𝓛`/`𝒰` grid, the count `V(Γ, k)`, and the aggregated
//! lower bound over all nets of a degree.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::conventions::Conventions;
use crate::diagram::{catalan_u, diagrams, ChordDiagram, MAX_DEGREE};
use crate::error::{invariant, Error, Result};
use crate::trajectory::{check_k, collect_grid_with, BoundsGrid, TableauRefresh};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExtremumKind {
    Max,
    Min,
}

/// A local extremum of the grid: `level` is `𝓛` at a max and `𝒰` at a min.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremumPoint {
    pub index: usize,
    pub kind: ExtremumKind,
    pub level: i64,
}

// Walk from `i` in direction `step` until the defining condition is met
// (true) or violated (false). Backward walks compare strictly.
fn walk(grid: &BoundsGrid, i: usize, kind: ExtremumKind, backward: bool) -> bool {
    let s = grid.len();
    let (li, ui) = grid.pair(i);
    let mut j = i;
    for _ in 1..s {
        j = if backward {
            (j + s - 1) % s
        } else {
            (j + 1) % s
        };
        let (lj, uj) = grid.pair(j);
        let ok = match kind {
            ExtremumKind::Max => {
                if uj <= li {
                    return true;
                }
                if backward {
                    li > lj
                } else {
                    li >= lj
                }
            }
            ExtremumKind::Min => {
                if lj >= ui {
                    return true;
                }
                if backward {
                    ui < uj
                } else {
                    ui <= uj
                }
            }
        };
        if !ok {
            return false;
        }
    }
    false
}

fn is_extremum(grid: &BoundsGrid, i: usize, kind: ExtremumKind) -> bool {
    walk(grid, i, kind, true) && walk(grid, i, kind, false)
}

/// Local maxima and minima of the grid in index order.
///
/// A max at `i` needs, walking backward, some `j` with `𝒰(j) <= 𝓛(i)` before
/// any `𝓛(j) >= 𝓛(i)`, and walking forward the same before any
/// `𝓛(j) > 𝓛(i)`. Minima are the mirror image.
pub fn extrema(grid: &BoundsGrid) -> Vec<ExtremumPoint> {
    (0..grid.len())
        .filter_map(|i| {
            [ExtremumKind::Max, ExtremumKind::Min]
                .into_iter()
                .find(|&kind| is_extremum(grid, i, kind))
                .map(|kind| {
                    let level = match kind {
                        ExtremumKind::Max => grid.lower[i],
                        ExtremumKind::Min => grid.upper[i],
                    };
                    ExtremumPoint {
                        index: i,
                        kind,
                        level,
                    }
                })
        })
        .collect()
}

/// `V = Σ (𝓛(max) - 𝒰(min) + 1)` over cyclically adjacent extremum pairs;
/// every such pair forces that many sign changes of `r - s`'s increment
/// minus its forced level.
pub fn v_of_grid(grid: &BoundsGrid) -> Result<u64> {
    let ex = extrema(grid);
    let mut total = 0u64;
    for (a, b) in ex.iter().zip(ex.iter().cycle().skip(1)) {
        if a.kind == b.kind {
            return Err(invariant!(
                "extrema do not alternate: {:?} at {} then {:?} at {}",
                a.kind,
                BoundsGrid::label(a.index),
                b.kind,
                BoundsGrid::label(b.index)
            ));
        }
        let (max, min) = if a.kind == ExtremumKind::Max {
            (a.level, b.level)
        } else {
            (b.level, a.level)
        };
        let v = max - min + 1;
        if v < 1 {
            return Err(invariant!(
                "adjacent extrema {max} and {min} give a non-positive count"
            ));
        }
        total += v as u64;
    }
    Ok(total)
}

pub fn v_of_net(g: &ChordDiagram, k: usize) -> Result<u64> {
    v_of_net_with(g, k, &Conventions::default())
}

pub fn v_of_net_with(g: &ChordDiagram, k: usize, conventions: &Conventions) -> Result<u64> {
    v_of_grid(&collect_grid_with(
        g,
        k,
        conventions,
        TableauRefresh::PerHalfInterval,
    )?)
}

/// A shift orbit: `period` distinct nets, all with the same `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: ChordDiagram,
    pub period: usize,
}

// The offset sequence δ(p) = partner(p) - p (mod n) rotates with the net, so
// the orbit representative is the net whose δ is the least rotation.
fn orbit_of(g: &ChordDiagram) -> Option<usize> {
    let p = g.partner_table();
    let n = p.len();
    let delta: Vec<u8> = (0..n)
        .map(|i| ((p[i] as usize + n - i) % n) as u8)
        .collect();
    for t in 1..n {
        let rotated = delta[t..].iter().chain(&delta[..t]);
        match rotated.cmp(delta.iter()) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => return Some(t),
            std::cmp::Ordering::Greater => {}
        }
    }
    Some(n)
}

/// Every shift orbit of nets of degree `d`.
pub fn orbits(d: usize) -> Result<Vec<Orbit>> {
    Ok(diagrams(d)?
        .filter_map(|g| {
            orbit_of(&g).map(|period| Orbit {
                representative: g,
                period,
            })
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub d: usize,
    pub k: usize,
    /// `Σ_Γ V(Γ, k)` over all nets.
    pub sum_v: u64,
    /// `sum_v / (2d - 2)`.
    pub bound: u64,
    pub diagram_count: u64,
    #[serde(skip)]
    pub elapsed: Duration,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Sum over shift orbits instead of every net.
    pub orbit_reduction: bool,
    pub conventions: Conventions,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            jobs: None,
            orbit_reduction: true,
            conventions: Conventions::default(),
        }
    }
}

pub fn check_degree(d: usize) -> Result<()> {
    if !(3..=MAX_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 3,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

/// Lower bound on the number of real rational functions of degree `d`
/// with the prescribed critical points, for `k` points in `(r, s)`.
pub fn lower_bound(d: usize, k: usize) -> Result<BoundReport> {
    lower_bound_with(d, k, &BoundOptions::default())
}

pub fn lower_bound_with(d: usize, k: usize, options: &BoundOptions) -> Result<BoundReport> {
    Ok(lower_bounds(d, &[k], options)?.remove(0))
}

/// Bounds for several `k` at once, sharing one pass over the nets.
pub fn lower_bounds(d: usize, ks: &[usize], options: &BoundOptions) -> Result<Vec<BoundReport>> {
    check_degree(d)?;
    for &k in ks {
        check_k(d, k)?;
    }
    let start = Instant::now();
    let weighted: Vec<(ChordDiagram, u64)> = if options.orbit_reduction {
        orbits(d)?
            .into_iter()
            .map(|o| (o.representative, o.period as u64))
            .collect()
    } else {
        diagrams(d)?.map(|g| (g, 1)).collect()
    };
    let conventions = options.conventions;
    let sum = || -> Result<Vec<u64>> {
        weighted
            .par_iter()
            .map(|(g, w)| {
                ks.iter()
                    .map(|&k| Ok(w * v_of_net_with(g, k, &conventions)?))
                    .collect::<Result<Vec<u64>>>()
            })
            .try_reduce(
                || vec![0; ks.len()],
                |a, b| Ok(a.iter().zip(&b).map(|(x, y)| x + y).collect()),
            )
    };
    let sums = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| invariant!("thread pool: {e}"))?
            .install(sum)?,
        None => sum()?,
    };
    let elapsed = start.elapsed();
    let diagram_count = catalan_u(d)?;
    let weight_total: u64 = weighted.iter().map(|(_, w)| w).sum();
    if weight_total != diagram_count {
        return Err(invariant!(
            "covered {weight_total} nets, expected {diagram_count}"
        ));
    }
    let modulus = (2 * d - 2) as u64;
    ks.iter()
        .zip(sums)
        .map(|(&k, sum_v)| {
            if sum_v % modulus != 0 {
                return Err(invariant!(
                    "Σ V = {sum_v} for d={d} k={k} is not divisible by {modulus}"
                ));
            }
            Ok(BoundReport {
                d,
                k,
                sum_v,
                bound: sum_v / modulus,
                diagram_count,
                elapsed,
                tool_version: env!("CARGO_PKG_VERSION"),
            })
        })
        .collect()
}
