//! Integer envelopes for the argument increment of a circle map over an arc.
//!
//! Every endpoint is kept in units of `2π`, so an [`IntegerInterval`]
//! `(lo, hi)` stands for the open interval `(2π·lo, 2π·hi)`.

use std::fmt;

use serde::Serialize;

use crate::arc::{ArcCounts, Parity};
use crate::error::{invariant, Result};
use crate::trajectory::TrajectoryState;

/// Orientation of the function on a sub-arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Orientation {
    #[default]
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Preserving => Orientation::Reversing,
            Orientation::Reversing => Orientation::Preserving,
        }
    }

    /// Orientation after passing `count` simple critical points.
    pub fn after(self, count: usize) -> Self {
        if count.is_multiple_of(2) {
            self
        } else {
            self.flipped()
        }
    }
}

/// Open interval `(2π·lo, 2π·hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntegerInterval {
    pub lo: i64,
    pub hi: i64,
}

impl IntegerInterval {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn width(&self) -> i64 {
        self.hi - self.lo
    }

    /// `(-hi, -lo)`: the interval seen by `1/f`.
    pub fn mirrored(&self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    /// `(c - hi, c - lo)`: what a bound on the complementary arc says about
    /// this one when the two increments sum to `2π·c`.
    pub fn complement(&self, c: i64) -> Self {
        Self {
            lo: c - self.hi,
            hi: c - self.lo,
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo < hi).then_some(Self { lo, hi })
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for IntegerInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Endpoints in π units for a preserving start, before halving.
fn pi_endpoints(c: ArcCounts) -> (i64, i64) {
    let n = c.n as i64;
    let parity = (n + 1) % 2;
    (
        parity - n + 4 * c.odd as i64 - 1,
        parity + n - 4 * c.even as i64 + 1,
    )
}

fn halve(pi_units: i64) -> Result<i64> {
    if pi_units % 2 != 0 {
        return Err(invariant!(
            "interval endpoint {pi_units}π is not a multiple of 2π"
        ));
    }
    Ok(pi_units / 2)
}

/// Interval for an arc whose vertices are all simple. `orient` is the
/// orientation on the stretch from the arc's start to its first vertex.
pub fn interval_nondegenerate(
    counts: impl Into<ArcCounts>,
    orient: Orientation,
) -> Result<IntegerInterval> {
    let (lo, hi) = pi_endpoints(counts.into());
    let base = IntegerInterval::new(halve(lo)?, halve(hi)?);
    Ok(match orient {
        Orientation::Preserving => base,
        Orientation::Reversing => base.mirrored(),
    })
}

/// Interval for an arc holding a degree-6 double vertex with both chords
/// leaving the arc. Odd parity lowers the upper end by one, even parity
/// raises the lower end by one.
pub fn interval_degenerate(
    counts: impl Into<ArcCounts>,
    parity: Parity,
    orient: Orientation,
) -> Result<IntegerInterval> {
    let (lo, hi) = pi_endpoints(counts.into());
    let (lo, hi) = match parity {
        Parity::Odd => (lo, hi - 2),
        Parity::Even => (lo + 2, hi),
    };
    let base = IntegerInterval::new(halve(lo)?, halve(hi)?);
    if base.lo >= base.hi {
        return Err(invariant!("degenerate interval {base} is empty"));
    }
    Ok(match orient {
        Orientation::Preserving => base,
        Orientation::Reversing => base.mirrored(),
    })
}

/// `c = σ·(E - O - 1)` for the full tableau read from `anchor` (0-based
/// slot), where `σ` is the orientation on the stretch from the anchor to
/// the next vertex.
pub fn winding_constant_from(
    partner: &[u8],
    anchor: usize,
    orient_after_anchor: Orientation,
) -> i64 {
    let n = partner.len();
    let (mut even, mut odd) = (0i64, 0i64);
    for j in 0..n {
        let s = (anchor + j) % n;
        let offset = (partner[s] as usize + n - anchor) % n;
        if offset < j {
            if (j + 1) % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    orient_after_anchor.sign() * (even - odd - 1)
}

/// The winding constant `c` of a state: the tableau is anchored at the
/// vertex immediately clockwise of `r`, so the anchor's following stretch
/// contains `r` and carries the state's orientation.
pub fn winding_constant(state: &TrajectoryState) -> i64 {
    let anchor = state.prev_slot(state.r_gap());
    winding_constant_from(state.partner_table(), anchor, state.orientation())
}
