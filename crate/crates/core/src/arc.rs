//! Two-row tableaux of a net restricted to an arc of the circle.
//!
//! The vertices inside the arc are numbered `1..=n` in counterclockwise
//! order. Index `j` goes to the second row when its chord ends at an earlier
//! vertex of the same arc; chords leaving the arc are counted in `exiting`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::trajectory::{CircleArc, TrajectoryState, Vertex};

/// Summary counts of an arc tableau; all the interval formulas need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ArcCounts {
    /// Vertices inside the arc (a double vertex counts twice).
    pub n: usize,
    /// Even entries of the second row.
    pub even: usize,
    /// Odd entries of the second row.
    pub odd: usize,
    /// Vertices whose chord leaves the arc.
    pub exiting: usize,
}

/// The full arc tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ArcTableau {
    pub n: usize,
    pub first_row: Vec<usize>,
    pub second_row: Vec<usize>,
    pub even: usize,
    pub odd: usize,
    pub exiting: usize,
    /// `(E_i, O_i)` for each of the `exiting + 1` stretches between
    /// consecutive exiting vertices (and the arc ends).
    pub segments: Vec<(usize, usize)>,
}

/// Parity of the number of simple vertices separating a double vertex from
/// the end of its arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which end of the arc the degenerate parity is counted from.
///
/// `ArcEnd` is the default and the one that reproduces the published table;
/// `ArcStart` is kept for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum ParityAnchor {
    #[default]
    ArcEnd,
    ArcStart,
}

/// Tableau at a degree-6 coincidence whose two chords both leave the arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerateTableau {
    pub tableau: ArcTableau,
    /// 1-based arc index `i` of the double vertex; it holds `i` and `i + 1`.
    pub double_index: usize,
    /// Parity under the default [`ParityAnchor`].
    pub parity: Parity,
}

impl DegenerateTableau {
    pub fn parity_from(&self, anchor: ParityAnchor) -> Parity {
        degenerate_parity(self.tableau.n, self.double_index, anchor)
    }
}

pub(crate) fn degenerate_parity(n: usize, double_index: usize, anchor: ParityAnchor) -> Parity {
    match anchor {
        // simple vertices strictly after the double vertex
        ParityAnchor::ArcEnd => Parity::of(n - double_index - 1),
        // simple vertices strictly before it
        ParityAnchor::ArcStart => Parity::of(double_index - 1),
    }
}

impl From<&ArcTableau> for ArcCounts {
    fn from(t: &ArcTableau) -> Self {
        ArcCounts {
            n: t.n,
            even: t.even,
            odd: t.odd,
            exiting: t.exiting,
        }
    }
}

impl ArcTableau {
    /// Build from `inside[j] = Some(i)` when arc vertex `j` is joined to arc
    /// vertex `i`, `None` when its chord leaves the arc (all 0-based).
    pub fn from_links(inside: &[Option<usize>]) -> Result<Self> {
        let n = inside.len();
        let mut first_row = Vec::new();
        let mut second_row = Vec::new();
        let mut segments = vec![(0, 0)];
        let (mut even, mut odd, mut exiting) = (0, 0, 0);
        for (j, link) in inside.iter().enumerate() {
            let index = j + 1;
            match *link {
                Some(i) if i >= n || i == j || inside[i] != Some(j) => {
                    return Err(Error::InvalidDiagram(format!(
                        "arc vertex {index} has an inconsistent chord"
                    )));
                }
                Some(i) if i < j => {
                    second_row.push(index);
                    let seg = segments.last_mut().expect("non-empty");
                    if index % 2 == 0 {
                        even += 1;
                        seg.0 += 1;
                    } else {
                        odd += 1;
                        seg.1 += 1;
                    }
                }
                Some(_) => first_row.push(index),
                None => {
                    first_row.push(index);
                    exiting += 1;
                    segments.push((0, 0));
                }
            }
        }
        Ok(ArcTableau {
            n,
            first_row,
            second_row,
            even,
            odd,
            exiting,
            segments,
        })
    }

    /// Build from the chords internal to an arc of `n` vertices (1-based
    /// endpoints); every other vertex exits.
    pub fn from_internal_chords(n: usize, chords: &[(usize, usize)]) -> Result<Self> {
        let mut inside = vec![None; n];
        for &(a, b) in chords {
            if a == 0
                || b == 0
                || a > n
                || b > n
                || a == b
                || inside[a - 1].is_some()
                || inside[b - 1].is_some()
            {
                return Err(Error::InvalidDiagram(format!("bad internal chord {a}-{b}")));
            }
            inside[a - 1] = Some(b - 1);
            inside[b - 1] = Some(a - 1);
        }
        Self::from_links(&inside)
    }

    pub fn counts(&self) -> ArcCounts {
        self.into()
    }
}

/// Tableau of `arc` in a nondegenerate state (the moving vertex is always
/// strictly inside a gap between events).
pub fn arc_tableau(state: &TrajectoryState, arc: CircleArc) -> ArcTableau {
    let slots: Vec<usize> = state.arc_slots(arc).collect();
    tableau_of_slots(state.partner_table(), &slots)
}

fn tableau_of_slots(partner: &[u8], slots: &[usize]) -> ArcTableau {
    let n_total = partner.len();
    let mut index_of = vec![usize::MAX; n_total];
    for (j, &s) in slots.iter().enumerate() {
        index_of[s] = j;
    }
    let inside: Vec<Option<usize>> = slots
        .iter()
        .map(|&s| Some(index_of[partner[s] as usize]).filter(|&i| i != usize::MAX))
        .collect();
    ArcTableau::from_links(&inside).expect("slot matching is an involution")
}

/// Tableau for the coincidence of the moving vertex with fixed vertex
/// `vertex` (the next vertex counterclockwise of it), when both chords at the
/// coincidence leave `arc`.
///
/// The double vertex takes two consecutive indices. The slot-level matching
/// is the same just before and just after the coincidence, so either side
/// yields this tableau.
pub fn degenerate_arc_tableau(
    state: &TrajectoryState,
    vertex: usize,
    arc: CircleArc,
) -> Result<DegenerateTableau> {
    let m = state.moving_slot();
    let next = state.next_slot(m);
    if state.vertex_at(next) != Vertex::Fixed(vertex) {
        return Err(Error::NotBothExit(format!(
            "fixed vertex {vertex} is not the next vertex after the moving one"
        )));
    }
    if !state.in_arc(arc, m) || !state.in_arc(arc, next) {
        return Err(Error::NotBothExit(format!(
            "the coincidence with {vertex} is not inside {arc:?}"
        )));
    }
    let partner = state.partner_table();
    let (a, b) = (partner[m] as usize, partner[next] as usize);
    if a == next {
        return Err(Error::NotBothExit(format!(
            "vertex {vertex} is joined to the moving vertex (degree 2)"
        )));
    }
    if state.in_arc(arc, a) || state.in_arc(arc, b) {
        return Err(Error::NotBothExit(format!(
            "a chord at vertex {vertex} stays inside {arc:?}"
        )));
    }
    let slots: Vec<usize> = state.arc_slots(arc).collect();
    let double_index = slots
        .iter()
        .position(|&s| s == m)
        .expect("moving slot is in arc")
        + 1;
    let tableau = tableau_of_slots(partner, &slots);
    let parity = degenerate_parity(tableau.n, double_index, ParityAnchor::default());
    Ok(DegenerateTableau {
        tableau,
        double_index,
        parity,
    })
}

/// Allocation-free counts over `len` consecutive slots starting at `start`.
/// Also returns the 1-based arc index of `marked` when it lies in the arc.
pub(crate) fn arc_counts(
    partner: &[u8],
    start: usize,
    len: usize,
    marked: usize,
) -> (ArcCounts, Option<usize>) {
    let total = partner.len();
    let mut c = ArcCounts {
        n: len,
        ..ArcCounts::default()
    };
    let mut marked_index = None;
    for j in 0..len {
        let s = (start + j) % total;
        if s == marked {
            marked_index = Some(j + 1);
        }
        let q = partner[s] as usize;
        // arc offset of the partner, >= len means outside
        let offset = (q + total - start) % total;
        if offset >= len {
            c.exiting += 1;
        } else if offset < j {
            if (j + 1) % 2 == 0 {
                c.even += 1;
            } else {
                c.odd += 1;
            }
        }
    }
    (c, marked_index)
}
