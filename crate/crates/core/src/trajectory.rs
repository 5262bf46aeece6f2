//! The moving critical point and the `𝓛`/`𝒰` grid.
//!
//! The circle carries `2d-3` fixed vertices, the moving vertex `M`, and two
//! marked points `r` and `s`. The state is kept in a slot frame: the
//! `2d-2` vertex slots hold a matching that never changes. When `M` passes a
//! fixed vertex the two swap slots, and when `M` passes a marker the marker
//! moves back one slot. Read in terms of vertex identities this is exactly
//! the chord persistence / reconnection rule (`M–a, y–b` becomes
//! `y–a, M–b`).
//!
//! Time is never represented; only the ordered sequence of crossings
//! matters. Half-interval `2n` is `V_n` (`M` inside `(s, r)`) and `2n + 1`
//! is `W_n` (`M` inside `(r, s)`).

use serde::Serialize;

use crate::arc::{self, arc_counts, degenerate_parity, ArcCounts};
use crate::bounds::{
    interval_degenerate, interval_nondegenerate, winding_constant, IntegerInterval, Orientation,
};
use crate::conventions::Conventions;
use crate::diagram::ChordDiagram;
use crate::error::{invariant, Error, Result};

/// One of the two open arcs cut out by `r` and `s`, positively oriented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CircleArc {
    /// From `r` to `s`; holds the `k` fixed vertices.
    RS,
    /// From `s` to `r`.
    SR,
}

impl CircleArc {
    pub fn other(self) -> Self {
        match self {
            CircleArc::RS => CircleArc::SR,
            CircleArc::SR => CircleArc::RS,
        }
    }
}

/// Identity of the vertex sitting in a slot. Fixed vertices are numbered
/// `1..=2d-3` counterclockwise from `s`; vertex 1 is the distinguished one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Vertex {
    Moving,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EventKind {
    /// `M` passes the fixed vertex it is joined to; the matching is unchanged.
    FixedDegree2,
    /// `M` passes a fixed vertex joined elsewhere; chords reconnect.
    FixedDegree6,
    CrossR,
    CrossS,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CrossingEvent {
    pub kind: EventKind,
    /// Fixed vertex passed, for the two fixed kinds.
    pub vertex: Option<usize>,
    /// Half-interval containing the event; for marker crossings, the one
    /// that starts there (cyclically).
    pub half_interval: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryState {
    partner: Box<[u8]>,
    slots: Vec<Vertex>,
    moving: usize,
    r_gap: usize,
    s_gap: usize,
    k: usize,
    revolution: usize,
    half_interval: usize,
    orient: Orientation,
    c: i64,
}

/// Check `1 <= k <= 2d-4`.
pub fn check_k(d: usize, k: usize) -> Result<()> {
    let max = (2 * d).saturating_sub(4);
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { d, k, max });
    }
    Ok(())
}

/// Start of the trajectory at `t = 0+`: position 1 of `g` is `M`, just
/// past `s`; positions `2..=2d-2-k` lie in `(s, r)` and the last `k`
/// positions in `(r, s)`.
pub fn initial_state(g: &ChordDiagram, k: usize) -> Result<TrajectoryState> {
    initial_state_with(g, k, &Conventions::default())
}

pub fn initial_state_with(
    g: &ChordDiagram,
    k: usize,
    conventions: &Conventions,
) -> Result<TrajectoryState> {
    let n = g.len();
    let d = g.degree();
    check_k(d, k)?;
    let mut slots = Vec::with_capacity(n);
    slots.push(Vertex::Moving);
    slots.extend((1..n).map(Vertex::Fixed));
    let mut state = TrajectoryState {
        partner: g.partner_table().into(),
        slots,
        moving: 0,
        r_gap: n - k,
        s_gap: 0,
        k,
        revolution: 0,
        half_interval: 0,
        orient: conventions.initial_orientation,
        c: 0,
    };
    state.c = winding_constant(&state);
    Ok(state)
}

impl TrajectoryState {
    pub fn d(&self) -> usize {
        self.partner.len() / 2 + 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Completed passes of `M` over `s`.
    pub fn revolution(&self) -> usize {
        self.revolution
    }

    /// Index into the half-interval grid (not reduced modulo its length).
    pub fn half_interval(&self) -> usize {
        self.half_interval
    }

    /// Orientation on the stretch immediately counterclockwise of `r`.
    pub fn orientation(&self) -> Orientation {
        self.orient
    }

    /// The winding constant fixed at `t = 0+`.
    pub fn winding(&self) -> i64 {
        self.c
    }

    pub fn partner_table(&self) -> &[u8] {
        &self.partner
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    pub fn moving_slot(&self) -> usize {
        self.moving
    }

    /// Slot just after `r`.
    pub fn r_gap(&self) -> usize {
        self.r_gap
    }

    /// Slot just after `s`.
    pub fn s_gap(&self) -> usize {
        self.s_gap
    }

    pub fn vertex_at(&self, slot: usize) -> Vertex {
        self.slots[slot]
    }

    pub fn slot_of(&self, v: Vertex) -> usize {
        self.slots
            .iter()
            .position(|&x| x == v)
            .expect("every vertex has a slot")
    }

    pub fn next_slot(&self, slot: usize) -> usize {
        (slot + 1) % self.vertex_count()
    }

    pub fn prev_slot(&self, slot: usize) -> usize {
        (slot + self.vertex_count() - 1) % self.vertex_count()
    }

    /// The vertex currently joined to `v`.
    pub fn partner_of(&self, v: Vertex) -> Vertex {
        self.slots[self.partner[self.slot_of(v)] as usize]
    }

    fn arc_bounds(&self, arc: CircleArc) -> (usize, usize) {
        let n = self.vertex_count();
        let (start, end) = match arc {
            CircleArc::RS => (self.r_gap, self.s_gap),
            CircleArc::SR => (self.s_gap, self.r_gap),
        };
        (start, (end + n - start) % n)
    }

    /// Slots inside `arc`, in counterclockwise order.
    pub fn arc_slots(&self, arc: CircleArc) -> impl Iterator<Item = usize> + '_ {
        let (start, len) = self.arc_bounds(arc);
        (0..len).map(move |j| (start + j) % self.vertex_count())
    }

    pub fn arc_len(&self, arc: CircleArc) -> usize {
        self.arc_bounds(arc).1
    }

    pub fn in_arc(&self, arc: CircleArc, slot: usize) -> bool {
        let (start, len) = self.arc_bounds(arc);
        (slot + self.vertex_count() - start) % self.vertex_count() < len
    }

    /// The arc currently holding `M`.
    pub fn moving_arc(&self) -> CircleArc {
        if self.in_arc(CircleArc::RS, self.moving) {
            CircleArc::RS
        } else {
            CircleArc::SR
        }
    }

    /// Orientation on the stretch from the start of `arc` to its first vertex.
    pub fn arc_orientation(&self, arc: CircleArc) -> Orientation {
        match arc {
            CircleArc::RS => self.orient,
            CircleArc::SR => self.orient.after(self.arc_len(CircleArc::RS)),
        }
    }

    /// `j` such that `M` lies between fixed vertices `j` and `j + 1`
    /// (`j = 2d-3` for the gap that contains `s`).
    pub fn moving_gap(&self) -> usize {
        match self.slots[self.prev_slot(self.moving)] {
            Vertex::Fixed(j) => j,
            Vertex::Moving => unreachable!("only one moving vertex"),
        }
    }

    /// Current net read counterclockwise from the first vertex after `s`.
    pub fn diagram(&self) -> ChordDiagram {
        self.net_from_slot(self.s_gap)
    }

    /// Current net with the distinguished fixed vertex as position 1.
    pub fn distinguished_net(&self) -> ChordDiagram {
        self.net_from_slot(self.slot_of(Vertex::Fixed(1)))
    }

    fn net_from_slot(&self, start: usize) -> ChordDiagram {
        let n = self.vertex_count();
        let table: Vec<u8> = (0..n)
            .map(|j| ((self.partner[(start + j) % n] as usize + n - start) % n) as u8)
            .collect();
        ChordDiagram::from_table_unchecked(table.into_boxed_slice())
    }

    /// What the next call to [`advance`](Self::advance) will cross.
    pub fn peek(&self) -> (EventKind, Option<usize>) {
        let next = self.next_slot(self.moving);
        if next == self.r_gap {
            (EventKind::CrossR, None)
        } else if next == self.s_gap {
            (EventKind::CrossS, None)
        } else {
            let vertex = match self.slots[next] {
                Vertex::Fixed(j) => j,
                Vertex::Moving => unreachable!("only one moving vertex"),
            };
            let kind = if self.partner[self.moving] as usize == next {
                EventKind::FixedDegree2
            } else {
                EventKind::FixedDegree6
            };
            (kind, Some(vertex))
        }
    }

    /// Move `M` across the next point counterclockwise.
    pub fn advance(&mut self) -> CrossingEvent {
        let (kind, vertex) = self.peek();
        let grid_len = 4 * self.d() - 4;
        match kind {
            EventKind::CrossR => {
                self.r_gap = self.moving;
                self.orient = self.orient.flipped();
                self.half_interval += 1;
            }
            EventKind::CrossS => {
                self.s_gap = self.moving;
                self.revolution += 1;
                self.half_interval += 1;
            }
            EventKind::FixedDegree2 | EventKind::FixedDegree6 => {
                let next = self.next_slot(self.moving);
                self.slots.swap(self.moving, next);
                self.moving = next;
            }
        }
        CrossingEvent {
            kind,
            vertex,
            half_interval: self.half_interval % grid_len,
        }
    }

    /// Interval for the increment over `arc` in the current (nondegenerate)
    /// configuration.
    pub fn arc_interval(&self, arc: CircleArc) -> Result<IntegerInterval> {
        let (start, len) = self.arc_bounds(arc);
        let counts = arc_counts(&self.partner, start, len, usize::MAX).0;
        interval_nondegenerate(counts, self.arc_orientation(arc))
    }

    /// Whether the coincidence about to happen is a degree-6 vertex with both
    /// chords leaving the arc that holds it.
    pub fn next_is_both_exit(&self) -> bool {
        let (kind, _) = self.peek();
        if kind != EventKind::FixedDegree6 {
            return false;
        }
        let arc = self.moving_arc();
        let next = self.next_slot(self.moving);
        !self.in_arc(arc, self.partner[self.moving] as usize)
            && !self.in_arc(arc, self.partner[next] as usize)
    }
}

/// The integer step functions `𝓛` (`lower`) and `𝒰` (`upper`) on the
/// `4d-4` half-intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsGrid {
    pub d: usize,
    pub k: usize,
    pub c: i64,
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl BoundsGrid {
    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn pair(&self, i: usize) -> (i64, i64) {
        (self.lower[i], self.upper[i])
    }

    /// `V3`, `W3`, ...
    pub fn label(i: usize) -> String {
        format!("{}{}", if i.is_multiple_of(2) { 'V' } else { 'W' }, i / 2)
    }
}

/// Where a collected bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    RsNondegenerate,
    SrNondegenerate,
    RsDegenerate { vertex: usize },
    SrDegenerate { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollectedBound {
    pub source: BoundSource,
    /// Interval for the source arc itself.
    pub interval: IntegerInterval,
    /// What it says about the `(r, s)` increment: the interval itself for
    /// the `(r, s)` arc, `(c - hi, c - lo)` for the `(s, r)` arc.
    pub contribution: IntegerInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfIntervalTrace {
    pub index: usize,
    pub label: String,
    pub collected: Vec<CollectedBound>,
    pub lower: i64,
    pub upper: i64,
}

/// How often arc tableaux are computed while walking a half-interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableauRefresh {
    /// Once per half-interval with allocation-free counts (the slot-level
    /// tableau cannot change between markers).
    #[default]
    PerHalfInterval,
    /// Full [`arc::arc_tableau`] recomputation after every event; slow, used
    /// for differential testing.
    PerEvent,
}

/// Run the whole trajectory (`(2d-2)(2d-1)` events) and fold the collected
/// bounds into `𝓛`/`𝒰`.
pub fn collect_grid(g: &ChordDiagram, k: usize) -> Result<BoundsGrid> {
    collect_grid_with(
        g,
        k,
        &Conventions::default(),
        TableauRefresh::PerHalfInterval,
    )
}

pub fn collect_grid_with(
    g: &ChordDiagram,
    k: usize,
    conventions: &Conventions,
    refresh: TableauRefresh,
) -> Result<BoundsGrid> {
    run(g, k, conventions, refresh, None)
}

/// [`collect_grid`] plus a per-half-interval record of every collected bound.
pub fn trace_grid(
    g: &ChordDiagram,
    k: usize,
    conventions: &Conventions,
) -> Result<(BoundsGrid, Vec<HalfIntervalTrace>)> {
    let mut trace = Vec::new();
    let grid = run(
        g,
        k,
        conventions,
        TableauRefresh::PerHalfInterval,
        Some(&mut trace),
    )?;
    Ok((grid, trace))
}

struct Fold<'a> {
    lower: i64,
    upper: i64,
    trace: Option<&'a mut Vec<CollectedBound>>,
}

impl Fold<'_> {
    fn add(&mut self, source: BoundSource, interval: IntegerInterval, c: i64) {
        let contribution = match source {
            BoundSource::RsNondegenerate | BoundSource::RsDegenerate { .. } => interval,
            BoundSource::SrNondegenerate | BoundSource::SrDegenerate { .. } => {
                interval.complement(c)
            }
        };
        self.lower = self.lower.max(contribution.lo);
        self.upper = self.upper.min(contribution.hi);
        if let Some(t) = self.trace.as_deref_mut() {
            t.push(CollectedBound {
                source,
                interval,
                contribution,
            });
        }
    }
}

fn check_pair(
    rs: IntegerInterval,
    sr: IntegerInterval,
    c: i64,
    state: &TrajectoryState,
) -> Result<()> {
    if rs.intersect(&sr.complement(c)).is_none() {
        return Err(invariant!(
            "empty intersection {rs} ∩ {} (c={c}) at half-interval {} of k={}",
            sr.complement(c),
            state.half_interval,
            state.k
        ));
    }
    Ok(())
}

fn nondegenerate_pair(
    state: &TrajectoryState,
    refresh: TableauRefresh,
) -> Result<(ArcCounts, ArcCounts, IntegerInterval, IntegerInterval)> {
    let (rs, sr) = match refresh {
        TableauRefresh::PerHalfInterval => {
            let (rs_start, rs_len) = state.arc_bounds(CircleArc::RS);
            let (sr_start, sr_len) = state.arc_bounds(CircleArc::SR);
            (
                arc_counts(&state.partner, rs_start, rs_len, usize::MAX).0,
                arc_counts(&state.partner, sr_start, sr_len, usize::MAX).0,
            )
        }
        TableauRefresh::PerEvent => (
            arc::arc_tableau(state, CircleArc::RS).counts(),
            arc::arc_tableau(state, CircleArc::SR).counts(),
        ),
    };
    let rs_interval = interval_nondegenerate(rs, state.arc_orientation(CircleArc::RS))?;
    let sr_interval = interval_nondegenerate(sr, state.arc_orientation(CircleArc::SR))?;
    check_pair(rs_interval, sr_interval, state.c, state)?;
    Ok((rs, sr, rs_interval, sr_interval))
}

fn run(
    g: &ChordDiagram,
    k: usize,
    conventions: &Conventions,
    refresh: TableauRefresh,
    mut trace: Option<&mut Vec<HalfIntervalTrace>>,
) -> Result<BoundsGrid> {
    let mut state = initial_state_with(g, k, conventions)?;
    let d = state.d();
    let c = state.c;
    let grid_len = 4 * d - 4;
    let mut lower = Vec::with_capacity(grid_len);
    let mut upper = Vec::with_capacity(grid_len);

    for h in 0..grid_len {
        debug_assert_eq!(state.half_interval, h);
        if winding_constant(&state) != c {
            return Err(invariant!("winding constant drifted at half-interval {h}"));
        }
        let mut collected = Vec::new();
        let mut fold = Fold {
            lower: i64::MIN,
            upper: i64::MAX,
            trace: trace.is_some().then_some(&mut collected),
        };
        let (rs, sr, rs_interval, sr_interval) = nondegenerate_pair(&state, refresh)?;
        fold.add(BoundSource::RsNondegenerate, rs_interval, c);
        fold.add(BoundSource::SrNondegenerate, sr_interval, c);

        loop {
            let (kind, vertex) = state.peek();
            if matches!(kind, EventKind::CrossR | EventKind::CrossS) {
                break;
            }
            if state.next_is_both_exit() {
                let vertex = vertex.expect("fixed crossing");
                let arc = state.moving_arc();
                let (counts, parity) = match refresh {
                    TableauRefresh::PerHalfInterval => {
                        let counts = if arc == CircleArc::RS { rs } else { sr };
                        let (start, _) = state.arc_bounds(arc);
                        let index = (state.moving + state.vertex_count() - start)
                            % state.vertex_count()
                            + 1;
                        (
                            counts,
                            degenerate_parity(counts.n, index, conventions.parity_anchor),
                        )
                    }
                    TableauRefresh::PerEvent => {
                        let dt = arc::degenerate_arc_tableau(&state, vertex, arc)?;
                        (
                            dt.tableau.counts(),
                            dt.parity_from(conventions.parity_anchor),
                        )
                    }
                };
                let interval = interval_degenerate(counts, parity, state.arc_orientation(arc))?;
                match arc {
                    CircleArc::RS => {
                        check_pair(interval, sr_interval, c, &state)?;
                        fold.add(BoundSource::RsDegenerate { vertex }, interval, c);
                    }
                    CircleArc::SR => {
                        check_pair(rs_interval, interval, c, &state)?;
                        fold.add(BoundSource::SrDegenerate { vertex }, interval, c);
                    }
                }
            }
            state.advance();
            if refresh == TableauRefresh::PerEvent {
                let (_, _, a, b) = nondegenerate_pair(&state, refresh)?;
                fold.add(BoundSource::RsNondegenerate, a, c);
                fold.add(BoundSource::SrNondegenerate, b, c);
            }
        }

        let Fold {
            lower: lo,
            upper: hi,
            ..
        } = fold;
        if lo >= hi {
            return Err(invariant!(
                "empty grid cell ({lo}, {hi}) at {}",
                BoundsGrid::label(h)
            ));
        }
        lower.push(lo);
        upper.push(hi);
        if let Some(t) = trace.as_deref_mut() {
            t.push(HalfIntervalTrace {
                index: h,
                label: BoundsGrid::label(h),
                collected,
                lower: lo,
                upper: hi,
            });
        }
        state.advance();
    }

    if state.revolution != 2 * d - 2 || state.diagram() != *g {
        return Err(invariant!(
            "trajectory of {g} did not close up after 2d-2 revolutions"
        ));
    }
    Ok(BoundsGrid {
        d,
        k,
        c,
        lower,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn initial_layout() {
        let st = initial_state(&net("(())()"), 1).unwrap();
        assert_eq!(st.arc_len(CircleArc::RS), 1);
        assert_eq!(st.arc_len(CircleArc::SR), 5);
        assert_eq!(st.moving_arc(), CircleArc::SR);
        assert_eq!(st.arc_slots(CircleArc::SR).count(), 5);
        assert_eq!(st.revolution(), 0);
        assert_eq!(st.orientation(), Orientation::Preserving);
        assert_eq!(st.moving_gap(), 5);

        let st = initial_state(&net("(())()"), 4).unwrap();
        assert_eq!(st.arc_len(CircleArc::SR), 2);
        assert_eq!(
            st.arc_slots(CircleArc::SR)
                .filter(|&s| s != st.moving_slot())
                .count(),
            1
        );
    }

    #[test]
    fn k_range() {
        assert!(matches!(
            initial_state(&net("(())()"), 0),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(initial_state(&net("(())()"), 5).is_err());
        assert!(initial_state(&net("()"), 1).is_err());
    }

    #[test]
    fn winding_constant_small_cases() {
        assert_eq!(initial_state(&net("()()"), 1).unwrap().winding(), 1);
        assert_eq!(initial_state(&net("(())()"), 1).unwrap().winding(), 0);
    }

    #[test]
    fn degree2_crossing_keeps_matching() {
        // M (position 1) is joined to position 2
        let mut st = initial_state(&net("()(())"), 2).unwrap();
        let before = st.partner_of(Vertex::Moving);
        assert_eq!(before, Vertex::Fixed(1));
        let ev = st.advance();
        assert_eq!(ev.kind, EventKind::FixedDegree2);
        assert_eq!(ev.vertex, Some(1));
        assert_eq!(st.partner_of(Vertex::Moving), Vertex::Fixed(1));
    }

    #[test]
    fn degree6_crossing_reconnects() {
        // M–F3 and F1–F2: crossing F1 gives F1–F3 and M–F2
        let mut st = initial_state(&net("(())()"), 1).unwrap();
        assert_eq!(st.partner_of(Vertex::Moving), Vertex::Fixed(3));
        assert_eq!(st.partner_of(Vertex::Fixed(1)), Vertex::Fixed(2));
        let ev = st.advance();
        assert_eq!(ev.kind, EventKind::FixedDegree6);
        assert_eq!(st.partner_of(Vertex::Fixed(1)), Vertex::Fixed(3));
        assert_eq!(st.partner_of(Vertex::Moving), Vertex::Fixed(2));
    }

    #[test]
    fn one_revolution_is_a_shift() {
        for g in crate::diagram::enumerate_diagrams(5).unwrap() {
            let mut st = initial_state(&g, 2).unwrap();
            let n = 2 * st.d() - 1;
            let mut kinds = Vec::new();
            for _ in 0..n {
                kinds.push(st.advance().kind);
            }
            assert_eq!(kinds.iter().filter(|&&k| k == EventKind::CrossR).count(), 1);
            assert_eq!(*kinds.last().unwrap(), EventKind::CrossS);
            assert_eq!(st.revolution(), 1);
            assert_eq!(st.diagram(), g.shift());
        }
    }

    #[test]
    fn orientation_flips_only_at_r() {
        let mut st = initial_state(&net("((()))()"), 2).unwrap();
        for _ in 0..50 {
            let before = st.orientation();
            let ev = st.advance();
            assert_eq!(st.orientation() != before, ev.kind == EventKind::CrossR);
        }
    }

    #[test]
    fn grid_shape_and_known_values() {
        let grid = collect_grid(&net("(())()"), 1).unwrap();
        assert_eq!(grid.len(), 12);
        assert_eq!(grid.c, 0);
        assert_eq!(
            grid.lower,
            vec![-1, 0, -1, 0, -1, -2, -1, -1, -1, -2, -1, 0]
        );
        assert_eq!(grid.upper, vec![1, 1, 1, 2, 1, 0, 1, 0, 1, 0, 1, 2]);
        assert_eq!((grid.pair(5), grid.pair(11)), ((-2, 0), (0, 2)));
        assert_eq!(BoundsGrid::label(5), "W2");
        assert_eq!(BoundsGrid::label(11), "W5");
    }

    #[test]
    fn trace_matches_grid() {
        let g = net("((())())");
        let (grid, trace) = trace_grid(&g, 3, &Conventions::default()).unwrap();
        assert_eq!(trace.len(), grid.len());
        for t in &trace {
            assert_eq!((t.lower, t.upper), grid.pair(t.index));
            let lo = t.collected.iter().map(|b| b.contribution.lo).max().unwrap();
            let hi = t.collected.iter().map(|b| b.contribution.hi).min().unwrap();
            assert_eq!((lo, hi), (t.lower, t.upper));
        }
    }

    #[test]
    fn per_event_refresh_gives_identical_grids() {
        for d in 3..=6 {
            for g in crate::diagram::enumerate_diagrams(d).unwrap() {
                for k in 1..=2 * d - 4 {
                    let a = collect_grid(&g, k).unwrap();
                    let b =
                        collect_grid_with(&g, k, &Conventions::default(), TableauRefresh::PerEvent)
                            .unwrap();
                    assert_eq!(a, b, "{g} k={k}");
                }
            }
        }
    }
}
