//! Lower bounds for the number of real rational functions with prescribed
//! real critical points, computed from the dynamics of chord diagrams
//! (nets) as one critical point travels around the circle.
//!
//! The pipeline is: enumerate nets ([`diagram`]), run the trajectory of the
//! moving critical point ([`trajectory`]), turn arc tableaux ([`arc`]) into
//! integer intervals ([`bounds`]), fold them into the `𝓛`/`𝒰` grid, and count
//! forced sign changes ([`counting`]). [`closedforms`] holds the quantities
//! with known formulas used to cross-check the enumeration.

pub mod arc;
pub mod bounds;
pub mod closedforms;
pub mod conventions;
pub mod counting;
pub mod diagram;
pub mod error;
pub mod reference;
pub mod render;
pub mod report;
pub mod trajectory;
pub mod verify;

pub use arc::{ArcCounts, ArcTableau, DegenerateTableau, Parity, ParityAnchor};
pub use bounds::{IntegerInterval, Orientation};
pub use conventions::Conventions;
pub use counting::{
    lower_bound, lower_bounds, v_of_net, BoundOptions, BoundReport, ExtremumKind, ExtremumPoint,
};
pub use diagram::{catalan_u, ChordDiagram, FullTableau, MAX_DEGREE};
pub use error::{Error, Result};
pub use trajectory::{collect_grid, BoundsGrid, CircleArc, TrajectoryState};
