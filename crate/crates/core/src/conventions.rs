//! Sign and anchoring conventions of the trajectory simulation.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::arc::ParityAnchor;
use crate::bounds::Orientation;

/// The sign/orientation choices a run depends on. The default is the only
/// configuration used for published numbers; the others exist to debug and
/// to test invariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Conventions {
    /// Orientation on the stretch just counterclockwise of `r` at `t = 0+`.
    pub initial_orientation: Orientation,
    /// Which arc end the degenerate-vertex parity is counted from.
    pub parity_anchor: ParityAnchor,
}

impl Conventions {
    fn describe(&self) -> String {
        let orient = match self.initial_orientation {
            Orientation::Preserving => "+1",
            Orientation::Reversing => "-1",
        };
        let parity = match self.parity_anchor {
            ParityAnchor::ArcEnd => "arc-end",
            ParityAnchor::ArcStart => "arc-start",
        };
        format!(
            "netbounds-conventions/1;initial-orientation={orient};degenerate-parity={parity};winding-anchor=clockwise-of-r"
        )
    }

    /// Short stable hash of the conventions, used to key cached results.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.describe().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}
