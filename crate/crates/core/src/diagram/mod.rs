//! Non-crossing perfect matchings on `2d-2` cyclically ordered points.
//!
//! Positions are 1-based in the public API and ordered counterclockwise;
//! position 1 is the distinguished vertex. Internally the partner table is
//! stored 0-based.

mod codec;
mod enumerate;
mod tableau;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{diagrams, enumerate_diagrams, DiagramIter};
pub use tableau::FullTableau;

/// Largest degree accepted by the enumeration and bound routines.
pub const MAX_DEGREE: usize = 16;

/// The Catalan number `u_d = binom(2d-2, d-1) / d`.
pub fn catalan_u(d: usize) -> Result<u64> {
    if d == 0 {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 1,
            max: usize::MAX,
        });
    }
    // u_{n+1} = u_n * 2(2n-1) / (n+1), exact at every step
    let mut u: u128 = 1;
    for n in 1..d as u128 {
        u = u
            .checked_mul(2 * (2 * n - 1))
            .ok_or(Error::Overflow("catalan number"))?
            / (n + 1);
        if u > u64::MAX as u128 {
            return Err(Error::Overflow("catalan number"));
        }
    }
    Ok(u as u64)
}

/// A chord diagram (net): a fixed-point-free, non-crossing involution on
/// positions `1..=2d-2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    partner: Box<[u8]>,
}

impl ChordDiagram {
    /// Build from a 0-based partner table, checking every invariant.
    pub fn from_partner_table(partner: &[usize]) -> Result<Self> {
        let n = partner.len();
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "need a positive even number of positions, got {n}"
            )));
        }
        if n > 2 * MAX_DEGREE - 2 {
            return Err(Error::InvalidDiagram(format!(
                "{n} positions exceeds the supported maximum"
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= n || q == p || partner[q] != p {
                return Err(Error::InvalidDiagram(format!(
                    "position {} is not part of a valid pair",
                    p + 1
                )));
            }
        }
        for a in 0..n {
            let c = partner[a];
            if c < a {
                continue;
            }
            // any b strictly inside (a, c) must be matched inside as well
            for (b, &e) in partner.iter().enumerate().take(c).skip(a + 1) {
                if e < a || e > c {
                    return Err(Error::InvalidDiagram(format!(
                        "chords {}-{} and {}-{} cross",
                        a + 1,
                        c + 1,
                        b + 1,
                        e + 1
                    )));
                }
            }
        }
        Ok(Self::from_table_unchecked(
            partner.iter().map(|&q| q as u8).collect(),
        ))
    }

    /// Build from 1-based chord endpoints.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let n = 2 * pairs.len();
        let mut table = vec![usize::MAX; n];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p == 0 || p > n {
                    return Err(Error::InvalidDiagram(format!(
                        "position {p} out of range 1..={n}"
                    )));
                }
                if table[p - 1] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("position {p} used twice")));
                }
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!(
                    "position {a} paired with itself"
                )));
            }
            table[a - 1] = b - 1;
            table[b - 1] = a - 1;
        }
        Self::from_partner_table(&table)
    }

    pub(crate) fn from_table_unchecked(partner: Box<[u8]>) -> Self {
        debug_assert!(partner.len().is_multiple_of(2));
        Self { partner }
    }

    /// Number of positions, `2d-2`.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// The degree `d`.
    pub fn degree(&self) -> usize {
        self.partner.len() / 2 + 1
    }

    /// Partner of 1-based position `p`.
    pub fn partner(&self, p: usize) -> usize {
        self.partner[p - 1] as usize + 1
    }

    /// 0-based partner table.
    pub fn partner_table(&self) -> &[u8] {
        &self.partner
    }

    /// True when position `p` (1-based) opens its chord, i.e. its partner is larger.
    pub fn is_opener(&self, p: usize) -> bool {
        self.partner(p) > p
    }

    /// Chords as 1-based `(smaller, larger)` pairs, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&p| self.is_opener(p))
            .map(|p| (p, self.partner(p)))
            .collect()
    }

    /// Rotate every chord one position counterclockwise: `{a, b} -> {a+1, b+1}`.
    pub fn shift(&self) -> Self {
        self.rotate(1)
    }

    /// Apply [`shift`](Self::shift) `steps` times.
    pub fn rotate(&self, steps: usize) -> Self {
        let n = self.len();
        let s = steps % n;
        let mut out = vec![0u8; n];
        for (p, &q) in self.partner.iter().enumerate() {
            out[(p + s) % n] = ((q as usize + s) % n) as u8;
        }
        Self::from_table_unchecked(out.into_boxed_slice())
    }

    /// Smallest `T >= 1` with `shift^T(self) == self`.
    pub fn shift_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&t| n.is_multiple_of(t) && self.rotate(t) == *self)
            .unwrap_or(n)
    }

    /// Whether chords join positions `p` and its cyclic successor.
    pub fn joins_cyclic_neighbors(&self, p: usize) -> bool {
        let n = self.len();
        let q = self.partner(p);
        q == p % n + 1 || p == q % n + 1
    }
}

impl Ord for ChordDiagram {
    /// Lexicographic on the parenthesis word, `(` before `)`.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |g: &ChordDiagram, i: usize| !(g.partner[i] as usize > i);
        self.len().cmp(&other.len()).then_with(|| {
            (0..self.len())
                .map(|i| key(self, i).cmp(&key(other, i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for ChordDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}
