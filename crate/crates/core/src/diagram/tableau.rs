use super::ChordDiagram;
use crate::error::{Error, Result};

/// A standard Young tableau of shape `2 x (d-1)`, entries 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullTableau {
    pub first_row: Vec<usize>,
    pub second_row: Vec<usize>,
}

impl FullTableau {
    /// Check row lengths, strict increase, that the rows partition
    /// `1..=2d-2`, and the column condition.
    pub fn validate(&self) -> Result<()> {
        let len = self.first_row.len();
        if len == 0 || self.second_row.len() != len {
            return Err(Error::InvalidTableau(format!(
                "rows must be non-empty and of equal length, got {} and {}",
                len,
                self.second_row.len()
            )));
        }
        let n = 2 * len;
        let mut seen = vec![false; n + 1];
        for row in [&self.first_row, &self.second_row] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(
                    "rows must be strictly increasing".into(),
                ));
            }
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidTableau(format!(
                        "entry {x} is out of range or repeated"
                    )));
                }
                seen[x] = true;
            }
        }
        if let Some(i) = (0..len).find(|&i| self.second_row[i] <= self.first_row[i]) {
            return Err(Error::InvalidTableau(format!(
                "column {} violates the column condition",
                i + 1
            )));
        }
        Ok(())
    }
}

impl ChordDiagram {
    /// `i` goes to the first row iff its partner is larger.
    pub fn to_tableau(&self) -> FullTableau {
        let (first_row, second_row) = (1..=self.len()).partition(|&p| self.is_opener(p));
        FullTableau {
            first_row,
            second_row,
        }
    }

    /// Inverse of [`to_tableau`](Self::to_tableau): each second-row entry is
    /// matched to the nearest unmatched first-row entry before it.
    pub fn from_tableau(t: &FullTableau) -> Result<Self> {
        t.validate()?;
        let n = 2 * t.first_row.len();
        let mut opener = vec![false; n + 1];
        for &x in &t.first_row {
            opener[x] = true;
        }
        let mut partner = vec![0usize; n];
        let mut stack = Vec::new();
        for p in 1..=n {
            if opener[p] {
                stack.push(p);
            } else {
                let q = stack
                    .pop()
                    .ok_or_else(|| Error::InvalidTableau(format!("entry {p} has no opener")))?;
                partner[p - 1] = q - 1;
                partner[q - 1] = p - 1;
            }
        }
        Self::from_partner_table(&partner)
    }
}
