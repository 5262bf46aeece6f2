use super::{ChordDiagram, MAX_DEGREE};
use crate::error::{Error, Result};

/// Streams every non-crossing perfect matching on `2d-2` points, lexicographic
/// on the parenthesis word.
#[derive(Debug, Clone)]
pub struct DiagramIter {
    // true = '('
    word: Vec<bool>,
    done: bool,
}

/// Iterator over all diagrams of degree `d` (2 <= d <= 16).
pub fn diagrams(d: usize) -> Result<DiagramIter> {
    if !(2..=MAX_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 2,
            max: MAX_DEGREE,
        });
    }
    let half = d - 1;
    let mut word = vec![true; half];
    word.extend(std::iter::repeat_n(false, half));
    Ok(DiagramIter { word, done: false })
}

/// All diagrams of degree `d`, collected.
pub fn enumerate_diagrams(d: usize) -> Result<Vec<ChordDiagram>> {
    Ok(diagrams(d)?.collect())
}

impl DiagramIter {
    fn current(&self) -> ChordDiagram {
        let mut partner = vec![0u8; self.word.len()];
        let mut stack = Vec::with_capacity(self.word.len() / 2);
        for (i, &open) in self.word.iter().enumerate() {
            if open {
                stack.push(i);
            } else {
                let j = stack.pop().expect("word is balanced");
                partner[i] = j as u8;
                partner[j] = i as u8;
            }
        }
        ChordDiagram::from_table_unchecked(partner.into_boxed_slice())
    }

    /// Step to the lexicographic successor; false when exhausted.
    fn step(&mut self) -> bool {
        let n = self.word.len();
        let half = n / 2;
        let mut opens = half;
        let mut closes = half;
        for i in (0..n).rev() {
            if self.word[i] {
                opens -= 1;
            } else {
                closes -= 1;
            }
            // counts now describe the prefix [0, i)
            if self.word[i] && closes < opens {
                self.word[i] = false;
                let mut o = opens;
                for slot in &mut self.word[i + 1..] {
                    *slot = o < half;
                    if *slot {
                        o += 1;
                    }
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DiagramIter {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        let g = self.current();
        self.done = !self.step();
        Some(g)
    }
}
