//! Text forms of a diagram: the parenthesis word (canonical) and the pair
//! list `1-4,2-3,5-6`.

use std::fmt;
use std::str::FromStr;

use super::ChordDiagram;
use crate::error::{Error, Result};

impl ChordDiagram {
    /// Parse a parenthesis word such as `(())()`.
    pub fn from_word(word: &str) -> Result<Self> {
        let bytes = word.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse {
                position: 0,
                reason: "empty word".into(),
            });
        }
        if let Some(i) = bytes.iter().position(|&b| b != b'(' && b != b')') {
            return Err(Error::Parse {
                position: i + 1,
                reason: format!("unexpected character {:?}", bytes[i] as char),
            });
        }
        if !bytes.len().is_multiple_of(2) {
            return Err(Error::Parse {
                position: bytes.len(),
                reason: format!("odd length {}", bytes.len()),
            });
        }
        let mut partner = vec![0usize; bytes.len()];
        let mut stack = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => stack.push(i),
                _ => {
                    let j = stack.pop().ok_or_else(|| Error::Parse {
                        position: i + 1,
                        reason: "unbalanced: ')' without matching '('".into(),
                    })?;
                    partner[i] = j;
                    partner[j] = i;
                }
            }
        }
        if let Some(&open) = stack.last() {
            return Err(Error::Parse {
                position: open + 1,
                reason: "unbalanced: '(' is never closed".into(),
            });
        }
        Self::from_partner_table(&partner).map_err(|e| Error::Parse {
            position: 0,
            reason: e.to_string(),
        })
    }

    /// Parse an explicit pair list such as `1-4,2-3,5-6`.
    pub fn from_pair_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut offset = 0;
        for item in text.split(',') {
            let position = offset + 1;
            offset += item.len() + 1;
            let item = item.trim();
            let (a, b) = item.split_once('-').ok_or_else(|| Error::Parse {
                position,
                reason: format!("expected `a-b`, got {item:?}"),
            })?;
            let parse = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::Parse {
                    position,
                    reason: format!("bad position {s:?}"),
                })
            };
            pairs.push((parse(a)?, parse(b)?));
        }
        Self::from_pairs(&pairs).map_err(|e| Error::Parse {
            position: 0,
            reason: e.to_string(),
        })
    }

    /// Canonical text form.
    pub fn to_word(&self) -> String {
        (1..=self.len())
            .map(|p| if self.is_opener(p) { '(' } else { ')' })
            .collect()
    }

    pub fn to_pair_list(&self) -> String {
        self.pairs()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    /// Accepts either a parenthesis word or a pair list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('-') {
            Self::from_pair_list(s)
        } else {
            Self::from_word(s)
        }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}
