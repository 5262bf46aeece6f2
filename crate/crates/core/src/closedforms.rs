//! Closed forms and independent enumerations for `k = 1` and `k = 2`.

use crate::diagram::{catalan_u, diagrams, ChordDiagram};
use crate::error::{Error, Result};

/// `u_d - 2 u_{d-1}`, the bound for `k = 1`.
pub fn k1_bound(d: usize) -> Result<u64> {
    if d < 3 {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 3,
            max: usize::MAX,
        });
    }
    Ok(catalan_u(d)? - 2 * catalan_u(d - 1)?)
}

/// Positions whose partner is not one of their two cyclic neighbors.
pub fn neighbor_free_count(g: &ChordDiagram) -> usize {
    (1..=g.len())
        .filter(|&p| !g.joins_cyclic_neighbors(p))
        .count()
}

/// `Σ neighbor_free_count` over every net of degree `d`.
pub fn neighbor_free_total(d: usize) -> Result<u64> {
    Ok(diagrams(d)?.map(|g| neighbor_free_count(&g) as u64).sum())
}

// Coefficients of u_{d-2}, u_{d-3}, ... with alternating signs.
const NK_COEFFICIENTS: [&[i64]; 5] = [
    &[1],
    &[1, 2],
    &[1, 4, 3],
    &[1, 6, 10, 4],
    &[1, 8, 21, 20, 5],
];

fn check_j(d: usize, j: usize) -> Result<()> {
    if d < 4 || j < 2 || j > d - 2 {
        return Err(Error::JOutOfRange { d, j });
    }
    Ok(())
}

/// `N_j`: closed form for `j <= 6`, enumeration beyond.
pub fn nk(d: usize, j: usize) -> Result<u64> {
    check_j(d, j)?;
    match nk_closed_form(d, j)? {
        Some(v) => Ok(v),
        None => nk_enumerated(d, j),
    }
}

/// The inclusion-exclusion formula, when one is known (`j <= 6`).
pub fn nk_closed_form(d: usize, j: usize) -> Result<Option<u64>> {
    check_j(d, j)?;
    let Some(coefficients) = NK_COEFFICIENTS.get(j - 2) else {
        return Ok(None);
    };
    let mut total: i128 = 0;
    for (i, &a) in coefficients.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        total += sign * a as i128 * catalan_u(d - 2 - i)? as i128;
    }
    u64::try_from(total)
        .map(Some)
        .map_err(|_| Error::Overflow("nk closed form"))
}

/// Nets on `2d-6` points with no chord `{i, i+1}` for `1 <= i <= 2j-4`.
pub fn nk_enumerated(d: usize, j: usize) -> Result<u64> {
    check_j(d, j)?;
    Ok(diagrams(d - 2)?
        .filter(|g| (1..=2 * j - 4).all(|i| i + 1 > g.len() || g.partner(i) != i + 1))
        .count() as u64)
}

/// `𝒩_{2d-2} = Σ_{j=2}^{d-2} N_j`, the bound for `k = 2`.
pub fn script_n(d: usize) -> Result<u64> {
    if d < 4 {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 4,
            max: usize::MAX,
        });
    }
    (2..=d - 2).map(|j| nk(d, j)).sum()
}

/// Nets with chord `{1, 2}` whose first later adjacent chord `{p, p+1}`
/// (scanning `p = 3, 4, ...` without wrapping) starts at an even `p`.
pub fn script_n_enumerated(d: usize) -> Result<u64> {
    if d < 4 {
        return Err(Error::DegreeOutOfRange {
            d,
            min: 4,
            max: usize::MAX,
        });
    }
    Ok(diagrams(d)?
        .filter(|g| {
            g.partner(1) == 2
                && (3..g.len())
                    .find(|&p| g.partner(p) == p + 1)
                    .is_some_and(|p| p % 2 == 0)
        })
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_values() {
        assert_eq!(k1_bound(3).unwrap(), 0);
        assert_eq!(k1_bound(4).unwrap(), 1);
        assert_eq!(k1_bound(8).unwrap(), 165);
        assert_eq!(k1_bound(14).unwrap(), 326876);
        assert!(k1_bound(2).is_err());
    }

    #[test]
    fn neighbor_free() {
        let g: ChordDiagram = "()()()".parse().unwrap();
        assert_eq!(neighbor_free_count(&g), 0);
        let g = ChordDiagram::from_pairs(&[(1, 4), (2, 3), (5, 6)]).unwrap();
        assert_eq!(neighbor_free_count(&g), 2);
        assert_eq!(neighbor_free_total(4).unwrap(), 6);
        for d in 4..=9 {
            assert_eq!(
                neighbor_free_total(d).unwrap(),
                (2 * d as u64 - 2) * k1_bound(d).unwrap()
            );
        }
    }

    #[test]
    fn nk_examples() {
        assert_eq!(nk(5, 3).unwrap(), 0);
        assert_eq!(nk(8, 4).unwrap(), 1);
        assert_eq!(nk_enumerated(8, 4).unwrap(), 1);
        for d in 4..=12 {
            assert_eq!(nk(d, 2).unwrap(), catalan_u(d - 2).unwrap());
        }
        assert!(matches!(nk(6, 5), Err(Error::JOutOfRange { .. })));
        assert!(nk(6, 1).is_err());
        assert_eq!(nk_closed_form(12, 7).unwrap(), None);
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for d in 4..=12 {
            for j in 2..=(d - 2).min(6) {
                assert_eq!(
                    nk_closed_form(d, j).unwrap(),
                    Some(nk_enumerated(d, j).unwrap()),
                    "d={d} j={j}"
                );
            }
        }
    }

    #[test]
    fn script_n_values() {
        let expected = [1, 2, 6, 18, 57, 186];
        for (d, &e) in (4..=9).zip(&expected) {
            assert_eq!(script_n(d).unwrap(), e, "d={d}");
            assert_eq!(script_n_enumerated(d).unwrap(), e, "d={d}");
        }
    }
}
