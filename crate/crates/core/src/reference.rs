//! Published bound values for `4 <= d <= 14`, `1 <= k <= d - 2`.

/// Row `k - 1` holds the values for `d = k + 2 ..= 14` (the table is
/// triangular: `k <= d - 2`), except rows 1 and 2 which start at `d = 4`.
const ROWS: [&[u64]; 12] = [
    &[1, 4, 14, 48, 165, 572, 2002, 7072, 25194, 90440, 326876],
    &[1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724, 91144],
    &[4, 12, 36, 113, 366, 1216, 4122, 14202, 49592, 175124],
    &[12, 34, 107, 348, 1156, 3920, 13514, 47212, 166788],
    &[36, 115, 372, 1232, 4166, 14326, 49950, 176178],
    &[117, 370, 1232, 4164, 14326, 49920, 175978],
    &[370, 1224, 4104, 14024, 48610, 170606],
    &[1244, 4134, 14176, 49188, 172660],
    &[4098, 13948, 48030, 167690],
    &[14106, 48348, 169326],
    &[47904, 166630],
    &[168000],
];

pub const MAX_PUBLISHED_DEGREE: usize = 14;

/// Published value for `(d, k)`, if the table has one.
pub fn published_bound(d: usize, k: usize) -> Option<u64> {
    if !(4..=MAX_PUBLISHED_DEGREE).contains(&d) || k == 0 || k > d - 2 {
        return None;
    }
    let first_d = k.max(2) + 2;
    ROWS[k - 1].get(d - first_d).copied()
}

/// Every `(d, k, bound)` triple, ordered by `d` then `k`.
pub fn published_table() -> Vec<(usize, usize, u64)> {
    (4..=MAX_PUBLISHED_DEGREE)
        .flat_map(|d| (1..=d - 2).map(move |k| (d, k, published_bound(d, k).expect("in range"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_spot_values() {
        assert_eq!(published_table().len(), 77);
        assert_eq!(published_bound(4, 1), Some(1));
        assert_eq!(published_bound(6, 3), Some(12));
        assert_eq!(published_bound(8, 5), Some(115));
        assert_eq!(published_bound(11, 9), Some(4098));
        assert_eq!(published_bound(14, 12), Some(168000));
        assert_eq!(published_bound(4, 3), None);
        assert_eq!(published_bound(15, 1), None);
    }
}
