//! Published values of `m(n, d, k)` for `n = 3..=6`, `d = 2..=9`, `k = 1..=9`.
//!
//! A zero entry marks a cell left blank in the published table (`k` at or
//! beyond `dim A(n)_d`, where no non-zero subspace of that codimension exists).

/// `TABLE[n - 3][k - 1][d - 2]`.
const TABLE: [[[u64; 8]; 9]; 4] = [
    // n = 3
    [
        [3, 3, 3, 3, 3, 3, 3, 3],
        [6, 6, 6, 6, 6, 6, 6, 6],
        [10, 10, 10, 10, 10, 10, 10, 10],
        [12, 13, 13, 13, 13, 13, 13, 13],
        [14, 16, 17, 16, 16, 16, 16, 16],
        [0, 21, 21, 21, 21, 21, 21, 21],
        [0, 23, 24, 24, 25, 24, 24, 24],
        [0, 25, 27, 27, 28, 29, 27, 27],
        [0, 27, 30, 31, 31, 32, 33, 31],
    ],
    // n = 4
    [
        [4, 4, 4, 4, 4, 4, 4, 4],
        [8, 8, 8, 8, 8, 8, 8, 8],
        [13, 13, 13, 13, 13, 13, 13, 13],
        [20, 20, 20, 20, 20, 20, 20, 20],
        [23, 24, 25, 24, 24, 24, 24, 24],
        [26, 29, 29, 31, 28, 28, 28, 28],
        [30, 35, 35, 35, 37, 35, 35, 35],
        [32, 39, 40, 41, 41, 43, 40, 40],
        [34, 45, 45, 45, 47, 47, 49, 45],
    ],
    // n = 5
    [
        [5, 5, 5, 5, 5, 5, 5, 5],
        [10, 10, 10, 10, 10, 10, 10, 10],
        [17, 16, 16, 16, 16, 16, 16, 16],
        [24, 25, 24, 24, 24, 24, 24, 24],
        [35, 35, 35, 35, 35, 35, 35, 35],
        [39, 40, 40, 41, 40, 40, 40, 40],
        [43, 47, 45, 46, 49, 45, 45, 45],
        [48, 54, 55, 54, 54, 57, 54, 54],
        [55, 60, 60, 63, 61, 62, 65, 59],
    ],
    // n = 6
    [
        [6, 6, 6, 6, 6, 6, 6, 6],
        [12, 12, 12, 12, 12, 12, 12, 12],
        [21, 19, 19, 19, 19, 19, 19, 19],
        [28, 31, 28, 28, 28, 28, 28, 28],
        [40, 40, 41, 40, 40, 40, 40, 40],
        [56, 56, 56, 56, 56, 56, 56, 56],
        [61, 62, 62, 62, 62, 62, 62, 62],
        [66, 71, 68, 68, 68, 71, 68, 68],
        [73, 79, 81, 79, 79, 79, 81, 79],
    ],
];

/// A cell of the published table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceCell {
    Value(u64),
    /// Printed as a dash.
    Blank,
}

pub const N_RANGE: std::ops::RangeInclusive<usize> = 3..=6;
pub const D_RANGE: std::ops::RangeInclusive<u32> = 2..=9;
pub const K_RANGE: std::ops::RangeInclusive<u64> = 1..=9;

/// The published cell for `(n, d, k)`, or `None` outside the table.
pub fn reference_m(n: usize, d: u32, k: u64) -> Option<ReferenceCell> {
    if !N_RANGE.contains(&n) || !D_RANGE.contains(&d) || !K_RANGE.contains(&k) {
        return None;
    }
    let v = TABLE[n - 3][(k - 1) as usize][(d - 2) as usize];
    Some(if v == 0 { ReferenceCell::Blank } else { ReferenceCell::Value(v) })
}

/// Number of cells in the published table.
pub fn cell_count() -> usize {
    TABLE.len() * TABLE[0].len() * TABLE[0][0].len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        assert_eq!(cell_count(), 288);
        assert_eq!(reference_m(3, 2, 6), Some(ReferenceCell::Blank));
        assert_eq!(reference_m(4, 5, 6), Some(ReferenceCell::Value(31)));
        assert_eq!(reference_m(3, 4, 5), Some(ReferenceCell::Value(17)));
        assert_eq!(reference_m(2, 4, 5), None);
        let blanks = N_RANGE
            .flat_map(|n| D_RANGE.flat_map(move |d| K_RANGE.map(move |k| reference_m(n, d, k))))
            .filter(|c| *c == Some(ReferenceCell::Blank))
            .count();
        assert_eq!(blanks, 4);
    }
}
