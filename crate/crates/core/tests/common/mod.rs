#![allow(dead_code)]

use moduli_core::arith::rational::int;
use moduli_core::mapseries::MapKey;
use moduli_core::BPoly;

/// `(n, j, i, coefficients of the b-polynomial)` for every published refined
/// map number with at most three edges.
pub const TABLE_ONE: &[(u32, u32, &[u32], &[i64])] = &[
    (1, 1, &[2], &[1]),
    (1, 1, &[0, 1], &[0, 1]),
    (1, 2, &[0, 1], &[1]),
    (2, 1, &[2, 1], &[2]),
    (2, 1, &[0, 2], &[0, 1]),
    (2, 1, &[1, 0, 1], &[0, 4]),
    (2, 1, &[0, 0, 0, 1], &[1, 1, 3]),
    (2, 2, &[0, 2], &[1]),
    (2, 2, &[1, 0, 1], &[4]),
    (2, 2, &[0, 0, 0, 1], &[0, 5]),
    (2, 3, &[0, 0, 0, 1], &[2]),
    (3, 1, &[2, 2], &[3]),
    (3, 1, &[0, 3], &[0, 1]),
    (3, 1, &[3, 0, 1], &[2]),
    (3, 1, &[1, 1, 1], &[0, 12]),
    (3, 1, &[0, 0, 2], &[1, 1, 5]),
    (3, 1, &[2, 0, 0, 1], &[0, 9]),
    (3, 1, &[0, 1, 0, 1], &[3, 3, 9]),
    (3, 1, &[1, 0, 0, 0, 1], &[6, 6, 18]),
    (3, 1, &[0, 0, 0, 0, 0, 1], &[0, 13, 13, 15]),
    (3, 2, &[0, 3], &[1]),
    (3, 2, &[1, 1, 1], &[12]),
    (3, 2, &[0, 0, 2], &[0, 9]),
    (3, 2, &[2, 0, 0, 1], &[9]),
    (3, 2, &[0, 1, 0, 1], &[0, 15]),
    (3, 2, &[1, 0, 0, 0, 1], &[0, 30]),
    (3, 2, &[0, 0, 0, 0, 0, 1], &[10, 10, 32]),
    (3, 3, &[0, 0, 2], &[4]),
    (3, 3, &[0, 1, 0, 1], &[6]),
    (3, 3, &[1, 0, 0, 0, 1], &[12]),
    (3, 3, &[0, 0, 0, 0, 0, 1], &[0, 22]),
    (3, 4, &[0, 0, 0, 0, 0, 1], &[5]),
];

pub fn table_one() -> Vec<(MapKey, BPoly)> {
    TABLE_ONE
        .iter()
        .map(|&(n, j, i, cs)| {
            (
                MapKey::new(i.to_vec(), j, n).expect("valid key"),
                BPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect()),
            )
        })
        .collect()
}
