//! Small codes with known parameters.

use std::sync::Arc;

use crate::code::LinearCode;
use crate::gf::FiniteField;

fn binary(rows: &[[u32; 10]]) -> LinearCode {
    let f2 = Arc::new(FiniteField::prime(2).expect("2 is prime"));
    LinearCode::from_rows(f2, rows).expect("rows are independent")
}

/// Systematic binary [7,4,3] Hamming code.
pub fn hamming74() -> LinearCode {
    let f2 = Arc::new(FiniteField::prime(2).expect("2 is prime"));
    LinearCode::from_rows(
        f2,
        &[[1, 0, 0, 0, 1, 1, 0], [0, 1, 0, 0, 1, 0, 1], [0, 0, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]],
    )
    .expect("rows are independent")
}

/// Two nested pairs `(C1, C2)` and `(C1', C2')` of binary [10,5] ⊃ [10,3]
/// codes. Both pairs have relative hierarchy [2, 4], but the dual pairs
/// `(C2^⊥, C1^⊥)` and `(C2'^⊥, C1'^⊥)` have second relative weights 3 and 4.
pub fn relative_duality_pairs() -> [(LinearCode, LinearCode); 2] {
    let g1 = [
        [0, 1, 0, 1, 0, 0, 1, 0, 0, 0],
        [1, 1, 1, 1, 1, 1, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 0, 1],
        [1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 0, 0, 0, 0],
    ];
    let g1p = [
        [1, 1, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 1, 1, 0, 1, 0, 0],
        [1, 0, 1, 0, 0, 0, 1, 0, 1, 0],
        [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    ];
    [(binary(&g1), binary(&g1[..3])), (binary(&g1p), binary(&g1p[..3]))]
}
