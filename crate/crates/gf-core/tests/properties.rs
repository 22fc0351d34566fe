//! Property-based invariants for exact field and matrix arithmetic.

use gf_core::{jordan_type, solve_linear, Field, Matrix};
use proptest::prelude::*;

fn f9_elem() -> impl Strategy<Value = u16> {
    0u16..9u16
}

proptest! {
    #[test]
    fn f9_add_mul_distribute(a in f9_elem(), b in f9_elem(), c in f9_elem()) {
        let f = Field::new(3, 2).unwrap();
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }

    #[test]
    fn solve_round_trip_f3(entries in prop::collection::vec(0u16..3, 16), x in prop::collection::vec(0u16..3, 4)) {
        let f = Field::new(3, 1).unwrap();
        let a = Matrix::from_fn(f.clone(), 4, 4, |i, j| entries[4 * i + j]);
        let xv = Matrix::col_vec(f.clone(), &x);
        let b = a.mul(&xv);
        let sol = solve_linear(&a, &b).unwrap();
        prop_assert_eq!(a.mul(&sol.particular), b);
    }

    #[test]
    fn jordan_parts_sum(entries in prop::collection::vec(0u16..5, 25)) {
        let f = Field::new(5, 1).unwrap();
        // strictly upper triangular, hence nilpotent
        let n = Matrix::from_fn(f, 5, 5, |i, j| if j > i { entries[5 * i + j] } else { 0 });
        let jt = jordan_type(&n, 0).unwrap();
        prop_assert_eq!(jt.total(), 5);
    }

    #[test]
    fn rank_plus_nullity(entries in prop::collection::vec(0u16..3, 30)) {
        let f = Field::new(3, 1).unwrap();
        let a = Matrix::from_fn(f, 5, 6, |i, j| entries[6 * i + j]);
        prop_assert_eq!(a.rank() + a.nullity(), 6);
    }
}
