mod common;

use common::{det, matrix, minor_gcd, minor_rank, to_rows};
use hurewicz_core::intlin::{kernel_basis, lattice_member, rank, smith_normal_form};
use hurewicz_core::{Int, IntMatrix};
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

#[test]
fn two_by_two_against_minors() {
    let a = matrix(&[vec![2, 4], vec![6, 8]]);
    let rows = to_rows(&a);
    // oracle: d1 = gcd of entries, d1 d2 = gcd of 2x2 minors
    let d1 = minor_gcd(&rows, 1);
    let d12 = minor_gcd(&rows, 2);
    assert_eq!((d1, d12), (2, 8));
    let s = smith_normal_form(&a);
    assert_eq!(s.divisors(), vec![Int::from(2), Int::from(4)]);
}

#[test]
fn kernel_of_row_vector() {
    let k = kernel_basis(&matrix(&[vec![1, 1]]));
    assert_eq!(k.cols(), 1);
    let v = k.column(0);
    assert!(v == vec![Int::from(1), Int::from(-1)] || v == vec![Int::from(-1), Int::from(1)]);
    assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
    let z = kernel_basis(&IntMatrix::zeros(1, 2));
    assert_eq!(z.cols(), 2);
    assert_eq!(det(&to_rows(&z)).abs(), 1);
}

#[test]
fn membership_examples() {
    let two = matrix(&[vec![2]]);
    assert_eq!(lattice_member(&two, &[Int::from(4)]).unwrap(), Some(vec![Int::from(2)]));
    assert_eq!(lattice_member(&two, &[Int::from(3)]).unwrap(), None);
    let a = matrix(&[vec![2, 3]]);
    let x = lattice_member(&a, &[Int::from(1)]).unwrap().unwrap();
    assert_eq!(&x[0] * 2 + &x[1] * 3, Int::from(1));
    assert!(lattice_member(&a, &[Int::from(1), Int::from(2)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn certificates_hold(rows in small_matrix(8)) {
        let a = matrix(&rows);
        let s = smith_normal_form(&a);
        prop_assert!(s.verify(&a));
        prop_assert_eq!(det(&to_rows(&s.u)).abs(), 1);
        prop_assert_eq!(det(&to_rows(&s.v)).abs(), 1);
    }

    #[test]
    fn divisors_are_minor_gcd_ratios(rows in small_matrix(4)) {
        let a = matrix(&rows);
        let r = to_rows(&a);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.rank, minor_rank(&r));
        let mut product = 1i128;
        for (k, d) in s.divisors().iter().enumerate() {
            product *= i128::try_from(d.clone()).unwrap();
            prop_assert_eq!(product, minor_gcd(&r, k + 1));
        }
    }

    #[test]
    fn kernel_is_a_saturated_basis(rows in small_matrix(5)) {
        let a = matrix(&rows);
        let k = kernel_basis(&a);
        prop_assert!((&a * &k).is_zero());
        let r = minor_rank(&to_rows(&a));
        prop_assert_eq!(k.cols() + r, a.cols());
        prop_assert_eq!(rank(&a), r);
        if k.cols() > 0 {
            // a basis of the full kernel lattice has coprime maximal minors
            prop_assert_eq!(minor_gcd(&to_rows(&k), k.cols()), 1);
        }
    }

    #[test]
    fn membership_matches_divisibility(row in prop::collection::vec(-9i64..=9, 1..4), v in -30i64..=30) {
        let a = matrix(std::slice::from_ref(&row));
        let g = row.iter().fold(0i128, |g, &x| common::gcd(g, x as i128));
        let x = lattice_member(&a, &[Int::from(v)]).unwrap();
        let expected = if g == 0 { v == 0 } else { (v as i128) % g == 0 };
        prop_assert_eq!(x.is_some(), expected);
        if let Some(x) = x {
            let total: Int = x.iter().zip(&row).map(|(xi, &ri)| xi * ri).sum();
            prop_assert_eq!(total, Int::from(v));
        }
    }
}
