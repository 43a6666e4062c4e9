use proptest::prelude::*;

use wbrauer::algcore::WalledBrauer;
use wbrauer::bmod::{labels, lambda_leq, BModules};
use wbrauer::coeffs::{Field, PrimeField, Rationals};
use wbrauer::linalg::Mat;
use wbrauer::modcore::{decompose, is_isomorphic};
use wbrauer::spechtmod::perm_module_prod;

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(5u32), Just(7), Just(11), Just(13)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(p in prime(), a in 0i64..200, b in 0i64..200, c in 0i64..200) {
        let f = PrimeField::new(p);
        let (x, y, z) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        if let Some(i) = f.inv(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &i)));
        } else {
            prop_assert!(f.is_zero(&x));
        }
    }

    #[test]
    fn rational_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..50) {
        let q = Rationals;
        let (x, y) = (q.from_i64(a), q.from_i64(b));
        let z = q.inv(&q.from_i64(c)).unwrap();
        prop_assert_eq!(q.mul(&q.add(&x, &y), &z), q.add(&q.mul(&x, &z), &q.mul(&y, &z)));
        prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x);
    }

    #[test]
    fn rank_nullity(p in prime(), rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let f = PrimeField::new(p);
        let vals: Vec<Vec<_>> = (0..rows)
            .map(|i| (0..cols).map(|j| f.from_i64(((seed >> ((i * cols + j) % 60)) & 7) as i64)).collect())
            .collect();
        let m = Mat::from_rows(&f, cols, vals);
        let k = m.right_kernel();
        prop_assert_eq!(m.rank() + k.rows(), cols);
        prop_assert!(m.mul(&k.transpose()).is_zero());
    }

    #[test]
    fn walled_brauer_is_associative(i in 0usize..24, j in 0usize..24, k in 0usize..24, delta in -3i64..6) {
        let b = WalledBrauer::new(&Rationals, 2, 2, Rationals.from_i64(delta)).unwrap();
        let a = b.algebra();
        let (x, y, z) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
        let left = a.multiply(&a.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = a.multiply(&x, &a.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let star = |e| a.involution(e).unwrap().unwrap();
        let xy = a.multiply(&x, &y).unwrap();
        prop_assert_eq!(star(&xy), a.multiply(&star(&y), &star(&x)).unwrap());
    }

    #[test]
    fn decomposition_certificate_and_change_of_basis(p in prop_oneof![Just(5u32), Just(7)], seed in any::<u64>()) {
        let f = PrimeField::new(p);
        let m = perm_module_prod(&[2, 1], &[1, 1], &f).unwrap();
        let rep = decompose(&m, seed).unwrap();
        prop_assert!(rep.verify_certificate(&m));
        prop_assert_eq!(rep.pieces.iter().map(|x| x.basis.rows()).sum::<usize>(), m.dim());
        let again = decompose(&m, seed.wrapping_add(1)).unwrap();
        prop_assert_eq!(rep.multiset(), again.multiset());
        let inv = rep.certificate.inverse().unwrap();
        prop_assert!(is_isomorphic(&m, &m.change_basis(&inv), seed).unwrap().is_some());
    }

    #[test]
    fn label_order_is_a_partial_order(i in 0usize..9, j in 0usize..9, k in 0usize..9) {
        let all = labels(3, 2);
        let (x, y, z) = (&all[i], &all[j], &all[k]);
        prop_assert!(lambda_leq(x, x).unwrap());
        if lambda_leq(x, y).unwrap() && lambda_leq(y, x).unwrap() {
            prop_assert_eq!(x, y);
        }
        if lambda_leq(x, y).unwrap() && lambda_leq(y, z).unwrap() {
            prop_assert!(lambda_leq(x, z).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn filtration_labels_do_not_depend_on_the_seed(seed in any::<u64>(), which in 0usize..5, p in prop_oneof![Just(5u32), Just(7)]) {
        let f = PrimeField::new(p);
        let reference = BModules::new(WalledBrauer::new(&f, 2, 2, f.from_i64(2)).unwrap(), 0);
        let other = BModules::new(WalledBrauer::new(&f, 2, 2, f.from_i64(2)).unwrap(), seed);
        let x = &reference.labels()[which];
        let m = reference.perm_module(x).unwrap();
        let a = reference.cell_filtration(&m).unwrap();
        let b = other.cell_filtration(&m).unwrap();
        prop_assert_eq!(a.label_multiset(), b.label_multiset());
        let y = other.young_decomposition(x, seed).unwrap();
        prop_assert!(y.is_valid(), "{:?}", y.violations);
        prop_assert_eq!(y.label_multiset(), reference.young_decomposition(x, 0).unwrap().label_multiset());
    }
}
