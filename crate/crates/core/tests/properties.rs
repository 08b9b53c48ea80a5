mod common;

use common::OField;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unicyclic_core::lambda::{
    normal_form, normal_form_by, normal_form_with, Flavor, Strategy as Rewrite,
};
use unicyclic_core::linalg::{intersect, kernel, largest_invariant_subspace, rank};
use unicyclic_core::{FieldSpec, Matrix, Subspace};

fn matrix(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    let dense: Vec<Vec<i64>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].to_vec())
        .collect();
    Matrix::from_i64(field, &dense)
}

fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn fields() -> [FieldSpec; 3] {
    [
        FieldSpec::Rationals,
        FieldSpec::prime(5).unwrap(),
        FieldSpec::prime(2).unwrap(),
    ]
}

proptest! {
    #[test]
    fn rank_nullity((r, c, e) in arb_matrix()) {
        for field in fields() {
            let m = matrix(field, r, c, &e);
            let k = kernel(&m);
            prop_assert_eq!(rank(&m) + k.dim(), c);
            prop_assert_eq!(rank(&m), common::rank(OField(field), &common::dense(&m)));
            prop_assert!(m.mul(&k.basis()).unwrap().is_zero());
        }
    }

    #[test]
    fn intersection_and_sum(
        (r, e1, e2) in (1usize..6).prop_flat_map(|r| (Just(r), prop::collection::vec(-2i64..=2, r * 3), prop::collection::vec(-2i64..=2, r * 3)))
    ) {
        let field = FieldSpec::Rationals;
        let u = Subspace::column_space(&matrix(field, r, 3, &e1));
        let v = Subspace::column_space(&matrix(field, r, 3, &e2));
        let i = intersect(&u, &v).unwrap();
        let s = u.sum(&v).unwrap();
        prop_assert_eq!(i.dim() + s.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
        prop_assert_eq!(intersect(&v, &u).unwrap(), i);
    }

    #[test]
    fn largest_invariant_subspace_by_enumeration(
        n in 1usize..5,
        op in prop::collection::vec(0i64..2, 16),
        seed in prop::collection::vec(0i64..2, 16),
        k in 0usize..4,
    ) {
        let f2 = FieldSpec::prime(2).unwrap();
        let t = matrix(f2, n, n, &op[..n * n]);
        let gens = matrix(f2, n, k.min(n), &seed[..n * k.min(n)]);
        let s = if k == 0 { Subspace::zero(f2, n) } else { Subspace::column_space(&gens) };
        let got = largest_invariant_subspace(&s, &[&t]).unwrap();
        // every vector of F_2^n whose whole orbit stays inside the seed
        let mut count = 0usize;
        for bits in 0u32..(1 << n) {
            let v: Vec<(usize, unicyclic_core::Scalar)> =
                (0..n).filter(|i| bits >> i & 1 == 1).map(|i| (i, f2.from_i64(1))).collect();
            let mut cur = v.clone();
            let mut inside = true;
            for _ in 0..=(1 << n) {
                if !s.contains(&cur) {
                    inside = false;
                    break;
                }
                cur = t.apply(&cur).unwrap();
            }
            if inside {
                count += 1;
                prop_assert!(got.contains(&v));
            }
        }
        prop_assert_eq!(count, 1usize << got.dim());
    }

    #[test]
    fn normal_forms_are_confluent(seed in any::<u64>(), flavor in prop::sample::select(Flavor::ALL.to_vec())) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = common::random_word(&mut rng, flavor, 8, 5);
        let left = normal_form_with(&w, Rewrite::Leftmost);
        let right = normal_form_with(&w, Rewrite::Rightmost);
        let mut picks = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let random = normal_form_by(&w, &mut |k| rand::Rng::gen_range(&mut picks, 0..k));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &random);
        prop_assert_eq!(normal_form(&left.word()), left.clone());
        prop_assert_eq!(left.source, w.source);
        prop_assert_eq!(left.target, w.target());
    }
}
