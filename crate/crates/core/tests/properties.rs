use proptest::prelude::*;

use schubert_core::rational::q;
use schubert_core::{
    bruhat_leq, build_slice, embed_point, enumerate_components, in_schubert, is_smooth,
    kl_recursion, sample_cone, tangent_dimension, Permutation, RankTable,
};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        (one.clone(), one)
            .prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

fn perm_triple(max_n: usize) -> impl Strategy<Value = [Permutation; 3]> {
    (1..=max_n).prop_flat_map(|n| {
        let one = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        (one.clone(), one.clone(), one)
            .prop_map(|(a, b, c)| [a, b, c].map(|x| Permutation::new(x).unwrap()))
    })
}

proptest! {
    #[test]
    fn rank_table_round_trip(w in perm(9)) {
        prop_assert_eq!(RankTable::of(&w).to_permutation().unwrap(), w);
    }

    #[test]
    fn text_round_trip(w in perm(12)) {
        let comma: Permutation = w.to_comma_string().parse().unwrap();
        prop_assert_eq!(&comma, &w);
        let shown: Permutation = w.to_string().parse().unwrap();
        prop_assert_eq!(shown, w);
    }

    #[test]
    fn length_complements(w in perm(9)) {
        let n = w.n();
        let w0w = Permutation::longest(n).compose(&w).unwrap();
        prop_assert_eq!(w.length() + w0w.length(), n * (n - 1) / 2);
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn bruhat_is_graded_and_antisymmetric((v, w) in perm_pair(7)) {
        let le = bruhat_leq(&v, &w).unwrap();
        let ge = bruhat_leq(&w, &v).unwrap();
        if le {
            prop_assert!(v.length() <= w.length());
        }
        if le && ge {
            prop_assert_eq!(&v, &w);
        }
        prop_assert!(bruhat_leq(&Permutation::identity(v.n()), &v).unwrap());
        prop_assert!(bruhat_leq(&v, &Permutation::longest(v.n())).unwrap());
    }

    #[test]
    fn bruhat_is_transitive([a, b, c] in perm_triple(5)) {
        if bruhat_leq(&a, &b).unwrap() && bruhat_leq(&b, &c).unwrap() {
            prop_assert!(bruhat_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn smoothness_symmetries(w in perm(9)) {
        let w0 = Permutation::longest(w.n());
        let conj = w0.compose(&w).unwrap().compose(&w0).unwrap();
        prop_assert_eq!(is_smooth(&w), is_smooth(&w.inverse()));
        prop_assert_eq!(is_smooth(&w), is_smooth(&conj));
    }

    #[test]
    fn tangent_space_at_least_dimension((v, w) in perm_pair(6)) {
        if let Ok(t) = tangent_dimension(&v, &w) {
            prop_assert!(t.m >= w.length());
            prop_assert!(bruhat_leq(&v, &w).unwrap());
        } else {
            prop_assert!(!bruhat_leq(&v, &w).unwrap());
        }
    }

    #[test]
    fn kl_constant_term_and_degree((v, w) in perm_pair(5)) {
        if bruhat_leq(&v, &w).unwrap() {
            let p = kl_recursion(&v, &w).unwrap();
            prop_assert_eq!(p.coeff(0), 1);
            if v != w {
                let bound = (w.length() - v.length() - 1) / 2;
                prop_assert!(p.degree().unwrap() <= bound);
            }
        }
    }

    #[test]
    fn cones_are_homogeneous(w in perm(6), seed in any::<u64>(), scale in 2i64..6) {
        for c in enumerate_components(&w).unwrap() {
            let s = build_slice(&c, &w).unwrap();
            for x in sample_cone(&s, 3, seed) {
                let y: Vec<_> = x.iter().map(|a| a * q(-scale)).collect();
                prop_assert!(s.satisfies_closed(&y));
                prop_assert!(in_schubert(&w, &embed_point(&s, &y).unwrap()));
                prop_assert!(s.satisfies_closed(&vec![q(0); y.len()]));
            }
        }
    }

    #[test]
    fn slice_points_lie_in_larger_varieties(w in perm(5), seed in any::<u64>()) {
        let w0 = Permutation::longest(w.n());
        for c in enumerate_components(&w).unwrap() {
            let s = build_slice(&c, &w).unwrap();
            for x in sample_cone(&s, 3, seed) {
                let f = embed_point(&s, &x).unwrap();
                prop_assert!(in_schubert(&w0, &f));
                let n = w.n();
                for (i, j) in (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))) {
                    let up = w.swap_positions(i, j);
                    if up.length() > w.length() {
                        prop_assert!(in_schubert(&up, &f));
                    }
                }
            }
        }
    }
}
