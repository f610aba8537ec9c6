use num_traits::Zero;

use super::*;
use crate::component::classify_component;
use crate::rational::q;
use crate::tangent::lower_interval;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn model(v: &str, w: &str) -> SliceModel {
    let w = p(w);
    build_slice(&classify_component(&p(v), &w).unwrap(), &w).unwrap()
}

#[test]
fn free_coordinate_examples() {
    let w = p("4231");
    assert!(free_coordinates(&w, &w).unwrap().is_empty());
    assert_eq!(
        free_coordinates(&p("2143"), &w).unwrap(),
        [(1, 3), (1, 4), (2, 3), (2, 4)]
    );
    assert_eq!(
        free_coordinates(&p("1324"), &p("3412")).unwrap(),
        [(1, 2), (1, 3), (2, 4), (3, 4)]
    );
}

#[test]
fn rank_one_slice_of_4231() {
    let s = model("2143", "4231");
    assert_eq!(s.free.len(), 4);
    assert_eq!(s.closed_equations.len(), 1);
    assert_eq!(
        s.render(&s.closed_equations[0]),
        "m_1_3*m_2_4 - m_1_4*m_2_3"
    );
    assert_eq!(s.cone_dimension(), 3);
    assert!(matches!(s.shape, ConeShape::RankOne { .. }));
}

#[test]
fn quadric_slice_of_3412() {
    let s = model("1324", "3412");
    assert_eq!(s.free.len(), 4);
    assert_eq!(s.closed_equations.len(), 1);
    let eq = &s.closed_equations[0];
    assert_eq!(eq.terms().count(), 2);
    assert_eq!(s.render(eq), "m_1_2*m_3_4 + m_1_3*m_2_4");
    assert_eq!(s.cone_dimension(), 3);
    // The rank conditions reduce to the same quadric.
    assert_eq!(s.determinantal_equations, s.closed_equations);
}

#[test]
fn rank_one_minor_count() {
    for w in Permutation::all(6) {
        for c in crate::component::enumerate_components(&w).unwrap() {
            if c.ctype != ComponentType::T4231 {
                continue;
            }
            let s = build_slice(&c, &w).unwrap();
            let (a, b) = (c.l + 1, c.m.unwrap() + 1);
            assert_eq!(s.closed_equations.len(), a * (a - 1) / 2 * b * (b - 1) / 2);
        }
    }
}

#[test]
fn determinantal_examples() {
    let w = p("4231");
    assert!(determinantal_model(&w, &w).unwrap().is_empty());
    for v in lower_interval(&w) {
        let eqs = determinantal_model(&v, &w).unwrap();
        let zero = vec![Q::zero(); free_coordinates(&v, &w).unwrap().len()];
        assert!(eqs.iter().all(|e| e.eval(&zero).is_zero()), "{v}");
    }
    assert!(determinantal_model(&w, &p("2143")).is_err());
}

#[test]
fn models_agree_on_4231_samples() {
    let s = model("2143", "4231");
    let on = sample_cone(&s, 100, 7);
    let off = sample_off_cone(&s, 100, 8);
    for x in on.iter().chain(&off) {
        assert_eq!(s.satisfies_closed(x), s.satisfies_determinantal(x));
    }
}

#[test]
fn embedding_shape() {
    let s = model("2143", "4231");
    let f = embed_point(&s, &vec![Q::zero(); 4]).unwrap();
    assert_eq!(f, FlagMatrix::of_permutation(&p("2143")));
    let x = vec![q(3), q(-1), q(2), q(5)];
    let f = embed_point(&s, &x).unwrap();
    assert!(f.has_shape_of(&s.v));
    let n = f.n();
    for j in 1..=n {
        for k in 1..=n {
            let fixed = s.v.at(j) == k;
            let free = s.free.contains(&(j, k));
            if !fixed && !free {
                assert!(f.get(j, k).is_zero());
            }
        }
    }
    assert!(embed_point(&s, &x[..3]).is_err());
}

#[test]
fn schubert_membership_of_fixed_points() {
    for w in Permutation::all(4) {
        for u in Permutation::all(4) {
            let expect = bruhat_leq(&u, &w).unwrap();
            assert_eq!(in_schubert(&w, &FlagMatrix::of_permutation(&u)), expect);
        }
    }
}

#[test]
fn cone_samples_lie_on_cone() {
    for (v, w) in [("2143", "4231"), ("1324", "3412")] {
        let s = model(v, w);
        let samples = sample_cone(&s, 30, 1);
        assert_eq!(samples.len(), 30);
        for x in &samples {
            assert!(s.satisfies_closed(x));
            assert!(x.iter().any(|c| !c.is_zero()));
            assert!(in_schubert(&s.w, &embed_point(&s, x).unwrap()));
        }
        assert!(s.satisfies_closed(&vec![Q::zero(); s.free.len()]));
    }
}

#[test]
fn outer_product_has_zero_determinant() {
    let s = model("2143", "4231");
    let x = s.parametrize(&[q(2), q(-3), q(5), q(7)]);
    let det = &x[0] * &x[3] - &x[1] * &x[2];
    assert!(det.is_zero());
}

#[test]
fn spot_verdicts() {
    for (v, w) in [("2143", "4231"), ("1324", "3412")] {
        let w = p(w);
        let c = classify_component(&p(v), &w).unwrap();
        let verdict = verify_slice(&c, &w, 50, 2024).unwrap();
        assert!(verdict.all_ok(), "{verdict:?}");
        assert_eq!(verdict.dimension, 3);
        assert_eq!(verdict.samples, 100);
    }
}

#[test]
fn point_slice_is_vacuous() {
    let w = p("4231");
    let s = SliceModel::point(&w);
    let verdict = verify_slice_model(&s, 50, 1).unwrap();
    assert!(verdict.all_ok());
    assert_eq!(verdict.dimension, 0);
}

#[test]
fn failed_check_reports_witness() {
    let mut s = model("2143", "4231");
    // Dropping the minor makes every point of the free span look admissible.
    s.closed_equations.clear();
    s.closed_equations.push(&Poly::var(0) * &Poly::var(0));
    let verdict = verify_slice_model(&s, 20, 3).unwrap();
    assert!(!verdict.all_ok());
    assert!(verdict.witness.is_some());
}
