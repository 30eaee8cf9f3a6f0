mod common;

use std::collections::BTreeMap;

use demazure::charpoly::{demazure_character, CharacterPoly};
use demazure::faces::{all_faces, face_data, face_vertices_by_equality, levi_data, levi_face_check};
use demazure::{LieType, Weight, WeylGroup};

use common::{dominant_box, group};

#[test]
fn face_invariants() {
    for (t, r) in [(LieType::A, 2), (LieType::B, 2), (LieType::G, 2), (LieType::A, 3), (LieType::C, 3)] {
        let g = group(t, r);
        let expected_count: usize = (0..r).map(|i| g.min_coset_reps(&g.maximal_parabolic(i)).len()).sum();
        for lambda in dominant_box(r, 2) {
            for w in g.elements() {
                let faces = all_faces(&g, &lambda, w).unwrap();
                assert_eq!(faces.len(), expected_count);
                for f in &faces {
                    assert!(g.in_parabolic(f.y, &f.levi_indices));
                    let q = g.mul(f.u, g.inverse(f.y));
                    assert_eq!(g.length(q), g.length(f.u) + g.length(f.y));
                    let by_equality = face_vertices_by_equality(&g, &lambda, w, f.v, f.i).unwrap();
                    assert_eq!(by_equality, f.vertex_weights, "{t:?}{r} lambda={lambda}");
                    assert!(!f.vertex_weights.is_empty());
                }
            }
        }
    }
}

#[test]
fn normalization_does_not_change_faces() {
    let g = group(LieType::B, 3);
    let lambda = Weight(vec![0, 1, 0]);
    for w in g.elements() {
        let wn = g.max_rep_mod_stabilizer(&lambda, w);
        for i in 0..3 {
            for v in g.min_coset_reps(&g.maximal_parabolic(i)) {
                let a = face_data(&g, &lambda, w, v, i).unwrap();
                let b = face_data(&g, &lambda, wn, v, i).unwrap();
                assert_eq!(a.vertex_weights, b.vertex_weights);
                assert_eq!((a.w, a.u, a.y), (b.w, b.u, b.y));
            }
        }
    }
}

#[test]
fn non_minimal_v_is_rejected() {
    let g = group(LieType::A, 2);
    let lambda = Weight(vec![1, 1]);
    // s_2 lies in W_{P_1}, so it is not a minimal representative
    assert!(face_data(&g, &lambda, g.longest(), g.simple_reflection(1), 0).is_err());
}

#[test]
fn levi_checks_in_g2_and_c3() {
    for (t, r, max) in [(LieType::G, 2, 3), (LieType::C, 3, 1)] {
        let g = group(t, r);
        for lambda in dominant_box(r, max) {
            for w in g.elements() {
                for f in all_faces(&g, &lambda, w).unwrap() {
                    let rep = levi_face_check(&g, &f).unwrap();
                    assert!(rep.all_hold(), "{t:?}{r}: {:?}", rep.failures());
                }
            }
        }
    }
}

fn product(a: &CharacterPoly, b: &CharacterPoly) -> BTreeMap<(i64, i64), i64> {
    let mut out = BTreeMap::new();
    for (x, m) in a.iter() {
        for (y, n) in b.iter() {
            *out.entry((x.0[0], y.0[0])).or_insert(0) += m * n;
        }
    }
    out
}

#[test]
fn decomposable_levi_characters_factor() {
    // removing the middle node of A3 leaves A1 x A1
    let g = group(LieType::A, 3);
    let a1 = group(LieType::A, 1);
    let mut seen = 0;
    for lambda in dominant_box(3, 2) {
        for w in g.elements() {
            for f in all_faces(&g, &lambda, w).unwrap().into_iter().filter(|f| f.i == 1) {
                let (levi, ll, word) = levi_data(&g, &f).unwrap();
                assert_eq!(levi.cartan(), &[vec![2, 0], vec![0, 2]]);
                let lg = WeylGroup::generate(&levi).unwrap();
                let whole = demazure_character(&lg, &ll, &word).unwrap();
                let part = |k: usize| {
                    let w1: Vec<usize> = word.iter().filter(|&&j| j == k).map(|_| 0).collect();
                    demazure_character(&a1, &Weight(vec![ll.0[k]]), &w1).unwrap()
                };
                let expected = product(&part(0), &part(1));
                let got: BTreeMap<(i64, i64), i64> = whole.iter().map(|(mu, m)| ((mu.0[0], mu.0[1]), m)).collect();
                assert_eq!(got, expected);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}
