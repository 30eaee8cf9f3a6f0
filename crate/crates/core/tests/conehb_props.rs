mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_integer::Integer;
use proptest::prelude::*;

use demazure::charpoly::demazure_character_of;
use demazure::conehb::{cone_build, hilbert_basis, property_p_check, ConeVector};
use demazure::lp::conic_combination;
use demazure::polytope::saturation_report;
use demazure::rational::Rational;
use demazure::{LieType, Weight, WeylGroup};

use common::{brute_minimal_generators, dominant_box, group};

const SLAB: i64 = 6;

fn lattice_q(g: &WeylGroup, x: &ConeVector) -> Vec<Rational> {
    x.to_lattice(g.datum()).unwrap().into_iter().map(|c| Rational::from_integer(c.into())).collect()
}

#[test]
fn hilbert_basis_matches_brute_force_in_rank_two() {
    for (t, r) in [(LieType::A, 1), (LieType::A, 2), (LieType::B, 2), (LieType::G, 2)] {
        let g = group(t, r);
        for w in g.elements() {
            let cone = cone_build(&g, w).unwrap();
            let hb = hilbert_basis(&g, &cone).unwrap();
            let got: BTreeSet<ConeVector> = hb.elements.iter().cloned().collect();
            assert!(hb.elements.iter().all(|x| x.degree() <= SLAB));
            assert_eq!(got, brute_minimal_generators(&g, w, SLAB), "{t:?}{r} w={:?}", g.word(w));
        }
    }
}

#[test]
fn cone_invariants() {
    for (t, r) in [(LieType::A, 2), (LieType::B, 2), (LieType::G, 2), (LieType::A, 3), (LieType::C, 3)] {
        let g = group(t, r);
        for w in g.elements() {
            let cone = cone_build(&g, w).unwrap();
            let gens: BTreeSet<&ConeVector> = cone.generators.iter().collect();
            let ray_q: Vec<Vec<Rational>> = cone.rays.iter().map(|x| lattice_q(&g, x)).collect();
            for ray in &cone.rays {
                assert!(gens.contains(ray));
                let z = ray.to_lattice(g.datum()).unwrap();
                assert_eq!(z.iter().fold(0i128, |a, b| a.gcd(b)), 1, "ray {ray} not primitive");
            }
            for x in &cone.generators {
                assert!(cone.contains(g.datum(), x));
                assert!(conic_combination(&ray_q, &lattice_q(&g, x)).is_some());
            }
        }
    }
}

#[test]
fn basis_elements_have_nonzero_multiplicity() {
    let g = group(LieType::G, 2);
    for w in g.elements() {
        let hb = hilbert_basis(&g, &cone_build(&g, w).unwrap()).unwrap();
        let rep = property_p_check(&g, w, &hb.elements).unwrap();
        assert!(rep.zero_multiplicity.is_empty());
        assert!(rep.holds());
    }
    let g = group(LieType::F, 4);
    for word in [vec![0, 1, 2, 3], vec![3, 2, 1, 0], vec![1, 2, 1], vec![2, 3, 2, 1, 0]] {
        let w = g.from_reduced_word(&word).unwrap();
        let hb = hilbert_basis(&g, &cone_build(&g, w).unwrap()).unwrap();
        let rep = property_p_check(&g, w, &hb.elements).unwrap();
        assert!(rep.zero_multiplicity.is_empty(), "F4 {word:?}");
        assert!(rep.holds(), "F4 {word:?}");
    }
}

#[test]
fn property_p_implies_saturation() {
    for (t, r) in [(LieType::A, 2), (LieType::B, 2), (LieType::G, 2), (LieType::A, 3)] {
        let g = group(t, r);
        for w in g.elements() {
            let hb = hilbert_basis(&g, &cone_build(&g, w).unwrap()).unwrap();
            if !property_p_check(&g, w, &hb.elements).unwrap().holds() {
                continue;
            }
            for lambda in dominant_box(r, 2) {
                assert!(saturation_report(&g, &lambda, w).unwrap().is_saturated());
            }
        }
    }
}

fn groups() -> &'static [WeylGroup] {
    static G: OnceLock<Vec<WeylGroup>> = OnceLock::new();
    G.get_or_init(|| vec![group(LieType::B, 2), group(LieType::G, 2), group(LieType::A, 3)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn weights_add(
        k in 0usize..3,
        w in 0usize..48,
        l1 in prop::collection::vec(0i64..=2, 3),
        l2 in prop::collection::vec(0i64..=2, 3),
        pick1 in any::<prop::sample::Index>(),
        pick2 in any::<prop::sample::Index>(),
    ) {
        let g = &groups()[k];
        let r = g.rank();
        let w = g.element(w % g.order()).unwrap();
        let (l1, l2) = (Weight(l1[..r].to_vec()), Weight(l2[..r].to_vec()));
        let c1 = demazure_character_of(g, &l1, w).unwrap();
        let c2 = demazure_character_of(g, &l2, w).unwrap();
        let m1 = pick1.get(&c1.support().cloned().collect::<Vec<_>>()).clone();
        let m2 = pick2.get(&c2.support().cloned().collect::<Vec<_>>()).clone();
        let sum = demazure_character_of(g, &l1.add(&l2), w).unwrap();
        prop_assert!(sum.multiplicity(&m1.add(&m2)) > 0);
    }
}
