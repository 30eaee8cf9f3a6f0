mod common;

use proptest::prelude::*;

use demazure::charpoly::{
    demazure_character, demazure_character_of, demazure_operator, freudenthal_oracle, normalize_word, CharacterPoly,
};
use demazure::{Error, LieType, RootDatum, Weight, WeylGroup};

use common::{dominant_box, group, weyl_dimension};

const TYPES: [(LieType, usize); 6] = [
    (LieType::A, 2),
    (LieType::B, 2),
    (LieType::G, 2),
    (LieType::A, 3),
    (LieType::C, 3),
    (LieType::F, 4),
];

fn sparse_poly() -> impl Strategy<Value = (RootDatum, usize, CharacterPoly)> {
    (0..TYPES.len()).prop_flat_map(|k| {
        let (t, r) = TYPES[k];
        let d = RootDatum::new(t, r).unwrap();
        let term = (prop::collection::vec(-6i64..=6, r), prop_oneof![-3i64..=-1, 1i64..=3]);
        (0..r, prop::collection::vec(term, 1..8)).prop_map(move |(i, terms)| {
            let p = CharacterPoly::from_terms(terms.into_iter().map(|(c, m)| (Weight(c), m))).unwrap();
            (d.clone(), i, p)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn demazure_operator_is_idempotent((d, i, p) in sparse_poly()) {
        let once = demazure_operator(&d, i, &p).unwrap();
        let twice = demazure_operator(&d, i, &once).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn demazure_operator_output_is_reflection_invariant((d, i, p) in sparse_poly()) {
        let q = demazure_operator(&d, i, &p).unwrap();
        for (mu, m) in q.iter() {
            prop_assert_eq!(q.multiplicity(&d.reflect(i, mu).unwrap()), m);
        }
    }
}

#[test]
fn monotone_under_bruhat_order() {
    for (t, r, max) in [(LieType::A, 2, 2), (LieType::B, 2, 2), (LieType::G, 2, 2), (LieType::A, 3, 1)] {
        let g = group(t, r);
        for lambda in dominant_box(r, max) {
            let chars: Vec<CharacterPoly> =
                g.elements().map(|w| demazure_character_of(&g, &lambda, w).unwrap()).collect();
            for w in g.elements() {
                for v in g.lower_interval(w) {
                    for (mu, m) in chars[v.index()].iter() {
                        assert!(m <= chars[w.index()].multiplicity(mu), "{t:?}{r} lambda={lambda}");
                    }
                }
            }
        }
    }
}

fn check_strings(g: &WeylGroup, lambda: &Weight) {
    let d = g.datum();
    for w in g.elements().filter(|&w| w != g.identity()) {
        let ch = demazure_character_of(g, lambda, w).unwrap();
        assert!(ch.is_honest());
        let i = g.word(w)[0];
        for (mu, m) in ch.iter() {
            assert_eq!(ch.multiplicity(&d.reflect(i, mu).unwrap()), m, "support not s_{} stable", i + 1);
            // one step toward the middle of the string never decreases
            if mu.0[i] >= 1 {
                let inner = mu.sub(&d.simple_root(i));
                assert!(ch.multiplicity(&inner) >= m, "string not unimodal at {mu}");
            }
        }
    }
}

#[test]
fn strings_are_symmetric_and_unimodal() {
    for (t, r, max) in [(LieType::A, 2, 3), (LieType::B, 2, 3), (LieType::G, 2, 2), (LieType::A, 3, 2), (LieType::C, 3, 1)] {
        let g = group(t, r);
        for lambda in dominant_box(r, max) {
            check_strings(&g, &lambda);
        }
    }
}

#[test]
fn extremal_weights_have_multiplicity_one() {
    for (t, r) in TYPES.into_iter().take(5) {
        let g = group(t, r);
        for lambda in dominant_box(r, 2) {
            for w in g.elements() {
                let ch = demazure_character_of(&g, &lambda, w).unwrap();
                assert_eq!(ch.multiplicity(&lambda), 1);
                assert_eq!(ch.multiplicity(&g.act(w, &lambda)), 1);
            }
        }
    }
}

#[test]
fn full_characters_have_weyl_dimension() {
    let cases = [
        (LieType::A, 4, 2),
        (LieType::B, 3, 3),
        (LieType::C, 4, 1),
        (LieType::D, 4, 2),
        (LieType::G, 2, 4),
        (LieType::F, 4, 1),
    ];
    for (t, r, max) in cases {
        let d = RootDatum::new(t, r).unwrap();
        for lambda in dominant_box(r, max) {
            let ch = freudenthal_oracle(&d, &lambda).unwrap();
            assert_eq!(demazure::rational::rat(ch.dimension() as i64), weyl_dimension(&d, &lambda), "{t:?}{r} {lambda}");
        }
    }
}

#[test]
fn adjoint_and_minuscule_characters() {
    // F4 adjoint: 48 roots plus the zero weight with multiplicity 4
    let d = RootDatum::new(LieType::F, 4).unwrap();
    let adj = freudenthal_oracle(&d, &Weight(vec![1, 0, 0, 0])).unwrap();
    assert_eq!(adj.len(), 49);
    assert_eq!(adj.multiplicity(&Weight::zero(4)), 4);
    // G2 seven-dimensional module: six short roots plus zero
    let d = RootDatum::new(LieType::G, 2).unwrap();
    let seven = freudenthal_oracle(&d, &Weight(vec![1, 0])).unwrap();
    assert_eq!(seven.dimension(), 7);
    assert_eq!(seven.multiplicity(&Weight::zero(2)), 1);
}

#[test]
fn identity_gives_the_highest_weight_monomial() {
    let g = group(LieType::B, 3);
    let lambda = Weight(vec![2, 0, 1]);
    assert_eq!(demazure_character(&g, &lambda, &[]).unwrap(), CharacterPoly::monomial(lambda));
}

#[test]
fn invalid_inputs_are_rejected() {
    let g = group(LieType::A, 2);
    let lambda = Weight(vec![1, 0]);
    assert!(matches!(demazure_character(&g, &lambda, &[0, 0]), Err(Error::NotReduced { .. })));
    assert!(matches!(demazure_character(&g, &Weight(vec![-1, 1]), &[0]), Err(Error::NotDominant(_))));
    assert!(demazure_character(&g, &Weight(vec![1, 0, 0]), &[0]).is_err());
    assert!(demazure_character(&g, &lambda, &[2]).is_err());
    assert_eq!(normalize_word(&g, &[0, 0, 1, 1, 0]).unwrap(), vec![0, 1, 0]);
}
