//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use demazure::charpoly::demazure_character_of;
use demazure::conehb::ConeVector;
use demazure::rational::Rational;
use demazure::{LieType, RootDatum, Weight, WeylElement, WeylGroup};

pub fn group(t: LieType, r: usize) -> WeylGroup {
    WeylGroup::generate(&RootDatum::new(t, r).unwrap()).unwrap()
}

/// All dominant weights with coordinates in `0..=max`.
pub fn dominant_box(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=max).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// The set of products of subwords of `word`, built letter by letter.
pub fn subword_products(g: &WeylGroup, word: &[usize]) -> Vec<bool> {
    let mut set = vec![false; g.order()];
    set[g.identity().index()] = true;
    for &s in word {
        let cur: Vec<usize> = (0..set.len()).filter(|&k| set[k]).collect();
        for k in cur {
            let x = g.right_mul(g.element(k).unwrap(), s);
            set[x.index()] = true;
        }
    }
    set
}

/// The unique Bruhat-maximal element of a set, if it exists.
pub fn bruhat_max(g: &WeylGroup, set: &[WeylElement]) -> Option<WeylElement> {
    let top = *set.iter().max_by_key(|&&x| g.length(x))?;
    set.iter().all(|&x| g.bruhat_leq(x, top)).then_some(top)
}

/// Demazure product as the maximum over products of subwords of
/// `word(u) word(v)`.
pub fn demazure_product_by_subwords(g: &WeylGroup, u: WeylElement, v: WeylElement) -> Option<WeylElement> {
    let mut word = g.word(u);
    word.extend(g.word(v));
    let set = subword_products(g, &word);
    let elems: Vec<WeylElement> = (0..set.len()).filter(|&k| set[k]).map(|k| g.element(k).unwrap()).collect();
    bruhat_max(g, &elems)
}

/// Whether `u` is a product of a subword of one fixed reduced word of `w`.
pub fn subword_criterion(g: &WeylGroup, u: WeylElement, w: WeylElement) -> bool {
    subword_products(g, &g.word(w))[u.index()]
}

/// Dimension of the irreducible module with highest weight `lambda`, by the
/// product over positive roots.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Weight) -> Rational {
    let r = datum.rank();
    let rho = vec![1i64; r];
    let lr: Vec<i64> = lambda.0.iter().map(|c| c + 1).collect();
    let mut out = Rational::from_integer(1.into());
    for beta in datum.positive_roots_omega() {
        let num = datum.scaled_inner_product(&lr, beta);
        let den = datum.scaled_inner_product(&rho, beta);
        out *= Rational::new(num.into(), den.into());
    }
    out
}

/// Irreducible elements of the semigroup `{(lambda, mu) : V_lambda^w(mu) != 0}`
/// among pairs with `sum lambda <= slab`, by direct decomposition search.
pub fn brute_minimal_generators(g: &WeylGroup, w: WeylElement, slab: i64) -> BTreeSet<ConeVector> {
    let r = g.rank();
    let mut points: Vec<ConeVector> = Vec::new();
    for lambda in dominant_box(r, slab) {
        let d: i64 = lambda.0.iter().sum();
        if d == 0 || d > slab {
            continue;
        }
        let ch = demazure_character_of(g, &lambda, w).unwrap();
        for (mu, m) in ch.iter() {
            assert!(m > 0);
            points.push(ConeVector { lambda: lambda.clone(), mu: mu.clone() });
        }
    }
    let set: HashSet<ConeVector> = points.iter().cloned().collect();
    points
        .iter()
        .filter(|x| {
            !points.iter().any(|a| {
                a.degree() < x.degree()
                    && set.contains(&ConeVector { lambda: x.lambda.sub(&a.lambda), mu: x.mu.sub(&a.mu) })
            })
        })
        .cloned()
        .collect()
}
