//! Characters as finite weight-multiplicity maps, Demazure operators, and an
//! independent Freudenthal computation of full characters.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Default cap on the number of dominant candidates Freudenthal may examine.
pub const DEFAULT_FREUDENTHAL_CAP: usize = 5_000_000;

/// A finite sum `sum c_mu e^mu`, iterated in lexicographic weight order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharacterPoly {
    terms: BTreeMap<Weight, i64>,
}

impl CharacterPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `e^mu`.
    pub fn monomial(mu: Weight) -> Self {
        Self { terms: BTreeMap::from([(mu, 1)]) }
    }

    /// Builds a character from `(weight, multiplicity)` pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut acc: HashMap<Weight, i64> = HashMap::new();
        for (mu, c) in terms {
            add_checked(&mut acc, mu, c)?;
        }
        Ok(Self::from_map(acc))
    }

    fn from_map(map: HashMap<Weight, i64>) -> Self {
        Self { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `e^mu` (zero when absent).
    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn dimension(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }

    /// Whether every coefficient is positive.
    pub fn is_honest(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

fn add_checked(acc: &mut HashMap<Weight, i64>, mu: Weight, c: i64) -> Result<()> {
    let e = acc.entry(mu).or_insert(0);
    *e = e
        .checked_add(c)
        .ok_or_else(|| Error::SizeCap("character multiplicity overflows i64".into()))?;
    Ok(())
}

/// Applies `D_i` to a single term `c e^mu`, accumulating into `acc`.
fn demazure_term(datum: &RootDatum, i: usize, mu: &Weight, c: i64, acc: &mut HashMap<Weight, i64>) -> Result<()> {
    let alpha = datum.simple_root(i);
    let m = mu.0[i];
    if m >= 0 {
        let mut cur = mu.clone();
        for _ in 0..=m {
            let next = cur.sub(&alpha);
            add_checked(acc, cur, c)?;
            cur = next;
        }
    } else if m <= -2 {
        let mut cur = mu.add(&alpha);
        for _ in 1..-m {
            let next = cur.add(&alpha);
            add_checked(acc, cur, -c)?;
            cur = next;
        }
    }
    Ok(())
}

/// The Demazure operator `D_i` (0-based index), extended linearly.
pub fn demazure_operator(datum: &RootDatum, i: usize, p: &CharacterPoly) -> Result<CharacterPoly> {
    datum.check_index(i)?;
    let mut acc = HashMap::with_capacity(p.len() * 2);
    for (mu, c) in p.iter() {
        datum.check_rank(mu.rank())?;
        demazure_term(datum, i, mu, c, &mut acc)?;
    }
    Ok(CharacterPoly::from_map(acc))
}

/// `D_{i_1} ... D_{i_k}(e^lambda)` for a reduced word `i_1 ... i_k` (0-based).
pub fn demazure_character(group: &WeylGroup, lambda: &Weight, word: &[usize]) -> Result<CharacterPoly> {
    let datum = group.datum();
    datum.check_rank(lambda.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    group.from_reduced_word(word)?;
    let mut acc: HashMap<Weight, i64> = HashMap::from([(lambda.clone(), 1)]);
    for &i in word.iter().rev() {
        let mut next = HashMap::with_capacity(acc.len() * 2);
        for (mu, &c) in &acc {
            if c == 0 {
                continue;
            }
            demazure_term(datum, i, mu, c, &mut next)?;
        }
        next.retain(|_, c| *c != 0);
        if next.values().any(|&c| c < 0) {
            return Err(Error::Internal(format!(
                "negative multiplicity while applying D_{} along a reduced word",
                i + 1
            )));
        }
        acc = next;
    }
    Ok(CharacterPoly::from_map(acc))
}

/// Demazure character of a group element, via its stored reduced word.
pub fn demazure_character_of(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<CharacterPoly> {
    demazure_character(group, lambda, &group.word(w))
}

/// Reduced word of the Demazure product of an arbitrary word.
pub fn normalize_word(group: &WeylGroup, word: &[usize]) -> Result<Vec<usize>> {
    Ok(group.word(group.demazure_word(word)?))
}

/// Reflects a weight into the dominant chamber.
pub fn dominant_representative(datum: &RootDatum, mu: &Weight) -> Weight {
    let mut cur = mu.clone();
    while let Some(i) = cur.0.iter().position(|&c| c < 0) {
        let m = cur.0[i];
        for (k, row) in datum.cartan().iter().enumerate() {
            cur.0[k] -= m * row[i];
        }
    }
    cur
}

/// Full character of the irreducible module with highest weight `lambda`
/// by Freudenthal's recursion on dominant weights, expanded over orbits.
pub fn freudenthal_oracle(datum: &RootDatum, lambda: &Weight) -> Result<CharacterPoly> {
    freudenthal_with_cap(datum, lambda, DEFAULT_FREUDENTHAL_CAP)
}

pub fn freudenthal_with_cap(datum: &RootDatum, lambda: &Weight, cap: usize) -> Result<CharacterPoly> {
    datum.check_rank(lambda.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let r = datum.rank();
    let lowest_neg = dominant_representative(datum, &Weight(lambda.0.iter().map(|c| -c).collect()));
    let bound = datum
        .root_coords(&lambda.add(&lowest_neg))
        .ok_or_else(|| Error::Internal("lambda - w0 lambda outside the root lattice".into()))?;
    let boxsize = bound
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::SizeCap(format!("Freudenthal search box exceeds {cap} candidates")))?;

    // Dominant weights lambda - sum n_j alpha_j, keyed by root coordinates.
    let mut dominant: Vec<(Vec<i64>, Weight)> = Vec::new();
    let mut n = vec![0i64; r];
    for _ in 0..boxsize {
        let mu = lambda.sub(&datum.weight_from_root_coords(&n));
        if mu.is_dominant() {
            dominant.push((n.clone(), mu));
        }
        for k in 0..r {
            n[k] += 1;
            if n[k] <= bound[k] {
                break;
            }
            n[k] = 0;
        }
    }
    dominant.sort_by_key(|(n, _)| n.iter().sum::<i64>());

    let two_rho = datum.two_rho();
    let ip = |a: &Weight, b: &Weight| datum.scaled_inner_product(&a.0, &b.0);
    let lam_norm = ip(lambda, lambda) + ip(lambda, &two_rho);
    let roots: Vec<(Weight, i64)> = datum
        .positive_roots()
        .iter()
        .zip(datum.positive_roots_omega())
        .map(|(c, w)| (Weight(w.clone()), c.iter().sum()))
        .collect();

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    for (n, mu) in &dominant {
        let height: i64 = n.iter().sum();
        if height == 0 {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let denom = lam_norm - ip(mu, mu) - ip(mu, &two_rho);
        let mut numer: i64 = 0;
        for (alpha, h) in &roots {
            let mut cur = mu.clone();
            for _ in 1..=height / h {
                cur = cur.add(alpha);
                let m = mult.get(&dominant_representative(datum, &cur)).copied().unwrap_or(0);
                if m != 0 {
                    numer += 2 * m * ip(&cur, alpha);
                }
            }
        }
        if denom <= 0 || numer % denom != 0 {
            return Err(Error::Internal(format!("Freudenthal recursion failed at {mu}")));
        }
        let m = numer / denom;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }

    let mut out: HashMap<Weight, i64> = HashMap::new();
    for (mu, &m) in &mult {
        for nu in weyl_orbit(datum, mu) {
            out.insert(nu, m);
        }
    }
    Ok(CharacterPoly::from_map(out))
}

/// The Weyl orbit of a weight, by closure under simple reflections.
pub fn weyl_orbit(datum: &RootDatum, mu: &Weight) -> Vec<Weight> {
    let mut seen = HashSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..datum.rank() {
            if x.0[i] == 0 {
                continue;
            }
            let y = datum.reflect(i, &x).expect("index in range");
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}
