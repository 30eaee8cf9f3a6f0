//! Finite Weyl groups as tables of integer actions on the weight lattice.
//!
//! Elements are handles into a fully enumerated [`WeylGroup`]. The canonical
//! identity of an element is its action matrix on fundamental-weight
//! coordinates; the stored word is a certificate (the lexicographically
//! smallest reduced word).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::rootdata::{Coweight, RatWeight, RootDatum, Weight};

/// Default refusal threshold for group enumeration.
pub const DEFAULT_ORDER_CAP: usize = 2_000_000;

/// Groups up to this order get an eagerly computed Bruhat relation.
const DENSE_BRUHAT_LIMIT: usize = 4096;

/// Default length cap for exhaustive reduced-word enumeration.
pub const DEFAULT_REDUCED_WORD_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

enum BruhatStore {
    /// `down[w]` is the bitset of `{u : u <= w}`.
    Dense(Vec<Vec<u64>>),
    /// Insert-only memo of the lifting recursion.
    Lazy(RwLock<HashMap<(u32, u32), bool>>),
}

pub struct WeylGroup {
    datum: RootDatum,
    rank: usize,
    actions: Vec<i32>,
    words: Vec<Vec<u8>>,
    lengths: Vec<u32>,
    lookup: HashMap<Vec<i32>, u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
    longest: u32,
    bruhat: BruhatStore,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.datum.label())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    pub fn generate(datum: &RootDatum) -> Result<Self> {
        Self::generate_with_cap(datum, DEFAULT_ORDER_CAP)
    }

    /// Enumerates the group breadth-first by length, each level in
    /// lexicographic order of reduced words. Refuses when the order exceeds `cap`.
    pub fn generate_with_cap(datum: &RootDatum, cap: usize) -> Result<Self> {
        let order = datum.weyl_group_order();
        if order > cap as u128 {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let r = datum.rank();
        let n = order as usize;
        let cartan = datum.cartan();

        let mut identity = vec![0i32; r * r];
        for k in 0..r {
            identity[k * r + k] = 1;
        }
        let mut actions: Vec<i32> = Vec::with_capacity(n * r * r);
        let mut words: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut lengths: Vec<u32> = Vec::with_capacity(n);
        let mut lookup: HashMap<Vec<i32>, u32> = HashMap::with_capacity(n);
        let mut right = vec![u32::MAX; n * r];

        actions.extend_from_slice(&identity);
        words.push(Vec::new());
        lengths.push(0);
        lookup.insert(identity, 0);

        let mut level_start = 0usize;
        while level_start < words.len() {
            let level_end = words.len();
            for idx in level_start..level_end {
                for i in 0..r {
                    // A * S_i: column i becomes col_i(A) - sum_k cartan[k][i] col_k(A).
                    let a = &actions[idx * r * r..(idx + 1) * r * r];
                    let mut m = a.to_vec();
                    for row in 0..r {
                        let mut v = a[row * r + i];
                        for (k, crow) in cartan.iter().enumerate() {
                            v -= crow[i] as i32 * a[row * r + k];
                        }
                        m[row * r + i] = v;
                    }
                    let target = match lookup.get(&m) {
                        Some(&t) => t,
                        None => {
                            let t = words.len() as u32;
                            let mut w = words[idx].clone();
                            w.push(i as u8);
                            actions.extend_from_slice(&m);
                            words.push(w);
                            lengths.push(lengths[idx] + 1);
                            lookup.insert(m, t);
                            t
                        }
                    };
                    right[idx * r + i] = target;
                }
            }
            level_start = level_end;
        }
        if words.len() != n {
            return Err(Error::Internal(format!(
                "enumerated {} elements, expected {n}",
                words.len()
            )));
        }

        let mut left = vec![0u32; n * r];
        for idx in 0..n {
            let a = &actions[idx * r * r..(idx + 1) * r * r];
            for i in 0..r {
                // S_i * A: row k becomes row_k(A) - cartan[k][i] row_i(A).
                let mut m = a.to_vec();
                for row in 0..r {
                    let c = cartan[row][i] as i32;
                    if c != 0 {
                        for col in 0..r {
                            m[row * r + col] -= c * a[i * r + col];
                        }
                    }
                }
                left[idx * r + i] = lookup[&m];
            }
        }

        let mut inverse = vec![0u32; n];
        for idx in 0..n {
            let mut cur = 0u32;
            for &i in words[idx].iter().rev() {
                cur = right[cur as usize * r + i as usize];
            }
            inverse[idx] = cur;
        }
        let longest = (0..n).max_by_key(|&k| lengths[k]).unwrap_or(0) as u32;

        let mut group = WeylGroup {
            datum: datum.clone(),
            rank: r,
            actions,
            words,
            lengths,
            lookup,
            left,
            right,
            inverse,
            longest,
            bruhat: BruhatStore::Lazy(RwLock::new(HashMap::new())),
        };
        if n <= DENSE_BRUHAT_LIMIT {
            group.bruhat = BruhatStore::Dense(group.dense_down_sets());
        }
        Ok(group)
    }

    fn dense_down_sets(&self) -> Vec<Vec<u64>> {
        let n = self.order();
        let blocks = n.div_ceil(64);
        let mut down: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut first = vec![0u64; blocks];
        first[0] |= 1;
        down.push(first);
        for idx in 1..n {
            let w = WeylElement(idx as u32);
            let s = (0..self.rank)
                .find(|&i| self.is_left_descent(w, i))
                .expect("nonidentity element has a left descent");
            let sw = self.left_mul(s, w).index();
            // [e, w] = [e, sw] union s[e, sw]
            let mut bits = down[sw].clone();
            for x in iter_bits(&down[sw]) {
                let sx = self.left[x * self.rank + s] as usize;
                bits[sx / 64] |= 1 << (sx % 64);
            }
            down.push(bits);
        }
        down
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.longest)
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn element(&self, index: usize) -> Option<WeylElement> {
        (index < self.order()).then_some(WeylElement(index as u32))
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Lexicographically smallest reduced word, 0-based indices.
    pub fn word(&self, w: WeylElement) -> Vec<usize> {
        self.words[w.index()].iter().map(|&i| i as usize).collect()
    }

    /// Integer action matrix on fundamental-weight coordinates (row-major).
    pub fn action(&self, w: WeylElement) -> &[i32] {
        let r2 = self.rank * self.rank;
        &self.actions[w.index() * r2..(w.index() + 1) * r2]
    }

    /// Looks an element up by its action matrix.
    pub fn from_action(&self, m: &[i32]) -> Option<WeylElement> {
        self.lookup.get(m).map(|&i| WeylElement(i))
    }

    pub fn left_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.index() * self.rank + i])
    }

    pub fn right_mul(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.index() * self.rank + i])
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.right_mul(self.identity(), i)
    }

    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.left_mul(i, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.right_mul(w, i)) < self.length(w)
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        self.words[b.index()]
            .iter()
            .fold(a, |acc, &i| self.right_mul(acc, i as usize))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    /// Product of an arbitrary word (0-based indices).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut cur = self.identity();
        for &i in word {
            self.datum.check_index(i)?;
            cur = self.right_mul(cur, i);
        }
        Ok(cur)
    }

    /// Product of a word that must be reduced.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        let w = self.from_word(word)?;
        if self.length(w) != word.len() {
            return Err(Error::NotReduced {
                word: word.iter().map(|i| i + 1).collect(),
                length: self.length(w),
            });
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.from_word(word).is_ok_and(|w| self.length(w) == word.len())
    }

    pub fn act(&self, w: WeylElement, lambda: &Weight) -> Weight {
        let r = self.rank;
        let a = self.action(w);
        Weight(
            (0..r)
                .map(|row| (0..r).map(|c| a[row * r + c] as i64 * lambda.0[c]).sum())
                .collect(),
        )
    }

    pub fn act_rational(&self, w: WeylElement, lambda: &RatWeight) -> RatWeight {
        let r = self.rank;
        let a = self.action(w);
        RatWeight(
            (0..r)
                .map(|row| {
                    (0..r).fold(Rational::from_integer(0.into()), |acc, c| {
                        acc + rat(a[row * r + c] as i64) * &lambda.0[c]
                    })
                })
                .collect(),
        )
    }

    /// Action on coweights in the coroot basis: the transpose of the action
    /// of `w^{-1}` on weights, so that pairings are preserved.
    pub fn act_coweight(&self, w: WeylElement, x: &Coweight) -> Coweight {
        let r = self.rank;
        let a = self.action(self.inverse(w));
        Coweight(
            (0..r)
                .map(|k| {
                    (0..r).fold(Rational::from_integer(0.into()), |acc, j| {
                        acc + rat(a[j * r + k] as i64) * &x.0[j]
                    })
                })
                .collect(),
        )
    }

    /// Bruhat order `u <= w`.
    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> bool {
        match &self.bruhat {
            BruhatStore::Dense(down) => {
                let k = u.index();
                down[w.index()][k / 64] >> (k % 64) & 1 == 1
            }
            BruhatStore::Lazy(memo) => self.bruhat_lazy(memo, u, w),
        }
    }

    fn bruhat_lazy(&self, memo: &RwLock<HashMap<(u32, u32), bool>>, u: WeylElement, w: WeylElement) -> bool {
        if u == w || u == self.identity() {
            return true;
        }
        if self.length(u) >= self.length(w) {
            return false;
        }
        if let Some(&v) = memo.read().expect("bruhat memo poisoned").get(&(u.0, w.0)) {
            return v;
        }
        let s = (0..self.rank)
            .find(|&i| self.is_left_descent(w, i))
            .expect("nonidentity element has a left descent");
        let sw = self.left_mul(s, w);
        let su = self.left_mul(s, u);
        let res = if self.length(su) < self.length(u) {
            self.bruhat_lazy(memo, su, sw)
        } else {
            self.bruhat_lazy(memo, u, sw)
        };
        memo.write().expect("bruhat memo poisoned").insert((u.0, w.0), res);
        res
    }

    /// The Bruhat interval `[e, w]`, in group order.
    pub fn lower_interval(&self, w: WeylElement) -> Vec<WeylElement> {
        match &self.bruhat {
            BruhatStore::Dense(down) => iter_bits(&down[w.index()]).map(|k| WeylElement(k as u32)).collect(),
            BruhatStore::Lazy(_) => {
                // [e, w] is closed under taking left descents, so search downward.
                let mut seen = HashSet::from([w]);
                let mut queue = VecDeque::from([w]);
                let mut out = vec![w];
                while let Some(x) = queue.pop_front() {
                    for y in self.covered_by(x) {
                        if seen.insert(y) {
                            out.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// Elements `x t < x` of length `l(x) - 1` (Bruhat co-atoms), via reflections.
    fn covered_by(&self, x: WeylElement) -> Vec<WeylElement> {
        // Deleting one letter of a reduced word yields every co-atom.
        let word = self.word(x);
        let mut out = Vec::new();
        for skip in 0..word.len() {
            let sub: Vec<usize> = word.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            let y = self.from_word(&sub).expect("valid indices");
            if self.length(y) + 1 == self.length(x) {
                out.push(y);
            }
        }
        out
    }

    /// `s_i * w = max(w, s_i w)`.
    pub fn demazure_left(&self, i: usize, w: WeylElement) -> WeylElement {
        let sw = self.left_mul(i, w);
        if self.length(sw) > self.length(w) {
            sw
        } else {
            w
        }
    }

    /// The Demazure (0-Hecke) product `u * v`.
    pub fn demazure_product(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        self.words[u.index()]
            .iter()
            .rev()
            .fold(v, |acc, &i| self.demazure_left(i as usize, acc))
    }

    /// Demazure product of an arbitrary word (0-based indices).
    pub fn demazure_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut cur = self.identity();
        for &i in word.iter().rev() {
            self.datum.check_index(i)?;
            cur = self.demazure_left(i, cur);
        }
        Ok(cur)
    }

    fn in_parabolic_set(parabolic: &[usize], i: usize) -> bool {
        parabolic.contains(&i)
    }

    /// Minimal-length representative of `w W_S`.
    pub fn min_coset_rep(&self, w: WeylElement, parabolic: &[usize]) -> WeylElement {
        let mut cur = w;
        'outer: loop {
            for &j in parabolic {
                if self.is_right_descent(cur, j) {
                    cur = self.right_mul(cur, j);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Whether `w` is the minimal representative of its coset `w W_S`.
    pub fn is_min_coset_rep(&self, w: WeylElement, parabolic: &[usize]) -> bool {
        parabolic.iter().all(|&j| !self.is_right_descent(w, j))
    }

    /// The parabolic subgroup `W_S`, breadth-first from the identity.
    pub fn parabolic_subgroup(&self, parabolic: &[usize]) -> Vec<WeylElement> {
        let mut seen = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        let mut out = vec![self.identity()];
        while let Some(x) = queue.pop_front() {
            for &j in parabolic {
                let y = self.right_mul(x, j);
                if seen.insert(y) {
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        out
    }

    /// Longest element of `W_S`.
    pub fn parabolic_longest(&self, parabolic: &[usize]) -> WeylElement {
        let mut cur = self.identity();
        'outer: loop {
            for &j in parabolic {
                if !self.is_right_descent(cur, j) {
                    cur = self.right_mul(cur, j);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// `(min_rep, W_S)` for the coset `w W_S`.
    pub fn coset_reps(&self, w: WeylElement, parabolic: &[usize]) -> (WeylElement, Vec<WeylElement>) {
        (self.min_coset_rep(w, parabolic), self.parabolic_subgroup(parabolic))
    }

    /// Minimal coset representatives `W^S`.
    pub fn min_coset_reps(&self, parabolic: &[usize]) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.is_min_coset_rep(w, parabolic)).collect()
    }

    /// Complement of a single index: the simple indices of the maximal parabolic `P_i`.
    pub fn maximal_parabolic(&self, i: usize) -> Vec<usize> {
        (0..self.rank).filter(|&j| j != i).collect()
    }

    /// Stabilizer `W_lambda` of a dominant weight and the maximal-length
    /// element of `w W_lambda`.
    pub fn stabilizer_data(&self, lambda: &Weight, w: WeylElement) -> Result<(Vec<WeylElement>, WeylElement)> {
        self.datum.check_rank(lambda.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let stab: Vec<WeylElement> = self.elements().filter(|&v| self.act(v, lambda) == *lambda).collect();
        let zeros = self.stabilizer_indices(lambda);
        let w_max = self.mul(self.min_coset_rep(w, &zeros), self.parabolic_longest(&zeros));
        Ok((stab, w_max))
    }

    /// Simple indices fixing a dominant weight.
    pub fn stabilizer_indices(&self, lambda: &Weight) -> Vec<usize> {
        (0..self.rank).filter(|&i| lambda.0[i] == 0).collect()
    }

    /// Maximal-length representative of `w W_lambda`.
    pub fn max_rep_mod_stabilizer(&self, lambda: &Weight, w: WeylElement) -> WeylElement {
        let zeros = self.stabilizer_indices(lambda);
        self.mul(self.min_coset_rep(w, &zeros), self.parabolic_longest(&zeros))
    }

    /// `g(v) = v (v^{-1} * w)`, mapping `W` onto `{q : q <= w}`.
    pub fn g_map(&self, w: WeylElement, v: WeylElement) -> WeylElement {
        let vinv = self.inverse(v);
        self.mul(v, self.demazure_product(vinv, w))
    }

    /// Every reduced word of `w` (0-based), sorted lexicographically.
    pub fn reduced_words(&self, w: WeylElement, max_length: usize) -> Result<Vec<Vec<usize>>> {
        if self.length(w) > max_length {
            return Err(Error::SizeCap(format!(
                "reduced-word enumeration for length {} exceeds cap {max_length}",
                self.length(w)
            )));
        }
        let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
        let mut out = self.reduced_words_rec(w, &mut memo);
        out.sort();
        Ok(out)
    }

    fn reduced_words_rec(&self, w: WeylElement, memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if w == self.identity() {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            if self.is_right_descent(w, i) {
                for mut prefix in self.reduced_words_rec(self.right_mul(w, i), memo) {
                    prefix.push(i);
                    out.push(prefix);
                }
            }
        }
        memo.insert(w, out.clone());
        out
    }

    /// Whether `w` lies in the parabolic subgroup `W_S`.
    pub fn in_parabolic(&self, w: WeylElement, parabolic: &[usize]) -> bool {
        self.words[w.index()]
            .iter()
            .all(|&i| Self::in_parabolic_set(parabolic, i as usize))
    }
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(b, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b * 64 + t)
        })
    })
}

/// Parses a comma-separated 1-based word such as `"1,2,1"` into 0-based
/// indices. The empty string and `"e"` denote the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid word {s:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            Ok(i - 1)
        })
        .collect()
}

/// Formats 0-based indices as a comma-separated 1-based word.
pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;

    fn group(t: LieType, r: usize) -> WeylGroup {
        WeylGroup::generate(&RootDatum::new(t, r).unwrap()).unwrap()
    }

    /// Subword criterion on one fixed reduced word of `w`.
    fn subword_below(g: &WeylGroup, w: WeylElement) -> HashSet<WeylElement> {
        let word = g.word(w);
        let mut out = HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len()).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            out.insert(g.from_word(&sub).unwrap());
        }
        out
    }

    #[test]
    fn orders_and_longest() {
        for (t, r, n) in [(LieType::A, 2, 6), (LieType::G, 2, 12), (LieType::B, 3, 48), (LieType::F, 4, 1152)] {
            let g = group(t, r);
            assert_eq!(g.order(), n);
            assert_eq!(g.length(g.longest()), g.datum().num_positive_roots());
        }
    }

    #[test]
    fn order_cap_refuses() {
        let e8 = RootDatum::new(LieType::E, 8).unwrap();
        let err = WeylGroup::generate(&e8).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { order: 696_729_600, cap: DEFAULT_ORDER_CAP });
        let f4 = RootDatum::new(LieType::F, 4).unwrap();
        assert!(WeylGroup::generate_with_cap(&f4, 1000).is_err());
    }

    #[test]
    fn enumeration_is_by_length_then_lex() {
        let g = group(LieType::A, 2);
        let words: Vec<String> = g.elements().map(|w| format_word(&g.word(w))).collect();
        assert_eq!(words, ["", "1", "2", "1,2", "2,1", "1,2,1"]);
        let g2 = group(LieType::G, 2);
        assert_eq!(format_word(&g2.word(g2.longest())), "1,2,1,2,1,2");
    }

    #[test]
    fn length_counts_inversions() {
        let g = group(LieType::B, 3);
        let d = g.datum().clone();
        for w in g.elements() {
            let inversions = d
                .positive_roots_omega()
                .iter()
                .filter(|beta| {
                    let img = g.act(w, &Weight(beta.to_vec()));
                    let c = d.root_coords(&img).unwrap();
                    c.iter().all(|&x| x <= 0)
                })
                .count();
            assert_eq!(inversions, g.length(w));
        }
    }

    #[test]
    fn bruhat_examples_and_subword_criterion() {
        let g = group(LieType::A, 2);
        let s1 = g.from_word(&[0]).unwrap();
        let s2 = g.from_word(&[1]).unwrap();
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        assert!(g.bruhat_leq(s1, s2s1));
        assert!(!g.bruhat_leq(s1, s2));
        for (t, r) in [(LieType::A, 2), (LieType::B, 2), (LieType::G, 2), (LieType::A, 3), (LieType::B, 3), (LieType::C, 3)] {
            let g = group(t, r);
            for w in g.elements() {
                let below = subword_below(&g, w);
                for u in g.elements() {
                    assert_eq!(g.bruhat_leq(u, w), below.contains(&u), "{t}{r}");
                }
                assert!(g.bruhat_leq(g.identity(), w));
            }
        }
    }

    #[test]
    fn lazy_bruhat_matches_dense() {
        let g = group(LieType::B, 3);
        let memo = RwLock::new(HashMap::new());
        for u in g.elements() {
            for w in g.elements() {
                assert_eq!(g.bruhat_lazy(&memo, u, w), g.bruhat_leq(u, w));
            }
        }
        let lazy_interval = {
            let w = g.from_word(&[0, 1, 2, 1]).unwrap();
            let mut seen = HashSet::from([w]);
            let mut queue = VecDeque::from([w]);
            while let Some(x) = queue.pop_front() {
                for y in g.covered_by(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            (w, seen)
        };
        let (w, set) = lazy_interval;
        let dense: HashSet<_> = g.lower_interval(w).into_iter().collect();
        assert_eq!(set, dense);
    }

    #[test]
    fn demazure_product_examples() {
        let g = group(LieType::A, 2);
        let s1 = g.from_word(&[0]).unwrap();
        let s2s1 = g.from_word(&[1, 0]).unwrap();
        assert_eq!(g.demazure_product(s1, s1), s1);
        assert_eq!(g.demazure_product(s1, s2s1), g.longest());
        for v in g.elements() {
            assert_eq!(g.demazure_product(g.longest(), v), g.longest());
            assert_eq!(g.demazure_product(v, g.longest()), g.longest());
        }
    }

    #[test]
    fn coset_rep_examples() {
        let g = group(LieType::A, 2);
        let s1s2 = g.from_word(&[0, 1]).unwrap();
        let (rep, sub) = g.coset_reps(s1s2, &[1]);
        assert_eq!(rep, g.from_word(&[0]).unwrap());
        assert_eq!(sub.len(), 2);
        assert_eq!(g.min_coset_rep(g.identity(), &[0, 1]), g.identity());
        for w in g.elements() {
            assert_eq!(g.min_coset_rep(w, &[]), w);
        }
        let g = group(LieType::F, 4);
        for i in 0..4 {
            let par = g.maximal_parabolic(i);
            let reps = g.min_coset_reps(&par);
            assert_eq!(reps.len() * g.parabolic_subgroup(&par).len(), 1152);
        }
    }

    #[test]
    fn stabilizer_examples() {
        let g = group(LieType::A, 2);
        let w = g.from_word(&[0, 1]).unwrap();
        let (stab, wmax) = g.stabilizer_data(&Weight(vec![1, 1]), w).unwrap();
        assert_eq!(stab, vec![g.identity()]);
        assert_eq!(wmax, w);
        let (stab, _) = g.stabilizer_data(&Weight(vec![1, 0]), w).unwrap();
        assert_eq!(stab, vec![g.identity(), g.from_word(&[1]).unwrap()]);
        let (stab, wmax) = g.stabilizer_data(&Weight(vec![0, 0]), w).unwrap();
        assert_eq!(stab.len(), 6);
        assert_eq!(wmax, g.longest());
        assert!(matches!(g.stabilizer_data(&Weight(vec![-1, 0]), w), Err(Error::NotDominant(_))));
    }

    #[test]
    fn g_map_examples() {
        let g = group(LieType::A, 2);
        let s1 = g.from_word(&[0]).unwrap();
        let s2 = g.from_word(&[1]).unwrap();
        for w in g.elements() {
            assert_eq!(g.g_map(w, g.identity()), w);
        }
        // brute force: s2 (s2 * s1) = s2 (s2 s1) = s1
        assert_eq!(g.g_map(s1, s2), s1);
        assert!(g.bruhat_leq(g.g_map(s1, s2), s1));
    }

    #[test]
    fn reduced_words_of_longest_a3() {
        let g = group(LieType::A, 3);
        // 16 reduced words for w0 in S_4
        assert_eq!(g.reduced_words(g.longest(), 8).unwrap().len(), 16);
        let f4 = group(LieType::F, 4);
        assert!(f4.reduced_words(f4.longest(), DEFAULT_REDUCED_WORD_CAP).is_err());
    }

    #[test]
    fn coweight_action_preserves_pairing() {
        let g = group(LieType::G, 2);
        let d = g.datum().clone();
        for w in g.elements() {
            for i in 0..2 {
                let x = d.fundamental_coweight(i);
                let lam = Weight(vec![3, -1]).to_rational();
                let lhs = d.pairing(&g.act_rational(w, &lam), &g.act_coweight(w, &x)).unwrap();
                assert_eq!(lhs, d.pairing(&lam, &x).unwrap());
            }
        }
        // s_i on coweights agrees with the reflection formula
        let s1 = g.simple_reflection(0);
        let x = d.fundamental_coweight(1);
        assert_eq!(g.act_coweight(s1, &x), d.reflect_coweight(0, &x).unwrap());
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("1,2,1", 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("", 2).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_word("3", 2), Err(Error::IndexOutOfRange { index: 3, rank: 2 })));
        assert!(parse_word("1,x", 2).is_err());
        assert_eq!(format_word(&[0, 1, 0]), "1,2,1");
    }

    #[test]
    fn non_reduced_word_rejected() {
        let g = group(LieType::A, 2);
        assert!(matches!(g.from_reduced_word(&[0, 0]), Err(Error::NotReduced { .. })));
        assert_eq!(g.demazure_word(&[0, 0, 1]).unwrap(), g.from_word(&[0, 1]).unwrap());
    }
}
