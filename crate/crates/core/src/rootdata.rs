//! Root data of the simple types in Bourbaki numbering.
//!
//! Conventions used everywhere in the crate:
//!
//! * `cartan[i][j] = <alpha_j, alpha_i^vee>`, so the simple root `alpha_j`
//!   written in the fundamental-weight basis is column `j` of the Cartan
//!   matrix;
//! * weights are stored in the fundamental-weight basis (`coords[i] =
//!   <lambda, alpha_i^vee>`), coweights in the simple-coroot basis, so the
//!   natural pairing is a dot product;
//! * the weight lattice is the full lattice spanned by the fundamental
//!   weights (simply-connected form).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{invert, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
            LieType::F => 'F',
            LieType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => LieType::A,
            'B' => LieType::B,
            'C' => LieType::C,
            'D' => LieType::D,
            'E' => LieType::E,
            'F' => LieType::F,
            'G' => LieType::G,
            _ => return None,
        })
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => LieType::from_letter(c).ok_or_else(|| Error::UnknownType(s.into())),
            _ => Err(Error::UnknownType(s.into())),
        }
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn to_rational(&self) -> RatWeight {
        RatWeight(self.0.iter().map(|&c| rat(c)).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A rational weight in the fundamental-weight basis (polytope points).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatWeight(pub Vec<Rational>);

impl RatWeight {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// `Some` when every coordinate is an integer.
    pub fn to_integral(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(crate::rational::to_i64)
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

/// A rational coweight in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight(pub Vec<Rational>);

impl Coweight {
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

/// Immutable Cartan data plus the derived exact tables.
#[derive(Debug, Clone)]
pub struct RootDatum {
    label: String,
    kind: Option<(LieType, usize)>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Rational>>,
    /// `det * inv_cartan`, integral.
    inv_scaled: Vec<Vec<i64>>,
    det: i64,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_omega: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

fn chain_cartan(rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; rank]; rank];
    for i in 0..rank {
        m[i][i] = 2;
        if i + 1 < rank {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn simple_cartan(lie_type: LieType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let invalid = Error::InvalidType { lie_type: lie_type.letter(), rank };
    let ok = match lie_type {
        LieType::A => rank >= 1,
        LieType::B | LieType::C => rank >= 2,
        LieType::D => rank >= 3,
        LieType::E => (6..=8).contains(&rank),
        LieType::F => rank == 4,
        LieType::G => rank == 2,
    };
    if !ok {
        return Err(invalid);
    }
    let r = rank;
    let mut m = chain_cartan(r);
    match lie_type {
        LieType::A => {}
        // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        LieType::B => m[r - 1][r - 2] = -2,
        // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
        LieType::C => m[r - 2][r - 1] = -2,
        LieType::D => {
            m[r - 2][r - 1] = 0;
            m[r - 1][r - 2] = 0;
            m[r - 3][r - 1] = -1;
            m[r - 1][r - 3] = -1;
        }
        LieType::E => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
            m = vec![vec![0; r]; r];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            link(3, 4);
            for k in 4..r {
                link(k, k + 1);
            }
        }
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
        LieType::F => m[2][1] = -2,
        // alpha_1 short, alpha_2 long.
        LieType::G => m[0][1] = -3,
    }
    Ok(m)
}

impl RootDatum {
    /// Root datum of the simple type `(lie_type, rank)`.
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let cartan = simple_cartan(lie_type, rank)?;
        let mut datum = Self::from_cartan(format!("{lie_type}{rank}"), cartan)?;
        datum.kind = Some((lie_type, rank));
        Ok(datum)
    }

    /// Root datum of an arbitrary (possibly decomposable) finite-type Cartan
    /// matrix, e.g. a Levi subsystem.
    pub fn from_cartan(label: String, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        if cartan.iter().any(|row| row.len() != rank) {
            return Err(Error::Internal(format!("malformed Cartan matrix for {label}")));
        }
        for (i, row) in cartan.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if (i == j && a != 2) || (i != j && a > 0) || (a == 0) != (cartan[j][i] == 0) {
                    return Err(Error::Internal(format!("not a Cartan matrix: {label}")));
                }
            }
        }
        let q: Vec<Vec<Rational>> = cartan
            .iter()
            .map(|row| row.iter().map(|&a| rat(a)).collect())
            .collect();
        let inv_cartan = invert(&q).ok_or_else(|| Error::Internal(format!("singular Cartan matrix {label}")))?;
        let det = determinant_i64(&cartan);
        let inv_scaled = inv_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let v = x * rat(det);
                        crate::rational::to_i64(&v).expect("adjugate entries are integral")
                    })
                    .collect()
            })
            .collect();
        let symmetrizer = symmetrizer(&cartan)?;
        let positive_roots = positive_roots(&cartan)?;
        let positive_roots_omega = positive_roots
            .iter()
            .map(|beta| root_to_omega(&cartan, beta))
            .collect();
        Ok(RootDatum {
            label,
            kind: None,
            rank,
            cartan,
            inv_cartan,
            inv_scaled,
            det,
            positive_roots,
            positive_roots_omega,
            symmetrizer,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `(type, rank)` for a simple datum built by [`RootDatum::new`].
    pub fn kind(&self) -> Option<(LieType, usize)> {
        self.kind
    }

    pub fn lie_type(&self) -> Option<LieType> {
        self.kind.map(|k| k.0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &[Vec<Rational>] {
        &self.inv_cartan
    }

    /// Determinant of the Cartan matrix, i.e. the index of the root lattice
    /// in the weight lattice.
    pub fn det(&self) -> i64 {
        self.det
    }

    /// Positive roots in simple-root coordinates, sorted lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates (same order).
    pub fn positive_roots_omega(&self) -> &[Vec<i64>] {
        &self.positive_roots_omega
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`
    /// (`d_i` is half the squared length of `alpha_i`, up to scale).
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i + 1, rank: self.rank })
        }
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, got: len })
        }
    }

    /// Simple root `alpha_i` (0-based) in the fundamental-weight basis.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Weight(v)
    }

    /// Simple coroot `alpha_i^vee` in the coroot basis.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight((0..self.rank).map(|k| rat((k == i) as i64)).collect())
    }

    /// Fundamental coweight `x_i` with `<alpha_j, x_i> = delta_ij`.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        Coweight(self.inv_cartan[i].clone())
    }

    /// `alpha_j` as a coweight-pairing functional: `<alpha_j, x>`.
    pub fn pair_root_coweight(&self, j: usize, x: &Coweight) -> Rational {
        x.0.iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * rat(self.cartan[k][j]))
    }

    /// Natural pairing `<lambda, x>`.
    pub fn pairing(&self, lambda: &RatWeight, x: &Coweight) -> Result<Rational> {
        self.check_rank(lambda.0.len())?;
        self.check_rank(x.0.len())?;
        Ok(crate::rational::dot(&lambda.0, &x.0))
    }

    /// `s_i` applied to an integral weight.
    pub fn reflect(&self, i: usize, v: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_rank(v.0.len())?;
        let m = v.0[i];
        Ok(Weight(
            v.0.iter()
                .enumerate()
                .map(|(k, &c)| c - m * self.cartan[k][i])
                .collect(),
        ))
    }

    /// `s_i` applied to a rational weight.
    pub fn reflect_rational(&self, i: usize, v: &RatWeight) -> Result<RatWeight> {
        self.check_index(i)?;
        self.check_rank(v.0.len())?;
        let m = v.0[i].clone();
        Ok(RatWeight(
            v.0.iter()
                .enumerate()
                .map(|(k, c)| c - &m * rat(self.cartan[k][i]))
                .collect(),
        ))
    }

    /// `s_i x = x - <alpha_i, x> alpha_i^vee`.
    pub fn reflect_coweight(&self, i: usize, x: &Coweight) -> Result<Coweight> {
        self.check_index(i)?;
        self.check_rank(x.0.len())?;
        let m = self.pair_root_coweight(i, x);
        let mut out = x.0.clone();
        out[i] -= m;
        Ok(Coweight(out))
    }

    /// Coordinates of `lambda` in the simple-root basis and whether they are
    /// all integral (i.e. `lambda` lies in the root lattice).
    pub fn root_lattice_coords(&self, lambda: &RatWeight) -> Result<(Vec<Rational>, bool)> {
        self.check_rank(lambda.0.len())?;
        let c: Vec<Rational> = self
            .inv_cartan
            .iter()
            .map(|row| crate::rational::dot(row, &lambda.0))
            .collect();
        let integral = c.iter().all(|q| q.is_integer());
        Ok((c, integral))
    }

    /// Root coordinates of an integral weight, `None` unless it lies in the root lattice.
    pub fn root_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for row in &self.inv_scaled {
            let num: i64 = row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum();
            if num % self.det != 0 {
                return None;
            }
            out.push(num / self.det);
        }
        Some(out)
    }

    /// Root coordinate `i` of an integral weight, scaled by `det`.
    pub fn scaled_root_coord(&self, i: usize, lambda: &[i64]) -> i64 {
        self.inv_scaled[i].iter().zip(lambda).map(|(a, b)| a * b).sum()
    }

    /// Whether `lambda - mu` lies in the root lattice.
    pub fn same_coset(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.root_coords(&lambda.sub(mu)).is_some()
    }

    /// Converts simple-root coordinates to a weight.
    pub fn weight_from_root_coords(&self, c: &[i64]) -> Weight {
        Weight(root_to_omega(&self.cartan, c))
    }

    /// Symmetrized form `(mu, nu)` on weights, scaled by `det` so that it is
    /// an integer.
    pub fn scaled_inner_product(&self, mu: &[i64], nu: &[i64]) -> i64 {
        // (omega_i, omega_j) = d_i (C^{-1})_{ij}
        let mut acc = 0i64;
        for (i, &a) in mu.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let di = self.symmetrizer[i];
            for (j, &b) in nu.iter().enumerate() {
                acc += a * b * di * self.inv_scaled[i][j];
            }
        }
        acc
    }

    /// Order of the Weyl group from the classification of the components.
    pub fn weyl_group_order(&self) -> u128 {
        let mut order: u128 = 1;
        for comp in components(&self.cartan) {
            let n = comp.len() as u128;
            let npos = self
                .positive_roots
                .iter()
                .filter(|beta| beta.iter().enumerate().any(|(k, &c)| c != 0 && comp.contains(&k)))
                .count() as u128;
            let laced = comp
                .iter()
                .all(|&i| comp.iter().all(|&j| self.cartan[i][j] == self.cartan[j][i]));
            let fact = |k: u128| (1..=k).product::<u128>();
            order *= if npos == n * (n + 1) / 2 {
                fact(n + 1)
            } else if laced && n >= 4 && npos == n * (n - 1) {
                (1u128 << (n - 1)) * fact(n)
            } else if npos == n * n && !(laced && n == 6) {
                (1u128 << n) * fact(n)
            } else {
                match (n, npos) {
                    (2, 6) => 12,
                    (4, 24) => 1152,
                    (6, 36) => 51_840,
                    (7, 63) => 2_903_040,
                    (8, 120) => 696_729_600,
                    _ => unreachable!("unclassified component"),
                }
            };
        }
        order
    }

    /// `2 rho`, the sum of the positive roots, in fundamental-weight coordinates.
    pub fn two_rho(&self) -> Weight {
        let mut acc = vec![0; self.rank];
        for beta in &self.positive_roots_omega {
            for (a, b) in acc.iter_mut().zip(beta) {
                *a += b;
            }
        }
        Weight(acc)
    }

    /// Levi subsystem on the given 0-based simple indices (kept in order).
    pub fn levi(&self, indices: &[usize]) -> Result<RootDatum> {
        let sub: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let names: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
        RootDatum::from_cartan(format!("{}[{}]", self.label, names.join(",")), sub)
    }
}

fn root_to_omega(cartan: &[Vec<i64>], c: &[i64]) -> Vec<i64> {
    cartan
        .iter()
        .map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum())
        .collect()
}

fn determinant_i64(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d: i64 = i64::try_from(&a[n - 1][n - 1]).expect("determinant fits in i64");
    sign * d
}

fn components(cartan: &[Vec<i64>]) -> Vec<BTreeSet<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(i) = queue.pop_front() {
            comp.insert(i);
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for comp in components(cartan) {
        let start = *comp.iter().next().unwrap();
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i != j && cartan[i][j] != 0 {
                    // d_i a_ij = d_j a_ji
                    let dj = &di * rat(cartan[i][j]) / rat(cartan[j][i]);
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                        Some(existing) if *existing != dj => {
                            return Err(Error::Internal("Cartan matrix is not symmetrizable".into()))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let mut out = vec![0i64; n];
    for comp in components(cartan) {
        let den = comp.iter().fold(BigInt::one(), |acc, &i| acc.lcm(d[i].denom()));
        let ints: Vec<BigInt> = comp.iter().map(|&i| (&d[i] * Rational::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, v) in comp.iter().zip(ints) {
            out[i] = i64::try_from((v / &g).abs()).expect("symmetrizer fits");
        }
    }
    Ok(out)
}

const ROOT_CAP: usize = 10_000;

fn positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // <beta, alpha_i^vee> = sum_j beta_j cartan[i][j]
            let m: i64 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
            let mut img = beta.clone();
            img[i] -= m;
            if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                if seen.len() > ROOT_CAP {
                    return Err(Error::Internal("root system is not of finite type".into()));
                }
                queue.push_back(img);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort();
    Ok(roots)
}

/// Parses a comma-separated weight such as `"2,0,1"`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty weight".into()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("invalid weight {s:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

/// Parses a comma-separated rational weight such as `"1/2,-3"`.
pub fn parse_rat_weight(s: &str) -> Result<RatWeight> {
    s.split(',')
        .map(crate::rational::parse_rational)
        .collect::<Result<Vec<_>>>()
        .map(RatWeight)
}
