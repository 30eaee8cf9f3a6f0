//! The weight cone `C_w = {(lambda, mu) : lambda dominant, mu in P_lambda^w}`,
//! its semigroup of lattice points, and the Hilbert basis of that semigroup.
//!
//! Points are stored in coordinates `(lambda, nu)` where `nu` is the
//! simple-root expansion of `lambda - mu`. In these coordinates the lattice
//! `{(lambda, mu) : lambda - mu in Q}` is exactly `Z^{2r}`.
//!
//! The Hilbert basis is computed from the extremal rays alone: facets by the
//! double description method, a pulling triangulation into simplicial
//! cones, the lattice points of each fundamental parallelepiped, and a final
//! reduction by degree.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::charpoly::demazure_character_of;
use crate::error::{Error, Result};
use crate::lattice::{self, Basis, IntVec};
use crate::lp;
use crate::rational::{null_space, primitive_integer, Rational};
use crate::rootdata::{RootDatum, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Refuse simplicial cones whose parallelepiped has more lattice points.
pub const DEFAULT_PARALLELEPIPED_CAP: usize = 2_000_000;

/// A pair `(lambda, mu)` of integral weights in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeVector {
    pub lambda: Weight,
    pub mu: Weight,
}

impl fmt::Display for ConeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.mu)
    }
}

impl ConeVector {
    /// `(lambda, nu)` coordinates, `None` when `lambda - mu` is not in `Q`.
    pub fn to_lattice(&self, datum: &RootDatum) -> Option<IntVec> {
        let nu = datum.root_coords(&self.lambda.sub(&self.mu))?;
        Some(self.lambda.0.iter().chain(&nu).map(|&x| x as i128).collect())
    }

    pub fn from_lattice(datum: &RootDatum, x: &[i128]) -> Result<Self> {
        let r = datum.rank();
        let to64 = |v: &[i128]| -> Result<Vec<i64>> {
            v.iter()
                .map(|&c| i64::try_from(c).map_err(|_| Error::SizeCap("coordinate exceeds i64".into())))
                .collect()
        };
        let lambda = Weight(to64(&x[..r])?);
        let nu = to64(&x[r..])?;
        let mu = lambda.sub(&datum.weight_from_root_coords(&nu));
        Ok(Self { lambda, mu })
    }

    /// Sum of the `lambda` coordinates, a grading positive on the cone minus the origin.
    pub fn degree(&self) -> i64 {
        self.lambda.0.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct SemigroupCone {
    pub w: WeylElement,
    pub rank: usize,
    /// Distinct pairs `(omega_i, v omega_i)` for `v <= w`, sorted.
    pub generators: Vec<ConeVector>,
    /// Generators verified to span extremal rays, sorted.
    pub rays: Vec<ConeVector>,
    /// Integer rows `a` with `a . (lambda, nu) >= 0` on the cone: dominance
    /// followed by the `(v, i)` family, ordered as in the polytope module.
    pub inequalities: Vec<IntVec>,
    rays_lattice: Vec<IntVec>,
}

/// Builds `C_w` from its candidate generators, verifying pointedness and
/// extremality by exact linear programming.
pub fn cone_build(group: &WeylGroup, w: WeylElement) -> Result<SemigroupCone> {
    let datum = group.datum();
    let r = datum.rank();
    let below = group.lower_interval(w);
    let mut gens: BTreeSet<ConeVector> = BTreeSet::new();
    for i in 0..r {
        let om = datum.fundamental_weight(i);
        for &v in &below {
            gens.insert(ConeVector { lambda: om.clone(), mu: group.act(v, &om) });
        }
    }
    let generators: Vec<ConeVector> = gens.into_iter().collect();
    let lat: Vec<IntVec> = generators
        .iter()
        .map(|g| g.to_lattice(datum).ok_or_else(|| Error::Internal(format!("generator {g} outside the lattice"))))
        .collect::<Result<_>>()?;
    let lat_q: Vec<Vec<Rational>> = lat.iter().map(|v| to_rational(v)).collect();
    if !lp::is_pointed(&lat_q) {
        return Err(Error::NotPointed);
    }
    let mut rays = Vec::new();
    let mut rays_lattice = Vec::new();
    for (k, g) in generators.iter().enumerate() {
        if lp::is_extremal(&lat_q, k) {
            rays.push(g.clone());
            rays_lattice.push(lat[k].clone());
        }
    }
    Ok(SemigroupCone {
        w,
        rank: r,
        generators,
        rays,
        inequalities: cone_inequalities(group, w)?,
        rays_lattice,
    })
}

fn to_rational(v: &[i128]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

fn to_integer_row(v: &[Rational]) -> Result<IntVec> {
    primitive_integer(v)
        .into_iter()
        .map(|x| i128::try_from(x).map_err(|_| Error::SizeCap("inequality coefficient exceeds i128".into())))
        .collect()
}

/// The dominance and `(v, i)` inequalities in `(lambda, nu)` coordinates.
fn cone_inequalities(group: &WeylGroup, w: WeylElement) -> Result<Vec<IntVec>> {
    let datum = group.datum();
    let r = datum.rank();
    let cartan = datum.cartan();
    let winv = group.inverse(w);
    let mut rows = Vec::new();
    for j in 0..r {
        let mut row = vec![0i128; 2 * r];
        row[j] = 1;
        rows.push(row);
    }
    for i in 0..r {
        let par = group.maximal_parabolic(i);
        let xi = datum.fundamental_coweight(i);
        for v in group.min_coset_reps(&par) {
            let u = group.min_coset_rep(group.demazure_product(winv, v), &par);
            // <mu, v x_i> - <lambda, u x_i> with mu = lambda - C nu
            let a: Vec<Rational> = group.act_coweight(u, &xi).0.into_iter().map(|c| -c).collect();
            let b = group.act_coweight(v, &xi).0;
            let mut row: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            for jj in 0..r {
                let s = (0..r).fold(Rational::from_integer(0.into()), |acc, k| {
                    acc + &b[k] * Rational::from_integer(cartan[k][jj].into())
                });
                row.push(-s);
            }
            rows.push(to_integer_row(&row)?);
        }
    }
    Ok(rows)
}

impl SemigroupCone {
    /// Membership of a lattice point by the inequality description.
    pub fn contains(&self, datum: &RootDatum, x: &ConeVector) -> bool {
        match x.to_lattice(datum) {
            Some(z) => self.inequalities.iter().all(|row| lattice::dot(row, &z).is_ok_and(|s| s >= 0)),
            None => false,
        }
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        lattice::rank(&self.rays_lattice)
    }

    fn span_complement(&self) -> Result<Vec<IntVec>> {
        let n = 2 * self.rank;
        let rows: Vec<Vec<Rational>> = self.rays_lattice.iter().map(|v| to_rational(v)).collect();
        null_space(&rows, n).iter().map(|v| to_integer_row(v)).collect()
    }

    /// Saturated lattice basis of `Z^{2r} ∩ span(C_w)`.
    fn lattice_basis(&self) -> Result<Basis> {
        let comp = self.span_complement()?;
        Basis::new(lattice::integer_kernel(&comp, 2 * self.rank)?)
    }
}

/// Facet normals of a full-dimensional pointed cone in `Z^k`, by double description.
fn facets_by_double_description(rays: &[IntVec], k: usize) -> Result<Vec<IntVec>> {
    let m = rays.len();
    let blocks = m.div_ceil(64).max(1);
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..m {
        let mut trial: Vec<IntVec> = chosen.iter().map(|&c| rays[c].clone()).collect();
        trial.push(rays[j].clone());
        if lattice::rank(&trial) == trial.len() {
            chosen.push(j);
        }
        if chosen.len() == k {
            break;
        }
    }
    if chosen.len() != k {
        return Err(Error::Internal("rays do not span the ambient space".into()));
    }
    let a0: Vec<Vec<Rational>> = chosen.iter().map(|&c| to_rational(&rays[c])).collect();
    let inv = crate::rational::invert(&a0).ok_or_else(|| Error::Internal("singular initial simplex".into()))?;

    // (normal, bitset of rays on which it vanishes)
    let mut cur: Vec<(IntVec, Vec<u64>)> = Vec::new();
    for col in 0..k {
        let v: Vec<Rational> = (0..k).map(|row| inv[row][col].clone()).collect();
        let mut zero = vec![0u64; blocks];
        for (l, &c) in chosen.iter().enumerate() {
            if l != col {
                zero[c / 64] |= 1 << (c % 64);
            }
        }
        cur.push((to_integer_row(&v)?, zero));
    }

    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    for t in (0..m).filter(|j| !chosen.contains(j)) {
        let a = &rays[t];
        let s: Vec<i128> = cur.iter().map(|(h, _)| lattice::dot(a, h)).collect::<Result<_>>()?;
        let mut next: Vec<(IntVec, Vec<u64>)> = Vec::new();
        for (idx, (h, z)) in cur.iter().enumerate() {
            if s[idx] > 0 {
                next.push((h.clone(), z.clone()));
            } else if s[idx] == 0 {
                let mut z = z.clone();
                z[t / 64] |= 1 << (t % 64);
                next.push((h.clone(), z));
            }
        }
        for p in (0..cur.len()).filter(|&p| s[p] > 0) {
            for q in (0..cur.len()).filter(|&q| s[q] < 0) {
                let common: Vec<u64> = cur[p].1.iter().zip(&cur[q].1).map(|(x, y)| x & y).collect();
                let ones: u32 = common.iter().map(|x| x.count_ones()).sum();
                if (ones as usize) + 2 < k {
                    continue;
                }
                let adjacent = (0..cur.len()).all(|o| o == p || o == q || !subset(&common, &cur[o].1));
                if !adjacent {
                    continue;
                }
                let mut h: IntVec = cur[q]
                    .0
                    .iter()
                    .zip(&cur[p].0)
                    .map(|(hq, hp)| {
                        s[p].checked_mul(*hq)
                            .and_then(|x| s[q].checked_mul(*hp).and_then(|y| x.checked_sub(y)))
                            .ok_or_else(|| Error::SizeCap("integer overflow in double description".into()))
                    })
                    .collect::<Result<_>>()?;
                lattice::make_primitive(&mut h);
                let mut z = common;
                z[t / 64] |= 1 << (t % 64);
                next.push((h, z));
            }
        }
        cur = next;
    }
    let mut out: Vec<IntVec> = cur.into_iter().map(|(h, _)| h).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Pulling triangulation of the face spanned by `face` (ray indices, sorted).
fn pulling(
    face: &[usize],
    dim: usize,
    rays: &[IntVec],
    facets: &[Vec<usize>],
    rank_memo: &mut HashMap<Vec<usize>, usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if face.len() == dim {
        out.push(face.to_vec());
        return;
    }
    let apex = face[0];
    let mut subfaces: Vec<Vec<usize>> = Vec::new();
    for g in facets {
        let k: Vec<usize> = face.iter().copied().filter(|x| g.binary_search(x).is_ok()).collect();
        if k.len() + 1 < dim || k.len() == face.len() || k.contains(&apex) || subfaces.contains(&k) {
            continue;
        }
        let rk = *rank_memo
            .entry(k.clone())
            .or_insert_with(|| lattice::rank(&k.iter().map(|&j| rays[j].clone()).collect::<Vec<_>>()));
        if rk + 1 == dim {
            subfaces.push(k);
        }
    }
    for k in subfaces {
        let mut sub = Vec::new();
        pulling(&k, dim - 1, rays, facets, rank_memo, &mut sub);
        for mut s in sub {
            s.push(apex);
            s.sort();
            out.push(s);
        }
    }
}

/// Nonzero lattice points `sum t_j r_j`, `0 <= t_j < 1`, for the simplicial cone on `cols`.
fn parallelepiped_points(cols: &[IntVec], cap: usize) -> Result<Vec<IntVec>> {
    let k = cols.len();
    let rows: Vec<IntVec> = (0..k).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let det = lattice::determinant(&rows)?.abs();
    if det == 0 {
        return Err(Error::Internal("degenerate simplex in triangulation".into()));
    }
    if det as u128 > cap as u128 {
        return Err(Error::SizeCap(format!("parallelepiped with {det} points exceeds cap {cap}")));
    }
    if det == 1 {
        return Ok(Vec::new());
    }
    let q: Vec<Vec<Rational>> = rows.iter().map(|r| to_rational(r)).collect();
    let inv = crate::rational::invert(&q).ok_or_else(|| Error::Internal("singular simplex".into()))?;
    let d = Rational::from_integer(det.into());
    // Images of unit vectors in (Q/Z)^k, scaled by det.
    let gens: Vec<IntVec> = (0..k)
        .map(|l| {
            (0..k)
                .map(|row| {
                    let x = &inv[row][l] * &d;
                    i128::try_from(x.to_integer()).map(|v| v.rem_euclid(det))
                })
                .collect::<std::result::Result<IntVec, _>>()
                .map_err(|_| Error::SizeCap("parallelepiped coordinate overflow".into()))
        })
        .collect::<Result<_>>()?;
    let zero = vec![0i128; k];
    let mut seen: HashSet<IntVec> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(e) = queue.pop_front() {
        for g in &gens {
            let n: IntVec = e.iter().zip(g).map(|(a, b)| (a + b) % det).collect();
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    let mut out = Vec::with_capacity(seen.len());
    for t in seen {
        if t.iter().all(|&x| x == 0) {
            continue;
        }
        let mut x = vec![0i128; k];
        for (j, c) in cols.iter().enumerate() {
            for (xi, ci) in x.iter_mut().zip(c) {
                *xi += t[j] * ci;
            }
        }
        out.push(x.into_iter().map(|v| v / det).collect());
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct HilbertBasis {
    /// Sorted minimal generating set of the semigroup.
    pub elements: Vec<ConeVector>,
    pub dimension: usize,
    pub num_facets: usize,
    pub num_simplices: usize,
    pub num_candidates: usize,
}

pub fn hilbert_basis(group: &WeylGroup, cone: &SemigroupCone) -> Result<HilbertBasis> {
    hilbert_basis_with_cap(group, cone, DEFAULT_PARALLELEPIPED_CAP)
}

pub fn hilbert_basis_with_cap(group: &WeylGroup, cone: &SemigroupCone, cap: usize) -> Result<HilbertBasis> {
    let datum = group.datum();
    let basis = cone.lattice_basis()?;
    let k = basis.dim();
    let rays: Vec<IntVec> = cone
        .rays_lattice
        .iter()
        .map(|x| basis.coords(x).ok_or_else(|| Error::Internal("ray outside its own span lattice".into())))
        .collect::<Result<_>>()?;
    let normals = facets_by_double_description(&rays, k)?;
    let facet_sets: Vec<Vec<usize>> = normals
        .iter()
        .map(|h| {
            Ok((0..rays.len())
                .filter(|&j| lattice::dot(h, &rays[j]).map(|s| s == 0).unwrap_or(false))
                .collect())
        })
        .collect::<Result<_>>()?;
    let all: Vec<usize> = (0..rays.len()).collect();
    let mut simplices = Vec::new();
    pulling(&all, k, &rays, &facet_sets, &mut HashMap::new(), &mut simplices);

    let mut candidates: BTreeSet<IntVec> = rays.iter().cloned().collect();
    for s in &simplices {
        let cols: Vec<IntVec> = s.iter().map(|&j| rays[j].clone()).collect();
        candidates.extend(parallelepiped_points(&cols, cap)?);
    }
    let num_candidates = candidates.len();

    let r = datum.rank();
    let degree = |c: &IntVec| -> Result<i128> { Ok(basis.combine(c)?[..r].iter().sum()) };
    let mut graded: Vec<(i128, IntVec)> = candidates
        .into_iter()
        .map(|c| Ok((degree(&c)?, c)))
        .collect::<Result<_>>()?;
    graded.sort();
    let in_cone = |x: &IntVec| normals.iter().all(|h| lattice::dot(h, x).is_ok_and(|s| s >= 0));
    let mut confirmed: Vec<(i128, IntVec)> = Vec::new();
    for (dx, x) in graded {
        if dx <= 0 {
            return Err(Error::Internal("nonpositive degree on a cone point".into()));
        }
        let reducible = confirmed.iter().any(|(dh, h)| {
            *dh < dx && in_cone(&x.iter().zip(h).map(|(a, b)| a - b).collect())
        });
        if !reducible {
            confirmed.push((dx, x));
        }
    }
    let mut elements: Vec<ConeVector> = confirmed
        .iter()
        .map(|(_, c)| ConeVector::from_lattice(datum, &basis.combine(c)?))
        .collect::<Result<_>>()?;
    elements.sort();
    Ok(HilbertBasis {
        elements,
        dimension: k,
        num_facets: normals.len(),
        num_simplices: simplices.len(),
        num_candidates,
    })
}

/// Outcome of comparing the generator cone with the inequality cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeEqualityReport {
    /// Every generator satisfies every inequality.
    pub generators_satisfy_inequalities: bool,
    /// The inequality cone lies in the span of the generators.
    pub inequality_cone_in_span: bool,
    /// Every facet of the generator cone is implied by the inequalities.
    pub facets_implied: bool,
    pub num_facets: usize,
}

impl ConeEqualityReport {
    pub fn equal(&self) -> bool {
        self.generators_satisfy_inequalities && self.inequality_cone_in_span && self.facets_implied
    }
}

/// Checks `cone(generators) = {x : inequalities(x) >= 0}` with Farkas certificates.
pub fn verify_cone_equality(cone: &SemigroupCone) -> Result<ConeEqualityReport> {
    let generators_satisfy_inequalities = cone
        .rays_lattice
        .iter()
        .all(|g| cone.inequalities.iter().all(|row| lattice::dot(row, g).is_ok_and(|s| s >= 0)));

    let rows_q: Vec<Vec<Rational>> = cone.inequalities.iter().map(|r| to_rational(r)).collect();
    let mut inequality_cone_in_span = true;
    for y in cone.span_complement()? {
        let yq = to_rational(&y);
        let neg: Vec<Rational> = yq.iter().map(|c| -c.clone()).collect();
        if lp::conic_combination(&rows_q, &yq).is_none() || lp::conic_combination(&rows_q, &neg).is_none() {
            inequality_cone_in_span = false;
        }
    }

    let basis = cone.lattice_basis()?;
    let rays: Vec<IntVec> = cone
        .rays_lattice
        .iter()
        .map(|x| basis.coords(x).ok_or_else(|| Error::Internal("ray outside its own span lattice".into())))
        .collect::<Result<_>>()?;
    let normals = facets_by_double_description(&rays, basis.dim())?;
    let restricted: Vec<Vec<Rational>> = cone
        .inequalities
        .iter()
        .map(|row| {
            basis
                .vectors
                .iter()
                .map(|b| lattice::dot(row, b).map(|x| Rational::from_integer(x.into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let facets_implied = normals
        .iter()
        .all(|h| lp::conic_combination(&restricted, &to_rational(h)).is_some());
    Ok(ConeEqualityReport {
        generators_satisfy_inequalities,
        inequality_cone_in_span,
        facets_implied,
        num_facets: normals.len(),
    })
}

/// Outcome of the check that the Hilbert basis consists exactly of the
/// fundamental pairs `(omega_j, mu)` with `mu` a weight of `V_{omega_j}^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyPReport {
    /// Basis elements whose `lambda` is not a fundamental weight.
    pub non_fundamental: Vec<ConeVector>,
    /// Fundamental pairs with nonzero multiplicity absent from the basis.
    pub missing: Vec<ConeVector>,
    /// Basis elements that are not fundamental pairs with nonzero multiplicity.
    pub extra: Vec<ConeVector>,
    /// Basis elements `(lambda, mu)` with `V_lambda^w(mu) = 0`.
    pub zero_multiplicity: Vec<ConeVector>,
}

impl PropertyPReport {
    pub fn holds(&self) -> bool {
        self.non_fundamental.is_empty() && self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn property_p_check(group: &WeylGroup, w: WeylElement, basis: &[ConeVector]) -> Result<PropertyPReport> {
    let datum = group.datum();
    let mut expected: BTreeSet<ConeVector> = BTreeSet::new();
    for j in 0..datum.rank() {
        let om = datum.fundamental_weight(j);
        for (mu, m) in demazure_character_of(group, &om, w)?.iter() {
            if m > 0 {
                expected.insert(ConeVector { lambda: om.clone(), mu: mu.clone() });
            }
        }
    }
    let actual: BTreeSet<ConeVector> = basis.iter().cloned().collect();
    let non_fundamental = basis
        .iter()
        .filter(|x| x.lambda.0.iter().sum::<i64>() != 1 || x.lambda.0.iter().any(|&c| c < 0))
        .cloned()
        .collect();
    let mut zero_multiplicity = Vec::new();
    let mut chars: HashMap<Weight, crate::charpoly::CharacterPoly> = HashMap::new();
    for x in basis {
        if !chars.contains_key(&x.lambda) {
            chars.insert(x.lambda.clone(), demazure_character_of(group, &x.lambda, w)?);
        }
        if chars[&x.lambda].multiplicity(&x.mu) <= 0 {
            zero_multiplicity.push(x.clone());
        }
    }
    Ok(PropertyPReport {
        non_fundamental,
        missing: expected.difference(&actual).cloned().collect(),
        extra: actual.difference(&expected).cloned().collect(),
        zero_multiplicity,
    })
}
