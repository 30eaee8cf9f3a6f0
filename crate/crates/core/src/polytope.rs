//! Demazure polytopes in vertex and inequality form.
//!
//! The vertex form is `conv{v lambda : v <= w}`. The inequality form has one
//! inequality per maximal parabolic `P_i` and minimal coset representative
//! `v` of `W / W_{P_i}`:
//!
//! ```text
//! <mu, v x_i> >= <lambda, u x_i>,   u = min rep of (w^{-1} * v) W_{P_i}
//! ```
//!
//! where `x_i` is the fundamental coweight and `*` the Demazure product.

use num_traits::{Signed, Zero};

use crate::charpoly::{demazure_character_of, CharacterPoly};
use crate::error::{Error, Result};
use crate::lp;
use crate::rational::{dot, rat, Rational};
use crate::rootdata::{Coweight, RatWeight, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// `<mu, normal> >= bound`, with `normal = v x_i` and `bound = <lambda, u x_i>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub v: WeylElement,
    pub i: usize,
    pub u: WeylElement,
    pub normal: Coweight,
    pub bound: Rational,
    /// Integer form on `mu = lambda - sum n_j alpha_j`: `sum coeffs_j n_j <= slack`.
    coeffs: Vec<i64>,
    slack: i64,
}

impl Inequality {
    pub fn holds(&self, mu: &RatWeight) -> bool {
        dot(&mu.0, &self.normal.0) >= self.bound
    }

    pub fn is_tight(&self, mu: &RatWeight) -> bool {
        dot(&mu.0, &self.normal.0) == self.bound
    }

    fn holds_root_coords(&self, n: &[i64]) -> bool {
        self.coeffs.iter().zip(n).map(|(c, x)| c * x).sum::<i64>() <= self.slack
    }
}

#[derive(Debug, Clone)]
pub struct DemazurePolytope {
    pub lambda: Weight,
    pub w: WeylElement,
    /// Distinct weights `v lambda`, `v <= w`, sorted.
    pub vertices: Vec<Weight>,
    pub inequalities: Vec<Inequality>,
}

fn check_dominant(group: &WeylGroup, lambda: &Weight) -> Result<()> {
    group.datum().check_rank(lambda.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// `{v lambda : v <= w}` without repetitions, sorted.
pub fn vertex_set(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Vec<Weight>> {
    check_dominant(group, lambda)?;
    let mut out: Vec<Weight> = group
        .lower_interval(w)
        .into_iter()
        .map(|v| group.act(v, lambda))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Each vertex together with the shortest `v <= w` producing it.
pub fn labeled_vertices(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Vec<(Weight, WeylElement)>> {
    check_dominant(group, lambda)?;
    let mut out: Vec<(Weight, WeylElement)> = Vec::new();
    let mut below = group.lower_interval(w);
    below.sort_by_key(|&v| (group.length(v), v));
    for v in below {
        let mu = group.act(v, lambda);
        if !out.iter().any(|(x, _)| *x == mu) {
            out.push((mu, v));
        }
    }
    Ok(out)
}

/// The full inequality system, ordered by `i` and then by group order of `v`.
pub fn inequality_set(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Vec<Inequality>> {
    check_dominant(group, lambda)?;
    let datum = group.datum();
    let r = datum.rank();
    let winv = group.inverse(w);
    let lam_q = lambda.to_rational();
    let mut out = Vec::new();
    for i in 0..r {
        let par = group.maximal_parabolic(i);
        let xi = datum.fundamental_coweight(i);
        for v in group.min_coset_reps(&par) {
            let u = group.min_coset_rep(group.demazure_product(winv, v), &par);
            let normal = group.act_coweight(v, &xi);
            let bound = datum.pairing(&lam_q, &group.act_coweight(u, &xi))?;
            let vinv = group.inverse(v);
            let coeffs = (0..r)
                .map(|j| {
                    let beta = group.act(vinv, &datum.simple_root(j));
                    datum.root_coords(&beta).map(|c| c[i])
                })
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::Internal("image of a simple root is not a root".into()))?;
            let diff = group.act(vinv, lambda).sub(&group.act(group.inverse(u), lambda));
            let slack = datum
                .root_coords(&diff)
                .ok_or_else(|| Error::Internal("v^{-1} lambda - u^{-1} lambda outside the root lattice".into()))?[i];
            out.push(Inequality { v, i, u, normal, bound, coeffs, slack });
        }
    }
    Ok(out)
}

impl DemazurePolytope {
    pub fn new(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Self> {
        Ok(Self {
            lambda: lambda.clone(),
            w,
            vertices: vertex_set(group, lambda, w)?,
            inequalities: inequality_set(group, lambda, w)?,
        })
    }

    /// Exact membership through the inequality system.
    pub fn contains(&self, mu: &RatWeight) -> bool {
        self.inequalities.iter().all(|h| h.holds(mu))
    }

    pub fn contains_weight(&self, mu: &Weight) -> bool {
        self.contains(&mu.to_rational())
    }

    /// Exact membership through the vertex description.
    pub fn hull_contains(&self, mu: &RatWeight) -> bool {
        hull_membership_oracle(&self.vertices, mu)
    }

    /// Per-coordinate bounds on `n` in `mu = lambda - sum n_j alpha_j` over the vertices.
    fn root_box(&self, group: &WeylGroup) -> Result<Vec<i64>> {
        let datum = group.datum();
        let mut bound = vec![0i64; datum.rank()];
        for v in &self.vertices {
            let c = datum
                .root_coords(&self.lambda.sub(v))
                .ok_or_else(|| Error::Internal("vertex outside lambda + Q".into()))?;
            for (b, x) in bound.iter_mut().zip(c) {
                *b = (*b).max(x);
            }
        }
        Ok(bound)
    }

    /// All `mu` in `lambda + Q` lying in the polytope, sorted.
    pub fn lattice_points(&self, group: &WeylGroup) -> Result<Vec<Weight>> {
        let datum = group.datum();
        let r = datum.rank();
        let bound = self.root_box(group)?;
        let mut ineqs: Vec<&Inequality> = self.inequalities.iter().collect();
        let mut out = Vec::new();
        let mut n = vec![0i64; r];
        'points: loop {
            let mut ok = true;
            for k in 0..ineqs.len() {
                if !ineqs[k].holds_root_coords(&n) {
                    // Violated constraints tend to repeat for neighbouring points.
                    ineqs.swap(0, k);
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(self.lambda.sub(&datum.weight_from_root_coords(&n)));
            }
            for k in 0..r {
                n[k] += 1;
                if n[k] <= bound[k] {
                    continue 'points;
                }
                n[k] = 0;
            }
            break;
        }
        out.sort();
        Ok(out)
    }

    /// The segment `(mu + Q alpha_i) ∩ P`, or `None` when the line misses it.
    pub fn root_string_segment(&self, group: &WeylGroup, mu: &RatWeight, i: usize) -> Result<Option<Segment>> {
        let datum = group.datum();
        datum.check_index(i)?;
        datum.check_rank(mu.0.len())?;
        let alpha = datum.simple_root(i).to_rational();
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for h in &self.inequalities {
            // <mu, n> + t <alpha, n> >= b
            let a = dot(&alpha.0, &h.normal.0);
            let slack = dot(&mu.0, &h.normal.0) - &h.bound;
            if a.is_zero() {
                if slack.is_negative() {
                    return Ok(None);
                }
            } else {
                let t = -slack / &a;
                if a.is_positive() {
                    if lo.as_ref().is_none_or(|l| t > *l) {
                        lo = Some(t);
                    }
                } else if hi.as_ref().is_none_or(|u| t < *u) {
                    hi = Some(t);
                }
            }
        }
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Err(Error::Internal("unbounded root string in a polytope".into()));
        };
        if lo > hi {
            return Ok(None);
        }
        let at = |t: &Rational| RatWeight(mu.0.iter().zip(&alpha.0).map(|(m, a)| m + t * a).collect());
        Ok(Some(Segment { lower: at(&lo), upper: at(&hi), t_lower: lo, t_upper: hi }))
    }
}

/// Endpoints of a root-string segment. `lower` is `mu''` (minimal in the
/// `alpha_i` direction), `upper` is `mu'`; `mu + t alpha_i` with
/// `t_lower <= t <= t_upper` parametrizes the segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub lower: RatWeight,
    pub upper: RatWeight,
    pub t_lower: Rational,
    pub t_upper: Rational,
}

impl Segment {
    pub fn is_degenerate(&self) -> bool {
        self.t_lower == self.t_upper
    }
}

/// Convex-hull membership by exact linear programming.
pub fn hull_membership_oracle(vertices: &[Weight], mu: &RatWeight) -> bool {
    let pts: Vec<Vec<Rational>> = vertices.iter().map(|v| v.0.iter().map(|&c| rat(c)).collect()).collect();
    lp::convex_combination(&pts, &mu.0).is_some()
}

/// Both sides of the saturation statement, recomputed independently.
#[derive(Debug, Clone)]
pub struct SaturationReport {
    pub lambda: Weight,
    pub w: WeylElement,
    pub lattice_points: Vec<Weight>,
    pub character: CharacterPoly,
    /// Lattice points of the polytope that are not weights of the module.
    pub missing_from_character: Vec<Weight>,
    /// Weights of the module that lie outside the polytope.
    pub missing_from_polytope: Vec<Weight>,
}

impl SaturationReport {
    pub fn is_saturated(&self) -> bool {
        self.missing_from_character.is_empty() && self.missing_from_polytope.is_empty()
    }
}

pub fn saturation_report(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<SaturationReport> {
    let poly = DemazurePolytope::new(group, lambda, w)?;
    let lattice_points = poly.lattice_points(group)?;
    let character = demazure_character_of(group, lambda, w)?;
    let missing_from_character = lattice_points
        .iter()
        .filter(|mu| character.multiplicity(mu) <= 0)
        .cloned()
        .collect();
    let missing_from_polytope = character
        .support()
        .filter(|mu| lattice_points.binary_search(mu).is_err())
        .cloned()
        .collect();
    Ok(SaturationReport {
        lambda: lambda.clone(),
        w,
        lattice_points,
        character,
        missing_from_character,
        missing_from_polytope,
    })
}
