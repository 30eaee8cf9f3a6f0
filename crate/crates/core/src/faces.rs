//! Faces `F(v, P_i)` of Demazure polytopes and their Levi structure.
//!
//! For `v` a minimal representative of `W / W_{P_i}` the face is the locus
//! where the `(v, i)` inequality is tight. Writing `w^{-1} * v = u y^{-1}`
//! with `u` the minimal coset representative and `y` in `W_{P_i}`, the face
//! is the image under `v` of the Demazure polytope of the Levi subsystem
//! on `Δ \ {i}` for the weight `u^{-1} lambda` and the element `y`.

use std::collections::BTreeSet;

use crate::charpoly::{demazure_character_of, CharacterPoly};
use crate::error::{Error, Result};
use crate::polytope::{inequality_set, vertex_set, DemazurePolytope};
use crate::rootdata::{RootDatum, Weight};
use crate::weyl::{format_word, WeylElement, WeylGroup};

#[derive(Debug, Clone)]
pub struct Face {
    pub lambda: Weight,
    /// The element as given.
    pub w_input: WeylElement,
    /// Maximal-length representative of `w W_lambda`, used throughout.
    pub w: WeylElement,
    pub v: WeylElement,
    pub i: usize,
    pub u: WeylElement,
    pub y: WeylElement,
    /// `{x lambda : x in v W_{P_i} u^{-1}, x <= w}`, sorted.
    pub vertex_weights: Vec<Weight>,
    /// Simple indices of the Levi subsystem (`Δ \ {i}`), 0-based.
    pub levi_indices: Vec<usize>,
}

/// Builds the face `F(v, P_i)` from the coset formula.
pub fn face_data(group: &WeylGroup, lambda: &Weight, w: WeylElement, v: WeylElement, i: usize) -> Result<Face> {
    let datum = group.datum();
    datum.check_rank(lambda.rank())?;
    datum.check_index(i)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let par = group.maximal_parabolic(i);
    if !group.is_min_coset_rep(v, &par) {
        return Err(Error::NotMinimalRepresentative(format!(
            "v = [{}] for i = {}",
            format_word(&group.word(v)),
            i + 1
        )));
    }
    let wn = group.max_rep_mod_stabilizer(lambda, w);
    let q = group.demazure_product(group.inverse(wn), v);
    let u = group.min_coset_rep(q, &par);
    let y = group.mul(group.inverse(q), u);
    if !group.in_parabolic(y, &par) || group.length(q) != group.length(u) + group.length(y) {
        return Err(Error::Internal(format!(
            "factorization w^-1 * v = u y^-1 failed for v = [{}], i = {}",
            format_word(&group.word(v)),
            i + 1
        )));
    }
    let uinv = group.inverse(u);
    let mut vertex_weights: Vec<Weight> = group
        .parabolic_subgroup(&par)
        .into_iter()
        .map(|c| group.mul(group.mul(v, c), uinv))
        .filter(|&x| group.bruhat_leq(x, wn))
        .map(|x| group.act(x, lambda))
        .collect();
    vertex_weights.sort();
    vertex_weights.dedup();
    Ok(Face {
        lambda: lambda.clone(),
        w_input: w,
        w: wn,
        v,
        i,
        u,
        y,
        vertex_weights,
        levi_indices: par,
    })
}

/// Vertices of `P_lambda^w` on which the `(v, i)` inequality is tight.
pub fn face_vertices_by_equality(group: &WeylGroup, lambda: &Weight, w: WeylElement, v: WeylElement, i: usize) -> Result<Vec<Weight>> {
    let ineqs = inequality_set(group, lambda, w)?;
    let h = ineqs
        .iter()
        .find(|h| h.v == v && h.i == i)
        .ok_or_else(|| Error::NotMinimalRepresentative(format!("v = [{}]", format_word(&group.word(v)))))?;
    Ok(vertex_set(group, lambda, w)?
        .into_iter()
        .filter(|mu| h.is_tight(&mu.to_rational()))
        .collect())
}

/// Every face `F(v, P_i)` of `P_lambda^w`, ordered by `i` then `v`.
pub fn all_faces(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Vec<Face>> {
    let mut out = Vec::new();
    for i in 0..group.rank() {
        for v in group.min_coset_reps(&group.maximal_parabolic(i)) {
            out.push(face_data(group, lambda, w, v, i)?);
        }
    }
    Ok(out)
}

/// Outcome of the Levi comparison for one face; each flag is one assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviReport {
    /// Coset formula agrees with equality filtering of the vertex set.
    pub vertices_by_equality: bool,
    /// `W_{P_i} ∩ v^{-1}[e, w]u = [e, y]`.
    pub interval: bool,
    /// `v^{-1}` maps face vertices onto the Levi polytope's vertices.
    pub levi_vertices: bool,
    /// `v^{-1}` maps face lattice points onto the Levi polytope's lattice points.
    pub levi_lattice_points: bool,
    /// Levi multiplicities are dominated by ambient multiplicities.
    pub multiplicities: bool,
    pub levi_label: String,
    pub levi_lambda: Weight,
    pub levi_word: Vec<usize>,
}

impl LeviReport {
    pub fn all_hold(&self) -> bool {
        self.vertices_by_equality && self.interval && self.levi_vertices && self.levi_lattice_points && self.multiplicities
    }

    /// Names of the assertions that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.vertices_by_equality, "vertices_by_equality"),
            (self.interval, "interval"),
            (self.levi_vertices, "levi_vertices"),
            (self.levi_lattice_points, "levi_lattice_points"),
            (self.multiplicities, "multiplicities"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

/// The Levi datum, weight `u^{-1} lambda` restricted to it, and `y` as a
/// word in the Levi's own indices.
pub fn levi_data(group: &WeylGroup, face: &Face) -> Result<(RootDatum, Weight, Vec<usize>)> {
    let datum = group.datum();
    let levi = datum.levi(&face.levi_indices)?;
    let ulam = group.act(group.inverse(face.u), &face.lambda);
    let levi_lambda = restrict(&ulam, &face.levi_indices);
    let word = group
        .word(face.y)
        .into_iter()
        .map(|j| {
            face.levi_indices
                .iter()
                .position(|&k| k == j)
                .ok_or_else(|| Error::Internal("y uses a letter outside the Levi".into()))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok((levi, levi_lambda, word))
}

fn restrict(mu: &Weight, indices: &[usize]) -> Weight {
    Weight(indices.iter().map(|&k| mu.0[k]).collect())
}

/// Ambient data shared by all faces of one polytope.
#[derive(Debug, Clone)]
pub struct FaceContext {
    pub polytope: DemazurePolytope,
    pub lattice_points: Vec<Weight>,
    pub character: CharacterPoly,
}

impl FaceContext {
    pub fn new(group: &WeylGroup, lambda: &Weight, w: WeylElement) -> Result<Self> {
        let polytope = DemazurePolytope::new(group, lambda, w)?;
        let lattice_points = polytope.lattice_points(group)?;
        let character = demazure_character_of(group, lambda, w)?;
        Ok(Self { polytope, lattice_points, character })
    }
}

/// Verifies the Levi description of a face built by [`face_data`].
pub fn levi_face_check(group: &WeylGroup, face: &Face) -> Result<LeviReport> {
    let ctx = FaceContext::new(group, &face.lambda, face.w)?;
    levi_face_check_with(group, face, &ctx)
}

/// As [`levi_face_check`], reusing ambient data built for `face.w`.
pub fn levi_face_check_with(group: &WeylGroup, face: &Face, ctx: &FaceContext) -> Result<LeviReport> {
    let datum = group.datum();
    let lambda = &face.lambda;
    let vinv = group.inverse(face.v);
    let par = &face.levi_indices;
    let poly = &ctx.polytope;
    if poly.lambda != *lambda || poly.w != face.w {
        return Err(Error::Internal("face context built for a different polytope".into()));
    }

    let h = poly
        .inequalities
        .iter()
        .find(|h| h.v == face.v && h.i == face.i)
        .ok_or_else(|| Error::Internal("face inequality missing".into()))?;
    let by_equality: Vec<Weight> = poly
        .vertices
        .iter()
        .filter(|mu| h.is_tight(&mu.to_rational()))
        .cloned()
        .collect();
    let vertices_by_equality = by_equality == face.vertex_weights;

    let brute: BTreeSet<WeylElement> = group
        .lower_interval(face.w)
        .into_iter()
        .map(|x| group.mul(group.mul(vinv, x), face.u))
        .filter(|&c| group.in_parabolic(c, par))
        .collect();
    let interval_set: BTreeSet<WeylElement> = group.lower_interval(face.y).into_iter().collect();
    let interval = brute == interval_set;

    let (levi, levi_lambda, levi_word) = levi_data(group, face)?;
    let lgroup = WeylGroup::generate(&levi)?;
    let ly = lgroup.from_reduced_word(&levi_word)?;
    let lpoly = DemazurePolytope::new(&lgroup, &levi_lambda, ly)?;
    let ulam = group.act(group.inverse(face.u), lambda);

    // mu -> v^{-1} mu, recorded in Levi coordinates once v^{-1} mu - u^{-1} lambda
    // is checked to lie in the Levi root lattice.
    let to_levi = |mu: &Weight| -> Option<Weight> {
        let img = group.act(vinv, mu);
        let c = datum.root_coords(&img.sub(&ulam))?;
        (c[face.i] == 0).then(|| restrict(&img, par))
    };
    let mapped = |pts: &[Weight]| -> Option<Vec<Weight>> {
        let mut out = pts.iter().map(to_levi).collect::<Option<Vec<_>>>()?;
        out.sort();
        let n = out.len();
        out.dedup();
        (out.len() == n).then_some(out)
    };
    let levi_vertices = mapped(&face.vertex_weights).is_some_and(|m| m == lpoly.vertices);

    let face_points: Vec<Weight> = ctx
        .lattice_points
        .iter()
        .filter(|mu| h.is_tight(&mu.to_rational()))
        .cloned()
        .collect();
    let levi_points = lpoly.lattice_points(&lgroup)?;
    let levi_lattice_points = mapped(&face_points).is_some_and(|m| m == levi_points);

    let ambient = &ctx.character;
    let levi_char = demazure_character_of(&lgroup, &levi_lambda, ly)?;
    let multiplicities = face_points.iter().all(|mu| match to_levi(mu) {
        Some(nu) => levi_char.multiplicity(&nu) <= ambient.multiplicity(mu),
        None => false,
    });

    Ok(LeviReport {
        vertices_by_equality,
        interval,
        levi_vertices,
        levi_lattice_points,
        multiplicities,
        levi_label: levi.label().to_string(),
        levi_lambda,
        levi_word,
    })
}
