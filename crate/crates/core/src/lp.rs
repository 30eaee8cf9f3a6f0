//! Exact linear feasibility over the rationals.
//!
//! A dense phase-one simplex with Bland's rule decides whether
//! `A x = b, x >= 0` has a solution and returns one when it does. Every
//! polyhedral oracle in the crate (convex hulls, cones, extremality,
//! pointedness, Farkas certificates) reduces to this single routine.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Solves `A x = b, x >= 0`. Returns a feasible `x` or `None`.
///
/// `a` is given by rows; all rows must have the same length.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }

    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (row, rhs) in a.iter().zip(b) {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = rhs.is_negative();
        let mut r = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x.clone() } else { x.clone() }));
        r.extend((0..m).map(|_| Rational::zero()));
        r.push(if flip { -rhs.clone() } else { rhs.clone() });
        t.push(r);
    }
    for (k, row) in t.iter_mut().enumerate() {
        row[n + k] = Rational::one();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective row: minimize the sum of artificials, expressed in the
    // nonbasic columns (reduced costs).
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for (c, v) in row.iter().enumerate() {
            if c < n || c == width - 1 {
                obj[c] -= v;
            }
        }
    }
    t.push(obj);

    loop {
        let z = &t[m];
        let Some(enter) = (0..n + m).find(|&c| z[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            let coef = &t[r][enter];
            if coef.is_positive() {
                let ratio = &t[r][width - 1] / coef;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Phase one is bounded below by zero, so this cannot happen.
            unreachable!("unbounded phase-one objective");
        };
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }

    if !t[m][width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[r][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for v in t[pr].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[pr].clone();
    for (r, row) in t.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

/// Whether `point` is a convex combination of `points`; returns the weights.
pub fn convex_combination(points: &[Vec<Rational>], point: &[Rational]) -> Option<Vec<Rational>> {
    if points.is_empty() {
        return None;
    }
    let d = point.len();
    let mut a: Vec<Vec<Rational>> = (0..d).map(|k| points.iter().map(|p| p[k].clone()).collect()).collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b = point.to_vec();
    b.push(Rational::one());
    feasible(&a, &b)
}

/// Whether `point` lies in the cone generated by `gens`; returns coefficients.
pub fn conic_combination(gens: &[Vec<Rational>], point: &[Rational]) -> Option<Vec<Rational>> {
    let d = point.len();
    let a: Vec<Vec<Rational>> = (0..d).map(|k| gens.iter().map(|g| g[k].clone()).collect()).collect();
    feasible(&a, point)
}

/// Whether `gens` generate a pointed cone (no nontrivial nonnegative relation).
pub fn is_pointed(gens: &[Vec<Rational>]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let d = gens[0].len();
    let mut a: Vec<Vec<Rational>> = (0..d).map(|k| gens.iter().map(|g| g[k].clone()).collect()).collect();
    a.push(vec![Rational::one(); gens.len()]);
    let mut b = vec![Rational::zero(); d];
    b.push(Rational::one());
    feasible(&a, &b).is_none()
}

/// Whether `gens[index]` spans an extremal ray of the pointed cone `cone(gens)`.
///
/// The ray is extremal exactly when the generator is not a nonnegative
/// combination of the generators that are not positive multiples of it.
pub fn is_extremal(gens: &[Vec<Rational>], index: usize) -> bool {
    let g = &gens[index];
    if g.iter().all(Zero::is_zero) {
        return false;
    }
    let others: Vec<Vec<Rational>> = gens
        .iter()
        .filter(|h| !same_ray(h, g))
        .cloned()
        .collect();
    conic_combination(&others, g).is_none()
}

/// Whether `a` is a positive multiple of `b` (both nonzero).
pub fn same_ray(a: &[Rational], b: &[Rational]) -> bool {
    let Some(k) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if a[k].is_zero() || a[k].is_negative() != b[k].is_negative() {
        return false;
    }
    let s = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &s * y)
}
