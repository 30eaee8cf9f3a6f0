//! Exact rational helpers shared by the polyhedral code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Converts an integral rational to `i64`, or `None` when it is fractional or too big.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical `"p/q"` text form (`"p"` when the denominator is one).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Smallest common multiple of the denominators.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|q| (q * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g.abs()).collect()
}

/// Integer matrix inverse over the rationals (Gauss-Jordan). `None` if singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of a rational matrix given by rows.
pub fn matrix_rank(rows: &[Vec<Rational>]) -> usize {
    row_echelon(rows).len()
}

/// Nonzero rows of a reduced row echelon form, with the pivot columns.
pub fn row_echelon(rows: &[Vec<Rational>]) -> Vec<(usize, Vec<Rational>)> {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut out_rows = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let Some(piv) = (out_rows..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(out_rows, piv);
        let p = a[out_rows][col].clone();
        for x in a[out_rows].iter_mut() {
            *x /= &p;
        }
        for r in 0..a.len() {
            if r != out_rows && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..ncols {
                    let t = &f * &a[out_rows][c];
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        out_rows += 1;
        if out_rows == a.len() {
            break;
        }
    }
    pivots.into_iter().zip(a).collect()
}

/// Basis of the rational null space `{x : rows · x = 0}`.
pub fn null_space(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = row_echelon(rows);
    let pivot_cols: Vec<usize> = ech.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (pc, row) in &ech {
            v[*pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}
