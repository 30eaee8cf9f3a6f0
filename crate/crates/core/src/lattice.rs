//! Small exact integer linear algebra on `i128` with overflow checks.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::{invert, to_i64, Rational};

pub type IntVec = Vec<i128>;

fn overflow() -> Error {
    Error::SizeCap("integer overflow in lattice arithmetic".into())
}

pub fn dot(a: &[i128], b: &[i128]) -> Result<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (x, y)| {
        x.checked_mul(*y).and_then(|p| acc.checked_add(p)).ok_or_else(overflow)
    })
}

/// Divides by the gcd of the entries (no-op for the zero vector).
pub fn make_primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn to_rational_rows(rows: &[IntVec]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn rank(rows: &[IntVec]) -> usize {
    crate::rational::matrix_rank(&to_rational_rows(rows))
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &[IntVec]) -> Result<i128> {
    let n = m.len();
    let mut a: Vec<IntVec> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
            return Ok(0);
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
                a[i][j] = t / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

/// A basis of the integer kernel `{x in Z^n : rows x = 0}`, via unimodular
/// column operations (column Hermite reduction).
pub fn integer_kernel(rows: &[IntVec], n: usize) -> Result<Vec<IntVec>> {
    let mut a: Vec<IntVec> = rows.to_vec();
    // u[c] is column c of the unimodular transform.
    let mut u: Vec<IntVec> = (0..n).map(|c| (0..n).map(|r| (r == c) as i128).collect()).collect();
    let mut p = 0;
    for row in 0..a.len() {
        if p == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (p..n).filter(|&c| a[row][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&c| a[row][c].abs()).expect("nonempty");
            swap_cols(&mut a, &mut u, p, piv);
            let mut done = true;
            for c in p + 1..n {
                let q = a[row][c] / a[row][p];
                if q != 0 {
                    col_axpy(&mut a, &mut u, c, p, -q)?;
                }
                if a[row][c] != 0 {
                    done = false;
                }
            }
            if done {
                p += 1;
                break;
            }
        }
    }
    Ok(u[p..].to_vec())
}

fn swap_cols(a: &mut [IntVec], u: &mut [IntVec], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    u.swap(i, j);
}

/// Column `dst += k * column src`.
fn col_axpy(a: &mut [IntVec], u: &mut [IntVec], dst: usize, src: usize, k: i128) -> Result<()> {
    for row in a.iter_mut() {
        row[dst] = k.checked_mul(row[src]).and_then(|x| x.checked_add(row[dst])).ok_or_else(overflow)?;
    }
    let s = u[src].clone();
    for (d, x) in u[dst].iter_mut().zip(&s) {
        *d = k.checked_mul(*x).and_then(|y| y.checked_add(*d)).ok_or_else(overflow)?;
    }
    Ok(())
}

/// Coordinates with respect to a fixed set of linearly independent vectors.
#[derive(Debug, Clone)]
pub struct Basis {
    pub vectors: Vec<IntVec>,
    pivot_rows: Vec<usize>,
    sub_inverse: Vec<Vec<Rational>>,
}

impl Basis {
    pub fn new(vectors: Vec<IntVec>) -> Result<Self> {
        let k = vectors.len();
        let n = vectors.first().map_or(0, Vec::len);
        // Choose k coordinates on which the vectors are independent.
        let mut pivot_rows: Vec<usize> = Vec::new();
        for r in 0..n {
            if pivot_rows.len() == k {
                break;
            }
            let mut trial = pivot_rows.clone();
            trial.push(r);
            let cols: Vec<IntVec> = vectors.iter().map(|v| trial.iter().map(|&t| v[t]).collect()).collect();
            if rank(&cols) == trial.len() {
                pivot_rows = trial;
            }
        }
        if pivot_rows.len() != k {
            return Err(Error::Internal("basis vectors are linearly dependent".into()));
        }
        let sub: Vec<Vec<Rational>> = pivot_rows
            .iter()
            .map(|&r| vectors.iter().map(|v| Rational::from_integer(v[r].into())).collect())
            .collect();
        let sub_inverse = invert(&sub).ok_or_else(|| Error::Internal("singular basis minor".into()))?;
        Ok(Self { vectors, pivot_rows, sub_inverse })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Integer coordinates of `x`, or `None` if `x` is not in the integer span.
    pub fn coords(&self, x: &[i128]) -> Option<IntVec> {
        let rhs: Vec<Rational> = self.pivot_rows.iter().map(|&r| Rational::from_integer(x[r].into())).collect();
        let c: Vec<i128> = self
            .sub_inverse
            .iter()
            .map(|row| to_i64(&crate::rational::dot(row, &rhs)).map(i128::from))
            .collect::<Option<_>>()?;
        (self.combine(&c).ok()? == x).then_some(c)
    }

    pub fn combine(&self, c: &[i128]) -> Result<IntVec> {
        let n = self.vectors.first().map_or(0, Vec::len);
        let mut out = vec![0i128; n];
        for (v, &k) in self.vectors.iter().zip(c) {
            for (o, x) in out.iter_mut().zip(v) {
                *o = k.checked_mul(*x).and_then(|y| y.checked_add(*o)).ok_or_else(overflow)?;
            }
        }
        Ok(out)
    }
}
