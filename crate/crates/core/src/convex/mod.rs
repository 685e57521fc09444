//! Exact rational convex geometry.

pub mod lp;
mod hull;
mod polytope;

pub use hull::{convex_hull, MAX_DIM as MAX_HULL_DIM};
pub use polytope::{
    davenport_check, grunbaum_bound, grunbaum_check, Facet, GrunbaumReport, DavenportReport, HRep, HalfSpace,
    QPolytope,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Q = num_rational::BigRational;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Reduced row echelon form over `Q` and its pivot columns.
pub(crate) fn rref(rows: &[QVec]) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = Q::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn rank(rows: &[QVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(rows).1.len()
}

/// Dimension of the affine span of `pts`; `-1` for the empty set.
pub(crate) fn affine_dim(pts: &[&QVec]) -> isize {
    match pts.split_first() {
        None => -1,
        Some((p0, rest)) => {
            let diffs: Vec<QVec> = rest.iter().map(|p| sub(p, p0)).collect();
            rank(&diffs) as isize
        }
    }
}

/// Null space basis of the matrix with the given rows.
pub(crate) fn kernel(rows: &[QVec], ncols: usize) -> Vec<QVec> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
    }
    let (red, pivots) = rref(rows);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[r][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by fraction-exact elimination.
pub(crate) fn det(rows: &[QVec]) -> Q {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut acc = Q::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if pr != c {
            m.swap(pr, c);
            acc = -acc;
        }
        acc *= &m[c][c];
        let prow = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &prow[c];
                for (v, p) in row.iter_mut().zip(&prow).skip(c) {
                    *v -= &f * p;
                }
            }
        }
    }
    acc
}

/// Scales `v` so that its first nonzero entry is `+1` or `-1` with the same
/// sign, giving a canonical representative up to positive multiples.
pub(crate) fn normalize_direction(v: &mut [Q], off: &mut Q) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() {
        let s = if first < Q::zero() { -first } else { first };
        for x in v.iter_mut() {
            *x /= &s;
        }
        *off /= &s;
    }
}
