//! Exact two-phase simplex over the rationals.
//!
//! Solves `min c.x` subject to `A x = b`, `x >= 0`. Bland's rule keeps it
//! finite on degenerate problems.

use num_traits::{One, Signed, Zero};

use super::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Q, x: Vec<Q> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    // m constraint rows followed by one objective row; last column is the rhs
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Q::one() / &self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex on the objective row over the allowed columns.
    /// Returns false when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let m = self.basis.len();
        loop {
            let obj = &self.rows[m];
            // objective row holds reduced costs; entering column has a negative one
            let Some(c) = (0..allowed).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Q)> = None;
            for i in 0..m {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rows[i][self.ncols] / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Minimizes `c.x` subject to `a x = b`, `x >= 0`.
pub fn solve(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == m, "lp shape");
    // phase one with artificials n..n+m
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m + 1);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row = vec![Q::zero(); ncols + 1];
        for j in 0..n {
            row[j] = if neg { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Q::one();
        row[ncols] = if neg { -b[i].clone() } else { b[i].clone() };
        rows.push(row);
    }
    let mut obj = vec![Q::zero(); ncols + 1];
    for row in &rows {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[ncols] -= &row[ncols];
    }
    rows.push(obj);
    let mut t = Tableau { rows, basis: (n..n + m).collect(), ncols };
    t.optimize(n);
    if !t.rows[m][ncols].is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificials out of the basis
    for i in 0..m {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }
    // phase two objective: reduced costs c_j - c_B B^-1 A_j
    let mut obj = vec![Q::zero(); ncols + 1];
    obj[..n].clone_from_slice(c);
    for i in 0..m {
        let bj = t.basis[i];
        if bj < n && !c[bj].is_zero() {
            let cb = c[bj].clone();
            for (j, v) in obj.iter_mut().enumerate() {
                if j < n || j == ncols {
                    *v -= &cb * &t.rows[i][j];
                }
            }
        }
    }
    t.rows[m] = obj;
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for i in 0..m {
        if t.basis[i] < n {
            x[t.basis[i]] = t.rows[i][ncols].clone();
        }
    }
    let value = -t.rows[m][ncols].clone();
    LpOutcome::Optimal { value, x }
}

/// Whether `a x = b`, `x >= 0` has a solution.
pub fn feasible(a: &[Vec<Q>], b: &[Q]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    !matches!(solve(a, b, &vec![Q::zero(); n]), LpOutcome::Infeasible)
}
