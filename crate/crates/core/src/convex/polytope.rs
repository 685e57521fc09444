use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use super::hull::convex_hull;
use super::lp::{feasible, solve, LpOutcome};
use super::{affine_dim, det, dot, factorial, q, sub, Q, QVec};
use crate::error::{Error, Result};

/// `{v : normal . v >= offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: QVec,
    pub offset: Q,
}

impl HalfSpace {
    pub fn new(normal: QVec, offset: Q) -> Result<HalfSpace> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("half-space normal is zero".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    /// Half-space bounded by the hyperplane through `point` with the given normal.
    pub fn through(normal: QVec, point: &[Q]) -> Result<HalfSpace> {
        let offset = dot(&normal, point);
        HalfSpace::new(normal, offset)
    }

    pub fn opposite(&self) -> HalfSpace {
        HalfSpace { normal: self.normal.iter().map(|x| -x).collect(), offset: -self.offset.clone() }
    }

    pub fn eval(&self, v: &[Q]) -> Q {
        dot(&self.normal, v) - &self.offset
    }
}

/// Facet inequality `normal . x >= offset`; `vertices` index the polytope's
/// vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: QVec,
    pub offset: Q,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    /// Affine hull as `n . x = b`.
    pub equalities: Vec<(QVec, Q)>,
    pub facets: Vec<Facet>,
}

/// A rational polyhedron `conv(vertices) + cone(rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolytope {
    dim: usize,
    vertices: Vec<QVec>,
    rays: Vec<QVec>,
    hrep: Option<HRep>,
}

impl QPolytope {
    pub(crate) fn from_parts(dim: usize, vertices: Vec<QVec>, rays: Vec<QVec>, hrep: Option<HRep>) -> Self {
        QPolytope { dim, vertices, rays, hrep }
    }

    pub fn empty(dim: usize) -> Self {
        QPolytope { dim, vertices: Vec::new(), rays: Vec::new(), hrep: None }
    }

    /// `conv(points) + R_{>=0}^dim`, with minimal vertices and facets.
    pub fn up_closure(points: &[QVec]) -> Result<QPolytope> {
        let Some(first) = points.first() else {
            return Err(Error::Precondition("up-closure of no points".into()));
        };
        let dim = first.len();
        let cap: QVec = (0..dim)
            .map(|i| points.iter().map(|p| p[i].clone()).max().unwrap() + Q::one())
            .collect();
        let boxed = Self::boxed_up_closure(points, &cap)?;
        let h = boxed.hrep.as_ref().expect("hull has facets");
        let keep: Vec<usize> = (0..boxed.vertices.len())
            .filter(|&i| boxed.vertices[i].iter().zip(&cap).all(|(x, c)| x < c))
            .collect();
        let vertices: Vec<QVec> = keep.iter().map(|&i| boxed.vertices[i].clone()).collect();
        let facets = h
            .facets
            .iter()
            .filter(|f| !is_upper_box_facet(f))
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: f.offset.clone(),
                vertices: f.vertices.iter().filter_map(|v| keep.binary_search(v).ok()).collect(),
            })
            .collect();
        let rays = (0..dim).map(|i| unit(dim, i)).collect();
        Ok(QPolytope { dim, vertices, rays, hrep: Some(HRep { equalities: Vec::new(), facets }) })
    }

    /// `(conv(points) + R_{>=0}^dim) ∩ {x <= cap}`, for `cap` dominating every point.
    pub fn boxed_up_closure(points: &[QVec], cap: &[Q]) -> Result<QPolytope> {
        let dim = cap.len();
        if points.iter().any(|p| p.iter().zip(cap).any(|(x, c)| x > c)) {
            return Err(Error::Precondition("box does not dominate the points".into()));
        }
        let mut pts = Vec::with_capacity(points.len() << dim);
        for p in points {
            for mask in 0u32..(1 << dim) {
                let v: QVec = (0..dim).map(|i| if mask >> i & 1 == 1 { cap[i].clone() } else { p[i].clone() }).collect();
                pts.push(v);
            }
        }
        convex_hull(&pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn hrep(&self) -> Option<&HRep> {
        self.hrep.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Dimension of the affine hull of the vertices (rays ignored).
    pub fn affine_dim(&self) -> isize {
        affine_dim(&self.vertices.iter().collect::<Vec<_>>())
    }

    pub fn scale(&self, s: &Q) -> Result<QPolytope> {
        if !s.is_positive() {
            return Err(Error::Precondition("scale factor must be positive".into()));
        }
        let vertices = self.vertices.iter().map(|v| v.iter().map(|x| x * s).collect()).collect();
        let hrep = self.hrep.as_ref().map(|h| HRep {
            equalities: h.equalities.iter().map(|(n, b)| (n.clone(), b * s)).collect(),
            facets: h
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * s, vertices: f.vertices.clone() })
                .collect(),
        });
        Ok(QPolytope { dim: self.dim, vertices, rays: self.rays.clone(), hrep })
    }

    fn check_dim(&self, u: &[Q]) -> Result<()> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: u.len() });
        }
        Ok(())
    }

    /// Membership by LP feasibility of `u = sum l_i v_i + sum m_j r_j`.
    pub fn contains(&self, u: &[Q]) -> Result<bool> {
        self.check_dim(u)?;
        if self.vertices.is_empty() {
            return Ok(false);
        }
        let nv = self.vertices.len();
        let ncols = nv + self.rays.len();
        let mut a = Vec::with_capacity(self.dim + 1);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(ncols);
            row.extend(self.vertices.iter().map(|v| v[i].clone()));
            row.extend(self.rays.iter().map(|r| r[i].clone()));
            a.push(row);
        }
        let mut ones = vec![Q::one(); nv];
        ones.resize(ncols, Q::zero());
        a.push(ones);
        let mut b: QVec = u.to_vec();
        b.push(Q::one());
        Ok(feasible(&a, &b))
    }

    /// Membership by evaluating the stored facet inequalities.
    pub fn contains_by_facets(&self, u: &[Q]) -> Result<bool> {
        self.check_dim(u)?;
        if self.vertices.is_empty() {
            return Ok(false);
        }
        let h = self.hrep.as_ref().ok_or_else(|| Error::Precondition("no facet description".into()))?;
        Ok(h.equalities.iter().all(|(n, b)| dot(n, u) == *b) && h.facets.iter().all(|f| dot(&f.normal, u) >= f.offset))
    }

    /// Whether `u` satisfies every facet inequality strictly (and every
    /// equality), i.e. lies in the relative interior.
    pub fn in_relative_interior(&self, u: &[Q]) -> Result<bool> {
        self.check_dim(u)?;
        if self.vertices.is_empty() {
            return Ok(false);
        }
        let h = self.hrep.as_ref().ok_or_else(|| Error::Precondition("no facet description".into()))?;
        Ok(h.equalities.iter().all(|(n, b)| dot(n, u) == *b) && h.facets.iter().all(|f| dot(&f.normal, u) > f.offset))
    }

    /// `min {t : t * (1,...,1) in P}` for a polyhedron whose recession cone
    /// is the nonnegative orthant.
    pub fn diagonal_scale(&self) -> Result<Q> {
        for i in 0..self.dim {
            let e = unit(self.dim, i);
            if !self.rays.iter().any(|r| same_direction(r, &e)) {
                return Err(Error::Precondition("recession cone is not the orthant".into()));
            }
        }
        if self.vertices.is_empty() {
            return Err(Error::Infeasible);
        }
        let nv = self.vertices.len();
        let nr = self.rays.len();
        let ncols = nv + nr + 1;
        let mut a = Vec::with_capacity(self.dim + 1);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(ncols);
            row.extend(self.vertices.iter().map(|v| v[i].clone()));
            row.extend(self.rays.iter().map(|r| r[i].clone()));
            row.push(-Q::one());
            a.push(row);
        }
        let mut ones = vec![Q::one(); nv];
        ones.resize(ncols, Q::zero());
        a.push(ones);
        let mut b = vec![Q::zero(); self.dim];
        b.push(Q::one());
        let mut c = vec![Q::zero(); ncols];
        c[ncols - 1] = Q::one();
        match solve(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => Ok(value),
            LpOutcome::Infeasible => Err(Error::Infeasible),
            LpOutcome::Unbounded => Err(Error::Unbounded),
        }
    }

    fn full_dim_hrep(&self) -> Result<Option<&HRep>> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        if self.vertices.is_empty() || self.affine_dim() < self.dim as isize {
            return Ok(None);
        }
        Ok(Some(self.hrep.as_ref().expect("bounded polytopes carry facets")))
    }

    /// Simplices (as vertex index lists) of a pulling triangulation.
    pub fn triangulation(&self) -> Result<Vec<Vec<usize>>> {
        let Some(h) = self.full_dim_hrep()? else {
            return Ok(Vec::new());
        };
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let facet_sets: Vec<Vec<usize>> = h
            .facets
            .iter()
            .map(|f| {
                let mut v = f.vertices.clone();
                v.sort_unstable();
                v
            })
            .collect();
        let mut out = Vec::new();
        self.triangulate_face(&all, self.dim, &facet_sets, &mut out);
        Ok(out)
    }

    fn triangulate_face(&self, face: &[usize], j: usize, facets: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        if j == 0 {
            out.push(vec![face[0]]);
            return;
        }
        let apex = face[0];
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let sub: Vec<usize> = face.iter().copied().filter(|v| f.binary_search(v).is_ok()).collect();
            if sub.len() < j || sub.contains(&apex) || seen.contains(&sub) {
                continue;
            }
            let refs: Vec<&QVec> = sub.iter().map(|&i| &self.vertices[i]).collect();
            if affine_dim(&refs) != j as isize - 1 {
                continue;
            }
            seen.insert(sub.clone());
            let mut inner = Vec::new();
            self.triangulate_face(&sub, j - 1, facets, &mut inner);
            for mut s in inner {
                s.push(apex);
                out.push(s);
            }
        }
    }

    fn simplex_volume(&self, s: &[usize]) -> Q {
        let v0 = &self.vertices[s[0]];
        let rows: Vec<QVec> = s[1..].iter().map(|&i| sub(&self.vertices[i], v0)).collect();
        let d = det(&rows).abs();
        d / Q::from_integer(factorial(self.dim))
    }

    /// Exact volume; zero for empty or lower-dimensional polytopes.
    pub fn volume(&self) -> Result<Q> {
        Ok(self.triangulation()?.iter().map(|s| self.simplex_volume(s)).fold(Q::zero(), |a, b| a + b))
    }

    pub fn centroid(&self) -> Result<QVec> {
        let simplices = self.triangulation()?;
        if simplices.is_empty() {
            return Err(Error::Degenerate);
        }
        let mut total = Q::zero();
        let mut acc = vec![Q::zero(); self.dim];
        let k1 = q(self.dim as i64 + 1);
        for s in &simplices {
            let vol = self.simplex_volume(s);
            for &i in s {
                for (a, x) in acc.iter_mut().zip(&self.vertices[i]) {
                    *a += &vol * x / &k1;
                }
            }
            total += vol;
        }
        Ok(acc.into_iter().map(|a| a / &total).collect())
    }

    /// `P ∩ H` for bounded `P`.
    pub fn halfspace_cut(&self, h: &HalfSpace) -> Result<QPolytope> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        self.check_dim(&h.normal)?;
        let vals: Vec<Q> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let mut pts: Vec<QVec> = self
            .vertices
            .iter()
            .zip(&vals)
            .filter(|(_, s)| !s.is_negative())
            .map(|(v, _)| v.clone())
            .collect();
        for i in 0..self.vertices.len() {
            for j in 0..self.vertices.len() {
                if vals[i].is_positive() && vals[j].is_negative() {
                    let t = &vals[i] / (&vals[i] - &vals[j]);
                    let p: QVec = self.vertices[i]
                        .iter()
                        .zip(&self.vertices[j])
                        .map(|(a, b)| a + &t * (b - a))
                        .collect();
                    pts.push(p);
                }
            }
        }
        if pts.is_empty() {
            return Ok(QPolytope::empty(self.dim));
        }
        convex_hull(&pts)
    }

    /// The image under dropping the last coordinate.
    pub fn drop_last_coordinate(&self) -> Result<QPolytope> {
        if !self.is_bounded() || self.dim == 0 {
            return Err(Error::Precondition("projection needs a bounded polytope".into()));
        }
        if self.vertices.is_empty() {
            return Ok(QPolytope::empty(self.dim - 1));
        }
        let pts: Vec<QVec> = self.vertices.iter().map(|v| v[..self.dim - 1].to_vec()).collect();
        convex_hull(&pts)
    }

    /// Minkowski sum of polyhedra with orthant recession cones or of
    /// bounded polytopes.
    pub fn minkowski_sum(&self, other: &QPolytope) -> Result<QPolytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut pts = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect::<QVec>());
            }
        }
        match (self.is_bounded(), other.is_bounded()) {
            (true, true) => convex_hull(&pts),
            _ => QPolytope::up_closure(&pts),
        }
    }
}

fn unit(dim: usize, i: usize) -> QVec {
    (0..dim).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
}

fn same_direction(r: &[Q], e: &[Q]) -> bool {
    let Some(k) = e.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if !r[k].is_positive() {
        return false;
    }
    let s = &r[k] / &e[k];
    r.iter().zip(e).all(|(a, b)| *a == b * &s)
}

fn is_upper_box_facet(f: &Facet) -> bool {
    let nonzero: Vec<&Q> = f.normal.iter().filter(|x| !x.is_zero()).collect();
    nonzero.len() == 1 && nonzero[0].is_negative()
}

/// `1 - (n/(n+1))^n`.
pub fn grunbaum_bound(n: u32) -> Result<Q> {
    if n == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let r = Q::new(BigInt::from(n), BigInt::from(n + 1));
    Ok(Q::one() - num_traits::pow(r, n as usize))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrunbaumReport {
    pub ratio: Q,
    pub bound: Q,
    pub holds: bool,
    pub equality: bool,
}

/// Compares `vol(H ∩ P) / vol(P)` with the bound, for `H` bounded by a
/// hyperplane through the centroid.
pub fn grunbaum_check(p: &QPolytope, h: &HalfSpace) -> Result<GrunbaumReport> {
    let c = p.centroid()?;
    if !h.eval(&c).is_zero() {
        return Err(Error::CentroidOffHyperplane);
    }
    let cut = p.halfspace_cut(h)?;
    let ratio = cut.volume()? / p.volume()?;
    let bound = grunbaum_bound(p.dim() as u32)?;
    Ok(GrunbaumReport { holds: ratio <= bound, equality: ratio == bound, ratio, bound })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DavenportReport {
    pub lattice_count: u64,
    pub proj_volume: Q,
    pub gap: Q,
    pub bound_literal: Q,
    pub bound_corrected: Q,
    pub holds_literal: bool,
    pub holds_corrected: bool,
}

/// Sum-of-projections estimate for a lattice polytope inside the slice
/// `{a >= 0, sum a = t}` of `R^(n+1)`.
pub fn davenport_check(p: &QPolytope, t: u32, n: usize) -> Result<DavenportReport> {
    if p.dim() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: p.dim() });
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let tq = q(t as i64);
    let in_slice = p.vertices().iter().all(|v| {
        v.iter().all(|x| !x.is_negative()) && v.iter().fold(Q::zero(), |a, b| a + b) == tq
    });
    if !in_slice {
        return Err(Error::Precondition("polytope is not inside the degree slice".into()));
    }
    let mut count = 0u64;
    if !p.is_empty() {
        let mut err = None;
        crate::monomial::for_each_composition(n + 1, t, |e| {
            let u: QVec = e.iter().map(|&x| q(x as i64)).collect();
            match p.contains_by_facets(&u) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    let proj_volume = p.drop_last_coordinate()?.volume()?;
    let gap = (q(count as i64) - &proj_volume).abs();
    let mut bound_literal = Q::zero();
    for i in 1..n {
        let c = binomial(BigInt::from(n), BigInt::from(i));
        bound_literal += Q::from_integer(c * num_traits::pow(BigInt::from(t), i)) / Q::from_integer(factorial(i));
    }
    let bound_corrected = &bound_literal + Q::one();
    Ok(DavenportReport {
        lattice_count: count,
        holds_literal: gap <= bound_literal,
        holds_corrected: gap <= bound_corrected,
        proj_volume,
        gap,
        bound_literal,
        bound_corrected,
    })
}
