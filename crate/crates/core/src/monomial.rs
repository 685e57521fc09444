//! Monomial ideals and their Newton polyhedra.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::convex::{q, QPolytope, QVec, Q};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Ideal};
use crate::poly::{ExpVec, MonomialOrder, Ring};

/// A monomial ideal given by its minimal generators, kept in
/// lex-descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExpVec>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExpVec>) -> Result<MonomialIdeal> {
        if let Some(g) = gens.iter().find(|g| g.len() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: g.len() });
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(gens) })
    }

    pub fn from_exponents(nvars: usize, gens: &[Vec<u32>]) -> Result<MonomialIdeal> {
        let gens = gens.iter().map(|g| ExpVec::new(g.clone())).collect::<Result<Vec<_>>>()?;
        Self::new(nvars, gens)
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, gens: vec![ExpVec::zero(nvars)] }
    }

    /// `(x_0, ..., x_{h-1})^d` in `nvars` variables.
    pub fn coordinate_power(nvars: usize, h: usize, d: u32) -> Result<MonomialIdeal> {
        if h == 0 || h > nvars {
            return Err(Error::Precondition(format!("need 1 <= h <= {nvars}")));
        }
        let mut gens = Vec::new();
        for_each_composition(h, d, |e| {
            let mut v = e.to_vec();
            v.resize(nvars, 0);
            gens.push(ExpVec::new(v).unwrap());
        });
        Self::new(nvars, gens)
    }

    /// The monomial ideal generated by the single-term generators of `ideal`.
    pub fn from_ideal(ideal: &Ideal) -> Result<MonomialIdeal> {
        ideal
            .monomial_part()
            .ok_or_else(|| Error::Precondition("generators are not monomials".into()))
    }

    /// Ideal generated by every monomial occurring in a generator.
    pub fn support_majorant(ideal: &Ideal) -> MonomialIdeal {
        let gens = ideal.gens().iter().flat_map(|g| g.terms().iter().map(|t| t.0.clone())).collect();
        MonomialIdeal::new(ideal.nvars(), gens).expect("ideal is nonzero")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains_exp(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| g.exps().iter().zip(e).all(|(a, b)| a <= b))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_exp(g.exps()))
    }

    pub fn mul(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Self::new(self.nvars, gens)
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::new(self.nvars, gens)
    }

    /// Generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        Self::new(self.nvars, gens)
    }

    pub fn pow(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Componentwise maximum of the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.nvars).map(|i| self.gens.iter().map(|g| g.get(i)).max().unwrap()).collect()
    }

    /// Exponents of the monomials of degree `t` lying in the ideal.
    pub fn slice(&self, t: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for_each_composition(self.nvars, t, |e| {
            if self.contains_exp(e) {
                out.push(e.to_vec());
            }
        });
        out
    }

    /// Generator exponents as rational points.
    pub fn points(&self) -> Vec<QVec> {
        self.gens.iter().map(|g| exp_point(g.exps())).collect()
    }

    /// The ideal with a variable renaming: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0; self.nvars];
                for (i, &x) in g.exps().iter().enumerate() {
                    v[perm[i]] = x;
                }
                ExpVec::new(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.nvars, gens)
    }

    pub fn to_ideal(&self, ring: &Arc<Ring>) -> Result<Ideal> {
        Ideal::from_monomial(ring, self)
    }
}

fn minimalize(mut gens: Vec<ExpVec>) -> Vec<ExpVec> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut out: Vec<ExpVec> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub(crate) fn exp_point(e: &[u32]) -> QVec {
    e.iter().map(|&x| q(x as i64)).collect()
}

/// Calls `f` on every vector of `n` naturals summing to `t`, in
/// lex-descending order.
pub fn for_each_composition(n: usize, t: u32, mut f: impl FnMut(&[u32])) {
    fn rec(buf: &mut Vec<u32>, i: usize, rest: u32, f: &mut dyn FnMut(&[u32])) {
        if i + 1 == buf.len() {
            buf[i] = rest;
            f(buf);
            return;
        }
        for v in (0..=rest).rev() {
            buf[i] = v;
            rec(buf, i + 1, rest - v, f);
        }
    }
    if n == 0 {
        if t == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = vec![0; n];
    rec(&mut buf, 0, t, &mut f);
}

/// `conv(exponents) + R_{>=0}^n`.
pub fn newton_polytope(a: &MonomialIdeal) -> Result<QPolytope> {
    if a.nvars <= crate::convex::MAX_HULL_DIM {
        return QPolytope::up_closure(&a.points());
    }
    // no facets in high dimension: keep the generators that are extreme
    let pts = a.points();
    let mut keep = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<QVec> = pts.iter().enumerate().filter(|(j, _)| *j != i).map(|t| t.1.clone()).collect();
        if others.is_empty() || !orthant_polyhedron(others).contains(p)? {
            keep.push(p.clone());
        }
    }
    keep.sort();
    Ok(orthant_polyhedron(keep))
}

fn orthant_polyhedron(points: Vec<QVec>) -> QPolytope {
    let n = points[0].len();
    let rays = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    QPolytope::from_parts(n, points, rays, None)
}

/// `min {t : t * (1,...,1) ∈ Γ(a)}`.
pub fn diagonal_mu(a: &MonomialIdeal) -> Result<Q> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    orthant_polyhedron(a.points()).diagonal_scale()
}

/// The F-pure threshold of a proper monomial ideal, `1/mu`.
pub fn monomial_fpt(a: &MonomialIdeal) -> Result<Q> {
    Ok(diagonal_mu(a)?.recip())
}

/// Integral closure: the monomials whose exponents lie in `Γ(a)`.
pub fn integral_closure(a: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.is_unit() {
        return Ok(a.clone());
    }
    // Search box: if u is a minimal generator of the closure and u_i > M_i
    // (M the componentwise max of the generators), write u = w + r with w in
    // conv(gens) and r >= 0. Then w_i <= M_i forces r_i >= 1, so u - e_i is
    // still in Γ(a), contradicting minimality. Hence u <= M.
    let m = a.max_exponents();
    let gamma = newton_polytope(a)?;
    let by_facets = gamma.hrep().is_some();
    let mut found: Vec<ExpVec> = a.gens.clone();
    let total: u32 = m.iter().sum();
    let mut err = None;
    for t in 1..=total {
        for_each_composition(a.nvars, t, |e| {
            if err.is_some() || e.iter().zip(&m).any(|(x, b)| x > b) {
                return;
            }
            if found.iter().any(|g| g.exps().iter().zip(e).all(|(x, y)| x <= y)) {
                return;
            }
            let u = exp_point(e);
            let inside = if by_facets { gamma.contains_by_facets(&u) } else { gamma.contains(&u) };
            match inside {
                Ok(true) => found.push(ExpVec::new(e.to_vec()).unwrap()),
                Ok(false) => {}
                Err(x) => err = Some(x),
            }
        });
    }
    if let Some(e) = err {
        return Err(e);
    }
    MonomialIdeal::new(a.nvars, found)
}

/// Exponent of the pure power of each variable among the generators.
pub fn pure_power_bounds(a: &MonomialIdeal) -> Option<Vec<u32>> {
    (0..a.nvars)
        .map(|i| {
            a.gens
                .iter()
                .filter(|g| g.support().all(|j| j == i))
                .map(|g| g.get(i))
                .min()
        })
        .collect()
}

/// `n! * vol(R_{>=0}^n \ Γ(a))` for an ideal primary to the maximal ideal.
pub fn monomial_multiplicity(a: &MonomialIdeal) -> Result<u64> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let bounds = pure_power_bounds(a).ok_or(Error::NotMPrimary)?;
    // minimal generators other than x_i^{B_i} have x_i-exponent below B_i
    let cap: QVec = bounds.iter().map(|&b| q(b as i64)).collect();
    let inside = QPolytope::boxed_up_closure(&a.points(), &cap)?.volume()?;
    let boxvol = cap.iter().fold(Q::one(), |acc, b| acc * b);
    let e = (boxvol - inside) * Q::from_integer(crate::convex::factorial(a.nvars));
    if !e.is_integer() {
        return Err(Error::Inconsistent(format!("non-integral multiplicity {e}")));
    }
    u64::try_from(e.to_integer()).map_err(|_| Error::ExponentOverflow)
}

/// `Γ(a, t)`: hull of the degree-`t` exponents in `a`.
pub fn gamma_t(a: &MonomialIdeal, t: u32) -> Result<QPolytope> {
    let pts: Vec<QVec> = a.slice(t).iter().map(|e| exp_point(e)).collect();
    if pts.is_empty() {
        return Err(Error::EmptySlice(t));
    }
    crate::convex::convex_hull(&pts)
}

/// Fewest variables meeting every generator's support.
pub fn monomial_height(a: &MonomialIdeal) -> Result<usize> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = a.nvars;
    if n > 24 {
        return Err(Error::ResourceCap("cover search beyond 24 variables".into()));
    }
    let supports: Vec<u32> = a.gens.iter().map(|g| g.support().fold(0u32, |m, i| m | 1 << i)).collect();
    let mut best = n;
    for s in 0u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size < best && supports.iter().all(|&g| g & s != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// `n/t2` when the barycenter of the degree-`t2` slice lies in the relative
/// interior of `Γ(a, t2)`.
pub fn relint_fpt_bound(a: &MonomialIdeal, t: u32, t2: u32) -> Result<Option<Q>> {
    if t2 <= t {
        return Err(Error::Precondition("need t2 > t".into()));
    }
    if a.slice(t).is_empty() {
        return Err(Error::Precondition(format!("no monomial of degree {t} in the ideal")));
    }
    let p = gamma_t(a, t2)?;
    let n = a.nvars;
    if p.affine_dim() != n as isize - 1 {
        return Ok(None);
    }
    let u: QVec = vec![Q::new((t2 as i64).into(), (n as i64).into()); n];
    if p.in_relative_interior(&u)? {
        Ok(Some(Q::new((n as i64).into(), (t2 as i64).into())))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeLevel {
    pub m: u32,
    pub power: u32,
    pub ideal: MonomialIdeal,
    /// `2^-m Γ(a_m, 2^m t_scale)`.
    pub polytope: QPolytope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedProbe {
    pub levels: Vec<ProbeLevel>,
}

impl GradedProbe {
    pub fn last(&self) -> &ProbeLevel {
        self.levels.last().expect("probe has a level")
    }
}

/// Records `a_m = ini(I^{step 2^m})` and their scaled slices for `m <= m_max`,
/// checking `a_m^2 ⊆ a_{m+1}` and that the scaled slices ascend.
pub fn limiting_probe(ideal: &Ideal, ord: &MonomialOrder, step: u32, m_max: u32, t_scale: u32) -> Result<GradedProbe> {
    if step == 0 {
        return Err(Error::Precondition("step must be positive".into()));
    }
    let mut levels: Vec<ProbeLevel> = Vec::new();
    for m in 0..=m_max {
        let scale = 1u32.checked_shl(m).ok_or(Error::ExponentOverflow)?;
        let power = step.checked_mul(scale).ok_or(Error::ExponentOverflow)?;
        let a = initial_ideal(&ideal.pow(power)?, ord)?;
        let t = scale.checked_mul(t_scale).ok_or(Error::ExponentOverflow)?;
        let poly = gamma_t(&a, t)?.scale(&Q::new(1.into(), (scale as i64).into()))?;
        if let Some(prev) = levels.last() {
            if !a.contains_ideal(&prev.ideal.mul(&prev.ideal)?) {
                return Err(Error::Inconsistent(format!("a_{}^2 is not contained in a_{m}", m - 1)));
            }
            for v in prev.polytope.vertices() {
                if !poly.contains_by_facets(v)? {
                    return Err(Error::Inconsistent(format!("scaled slice {} escapes level {m}", m - 1)));
                }
            }
        }
        levels.push(ProbeLevel { m, power, ideal: a, polytope: poly });
    }
    Ok(GradedProbe { levels })
}

/// Whether `u` lies in `Γ(a)`, by facets when available.
pub fn in_newton_polytope(a: &MonomialIdeal, u: &[Q]) -> Result<bool> {
    let g = newton_polytope(a)?;
    if g.hrep().is_some() {
        g.contains_by_facets(u)
    } else {
        g.contains(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{qf, qvec};

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let a = mi(2, &[&[2, 0], &[3, 1], &[0, 2], &[2, 0]]);
        assert_eq!(a.gens().len(), 2);
        assert!(a.contains_exp(&[1, 5]));
        assert!(!a.contains_exp(&[1, 1]));
    }

    #[test]
    fn newton_polytopes() {
        let g = newton_polytope(&mi(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(g.vertices(), &[qvec(&[0, 2]), qvec(&[2, 0])]);
        assert_eq!(g.rays().len(), 2);
        let g = newton_polytope(&mi(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(g.vertices(), &[qvec(&[0, 2]), qvec(&[2, 0])]);
        let g = newton_polytope(&mi(2, &[&[1, 0], &[0, 3]])).unwrap();
        assert_eq!(g.vertices(), &[qvec(&[0, 3]), qvec(&[1, 0])]);
    }

    #[test]
    fn thresholds() {
        assert_eq!(monomial_fpt(&mi(2, &[&[1, 0], &[0, 3]])).unwrap(), qf(4, 3));
        assert_eq!(monomial_fpt(&mi(2, &[&[1, 1]])).unwrap(), q(1));
        assert_eq!(monomial_fpt(&MonomialIdeal::coordinate_power(4, 3, 2).unwrap()).unwrap(), qf(3, 2));
        assert_eq!(monomial_fpt(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn closures() {
        assert_eq!(integral_closure(&mi(2, &[&[2, 0], &[0, 2]])).unwrap(), mi(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(integral_closure(&mi(2, &[&[2, 0], &[0, 3]])).unwrap(), mi(2, &[&[2, 0], &[1, 2], &[0, 3]]));
        let m2 = MonomialIdeal::coordinate_power(2, 2, 2).unwrap();
        assert_eq!(integral_closure(&m2).unwrap(), m2);
    }

    #[test]
    fn multiplicities() {
        for (n, d) in [(2usize, 1u32), (2, 3), (3, 2)] {
            let m = MonomialIdeal::coordinate_power(n, n, d).unwrap();
            assert_eq!(monomial_multiplicity(&m).unwrap(), (d as u64).pow(n as u32));
        }
        assert_eq!(monomial_multiplicity(&mi(2, &[&[2, 0], &[0, 2]])).unwrap(), 4);
        assert_eq!(monomial_multiplicity(&mi(2, &[&[1, 1]])), Err(Error::NotMPrimary));
    }

    #[test]
    fn slices() {
        let a = mi(2, &[&[1, 0], &[0, 3]]);
        let g = gamma_t(&a, 2).unwrap();
        assert_eq!(g.vertices(), &[qvec(&[1, 1]), qvec(&[2, 0])]);
        assert!(!g.contains(&[qf(1, 2), qf(3, 2)]).unwrap());
        assert!(newton_polytope(&a).unwrap().contains(&[qf(1, 2), qf(3, 2)]).unwrap());
        assert_eq!(gamma_t(&mi(2, &[&[2, 0], &[0, 2]]), 1), Err(Error::EmptySlice(1)));
    }

    #[test]
    fn heights() {
        assert_eq!(monomial_height(&mi(3, &[&[1, 1, 0], &[1, 0, 1]])).unwrap(), 1);
        assert_eq!(monomial_height(&mi(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])).unwrap(), 2);
        assert_eq!(monomial_height(&MonomialIdeal::coordinate_power(5, 3, 4).unwrap()).unwrap(), 3);
    }

    #[test]
    fn relint_bounds() {
        let m2 = MonomialIdeal::coordinate_power(2, 2, 2).unwrap();
        assert_eq!(relint_fpt_bound(&m2, 2, 4).unwrap(), Some(qf(1, 2)));
        assert_eq!(relint_fpt_bound(&mi(2, &[&[2, 0]]), 2, 4).unwrap(), None);
        assert!(relint_fpt_bound(&mi(2, &[&[2, 0]]), 1, 2).is_err());
    }
}
