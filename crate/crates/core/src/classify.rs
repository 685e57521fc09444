//! Essential codimension, restriction to hyperplanes, and the two
//! verification pipelines built on the F-pure threshold machinery.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::convex::Q;
use crate::error::{Error, Result};
use crate::field::{Fe, FieldCfg};
use crate::frobenius::{
    compatible_containment, fpt_bounds, sharp_witness, splitting_level, FptBounds,
};
use crate::groebner::{height, Ideal};
use crate::linalg::Matrix;
use crate::monomial::{for_each_composition, integral_closure, MonomialIdeal};
use crate::poly::{ExpVec, Poly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EssMethod {
    DerivativeSpan,
    PointSearch,
}

impl EssMethod {
    pub fn tag(self) -> &'static str {
        match self {
            EssMethod::DerivativeSpan => "derivative-span",
            EssMethod::PointSearch => "point-search",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EssConfig {
    /// Largest extension degree searched as a cross-check in point search.
    pub ext_max: u32,
    /// Largest number of projective points visited per field.
    pub max_points: u64,
}

impl Default for EssConfig {
    fn default() -> Self {
        EssConfig { ext_max: 2, max_points: 200_000 }
    }
}

#[derive(Clone, Debug)]
pub struct EssResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// Substitutions `x = C y` after which the generators involve only
    /// `y_0, ..., y_{upper-1}`.
    pub certificate: Vec<Matrix>,
    pub method: EssMethod,
    /// Extension degrees whose projective spaces were searched completely.
    pub searched_degrees: Vec<u32>,
}

/// Whether `g(C y)` involves only the first `r` variables for every generator.
pub fn certificate_holds(ideal: &Ideal, c: &Matrix, r: usize) -> Result<bool> {
    for g in ideal.gens() {
        let h = g.linear_change(c)?;
        if h.terms().iter().any(|t| t.0.exps()[r..].iter().any(|&k| k > 0)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn unit_rows_complement(rows: &[Vec<Fe>], n: usize, field: &FieldCfg) -> Result<Vec<Vec<Fe>>> {
    let pivots = if rows.is_empty() { Vec::new() } else { Matrix::from_rows(rows.to_vec())?.rref(field).1 };
    Ok((0..n)
        .filter(|j| !pivots.contains(j))
        .map(|j| {
            let mut v = vec![field.zero(); n];
            v[j] = field.one();
            v
        })
        .collect())
}

fn transpose(rows: &[Vec<Fe>]) -> Result<Matrix> {
    let n = rows.len();
    let mut m = Matrix::zeros(n, n);
    for (j, col) in rows.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

fn derivative_span(ideal: &Ideal, d: u32) -> Result<(usize, Matrix)> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.nvars();
    let mut forms: Vec<Vec<Fe>> = Vec::new();
    for g in ideal.gens() {
        for_each_composition(n, d - 1, |alpha| {
            let mut h = g.clone();
            for (i, &k) in alpha.iter().enumerate() {
                for _ in 0..k {
                    h = h.derivative(i);
                }
            }
            if let Some(v) = h.linear_coeffs() {
                forms.push(v);
            }
        });
    }
    let basis: Vec<Vec<Fe>> = if forms.is_empty() {
        Vec::new()
    } else {
        let (red, pivots) = Matrix::from_rows(forms)?.rref(field);
        (0..pivots.len()).map(|i| red.row(i).to_vec()).collect()
    };
    let r = basis.len();
    let mut rows = basis.clone();
    rows.extend(unit_rows_complement(&basis, n, field)?);
    let frame = Matrix::from_rows(rows)?.inverse(field)?;
    Ok((r, frame))
}

/// Projective points of `P^{n-1}` over `field`, normalized so the first
/// nonzero coordinate is one, in lexicographic order of field indices.
pub fn projective_points(field: &FieldCfg, n: usize, mut f: impl FnMut(&[Fe]) -> bool) {
    let q = field.order();
    for lead in 0..n {
        let free = n - lead - 1;
        let Some(total) = q.checked_pow(free as u32) else { return };
        for mut code in 0..total {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            for k in (lead + 1..n).rev() {
                v[k] = field.element(code % q);
                code /= q;
            }
            if !f(&v) {
                return;
            }
        }
    }
}

pub fn projective_point_count(field: &FieldCfg, n: usize) -> u64 {
    let q = field.order() as u128;
    let count = (q.pow(n as u32) - 1) / (q - 1);
    u64::try_from(count).unwrap_or(u64::MAX)
}

/// Whether every generator is free of `y_0` after moving `v` to `e_0`, that
/// is, whether the ideal lies in `m_v^d`.
fn is_vertex(gens: &[Poly], v: &[Fe], field: &FieldCfg) -> Result<bool> {
    let n = v.len();
    let lead = v.iter().position(|c| !c.is_zero()).expect("projective point");
    let mut cols = vec![v.to_vec()];
    for j in (0..n).filter(|&j| j != lead) {
        let mut e = vec![field.zero(); n];
        e[j] = field.one();
        cols.push(e);
    }
    let c = transpose(&cols)?;
    for g in gens {
        if g.linear_change(&c)?.terms().iter().any(|t| t.0.get(0) > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_span(basis: &[Vec<Fe>], v: &[Fe], field: &FieldCfg) -> bool {
    if basis.is_empty() {
        return false;
    }
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(rows).expect("equal lengths").rank(field) == basis.len()
}

/// Basis of the space of rational vertices, or `None` if the search cap was hit.
fn vertex_basis(gens: &[Poly], field: &FieldCfg, n: usize, start: Vec<Vec<Fe>>, max_points: u64) -> Result<Option<Vec<Vec<Fe>>>> {
    if projective_point_count(field, n) > max_points {
        return Ok(None);
    }
    let mut basis = start;
    let mut err = None;
    projective_points(field, n, |v| {
        if in_span(&basis, v, field) {
            return true;
        }
        match is_vertex(gens, v, field) {
            Ok(true) => basis.push(v.to_vec()),
            Ok(false) => {}
            Err(e) => {
                err = Some(e);
                return false;
            }
        }
        true
    });
    match err {
        Some(e) => Err(e),
        None => Ok(Some(basis)),
    }
}

/// Essential codimension of an ideal generated by forms of one degree `d`.
///
/// For `d < p` the derivative span is exact. Otherwise the rational vertex
/// space is found by exhaustive search over `P^n(F)`. The vertex space over
/// the algebraic closure is a linear subspace defined by equations over `F`
/// and stable under the Galois group, hence spanned by rational vectors, so
/// a complete search over `F` is exact. Extensions up to `ext_max` are
/// searched as a cross-check.
pub fn essential_codim(ideal: &Ideal, cfg: &EssConfig) -> Result<EssResult> {
    let d = ideal.equigenerated_degree()?;
    let field = ideal.ring().field();
    if d == 0 {
        return Err(Error::UnitIdeal);
    }
    let result = if d < field.p() {
        let (r, frame) = derivative_span(ideal, d)?;
        EssResult {
            lower: r,
            upper: r,
            exact: true,
            certificate: vec![frame],
            method: EssMethod::DerivativeSpan,
            searched_degrees: Vec::new(),
        }
    } else {
        point_search(ideal, cfg)?
    };
    for c in &result.certificate {
        if !certificate_holds(ideal, c, result.upper)? {
            return Err(Error::Inconsistent("essential codimension certificate does not hold".into()));
        }
    }
    debug_assert!(result.lower <= result.upper && (!result.exact || result.lower == result.upper));
    Ok(result)
}

fn point_search(ideal: &Ideal, cfg: &EssConfig) -> Result<EssResult> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.nvars();
    let h = height(ideal)?;
    let Some(basis) = vertex_basis(ideal.gens(), field, n, Vec::new(), cfg.max_points)? else {
        return Ok(EssResult {
            lower: h,
            upper: n,
            exact: false,
            certificate: vec![Matrix::identity(field, n)],
            method: EssMethod::PointSearch,
            searched_degrees: Vec::new(),
        });
    };
    let mut searched = vec![field.degree()];
    if field.degree() == 1 {
        for s in 2..=cfg.ext_max {
            let ext = FieldCfg::with_degree(field.p(), s)?;
            if projective_point_count(&ext, n) > cfg.max_points {
                break;
            }
            let ext_ring = ring.with_field(ext.clone())?;
            let gens = ideal.gens().iter().map(|g| g.lift(&ext_ring)).collect::<Result<Vec<_>>>()?;
            let found = vertex_basis(&gens, &ext, n, basis.clone(), cfg.max_points)?.expect("count checked");
            if found.len() > basis.len() {
                return Err(Error::Inconsistent(format!("a vertex over F_{{{}^{s}}} is not rational", field.p())));
            }
            searched.push(s);
        }
    }
    let k = basis.len();
    let mut cols = unit_rows_complement(&basis, n, field)?;
    cols.extend(basis);
    let frame = transpose(&cols)?;
    Ok(EssResult {
        lower: n - k,
        upper: n - k,
        exact: true,
        certificate: vec![frame],
        method: EssMethod::PointSearch,
        searched_degrees: searched,
    })
}

/// The image of `I` on the hyperplane `l = 0`, written in the ring without
/// the first variable that occurs in `l`.
pub fn restrict_hyperplane(ideal: &Ideal, l: &Poly) -> Result<Ideal> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.nvars();
    let a = l.linear_coeffs().ok_or_else(|| {
        if l.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::Precondition(format!("`{l}` is not a linear form"))
        }
    })?;
    let i = a.iter().position(|c| !c.is_zero()).expect("nonzero form");
    let inv = field.inv(a[i])?;
    // x_i = (y_i - sum_{j != i} a_j y_j) / a_i, so that l = y_i
    let mut m = Matrix::identity(field, n);
    for j in 0..n {
        let v = if j == i { inv } else { field.neg(field.mul(a[j], inv)) };
        m.set(i, j, v);
    }
    let small = ring.without_var(i)?;
    let cut = [ExpVec::unit(n, i)];
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.linear_change(&m)?.reduce_mod_monomials(&cut).drop_var(i, &small))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&small, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    EqualityCase,
    StrictCase,
    Inconclusive,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::EqualityCase => "equality-case",
            Verdict::StrictCase => "strict-case",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremAReport {
    pub h: usize,
    pub d: u32,
    pub ess: EssResult,
    pub fpt_bounds: FptBounds,
    pub verdict: Verdict,
    pub closure_witness: Option<MonomialIdeal>,
}

impl TheoremAReport {
    pub fn ratio(&self) -> Q {
        Q::new(BigInt::from(self.h), BigInt::from(self.d))
    }
}

/// Compares `fpt(I)` with `h/d`: equal exactly when the essential
/// codimension equals the height, strictly larger otherwise.
pub fn theorem_a_verdict(ideal: &Ideal, e_max: u32, cfg: &EssConfig) -> Result<TheoremAReport> {
    let d = ideal.equigenerated_degree()?;
    let h = height(ideal)?;
    let ess = essential_codim(ideal, cfg)?;
    let bounds = fpt_bounds(ideal, e_max)?;
    let ratio = Q::new(BigInt::from(h), BigInt::from(d));
    let mut closure_witness = None;
    let verdict = if ess.exact && ess.upper == h {
        if bounds.lower > ratio || bounds.upper.as_ref().is_some_and(|u| *u < ratio) {
            return Err(Error::Inconsistent(format!("h/d = {ratio} lies outside the fpt bounds")));
        }
        let moved = ideal.linear_change(&ess.certificate[0])?;
        if let Some(a) = moved.monomial_part() {
            let closure = integral_closure(&a)?;
            if closure != MonomialIdeal::coordinate_power(ideal.nvars(), h, d)? {
                return Err(Error::Inconsistent("closure in certificate coordinates is not a coordinate power".into()));
            }
            closure_witness = Some(closure);
        }
        Verdict::EqualityCase
    } else if ess.lower > h && bounds.lower > ratio {
        Verdict::StrictCase
    } else {
        Verdict::Inconclusive
    };
    Ok(TheoremAReport { h, d, ess, fpt_bounds: bounds, verdict, closure_witness })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    HypothesisHoldsAndBoundVerified,
    HypothesisFails,
    Inconclusive,
}

impl Conclusion {
    pub fn tag(self) -> &'static str {
        match self {
            Conclusion::HypothesisHoldsAndBoundVerified => "hypothesis-holds-and-bound-verified",
            Conclusion::HypothesisFails => "hypothesis-fails",
            Conclusion::Inconclusive => "inconclusive",
        }
    }
}

/// Degree comparison for one compatible prime of height `h` at `q = p^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    /// `d * ceil(c (q - 1))`, the degree of every product of generators.
    pub product_degree: u64,
    /// `h (q - 1)`: an element of the colon outside `m^[q]` has a term
    /// divisible by `(l_1 ... l_h)^{q-1}`.
    pub colon_bound: u64,
    /// `h q - N` with `N` variables, the bound obtained from the quotient
    /// threshold estimate `c_p <= N - h`.
    pub fedder_bound: i64,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct PrimeCheck {
    pub forms: Vec<Poly>,
    pub height: usize,
    pub compatible: bool,
    pub degree: Option<DegreeCheck>,
}

#[derive(Clone, Debug)]
pub struct TheoremBReport {
    pub c: Q,
    pub d: u32,
    /// Levels probed, with the sharp test outcome at each.
    pub levels: Vec<(u32, bool)>,
    /// Level at which compatibility was tested.
    pub e_probed: u32,
    pub sharp_probe: bool,
    pub witness: Option<Poly>,
    pub primes: Vec<PrimeCheck>,
    /// Largest height of a compatible prime.
    pub h: usize,
    pub bound_holds: bool,
    pub equality: bool,
    pub conclusion: Conclusion,
}

/// `h/d - 1/(q-1)`: what a single level certifies about `c` from a
/// compatible prime of height `h`.
pub fn level_bound(h: usize, d: u32, q: u64) -> Q {
    Q::new(BigInt::from(h), BigInt::from(d)) - Q::new(BigInt::from(1), BigInt::from(q - 1))
}

/// Probes `(R, I^c)` at levels `1..=e_max` and tests each candidate prime
/// at the first sharp level (or at `e_max`).
pub fn theorem_b_check(ideal: &Ideal, c: &Q, candidates: &[Vec<Poly>], e_max: u32) -> Result<TheoremBReport> {
    let d = ideal.equigenerated_degree()?;
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be positive".into()));
    }
    let ring = ideal.ring();
    let field = ring.field();
    let p = field.p() as u64;
    let mut levels = Vec::new();
    let mut witness = None;
    let mut e_probed = e_max;
    for e in 1..=e_max {
        let w = sharp_witness(ideal, c, e)?;
        levels.push((e, w.is_some()));
        if w.is_some() {
            witness = w;
            e_probed = e;
            break;
        }
    }
    let sharp_probe = witness.is_some();
    let q = p.pow(e_probed);
    let r = splitting_level(c, q)?;
    let n = ring.nvars() as i64;
    let mut primes = Vec::new();
    for forms in candidates {
        let rows: Vec<Vec<Fe>> = forms
            .iter()
            .map(|l| l.linear_coeffs().ok_or_else(|| Error::Precondition(format!("`{l}` is not a linear form"))))
            .collect::<Result<_>>()?;
        let height = if rows.is_empty() { 0 } else { Matrix::from_rows(rows)?.rank(field) };
        let compatible = compatible_containment(ideal, c, forms, e_probed)?;
        let degree = (compatible && sharp_probe).then(|| {
            let product_degree = d as u64 * r;
            let colon_bound = height as u64 * (q - 1);
            DegreeCheck {
                product_degree,
                colon_bound,
                fedder_bound: height as i64 * q as i64 - n,
                holds: product_degree >= colon_bound,
            }
        });
        if let Some(dc) = &degree {
            if !dc.holds {
                return Err(Error::Inconsistent(format!(
                    "survivor of degree {} lies in a colon whose survivors have degree >= {}",
                    dc.product_degree, dc.colon_bound
                )));
            }
        }
        primes.push(PrimeCheck { forms: forms.clone(), height, compatible, degree });
    }
    let h = primes.iter().filter(|p| p.compatible).map(|p| p.height).max().unwrap_or(0);
    let ratio = Q::new(BigInt::from(h), BigInt::from(d));
    let bound_holds = *c >= ratio;
    let any_compatible = primes.iter().any(|p| p.compatible);
    let conclusion = if !sharp_probe {
        Conclusion::HypothesisFails
    } else if any_compatible && bound_holds {
        Conclusion::HypothesisHoldsAndBoundVerified
    } else {
        Conclusion::Inconclusive
    };
    Ok(TheoremBReport {
        c: c.clone(),
        d,
        levels,
        e_probed,
        sharp_probe,
        witness,
        primes,
        h,
        bound_holds,
        equality: any_compatible && *c == ratio,
        conclusion,
    })
}

/// The maximal ideal together with every rational linear form dividing some
/// generator, as single-form primes.
pub fn default_candidates(ideal: &Ideal, max_points: u64) -> Result<Vec<Vec<Poly>>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut out = vec![(0..n).map(|i| Poly::var(ring, i)).collect::<Vec<_>>()];
    if projective_point_count(ring.field(), n) > max_points {
        return Ok(out);
    }
    let mut err = None;
    projective_points(ring.field(), n, |v| {
        let l = Poly::from_linear_coeffs(ring, v);
        match divides_some(&l, ideal, ring) {
            Ok(true) => out.push(vec![l]),
            Ok(false) => {}
            Err(e) => {
                err = Some(e);
                return false;
            }
        }
        true
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn divides_some(l: &Poly, ideal: &Ideal, ring: &Arc<Ring>) -> Result<bool> {
    let principal = Ideal::new(ring, vec![l.clone()])?;
    let gb = crate::groebner::buchberger(&principal, &crate::poly::MonomialOrder::lex(ring.nvars()))?;
    for g in ideal.gens() {
        if gb.contains(g)? {
            return Ok(true);
        }
    }
    Ok(false)
}
