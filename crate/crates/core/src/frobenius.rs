//! Frobenius powers, the invariants `nu_I(p^e)`, F-pure threshold bounds and
//! colon ideals of linear primes.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rustc_hash::FxHashMap;

use crate::convex::Q;
use crate::error::{Error, Result};
use crate::field::{char_exponent, FieldCfg};
use crate::trunc::{Layout, TruncPoly};
use crate::groebner::{initial_ideal, Ideal};
use crate::linalg::Matrix;
use crate::monomial::{monomial_fpt, MonomialIdeal};
use crate::poly::{ExpVec, MonomialOrder, Poly};

/// `I^[q]`, generated by the `q`-th powers of the generators. By flatness of
/// Frobenius this does not depend on the chosen generators.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let gens = ideal.gens().iter().map(|g| g.frobenius_power(q)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// Whether every term of `f` has an exponent at least `q`.
pub fn in_frobenius_max(f: &Poly, q: u64) -> bool {
    f.terms().iter().all(|t| t.0.in_frobenius_max(q))
}

/// Limits for product enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NuCaps {
    /// Total number of stored terms across one product level.
    pub max_terms: usize,
}

impl Default for NuCaps {
    fn default() -> Self {
        NuCaps { max_terms: 10_000_000 }
    }
}

fn power_of(p: u32, e: u32) -> Result<u64> {
    (p as u64).checked_pow(e).filter(|&q| q <= u32::MAX as u64).ok_or(Error::ExponentOverflow)
}

fn check_input(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !ideal.in_maximal_ideal() {
        return Err(Error::NotInMaximalIdeal);
    }
    Ok(())
}

pub(crate) trait LevelElem: Clone + Eq + std::hash::Hash {
    fn is_zero(&self) -> bool;
    fn len(&self) -> usize;
    fn monic(&self, field: &FieldCfg) -> Self;
}

impl LevelElem for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn len(&self) -> usize {
        Poly::len(self)
    }
    fn monic(&self, _: &FieldCfg) -> Self {
        Poly::monic(self)
    }
}

impl LevelElem for TruncPoly {
    fn is_zero(&self) -> bool {
        TruncPoly::is_zero(self)
    }
    fn len(&self) -> usize {
        TruncPoly::len(self)
    }
    fn monic(&self, field: &FieldCfg) -> Self {
        TruncPoly::monic(self, field)
    }
}

/// One level of the product search: the distinct nonzero images modulo a
/// monomial ideal of all products of `r` generators. Each entry remembers
/// the largest generator index used, and children only multiply by
/// generators from that index on, so every multiset is reached once.
struct Levels<'a, T, F> {
    gens: &'a [T],
    field: &'a FieldCfg,
    mul: F,
    caps: NuCaps,
    current: Vec<(T, usize)>,
    r: u64,
}

impl<'a, T: LevelElem, F: Fn(&T, &T) -> Result<T>> Levels<'a, T, F> {
    fn new(gens: &'a [T], field: &'a FieldCfg, one: T, mul: F, caps: NuCaps) -> Self {
        Levels { gens, field, mul, caps, current: vec![(one, 0)], r: 0 }
    }

    fn advance(&mut self) -> Result<()> {
        let mut seen: FxHashMap<T, usize> = FxHashMap::default();
        let mut next: Vec<(T, usize)> = Vec::new();
        let mut terms = 0usize;
        for (f, last) in &self.current {
            for j in *last..self.gens.len() {
                let h = (self.mul)(f, &self.gens[j])?;
                if h.is_zero() {
                    continue;
                }
                let key = h.monic(self.field);
                match seen.get(&key) {
                    Some(&slot) => {
                        if next[slot].1 > j {
                            next[slot].1 = j;
                        }
                    }
                    None => {
                        terms += h.len();
                        if terms > self.caps.max_terms {
                            return Err(Error::ResourceCap(format!(
                                "more than {} terms at product level {}",
                                self.caps.max_terms,
                                self.r + 1
                            )));
                        }
                        seen.insert(key, next.len());
                        next.push((h, j));
                    }
                }
            }
        }
        self.current = next;
        self.r += 1;
        Ok(())
    }

    /// Advances until level `stop` or until the level empties. Returns the
    /// last nonempty level and one of its elements.
    fn run(&mut self, stop: Option<u64>) -> Result<(u64, T)> {
        loop {
            let keep = self.current[0].0.clone();
            if stop == Some(self.r) {
                return Ok((self.r, keep));
            }
            self.advance()?;
            if self.current.is_empty() {
                return Ok((self.r - 1, keep));
            }
        }
    }
}

/// Products of generators modulo `m^[q]`, packed when the layout fits.
fn truncated_search(ideal: &Ideal, q: u64, stop: Option<u64>, caps: NuCaps) -> Result<(u64, Poly)> {
    let ring = ideal.ring();
    let field = ring.field();
    if let Some(layout) = Layout::new(ring.nvars(), q) {
        let gens: Vec<TruncPoly> = ideal.gens().iter().map(|g| TruncPoly::from_poly(&g.truncate(q), &layout)).collect();
        let one = TruncPoly::one(&layout, field);
        let mut levels = Levels::new(&gens, field, one, |a: &TruncPoly, b: &TruncPoly| Ok(a.mul(b, &layout, field)), caps);
        let (r, w) = levels.run(stop)?;
        return Ok((r, w.to_poly(ring, &layout)));
    }
    let gens: Vec<Poly> = ideal.gens().iter().map(|g| g.truncate(q)).collect();
    let one = Poly::one(ring).truncate(q);
    let mut levels = Levels::new(&gens, field, one, |a: &Poly, b: &Poly| a.mul_trunc(b, q), caps);
    levels.run(stop)
}

/// A product of `r` generators that survives modulo `m^[q]`, if any.
pub fn survivor(ideal: &Ideal, r: u64, q: u64) -> Result<Option<Poly>> {
    survivor_with(ideal, r, q, NuCaps::default())
}

pub fn survivor_with(ideal: &Ideal, r: u64, q: u64, caps: NuCaps) -> Result<Option<Poly>> {
    check_input(ideal)?;
    if !ideal.ring().field().is_char_power(q) {
        return Err(Error::NotCharPower(q));
    }
    if ideal.is_principal() {
        let r = u32::try_from(r).map_err(|_| Error::ExponentOverflow)?;
        let f = ideal.gens()[0].pow_trunc(r, q)?;
        return Ok((!f.is_zero()).then_some(f));
    }
    let (reached, w) = truncated_search(ideal, q, Some(r), caps)?;
    Ok((reached == r).then_some(w))
}

/// `nu_I(p^e)` for `e = 1..=e_max`.
pub fn nu_sequence(ideal: &Ideal, e_max: u32) -> Result<Vec<u64>> {
    nu_sequence_with(ideal, e_max, NuCaps::default())
}

pub fn nu_sequence_with(ideal: &Ideal, e_max: u32, caps: NuCaps) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    nu_levels(ideal, e_max, caps, |v| out.push(v))?;
    Ok(out)
}

/// Calls `sink` with each `nu_I(p^e)` as it is found; returns early on error
/// with the values found so far already delivered.
fn nu_levels(ideal: &Ideal, e_max: u32, caps: NuCaps, mut sink: impl FnMut(u64)) -> Result<()> {
    check_input(ideal)?;
    let p = ideal.ring().field().p();
    let mut prev: Option<(u64, Poly)> = None;
    for e in 1..=e_max {
        let q = power_of(p, e)?;
        let (nu, witness) = if ideal.is_principal() {
            nu_principal(&ideal.gens()[0], q, prev.as_ref().map(|t| &t.1), caps)?
        } else {
            nu_products(ideal, q, caps)?
        };
        if let Some((prev_nu, _)) = &prev {
            // I^{rp} ⊆ (I^r)^[p] makes nu(p^e) >= p nu(p^{e-1})
            if nu < p as u64 * prev_nu {
                return Err(Error::Inconsistent(format!("nu({q}) = {nu} < {p} * {prev_nu}")));
            }
        }
        sink(nu);
        prev = Some((nu, witness));
    }
    Ok(())
}

/// For a principal ideal, starts from `(f^{nu'})^p` where `f^{nu'}` is the
/// last survivor one level down: raising to the `p`-th power maps
/// exponents below `q/p` to exponents below `q`, so it survives.
fn nu_principal(f: &Poly, q: u64, warm: Option<&Poly>, caps: NuCaps) -> Result<(u64, Poly)> {
    let p = f.field().p() as u64;
    let (mut r, mut acc) = match warm {
        Some(w) => {
            let nu_prev = exponent_sum_power(f, w)?;
            (nu_prev * p, w.frobenius_power(p)?)
        }
        None => (0, Poly::one(f.ring())),
    };
    let field = f.field();
    if let Some(layout) = Layout::new(f.ring().nvars(), q) {
        let base = TruncPoly::from_poly(&f.truncate(q), &layout);
        let mut acc = TruncPoly::from_poly(&acc.truncate(q), &layout);
        loop {
            let next = acc.mul(&base, &layout, field);
            if next.is_zero() {
                return Ok((r, acc.to_poly(f.ring(), &layout)));
            }
            if next.len() > caps.max_terms {
                return Err(Error::ResourceCap(format!("more than {} terms in a truncated power", caps.max_terms)));
            }
            acc = next;
            r += 1;
        }
    }
    loop {
        let next = acc.mul_trunc(f, q)?;
        if next.is_zero() {
            return Ok((r, acc));
        }
        if next.len() > caps.max_terms {
            return Err(Error::ResourceCap(format!("more than {} terms in a truncated power", caps.max_terms)));
        }
        acc = next;
        r += 1;
    }
}

// degree of w divided by degree of f, for w a power of homogeneous f
fn exponent_sum_power(f: &Poly, w: &Poly) -> Result<u64> {
    let df = f.total_degree().ok_or(Error::ZeroPolynomial)? as u64;
    let dw = w.total_degree().ok_or(Error::ZeroPolynomial)? as u64;
    if df == 0 || dw % df != 0 {
        return Err(Error::Inconsistent("warm start is not a power of the generator".into()));
    }
    Ok(dw / df)
}

fn nu_products(ideal: &Ideal, q: u64, caps: NuCaps) -> Result<(u64, Poly)> {
    truncated_search(ideal, q, None, caps)
}

/// `nu_I(p^e)`.
pub fn nu(ideal: &Ideal, e: u32) -> Result<u64> {
    nu_sequence(ideal, e)?.last().copied().ok_or_else(|| Error::Precondition("e must be positive".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// `nu(p^e) / p^e`.
    NuLimit,
    /// `(nu(p^e) + 1) / p^e` for a principal ideal.
    PrincipalUpper,
    /// Threshold of the monomial ideal generated by all terms of the generators.
    MonomialMajorant,
    /// Threshold of the lex initial ideal.
    InitialIdeal,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::NuLimit => "nu-limit",
            Provenance::PrincipalUpper => "principal-upper",
            Provenance::MonomialMajorant => "monomial-majorant",
            Provenance::InitialIdeal => "initial-ideal",
        }
    }
}

/// Certified bounds on the F-pure threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptBounds {
    pub lower: Q,
    pub upper: Option<Q>,
    /// Largest `e` for which `nu(p^e)` was computed.
    pub e_used: u32,
    pub nu: Vec<u64>,
    pub lower_provenance: Provenance,
    pub upper_provenance: Option<Provenance>,
    /// Every certified bound that was computed.
    pub lower_candidates: Vec<(Provenance, Q)>,
    pub upper_candidates: Vec<(Provenance, Q)>,
    /// Set when `nu` stopped early at a resource cap.
    pub capped: Option<String>,
}

impl FptBounds {
    pub fn is_exact(&self) -> bool {
        self.upper.as_ref() == Some(&self.lower)
    }
}

fn ratio(a: u64, b: u64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub fn fpt_bounds(ideal: &Ideal, e_max: u32) -> Result<FptBounds> {
    fpt_bounds_with(ideal, e_max, NuCaps::default())
}

/// Bounds from `nu(p^e)` for `e <= e_max`, the lex initial ideal, and the
/// monomial majorant. If `nu` hits a resource cap the bounds use the levels
/// found so far and record the cap.
pub fn fpt_bounds_with(ideal: &Ideal, e_max: u32, caps: NuCaps) -> Result<FptBounds> {
    check_input(ideal)?;
    let p = ideal.ring().field().p();
    let mut nus = Vec::new();
    let capped = match nu_levels(ideal, e_max, caps, |v| nus.push(v)) {
        Ok(()) => None,
        Err(e) if e.is_resource_cap() => Some(e.to_string()),
        Err(e) => return Err(e),
    };
    let e_used = nus.len() as u32;

    let mut lower_candidates = Vec::new();
    let mut upper_candidates = Vec::new();
    if let Some(&nu) = nus.last() {
        let q = power_of(p, e_used)?;
        lower_candidates.push((Provenance::NuLimit, ratio(nu, q)));
        if ideal.is_principal() {
            upper_candidates.push((Provenance::PrincipalUpper, ratio(nu + 1, q)));
        }
    }
    let ini = initial_ideal(ideal, &MonomialOrder::lex(ideal.nvars()))?;
    lower_candidates.push((Provenance::InitialIdeal, monomial_fpt(&ini)?));
    let majorant = MonomialIdeal::support_majorant(ideal);
    upper_candidates.push((Provenance::MonomialMajorant, monomial_fpt(&majorant)?));

    // first maximal lower / first minimal upper, in candidate order
    let (lower_provenance, lower) = lower_candidates
        .iter()
        .fold(None::<&(Provenance, Q)>, |best, c| match best {
            Some(b) if b.1 >= c.1 => Some(b),
            _ => Some(c),
        })
        .cloned()
        .unwrap();
    let upper = upper_candidates
        .iter()
        .fold(None::<&(Provenance, Q)>, |best, c| match best {
            Some(b) if b.1 <= c.1 => Some(b),
            _ => Some(c),
        })
        .cloned();
    if let Some((_, u)) = &upper {
        if *u < lower {
            return Err(Error::Inconsistent(format!("fpt bounds crossed: {lower} > {u}")));
        }
    }
    Ok(FptBounds {
        lower,
        upper_provenance: upper.as_ref().map(|t| t.0),
        upper: upper.map(|t| t.1),
        e_used,
        nu: nus,
        lower_provenance,
        lower_candidates,
        upper_candidates,
        capped,
    })
}

/// `ceil(c (q - 1))` in exact arithmetic.
pub fn splitting_level(c: &Q, q: u64) -> Result<u64> {
    if c.is_negative() {
        return Err(Error::Precondition("c must be nonnegative".into()));
    }
    let v = c * Q::from_integer(BigInt::from(q - 1));
    v.ceil().to_integer().to_u64().ok_or(Error::ExponentOverflow)
}

/// The single-level test `I^{ceil(c (p^e - 1))} ⊄ m^[p^e]`.
pub fn sharply_f_pure_at(ideal: &Ideal, c: &Q, e: u32) -> Result<bool> {
    Ok(sharp_witness(ideal, c, e)?.is_some())
}

/// A surviving product of `ceil(c (p^e - 1))` generators modulo `m^[p^e]`.
pub fn sharp_witness(ideal: &Ideal, c: &Q, e: u32) -> Result<Option<Poly>> {
    if !c.is_positive() {
        return Err(Error::Precondition("c must be positive".into()));
    }
    let q = power_of(ideal.ring().field().p(), e)?;
    survivor(ideal, splitting_level(c, q)?, q)
}

/// A monomial ideal in a linear coordinate frame. With `frame = M`, a
/// polynomial `g` belongs to the ideal iff every term of `g(M y)` lies in
/// `monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonIdeal {
    /// Rows are the coefficient vectors of the new coordinates `y_i`.
    pub forms: Matrix,
    /// Inverse of `forms`: substitution `x_i -> sum_j frame[i][j] y_j`.
    pub frame: Matrix,
    pub monomial: MonomialIdeal,
    pub q: u64,
}

impl ColonIdeal {
    /// `g` rewritten in the frame coordinates.
    pub fn transform(&self, g: &Poly) -> Result<Poly> {
        g.linear_change(&self.frame)
    }

    pub fn contains(&self, g: &Poly) -> Result<bool> {
        let h = self.transform(g)?;
        Ok(h.terms().iter().all(|t| self.monomial.contains_exp(t.0.exps())))
    }
}

fn linear_rows(forms: &[Poly]) -> Result<Vec<Vec<crate::field::Fe>>> {
    forms
        .iter()
        .map(|l| l.linear_coeffs().ok_or_else(|| Error::Precondition(format!("`{l}` is not a linear form"))))
        .collect()
}

/// Completes independent rows to an invertible matrix by unit vectors.
fn complete_frame(rows: Vec<Vec<crate::field::Fe>>, n: usize, field: &crate::field::FieldCfg) -> Result<(Matrix, Matrix)> {
    let m = Matrix::from_rows(rows.clone())?;
    if m.rank(field) < rows.len() {
        return Err(Error::DependentForms);
    }
    let (_, pivots) = m.rref(field);
    let mut all = rows;
    for j in 0..n {
        if !pivots.contains(&j) {
            let mut v = vec![field.zero(); n];
            v[j] = field.one();
            all.push(v);
        }
    }
    let forms = Matrix::from_rows(all)?;
    let frame = forms.inverse(field)?;
    Ok((forms, frame))
}

fn unit_exp(n: usize, i: usize, k: u32) -> ExpVec {
    let mut v = vec![0; n];
    v[i] = k;
    ExpVec::new(v).expect("small")
}

/// `(y_i^q : i in vars) + (prod_{i in vars} y_i)^{q-1}` in `n` variables.
fn colon_monomials_on(n: usize, vars: &[usize], q: u64) -> Result<MonomialIdeal> {
    let qq = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
    let mut gens: Vec<ExpVec> = vars.iter().map(|&i| unit_exp(n, i, qq)).collect();
    let mut prod = vec![0; n];
    for &i in vars {
        prod[i] = qq - 1;
    }
    gens.push(ExpVec::new(prod)?);
    MonomialIdeal::new(n, gens)
}

/// `(p^[q] : p) = p^[q] + (l_1 ... l_h)^{q-1}` for `p` generated by
/// independent linear forms.
pub fn colon_linear_prime(forms: &[Poly], q: u64) -> Result<ColonIdeal> {
    let Some(first) = forms.first() else {
        return Err(Error::Precondition("no linear forms".into()));
    };
    let ring = first.ring();
    let field = ring.field();
    if !field.is_char_power(q) || q == 1 {
        return Err(Error::NotCharPower(q));
    }
    let n = ring.nvars();
    let h = forms.len();
    let (forms_m, frame) = complete_frame(linear_rows(forms)?, n, field)?;
    let monomial = colon_monomials_on(n, &(0..h).collect::<Vec<_>>(), q)?;
    Ok(ColonIdeal { forms: forms_m, frame, monomial, q })
}

fn proportional(a: &[crate::field::Fe], b: &[crate::field::Fe], field: &crate::field::FieldCfg) -> bool {
    let m = Matrix::from_rows(vec![a.to_vec(), b.to_vec()]).expect("equal lengths");
    m.rank(field) < 2
}

struct TwoPrimeFrame {
    forms: Matrix,
    frame: Matrix,
    /// Head length.
    j: usize,
    /// Number of distinct forms, `2j` heads plus the shared tail.
    len: usize,
}

/// Frame with coordinates `u, v, w` for `p1 = (u, w)` and `p2 = (v, w)`.
fn two_prime_frame(p1: &[Poly], p2: &[Poly], q: u64) -> Result<TwoPrimeFrame> {
    let Some(first) = p1.first().or(p2.first()) else {
        return Err(Error::Precondition("no linear forms".into()));
    };
    let ring = first.ring();
    let field = ring.field();
    if !field.is_char_power(q) || q == 1 {
        return Err(Error::NotCharPower(q));
    }
    let r1 = linear_rows(p1)?;
    let r2 = linear_rows(p2)?;
    let shared1: Vec<bool> = r1.iter().map(|a| r2.iter().any(|b| proportional(a, b, field))).collect();
    let shared2: Vec<bool> = r2.iter().map(|b| r1.iter().any(|a| proportional(a, b, field))).collect();
    let u: Vec<_> = r1.iter().zip(&shared1).filter(|t| !t.1).map(|t| t.0.clone()).collect();
    let v: Vec<_> = r2.iter().zip(&shared2).filter(|t| !t.1).map(|t| t.0.clone()).collect();
    let w: Vec<_> = r1.iter().zip(&shared1).filter(|t| *t.1).map(|t| t.0.clone()).collect();
    if u.is_empty() || u.len() != v.len() {
        return Err(Error::Precondition("the primes need independent heads of equal positive length".into()));
    }
    let j = u.len();
    let rows: Vec<_> = u.into_iter().chain(v).chain(w).collect();
    let len = rows.len();
    let (forms, frame) = match complete_frame(rows, ring.nvars(), field) {
        Err(Error::DependentForms) => {
            return Err(Error::Precondition("heads and shared forms are not jointly independent".into()))
        }
        other => other?,
    };
    Ok(TwoPrimeFrame { forms, frame, j, len })
}

/// `(p1^[q] : p1) ∩ (p2^[q] : p2)` for `p1 = (u, w)`, `p2 = (v, w)` with heads
/// `u`, `v` of equal length and all forms jointly independent. In the frame
/// both colons are monomial, so the intersection is too.
pub fn two_prime_colon_intersection(p1: &[Poly], p2: &[Poly], q: u64) -> Result<ColonIdeal> {
    let f = two_prime_frame(p1, p2, q)?;
    let n = f.forms.rows();
    let side = |heads: std::ops::Range<usize>| -> Result<MonomialIdeal> {
        let vars: Vec<usize> = heads.chain(2 * f.j..f.len).collect();
        colon_monomials_on(n, &vars, q)
    };
    let monomial = side(0..f.j)?.intersect(&side(f.j..2 * f.j)?)?;
    Ok(ColonIdeal { forms: f.forms, frame: f.frame, monomial, q })
}

/// `p1^[q] + p2^[q] + (u v w)^{q-1}` in the same frame. It contains the
/// intersection of the two colons and agrees with it outside `m^[q]`, which
/// is what the degree comparison uses; it is strictly larger in general.
pub fn two_prime_colon_sum(p1: &[Poly], p2: &[Poly], q: u64) -> Result<ColonIdeal> {
    let f = two_prime_frame(p1, p2, q)?;
    let n = f.forms.rows();
    let monomial = colon_monomials_on(n, &(0..f.len).collect::<Vec<_>>(), q)?;
    Ok(ColonIdeal { forms: f.forms, frame: f.frame, monomial, q })
}

/// Whether every product of `ceil(c (p^e - 1))` generators lies in
/// `(p^[p^e] : p)`. Products are reduced modulo the colon's monomial ideal in
/// the frame after each multiplication.
pub fn compatible_containment(ideal: &Ideal, c: &Q, forms: &[Poly], e: u32) -> Result<bool> {
    compatible_containment_with(ideal, c, forms, e, NuCaps::default())
}

pub fn compatible_containment_with(ideal: &Ideal, c: &Q, forms: &[Poly], e: u32, caps: NuCaps) -> Result<bool> {
    if c.is_negative() {
        return Err(Error::Precondition("c must be nonnegative".into()));
    }
    let q = power_of(ideal.ring().field().p(), e)?;
    let colon = colon_linear_prime(forms, q)?;
    let r = splitting_level(c, q)?;
    let mono = colon.monomial.gens().to_vec();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| Ok(colon.transform(g)?.reduce_mod_monomials(&mono)))
        .collect::<Result<Vec<_>>>()?;
    let one = Poly::one(ideal.ring()).reduce_mod_monomials(&mono);
    let field = ideal.ring().field();
    let mut levels =
        Levels::new(&gens, field, one, |a: &Poly, b: &Poly| Ok(a.mul(b)?.reduce_mod_monomials(&mono)), caps);
    while levels.r < r {
        levels.advance()?;
        if levels.current.is_empty() {
            return Ok(true);
        }
    }
    Ok(levels.current.is_empty())
}

/// `e` with `p^e = q`.
pub fn frobenius_exponent(p: u32, q: u64) -> Result<u32> {
    char_exponent(p, q).ok_or(Error::NotCharPower(q))
}
