//! Sparse multivariate polynomials over `F_{p^s}`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCfg};
use crate::linalg::Matrix;
use crate::trunc;

/// Exponent vector of a monomial, with its total degree cached.
///
/// The derived `Ord` is the lexicographic order with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec {
    exps: Vec<u32>,
    degree: u32,
}

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let mut degree = 0u32;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(ExpVec { exps, degree })
    }

    pub fn zero(n: usize) -> Self {
        ExpVec { exps: vec![0; n], degree: 0 }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        ExpVec { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &ExpVec) -> Result<ExpVec> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self.degree.checked_add(other.degree).ok_or(Error::ExponentOverflow)?;
        Ok(ExpVec { exps, degree })
    }

    pub fn scale(&self, k: u32) -> Result<ExpVec> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        ExpVec::new(exps)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &ExpVec) -> Option<ExpVec> {
        if !self.divides(other) {
            return None;
        }
        let exps: Vec<u32> = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(ExpVec { degree: other.degree - self.degree, exps })
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        let exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        ExpVec { exps, degree }
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Whether some exponent is at least `q`, i.e. the monomial lies in `m^[q]`.
    pub fn in_frobenius_max(&self, q: u64) -> bool {
        self.exps.iter().any(|&e| e as u64 >= q)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Coefficient field together with an ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldCfg,
    vars: Vec<String>,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new(field: FieldCfg, vars: Vec<String>) -> Result<Arc<Ring>> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !valid_var_name(v) {
                return Err(Error::Precondition(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::Precondition(format!("duplicate variable `{v}`")));
            }
        }
        if vars.is_empty() {
            return Err(Error::Precondition("a ring needs at least one variable".into()));
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    /// Ring with variables named `{prefix}0, {prefix}1, ...`.
    pub fn indexed(field: FieldCfg, prefix: &str, n: usize) -> Result<Arc<Ring>> {
        Self::new(field, (0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn field(&self) -> &FieldCfg {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables over another field of the same characteristic.
    pub fn with_field(&self, field: FieldCfg) -> Result<Arc<Ring>> {
        if field.p() != self.field.p() {
            return Err(Error::Precondition("fields of different characteristic".into()));
        }
        Ok(Arc::new(Ring { field, vars: self.vars.clone() }))
    }

    /// The ring with variable `i` removed.
    pub fn without_var(&self, i: usize) -> Result<Arc<Ring>> {
        let mut vars = self.vars.clone();
        vars.remove(i);
        Ring::new(self.field.clone(), vars)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order: lex or grevlex after permuting variables by priority.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `priority[0]` is the most significant variable.
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..n).collect() }
    }

    pub fn grevlex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, priority: (0..n).collect() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut sorted = priority.clone();
        sorted.sort_unstable();
        if sorted != (0..priority.len()).collect::<Vec<_>>() {
            return Err(Error::Precondition("priority is not a permutation".into()));
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.degree.cmp(&b.degree) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in self.priority.iter().rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A sparse polynomial. Terms are kept sorted in lex-descending order with
/// no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<(ExpVec, Fe)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Fe) -> Self {
        Self::monomial(ring, ExpVec::zero(ring.nvars()), c)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, ExpVec::unit(ring.nvars(), i), ring.field().one())
    }

    pub fn monomial(ring: &Arc<Ring>, e: ExpVec, c: Fe) -> Self {
        assert_eq!(e.len(), ring.nvars(), "exponent vector length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (ExpVec, Fe)>) -> Result<Self> {
        let field = ring.field();
        let mut acc: FxHashMap<ExpVec, Fe> = FxHashMap::default();
        for (e, c) in terms {
            if e.len() != ring.nvars() {
                return Err(Error::DimensionMismatch { expected: ring.nvars(), found: e.len() });
            }
            let slot = acc.entry(e).or_insert(Fe::ZERO);
            *slot = field.add(*slot, c);
        }
        Ok(Self::from_map(ring, acc))
    }

    pub(crate) fn from_map(ring: &Arc<Ring>, acc: FxHashMap<ExpVec, Fe>) -> Self {
        let mut terms: Vec<(ExpVec, Fe)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { ring: ring.clone(), terms }
    }

    /// Terms already sorted lex-descending, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(ExpVec, Fe)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &FieldCfg {
        self.ring.field()
    }

    /// Terms in lex-descending order.
    pub fn terms(&self) -> &[(ExpVec, Fe)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: &ExpVec) -> Fe {
        self.terms
            .binary_search_by(|t| e.cmp(&t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(Fe::ZERO)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((e, _)) => self.terms.iter().all(|t| t.0.degree() == e.degree()),
        }
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.iter().flat_map(|t| t.0.support()).collect()
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(a.1, b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Poly::from_sorted_terms(&self.ring, out))
    }

    pub fn neg(&self) -> Poly {
        let field = self.field();
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), field.neg(*c))).collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fe) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let field = self.field();
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), field.mul(*a, c))).collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    /// Divides by the leading (lex-first) coefficient.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field().inv(*c).expect("nonzero lead")),
        }
    }

    pub fn mul_term(&self, e: &ExpVec, c: Fe) -> Result<Poly> {
        if c.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.mul(e)?, field.mul(*a, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_sorted_terms(&self.ring, terms))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, self.terms[0].1);
        }
        let field = self.field();
        let mut acc: FxHashMap<ExpVec, Fe> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.mul(b)?;
                let slot = acc.entry(e).or_insert(Fe::ZERO);
                *slot = field.add(*slot, field.mul(*ca, *cb));
            }
        }
        Ok(Poly::from_map(&self.ring, acc))
    }

    pub fn pow(&self, r: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Drops every term lying in `m^[q]` (some exponent `>= q`).
    pub fn truncate(&self, q: u64) -> Poly {
        let terms = self.terms.iter().filter(|t| !t.0.in_frobenius_max(q)).cloned().collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    /// `f^r` modulo `m^[q]`, truncating after every multiplication step.
    pub fn pow_trunc(&self, r: u32, q: u64) -> Result<Poly> {
        if !self.field().is_char_power(q) {
            return Err(Error::NotCharPower(q));
        }
        let base = self.truncate(q);
        if let Some(layout) = trunc::Layout::new(self.ring.nvars(), q) {
            let f = trunc::TruncPoly::from_poly(&base, &layout);
            let mut acc = trunc::TruncPoly::one(&layout, self.field());
            for _ in 0..r {
                if acc.is_zero() {
                    break;
                }
                acc = acc.mul(&f, &layout, self.field());
            }
            return Ok(acc.to_poly(&self.ring, &layout));
        }
        let mut acc = Poly::one(&self.ring).truncate(q);
        for _ in 0..r {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(&base)?.truncate(q);
        }
        Ok(acc)
    }

    /// `f g` modulo `m^[q]`; both inputs are truncated first.
    pub fn mul_trunc(&self, other: &Poly, q: u64) -> Result<Poly> {
        self.check_ring(other)?;
        if let Some(layout) = trunc::Layout::new(self.ring.nvars(), q) {
            let a = trunc::TruncPoly::from_poly(&self.truncate(q), &layout);
            let b = trunc::TruncPoly::from_poly(&other.truncate(q), &layout);
            return Ok(a.mul(&b, &layout, self.field()).to_poly(&self.ring, &layout));
        }
        Ok(self.truncate(q).mul(&other.truncate(q))?.truncate(q))
    }

    /// Drops the terms lying in the monomial ideal with generators `gens`.
    pub fn reduce_mod_monomials(&self, gens: &[ExpVec]) -> Poly {
        let terms = self.terms.iter().filter(|t| !gens.iter().any(|g| g.divides(&t.0))).cloned().collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    /// `f^q` for `q` a power of the characteristic, computed via Frobenius:
    /// coefficients are raised to the `q`-th power and exponents scaled.
    pub fn frobenius_power(&self, q: u64) -> Result<Poly> {
        if !self.field().is_char_power(q) {
            return Err(Error::NotCharPower(q));
        }
        let k = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.scale(k)?, field.pow(*c, q))))
            .collect::<Result<Vec<_>>>()?;
        // scaling by k preserves the lex order; Frobenius is injective on F
        Ok(Poly::from_sorted_terms(&self.ring, terms))
    }

    /// Substitutes `x_i -> sum_j m[i][j] x_j`.
    pub fn linear_change(&self, m: &Matrix) -> Result<Poly> {
        let n = self.ring.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
        }
        let field = self.field();
        if m.rank(field) < n {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                let terms = (0..n)
                    .filter(|&j| !m.get(i, j).is_zero())
                    .map(|j| (ExpVec::unit(n, j), m.get(i, j)));
                Poly::from_terms(&self.ring, terms)
            })
            .collect::<Result<_>>()?;
        let mut powers: Vec<Vec<Poly>> = vec![vec![Poly::one(&self.ring)]; n];
        let mut acc: FxHashMap<ExpVec, Fe> = FxHashMap::default();
        for (e, c) in &self.terms {
            let mut prod = Poly::constant(&self.ring, *c);
            for i in 0..n {
                let k = e.get(i) as usize;
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                prod = prod.mul(&powers[i][k])?;
            }
            for (t, a) in prod.terms {
                let slot = acc.entry(t).or_insert(Fe::ZERO);
                *slot = field.add(*slot, a);
            }
        }
        Ok(Poly::from_map(&self.ring, acc))
    }

    /// The term that is largest under `ord`.
    pub fn initial_term(&self, ord: &MonomialOrder) -> Result<(ExpVec, Fe)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = self.field();
        let terms = self.terms.iter().filter_map(|(e, c)| {
            let k = e.get(i);
            if k == 0 {
                return None;
            }
            let coeff = field.mul(*c, field.from_u64(k as u64));
            let mut exps = e.exps().to_vec();
            exps[i] -= 1;
            Some((ExpVec::new(exps).expect("degree decreases"), coeff))
        });
        Poly::from_terms(&self.ring, terms).expect("same ring")
    }

    /// The same polynomial viewed in `ring`, which must have the same number
    /// of variables and a field containing this one's prime subfield
    /// coefficients.
    pub fn lift(&self, ring: &Arc<Ring>) -> Result<Poly> {
        if ring.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), found: ring.nvars() });
        }
        if ring.field().p() != self.field().p() {
            return Err(Error::RingMismatch);
        }
        if ring.field() != self.field() && !self.terms.iter().all(|t| self.field().is_prime_subfield(t.1)) {
            return Err(Error::Unsupported("lifting coefficients outside the prime field".into()));
        }
        Ok(Poly { ring: ring.clone(), terms: self.terms.clone() })
    }

    /// Re-expresses a polynomial that does not involve variable `i` in the
    /// ring without it.
    pub fn drop_var(&self, i: usize, ring: &Arc<Ring>) -> Result<Poly> {
        if self.terms.iter().any(|t| t.0.get(i) > 0) {
            return Err(Error::Precondition(format!("polynomial involves variable {i}")));
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut exps = e.exps().to_vec();
            exps.remove(i);
            (ExpVec::new(exps).expect("subvector"), *c)
        });
        Poly::from_terms(ring, terms)
    }

    /// Coefficient vector of a linear form (`None` unless homogeneous of degree one).
    pub fn linear_coeffs(&self) -> Option<Vec<Fe>> {
        if self.is_zero() || !self.is_homogeneous() || self.terms[0].0.degree() != 1 {
            return None;
        }
        let mut v = vec![Fe::ZERO; self.ring.nvars()];
        for (e, c) in &self.terms {
            v[e.support().next()?] = *c;
        }
        Some(v)
    }

    pub fn from_linear_coeffs(ring: &Arc<Ring>, v: &[Fe]) -> Poly {
        let n = ring.nvars();
        let terms = v.iter().enumerate().map(|(j, c)| (ExpVec::unit(n, j), *c));
        Poly::from_terms(ring, terms).expect("length checked by caller")
    }
}

fn fmt_coeff(field: &FieldCfg, c: Fe) -> String {
    if field.degree() == 1 {
        return c.coeffs()[0].to_string();
    }
    let parts: Vec<String> = c
        .coeffs()
        .iter()
        .take(field.degree() as usize)
        .enumerate()
        .filter(|(_, v)| **v != 0)
        .map(|(i, v)| match i {
            0 => v.to_string(),
            1 => format!("{v}*g"),
            _ => format!("{v}*g^{i}"),
        })
        .collect();
    format!("({})", parts.join("+"))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if *c != field.one() || e.degree() == 0 {
                factors.push(fmt_coeff(field, *c));
            }
            for (i, &x) in e.exps().iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], x)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
