//! Ideals of the polynomial ring and a Buchberger engine.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::field::{Fe, FieldCfg};
use crate::monomial::MonomialIdeal;
use crate::poly::{same_ring, ExpVec, MonomialOrder, OrderKind, Poly, Ring};

/// An ideal given by a nonempty list of nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Result<Ideal> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Ideal { ring: ring.clone(), gens })
    }

    pub fn from_monomial(ring: &Arc<Ring>, a: &MonomialIdeal) -> Result<Ideal> {
        if a.nvars() != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars(), found: a.nvars() });
        }
        let one = ring.field().one();
        Ideal::new(ring, a.gens().iter().map(|e| Poly::monomial(ring, e.clone(), one)).collect())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// The common degree of the generators.
    pub fn equigenerated_degree(&self) -> Result<u32> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = self.gens[0].total_degree().unwrap();
        if self.gens.iter().all(|g| g.total_degree() == Some(d)) {
            Ok(d)
        } else {
            Err(Error::NotEquigenerated)
        }
    }

    /// Whether every generator is a single term.
    pub fn monomial_part(&self) -> Option<MonomialIdeal> {
        if !self.gens.iter().all(Poly::is_monomial) {
            return None;
        }
        MonomialIdeal::new(self.nvars(), self.gens.iter().map(|g| g.terms()[0].0.clone()).collect()).ok()
    }

    /// Whether every generator lies in the homogeneous maximal ideal.
    pub fn in_maximal_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.terms().iter().all(|t| t.0.degree() > 0))
    }

    pub fn mul(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut seen = FxHashSet::default();
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let h = f.mul(g)?;
                if !h.is_zero() && seen.insert(h.monic()) {
                    gens.push(h);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^k`, generated by the products of `k` generators.
    pub fn pow(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Ideal::new(&self.ring, vec![Poly::one(&self.ring)]);
        }
        // products over index multisets: each level multiplies only by
        // generators at or after the last index used
        let mut level: Vec<(Poly, usize)> = (0..self.gens.len()).map(|i| (self.gens[i].clone(), i)).collect();
        for _ in 1..k {
            let mut seen = FxHashSet::default();
            let mut next = Vec::new();
            for (f, last) in &level {
                for j in *last..self.gens.len() {
                    let h = f.mul(&self.gens[j])?;
                    if !h.is_zero() && seen.insert(h.monic()) {
                        next.push((h, j));
                    }
                }
            }
            level = next;
        }
        Ideal::new(&self.ring, level.into_iter().map(|t| t.0).collect())
    }

    /// Applies `x_i -> sum_j m[i][j] x_j` to every generator.
    pub fn linear_change(&self, m: &crate::linalg::Matrix) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.linear_change(m)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }
}

/// Limits for the Buchberger loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbCaps {
    pub max_degree: u32,
    pub max_pairs: usize,
}

impl Default for GbCaps {
    fn default() -> Self {
        GbCaps { max_degree: 40, max_pairs: 1_000_000 }
    }
}

/// A reduced Gröbner basis. Elements are monic and listed by decreasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Poly>,
    leads: Vec<ExpVec>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn leads(&self) -> &[ExpVec] {
        &self.leads
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leads.clone()).expect("basis is nonempty")
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let basis: Vec<OPoly> = self.elements.iter().map(|g| OPoly::from_poly(g, &self.order)).collect();
        let r = reduce(&OPoly::from_poly(f, &self.order), &basis, &self.order, self.ring.field(), true);
        Ok(r.to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

type Key = Vec<i64>;

/// Sort key whose lexicographic order agrees with `ord`.
fn order_key(ord: &MonomialOrder, e: &ExpVec) -> Key {
    match ord.kind() {
        OrderKind::Lex => ord.priority().iter().map(|&i| e.get(i) as i64).collect(),
        OrderKind::Grevlex => std::iter::once(e.degree() as i64)
            .chain(ord.priority().iter().rev().map(|&i| -(e.get(i) as i64)))
            .collect(),
    }
}

/// Polynomial with terms sorted by decreasing `ord`.
#[derive(Clone, Debug)]
struct OPoly {
    terms: Vec<(Key, ExpVec, Fe)>,
}

impl OPoly {
    fn from_poly(f: &Poly, ord: &MonomialOrder) -> OPoly {
        let mut terms: Vec<(Key, ExpVec, Fe)> =
            f.terms().iter().map(|(e, c)| (order_key(ord, e), e.clone(), *c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        OPoly { terms }
    }

    fn to_poly(&self, ring: &Arc<Ring>) -> Poly {
        let mut terms: Vec<(ExpVec, Fe)> = self.terms.iter().map(|t| (t.1.clone(), t.2)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly::from_sorted_terms(ring, terms)
    }

    fn lead(&self) -> &ExpVec {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, field: &FieldCfg) {
        if let Some(c) = self.terms.first().map(|t| t.2) {
            let inv = field.inv(c).expect("nonzero");
            for t in &mut self.terms {
                t.2 = field.mul(t.2, inv);
            }
        }
    }
}

/// Division of `f` by monic `basis`. With `full`, every term is reduced;
/// otherwise reduction stops at the first irreducible leading term.
fn reduce(f: &OPoly, basis: &[OPoly], ord: &MonomialOrder, field: &FieldCfg, full: bool) -> OPoly {
    let mut work: BTreeMap<Key, (ExpVec, Fe)> =
        f.terms.iter().map(|t| (t.0.clone(), (t.1.clone(), t.2))).collect();
    let mut rem = Vec::new();
    while let Some((k, (e, c))) = work.pop_last() {
        match basis.iter().find(|g| g.lead().divides(&e)) {
            Some(g) => {
                let m = g.lead().quotient(&e).unwrap();
                for (_, ge, gc) in &g.terms[1..] {
                    let ne = ge.mul(&m).expect("bounded by the dividend");
                    let nk = order_key(ord, &ne);
                    let delta = field.neg(field.mul(c, *gc));
                    match work.get_mut(&nk) {
                        Some(slot) => {
                            slot.1 = field.add(slot.1, delta);
                            if slot.1.is_zero() {
                                work.remove(&nk);
                            }
                        }
                        None => {
                            work.insert(nk, (ne, delta));
                        }
                    }
                }
            }
            None => {
                rem.push((k, e, c));
                if !full {
                    rem.extend(work.into_iter().rev().map(|(k, (e, c))| (k, e, c)));
                    break;
                }
            }
        }
    }
    OPoly { terms: rem }
}

fn spoly(f: &OPoly, g: &OPoly, ord: &MonomialOrder, field: &FieldCfg) -> OPoly {
    let l = f.lead().lcm(g.lead());
    let mf = f.lead().quotient(&l).unwrap();
    let mg = g.lead().quotient(&l).unwrap();
    let mut acc: BTreeMap<Key, (ExpVec, Fe)> = BTreeMap::new();
    let mut push = |e: ExpVec, c: Fe| {
        let k = order_key(ord, &e);
        let slot = acc.entry(k).or_insert((e, Fe::ZERO));
        slot.1 = field.add(slot.1, c);
    };
    for (_, e, c) in &f.terms[1..] {
        push(e.mul(&mf).unwrap(), *c);
    }
    for (_, e, c) in &g.terms[1..] {
        push(e.mul(&mg).unwrap(), field.neg(*c));
    }
    let terms = acc.into_iter().rev().filter(|t| !t.1 .1.is_zero()).map(|(k, (e, c))| (k, e, c)).collect();
    OPoly { terms }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    degree: u32,
    lcm_key: Vec<u32>,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        // normal strategy: smallest lcm degree first, ties by lex on the lcm
        (self.degree, &self.lcm_key, self.i, self.j).cmp(&(other.degree, &other.lcm_key, other.i, other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn make_pair(basis: &[OPoly], i: usize, j: usize) -> Pair {
    let l = basis[i].lead().lcm(basis[j].lead());
    Pair { degree: l.degree(), lcm_key: l.exps().to_vec(), i, j }
}

pub fn buchberger(ideal: &Ideal, ord: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, ord, GbCaps::default())
}

pub fn buchberger_with(ideal: &Ideal, ord: &MonomialOrder, caps: GbCaps) -> Result<GroebnerBasis> {
    if ord.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: ord.nvars() });
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let field = ideal.ring.field();
    let mut basis: Vec<OPoly> = Vec::new();
    let mut pending: std::collections::BTreeSet<Pair> = std::collections::BTreeSet::new();
    let mut done: FxHashSet<(usize, usize)> = FxHashSet::default();
    let mut processed = 0usize;

    let insert = |h: OPoly, basis: &mut Vec<OPoly>, pending: &mut std::collections::BTreeSet<Pair>| -> Result<()> {
        if h.lead().degree() > caps.max_degree {
            return Err(Error::ResourceCap(format!("basis degree exceeds {}", caps.max_degree)));
        }
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pending.insert(make_pair(basis, i, k));
        }
        Ok(())
    };

    for g in &ideal.gens {
        let mut h = reduce(&OPoly::from_poly(g, ord), &basis, ord, field, true);
        if !h.is_zero() {
            h.make_monic(field);
            insert(h, &mut basis, &mut pending)?;
        }
    }

    while let Some(pair) = pending.pop_first() {
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::ResourceCap(format!("more than {} critical pairs", caps.max_pairs)));
        }
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));
        let (li, lj) = (basis[i].lead(), basis[j].lead());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], ord, field);
        let mut h = reduce(&s, &basis, ord, field, true);
        if !h.is_zero() {
            h.make_monic(field);
            insert(h, &mut basis, &mut pending)?;
        }
    }

    // minimal then reduced
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let li = basis[i].lead();
        let dominated = (0..basis.len()).any(|j| {
            j != i && basis[j].lead().divides(li) && (basis[j].lead() != li || j < i)
        });
        if !dominated {
            keep.push(i);
        }
    }
    let minimal: Vec<OPoly> = keep.into_iter().map(|i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<OPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|t| t.1.clone()).collect();
        let tail = OPoly { terms: g.terms[1..].to_vec() };
        let mut r = reduce(&tail, &others, ord, field, true);
        r.terms.insert(0, g.terms[0].clone());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| b.terms[0].0.cmp(&a.terms[0].0));
    let leads = reduced.iter().map(|g| g.lead().clone()).collect();
    let elements = reduced.iter().map(|g| g.to_poly(&ideal.ring)).collect();
    Ok(GroebnerBasis { ring: ideal.ring.clone(), order: ord.clone(), elements, leads })
}

pub fn initial_ideal(ideal: &Ideal, ord: &MonomialOrder) -> Result<MonomialIdeal> {
    Ok(buchberger(ideal, ord)?.initial_ideal())
}

/// Number of monomials of degree `t` in `n` variables outside `a`.
pub fn standard_monomial_count(a: &MonomialIdeal, t: u32) -> u64 {
    let mut count = 0u64;
    crate::monomial::for_each_composition(a.nvars(), t, |e| {
        if !a.contains_exp(e) {
            count += 1;
        }
    });
    count
}

/// `dim_k (R/I)_t`.
pub fn hilbert_value(ideal: &Ideal, t: u32) -> Result<u64> {
    let ini = initial_ideal(ideal, &MonomialOrder::grevlex(ideal.nvars()))?;
    Ok(standard_monomial_count(&ini, t))
}

/// Height of a homogeneous proper ideal, read off the initial ideal.
pub fn height(ideal: &Ideal) -> Result<usize> {
    let ini = initial_ideal(ideal, &MonomialOrder::grevlex(ideal.nvars()))?;
    if ini.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(n_minus_dim(&ini))
}

// n minus the largest variable set containing no generator support.
fn n_minus_dim(a: &MonomialIdeal) -> usize {
    let n = a.nvars();
    assert!(n <= 20, "subset search is exhaustive");
    let supports: Vec<u32> = a
        .gens()
        .iter()
        .map(|g| g.support().fold(0u32, |m, i| m | (1 << i)))
        .collect();
    let mut best = 0;
    for s in 0u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size > best && supports.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    n - best
}
