#![allow(dead_code)]

use std::sync::Arc;

use fptkit::monomial::for_each_composition;
use fptkit::{ExpVec, Fe, FieldCfg, Matrix, MonomialIdeal, Poly, Ring};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn ring(p: u32, n: usize) -> Arc<Ring> {
    let names: Vec<String> = ["x", "y", "z", "w", "v", "u"].iter().take(n).map(|s| s.to_string()).collect();
    Ring::new(FieldCfg::prime(p).unwrap(), names).unwrap()
}

pub fn random_fe(field: &FieldCfg, rng: &mut impl Rng) -> Fe {
    field.element(rng.gen_range(0..field.order()))
}

pub fn random_nonzero_fe(field: &FieldCfg, rng: &mut impl Rng) -> Fe {
    field.element(rng.gen_range(1..field.order()))
}

pub fn monomials(n: usize, d: u32) -> Vec<ExpVec> {
    let mut out = Vec::new();
    for_each_composition(n, d, |e| out.push(ExpVec::new(e.to_vec()).unwrap()));
    out
}

/// A form of degree `d` with at most `terms` terms.
pub fn random_form(ring: &Arc<Ring>, d: u32, terms: usize, rng: &mut impl Rng) -> Poly {
    let basis = monomials(ring.nvars(), d);
    let picks = (0..terms).map(|_| (basis[rng.gen_range(0..basis.len())].clone(), random_nonzero_fe(ring.field(), rng)));
    Poly::from_terms(ring, picks).unwrap()
}

pub fn random_nonzero_form(ring: &Arc<Ring>, d: u32, terms: usize, rng: &mut impl Rng) -> Poly {
    loop {
        let f = random_form(ring, d, terms, rng);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A polynomial with terms of degree at most `max_deg`.
pub fn random_poly(ring: &Arc<Ring>, max_deg: u32, terms: usize, rng: &mut impl Rng) -> Poly {
    let n = ring.nvars();
    let picks = (0..terms).map(|_| {
        let d = rng.gen_range(0..=max_deg);
        let basis = monomials(n, d);
        (basis[rng.gen_range(0..basis.len())].clone(), random_nonzero_fe(ring.field(), rng))
    });
    Poly::from_terms(ring, picks).unwrap()
}

pub fn random_invertible(field: &FieldCfg, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<Fe>> = (0..n).map(|_| (0..n).map(|_| random_fe(field, rng)).collect()).collect();
        let m = Matrix::from_rows(rows).unwrap();
        if m.rank(field) == n {
            return m;
        }
    }
}

pub fn random_monomial_ideal(n: usize, gens: usize, max_exp: u32, rng: &mut impl Rng) -> MonomialIdeal {
    loop {
        let exps: Vec<Vec<u32>> = (0..gens).map(|_| (0..n).map(|_| rng.gen_range(0..=max_exp)).collect()).collect();
        if exps.iter().all(|e| e.iter().any(|&x| x > 0)) {
            return MonomialIdeal::from_exponents(n, &exps).unwrap();
        }
    }
}

/// An m-primary monomial ideal: pure powers plus random mixed generators.
pub fn random_primary_monomial(n: usize, extra: usize, max_exp: u32, rng: &mut impl Rng) -> MonomialIdeal {
    let mut exps: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = rng.gen_range(1..=max_exp);
            e
        })
        .collect();
    for _ in 0..extra {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            exps.push(e);
        }
    }
    MonomialIdeal::from_exponents(n, &exps).unwrap()
}

/// Row vector of the coefficients of the degree-`d` part of `f`.
pub fn coeff_row(f: &Poly, basis: &[ExpVec]) -> Vec<Fe> {
    basis.iter().map(|m| f.coeff(m)).collect()
}

/// Rows spanning the degree-`d` part of the ideal generated by the given forms.
pub fn degree_part(gens: &[Poly], d: u32) -> Vec<Vec<Fe>> {
    let ring = gens[0].ring().clone();
    let n = ring.nvars();
    let basis = monomials(n, d);
    let one = ring.field().one();
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials(n, d - dg) {
            let h = g.mul_term(&m, one).unwrap();
            rows.push(coeff_row(&h, &basis));
        }
    }
    rows
}

pub fn rank(field: &FieldCfg, rows: &[Vec<Fe>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows.to_vec()).unwrap().rank(field)
}

/// Membership of a form in a homogeneous ideal by degreewise rank comparison.
pub fn form_in_ideal(f: &Poly, gens: &[Poly]) -> bool {
    if f.is_zero() {
        return true;
    }
    let d = f.total_degree().unwrap();
    let basis = monomials(f.ring().nvars(), d);
    let mut rows = degree_part(gens, d);
    let before = rank(f.field(), &rows);
    rows.push(coeff_row(f, &basis));
    rank(f.field(), &rows) == before
}

/// Splits a polynomial into homogeneous components.
pub fn homogeneous_parts(f: &Poly) -> Vec<Poly> {
    let mut by_deg: std::collections::BTreeMap<u32, Vec<(ExpVec, Fe)>> = Default::default();
    for (e, c) in f.terms() {
        by_deg.entry(e.degree()).or_default().push((e.clone(), *c));
    }
    by_deg.into_values().map(|t| Poly::from_terms(f.ring(), t).unwrap()).collect()
}

pub fn in_ideal_by_rank(f: &Poly, gens: &[Poly]) -> bool {
    homogeneous_parts(f).iter().all(|h| form_in_ideal(h, gens))
}

/// `dim (R/I)_d` by rank.
pub fn hilbert_by_rank(gens: &[Poly], d: u32) -> u64 {
    let n = gens[0].ring().nvars();
    (monomials(n, d).len() - rank(gens[0].field(), &degree_part(gens, d))) as u64
}
