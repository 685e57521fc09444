mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use fptkit::convex::{qf, Q};
use fptkit::frobenius::{
    bracket_power, colon_linear_prime, in_frobenius_max, nu_sequence, sharply_f_pure_at, splitting_level,
    two_prime_colon_intersection, two_prime_colon_sum, ColonIdeal,
};
use fptkit::groebner::standard_monomial_count;
use fptkit::{fpt_bounds, monomial_fpt, nu, ExpVec, Fe, FieldCfg, Ideal, Matrix, MonomialIdeal, Poly, Ring};
use rand::Rng;

fn random_ideal(ring: &Arc<Ring>, max_gens: usize, max_deg: u32, rng: &mut impl Rng) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| common::random_nonzero_form(ring, rng.gen_range(1..=max_deg), 3, rng)).collect();
    Ideal::new(ring, gens).unwrap()
}

/// `ν` from the full expansion of `I^r`, stopping at the first `r` with
/// `I^r ⊆ m^[q]`.
fn nu_by_expansion(ideal: &Ideal, q: u64) -> u64 {
    let mut r = 0;
    loop {
        let power = ideal.pow(r as u32 + 1).unwrap();
        if power.gens().iter().all(|g| in_frobenius_max(g, q)) {
            return r;
        }
        r += 1;
    }
}

#[test]
fn nu_matches_full_expansion() {
    let mut rng = common::rng(41);
    for p in [2u32, 3] {
        let ring = common::ring(p, 2);
        for _ in 0..25 {
            let i = random_ideal(&ring, 2, 2, &mut rng);
            for e in 1..=2 {
                let q = (p as u64).pow(e);
                assert_eq!(nu(&i, e).unwrap(), nu_by_expansion(&i, q), "{:?} at q = {q}", i.gens());
            }
        }
    }
}

#[test]
fn nu_grows_with_frobenius_and_containment() {
    let mut rng = common::rng(42);
    for p in [2u32, 3, 5] {
        let ring = common::ring(p, 3);
        for _ in 0..15 {
            let i = random_ideal(&ring, 2, 3, &mut rng);
            let e_max = if p == 2 { 3 } else { 2 };
            let seq = nu_sequence(&i, e_max).unwrap();
            for w in seq.windows(2) {
                assert!(w[1] >= p as u64 * w[0]);
            }
            let mut gens = i.gens().to_vec();
            gens.push(common::random_nonzero_form(&ring, rng.gen_range(1..=3), 2, &mut rng));
            let j = Ideal::new(&ring, gens).unwrap();
            assert!(nu(&j, 1).unwrap() >= seq[0]);
        }
    }
}

#[test]
fn bounds_are_ordered_on_random_ideals() {
    let mut rng = common::rng(43);
    for p in [2u32, 3, 7] {
        let ring = common::ring(p, 3);
        for _ in 0..15 {
            let i = random_ideal(&ring, 3, 3, &mut rng);
            let b = fpt_bounds(&i, 2).unwrap();
            assert!(b.lower >= Q::from_integer(0.into()));
            if let Some(u) = &b.upper {
                assert!(b.lower <= *u, "{:?}: {} > {u}", i.gens(), b.lower);
            }
        }
    }
}

#[test]
fn bounds_collapse_on_monomial_ideals() {
    let mut rng = common::rng(44);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let a = common::random_monomial_ideal(n, rng.gen_range(1..=4), 4, &mut rng);
        let i = Ideal::from_monomial(&common::ring(3, n), &a).unwrap();
        let b = fpt_bounds(&i, 1).unwrap();
        let f = monomial_fpt(&a).unwrap();
        assert_eq!(b.lower, f);
        assert_eq!(b.upper, Some(f));
        assert!(b.is_exact());
    }
}

#[test]
fn sharp_test_is_monotone_in_c() {
    let mut rng = common::rng(45);
    let cs: Vec<Q> = (1..=12).map(|k| qf(k, 6)).collect();
    for p in [2u32, 3] {
        let ring = common::ring(p, 3);
        for _ in 0..10 {
            let i = random_ideal(&ring, 2, 2, &mut rng);
            for e in 1..=2 {
                let verdicts: Vec<bool> = cs.iter().map(|c| sharply_f_pure_at(&i, c, e).unwrap()).collect();
                for k in 1..verdicts.len() {
                    assert!(!verdicts[k] || verdicts[k - 1], "{:?}, e = {e}: {verdicts:?}", i.gens());
                }
            }
        }
    }
}

/// Whether some product of `r` generators has every exponent below `q`,
/// by growing the set of such exponent vectors one factor at a time.
fn slice_survives(a: &MonomialIdeal, r: u64, q: u64) -> bool {
    let n = a.nvars();
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; n]]);
    for _ in 0..r {
        let mut next = BTreeSet::new();
        for v in &level {
            for g in a.gens() {
                let w: Vec<u32> = v.iter().zip(g.exps()).map(|(x, y)| x + y).collect();
                if w.iter().all(|&x| (x as u64) < q) {
                    next.insert(w);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        level = next;
    }
    true
}

#[test]
fn monomial_sharp_test_matches_slice_search() {
    let mut rng = common::rng(46);
    for _ in 0..50 {
        let n = rng.gen_range(2..=3);
        let p = [2u32, 3, 5][rng.gen_range(0..3)];
        let a = common::random_monomial_ideal(n, rng.gen_range(1..=3), 3, &mut rng);
        let i = Ideal::from_monomial(&common::ring(p, n), &a).unwrap();
        let c = monomial_fpt(&a).unwrap();
        for e in 1..=2 {
            let q = (p as u64).pow(e);
            let r = splitting_level(&c, q).unwrap();
            assert_eq!(sharply_f_pure_at(&i, &c, e).unwrap(), slice_survives(&a, r, q), "{a:?}, q = {q}");
        }
    }
}

/// Projection of a coordinate vector onto a complement of the row space of
/// a reduced echelon matrix.
fn reduce(mut v: Vec<Fe>, rref: &Matrix, pivots: &[usize], field: &FieldCfg) -> Vec<Fe> {
    for (k, &c) in pivots.iter().enumerate() {
        let a = v[c];
        if a.is_zero() {
            continue;
        }
        for (j, x) in v.iter_mut().enumerate() {
            *x = field.sub(*x, field.mul(a, rref.get(k, j)));
        }
    }
    v
}

/// Degree-`t` part of `∩ (p^[q] : p)` over the given primes, as a basis of
/// forms: the kernel of `f -> (f l mod p^[q])` over the generators `l`.
fn colon_by_linear_algebra(primes: &[Vec<Poly>], q: u64, t: u32) -> Vec<Poly> {
    let ring = primes[0][0].ring().clone();
    let field = ring.field().clone();
    let n = ring.nvars();
    let src = common::monomials(n, t);
    let dst = common::monomials(n, t + 1);
    let one = field.one();
    let mut images: Vec<Vec<Fe>> = vec![Vec::new(); src.len()];
    for prime in primes {
        let bracket = bracket_power(&Ideal::new(&ring, prime.clone()).unwrap(), q).unwrap();
        let rows = common::degree_part(bracket.gens(), t + 1);
        let (rref, pivots) = if rows.is_empty() {
            (Matrix::zeros(0, dst.len()), Vec::new())
        } else {
            Matrix::from_rows(rows).unwrap().rref(&field)
        };
        for l in prime {
            for (k, m) in src.iter().enumerate() {
                let prod = l.mul_term(m, one).unwrap();
                images[k].extend(reduce(common::coeff_row(&prod, &dst), &rref, &pivots, &field));
            }
        }
    }
    // columns are the images of the source monomials
    let width = images[0].len();
    let cols: Vec<Vec<Fe>> = (0..width).map(|j| images.iter().map(|im| im[j]).collect()).collect();
    let kernel = if width == 0 {
        (0..src.len()).map(|k| (0..src.len()).map(|j| if j == k { one } else { field.zero() }).collect()).collect()
    } else {
        Matrix::from_rows(cols).unwrap().kernel(&field)
    };
    kernel
        .into_iter()
        .map(|v| Poly::from_terms(&ring, src.iter().cloned().zip(v)).unwrap())
        .collect()
}

fn degree_dim(colon: &ColonIdeal, t: u32) -> u64 {
    let n = colon.monomial.nvars();
    common::monomials(n, t).len() as u64 - standard_monomial_count(&colon.monomial, t)
}

fn check_against_oracle(colon: &ColonIdeal, primes: &[Vec<Poly>], q: u64, t_max: u32) {
    for t in 0..=t_max {
        let basis = colon_by_linear_algebra(primes, q, t);
        assert_eq!(basis.len() as u64, degree_dim(colon, t), "degree {t}, q = {q}");
        for f in &basis {
            assert!(colon.contains(f).unwrap(), "{f} at q = {q}");
        }
    }
}

fn random_forms(ring: &Arc<Ring>, h: usize, rng: &mut impl Rng) -> Vec<Poly> {
    let m = common::random_invertible(ring.field(), ring.nvars(), rng);
    (0..h).map(|i| Poly::from_linear_coeffs(ring, m.row(i))).collect()
}

#[test]
fn linear_prime_colon_matches_linear_algebra() {
    let mut rng = common::rng(47);
    for (p, q) in [(2u32, 2u64), (2, 4), (2, 8), (3, 3), (3, 9), (5, 5), (7, 7)] {
        let ring = common::ring(p, 3);
        for h in 1..=2 {
            let forms = random_forms(&ring, h, &mut rng);
            let colon = colon_linear_prime(&forms, q).unwrap();
            check_against_oracle(&colon, &[forms], q, h as u32 * (q as u32 - 1) + 1);
        }
    }
}

#[test]
fn two_prime_intersection_matches_linear_algebra() {
    let mut rng = common::rng(48);
    for (p, q) in [(2u32, 2u64), (2, 4), (3, 3)] {
        let ring = common::ring(p, 3);
        let f = random_forms(&ring, 3, &mut rng);
        let (u, v, w) = (f[0].clone(), f[1].clone(), f[2].clone());
        let colon = two_prime_colon_intersection(&[u.clone()], &[v.clone()], q).unwrap();
        check_against_oracle(&colon, &[vec![u.clone()], vec![v.clone()]], q, 2 * q as u32);
        let colon = two_prime_colon_intersection(&[u.clone(), w.clone()], &[v.clone(), w.clone()], q).unwrap();
        check_against_oracle(&colon, &[vec![u.clone(), w.clone()], vec![v.clone(), w.clone()]], q, 3 * q as u32);
        let sum = two_prime_colon_sum(&[u.clone(), w.clone()], &[v, w], q).unwrap();
        assert_eq!(sum.frame, colon.frame);
        assert!(sum.monomial.contains_ideal(&colon.monomial));
        // outside m^[q] both are the single monomial (u v w)^{q-1}
        let outside = |a: &MonomialIdeal| -> Vec<ExpVec> {
            a.gens().iter().filter(|g| !g.in_frobenius_max(q)).cloned().collect()
        };
        assert_eq!(outside(&sum.monomial), outside(&colon.monomial));
        assert_eq!(outside(&colon.monomial), vec![ExpVec::new(vec![q as u32 - 1; 3]).unwrap()]);
    }
}

#[test]
fn principal_colon_in_coordinates() {
    let ring = common::ring(3, 3);
    let x = Poly::var(&ring, 0);
    for q in [3u64, 9, 27] {
        let colon = colon_linear_prime(std::slice::from_ref(&x), q).unwrap();
        let e = vec![q as u32 - 1, 0, 0];
        assert_eq!(colon.monomial, MonomialIdeal::new(3, vec![ExpVec::new(e).unwrap()]).unwrap());
    }
}
