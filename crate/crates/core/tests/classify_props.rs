mod common;

use std::sync::Arc;

use fptkit::classify::{certificate_holds, default_candidates, level_bound};
use fptkit::groebner::height;
use fptkit::monomial::for_each_composition;
use fptkit::{
    essential_codim, monomial_fpt, restrict_hyperplane, theorem_a_verdict, theorem_b_check, EssConfig, EssMethod, ExpVec,
    Ideal, Matrix, MonomialIdeal, Poly, Ring, Verdict, Q,
};
use num_bigint::BigInt;
use rand::Rng;

fn random_equigenerated(ring: &Arc<Ring>, d: u32, k: usize, rng: &mut impl Rng) -> Ideal {
    let gens = (0..k).map(|_| common::random_nonzero_form(ring, d, rng.gen_range(1..=4), rng)).collect();
    Ideal::new(ring, gens).unwrap()
}

/// Places an ideal of `k[x_0..x_{r-1}]` into `n` variables and moves it by `m`.
fn extend(ideal: &Ideal, big: &Arc<Ring>, m: &Matrix) -> Ideal {
    let n = big.nvars();
    let pad = |g: &Poly| {
        let terms = g.terms().iter().map(|(e, c)| {
            let mut v = e.exps().to_vec();
            v.resize(n, 0);
            (ExpVec::new(v).unwrap(), *c)
        });
        Poly::from_terms(big, terms).unwrap()
    };
    let gens = ideal.gens().iter().map(|g| pad(g).linear_change(m).unwrap()).collect();
    Ideal::new(big, gens).unwrap()
}

#[test]
fn certificates_hold_on_random_ideals() {
    let mut rng = common::rng(61);
    let cfg = EssConfig::default();
    for (p, n) in [(7u32, 3usize), (7, 4), (2, 3), (3, 3), (2, 4)] {
        let ring = common::ring(p, n);
        for _ in 0..15 {
            let d = rng.gen_range(1..=3);
            let i = random_equigenerated(&ring, d, rng.gen_range(1..=3), &mut rng);
            let e = essential_codim(&i, &cfg).unwrap();
            assert!(e.lower <= e.upper && e.upper <= n);
            assert!(e.lower >= height(&i).unwrap());
            assert_eq!(e.method == EssMethod::DerivativeSpan, d < p);
            for c in &e.certificate {
                assert!(certificate_holds(&i, c, e.upper).unwrap());
            }
        }
    }
}

#[test]
fn extended_ideals_keep_their_essential_codimension() {
    let mut rng = common::rng(62);
    let cfg = EssConfig::default();
    for (p, r, n) in [(7u32, 2usize, 4usize), (7, 3, 4), (5, 2, 3), (2, 2, 4), (3, 2, 3)] {
        let small = common::ring(p, r);
        let big = common::ring(p, n);
        for _ in 0..10 {
            let d = rng.gen_range(1..=3);
            let i = random_equigenerated(&small, d, rng.gen_range(1..=3), &mut rng);
            let m = common::random_invertible(big.field(), n, &mut rng);
            let j = extend(&i, &big, &m);
            let (a, b) = (essential_codim(&i, &cfg).unwrap(), essential_codim(&j, &cfg).unwrap());
            assert!(b.upper <= r);
            assert!(a.exact && b.exact);
            assert_eq!(a.upper, b.upper, "{:?} moved to {:?}", i.gens(), j.gens());
        }
    }
}

#[test]
fn generic_forms_extend_from_all_variables() {
    let mut rng = common::rng(63);
    let cfg = EssConfig::default();
    let small = common::ring(101, 3);
    let big = common::ring(101, 5);
    for d in 1..=3 {
        // three generic forms of degree d in three variables span every direction
        let gens = (0..3).map(|_| fptkit::ci_hilbert::random_form(&small, d, &mut rng).unwrap()).collect();
        let i = Ideal::new(&small, gens).unwrap();
        let m = common::random_invertible(big.field(), 5, &mut rng);
        let e = essential_codim(&extend(&i, &big, &m), &cfg).unwrap();
        assert!(e.exact);
        assert_eq!(e.upper, 3);
    }
}

fn fixture(text: &str, n: usize) -> Ideal {
    let ring = common::ring(101, n);
    Ideal::new(&ring, fptkit::parse_poly_list(text, &ring).unwrap()).unwrap()
}

#[test]
fn general_hyperplane_sections() {
    let mut rng = common::rng(64);
    let cfg = EssConfig::default();
    let fixtures = [
        fixture("x^2, y^2, z^2", 4),
        fixture("x^2, x*y, x*z, x*w, y^2, y*z, y*w, z^2, z*w, w^2", 4),
        fixture("x^2 + 3*y*z - w^2, x*w + 5*y^2 + z^2", 4),
        fixture("(x + 2*y)^2, x*y", 4),
        fixture("x^3 + y^3 + z^3 + w^3 + v^3", 5),
    ];
    for i in &fixtures {
        let n = i.nvars() - 1;
        let ess = essential_codim(i, &cfg).unwrap().upper;
        let target = ess.min(n);
        let mut hits = 0;
        for _ in 0..50 {
            let l = loop {
                let v: Vec<_> = (0..i.nvars()).map(|_| common::random_fe(i.ring().field(), &mut rng)).collect();
                if v.iter().any(|c| !c.is_zero()) {
                    break Poly::from_linear_coeffs(i.ring(), &v);
                }
            };
            let cut = restrict_hyperplane(i, &l).unwrap();
            if essential_codim(&cut, &cfg).unwrap().upper == target {
                hits += 1;
            }
        }
        assert!(hits >= 45, "{:?}: {hits} of 50", i.gens());
    }
}

/// Nonempty antichains of degree-`d` monomials in `n` variables.
fn equigenerated_monomial_ideals(n: usize, d: u32) -> Vec<MonomialIdeal> {
    let mut basis = Vec::new();
    for_each_composition(n, d, |e| basis.push(e.to_vec()));
    (1u32..1 << basis.len())
        .map(|mask| {
            let gens: Vec<Vec<u32>> = (0..basis.len()).filter(|i| mask >> i & 1 == 1).map(|i| basis[i].clone()).collect();
            MonomialIdeal::from_exponents(n, &gens).unwrap()
        })
        .collect()
}

#[test]
fn theorem_a_verdict_on_monomial_ideals() {
    let cfg = EssConfig::default();
    for (p, n, d_max) in [(5u32, 2usize, 3u32), (5, 3, 2), (2, 3, 2)] {
        let ring = common::ring(p, n);
        for d in 1..=d_max {
            for a in equigenerated_monomial_ideals(n, d) {
                let i = Ideal::from_monomial(&ring, &a).unwrap();
                let r = theorem_a_verdict(&i, 1, &cfg).unwrap();
                let ratio = Q::new(BigInt::from(r.h), BigInt::from(d));
                let fpt = monomial_fpt(&a).unwrap();
                assert_eq!(r.verdict == Verdict::EqualityCase, fpt == ratio, "{a:?} over F_{p}");
                assert_eq!(r.verdict == Verdict::StrictCase, fpt > ratio, "{a:?} over F_{p}");
                assert!(fpt >= ratio);
            }
        }
    }
}

fn support_size(a: &MonomialIdeal) -> usize {
    (0..a.nvars()).filter(|&i| a.gens().iter().any(|g| g.get(i) > 0)).count()
}

/// Observed, not claimed in general: a monomial ideal's essential
/// codimension is the number of variables its generators involve.
#[test]
fn conjecture_monomial_ess_is_support_size() {
    let cfg = EssConfig::default();
    for p in [2u32, 3, 5] {
        let ring = common::ring(p, 3);
        for d in 1..=3 {
            for a in equigenerated_monomial_ideals(3, d) {
                let e = essential_codim(&Ideal::from_monomial(&ring, &a).unwrap(), &cfg).unwrap();
                assert!(e.exact);
                assert_eq!(e.upper, support_size(&a), "{a:?} over F_{p}");
            }
        }
    }
}

#[test]
fn theorem_b_single_level_soundness() {
    let mut rng = common::rng(65);
    let cs: Vec<Q> = [(1, 3), (1, 2), (2, 3), (1, 1), (3, 2)].iter().map(|&(a, b)| Q::new(a.into(), b.into())).collect();
    let mut sharp_and_compatible = 0;
    for p in [2u32, 3] {
        for _ in 0..12 {
            let n = rng.gen_range(2..=3);
            let ring = common::ring(p, n);
            let d = rng.gen_range(1..=2);
            let i = if rng.gen_bool(0.5) {
                let basis = common::monomials(n, d);
                let k = rng.gen_range(1..=basis.len().min(3));
                let gens: Vec<ExpVec> = (0..k).map(|_| basis[rng.gen_range(0..basis.len())].clone()).collect();
                Ideal::from_monomial(&ring, &MonomialIdeal::new(n, gens).unwrap()).unwrap()
            } else {
                random_equigenerated(&ring, d, rng.gen_range(1..=2), &mut rng)
            };
            let candidates = default_candidates(&i, 10_000).unwrap();
            for c in &cs {
                let r = theorem_b_check(&i, c, &candidates, 2).unwrap();
                if !r.sharp_probe {
                    continue;
                }
                let q = (p as u64).pow(r.e_probed);
                for prime in r.primes.iter().filter(|x| x.compatible) {
                    sharp_and_compatible += 1;
                    assert!(*c > level_bound(prime.height, d, q), "{:?} at c = {c}", i.gens());
                    assert!(prime.degree.as_ref().unwrap().holds);
                }
            }
        }
    }
    assert!(sharp_and_compatible > 10);
}

#[test]
fn restriction_by_a_coordinate_drops_it() {
    let ring = common::ring(5, 4);
    let i = Ideal::new(&ring, fptkit::parse_poly_list("x^2 + y*z, y^3 - z^3", &ring).unwrap()).unwrap();
    let cut = restrict_hyperplane(&i, &Poly::var(&ring, 3)).unwrap();
    let small = common::ring(5, 3);
    let expect: Vec<Poly> = i.gens().iter().map(|g| g.drop_var(3, &small).unwrap()).collect();
    assert_eq!(cut.gens(), &expect[..]);
}
