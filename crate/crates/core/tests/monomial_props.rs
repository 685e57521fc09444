mod common;

use fptkit::convex::{q, qf, qvec, QVec, Q};
use fptkit::monomial::{gamma_t, in_newton_polytope, integral_closure, monomial_multiplicity, newton_polytope};
use fptkit::{monomial_fpt, MonomialIdeal};
use num_traits::{One, Zero};
use rand::Rng;

fn sorted_vertices(a: &MonomialIdeal) -> Vec<QVec> {
    let mut v = newton_polytope(a).unwrap().vertices().to_vec();
    v.sort();
    v
}

/// Two-variable `μ`: the diagonal is met on a generator or on a segment
/// between two generators.
fn mu_2var(a: &MonomialIdeal) -> Q {
    let pts: Vec<(Q, Q)> = a.gens().iter().map(|g| (q(g.get(0) as i64), q(g.get(1) as i64))).collect();
    let mut best: Option<Q> = None;
    let mut offer = |t: Q| {
        if best.as_ref().map_or(true, |b| t < *b) {
            best = Some(t);
        }
    };
    for (x, y) in &pts {
        offer(x.clone().max(y.clone()));
    }
    for (i, (x1, y1)) in pts.iter().enumerate() {
        for (x2, y2) in &pts[i + 1..] {
            // λ (x1 - y1) + (1 - λ)(x2 - y2) = 0
            let (a1, a2) = (x1 - y1, x2 - y2);
            if (a1.is_zero() && a2.is_zero()) || a1 == a2 {
                continue;
            }
            let lambda = -a2.clone() / (a1 - &a2);
            if lambda >= Q::zero() && lambda <= Q::one() {
                offer(&lambda * x1 + (Q::one() - &lambda) * x2);
            }
        }
    }
    best.unwrap()
}

/// Two-variable membership in `Γ(a)`: `u` dominates a generator or a point
/// of a segment between two generators.
fn in_gamma_2var(a: &MonomialIdeal, u: &[u32]) -> bool {
    let pts: Vec<[Q; 2]> = a.gens().iter().map(|g| [q(g.get(0) as i64), q(g.get(1) as i64)]).collect();
    let u = [q(u[0] as i64), q(u[1] as i64)];
    if pts.iter().any(|p| p[0] <= u[0] && p[1] <= u[1]) {
        return true;
    }
    for (i, v) in pts.iter().enumerate() {
        for w in &pts[i + 1..] {
            // λ v_k + (1 - λ) w_k <= u_k, an interval in λ for each k
            let (mut lo, mut hi) = (Q::zero(), Q::one());
            for k in 0..2 {
                let slope = &v[k] - &w[k];
                let rhs = &u[k] - &w[k];
                if slope.is_zero() {
                    if rhs < Q::zero() {
                        lo = Q::one();
                        hi = Q::zero();
                    }
                } else if slope > Q::zero() {
                    hi = hi.min(rhs / slope);
                } else {
                    lo = lo.max(rhs / slope);
                }
            }
            if lo <= hi {
                return true;
            }
        }
    }
    false
}

#[test]
fn two_variable_threshold_matches_segment_oracle() {
    let mut rng = common::rng(21);
    for _ in 0..200 {
        let a = common::random_monomial_ideal(2, rng.gen_range(1..=4), 6, &mut rng);
        assert_eq!(monomial_fpt(&a).unwrap(), Q::one() / mu_2var(&a), "{a:?}");
    }
}

#[test]
fn two_variable_closure_matches_segment_oracle() {
    let mut rng = common::rng(22);
    for _ in 0..100 {
        let a = common::random_monomial_ideal(2, rng.gen_range(1..=4), 6, &mut rng);
        let c = integral_closure(&a).unwrap();
        let cap = a.max_exponents();
        for i in 0..=cap[0] {
            for j in 0..=cap[1] {
                assert_eq!(c.contains_exp(&[i, j]), in_gamma_2var(&a, &[i, j]), "{a:?} at ({i}, {j})");
            }
        }
    }
}

#[test]
fn newton_polytope_of_product_is_minkowski_sum() {
    let mut rng = common::rng(23);
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let a = common::random_monomial_ideal(n, rng.gen_range(1..=3), 3, &mut rng);
        let b = common::random_monomial_ideal(n, rng.gen_range(1..=3), 3, &mut rng);
        let sum = newton_polytope(&a).unwrap().minkowski_sum(&newton_polytope(&b).unwrap()).unwrap();
        let mut sv = sum.vertices().to_vec();
        sv.sort();
        assert_eq!(sv, sorted_vertices(&a.mul(&b).unwrap()));
    }
}

#[test]
fn threshold_axioms_on_random_ideals() {
    let mut rng = common::rng(24);
    for _ in 0..150 {
        let n = rng.gen_range(1..=3);
        let a = common::random_monomial_ideal(n, rng.gen_range(1..=4), 6, &mut rng);
        let fa = monomial_fpt(&a).unwrap();
        for m in 1..=3u32 {
            assert_eq!(monomial_fpt(&a.pow(m).unwrap()).unwrap(), &fa / q(m as i64));
        }
        let c = integral_closure(&a).unwrap();
        assert_eq!(monomial_fpt(&c).unwrap(), fa);
        assert!(c.contains_ideal(&a));
        assert_eq!(integral_closure(&c).unwrap(), c);
        let b = a.add(&common::random_monomial_ideal(n, 2, 6, &mut rng)).unwrap();
        assert!(monomial_fpt(&b).unwrap() >= fa);
    }
}

#[test]
fn closure_members_lie_in_the_newton_polytope() {
    let mut rng = common::rng(25);
    for _ in 0..40 {
        let a = common::random_monomial_ideal(3, rng.gen_range(1..=4), 4, &mut rng);
        let c = integral_closure(&a).unwrap();
        for g in c.gens() {
            let u: QVec = g.exps().iter().map(|&x| q(x as i64)).collect();
            assert!(in_newton_polytope(&a, &u).unwrap());
        }
    }
}

#[test]
fn degree_slices_sit_inside_the_truncated_polyhedron() {
    let mut rng = common::rng(26);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let a = common::random_monomial_ideal(n, rng.gen_range(1..=3), 3, &mut rng);
        let t = a.gens().iter().map(|g| g.degree()).min().unwrap() + rng.gen_range(0..=2);
        let g = gamma_t(&a, t).unwrap();
        for v in g.vertices() {
            assert!(in_newton_polytope(&a, v).unwrap());
            assert_eq!(v.iter().fold(Q::zero(), |s, x| s + x), q(t as i64));
        }
    }
    // (x, y^3) in degree 2: the slice misses a point of the truncated polyhedron
    let a = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 3]]).unwrap();
    let u = vec![qf(1, 2), qf(3, 2)];
    assert!(in_newton_polytope(&a, &u).unwrap());
    assert!(!gamma_t(&a, 2).unwrap().contains(&u).unwrap());
}

#[test]
fn multiplicity_of_maximal_ideal_powers() {
    for n in 1..=3usize {
        for d in 1..=3u32 {
            let m = MonomialIdeal::coordinate_power(n, n, d).unwrap();
            assert_eq!(monomial_multiplicity(&m).unwrap(), (d as u64).pow(n as u32));
        }
    }
    let a = MonomialIdeal::from_exponents(2, &[vec![2, 0], vec![0, 3]]).unwrap();
    assert_eq!(monomial_multiplicity(&a).unwrap(), 6);
    assert_eq!(sorted_vertices(&a), vec![qvec(&[0, 3]), qvec(&[2, 0])]);
}

#[test]
fn equal_multiplicity_iff_equal_closure() {
    let mut rng = common::rng(27);
    let (mut same, mut diff) = (0, 0);
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let a = common::random_primary_monomial(n, rng.gen_range(0..=2), 4, &mut rng);
        let extra = if rng.gen_bool(0.5) {
            // a monomial from the closure leaves it unchanged
            let c = integral_closure(&a).unwrap();
            let g = c.gens()[rng.gen_range(0..c.gens().len())].exps().to_vec();
            MonomialIdeal::from_exponents(n, &[g]).unwrap()
        } else {
            common::random_monomial_ideal(n, 1, 2, &mut rng)
        };
        let b = a.add(&extra).unwrap();
        let eq_mult = monomial_multiplicity(&a).unwrap() == monomial_multiplicity(&b).unwrap();
        let eq_closure = integral_closure(&a).unwrap() == integral_closure(&b).unwrap();
        assert_eq!(eq_mult, eq_closure, "{a:?} ⊆ {b:?}");
        if eq_closure {
            same += 1;
        } else {
            diff += 1;
        }
    }
    assert!(same > 10 && diff > 10, "{same} / {diff}");
}
