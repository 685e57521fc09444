use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fptkit::convex::{convex_hull, QVec, Q};
use fptkit::frobenius::{colon_linear_prime, nu_sequence};
use fptkit::groebner::buchberger;
use fptkit::{monomial_fpt, parse_poly, FieldCfg, Ideal, MonomialIdeal, MonomialOrder, Poly, Ring};
use num_bigint::BigInt;

fn ring(p: u32, vars: &[&str]) -> std::sync::Arc<Ring> {
    Ring::new(FieldCfg::prime(p).unwrap(), vars.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn nu(c: &mut Criterion) {
    let r = ring(2, &["x", "y", "z"]);
    let f = Ideal::new(&r, vec![parse_poly("x^3 + y^3 + z^3", &r).unwrap()]).unwrap();
    c.bench_function("nu fermat cubic e<=4", |b| b.iter(|| nu_sequence(black_box(&f), 4).unwrap()));
    let r = ring(3, &["x", "y", "z"]);
    let i = Ideal::new(&r, vec![parse_poly("x^2 + y*z", &r).unwrap(), parse_poly("x*y + z^2", &r).unwrap()]).unwrap();
    c.bench_function("nu two quadrics p=3 e<=3", |b| b.iter(|| nu_sequence(black_box(&i), 3).unwrap()));
}

fn groebner(c: &mut Criterion) {
    let r = ring(101, &["x", "y", "z", "w"]);
    let gens = ["x^2 + 3*y*z + w^2", "y^2 + 5*x*w + z^2", "z^2 + 7*x*y + 2*w^2"]
        .iter()
        .map(|s| parse_poly(s, &r).unwrap())
        .collect();
    let ideal = Ideal::new(&r, gens).unwrap();
    let order = MonomialOrder::grevlex(4);
    c.bench_function("buchberger three quadrics grevlex", |b| b.iter(|| buchberger(black_box(&ideal), &order).unwrap()));
}

fn monomial(c: &mut Criterion) {
    let a = MonomialIdeal::from_exponents(3, &[vec![5, 0, 0], vec![0, 4, 1], vec![1, 1, 3], vec![0, 0, 6], vec![2, 3, 0]]).unwrap();
    c.bench_function("monomial_fpt five generators", |b| b.iter(|| monomial_fpt(black_box(&a)).unwrap()));
}

fn convex(c: &mut Criterion) {
    let pts: Vec<QVec> = (0..24)
        .map(|k: i64| {
            let v = [(k * 7) % 11 - 5, (k * 5) % 13 - 6, (k * 3) % 7 - 3];
            v.iter().map(|&x| Q::new(BigInt::from(x), BigInt::from(1 + k % 3))).collect()
        })
        .collect();
    c.bench_function("convex_hull 24 points in 3d", |b| b.iter(|| convex_hull(black_box(&pts)).unwrap()));
    let hull = convex_hull(&pts).unwrap();
    c.bench_function("volume of that hull", |b| b.iter(|| black_box(&hull).volume().unwrap()));
}

fn colon(c: &mut Criterion) {
    let r = ring(2, &["x", "y", "z", "w"]);
    let b: Vec<Poly> = ["x + y", "z + w"].iter().map(|s| parse_poly(s, &r).unwrap()).collect();
    c.bench_function("colon of a linear prime q=8", |bn| bn.iter(|| colon_linear_prime(black_box(&b), 8).unwrap()));
}

criterion_group!(benches, nu, groebner, monomial, convex, colon);
criterion_main!(benches);
