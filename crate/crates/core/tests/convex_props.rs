mod common;

use fptkit::convex::{convex_hull, davenport_check, grunbaum_bound, grunbaum_check, q, qf, HalfSpace, QPolytope, QVec, Q};
use fptkit::monomial::for_each_composition;
use num_traits::{Signed, Zero};
use rand::Rng;

fn random_point(dim: usize, rng: &mut impl Rng) -> QVec {
    (0..dim).map(|_| qf(rng.gen_range(-20..=20), rng.gen_range(1..=4))).collect()
}

fn random_body(dim: usize, rng: &mut impl Rng) -> QPolytope {
    loop {
        let pts: Vec<QVec> = (0..rng.gen_range(dim + 1..=dim + 8)).map(|_| random_point(dim, rng)).collect();
        let p = convex_hull(&pts).unwrap();
        if p.affine_dim() == dim as isize {
            return p;
        }
    }
}

fn random_normal(dim: usize, rng: &mut impl Rng) -> QVec {
    loop {
        let v: QVec = (0..dim).map(|_| q(rng.gen_range(-5..=5))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Vertices of a polygon in counterclockwise order around the centre of mass
/// of its vertices, by exact comparisons of cross products.
fn ccw(vertices: &[QVec]) -> Vec<QVec> {
    let k = q(vertices.len() as i64);
    let c: QVec = (0..2).map(|i| vertices.iter().fold(Q::zero(), |s, v| s + &v[i]) / &k).collect();
    let half = |v: &QVec| -> u8 {
        let (x, y) = (&v[0] - &c[0], &v[1] - &c[1]);
        if y > Q::zero() || (y.is_zero() && x > Q::zero()) {
            0
        } else {
            1
        }
    };
    let mut out = vertices.to_vec();
    out.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let cross = (&a[0] - &c[0]) * (&b[1] - &c[1]) - (&a[1] - &c[1]) * (&b[0] - &c[0]);
            Q::zero().cmp(&cross)
        })
    });
    out
}

/// Shoelace area and centroid.
fn shoelace(vertices: &[QVec]) -> (Q, QVec) {
    let v = ccw(vertices);
    let (mut a2, mut cx, mut cy) = (Q::zero(), Q::zero(), Q::zero());
    for i in 0..v.len() {
        let (p, r) = (&v[i], &v[(i + 1) % v.len()]);
        let cross = &p[0] * &r[1] - &r[0] * &p[1];
        cx += (&p[0] + &r[0]) * &cross;
        cy += (&p[1] + &r[1]) * &cross;
        a2 += cross;
    }
    let area = &a2 / q(2);
    let six = &a2 * q(3);
    (area, vec![cx / &six, cy / six])
}

#[test]
fn polygon_area_and_centroid_match_shoelace() {
    let mut rng = common::rng(31);
    for _ in 0..100 {
        let p = random_body(2, &mut rng);
        let (area, c) = shoelace(p.vertices());
        assert_eq!(p.volume().unwrap(), area);
        assert_eq!(p.centroid().unwrap(), c);
    }
}

#[test]
fn centroid_cuts_split_the_volume() {
    let mut rng = common::rng(32);
    for dim in [2usize, 3] {
        for _ in 0..40 {
            let p = random_body(dim, &mut rng);
            let h = HalfSpace::through(random_normal(dim, &mut rng), &p.centroid().unwrap()).unwrap();
            let a = p.halfspace_cut(&h).unwrap().volume().unwrap();
            let b = p.halfspace_cut(&h.opposite()).unwrap().volume().unwrap();
            assert_eq!(a + b, p.volume().unwrap());
        }
    }
}

#[test]
fn grunbaum_holds_on_random_bodies() {
    let mut rng = common::rng(33);
    for (dim, count) in [(2usize, 200), (3, 50)] {
        let bound = grunbaum_bound(dim as u32).unwrap();
        for _ in 0..count {
            let p = random_body(dim, &mut rng);
            let h = HalfSpace::through(random_normal(dim, &mut rng), &p.centroid().unwrap()).unwrap();
            let r = grunbaum_check(&p, &h).unwrap();
            assert!(r.holds && r.ratio <= bound, "{:?} cut by {h:?}: {}", p.vertices(), r.ratio);
        }
    }
}

fn standard_simplex(n: usize) -> QPolytope {
    let mut pts = vec![vec![q(0); n]];
    for i in 0..n {
        let mut v = vec![q(0); n];
        v[i] = q(1);
        pts.push(v);
    }
    convex_hull(&pts).unwrap()
}

/// Positive multiples of `-e_i` or of `(1, ..., 1)`: the side that contains a facet.
fn facet_side(v: &[Q]) -> bool {
    let nonzero: Vec<&Q> = v.iter().filter(|x| !x.is_zero()).collect();
    (nonzero.len() == 1 && nonzero[0].is_negative()) || (v.iter().all(|x| x.is_positive()) && v.iter().all(|x| *x == v[0]))
}

#[test]
fn simplex_equality_exactly_on_facet_parallel_cuts() {
    for n in [2usize, 3] {
        let t = standard_simplex(n);
        let c = t.centroid().unwrap();
        assert_eq!(c, vec![qf(1, n as i64 + 1); n]);
        let mut hits = 0;
        let mut grid = Vec::new();
        let range: Vec<i64> = (-2..=2).collect();
        let mut idx = vec![0usize; n];
        loop {
            grid.push(idx.iter().map(|&i| q(range[i])).collect::<QVec>());
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < range.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        for normal in grid.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())) {
            let r = grunbaum_check(&t, &HalfSpace::through(normal.clone(), &c).unwrap()).unwrap();
            assert!(r.holds);
            assert_eq!(r.equality, facet_side(&normal), "normal {normal:?}");
            if r.equality {
                hits += 1;
            }
        }
        // each facet direction appears once per positive multiple in the grid
        assert_eq!(hits, n * 2 + 2);
    }
}

#[test]
fn lp_and_facet_membership_agree() {
    let mut rng = common::rng(34);
    for dim in [2usize, 3] {
        for _ in 0..4 {
            let p = random_body(dim, &mut rng);
            for v in p.vertices() {
                assert!(p.contains(v).unwrap() && p.contains_by_facets(v).unwrap());
            }
            for _ in 0..1000 {
                let u = random_point(dim, &mut rng);
                assert_eq!(p.contains(&u).unwrap(), p.contains_by_facets(&u).unwrap(), "{u:?}");
            }
        }
    }
}

#[test]
fn projected_dilated_simplex_volume() {
    for n in 1..=3usize {
        for t in 1..=5i64 {
            let mut pts = Vec::new();
            for i in 0..=n {
                let mut v = vec![q(0); n + 1];
                v[i] = q(t);
                pts.push(v);
            }
            let p = convex_hull(&pts).unwrap().drop_last_coordinate().unwrap();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(p.volume().unwrap(), qf(t.pow(n as u32), fact));
        }
    }
}

fn slice_points(t: u32) -> Vec<QVec> {
    let mut out = Vec::new();
    for_each_composition(3, t, |e| out.push(e.iter().map(|&x| q(x as i64)).collect()));
    out
}

/// Lattice triangles (possibly degenerate) inside `t Δ_2`.
#[test]
fn corrected_lattice_bound_on_triangles() {
    for t in 1..=5u32 {
        let pts = slice_points(t);
        for i in 0..pts.len() {
            for j in i..pts.len() {
                for k in j..pts.len() {
                    let p = convex_hull(&[pts[i].clone(), pts[j].clone(), pts[k].clone()]).unwrap();
                    let r = davenport_check(&p, t, 2).unwrap();
                    assert!(r.lattice_count >= 1);
                    assert!(r.holds_corrected, "t = {t}: {:?}", p.vertices());
                }
            }
        }
    }
    let whole = convex_hull(&slice_points(1)).unwrap();
    let r = davenport_check(&whole, 1, 2).unwrap();
    assert_eq!((r.lattice_count, r.gap.clone()), (3, qf(5, 2)));
    assert!(!r.holds_literal && r.holds_corrected);
}
