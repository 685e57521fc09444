//! Beneath-beyond convex hull with exact predicates.
//!
//! Facets need not be simplices. Each facet keeps the indices of every
//! processed input point on its hyperplane; ridges are recovered as
//! intersections of these lists.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::polytope::{Facet, HRep, QPolytope};
use super::{affine_dim, dot, kernel, normalize_direction, q, rank, rref, sub, Q, QVec};
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 6;
pub const MAX_POINTS: usize = 10_000;

struct RawFacet {
    normal: QVec,
    offset: Q,
    inc: Vec<usize>,
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

/// Hyperplane through `pts` (affinely spanning a hyperplane of `R^k`),
/// oriented so that `interior` lies strictly on the positive side.
fn hyperplane(pts: &[&QVec], interior: &[Q], k: usize) -> (QVec, Q) {
    let diffs: Vec<QVec> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let ker = kernel(&diffs, k);
    debug_assert_eq!(ker.len(), 1);
    let mut normal = ker.into_iter().next().expect("hyperplane normal");
    let mut offset = dot(&normal, pts[0]);
    if dot(&normal, interior) < offset {
        for x in normal.iter_mut() {
            *x = -x.clone();
        }
        offset = -offset;
    }
    normalize_direction(&mut normal, &mut offset);
    (normal, offset)
}

/// Hull of points spanning `R^k`, `k >= 1`. Returns vertex indices and facets
/// (normal, offset, vertex indices).
fn full_hull(pts: &[QVec], k: usize) -> (Vec<usize>, Vec<RawFacet>) {
    if k == 1 {
        let (mut lo, mut hi) = (0, 0);
        for i in 1..pts.len() {
            if pts[i][0] < pts[lo][0] {
                lo = i;
            }
            if pts[i][0] > pts[hi][0] {
                hi = i;
            }
        }
        let mut vs = vec![lo, hi];
        vs.sort_unstable();
        let facets = vec![
            RawFacet { normal: vec![q(1)], offset: pts[lo][0].clone(), inc: vec![lo] },
            RawFacet { normal: vec![q(-1)], offset: -pts[hi][0].clone(), inc: vec![hi] },
        ];
        return (vs, facets);
    }

    let mut simplex = vec![0usize];
    for i in 1..pts.len() {
        if simplex.len() == k + 1 {
            break;
        }
        let mut trial: Vec<&QVec> = simplex.iter().map(|&j| &pts[j]).collect();
        let before = affine_dim(&trial);
        trial.push(&pts[i]);
        if affine_dim(&trial) > before {
            simplex.push(i);
        }
    }
    assert_eq!(simplex.len(), k + 1, "points must span the space");
    let mut interior = vec![Q::zero(); k];
    for &i in &simplex {
        for (c, x) in interior.iter_mut().zip(&pts[i]) {
            *c += x;
        }
    }
    let denom = q(k as i64 + 1);
    for c in interior.iter_mut() {
        *c /= &denom;
    }

    let mut facets: Vec<RawFacet> = Vec::new();
    for skip in 0..=k {
        let mut inc: Vec<usize> = simplex.iter().enumerate().filter(|(j, _)| *j != skip).map(|t| *t.1).collect();
        inc.sort_unstable();
        let refs: Vec<&QVec> = inc.iter().map(|&i| &pts[i]).collect();
        let (normal, offset) = hyperplane(&refs, &interior, k);
        facets.push(RawFacet { normal, offset, inc });
    }

    let in_simplex: Vec<bool> = (0..pts.len()).map(|i| simplex.contains(&i)).collect();
    for p in 0..pts.len() {
        if in_simplex[p] {
            continue;
        }
        let side: Vec<std::cmp::Ordering> =
            facets.iter().map(|f| dot(&f.normal, &pts[p]).cmp(&f.offset)).collect();
        let visible: Vec<usize> = (0..facets.len()).filter(|&i| side[i].is_lt()).collect();
        for (i, f) in facets.iter_mut().enumerate() {
            if side[i].is_eq() {
                insert_sorted(&mut f.inc, p);
            }
        }
        if visible.is_empty() {
            continue;
        }
        let mut fresh: BTreeMap<(QVec, Q), Vec<usize>> = BTreeMap::new();
        for &fi in &visible {
            for gi in 0..facets.len() {
                if !side[gi].is_gt() {
                    // visible facets and facets now containing p do not bound a new facet
                    continue;
                }
                let ridge = intersect_sorted(&facets[fi].inc, &facets[gi].inc);
                if ridge.len() + 1 < k {
                    continue;
                }
                let refs: Vec<&QVec> = ridge.iter().map(|&i| &pts[i]).collect();
                if affine_dim(&refs) != k as isize - 2 {
                    continue;
                }
                let mut with_p = refs.clone();
                with_p.insert(0, &pts[p]);
                let key = hyperplane(&with_p, &interior, k);
                let entry = fresh.entry(key).or_default();
                for i in ridge.into_iter().chain(std::iter::once(p)) {
                    insert_sorted(entry, i);
                }
            }
        }
        let mut kept: Vec<RawFacet> = facets
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !side[*i].is_lt())
            .map(|t| t.1)
            .collect();
        for ((normal, offset), inc) in fresh {
            match kept.iter_mut().find(|f| f.normal == normal && f.offset == offset) {
                Some(f) => {
                    for i in inc {
                        insert_sorted(&mut f.inc, i);
                    }
                }
                None => kept.push(RawFacet { normal, offset, inc }),
            }
        }
        facets = kept;
    }

    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (fi, f) in facets.iter().enumerate() {
        for &i in &f.inc {
            containing[i].push(fi);
        }
    }
    let vertices: Vec<usize> = (0..pts.len())
        .filter(|&i| {
            containing[i].len() >= k && {
                let normals: Vec<QVec> = containing[i].iter().map(|&f| facets[f].normal.clone()).collect();
                rank(&normals) == k
            }
        })
        .collect();
    let is_vertex: Vec<bool> = (0..pts.len()).map(|i| vertices.binary_search(&i).is_ok()).collect();
    for f in facets.iter_mut() {
        f.inc.retain(|&i| is_vertex[i]);
    }
    (vertices, facets)
}

/// Convex hull with minimal vertex list (sorted) and facet description.
pub fn convex_hull(points: &[QVec]) -> Result<QPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::Precondition("convex hull of no points".into()));
    };
    let dim = first.len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: points.iter().map(Vec::len).find(|&l| l != dim).unwrap() });
    }
    if dim > MAX_DIM {
        return Err(Error::ResourceCap(format!("hull dimension {dim} exceeds {MAX_DIM}")));
    }
    if points.len() > MAX_POINTS {
        return Err(Error::ResourceCap(format!("more than {MAX_POINTS} hull input points")));
    }
    let mut pts: Vec<QVec> = points.to_vec();
    pts.sort();
    pts.dedup();

    let p0 = pts[0].clone();
    let diffs: Vec<QVec> = pts[1..].iter().map(|p| sub(p, &p0)).collect();
    let (_, pivots) = if diffs.is_empty() { (Vec::new(), Vec::new()) } else { rref(&diffs) };
    let k = pivots.len();
    let equalities: Vec<(QVec, Q)> = if diffs.is_empty() {
        kernel(&[], dim)
    } else {
        kernel(&diffs, dim)
    }
    .into_iter()
    .map(|mut n| {
        let mut b = dot(&n, &p0);
        normalize_direction(&mut n, &mut b);
        (n, b)
    })
    .collect();

    if k == 0 {
        return Ok(QPolytope::from_parts(dim, vec![p0], Vec::new(), Some(HRep { equalities, facets: Vec::new() })));
    }

    let proj: Vec<QVec> = pts.iter().map(|p| pivots.iter().map(|&j| p[j].clone()).collect()).collect();
    let (vidx, raw) = full_hull(&proj, k);
    let vertices: Vec<QVec> = vidx.iter().map(|&i| pts[i].clone()).collect();
    let pos = |i: usize| vidx.binary_search(&i).expect("facet vertex is a vertex");
    let facets: Vec<Facet> = raw
        .into_iter()
        .map(|f| {
            let mut normal = vec![Q::zero(); dim];
            for (a, &j) in f.normal.into_iter().zip(&pivots) {
                normal[j] = a;
            }
            Facet { normal, offset: f.offset, vertices: f.inc.into_iter().map(pos).collect() }
        })
        .collect();
    Ok(QPolytope::from_parts(dim, vertices, Vec::new(), Some(HRep { equalities, facets })))
}
