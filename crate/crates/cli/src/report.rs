//! Conversions of library values into report JSON.
//!
//! Rationals are `{"num": .., "den": ..}` with integer fields (strings when a
//! value does not fit in 64 bits). Field elements of a prime field are
//! integers, elements of an extension are coefficient lists, low degree first.

use std::sync::Arc;

use fptkit::classify::{DegreeCheck, PrimeCheck};
use fptkit::convex::{DavenportReport, GrunbaumReport};
use fptkit::frobenius::ColonIdeal;
use fptkit::{EssResult, Fe, FieldCfg, FptBounds, Matrix, MonomialIdeal, Poly, QPolytope, Ring, Q};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

fn int(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rational(x: &Q) -> Value {
    json!({ "num": int(x.numer()), "den": int(x.denom()) })
}

pub fn rationals(v: &[Q]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn fe(field: &FieldCfg, a: Fe) -> Value {
    let c = a.coeffs();
    if field.degree() == 1 {
        json!(c[0])
    } else {
        json!(c[..field.degree() as usize])
    }
}

pub fn matrix(field: &FieldCfg, m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|&a| fe(field, a)).collect())).collect())
}

pub fn poly(f: &Poly) -> Value {
    json!(f.to_string())
}

pub fn polys(fs: &[Poly]) -> Value {
    Value::Array(fs.iter().map(poly).collect())
}

/// `x^2*y` style text for an exponent vector.
pub fn monomial_text(e: &[u32], vars: &[String]) -> String {
    let factors: Vec<String> = e
        .iter()
        .zip(vars)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

pub fn monomial_ideal(a: &MonomialIdeal, vars: &[String]) -> Value {
    let gens: Vec<Value> = a.gens().iter().map(|g| json!(g.exps())).collect();
    let text: Vec<String> = a.gens().iter().map(|g| monomial_text(g.exps(), vars)).collect();
    json!({ "exponents": gens, "generators": text })
}

/// Vertices and rays, each list sorted so the output does not depend on the
/// order in which the hull was built.
pub fn polytope(p: &QPolytope) -> Value {
    let sorted = |v: &[Vec<Q>]| {
        let mut v = v.to_vec();
        v.sort();
        Value::Array(v.iter().map(|x| rationals(x)).collect())
    };
    json!({ "vertices": sorted(p.vertices()), "rays": sorted(p.rays()) })
}

pub fn bounds(b: &FptBounds) -> Value {
    let candidates = |c: &[(fptkit::Provenance, Q)]| -> Value {
        Value::Array(c.iter().map(|(p, q)| json!({ "provenance": p.tag(), "value": rational(q) })).collect())
    };
    json!({
        "lower": rational(&b.lower),
        "upper": b.upper.as_ref().map(rational),
        "lower_provenance": b.lower_provenance.tag(),
        "upper_provenance": b.upper_provenance.map(|p| p.tag()),
        "lower_candidates": candidates(&b.lower_candidates),
        "upper_candidates": candidates(&b.upper_candidates),
        "e_used": b.e_used,
        "nu": b.nu,
        "exact": b.is_exact(),
        "capped": b.capped,
    })
}

pub fn ess(field: &FieldCfg, e: &EssResult) -> Value {
    json!({
        "lower": e.lower,
        "upper": e.upper,
        "exact": e.exact,
        "method": e.method.tag(),
        "searched_degrees": e.searched_degrees,
        "certificate": e.certificate.iter().map(|m| matrix(field, m)).collect::<Vec<_>>(),
    })
}

pub fn degree_check(d: &DegreeCheck) -> Value {
    json!({
        "product_degree": d.product_degree,
        "colon_bound": d.colon_bound,
        "fedder_bound": d.fedder_bound,
        "holds": d.holds,
    })
}

pub fn prime_check(p: &PrimeCheck) -> Value {
    json!({
        "forms": polys(&p.forms),
        "height": p.height,
        "compatible": p.compatible,
        "degree": p.degree.as_ref().map(degree_check),
    })
}

/// A colon ideal in its frame: the new coordinates `y_i` as linear forms in
/// the ring variables, and the monomial ideal in the `y_i`.
pub fn colon(c: &ColonIdeal, ring: &Arc<Ring>) -> Value {
    let n = c.monomial.nvars();
    let ys: Vec<String> = (0..n).map(|i| format!("y{i}")).collect();
    let coords: Vec<String> =
        (0..n).map(|i| format!("y{i} = {}", Poly::from_linear_coeffs(ring, c.forms.row(i)))).collect();
    json!({
        "q": c.q,
        "coordinates": coords,
        "monomial": monomial_ideal(&c.monomial, &ys),
    })
}

pub fn grunbaum(r: &GrunbaumReport) -> Value {
    json!({
        "ratio": rational(&r.ratio),
        "bound": rational(&r.bound),
        "holds": r.holds,
        "equality": r.equality,
    })
}

pub fn davenport(r: &DavenportReport) -> Value {
    json!({
        "lattice_count": r.lattice_count,
        "proj_volume": rational(&r.proj_volume),
        "gap": rational(&r.gap),
        "bound_literal": rational(&r.bound_literal),
        "bound_corrected": rational(&r.bound_corrected),
        "holds_literal": r.holds_literal,
        "holds_corrected": r.holds_corrected,
    })
}
