//! Scripted examples checked against golden files.
//!
//! The golden files under `golden/` are written by `golden/oracles.py`,
//! which computes every value independently of this crate (full expansion of
//! powers, exhaustive lattice enumeration, simplex volumes). A golden file
//! records the parameters it was generated with; when a run uses other
//! parameters the comparison is skipped and reported as such.

use clap::ValueEnum;
use fptkit::convex::{convex_hull, davenport_check, grunbaum_bound, grunbaum_check, HalfSpace, Q};
use fptkit::frobenius::{
    colon_linear_prime, fpt_bounds_with, frobenius_exponent, in_frobenius_max, nu_sequence_with, splitting_level,
    survivor_with,
};
use fptkit::monomial::{gamma_t, in_newton_polytope};
use fptkit::{parse_poly, theorem_b_check, FieldCfg, Ideal, MonomialIdeal, Poly, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::commands::standard_simplex;
use crate::report;
use crate::{Failure, RunConfig};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Script {
    /// Diagonal cubic in characteristic 2.
    Fermat,
    /// Hypersurface whose threshold is height over degree without coming from fewer variables.
    Chsw,
    /// A point of the Newton polytope slice outside the hull of the slice monomials.
    RemarkSlice,
    /// Centroid cuts of simplices parallel to a facet.
    GrunbaumSimplex,
    /// The smallest slice where the lattice bound without constant term fails.
    DavenportGap,
}

impl Script {
    pub fn name(self) -> &'static str {
        match self {
            Script::Fermat => "fermat",
            Script::Chsw => "chsw",
            Script::RemarkSlice => "remark-slice",
            Script::GrunbaumSimplex => "grunbaum-simplex",
            Script::DavenportGap => "davenport-gap",
        }
    }

    pub fn golden(self) -> &'static str {
        match self {
            Script::Fermat => include_str!("../golden/fermat.json"),
            Script::Chsw => include_str!("../golden/chsw.json"),
            Script::RemarkSlice => include_str!("../golden/remark-slice.json"),
            Script::GrunbaumSimplex => include_str!("../golden/grunbaum-simplex.json"),
            Script::DavenportGap => include_str!("../golden/davenport-gap.json"),
        }
    }
}

/// Parameters and computed values of one script.
pub fn compute(script: Script, cfg: &RunConfig) -> Result<(Value, Value), Failure> {
    match script {
        Script::Fermat => fermat(cfg),
        Script::Chsw => chsw(cfg),
        Script::RemarkSlice => Ok((json!({}), remark_slice()?)),
        Script::GrunbaumSimplex => Ok((json!({}), grunbaum_simplex()?)),
        Script::DavenportGap => Ok((json!({}), davenport_gap()?)),
    }
}

pub(crate) fn run(script: Script, cfg: &RunConfig, golden: &str) -> Result<Value, Failure> {
    let golden: Value = serde_json::from_str(golden).map_err(|e| Failure::usage(format!("golden file: {e}")))?;
    let (params, values) = compute(script, cfg)?;
    let file = format!("{}.json", script.name());
    let mut out = json!({ "script": script.name(), "params": params, "values": values });
    if golden["params"] != params {
        out["golden"] = json!({ "file": file, "status": "skipped", "reason": "parameters differ from the golden file" });
        return Ok(out);
    }
    let mut d = Vec::new();
    diff(&golden["result"], &values, "", &mut d);
    if d.is_empty() {
        out["golden"] = json!({ "file": file, "status": "match" });
        Ok(out)
    } else {
        out["golden"] = json!({ "file": file, "status": "mismatch" });
        Err(Failure::Mismatch { result: out, diff: d })
    }
}

/// Differences between two JSON values as `{path, expected, actual}` records.
pub fn diff(expected: &Value, actual: &Value, path: &str, out: &mut Vec<Value>) {
    match (expected, actual) {
        (Value::Object(a), Value::Object(b)) => {
            let mut keys: Vec<&String> = a.keys().chain(b.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let null = Value::Null;
                diff(a.get(k).unwrap_or(&null), b.get(k).unwrap_or(&null), &format!("{path}/{k}"), out);
            }
        }
        (Value::Array(a), Value::Array(b)) if a.len() == b.len() => {
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                diff(x, y, &format!("{path}/{i}"), out);
            }
        }
        _ if expected != actual => {
            out.push(json!({ "path": if path.is_empty() { "/" } else { path }, "expected": expected, "actual": actual }))
        }
        _ => {}
    }
}

fn ring(cfg: &RunConfig, vars: &[&str]) -> Result<std::sync::Arc<Ring>, Failure> {
    let field = if cfg.field.degree() == 1 { cfg.field.clone() } else { FieldCfg::prime(cfg.p)? };
    Ok(Ring::new(field, vars.iter().map(|s| s.to_string()).collect())?)
}

fn fermat(cfg: &RunConfig) -> Result<(Value, Value), Failure> {
    let (p, e_max) = (cfg.p, cfg.e_max);
    let r = ring(cfg, &["x", "y", "z"])?;
    let f = parse_poly("x^3 + y^3 + z^3", &r)?;
    let ideal = Ideal::new(&r, vec![f.clone()])?;
    let nu = nu_sequence_with(&ideal, e_max, cfg.nu_caps())?;
    let c = Q::one() - Q::new(BigInt::one(), BigInt::from(p));
    let mut sharp = Vec::new();
    let mut any = false;
    for e in 1..=e_max {
        let q = (p as u64).pow(e);
        let level = splitting_level(&c, q)?;
        let s = survivor_with(&ideal, level, q, cfg.nu_caps())?.is_some();
        any |= s;
        sharp.push(json!({ "e": e, "q": q, "level": level, "sharp": s }));
    }
    let bounds = fpt_bounds_with(&ideal, e_max, cfg.nu_caps())?;
    let naive = Q::new(BigInt::from(3), BigInt::from(3));
    let m: Vec<Poly> = (0..3).map(|i| Poly::var(&r, i)).collect();
    let b = theorem_b_check(&ideal, &c, &[m], e_max)?;
    let values = json!({
        "polynomial": report::poly(&f),
        "nu": nu,
        "c": report::rational(&c),
        "sharp": sharp,
        "any_level_sharp": any,
        "bounds": { "lower": report::rational(&bounds.lower), "upper": bounds.upper.as_ref().map(report::rational) },
        "limit_target": report::rational(&c),
        "upper_is_limit_target": bounds.upper.as_ref() == Some(&c),
        "naive_bound": {
            "height": 3,
            "degree": 3,
            "value": report::rational(&naive),
            "exceeds_upper": bounds.upper.as_ref().map(|u| naive > *u),
        },
        "theorem_b_conclusion": b.conclusion.tag(),
    });
    Ok((json!({ "p": p, "e_max": e_max }), values))
}

fn chsw(cfg: &RunConfig) -> Result<(Value, Value), Failure> {
    let p = cfg.p as u64;
    let n = 4u64;
    let q = match cfg.q {
        Some(q) => q,
        None => {
            let mut q = p;
            while q < n {
                q *= p;
            }
            q
        }
    };
    let e = frobenius_exponent(cfg.p, q)?;
    if q < n {
        return Err(Failure::usage(format!("q = {q} must be at least {n}")));
    }
    let s = n * (q - 1) - q - 1;
    if s % p == 0 {
        return Err(Failure::usage(format!("p = {p} divides s = {s}")));
    }
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (1..=s).map(|i| format!("y{i}")).collect();
    let vars: Vec<&str> = xs.iter().chain(&ys).map(String::as_str).collect();
    let r = ring(cfg, &vars)?;
    let powers: Vec<String> = xs.iter().map(|x| format!("{x}^{}", q + 1)).collect();
    let text = format!("{}*({}) + ({})^{}", ys.join("*"), powers.join(" + "), xs.join("*"), q - 1);
    let f = parse_poly(&text, &r)?;
    let d = f.total_degree().unwrap_or(0);
    let b: Vec<Poly> = (0..n as usize).map(|i| Poly::var(&r, i)).collect();
    let in_colon = colon_linear_prime(&b, q)?.contains(&f)?;
    let c = Q::new(BigInt::one(), BigInt::from(q - 1));
    let ideal = Ideal::new(&r, vec![f.clone()])?;
    let report = theorem_b_check(&ideal, &c, &[b], e)?;
    let compatible = report.primes.first().is_some_and(|x| x.compatible);
    let levels: Vec<Value> = report.levels.iter().map(|(e, s)| json!({ "e": e, "sharp": s })).collect();
    let values = json!({
        "n": n,
        "s": s,
        "q": q,
        "d": d,
        "c": report::rational(&c),
        "f_in_mq": in_frobenius_max(&f, q),
        "f_in_colon": in_colon,
        "levels": levels,
        "sharp_probe": report.sharp_probe,
        "compatible": compatible,
        "h": report.h,
        "equality": &c * Q::from_integer(d.into()) == Q::from_integer(report.h.into()),
    });
    Ok((json!({ "p": p, "q": q }), values))
}

fn remark_slice() -> Result<Value, Failure> {
    let a = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 3]])?;
    let t = 2;
    let g = gamma_t(&a, t)?;
    let u = vec![Q::new(1.into(), 2.into()), Q::new(3.into(), 2.into())];
    Ok(json!({
        "ideal": "x0, x1^3",
        "t": t,
        "gamma_t": report::polytope(&g),
        "point": report::rationals(&u),
        "in_slice": &u[0] + &u[1] == Q::from_integer(t.into()),
        "in_newton_polytope": in_newton_polytope(&a, &u)?,
        "in_gamma_t": g.contains(&u)?,
    }))
}

fn grunbaum_simplex() -> Result<Value, Failure> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let t = convex_hull(&standard_simplex(n))?;
        let centroid = t.centroid()?;
        let mut normals = vec![vec![Q::one(); n]];
        for i in 0..n {
            normals.push((0..n).map(|j| if i == j { -Q::one() } else { Q::zero() }).collect());
        }
        let mut cuts = Vec::new();
        for normal in normals {
            let r = grunbaum_check(&t, &HalfSpace::through(normal.clone(), &centroid)?)?;
            cuts.push(json!({ "normal": report::rationals(&normal), "ratio": report::rational(&r.ratio), "equality": r.equality }));
        }
        out.push(json!({
            "n": n,
            "bound": report::rational(&grunbaum_bound(n as u32)?),
            "centroid": report::rationals(&centroid),
            "cuts": cuts,
        }));
    }
    Ok(json!({ "simplices": out }))
}

fn davenport_gap() -> Result<Value, Failure> {
    let (t, n) = (1u32, 2usize);
    let pts: Vec<Vec<Q>> =
        (0..=n).map(|i| (0..=n).map(|j| if i == j { Q::from_integer(t.into()) } else { Q::zero() }).collect()).collect();
    let r = davenport_check(&convex_hull(&pts)?, t, n)?;
    let mut v = report::davenport(&r);
    v["t"] = json!(t);
    v["n"] = json!(n);
    Ok(v)
}
