use fptkit::ci_hilbert::{ci_power_hilbert, ci_power_hilbert_stable};
use fptkit::classify::default_candidates;
use fptkit::convex::{convex_hull, grunbaum_check, HalfSpace, QVec, Q};
use fptkit::frobenius::{
    colon_linear_prime, fpt_bounds_with, nu_sequence_with, splitting_level, survivor_with, two_prime_colon_intersection,
    two_prime_colon_sum,
};
use fptkit::groebner::{buchberger_with, height, hilbert_value};
use fptkit::monomial::{integral_closure, monomial_height, monomial_multiplicity, newton_polytope, pure_power_bounds};
use fptkit::{
    essential_codim, monomial_fpt, parse_poly, parse_poly_list, restrict_hyperplane, theorem_a_verdict, theorem_b_check,
    Ideal, MonomialIdeal, Poly,
};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::report;
use crate::{reproduce, Command, Failure, RunConfig};

pub(crate) fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Value, Failure> {
    match cmd {
        Command::FptMonomial { ideal } => fpt_monomial(cfg, ideal),
        Command::Closure { ideal } => closure(cfg, ideal),
        Command::Nu { ideal } => nu(cfg, ideal),
        Command::FptBounds { ideal } => Ok(report::bounds(&fpt_bounds_with(&parse_ideal(cfg, ideal)?, cfg.e_max, cfg.nu_caps())?)),
        Command::SharpTest { ideal, c } => sharp_test(cfg, ideal, c),
        Command::Colon { primes, members } => colon(cfg, primes, members),
        Command::Gb { ideal } => gb(cfg, ideal, false),
        Command::Ini { ideal } => gb(cfg, ideal, true),
        Command::Hilbert { ideal, t_max } => {
            let i = parse_ideal(cfg, ideal)?;
            let values = (0..=*t_max).map(|t| hilbert_value(&i, t)).collect::<Result<Vec<_>, _>>()?;
            Ok(json!({ "values": values }))
        }
        Command::Height { ideal } => Ok(json!({ "height": height(&parse_ideal(cfg, ideal)?)? })),
        Command::CiHilbert { n, d, s, t_max } => ci_hilbert(*n, *d, *s, *t_max),
        Command::Ess { ideal } => {
            let i = parse_ideal(cfg, ideal)?;
            Ok(report::ess(i.ring().field(), &essential_codim(&i, &cfg.ess_config())?))
        }
        Command::TheoremA { ideal } => theorem_a(cfg, ideal),
        Command::TheoremB { ideal, c, primes } => theorem_b(cfg, ideal, c, primes),
        Command::Grunbaum { n, points, normal } => grunbaum(*n, points.as_deref(), normal.as_deref()),
        Command::Davenport { t, n, points } => davenport(*t, *n, points.as_deref()),
        Command::Restrict { ideal, form } => {
            let ring = cfg.ring()?;
            let i = parse_ideal(cfg, ideal)?;
            let cut = restrict_hyperplane(&i, &parse_poly(form, &ring)?)?;
            Ok(json!({ "vars": cut.ring().vars(), "generators": report::polys(cut.gens()) }))
        }
        Command::Reproduce { name, golden } => {
            let text = match golden {
                Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?,
                None => name.golden().to_string(),
            };
            reproduce::run(*name, cfg, &text)
        }
    }
}

pub(crate) fn parse_ideal(cfg: &RunConfig, text: &str) -> Result<Ideal, Failure> {
    let ring = cfg.ring()?;
    Ok(Ideal::new(&ring, parse_poly_list(text, &ring)?)?)
}

fn parse_monomial(cfg: &RunConfig, text: &str) -> Result<MonomialIdeal, Failure> {
    parse_ideal(cfg, text)?
        .monomial_part()
        .ok_or_else(|| Failure::usage("generators must be monomials"))
}

/// `a`, `-a`, `a/b`.
pub(crate) fn parse_rational(text: &str) -> Result<Q, Failure> {
    let bad = || Failure::usage(format!("`{text}` is not a rational number"));
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

fn parse_vector(text: &str) -> Result<QVec, Failure> {
    text.split(',').map(parse_rational).collect()
}

/// `a,b;c,d;...`
fn parse_points(text: &str) -> Result<Vec<QVec>, Failure> {
    let pts: Vec<QVec> = text.split(';').filter(|s| !s.trim().is_empty()).map(parse_vector).collect::<Result<_, _>>()?;
    if pts.is_empty() || pts.iter().any(|p| p.len() != pts[0].len()) {
        return Err(Failure::usage("points must be nonempty and of one dimension"));
    }
    Ok(pts)
}

fn fpt_monomial(cfg: &RunConfig, text: &str) -> Result<Value, Failure> {
    let a = parse_monomial(cfg, text)?;
    Ok(json!({
        "ideal": report::monomial_ideal(&a, &cfg.vars),
        "fpt": report::rational(&monomial_fpt(&a)?),
        "newton_polytope": report::polytope(&newton_polytope(&a)?),
    }))
}

fn closure(cfg: &RunConfig, text: &str) -> Result<Value, Failure> {
    let a = parse_monomial(cfg, text)?;
    let closure = integral_closure(&a)?;
    let multiplicity = match pure_power_bounds(&a) {
        Some(_) => Some(monomial_multiplicity(&a)?),
        None => None,
    };
    Ok(json!({
        "ideal": report::monomial_ideal(&a, &cfg.vars),
        "closure": report::monomial_ideal(&closure, &cfg.vars),
        "integrally_closed": closure == a,
        "fpt": report::rational(&monomial_fpt(&a)?),
        "height": monomial_height(&a)?,
        "multiplicity": multiplicity,
    }))
}

fn nu(cfg: &RunConfig, text: &str) -> Result<Value, Failure> {
    let i = parse_ideal(cfg, text)?;
    let seq = nu_sequence_with(&i, cfg.e_max, cfg.nu_caps())?;
    let p = cfg.p as u64;
    let levels: Vec<Value> = seq
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let q = p.pow(k as u32 + 1);
            json!({ "e": k + 1, "q": q, "nu": v, "ratio": report::rational(&Q::new(v.into(), q.into())) })
        })
        .collect();
    Ok(json!({ "nu": seq, "levels": levels }))
}

fn sharp_test(cfg: &RunConfig, text: &str, c: &str) -> Result<Value, Failure> {
    let i = parse_ideal(cfg, text)?;
    let c = parse_rational(c)?;
    if c <= Q::zero() {
        return Err(Failure::usage("c must be positive"));
    }
    let p = cfg.p as u64;
    let mut levels = Vec::new();
    let mut any = false;
    for e in 1..=cfg.e_max {
        let q = p.pow(e);
        let level = splitting_level(&c, q)?;
        let witness = survivor_with(&i, level, q, cfg.nu_caps())?;
        any |= witness.is_some();
        levels.push(json!({
            "e": e,
            "q": q,
            "level": level,
            "sharp": witness.is_some(),
            "witness": witness.as_ref().map(report::poly),
        }));
    }
    Ok(json!({
        "c": report::rational(&c),
        "levels": levels,
        "aggregate": { "label": "bounded-probe", "e_max": cfg.e_max, "any_level_sharp": any },
    }))
}

fn colon(cfg: &RunConfig, primes: &[String], members: &[String]) -> Result<Value, Failure> {
    let ring = cfg.ring()?;
    let q = cfg.q.unwrap_or(cfg.p as u64);
    let forms: Vec<Vec<Poly>> = primes.iter().map(|t| parse_poly_list(t, &ring)).collect::<Result<_, _>>()?;
    let members: Vec<Poly> = members.iter().map(|t| parse_poly(t, &ring)).collect::<Result<_, _>>()?;
    let (main, extra) = match forms.as_slice() {
        [a] => (colon_linear_prime(a, q)?, None),
        [a, b] => (two_prime_colon_intersection(a, b, q)?, Some(two_prime_colon_sum(a, b, q)?)),
        _ => return Err(Failure::usage("colon takes one or two --prime options")),
    };
    let membership: Vec<Value> =
        members.iter().map(|f| Ok(json!({ "element": report::poly(f), "member": main.contains(f)? }))).collect::<Result<_, Failure>>()?;
    let mut out = json!({
        "colon": report::colon(&main, &ring),
        "members": membership,
    });
    if let Some(sum) = extra {
        out["bracket_sum"] = report::colon(&sum, &ring);
    }
    Ok(out)
}

fn gb(cfg: &RunConfig, text: &str, initial_only: bool) -> Result<Value, Failure> {
    let i = parse_ideal(cfg, text)?;
    let gb = buchberger_with(&i, &cfg.order(i.nvars()), cfg.gb_caps())?;
    let ini = report::monomial_ideal(&gb.initial_ideal(), &cfg.vars);
    if initial_only {
        return Ok(json!({ "initial_ideal": ini }));
    }
    Ok(json!({ "basis": report::polys(gb.elements()), "initial_ideal": ini }))
}

fn big(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn ci_hilbert(n: u32, d: u32, s: u32, t_max: Option<u64>) -> Result<Value, Failure> {
    if n == 0 || d == 0 || s == 0 {
        return Err(Failure::usage("n, d and s must be positive"));
    }
    let (threshold, stable) = ci_power_hilbert_stable(n, d, s);
    let t_max = t_max.unwrap_or(threshold + 4);
    let values: Vec<Value> = (0..=t_max).map(|t| big(ci_power_hilbert(n, d, s, t))).collect();
    Ok(json!({ "values": values, "stable_threshold": threshold, "stable_value": big(stable) }))
}

fn theorem_a(cfg: &RunConfig, text: &str) -> Result<Value, Failure> {
    let i = parse_ideal(cfg, text)?;
    let r = theorem_a_verdict(&i, cfg.e_max, &cfg.ess_config())?;
    Ok(json!({
        "h": r.h,
        "d": r.d,
        "ratio": report::rational(&r.ratio()),
        "ess": report::ess(i.ring().field(), &r.ess),
        "fpt_bounds": report::bounds(&r.fpt_bounds),
        "verdict": r.verdict.tag(),
        "closure_witness": r.closure_witness.as_ref().map(|a| {
            let ys: Vec<String> = (0..a.nvars()).map(|k| format!("y{k}")).collect();
            report::monomial_ideal(a, &ys)
        }),
    }))
}

fn theorem_b(cfg: &RunConfig, text: &str, c: &str, primes: &[String]) -> Result<Value, Failure> {
    let i = parse_ideal(cfg, text)?;
    let c = parse_rational(c)?;
    let candidates = if primes.is_empty() {
        default_candidates(&i, cfg.caps.max_points)?
    } else {
        primes.iter().map(|t| parse_poly_list(t, i.ring())).collect::<Result<_, _>>()?
    };
    let r = theorem_b_check(&i, &c, &candidates, cfg.e_max)?;
    Ok(theorem_b_json(&r))
}

pub(crate) fn theorem_b_json(r: &fptkit::TheoremBReport) -> Value {
    json!({
        "c": report::rational(&r.c),
        "d": r.d,
        "levels": r.levels.iter().map(|(e, s)| json!({ "e": e, "sharp": s })).collect::<Vec<_>>(),
        "e_probed": r.e_probed,
        "sharp_probe": r.sharp_probe,
        "witness": r.witness.as_ref().map(report::poly),
        "primes": r.primes.iter().map(report::prime_check).collect::<Vec<_>>(),
        "h": r.h,
        "bound_holds": r.bound_holds,
        "equality": r.equality,
        "conclusion": r.conclusion.tag(),
    })
}

pub(crate) fn standard_simplex(n: usize) -> Vec<QVec> {
    let mut pts = vec![vec![Q::zero(); n]];
    for i in 0..n {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::one();
        pts.push(v);
    }
    pts
}

fn grunbaum(n: usize, points: Option<&str>, normal: Option<&str>) -> Result<Value, Failure> {
    let pts = match points {
        Some(t) => parse_points(t)?,
        None => {
            if n == 0 {
                return Err(Failure::usage("n must be positive"));
            }
            standard_simplex(n)
        }
    };
    let dim = pts[0].len();
    let normal = match normal {
        Some(t) => parse_vector(t)?,
        None => vec![Q::one(); dim],
    };
    if normal.len() != dim {
        return Err(Failure::usage(format!("normal must have {dim} coordinates")));
    }
    let p = convex_hull(&pts)?;
    let centroid = p.centroid()?;
    let h = HalfSpace::through(normal.clone(), &centroid)?;
    let r = grunbaum_check(&p, &h)?;
    Ok(json!({
        "polytope": report::polytope(&p),
        "centroid": report::rationals(&centroid),
        "normal": report::rationals(&normal),
        "cut": report::grunbaum(&r),
    }))
}

fn davenport(t: u32, n: usize, points: Option<&str>) -> Result<Value, Failure> {
    let pts = match points {
        Some(text) => parse_points(text)?,
        None => (0..=n)
            .map(|i| (0..=n).map(|j| if i == j { Q::from_integer(t.into()) } else { Q::zero() }).collect())
            .collect(),
    };
    let p = convex_hull(&pts)?;
    let r = fptkit::convex::davenport_check(&p, t, n)?;
    Ok(json!({ "t": t, "n": n, "polytope": report::polytope(&p), "check": report::davenport(&r) }))
}
