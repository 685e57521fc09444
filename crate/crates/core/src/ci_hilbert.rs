//! Hilbert functions of powers of complete intersections of `n` forms of
//! degree `d` in `n + 1` variables.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::FieldCfg;
use crate::groebner::{height, Ideal};
use crate::monomial::for_each_composition;
use crate::poly::{ExpVec, Poly, Ring};

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Coefficients of `(1 + t + ... + t^{d-1})^n`, the numerator left after
/// cancelling `(1 - t)^n` from `(1 - t^d)^n / (1 - t)^{n+1}`.
fn numerator(n: u32, d: u32) -> Vec<u128> {
    let mut acc = vec![1u128];
    for _ in 0..n {
        let mut next = vec![0u128; acc.len() + d as usize - 1];
        for (i, a) in acc.iter().enumerate() {
            for slot in &mut next[i..i + d as usize] {
                *slot += a;
            }
        }
        acc = next;
    }
    acc
}

/// Degree-`t` coefficient of `(1 - t^d)^n / (1 - t)^{n+1}`.
pub fn ci_series_coeff(n: u32, d: u32, t: u64) -> u128 {
    if d == 0 {
        return 0;
    }
    let num = numerator(n, d);
    // dividing by the remaining 1 - t takes partial sums
    num.iter().take((t as usize).saturating_add(1)).sum()
}

/// `H(R/I^s, t)` for a complete intersection `I` of `n` forms of degree `d`
/// in `n + 1` variables: the sum over `a` with `|a| <= s - 1` of the series
/// coefficient at `t - d |a|`.
pub fn ci_power_hilbert(n: u32, d: u32, s: u32, t: u64) -> u128 {
    if n == 0 || s == 0 {
        // no forms: R = k[x_0]; s = 0: I^0 = R
        return if s == 0 { 0 } else { 1 };
    }
    let num = numerator(n, d);
    let prefix: Vec<u128> = num
        .iter()
        .scan(0u128, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let coeff = |k: u64| -> u128 { prefix[(k as usize).min(prefix.len() - 1)] };
    (0..s as u64)
        .filter(|&k| d as u64 * k <= t)
        .map(|k| binom(k + n as u64 - 1, n as u64 - 1) * coeff(t - d as u64 * k))
        .sum()
}

/// Threshold `(d - 1) n + d (s - 1)` from which the Hilbert function is
/// constant, and that constant `binom(n + s - 1, n) d^n`.
pub fn ci_power_hilbert_stable(n: u32, d: u32, s: u32) -> (u64, u128) {
    let threshold = (d as u64).saturating_sub(1) * n as u64 + d as u64 * (s as u64).saturating_sub(1);
    let value = binom(n as u64 + s as u64 - 1, n as u64) * (d as u128).pow(n);
    (threshold, value)
}

/// A form of degree `d` with independent uniform coefficients.
pub fn random_form(ring: &Arc<Ring>, d: u32, rng: &mut impl Rng) -> Result<Poly> {
    let field = ring.field();
    let mut terms = Vec::new();
    let mut err = None;
    for_each_composition(ring.nvars(), d, |e| match ExpVec::new(e.to_vec()) {
        Ok(e) => terms.push((e, field.element(rng.gen_range(0..field.order())))),
        Err(x) => err = Some(x),
    });
    if let Some(x) = err {
        return Err(x);
    }
    Poly::from_terms(ring, terms)
}

/// `n` random forms of degree `d` in `n + 1` variables, resampled until the
/// ideal has height `n` (so the forms are a regular sequence).
pub fn generic_ci(field: &FieldCfg, n: u32, d: u32, rng: &mut impl Rng, attempts: usize) -> Result<Ideal> {
    if n == 0 || d == 0 {
        return Err(Error::Precondition("need n >= 1 and d >= 1".into()));
    }
    let ring = Ring::indexed(field.clone(), "x", n as usize + 1)?;
    for _ in 0..attempts {
        let gens = (0..n).map(|_| random_form(&ring, d, rng)).collect::<Result<Vec<_>>>()?;
        if gens.iter().any(Poly::is_zero) {
            continue;
        }
        let ideal = Ideal::new(&ring, gens)?;
        if height(&ideal)? == n as usize {
            return Ok(ideal);
        }
    }
    Err(Error::ResourceCap(format!("no complete intersection found in {attempts} draws")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::hilbert_value;
    use rand::SeedableRng;

    #[test]
    fn series_coefficients() {
        assert_eq!(ci_series_coeff(1, 2, 5), 2);
        for (n, d) in [(1, 1), (2, 3), (4, 2)] {
            assert_eq!(ci_series_coeff(n, d, 0), 1);
        }
        let row: Vec<u128> = (0..6).map(|t| ci_series_coeff(2, 2, t)).collect();
        assert_eq!(row, vec![1, 3, 4, 4, 4, 4]);
    }

    #[test]
    fn power_values() {
        for t in 0..8 {
            assert_eq!(ci_power_hilbert(2, 3, 1, t), ci_series_coeff(2, 3, t));
        }
        assert_eq!(ci_power_hilbert(2, 2, 2, 3), 10);
        assert_eq!(ci_power_hilbert(2, 2, 2, 4), 12);
    }

    #[test]
    fn stable_values() {
        assert_eq!(ci_power_hilbert_stable(1, 2, 1), (1, 2));
        assert_eq!(ci_power_hilbert_stable(2, 2, 2), (4, 12));
        assert_eq!(ci_power_hilbert_stable(3, 1, 1), (0, 1));
    }

    #[test]
    fn agrees_with_groebner_on_a_generic_instance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let field = FieldCfg::prime(101).unwrap();
        let i = generic_ci(&field, 2, 2, &mut rng, 20).unwrap();
        let i2 = i.pow(2).unwrap();
        for t in 0..8 {
            assert_eq!(hilbert_value(&i2, t).unwrap() as u128, ci_power_hilbert(2, 2, 2, t as u64), "t = {t}");
        }
    }
}
