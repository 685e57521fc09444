//! Packed-exponent multiplication modulo `m^[q]`.
//!
//! Each exponent gets a field of `w` bits with `q <= 2^(w-1)`. Exponents of
//! surviving terms are below `q`, so the sum of two fits in `w - 1` bits plus
//! a carry-free guard bit. Adding `2^(w-1) - q` to every field sets the guard
//! bit exactly when the sum reaches `q`, so one mask test per product decides
//! truncation. Variable 0 sits in the high bits, so integer order is lex.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::field::{Fe, FieldCfg};
use crate::poly::{ExpVec, Poly, Ring};

/// Factors with at most this many terms are multiplied by merging.
const MERGE_LIMIT: usize = 8;

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    n: usize,
    width: u32,
    offset: u128,
    guard: u128,
}

impl Layout {
    /// `None` when the packed form does not fit in 128 bits.
    pub(crate) fn new(n: usize, q: u64) -> Option<Layout> {
        if q < 2 || n == 0 {
            return None;
        }
        let width = 64 - (q - 1).leading_zeros() + 1;
        if (n as u32).checked_mul(width)? > 128 {
            return None;
        }
        let mut offset = 0u128;
        let mut guard = 0u128;
        let off = (1u128 << (width - 1)) - q as u128;
        for i in 0..n {
            let shift = width * i as u32;
            offset |= off << shift;
            guard |= 1u128 << (shift + width - 1);
        }
        Some(Layout { n, width, offset, guard })
    }

    fn shift(&self, var: usize) -> u32 {
        self.width * (self.n - 1 - var) as u32
    }

    fn pack(&self, e: &ExpVec) -> u128 {
        (0..self.n).fold(0u128, |acc, i| acc | (e.get(i) as u128) << self.shift(i))
    }

    fn unpack(&self, k: u128) -> ExpVec {
        let mask = (1u128 << self.width) - 1;
        let exps = (0..self.n).map(|i| ((k >> self.shift(i)) & mask) as u32).collect();
        ExpVec::new(exps).expect("small exponents")
    }

    #[inline]
    fn survives(&self, sum: u128) -> bool {
        (sum.wrapping_add(self.offset) & self.guard) == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct TruncPoly {
    terms: Vec<(u128, Fe)>,
}

impl TruncPoly {
    /// `p` must already be truncated.
    pub(crate) fn from_poly(p: &Poly, layout: &Layout) -> TruncPoly {
        TruncPoly { terms: p.terms().iter().map(|(e, c)| (layout.pack(e), *c)).collect() }
    }

    pub(crate) fn one(_layout: &Layout, field: &FieldCfg) -> TruncPoly {
        TruncPoly { terms: vec![(0, field.one())] }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn monic(&self, field: &FieldCfg) -> TruncPoly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, lead)) => {
                let inv = field.inv(lead).expect("nonzero leading coefficient");
                TruncPoly { terms: self.terms.iter().map(|&(k, c)| (k, field.mul(c, inv))).collect() }
            }
        }
    }

    pub(crate) fn mul(&self, other: &TruncPoly, layout: &Layout, field: &FieldCfg) -> TruncPoly {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() <= MERGE_LIMIT {
            return big.mul_by_few(small, layout, field);
        }
        if field.degree() == 1 {
            return self.mul_prime(other, layout, field.p() as u64);
        }
        let mut acc: FxHashMap<u128, Fe> = FxHashMap::default();
        for &(a, ca) in &self.terms {
            for &(b, cb) in &other.terms {
                let s = a + b;
                if !layout.survives(s) {
                    continue;
                }
                let slot = acc.entry(s).or_insert(Fe::ZERO);
                *slot = field.add(*slot, field.mul(ca, cb));
            }
        }
        let mut terms: Vec<(u128, Fe)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        TruncPoly { terms }
    }

    // Prime-field path: coefficients accumulate as plain integers and are
    // reduced once per output term.
    fn mul_prime(&self, other: &TruncPoly, layout: &Layout, p: u64) -> TruncPoly {
        let mut acc: FxHashMap<u128, u64> = FxHashMap::default();
        let limit = u64::MAX - p * p;
        for &(a, ca) in &self.terms {
            let ca = ca.0[0] as u64;
            for &(b, cb) in &other.terms {
                let s = a + b;
                if !layout.survives(s) {
                    continue;
                }
                let slot = acc.entry(s).or_insert(0);
                *slot += ca * cb.0[0] as u64;
                if *slot > limit {
                    *slot %= p;
                }
            }
        }
        let mut terms: Vec<(u128, Fe)> = acc
            .into_iter()
            .filter_map(|(k, v)| {
                let v = v % p;
                (v != 0).then(|| (k, Fe([v as u16, 0, 0, 0])))
            })
            .collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        TruncPoly { terms }
    }

    // With few terms in `small`, each shifted copy of `self` stays sorted
    // (adding a fixed packed exponent preserves order), so the product is a
    // k-way merge without hashing.
    fn mul_by_few(&self, small: &TruncPoly, layout: &Layout, field: &FieldCfg) -> TruncPoly {
        let k = small.terms.len();
        let mut pos = vec![0usize; k];
        let next = |j: usize, pos: &mut [usize]| -> Option<u128> {
            let shift = small.terms[j].0;
            while let Some(&(a, _)) = self.terms.get(pos[j]) {
                if layout.survives(a + shift) {
                    return Some(a + shift);
                }
                pos[j] += 1;
            }
            None
        };
        let mut heads: Vec<Option<u128>> = (0..k).map(|j| next(j, &mut pos)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        loop {
            let Some(top) = heads.iter().flatten().max().copied() else { break };
            let mut c = Fe::ZERO;
            for j in 0..k {
                if heads[j] == Some(top) {
                    c = field.add(c, field.mul(self.terms[pos[j]].1, small.terms[j].1));
                    pos[j] += 1;
                    heads[j] = next(j, &mut pos);
                }
            }
            if !c.is_zero() {
                terms.push((top, c));
            }
        }
        TruncPoly { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Arc<Ring>, layout: &Layout) -> Poly {
        let terms = self.terms.iter().map(|(k, c)| (layout.unpack(*k), *c)).collect();
        Poly::from_sorted_terms(ring, terms)
    }
}
