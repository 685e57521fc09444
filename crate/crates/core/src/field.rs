//! Prime fields and small extensions `F_{p^s}`.
//!
//! Elements are stored as coefficient vectors of length `s <= 4` with respect
//! to the power basis of a fixed monic irreducible modulus.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_P: u32 = 257;
/// Largest supported extension degree.
pub const MAX_S: u32 = 4;

/// An element of `F_{p^s}`; the meaning of the coefficients depends on the
/// [`FieldCfg`] it belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub(crate) [u16; 4]);

impl Fe {
    pub const ZERO: Fe = Fe([0; 4]);

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Coefficients with respect to the power basis (low degree first).
    pub fn coeffs(&self) -> [u16; 4] {
        self.0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0[1..] == [0, 0, 0] {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "{:?}", self.0)
        }
    }
}

/// Configuration of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldCfg {
    p: u32,
    s: u32,
    /// Monic modulus, low degree first, length `s + 1`; empty when `s == 1`.
    modulus: Vec<u32>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCfg {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_P {
            return Err(Error::Unsupported(format!("p = {p} exceeds {MAX_P}")));
        }
        Ok(FieldCfg { p, s: 1, modulus: Vec::new() })
    }

    /// `F_{p^s}` presented by `modulus` (coefficients low degree first, length
    /// `s + 1`). The modulus is normalized to be monic and its irreducibility
    /// is checked exhaustively.
    pub fn extension(p: u32, modulus: &[u32]) -> Result<Self> {
        let base = Self::prime(p)?;
        let mut m: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 2 {
            return Err(Error::Reducible(modulus.to_vec()));
        }
        let s = (m.len() - 1) as u32;
        if s == 1 {
            return Ok(base);
        }
        if s > MAX_S {
            return Err(Error::Unsupported(format!("extension degree {s} exceeds {MAX_S}")));
        }
        let lead_inv = pow_mod(*m.last().unwrap(), p - 2, p);
        for c in m.iter_mut() {
            *c = *c * lead_inv % p;
        }
        if !is_irreducible(&m, p) {
            return Err(Error::Reducible(modulus.to_vec()));
        }
        Ok(FieldCfg { p, s, modulus: m })
    }

    /// `F_{p^s}` with the lexicographically first monic irreducible modulus.
    pub fn with_degree(p: u32, s: u32) -> Result<Self> {
        if s == 1 {
            return Self::prime(p);
        }
        Self::prime(p)?;
        if s == 0 || s > MAX_S {
            return Err(Error::Unsupported(format!("extension degree {s}")));
        }
        let count = (p as u64).pow(s);
        for idx in 0..count {
            let mut m = digits(idx, p, s as usize);
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(FieldCfg { p, s, modulus: m });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements `p^s`.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.s)
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe([1, 0, 0, 0])
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        Fe([(n % self.p as u64) as u16, 0, 0, 0])
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        let p = self.p as i64;
        Fe([n.rem_euclid(p) as u16, 0, 0, 0])
    }

    /// The element with power-basis coefficients `c` (reduced mod p).
    pub fn from_coeffs(&self, c: &[u32]) -> Fe {
        let mut out = [0u16; 4];
        for (i, v) in c.iter().enumerate().take(self.s as usize) {
            out[i] = (v % self.p) as u16;
        }
        Fe(out)
    }

    /// Enumeration index in `0..order()`: base-p digits of the coefficients.
    pub fn index(&self, a: Fe) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.s as usize).rev() {
            idx = idx * self.p as u64 + a.0[i] as u64;
        }
        idx
    }

    pub fn element(&self, idx: u64) -> Fe {
        let d = digits(idx, self.p, self.s as usize);
        self.from_coeffs(&d)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// Whether `a` lies in the prime subfield.
    pub fn is_prime_subfield(&self, a: Fe) -> bool {
        a.0[1..] == [0, 0, 0]
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u16;
        let mut out = [0u16; 4];
        for i in 0..self.s as usize {
            let v = a.0[i] + b.0[i];
            out[i] = if v >= p { v - p } else { v };
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.p as u16;
        let mut out = [0u16; 4];
        for i in 0..self.s as usize {
            out[i] = if a.0[i] == 0 { 0 } else { p - a.0[i] };
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        if self.s == 1 {
            return Fe([((a.0[0] as u32 * b.0[0] as u32) % p) as u16, 0, 0, 0]);
        }
        let s = self.s as usize;
        let mut prod = [0u32; 7];
        for i in 0..s {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..s {
                prod[i + j] = (prod[i + j] + a.0[i] as u32 * b.0[j] as u32) % p;
            }
        }
        for k in (s..2 * s - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..s {
                let sub = c * self.modulus[i] % p;
                prod[k - s + i] = (prod[k - s + i] + p - sub) % p;
            }
        }
        let mut out = [0u16; 4];
        for i in 0..s {
            out[i] = prod[i] as u16;
        }
        Fe(out)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Whether `q` is a power `p^e` with `e >= 0`.
    pub fn is_char_power(&self, q: u64) -> bool {
        char_exponent(self.p, q).is_some()
    }
}

/// `e` with `p^e = q`, if any.
pub fn char_exponent(p: u32, q: u64) -> Option<u32> {
    if q == 0 {
        return None;
    }
    let mut e = 0;
    let mut v = q;
    while v % p as u64 == 0 {
        v /= p as u64;
        e += 1;
    }
    (v == 1).then_some(e)
}

fn digits(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % p as u64) as u32);
        idx /= p as u64;
    }
    out
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo the monic `b` over F_p (low degree first).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Exhaustive check: no monic factor of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for k in 1..=deg / 2 {
        let count = (p as u64).pow(k as u32);
        for idx in 0..count {
            let mut f = digits(idx, p, k);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}
