//! Arithmetic in GF(p^s).
//!
//! An element is identified with its index in `[0, q)`: the base-p digits
//! `d_0, d_1, ..., d_{s-1}` of the index are the coefficients of the
//! representing polynomial `d_0 + d_1 x + ...` modulo the field's modulus.
//! Index 0 is zero and index 1 is one.
//!
//! Multiplication goes through log/antilog tables built once at construction.
//! For q <= 256 full addition and multiplication tables are kept as well.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_Q: u64 = 1 << 16;

const TABLE_Q: u32 = 256;

/// An element of a finite field, encoded by its index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct Elem(pub(crate) u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p^s) together with its lookup tables.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<u16>,
    log: Vec<u32>,
    neg: Vec<u16>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}, modulus={:?})", self.p, self.s, self.modulus)
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p), ascending coefficients, used only while
// building fields.

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small, Fermat is fine
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] as u64 * lead_inv as u64 % p as u64;
        for i in 0..=db {
            let sub = factor * b[i] as u64 % p as u64;
            let idx = dr - db + i;
            r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn digits_of(mut index: u32, p: u32, s: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(s as usize);
    for _ in 0..s {
        d.push(index % p);
        index /= p;
    }
    d
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Irreducibility of a monic polynomial of degree >= 1 by trial division
/// against every monic polynomial of degree <= deg/2.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = digits_of(low as u32, p, d as u32);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First irreducible monic polynomial of degree `s` over GF(p), enumerating
/// candidates by the integer encoding of their low coefficients.
fn default_modulus(p: u32, s: u32) -> Vec<u32> {
    let count = (p as u64).pow(s);
    for low in 0..count {
        let mut poly = digits_of(low as u32, p, s);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FiniteField {
    /// Builds GF(p^s). When `modulus` is omitted and `s > 1` a default
    /// irreducible modulus is chosen deterministically.
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if s == 0 {
            return Err(Error::BadArgs("extension degree must be at least 1".into()));
        }
        let q64 = (p as u64).checked_pow(s).unwrap_or(u64::MAX);
        if q64 > MAX_Q {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != s as usize + 1 {
                    return Err(Error::WrongDegree { expected: s as usize + 1, got: m.len() });
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::BadArgs(format!("modulus coefficient {c} is not in GF({p})")));
                }
                if m[s as usize] != 1 {
                    return Err(Error::NotMonic);
                }
                if s > 1 && !is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                if s == 1 {
                    Vec::new()
                } else {
                    m.to_vec()
                }
            }
            None if s > 1 => default_modulus(p, s),
            None => Vec::new(),
        };
        Ok(Self::build(p, s, q, modulus))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn build(p: u32, s: u32, q: u32, modulus: Vec<u32>) -> Self {
        let slow_mul = |a: u32, b: u32| -> u32 {
            if s == 1 {
                return ((a as u64 * b as u64) % p as u64) as u32;
            }
            let da = digits_of(a, p, s);
            let db = digits_of(b, p, s);
            let mut prod = vec![0u32; 2 * s as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
                }
            }
            let mut r = poly_rem(&prod, &modulus, p);
            r.resize(s as usize, 0);
            index_of(&r, p)
        };

        let order = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * order.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut generator = Elem::ONE;
        if q == 2 {
            exp[0] = 1;
            exp[1] = 1;
        } else {
            'search: for g in 2..q {
                let mut x = 1u32;
                for i in 0..order {
                    exp[i] = x as u16;
                    x = slow_mul(x, g);
                    if x == 1 && i + 1 < order {
                        continue 'search;
                    }
                }
                generator = Elem(g as u16);
                break;
            }
            for i in 0..order {
                exp[order + i] = exp[i];
            }
        }
        for (i, &e) in exp[..order].iter().enumerate() {
            log[e as usize] = i as u32;
        }

        let neg: Vec<u16> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits_of(a, p, s).into_iter().map(|x| (p - x) % p).collect();
                index_of(&d, p) as u16
            })
            .collect();

        let mut field = FiniteField { p, s, q, modulus, generator, exp, log, neg, add_table: None, mul_table: None };
        if q <= TABLE_Q {
            let n = q as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[a as usize * n + b as usize] = field.add_digits(a, b) as u16;
                    mul[a as usize * n + b as usize] = field.mul_log(Elem(a as u16), Elem(b as u16)).0;
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn s(&self) -> u32 {
        self.s
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Ascending coefficients of the modulus; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The smallest-index multiplicative generator.
    pub fn primitive_element(&self) -> Elem {
        self.generator
    }

    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index >= self.q as u64 {
            return Err(Error::ElementOutOfRange { index, q: self.q });
        }
        Ok(Elem(index as u16))
    }

    /// Maps an integer into the prime subfield (`n mod p`).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(|i| Elem(i as u16))
    }

    pub fn nonzero_elements(&self) -> Vec<Elem> {
        (1..self.q).map(|i| Elem(i as u16)).collect()
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        digits_of(a.index(), self.p, self.s)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.s == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    fn mul_log(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => Elem(t[a.0 as usize * self.q as usize + b.0 as usize]),
            None => Elem(self.add_digits(a.index(), b.index()) as u16),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => Elem(t[a.0 as usize * self.q as usize + b.0 as usize]),
            None => self.mul_log(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(Elem(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64 * (e % order) % order;
        Elem(self.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Ok(n / gcd(n, l))
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
