//! Univariate polynomials over a `FiniteField`, ascending coefficients.

use crate::gf::{Elem, FiniteField};

pub(crate) type Poly = Vec<Elem>;

pub(crate) fn trim(a: &mut Poly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[Elem]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn rem(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = f.mul(r[dr], lead_inv);
        for i in 0..=db {
            let idx = dr - db + i;
            r[idx] = f.sub(r[idx], f.mul(factor, b[i]));
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn monic(f: &FiniteField, a: &[Elem]) -> Poly {
    let mut a = a.to_vec();
    trim(&mut a);
    if let Some(&lead) = a.last() {
        let inv = f.inv(lead).expect("nonzero");
        for c in &mut a {
            *c = f.mul(*c, inv);
        }
    }
    a
}

/// Monic greatest common divisor; the zero polynomial when both are zero.
pub(crate) fn gcd(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub(crate) fn mul(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn eval(f: &FiniteField, a: &[Elem], x: Elem) -> Elem {
    a.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// x^n - 1
pub(crate) fn x_n_minus_one(f: &FiniteField, n: usize) -> Poly {
    let mut p = vec![Elem::ZERO; n + 1];
    p[0] = f.neg(Elem::ONE);
    p[n] = Elem::ONE;
    p
}
