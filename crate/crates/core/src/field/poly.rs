//! Dense univariate polynomials over a [`BaseField`], stored as coefficient
//! vectors (lowest degree first) of element encodings.
//!
//! These routines back the irreducibility test, the modulus search and
//! inversion in both levels of the tower. Inputs need not be trimmed; outputs
//! always are (no trailing zero coefficients, the zero polynomial is empty).

use super::BaseField;

pub type Poly = Vec<u8>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of `a`, `None` for the zero polynomial.
pub fn degree(a: &[u8]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &BaseField, a: &[u8], b: &[u8]) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.add_enc(x, y)
        })
        .collect();
    trim(out)
}

pub fn sub(f: &BaseField, a: &[u8], b: &[u8]) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.sub_enc(x, y)
        })
        .collect();
    trim(out)
}

pub fn scale(f: &BaseField, c: u8, a: &[u8]) -> Poly {
    trim(a.iter().map(|&x| f.mul_enc(c, x)).collect())
}

pub fn mul(f: &BaseField, a: &[u8], b: &[u8]) -> Poly {
    let (Some(da), Some(db)) = (degree(a), degree(b)) else {
        return Vec::new();
    };
    let mut out = vec![0u8; da + db + 1];
    for (i, &x) in a[..=da].iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b[..=db].iter().enumerate() {
            out[i + j] = f.add_enc(out[i + j], f.mul_enc(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by the nonzero polynomial `b`.
pub fn divrem(f: &BaseField, a: &[u8], b: &[u8]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv_enc(b[db]).expect("nonzero leading coefficient");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let mut quo = vec![0u8; da - db + 1];
    for i in (db..=da).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let t = f.mul_enc(c, lead_inv);
        quo[i - db] = t;
        for j in 0..=db {
            let k = i - db + j;
            r[k] = f.sub_enc(r[k], f.mul_enc(t, b[j]));
        }
    }
    (trim(quo), trim(r))
}

pub fn rem(f: &BaseField, a: &[u8], b: &[u8]) -> Poly {
    divrem(f, a, b).1
}

pub fn mulmod(f: &BaseField, a: &[u8], b: &[u8], modulus: &[u8]) -> Poly {
    rem(f, &mul(f, a, b), modulus)
}

pub fn powmod(f: &BaseField, base: &[u8], mut exp: u128, modulus: &[u8]) -> Poly {
    let mut acc: Poly = rem(f, &[1], modulus);
    let mut b = rem(f, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &b, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            b = mulmod(f, &b, &b, modulus);
        }
    }
    acc
}

pub fn make_monic(f: &BaseField, a: &[u8]) -> Poly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv_enc(a[d]).expect("nonzero leading coefficient");
            scale(f, inv, &a[..=d])
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &BaseField, a: &[u8], b: &[u8]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm, or
/// `None` when the two are not coprime.
pub fn inverse_mod(f: &BaseField, a: &[u8], modulus: &[u8]) -> Option<Poly> {
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = rem(f, a, modulus);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![1];
    while !r1.is_empty() {
        let (quo, r2) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &quo, &s1));
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; invertible only when it is a nonzero constant
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = f.inv_enc(r0[0])?;
    Some(rem(f, &scale(f, c, &s0), modulus))
}

fn prime_divisors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut r = 2;
    while r * r <= d {
        if d % r == 0 {
            out.push(r);
            while d % r == 0 {
                d /= r;
            }
        }
        r += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Rabin's test: a degree-`d` polynomial is irreducible over F_q iff
/// x^(q^d) = x mod poly and gcd(x^(q^(d/r)) - x, poly) = 1 for every prime r | d.
pub fn is_irreducible(f: &BaseField, poly: &[u8]) -> bool {
    let Some(d) = degree(poly) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let poly = make_monic(f, poly);
    let q = f.order() as u128;
    let x: Poly = vec![0, 1];
    let x_mod = rem(f, &x, &poly);
    // frob[i] = x^(q^i) mod poly
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x_mod.clone());
    for i in 1..=d {
        let next = powmod(f, &frob[i - 1], q, &poly);
        frob.push(next);
    }
    if frob[d] != x_mod {
        return false;
    }
    prime_divisors(d).into_iter().all(|r| {
        let diff = sub(f, &frob[d / r], &x);
        degree(&gcd(f, &diff, &poly)) == Some(0)
    })
}

/// Integer digits of `value` in base `base`, least significant first, padded
/// to `len` digits.
pub fn digits(mut value: u64, base: u64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((value % base) as u8);
        value /= base;
    }
    out
}
