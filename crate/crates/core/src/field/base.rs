use std::fmt;

use super::poly;
use crate::error::{Error, Result};

/// Element of the base field F_q, identified by its encoding
/// `sum_i c_i p^i` where `c_i` are its F_p-coordinates in the basis
/// `1, y, ..., y^(e-1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseElem(pub u8);

impl BaseElem {
    pub const ZERO: BaseElem = BaseElem(0);
    pub const ONE: BaseElem = BaseElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field F_q = F_p[y]/(g) with full operation tables.
#[derive(Clone)]
pub struct BaseField {
    p: u32,
    e: usize,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("g", &self.modulus)
            .finish()
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for BaseField {}

pub fn is_prime(n: u64) -> bool {
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

/// Writes `n = p^e` for a prime `p`, if possible.
pub fn prime_power(n: u64) -> Option<(u64, usize)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut rest = n;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

impl BaseField {
    /// The prime field F_p, presented as F_p[y]/(y).
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > 256 {
            return Err(Error::FieldTooLarge(p));
        }
        let q = p as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = ((a + b) % q) as u8;
                mul[a * q + b] = ((a * b) % q) as u8;
            }
        }
        let neg = (0..q).map(|a| ((q - a) % q) as u8).collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| (a * b) % q == 1).unwrap() as u8;
        }
        Ok(BaseField {
            p: p as u32,
            e: 1,
            q,
            modulus: vec![0, 1],
            add,
            mul,
            neg,
            inv,
        })
    }

    /// F_(p^e) with the least monic irreducible modulus of degree `e`, where
    /// candidates `a_0 + a_1 y + ... + y^e` are ordered by the integer whose
    /// base-p digits are `(a_0, ..., a_(e-1))`, `a_0` least significant.
    pub fn new(p: u64, e: usize) -> Result<Self> {
        let prime = Self::prime(p)?;
        if e == 0 {
            return Err(Error::DegreeOutOfRange(0));
        }
        let q = (p as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
        if q > 256 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let modulus = least_irreducible(&prime, e);
        Self::build(prime, modulus)
    }

    /// F_p[y]/(g) for an explicit monic irreducible `g` given by F_p
    /// coefficients, lowest degree first.
    pub fn with_modulus(p: u64, g: &[u64]) -> Result<Self> {
        let prime = Self::prime(p)?;
        if g.iter().any(|&c| c >= p) {
            return Err(Error::InvalidDescriptor(format!(
                "coefficients of g must lie in 0..{p}"
            )));
        }
        let g: Vec<u8> = g.iter().map(|&c| c as u8).collect();
        let Some(e) = poly::degree(&g) else {
            return Err(Error::InvalidDescriptor("g is zero".into()));
        };
        if e == 0 || g.len() != e + 1 || g[e] != 1 {
            return Err(Error::InvalidDescriptor(
                "g must be monic of positive degree".into(),
            ));
        }
        let q = (p as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
        if q > 256 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        if !poly::is_irreducible(&prime, &g) {
            return Err(Error::NotIrreducible(format!("{g:?} over F_{p}")));
        }
        Self::build(prime, g)
    }

    fn build(prime: BaseField, modulus: Vec<u8>) -> Result<Self> {
        let p = prime.p as u64;
        let e = modulus.len() - 1;
        if e == 1 {
            // every degree-one modulus gives the same encodings
            return Ok(BaseField { modulus, ..prime });
        }
        let q = p.pow(e as u32) as usize;
        let polys: Vec<Vec<u8>> = (0..q as u64).map(|a| poly::digits(a, p, e)).collect();
        let encode = |c: &[u8]| -> u8 {
            c.iter()
                .rev()
                .fold(0u64, |acc, &d| acc * p + d as u64) as u8
        };
        let pad = |mut c: Vec<u8>| {
            c.resize(e, 0);
            c
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let s = pad(poly::add(&prime, &polys[a], &polys[b]));
                add[a * q + b] = encode(&s);
                let t = pad(poly::mulmod(&prime, &polys[a], &polys[b], &modulus));
                mul[a * q + b] = encode(&t);
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a > 0 {
                let i = poly::inverse_mod(&prime, &polys[a], &modulus)
                    .expect("nonzero residues are invertible modulo an irreducible");
                inv[a] = encode(&pad(i));
            }
        }
        Ok(BaseField {
            p: p as u32,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Defining polynomial g over F_p, lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = BaseElem> {
        (0..self.q).map(|a| BaseElem(a as u8))
    }

    pub fn element(&self, enc: u64) -> Result<BaseElem> {
        if enc < self.q as u64 {
            Ok(BaseElem(enc as u8))
        } else {
            Err(Error::OutOfRange(format!(
                "{enc} is not an element encoding of F_{}",
                self.q
            )))
        }
    }

    /// F_p-coordinates of `a` in the basis `1, y, ..., y^(e-1)`.
    pub fn coordinates(&self, a: BaseElem) -> Vec<u64> {
        poly::digits(a.0 as u64, self.p as u64, self.e)
            .into_iter()
            .map(u64::from)
            .collect()
    }

    pub fn from_coordinates(&self, c: &[u64]) -> Result<BaseElem> {
        if c.len() != self.e || c.iter().any(|&d| d >= self.p as u64) {
            return Err(Error::Parse(format!(
                "expected {} coordinates in 0..{}",
                self.e, self.p
            )));
        }
        let enc = c.iter().rev().fold(0u64, |acc, &d| acc * self.p as u64 + d);
        Ok(BaseElem(enc as u8))
    }

    #[inline]
    pub(crate) fn add_enc(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn sub_enc(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + self.neg[b as usize] as usize]
    }

    #[inline]
    pub(crate) fn mul_enc(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub(crate) fn neg_enc(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub(crate) fn inv_enc(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    #[inline]
    pub fn add(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        BaseElem(self.add_enc(a.0, b.0))
    }

    #[inline]
    pub fn sub(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        BaseElem(self.sub_enc(a.0, b.0))
    }

    #[inline]
    pub fn mul(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        BaseElem(self.mul_enc(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: BaseElem) -> BaseElem {
        BaseElem(self.neg_enc(a.0))
    }

    pub fn inv(&self, a: BaseElem) -> Result<BaseElem> {
        self.inv_enc(a.0).map(BaseElem).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: BaseElem, mut exp: u64) -> BaseElem {
        let mut acc = BaseElem::ONE;
        let mut b = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }
}

/// Least monic irreducible polynomial of degree `d` over `field`, candidates
/// ordered by their low coefficients read as a base-|field| integer.
pub(crate) fn least_irreducible(field: &BaseField, d: usize) -> Vec<u8> {
    let q = field.order() as u64;
    let count = q.checked_pow(d as u32).unwrap_or(u64::MAX);
    for a in 0..count {
        let mut cand = poly::digits(a, q, d);
        cand.push(1);
        if poly::is_irreducible(field, &cand) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_moduli_match_hand_search() {
        assert_eq!(BaseField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(BaseField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(BaseField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(BaseField::new(2, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(BaseField::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(BaseField::new(2, 9).unwrap_err(), Error::FieldTooLarge(512));
        assert!(matches!(
            BaseField::with_modulus(2, &[1, 0, 1]),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)] {
            let f = BaseField::new(p, e).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), BaseElem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), BaseElem::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            // multiplicative group is cyclic of order q-1
            let q = f.order() as u64;
            for &a in els.iter().skip(1) {
                assert_eq!(f.pow(a, q - 1), BaseElem::ONE);
            }
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree d over F_2: 2, 1, 2, 3, 6
        let f2 = BaseField::prime(2).unwrap();
        for (d, want) in [(1usize, 2usize), (2, 1), (3, 2), (4, 3), (5, 6)] {
            let count = (0..1u64 << d)
                .filter(|&a| {
                    let mut c = poly::digits(a, 2, d);
                    c.push(1);
                    poly::is_irreducible(&f2, &c)
                })
                .count();
            assert_eq!(count, want, "degree {d}");
        }
        // over F_4: (4^2 - 4)/2 = 6 irreducible quadratics
        let f4 = BaseField::new(2, 2).unwrap();
        let count = (0..16u64)
            .filter(|&a| {
                let mut c = poly::digits(a, 4, 2);
                c.push(1);
                poly::is_irreducible(&f4, &c)
            })
            .count();
        assert_eq!(count, 6);
    }
}
