use std::fmt;

use rand::Rng;

use super::base::{least_irreducible, BaseElem, BaseField};
use super::{poly, FieldDescriptor, MAX_EXT_DEGREE};
use crate::error::{Error, Result};
use crate::linalg::FqMatrix;

/// Element of F_(q^m): coordinates in the basis `1, λ, ..., λ^(m-1)`, each an
/// F_q encoding. Lanes at positions `>= m` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem(pub(crate) [u8; MAX_EXT_DEGREE]);

impl ExtElem {
    pub const ZERO: ExtElem = ExtElem([0; MAX_EXT_DEGREE]);

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinate `i`, zero beyond the field degree.
    pub fn coord(&self, i: usize) -> BaseElem {
        BaseElem(self.0[i])
    }

    pub fn raw(&self) -> &[u8; MAX_EXT_DEGREE] {
        &self.0
    }
}

impl Default for ExtElem {
    fn default() -> Self {
        ExtElem::ZERO
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.0.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        f.debug_list().entries(&self.0[..len]).finish()
    }
}

/// The extension F_(q^m) = F_q[x]/(f). `λ` denotes the class of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: BaseField,
    m: usize,
    modulus: Vec<u8>,
}

impl ExtField {
    /// Tower with the least irreducible moduli at both levels.
    pub fn new(p: u64, e: usize, m: usize) -> Result<Self> {
        let base = BaseField::new(p, e)?;
        Self::over(base, m)
    }

    /// Extension of degree `m` of a given base field, least modulus.
    pub fn over(base: BaseField, m: usize) -> Result<Self> {
        if m == 0 || m > MAX_EXT_DEGREE {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = least_irreducible(&base, m);
        Ok(ExtField { base, m, modulus })
    }

    /// Rebuilds and validates a tower from its descriptor.
    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        if d.g.len() != d.e + 1 {
            return Err(Error::InvalidDescriptor(format!(
                "g must have {} coefficients",
                d.e + 1
            )));
        }
        let base = BaseField::with_modulus(d.p, &d.g)?;
        if d.m == 0 || d.m > MAX_EXT_DEGREE {
            return Err(Error::DegreeOutOfRange(d.m));
        }
        if d.f.len() != d.m + 1 {
            return Err(Error::InvalidDescriptor(format!(
                "f must have {} coefficients",
                d.m + 1
            )));
        }
        let modulus = d
            .f
            .iter()
            .map(|c| base.from_coordinates(c).map(|b| b.0))
            .collect::<Result<Vec<u8>>>()
            .map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        if modulus[d.m] != 1 {
            return Err(Error::InvalidDescriptor("f must be monic".into()));
        }
        if !poly::is_irreducible(&base, &modulus) {
            return Err(Error::NotIrreducible(format!(
                "f = {modulus:?} over F_{}",
                base.order()
            )));
        }
        Ok(ExtField {
            base,
            m: d.m,
            modulus,
        })
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.base.characteristic(),
            e: self.base.degree(),
            g: self.base.modulus().iter().map(|&c| c as u64).collect(),
            m: self.m,
            f: self
                .modulus
                .iter()
                .map(|&c| self.base.coordinates(BaseElem(c)))
                .collect(),
        }
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.base.order()
    }

    /// q^m, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        (self.q() as u128)
            .checked_pow(self.m as u32)
            .unwrap_or(u128::MAX)
    }

    /// Defining polynomial f over F_q, lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem::ZERO
    }

    pub fn one(&self) -> ExtElem {
        self.embed(BaseElem::ONE)
    }

    pub fn embed(&self, c: BaseElem) -> ExtElem {
        let mut out = ExtElem::ZERO;
        out.0[0] = c.0;
        out
    }

    /// The class of `x`. For `m = 1` this is the root of the linear modulus.
    pub fn lambda(&self) -> ExtElem {
        let mut out = ExtElem::ZERO;
        if self.m == 1 {
            out.0[0] = self.base.neg_enc(self.modulus[0]);
        } else {
            out.0[1] = 1;
        }
        out
    }

    pub fn from_coords(&self, coords: &[BaseElem]) -> Result<ExtElem> {
        if coords.len() != self.m {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.m,
                coords.len()
            )));
        }
        let mut out = ExtElem::ZERO;
        for (i, c) in coords.iter().enumerate() {
            if c.0 as usize >= self.q() {
                return Err(Error::OutOfRange(format!(
                    "{} is not an element of F_{}",
                    c.0,
                    self.q()
                )));
            }
            out.0[i] = c.0;
        }
        Ok(out)
    }

    pub fn coords(&self, a: &ExtElem) -> Vec<BaseElem> {
        a.0[..self.m].iter().map(|&c| BaseElem(c)).collect()
    }

    pub fn is_in_base(&self, a: &ExtElem) -> bool {
        a.0[1..].iter().all(|&c| c == 0)
    }

    /// Integer encoding `sum_i enc(c_i) q^i`. Requires `q^m` to fit in `u128`.
    pub fn index(&self, a: &ExtElem) -> u128 {
        let q = self.q() as u128;
        a.0[..self.m]
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * q + c as u128)
    }

    pub fn from_index(&self, mut idx: u128) -> ExtElem {
        let q = self.q() as u128;
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = (idx % q) as u8;
            idx /= q;
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        let q = self.q();
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = rng.gen_range(0..q) as u8;
        }
        out
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = self.base.add_enc(a.0[i], b.0[i]);
        }
        out
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = self.base.sub_enc(a.0[i], b.0[i]);
        }
        out
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = self.base.neg_enc(a.0[i]);
        }
        out
    }

    pub fn scale(&self, c: BaseElem, a: &ExtElem) -> ExtElem {
        let mut out = ExtElem::ZERO;
        for i in 0..self.m {
            out.0[i] = self.base.mul_enc(c.0, a.0[i]);
        }
        out
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let m = self.m;
        let f = &self.base;
        let mut prod = [0u8; 2 * MAX_EXT_DEGREE];
        for i in 0..m {
            let x = a.0[i];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                let y = b.0[j];
                if y != 0 {
                    prod[i + j] = f.add_enc(prod[i + j], f.mul_enc(x, y));
                }
            }
        }
        // x^m = -(f_0 + ... + f_(m-1) x^(m-1))
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for j in 0..m {
                let t = f.mul_enc(c, self.modulus[j]);
                prod[d - m + j] = f.sub_enc(prod[d - m + j], t);
            }
            prod[d] = 0;
        }
        let mut out = ExtElem::ZERO;
        out.0[..m].copy_from_slice(&prod[..m]);
        out
    }

    pub fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = poly::inverse_mod(&self.base, &a.0[..self.m], &self.modulus)
            .ok_or(Error::DivisionByZero)?;
        let mut out = ExtElem::ZERO;
        out.0[..r.len()].copy_from_slice(&r);
        Ok(out)
    }

    pub fn div(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &ExtElem, mut exp: u128) -> ExtElem {
        let mut acc = self.one();
        let mut b = *a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// `z^q`.
    pub fn frobenius(&self, z: &ExtElem) -> ExtElem {
        self.pow(z, self.q() as u128)
    }

    /// `Tr(z) = z + z^q + ... + z^(q^(m-1))`, an element of F_q.
    pub fn trace(&self, z: &ExtElem) -> BaseElem {
        let mut acc = ExtElem::ZERO;
        let mut cur = *z;
        for _ in 0..self.m {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur);
        }
        debug_assert!(self.is_in_base(&acc));
        BaseElem(acc.0[0])
    }

    /// Coordinate matrix (m rows, one per power) of `1, a, ..., a^(count-1)`.
    fn power_matrix(&self, a: &ExtElem, count: usize) -> FqMatrix {
        let mut mat = FqMatrix::zeros(count, self.m);
        let mut cur = self.one();
        for r in 0..count {
            for c in 0..self.m {
                mat.set(r, c, BaseElem(cur.0[c]));
            }
            cur = self.mul(&cur, a);
        }
        mat
    }

    /// Whether `1, λ, ..., λ^(m-1)` are F_q-independent.
    pub fn is_generator(&self, lambda: &ExtElem) -> bool {
        self.power_matrix(lambda, self.m).rank(&self.base) == self.m
    }

    /// `[F_q(λ) : F_q]`, the dimension of the F_q-span of all powers of `λ`.
    pub fn extension_degree(&self, lambda: &ExtElem) -> Result<usize> {
        if lambda.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut basis = FqMatrix::zeros(0, self.m);
        let mut cur = self.one();
        for d in 0..=self.m {
            let row = FqMatrix::from_row(&self.coords(&cur));
            let stacked = basis.stack(&row);
            if stacked.rank(&self.base) == d {
                return Ok(d);
            }
            basis = stacked;
            cur = self.mul(&cur, lambda);
        }
        Ok(self.m)
    }

    /// The element `ξ` of least index with `ξ^(q^2) = ξ` and `ξ ∉ F_q`.
    pub fn subfield_generator_xi(&self) -> Result<ExtElem> {
        if self.m % 2 == 1 {
            return Err(Error::MOdd(self.m));
        }
        // F_(q^2) is the kernel of the F_q-linear map a -> a^(q^2) - a
        let q2 = (self.q() as u128).pow(2);
        let mut map = FqMatrix::zeros(self.m, self.m);
        let mut basis_el = self.one();
        let lambda = self.lambda();
        for j in 0..self.m {
            let img = self.sub(&self.pow(&basis_el, q2), &basis_el);
            for i in 0..self.m {
                map.set(i, j, BaseElem(img.0[i]));
            }
            basis_el = self.mul(&basis_el, &lambda);
        }
        let kernel = map.kernel(&self.base);
        debug_assert_eq!(kernel.rows(), 2);
        let q = self.q();
        let mut best: Option<(u128, ExtElem)> = None;
        for a in 0..q {
            for b in 0..q {
                let mut el = ExtElem::ZERO;
                for i in 0..self.m {
                    let x = self.base.mul_enc(a as u8, kernel.get(0, i).0);
                    let y = self.base.mul_enc(b as u8, kernel.get(1, i).0);
                    el.0[i] = self.base.add_enc(x, y);
                }
                if self.is_in_base(&el) {
                    continue;
                }
                let idx = self.index(&el);
                if best.is_none_or(|(bi, _)| idx < bi) {
                    best = Some((idx, el));
                }
            }
        }
        best.map(|(_, el)| el).ok_or(Error::MOdd(self.m))
    }

    /// All field elements in index order. Only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = ExtElem> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spec_moduli() {
        assert_eq!(ExtField::new(2, 1, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(ExtField::new(2, 1, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(ExtField::new(3, 1, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(ExtField::new(2, 1, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(ExtField::new(4, 1, 2).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            ExtField::new(2, 1, 33).unwrap_err(),
            Error::DegreeOutOfRange(33)
        );
    }

    #[test]
    fn f4_lambda_squared() {
        let f = ExtField::new(2, 1, 2).unwrap();
        let l = f.lambda();
        let l2 = f.mul(&l, &l);
        assert_eq!(l2, f.add(&l, &f.one()));
        assert_eq!(f.trace(&l), BaseElem::ONE);
        assert_eq!(f.subfield_generator_xi().unwrap(), l);
    }

    #[test]
    fn lambda_is_generator_everywhere() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            for m in 1..=8 {
                let f = ExtField::new(p, e, m).unwrap();
                assert!(f.is_generator(&f.lambda()), "p={p} e={e} m={m}");
                if m >= 2 {
                    assert!(!f.is_generator(&f.one()));
                    assert_eq!(f.extension_degree(&f.lambda()).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn m_one_uses_root_of_x() {
        let f = ExtField::new(3, 1, 1).unwrap();
        assert!(f.lambda().is_zero());
        assert!(f.is_generator(&f.lambda()));
        assert_eq!(f.extension_degree(&f.lambda()), Err(Error::ZeroElement));
    }

    #[test]
    fn inverse_and_group_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, e, m) in [(2, 1, 5), (3, 1, 3), (2, 2, 3), (5, 1, 2)] {
            let f = ExtField::new(p, e, m).unwrap();
            let order = f.order();
            assert_eq!(f.inv(&ExtElem::ZERO), Err(Error::DivisionByZero));
            for _ in 0..50 {
                let a = f.random_nonzero(&mut rng);
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                assert_eq!(f.pow(&a, order - 1), f.one());
            }
        }
    }

    #[test]
    fn extension_degree_of_subfield_elements() {
        let f = ExtField::new(2, 1, 4).unwrap();
        let xi = f.subfield_generator_xi().unwrap();
        assert_eq!(f.extension_degree(&xi).unwrap(), 2);
        assert_eq!(f.pow(&xi, 4), xi);
        // every element of F_16 satisfying a^4 = a and outside F_2 has degree 2
        let count = f
            .elements()
            .filter(|a| !a.is_zero() && f.pow(a, 4) == *a && !f.is_in_base(a))
            .inspect(|a| assert_eq!(f.extension_degree(a).unwrap(), 2))
            .count();
        assert_eq!(count, 2);
        // xi is the least such element
        let least = f
            .elements()
            .find(|a| f.pow(a, 4) == *a && !f.is_in_base(a))
            .unwrap();
        assert_eq!(least, xi);
        assert_eq!(
            ExtField::new(2, 1, 5).unwrap().subfield_generator_xi(),
            Err(Error::MOdd(5))
        );
    }

    #[test]
    fn descriptor_round_trip() {
        let f = ExtField::new(2, 2, 3).unwrap();
        let d = f.descriptor();
        assert_eq!(d.g, vec![1, 1, 1]);
        assert_eq!(d.f.len(), 4);
        assert!(d.f.iter().all(|c| c.len() == 2));
        assert_eq!(ExtField::from_descriptor(&d).unwrap(), f);
        let mut bad = d.clone();
        bad.f[0] = vec![0, 0];
        assert!(ExtField::from_descriptor(&bad).is_err());
    }
}
