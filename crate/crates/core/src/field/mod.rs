//! Arithmetic in the tower F_p ⊂ F_q = F_p[y]/(g) ⊂ F_(q^m) = F_q[x]/(f).
//!
//! Moduli are chosen deterministically: the least monic irreducible of the
//! required degree, candidates ordered by their non-leading coefficients read
//! as an integer with the constant term least significant. Serialized codes
//! are therefore reproducible from `(p, e, m)` alone.

mod base;
mod ext;
pub mod poly;

use serde::{Deserialize, Serialize};

pub use base::{is_prime, prime_power, BaseElem, BaseField};
pub use ext::{ExtElem, ExtField};

use crate::error::Result;

/// Largest supported extension degree `m`.
pub const MAX_EXT_DEGREE: usize = 32;

/// Serializable description of a tower. `g` lists F_p coefficients; each entry
/// of `f` is the F_p-coordinate vector (length `e`) of an F_q coefficient.
/// Both lists start at the constant term and include the leading 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub e: usize,
    pub g: Vec<u64>,
    pub m: usize,
    pub f: Vec<Vec<u64>>,
}

impl FieldDescriptor {
    pub fn q(&self) -> u64 {
        self.p.pow(self.e as u32)
    }
}

pub fn make_descriptor(p: u64, e: usize, m: usize) -> Result<FieldDescriptor> {
    Ok(ExtField::new(p, e, m)?.descriptor())
}

/// Irreducibility over the base field of `field`; `poly` holds encodings,
/// lowest degree first.
pub fn is_irreducible(field: &BaseField, poly: &[BaseElem]) -> bool {
    let raw: Vec<u8> = poly.iter().map(|c| c.0).collect();
    poly::is_irreducible(field, &raw)
}
