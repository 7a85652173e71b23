//! Exhaustive enumeration of the projective points of F_(q^m)^k and the rank
//! weights of the codewords `xG` they define.
//!
//! Representatives have their first nonzero coordinate (the pivot) equal to 1.
//! For a pivot `p` the free coordinates `x_(p+1), ..., x_(k-1)` are expanded
//! into F_p-digits and traversed in modular Gray-code order, so consecutive
//! codewords differ by one precomputed vector `c <- c + (y^t λ^i) G_j`. Each
//! pivot's range is cut into chunks that are processed independently and
//! merged by adding histograms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::field::{BaseElem, ExtElem, ExtField, FieldDescriptor};
use crate::linalg::{rank_weight, ExtMatrix};

/// Points handled by one work item.
const CHUNK_POINTS: u64 = 1 << 14;

/// Largest q^m for which the index-table kernel is used when q > 2.
pub const MAX_TABLED_ORDER: u128 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// q = 2: entries as bit masks, XOR elimination.
    Binary,
    /// q > 2, q^m ≤ [`MAX_TABLED_ORDER`]: entries as element indices with
    /// precomputed addition and scaling tables.
    Tabled,
    /// Direct field arithmetic per point. Slow; used as an oracle and as the
    /// fallback for large fields.
    Reference,
}

impl KernelKind {
    pub fn auto(field: &ExtField) -> Self {
        if field.q() == 2 {
            KernelKind::Binary
        } else if field.order() <= MAX_TABLED_ORDER {
            KernelKind::Tabled
        } else {
            KernelKind::Reference
        }
    }
}

/// `(Q^k - 1)/(Q - 1)` with `Q = q^m`, saturating.
pub fn projective_count(field_order: u128, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(field_order);
    }
    total
}

#[derive(Clone, Copy, Debug)]
struct Chunk {
    pivot: usize,
    start: u64,
    end: u64,
}

pub struct Enumerator<'a> {
    field: &'a ExtField,
    g: &'a ExtMatrix,
    kernel: Kernel,
}

enum Kernel {
    Binary(BinaryKernel),
    Tabled(TabledKernel),
    Reference,
}

impl<'a> Enumerator<'a> {
    pub fn new(field: &'a ExtField, g: &'a ExtMatrix) -> Self {
        Self::with_kernel(field, g, KernelKind::auto(field))
    }

    /// Panics if `kind` cannot handle this field.
    pub fn with_kernel(field: &'a ExtField, g: &'a ExtMatrix, kind: KernelKind) -> Self {
        let kernel = match kind {
            KernelKind::Binary => {
                assert_eq!(field.q(), 2, "binary kernel needs q = 2");
                Kernel::Binary(BinaryKernel::new(field, g))
            }
            KernelKind::Tabled => {
                assert!(
                    field.order() <= MAX_TABLED_ORDER,
                    "tabled kernel needs q^m <= {MAX_TABLED_ORDER}"
                );
                Kernel::Tabled(TabledKernel::new(field, g))
            }
            KernelKind::Reference => Kernel::Reference,
        };
        Enumerator { field, g, kernel }
    }

    pub fn point_count(&self) -> u128 {
        projective_count(self.field.order(), self.g.rows())
    }

    /// Digits (base `digit_base`) that encode the free part of a point with
    /// the given pivot.
    fn free_digits(&self, pivot: usize) -> usize {
        let k = self.g.rows();
        let per_coord = match self.kernel {
            Kernel::Reference => 1,
            _ => self.field.m() * self.field.base().degree(),
        };
        (k - 1 - pivot) * per_coord
    }

    fn digit_base(&self) -> u64 {
        match self.kernel {
            Kernel::Reference => self.field.order() as u64,
            _ => self.field.base().characteristic(),
        }
    }

    fn chunks(&self) -> Vec<Chunk> {
        let base = self.digit_base();
        let mut out = Vec::new();
        for pivot in 0..self.g.rows() {
            let total = base.pow(self.free_digits(pivot) as u32);
            let mut start = 0;
            while start < total {
                let end = total.min(start + CHUNK_POINTS);
                out.push(Chunk { pivot, start, end });
                start = end;
            }
        }
        out
    }

    /// Projective counts per weight, indexed `0..=min(n, m)`.
    ///
    /// The caller is responsible for bounding the point count; see
    /// [`Enumerator::point_count`].
    pub fn histogram(&self, exec: Execution) -> Vec<u64> {
        let len = self.g.cols().min(self.field.m()) + 1;
        let chunks = self.chunks();
        match exec {
            Execution::Sequential => {
                let mut hist = vec![0u64; len];
                for c in &chunks {
                    self.run(*c, &mut hist);
                }
                hist
            }
            #[cfg(feature = "parallel")]
            Execution::Parallel => chunks
                .par_iter()
                .fold(
                    || vec![0u64; len],
                    |mut h, c| {
                        self.run(*c, &mut h);
                        h
                    },
                )
                .reduce(
                    || vec![0u64; len],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                ),
        }
    }

    fn run(&self, c: Chunk, hist: &mut [u64]) {
        match &self.kernel {
            Kernel::Binary(b) => b.run(c, hist),
            Kernel::Tabled(t) => t.run(c, hist),
            Kernel::Reference => self.run_reference(c, hist),
        }
    }

    /// Free coordinates counted in base q^m, last coordinate least
    /// significant, each coordinate read through its index encoding.
    fn run_reference(&self, c: Chunk, hist: &mut [u64]) {
        let k = self.g.rows();
        let q_m = self.field.order();
        for idx in c.start..c.end {
            let mut x = vec![ExtElem::ZERO; k];
            x[c.pivot] = self.field.one();
            let mut rest = idx as u128;
            for j in (c.pivot + 1..k).rev() {
                x[j] = self.field.from_index(rest % q_m);
                rest /= q_m;
            }
            let word = self.g.left_mul(&x, self.field).expect("shape checked");
            hist[rank_weight(&word, self.field)] += 1;
        }
    }
}

/// Gray digit `i` of `n` in the modular base-`p` code: `n_i - n_(i+1) mod p`.
fn gray_digits(n: u64, p: u64, len: usize) -> impl Iterator<Item = u64> {
    let mut digits = Vec::with_capacity(len + 1);
    let mut t = n;
    for _ in 0..len {
        digits.push(t % p);
        t /= p;
    }
    digits.push(0);
    (0..len).map(move |i| (digits[i] + p - digits[i + 1]) % p)
}

/// Position of the Gray digit that increments when the counter goes from
/// `n` to `n + 1`: the number of trailing `p - 1` digits of `n`.
#[inline]
fn gray_step(mut n: u64, p: u64) -> usize {
    if p == 2 {
        return n.trailing_ones() as usize;
    }
    let mut j = 0;
    while n % p == p - 1 {
        n /= p;
        j += 1;
    }
    j
}

/// `(y^t λ^i) G_j` for every row `j` and F_p-basis element `y^t λ^i` of
/// F_(q^m); index `(j * m + i) * e + t`.
fn digit_rows(field: &ExtField, g: &ExtMatrix) -> Vec<Vec<ExtElem>> {
    let e = field.base().degree();
    let m = field.m();
    let p = field.base().characteristic();
    let lambda = field.lambda();
    let mut out = Vec::with_capacity(g.rows() * m * e);
    for j in 0..g.rows() {
        let mut lam_pow = field.one();
        for _ in 0..m {
            for t in 0..e {
                // y^t has encoding p^t
                let y_t = field.embed(BaseElem(p.pow(t as u32) as u8));
                let s = field.mul(&lam_pow, &y_t);
                out.push(g.row(j).iter().map(|a| field.mul(&s, a)).collect());
            }
            lam_pow = field.mul(&lam_pow, &lambda);
        }
    }
    out
}

struct BinaryKernel {
    n: usize,
    m: usize,
    k: usize,
    rows: Vec<u32>,
    digits: Vec<u32>,
}

fn mask(a: &ExtElem, m: usize) -> u32 {
    a.raw()[..m]
        .iter()
        .enumerate()
        .fold(0u32, |acc, (i, &c)| acc | (c as u32) << i)
}

impl BinaryKernel {
    fn new(field: &ExtField, g: &ExtMatrix) -> Self {
        let m = field.m();
        let rows = (0..g.rows())
            .flat_map(|j| g.row(j).iter().map(|a| mask(a, m)).collect::<Vec<_>>())
            .collect();
        let digits = digit_rows(field, g)
            .iter()
            .flat_map(|r| r.iter().map(|a| mask(a, m)).collect::<Vec<_>>())
            .collect();
        BinaryKernel {
            n: g.cols(),
            m,
            k: g.rows(),
            rows,
            digits,
        }
    }

    #[inline]
    fn weight(&self, word: &[u32]) -> usize {
        let mut basis = [0u32; 32];
        let mut rank = 0;
        for &x in word {
            let mut v = x;
            while v != 0 {
                let top = 31 - v.leading_zeros() as usize;
                let b = basis[top];
                if b == 0 {
                    basis[top] = v;
                    rank += 1;
                    if rank == self.m {
                        return rank;
                    }
                    break;
                }
                v ^= b;
            }
        }
        rank
    }

    fn run(&self, c: Chunk, hist: &mut [u64]) {
        let n = self.n;
        let first_digit = (c.pivot + 1) * self.m;
        let free = (self.k - 1 - c.pivot) * self.m;
        let mut word = self.rows[c.pivot * n..(c.pivot + 1) * n].to_vec();
        let gray = c.start ^ (c.start >> 1);
        for d in 0..free {
            if gray >> d & 1 == 1 {
                let off = (first_digit + d) * n;
                for (w, v) in word.iter_mut().zip(&self.digits[off..off + n]) {
                    *w ^= v;
                }
            }
        }
        let mut idx = c.start;
        loop {
            hist[self.weight(&word)] += 1;
            if idx + 1 == c.end {
                break;
            }
            let off = (first_digit + idx.trailing_ones() as usize) * n;
            for (w, v) in word.iter_mut().zip(&self.digits[off..off + n]) {
                *w ^= v;
            }
            idx += 1;
        }
    }
}

/// Lookup tables over element indices of one field.
struct IndexTables {
    order: usize,
    add: Vec<u16>,
    /// `neg_smul[d * Q + b] = -(d b)` for `d` in F_q.
    neg_smul: Vec<u16>,
    /// `b / lead(b)`, so the lowest nonzero coordinate becomes 1.
    normalize: Vec<u16>,
    lead_pos: Vec<u8>,
    lead_digit: Vec<u8>,
}

impl IndexTables {
    fn build(field: &ExtField) -> Self {
        let order = field.order() as usize;
        let q = field.q();
        let base = field.base();
        let els: Vec<ExtElem> = (0..order).map(|i| field.from_index(i as u128)).collect();
        let idx = |a: &ExtElem| field.index(a) as u16;
        let mut add = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add[a * order + b] = idx(&field.add(&els[a], &els[b]));
            }
        }
        let mut neg_smul = vec![0u16; q * order];
        for d in 0..q {
            for b in 0..order {
                let s = field.scale(BaseElem(d as u8), &els[b]);
                neg_smul[d * order + b] = idx(&field.neg(&s));
            }
        }
        let mut normalize = vec![0u16; order];
        let mut lead_pos = vec![u8::MAX; order];
        let mut lead_digit = vec![0u8; order];
        for (i, a) in els.iter().enumerate() {
            if let Some(pos) = (0..field.m()).find(|&t| !a.coord(t).is_zero()) {
                lead_pos[i] = pos as u8;
                lead_digit[i] = a.coord(pos).0;
                let inv = base.inv(a.coord(pos)).unwrap();
                normalize[i] = idx(&field.scale(inv, a));
            }
        }
        IndexTables {
            order,
            add,
            neg_smul,
            normalize,
            lead_pos,
            lead_digit,
        }
    }

    /// Tables are shared between all codes over the same tower.
    fn cached(field: &ExtField) -> Arc<IndexTables> {
        static CACHE: OnceLock<Mutex<HashMap<FieldDescriptor, Arc<IndexTables>>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = field.descriptor();
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return Arc::clone(t);
        }
        let built = Arc::new(IndexTables::build(field));
        cache
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(built)
            .clone()
    }
}

struct TabledKernel {
    tables: Arc<IndexTables>,
    n: usize,
    m: usize,
    k: usize,
    p: u64,
    digits_per_coord: usize,
    rows: Vec<u16>,
    digits: Vec<u16>,
}

impl TabledKernel {
    fn new(field: &ExtField, g: &ExtMatrix) -> Self {
        let tables = IndexTables::cached(field);
        let idx = |a: &ExtElem| field.index(a) as u16;
        let rows = (0..g.rows())
            .flat_map(|j| g.row(j).iter().map(idx).collect::<Vec<_>>())
            .collect();
        let digits = digit_rows(field, g)
            .iter()
            .flat_map(|r| r.iter().map(idx).collect::<Vec<_>>())
            .collect();
        TabledKernel {
            tables,
            n: g.cols(),
            m: field.m(),
            k: g.rows(),
            p: field.base().characteristic(),
            digits_per_coord: field.m() * field.base().degree(),
            rows,
            digits,
        }
    }

    #[inline]
    fn add_into(&self, word: &mut [u16], off: usize) {
        let t = &self.tables;
        for (w, &v) in word.iter_mut().zip(&self.digits[off..off + self.n]) {
            *w = t.add[*w as usize * t.order + v as usize];
        }
    }

    #[inline]
    fn weight(&self, word: &[u16]) -> usize {
        let t = &self.tables;
        let mut basis = [0u16; 32];
        let mut rank = 0;
        for &x in word {
            let mut v = x;
            while v != 0 {
                let pos = t.lead_pos[v as usize] as usize;
                let b = basis[pos];
                if b == 0 {
                    basis[pos] = t.normalize[v as usize];
                    rank += 1;
                    if rank == self.m {
                        return rank;
                    }
                    break;
                }
                let d = t.lead_digit[v as usize] as usize;
                v = t.add[v as usize * t.order + t.neg_smul[d * t.order + b as usize] as usize];
            }
        }
        rank
    }

    fn run(&self, c: Chunk, hist: &mut [u64]) {
        let n = self.n;
        let first_digit = (c.pivot + 1) * self.digits_per_coord;
        let free = (self.k - 1 - c.pivot) * self.digits_per_coord;
        let mut word = self.rows[c.pivot * n..(c.pivot + 1) * n].to_vec();
        for (d, g) in gray_digits(c.start, self.p, free).enumerate() {
            for _ in 0..g {
                self.add_into(&mut word, (first_digit + d) * n);
            }
        }
        let mut idx = c.start;
        loop {
            hist[self.weight(&word)] += 1;
            if idx + 1 == c.end {
                break;
            }
            self.add_into(&mut word, (first_digit + gray_step(idx, self.p)) * n);
            idx += 1;
        }
    }
}
