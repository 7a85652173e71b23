//! Dense linear algebra over F_q and over F_(q^m).
//!
//! Reduced row echelon forms pick the first nonzero entry in column order as
//! pivot and scale pivots to 1, so every output is canonical. Over F_2 the
//! elimination runs on bit-packed rows; [`FqMatrix::rref_generic`] and
//! [`FqMatrix::rref_packed`] must agree exactly.

use crate::error::{Error, Result};
use crate::field::{BaseElem, BaseField, ExtElem, ExtField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BaseElem>,
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![BaseElem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BaseElem::ONE);
        }
        m
    }

    pub fn from_row(row: &[BaseElem]) -> Self {
        FqMatrix {
            rows: 1,
            cols: row.len(),
            data: row.to_vec(),
        }
    }

    /// Builds a matrix from explicit rows; all rows must share one length.
    /// An empty row list needs the column count, see [`FqMatrix::zeros`].
    pub fn from_rows(rows: &[Vec<BaseElem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(FqMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<BaseElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FqMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BaseElem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> BaseElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: BaseElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BaseElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FqMatrix) -> FqMatrix {
        assert!(
            self.rows == 0 || other.rows == 0 || self.cols == other.cols,
            "column counts differ"
        );
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FqMatrix {
            rows: self.rows + other.rows,
            cols,
            data,
        }
    }

    pub fn mul(&self, other: &FqMatrix, f: &BaseField) -> Result<FqMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Reduced row echelon form and rank. Uses the packed path when q = 2.
    pub fn rref(&self, f: &BaseField) -> (FqMatrix, usize) {
        if f.order() == 2 {
            self.rref_packed()
        } else {
            self.rref_generic(f)
        }
    }

    pub fn rref_generic(&self, f: &BaseField) -> (FqMatrix, usize) {
        let mut a = self.clone();
        let cols = a.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    a.data.swap(p * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a.get(rank, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = f.mul(inv, a.get(rank, j));
                a.set(rank, j, v);
            }
            for r in 0..a.rows {
                if r == rank {
                    continue;
                }
                let factor = a.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = f.sub(a.get(r, j), f.mul(factor, a.get(rank, j)));
                    a.set(r, j, v);
                }
            }
            rank += 1;
        }
        (a, rank)
    }

    /// Gauss-Jordan over F_2 on rows packed into 64-bit words. Entries must
    /// be 0 or 1.
    pub fn rref_packed(&self) -> (FqMatrix, usize) {
        let words = self.cols.div_ceil(64);
        let mut packed: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                let mut w = vec![0u64; words];
                for (c, v) in self.row(r).iter().enumerate() {
                    debug_assert!(v.0 <= 1, "packed path needs F_2 entries");
                    if v.0 == 1 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == packed.len() {
                break;
            }
            let (wi, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..packed.len()).find(|&r| packed[r][wi] & bit != 0) else {
                continue;
            };
            packed.swap(p, rank);
            let pivot = packed[rank].clone();
            for (r, row) in packed.iter_mut().enumerate() {
                if r != rank && row[wi] & bit != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, row) in packed.iter().enumerate() {
            for c in 0..self.cols {
                if row[c / 64] >> (c % 64) & 1 == 1 {
                    out.set(r, c, BaseElem::ONE);
                }
            }
        }
        (out, rank)
    }

    pub fn rank(&self, f: &BaseField) -> usize {
        self.rref(f).1
    }

    /// Column index of the pivot of each nonzero row of an RREF matrix.
    fn pivots(&self, rank: usize) -> Vec<usize> {
        (0..rank)
            .map(|r| {
                self.row(r)
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("nonzero row")
            })
            .collect()
    }

    /// Basis of the right kernel `{v : M v^T = 0}`, returned in RREF.
    pub fn kernel(&self, f: &BaseField) -> FqMatrix {
        let (r, rank) = self.rref(f);
        let pivots = r.pivots(rank);
        let mut basis = Self::zeros(0, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BaseElem::ZERO; self.cols];
            v[free] = BaseElem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis = basis.stack(&Self::from_row(&v));
        }
        if basis.rows == 0 {
            return Self::zeros(0, self.cols);
        }
        basis.rref(f).0
    }

    fn drop_zero_rows(mut self) -> FqMatrix {
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|v| !v.is_zero()))
            .collect();
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &r in &keep {
            data.extend_from_slice(self.row(r));
        }
        self.rows = keep.len();
        self.data = data;
        self
    }
}

/// F_q-subspace of F_q^ambient, stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqSubspace {
    ambient: usize,
    basis: FqMatrix,
}

impl FqSubspace {
    /// Row space of `m`.
    pub fn from_rows(m: &FqMatrix, f: &BaseField) -> Self {
        let (r, rank) = m.rref(f);
        let mut basis = r.drop_zero_rows();
        debug_assert_eq!(basis.rows, rank);
        basis.cols = m.cols;
        FqSubspace {
            ambient: m.cols,
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        FqSubspace {
            ambient,
            basis: FqMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        FqSubspace {
            ambient,
            basis: FqMatrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    fn check(&self, other: &FqSubspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &FqSubspace, f: &BaseField) -> Result<FqSubspace> {
        self.check(other)?;
        let mut stacked = self.basis.stack(&other.basis);
        stacked.cols = self.ambient;
        Ok(FqSubspace::from_rows(&stacked, f))
    }

    pub fn dim_sum(&self, other: &FqSubspace, f: &BaseField) -> Result<usize> {
        Ok(self.sum(other, f)?.dim())
    }

    /// `dim A + dim B - dim (A + B)`.
    pub fn dim_intersection(&self, other: &FqSubspace, f: &BaseField) -> Result<usize> {
        let s = self.dim_sum(other, f)?;
        Ok(self.dim() + other.dim() - s)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal(&self, f: &BaseField) -> FqSubspace {
        let k = if self.dim() == 0 {
            FqMatrix::identity(self.ambient)
        } else {
            self.basis.kernel(f)
        };
        FqSubspace::from_rows(&k, f)
    }

    /// The intersection as a subspace: `(A^perp + B^perp)^perp`.
    pub fn intersection(&self, other: &FqSubspace, f: &BaseField) -> Result<FqSubspace> {
        self.check(other)?;
        Ok(self.orthogonal(f).sum(&other.orthogonal(f), f)?.orthogonal(f))
    }

    pub fn contains(&self, v: &[BaseElem], f: &BaseField) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        let mut stacked = self.basis.stack(&FqMatrix::from_row(v));
        stacked.cols = self.ambient;
        Ok(stacked.rank(f) == self.dim())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExtElem>,
}

impl ExtMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExtMatrix {
            rows,
            cols,
            data: vec![ExtElem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<ExtElem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExtMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> ExtElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: ExtElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExtElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<ExtElem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<ExtElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &ExtMatrix, f: &ExtField) -> Result<ExtMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(&out.get(i, j), &f.mul(&a, &other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `x M`.
    pub fn left_mul(&self, x: &[ExtElem], f: &ExtField) -> Result<Vec<ExtElem>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.rows
            )));
        }
        let mut out = vec![ExtElem::ZERO; self.cols];
        for (r, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(a, &self.get(r, c)));
            }
        }
        Ok(out)
    }

    pub fn rref(&self, f: &ExtField) -> (ExtMatrix, usize) {
        let mut a = self.clone();
        let cols = a.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    a.data.swap(p * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(&a.get(rank, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = f.mul(&inv, &a.get(rank, j));
                a.set(rank, j, v);
            }
            for r in 0..a.rows {
                if r == rank {
                    continue;
                }
                let factor = a.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let v = f.sub(&a.get(r, j), &f.mul(&factor, &a.get(rank, j)));
                    a.set(r, j, v);
                }
            }
            rank += 1;
        }
        (a, rank)
    }

    pub fn rank(&self, f: &ExtField) -> usize {
        self.rref(f).1
    }

    /// RREF basis of `{v : M v^T = 0}` over F_(q^m).
    pub fn kernel_ext(&self, f: &ExtField) -> ExtMatrix {
        let (r, rank) = self.rref(f);
        let pivots: Vec<usize> = (0..rank)
            .map(|i| r.row(i).iter().position(|v| !v.is_zero()).unwrap())
            .collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows: Vec<Vec<ExtElem>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![ExtElem::ZERO; self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(&r.get(i, free));
                }
                v
            })
            .collect();
        if rows.is_empty() {
            return Self::zeros(0, self.cols);
        }
        Self::from_rows(&rows).unwrap().rref(f).0
    }
}

/// The `m x n` matrix whose column `j` holds the coordinates of `v_j`.
pub fn expand_vector(v: &[ExtElem], f: &ExtField) -> FqMatrix {
    let m = f.m();
    let mut out = FqMatrix::zeros(m, v.len());
    for (j, x) in v.iter().enumerate() {
        for i in 0..m {
            out.set(i, j, x.coord(i));
        }
    }
    out
}

/// `dim_(F_q) <v_1, ..., v_n>`.
pub fn rank_weight(v: &[ExtElem], f: &ExtField) -> usize {
    if f.q() == 2 {
        rank_weight_binary(v, f.m())
    } else {
        rank_of_rows(v, f)
    }
}

/// XOR-basis rank of the entries viewed as m-bit masks.
fn rank_weight_binary(v: &[ExtElem], m: usize) -> usize {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for x in v {
        let mut mask = x.raw()[..m]
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &c)| acc | (c as u32) << i);
        while mask != 0 {
            let top = 31 - mask.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = mask;
                rank += 1;
                break;
            }
            mask ^= basis[top];
        }
    }
    rank
}

/// Rank of the entries as vectors of F_q^m by echelon insertion.
fn rank_of_rows(v: &[ExtElem], f: &ExtField) -> usize {
    let base = f.base();
    let m = f.m();
    // basis[i] has leading (lowest) nonzero coordinate i, normalized to 1
    let mut basis: Vec<Option<ExtElem>> = vec![None; m];
    let mut rank = 0;
    for x in v {
        let mut cur = *x;
        while let Some(lead) = (0..m).find(|&i| !cur.coord(i).is_zero()) {
            match basis[lead] {
                Some(b) => {
                    let c = cur.coord(lead);
                    cur = f.sub(&cur, &f.scale(c, &b));
                }
                None => {
                    let inv = base.inv(cur.coord(lead)).unwrap();
                    basis[lead] = Some(f.scale(inv, &cur));
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
