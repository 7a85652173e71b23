//! q-systems: F_q-subspaces of F_(q^m)^k, all stored through their
//! F_q-expansions in F_q^(km), coordinate `i` of entry `r` at position
//! `r m + i`.
//!
//! For a nondegenerate code with system `U` (the F_q-span of the columns of
//! `G`) and a nonzero `x`, the weight of `xG` equals both
//! `n - dim(U ∩ x^⊥)` and `m - dim(U^⊥' ∩ <x>)`, where `x^⊥` is taken for the
//! standard bilinear form and `U^⊥'` for its trace `Tr(σ(u, v))`.

use std::sync::Arc;

use crate::code::RankMetricCode;
use crate::error::{Error, Result};
use crate::field::{BaseElem, ExtElem, ExtField};
use crate::linalg::{ExtMatrix, FqMatrix, FqSubspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSystem {
    field: Arc<ExtField>,
    k: usize,
    basis: FqSubspace,
}

impl QSystem {
    pub fn new(field: Arc<ExtField>, k: usize, basis: FqSubspace) -> Result<Self> {
        if basis.ambient_dim() != k * field.m() {
            return Err(Error::AmbientMismatch(k * field.m(), basis.ambient_dim()));
        }
        Ok(QSystem { field, k, basis })
    }

    /// F_q-span of the given vectors of F_(q^m)^k.
    pub fn span(field: Arc<ExtField>, k: usize, vectors: &[Vec<ExtElem>]) -> Result<Self> {
        let rows: Vec<Vec<BaseElem>> = vectors
            .iter()
            .map(|v| check_len(v, k).map(|_| expand(&field, v)))
            .collect::<Result<_>>()?;
        let m = matrix(rows, k * field.m());
        let basis = FqSubspace::from_rows(&m, field.base());
        Ok(QSystem { field, k, basis })
    }

    /// F_(q^m)-span of the given vectors, as an F_q-subspace.
    pub fn fqm_span(field: Arc<ExtField>, k: usize, vectors: &[Vec<ExtElem>]) -> Result<Self> {
        let mut all = Vec::with_capacity(vectors.len() * field.m());
        for v in vectors {
            check_len(v, k)?;
            all.extend(lambda_multiples(&field, v));
        }
        Self::span(field, k, &all)
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn subspace(&self) -> &FqSubspace {
        &self.basis
    }

    pub fn basis_matrix(&self) -> &FqMatrix {
        self.basis.basis()
    }

    fn compatible(&self, other: &QSystem) -> Result<()> {
        if self.field != other.field || self.k != other.k {
            return Err(Error::AmbientMismatch(
                self.k * self.field.m(),
                other.k * other.field.m(),
            ));
        }
        Ok(())
    }

    pub fn dim_intersection(&self, other: &QSystem) -> Result<usize> {
        self.compatible(other)?;
        self.basis.dim_intersection(&other.basis, self.field.base())
    }

    /// Basis vectors read back as elements of F_(q^m)^k.
    pub fn vectors(&self) -> Vec<Vec<ExtElem>> {
        let m = self.field.m();
        let b = self.basis.basis();
        (0..b.rows())
            .map(|r| {
                (0..self.k)
                    .map(|e| {
                        self.field
                            .from_coords(&b.row(r)[e * m..(e + 1) * m])
                            .expect("coordinates come from the field")
                    })
                    .collect()
            })
            .collect()
    }

    /// Closed under multiplication by λ, hence an F_(q^m)-subspace.
    pub fn is_fqm_subspace(&self) -> bool {
        let lambda = self.field.lambda();
        let f = self.field.base();
        self.vectors().iter().all(|v| {
            let scaled: Vec<ExtElem> = v.iter().map(|a| self.field.mul(&lambda, a)).collect();
            self.basis
                .contains(&expand(&self.field, &scaled), f)
                .expect("lengths agree")
        })
    }

    /// The F_(q^m)-span of the F_q-span of this system equals the whole space.
    pub fn spans_ambient(&self) -> bool {
        let v = self.vectors();
        if v.is_empty() {
            return self.k == 0;
        }
        ExtMatrix::from_rows(&v).unwrap().rank(&self.field) == self.k
    }
}

fn check_len(v: &[ExtElem], k: usize) -> Result<()> {
    if v.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in F_(q^m)^{k}",
            v.len()
        )));
    }
    Ok(())
}

fn matrix(rows: Vec<Vec<BaseElem>>, cols: usize) -> FqMatrix {
    if rows.is_empty() {
        FqMatrix::zeros(0, cols)
    } else {
        FqMatrix::from_rows(&rows).expect("rows share one length")
    }
}

/// Concatenated coordinates of the entries of `v`.
pub fn expand(field: &ExtField, v: &[ExtElem]) -> Vec<BaseElem> {
    v.iter().flat_map(|a| field.coords(a)).collect()
}

/// `v, λv, ..., λ^(m-1) v`.
fn lambda_multiples(field: &ExtField, v: &[ExtElem]) -> Vec<Vec<ExtElem>> {
    let lambda = field.lambda();
    let mut out = Vec::with_capacity(field.m());
    let mut cur = v.to_vec();
    for _ in 0..field.m() {
        out.push(cur.clone());
        cur = cur.iter().map(|a| field.mul(&lambda, a)).collect();
    }
    out
}

/// The system of a nondegenerate code: the F_q-span of the columns of `G`.
pub fn associated_system(code: &RankMetricCode) -> Result<QSystem> {
    if !code.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let field = Arc::clone(code.field());
    let basis = FqSubspace::from_rows(&code.column_expansions(), field.base());
    Ok(QSystem {
        field,
        k: code.k(),
        basis,
    })
}

/// `x^⊥ = {y : x_1 y_1 + ... + x_k y_k = 0}`, of F_q-dimension `(k-1)m`.
pub fn hyperplane_subspace(field: Arc<ExtField>, x: &[ExtElem]) -> Result<QSystem> {
    if x.iter().all(ExtElem::is_zero) {
        return Err(Error::ZeroVector);
    }
    let k = x.len();
    let row = ExtMatrix::from_rows(&[x.to_vec()])?;
    let kernel = row.kernel_ext(&field);
    QSystem::fqm_span(field, k, &kernel.to_rows())
}

pub fn weight_via_geometry(code: &RankMetricCode, x: &[ExtElem]) -> Result<usize> {
    let u = associated_system(code)?;
    let hyper = hyperplane_subspace(Arc::clone(code.field()), x)?;
    Ok(code.n() - u.dim_intersection(&hyper)?)
}

/// `U^⊥' = {v : Tr(σ(u, v)) = 0 for all u ∈ U}`, of dimension `km - dim U`.
pub fn geometric_dual(u: &QSystem) -> QSystem {
    let field = &u.field;
    let m = field.m();
    let km = u.k * m;
    let base = field.base();
    // Tr is F_q-linear: Tr(a) = sum_j a_j Tr(λ^j)
    let lambda = field.lambda();
    let mut traces = Vec::with_capacity(m);
    let mut cur = field.one();
    for _ in 0..m {
        traces.push(field.trace(&cur));
        cur = field.mul(&cur, &lambda);
    }
    let tr = |a: &ExtElem| {
        (0..m).fold(BaseElem::ZERO, |acc, j| {
            base.add(acc, base.mul(a.coord(j), traces[j]))
        })
    };
    let powers: Vec<ExtElem> = (0..m).map(|c| field.pow(&lambda, c as u128)).collect();
    let vectors = u.vectors();
    let mut gram = FqMatrix::zeros(vectors.len(), km);
    for (r, v) in vectors.iter().enumerate() {
        for (e, a) in v.iter().enumerate() {
            for (c, p) in powers.iter().enumerate() {
                gram.set(r, e * m + c, tr(&field.mul(a, p)));
            }
        }
    }
    let kernel = if vectors.is_empty() {
        FqMatrix::identity(km)
    } else {
        gram.kernel(base)
    };
    QSystem {
        field: Arc::clone(field),
        k: u.k,
        basis: FqSubspace::from_rows(&kernel, base),
    }
}

/// `W^⊥` for an F_(q^m)-subspace `W`.
pub fn fqm_orthogonal(w: &QSystem) -> Result<QSystem> {
    if !w.is_fqm_subspace() {
        return Err(Error::NotFqmSubspace);
    }
    let field = Arc::clone(&w.field);
    // greedy F_(q^m)-basis among the F_q-basis vectors
    let mut chosen: Vec<Vec<ExtElem>> = Vec::new();
    for v in w.vectors() {
        let mut trial = chosen.clone();
        trial.push(v);
        if ExtMatrix::from_rows(&trial)?.rank(&field) == trial.len() {
            chosen = trial;
        }
    }
    if chosen.is_empty() {
        return Ok(QSystem {
            basis: FqSubspace::full(w.k * field.m()),
            k: w.k,
            field,
        });
    }
    let kernel = ExtMatrix::from_rows(&chosen)?.kernel_ext(&field);
    QSystem::fqm_span(field, w.k, &kernel.to_rows())
}

/// Checks `dim(U^⊥' ∩ W^⊥) = dim(U ∩ W) + km - dim U - dim W`.
pub fn verify_dual_dimension_identity(u: &QSystem, w: &QSystem) -> Result<bool> {
    u.compatible(w)?;
    let w_perp = fqm_orthogonal(w)?;
    let lhs = geometric_dual(u).dim_intersection(&w_perp)?;
    let km = u.k * u.field.m();
    let rhs = u.dim_intersection(w)? + km;
    Ok(rhs >= u.dim() + w.dim() && lhs == rhs - u.dim() - w.dim())
}

pub fn weight_via_dual(code: &RankMetricCode, x: &[ExtElem]) -> Result<usize> {
    if x.iter().all(ExtElem::is_zero) {
        return Err(Error::ZeroVector);
    }
    let u = associated_system(code)?;
    let line = QSystem::fqm_span(Arc::clone(code.field()), code.k(), &[x.to_vec()])?;
    Ok(code.m() - geometric_dual(&u).dim_intersection(&line)?)
}
