//! F_(q^m)-linear rank-metric codes given by a generator matrix.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate::{projective_count, Enumerator, Execution};
use crate::error::{Error, Result};
use crate::field::{BaseElem, ExtElem, ExtField, FieldDescriptor};
use crate::formulas::lrk;
use crate::linalg::{rank_weight, ExtMatrix, FqMatrix};

/// Largest projective point count enumerated without an explicit override.
pub const DEFAULT_POINT_LIMIT: u64 = 10_000_000;

/// Environment variable that replaces [`DEFAULT_POINT_LIMIT`].
pub const POINT_LIMIT_ENV: &str = "RANKSPECTRA_POINT_LIMIT";

/// The point limit from [`POINT_LIMIT_ENV`] if set and valid, otherwise the
/// default.
pub fn point_limit_from_env() -> u64 {
    std::env::var(POINT_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_POINT_LIMIT)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMethod {
    Exhaustive,
    Witness,
    Sampled,
}

/// Weights found by one method. For exhaustive reports `distribution` holds
/// projective counts (raw codeword counts are these times `q^m - 1`); for
/// witness reports it is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub weights: BTreeSet<usize>,
    pub distribution: BTreeMap<usize, u64>,
    pub method: SpectrumMethod,
    pub points_examined: u64,
}

impl SpectrumReport {
    fn from_histogram(hist: &[u64]) -> Self {
        let distribution: BTreeMap<usize, u64> = hist
            .iter()
            .enumerate()
            .filter(|&(w, &c)| w > 0 && c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        SpectrumReport {
            weights: distribution.keys().copied().collect(),
            points_examined: hist.iter().sum(),
            distribution,
            method: SpectrumMethod::Exhaustive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMetricCode {
    field: Arc<ExtField>,
    g: ExtMatrix,
}

impl RankMetricCode {
    /// Validates that `g` has full row rank over F_(q^m).
    pub fn new(field: Arc<ExtField>, g: ExtMatrix) -> Result<Self> {
        let k = g.rows();
        if k == 0 || g.cols() < k {
            return Err(Error::DimensionMismatch(format!(
                "generator must be k x n with 1 <= k <= n, got {k}x{}",
                g.cols()
            )));
        }
        let q = field.q() as u8;
        let m = field.m();
        let in_field = (0..k).all(|r| {
            g.row(r)
                .iter()
                .all(|a| a.raw()[..m].iter().all(|&c| c < q) && a.raw()[m..].iter().all(|&c| c == 0))
        });
        if !in_field {
            return Err(Error::OutOfRange("entry outside F_(q^m)".into()));
        }
        let rank = g.rank(&field);
        if rank < k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(RankMetricCode { field, g })
    }

    pub fn from_rows(field: Arc<ExtField>, rows: &[Vec<ExtElem>]) -> Result<Self> {
        Self::new(field, ExtMatrix::from_rows(rows)?)
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.field.descriptor()
    }

    pub fn generator(&self) -> &ExtMatrix {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn m(&self) -> usize {
        self.field.m()
    }

    /// `x G`.
    pub fn codeword(&self, x: &[ExtElem]) -> Result<Vec<ExtElem>> {
        self.g.left_mul(x, &self.field)
    }

    pub fn weight_of(&self, x: &[ExtElem]) -> Result<usize> {
        Ok(rank_weight(&self.codeword(x)?, &self.field))
    }

    /// Number of projective points of F_(q^m)^k.
    pub fn point_count(&self) -> u128 {
        projective_count(self.field.order(), self.k())
    }

    fn guard(&self, point_limit: u64) -> Result<()> {
        let required = self.point_count();
        if required > point_limit as u128 {
            return Err(Error::EnumerationTooLarge {
                required,
                limit: point_limit,
            });
        }
        Ok(())
    }

    /// Projective counts per weight `0..=min(n, m)`.
    pub fn weight_histogram(&self, point_limit: u64, exec: Execution) -> Result<Vec<u64>> {
        self.guard(point_limit)?;
        Ok(Enumerator::new(&self.field, &self.g).histogram(exec))
    }

    pub fn weight_spectrum_exhaustive(&self, point_limit: u64) -> Result<SpectrumReport> {
        self.weight_spectrum_exhaustive_with(point_limit, Execution::default())
    }

    pub fn weight_spectrum_exhaustive_with(
        &self,
        point_limit: u64,
        exec: Execution,
    ) -> Result<SpectrumReport> {
        Ok(SpectrumReport::from_histogram(
            &self.weight_histogram(point_limit, exec)?,
        ))
    }

    /// The set of weights of `x G` over the supplied coefficient vectors,
    /// zero words ignored. A lower certificate for the spectrum.
    pub fn weight_spectrum_witness(&self, witnesses: &[Vec<ExtElem>]) -> Result<SpectrumReport> {
        let mut weights = BTreeSet::new();
        for x in witnesses {
            let w = self.weight_of(x)?;
            if w > 0 {
                weights.insert(w);
            }
        }
        Ok(SpectrumReport {
            weights,
            distribution: BTreeMap::new(),
            method: SpectrumMethod::Witness,
            points_examined: witnesses.len() as u64,
        })
    }

    pub fn min_distance(&self, point_limit: u64) -> Result<usize> {
        let report = self.weight_spectrum_exhaustive(point_limit)?;
        Ok(*report.weights.first().expect("a nonzero code has a nonzero word"))
    }

    /// Number of projective codewords of weight exactly `w`.
    pub fn weight_distribution_counts(&self, w: usize, point_limit: u64) -> Result<u64> {
        let hist = self.weight_histogram(point_limit, Execution::default())?;
        Ok(if w == 0 { 0 } else { hist.get(w).copied().unwrap_or(0) })
    }

    /// The `n x km` matrix whose row `j` is the F_q-expansion of column `j`
    /// of `G`, coordinate `i` of entry `r` at position `r m + i`.
    pub fn column_expansions(&self) -> FqMatrix {
        let m = self.m();
        let k = self.k();
        let mut out = FqMatrix::zeros(self.n(), k * m);
        for c in 0..self.n() {
            for r in 0..k {
                let a = self.g.get(r, c);
                for i in 0..m {
                    out.set(c, r * m + i, a.coord(i));
                }
            }
        }
        out
    }

    /// The F_q-span of the columns of `G` has dimension `n`.
    pub fn is_nondegenerate(&self) -> bool {
        if self.n() > self.k() * self.m() {
            return false;
        }
        self.column_expansions().rank(self.field.base()) == self.n()
    }

    /// The code generated by the right kernel of `G`.
    pub fn dual(&self) -> Result<RankMetricCode> {
        if self.k() == self.n() {
            return Err(Error::FullDimension);
        }
        let h = self.g.kernel_ext(&self.field);
        RankMetricCode::new(Arc::clone(&self.field), h)
    }

    /// `km - n`, negative only for degenerate codes.
    pub fn simplex_defect(&self) -> isize {
        (self.k() * self.m()) as isize - self.n() as isize
    }

    /// Singleton equality `mk = max(m, n)(min(m, n) - d + 1)`.
    pub fn is_mrd(&self, point_limit: u64) -> Result<bool> {
        let d = self.min_distance(point_limit)?;
        let (n, m, k) = (self.n(), self.m(), self.k());
        Ok(m * k == n.max(m) * (n.min(m) + 1 - d))
    }

    pub fn is_lrk_optimal(&self, point_limit: u64) -> Result<bool> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let target = lrk(self.n(), self.m(), self.k(), self.field.q() as u64)?;
        let report = self.weight_spectrum_exhaustive(point_limit)?;
        Ok(report.weights.len() == target)
    }

    /// Whether both generator matrices span the same F_(q^m)-space.
    pub fn same_code(&self, other: &RankMetricCode) -> bool {
        self.field == other.field
            && self.n() == other.n()
            && self.g.rref(&self.field).0 == other.g.rref(&other.field).0
    }

    /// `G A` for an `n x n` matrix `A` over F_q.
    pub fn transform_columns(&self, a: &FqMatrix) -> Result<RankMetricCode> {
        let n = self.n();
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected an {n}x{n} matrix"
            )));
        }
        let f = &self.field;
        let rows: Vec<Vec<ExtElem>> = (0..self.k())
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(ExtElem::ZERO, |acc, l| {
                            f.add(&acc, &f.scale(a.get(l, c), &self.g.get(r, l)))
                        })
                    })
                    .collect()
            })
            .collect();
        RankMetricCode::from_rows(Arc::clone(f), &rows)
    }

    /// `B G` for an invertible `k x k` matrix `B` over F_(q^m).
    pub fn change_basis(&self, b: &ExtMatrix) -> Result<RankMetricCode> {
        RankMetricCode::new(Arc::clone(&self.field), b.mul(&self.g, &self.field)?)
    }

    /// A uniformly random nondegenerate `[n, k]` code (rejection sampling).
    pub fn random_nondegenerate<R: Rng + ?Sized>(
        field: Arc<ExtField>,
        n: usize,
        k: usize,
        rng: &mut R,
    ) -> Result<RankMetricCode> {
        if k == 0 || n < k || n > k * field.m() {
            return Err(Error::OutOfRange(format!(
                "no nondegenerate [{n}, {k}] code over F_(q^{})",
                field.m()
            )));
        }
        loop {
            let rows: Vec<Vec<ExtElem>> = (0..k)
                .map(|_| (0..n).map(|_| field.random(rng)).collect())
                .collect();
            if let Ok(c) = RankMetricCode::from_rows(Arc::clone(&field), &rows) {
                if c.is_nondegenerate() {
                    return Ok(c);
                }
            }
        }
    }
}

/// A uniformly random invertible `n x n` matrix over the base field.
pub fn random_invertible_fq<R: Rng + ?Sized>(field: &ExtField, n: usize, rng: &mut R) -> FqMatrix {
    let q = field.q();
    loop {
        let data = (0..n * n)
            .map(|_| BaseElem(rng.gen_range(0..q) as u8))
            .collect();
        let a = FqMatrix::from_flat(n, n, data).unwrap();
        if a.rank(field.base()) == n {
            return a;
        }
    }
}

/// A uniformly random invertible `k x k` matrix over F_(q^m).
pub fn random_invertible_ext<R: Rng + ?Sized>(field: &ExtField, k: usize, rng: &mut R) -> ExtMatrix {
    loop {
        let rows: Vec<Vec<ExtElem>> = (0..k)
            .map(|_| (0..k).map(|_| field.random(rng)).collect())
            .collect();
        let b = ExtMatrix::from_rows(&rows).unwrap();
        if b.rank(field) == k {
            return b;
        }
    }
}
