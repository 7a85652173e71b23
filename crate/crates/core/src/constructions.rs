//! Generator matrices of the optimal codes and their relatives.
//!
//! Most codes here are block diagonal: row `i` carries `(1, λ, ..., λ^(b_i - 1))`
//! on its own block of `b_i` columns. A coefficient vector with `x_i = λ^(e_i)`
//! then spans `{λ^j : j ∈ ∪ [e_i, e_i + b_i)}`, so placing the blocks so that
//! their exponent ranges tile `[0, w)` with `w ≤ m` yields a word of weight
//! exactly `w`. Witness plans are built this way, lowest block at exponent 0
//! and each further block shifted by the total length below it.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::code::RankMetricCode;
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField};
use crate::formulas::{expected_spectrum, params, psi, Regime, SpectrumParams};
use crate::linalg::{rank_weight, ExtMatrix};

/// `(1, λ, ..., λ^(len-1))`.
pub fn u_vec(field: &ExtField, lambda: &ExtElem, len: usize) -> Result<Vec<ExtElem>> {
    if len == 0 || len > field.m() {
        return Err(Error::BadLength { len, m: field.m() });
    }
    let mut out = Vec::with_capacity(len);
    let mut cur = field.one();
    for _ in 0..len {
        out.push(cur);
        cur = field.mul(&cur, lambda);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub blocks: Vec<usize>,
    pub lambda: ExtElem,
}

impl BlockProfile {
    pub fn new(blocks: Vec<usize>, lambda: ExtElem) -> Self {
        BlockProfile { blocks, lambda }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn validate(&self, field: &ExtField) -> Result<()> {
        if self.blocks.is_empty() {
            return Err(Error::ProfileInvalid("no blocks".into()));
        }
        if let Some(&b) = self.blocks.iter().find(|&&b| b == 0 || b > field.m()) {
            return Err(Error::ProfileInvalid(format!(
                "block length {b} outside 1..={}",
                field.m()
            )));
        }
        if self.blocks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ProfileInvalid(format!(
                "{:?} is not non-increasing",
                self.blocks
            )));
        }
        if !field.is_generator(&self.lambda) {
            return Err(Error::NotGenerator);
        }
        Ok(())
    }
}

/// One coefficient vector per certified weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessPlan {
    pub targets: BTreeMap<usize, Vec<ExtElem>>,
}

impl WitnessPlan {
    /// Weight-`w` words of a block-diagonal code for every `w ≤ min(n, m)`
    /// reachable by tiling `[0, w)` with block exponent ranges.
    pub fn ladder(field: &ExtField, profile: &BlockProfile) -> Self {
        let top = profile.n().min(field.m());
        let targets = (1..=top)
            .filter_map(|w| ladder_exponents(&profile.blocks, w).map(|e| (w, e)))
            .map(|(w, exps)| {
                let x = exps
                    .iter()
                    .map(|e| match e {
                        Some(e) => field.pow(&profile.lambda, *e as u128),
                        None => ExtElem::ZERO,
                    })
                    .collect();
                (w, x)
            })
            .collect();
        WitnessPlan { targets }
    }

    pub fn witnesses(&self) -> Vec<Vec<ExtElem>> {
        self.targets.values().cloned().collect()
    }

    /// The first entry whose word does not have its target weight, as
    /// `(target, actual)`.
    pub fn first_mismatch(&self, code: &RankMetricCode) -> Result<Option<(usize, usize)>> {
        for (&w, x) in &self.targets {
            let actual = rank_weight(&code.codeword(x)?, code.field());
            if actual != w {
                return Ok(Some((w, actual)));
            }
        }
        Ok(None)
    }
}

/// Exponent per block (`None` = coefficient 0) making the exponent ranges
/// cover exactly `[0, w)`. Uses every block of length at most `w`, from the
/// last one upwards, and stops once the range is covered.
fn ladder_exponents(blocks: &[usize], w: usize) -> Option<Vec<Option<usize>>> {
    let mut exps = vec![None; blocks.len()];
    let mut covered = 0;
    for (i, &b) in blocks.iter().enumerate().rev() {
        if covered == w {
            break;
        }
        if b > w {
            continue;
        }
        let e = covered.min(w - b);
        exps[i] = Some(e);
        covered = covered.max(e + b);
    }
    (covered == w).then_some(exps)
}

/// The `k x n` block-diagonal matrix with `u_vec(λ, b_i)` in block `i`.
pub fn block_diag_code(field: Arc<ExtField>, profile: &BlockProfile) -> Result<RankMetricCode> {
    profile.validate(&field)?;
    let n = profile.n();
    let k = profile.blocks.len();
    let mut g = ExtMatrix::zeros(k, n);
    let mut offset = 0;
    for (i, &b) in profile.blocks.iter().enumerate() {
        for (j, a) in u_vec(&field, &profile.lambda, b)?.into_iter().enumerate() {
            g.set(i, offset + j, a);
        }
        offset += b;
    }
    RankMetricCode::new(field, g)
}

/// An optimal code together with how it was obtained.
#[derive(Clone, Debug)]
pub struct Construction {
    pub code: RankMetricCode,
    pub profile: BlockProfile,
    pub params: SpectrumParams,
    pub witnesses: WitnessPlan,
}

#[derive(Serialize)]
struct ProfileView<'a> {
    blocks: &'a [usize],
}

impl Construction {
    pub fn profile_json(&self) -> String {
        serde_json::to_string(&ProfileView {
            blocks: &self.profile.blocks,
        })
        .expect("plain data serializes")
    }
}

fn repeat(value: usize, times: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(value, times)
}

/// Block lengths for `k < n ≤ m`.
pub fn small_profile(n: usize, m: usize, k: usize) -> Result<Vec<usize>> {
    if n > m || n <= k {
        return Err(Error::BadRegime(format!(
            "small construction needs k < n <= m, got n={n}, m={m}, k={k}"
        )));
    }
    if k == 1 {
        return Ok(vec![n]);
    }
    let z = params(n, m, k)?.z.unwrap();
    if z == 0 {
        return psi(n, k);
    }
    let mut blocks = psi(n - z, k - z)?;
    blocks.extend(repeat(1, z));
    Ok(blocks)
}

/// Block lengths for `m < n ≤ km`.
pub fn large_profile(n: usize, m: usize, k: usize) -> Result<Vec<usize>> {
    if n <= m || n > k * m {
        return Err(Error::BadRegime(format!(
            "large construction needs m < n <= km, got n={n}, m={m}, k={k}"
        )));
    }
    let p = params(n, m, k)?;
    let (t, a) = (p.t.unwrap(), p.a.unwrap());
    let mut blocks: Vec<usize> = repeat(m, k - t - 2).collect();
    if let Some(z) = p.z {
        blocks.extend(psi(a - z, t + 2 - z)?);
        blocks.extend(repeat(1, z));
    } else {
        let (beta, gamma) = (p.beta.unwrap(), p.gamma.unwrap());
        blocks = repeat(m, beta)
            .chain([gamma + 1])
            .chain(repeat(1, k - beta - 1))
            .collect();
    }
    Ok(blocks)
}

fn finish(
    field: Arc<ExtField>,
    blocks: Vec<usize>,
    lambda: ExtElem,
    p: SpectrumParams,
    witnesses: Option<WitnessPlan>,
) -> Result<Construction> {
    let profile = BlockProfile::new(blocks, lambda);
    let code = block_diag_code(Arc::clone(&field), &profile)?;
    let mut witnesses = witnesses.unwrap_or_else(|| WitnessPlan::ladder(&field, &profile));
    let expected = expected_spectrum(p.n, p.m, p.k)?;
    witnesses.targets.retain(|w, _| expected.contains(w));
    if let Some(w) = expected.iter().find(|w| !witnesses.targets.contains_key(w)) {
        return Err(Error::ProfileInvalid(format!("no witness for weight {w}")));
    }
    if let Some((target, actual)) = witnesses.first_mismatch(&code)? {
        return Err(Error::ProfileInvalid(format!(
            "witness for weight {target} has weight {actual}"
        )));
    }
    Ok(Construction {
        code,
        profile,
        params: p,
        witnesses,
    })
}

fn check_lambda(field: &ExtField, lambda: Option<ExtElem>) -> Result<ExtElem> {
    let lambda = lambda.unwrap_or_else(|| field.lambda());
    if !field.is_generator(&lambda) {
        return Err(Error::NotGenerator);
    }
    Ok(lambda)
}

/// The optimal construction for `k < n ≤ m`.
pub fn construct_small(
    field: Arc<ExtField>,
    n: usize,
    k: usize,
    lambda: Option<ExtElem>,
) -> Result<Construction> {
    let m = field.m();
    let blocks = small_profile(n, m, k)?;
    let lambda = check_lambda(&field, lambda)?;
    finish(field, blocks, lambda, params(n, m, k)?, None)
}

/// The optimal construction for `m < n ≤ km`.
pub fn construct_large(
    field: Arc<ExtField>,
    n: usize,
    k: usize,
    lambda: Option<ExtElem>,
) -> Result<Construction> {
    let m = field.m();
    let blocks = large_profile(n, m, k)?;
    let lambda = check_lambda(&field, lambda)?;
    let p = params(n, m, k)?;
    let witnesses = if p.z.is_none() {
        // a_j = (0, ..., 0, 1, λ, ..., λ^(j-1)) in the last j coordinates
        let mut plan = WitnessPlan::default();
        for j in 1..=m.min(k) {
            let mut x = vec![ExtElem::ZERO; k];
            for (i, slot) in x[k - j..].iter_mut().enumerate() {
                *slot = field.pow(&lambda, i as u128);
            }
            plan.targets.insert(j, x);
        }
        Some(plan)
    } else {
        None
    };
    finish(field, blocks, lambda, p, witnesses)
}

/// Dispatches on the regime of `(n, m, k)`.
pub fn construct(
    field: Arc<ExtField>,
    n: usize,
    k: usize,
    lambda: Option<ExtElem>,
) -> Result<Construction> {
    match params(n, field.m(), k)?.regime {
        Regime::Small => construct_small(field, n, k, lambda),
        Regime::Large => construct_large(field, n, k, lambda),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K2Family {
    /// Two blocks `u_vec(λ, ℓ)`.
    Powers { ell: usize },
    /// Two blocks `(1, ξ, λ, ξλ, ..., λ^(l-1), ξλ^(l-1), λ^l)` of length `2l + 1`.
    SubfieldInterleaved { l: usize },
}

/// The `[2ℓ, 2]` codes with `ℓ + 1` weights and three non-proportional
/// minimum-weight words.
pub fn classify_k2_family(
    field: Arc<ExtField>,
    family: K2Family,
    lambda: &ExtElem,
    xi: Option<ExtElem>,
) -> Result<RankMetricCode> {
    let m = field.m();
    let block = match family {
        K2Family::Powers { ell } => {
            if field.is_in_base(lambda) {
                return Err(Error::PreconditionViolated("λ must lie outside F_q".into()));
            }
            let d = field.extension_degree(lambda)?;
            let ok = if d < m { 2 * ell <= d + 1 } else { 2 * ell <= m };
            if ell == 0 || !ok {
                let bound = if d < m {
                    format!("ℓ <= ([F_q(λ):F_q] + 1)/2 = ({d} + 1)/2")
                } else {
                    format!("ℓ <= m/2 = {m}/2")
                };
                return Err(Error::PreconditionViolated(format!(
                    "ℓ = {ell} violates {bound}"
                )));
            }
            let mut row = Vec::with_capacity(ell);
            let mut cur = field.one();
            for _ in 0..ell {
                row.push(cur);
                cur = field.mul(&cur, lambda);
            }
            row
        }
        K2Family::SubfieldInterleaved { l } => {
            if m % 2 == 1 {
                return Err(Error::MOdd(m));
            }
            let q2 = (field.q() as u128).pow(2);
            if lambda.is_zero() || field.pow(lambda, q2) == *lambda {
                return Err(Error::PreconditionViolated(
                    "λ must lie outside F_(q^2)".into(),
                ));
            }
            let d = field.extension_degree(lambda)?;
            // [F_(q^2)(λ) : F_(q^2)] = lcm(d, 2) / 2
            let rel = if d % 2 == 0 { d / 2 } else { d };
            if l == 0 || 2 * l >= rel {
                return Err(Error::PreconditionViolated(format!(
                    "l = {l} violates 1 <= l < [F_(q^2)(λ):F_(q^2)]/2 = {rel}/2"
                )));
            }
            let xi = match xi {
                Some(x) => {
                    if field.extension_degree(&x)? != 2 {
                        return Err(Error::PreconditionViolated(
                            "ξ must generate F_(q^2) over F_q".into(),
                        ));
                    }
                    x
                }
                None => field.subfield_generator_xi()?,
            };
            let mut row = Vec::with_capacity(2 * l + 1);
            let mut cur = field.one();
            for _ in 0..l {
                row.push(cur);
                row.push(field.mul(&xi, &cur));
                cur = field.mul(&cur, lambda);
            }
            row.push(cur);
            row
        }
    };
    let len = block.len();
    let z = ExtElem::ZERO;
    let mut r0 = block.clone();
    r0.extend(std::iter::repeat_n(z, len));
    let mut r1 = vec![z; len];
    r1.extend(block);
    RankMetricCode::from_rows(field, &[r0, r1])
}

/// `G = [[1, λ, 0, 0], [0, 0, 1, λ]]` and `G' = [[λ, -1, 0, 0], [0, 0, λ, -1]]`,
/// mutually dual nondegenerate `[4, 2]` codes.
pub fn dual_counterexample_pair(field: Arc<ExtField>) -> Result<(RankMetricCode, RankMetricCode)> {
    if field.m() < 3 {
        return Err(Error::MTooSmall(field.m()));
    }
    let l = field.lambda();
    let o = field.one();
    let neg = field.neg(&o);
    let z = ExtElem::ZERO;
    let g = RankMetricCode::from_rows(Arc::clone(&field), &[vec![o, l, z, z], vec![z, z, o, l]])?;
    let h = RankMetricCode::from_rows(field, &[vec![l, neg, z, z], vec![z, z, l, neg]])?;
    Ok((g, h))
}
