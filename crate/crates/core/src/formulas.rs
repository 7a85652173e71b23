//! Closed-form side of the theory: the halving partition Ψ, the derived
//! parameters of both regimes, L_rk, FWS existence and the expected spectra of
//! the constructions, plus witness finders for the two interval lemmas.
//!
//! Everything here is integer arithmetic; `q` never influences a value.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// `2^e` saturating at `u64::MAX`.
fn pow2(e: usize) -> u64 {
    if e >= 64 {
        u64::MAX
    } else {
        1u64 << e
    }
}

/// Ψ(u, v): `u_1 = ⌈u/2⌉`, `u_i = ⌈⌊u/2^(i-1)⌋/2⌉` for `2 ≤ i ≤ v-1` and
/// `u_v = ⌊u/2^(v-1)⌋`.
pub fn psi(u: usize, v: usize) -> Result<Vec<usize>> {
    if v < 2 || u < v {
        return Err(Error::BadArity { u, v });
    }
    let halve = |i: usize| (u as u64 / pow2(i - 1)) as usize;
    let mut parts: Vec<usize> = (1..v).map(|i| halve(i).div_ceil(2)).collect();
    parts.push(halve(v));
    Ok(parts)
}

/// Ψ's two defining properties: the parts sum to `u`, and each part other
/// than the last equals the sum of the later parts or exceeds it by one.
pub fn psi_properties_hold(u: usize, parts: &[usize]) -> bool {
    if parts.iter().sum::<usize>() != u {
        return false;
    }
    let mut tail = 0;
    for (i, &x) in parts.iter().enumerate().rev() {
        if i + 1 < parts.len() && x != tail && x != tail + 1 {
            return false;
        }
        tail += x;
    }
    parts.windows(2).all(|w| w[0] >= w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// n ≤ m
    Small,
    /// n > m
    Large,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Small => "small",
            Regime::Large => "large",
        })
    }
}

/// Derived quantities for one `(n, m, k)`. Fields that do not apply to the
/// regime (or case) are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub regime: Regime,
    pub s: Option<usize>,
    pub mu: Option<usize>,
    pub t: Option<usize>,
    pub a: Option<usize>,
    pub h: Option<usize>,
    pub z: Option<usize>,
    pub beta: Option<usize>,
    pub gamma: Option<usize>,
}

impl SpectrumParams {
    /// `s` in the small regime, `h` in the large one.
    pub fn s_or_h(&self) -> usize {
        match self.regime {
            Regime::Small => self.s.unwrap(),
            Regime::Large => self.h.unwrap(),
        }
    }
}

fn check_range(n: usize, m: usize, k: usize) -> Result<()> {
    if m == 0 || k == 0 || n < k {
        return Err(Error::OutOfRange(format!(
            "need m >= 1 and 1 <= k <= n, got n={n}, m={m}, k={k}"
        )));
    }
    if n > k * m {
        return Err(Error::OutOfRange(format!(
            "n = {n} exceeds km = {}: no nondegenerate code exists",
            k * m
        )));
    }
    Ok(())
}

/// Least `i ≥ 0` with `(x - i) / 2^(e - i) ≥ 1`, where a negative exponent
/// means multiplying by a power of two.
fn first_feasible(x: usize, e: usize) -> usize {
    (0..x)
        .find(|&i| {
            let rest = (x - i) as u64;
            if i <= e {
                rest >= pow2(e - i)
            } else {
                rest >= 1
            }
        })
        .expect("i = x - 1 always qualifies when x > e")
}

pub fn params(n: usize, m: usize, k: usize) -> Result<SpectrumParams> {
    check_range(n, m, k)?;
    let mut out = SpectrumParams {
        n,
        m,
        k,
        regime: Regime::Small,
        s: None,
        mu: None,
        t: None,
        a: None,
        h: None,
        z: None,
        beta: None,
        gamma: None,
    };
    if n <= m {
        out.s = Some(((n as u64 / pow2(k - 1)) as usize).max(1));
        out.z = Some(first_feasible(n, k - 1));
        return Ok(out);
    }
    out.regime = Regime::Large;
    let mu = k * m - n;
    let t = mu / m;
    let a = n - (k - t - 2) * m;
    debug_assert!(m < a && a <= 2 * m);
    out.mu = Some(mu);
    out.t = Some(t);
    out.a = Some(a);
    out.h = Some(((a as u64 / pow2(t + 1)) as usize).max(1));
    if a >= t + 2 {
        out.z = Some(first_feasible(a, t + 1));
    } else {
        // here m ≥ 2, since m = 1 forces n = k and then a = 2 = t + 2
        let beta = (n - k) / (m - 1);
        out.beta = Some(beta);
        out.gamma = Some((n - k) - (m - 1) * beta);
    }
    Ok(out)
}

/// The maximum number of distinct nonzero rank weights of an `[n, k]` code
/// over F_(q^m)/F_q. `q` is accepted for symmetry; the value ignores it.
pub fn lrk(n: usize, m: usize, k: usize, _q: u64) -> Result<usize> {
    let p = params(n, m, k)?;
    Ok(match p.regime {
        Regime::Small => n - p.s.unwrap() + 1,
        Regime::Large => m - p.h.unwrap() + 1,
    })
}

/// Whether an `[n, k]` code with every weight `1..=min(n, m)` exists.
pub fn fws_exists(n: usize, m: usize, k: usize) -> Result<bool> {
    let p = params(n, m, k)?;
    Ok(match p.regime {
        Regime::Small => (n as u64) < pow2(k),
        Regime::Large => (p.a.unwrap() as u64) < pow2(p.t.unwrap() + 2),
    })
}

/// Spectrum of the optimal construction: `{s..n}` or `{h..m}`.
pub fn expected_spectrum(n: usize, m: usize, k: usize) -> Result<BTreeSet<usize>> {
    let p = params(n, m, k)?;
    Ok(match p.regime {
        Regime::Small => (p.s.unwrap()..=n).collect(),
        Regime::Large => (p.h.unwrap()..=m).collect(),
    })
}

/// One line of an `L_rk` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub q: u64,
    pub lrk: usize,
    pub regime: Regime,
    pub s_or_h: usize,
    pub fws: bool,
}

impl TableRow {
    pub const CSV_HEADER: &'static str = "n,m,k,q,lrk,regime,s_or_h,fws";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n, self.m, self.k, self.q, self.lrk, self.regime, self.s_or_h, self.fws
        )
    }
}

/// Rows for `n = k+1, ..., n_max`.
pub fn table(m: usize, k: usize, q: u64, n_max: usize) -> Result<Vec<TableRow>> {
    if n_max > k * m {
        return Err(Error::OutOfRange(format!(
            "n-max = {n_max} exceeds km = {}",
            k * m
        )));
    }
    (k + 1..=n_max)
        .map(|n| {
            let p = params(n, m, k)?;
            Ok(TableRow {
                n,
                m,
                k,
                q,
                lrk: lrk(n, m, k, q)?,
                regime: p.regime,
                s_or_h: p.s_or_h(),
                fws: fws_exists(n, m, k)?,
            })
        })
        .collect()
}

fn first_in(set: &BTreeSet<usize>, lo: usize, hi: usize) -> Option<usize> {
    if lo > hi {
        return None;
    }
    set.range(lo..=hi).next().copied()
}

/// Each element exceeds the sum of all earlier ones.
pub fn is_superincreasing(xs: &[usize]) -> bool {
    let mut sum = 0;
    for (j, &x) in xs.iter().enumerate() {
        if j > 0 && x <= sum {
            return false;
        }
        sum += x;
    }
    true
}

/// Elements `s_0 < ... < s_k` of `set` with `s_j > s_0 + ... + s_(j-1)`,
/// found by taking `s_0 = min S` and the least element of `S` in each
/// interval `I_j = [s_0 + (2^(j-1) - 1)s + 1, 2^(j-1)s]`, `s = ⌊n/2^(k-1)⌋`.
/// `None` if some interval misses `S`, which requires `|S| ≤ n - s + 1`.
pub fn lemma_small_witness(set: &BTreeSet<usize>, n: usize, k: usize) -> Result<Option<Vec<usize>>> {
    if k == 0 || (n as u64) < pow2(k) {
        return Err(Error::PreconditionViolated(format!(
            "needs n >= 2^k, got n = {n}, k = {k}"
        )));
    }
    let s = (n as u64 / pow2(k - 1)) as usize;
    Ok(interval_scan(set, s, k))
}

/// The large-regime analogue: `t + 2` elements with
/// `s_0 + (2^(j-1) - 1)h + 1 ≤ s_j ≤ 2^(j-1)h` and the superincreasing property.
pub fn lemma_large_witness(
    set: &BTreeSet<usize>,
    m: usize,
    t: usize,
    h: usize,
) -> Result<Option<Vec<usize>>> {
    if h <= 1 {
        return Err(Error::PreconditionViolated(format!("needs h > 1, got h = {h}")));
    }
    if set.iter().any(|&x| x == 0 || x > m) {
        return Err(Error::PreconditionViolated(format!(
            "set must lie in 1..={m}"
        )));
    }
    Ok(interval_scan(set, h, t + 1))
}

fn interval_scan(set: &BTreeSet<usize>, step: usize, count: usize) -> Option<Vec<usize>> {
    let s0 = *set.first()?;
    let mut out = vec![s0];
    for j in 1..=count {
        let scale = pow2(j - 1) as usize;
        let lo = s0 + (scale - 1) * step + 1;
        out.push(first_in(set, lo, scale * step)?);
    }
    debug_assert!(is_superincreasing(&out));
    Some(out)
}

/// Whether `xs` satisfies the interval conditions of the large-regime lemma.
pub fn satisfies_large_intervals(xs: &[usize], h: usize) -> bool {
    let Some(&s0) = xs.first() else {
        return false;
    };
    xs.iter().enumerate().skip(1).all(|(j, &x)| {
        let scale = pow2(j - 1) as usize;
        s0 + (scale - 1) * h + 1 <= x && x <= scale * h
    }) && is_superincreasing(xs)
}
