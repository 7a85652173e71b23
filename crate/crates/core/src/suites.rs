//! Self-checks over a desk-scale parameter grid, shared by the acceptance
//! tests and the `verify` command.
//!
//! Every suite returns a [`SuiteReport`]: how many individual checks ran and
//! a description of each one that failed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::code::RankMetricCode;
use crate::constructions::{
    block_diag_code, classify_k2_family, construct, dual_counterexample_pair, BlockProfile,
    K2Family,
};
use crate::enumerate::projective_count;
use crate::error::{Error, Result};
use crate::field::{prime_power, BaseElem, ExtElem, ExtField};
use crate::formulas::{
    expected_spectrum, fws_exists, lemma_large_witness, lemma_small_witness,
    lrk, params, psi, psi_properties_hold, satisfies_large_intervals, table, Regime,
};
use crate::geometry::{
    associated_system, verify_dual_dimension_identity, weight_via_dual, weight_via_geometry,
    QSystem,
};
use crate::linalg::rank_weight;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Largest projective point count of a grid code.
pub const GRID_POINT_CAP: u128 = 200_000;

/// Largest dual enumerated in the duality suite.
pub const DUAL_POINT_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub q: u64,
    pub m: usize,
    pub k: usize,
    pub n: usize,
}

impl GridPoint {
    pub fn regime(&self) -> Regime {
        if self.n <= self.m {
            Regime::Small
        } else {
            Regime::Large
        }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, k={}, q={})", self.n, self.m, self.k, self.q)
    }
}

/// `q ∈ {2, 3}`, `m ≤ 6`, `2 ≤ k ≤ 4`, `k < n ≤ km`, at most
/// [`GRID_POINT_CAP`] projective points.
pub fn acceptance_grid() -> Vec<GridPoint> {
    let mut out = Vec::new();
    for q in [2u64, 3] {
        for m in 1..=6 {
            for k in 2..=4 {
                if projective_count((q as u128).pow(m as u32), k) > GRID_POINT_CAP {
                    continue;
                }
                out.extend((k + 1..=k * m).map(|n| GridPoint { q, m, k, n }));
            }
        }
    }
    out
}

fn grid_filtered(regime: Option<Regime>) -> Vec<GridPoint> {
    acceptance_grid()
        .into_iter()
        .filter(|g| regime.is_none_or(|r| g.regime() == r))
        .collect()
}

/// Extension fields keyed by `(q, m)`.
#[derive(Default)]
pub struct FieldCache {
    fields: BTreeMap<(u64, usize), Arc<ExtField>>,
}

impl FieldCache {
    pub fn get(&mut self, q: u64, m: usize) -> Result<Arc<ExtField>> {
        if let Some(f) = self.fields.get(&(q, m)) {
            return Ok(Arc::clone(f));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        let f = Arc::new(ExtField::new(p, e, m)?);
        self.fields.insert((q, m), Arc::clone(&f));
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `PASS name (N checks)` or `FAIL name: first failure (+k more)`.
    pub fn summary(&self) -> String {
        match self.failures.first() {
            None => format!("PASS {} ({} checks)", self.name, self.checked),
            Some(first) => format!(
                "FAIL {}: {} ({} of {} checks failed)",
                self.name,
                first,
                self.failures.len(),
                self.checked
            ),
        }
    }
}

/// Constructed codes have exactly the expected spectrum, and their witness
/// plans certify every weight of it.
pub fn grid_spectra(regime: Option<Regime>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("grid-spectra");
    let mut fields = FieldCache::default();
    for gp in grid_filtered(regime) {
        let field = fields.get(gp.q, gp.m)?;
        let built = construct(field, gp.n, gp.k, None)?;
        let ws = built
            .code
            .weight_spectrum_exhaustive(GRID_POINT_CAP as u64)?
            .weights;
        let expected = expected_spectrum(gp.n, gp.m, gp.k)?;
        report.check(ws == expected, || {
            format!("{gp}: spectrum {ws:?}, expected {expected:?}")
        });
        let target = lrk(gp.n, gp.m, gp.k, gp.q)?;
        report.check(ws.len() == target, || {
            format!("{gp}: |WS| = {}, L_rk = {target}", ws.len())
        });
        let certified = built
            .code
            .weight_spectrum_witness(&built.witnesses.witnesses())?
            .weights;
        report.check(certified == expected, || {
            format!("{gp}: witnesses certify {certified:?}")
        });
    }
    Ok(report)
}

/// `fws_exists` matches both the enumerated spectrum and the literal
/// predicates `n < 2^k` and `a < 2^(t+2)`.
pub fn fws_characterization(regime: Option<Regime>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("fws");
    let mut fields = FieldCache::default();
    for gp in grid_filtered(regime) {
        let field = fields.get(gp.q, gp.m)?;
        let predicted = fws_exists(gp.n, gp.m, gp.k)?;
        let literal = match gp.regime() {
            Regime::Small => gp.n < 1 << gp.k,
            Regime::Large => {
                let t = (gp.k * gp.m - gp.n) / gp.m;
                let a = gp.n - (gp.k - t - 2) * gp.m;
                a < 1 << (t + 2)
            }
        };
        report.check(predicted == literal, || {
            format!("{gp}: fws_exists = {predicted}, literal predicate = {literal}")
        });
        let built = construct(field, gp.n, gp.k, None)?;
        let ws = built
            .code
            .weight_spectrum_exhaustive(GRID_POINT_CAP as u64)?
            .weights;
        let full = ws.len() == gp.n.min(gp.m);
        report.check(predicted == full, || {
            format!("{gp}: fws_exists = {predicted}, construction has {} weights", ws.len())
        });
    }
    Ok(report)
}

/// Random nondegenerate codes never exceed `L_rk`.
pub fn upper_bound(samples: usize, seed: u64, regime: Option<Regime>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("upper-bound");
    let mut fields = FieldCache::default();
    let mut rng = StdRng::seed_from_u64(seed);
    for gp in grid_filtered(regime) {
        let field = fields.get(gp.q, gp.m)?;
        let bound = lrk(gp.n, gp.m, gp.k, gp.q)?;
        let top = gp.n.min(gp.m);
        for _ in 0..samples {
            let code = RankMetricCode::random_nondegenerate(Arc::clone(&field), gp.n, gp.k, &mut rng)?;
            let ws = code.weight_spectrum_exhaustive(GRID_POINT_CAP as u64)?.weights;
            let max = ws.last().copied().unwrap_or(0);
            report.check(ws.len() <= bound && max <= top, || {
                format!("{gp}: random code with spectrum {ws:?} beats L_rk = {bound}")
            });
        }
    }
    Ok(report)
}

/// Ψ(u, v) sums to `u` and has the tail-sum property for `2 ≤ v ≤ u ≤ max_u`.
pub fn psi_identities(max_u: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("psi");
    for u in 2..=max_u {
        for v in 2..=u {
            let parts = psi(u, v)?;
            report.check(parts.len() == v && psi_properties_hold(u, &parts), || {
                format!("psi({u}, {v}) = {parts:?}")
            });
        }
    }
    Ok(report)
}

fn random_nonzero_vector(field: &ExtField, k: usize, rng: &mut StdRng) -> Vec<ExtElem> {
    loop {
        let x: Vec<ExtElem> = (0..k).map(|_| field.random(rng)).collect();
        if x.iter().any(|a| !a.is_zero()) {
            return x;
        }
    }
}

/// The weight of `xG` agrees across enumeration arithmetic, `n - dim(U ∩ x^⊥)`
/// and `m - dim(U^⊥' ∩ <x>)`; and the dual-dimension identity holds on random
/// pairs `(U, W)` at `(q, m, k) = (2, 3, 2)`.
pub fn geometry_dictionary(pairs: usize, identity_pairs: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("geometry");
    let mut fields = FieldCache::default();
    let mut rng = StdRng::seed_from_u64(seed);
    let grid = acceptance_grid();
    for _ in 0..pairs {
        let gp = grid[rng.gen_range(0..grid.len())];
        let field = fields.get(gp.q, gp.m)?;
        let code = if rng.gen_bool(0.5) {
            construct(Arc::clone(&field), gp.n, gp.k, None)?.code
        } else {
            RankMetricCode::random_nondegenerate(Arc::clone(&field), gp.n, gp.k, &mut rng)?
        };
        let x = random_nonzero_vector(&field, gp.k, &mut rng);
        let direct = rank_weight(&code.codeword(&x)?, &field);
        let via_u = weight_via_geometry(&code, &x)?;
        let via_dual = weight_via_dual(&code, &x)?;
        report.check(direct == via_u && direct == via_dual, || {
            format!("{gp}: weights {direct}, {via_u}, {via_dual} disagree")
        });
    }
    let field = fields.get(2, 3)?;
    let (k, m) = (2, 3);
    for _ in 0..identity_pairs {
        let u_dim = rng.gen_range(0..=k * m);
        let u_vecs: Vec<Vec<ExtElem>> = (0..u_dim)
            .map(|_| (0..k).map(|_| field.random(&mut rng)).collect())
            .collect();
        let u = QSystem::span(Arc::clone(&field), k, &u_vecs)?;
        let w_dim = rng.gen_range(0..=k);
        let w_vecs: Vec<Vec<ExtElem>> = (0..w_dim)
            .map(|_| (0..k).map(|_| field.random(&mut rng)).collect())
            .collect();
        let w = QSystem::fqm_span(Arc::clone(&field), k, &w_vecs)?;
        let ok = verify_dual_dimension_identity(&u, &w)?;
        report.check(ok, || {
            format!("dual-dimension identity fails for dim U = {}, dim W = {}", u.dim(), w.dim())
        });
    }
    Ok(report)
}

/// Whether some nonzero vector of F_q^n lies in the kernel of `G`, i.e. the
/// dual code has a word of rank weight 1.
fn dual_has_weight_one(code: &RankMetricCode) -> bool {
    let field = code.field();
    let q = field.q();
    let n = code.n();
    let g = code.generator();
    // projective points of F_q^n: leading nonzero coordinate 1
    for lead in 0..n {
        let free = n - lead - 1;
        let total = (q as u64).pow(free as u32);
        for idx in 0..total {
            let mut v = vec![BaseElem::ZERO; n];
            v[lead] = BaseElem::ONE;
            let mut rest = idx;
            for slot in v[lead + 1..].iter_mut() {
                *slot = BaseElem((rest % q as u64) as u8);
                rest /= q as u64;
            }
            let in_kernel = (0..code.k()).all(|r| {
                let mut acc = ExtElem::ZERO;
                for (c, &vc) in v.iter().enumerate() {
                    if !vc.is_zero() {
                        acc = field.add(&acc, &field.scale(vc, &g.get(r, c)));
                    }
                }
                acc.is_zero()
            });
            if in_kernel {
                return true;
            }
        }
    }
    false
}

/// The two mutually dual `[4, 2]` codes at `m = 4` (spectra `{2, 3, 4}`) and
/// `m = 3` (spectra `{2, 3}`), and: for every grid construction with
/// `5 ≤ n ≤ m`, the dual is degenerate or not `L_rk`-optimal.
///
/// Duals with more than [`DUAL_POINT_LIMIT`] points are settled by listing
/// the weight-1 words exactly: a nondegenerate dual without them misses
/// weight 1, which rules out optimality whenever `L_rk = min(n, m)`.
pub fn duality() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("duality");
    let mut fields = FieldCache::default();
    for (m, expected) in [(4usize, vec![2usize, 3, 4]), (3, vec![2, 3])] {
        let field = fields.get(2, m)?;
        let (g, h) = dual_counterexample_pair(field)?;
        let expected: BTreeSet<usize> = expected.into_iter().collect();
        report.check(g.dual()?.same_code(&h) && h.dual()?.same_code(&g), || {
            format!("m={m}: pair is not mutually dual")
        });
        report.check(g.is_nondegenerate() && h.is_nondegenerate(), || {
            format!("m={m}: pair is degenerate")
        });
        for (name, c) in [("G", &g), ("G'", &h)] {
            let ws = c.weight_spectrum_exhaustive(DUAL_POINT_LIMIT)?.weights;
            report.check(ws == expected, || {
                format!("m={m}: {name} has spectrum {ws:?}, expected {expected:?}")
            });
        }
    }
    for gp in acceptance_grid() {
        if gp.n < 5 || gp.n > gp.m {
            continue;
        }
        let field = fields.get(gp.q, gp.m)?;
        let code = construct(field, gp.n, gp.k, None)?.code;
        let dual = code.dual()?;
        if !dual.is_nondegenerate() {
            report.check(true, String::new);
            continue;
        }
        let dual_k = gp.n - gp.k;
        let target = lrk(gp.n, gp.m, dual_k, gp.q)?;
        if dual.point_count() <= DUAL_POINT_LIMIT as u128 {
            let ws = dual.weight_spectrum_exhaustive(DUAL_POINT_LIMIT)?.weights;
            report.check(ws.len() != target, || {
                format!("{gp}: nondegenerate dual is optimal with spectrum {ws:?}")
            });
        } else {
            let no_weight_one = !dual_has_weight_one(&dual);
            report.check(no_weight_one && target == gp.n.min(gp.m), || {
                format!(
                    "{gp}: dual with {} points not settled (weight 1 present: {}, L_rk = {target})",
                    dual.point_count(),
                    !no_weight_one
                )
            });
        }
    }
    Ok(report)
}

/// Checks that grid constructions with `1 < k < n` are not MRD and that
/// nondegenerate `k = 1` codes with `n ≤ m` are. The first claim fails at
/// `n = km`, where the construction is one-weight with `d = m`.
pub fn not_mrd(seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("mrd");
    let mut fields = FieldCache::default();
    for gp in acceptance_grid() {
        let field = fields.get(gp.q, gp.m)?;
        let code = construct(field, gp.n, gp.k, None)?.code;
        let mrd = code.is_mrd(GRID_POINT_CAP as u64)?;
        report.check(!mrd, || {
            if gp.n == gp.k * gp.m {
                format!("{gp}: construction is MRD (n = km: one-weight code with d = m meets the Singleton bound)")
            } else {
                format!("{gp}: construction is MRD")
            }
        });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for q in [2u64, 3] {
        for m in 1..=6 {
            let field = fields.get(q, m)?;
            for n in 1..=m {
                let mut codes = vec![RankMetricCode::random_nondegenerate(
                    Arc::clone(&field),
                    n,
                    1,
                    &mut rng,
                )?];
                if n > 1 {
                    codes.push(construct(Arc::clone(&field), n, 1, None)?.code);
                }
                for code in codes {
                    let mrd = code.is_mrd(GRID_POINT_CAP as u64)?;
                    report.check(mrd, || format!("k=1, n={n}, m={m}, q={q}: code is not MRD"));
                }
            }
        }
    }
    Ok(report)
}

fn random_subset(universe: usize, size: usize, rng: &mut StdRng) -> BTreeSet<usize> {
    let picked = rand::seq::index::sample(rng, universe, size);
    picked.into_iter().map(|i| i + 1).collect()
}

/// Interval conditions `s_0 + (2^(j-1) - 1)s + 1 ≤ s_j ≤ 2^(j-1)s`, checked
/// from scratch.
fn recheck_intervals(xs: &[usize], step: usize, set: &BTreeSet<usize>, len: usize) -> bool {
    if xs.len() != len || xs.iter().any(|x| !set.contains(x)) {
        return false;
    }
    let s0 = xs[0];
    let intervals_ok = xs.iter().enumerate().skip(1).all(|(j, &x)| {
        let scale = 1usize << (j - 1);
        s0 + (scale - 1) * step < x && x <= scale * step
    });
    let mut sum = 0;
    let mut superinc = true;
    for (j, &x) in xs.iter().enumerate() {
        if j > 0 && x <= sum {
            superinc = false;
        }
        sum += x;
    }
    intervals_ok && superinc
}

/// Random sets at the threshold sizes `n - s + 2` and `m - h + 2` always
/// contain a lemma witness.
pub fn lemmas(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lemmas");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let k = rng.gen_range(1..=6);
        let n = rng.gen_range(1usize << k..=(1 << k) + 120);
        let s = n >> (k - 1);
        let set = random_subset(n, n - s + 2, &mut rng);
        let found = lemma_small_witness(&set, n, k)?;
        let ok = found
            .as_deref()
            .is_some_and(|xs| recheck_intervals(xs, s, &set, k + 1));
        report.check(ok, || {
            format!("small lemma: n={n}, k={k}, S={set:?} gave {found:?}")
        });
    }
    let mut done = 0;
    while done < samples {
        let m = rng.gen_range(2..=40);
        let k = rng.gen_range(2..=6);
        let n = rng.gen_range((m + 1).max(k)..=k * m);
        let p = params(n, m, k)?;
        let (t, h) = (p.t.unwrap(), p.h.unwrap());
        if h <= 1 {
            continue;
        }
        done += 1;
        let set = random_subset(m, m - h + 2, &mut rng);
        let found = lemma_large_witness(&set, m, t, h)?;
        let ok = found.as_deref().is_some_and(|xs| {
            recheck_intervals(xs, h, &set, t + 2) && satisfies_large_intervals(xs, h)
        });
        report.check(ok, || {
            format!("large lemma: m={m}, t={t}, h={h}, S={set:?} gave {found:?}")
        });
    }
    Ok(report)
}

/// Number of pairwise non-proportional codewords of weight `w`.
fn weight_classes(code: &RankMetricCode, w: usize) -> Result<u64> {
    code.weight_distribution_counts(w, DUAL_POINT_LIMIT)
}

/// The two `k = 2` families and the three `[9, 3]` codes over F_(2^6) with
/// equal-size spectra but different weight distributions.
pub fn classification() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("classification");
    let mut fields = FieldCache::default();
    let f8 = fields.get(2, 8)?;
    let lambda = f8.lambda();

    let v1 = classify_k2_family(Arc::clone(&f8), K2Family::Powers { ell: 4 }, &lambda, None)?;
    let ws = v1.weight_spectrum_exhaustive(DUAL_POINT_LIMIT)?.weights;
    report.check(ws == (4..=8).collect(), || format!("powers family: spectrum {ws:?}"));
    let classes = weight_classes(&v1, 4)?;
    report.check(classes >= 3, || format!("powers family: {classes} minimum-weight classes"));

    let v2 = classify_k2_family(
        Arc::clone(&f8),
        K2Family::SubfieldInterleaved { l: 1 },
        &lambda,
        None,
    )?;
    let ws = v2.weight_spectrum_exhaustive(DUAL_POINT_LIMIT)?.weights;
    report.check(ws == (3..=6).collect(), || format!("interleaved family: spectrum {ws:?}"));
    let classes = weight_classes(&v2, 3)?;
    report.check(classes >= 3, || {
        format!("interleaved family: {classes} minimum-weight classes")
    });

    let f4 = fields.get(2, 4)?;
    let rejected = classify_k2_family(
        Arc::clone(&f4),
        K2Family::SubfieldInterleaved { l: 1 },
        &f4.lambda(),
        None,
    );
    report.check(rejected.is_err(), || "interleaved family accepted at m=4".into());

    let f6 = fields.get(2, 6)?;
    let l6 = f6.lambda();
    let mut spectra = Vec::new();
    for (blocks, min_classes) in [(vec![5, 2, 2], 2..=u64::MAX), (vec![4, 3, 2], 1..=1)] {
        let code = block_diag_code(Arc::clone(&f6), &BlockProfile::new(blocks.clone(), l6))?;
        let ws = code.weight_spectrum_exhaustive(GRID_POINT_CAP as u64)?.weights;
        report.check(ws == (2..=6).collect(), || {
            format!("blocks {blocks:?}: spectrum {ws:?}")
        });
        let classes = weight_classes(&code, 2)?;
        report.check(min_classes.contains(&classes), || {
            format!("blocks {blocks:?}: {classes} weight-2 classes")
        });
        spectra.push(ws);
    }
    let code = block_diag_code(Arc::clone(&f6), &BlockProfile::new(vec![5, 3, 1], l6))?;
    let ws = code.weight_spectrum_exhaustive(GRID_POINT_CAP as u64)?.weights;
    report.check(ws == [1, 3, 4, 5, 6].into_iter().collect(), || {
        format!("blocks [5, 3, 1]: spectrum {ws:?}")
    });
    Ok(report)
}

/// Tables for `(m, k) = (7, 3)` and `(10, 4)` start at `m` for `n = m` and
/// end at 1 for `n = km`.
pub fn plot_endpoints() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("plots");
    for (m, k) in [(7usize, 3usize), (10, 4)] {
        let rows = table(m, k, 2, k * m)?;
        let at = |n: usize| rows.iter().find(|r| r.n == n).map(|r| r.lrk);
        report.check(at(m) == Some(m), || format!("(m={m}, k={k}): L_rk at n=m is {:?}", at(m)));
        report.check(at(k * m) == Some(1), || {
            format!("(m={m}, k={k}): L_rk at n=km is {:?}", at(k * m))
        });
        for r in &rows {
            let fresh = lrk(r.n, m, k, 2)?;
            report.check(r.lrk == fresh, || format!("row n={} disagrees with lrk", r.n));
        }
    }
    Ok(report)
}

/// The system of each grid construction has dimension `n` and spans
/// F_(q^m)^k.
pub fn systems_have_full_dimension() -> Result<SuiteReport> {
    let mut report = SuiteReport::new("systems");
    let mut fields = FieldCache::default();
    for gp in acceptance_grid() {
        let field = fields.get(gp.q, gp.m)?;
        let code = construct(field, gp.n, gp.k, None)?.code;
        let u = associated_system(&code)?;
        report.check(u.dim() == gp.n && u.spans_ambient(), || {
            format!("{gp}: system has dimension {}", u.dim())
        });
    }
    Ok(report)
}

/// Suite names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 8] = [
    "psi",
    "small-grid",
    "large-grid",
    "geometry",
    "duality",
    "mrd",
    "lemmas",
    "classification",
];

/// Runs a named bundle of suites.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    Ok(match name {
        "psi" => vec![psi_identities(64)?],
        "small-grid" | "large-grid" => {
            let regime = if name == "small-grid" {
                Regime::Small
            } else {
                Regime::Large
            };
            vec![
                grid_spectra(Some(regime))?,
                fws_characterization(Some(regime))?,
                upper_bound(20, seed, Some(regime))?,
            ]
        }
        "geometry" => vec![geometry_dictionary(500, 200, seed)?, systems_have_full_dimension()?],
        "duality" => vec![duality()?],
        "mrd" => vec![not_mrd(seed)?],
        "lemmas" => vec![lemmas(1000, seed)?],
        "classification" => vec![classification()?, plot_endpoints()?],
        other => return Err(Error::OutOfRange(format!("unknown suite {other:?}"))),
    })
}
