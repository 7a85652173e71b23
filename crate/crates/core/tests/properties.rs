use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankspectra::code::{random_invertible_ext, random_invertible_fq};
use rankspectra::enumerate::{Enumerator, KernelKind};
use rankspectra::field::{is_irreducible, BaseElem, BaseField, ExtElem, ExtField};
use rankspectra::formulas::{lrk, params, psi, Regime};
use rankspectra::geometry::{geometric_dual, weight_via_dual, weight_via_geometry, QSystem};
use rankspectra::json::CodeJson;
use rankspectra::linalg::{expand_vector, rank_weight, FqMatrix, FqSubspace};
use rankspectra::{Execution, RankMetricCode};

fn tower(q: u64, m: usize) -> Arc<ExtField> {
    let (p, e) = match q {
        4 => (2, 2),
        q => (q, 1),
    };
    Arc::new(ExtField::new(p, e, m).unwrap())
}

fn small_q() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(4), Just(5)]
}

fn random_vec(f: &ExtField, len: usize, rng: &mut ChaCha8Rng) -> Vec<ExtElem> {
    (0..len).map(|_| f.random(rng)).collect()
}

/// Rank over F_p by plain Gaussian elimination on integers mod p.
fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = (1..p).find(|x| x * rows[rank][c] % p == 1).unwrap();
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                let pivot_row = rows[rank].clone();
                for (v, pv) in rows[r].iter_mut().zip(pivot_row) {
                    *v = (*v + p * p - factor * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rank_weight_is_scalar_invariant_and_subadditive(
        q in small_q(), m in 1usize..=8, n in 1usize..=8, seed in any::<u64>()
    ) {
        let f = tower(q, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_vec(&f, n, &mut rng);
        let v = random_vec(&f, n, &mut rng);
        let a = f.random_nonzero(&mut rng);
        let au: Vec<ExtElem> = u.iter().map(|x| f.mul(&a, x)).collect();
        let sum: Vec<ExtElem> = u.iter().zip(&v).map(|(x, y)| f.add(x, y)).collect();
        let (wu, wv) = (rank_weight(&u, &f), rank_weight(&v, &f));
        prop_assert_eq!(rank_weight(&au, &f), wu);
        prop_assert!(rank_weight(&sum, &f) <= wu + wv);
        prop_assert!(wu <= n.min(m));
    }

    #[test]
    fn rank_weight_matches_integer_elimination(
        p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)],
        m in 1usize..=8, n in 1usize..=8, seed in any::<u64>()
    ) {
        let f = tower(p, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vec(&f, n, &mut rng);
        let rows: Vec<Vec<u64>> = v
            .iter()
            .map(|a| f.coords(a).iter().map(|c| c.0 as u64).collect())
            .collect();
        prop_assert_eq!(rank_weight(&v, &f), rank_mod_p(&rows, p));
        prop_assert_eq!(expand_vector(&v, &f).rank(f.base()), rank_mod_p(&rows, p));
    }

    #[test]
    fn lrk_is_q_independent_and_bounded(m in 1usize..=12, k in 1usize..=6, extra in 0usize..72) {
        let n = k + extra % (k * m - k + 1);
        let base = lrk(n, m, k, 2).unwrap();
        for q in [3u64, 4, 5, 7, 9] {
            prop_assert_eq!(lrk(n, m, k, q).unwrap(), base);
        }
        prop_assert!(base >= 1 && base <= n.min(m));
        let p = params(n, m, k).unwrap();
        prop_assert_eq!(p.regime == Regime::Small, n <= m);
        if p.regime == Regime::Large {
            let a = p.a.unwrap();
            prop_assert!(a > m && a <= 2 * m);
        }
    }

    #[test]
    fn psi_halves(u in 2usize..100_000, v_raw in 0usize..20) {
        let v = 2 + v_raw % (u - 1).min(19);
        let parts = psi(u, v).unwrap();
        prop_assert_eq!(parts.iter().sum::<usize>(), u);
        for i in 0..v - 1 {
            let tail: usize = parts[i + 1..].iter().sum();
            prop_assert!(parts[i] == tail || parts[i] == tail + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_frobenius_and_trace(q in small_q(), m in 1usize..=8, seed in any::<u64>()) {
        let f = tower(q, m);
        let b = f.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = f.order();
        for _ in 0..16 {
            let (x, y) = (f.random(&mut rng), f.random(&mut rng));
            prop_assert_eq!(f.pow(&x, order), x);
            prop_assert_eq!(f.from_index(f.index(&x)), x);
            prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x);
            if !y.is_zero() {
                prop_assert_eq!(f.mul(&f.div(&x, &y).unwrap(), &y), x);
            }
            let fx = f.frobenius(&x);
            prop_assert_eq!(f.frobenius(&f.mul(&x, &y)), f.mul(&fx, &f.frobenius(&y)));
            // Tr(x) as the sum of the conjugates, computed by repeated q-th powers
            let mut conj = x;
            let mut total = ExtElem::ZERO;
            for _ in 0..m {
                total = f.add(&total, &conj);
                conj = f.pow(&conj, q as u128);
            }
            prop_assert_eq!(total, f.embed(f.trace(&x)));
            let c = BaseElem(rng.gen_range(0..q) as u8);
            prop_assert_eq!(f.trace(&f.embed(c)), (0..m).fold(BaseElem::ZERO, |acc, _| b.add(acc, c)));
        }
    }

    #[test]
    fn spectrum_is_invariant_under_equivalence(
        q in prop_oneof![Just(2u64), Just(3)], seed in any::<u64>()
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(2..=4);
        let k = 2;
        let n = rng.gen_range(k + 1..=k * m);
        let f = tower(q, m);
        let code = RankMetricCode::random_nondegenerate(Arc::clone(&f), n, k, &mut rng).unwrap();
        let before = code.weight_spectrum_exhaustive(1 << 20).unwrap();
        let a = random_invertible_fq(&f, n, &mut rng);
        let moved = code.transform_columns(&a).unwrap();
        prop_assert_eq!(&moved.weight_spectrum_exhaustive(1 << 20).unwrap().distribution, &before.distribution);
        let bmat = random_invertible_ext(&f, k, &mut rng);
        let rebased = code.change_basis(&bmat).unwrap();
        prop_assert!(rebased.same_code(&code));
        prop_assert_eq!(rebased.weight_spectrum_exhaustive(1 << 20).unwrap().distribution, before.distribution);
    }

    #[test]
    fn kernels_and_executions_agree(q in prop_oneof![Just(2u64), Just(3), Just(4)], seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=7);
        let f = tower(q, m);
        let rows: Vec<Vec<ExtElem>> = (0..k).map(|_| random_vec(&f, n, &mut rng)).collect();
        let Ok(code) = RankMetricCode::from_rows(Arc::clone(&f), &rows) else {
            return Ok(());
        };
        let g = code.generator();
        let reference = Enumerator::with_kernel(&f, g, KernelKind::Reference).histogram(Execution::Sequential);
        let auto = Enumerator::new(&f, g);
        prop_assert_eq!(&auto.histogram(Execution::Sequential), &reference);
        prop_assert_eq!(&auto.histogram(Execution::default()), &reference);
        prop_assert_eq!(reference.iter().sum::<u64>() as u128, auto.point_count());
    }

    #[test]
    fn three_weight_paths_agree(q in prop_oneof![Just(2u64), Just(3)], seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(k..=k * m);
        let f = tower(q, m);
        let code = RankMetricCode::random_nondegenerate(Arc::clone(&f), n, k, &mut rng).unwrap();
        let x = loop {
            let x = random_vec(&f, k, &mut rng);
            if x.iter().any(|a| !a.is_zero()) {
                break x;
            }
        };
        let direct = code.weight_of(&x).unwrap();
        prop_assert_eq!(weight_via_geometry(&code, &x).unwrap(), direct);
        prop_assert_eq!(weight_via_dual(&code, &x).unwrap(), direct);
    }

    #[test]
    fn subspace_dimension_formulas(q in prop_oneof![Just(2u64), Just(3)], seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BaseField::prime(q).unwrap();
        let ambient = rng.gen_range(1..=8);
        let random_sub = |rng: &mut ChaCha8Rng| {
            let rows = rng.gen_range(0..=ambient);
            let data = (0..rows * ambient).map(|_| BaseElem(rng.gen_range(0..q) as u8)).collect();
            FqSubspace::from_rows(&FqMatrix::from_flat(rows, ambient, data).unwrap(), &f)
        };
        let a = random_sub(&mut rng);
        let b = random_sub(&mut rng);
        let sum = a.dim_sum(&b, &f).unwrap();
        let meet = a.dim_intersection(&b, &f).unwrap();
        prop_assert_eq!(sum + meet, a.dim() + b.dim());
        prop_assert_eq!(a.dim() + a.orthogonal(&f).dim(), ambient);
        prop_assert_eq!(a.basis().rank(&f), a.basis().transpose().rank(&f));
    }

    #[test]
    fn geometric_dual_is_an_involution(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = tower(2, 3);
        let dim = rng.gen_range(0..=6);
        let vecs: Vec<Vec<ExtElem>> = (0..dim).map(|_| random_vec(&f, 2, &mut rng)).collect();
        let u = QSystem::span(Arc::clone(&f), 2, &vecs).unwrap();
        let dual = geometric_dual(&u);
        prop_assert_eq!(dual.dim(), 6 - u.dim());
        prop_assert_eq!(geometric_dual(&dual), u);
    }

    #[test]
    fn code_json_round_trips(q in small_q(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(k..=k * m);
        let f = tower(q, m);
        let code = RankMetricCode::random_nondegenerate(f, n, k, &mut rng).unwrap();
        let text = CodeJson::from_code(&code).to_string_pretty();
        prop_assert_eq!(CodeJson::parse(&text).unwrap().to_code().unwrap(), code);
    }
}

/// Number of monic irreducibles of degree `d` over F_q, by Möbius inversion.
fn necklace_count(q: u64, d: u32) -> u64 {
    let mobius = |n: u32| -> i64 {
        let mut n = n;
        let mut sign = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    };
    let total: i64 = (1..=d)
        .filter(|e| d % e == 0)
        .map(|e| mobius(d / e) * (q as i64).pow(e))
        .sum();
    (total / d as i64) as u64
}

#[test]
fn irreducible_counts_match_mobius_formula() {
    for (q, max_d) in [(2u64, 6u32), (3, 5), (4, 4), (5, 4)] {
        let f = match q {
            4 => BaseField::new(2, 2).unwrap(),
            q => BaseField::prime(q).unwrap(),
        };
        for d in 1..=max_d {
            let mut count = 0;
            for idx in 0..q.pow(d) {
                let mut rest = idx;
                let mut poly: Vec<BaseElem> = (0..d)
                    .map(|_| {
                        let c = BaseElem((rest % q) as u8);
                        rest /= q;
                        c
                    })
                    .collect();
                poly.push(BaseElem::ONE);
                count += is_irreducible(&f, &poly) as u64;
            }
            assert_eq!(count, necklace_count(q, d), "q={q}, d={d}");
        }
    }
}

/// The dual from the kernel equals the set of all vectors orthogonal to `C`,
/// found by scanning F_4^3.
#[test]
fn dual_matches_orthogonality_scan() {
    let f = tower(2, 2);
    let elems: Vec<ExtElem> = f.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let row = random_vec(&f, 3, &mut rng);
        let Ok(code) = RankMetricCode::from_rows(Arc::clone(&f), &[row.clone()]) else {
            continue;
        };
        let mut orth = BTreeSet::new();
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    let v = [a, b, c];
                    let dot = (0..3).fold(ExtElem::ZERO, |acc, i| f.add(&acc, &f.mul(&row[i], &v[i])));
                    if dot.is_zero() {
                        orth.insert(v.map(|e| f.index(&e)));
                    }
                }
            }
        }
        let dual = code.dual().unwrap();
        let h = dual.generator().to_rows();
        let mut span = BTreeSet::new();
        for &x in &elems {
            for &y in &elems {
                let v: Vec<u128> = (0..3)
                    .map(|i| f.index(&f.add(&f.mul(&x, &h[0][i]), &f.mul(&y, &h[1][i]))))
                    .collect();
                span.insert([v[0], v[1], v[2]]);
            }
        }
        assert_eq!(span, orth);
        assert!(dual.dual().unwrap().same_code(&code));
    }
}
