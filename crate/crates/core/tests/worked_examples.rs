use std::collections::BTreeSet;
use std::sync::Arc;

use rankspectra::constructions::{
    block_diag_code, classify_k2_family, construct, dual_counterexample_pair, u_vec, BlockProfile,
    K2Family,
};
use rankspectra::enumerate::projective_count;
use rankspectra::field::{ExtElem, ExtField};
use rankspectra::formulas::params;
use rankspectra::geometry::{associated_system, weight_via_dual, weight_via_geometry, QSystem};
use rankspectra::linalg::rank_weight;
use rankspectra::suites::acceptance_grid;
use rankspectra::{Error, RankMetricCode};

fn tower(q: u64, m: usize) -> Arc<ExtField> {
    Arc::new(ExtField::new(q, 1, m).unwrap())
}

fn set(range: std::ops::RangeInclusive<usize>) -> BTreeSet<usize> {
    range.collect()
}

fn blocks(f: &Arc<ExtField>, b: &[usize]) -> RankMetricCode {
    block_diag_code(Arc::clone(f), &BlockProfile::new(b.to_vec(), f.lambda())).unwrap()
}

#[test]
fn seven_two_code_and_its_words() {
    let f = tower(2, 7);
    let code = blocks(&f, &[4, 3]);
    let l = f.lambda();
    let one = f.one();
    let z = ExtElem::ZERO;
    let word = code.codeword(&[l, one]).unwrap();
    let pw = |e: u128| f.pow(&l, e);
    assert_eq!(word, vec![pw(1), pw(2), pw(3), pw(4), one, pw(1), pw(2)]);
    assert_eq!(rank_weight(&word, &f), 5);
    assert_eq!(code.weight_of(&[one, z]).unwrap(), 4);
    let report = code.weight_spectrum_exhaustive(1 << 20).unwrap();
    assert_eq!(report.weights, set(3..=7));
    assert_eq!(code.min_distance(1 << 20).unwrap(), 3);
    assert!(code.is_lrk_optimal(1 << 20).unwrap());
    assert_eq!(weight_via_geometry(&code, &[l, one]).unwrap(), 5);
    assert_eq!(weight_via_dual(&code, &[l, one]).unwrap(), 5);
}

#[test]
fn system_of_block_code_is_a_product() {
    let f = tower(2, 7);
    let code = blocks(&f, &[4, 3]);
    let u = associated_system(&code).unwrap();
    let mut gens = Vec::new();
    for a in u_vec(&f, &f.lambda(), 4).unwrap() {
        gens.push(vec![a, ExtElem::ZERO]);
    }
    for a in u_vec(&f, &f.lambda(), 3).unwrap() {
        gens.push(vec![ExtElem::ZERO, a]);
    }
    let product = QSystem::span(Arc::clone(&f), 2, &gens).unwrap();
    assert_eq!(u, product);
    assert_eq!(u.dim(), 7);
}

#[test]
fn simplex_code_is_one_weight() {
    let f = tower(2, 3);
    let c = construct(Arc::clone(&f), 6, 2, None).unwrap().code;
    let report = c.weight_spectrum_exhaustive(1000).unwrap();
    assert_eq!(report.weights, BTreeSet::from([3]));
    assert_eq!(c.weight_distribution_counts(3, 1000).unwrap(), 9);
    assert_eq!(c.simplex_defect(), 0);
    assert!(c.is_mrd(1000).unwrap());
    assert_eq!(associated_system(&c).unwrap().dim(), 6);
}

#[test]
fn non_optimal_code_is_detected() {
    let f = tower(2, 7);
    let code = blocks(&f, &[6, 1]);
    assert_eq!(code.weight_spectrum_exhaustive(1 << 20).unwrap().weights, BTreeSet::from([1, 6, 7]));
    assert!(!code.is_lrk_optimal(1 << 20).unwrap());
    let degenerate = RankMetricCode::from_rows(Arc::clone(&f), &[vec![f.one(), f.one(), f.lambda()]]).unwrap();
    assert!(!degenerate.is_nondegenerate());
    assert!(matches!(degenerate.is_lrk_optimal(1 << 20), Err(Error::Degenerate)));
}

#[test]
fn simplex_defect_examples() {
    let f6 = tower(2, 6);
    assert_eq!(construct(f6, 10, 4, None).unwrap().code.simplex_defect(), 14);
    let f5 = tower(2, 5);
    assert_eq!(construct(f5, 11, 4, None).unwrap().code.simplex_defect(), 9);
    let p = params(11, 5, 4).unwrap();
    assert_eq!((p.t, p.a, p.h, p.z), (Some(1), Some(6), Some(1), Some(0)));
}

/// Nondegeneracy is equivalent to the dual having no weight-1 word.
#[test]
fn nondegeneracy_matches_dual_distance() {
    let mut fields = rankspectra::suites::FieldCache::default();
    let mut checked = 0;
    for gp in acceptance_grid() {
        if gp.n == gp.k * gp.m {
            continue;
        }
        let f = fields.get(gp.q, gp.m).unwrap();
        let code = construct(Arc::clone(&f), gp.n, gp.k, None).unwrap().code;
        let dual = code.dual().unwrap();
        if dual.point_count() > 200_000 {
            continue;
        }
        assert!(code.is_nondegenerate());
        assert!(dual.min_distance(200_000).unwrap() > 1, "{gp}");
        // repeating a column makes the code degenerate
        let mut rows = code.generator().to_rows();
        for r in rows.iter_mut() {
            let first = r[0];
            r.push(first);
        }
        let widened = RankMetricCode::from_rows(Arc::clone(&f), &rows).unwrap();
        assert!(!widened.is_nondegenerate());
        if widened.dual().unwrap().point_count() <= 200_000 {
            assert_eq!(widened.dual().unwrap().min_distance(200_000).unwrap(), 1, "{gp}");
        }
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn counterexample_pair_paths_agree_on_every_point() {
    let f = tower(2, 4);
    let (g, h) = dual_counterexample_pair(Arc::clone(&f)).unwrap();
    let elems: Vec<ExtElem> = f.elements().collect();
    for code in [&g, &h] {
        let mut points = 0;
        let mut weights = BTreeSet::new();
        for &a in &elems {
            for &b in &elems {
                // projective representatives: leading nonzero entry 1
                let lead_ok = (a == f.one()) || (a.is_zero() && b == f.one());
                if !lead_ok {
                    continue;
                }
                points += 1;
                let x = [a, b];
                let w = code.weight_of(&x).unwrap();
                assert_eq!(weight_via_geometry(code, &x).unwrap(), w);
                assert_eq!(weight_via_dual(code, &x).unwrap(), w);
                weights.insert(w);
            }
        }
        assert_eq!(points, 17);
        assert_eq!(weights, set(2..=4));
    }
    let gram = g.generator().mul(&h.generator().transpose(), &f).unwrap();
    assert!((0..2).all(|r| (0..2).all(|c| gram.get(r, c).is_zero())));
}

#[test]
fn codes_with_equal_spectra_but_different_distributions() {
    let f = tower(2, 6);
    let c1 = blocks(&f, &[5, 2, 2]);
    let c2 = blocks(&f, &[4, 3, 2]);
    let c3 = blocks(&f, &[5, 3, 1]);
    for c in [&c1, &c2] {
        assert_eq!(c.weight_spectrum_exhaustive(1 << 20).unwrap().weights, set(2..=6));
    }
    assert!(c1.weight_distribution_counts(2, 1 << 20).unwrap() >= 2);
    assert_eq!(c2.weight_distribution_counts(2, 1 << 20).unwrap(), 1);
    assert_eq!(
        c3.weight_spectrum_exhaustive(1 << 20).unwrap().weights,
        BTreeSet::from([1, 3, 4, 5, 6])
    );
    assert_eq!(c1.weight_distribution_counts(0, 1 << 20).unwrap(), 0);
    assert_eq!(c1.weight_distribution_counts(7, 1 << 20).unwrap(), 0);
}

#[test]
fn two_dimensional_families() {
    let f8 = tower(2, 8);
    let l = f8.lambda();
    let v1 = classify_k2_family(Arc::clone(&f8), K2Family::Powers { ell: 4 }, &l, None).unwrap();
    assert_eq!(v1.point_count(), projective_count(256, 2));
    assert_eq!(v1.weight_spectrum_exhaustive(1 << 20).unwrap().weights, set(4..=8));
    assert!(v1.weight_distribution_counts(4, 1 << 20).unwrap() >= 3);
    assert!(matches!(
        classify_k2_family(Arc::clone(&f8), K2Family::Powers { ell: 5 }, &l, None),
        Err(Error::PreconditionViolated(_))
    ));

    let v2 = classify_k2_family(Arc::clone(&f8), K2Family::SubfieldInterleaved { l: 1 }, &l, None)
        .unwrap();
    assert_eq!(v2.n(), 6);
    assert_eq!(v2.weight_spectrum_exhaustive(1 << 20).unwrap().weights, set(3..=6));
    assert!(v2.weight_distribution_counts(3, 1 << 20).unwrap() >= 3);

    let f4 = tower(2, 4);
    assert!(matches!(
        classify_k2_family(Arc::clone(&f4), K2Family::SubfieldInterleaved { l: 1 }, &f4.lambda(), None),
        Err(Error::PreconditionViolated(_))
    ));
    let f7 = tower(2, 7);
    assert!(matches!(
        classify_k2_family(f7.clone(), K2Family::SubfieldInterleaved { l: 1 }, &f7.lambda(), None),
        Err(Error::MOdd(7))
    ));
}

#[test]
fn witnesses_lie_in_the_exhaustive_spectrum() {
    let mut fields = rankspectra::suites::FieldCache::default();
    for gp in acceptance_grid().into_iter().step_by(7) {
        let f = fields.get(gp.q, gp.m).unwrap();
        let c = construct(f, gp.n, gp.k, None).unwrap();
        let exhaustive = c.code.weight_spectrum_exhaustive(200_000).unwrap().weights;
        let witnessed = c.code.weight_spectrum_witness(&c.witnesses.witnesses()).unwrap().weights;
        assert!(witnessed.is_subset(&exhaustive), "{gp}");
    }
    let f = tower(2, 3);
    let c = construct(f, 4, 2, None).unwrap();
    assert!(c.code.weight_spectrum_witness(&[]).unwrap().weights.is_empty());
}
