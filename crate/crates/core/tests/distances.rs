use symldpc::codes::{c2q_witness, ctranspose_witness, independent_row_family};
use symldpc::gf2::{certify_with_witness, is_stopping_set, tanner_lower_bound, DistanceMethod};
use symldpc::*;

const BUILT: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)];

#[test]
fn row_rank_equals_column_rank() {
    for (n, q) in BUILT {
        let h = build_h(n, q).unwrap();
        assert_eq!(rank_gf2(&h), rank_gf2(&h.transpose()), "({n},{q})");
    }
    assert_eq!(rank_gf2(&build_h(2, 2).unwrap().transpose()), 7);
}

#[test]
fn rank_meets_the_independent_row_bound() {
    for (n, q, want) in [(2, 2, 6), (2, 3, 15), (2, 4, 28)] {
        let inc = Incidence::build(n, q).unwrap();
        let fam = independent_row_family(&inc).unwrap();
        assert_eq!(fam.len(), want);
        assert_eq!(rank_gf2(&inc.h.select_rows(&fam)), want);
        assert!(rank_gf2(&inc.h) >= want);
    }
    assert_eq!(rank_gf2(&build_h(2, 4).unwrap()), 45);
}

#[test]
fn witnesses_are_minimal_dependencies() {
    for (family, n, q) in [
        (Family::Symmetric, 2, 2),
        (Family::SymmetricTranspose, 2, 2),
        (Family::SymmetricTranspose, 2, 3),
        (Family::Symmetric, 2, 3),
    ] {
        let code = make_code(family, n, q).unwrap();
        let d = min_distance(&code.h, SearchBudget::default());
        let w = d.witness.unwrap();
        assert!(code.h.columns_sum_to_zero(&w));
        // Dropping any single column leaves an independent set.
        for skip in 0..w.len() {
            let rest: Vec<usize> = w.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c).collect();
            let sub = SparseBitMatrix::from_rows(
                code.h.nrows(),
                rest.len(),
                code.h
                    .rows()
                    .iter()
                    .map(|r| rest.iter().enumerate().filter(|&(_, c)| r.contains(c)).map(|(i, _)| i).collect())
                    .collect(),
            )
            .unwrap();
            assert_eq!(rank_gf2(&sub), rest.len(), "{} witness not minimal", code.id());
        }
    }
}

#[test]
fn stopping_distance_never_exceeds_minimum_distance() {
    for (family, n, q) in [
        (Family::Symmetric, 2, 2),
        (Family::SymmetricTranspose, 2, 2),
        (Family::Symmetric, 2, 3),
        (Family::SymmetricTranspose, 2, 3),
        (Family::Symmetric, 2, 4),
        (Family::SymmetricTranspose, 2, 4),
    ] {
        let code = make_code(family, n, q).unwrap();
        let d = min_distance(&code.h, SearchBudget::default());
        let s = stopping_distance(&code.h, SearchBudget::default());
        assert!(d.is_exact() && s.is_exact(), "{}", code.id());
        assert!(s.value <= d.value, "{}", code.id());
        assert!(is_stopping_set(&code.h, s.witness.as_ref().unwrap()));
        let tanner = d.tanner_bound.unwrap();
        assert!(d.value.unwrap() >= tanner && s.value.unwrap() >= tanner);
    }
}

#[test]
fn tanner_bounds_for_both_families() {
    for q in [2, 3, 4, 5] {
        let ct = make_code(Family::SymmetricTranspose, 2, q).unwrap();
        assert_eq!(tanner_lower_bound(8, q).unwrap(), 2 * q);
        assert_eq!(min_distance(&ct.h, SearchBudget::default()).tanner_bound, Some(2 * q));
    }
    assert_eq!(tanner_lower_bound(8, 7).unwrap(), 14); // H(3,2): γ = 7
    assert_eq!(tanner_lower_bound(6, 3).unwrap(), 4);
    assert!(matches!(tanner_lower_bound(4, 3), Err(Error::UnsupportedGirth(4))));
}

#[test]
fn binary_field_codes_have_full_length_distance() {
    // H(n,2) has two ones per row, so codewords are unions of components of
    // the connected point graph.
    for n in [2, 3] {
        let code = make_code(Family::Symmetric, n, 2).unwrap();
        let len = 1usize << (n * (n + 1) / 2);
        assert_eq!(min_distance(&code.h, SearchBudget::default()).value, Some(len));
        let s = stopping_distance(&code.h, SearchBudget { max_weight: len, ..SearchBudget::default() });
        assert!(s.is_exact());
        assert_eq!(s.value, Some(len));
    }
}

#[test]
fn transpose_witness_in_higher_dimension() {
    let inc = Incidence::build(3, 2).unwrap();
    let w = ctranspose_witness(&inc).unwrap();
    assert_eq!(w.len(), 4);
    assert!(inc.h.transpose().columns_sum_to_zero(&w));
    let cert = certify_with_witness(&inc.h.transpose(), &w, 4).unwrap();
    assert!(cert.is_exact());
    assert_eq!(cert.method, DistanceMethod::WitnessPlusBound);
}

#[test]
fn c2q_witness_at_q2_is_every_point() {
    let s = SymSpace::with_order(2, 2).unwrap();
    assert_eq!(c2q_witness(&s).unwrap(), (0..8).collect::<Vec<_>>());
    let odd = SymSpace::with_order(2, 3).unwrap();
    assert!(matches!(c2q_witness(&odd), Err(Error::BadCharacteristic(3))));
}

#[test]
fn c25_distance_is_bracketed() {
    // Only the bracket is checked here; the exact value is out of reach.
    let code = make_code(Family::Symmetric, 2, 5).unwrap();
    let d = min_distance(&code.h, SearchBudget { max_weight: 20, max_nodes: 2_000_000 });
    assert_eq!(d.tanner_bound, Some(12));
    assert!(d.value.unwrap() >= 12);
    if d.is_exact() {
        assert!(code.h.columns_sum_to_zero(d.witness.as_ref().unwrap()));
    }
}

#[test]
fn budget_exhaustion_is_reported_as_lower_bound() {
    let code = make_code(Family::SymmetricTranspose, 2, 4).unwrap();
    let d = min_distance(&code.h, SearchBudget { max_weight: 5, ..SearchBudget::default() });
    assert_eq!(d.status, DistanceStatus::LowerBoundOnly);
    assert!(d.value.unwrap() >= 8, "Tanner bound lifts the exhausted weight");
    assert!(d.witness.is_none());
}

#[test]
fn gallager_ensemble_shapes() {
    let r12 = gallager_random(12, 2, 3, 5).unwrap();
    assert_eq!((r12.h.nrows(), r12.h.ncols()), (8, 12));
    assert!(r12.h.row_weights().iter().all(|&w| w == 3));
    assert!(r12.h.col_weights().iter().all(|&w| w == 2));
    let a = gallager_random(64, 3, 4, 9).unwrap();
    let b = gallager_random(64, 3, 4, 9).unwrap();
    assert_eq!(a.h, b.h);
    let r80 = gallager_random(80, 3, 5, 2).unwrap();
    assert_eq!((r80.h.nrows(), r80.h.ncols()), (48, 80));
    assert!(r80.h.row_weights().iter().all(|&w| w == 5));
    assert!(r80.h.col_weights().iter().all(|&w| w == 3));
    assert!(matches!(gallager_random(10, 3, 4, 1), Err(Error::BadParameters(_))));
}
