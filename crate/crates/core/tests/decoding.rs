use proptest::prelude::*;
use symldpc::codes::ctranspose_witness;
use symldpc::*;

fn ct22() -> CodeSpec {
    make_code(Family::SymmetricTranspose, 2, 2).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

#[test]
fn small_erasure_sets_always_resolve() {
    let code = ct22();
    let mut count = 0;
    for k in 1..4 {
        for set in subsets(12, k) {
            let mut rx = vec![Some(0u8); 12];
            set.iter().for_each(|&i| rx[i] = None);
            let out = peel_decode_bec(&code.h, &rx).unwrap();
            assert_eq!(out.status, DecodeStatus::Converged, "{set:?}");
            assert_eq!(out.iterations, k);
            count += 1;
        }
    }
    assert_eq!(count, 12 + 66 + 220);
}

#[test]
fn erasing_a_codeword_support_stalls() {
    let code = ct22();
    let w = ctranspose_witness(code.incidence.as_ref().unwrap()).unwrap();
    let mut rx = vec![Some(0u8); 12];
    w.iter().for_each(|&i| rx[i] = None);
    let out = peel_decode_bec(&code.h, &rx).unwrap();
    assert_eq!(out.status, DecodeStatus::Stalled);
    assert_eq!(out.remaining_erasures, w);
    assert_eq!(out.iterations, 0);
}

#[test]
fn peeling_recovers_a_nonzero_codeword() {
    let code = ct22();
    let w = ctranspose_witness(code.incidence.as_ref().unwrap()).unwrap();
    let mut word = vec![0u8; 12];
    w.iter().for_each(|&i| word[i] = 1);
    let mut rx: Vec<Option<u8>> = word.iter().map(|&b| Some(b)).collect();
    rx[w[0]] = None;
    rx[(w[0] + 1) % 12] = None;
    let out = peel_decode_bec(&code.h, &rx).unwrap();
    assert_eq!(out.status, DecodeStatus::Converged);
    assert_eq!(out.word, word);
}

#[test]
fn noiseless_nonzero_codeword_is_a_fixed_point() {
    let code = ct22();
    let w = ctranspose_witness(code.incidence.as_ref().unwrap()).unwrap();
    let llr: Vec<f64> = (0..12).map(|i| if w.contains(&i) { f64::NEG_INFINITY } else { f64::INFINITY }).collect();
    let out = bp_decode_awgn(&code.h, &llr, 50).unwrap();
    assert_eq!(out.status, DecodeStatus::Converged);
    assert!(out.syndrome_ok);
    assert_eq!(out.iterations, 1);
    assert!((0..12).all(|i| (out.word[i] == 1) == w.contains(&i)));
}

#[test]
fn higher_snr_gives_fewer_word_errors_on_shared_noise() {
    let code = ct22();
    let opts = SimOptions::new(1000, 21);
    // Single-point sweeps share the noise stream of point 0.
    let low = run_awgn_sweep(&code, &[2.0], &opts).unwrap();
    let high = run_awgn_sweep(&code, &[8.0], &opts).unwrap();
    assert!(high[0].word_errors < low[0].word_errors, "{} vs {}", high[0].word_errors, low[0].word_errors);
}

#[test]
fn bec_sweep_is_reproducible() {
    let code = ct22();
    let mut opts = SimOptions::new(10_000, 4);
    let a = run_bec_sweep(&code, &[0.1], &opts).unwrap();
    opts.threads = Some(2);
    let b = run_bec_sweep(&code, &[0.1], &opts).unwrap();
    assert!(a[0].same_counts(&b[0]));
    assert!(a[0].word_errors > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn converged_implies_valid_syndrome(llr in prop::collection::vec(-6.0f64..6.0, 12)) {
        let code = ct22();
        let out = bp_decode_awgn(&code.h, &llr, 20).unwrap();
        prop_assert_eq!(out.syndrome_ok, code.h.syndrome_ok(&out.word));
        if out.status == DecodeStatus::Converged {
            prop_assert!(out.syndrome_ok);
        }
    }

    #[test]
    fn sign_flip_by_a_codeword_commutes_with_decoding(
        llr in prop::collection::vec(-6.0f64..6.0, 12),
        pick in 1u32..32,
    ) {
        let code = ct22();
        // A codeword from the null-space basis, selected by `pick`.
        let basis = symldpc::gf2::null_space_basis(&code.h);
        prop_assert_eq!(basis.len(), 5);
        let mut c = 0u64;
        for (i, b) in basis.iter().enumerate() {
            if pick >> i & 1 == 1 {
                c ^= b[0];
            }
        }
        let flipped: Vec<f64> = (0..12).map(|i| if c >> i & 1 == 1 { -llr[i] } else { llr[i] }).collect();
        let a = bp_decode_awgn(&code.h, &llr, 20).unwrap();
        let b = bp_decode_awgn(&code.h, &flipped, 20).unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.iterations, b.iterations);
        for i in 0..12 {
            prop_assert_eq!(a.word[i] ^ (c >> i & 1) as u8, b.word[i]);
        }
    }
}
