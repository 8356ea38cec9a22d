//! Monte-Carlo WER/BER sweeps.
//!
//! Every trial transmits the all-zero codeword. Noise for trial `t` at sweep
//! point `i` comes from a ChaCha8 stream keyed by `(seed, i, t)`, so counts
//! depend only on the code, the channel parameters, the seed and the trial
//! count, never on the worker count or schedule.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::CodeSpec;
use crate::decode::{peel_decode_bec, AwgnChannel, BpDecoder, DEFAULT_MAX_ITERS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    Awgn,
    Bec,
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Awgn => "awgn",
            Channel::Bec => "bec",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimResult {
    pub code_id: String,
    pub channel: Channel,
    /// Eb/N0 in dB for AWGN, erasure probability for BEC.
    pub param: f64,
    pub trials: u64,
    pub word_errors: u64,
    pub bit_errors: u64,
    pub wer: f64,
    pub ber: f64,
    pub seed: u64,
    pub elapsed: Duration,
}

impl SimResult {
    /// Same counts and parameters, ignoring wall-clock time.
    pub fn same_counts(&self, other: &SimResult) -> bool {
        SimResult { elapsed: Duration::ZERO, ..self.clone() } == SimResult { elapsed: Duration::ZERO, ..other.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimOptions {
    pub trials: u64,
    pub seed: u64,
    pub max_iters: usize,
    /// Worker threads; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl SimOptions {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimOptions { trials, seed, max_iters: DEFAULT_MAX_ITERS, threads: None }
    }
}

fn trial_rng(base: &ChaCha8Rng, point: usize, trial: u64) -> ChaCha8Rng {
    let mut rng = base.clone();
    rng.set_stream(((point as u64) << 32) | trial);
    rng.set_word_pos(0);
    rng
}

fn validate(opts: &SimOptions) -> Result<()> {
    if opts.trials == 0 {
        return Err(Error::BadParameters("trials must be at least 1".into()));
    }
    if opts.trials > u32::MAX as u64 {
        return Err(Error::BadParameters("at most 2^32 - 1 trials per point".into()));
    }
    if opts.max_iters == 0 {
        return Err(Error::BadParameters("max_iters must be at least 1".into()));
    }
    Ok(())
}

fn in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(job()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::BadParameters(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

fn result(
    code: &CodeSpec,
    channel: Channel,
    param: f64,
    opts: &SimOptions,
    counts: (u64, u64),
    start: Instant,
) -> SimResult {
    let (word_errors, bit_errors) = counts;
    SimResult {
        code_id: code.id(),
        channel,
        param,
        trials: opts.trials,
        word_errors,
        bit_errors,
        wer: word_errors as f64 / opts.trials as f64,
        ber: bit_errors as f64 / (opts.trials as f64 * code.length as f64),
        seed: opts.seed,
        elapsed: start.elapsed(),
    }
}

/// Sum-product decoding over BPSK/AWGN at each Eb/N0 in `ebno_db`.
pub fn run_awgn_sweep(code: &CodeSpec, ebno_db: &[f64], opts: &SimOptions) -> Result<Vec<SimResult>> {
    validate(opts)?;
    let channels = ebno_db.iter().map(|&e| AwgnChannel::new(e, code.rate())).collect::<Result<Vec<_>>>()?;
    let base = ChaCha8Rng::seed_from_u64(opts.seed);
    let h = &code.h;
    let len = code.length;
    in_pool(opts.threads, || {
        channels
            .iter()
            .enumerate()
            .map(|(point, ch)| {
                let start = Instant::now();
                let counts = (0..opts.trials)
                    .into_par_iter()
                    .map_init(
                        || (BpDecoder::new(h), vec![0.0f64; len]),
                        |(dec, llr), t| {
                            let mut rng = trial_rng(&base, point, t);
                            for l in llr.iter_mut() {
                                let z: f64 = rng.sample(StandardNormal);
                                *l = ch.llr(1.0 + ch.sigma * z);
                            }
                            let out = dec.decode(llr, opts.max_iters).expect("llr length matches code");
                            let bits = out.word.iter().filter(|&&b| b != 0).count() as u64;
                            (u64::from(bits > 0), bits)
                        },
                    )
                    .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
                result(code, Channel::Awgn, ch.ebno_db, opts, counts, start)
            })
            .collect()
    })
}

/// Peeling decoding over the BEC at each erasure probability.
pub fn run_bec_sweep(code: &CodeSpec, erasure_probs: &[f64], opts: &SimOptions) -> Result<Vec<SimResult>> {
    validate(opts)?;
    if let Some(p) = erasure_probs.iter().find(|p| !(0.0..1.0).contains(*p)) {
        return Err(Error::BadParameters(format!("erasure probability {p} outside [0, 1)")));
    }
    let base = ChaCha8Rng::seed_from_u64(opts.seed);
    let h = &code.h;
    let len = code.length;
    in_pool(opts.threads, || {
        erasure_probs
            .iter()
            .enumerate()
            .map(|(point, &p)| {
                let start = Instant::now();
                let counts = (0..opts.trials)
                    .into_par_iter()
                    .map(|t| {
                        let mut rng = trial_rng(&base, point, t);
                        let rx: Vec<Option<u8>> =
                            (0..len).map(|_| if rng.random::<f64>() < p { None } else { Some(0) }).collect();
                        let out = peel_decode_bec(h, &rx).expect("all-zero word is consistent");
                        // Unresolved erasures count as bit errors.
                        let bits = (out.word.iter().filter(|&&b| b != 0).count() + out.remaining_erasures.len()) as u64;
                        (u64::from(bits > 0), bits)
                    })
                    .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
                result(code, Channel::Bec, p, opts, counts, start)
            })
            .collect()
    })
}
