//! Flooding sum-product decoding on the AWGN channel and peeling decoding on
//! the binary erasure channel.
//!
//! BPSK maps bit 0 to +1 and bit 1 to -1, so a positive log-likelihood ratio
//! favours 0 and the channel LLR of a received sample `y` is `2y/σ²`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sparse::SparseBitMatrix;

pub const DEFAULT_MAX_ITERS: usize = 50;
/// Magnitude cap for every channel and internal message.
pub const LLR_CLIP: f64 = 30.0;
// Keeps atanh finite; 2·atanh(1 - 1e-12) ≈ 28.3 < LLR_CLIP.
const TANH_CLAMP: f64 = 1.0 - 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    Converged,
    MaxIters,
    Stalled,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    /// Hard decision; unresolved erasures read as 0.
    pub word: Vec<u8>,
    /// BP iterations run, or bits recovered by peeling.
    pub iterations: usize,
    pub syndrome_ok: bool,
    /// Positions still erased after peeling (empty for BP).
    pub remaining_erasures: Vec<usize>,
}

/// Binary-input AWGN channel parameterised by Eb/N0 and code rate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AwgnChannel {
    pub ebno_db: f64,
    pub rate: f64,
    pub sigma: f64,
}

impl AwgnChannel {
    /// `σ² = 1 / (2·R·10^(Eb/N0 / 10))`.
    pub fn new(ebno_db: f64, rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate <= 1.0) || !ebno_db.is_finite() {
            return Err(Error::BadParameters(format!("rate {rate} or Eb/N0 {ebno_db} out of range")));
        }
        let sigma = (1.0 / (2.0 * rate * 10f64.powf(ebno_db / 10.0))).sqrt();
        Ok(AwgnChannel { ebno_db, rate, sigma })
    }

    #[inline]
    pub fn llr(&self, y: f64) -> f64 {
        2.0 * y / (self.sigma * self.sigma)
    }
}

/// Message buffers for sum-product decoding of one code. The edge layout is
/// check-major; each instance is single-threaded.
#[derive(Clone, Debug)]
pub struct BpDecoder<'a> {
    h: &'a SparseBitMatrix,
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    var_edges: Vec<Vec<usize>>,
    v2c: Vec<f64>,
    c2v: Vec<f64>,
    tanh_buf: Vec<f64>,
    total: Vec<f64>,
}

#[inline]
fn clip(x: f64) -> f64 {
    x.clamp(-LLR_CLIP, LLR_CLIP)
}

impl<'a> BpDecoder<'a> {
    pub fn new(h: &'a SparseBitMatrix) -> Self {
        let mut check_start = Vec::with_capacity(h.nrows() + 1);
        let mut edge_var = Vec::with_capacity(h.edge_count());
        let mut var_edges = vec![Vec::new(); h.ncols()];
        check_start.push(0);
        for row in h.rows() {
            for &v in row {
                var_edges[v].push(edge_var.len());
                edge_var.push(v);
            }
            check_start.push(edge_var.len());
        }
        let e = edge_var.len();
        BpDecoder {
            h,
            check_start,
            edge_var,
            var_edges,
            v2c: vec![0.0; e],
            c2v: vec![0.0; e],
            tanh_buf: vec![0.0; e],
            total: vec![0.0; h.ncols()],
        }
    }

    pub fn decode(&mut self, llr: &[f64], max_iters: usize) -> Result<DecodeOutcome> {
        let n = self.h.ncols();
        if llr.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: llr.len() });
        }
        if max_iters == 0 {
            return Err(Error::BadParameters("max_iters must be at least 1".into()));
        }
        for (e, &v) in self.edge_var.iter().enumerate() {
            self.v2c[e] = clip(llr[v]);
        }
        let mut word = vec![0u8; n];
        for iter in 1..=max_iters {
            for c in 0..self.h.nrows() {
                let (lo, hi) = (self.check_start[c], self.check_start[c + 1]);
                for e in lo..hi {
                    self.tanh_buf[e] = (0.5 * self.v2c[e]).tanh();
                }
                // Leave-one-out products via a forward pass then a backward pass.
                let mut acc = 1.0;
                for e in lo..hi {
                    self.c2v[e] = acc;
                    acc *= self.tanh_buf[e];
                }
                let mut acc = 1.0;
                for e in (lo..hi).rev() {
                    let prod = (self.c2v[e] * acc).clamp(-TANH_CLAMP, TANH_CLAMP);
                    self.c2v[e] = clip(2.0 * prod.atanh());
                    acc *= self.tanh_buf[e];
                }
            }
            for v in 0..n {
                let mut t = clip(llr[v]);
                for &e in &self.var_edges[v] {
                    t += self.c2v[e];
                }
                self.total[v] = t;
                for &e in &self.var_edges[v] {
                    self.v2c[e] = clip(t - self.c2v[e]);
                }
                word[v] = u8::from(t < 0.0);
            }
            if self.h.syndrome_ok(&word) {
                return Ok(DecodeOutcome {
                    status: DecodeStatus::Converged,
                    word,
                    iterations: iter,
                    syndrome_ok: true,
                    remaining_erasures: Vec::new(),
                });
            }
        }
        Ok(DecodeOutcome {
            status: DecodeStatus::MaxIters,
            word,
            iterations: max_iters,
            syndrome_ok: false,
            remaining_erasures: Vec::new(),
        })
    }

    /// Posterior LLRs from the last decode.
    pub fn posteriors(&self) -> &[f64] {
        &self.total
    }
}

pub fn bp_decode_awgn(h: &SparseBitMatrix, llr: &[f64], max_iters: usize) -> Result<DecodeOutcome> {
    BpDecoder::new(h).decode(llr, max_iters)
}

/// Peeling decoder: repeatedly resolves checks with exactly one erased
/// participant. `None` marks an erasure. Stalls exactly when the remaining
/// erasures form a nonempty stopping set.
pub fn peel_decode_bec(h: &SparseBitMatrix, received: &[Option<u8>]) -> Result<DecodeOutcome> {
    let n = h.ncols();
    if received.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: received.len() });
    }
    let mut word: Vec<Option<u8>> = received.iter().map(|b| b.map(|x| x & 1)).collect();
    let mut erased = vec![0usize; h.nrows()];
    let mut parity = vec![0u8; h.nrows()];
    for (c, row) in h.rows().iter().enumerate() {
        for &v in row {
            match word[v] {
                Some(b) => parity[c] ^= b,
                None => erased[c] += 1,
            }
        }
    }
    let mut queue: VecDeque<usize> = (0..h.nrows()).filter(|&c| erased[c] == 1).collect();
    let mut recovered = 0;
    while let Some(c) = queue.pop_front() {
        if erased[c] != 1 {
            continue;
        }
        let v = *h.row(c).iter().find(|&&v| word[v].is_none()).expect("one erasure left");
        let bit = parity[c];
        word[v] = Some(bit);
        recovered += 1;
        for &c2 in h.col(v) {
            erased[c2] -= 1;
            parity[c2] ^= bit;
            if erased[c2] == 1 {
                queue.push_back(c2);
            }
        }
    }
    if let Some(c) = (0..h.nrows()).find(|&c| erased[c] == 0 && parity[c] != 0) {
        return Err(Error::Inconsistent(c));
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| word[v].is_none()).collect();
    let hard: Vec<u8> = word.iter().map(|b| b.unwrap_or(0)).collect();
    let status = if remaining.is_empty() { DecodeStatus::Converged } else { DecodeStatus::Stalled };
    Ok(DecodeOutcome {
        status,
        syndrome_ok: h.syndrome_ok(&hard),
        word: hard,
        iterations: recovered,
        remaining_erasures: remaining,
    })
}
