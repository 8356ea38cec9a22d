//! CSV output for simulation results.

use std::io::Write;

use serde::Serialize;
use symldpc::SimResult;

/// Column order fixes the header:
/// `code_id,channel,param,trials,word_errors,bit_errors,wer,ber,seed`.
#[derive(Serialize)]
struct Row<'a> {
    code_id: &'a str,
    channel: String,
    param: f64,
    trials: u64,
    word_errors: u64,
    bit_errors: u64,
    wer: f64,
    ber: f64,
    seed: u64,
}

pub fn write_results<W: Write>(out: W, results: &[SimResult]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in results {
        w.serialize(Row {
            code_id: &r.code_id,
            channel: r.channel.to_string(),
            param: r.param,
            trials: r.trials,
            word_errors: r.word_errors,
            bit_errors: r.bit_errors,
            wer: r.wer,
            ber: r.ber,
            seed: r.seed,
        })?;
    }
    if results.is_empty() {
        w.write_record(["code_id", "channel", "param", "trials", "word_errors", "bit_errors", "wer", "ber", "seed"])?;
    }
    w.flush()?;
    Ok(())
}
