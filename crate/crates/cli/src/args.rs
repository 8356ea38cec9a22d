//! Command-line arguments. Every struct serialises so `--dry-run` can echo
//! the configuration exactly as parsed.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symldpc::Family;

#[derive(Debug, Parser, Serialize)]
#[command(name = "symldpc", version, about = "LDPC codes from symmetric matrices over finite fields")]
pub struct Cli {
    /// Print the parsed configuration as JSON and exit.
    #[arg(long, global = true)]
    pub dry_run: bool,

    /// Worker threads for parallel searches and simulations.
    #[arg(long, global = true, env = "SYMLDPC_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Build H(n,q) or its transpose and write it with a metadata sidecar.
    Build(BuildArgs),
    /// Run structural and distance checks and print a JSON report.
    Analyze(AnalyzeArgs),
    /// Monte-Carlo WER/BER sweep written as CSV.
    Simulate(SimulateArgs),
    /// Convert a parity-check matrix to another format.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyArg {
    Symmetric,
    #[value(alias = "symmetric_transpose", alias = "transpose")]
    SymmetricTranspose,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Symmetric => Family::Symmetric,
            FamilyArg::SymmetricTranspose => Family::SymmetricTranspose,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Alist,
    /// One row per line of 0/1 characters.
    Dense,
    /// `{"nrows", "ncols", "rows"}` with 0-based row supports.
    Json,
}

/// A code given either by family parameters or by an alist file.
#[derive(Clone, Debug, Args, Serialize)]
pub struct CodeSource {
    /// Read the parity-check matrix from an alist file. Giving --n and --q
    /// as well labels it as that family member for the family-specific checks.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Matrix order.
    #[arg(long, required_unless_present = "input")]
    pub n: Option<usize>,
    /// Field order, a prime power.
    #[arg(long, required_unless_present = "input")]
    pub q: Option<usize>,
    #[arg(long, value_enum, default_value_t = FamilyArg::Symmetric)]
    pub family: FamilyArg,
}

#[derive(Debug, Args, Serialize)]
pub struct BuildArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, value_enum, default_value_t = FamilyArg::Symmetric)]
    pub family: FamilyArg,
    /// Output path; the metadata goes next to it with extension `.meta.json`.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Alist)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Structure,
    Girth,
    Diameter,
    Rank,
    Mindist,
    Stopdist,
    Witnesses,
}

#[derive(Debug, Args, Serialize)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: CodeSource,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Check::Structure, Check::Girth, Check::Rank])]
    pub checks: Vec<Check>,
    /// Largest support size tried by the distance searches.
    #[arg(long, default_value_t = 32)]
    pub budget: usize,
    /// Node limit for the distance searches.
    #[arg(long, default_value_t = 2_000_000_000)]
    pub max_nodes: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelArg {
    Awgn,
    Bec,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: CodeSource,
    /// Add a Gallager baseline of the same length: COL_WT,ROW_WT.
    #[arg(long, value_parser = parse_pair)]
    pub gallager: Option<(usize, usize)>,
    #[arg(long, default_value_t = 1)]
    pub gallager_seed: u64,
    #[arg(long, value_enum, default_value_t = ChannelArg::Awgn)]
    pub channel: ChannelArg,
    /// Sweep points: Eb/N0 in dB (AWGN) or erasure probabilities (BEC), as
    /// a list `a,b,c` or a range `start:stop:step` (stop included).
    #[arg(long, value_parser = parse_points, default_value = "0:7:1")]
    pub points: Points,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = symldpc::decode::DEFAULT_MAX_ITERS, value_parser = parse_positive)]
    pub max_iters: usize,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ExportArgs {
    #[command(flatten)]
    pub source: CodeSource,
    #[arg(long, value_enum, default_value_t = Format::Alist)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Points(pub Vec<f64>);

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_points(s: &str) -> Result<Points, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let parts: Vec<&str> = s.split(':').collect();
    let v = match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if step.is_nan() || step <= 0.0 || stop < start {
                return Err(format!("range {s:?} needs step > 0 and stop >= start"));
            }
            // Index-based so that rounding never drops the endpoint.
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            (0..count).map(|i| start + i as f64 * step).collect()
        }
        [list] => list.split(',').map(num).collect::<Result<Vec<_>, _>>()?,
        _ => return Err(format!("expected a list or start:stop:step, got {s:?}")),
    };
    if v.is_empty() || v.iter().any(|x| !x.is_finite()) {
        return Err(format!("no finite points in {s:?}"));
    }
    Ok(Points(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_ranges() {
        assert_eq!(parse_points("0:7:1").unwrap().0, (0..8).map(f64::from).collect::<Vec<_>>());
        assert_eq!(parse_points("0:1:0.25").unwrap().0.len(), 5);
        assert_eq!(parse_points("0.1,0.2").unwrap().0, vec![0.1, 0.2]);
        assert!(parse_points("3:1:1").is_err());
        assert!(parse_points("1:2").is_err());
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("3,4").unwrap(), (3, 4));
        assert!(parse_pair("3").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
