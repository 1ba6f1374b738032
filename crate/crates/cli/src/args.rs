use std::path::PathBuf;

use abacus_core::Partition;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Upper bound on `--s` and `--t`; keeps gap tables and padded bead-sets small.
pub const MAX_PARAMETER: usize = 1024;

#[derive(Debug, Parser)]
#[command(
    name = "abacus",
    version,
    about = "Cores, quotients and simultaneous cores of integer partitions on the s-abacus",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// s-core of a partition
    Core(PartitionArgs),
    /// s-quotient of a partition
    Quotient(PartitionArgs),
    /// Largest simultaneous (s,t)-core and its size
    Kappa(PairArgs),
    /// Every simultaneous (s,t)-core
    Enumerate(PairArgs),
    /// The abacus of the largest (s-1,s+1)-core, for even s
    Alpha(AlphaArgs),
    /// Draw an abacus: the alpha abacus, a partition's s-abacus, or a saved JSON grid
    Render(RenderArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Piquo,
    Amlev,
    Triple,
    Strongs,
    Half,
    Anderson,
    Sizes,
    All,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    /// Comma-separated parts, largest first, or `empty`
    #[arg(long, value_parser = parse_partition)]
    pub partition: Partition,
    #[arg(long, value_parser = parse_parameter)]
    pub s: usize,
    /// json (default) or ascii
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, value_parser = parse_parameter)]
    pub s: usize,
    #[arg(long, value_parser = parse_parameter)]
    pub t: usize,
    /// json (default) or ascii
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct AlphaArgs {
    #[arg(long, value_parser = parse_parameter)]
    pub s: usize,
    /// ascii (default), svg or json
    #[arg(long, value_enum, alias = "render")]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Number of runners; without --partition the alpha abacus is drawn
    #[arg(long, value_parser = parse_parameter, required_unless_present = "input")]
    pub s: Option<usize>,
    #[arg(long, value_parser = parse_partition, requires = "s")]
    pub partition: Option<Partition>,
    /// A grid previously written with `--format json` (`-` reads standard input)
    #[arg(long, conflicts_with_all = ["s", "partition"])]
    pub input: Option<PathBuf>,
    /// ascii (default), svg or json
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub theorem: Theorem,
    /// Largest s (and t) swept by the suites
    #[arg(long = "s-max", default_value_t = 12, value_parser = clap::value_parser!(u16).range(4..=20))]
    pub s_max: u16,
    /// Single odd r for the rectangle suite
    #[arg(long)]
    pub r: Option<usize>,
    /// ascii (default) or json
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report elapsed time per suite
    #[arg(long)]
    pub timing: bool,
}

/// `empty`, or comma-separated positive integers in non-increasing order.
pub fn parse_partition(literal: &str) -> Result<Partition, String> {
    let literal = literal.trim();
    if literal == "empty" {
        return Ok(Partition::empty());
    }
    let parts = literal
        .split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                format!("malformed partition literal '{literal}': '{}' is not a positive integer", part.trim())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| format!("malformed partition literal '{literal}': {e}"))
}

fn parse_parameter(value: &str) -> Result<usize, String> {
    let n: usize = value.parse().map_err(|_| format!("'{value}' is not a positive integer"))?;
    if n == 0 || n > MAX_PARAMETER {
        return Err(format!("{n} is outside 1..={MAX_PARAMETER}"));
    }
    Ok(n)
}
