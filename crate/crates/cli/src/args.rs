use std::ops::RangeInclusive;
use std::str::FromStr;

use avoidkit::{Method, PatternSet, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "avoidkit",
    version,
    about = "Exact counts of permutations avoiding patterns"
)]
pub struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Formula,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Formula => Method::Formula,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count |S_n(T, τ)| by enumeration, closed form, or both.
    Count(CountArgs),
    /// List the members of S_n(T, τ).
    Enumerate(EnumerateArgs),
    /// Print the generating function of S_n(T, τ).
    Gf(GfArgs),
    /// Show the canonical case and closed form for (T, τ).
    Classify(ClassifyArgs),
    /// Check every closed form against enumeration.
    Verify(VerifyArgs),
    /// Wilf classes for T ⊆ S3, τ ∈ S4, compared with the reference table.
    WilfTable(WilfTableArgs),
}

#[derive(Debug, Args)]
pub struct Target {
    /// Comma-separated patterns, e.g. 123,132.
    #[arg(long, value_parser = parse_set)]
    pub avoid: PatternSet,

    /// The additional pattern; digits, or space/comma separated beyond length 9.
    #[arg(long, value_parser = parse_perm)]
    pub tau: Option<Permutation>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub target: Target,

    /// A length `N` or an inclusive range `a..b`.
    #[arg(long)]
    pub n: Lengths,

    #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
    pub method: MethodArg,

    /// Exit with status 2 when the two methods disagree (needs --method both).
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub target: Target,

    #[arg(long)]
    pub n: Lengths,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[command(flatten)]
    pub target: Target,

    /// Also print coefficients 0..=N.
    #[arg(long, value_name = "N")]
    pub expand: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub target: Target,

    /// Check the closed form against enumeration up to this length.
    #[arg(long, value_name = "N")]
    pub verify_to: Option<usize>,

    /// Exit with status 2 when the check finds a discrepancy.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest τ length to sweep.
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,

    /// Largest n to check.
    #[arg(long, default_value_t = 11)]
    pub n_max: usize,

    /// Exit with status 2 when any discrepancy is found.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct WilfTableArgs {
    /// Inclusive window of lengths, `a:b`.
    #[arg(long, default_value = "7:11")]
    pub window: Window,
}

/// Lengths requested with `--n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lengths(pub RangeInclusive<usize>);

impl FromStr for Lengths {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a length; use N or a..b"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {a}..{b}"));
                }
                Ok(Lengths(a..=b))
            }
            None => num(s).map(|n| Lengths(n..=n)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window(pub usize, pub usize);

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("`{s}` is not a window; use a:b"))?;
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a length"))
        };
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty window {a}:{b}"));
        }
        Ok(Window(a, b))
    }
}

fn parse_set(s: &str) -> Result<PatternSet, String> {
    s.parse().map_err(|e: avoidkit::Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: avoidkit::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!("8".parse::<Lengths>().unwrap(), Lengths(8..=8));
        assert_eq!("0..11".parse::<Lengths>().unwrap(), Lengths(0..=11));
        assert!("5..2".parse::<Lengths>().is_err());
        assert!("x".parse::<Lengths>().is_err());
    }

    #[test]
    fn windows() {
        assert_eq!("7:11".parse::<Window>().unwrap(), Window(7, 11));
        assert!("7-11".parse::<Window>().is_err());
        assert!("9:3".parse::<Window>().is_err());
    }
}
