use clap::{Args, Parser, Subcommand, ValueEnum};
use ladder_core::{LWeight, Multisegment, Segment};

#[derive(Parser, Debug)]
#[command(
    name = "ladder",
    version,
    about = "Segments, ladders, MY paths and covering censuses for snake modules of type A"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Rank {
    /// Rank N of sl_{N+1}; h = N + 1.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub rank: i64,
}

#[derive(Args, Debug, Clone)]
pub struct Pair {
    /// Upper ladder, e.g. "[1..4, 2..5]".
    #[arg(long)]
    pub s: Multisegment,
    /// Lower ladder.
    #[arg(long)]
    pub sp: Multisegment,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate or count the MY paths of a segment.
    Paths {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        segment: Segment,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
        /// Print only the highest and lowest paths.
        #[arg(long, conflicts_with_all = ["peak", "valley"])]
        extremal: bool,
        /// The path whose only lower corner is this covering segment.
        #[arg(long, conflicts_with = "valley")]
        peak: Option<Segment>,
        /// The path whose only upper corner is this segment.
        #[arg(long)]
        valley: Option<Segment>,
        /// Refuse to list more paths than this.
        #[arg(long, default_value_t = 1_000_000)]
        cap_paths: u64,
    },
    /// The l-weight support of the snake module of a ladder.
    Qchar {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        ladder: Multisegment,
        #[arg(long, default_value_t = 5_000_000)]
        cap_paths: usize,
        /// Print only the dominant weights.
        #[arg(long)]
        dominant: bool,
    },
    /// Drinfeld polynomial of the socle of V(s) ⊗ V(s').
    Socle {
        #[command(flatten)]
        rank: Rank,
        #[command(flatten)]
        pair: Pair,
    },
    /// The chain pi_0, ..., pi_p of a p-covering pair.
    Pichain {
        #[command(flatten)]
        rank: Rank,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 1)]
        p: usize,
        /// Also list the dominant weights that can be highest l-weights below pi_p.
        #[arg(long)]
        census: bool,
        #[arg(long, default_value_t = 5_000_000)]
        cap_paths: usize,
    },
    /// Covering censuses.
    Census {
        #[command(subcommand)]
        kind: CensusKind,
    },
    /// Membership of an l-weight in the Weyl-module support of a list of segments.
    WeylMember {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        target: LWeight,
        /// Factor segments, e.g. "[-1..2, 2..3]" (any order).
        #[arg(long)]
        factors: Multisegment,
        /// One l-weight per factor, separated by ';'.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, default_value_t = 20_000_000)]
        node_budget: u64,
    },
    /// Almost-dual, Kirillov-Reshetikhin and min/max flags of a pair.
    Flags {
        #[command(flatten)]
        rank: Rank,
        #[command(flatten)]
        pair: Pair,
    },
    /// Restrict to a subdiagram [a, b].
    Restrict {
        #[command(flatten)]
        rank: Rank,
        /// Window a:b; derived from --s/--sp when omitted.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i64, i64)>,
        #[arg(long)]
        segment: Option<Segment>,
        #[arg(long)]
        ladder: Option<Multisegment>,
        #[arg(long)]
        weight: Option<LWeight>,
        #[arg(long, requires = "sp")]
        s: Option<Multisegment>,
        #[arg(long, requires = "s")]
        sp: Option<Multisegment>,
    },
    /// Build new 1-covering examples from a given one.
    Construct {
        #[command(flatten)]
        rank: Rank,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Re-check the path lemmas, census formulas or pinned examples.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
        rank: i64,
        /// Largest number of cases examined by one check.
        #[arg(long, default_value_t = 50_000_000)]
        cap_paths: u64,
        #[arg(long, default_value_t = 20_000_000)]
        node_budget: u64,
        /// Width of the spar window of base segments (default 4h).
        #[arg(long)]
        spar_width: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CensusKind {
    /// C(s) and C1(s).
    C {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, required_unless_present = "seed_canonical")]
        s1: Option<Segment>,
        /// Sweep every [0, j].
        #[arg(long)]
        seed_canonical: bool,
    },
    /// 1-covering completions of (s1, s1'), or of s1 with every s1' it covers.
    C1 {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, required_unless_present = "seed_canonical")]
        s1: Option<Segment>,
        #[arg(long, requires = "s1")]
        s1p: Option<Segment>,
        #[arg(long)]
        seed_canonical: bool,
    },
    /// Completions with s' = s*.
    D2 {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, required_unless_present = "seed_canonical")]
        s1: Option<Segment>,
        #[arg(long)]
        seed_canonical: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Extend,
    SocleRealize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemmas,
    Formulas,
    #[value(name = "paper-examples")]
    Examples,
}

fn parse_window(text: &str) -> Result<(i64, i64), String> {
    let (a, b) = text.split_once(':').ok_or_else(|| format!("expected a:b, got {text:?}"))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("bad window bound {x:?}: {e}"));
    Ok((num(a)?, num(b)?))
}
