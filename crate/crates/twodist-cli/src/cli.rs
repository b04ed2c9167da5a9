//! Argument surface of the `twodist` binary. Flags mirror `TWODIST_*`
//! environment variables; explicit flags win.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "K", alias = "k")]
    K,
}

impl Target {
    pub fn lower(self) -> &'static str {
        match self {
            Target::G => "g",
            Target::H => "h",
            Target::K => "k",
        }
    }

    pub fn upper(self) -> &'static str {
        match self {
            Target::G => "G",
            Target::H => "H",
            Target::K => "K",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    /// Integer lattice vertex file.
    Lattice,
    /// Reduced-fraction vertex file.
    General,
    /// Edge list with distance class.
    Edges,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Shard {
    pub id: u32,
    pub count: u32,
}

pub fn parse_shard(s: &str) -> Result<Shard, String> {
    let (id, count) = s
        .split_once('/')
        .ok_or_else(|| String::from("expected i/N, e.g. 0/4"))?;
    let id: u32 = id.trim().parse().map_err(|_| String::from("bad shard index"))?;
    let count: u32 = count.trim().parse().map_err(|_| String::from("bad shard count"))?;
    if count == 0 || id >= count {
        return Err(format!("shard {id}/{count} out of range"));
    }
    Ok(Shard { id, count })
}

#[cfg(debug_assertions)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    DropVertex,
    PerturbCoord,
    DropEdge,
}

#[derive(Parser, Debug)]
#[command(
    name = "twodist",
    version,
    about = "Exact construction and exhaustive 5-coloring search for two-forbidden-distance plane graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Construct a graph and write its vertex and edge files.
    Build {
        target: Target,
        /// Output directory.
        #[arg(long, env = "TWODIST_OUT")]
        out: PathBuf,
        /// Files to write; defaults to every applicable format.
        #[arg(long, value_enum)]
        format: Vec<FileFormat>,
    },
    /// Enumerate canonical proper k-colorings.
    Color {
        target: Target,
        #[arg(long, default_value_t = 5, env = "TWODIST_K")]
        k: u8,
        /// Search-tree depth where work splits round-robin.
        #[arg(long, default_value_t = 17, env = "TWODIST_KEYDEPTH")]
        keydepth: u32,
        /// This process's slice, as i/N.
        #[arg(long, default_value = "0/1", env = "TWODIST_SHARD", value_parser = parse_shard)]
        shard: Shard,
        /// Worker threads; defaults to the available cores.
        #[arg(long, env = "TWODIST_THREADS")]
        threads: Option<u32>,
        /// Own subtrees between checkpoint writes.
        #[arg(long, default_value_t = 1024, env = "TWODIST_CHECKPOINT_INTERVAL")]
        checkpoint_interval: u64,
        #[arg(long, env = "TWODIST_CHECKPOINT")]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint file instead of starting over.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Output directory.
        #[arg(long, env = "TWODIST_OUT")]
        out: PathBuf,
    },
    /// Re-derive every claimed quantity and report PASS or FAIL.
    Verify {
        #[arg(long, env = "TWODIST_THREADS")]
        threads: Option<u32>,
        /// Directory for the manifest file; stdout always gets a copy.
        #[arg(long, env = "TWODIST_OUT")]
        out: Option<PathBuf>,
        /// Deliberately break the construction (debug builds only).
        #[cfg(debug_assertions)]
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Write the k-colorability instance in DIMACS CNF format.
    ExportCnf {
        target: Target,
        #[arg(long, default_value_t = 5, env = "TWODIST_K")]
        k: u8,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
        /// Add pairwise at-most-one clauses per vertex.
        #[arg(long)]
        at_most_one: bool,
    },
    /// Validate a solver model against a graph.
    CheckModel {
        target: Target,
        #[arg(long, default_value_t = 5, env = "TWODIST_K")]
        k: u8,
        /// Model file: signed literals, `v`-line convention accepted.
        #[arg(long)]
        model: PathBuf,
        /// Optional colorings file; the decoded model must canonicalize
        /// into it.
        #[arg(long)]
        colorings: Option<PathBuf>,
    },
}
