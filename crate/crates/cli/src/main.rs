//! `hopfcat`: Drinfeld doubles of finite groups, their fusion subcategories
//! and centralizers, from the command line.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcat::hopf::DEFAULT_MAX_ALGEBRA_DIM;

use crate::cache::Cache;
use crate::commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "hopfcat", version, about = "Exact computations in Rep(D(kG)) for finite groups G")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Group: a catalog name (S3, D4, Q8, Z6, Z2xZ2, ...), `perm:(1 2 3)(4 5)` or `cayley:<path>`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest algebra dimension any command may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ALGEBRA_DIM as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_algebra_dim: u64,
    /// Cache directory; defaults to `$XDG_CACHE_HOME/hopfcat` or `~/.cache/hopfcat`.
    #[arg(long, global = true, env = "HOPFCAT_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Compute everything afresh and write nothing to the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Facts about the group itself.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// The character table of the group.
    Chartab,
    /// The Drinfeld double and its modules.
    Double {
        #[command(subcommand)]
        cmd: DoubleCmd,
    },
    /// Coideal subalgebras of the double.
    Coideals {
        #[command(subcommand)]
        cmd: CoidealCmd,
    },
    /// Fusion subcategories of Rep of the double.
    Subcats {
        #[command(subcommand)]
        cmd: SubcatCmd,
    },
    /// The centralizer of one fusion subcategory, by each method.
    Centralizer(CentralizerArgs),
    /// Runs a verification suite; `--group catalog` covers the whole catalog.
    Verify(VerifyArgs),
    /// Cache maintenance.
    Cache {
        #[command(subcommand)]
        cmd: CacheCmd,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Order, classes and normal subgroups.
    Info,
}

#[derive(Subcommand, Debug)]
enum DoubleCmd {
    /// Simple modules with their dimensions.
    Irreps,
    /// The exact S-matrix.
    Smatrix,
    /// Fusion rules of the simple modules.
    Fusion,
}

#[derive(Subcommand, Debug)]
enum CoidealCmd {
    /// Every coideal subalgebra with its quotient subcategory.
    List,
    /// The normalized integral of one coideal subalgebra.
    Integral {
        /// `M=<gens>,H=<gens>,B=<index|triv>`, generators as element indices.
        #[arg(long)]
        triple: String,
    },
}

#[derive(Subcommand, Debug)]
enum SubcatCmd {
    /// Every fusion subcategory with its centralizer.
    List,
    /// The Hasse diagram with the centralizer involution.
    Lattice,
}

#[derive(Args, Debug)]
pub struct CentralizerArgs {
    /// The subcategory `S(M,H,B)`.
    #[arg(long, conflicts_with = "simples", required_unless_present = "simples")]
    pub triple: Option<String>,
    /// The subcategory by simple indices, comma separated; must be closed under fusion.
    #[arg(long)]
    pub simples: Option<String>,
    #[arg(long, default_value = "all", value_parser = ["all", "smatrix", "phi", "classes"])]
    pub method: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "full", value_parser = ["smoke", "full"])]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
enum CacheCmd {
    /// Deletes every cache entry.
    Purge,
}

fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return PathBuf::from(x).join("hopfcat");
    }
    if let Some(h) = std::env::var_os("HOME").filter(|h| !h.is_empty()) {
        return PathBuf::from(h).join(".cache").join("hopfcat");
    }
    PathBuf::from(".hopfcat-cache")
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    let cache = if g.no_cache {
        Cache::disabled()
    } else {
        Cache::new(Some(g.cache_dir.clone().unwrap_or_else(default_cache_dir)))
    };
    let ctx = commands::Context::new(g, cache);
    match cli.command {
        Command::Group { cmd: GroupCmd::Info } => ctx.group_info(),
        Command::Chartab => ctx.chartab(),
        Command::Double { cmd } => match cmd {
            DoubleCmd::Irreps => ctx.double_irreps(),
            DoubleCmd::Smatrix => ctx.double_smatrix(),
            DoubleCmd::Fusion => ctx.double_fusion(),
        },
        Command::Coideals { cmd } => match cmd {
            CoidealCmd::List => ctx.coideals_list(),
            CoidealCmd::Integral { triple } => ctx.coideal_integral(&triple),
        },
        Command::Subcats { cmd } => match cmd {
            SubcatCmd::List => ctx.subcats_list(),
            SubcatCmd::Lattice => ctx.subcats_lattice(),
        },
        Command::Centralizer(args) => ctx.centralizer(&args),
        Command::Verify(args) => ctx.verify(&args),
        Command::Cache { cmd: CacheCmd::Purge } => ctx.cache_purge(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
