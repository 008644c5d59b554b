use std::net::IpAddr;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Classify workstation I/O devices against a disability profile and check
/// workstation plans.
#[derive(Debug, Parser)]
#[command(name = "devmatch", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CatalogArg {
    /// Catalog document; `-` reads standard input. Defaults to the built-in catalog.
    #[arg(long, env = "DEVMATCH_CATALOG")]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every catalog device for a profile.
    Match {
        /// Profile document; `-` reads standard input.
        #[arg(long)]
        profile: PathBuf,
        /// Optional workstation plan; its findings are appended to the report.
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Check a workstation plan. Exits 1 when any finding is an error.
    Validate {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Inspect or export the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Allow cross-origin requests from any origin.
        #[arg(long)]
        cors: bool,
        #[command(flatten)]
        catalog: CatalogArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// One line per device.
    List,
    /// Every requirement cell of one device.
    Show { id: String },
    /// Print the catalog document.
    Export,
}
