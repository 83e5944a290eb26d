use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "mckay",
    version,
    about = "Exact McKay quivers of finite matrix groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the McKay quiver of a group.
    Quiver {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: QuiverOutput,
    },
    /// Print the character table.
    Chartab {
        #[command(flatten)]
        input: Input,
    },
    /// Adjoin the scalar matrix ζ_K·I to a special linear group, then build its quiver.
    Extend {
        #[command(flatten)]
        input: Input,
        /// Order K of the adjoined scalar.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        scalar: u32,
        /// Write the extended group as a group file ("-" for stdout).
        #[arg(long, value_name = "PATH")]
        emit_group: Option<String>,
        #[command(flatten)]
        output: QuiverOutput,
    },
    /// Build and verify the covering of quivers induced by a normal subgroup.
    Cover {
        #[command(flatten)]
        input: Input,
        /// sl-kernel, trivial, center, whole, cyclic<k>, a preset, or a group file.
        #[arg(long, default_value = "sl-kernel")]
        subgroup: String,
        /// Write {pi, deck, order, verified} as JSON ("-" for stdout).
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Drop the last coordinate of a diagonal special linear group, then build its quiver.
    Strip {
        #[command(flatten)]
        input: Input,
        /// Write the stripped group as a group file ("-" for stdout).
        #[arg(long, value_name = "PATH")]
        emit_group: Option<String>,
        #[command(flatten)]
        output: QuiverOutput,
    },
    /// Run the acceptance suite.
    Check {
        /// Directory for the log and quiver artifacts.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        /// Run a single criterion.
        #[arg(long, value_name = "ID")]
        criterion: Option<u32>,
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
    },
    /// List the preset groups.
    Presets,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Preset name, with an optional parameter as NAME:N.
    #[arg(
        long,
        visible_alias = "group",
        value_name = "NAME",
        conflicts_with = "file"
    )]
    pub preset: Option<String>,
    /// Parameter of a preset family.
    #[arg(long, value_name = "N")]
    pub n: Option<u32>,
    /// Dimension parameter (for the trivial preset).
    #[arg(long, value_name = "M")]
    pub dim: Option<u32>,
    /// Group file (TOML).
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Largest group order to enumerate; overrides MCKAY_MAX_ORDER.
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QuiverOutput {
    /// Apply the det⁻¹ embedding into one dimension higher first.
    #[arg(long)]
    pub embed: bool,
    /// Write Graphviz output ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<String>,
    /// Write JSON output ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    pub json: Option<String>,
}
