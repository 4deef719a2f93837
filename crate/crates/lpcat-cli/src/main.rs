use clap::{Parser, Subcommand, ValueEnum};
use lpcat_cli::compare::cmd_compare;
use lpcat_cli::corpus::cmd_corpus;
use lpcat_cli::treeview::{cmd_tree, TreeFormat};
use lpcat_cli::{cmd_check, cmd_table, CheckOptions};
use std::path::PathBuf;

/// Validity in the paraconsistent calculi P1 and LPcAt, decided by semantic
/// forcing trees and cross-checked against the trivalent truth tables.
///
/// Formula syntax: atoms are identifiers; `-` weak negation, `~` strong
/// negation, `#` incompatibility (atoms only), `&`, `|`, `->`, `<->`.
/// Unicode `¬ ∧ ∨ → ↔ ⊥` is accepted everywhere.
#[derive(Parser)]
#[command(name = "lpcat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormatArg {
    Ascii,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a formula is A-valid; print the refuting model when not
    Check {
        #[arg(allow_hyphen_values = true)]
        formula: String,
        /// Print the justification trace
        #[arg(long)]
        trace: bool,
        /// Cross-check the verdict against the truth-table oracle
        #[arg(long)]
        oracle: bool,
        /// Exit 3 when the formula is invalid
        #[arg(long)]
        fail_on_invalid: bool,
        /// Render formulas with ¬ ∧ ∨ → ↔ ⊥
        #[arg(long)]
        unicode: bool,
        /// Lift the oracle's 12-atom cap
        #[arg(long)]
        max_atoms_override: bool,
        #[arg(long, value_enum, default_value_t = CheckFormat::Text)]
        format: CheckFormat,
    },
    /// Print the trivalent truth table (designated rows flagged with +)
    Table {
        #[arg(allow_hyphen_values = true)]
        formula: String,
        #[arg(long)]
        unicode: bool,
        /// Lift the 6-atom cap
        #[arg(long)]
        max_atoms_override: bool,
    },
    /// Render the forcing tree; a model decorates nodes with their marks
    Tree {
        #[arg(allow_hyphen_values = true)]
        formula: String,
        #[arg(long, value_enum, default_value_t = TreeFormatArg::Ascii)]
        format: TreeFormatArg,
        /// Total assignment like A=*,B=0
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        unicode: bool,
    },
    /// Run every entry of a corpus file against its @valid/@invalid/@model
    /// annotations
    Corpus { path: PathBuf },
    /// Cross-validate the forcing engine against the truth-table oracle
    Compare {
        /// Nesting depth of the formula space
        #[arg(long, default_value_t = 2)]
        max_depth: u32,
        /// Number of distinct atoms (p, q, r, ...)
        #[arg(long, default_value_t = 2)]
        atom_count: usize,
        /// Sample N random formulas instead of exhausting the space
        #[arg(long, value_name = "N")]
        random: Option<u64>,
        /// Seed for --random
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            formula,
            trace,
            oracle,
            fail_on_invalid,
            unicode,
            max_atoms_override,
            format,
        } => cmd_check(
            &formula,
            &CheckOptions {
                trace,
                oracle,
                fail_on_invalid,
                unicode,
                max_atoms_override,
                json: matches!(format, CheckFormat::Json),
            },
        ),
        Command::Table {
            formula,
            unicode,
            max_atoms_override,
        } => cmd_table(&formula, unicode, max_atoms_override),
        Command::Tree {
            formula,
            format,
            model,
            unicode,
        } => {
            let format = match format {
                TreeFormatArg::Ascii => TreeFormat::Ascii,
                TreeFormatArg::Dot => TreeFormat::Dot,
                TreeFormatArg::Json => TreeFormat::Json,
            };
            cmd_tree(&formula, format, model.as_deref(), unicode)
        }
        Command::Corpus { path } => cmd_corpus(&path),
        Command::Compare {
            max_depth,
            atom_count,
            random,
            seed,
        } => cmd_compare(max_depth, atom_count, random, seed),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code);
        }
    }
}
