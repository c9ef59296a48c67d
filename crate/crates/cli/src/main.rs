//! `tracefa`: compile, run, minimize, compare and export event automata, and
//! classify classroom session traces.
//!
//! Exit status: 0 for success, acceptance or equivalence; 1 for rejection or
//! inequivalence; 2 for usage and input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "tracefa", version, about = "Finite automata over named event alphabets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Automaton arguments name a file in the `automaton v1` format, or a
/// built-in model as `model:simple` / `model:emotional`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Compile a regular expression to an automaton document.
    Compile(CompileArgs),
    /// Run a trace through an automaton.
    Accept(AcceptArgs),
    /// Write the canonical minimal automaton.
    Minimize {
        automaton: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide language equivalence; prints a shortest counterexample.
    Equiv { left: String, right: String },
    /// Export an automaton as a Graphviz digraph.
    Dot {
        automaton: String,
        /// Graph name; defaults to the model name or file stem.
        #[arg(long)]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classroom workflows over the built-in models.
    #[command(subcommand)]
    Classroom(ClassroomCommand),
}

#[derive(Debug, Args)]
struct CompileArgs {
    /// Expression text.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    regex: Option<String>,
    /// Read the expression from a file instead.
    #[arg(short, long)]
    file: Option<PathBuf>,
    /// Comma-separated alphabet; defaults to the expression's symbols.
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    minimize: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AcceptArgs {
    automaton: String,
    trace: PathBuf,
    /// Print each configuration as `[state, remaining-count]`.
    #[arg(long)]
    show_run: bool,
    /// Treat events outside the alphabet as a rejection (exit 1) instead of
    /// an input error (exit 2).
    #[arg(long)]
    reject_unknown: bool,
}

#[derive(Debug, Subcommand)]
enum ClassroomCommand {
    /// One line per trace: path, verdict, failure offset, query count.
    Classify {
        #[arg(long)]
        model: String,
        #[arg(required = true)]
        traces: Vec<PathBuf>,
    },
    /// One line per student over a directory of `<id>__<nn>.trace` files.
    Profile {
        #[arg(long)]
        sessions: PathBuf,
        #[arg(long, default_value = "simple")]
        model: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compile(args) => commands::compile(
            args.regex.as_deref(),
            args.file.as_deref(),
            args.alphabet.as_deref(),
            args.minimize,
            args.output.as_deref(),
        ),
        Command::Accept(args) => commands::accept(
            &args.automaton,
            &args.trace,
            args.show_run,
            args.reject_unknown,
        ),
        Command::Minimize { automaton, output } => commands::minimize(&automaton, output.as_deref()),
        Command::Equiv { left, right } => commands::equiv(&left, &right),
        Command::Dot {
            automaton,
            name,
            output,
        } => commands::dot(&automaton, name.as_deref(), output.as_deref()),
        Command::Classroom(ClassroomCommand::Classify { model, traces }) => {
            commands::classify(&model, &traces)
        }
        Command::Classroom(ClassroomCommand::Profile { sessions, model }) => {
            commands::profile(&sessions, &model)
        }
    };
    match result {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
