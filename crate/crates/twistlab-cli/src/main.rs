//! Thin binary over [`twistlab::workbench`]: parse arguments, read files,
//! print the outcome, map results to exit codes (0 laws hold, 1 a law or
//! isomorphism fails, 2 malformed input).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twistlab::workbench::{exit_code_for, run, Format, Request};

#[derive(Parser)]
#[command(
    name = "twistlab",
    version,
    about = "Workbench for twist constructions over modal Heyting algebras",
    after_help = "A file argument of \"-\" reads the document from standard input."
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a document and report its kind and size.
    Validate { file: PathBuf },
    /// Check laws: a comma-separated list of law names, or "all".
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        law: String,
    },
    /// Twist construction over a (modal) Heyting document; the full twist
    /// unless a filter narrows the admissible pairs.
    Twist {
        file: PathBuf,
        /// "dense", "full", an element name (its up-set), or a comma list.
        #[arg(long)]
        filter: Option<String>,
    },
    /// The idempotent skeleton of a residuated document, as a Heyting
    /// document (modal when the input is).
    Hstar { file: PathBuf },
    /// The skeleton together with its canonical Boolean filter.
    Fstar { file: PathBuf },
    /// Quotient of a Heyting document by a filter.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        filter: Option<String>,
    },
    /// The prime filters of a Heyting document, smallest first.
    Primefilters { file: PathBuf },
    /// The dual space of a modal Heyting document.
    Dual { file: PathBuf },
    /// The dual space with the closed set of a filter.
    Mne {
        file: PathBuf,
        #[arg(long)]
        filter: Option<String>,
    },
    /// The up-set algebra of a space document.
    AlgebraOfSpace { file: PathBuf },
    /// Search for an isomorphism between two documents of the same kind.
    Iso { a: PathBuf, b: PathBuf },
    /// Build the double dual and verify the canonical isomorphism.
    Roundtrip { file: PathBuf },
    /// Stream the (box, diamond) table pairs over a base that satisfy the
    /// given laws, in lexicographic order.
    Enumerate {
        #[arg(long)]
        base: PathBuf,
        /// Comma-separated law names, e.g. "mH" or "mH,stone".
        #[arg(long)]
        laws: String,
        /// Stop after this many pairs.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// List the built-in catalog: the distributive-lattice census and the
    /// named residuated fixtures.
    Catalog {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

fn read(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"));
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn build(cmd: Cmd) -> Result<Request, String> {
    Ok(match cmd {
        Cmd::Validate { file } => Request::Validate { doc: read(&file)? },
        Cmd::Check { file, law } => Request::Check { doc: read(&file)?, laws: law },
        Cmd::Twist { file, filter } => Request::Twist { doc: read(&file)?, filter },
        Cmd::Hstar { file } => Request::HStar { doc: read(&file)? },
        Cmd::Fstar { file } => Request::FStar { doc: read(&file)? },
        Cmd::Quotient { file, filter } => Request::Quotient { doc: read(&file)?, filter },
        Cmd::Primefilters { file } => Request::PrimeFilters { doc: read(&file)? },
        Cmd::Dual { file } => Request::Dual { doc: read(&file)? },
        Cmd::Mne { file, filter } => Request::Mne { doc: read(&file)?, filter },
        Cmd::AlgebraOfSpace { file } => Request::AlgebraOfSpace { doc: read(&file)? },
        Cmd::Iso { a, b } => Request::Iso { a: read(&a)?, b: read(&b)? },
        Cmd::Roundtrip { file } => Request::RoundTrip { doc: read(&file)? },
        Cmd::Enumerate { base, laws, limit } => {
            Request::Enumerate { base: read(&base)?, laws, limit }
        }
        Cmd::Catalog { max_size } => Request::Catalog { max_size },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let request = match build(cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&request, format) {
        Ok(outcome) => {
            // A reader that hangs up early (`| head`) is not our error;
            // anything else wrong with stdout is.
            let mut stdout = std::io::stdout();
            let written = stdout.write_all(outcome.out.as_bytes()).and_then(|()| stdout.flush());
            if let Err(e) = written {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: stdout: {e}");
                    return ExitCode::from(2);
                }
            }
            if outcome.law_failure {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
